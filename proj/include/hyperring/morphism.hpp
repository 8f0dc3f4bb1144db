#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hyperring/multiring.hpp"

namespace hyperring {

/// Map between carriers. Not validated on construction, see validate_morphism.
class Morphism {
public:
    Morphism(MultiringPtr dom, MultiringPtr cod, std::vector<Element> map);

    auto dom() const -> const Multiring& { return *dom_; }
    auto cod() const -> const Multiring& { return *cod_; }
    auto dom_ptr() const -> const MultiringPtr& { return dom_; }
    auto cod_ptr() const -> const MultiringPtr& { return cod_; }
    auto map() const -> const std::vector<Element>& { return map_; }
    auto operator()(Element a) const -> Element { return map_[a]; }
    auto image(const Subset& s) const -> Subset;
    auto preimage(const Subset& t) const -> Subset;

    /// Same carriers (by identity) and same map.
    auto operator==(const Morphism& o) const -> bool {
        return dom_ == o.dom_ && cod_ == o.cod_ && map_ == o.map_;
    }

private:
    MultiringPtr dom_;
    MultiringPtr cod_;
    std::vector<Element> map_;
};

struct MorphismCheck {
    bool ok = true;
    std::string clause;
    std::vector<Element> witness;
};

auto validate_morphism(const Morphism& f) -> MorphismCheck;
auto is_morphism(const Morphism& f) -> bool;

auto identity(const Multiring& A) -> Morphism;
/// g after f.
auto compose(const Morphism& g, const Morphism& f) -> Morphism;
auto is_bijective(const Morphism& f) -> bool;
/// f(a) in f(b) + f(c) implies a in b + c.
auto reflects_sums(const Morphism& f) -> bool;
/// Bijective morphism whose inverse is a morphism.
auto is_isomorphism(const Morphism& f) -> bool;
/// Inverse map of a bijection; throws PreconditionFailed otherwise.
auto inverse(const Morphism& f) -> Morphism;

/// All morphisms A -> B, sorted lexicographically by map. Requires
/// |A| * |B| <= budget.search_size^2.
auto enumerate_morphisms(const Multiring& A, const Multiring& B, const Budget& budget = Budget::defaults())
    -> std::vector<Morphism>;
auto find_isomorphism(const Multiring& A, const Multiring& B, const Budget& budget = Budget::defaults())
    -> std::optional<Morphism>;

/// Direct product with coordinatewise operations. Element index is mixed
/// radix with the first factor most significant.
struct ProductPresentation {
    MultiringPtr result;
    std::vector<MultiringPtr> factors;

    auto encode(const std::vector<Element>& coords) const -> Element;
    auto decode(Element e) const -> std::vector<Element>;
    auto projection(std::size_t i) const -> Morphism;
};

auto product_presentation(const std::vector<MultiringPtr>& factors, std::string name = {}) -> ProductPresentation;
auto product(const std::vector<MultiringPtr>& factors) -> MultiringPtr;

}  // namespace hyperring
