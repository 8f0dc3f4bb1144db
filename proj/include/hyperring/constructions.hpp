#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hyperring/morphism.hpp"
#include "hyperring/spectra.hpp"

namespace hyperring {

class MultiplicativeSet {
public:
    /// Throws NotMultiplicative unless 1 is in `elems` and elems is closed under products.
    static auto of(const Multiring& A, Subset elems) -> MultiplicativeSet;
    /// Least multiplicative set containing `x`.
    static auto generated(const Multiring& A, const Subset& x) -> MultiplicativeSet;

    auto owner() const -> const Multiring& { return *owner_; }
    auto owner_ptr() const -> const MultiringPtr& { return owner_; }
    auto elements() const -> const Subset& { return elems_; }
    auto contains(Element a) const -> bool { return elems_.contains(a); }

private:
    MultiplicativeSet(MultiringPtr owner, Subset elems) : owner_(std::move(owner)), elems_(std::move(elems)) {}
    MultiringPtr owner_;
    Subset elems_;
};

/// A quotient of `source`: ideal quotient or Marshall quotient.
struct QuotientPresentation {
    MultiringPtr source;
    std::vector<std::vector<Element>> classes;  // sorted members; classes ordered by least member
    std::vector<Element> class_of;
    MultiringPtr result;
    Morphism proj;

    auto representative(Element cls) const -> Element { return classes[cls].front(); }
};

struct LocalizationPresentation {
    MultiringPtr source;
    MultiplicativeSet denom;
    std::vector<Element> denominators;  // members of denom, 1 first, then increasing
    std::vector<Element> pair_class;    // pair (a, denominators[k]) at index k*n + a
    std::vector<std::pair<Element, Element>> representatives;  // per class: (a, s)
    MultiringPtr result;
    Morphism rho;

    /// The class of a/s. Throws PreconditionFailed if s is not in denom.
    auto fraction(Element a, Element s) const -> Element;
};

auto quotient_by_ideal(const Ideal& I) -> QuotientPresentation;
auto localize(const MultiplicativeSet& S) -> LocalizationPresentation;
auto marshall_quotient(const MultiplicativeSet& S) -> QuotientPresentation;

/// Class partition of A/_m S without building the quotient tables.
auto marshall_classes(const MultiplicativeSet& S) -> std::vector<Element>;
/// {x : xs in S for some s in S}; same Marshall partition as S.
auto cancellative_closure(const MultiplicativeSet& S) -> MultiplicativeSet;

/// A_p = (A \ p)^{-1} A. Checks that pA_p is the unique maximal ideal.
auto local_at(const PrimeIdeal& p) -> LocalizationPresentation;
/// The maximal ideal pA_p = {x/s : x in p} of A_p.
auto maximal_of_local(const LocalizationPresentation& Ap, const PrimeIdeal& p) -> Subset;

/// K_A(p) = ff(A/p), with the canonical map A -> K_A(p).
struct ResidueField {
    Subset prime;
    QuotientPresentation domain;     // A -> A/p
    LocalizationPresentation field;  // A/p -> ff(A/p)
    MultiringPtr result;
    Morphism canonical;

    /// The element (a + p)/(s + p); requires s outside p.
    auto fraction(Element a, Element s) const -> Element;
    /// Some (a, s) in A x (A \ p) with fraction(a, s) == k.
    auto representative(Element k) const -> std::pair<Element, Element>;
};

/// Builds ff(A/p), and checks it against A_p/pA_p by an explicit isomorphism.
auto residue_hyperfield(const PrimeIdeal& p) -> ResidueField;

/// The map A_p/pA_p -> K_A(p) sending the class of a/s to (a+p)/(s+p).
struct ResidueComparison {
    LocalizationPresentation local;
    QuotientPresentation local_mod_max;
    Morphism to_residue;
};
auto compare_residue_routes(const ResidueField& K) -> ResidueComparison;

// Builders.
auto krasner() -> MultiringPtr;
auto sign3() -> MultiringPtr;
auto zmod(std::size_t n) -> MultiringPtr;
/// Z/q modulo its nonzero squares; q an odd prime.
auto field_mod_squares(std::size_t q) -> MultiringPtr;
/// Commutative ring from its + and * operations on {0..n-1}.
auto from_ring_tables(std::string name, std::vector<std::string> names,
                      const std::function<Element(Element, Element)>& add,
                      const std::function<Element(Element, Element)>& mul, Element zero, Element one)
    -> MultiringPtr;

/// f_{I,J}: A/I -> B/J for I contained in f^{-1}(J).
auto induced_map_quotient(const Morphism& f, const QuotientPresentation& AI, const Ideal& I,
                          const QuotientPresentation& BJ, const Ideal& J) -> Morphism;
/// a/s |-> f(a)/f(s) for S contained in f^{-1}(T).
auto induced_map_localization(const Morphism& f, const LocalizationPresentation& SA,
                              const LocalizationPresentation& TB) -> Morphism;
/// class(a) |-> class(f(a)) for S contained in f^{-1}(T).
auto induced_map_marshall(const Morphism& f, const QuotientPresentation& AS, const MultiplicativeSet& S,
                          const QuotientPresentation& BT, const MultiplicativeSet& T) -> Morphism;

/// The unique g with g o proj = f, given f constant on the classes of `q`.
/// Throws PreconditionFailed when f does not factor.
auto factor_through(const QuotientPresentation& q, const Morphism& f) -> Morphism;
/// The unique g with g o rho = f, given f(S) inside the units of the codomain.
auto factor_through(const LocalizationPresentation& l, const Morphism& f) -> Morphism;

}  // namespace hyperring
