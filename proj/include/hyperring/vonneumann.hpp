#pragma once

#include <optional>
#include <vector>

#include "hyperring/constructions.hpp"
#include "hyperring/realspec.hpp"

namespace hyperring {

struct VnhCheck {
    bool regular = false;   // every a has some b with a = a^2 b
    bool boolean = false;   // spec Boolean and the nilradical is {0}
    std::optional<Element> witness;  // an a with no such b
};
/// Evaluates both characterizations and checks they agree. Throws NotHyperring.
auto check_vnh(const Multiring& A) -> VnhCheck;
auto is_vnh(const Multiring& A) -> bool;

struct IdempotentFrame {
    Subset idempotents;
    std::vector<Element> i;     // i(a)
    std::vector<Element> comp;  // a^c = i(a)^c
    bool geometric = false;     // e + e^c = {1} for every idempotent e
    std::optional<std::vector<Element>> nabla;  // only when geometric
};
/// Memoized per multiring. Throws NotHyperring, NotVNH, NonUniqueComplement.
auto idempotent_frame(const Multiring& A) -> const IdempotentFrame&;

struct GeometricCheck {
    bool geometric = false;
    std::optional<Element> witness;  // idempotent e with e + e^c != {1}
};
/// Checks e + e^c = {1} for all idempotents, cross-checked with the residue
/// criterion; on geometric A also checks the local-global sum law.
auto check_geometric(const Multiring& A) -> GeometricCheck;
auto is_geometric(const Multiring& A) -> bool;
/// Hyperring, von Neumann regular and geometric. Never throws on shape.
auto is_gvnh(const Multiring& A) -> bool;

struct Partition {
    std::vector<Element> members;  // increasing
    Subset sum;                    // e_1 + ... + e_n
    auto of_unity(const Multiring& A) const -> bool { return sum.contains(A.one()); }
};
/// Pairwise orthogonal sets of idempotents, each nonempty. Throws BudgetExceeded
/// beyond Budget::partition_idempotents idempotents.
auto partitions(const Multiring& A, const Budget& budget = Budget::defaults()) -> std::vector<Partition>;
auto partitions_of_unity(const Multiring& A, const Budget& budget = Budget::defaults()) -> std::vector<Partition>;
/// Union of the sums of the partitions of unity.
auto s_u(const Multiring& A, const Budget& budget = Budget::defaults()) -> MultiplicativeSet;

/// {x : xu in av + bs for some u, v, s in S}
auto d_set(const MultiplicativeSet& S, Element a, Element b) -> Subset;
/// The subgroup condition alone, with no cross-check.
auto vn_subgroup_by_definition(const MultiplicativeSet& S) -> bool;
/// Checks the definition against geometricity of A /m S.
auto is_vn_subgroup(const MultiplicativeSet& S) -> bool;

/// A /m S_u. Every morphism from A into one of `targets` (geometric) must factor through it.
auto geometric_hull(const Multiring& A, const std::vector<MultiringPtr>& targets = {}) -> QuotientPresentation;

struct RrmVnhReport {
    bool annihilator = false;  // real reduced, and ax = 0 for some x in 1 - a^2
    bool rr_hyperring = false;
    bool gvnh_unit = false;    // geometric vNH with 1 + a^2 = {1}
    auto all() const -> bool { return annihilator && rr_hyperring && gvnh_unit; }
};
auto rrm_vnh_equivalence(const Multiring& A) -> RrmVnhReport;

struct QRepresentation {
    QuotientPresentation marshall;  // A /m (1 + T)
    QPresentation q;
    Morphism iso;                   // A /m (1 + T) -> Q_T(A)
};
/// Throws NotVNH or ImproperPreorder.
auto represent_q(const Preorder& T) -> QRepresentation;

/// Marshall quotients of the bases by singly and doubly generated sets that are
/// von Neumann hyperrings but not geometric.
auto search_nongeometric_vnh(const std::vector<MultiringPtr>& bases) -> std::vector<QuotientPresentation>;

}  // namespace hyperring
