#pragma once

#include <vector>

#include "hyperring/realspec.hpp"

namespace hyperring {

/// V(A). A finite spectrum has a discrete constructible topology, and every
/// element of K_A(p) is some x/y with y outside p, so every choice of one
/// value per prime is a constructible section: V(A) is the full product of
/// the residue hyperfields with pointwise operations.
struct HullPresentation {
    MultiringPtr source;
    std::vector<ResidueField> residues;  // in spectrum order
    ProductPresentation product;         // product.result is V(A)
    Morphism v;                          // v_A(a)(p) = a/1

    auto result() const -> const MultiringPtr& { return product.result; }
};

/// Throws BudgetExceeded when the product of residue sizes exceeds max_elements.
auto hull(const Multiring& A, const Budget& budget = Budget::defaults()) -> HullPresentation;

/// The residue map K_A(f*(p)) -> K_B(p) induced by f, for prime index p of B.
auto residue_map(const Morphism& f, const ResidueField& Kq, const ResidueField& Kp) -> Morphism;
/// V(f)(s)(p) = f_p(s(f*(p))). Checks V(f) o v_A = v_B o f.
auto hull_map(const Morphism& f, const HullPresentation& va, const HullPresentation& vb) -> Morphism;

/// The unique f-bar: V(A) -> B with f-bar o v_A = f. Throws CodomainNotGvNH.
auto hull_universal(const Morphism& f, const HullPresentation& va) -> Morphism;

struct HullTheoremReport {
    std::vector<std::size_t> spec_map;  // prime of V(A) |-> prime of A
    std::size_t orders = 0;             // |sper(V(A))| = |sper(A)|
    std::vector<Morphism> residue_isos; // K_A(q) -> K_V(A)(p)
};
/// spec and sper of V(A) match those of A through v_A, and residues agree.
auto verify_hull_theorem(const HullPresentation& h) -> HullTheoremReport;

struct QvvqReport {
    HullPresentation va;
    QPresentation qa;
    QPresentation qva;
    HullPresentation vqa;
    Morphism f;  // Q(V(A)) -> V(Q(A))
    Morphism g;  // V(Q(A)) -> Q(V(A))
};
/// Throws NotSemireal.
auto qvvq(const Multiring& A) -> QvvqReport;

}  // namespace hyperring
