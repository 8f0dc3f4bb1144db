#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hyperring/constructions.hpp"

namespace hyperring {

class NotSemireal : public Error {
public:
    using Error::Error;
};

using Sign = std::int8_t;

/// Index of a sign in sign3(): -1 -> 0, 0 -> 1, 1 -> 2.
constexpr auto sign_index(Sign s) -> Element { return static_cast<Element>(s + 1); }
constexpr auto sign_of(Element i) -> Sign { return static_cast<Sign>(static_cast<int>(i) - 1); }

/// An order: a morphism A -> 3, stored as its sign vector.
struct SperPoint {
    MultiringPtr owner;
    std::vector<Sign> signs;

    auto operator()(Element a) const -> Sign { return signs[a]; }
    auto as_morphism() const -> Morphism;
    /// sigma^{-1}(0)
    auto support() const -> Subset;
    auto operator==(const SperPoint& o) const -> bool { return signs == o.signs; }
};

/// sigma in 3 satisfies x in y + z under the sign rule of 3.
auto sign_sum_contains(Sign x, Sign y, Sign z) -> bool;

class Preorder {
public:
    /// Least preorder containing x and the squares.
    static auto generated(const Multiring& A, const Subset& x) -> Preorder;
    static auto sums_of_squares(const Multiring& A) -> Preorder { return generated(A, A.empty_set()); }

    auto owner() const -> const Multiring& { return *owner_; }
    auto elements() const -> const Subset& { return elems_; }
    auto proper() const -> bool { return proper_; }

private:
    Preorder(MultiringPtr o, Subset e, bool p) : owner_(std::move(o)), elems_(std::move(e)), proper_(p) {}
    MultiringPtr owner_;
    Subset elems_;
    bool proper_;
};

/// Every element of every finite sum of squares.
auto sums_of_squares(const Multiring& A) -> Subset;
auto is_semireal(const Multiring& A) -> bool;

/// Orders of A, optionally only those with sigma(T) in {0,1}. Sorted by sign vector.
auto enumerate_sper(const Multiring& A, const Preorder* T = nullptr, const Budget& budget = Budget::defaults())
    -> std::vector<SperPoint>;
/// Orders with sigma(X) in {0,1} for an arbitrary subset X.
auto sper_nonnegative_on(const Multiring& A, const Subset& X, const Budget& budget = Budget::defaults())
    -> std::vector<SperPoint>;

auto is_prime_cone(const Multiring& A, const Subset& P) -> bool;
/// All prime cones, found by membership propagation. Sorted by bitset value.
auto prime_cones(const Multiring& A) -> std::vector<Subset>;

struct ConeOrderBijection {
    std::vector<Subset> cones;
    std::vector<SperPoint> orders;
    std::vector<std::size_t> order_of_cone;  // cone i <-> orders[order_of_cone[i]]
};
/// P |-> sigma_P and sigma |-> sigma^{-1}{0,1}; checks they are mutually inverse.
auto cone_order_bijection(const Multiring& A) -> ConeOrderBijection;
auto cone_to_order(const Multiring& A, const Subset& P) -> SperPoint;

/// a^2 + sum of squares never meets I for a outside I.
auto is_real_ideal(const Multiring& A, const Subset& I) -> bool;

struct QPresentation {
    MultiringPtr source;
    Subset preorder;
    std::vector<SperPoint> points;
    MultiringPtr result;
    Morphism proj;
};

/// Q_T(A): distinct sign vectors over sper_T(A), with pointwise operations.
/// Throws EmptyRealSpectrum if T is improper or sper_T(A) is empty.
auto q_construction(const Preorder& T) -> QPresentation;
/// Q(A) with T the sums of squares; checked against the 1 + sums-of-squares route.
auto q_of(const Multiring& A) -> QPresentation;
/// Q(f): Q_T(A) -> Q_P(B), pi(a) |-> pi(f(a)). Throws PreorderNotPreserved.
auto q_functor(const QPresentation& qa, const QPresentation& qb, const Morphism& f) -> Morphism;
/// Sum rule of Q_T(A) through lifts: some a', b', c' with matching sign vectors and a' in b' + c'.
auto q_lifted_sum(const QPresentation& q) -> std::vector<Subset>;

struct RrmCheck {
    bool ok = true;
    std::string clause;
    std::vector<Element> witness;
};
auto check_rrm(const Multiring& A) -> RrmCheck;
auto is_rrm(const Multiring& A) -> bool;
/// 1 != 0, a^2 = 1 for a != 0, 1 + 1 = {1}. Checked against is_rrm.
auto is_real_reduced_hyperfield(const Multiring& F) -> bool;

/// f-bar: Q_T(A) -> R with f-bar o pi = f, for f into a real reduced multiring R.
auto q_universal_check(const QPresentation& q, const Morphism& f) -> Morphism;

struct HyperfieldRepresentation {
    QuotientPresentation by_nonzero_squares;  // F /m (sums of nonzero squares)
    QuotientPresentation by_one_plus;         // F /m (1 + sums of squares)
    QPresentation q;
    Morphism one_plus_to_nonzero;
    Morphism one_plus_to_q;
};
/// Builds the three representations of a semi-real hyperfield and checks the canonical isomorphisms.
auto hyperfield_representation_check(const Multiring& F) -> HyperfieldRepresentation;

/// 1 + T as a multiplicative set.
auto one_plus(const Multiring& A, const Subset& T) -> MultiplicativeSet;

struct Pythagoras {
    std::size_t number = 0;
    std::vector<std::size_t> per_element;  // 0 outside the sums of squares
};
auto pythagoras_number(const Multiring& A) -> Pythagoras;

}  // namespace hyperring
