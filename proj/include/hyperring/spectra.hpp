#pragma once

#include <vector>

#include "hyperring/morphism.hpp"
#include "hyperring/multiring.hpp"

namespace hyperring {

auto is_ideal(const Multiring& A, const Subset& s) -> bool;
auto is_prime_ideal(const Multiring& A, const Subset& s) -> bool;
/// Least ideal containing `x`, by closure iteration.
auto ideal_closure(const Multiring& A, const Subset& x) -> Subset;

class Ideal {
public:
    /// Throws NotAnIdeal unless `elems` is an ideal of A.
    static auto of(const Multiring& A, Subset elems) -> Ideal;

    auto owner() const -> const Multiring& { return *owner_; }
    auto owner_ptr() const -> const MultiringPtr& { return owner_; }
    auto elements() const -> const Subset& { return elems_; }
    auto contains(Element a) const -> bool { return elems_.contains(a); }
    auto is_proper() const -> bool { return !elems_.contains(owner_->one()); }
    auto operator==(const Ideal& o) const -> bool { return owner_ == o.owner_ && elems_ == o.elems_; }

protected:
    Ideal(MultiringPtr owner, Subset elems) : owner_(std::move(owner)), elems_(std::move(elems)) {}

private:
    MultiringPtr owner_;
    Subset elems_;
};

class PrimeIdeal : public Ideal {
public:
    /// Throws NotPrime unless `elems` is a prime ideal of A.
    static auto of(const Multiring& A, Subset elems) -> PrimeIdeal;

private:
    using Ideal::Ideal;
};

auto ideal_generated(const Multiring& A, const Subset& x) -> Ideal;
auto principal_ideal(const Multiring& A, Element a) -> Subset;
/// Every ideal of A, sorted by bitset value. Throws BudgetExceeded past max_elements ideals.
auto all_ideals(const Multiring& A, const Budget& budget = Budget::defaults()) -> std::vector<Subset>;

/// Prime ideals sorted by bitset value, with the basic opens D(a).
class Spectrum {
public:
    Spectrum(std::size_t carrier, std::vector<Subset> primes);

    auto size() const -> std::size_t { return primes_.size(); }
    auto primes() const -> const std::vector<Subset>& { return primes_; }
    auto prime(std::size_t i) const -> const Subset& { return primes_[i]; }
    /// D(a) as a set of prime indices.
    auto basic_open(Element a) const -> const Subset& { return opens_[a]; }
    auto index_of(const Subset& p) const -> std::optional<std::size_t>;
    /// All prime indices.
    auto whole() const -> Subset { return Subset::full(primes_.size()); }
    /// Indices j with p_i contained in p_j, i.e. the closure of {p_i}.
    auto closure_of(std::size_t i) const -> Subset;
    auto is_maximal_index(std::size_t i) const -> bool;

private:
    std::vector<Subset> primes_;
    std::vector<Subset> opens_;
};

enum class PrimeSearch { Auto, SubsetScan, Propagation };

/// Memoized spectrum (PrimeSearch::Auto).
auto spec(const Multiring& A) -> const Spectrum&;
auto compute_spectrum(const Multiring& A, PrimeSearch how) -> Spectrum;

/// Maximality by two routes: prime and maximal among primes, and
/// 1 in (I, a) for every a outside I. They must agree.
auto is_maximal(const Ideal& I) -> bool;

/// {x : x^n in I} and the intersection of primes over I. Must agree.
auto radical(const Ideal& I) -> Ideal;
auto radical_by_powers(const Multiring& A, const Subset& I) -> Subset;
auto radical_by_primes(const Multiring& A, const Subset& I) -> Subset;

/// S_a = {x : a^n in (x) for some n >= 0}, checked against the
/// intersection of the complements of primes missing a.
auto saturation(const Multiring& A, Element a) -> Subset;
auto saturation_by_definition(const Multiring& A, Element a) -> Subset;
auto saturation_by_primes(const Multiring& A, Element a) -> Subset;

/// For f: A -> B, entry j is the index in spec(A) of f^{-1}(q_j).
auto spectral_map(const Morphism& f) -> std::vector<std::size_t>;

}  // namespace hyperring
