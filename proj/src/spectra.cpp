#include "hyperring/spectra.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <set>

namespace hyperring {

auto is_ideal(const Multiring& A, const Subset& s) -> bool {
    if (!s.contains(A.zero())) return false;
    if (!A.sum(s, s).is_subset_of(s)) return false;
    return A.products(A.carrier(), s).is_subset_of(s);
}

auto is_prime_ideal(const Multiring& A, const Subset& s) -> bool {
    if (!is_ideal(A, s) || s.contains(A.one())) return false;
    for (Element a = 0; a < A.size(); ++a) {
        if (s.contains(a)) continue;
        for (Element b = 0; b < A.size(); ++b)
            if (!s.contains(b) && s.contains(A.mul(a, b))) return false;
    }
    return true;
}

auto ideal_closure(const Multiring& A, const Subset& x) -> Subset {
    auto gens = A.products(A.carrier(), x);
    gens.insert(A.zero());
    return A.sum_closure(gens);
}

auto Ideal::of(const Multiring& A, Subset elems) -> Ideal {
    if (elems.universe() != A.size() || !is_ideal(A, elems)) throw NotAnIdeal("subset is not an ideal of " + A.name());
    return Ideal(A.ptr(), std::move(elems));
}

auto PrimeIdeal::of(const Multiring& A, Subset elems) -> PrimeIdeal {
    if (elems.universe() != A.size() || !is_prime_ideal(A, elems))
        throw NotPrime("subset is not a prime ideal of " + A.name());
    return PrimeIdeal(A.ptr(), std::move(elems));
}

auto ideal_generated(const Multiring& A, const Subset& x) -> Ideal {
    auto s = ideal_closure(A, x);
    ensure(is_ideal(A, s), "closure of generators is an ideal");
    return Ideal::of(A, std::move(s));
}

auto principal_ideal(const Multiring& A, Element a) -> Subset { return ideal_closure(A, A.singleton(a)); }

auto all_ideals(const Multiring& A, const Budget& budget) -> std::vector<Subset> {
    std::set<Subset> seen{ideal_closure(A, A.empty_set())};
    std::vector<Subset> todo(seen.begin(), seen.end());
    while (!todo.empty()) {
        const auto I = std::move(todo.back());
        todo.pop_back();
        I.complement().for_each([&](Element a) {
            auto J = I;
            J.insert(a);
            J = ideal_closure(A, J);
            if (seen.insert(J).second) {
                if (seen.size() > budget.max_elements)
                    throw BudgetExceeded("more than " + std::to_string(budget.max_elements) + " ideals in " + A.name());
                todo.push_back(std::move(J));
            }
        });
    }
    return {seen.begin(), seen.end()};
}

Spectrum::Spectrum(std::size_t carrier, std::vector<Subset> primes) : primes_(std::move(primes)) {
    std::sort(primes_.begin(), primes_.end());
    opens_.assign(carrier, Subset(primes_.size()));
    for (std::size_t i = 0; i < primes_.size(); ++i)
        for (Element a = 0; a < carrier; ++a)
            if (!primes_[i].contains(a)) opens_[a].insert(i);
}

auto Spectrum::index_of(const Subset& p) const -> std::optional<std::size_t> {
    auto it = std::lower_bound(primes_.begin(), primes_.end(), p);
    if (it != primes_.end() && *it == p) return static_cast<std::size_t>(it - primes_.begin());
    return std::nullopt;
}

auto Spectrum::closure_of(std::size_t i) const -> Subset {
    Subset out(primes_.size());
    for (std::size_t j = 0; j < primes_.size(); ++j)
        if (primes_[i].is_subset_of(primes_[j])) out.insert(j);
    return out;
}

auto Spectrum::is_maximal_index(std::size_t i) const -> bool { return closure_of(i).count() == 1; }

namespace {

auto primes_by_scan(const Multiring& A) -> std::vector<Subset> {
    const auto n = A.size();
    std::vector<Subset> out;
    if (A.is_zero_ring()) return out;
    // free bits: every element except 0 and 1
    std::vector<Element> free;
    for (Element e = 0; e < n; ++e)
        if (e != A.zero() && e != A.one()) free.push_back(e);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free.size()); ++mask) {
        Subset s(n);
        s.insert(A.zero());
        for (std::size_t i = 0; i < free.size(); ++i)
            if (mask >> i & 1U) s.insert(free[i]);
        if (is_prime_ideal(A, s)) out.push_back(std::move(s));
    }
    return out;
}

// Decides membership element by element. Ideals are closed under + and
// multiples; complements of primes are multiplicative and saturated.
class PrimePropagation {
public:
    explicit PrimePropagation(const Multiring& A) : A_(A), st_(A.size(), kUnknown), divisors_(A.size()) {
        for (Element t = 0; t < A.size(); ++t)
            for (Element u = t; u < A.size(); ++u) divisors_[A.mul(t, u)].push_back({t, u});
    }

    auto run() -> std::vector<Subset> {
        if (A_.is_zero_ring()) return {};
        if (set(A_.zero(), kIn) && set(A_.one(), kOut) && propagate()) descend();
        return std::move(found_);
    }

private:
    static constexpr int kUnknown = 0, kIn = 1, kOut = 2;

    auto set(Element x, int s) -> bool {
        if (st_[x] == s) return true;
        if (st_[x] != kUnknown) return false;
        st_[x] = s;
        trail_.push_back(x);
        queue_.push_back(x);
        return true;
    }

    auto propagate() -> bool {
        while (!queue_.empty()) {
            const auto x = queue_.front();
            queue_.pop_front();
            bool ok = true;
            if (st_[x] == kIn) {
                for (Element t = 0; t < A_.size() && ok; ++t) {
                    ok = set(A_.mul(x, t), kIn);
                    if (ok && st_[t] == kIn)
                        A_.add(x, t).for_each([&](Element z) { ok = ok && set(z, kIn); });
                }
            } else {
                for (Element y = 0; y < A_.size() && ok; ++y)
                    if (st_[y] == kOut) ok = set(A_.mul(x, y), kOut);
                for (const auto& [t, u] : divisors_[x]) {
                    if (!ok) break;
                    ok = set(t, kOut) && set(u, kOut);
                }
            }
            if (!ok) {
                queue_.clear();
                return false;
            }
        }
        return true;
    }

    void undo(std::size_t mark) {
        while (trail_.size() > mark) {
            st_[trail_.back()] = kUnknown;
            trail_.pop_back();
        }
    }

    void descend() {
        auto it = std::find(st_.begin(), st_.end(), kUnknown);
        if (it == st_.end()) {
            Subset p(A_.size());
            for (Element e = 0; e < A_.size(); ++e)
                if (st_[e] == kIn) p.insert(e);
            ensure(is_prime_ideal(A_, p), "propagated prime candidate is a prime ideal");
            found_.push_back(std::move(p));
            return;
        }
        const auto x = static_cast<Element>(it - st_.begin());
        for (int s : {kIn, kOut}) {
            const auto mark = trail_.size();
            if (set(x, s) && propagate()) descend();
            undo(mark);
        }
    }

    const Multiring& A_;
    std::vector<int> st_;
    std::vector<std::vector<std::pair<Element, Element>>> divisors_;
    std::vector<Element> trail_;
    std::deque<Element> queue_;
    std::vector<Subset> found_;
};

}  // namespace

auto compute_spectrum(const Multiring& A, PrimeSearch how) -> Spectrum {
    if (how == PrimeSearch::Auto) how = A.size() <= 16 ? PrimeSearch::SubsetScan : PrimeSearch::Propagation;
    if (how == PrimeSearch::SubsetScan && A.size() > 24)
        throw BudgetExceeded("subset scan for primes limited to 24 elements");
    auto primes = how == PrimeSearch::SubsetScan ? primes_by_scan(A) : PrimePropagation(A).run();
    return Spectrum(A.size(), std::move(primes));
}

auto spec(const Multiring& A) -> const Spectrum& {
    auto& memo = A.memo();
    std::call_once(memo.spectrum_once,
                   [&] { memo.spectrum = std::make_shared<const Spectrum>(compute_spectrum(A, PrimeSearch::Auto)); });
    return *memo.spectrum;
}

auto is_maximal(const Ideal& I) -> bool {
    const auto& A = I.owner();
    const auto& S = spec(A);
    bool by_primes = false;
    if (auto i = S.index_of(I.elements())) by_primes = S.is_maximal_index(*i);

    bool by_generation = I.is_proper();
    for (Element a = 0; a < A.size() && by_generation; ++a) {
        if (I.contains(a)) continue;
        auto g = I.elements();
        g.insert(a);
        by_generation = ideal_closure(A, g).contains(A.one());
    }
    ensure(by_primes == by_generation, "maximality agrees between the prime route and the generation route");
    return by_generation;
}

auto radical_by_powers(const Multiring& A, const Subset& I) -> Subset {
    Subset out = A.empty_set();
    for (Element x = 0; x < A.size(); ++x) {
        Subset seen = A.empty_set();
        for (Element y = x; !seen.contains(y); y = A.mul(y, x)) {
            if (I.contains(y)) {
                out.insert(x);
                break;
            }
            seen.insert(y);
        }
    }
    return out;
}

auto radical_by_primes(const Multiring& A, const Subset& I) -> Subset {
    Subset out = A.carrier();
    for (const auto& p : spec(A).primes())
        if (I.is_subset_of(p)) out &= p;
    return out;
}

auto radical(const Ideal& I) -> Ideal {
    const auto& A = I.owner();
    auto r = radical_by_powers(A, I.elements());
    ensure(r == radical_by_primes(A, I.elements()), "radical by powers equals the intersection of primes over it");
    return Ideal::of(A, std::move(r));
}

auto saturation_by_definition(const Multiring& A, Element a) -> Subset {
    const auto pw = A.powers(a);
    Subset out = A.empty_set();
    for (Element x = 0; x < A.size(); ++x)
        if (principal_ideal(A, x).intersects(pw)) out.insert(x);
    return out;
}

auto saturation_by_primes(const Multiring& A, Element a) -> Subset {
    Subset out = A.carrier();
    for (const auto& p : spec(A).primes())
        if (!p.contains(a)) out -= p;
    return out;
}

auto saturation(const Multiring& A, Element a) -> Subset {
    auto s = saturation_by_definition(A, a);
    ensure(s == saturation_by_primes(A, a), "S_a by definition equals the intersection of prime complements",
           {A.element_name(a)});
    return s;
}

auto spectral_map(const Morphism& f) -> std::vector<std::size_t> {
    const auto& SA = spec(f.dom());
    const auto& SB = spec(f.cod());
    std::vector<std::size_t> out(SB.size());
    for (std::size_t j = 0; j < SB.size(); ++j) {
        auto idx = SA.index_of(f.preimage(SB.prime(j)));
        ensure(idx.has_value(), "preimage of a prime is prime");
        out[j] = *idx;
    }
    for (Element a = 0; a < f.dom().size(); ++a) {
        Subset pre(SB.size());
        for (std::size_t j = 0; j < SB.size(); ++j)
            if (SA.basic_open(a).contains(out[j])) pre.insert(j);
        ensure(pre == SB.basic_open(f(a)), "(f*)^-1 D(a) = D(f(a))", {f.dom().element_name(a)});
    }
    return out;
}

}  // namespace hyperring
