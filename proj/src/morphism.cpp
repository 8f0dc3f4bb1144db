#include "hyperring/morphism.hpp"

#include <algorithm>
#include <array>
#include <deque>

namespace hyperring {

Morphism::Morphism(MultiringPtr dom, MultiringPtr cod, std::vector<Element> map)
    : dom_(std::move(dom)), cod_(std::move(cod)), map_(std::move(map)) {
    if (map_.size() != dom_->size())
        throw LengthMismatch("map has " + std::to_string(map_.size()) + " entries, domain has " +
                             std::to_string(dom_->size()));
    for (auto e : map_)
        if (e >= cod_->size()) throw LengthMismatch("map value out of codomain range");
}

auto Morphism::image(const Subset& s) const -> Subset {
    Subset out = cod_->empty_set();
    s.for_each([&](Element a) { out.insert(map_[a]); });
    return out;
}

auto Morphism::preimage(const Subset& t) const -> Subset {
    Subset out = dom_->empty_set();
    for (Element a = 0; a < map_.size(); ++a)
        if (t.contains(map_[a])) out.insert(a);
    return out;
}

auto validate_morphism(const Morphism& f) -> MorphismCheck {
    const auto& A = f.dom();
    const auto& B = f.cod();
    if (f(A.zero()) != B.zero()) return {false, "f(0) = 0", {A.zero()}};
    if (f(A.one()) != B.one()) return {false, "f(1) = 1", {A.one()}};
    for (Element a = 0; a < A.size(); ++a)
        if (f(A.neg(a)) != B.neg(f(a))) return {false, "f(-a) = -f(a)", {a}};
    for (Element a = 0; a < A.size(); ++a)
        for (Element b = 0; b < A.size(); ++b) {
            if (f(A.mul(a, b)) != B.mul(f(a), f(b))) return {false, "f(ab) = f(a)f(b)", {a, b}};
            const auto& img = B.add(f(a), f(b));
            MorphismCheck bad;
            A.add(a, b).for_each([&](Element c) {
                if (bad.ok && !img.contains(f(c))) bad = {false, "c in a+b implies f(c) in f(a)+f(b)", {c, a, b}};
            });
            if (!bad.ok) return bad;
        }
    return {};
}

auto is_morphism(const Morphism& f) -> bool { return validate_morphism(f).ok; }

auto identity(const Multiring& A) -> Morphism {
    std::vector<Element> m(A.size());
    for (Element a = 0; a < A.size(); ++a) m[a] = a;
    return Morphism(A.ptr(), A.ptr(), std::move(m));
}

auto compose(const Morphism& g, const Morphism& f) -> Morphism {
    if (f.cod().size() != g.dom().size()) throw LengthMismatch("cannot compose: codomain/domain sizes differ");
    std::vector<Element> m(f.dom().size());
    for (Element a = 0; a < m.size(); ++a) m[a] = g(f(a));
    return Morphism(f.dom_ptr(), g.cod_ptr(), std::move(m));
}

auto is_bijective(const Morphism& f) -> bool {
    if (f.dom().size() != f.cod().size()) return false;
    Subset seen = f.cod().empty_set();
    for (auto e : f.map()) {
        if (seen.contains(e)) return false;
        seen.insert(e);
    }
    return true;
}

auto reflects_sums(const Morphism& f) -> bool {
    const auto& A = f.dom();
    const auto& B = f.cod();
    for (Element a = 0; a < A.size(); ++a)
        for (Element b = 0; b < A.size(); ++b)
            for (Element c = 0; c < A.size(); ++c)
                if (B.add(f(b), f(c)).contains(f(a)) && !A.add(b, c).contains(a)) return false;
    return true;
}

auto is_isomorphism(const Morphism& f) -> bool { return is_bijective(f) && is_morphism(f) && reflects_sums(f); }

auto inverse(const Morphism& f) -> Morphism {
    if (!is_bijective(f)) throw PreconditionFailed("inverse of a non-bijective map");
    std::vector<Element> m(f.cod().size());
    for (Element a = 0; a < f.dom().size(); ++a) m[f(a)] = a;
    return Morphism(f.cod_ptr(), f.dom_ptr(), std::move(m));
}

namespace {

constexpr long kUnset = -1;

class MorphismSearch {
public:
    MorphismSearch(const Multiring& A, const Multiring& B, bool bijective, const Budget& budget)
        : A_(A), B_(B), bijective_(bijective), budget_(budget), val_(A.size(), kUnset), used_(B.size()) {
        const auto n = A.size();
        triples_of_.resize(n);
        for (Element a = 0; a < n; ++a)
            for (Element b = a; b < n; ++b)
                A.add(a, b).for_each([&](Element c) {
                    std::array<Element, 3> t{a, b, c};
                    triples_of_[a].push_back(t);
                    if (b != a) triples_of_[b].push_back(t);
                    if (c != a && c != b) triples_of_[c].push_back(t);
                });
    }

    template <class Emit>
    void run(Emit&& emit) {
        if (!assign(A_.zero(), B_.zero()) || !assign(A_.one(), B_.one()) || !propagate()) return;
        descend(emit);
    }

private:
    auto assign(Element x, Element v) -> bool {
        if (val_[x] != kUnset) return static_cast<Element>(val_[x]) == v;
        if (bijective_ && used_.contains(v)) return false;
        val_[x] = static_cast<long>(v);
        used_.insert(v);
        trail_.push_back(x);
        queue_.push_back(x);
        return true;
    }

    auto propagate() -> bool {
        while (!queue_.empty()) {
            const auto x = queue_.front();
            queue_.pop_front();
            const auto v = static_cast<Element>(val_[x]);
            if (!assign(A_.neg(x), B_.neg(v))) return fail();
            for (Element y = 0; y < A_.size(); ++y)
                if (val_[y] != kUnset && !assign(A_.mul(x, y), B_.mul(v, static_cast<Element>(val_[y]))))
                    return fail();
            for (const auto& [a, b, c] : triples_of_[x]) {
                if (val_[a] == kUnset || val_[b] == kUnset || val_[c] == kUnset) continue;
                if (!B_.add(static_cast<Element>(val_[a]), static_cast<Element>(val_[b]))
                         .contains(static_cast<Element>(val_[c])))
                    return fail();
            }
        }
        return true;
    }

    auto fail() -> bool {
        queue_.clear();
        return false;
    }

    void undo(std::size_t mark) {
        while (trail_.size() > mark) {
            auto x = trail_.back();
            trail_.pop_back();
            used_.erase(static_cast<Element>(val_[x]));
            val_[x] = kUnset;
        }
    }

    template <class Emit>
    auto descend(Emit& emit) -> bool {
        if (++nodes_ > budget_.max_nodes) throw BudgetExceeded("morphism search node limit reached");
        auto it = std::find(val_.begin(), val_.end(), kUnset);
        if (it == val_.end()) {
            std::vector<Element> m(val_.size());
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = static_cast<Element>(val_[i]);
            return emit(std::move(m));
        }
        const auto x = static_cast<Element>(it - val_.begin());
        for (Element v = 0; v < B_.size(); ++v) {
            const auto mark = trail_.size();
            if (assign(x, v) && propagate())
                if (!descend(emit)) return false;
            undo(mark);
        }
        return true;
    }

    const Multiring& A_;
    const Multiring& B_;
    bool bijective_;
    const Budget& budget_;
    std::vector<long> val_;
    Subset used_;
    std::vector<Element> trail_;
    std::deque<Element> queue_;
    std::vector<std::vector<std::array<Element, 3>>> triples_of_;
    std::uint64_t nodes_ = 0;
};

void check_search_budget(const Multiring& A, const Multiring& B, const Budget& budget) {
    if (A.size() * B.size() > budget.search_size * budget.search_size)
        throw BudgetExceeded("search on " + std::to_string(A.size()) + " x " + std::to_string(B.size()) +
                             " elements exceeds budget " + std::to_string(budget.search_size));
}

}  // namespace

auto enumerate_morphisms(const Multiring& A, const Multiring& B, const Budget& budget) -> std::vector<Morphism> {
    check_search_budget(A, B, budget);
    std::vector<Morphism> out;
    MorphismSearch(A, B, false, budget).run([&](std::vector<Element> m) {
        Morphism f(A.ptr(), B.ptr(), std::move(m));
        ensure(is_morphism(f), "search result is a morphism");
        out.push_back(std::move(f));
        return true;
    });
    std::sort(out.begin(), out.end(), [](const Morphism& f, const Morphism& g) { return f.map() < g.map(); });
    return out;
}

auto find_isomorphism(const Multiring& A, const Multiring& B, const Budget& budget) -> std::optional<Morphism> {
    if (A.size() != B.size()) return std::nullopt;
    check_search_budget(A, B, budget);
    auto triples = [](const Multiring& R) {
        std::size_t t = 0;
        for (Element a = 0; a < R.size(); ++a)
            for (Element b = 0; b < R.size(); ++b) t += R.add(a, b).count();
        return t;
    };
    if (triples(A) != triples(B) || idempotents(A).count() != idempotents(B).count() ||
        units(A).count() != units(B).count())
        return std::nullopt;
    std::optional<Morphism> found;
    MorphismSearch(A, B, true, budget).run([&](std::vector<Element> m) {
        Morphism f(A.ptr(), B.ptr(), std::move(m));
        if (is_isomorphism(f)) {
            found = std::move(f);
            return false;
        }
        return true;
    });
    return found;
}

auto ProductPresentation::encode(const std::vector<Element>& coords) const -> Element {
    Element e = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) e = e * factors[i]->size() + coords[i];
    return e;
}

auto ProductPresentation::decode(Element e) const -> std::vector<Element> {
    std::vector<Element> c(factors.size());
    for (std::size_t i = factors.size(); i-- > 0;) {
        c[i] = e % factors[i]->size();
        e /= factors[i]->size();
    }
    return c;
}

auto ProductPresentation::projection(std::size_t i) const -> Morphism {
    std::vector<Element> m(result->size());
    for (Element e = 0; e < m.size(); ++e) m[e] = decode(e)[i];
    return Morphism(result, factors[i], std::move(m));
}

auto product_presentation(const std::vector<MultiringPtr>& factors, std::string name) -> ProductPresentation {
    ProductPresentation P;
    P.factors = factors;
    std::size_t n = 1;
    for (const auto& f : factors) {
        n *= f->size();
        if (n > Budget::defaults().max_elements) throw BudgetExceeded("product too large");
    }
    if (name.empty()) {
        if (factors.empty()) name = "0";
        for (std::size_t i = 0; i < factors.size(); ++i) name += (i ? "x" : "") + factors[i]->name();
    }
    RawTables t;
    t.name = std::move(name);
    std::vector<std::vector<Element>> coords(n);
    for (Element e = 0; e < n; ++e) {
        coords[e] = P.decode(e);
        std::string nm = "(";
        for (std::size_t i = 0; i < factors.size(); ++i)
            nm += (i ? "," : "") + factors[i]->element_name(coords[e][i]);
        t.names.push_back(nm + ")");
    }
    auto lift = [&](auto op) {
        std::vector<Element> c(factors.size());
        for (std::size_t i = 0; i < factors.size(); ++i) c[i] = op(i);
        return P.encode(c);
    };
    t.zero = lift([&](std::size_t i) { return factors[i]->zero(); });
    t.one = lift([&](std::size_t i) { return factors[i]->one(); });
    t.neg.resize(n);
    t.mul.assign(n, std::vector<Element>(n));
    t.add.assign(n, std::vector<std::vector<Element>>(n));
    for (Element x = 0; x < n; ++x) {
        t.neg[x] = lift([&](std::size_t i) { return factors[i]->neg(coords[x][i]); });
        for (Element y = 0; y < n; ++y) {
            t.mul[x][y] = lift([&](std::size_t i) { return factors[i]->mul(coords[x][i], coords[y][i]); });
            // cartesian product of the coordinate sums
            std::vector<Element> acc{0};
            for (std::size_t i = 0; i < factors.size(); ++i) {
                std::vector<Element> next;
                const auto s = factors[i]->add(coords[x][i], coords[y][i]).elements();
                for (auto a : acc)
                    for (auto b : s) next.push_back(a * factors[i]->size() + b);
                acc = std::move(next);
            }
            std::sort(acc.begin(), acc.end());
            t.add[x][y] = std::move(acc);
        }
    }
    P.result = make_constructed(std::move(t));
    return P;
}

auto product(const std::vector<MultiringPtr>& factors) -> MultiringPtr {
    return product_presentation(factors).result;
}

}  // namespace hyperring
