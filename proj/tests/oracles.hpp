#pragma once

// Brute-force reference implementations, written straight from the
// definitions with no shared code beyond the table accessors.

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "hyperring/multiring.hpp"

namespace oracle {

using hyperring::Element;
using hyperring::Multiring;
using hyperring::RawTables;
using Set = std::set<Element>;

inline auto sum(const RawTables& t, Element a, Element b) -> Set { return {t.add[a][b].begin(), t.add[a][b].end()}; }

inline auto sum(const Multiring& A, Element a, Element b) -> Set {
    Set s;
    A.add(a, b).for_each([&](Element c) { s.insert(c); });
    return s;
}

inline auto sum(const Multiring& A, const Set& x, const Set& y) -> Set {
    Set s;
    for (auto a : x)
        for (auto b : y) {
            auto ab = sum(A, a, b);
            s.insert(ab.begin(), ab.end());
        }
    return s;
}

/// Names of the violated axioms, by the textbook definition.
inline auto axioms(const RawTables& t) -> std::set<std::string> {
    const auto n = t.names.size();
    std::set<std::string> bad;
    auto has = [&](Element a, Element b, Element c) {
        return std::find(t.add[a][b].begin(), t.add[a][b].end(), c) != t.add[a][b].end();
    };
    for (Element a = 0; a < n; ++a) {
        if (t.add[a][t.zero] != std::vector<Element>{a}) bad.insert("neutral");
        if (t.mul[a][t.zero] != t.zero) bad.insert("zero");
        if (t.mul[a][t.one] != a) bad.insert("monoid");
        for (Element b = 0; b < n; ++b) {
            if (t.add[a][b].empty()) bad.insert("nonempty");
            if (sum(t, a, b) != sum(t, b, a)) bad.insert("commutative");
            if (t.mul[a][b] != t.mul[b][a]) bad.insert("monoid");
            for (Element c = 0; c < n; ++c) {
                if (t.mul[t.mul[a][b]][c] != t.mul[a][t.mul[b][c]]) bad.insert("monoid");
                // c in a+b  =>  a in c + (-b)
                if (has(a, b, c) && !has(c, t.neg[b], a)) bad.insert("reversibility");
                // (a+b)+c contained in a+(b+c)
                for (auto x : t.add[a][b])
                    for (auto y : t.add[x][c]) {
                        bool in = false;
                        for (auto z : t.add[b][c]) in = in || has(a, z, y);
                        if (!in) bad.insert("associativity");
                    }
                // a in b+c  =>  ad in bd+cd
                if (has(b, c, a))
                    for (Element d = 0; d < n; ++d)
                        if (!has(t.mul[b][d], t.mul[c][d], t.mul[a][d])) bad.insert("half-distributivity");
            }
        }
    }
    return bad;
}

inline auto is_hyperring(const Multiring& A) -> bool {
    const auto n = A.size();
    for (Element b = 0; b < n; ++b)
        for (Element c = 0; c < n; ++c)
            for (Element d = 0; d < n; ++d)
                for (auto x : sum(A, A.mul(b, d), A.mul(c, d))) {
                    bool ok = false;
                    for (auto a : sum(A, b, c)) ok = ok || A.mul(a, d) == x;
                    if (!ok) return false;
                }
    return true;
}

inline auto is_ideal(const Multiring& A, const Set& I) -> bool {
    if (!I.count(A.zero())) return false;
    for (auto a : I) {
        for (auto b : I)
            for (auto c : sum(A, a, b))
                if (!I.count(c)) return false;
        for (Element x = 0; x < A.size(); ++x)
            if (!I.count(A.mul(x, a))) return false;
    }
    return true;
}

inline auto is_prime(const Multiring& A, const Set& P) -> bool {
    if (!is_ideal(A, P) || P.count(A.one())) return false;
    for (Element a = 0; a < A.size(); ++a)
        for (Element b = 0; b < A.size(); ++b)
            if (P.count(A.mul(a, b)) && !P.count(a) && !P.count(b)) return false;
    return true;
}

inline void for_each_subset(std::size_t n, const std::function<void(const Set&)>& f) {
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        Set s;
        for (Element i = 0; i < n; ++i)
            if (mask >> i & 1U) s.insert(i);
        f(s);
    }
}

inline auto ideals(const Multiring& A) -> std::vector<Set> {
    std::vector<Set> out;
    for_each_subset(A.size(), [&](const Set& s) {
        if (is_ideal(A, s)) out.push_back(s);
    });
    return out;
}

inline auto primes(const Multiring& A) -> std::vector<Set> {
    std::vector<Set> out;
    for_each_subset(A.size(), [&](const Set& s) {
        if (is_prime(A, s)) out.push_back(s);
    });
    return out;
}

inline auto is_morphism(const Multiring& A, const Multiring& B, const std::vector<Element>& f) -> bool {
    if (f[A.zero()] != B.zero() || f[A.one()] != B.one()) return false;
    for (Element a = 0; a < A.size(); ++a) {
        if (f[A.neg(a)] != B.neg(f[a])) return false;
        for (Element b = 0; b < A.size(); ++b) {
            if (f[A.mul(a, b)] != B.mul(f[a], f[b])) return false;
            const auto img = sum(B, f[a], f[b]);
            for (auto c : sum(A, a, b))
                if (!img.count(f[c])) return false;
        }
    }
    return true;
}

/// Every map A -> B checked one by one.
inline auto morphisms(const Multiring& A, const Multiring& B) -> std::vector<std::vector<Element>> {
    std::vector<std::vector<Element>> out;
    std::vector<Element> f(A.size(), 0);
    while (true) {
        if (is_morphism(A, B, f)) out.push_back(f);
        std::size_t i = 0;
        while (i < f.size() && ++f[i] == B.size()) f[i++] = 0;
        if (i == f.size()) break;
    }
    return out;
}

/// A bijection preserving and reflecting every operation.
inline auto isomorphic(const Multiring& A, const Multiring& B) -> bool {
    if (A.size() != B.size()) return false;
    std::vector<Element> p(A.size());
    std::iota(p.begin(), p.end(), 0);
    do {
        bool ok = p[A.zero()] == B.zero() && p[A.one()] == B.one();
        for (Element a = 0; a < A.size() && ok; ++a) {
            ok = p[A.neg(a)] == B.neg(p[a]);
            for (Element b = 0; b < A.size() && ok; ++b) {
                ok = p[A.mul(a, b)] == B.mul(p[a], p[b]);
                Set img;
                for (auto c : sum(A, a, b)) img.insert(p[c]);
                ok = ok && img == sum(B, p[a], p[b]);
            }
        }
        if (ok) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

inline auto units(const Multiring& A) -> Set {
    Set u;
    for (Element a = 0; a < A.size(); ++a)
        for (Element b = 0; b < A.size(); ++b)
            if (A.mul(a, b) == A.one()) u.insert(a);
    return u;
}

inline auto is_hyperfield(const Multiring& A) -> bool {
    return A.zero() != A.one() && oracle::units(A).size() == A.size() - 1;
}

inline auto von_neumann_regular(const Multiring& A) -> bool {
    for (Element a = 0; a < A.size(); ++a) {
        bool ok = false;
        for (Element b = 0; b < A.size(); ++b) ok = ok || A.mul(A.mul(a, a), b) == a;
        if (!ok) return false;
    }
    return true;
}

inline auto idempotents(const Multiring& A) -> Set {
    Set e;
    for (Element a = 0; a < A.size(); ++a)
        if (A.mul(a, a) == a) e.insert(a);
    return e;
}

/// Morphisms into the sign hyperfield 3 (whose elements are named -1, 0, 1).
inline auto orders(const Multiring& A, const Multiring& three) -> std::vector<std::vector<Element>> {
    return morphisms(A, three);
}

/// Least n with x in a sum of n squares, maximized over sums of squares.
inline auto pythagoras(const Multiring& A) -> std::size_t {
    Set sq;
    for (Element a = 0; a < A.size(); ++a) sq.insert(A.mul(a, a));
    std::vector<std::size_t> first(A.size(), 0);
    Set layer = sq;
    for (std::size_t k = 1; k <= A.size() + 1; ++k) {
        for (auto x : layer)
            if (!first[x]) first[x] = k;
        layer = sum(A, sq, layer);
    }
    return *std::max_element(first.begin(), first.end());
}

}  // namespace oracle
