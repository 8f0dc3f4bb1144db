#include "hyperring/constructions.hpp"

#include <algorithm>
#include <numeric>

namespace hyperring {

auto MultiplicativeSet::of(const Multiring& A, Subset elems) -> MultiplicativeSet {
    if (elems.universe() != A.size() || !elems.contains(A.one()) || !A.products(elems, elems).is_subset_of(elems))
        throw NotMultiplicative("subset is not multiplicative in " + A.name());
    return MultiplicativeSet(A.ptr(), std::move(elems));
}

auto MultiplicativeSet::generated(const Multiring& A, const Subset& x) -> MultiplicativeSet {
    Subset s = x;
    s.insert(A.one());
    while (true) {
        auto t = s | A.products(s, s);
        if (t == s) break;
        s = std::move(t);
    }
    return of(A, std::move(s));
}

namespace {

auto partition_by(std::size_t n, const std::function<bool(Element, Element)>& rel, const std::string& what)
    -> std::vector<Element> {
    constexpr auto unset = static_cast<Element>(-1);
    std::vector<Element> class_of(n, unset);
    Element next = 0;
    for (Element a = 0; a < n; ++a) {
        if (class_of[a] != unset) continue;
        for (Element b = a; b < n; ++b)
            if (class_of[b] == unset && rel(a, b)) class_of[b] = next;
        ++next;
    }
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
            ensure(rel(a, b) == (class_of[a] == class_of[b]), what + " is an equivalence relation",
                   {std::to_string(a), std::to_string(b)});
    return class_of;
}

// Builds A/~ from a partition and an element-level sum rule. The rule is
// checked to be constant on classes via the lifted-class formulation.
auto build_quotient(const Multiring& A, std::vector<Element> class_of,
                    const std::function<bool(Element, Element, Element)>& rule, std::string name)
    -> QuotientPresentation {
    const auto n = A.size();
    const auto k = *std::max_element(class_of.begin(), class_of.end()) + 1;
    std::vector<std::vector<Element>> classes(k);
    for (Element a = 0; a < n; ++a) classes[class_of[a]].push_back(a);

    // lifted rule: some a' ~ a, b' ~ b, c' ~ c with a' in b' + c'
    std::vector<Subset> lifted(k * k, Subset(k));
    for (Element b = 0; b < n; ++b)
        for (Element c = 0; c < n; ++c)
            A.add(b, c).for_each([&](Element a) { lifted[class_of[b] * k + class_of[c]].insert(class_of[a]); });

    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
            for (Element c = 0; c < n; ++c)
                ensure(rule(a, b, c) == lifted[class_of[b] * k + class_of[c]].contains(class_of[a]),
                       "quotient sum rule agrees with the lifted-class rule",
                       {A.element_name(a), A.element_name(b), A.element_name(c)});

    RawTables t;
    t.name = std::move(name);
    for (const auto& cl : classes) t.names.push_back(A.element_name(cl.front()));
    t.zero = class_of[A.zero()];
    t.one = class_of[A.one()];
    t.neg.resize(k);
    t.mul.assign(k, std::vector<Element>(k));
    t.add.assign(k, std::vector<std::vector<Element>>(k));
    for (Element x = 0; x < n; ++x) {
        const auto cx = class_of[x];
        const auto nx = class_of[A.neg(x)];
        ensure(nx == class_of[A.neg(classes[cx].front())], "negation is well defined on classes");
        t.neg[cx] = nx;
        for (Element y = 0; y < n; ++y) {
            const auto m = class_of[A.mul(x, y)];
            ensure(m == class_of[A.mul(classes[cx].front(), classes[class_of[y]].front())],
                   "multiplication is well defined on classes", {A.element_name(x), A.element_name(y)});
            t.mul[cx][class_of[y]] = m;
        }
    }
    for (Element cb = 0; cb < k; ++cb)
        for (Element cc = 0; cc < k; ++cc) t.add[cb][cc] = lifted[cb * k + cc].elements();

    QuotientPresentation q{A.ptr(), std::move(classes), class_of, nullptr,
                           Morphism(A.ptr(), A.ptr(), std::vector<Element>(n, 0))};
    q.result = make_constructed(std::move(t));
    q.proj = Morphism(A.ptr(), q.result, std::move(class_of));
    ensure(is_morphism(q.proj), "projection onto the quotient is a morphism");
    return q;
}

}  // namespace

auto quotient_by_ideal(const Ideal& I) -> QuotientPresentation {
    const auto& A = I.owner();
    const auto n = A.size();
    const auto& J = I.elements();
    auto class_of = partition_by(
        n, [&](Element a, Element b) { return A.diff(a, b).intersects(J); }, "(a - b) meets I");

    std::vector<Subset> plus_ideal(n);
    for (Element x = 0; x < n; ++x) plus_ideal[x] = A.sum(x, J);
    std::vector<Subset> shifted(n * n, A.empty_set());
    for (Element b = 0; b < n; ++b)
        for (Element c = 0; c < n; ++c) A.add(b, c).for_each([&](Element x) { shifted[b * n + c] |= plus_ideal[x]; });

    std::vector<Subset> cls_set(n, A.empty_set());
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
            if (class_of[a] == class_of[b]) cls_set[a].insert(b);

    auto rule = [&](Element a, Element b, Element c) {
        const bool displayed = shifted[b * n + c].contains(a);
        const bool lifted_a = cls_set[a].intersects(A.add(b, c));
        ensure(displayed == lifted_a, "a in b+c+I iff some a' ~ a lies in b+c",
               {A.element_name(a), A.element_name(b), A.element_name(c)});
        return displayed;
    };
    auto q = build_quotient(A, std::move(class_of), rule, A.name() + "/I");
    for (Element a = 0; a < n; ++a)
        ensure((q.proj(a) == q.result->zero()) == J.contains(a), "proj(a) = 0 iff a in I", {A.element_name(a)});
    return q;
}

auto marshall_classes(const MultiplicativeSet& S) -> std::vector<Element> {
    const auto& A = S.owner();
    std::vector<Subset> orbit(A.size());
    for (Element a = 0; a < A.size(); ++a) orbit[a] = A.scale(a, S.elements());
    return partition_by(
        A.size(), [&](Element a, Element b) { return orbit[a].intersects(orbit[b]); }, "as = bt");
}

auto marshall_quotient(const MultiplicativeSet& S) -> QuotientPresentation {
    const auto& A = S.owner();
    const auto n = A.size();
    std::vector<Subset> orbit(n);
    for (Element a = 0; a < n; ++a) orbit[a] = A.scale(a, S.elements());
    auto class_of = marshall_classes(S);

    std::vector<Subset> reach(n * n, A.empty_set());
    for (Element b = 0; b < n; ++b)
        for (Element c = b; c < n; ++c) {
            auto& r = reach[b * n + c];
            orbit[b].for_each([&](Element y) { orbit[c].for_each([&](Element z) { r |= A.add(y, z); }); });
            reach[c * n + b] = r;
        }
    auto rule = [&](Element a, Element b, Element c) { return orbit[a].intersects(reach[b * n + c]); };
    auto q = build_quotient(A, std::move(class_of), rule, A.name() + "/mS");
    S.elements().for_each([&](Element s) { ensure(q.proj(s) == q.result->one(), "pi(S) = {1}"); });
    return q;
}

auto cancellative_closure(const MultiplicativeSet& S) -> MultiplicativeSet {
    const auto& A = S.owner();
    Subset bar = A.empty_set();
    for (Element x = 0; x < A.size(); ++x)
        if (A.scale(x, S.elements()).intersects(S.elements())) bar.insert(x);
    auto closed = MultiplicativeSet::of(A, bar);
    ensure(marshall_classes(closed) == marshall_classes(S), "A/m S and A/m S-bar have the same classes");
    return closed;
}

auto LocalizationPresentation::fraction(Element a, Element s) const -> Element {
    auto it = std::find(denominators.begin(), denominators.end(), s);
    if (it == denominators.end()) throw PreconditionFailed("denominator outside the multiplicative set");
    return pair_class[static_cast<std::size_t>(it - denominators.begin()) * source->size() + a];
}

auto localize(const MultiplicativeSet& S) -> LocalizationPresentation {
    const auto& A = S.owner();
    const auto n = A.size();
    std::vector<Element> den{A.one()};
    S.elements().for_each([&](Element s) {
        if (s != A.one()) den.push_back(s);
    });
    const auto m = den.size();
    const auto P = n * m;
    if (P > Budget::defaults().max_elements) throw BudgetExceeded("localization pair space too large");

    auto num = [n](std::size_t p) { return p % n; };
    auto dnm = [&, n](std::size_t p) { return den[p / n]; };
    auto equiv = [&](std::size_t p, std::size_t q) {
        const auto at = A.mul(num(p), dnm(q));
        const auto bs = A.mul(num(q), dnm(p));
        for (auto u : den)
            if (A.mul(at, u) == A.mul(bs, u)) return true;
        return false;
    };

    std::vector<std::size_t> parent(P);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t p = 0; p < P; ++p)
        for (std::size_t q = p + 1; q < P; ++q)
            if (find(p) != find(q) && equiv(p, q)) parent[std::max(find(p), find(q))] = std::min(find(p), find(q));

    constexpr auto unset = static_cast<Element>(-1);
    std::vector<Element> root_class(P, unset), pair_class(P);
    std::vector<std::size_t> rep;
    std::vector<std::vector<std::size_t>> members;
    for (std::size_t p = 0; p < P; ++p) {
        auto r = find(p);
        if (root_class[r] == unset) {
            root_class[r] = rep.size();
            rep.push_back(p);
            members.emplace_back();
        }
        pair_class[p] = root_class[r];
        members[pair_class[p]].push_back(p);
    }
    for (const auto& cl : members)
        for (auto p : cl)
            for (auto q : cl) ensure(equiv(p, q), "fraction equivalence is transitive");

    const auto k = rep.size();
    auto rule = [&](std::size_t x, std::size_t y, std::size_t z) {
        const auto a = num(x), s = dnm(x), b = num(y), t = dnm(y), c = num(z), u = dnm(z);
        const auto lhs = A.mul(A.mul(a, t), u);
        const auto bsu = A.mul(A.mul(b, s), u);
        const auto cst = A.mul(A.mul(c, s), t);
        for (auto v : den)
            if (A.add(A.mul(bsu, v), A.mul(cst, v)).contains(A.mul(lhs, v))) return true;
        return false;
    };

    RawTables t;
    t.name = "S^-1 " + A.name();
    for (auto p : rep)
        t.names.push_back(dnm(p) == A.one() ? A.element_name(num(p))
                                             : A.element_name(num(p)) + "/" + A.element_name(dnm(p)));
    t.zero = pair_class[A.zero()];
    t.one = pair_class[A.one()];
    t.neg.resize(k);
    t.mul.assign(k, std::vector<Element>(k));
    t.add.assign(k, std::vector<std::vector<Element>>(k));
    auto pair_of = [&](Element a, Element s_idx) { return s_idx * n + a; };
    auto den_index = [&](Element s) { return static_cast<Element>(std::find(den.begin(), den.end(), s) - den.begin()); };
    auto mul_pairs = [&](std::size_t p, std::size_t q) {
        return pair_class[pair_of(A.mul(num(p), num(q)), den_index(A.mul(dnm(p), dnm(q))))];
    };
    for (Element x = 0; x < k; ++x) {
        t.neg[x] = pair_class[pair_of(A.neg(num(rep[x])), rep[x] / n)];
        for (Element y = 0; y < k; ++y) {
            t.mul[x][y] = mul_pairs(rep[x], rep[y]);
            for (Element z = 0; z < k; ++z)
                if (rule(rep[z], rep[x], rep[y])) t.add[x][y].push_back(z);
        }
    }
    for (std::size_t p = 0; p < P; ++p) {
        ensure(pair_class[pair_of(A.neg(num(p)), p / n)] == t.neg[pair_class[p]], "negation of fractions is well defined");
        for (std::size_t q = 0; q < P; ++q)
            ensure(mul_pairs(p, q) == t.mul[pair_class[p]][pair_class[q]], "product of fractions is well defined");
    }
    // vary one coordinate of the sum rule at a time over class members
    if (static_cast<double>(k) * k * P * m * 2 <= 6e7) {
        for (Element x = 0; x < k; ++x)
            for (Element y = 0; y < k; ++y)
                for (Element z = 0; z < k; ++z) {
                    const bool base = rule(rep[z], rep[x], rep[y]);
                    for (auto p : members[z])
                        ensure(rule(p, rep[x], rep[y]) == base, "fraction sum is well defined");
                    for (auto p : members[x])
                        ensure(rule(rep[z], p, rep[y]) == base, "fraction sum is well defined");
                }
    }

    std::vector<Element> rho_map(n);
    for (Element a = 0; a < n; ++a) rho_map[a] = pair_class[a];
    std::vector<std::pair<Element, Element>> reps;
    for (auto p : rep) reps.emplace_back(num(p), dnm(p));

    auto result = make_constructed(std::move(t));
    LocalizationPresentation L{A.ptr(), S, den, std::move(pair_class), std::move(reps), result,
                               Morphism(A.ptr(), result, std::move(rho_map))};
    ensure(is_morphism(L.rho), "rho: A -> S^-1 A is a morphism");
    const auto u = units(*result);
    S.elements().for_each([&](Element s) { ensure(u.contains(L.rho(s)), "rho(S) consists of units"); });
    ensure(result->is_zero_ring() == S.contains(A.zero()), "S^-1 A = 0 iff 0 in S");
    return L;
}

auto maximal_of_local(const LocalizationPresentation& Ap, const PrimeIdeal& p) -> Subset {
    Subset m = Ap.result->empty_set();
    p.elements().for_each([&](Element x) {
        for (auto s : Ap.denominators) m.insert(Ap.fraction(x, s));
    });
    return m;
}

auto local_at(const PrimeIdeal& p) -> LocalizationPresentation {
    const auto& A = p.owner();
    auto L = localize(MultiplicativeSet::of(A, p.elements().complement()));
    auto m = maximal_of_local(L, p);
    ensure(is_ideal(*L.result, m), "pA_p is an ideal");
    const auto& S = spec(*L.result);
    std::size_t maximal = 0;
    for (std::size_t i = 0; i < S.size(); ++i)
        if (S.is_maximal_index(i)) {
            ++maximal;
            ensure(S.prime(i) == m, "the maximal ideal of A_p is pA_p");
        }
    ensure(maximal == 1, "A_p has exactly one maximal ideal");
    return L;
}

auto ResidueField::fraction(Element a, Element s) const -> Element {
    return field.fraction(domain.class_of[a], domain.class_of[s]);
}

auto ResidueField::representative(Element k) const -> std::pair<Element, Element> {
    const auto [d, t] = field.representatives[k];
    return {domain.representative(d), domain.representative(t)};
}

auto residue_hyperfield(const PrimeIdeal& p) -> ResidueField {
    const auto& A = p.owner();
    auto D = quotient_by_ideal(p);
    ensure(classify(*D.result).multidomain, "A/p is a multidomain");
    auto nonzero = D.result->carrier();
    nonzero.erase(D.result->zero());
    auto F = localize(MultiplicativeSet::of(*D.result, nonzero));
    auto canonical = compose(F.rho, D.proj);
    auto result = F.result->renamed("K(" + A.name() + ")");
    ResidueField K{p.elements(), std::move(D), std::move(F), result,
                   Morphism(A.ptr(), result, canonical.map())};
    ensure(classify(*K.result).hyperfield, "ff(A/p) is a hyperfield");
    compare_residue_routes(K);
    return K;
}

auto compare_residue_routes(const ResidueField& K) -> ResidueComparison {
    const auto& A = *K.domain.source;
    auto p = PrimeIdeal::of(A, K.prime);
    auto local = local_at(p);
    auto Q = quotient_by_ideal(Ideal::of(*local.result, maximal_of_local(local, p)));
    std::vector<Element> m(Q.result->size());
    for (Element c = 0; c < m.size(); ++c) {
        const auto [a, s] = local.representatives[Q.representative(c)];
        m[c] = K.fraction(a, s);
    }
    Morphism phi(Q.result, K.result, std::move(m));
    ensure(is_isomorphism(phi), "A_p/pA_p -> K_A(p) is an isomorphism");
    ensure(compose(phi, compose(Q.proj, local.rho)).map() == K.canonical.map(),
           "the two residue routes agree on A");
    return {std::move(local), std::move(Q), std::move(phi)};
}

auto from_ring_tables(std::string name, std::vector<std::string> names,
                      const std::function<Element(Element, Element)>& add,
                      const std::function<Element(Element, Element)>& mul, Element zero, Element one)
    -> MultiringPtr {
    const auto n = names.size();
    RawTables t;
    t.name = std::move(name);
    t.names = std::move(names);
    t.zero = zero;
    t.one = one;
    t.add.assign(n, std::vector<std::vector<Element>>(n));
    t.mul.assign(n, std::vector<Element>(n));
    t.neg.assign(n, zero);
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b) {
            t.add[a][b] = {add(a, b)};
            t.mul[a][b] = mul(a, b);
            if (add(a, b) == zero) t.neg[a] = b;
        }
    return Multiring::create(std::move(t));
}

auto krasner() -> MultiringPtr {
    RawTables t;
    t.name = "K";
    t.names = {"0", "1"};
    t.zero = 0;
    t.one = 1;
    t.neg = {0, 1};
    t.mul = {{0, 0}, {0, 1}};
    t.add = {{{0}, {1}}, {{1}, {0, 1}}};
    return Multiring::create(std::move(t));
}

auto sign3() -> MultiringPtr {
    // index i holds the sign i - 1
    RawTables t;
    t.name = "3";
    t.names = {"-1", "0", "1"};
    t.zero = 1;
    t.one = 2;
    t.neg = {2, 1, 0};
    t.mul.assign(3, std::vector<Element>(3));
    t.add.assign(3, std::vector<std::vector<Element>>(3));
    for (int a = -1; a <= 1; ++a)
        for (int b = -1; b <= 1; ++b) {
            auto ia = static_cast<Element>(a + 1), ib = static_cast<Element>(b + 1);
            t.mul[ia][ib] = static_cast<Element>(a * b + 1);
            if (a == 0 || b == 0 || a == b) t.add[ia][ib] = {static_cast<Element>(a + b == 0 ? 1 : (a + b > 0 ? 2 : 0))};
            else t.add[ia][ib] = {0, 1, 2};
        }
    return Multiring::create(std::move(t));
}

auto zmod(std::size_t n) -> MultiringPtr {
    if (n == 0) throw UnsupportedParameter("Z/n needs n >= 1");
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
    return from_ring_tables(
        "Z" + std::to_string(n), std::move(names), [n](Element a, Element b) { return (a + b) % n; },
        [n](Element a, Element b) { return (a * b) % n; }, 0, 1 % n);
}

auto field_mod_squares(std::size_t q) -> MultiringPtr {
    auto prime = q >= 3 && q % 2 == 1;
    for (std::size_t d = 3; prime && d * d <= q; d += 2) prime = q % d != 0;
    if (!prime) throw UnsupportedParameter("field_mod_squares needs an odd prime, got " + std::to_string(q));
    auto F = zmod(q);
    Subset sq = F->empty_set();
    for (Element a = 1; a < q; ++a) sq.insert(F->mul(a, a));
    auto Q = marshall_quotient(MultiplicativeSet::of(*F, sq));
    auto t = Q.result->tables();
    t.name = "F" + std::to_string(q) + "/sq";
    for (Element c = 0; c < t.names.size(); ++c) {
        if (c == t.zero) t.names[c] = "0";
        else if (c == t.one) t.names[c] = "1";
        else t.names[c] = Q.class_of[q - 1] == c ? "-1" : "g";
    }
    return Multiring::create(std::move(t));
}

auto induced_map_quotient(const Morphism& f, const QuotientPresentation& AI, const Ideal& I,
                          const QuotientPresentation& BJ, const Ideal& J) -> Morphism {
    if (!f.image(I.elements()).is_subset_of(J.elements()))
        throw ContainmentViolation("I is not contained in f^-1(J)");
    std::vector<Element> m(AI.result->size());
    for (Element c = 0; c < m.size(); ++c) m[c] = BJ.class_of[f(AI.representative(c))];
    for (Element a = 0; a < f.dom().size(); ++a)
        ensure(m[AI.class_of[a]] == BJ.class_of[f(a)], "induced quotient map is well defined");
    Morphism g(AI.result, BJ.result, std::move(m));
    ensure(is_morphism(g), "induced quotient map is a morphism");
    return g;
}

auto induced_map_localization(const Morphism& f, const LocalizationPresentation& SA,
                              const LocalizationPresentation& TB) -> Morphism {
    if (!f.image(SA.denom.elements()).is_subset_of(TB.denom.elements()))
        throw ContainmentViolation("S is not contained in f^-1(T)");
    std::vector<Element> m(SA.result->size());
    for (Element c = 0; c < m.size(); ++c) {
        const auto [a, s] = SA.representatives[c];
        m[c] = TB.fraction(f(a), f(s));
    }
    for (auto s : SA.denominators)
        for (Element a = 0; a < f.dom().size(); ++a)
            ensure(m[SA.fraction(a, s)] == TB.fraction(f(a), f(s)), "induced localization map is well defined");
    Morphism g(SA.result, TB.result, std::move(m));
    ensure(is_morphism(g), "induced localization map is a morphism");
    return g;
}

auto induced_map_marshall(const Morphism& f, const QuotientPresentation& AS, const MultiplicativeSet& S,
                          const QuotientPresentation& BT, const MultiplicativeSet& T) -> Morphism {
    if (!f.image(S.elements()).is_subset_of(T.elements()))
        throw ContainmentViolation("S is not contained in f^-1(T)");
    std::vector<Element> m(AS.result->size());
    for (Element c = 0; c < m.size(); ++c) m[c] = BT.class_of[f(AS.representative(c))];
    for (Element a = 0; a < f.dom().size(); ++a)
        ensure(m[AS.class_of[a]] == BT.class_of[f(a)], "induced Marshall map is well defined");
    Morphism g(AS.result, BT.result, std::move(m));
    ensure(is_morphism(g), "induced Marshall map is a morphism");
    return g;
}

auto factor_through(const QuotientPresentation& q, const Morphism& f) -> Morphism {
    std::vector<Element> m(q.result->size());
    for (Element c = 0; c < m.size(); ++c) m[c] = f(q.representative(c));
    for (Element a = 0; a < f.dom().size(); ++a)
        if (m[q.class_of[a]] != f(a)) throw PreconditionFailed("map is not constant on quotient classes");
    Morphism g(q.result, f.cod_ptr(), std::move(m));
    ensure(is_morphism(g), "factorization through a quotient is a morphism");
    return g;
}

auto factor_through(const LocalizationPresentation& l, const Morphism& f) -> Morphism {
    const auto& B = f.cod();
    auto inv = [&](Element u) -> Element {
        for (Element v = 0; v < B.size(); ++v)
            if (B.mul(u, v) == B.one()) return v;
        throw PreconditionFailed("f(S) is not contained in the units");
    };
    std::vector<Element> m(l.result->size());
    for (Element c = 0; c < m.size(); ++c) {
        const auto [a, s] = l.representatives[c];
        m[c] = B.mul(f(a), inv(f(s)));
    }
    for (auto s : l.denominators)
        for (Element a = 0; a < f.dom().size(); ++a)
            ensure(m[l.fraction(a, s)] == B.mul(f(a), inv(f(s))), "factorization through S^-1 A is well defined");
    Morphism g(l.result, f.cod_ptr(), std::move(m));
    ensure(is_morphism(g), "factorization through S^-1 A is a morphism");
    return g;
}

}  // namespace hyperring
