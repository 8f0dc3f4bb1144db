#include "hyperring/vonneumann.hpp"

#include <algorithm>

namespace hyperring {

namespace {

void require_hyperring(const Multiring& A) {
    if (!is_hyperring(A)) throw NotHyperring(A.name() + " is not a hyperring");
}

void require_vnh(const Multiring& A) {
    if (!is_vnh(A)) throw NotVNH(A.name() + " is not a von Neumann hyperring");
}

auto regular_witness(const Multiring& A, Element a) -> std::optional<Element> {
    for (Element b = 0; b < A.size(); ++b)
        if (A.mul(A.mul(a, a), b) == a) return b;
    return std::nullopt;
}

auto residues_of(const Multiring& A) -> std::vector<ResidueField> {
    std::vector<ResidueField> out;
    for (const auto& p : spec(A).primes()) out.push_back(residue_hyperfield(PrimeIdeal::of(A, p)));
    return out;
}

// All sums over `xs` with the same order of summation as Multiring::sum_of.
auto joined(const Multiring& A, const std::vector<Element>& xs) -> Subset {
    if (xs.empty()) return A.singleton(A.zero());
    return A.sum_of(xs);
}

}  // namespace

auto check_vnh(const Multiring& A) -> VnhCheck {
    require_hyperring(A);
    VnhCheck r;
    r.regular = true;
    for (Element a = 0; a < A.size() && r.regular; ++a)
        if (!regular_witness(A, a)) {
            r.regular = false;
            r.witness = a;
        }

    const auto& S = spec(A);
    bool all_maximal = true;
    for (std::size_t i = 0; i < S.size(); ++i) all_maximal = all_maximal && S.is_maximal_index(i);
    // D(a)^c is a union of basic opens
    bool complements_open = true;
    for (Element a = 0; a < A.size() && complements_open; ++a) {
        const auto closed = S.basic_open(a).complement();
        Subset u(S.size());
        for (Element b = 0; b < A.size(); ++b)
            if (S.basic_open(b).is_subset_of(closed)) u |= S.basic_open(b);
        complements_open = u == closed;
    }
    ensure(all_maximal == complements_open, "a finite spectrum has no specializations iff basic complements are open",
           {A.name()});
    const bool reduced = radical_by_powers(A, A.singleton(A.zero())) == A.singleton(A.zero());
    r.boolean = all_maximal && reduced;
    ensure(r.regular == r.boolean, "a = a^2 b solvable for all a iff spec is Boolean and the nilradical is zero",
           {A.name(), r.witness ? A.element_name(*r.witness) : std::string("-")});
    return r;
}

auto is_vnh(const Multiring& A) -> bool { return check_vnh(A).regular; }

namespace {

auto compute_frame(const Multiring& A) -> IdempotentFrame {
    require_vnh(A);
    const auto n = A.size();
    const auto& S = spec(A);
    IdempotentFrame fr;
    fr.idempotents = idempotents(A);
    fr.i.assign(n, A.zero());
    fr.comp.assign(n, A.zero());

    for (Element a = 0; a < n; ++a) {
        std::optional<Element> chosen;
        for (Element b = 0; b < n; ++b) {
            if (A.mul(A.mul(a, a), b) != a) continue;
            const auto e = A.mul(a, b);
            ensure(fr.idempotents.contains(e), "ab is idempotent when a = a^2 b",
                   {A.element_name(a), A.element_name(b)});
            ensure(S.basic_open(e) == S.basic_open(a), "D(ab) = D(a) when a = a^2 b",
                   {A.element_name(a), A.element_name(b)});
            if (!chosen) chosen = e;
            ensure(e == *chosen, "the idempotent with D(e) = D(a) is unique", {A.element_name(a), A.element_name(b)});
        }
        fr.i[a] = *chosen;
    }

    std::vector<Element> ecomp(n, A.zero());
    fr.idempotents.for_each([&](Element e) {
        std::vector<Element> found;
        A.diff(A.one(), e).for_each([&](Element x) {
            if (A.mul(e, x) == A.zero()) found.push_back(x);
        });
        if (found.size() != 1) {
            std::vector<std::string> w{A.element_name(e)};
            for (auto x : found) w.push_back(A.element_name(x));
            throw NonUniqueComplement("the complement of an idempotent exists and is unique", std::move(w));
        }
        ecomp[e] = found.front();
        ensure(fr.idempotents.contains(ecomp[e]), "e^c is idempotent", {A.element_name(e)});
        ensure(S.basic_open(ecomp[e]) == S.basic_open(e).complement(), "D(e^c) = D(e)^c", {A.element_name(e)});
    });
    for (Element a = 0; a < n; ++a) fr.comp[a] = ecomp[fr.i[a]];

    fr.geometric = true;
    fr.idempotents.for_each([&](Element e) {
        fr.geometric = fr.geometric && A.add(e, ecomp[e]) == A.singleton(A.one());
    });
    if (fr.geometric) {
        const auto U = units(A);
        std::vector<Element> nab(n);
        for (Element a = 0; a < n; ++a) {
            const auto& d = A.diff(a, fr.comp[a]);
            ensure(d.count() == 1, "a - a^c is a singleton in a geometric von Neumann hyperring", {A.element_name(a)});
            nab[a] = *d.first();
            ensure(U.contains(nab[a]), "nabla(a) is a unit", {A.element_name(a)});
            ensure(A.mul(fr.i[a], nab[a]) == a, "a = i(a) nabla(a)", {A.element_name(a)});
        }
        fr.nabla = std::move(nab);
    }
    return fr;
}

}  // namespace

auto idempotent_frame(const Multiring& A) -> const IdempotentFrame& {
    auto& memo = A.memo();
    std::call_once(memo.frame_once, [&] { memo.frame = std::make_shared<const IdempotentFrame>(compute_frame(A)); });
    return *memo.frame;
}

auto check_geometric(const Multiring& A) -> GeometricCheck {
    const auto& fr = idempotent_frame(A);
    GeometricCheck r;
    r.geometric = fr.geometric;
    fr.idempotents.for_each([&](Element e) {
        if (!r.witness && A.add(e, fr.comp[e]) != A.singleton(A.one())) r.witness = e;
    });

    const auto K = residues_of(A);
    // u = 1 in every residue hyperfield forces u = 1
    bool local_units = true;
    std::optional<Element> bad;
    for (Element u = 0; u < A.size() && local_units; ++u) {
        bool locally_one = true;
        for (const auto& k : K) locally_one = locally_one && k.canonical(u) == k.result->one();
        if (locally_one && u != A.one()) {
            local_units = false;
            bad = u;
        }
    }
    ensure(local_units == r.geometric, "e + e^c = {1} for all idempotents iff local units are global units",
           {A.name(), bad ? A.element_name(*bad) : std::string("-")});

    if (r.geometric) {
        for (Element b = 0; b < A.size(); ++b)
            for (Element c = b; c < A.size(); ++c)
                for (Element a = 0; a < A.size(); ++a) {
                    bool local = true;
                    for (const auto& k : K)
                        local = local && k.result->add(k.canonical(b), k.canonical(c)).contains(k.canonical(a));
                    ensure(A.add(b, c).contains(a) == local, "a in b + c iff a in b + c in every residue hyperfield",
                           {A.element_name(a), A.element_name(b), A.element_name(c)});
                }
    }
    return r;
}

auto is_geometric(const Multiring& A) -> bool { return check_geometric(A).geometric; }

auto is_gvnh(const Multiring& A) -> bool {
    if (!is_hyperring(A) || !is_vnh(A)) return false;
    return idempotent_frame(A).geometric;
}

auto partitions(const Multiring& A, const Budget& budget) -> std::vector<Partition> {
    require_vnh(A);
    const auto ids = idempotents(A).elements();
    if (ids.size() > budget.partition_idempotents)
        throw BudgetExceeded("partition enumeration limited to " + std::to_string(budget.partition_idempotents) +
                             " idempotents");
    const auto& S = spec(A);
    std::vector<Partition> out;
    std::vector<Element> cur;
    auto rec = [&](auto&& self, std::size_t from) -> void {
        for (std::size_t k = from; k < ids.size(); ++k) {
            const auto e = ids[k];
            bool orth = true;
            for (auto f : cur) orth = orth && A.mul(e, f) == A.zero();
            if (!orth) continue;
            cur.push_back(e);
            Partition p{cur, joined(A, cur)};
            Subset cover(S.size());
            for (auto f : cur) cover |= S.basic_open(f);
            p.sum.for_each([&](Element x) {
                ensure(S.basic_open(x) == cover, "D(x) is the union of the D(e_i) for x in e_1 + ... + e_n",
                       {A.element_name(x)});
            });
            out.push_back(std::move(p));
            self(self, k + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

auto partitions_of_unity(const Multiring& A, const Budget& budget) -> std::vector<Partition> {
    auto all = partitions(A, budget);
    std::erase_if(all, [&](const Partition& p) { return !p.of_unity(A); });
    return all;
}

auto s_u(const Multiring& A, const Budget& budget) -> MultiplicativeSet {
    const auto pu = partitions_of_unity(A, budget);
    Subset su = A.empty_set();
    for (const auto& p : pu) su |= p.sum;

    for (const auto& E : pu)
        for (const auto& F : pu) {
            std::vector<Element> refine;
            for (auto e : E.members)
                for (auto f : F.members) refine.push_back(A.mul(e, f));
            for (std::size_t i = 0; i < refine.size(); ++i)
                for (std::size_t j = i + 1; j < refine.size(); ++j)
                    ensure(A.mul(refine[i], refine[j]) == A.zero(), "products of two partitions are orthogonal");
            const auto rs = joined(A, refine);
            ensure(rs.contains(A.one()), "the product refinement is a partition of unity");
            ensure(E.sum.is_subset_of(rs) && F.sum.is_subset_of(rs),
                   "both sums lie in the sum of the product refinement");
        }

    ensure(A.products(su, su).is_subset_of(su), "S_u is closed under products", {A.name()});
    if (idempotent_frame(A).geometric)
        ensure(su == A.singleton(A.one()), "S_u = {1} in a geometric von Neumann hyperring", {A.name()});
    return MultiplicativeSet::of(A, std::move(su));
}

auto d_set(const MultiplicativeSet& S, Element a, Element b) -> Subset {
    const auto& A = S.owner();
    const auto av = A.scale(a, S.elements());
    const auto bs = A.scale(b, S.elements());
    const auto rhs = A.sum(av, bs);
    Subset out = A.empty_set();
    for (Element x = 0; x < A.size(); ++x)
        if (A.scale(x, S.elements()).intersects(rhs)) out.insert(x);
    return out;
}

auto vn_subgroup_by_definition(const MultiplicativeSet& S) -> bool {
    const auto& A = S.owner();
    const auto& fr = idempotent_frame(A);
    bool ok = true;
    fr.idempotents.for_each([&](Element e) {
        if (!ok) return;
        d_set(S, e, fr.comp[e]).for_each([&](Element x) {
            ok = ok && A.scale(x, S.elements()).intersects(S.elements());
        });
    });
    return ok;
}

auto is_vn_subgroup(const MultiplicativeSet& S) -> bool {
    const bool def = vn_subgroup_by_definition(S);
    const auto q = marshall_quotient(S);
    const bool quotient = is_gvnh(*q.result);
    ensure(def == quotient, "S is a von Neumann subgroup iff A /m S is a geometric von Neumann hyperring",
           {S.owner().name()});
    return def;
}

auto geometric_hull(const Multiring& A, const std::vector<MultiringPtr>& targets) -> QuotientPresentation {
    const auto S = s_u(A);
    ensure(vn_subgroup_by_definition(S), "S_u is a von Neumann subgroup", {A.name()});
    auto h = marshall_quotient(S);
    ensure(is_gvnh(*h.result), "A /m S_u is a geometric von Neumann hyperring", {A.name()});
    for (const auto& B : targets) {
        if (!is_gvnh(*B)) throw PreconditionFailed(B->name() + " is not a geometric von Neumann hyperring");
        for (const auto& f : enumerate_morphisms(A, *B)) {
            bool factors = true;
            try {
                (void)factor_through(h, f);
            } catch (const PreconditionFailed&) {
                factors = false;
            }
            ensure(factors, "every morphism into a geometric target factors through the geometric hull",
                   {A.name(), B->name()});
        }
    }
    return h;
}

auto rrm_vnh_equivalence(const Multiring& A) -> RrmVnhReport {
    RrmVnhReport r;
    const bool rrm = is_rrm(A);
    r.annihilator = rrm;
    for (Element a = 0; a < A.size() && r.annihilator; ++a) {
        bool found = false;
        A.diff(A.one(), A.mul(a, a)).for_each([&](Element x) { found = found || A.mul(a, x) == A.zero(); });
        r.annihilator = found;
    }
    const bool hyper = is_hyperring(A);
    r.rr_hyperring = rrm && hyper;
    r.gvnh_unit = is_gvnh(A);
    for (Element a = 0; a < A.size() && r.gvnh_unit; ++a)
        r.gvnh_unit = A.add(A.one(), A.mul(a, a)) == A.singleton(A.one());
    ensure(r.annihilator == r.rr_hyperring && r.rr_hyperring == r.gvnh_unit,
           "the three real reduced hyperring characterizations agree", {A.name()});
    return r;
}

auto represent_q(const Preorder& T) -> QRepresentation {
    const auto& A = T.owner();
    require_vnh(A);
    if (!T.proper()) throw ImproperPreorder("preorder contains -1 in " + A.name());
    const auto S = one_plus(A, T.elements());
    ensure(vn_subgroup_by_definition(S), "1 + T is a von Neumann subgroup", {A.name()});
    auto m = marshall_quotient(S);
    auto q = q_construction(T);
    auto iso = factor_through(m, q.proj);
    ensure(is_isomorphism(iso), "A /m (1 + T) -> Q_T(A) is an isomorphism", {A.name()});
    return {std::move(m), std::move(q), std::move(iso)};
}

auto search_nongeometric_vnh(const std::vector<MultiringPtr>& bases) -> std::vector<QuotientPresentation> {
    std::vector<QuotientPresentation> out;
    for (const auto& A : bases) {
        if (!is_hyperring(*A) || !is_vnh(*A)) continue;
        std::vector<Subset> seen;
        for (Element g = 0; g < A->size(); ++g)
            for (Element h = g; h < A->size(); ++h) {
                Subset gens = A->empty_set();
                gens.insert(g);
                gens.insert(h);
                auto S = MultiplicativeSet::generated(*A, gens);
                if (S.contains(A->zero())) continue;
                if (std::find(seen.begin(), seen.end(), S.elements()) != seen.end()) continue;
                seen.push_back(S.elements());
                auto q = marshall_quotient(S);
                const auto& Q = *q.result;
                if (is_hyperring(Q) && is_vnh(Q) && !idempotent_frame(Q).geometric) out.push_back(std::move(q));
            }
    }
    return out;
}

}  // namespace hyperring
