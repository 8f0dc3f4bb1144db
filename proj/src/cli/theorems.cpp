#include "hyperring/cli/theorems.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include "hyperring/hull.hpp"
#include "hyperring/presheaf.hpp"
#include "hyperring/vonneumann.hpp"

namespace hyperring::cli {

namespace {

// Geometric von Neumann targets for the universal properties.
auto gvnh_targets() -> const std::vector<MultiringPtr>& {
    static const std::vector<MultiringPtr> t{krasner(), sign3(), product({krasner(), krasner()}),
                                             product({sign3(), sign3()})};
    return t;
}

void require_hyperring(const Multiring& A) {
    if (!is_hyperring(A)) throw Skip("not a hyperring");
}
void require_vnh(const Multiring& A) {
    require_hyperring(A);
    if (!is_vnh(A)) throw Skip("not von Neumann regular");
}
void require_semireal(const Multiring& A) {
    if (!is_semireal(A)) throw Skip("not semi-real");
}

auto name_of(const Multiring& A, const Subset& s) -> std::string {
    std::string out = "{";
    bool first = true;
    s.for_each([&](Element a) {
        out += (first ? "" : ",") + A.element_name(a);
        first = false;
    });
    return out + "}";
}

// The characteristic morphism A -> K of a prime.
auto chi(const Multiring& A, const Subset& p) -> Morphism {
    const auto K = gvnh_targets()[0];
    std::vector<Element> m(A.size());
    for (Element a = 0; a < A.size(); ++a) m[a] = p.contains(a) ? K->zero() : K->one();
    return Morphism(A.ptr(), K, std::move(m));
}

// spectral_map(f) is injective with image exactly the primes of dom(f) satisfying `pred`.
void check_spectral_bijection(const Morphism& f, const std::function<bool(const Subset&)>& pred,
                              const std::string& claim, const std::vector<std::string>& witness) {
    const auto back = spectral_map(f);
    const auto& S = spec(f.dom());
    std::set<std::size_t> image(back.begin(), back.end());
    std::set<std::size_t> expected;
    for (std::size_t i = 0; i < S.size(); ++i)
        if (pred(S.prime(i))) expected.insert(i);
    ensure(image.size() == back.size() && image == expected, claim, witness);
}

auto singly_generated(const Multiring& A) -> std::vector<MultiplicativeSet> {
    std::vector<MultiplicativeSet> out;
    std::set<Subset> seen;
    for (Element a = 0; a < A.size(); ++a) {
        auto S = MultiplicativeSet::generated(A, A.singleton(a));
        if (seen.insert(S.elements()).second) out.push_back(std::move(S));
    }
    return out;
}

// Morphisms A -> B, or none when the search budget is exceeded.
auto morphisms_within_budget(const Multiring& A, const Multiring& B) -> std::optional<std::vector<Morphism>> {
    try {
        return enumerate_morphisms(A, B);
    } catch (const BudgetExceeded&) {
        return std::nullopt;
    }
}

void check_pit(const Multiring& A) {
    const auto& S = spec(A);
    ensure(A.is_zero_ring() == (S.size() == 0), "A is nonzero exactly when spec(A) is nonempty", {A.name()});
    for (const auto& I : all_ideals(A)) {
        if (!I.contains(A.one()) && is_maximal(Ideal::of(A, I)))
            ensure(is_prime_ideal(A, I), "maximal ideals are prime", {name_of(A, I)});
        for (Element a = 0; a < A.size(); ++a) {
            const auto pw = MultiplicativeSet::generated(A, A.singleton(a)).elements();
            if (pw.intersects(I)) continue;
            bool found = false;
            for (const auto& p : S.primes()) found = found || (I.is_subset_of(p) && !p.intersects(pw));
            ensure(found, "an ideal missing a multiplicative set lies in a prime missing it",
                   {name_of(A, I), A.element_name(a)});
        }
    }
    for (Element a = 0; a < A.size(); ++a)
        for (Element b = 0; b < A.size(); ++b)
            ensure((S.basic_open(a) & S.basic_open(b)) == S.basic_open(A.mul(a, b)), "D(a) and D(b) meet in D(ab)",
                   {A.element_name(a), A.element_name(b)});
    if (A.size() <= 16)
        ensure(compute_spectrum(A, PrimeSearch::SubsetScan).primes() ==
                   compute_spectrum(A, PrimeSearch::Propagation).primes(),
               "subset scan and propagation find the same primes", {A.name()});
}

void check_idealq(const Multiring& A) {
    const bool hyper = is_hyperring(A);
    const auto& S = spec(A);
    for (const auto& I : all_ideals(A)) {
        if (I.contains(A.one())) continue;
        const auto ideal = Ideal::of(A, I);
        const auto q = quotient_by_ideal(ideal);
        const auto& Q = *q.result;
        const auto w = std::vector<std::string>{name_of(A, I)};
        if (hyper) ensure(is_hyperring(Q), "A/I of a hyperring is a hyperring", w);
        const auto c = classify(Q);
        ensure(is_prime_ideal(A, I) == c.multidomain, "I is prime exactly when A/I is a multidomain", w);
        const bool maximal = is_maximal(ideal);
        ensure(maximal == c.multifield, "I is maximal exactly when A/I is a multifield", w);
        if (hyper) ensure(maximal == c.hyperfield, "I is maximal in a hyperring exactly when A/I is a hyperfield", w);
        for (const auto& p : S.primes())
            if (I.is_subset_of(p)) (void)factor_through(q, chi(A, p));
        check_spectral_bijection(
            q.proj, [&](const Subset& p) { return I.is_subset_of(p); }, "spec(A/I) matches the primes over I", w);
    }
}

void check_localq(const Multiring& A) {
    const bool hyper = is_hyperring(A);
    auto sets = singly_generated(A);
    const auto single = sets.size();
    for (const auto& p : spec(A).primes()) sets.push_back(MultiplicativeSet::of(A, p.complement()));
    for (std::size_t k = 0; k < sets.size(); ++k) {
        const auto& S = sets[k];
        const auto L = localize(S);
        const auto w = std::vector<std::string>{name_of(A, S.elements())};
        if (hyper) ensure(is_hyperring(*L.result), "S^-1 A of a hyperring is a hyperring", w);
        ensure(L.result->is_zero_ring() == S.contains(A.zero()), "S^-1 A is zero exactly when 0 is in S", w);
        check_spectral_bijection(
            L.rho, [&](const Subset& p) { return !p.intersects(S.elements()); },
            "spec(S^-1 A) matches the primes missing S", w);
        if (k >= single || A.size() > 16) continue;
        for (Element b = 0; b < A.size(); ++b) {
            auto gens = S.elements();
            gens.insert(b);
            const auto T = localize(MultiplicativeSet::generated(A, gens));
            (void)factor_through(L, T.rho);
        }
    }
}

void check_marshq(const Multiring& A) {
    const bool hyper = is_hyperring(A);
    for (const auto& S : singly_generated(A)) {
        if (S.contains(A.zero())) continue;
        const auto w = std::vector<std::string>{name_of(A, S.elements())};
        const auto q = marshall_quotient(S);
        ensure(marshall_classes(cancellative_closure(S)) == marshall_classes(S),
               "S and its cancellative closure give the same Marshall quotient", w);
        if (hyper) ensure(is_hyperring(*q.result), "A /m S of a hyperring is a hyperring", w);
        check_spectral_bijection(
            q.proj, [&](const Subset& p) { return !p.intersects(S.elements()); },
            "spec(A /m S) matches the primes missing S", w);
        for (const auto& B : {gvnh_targets()[0], gvnh_targets()[1]}) {
            auto fs = morphisms_within_budget(A, *B);
            if (!fs) continue;
            for (const auto& f : *fs) {
                bool fixes = true;
                S.elements().for_each([&](Element s) { fixes = fixes && f(s) == B->one(); });
                if (fixes) (void)factor_through(q, f);
            }
        }
    }
}

void check_kap(const Multiring& A) {
    for (const auto& p : spec(A).primes()) {
        const auto K = residue_hyperfield(PrimeIdeal::of(A, p));
        const auto c = classify(*K.result);
        ensure(c.multifield, "K_A(p) is a multifield", {name_of(A, p)});
        const auto cmp = compare_residue_routes(K);
        ensure(is_isomorphism(cmp.to_residue), "A_p / pA_p -> K_A(p) is an isomorphism", {name_of(A, p)});
    }
}

void check_cones(const Multiring& A) {
    const auto b = cone_order_bijection(A);
    for (const auto& s : b.orders) {
        const auto supp = s.support();
        ensure(is_prime_ideal(A, supp), "the support of an order is a prime ideal", {name_of(A, supp)});
        ensure(is_real_ideal(A, supp), "the support of an order is a real ideal", {name_of(A, supp)});
    }
    if (!is_rrm(A)) return;
    for (Element a = 0; a < A.size(); ++a)
        for (Element c = 0; c < A.size(); ++c)
            for (Element d = 0; d < A.size(); ++d) {
                bool all = true;
                for (const auto& s : b.orders) all = all && sign_sum_contains(s(a), s(c), s(d));
                ensure(all == A.add(c, d).contains(a), "sums of a real reduced multiring are separated by orders",
                       {A.element_name(a), A.element_name(c), A.element_name(d)});
            }
}

void check_qmult(const Multiring& A) {
    require_semireal(A);
    std::vector<Preorder> ts{Preorder::sums_of_squares(A)};
    for (Element a = 0; a < A.size(); ++a) ts.push_back(Preorder::generated(A, A.singleton(a)));
    std::set<Subset> seen;
    for (const auto& T : ts) {
        if (!T.proper() || !seen.insert(T.elements()).second) continue;
        std::optional<QPresentation> q;
        try {
            q = q_construction(T);
        } catch (const EmptyRealSpectrum&) {
            continue;
        }
        const auto lifted = q_lifted_sum(*q);
        const auto& Q = *q->result;
        for (Element x = 0; x < Q.size(); ++x)
            for (Element y = 0; y < Q.size(); ++y)
                ensure(lifted[x * Q.size() + y] == Q.add(x, y), "the sum of Q_T(A) is the lifted sum",
                       {name_of(A, T.elements()), Q.element_name(x), Q.element_name(y)});
    }
}

void check_piiso(const Multiring& A) {
    require_semireal(A);
    const auto q = q_of(A);
    ensure(is_isomorphism(q.proj) == is_rrm(A), "pi: A -> Q(A) is an isomorphism exactly for real reduced A",
           {A.name()});
}

void check_unipro(const Multiring& A) {
    require_semireal(A);
    const auto qa = q_of(A);
    ensure(q_functor(qa, qa, identity(A)) == identity(*qa.result), "Q preserves identities", {A.name()});
    const auto& three = gvnh_targets()[1];
    const auto& t2 = gvnh_targets()[3];
    const auto q3 = q_of(*three);
    const auto q33 = q_of(*t2);
    for (const auto& R : {three, t2}) {
        auto fs = morphisms_within_budget(A, *R);
        if (!fs) continue;
        for (const auto& f : *fs) (void)q_universal_check(qa, f);
    }
    auto fs = morphisms_within_budget(A, *t2);
    if (!fs) return;
    const auto proj = product_presentation({three, three}).projection(0);
    const Morphism g(t2, three, proj.map());
    const auto qg = q_functor(q33, q3, g);
    for (const auto& f : *fs)
        ensure(q_functor(qa, q3, compose(g, f)) == compose(qg, q_functor(qa, q33, f)), "Q preserves composition",
               {A.name()});
}

void check_onesum(const Multiring& A) {
    if (!classify(A).hyperfield) throw Skip("not a hyperfield");
    require_semireal(A);
    (void)hyperfield_representation_check(A);
}

void check_sheaf2(const Multiring& A) {
    for (Element a = 0; a < A.size(); ++a) {
        const auto s = saturation(A, a);
        ensure(s == saturation_by_definition(A, a) && s == saturation_by_primes(A, a),
               "S_a by definition and by primes agree", {A.element_name(a)});
        const auto I = principal_ideal(A, a);
        ensure(radical_by_powers(A, I) == radical_by_primes(A, I), "radicals by powers and by primes agree",
               {A.element_name(a)});
    }
    check_basic_open_order(A);
    (void)build_presheaf(A);
    const bool expect = is_hyperring(A) || is_rrm(A);
    for (Element a = 0; a < A.size(); ++a) {
        const bool inv = has_invertible_property(A, a);
        if (expect) ensure(inv, "every element is invertible in the sense of A_a = S_a^-1 A", {A.element_name(a)});
    }
}

void check_fiber(const Multiring& A) {
    const auto F = build_presheaf(A);
    for (std::size_t p = 0; p < spec(A).size(); ++p) (void)stalk(F, p);
    check_fiber_to_open(A);
}

void check_cvn(const Multiring& A) {
    require_hyperring(A);
    (void)check_vnh(A);
}

void check_geovon(const Multiring& A) {
    require_vnh(A);
    const auto g = check_geometric(A);
    ensure(is_monopresheaf(A) == g.geometric, "the presheaf is mono exactly for geometric A", {A.name()});
    if (g.geometric) ensure(is_sheaf(A), "the presheaf of a geometric von Neumann hyperring is a sheaf", {A.name()});
}

void check_orth(const Multiring& A) {
    require_vnh(A);
    const auto ps = partitions(A);
    (void)s_u(A);
    if (is_geometric(A))
        for (const auto& p : ps)
            if (p.of_unity(A))
                ensure(p.sum == A.singleton(A.one()), "partitions of unity sum to {1} in geometric A", {A.name()});
    const auto& S = spec(A);
    if (S.size() > 12) return;
    std::set<Subset> opens;
    idempotents(A).for_each([&](Element e) { opens.insert(S.basic_open(e)); });
    ensure(opens.size() == (std::size_t{1} << S.size()), "every clopen of spec(A) is D(e) for an idempotent e",
           {A.name()});
}

void check_quovn(const Multiring& A) {
    require_vnh(A);
    std::vector<MultiplicativeSet> sets = singly_generated(A);
    if (A.size() <= 12)
        for (Element a = 0; a < A.size(); ++a)
            for (Element b = a + 1; b < A.size(); ++b) {
                auto g = A.singleton(a);
                g.insert(b);
                sets.push_back(MultiplicativeSet::generated(A, g));
            }
    std::set<Subset> seen;
    for (const auto& S : sets) {
        if (S.contains(A.zero()) || !seen.insert(S.elements()).second) continue;
        const bool vn = is_vn_subgroup(S);
        ensure(vn == is_vn_subgroup(cancellative_closure(S)), "S and its cancellative closure agree",
               {name_of(A, S.elements())});
    }
}

void check_geohull(const Multiring& A) {
    require_vnh(A);
    const auto limit = Budget::defaults().search_size * Budget::defaults().search_size;
    std::vector<MultiringPtr> targets;
    for (const auto& B : gvnh_targets())
        if (A.size() * B->size() <= limit) targets.push_back(B);
    const auto g = geometric_hull(A, targets);
    ensure(is_bijective(geometric_hull(*g.result).proj), "the geometric hull of a geometric hull is itself",
           {A.name()});
    if (is_geometric(A)) ensure(is_bijective(g.proj), "a geometric A is its own geometric hull", {A.name()});
}

void check_nablai(const Multiring& A) {
    require_vnh(A);
    if (!is_geometric(A)) throw Skip("not geometric");
    const auto& fr = idempotent_frame(A);
    for (Element x = 0; x < A.size(); ++x)
        for (Element y = 0; y < A.size(); ++y)
            ensure((x == y) == (fr.i[x] == fr.i[y] && (*fr.nabla)[x] == (*fr.nabla)[y]),
                   "x = y exactly when i and nabla agree", {A.element_name(x), A.element_name(y)});
    for (const auto& B : gvnh_targets()) {
        auto fs = morphisms_within_budget(A, *B);
        if (!fs) continue;
        const auto& fb = idempotent_frame(*B);
        for (const auto& f : *fs)
            for (Element a = 0; a < A.size(); ++a)
                ensure(f(fr.i[a]) == fb.i[f(a)] && f(fr.comp[a]) == fb.comp[f(a)] &&
                           f((*fr.nabla)[a]) == (*fb.nabla)[f(a)],
                       "morphisms commute with i, complement and nabla", {A.element_name(a), B->name()});
    }
}

void check_gvnhr(const Multiring& A) { (void)rrm_vnh_equivalence(A); }

void check_reprevn(const Multiring& A) {
    require_semireal(A);
    require_vnh(A);
    (void)represent_q(Preorder::sums_of_squares(A));
}

void check_inthull(const Multiring& A) {
    if (!is_gvnh(A)) throw Skip("not a geometric von Neumann hyperring");
    const auto h = hull(A);
    ensure(is_isomorphism(h.v), "v_A is an isomorphism for geometric von Neumann A", {A.name()});
}

void check_unipgvnh(const Multiring& A) {
    const auto h = hull(A);
    for (const auto& B : gvnh_targets()) {
        auto fs = morphisms_within_budget(A, *B);
        if (!fs) continue;
        for (const auto& f : *fs) (void)hull_universal(f, h);
    }
}

void check_algva(const Multiring& A) {
    const auto h = hull(A);
    (void)verify_hull_theorem(h);
    ensure(is_isomorphism(hull(*h.result()).v), "V(V(A)) = V(A)", {A.name()});
}

void check_rrmhff(const Multiring& A) {
    if (!is_rrm(A)) throw Skip("not real reduced");
    for (const auto& p : spec(A).primes())
        ensure(is_real_reduced_hyperfield(*residue_hyperfield(PrimeIdeal::of(A, p)).result),
               "residues of a real reduced multiring are real reduced hyperfields", {name_of(A, p)});
}

void check_gvnhrrm(const Multiring& A) {
    const bool rrm = is_rrm(A);
    const bool vnh_sr = is_hyperring(A) && is_vnh(A) && is_semireal(A);
    if (!rrm && !vnh_sr) throw Skip("neither real reduced nor a semi-real von Neumann hyperring");
    if (rrm) ensure(is_rrm(*hull(A).result()), "V(A) of a real reduced A is real reduced", {A.name()});
    if (vnh_sr) ensure(is_vnh(*q_of(A).result), "Q(A) of a von Neumann hyperring is von Neumann", {A.name()});
}

void check_qvvq(const Multiring& A) {
    require_semireal(A);
    (void)qvvq(A);
}

// Fails for the non-geometric 3x3/m<-1> (P = 2, residues give 1), so only geometric A.
void check_pyth(const Multiring& A) {
    require_vnh(A);
    if (!is_geometric(A)) throw Skip("not geometric");
    std::size_t best = 0;
    for (const auto& p : spec(A).primes())
        best = std::max(best, pythagoras_number(*residue_hyperfield(PrimeIdeal::of(A, p)).result).number);
    const auto P = pythagoras_number(A).number;
    ensure(P == best, "P(A) is the largest P(K_A(q))", {std::to_string(P), std::to_string(best)});
}

auto build() -> std::vector<Theorem> {
    return {
        {"PIT", "prime ideal theorem, basic opens, maximal ideals are prime", check_pit},
        {"IDEALQ", "quotients by ideals", check_idealq},
        {"LOCALQ", "localizations", check_localq},
        {"MARSHQ", "Marshall quotients", check_marshq},
        {"KAP", "A_p / pA_p is the residue hyperfield", check_kap},
        {"CONES", "prime cones are orders", check_cones},
        {"QMULT", "Q_T(A) sums are lifted sums", check_qmult},
        {"PIISO", "A -> Q(A) is an isomorphism exactly for real reduced A", check_piiso},
        {"UNIPRO", "universal property and functoriality of Q", check_unipro},
        {"ONESUM", "representations of a semi-real hyperfield", check_onesum},
        {"SHEAF2", "saturations, basic open order, invertible elements", check_sheaf2},
        {"FIBER", "stalks are the local multirings", check_fiber},
        {"CVN", "characterizations of von Neumann hyperrings", check_cvn},
        {"GEOVON", "geometric exactly when the presheaf is mono", check_geovon},
        {"ORTH", "partitions of unity and idempotents", check_orth},
        {"QUOVN", "von Neumann subgroups and geometric quotients", check_quovn},
        {"GEOHULL", "geometric hull A /m S_u", check_geohull},
        {"NABLAI", "i, complement and nabla", check_nablai},
        {"GVNHR", "real reduced hyperrings", check_gvnhr},
        {"REPREVN", "Q_T(A) = A /m (1 + T)", check_reprevn},
        {"INTHULL", "v_A is an isomorphism on geometric von Neumann hyperrings", check_inthull},
        {"UNIPGVNH", "universal property of V(A)", check_unipgvnh},
        {"ALGVA", "spec, sper and residues of V(A)", check_algva},
        {"RRMHFF", "residues of real reduced multirings", check_rrmhff},
        {"GVNHRRM", "V preserves real reduced, Q preserves von Neumann", check_gvnhrrm},
        {"QVVQ", "Q(V(A)) = V(Q(A))", check_qvvq},
        {"PYTH", "Pythagorean number through residues", check_pyth},
    };
}

}  // namespace

auto status_name(Status s) -> std::string {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Skipped: return "skipped";
    }
    return "?";
}

auto parse_status(const std::string& s) -> Status {
    if (s == "pass") return Status::Pass;
    if (s == "fail") return Status::Fail;
    if (s == "skipped") return Status::Skipped;
    throw PreconditionFailed("unknown status '" + s + "'");
}

auto theorem_registry() -> const std::vector<Theorem>& {
    static const auto reg = build();
    return reg;
}

auto find_theorem(const std::string& id) -> const Theorem* {
    for (const auto& t : theorem_registry())
        if (t.id == id) return &t;
    return nullptr;
}

auto run_theorem(const Theorem& t, const Instance& inst) -> VerificationReport {
    VerificationReport r{t.id, inst.id, Status::Pass, {}, {}, 0};
    const auto start = std::chrono::steady_clock::now();
    try {
        t.check(*inst.ring);
    } catch (const Skip& e) {
        r.status = Status::Skipped;
        r.reason = e.what();
    } catch (const BudgetExceeded& e) {
        r.status = Status::Skipped;
        r.reason = std::string("budget: ") + e.what();
    } catch (const TheoremViolation& e) {
        r.status = Status::Fail;
        r.reason = e.claim();
        r.witness = e.witness();
    } catch (const ValidationError& e) {
        r.status = Status::Fail;
        r.reason = e.what();
    } catch (const Error& e) {
        r.status = Status::Fail;
        r.reason = e.what();
    }
    if (r.status == Status::Fail && r.witness.empty()) r.witness = {inst.id};
    r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

auto verify(const std::vector<const Theorem*>& theorems, const std::vector<Instance>& instances)
    -> std::vector<VerificationReport> {
    std::vector<VerificationReport> out;
    for (const auto* t : theorems)
        for (const auto& i : instances) out.push_back(run_theorem(*t, i));
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return std::tie(a.theorem, a.instance) < std::tie(b.theorem, b.instance);
    });
    return out;
}

}  // namespace hyperring::cli
