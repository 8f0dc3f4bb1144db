#include "hyperring/presheaf.hpp"

#include <algorithm>

namespace hyperring {

auto StructuralPresheaf::restriction(std::size_t from, std::size_t to) const -> const Morphism& {
    auto it = restrictions.find({from, to});
    if (it == restrictions.end()) throw PreconditionFailed("no restriction between these opens");
    return it->second;
}

auto StructuralPresheaf::open_index(const Subset& u) const -> std::optional<std::size_t> {
    auto it = std::lower_bound(opens.begin(), opens.end(), u);
    if (it != opens.end() && *it == u) return static_cast<std::size_t>(it - opens.begin());
    return std::nullopt;
}

auto build_presheaf(const Multiring& A) -> StructuralPresheaf {
    const auto& S = spec(A);
    StructuralPresheaf F;
    F.owner = A.ptr();
    for (Element a = 0; a < A.size(); ++a) F.opens.push_back(S.basic_open(a));
    std::sort(F.opens.begin(), F.opens.end());
    F.opens.erase(std::unique(F.opens.begin(), F.opens.end()), F.opens.end());

    const auto k = F.opens.size();
    F.generators.assign(k, A.size());
    F.saturations.assign(k, A.empty_set());
    F.open_of.resize(A.size());
    for (Element a = 0; a < A.size(); ++a) {
        const auto i = *F.open_index(S.basic_open(a));
        F.open_of[a] = i;
        auto sat = saturation(A, a);
        if (F.generators[i] == A.size()) {
            F.generators[i] = a;
            F.saturations[i] = std::move(sat);
        } else {
            ensure(sat == F.saturations[i], "D(a) = D(b) implies S_a = S_b",
                   {A.element_name(a), A.element_name(F.generators[i])});
        }
    }
    for (std::size_t i = 0; i < k; ++i) {
        F.sections.push_back(localize(MultiplicativeSet::of(A, F.saturations[i])));
        ensure(F.sections.back().result->is_zero_ring() == F.opens[i].empty(),
               "the section over D(a) is zero exactly when D(a) is empty", {A.element_name(F.generators[i])});
    }

    const auto id = identity(A);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (F.opens[j].is_subset_of(F.opens[i])) {
                auto r = induced_map_localization(id, F.sections[i], F.sections[j]);
                ensure(compose(r, F.sections[i].rho) == F.sections[j].rho, "restriction commutes with the maps from A");
                F.restrictions.emplace(std::pair{i, j}, std::move(r));
            }
    for (std::size_t i = 0; i < k; ++i) {
        ensure(F.restriction(i, i) == identity(*F.sections[i].result), "restriction to the same open is the identity");
        for (std::size_t j = 0; j < k; ++j) {
            if (!F.opens[j].is_subset_of(F.opens[i])) continue;
            for (std::size_t l = 0; l < k; ++l)
                if (F.opens[l].is_subset_of(F.opens[j]))
                    ensure(F.restriction(i, l) == compose(F.restriction(j, l), F.restriction(i, j)),
                           "restrictions compose along chains of opens");
        }
    }
    return F;
}

auto stalk(const StructuralPresheaf& F, std::size_t p) -> Stalk {
    const auto& A = *F.owner;
    const auto& S = spec(A);
    std::optional<std::size_t> least;
    for (std::size_t i = 0; i < F.opens.size(); ++i) {
        if (!F.opens[i].contains(p)) continue;
        if (!least || F.opens[i].is_subset_of(F.opens[*least])) least = i;
    }
    ensure(least.has_value(), "every prime lies in some basic open");
    for (std::size_t i = 0; i < F.opens.size(); ++i)
        if (F.opens[i].contains(p))
            ensure(F.opens[*least].is_subset_of(F.opens[i]), "the basic opens around a prime have a least member");

    auto local = local_at(PrimeIdeal::of(A, S.prime(p)));
    const auto id = identity(A);
    auto iso = induced_map_localization(id, F.sections[*least], local);
    ensure(is_isomorphism(iso), "the stalk is isomorphic to A_p", {A.name()});
    ensure(compose(iso, F.sections[*least].rho) == local.rho, "the stalk map commutes with the maps from A");
    for (std::size_t i = 0; i < F.opens.size(); ++i) {
        if (!F.opens[i].contains(p)) continue;
        auto to_local = induced_map_localization(id, F.sections[i], local);
        ensure(to_local == compose(iso, F.restriction(i, *least)), "the maps to A_p form a cocone");
    }
    return {*least, std::move(local), std::move(iso)};
}

auto irredundant_covers(const StructuralPresheaf& F, std::size_t u) -> std::vector<std::vector<std::size_t>> {
    std::vector<std::size_t> inside;
    for (std::size_t i = 0; i < F.opens.size(); ++i)
        if (!F.opens[i].empty() && F.opens[i].is_subset_of(F.opens[u])) inside.push_back(i);
    if (inside.size() > 20) throw BudgetExceeded("too many basic opens for cover enumeration");

    std::vector<std::vector<std::size_t>> out;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << inside.size()); ++mask) {
        std::vector<std::size_t> fam;
        for (std::size_t b = 0; b < inside.size(); ++b)
            if (mask >> b & 1U) fam.push_back(inside[b]);
        Subset all(F.opens[u].universe());
        for (auto i : fam) all |= F.opens[i];
        if (all != F.opens[u]) continue;
        bool irredundant = true;
        for (std::size_t x = 0; x < fam.size() && irredundant; ++x) {
            Subset others(all.universe());
            for (std::size_t y = 0; y < fam.size(); ++y)
                if (y != x) others |= F.opens[fam[y]];
            irredundant = !F.opens[fam[x]].is_subset_of(others);
        }
        if (irredundant) out.push_back(std::move(fam));
    }
    return out;
}

namespace {

auto describe_cover(const StructuralPresheaf& F, std::size_t u, const std::vector<std::size_t>& fam) -> std::string {
    const auto& A = *F.owner;
    std::string s = "D(" + A.element_name(F.generators[u]) + ") =";
    for (auto i : fam) s += " D(" + A.element_name(F.generators[i]) + ")";
    return s;
}

// Mono condition: a in b + c whenever it holds after every restriction.
auto check_mono(const StructuralPresheaf& F, std::size_t u, const std::vector<std::size_t>& fam, SheafCheck& out)
    -> bool {
    const auto& Au = *F.sections[u].result;
    for (Element b = 0; b < Au.size(); ++b)
        for (Element c = b; c < Au.size(); ++c)
            for (Element a = 0; a < Au.size(); ++a) {
                if (Au.add(b, c).contains(a)) continue;
                bool everywhere = true;
                for (auto i : fam) {
                    const auto& r = F.restriction(u, i);
                    everywhere = everywhere && r.cod().add(r(b), r(c)).contains(r(a));
                }
                if (everywhere) {
                    out.mono = false;
                    out.witness = {describe_cover(F, u, fam), Au.element_name(a), Au.element_name(b),
                                   Au.element_name(c)};
                    return false;
                }
            }
    return true;
}

// Gluing: every compatible family comes from a section over the union.
auto check_glue(const StructuralPresheaf& F, std::size_t u, const std::vector<std::size_t>& fam, SheafCheck& out)
    -> bool {
    const auto& Au = *F.sections[u].result;
    std::vector<std::vector<Element>> images;
    for (Element x = 0; x < Au.size(); ++x) {
        std::vector<Element> t;
        for (auto i : fam) t.push_back(F.restriction(u, i)(x));
        images.push_back(std::move(t));
    }
    std::sort(images.begin(), images.end());

    const auto& A = *F.owner;
    // pairwise intersections are the opens D(e_i e_j)
    std::vector<std::vector<std::size_t>> meet(fam.size(), std::vector<std::size_t>(fam.size()));
    for (std::size_t x = 0; x < fam.size(); ++x)
        for (std::size_t y = 0; y < fam.size(); ++y) {
            const auto prod = A.mul(F.generators[fam[x]], F.generators[fam[y]]);
            meet[x][y] = F.open_of[prod];
            ensure(F.opens[meet[x][y]] == (F.opens[fam[x]] & F.opens[fam[y]]), "D(ab) = D(a) n D(b)");
        }

    std::vector<Element> cur;
    bool ok = true;
    auto rec = [&](auto&& self) -> void {
        if (!ok) return;
        const auto x = cur.size();
        if (x == fam.size()) {
            if (!std::binary_search(images.begin(), images.end(), cur)) {
                ok = false;
                out.glue = false;
                out.witness = {describe_cover(F, u, fam)};
                for (std::size_t i = 0; i < cur.size(); ++i)
                    out.witness.push_back(F.sections[fam[i]].result->element_name(cur[i]));
            }
            return;
        }
        const auto& Ax = *F.sections[fam[x]].result;
        for (Element v = 0; v < Ax.size() && ok; ++v) {
            bool compatible = true;
            for (std::size_t y = 0; y < x && compatible; ++y) {
                const auto m = meet[x][y];
                compatible = F.restriction(fam[x], m)(v) == F.restriction(fam[y], m)(cur[y]);
            }
            if (!compatible) continue;
            cur.push_back(v);
            self(self);
            cur.pop_back();
        }
    };
    rec(rec);
    return ok;
}

}  // namespace

auto check_sheaf(const StructuralPresheaf& F) -> SheafCheck {
    SheafCheck out;
    // sections over the empty open are the zero multiring; nothing to check there
    for (std::size_t u = 0; u < F.opens.size(); ++u) {
        if (F.opens[u].empty()) continue;
        for (const auto& fam : irredundant_covers(F, u)) {
            if (out.mono && !check_mono(F, u, fam, out)) return out;
            if (out.glue && !check_glue(F, u, fam, out)) return out;
        }
    }
    return out;
}

auto is_monopresheaf(const Multiring& A) -> bool {
    const auto F = build_presheaf(A);
    SheafCheck out;
    for (std::size_t u = 0; u < F.opens.size(); ++u) {
        if (F.opens[u].empty()) continue;
        for (const auto& fam : irredundant_covers(F, u))
            if (!check_mono(F, u, fam, out)) return false;
    }
    return true;
}

auto is_sheaf(const Multiring& A) -> bool { return check_sheaf(build_presheaf(A)).sheaf(); }

auto check_invertible(const Multiring& A, Element a) -> InvertibleCheck {
    const auto Aa = localize(MultiplicativeSet::generated(A, A.singleton(a)));
    const auto Sa = MultiplicativeSet::of(A, saturation(A, a));
    const auto SaA = localize(Sa);
    const auto U = units(*Aa.result);
    InvertibleCheck r;

    r.image_units = Aa.rho.image(Sa.elements()).is_subset_of(U);
    r.weak_units = weak_units(*Aa.result) == U;

    Subset divides = A.empty_set();
    A.powers(a).for_each([&](Element an) {
        for (Element x = 0; x < A.size(); ++x)
            for (Element y = 0; y < A.size(); ++y)
                if (A.mul(x, y) == an) divides.insert(x);
    });
    r.divisors = divides == Sa.elements();

    auto bar = induced_map_localization(identity(A), Aa, SaA);
    r.iso = is_isomorphism(bar);

    ensure(r.image_units == r.weak_units && r.weak_units == r.divisors && r.divisors == r.iso,
           "the four a-invertible clauses agree", {A.name(), A.element_name(a)});
    return r;
}

auto has_invertible_property(const Multiring& A, Element a) -> bool { return check_invertible(A, a).iso; }

void check_basic_open_order(const Multiring& A) {
    const auto& S = spec(A);
    std::vector<Subset> rad(A.size()), sat(A.size());
    for (Element a = 0; a < A.size(); ++a) {
        rad[a] = radical_by_powers(A, principal_ideal(A, a));
        sat[a] = saturation(A, a);
    }
    for (Element a = 0; a < A.size(); ++a)
        for (Element b = 0; b < A.size(); ++b) {
            const bool d = S.basic_open(a).is_subset_of(S.basic_open(b));
            const bool r = rad[a].is_subset_of(rad[b]);
            const bool m = rad[b].contains(a);
            const bool s = sat[b].is_subset_of(sat[a]);
            ensure(d == r && r == m && m == s, "D(a) in D(b), sqrt(a) in sqrt(b), a in sqrt(b), S_b in S_a agree",
                   {A.element_name(a), A.element_name(b)});
        }
}

void check_fiber_to_open(const Multiring& A) {
    const auto& S = spec(A);
    std::vector<std::optional<LocalizationPresentation>> Ax(A.size());
    for (std::size_t i = 0; i < S.size(); ++i) {
        const auto& p = S.prime(i);
        const auto Ap = local_at(PrimeIdeal::of(A, p));
        const auto& L = *Ap.result;
        for (Element b = 0; b < A.size(); ++b)
            for (Element c = b; c < A.size(); ++c)
                for (Element a = 0; a < A.size(); ++a) {
                    if (!L.add(Ap.rho(b), Ap.rho(c)).contains(Ap.rho(a))) continue;
                    std::optional<Element> found;
                    for (Element x = 0; x < A.size() && !found; ++x)
                        if (!p.contains(x) && A.add(A.mul(b, x), A.mul(c, x)).contains(A.mul(a, x))) found = x;
                    ensure(found.has_value(), "a in b + c in A_p is witnessed by some x outside p",
                           {A.element_name(a), A.element_name(b), A.element_name(c)});
                    auto& loc = Ax[*found];
                    if (!loc) loc = localize(MultiplicativeSet::generated(A, A.singleton(*found)));
                    ensure(loc->result->add(loc->rho(b), loc->rho(c)).contains(loc->rho(a)),
                           "a in b + c holds in A_x", {A.element_name(a), A.element_name(*found)});
                }
    }
}

}  // namespace hyperring
