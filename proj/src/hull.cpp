#include "hyperring/hull.hpp"

#include <algorithm>

#include "hyperring/vonneumann.hpp"

namespace hyperring {

namespace {

// i, complement and nabla computed coordinate-wise in the residue hyperfields.
void check_pointwise_operators(const HullPresentation& h) {
    const auto& V = *h.result();
    const auto& fr = idempotent_frame(V);
    ensure(fr.nabla.has_value(), "V(A) is geometric", {h.source->name()});
    for (Element f = 0; f < V.size(); ++f) {
        const auto c = h.product.decode(f);
        std::vector<Element> i(c.size()), comp(c.size()), nab(c.size());
        for (std::size_t p = 0; p < c.size(); ++p) {
            const auto& K = *h.product.factors[p];
            const bool zero = c[p] == K.zero();
            i[p] = zero ? K.zero() : K.one();
            comp[p] = zero ? K.one() : K.zero();
            nab[p] = zero ? K.minus_one() : c[p];
        }
        const auto fi = fr.i[f];
        const auto fc = fr.comp[f];
        const auto fn = (*fr.nabla)[f];
        ensure(fi == h.product.encode(i), "i(f) is 1 exactly where f is nonzero", {V.element_name(f)});
        ensure(fc == h.product.encode(comp), "f^c is 1 exactly where f is zero", {V.element_name(f)});
        ensure(fn == h.product.encode(nab), "nabla(f) is f where f is nonzero and -1 elsewhere", {V.element_name(f)});
        ensure(V.mul(fi, fi) == fi && V.mul(fc, fc) == fc, "i(f) and f^c are idempotent", {V.element_name(f)});
        ensure(V.mul(f, fc) == V.zero(), "f f^c = 0", {V.element_name(f)});
        ensure(V.diff(V.one(), fi).contains(fc), "f^c in 1 - i(f)", {V.element_name(f)});
        ensure(V.mul(fn, fi) == f, "f = nabla(f) i(f)", {V.element_name(f)});
    }
}

}  // namespace

auto hull(const Multiring& A, const Budget& budget) -> HullPresentation {
    const auto& S = spec(A);
    std::vector<ResidueField> residues;
    std::vector<MultiringPtr> factors;
    std::size_t total = 1;
    for (const auto& p : S.primes()) {
        residues.push_back(residue_hyperfield(PrimeIdeal::of(A, p)));
        total *= residues.back().result->size();
        if (total > budget.max_elements)
            throw BudgetExceeded("hull of " + A.name() + " exceeds " + std::to_string(budget.max_elements) + " elements");
        factors.push_back(residues.back().result);
    }
    auto prod = product_presentation(factors, "V(" + A.name() + ")");

    std::vector<Element> m(A.size());
    for (Element a = 0; a < A.size(); ++a) {
        std::vector<Element> c;
        for (const auto& k : residues) c.push_back(k.canonical(a));
        m[a] = prod.encode(c);
    }
    Morphism v(A.ptr(), prod.result, std::move(m));
    ensure(is_morphism(v), "v_A is a morphism", {A.name()});
    HullPresentation h{A.ptr(), std::move(residues), std::move(prod), std::move(v)};

    const auto& V = *h.result();
    ensure(is_hyperring(V) && is_vnh(V), "V(A) is a von Neumann hyperring", {A.name()});
    check_pointwise_operators(h);
    if (A.is_ring()) ensure(V.is_ring(), "the hull of a ring is a ring", {A.name()});
    return h;
}

auto residue_map(const Morphism& f, const ResidueField& Kq, const ResidueField& Kp) -> Morphism {
    ensure(f.preimage(Kp.prime) == Kq.prime, "residue map between a prime and its preimage");
    const auto& Q = *Kq.result;
    std::vector<Element> m(Q.size());
    for (Element k = 0; k < Q.size(); ++k) {
        const auto [a, s] = Kq.representative(k);
        m[k] = Kp.fraction(f(a), f(s));
    }
    const auto& A = f.dom();
    for (Element a = 0; a < A.size(); ++a)
        for (Element s = 0; s < A.size(); ++s)
            if (!Kq.prime.contains(s))
                ensure(m[Kq.fraction(a, s)] == Kp.fraction(f(a), f(s)), "a/s |-> f(a)/f(s) is well defined");
    Morphism g(Kq.result, Kp.result, std::move(m));
    ensure(is_morphism(g), "the residue map is a morphism");
    return g;
}

auto hull_map(const Morphism& f, const HullPresentation& va, const HullPresentation& vb) -> Morphism {
    if (va.source != f.dom_ptr() || vb.source != f.cod_ptr())
        throw PreconditionFailed("hull presentations do not match the morphism");
    const auto back = spectral_map(f);
    std::vector<Morphism> fp;
    for (std::size_t p = 0; p < back.size(); ++p) fp.push_back(residue_map(f, va.residues[back[p]], vb.residues[p]));

    const auto& VA = *va.result();
    std::vector<Element> m(VA.size());
    for (Element s = 0; s < VA.size(); ++s) {
        const auto c = va.product.decode(s);
        std::vector<Element> out(back.size());
        for (std::size_t p = 0; p < back.size(); ++p) out[p] = fp[p](c[back[p]]);
        m[s] = vb.product.encode(out);
    }
    Morphism Vf(va.result(), vb.result(), std::move(m));
    ensure(is_morphism(Vf), "V(f) is a morphism");
    ensure(compose(Vf, va.v) == compose(vb.v, f), "V(f) o v_A = v_B o f");
    return Vf;
}

auto hull_universal(const Morphism& f, const HullPresentation& va) -> Morphism {
    const auto& B = f.cod();
    if (!is_gvnh(B)) throw CodomainNotGvNH(B.name() + " is not a geometric von Neumann hyperring");
    const auto vb = hull(B);
    ensure(is_isomorphism(vb.v), "v_B is an isomorphism for geometric von Neumann B", {B.name()});
    auto fbar = compose(inverse(vb.v), hull_map(f, va, vb));
    ensure(compose(fbar, va.v) == f, "f-bar o v_A = f");

    std::vector<Morphism> fillers;
    try {
        for (auto& g : enumerate_morphisms(*va.result(), B))
            if (compose(g, va.v) == f) fillers.push_back(std::move(g));
    } catch (const BudgetExceeded&) {
        return fbar;  // uniqueness only checked within the search budget
    }
    ensure(fillers.size() == 1 && fillers.front() == fbar, "the factorization through V(A) is unique",
           {va.source->name(), B.name()});
    return fbar;
}

auto verify_hull_theorem(const HullPresentation& h) -> HullTheoremReport {
    const auto& A = *h.source;
    const auto& V = *h.result();
    HullTheoremReport r;
    r.spec_map = spectral_map(h.v);
    const auto& SA = spec(A);
    auto sorted = r.spec_map;
    std::sort(sorted.begin(), sorted.end());
    ensure(sorted.size() == SA.size() && std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
           "spec(V(A)) -> spec(A) is a bijection", {A.name()});

    const auto sa = enumerate_sper(A);
    const auto sv = enumerate_sper(V);
    std::vector<std::vector<Sign>> pulled;
    for (const auto& s : sv) {
        std::vector<Sign> signs(A.size());
        for (Element a = 0; a < A.size(); ++a) signs[a] = s(h.v(a));
        pulled.push_back(std::move(signs));
    }
    std::sort(pulled.begin(), pulled.end());
    std::vector<std::vector<Sign>> direct;
    for (const auto& s : sa) direct.push_back(s.signs);
    std::sort(direct.begin(), direct.end());
    ensure(std::adjacent_find(pulled.begin(), pulled.end()) == pulled.end() && pulled == direct,
           "sper(V(A)) -> sper(A) is a bijection", {A.name()});
    r.orders = sv.size();

    for (std::size_t p = 0; p < r.spec_map.size(); ++p) {
        const auto Kp = residue_hyperfield(PrimeIdeal::of(V, spec(V).prime(p)));
        auto iso = residue_map(h.v, h.residues[r.spec_map[p]], Kp);
        ensure(is_isomorphism(iso), "K_A(q) -> K_V(A)(p) is an isomorphism", {A.name()});
        r.residue_isos.push_back(std::move(iso));
    }
    return r;
}

auto qvvq(const Multiring& A) -> QvvqReport {
    if (!is_semireal(A)) throw NotSemireal(A.name() + " is not semi-real");
    auto va = hull(A);
    ensure(is_semireal(*va.result()), "V(A) is semi-real", {A.name()});
    auto qa = q_of(A);
    auto qva = q_of(*va.result());
    auto vqa = hull(*qa.result);

    const auto v_pi = hull_map(qa.proj, va, vqa);
    const auto q_v = q_functor(qa, qva, va.v);
    ensure(compose(v_pi, va.v) == compose(vqa.v, qa.proj), "V(pi_A) o v_A = v_Q(A) o pi_A");
    ensure(compose(q_v, qa.proj) == compose(qva.proj, va.v), "Q(v_A) o pi_A = pi_V(A) o v_A");

    auto f = q_universal_check(qva, v_pi);
    auto g = hull_universal(q_v, vqa);
    ensure(compose(g, f) == identity(*qva.result), "g o f is the identity of Q(V(A))", {A.name()});
    ensure(compose(f, g) == identity(*vqa.result()), "f o g is the identity of V(Q(A))", {A.name()});
    return {std::move(va), std::move(qa), std::move(qva), std::move(vqa), std::move(f), std::move(g)};
}

}  // namespace hyperring
