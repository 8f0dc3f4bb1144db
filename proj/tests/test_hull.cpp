#include "helpers.hpp"
#include "hyperring/hull.hpp"
#include "hyperring/vonneumann.hpp"

using namespace hyperring;
using testing::builtin;
using testing::el;
using testing::set;

namespace {

auto iso(const Multiring& A, const Multiring& B) -> bool { return find_isomorphism(A, B).has_value(); }

}  // namespace

TEST_CASE("hulls of small instances") {
    CHECK(iso(*hull(*sign3()).result(), *sign3()));
    const auto t2 = builtin("3x3");
    const auto h2 = hull(*t2);
    CHECK(iso(*h2.result(), *t2));
    CHECK(is_bijective(h2.v));
    const auto hz = hull(*zmod(6));
    CHECK(iso(*hz.result(), *product({zmod(2), zmod(3)})));
    CHECK(is_isomorphism(hz.v));
    CHECK(iso(*hull(*builtin("KxK")).result(), *builtin("KxK")));
}

TEST_CASE("hull shape on every builtin") {
    for (const auto& i : cli::builtin_registry()) {
        const auto& A = *i.ring;
        CAPTURE(i.id);
        const auto h = hull(A);
        std::size_t size = 1;
        for (const auto& r : h.residues) size *= r.result->size();
        CHECK(h.result()->size() == size);
        CHECK(h.residues.size() == spec(A).size());
        CHECK(is_morphism(h.v));
        CHECK(is_gvnh(*h.result()));
        CHECK(is_bijective(h.v) == is_gvnh(A));
        // idempotent up to isomorphism
        const auto hh = hull(*h.result());
        CHECK(is_isomorphism(hh.v));
    }
}

TEST_CASE("hull of a ring is a ring") {
    for (std::size_t n = 2; n <= 12; ++n) {
        const auto V = hull(*zmod(n)).result();
        for (Element a = 0; a < V->size(); ++a)
            for (Element b = 0; b < V->size(); ++b) CHECK(V->add(a, b).count() == 1);
    }
}

TEST_CASE("hull maps") {
    const auto t2 = builtin("3x3");
    const auto h = hull(*t2);
    CHECK(hull_map(identity(*t2), h, h) == identity(*h.result()));
    const auto three = sign3();
    const auto pres = product_presentation({three, three});
    const auto f = pres.projection(0);
    const auto va = hull(*pres.result);
    const auto vb = hull(*three);
    const auto Vf = hull_map(f, va, vb);
    CHECK(compose(Vf, va.v) == compose(vb.v, f));
    // under the isomorphisms v, V(f) is the projection
    CHECK(compose(Vf, va.v).map() == compose(vb.v, f).map());
    const auto K = krasner();
    for (const std::string id : {"Z6", "3x3", "Z12"}) {
        const auto A = builtin(id);
        const auto hA = hull(*A);
        const auto hK = hull(*K);
        for (const auto& chi : enumerate_morphisms(*A, *K)) {
            const auto Vchi = hull_map(chi, hA, hK);
            CHECK(compose(Vchi, hA.v) == compose(hK.v, chi));
        }
    }
}

TEST_CASE("universal property of the hull") {
    const auto z6 = zmod(6);
    const auto h = hull(*z6);
    CHECK(hull_universal(h.v, h) == identity(*h.result()));
    // mod 2: picks the residue coordinate at (2)
    const auto z2 = zmod(2);
    const Morphism mod2(z6, z2, {0, 1, 0, 1, 0, 1});
    REQUIRE(is_morphism(mod2));
    const auto fbar = hull_universal(mod2, h);
    CHECK(compose(fbar, h.v) == mod2);
    const auto p2 = spec(*z6).index_of(set(*z6, {"0", "2", "4"}));
    REQUIRE(p2);
    for (Element s = 0; s < h.result()->size(); ++s) {
        const auto coords = h.product.decode(s);
        // the (2) residue is Z2; fbar reads that coordinate
        CHECK(h.residues[*p2].result->element_name(coords[*p2]) == z2->element_name(fbar(s)));
    }
    const auto t2 = builtin("3x3");
    const auto ht = hull(*t2);
    for (const auto& s : enumerate_sper(*t2)) {
        const auto g = hull_universal(s.as_morphism(), ht);
        CHECK(compose(g, ht.v).map() == s.as_morphism().map());
    }
    const auto z4 = zmod(4);
    CHECK_THROWS_AS(hull_universal(identity(*z4), hull(*z4)), CodomainNotGvNH);
}

TEST_CASE("spectrum, orders and residues of the hull") {
    for (const auto& i : cli::builtin_registry()) {
        const auto& A = *i.ring;
        CAPTURE(i.id);
        const auto r = verify_hull_theorem(hull(A));
        CHECK(r.spec_map.size() == spec(A).size());
        CHECK(r.orders == enumerate_sper(A).size());
        for (const auto& m : r.residue_isos) CHECK(is_isomorphism(m));
    }
    const auto r = verify_hull_theorem(hull(*zmod(6)));
    REQUIRE(r.residue_isos.size() == 2);
}

TEST_CASE("Q and V commute") {
    for (const std::string id : {"3", "3x3"}) {
        const auto A = builtin(id);
        const auto r = qvvq(*A);
        CHECK(is_isomorphism(r.f));
        CHECK(iso(*r.qva.result, *A));
    }
    for (const auto& i : cli::builtin_registry()) {
        if (!is_semireal(*i.ring)) {
            CHECK_THROWS_AS(qvvq(*i.ring), NotSemireal);
            continue;
        }
        const auto r = qvvq(*i.ring);
        CHECK_MESSAGE(is_isomorphism(r.f), i.id);
        CHECK(compose(r.g, r.f) == identity(*r.qva.result));
        if (classify(*i.ring).hyperfield) CHECK(iso(*r.qva.result, *q_of(*i.ring).result));
    }
}

TEST_CASE("hull checkers") {
    for (const std::string id : {"INTHULL", "UNIPGVNH", "ALGVA", "RRMHFF", "GVNHRRM", "QVVQ"}) {
        CAPTURE(id);
        testing::theorem_passes(id);
    }
}
