#include "helpers.hpp"
#include "hyperring/realspec.hpp"
#include "oracles.hpp"

using namespace hyperring;
using testing::builtin;
using testing::el;
using testing::set;

namespace {

auto iso(const Multiring& A, const Multiring& B) -> bool { return find_isomorphism(A, B).has_value(); }

/// Cone axioms checked on every subset.
auto cone_count(const Multiring& A) -> std::size_t {
    std::size_t count = 0;
    oracle::for_each_subset(A.size(), [&](const oracle::Set& P) {
        for (Element a = 0; a < A.size(); ++a)
            if (!P.count(A.mul(a, a))) return;
        for (auto a : P)
            for (auto b : P) {
                if (!P.count(A.mul(a, b))) return;
                for (auto c : oracle::sum(A, a, b))
                    if (!P.count(c)) return;
            }
        oracle::Set support;
        for (Element a = 0; a < A.size(); ++a) {
            const bool in = P.count(a), neg = P.count(A.neg(a));
            if (!in && !neg) return;
            if (in && neg) support.insert(a);
        }
        count += oracle::is_prime(A, support);
    });
    return count;
}

/// Real reduced by the orders: A embeds in a power of 3 with the induced sums.
auto real_reduced_by_orders(const Multiring& A, const Multiring& three) -> bool {
    const auto sper = oracle::orders(A, three);
    if (sper.empty()) return false;
    auto sgn = [&](Element a) {
        std::vector<Element> v;
        for (const auto& s : sper) v.push_back(s[a]);
        return v;
    };
    for (Element a = 0; a < A.size(); ++a)
        for (Element b = a + 1; b < A.size(); ++b)
            if (sgn(a) == sgn(b)) return false;
    for (Element a = 0; a < A.size(); ++a)
        for (Element b = 0; b < A.size(); ++b) {
            const auto ab = oracle::sum(A, a, b);
            for (Element c = 0; c < A.size(); ++c) {
                bool pointwise = true;
                for (const auto& s : sper) pointwise = pointwise && oracle::sum(three, s[a], s[b]).count(s[c]);
                if (pointwise != static_cast<bool>(ab.count(c))) return false;
            }
        }
    return true;
}

}  // namespace

TEST_CASE("orders against the morphism oracle") {
    const auto three = sign3();
    REQUIRE(enumerate_sper(*three).size() == 1);
    CHECK(enumerate_sper(*three).front().as_morphism().map() == identity(*three).map());
    CHECK(enumerate_sper(*zmod(5)).empty());
    CHECK(enumerate_sper(*builtin("3x3")).size() == 2);
    for (const auto& i : cli::builtin_registry()) {
        const auto& A = *i.ring;
        CAPTURE(i.id);
        const auto sper = enumerate_sper(A);
        CHECK(sper.empty() != is_semireal(A));
        if (A.size() > 12) continue;
        auto ref = oracle::orders(A, *three);
        std::vector<std::vector<Element>> lib;
        for (const auto& s : sper) lib.push_back(s.as_morphism().map());
        std::sort(ref.begin(), ref.end());
        std::sort(lib.begin(), lib.end());
        CHECK(lib == ref);
    }
}

TEST_CASE("prime cones") {
    const auto three = sign3();
    const auto cones3 = prime_cones(*three);
    REQUIRE(cones3.size() == 1);
    CHECK(cones3.front() == set(*three, {"0", "1"}));
    CHECK(prime_cones(*krasner()).empty());
    for (const auto& i : cli::builtin_registry()) {
        const auto& A = *i.ring;
        CAPTURE(i.id);
        CHECK(prime_cones(A).size() == enumerate_sper(A).size());
        const auto b = cone_order_bijection(A);
        CHECK(b.cones.size() == b.orders.size());
        if (A.size() <= 12) CHECK(cone_count(A) == b.cones.size());
    }
}

TEST_CASE("semi-real instances") {
    CHECK(is_semireal(*sign3()));
    CHECK_FALSE(is_semireal(*zmod(2)));
    for (const std::string id : {"F3/sq", "F5/sq", "F7/sq", "F11/sq", "F13/sq"}) CHECK_FALSE(is_semireal(*builtin(id)));
}

TEST_CASE("preorders") {
    const auto three = sign3();
    const auto T3 = Preorder::sums_of_squares(*three);
    CHECK(T3.elements() == set(*three, {"0", "1"}));
    CHECK(T3.proper());
    const auto K = krasner();
    const auto TK = Preorder::sums_of_squares(*K);
    CHECK(TK.elements() == set(*K, {"0", "1"}));
    CHECK_FALSE(TK.proper());
    const auto F7 = builtin("F7/sq");
    const auto T7 = Preorder::sums_of_squares(*F7);
    CHECK(T7.elements() == set(*F7, {"0", "1", "-1"}));
    CHECK_FALSE(T7.proper());
    CHECK_THROWS_AS(q_construction(T7), EmptyRealSpectrum);
    CHECK_THROWS_AS(q_of(*zmod(3)), EmptyRealSpectrum);
}

TEST_CASE("real reduced multirings") {
    CHECK(is_rrm(*sign3()));
    CHECK_FALSE(is_rrm(*zmod(3)));
    CHECK(is_rrm(*builtin("3x3")));
    CHECK(is_rrm(*builtin("RS7")));
    const auto three = sign3();
    for (const auto& i : cli::builtin_registry()) {
        const auto& A = *i.ring;
        if (A.size() > 12) continue;
        CAPTURE(i.id);
        CHECK(is_rrm(A) == real_reduced_by_orders(A, *three));
    }
    CHECK(is_real_reduced_hyperfield(*three));
    CHECK_FALSE(is_real_reduced_hyperfield(*krasner()));
}

TEST_CASE("orders separate the points of a real reduced multiring") {
    for (const auto& i : cli::builtin_registry()) {
        const auto& A = *i.ring;
        if (!is_rrm(A)) continue;
        const auto sper = enumerate_sper(A);
        for (Element a = 0; a < A.size(); ++a)
            for (Element b = a + 1; b < A.size(); ++b) {
                bool separated = false;
                for (const auto& s : sper) separated = separated || s(a) != s(b);
                CHECK_MESSAGE(separated, i.id);
            }
    }
}

TEST_CASE("Q construction") {
    const auto three = sign3();
    CHECK(iso(*q_of(*three).result, *three));
    const auto t2 = builtin("3x3");
    const auto q = q_of(*t2);
    CHECK(iso(*q.result, *t2));
    CHECK(is_isomorphism(q.proj));
    for (const auto& i : cli::builtin_registry()) {
        const auto& A = *i.ring;
        if (!is_semireal(A)) continue;
        CAPTURE(i.id);
        const auto qa = q_of(A);
        CHECK(is_rrm(*qa.result));
        CHECK(is_isomorphism(qa.proj) == is_rrm(A));
        const auto lifted = q_lifted_sum(qa);
        const auto k = qa.result->size();
        for (Element x = 0; x < k; ++x)
            for (Element y = 0; y < k; ++y) CHECK(lifted[x * k + y] == qa.result->add(x, y));
        // universal property: pi itself factors as the identity
        CHECK(q_universal_check(qa, qa.proj) == identity(*qa.result));
        for (const auto& s : enumerate_sper(A)) CHECK(is_morphism(q_universal_check(qa, s.as_morphism())));
    }
    CHECK_THROWS_AS(q_of(*builtin("3x3/m<-1>")), EmptyRealSpectrum);
    CHECK(iso(*q_of(*builtin("3x3/m<(1,-1)>")).result, *three));
}

TEST_CASE("Q is functorial") {
    const auto three = sign3();
    const auto pres = product_presentation({three, three});
    const auto qa = q_of(*pres.result);
    const auto qb = q_of(*three);
    const auto f = pres.projection(0);
    const auto qf = q_functor(qa, qb, f);
    CHECK(compose(qf, qa.proj) == compose(qb.proj, f));
    CHECK(q_functor(qa, qa, identity(*pres.result)) == identity(*qa.result));
}

TEST_CASE("representations of semi-real hyperfields") {
    for (const std::string id : {"3", "3x3/(1,0)"}) {
        const auto F = builtin(id);
        const auto r = hyperfield_representation_check(*F);
        CHECK(is_isomorphism(r.one_plus_to_nonzero));
        CHECK(is_isomorphism(r.one_plus_to_q));
        CHECK(iso(*r.q.result, *sign3()));
    }
    CHECK_THROWS_AS(hyperfield_representation_check(*builtin("F13/sq")), NotSemireal);
    CHECK_THROWS_AS(hyperfield_representation_check(*zmod(6)), PreconditionFailed);
}

TEST_CASE("Pythagoras numbers") {
    CHECK(pythagoras_number(*krasner()).number == 1);
    CHECK(pythagoras_number(*sign3()).number == 1);
    for (const auto& i : cli::builtin_registry())
        if (i.ring->size() <= 12) CHECK_MESSAGE(pythagoras_number(*i.ring).number == oracle::pythagoras(*i.ring), i.id);
    // P(A x B) = max(P(A), P(B))
    const std::vector<std::pair<const char*, const char*>> pairs{
        {"Z4", "Z3"}, {"3", "Z3"}, {"K", "Z4"}, {"Z2", "3x3/m<-1>"}, {"Z8", "3"}};
    for (const auto& [a, b] : pairs) {
        const auto A = builtin(a), B = builtin(b);
        const auto P = pythagoras_number(*product({A, B})).number;
        CHECK(P == std::max(pythagoras_number(*A).number, pythagoras_number(*B).number));
        if (A->size() * B->size() <= 12) CHECK(P == oracle::pythagoras(*product({A, B})));
    }
}

TEST_CASE("real spectrum checkers") {
    for (const std::string id : {"CONES", "QMULT", "PIISO", "UNIPRO"}) {
        CAPTURE(id);
        testing::theorem_passes(id);
    }
    const auto onesum = testing::theorem_passes("ONESUM");
    CHECK(onesum == std::vector<std::string>{"3", "3x3/(1,0)"});
}
