#include <random>

#include "fuzz.hpp"
#include "helpers.hpp"
#include "hyperring/realspec.hpp"
#include "oracles.hpp"

using namespace hyperring;
using testing::builtin;
using testing::el;
using testing::set;

namespace {

struct Row {
    const char* id;
    std::size_t size;
    bool hyperring, hyperfield, regular;
    std::size_t ideals, primes, to_k, to_3, idempotents, pythagoras;
};

// Computed by the brute-force oracles in oracles.hpp, then frozen. The 3x3x3
// row is too large for subset and map enumeration; its counts are those of a
// product of three copies of 3.
const Row kRows[] = {
    {"K", 2, true, true, true, 2, 1, 1, 0, 2, 1},
    {"3", 3, true, true, true, 2, 1, 1, 1, 2, 1},
    {"KxK", 4, true, false, true, 4, 2, 2, 0, 4, 1},
    {"3x3", 9, true, false, true, 4, 2, 2, 2, 4, 1},
    {"3x3x3", 27, true, false, true, 8, 3, 3, 3, 8, 1},
    {"Z2", 2, true, true, true, 2, 1, 1, 0, 2, 1},
    {"Z3", 3, true, true, true, 2, 1, 1, 0, 2, 2},
    {"Z4", 4, true, false, false, 3, 1, 1, 0, 2, 3},
    {"Z5", 5, true, true, true, 2, 1, 1, 0, 2, 2},
    {"Z6", 6, true, false, true, 4, 2, 2, 0, 4, 2},
    {"Z7", 7, true, true, true, 2, 1, 1, 0, 2, 2},
    {"Z8", 8, true, false, false, 4, 1, 1, 0, 2, 4},
    {"Z9", 9, true, false, false, 3, 1, 1, 0, 2, 3},
    {"Z10", 10, true, false, true, 4, 2, 2, 0, 4, 2},
    {"Z11", 11, true, true, true, 2, 1, 1, 0, 2, 2},
    {"Z12", 12, true, false, false, 6, 2, 2, 0, 4, 3},
    {"F3/sq", 3, true, true, true, 2, 1, 1, 0, 2, 2},
    {"F5/sq", 3, true, true, true, 2, 1, 1, 0, 2, 2},
    {"F7/sq", 3, true, true, true, 2, 1, 1, 0, 2, 2},
    {"F11/sq", 3, true, true, true, 2, 1, 1, 0, 2, 2},
    {"F13/sq", 3, true, true, true, 2, 1, 1, 0, 2, 2},
    {"Z12/(4)", 4, true, false, false, 3, 1, 1, 0, 2, 3},
    {"Z6[1/3]", 2, true, true, true, 2, 1, 1, 0, 2, 1},
    {"Z12_(2)", 4, true, false, false, 3, 1, 1, 0, 2, 3},
    {"3x3/(1,0)", 3, true, true, true, 2, 1, 1, 1, 2, 1},
    {"3x3/m<(1,-1)>", 6, true, false, true, 4, 2, 2, 1, 4, 1},
    {"3x3/m<-1>", 5, true, false, true, 4, 2, 2, 0, 4, 2},
    {"RS7", 7, false, false, true, 3, 2, 2, 3, 3, 1},
};

auto axiom_label(Axiom a) -> std::string {
    switch (a) {
        case Axiom::NonEmptySum: return "nonempty";
        case Axiom::Reversibility: return "reversibility";
        case Axiom::Neutral: return "neutral";
        case Axiom::Associativity: return "associativity";
        case Axiom::Commutativity: return "commutative";
        case Axiom::ZeroAbsorbing: return "zero";
        case Axiom::HalfDistributivity: return "half-distributivity";
        case Axiom::MulMonoid: return "monoid";
    }
    return "?";
}

auto violated(const ValidationReport& r) -> std::set<std::string> {
    std::set<std::string> s;
    for (const auto& v : r.violations) s.insert(axiom_label(v.axiom));
    return s;
}

}  // namespace

TEST_CASE("Krasner and sign hyperfield tables") {
    const auto K = krasner();
    CHECK(K->add(el(*K, "1"), el(*K, "1")) == set(*K, {"0", "1"}));
    const auto three = sign3();
    CHECK(three->add(el(*three, "1"), el(*three, "-1")) == set(*three, {"-1", "0", "1"}));
    CHECK(three->add(el(*three, "1"), el(*three, "1")) == set(*three, {"1"}));
    CHECK(validate_multiring(K->tables()).ok());
    CHECK(validate_multiring(zmod(4)->tables()).ok());
}

TEST_CASE("K with 1+1 = {1} violates reversibility") {
    auto t = krasner()->tables();
    t.add[1][1] = {1};
    const auto r = validate_multiring(t);
    REQUIRE_FALSE(r.ok());
    CHECK(r.violates(Axiom::Reversibility));
    CHECK_THROWS_AS(Multiring::create(t), ValidationError);
    CHECK(oracle::axioms(t).count("reversibility"));
}

TEST_CASE("builtin registry against frozen oracle values") {
    const auto K = krasner();
    const auto three = sign3();
    for (const auto& row : kRows) {
        CAPTURE(row.id);
        const auto A = builtin(row.id);
        CHECK(A->size() == row.size);
        CHECK(validate_multiring(A->tables()).ok());
        CHECK(is_hyperring(*A) == row.hyperring);
        CHECK(classify(*A).hyperfield == row.hyperfield);
        CHECK(idempotents(*A).count() == row.idempotents);
        CHECK(all_ideals(*A).size() == row.ideals);
        CHECK(spec(*A).size() == row.primes);
        CHECK(pythagoras_number(*A).number == row.pythagoras);
        if (A->size() <= 12) {
            CHECK(enumerate_morphisms(*A, *K).size() == row.to_k);
            CHECK(enumerate_morphisms(*A, *three).size() == row.to_3);
            CHECK(oracle::is_hyperring(*A) == row.hyperring);
            CHECK(oracle::is_hyperfield(*A) == row.hyperfield);
            CHECK(oracle::von_neumann_regular(*A) == row.regular);
            CHECK(oracle::pythagoras(*A) == row.pythagoras);
            CHECK(oracle::morphisms(*A, *K).size() == row.to_k);
            CHECK(oracle::morphisms(*A, *three).size() == row.to_3);
        }
    }
    CHECK(std::size(kRows) == cli::builtin_registry().size());
}

TEST_CASE("units, weak units and classification") {
    const auto z6 = zmod(6);
    CHECK(units(*z6) == set(*z6, {"1", "5"}));
    const auto c6 = classify(*z6);
    CHECK_FALSE(c6.multidomain);
    CHECK_FALSE(c6.multifield);
    CHECK_FALSE(c6.hyperfield);
    CHECK(classify(*zmod(5)).hyperfield);
    const auto c3 = classify(*sign3());
    CHECK((c3.multidomain && c3.multifield && c3.hyperfield));
    const auto K = krasner();
    CHECK(units(*K) == set(*K, {"1"}));
    CHECK(weak_units(*K) == units(*K));
    for (const auto& i : cli::builtin_registry()) {
        CAPTURE(i.id);
        const auto u = units(*i.ring);
        oracle::Set lib;
        u.for_each([&](Element a) { lib.insert(a); });
        CHECK(lib == oracle::units(*i.ring));
        if (is_hyperring(*i.ring)) CHECK(weak_units(*i.ring) == u);
    }
}

TEST_CASE("morphism examples") {
    const auto K = krasner();
    const auto three = sign3();
    const auto id3 = enumerate_morphisms(*three, *three);
    REQUIRE(id3.size() == 1);
    CHECK(id3.front() == identity(*three));
    // 0 lies in 1+1 in K but not in 3
    CHECK(enumerate_morphisms(*K, *three).empty());
    CHECK(enumerate_morphisms(*three, *K).size() == 1);
    // -1 |-> 1, 0 |-> 0, 1 |-> 1
    const Morphism abs(three, K, {el(*K, "1"), el(*K, "0"), el(*K, "1")});
    CHECK(is_morphism(abs));
    CHECK(is_morphism(identity(*K)));
    for (const auto& i : cli::builtin_registry())
        for (const auto& p : spec(*i.ring).primes()) {
            std::vector<Element> m(i.ring->size());
            for (Element a = 0; a < m.size(); ++a) m[a] = p.contains(a) ? K->zero() : K->one();
            CHECK_MESSAGE(is_morphism(Morphism(i.ring, K, m)), i.id);
        }
}

TEST_CASE("isomorphism search against permutation oracle") {
    const auto three = sign3();
    const auto z3 = zmod(3);
    CHECK_FALSE(find_isomorphism(*three, *z3).has_value());
    CHECK_FALSE(oracle::isomorphic(*three, *z3));
    const auto K = krasner();
    const auto kk = find_isomorphism(*K, *K);
    REQUIRE(kk);
    CHECK(*kk == identity(*K));
    const auto& reg = cli::builtin_registry();
    for (const auto& a : reg)
        for (const auto& b : reg) {
            if (a.ring->size() != b.ring->size() || a.ring->size() > 7) continue;
            CAPTURE(a.id);
            CAPTURE(b.id);
            CHECK(find_isomorphism(*a.ring, *b.ring).has_value() == oracle::isomorphic(*a.ring, *b.ring));
        }
}

TEST_CASE("products") {
    const auto three = sign3();
    const auto t2 = product({three, three});
    CHECK(t2->size() == 9);
    CHECK(is_rrm(*t2));
    CHECK(find_isomorphism(*product({three}), *three).has_value());
    const auto kk = product({krasner(), krasner()});
    CHECK(kk->size() == 4);
    CHECK(is_hyperring(*kk));
}

TEST_CASE("validation agrees with the axiom oracle on mutated tables") {
    std::mt19937 rng(20240607);
    std::size_t mutated = 0, rejected = 0;
    for (const auto& i : cli::builtin_registry()) {
        if (i.ring->size() > 9) continue;
        const auto base = i.ring->tables();
        const auto n = base.names.size();
        for (int round = 0; round < 40; ++round) {
            auto t = base;
            const Element a = rng() % n, b = rng() % n, c = rng() % n;
            auto toggle = [&](std::vector<Element>& s) {
                auto it = std::find(s.begin(), s.end(), c);
                if (it == s.end()) {
                    s.push_back(c);
                    std::sort(s.begin(), s.end());
                } else {
                    s.erase(it);
                }
            };
            toggle(t.add[a][b]);
            if (a != b) toggle(t.add[b][a]);
            ++mutated;
            const auto lib = validate_multiring(t);
            const auto ref = oracle::axioms(t);
            CAPTURE(i.id);
            CHECK(lib.ok() == ref.empty());
            if (!lib.ok()) ++rejected;
            for (const auto& v : violated(lib)) CHECK_MESSAGE(ref.count(v), v);
        }
    }
    CHECK(mutated > 0);
    CHECK(rejected > 0);
}

TEST_CASE("fuzz search finds multirings that are not hyperrings") {
    std::mt19937 rng(11);
    std::size_t valid = 0;
    MultiringPtr smallest;
    for (int it = 0; it < 600; ++it) {
        const auto t = testing::sign_vector_tables(rng);
        if (!t) continue;
        const auto rep = validate_multiring(*t);
        CHECK(rep.ok() == oracle::axioms(*t).empty());
        if (!rep.ok()) continue;
        ++valid;
        const auto A = Multiring::create(*t);
        const auto h = check_hyperring(*A);
        REQUIRE(h.ok == oracle::is_hyperring(*A));
        if (!h.ok) {
            // witness x, b, c, d: x in bd + cd but x != ad for every a in b + c
            REQUIRE(h.witness.size() == 4);
            const auto [x, b, c, d] = std::tuple{h.witness[0], h.witness[1], h.witness[2], h.witness[3]};
            CHECK(A->add(A->mul(b, d), A->mul(c, d)).contains(x));
            A->add(b, c).for_each([&](Element a) { CHECK(A->mul(a, d) != x); });
            if (!smallest || A->size() < smallest->size()) smallest = A;
        }
    }
    CHECK(valid > 0);
    REQUIRE(smallest);
    CHECK(smallest->size() == 5);
}

TEST_CASE("RS7 is a real reduced multiring but not a hyperring") {
    const auto A = cli::rs7();
    CHECK(A->size() == 7);
    CHECK(is_rrm(*A));
    CHECK_FALSE(is_hyperring(*A));
    CHECK_FALSE(oracle::is_hyperring(*A));
    CHECK(oracle::von_neumann_regular(*A));
}

TEST_CASE("axiom suite runtime on small instances") {
    // Mirrors acceptance criterion 1 at unit scale.
    for (std::size_t n = 1; n <= 12; ++n) {
        const auto A = zmod(n);
        CHECK(validate_multiring(A->tables()).ok());
        CHECK(is_hyperring(*A));
    }
}
