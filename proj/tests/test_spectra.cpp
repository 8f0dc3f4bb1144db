#include "helpers.hpp"
#include "oracles.hpp"

using namespace hyperring;
using testing::builtin;
using testing::el;
using testing::set;

namespace {

auto as_set(const Subset& s) -> oracle::Set {
    oracle::Set out;
    s.for_each([&](Element a) { out.insert(a); });
    return out;
}

}  // namespace

TEST_CASE("generated ideals") {
    const auto z6 = zmod(6);
    CHECK(ideal_generated(*z6, set(*z6, {"2"})).elements() == set(*z6, {"0", "2", "4"}));
    const auto K = krasner();
    CHECK(ideal_generated(*K, set(*K, {"1"})).elements() == set(*K, {"0", "1"}));
    const auto t2 = builtin("3x3");
    CHECK(ideal_generated(*t2, set(*t2, {"(1,0)"})).elements() == set(*t2, {"(0,0)", "(1,0)", "(-1,0)"}));
    CHECK(principal_ideal(*z6, el(*z6, "3")) == set(*z6, {"0", "3"}));
    CHECK_THROWS_AS(Ideal::of(*z6, set(*z6, {"0", "2"})), NotAnIdeal);
    CHECK_THROWS_AS(PrimeIdeal::of(*zmod(4), set(*zmod(4), {"0"})), NotPrime);
}

TEST_CASE("ideals and primes against the subset oracle") {
    for (const auto& i : cli::builtin_registry()) {
        const auto& A = *i.ring;
        if (A.size() > 12) continue;
        CAPTURE(i.id);
        std::vector<oracle::Set> lib;
        for (const auto& s : all_ideals(A)) lib.push_back(as_set(s));
        std::sort(lib.begin(), lib.end());
        auto ref = oracle::ideals(A);
        std::sort(ref.begin(), ref.end());
        CHECK(lib == ref);

        std::vector<oracle::Set> scan, prop;
        const auto s1 = compute_spectrum(A, PrimeSearch::SubsetScan);
        const auto s2 = compute_spectrum(A, PrimeSearch::Propagation);
        for (const auto& p : s1.primes()) scan.push_back(as_set(p));
        for (const auto& p : s2.primes()) prop.push_back(as_set(p));
        std::sort(scan.begin(), scan.end());
        std::sort(prop.begin(), prop.end());
        auto primes = oracle::primes(A);
        std::sort(primes.begin(), primes.end());
        CHECK(scan == primes);
        CHECK(prop == primes);
        CHECK(spec(A).size() == primes.size());
    }
}

TEST_CASE("spectra of small instances") {
    const auto K = krasner();
    REQUIRE(spec(*K).size() == 1);
    CHECK(spec(*K).prime(0) == set(*K, {"0"}));
    const auto z6 = zmod(6);
    REQUIRE(spec(*z6).size() == 2);
    CHECK(spec(*z6).index_of(set(*z6, {"0", "2", "4"})).has_value());
    CHECK(spec(*z6).index_of(set(*z6, {"0", "3"})).has_value());
    const auto t2 = builtin("3x3");
    REQUIRE(spec(*t2).size() == 2);
    CHECK(spec(*t2).index_of(set(*t2, {"(0,0)", "(0,1)", "(0,-1)"})).has_value());
    CHECK(spec(*t2).index_of(set(*t2, {"(0,0)", "(1,0)", "(-1,0)"})).has_value());
}

TEST_CASE("prime ideal tests") {
    const auto z6 = zmod(6);
    CHECK(is_prime_ideal(*z6, set(*z6, {"0", "2", "4"})));
    const auto z4 = zmod(4);
    CHECK_FALSE(is_prime_ideal(*z4, set(*z4, {"0"})));
    for (const std::string id : {"K", "3", "KxK", "3x3", "3x3/m<-1>"}) {
        const auto A = builtin(id);
        for (const auto& p : spec(*A).primes()) CHECK(oracle::is_prime(*A, as_set(p)));
    }
}

TEST_CASE("radicals and saturations") {
    const auto z4 = zmod(4);
    CHECK(radical(Ideal::of(*z4, set(*z4, {"0"}))).elements() == set(*z4, {"0", "2"}));
    const auto K = krasner();
    CHECK(radical(Ideal::of(*K, set(*K, {"0"}))).elements() == set(*K, {"0"}));
    for (const auto& i : cli::builtin_registry()) {
        const auto& A = *i.ring;
        CAPTURE(i.id);
        CHECK(saturation(A, A.one()) == weak_units(A));
        for (Element a = 0; a < A.size(); ++a) CHECK(saturation_by_definition(A, a) == saturation_by_primes(A, a));
        for (const auto& I : all_ideals(A)) CHECK(radical_by_powers(A, I) == radical_by_primes(A, I));
    }
}

TEST_CASE("maximal ideals") {
    const auto z12 = zmod(12);
    CHECK(is_maximal(Ideal::of(*z12, set(*z12, {"0", "2", "4", "6", "8", "10"}))));
    CHECK_FALSE(is_maximal(Ideal::of(*z12, set(*z12, {"0", "4", "8"}))));
    for (const auto& i : cli::builtin_registry()) {
        const auto& S = spec(*i.ring);
        for (std::size_t k = 0; k < S.size(); ++k)
            CHECK(S.is_maximal_index(k) == is_maximal(PrimeIdeal::of(*i.ring, S.prime(k))));
    }
}

TEST_CASE("basic opens") {
    for (const auto& i : cli::builtin_registry()) {
        const auto& A = *i.ring;
        const auto& S = spec(A);
        CAPTURE(i.id);
        CHECK(S.basic_open(A.one()) == S.whole());
        CHECK(S.basic_open(A.zero()).empty());
        for (Element a = 0; a < A.size(); ++a)
            for (Element b = 0; b < A.size(); ++b)
                CHECK(S.basic_open(A.mul(a, b)) == (S.basic_open(a) & S.basic_open(b)));
    }
}

TEST_CASE("spectral maps") {
    const auto t2 = builtin("3x3");
    const auto three = sign3();
    const auto id = spectral_map(identity(*t2));
    for (std::size_t j = 0; j < id.size(); ++j) CHECK(id[j] == j);
    const auto pres = product_presentation({three, three});
    const auto pr = spectral_map(pres.projection(0));
    REQUIRE(pr.size() == 1);
    // the preimage of {0} is the prime {(0,y)}
    CHECK(spec(*pres.result).prime(pr[0]) ==
          set(*pres.result, {"(0,0)", "(0,1)", "(0,-1)"}));
    const auto z12 = zmod(12);
    const auto I = Ideal::of(*z12, set(*z12, {"0", "4", "8"}));
    const auto q = quotient_by_ideal(I);
    for (auto j : spectral_map(q.proj)) CHECK(I.elements().is_subset_of(spec(*z12).prime(j)));
    CHECK(spectral_map(q.proj).size() == 1);
}

TEST_CASE("morphisms to K correspond to primes") {
    const auto K = krasner();
    for (const auto& i : cli::builtin_registry()) {
        if (i.ring->size() > 12) continue;
        std::vector<Subset> kernels;
        for (const auto& f : enumerate_morphisms(*i.ring, *K)) kernels.push_back(f.preimage(set(*K, {"0"})));
        std::sort(kernels.begin(), kernels.end());
        CHECK_MESSAGE(kernels == spec(*i.ring).primes(), i.id);
    }
}

TEST_CASE("PIT checker") { CHECK(testing::theorem_passes("PIT").size() == cli::builtin_registry().size()); }
