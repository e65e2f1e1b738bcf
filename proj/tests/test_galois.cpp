#include <doctest.h>

#include "morikawa/algebra.hpp"
#include "morikawa/galois.hpp"
#include "oracles.hpp"

using namespace morikawa;
using namespace morikawa::galois;

namespace {

Rational q(long long n, long long d = 1) { return Rational(BigInt(n), BigInt(d)); }

IntPoly int_poly(std::initializer_list<long long> ascending) {
    IntPoly f;
    for (long long c : ascending) f.coeffs.emplace_back(c);
    f.trim();
    return f;
}

const IntPoly kPhi10 = int_poly({1, -1, 1, -1, 1});  // x^4 - x^3 + x^2 - x + 1

}  // namespace

TEST_CASE("specialize_integer produces a primitive degree-10 polynomial") {
    for (auto k0 : {q(1), q(2), q(3, 2)}) {
        IntPoly f = specialize_integer(k0);
        CHECK(f.degree() == 10);
        CHECK(f.content() == 1);
        CHECK(f.coeffs.back() > 0);
    }
    CHECK_THROWS_AS(specialize_integer(q(1, 2)), DomainError);
}

TEST_CASE("specialize_integer(1) is proportional to p(1, x)") {
    IntPoly f = specialize_integer(q(1));
    UniPoly p1 = algebra::specialize(algebra::build_p(), q(1));
    // cross-multiplication: f * p1[k0] == p1 * f[k0] for all coefficients
    Rational ratio = Rational(f.coeffs.back()) / p1.leading();
    for (int k = 0; k <= 10; ++k) CHECK(Rational(f.coeffs[static_cast<size_t>(k)]) == ratio * p1.coeff(k));
}

TEST_CASE("cycle_type_mod on knowns") {
    // x^2 + 1 is irreducible mod 3 (-1 is a non-residue)
    auto t1 = cycle_type_mod(int_poly({1, 0, 1}), 3);
    REQUIRE(t1.has_value());
    CHECK(*t1 == CycleType{2});
    // x^2 - 1 splits mod 7
    auto t2 = cycle_type_mod(int_poly({-1, 0, 1}), 7);
    REQUIRE(t2.has_value());
    CHECK(*t2 == CycleType{1, 1});
    // even primes are rejected outright
    CHECK_THROWS_AS(cycle_type_mod(int_poly({-1, 0, 1}), 2), DomainError);
    CHECK(cycle_type_mod(int_poly({-1, 0, 1}), 3).has_value());
    // leading coefficient divisible by the prime: skip
    CHECK_FALSE(cycle_type_mod(int_poly({1, 1, 5}), 5).has_value());
    // non-squarefree reduction: x^2 mod 5
    CHECK_FALSE(cycle_type_mod(int_poly({0, 0, 1}), 5).has_value());
    CHECK_THROWS_AS(cycle_type_mod(int_poly({1, 1}), 9), DomainError);  // not prime
}

TEST_CASE("cycle_type_mod matches the certified factorization oracle") {
    IntPoly f = specialize_integer(q(2));
    std::uint64_t p = next_prime(1000000);
    auto fast = cycle_type_mod(f, p);
    while (!fast.has_value()) {
        p = next_prime(p + 1);
        fast = cycle_type_mod(f, p);
    }
    auto oracle = oracles::certified_factor_pattern(f, p);
    REQUIRE(oracle.has_value());
    CHECK(*fast == *oracle);

    // a few more primes for good measure
    for (std::uint64_t start : {10007ull, 65537ull, 262147ull}) {
        std::uint64_t pr = next_prime(start);
        auto a = cycle_type_mod(f, pr);
        auto b = oracles::certified_factor_pattern(f, pr);
        CHECK(a == b);
    }
}

TEST_CASE("sampling bookkeeping and determinism") {
    auto one = sample_cycle_types(q(2), 1, 0);
    CHECK(one.examined == 1);
    CHECK(one.counts.size() + one.skipped >= 1);
    CHECK_THROWS_AS(sample_cycle_types(q(2), 0, 0), DomainError);

    auto a = sample_cycle_types(q(2), 120, 42);
    auto b = sample_cycle_types(q(2), 120, 42);
    CHECK(a.counts == b.counts);
    CHECK(a.skipped == b.skipped);
    CHECK(a.first_prime == b.first_prime);
    CHECK(a.last_prime == b.last_prime);

    // every accumulated pattern is a partition of 10
    for (const auto& [pattern, n] : a.counts) {
        int sum = 0;
        for (int part : pattern) sum += part;
        CHECK(sum == 10);
    }
    CHECK(a.examined == 120);
}

TEST_CASE("merging two adjacent prime ranges equals one combined run") {
    IntPoly f = specialize_integer(q(2));
    auto h1 = sample_range(f, 10000, 100);
    auto h2 = sample_range(f, h1.last_prime + 1, 100);
    auto combined = sample_range(f, 10000, 200);
    CycleTypeHistogram merged = h1;
    merged.merge(h2);
    CHECK(merged.counts == combined.counts);
    CHECK(merged.skipped == combined.skipped);
    CHECK(merged.examined == combined.examined);
    CHECK(merged.first_prime == combined.first_prime);
    CHECK(merged.last_prime == combined.last_prime);
}

TEST_CASE("chebotarev statistics at k0=2 over 500 primes") {
    auto hist = sample_cycle_types(q(2), 500, 0);
    CHECK(hist.skipped * 20 < hist.examined);  // skip rate < 5%
    double good = static_cast<double>(hist.good());
    double f10 = 0.0, f7 = 0.0;
    for (const auto& [pattern, n] : hist.counts) {
        if (pattern == CycleType{10}) f10 += static_cast<double>(n);
        for (int part : pattern)
            if (part == 7) {
                f7 += static_cast<double>(n);
                break;
            }
    }
    f10 /= good;
    f7 /= good;
    CHECK(f10 >= 0.06);
    CHECK(f10 <= 0.14);
    CHECK(f7 >= 0.10);
    CHECK(f7 <= 0.19);

    auto report = s10_evidence(hist);
    CHECK(report.ten_cycle);
    CHECK(report.seven_cycle);
    CHECK(report.odd_permutation);
    CHECK(report.verdict);
}

TEST_CASE("skip rate below 5% for squarefree specializations") {
    for (auto k0 : {q(2), q(3), q(3, 2)}) {
        auto hist = sample_cycle_types(k0, 200, 7);
        CHECK(hist.skipped * 20 < hist.examined);
    }
}

TEST_CASE("k0=1 is degenerate: the specialization has a square factor") {
    // p(1, x) = -8 (x-2)^2 (x-1) (64x^7 - 448x^6 + 1248x^5 - 1704x^4
    //           + 1173x^3 - 414x^2 + 80x - 8), so gcd(f, f') != 1 mod every
    // prime and the Dedekind pipeline rejects them all.
    IntPoly f = specialize_integer(q(1));
    UniPoly p1(std::vector<Rational>(f.coeffs.begin(), f.coeffs.end()));
    CHECK(p1.eval(q(2)) == q(0));
    // derivative also vanishes at 2: double root
    Rational deriv_at_2(0);
    for (int k = 1; k <= 10; ++k) {
        Rational xpow(1);
        for (int i = 0; i < k - 1; ++i) xpow *= 2;
        deriv_at_2 += Rational(k) * p1.coeff(k) * xpow;
    }
    CHECK(deriv_at_2 == q(0));

    auto hist = sample_range(f, 10007, 50);
    CHECK(hist.skipped == 50);
    CHECK_THROWS_AS(s10_evidence(hist), EmptyHistogram);
}

TEST_CASE("s10_evidence witness logic") {
    CycleTypeHistogram hist;
    hist.counts[{10}] = 1;
    hist.counts[{7, 2, 1}] = 1;
    hist.examined = 2;
    auto rep = s10_evidence(hist);
    CHECK(rep.ten_cycle);
    CHECK(rep.seven_cycle);
    CHECK(rep.odd_permutation);  // the 10-cycle is an odd permutation
    CHECK(rep.verdict);

    CycleTypeHistogram trivial;
    trivial.counts[{1, 1, 1, 1, 1, 1, 1, 1, 1, 1}] = 5;
    trivial.examined = 5;
    auto rep2 = s10_evidence(trivial);
    CHECK_FALSE(rep2.ten_cycle);
    CHECK_FALSE(rep2.seven_cycle);
    CHECK_FALSE(rep2.odd_permutation);
    CHECK_FALSE(rep2.verdict);

    CHECK_THROWS_AS(s10_evidence(CycleTypeHistogram{}), EmptyHistogram);
}

TEST_CASE("cyclotomic control: patterns of x^4-x^3+x^2-x+1 never contain 3") {
    // Galois group of the 10th cyclotomic field is cyclic of order 4, so
    // Frobenius orders are 1, 2 or 4; a cubic factor is impossible.
    auto hist = sample_range(kPhi10, 10007, 300);
    CHECK(hist.good() > 250);
    for (const auto& [pattern, n] : hist.counts) {
        int sum = 0;
        for (int part : pattern) {
            CHECK(part != 3);
            sum += part;
        }
        CHECK(sum == 4);
    }
    // the S10 witness machinery cannot endorse a degree-4 control
    CHECK_FALSE(s10_evidence(hist).verdict);
}

TEST_CASE("report serialization carries the documented keys") {
    auto hist = sample_cycle_types(q(2), 60, 1);
    auto rep = s10_evidence(hist);
    auto j = report_to_json(q(2), hist, rep);
    CHECK(j["k0"] == "2");
    CHECK(j["primes"] == 60);
    CHECK(j.contains("skipped"));
    CHECK(j.contains("patterns"));
    CHECK(j["witnesses"].contains("ten_cycle"));
    CHECK(j["witnesses"].contains("seven_cycle"));
    CHECK(j["witnesses"].contains("odd_permutation"));
    CHECK(j.contains("verdict"));
    std::uint64_t total = j["skipped"].get<std::uint64_t>();
    for (const auto& [key, n] : j["patterns"].items()) total += n.get<std::uint64_t>();
    CHECK(total == 60);
}

TEST_CASE("pattern_key formatting") {
    CHECK(pattern_key({10}) == "10");
    CHECK(pattern_key({7, 2, 1}) == "7+2+1");
}

TEST_CASE("prime utilities") {
    CHECK(is_prime(2));
    CHECK(is_prime(10007));
    CHECK_FALSE(is_prime(10005));
    CHECK(next_prime(10000) == 10007);
    CHECK(next_prime(10007) == 10007);
    // deterministic seed-to-offset map
    CHECK(splitmix64(0) % 1000000 == 607535);
}
