#include <doctest.h>

#include <random>

#include "morikawa/json_io.hpp"
#include "morikawa/polynomial.hpp"
#include "oracles.hpp"

using namespace morikawa;

namespace {

Rational q(long long n, long long d = 1) { return Rational(BigInt(n), BigInt(d)); }

UniPoly random_poly(std::mt19937_64& rng, int max_deg) {
    std::uniform_int_distribution<int> deg_dist(0, max_deg);
    std::uniform_int_distribution<long long> coeff(-9, 9);
    std::uniform_int_distribution<long long> den(1, 5);
    int d = deg_dist(rng);
    std::vector<Rational> cs(static_cast<size_t>(d) + 1);
    for (auto& c : cs) c = q(coeff(rng), den(rng));
    if (cs.back() == 0) cs.back() = q(1);
    return UniPoly(std::move(cs));
}

}  // namespace

TEST_CASE("unipoly arithmetic and evaluation") {
    UniPoly p{q(1), q(-2), q(3)};  // 3x^2 - 2x + 1
    CHECK(p.degree() == 2);
    CHECK(p.eval(q(2)) == q(9));
    CHECK(p.eval(2.0) == doctest::Approx(9.0).epsilon(1e-15));

    UniPoly zero;
    CHECK(zero.is_zero());
    CHECK((p + (-p)).is_zero());
    CHECK((p - p).is_zero());

    UniPoly one = UniPoly::constant(q(1));
    CHECK(p * one == p);
}

TEST_CASE("compensated evaluation survives cancellation") {
    // (x - 1)^6 expanded; near x = 1 naive Horner loses most digits.
    UniPoly p{q(1), q(-6), q(15), q(-20), q(15), q(-6), q(1)};
    double x = 1.0 + 1e-4;
    double exact = 1e-24;
    CHECK(p.eval(x) == doctest::Approx(exact).epsilon(1e-4));
}

TEST_CASE("resultant convention: Res(x-u, x-v) = v - u") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long long> c(-20, 20);
    for (int i = 0; i < 20; ++i) {
        Rational u = q(c(rng), 3), v = q(c(rng), 2);
        UniPoly a{-u, q(1)};
        UniPoly b{-v, q(1)};
        CHECK(resultant(a, b) == v - u);
    }
}

TEST_CASE("resultant of identical polynomials vanishes") {
    UniPoly a{q(2), q(0), q(-3), q(1)};
    CHECK(resultant(a, a) == q(0));
}

TEST_CASE("resultant spot value Res(x^2-1, x^2-4) = 9 and determinant oracle") {
    UniPoly a{q(-1), q(0), q(1)};
    UniPoly b{q(-4), q(0), q(1)};
    CHECK(resultant(a, b) == q(9));
    auto m = oracles::sylvester_ascending(a, b);
    CHECK(oracles::cofactor_determinant(m) == q(9));
}

TEST_CASE("resultant multiplicativity on random small polynomials") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 100; ++i) {
        UniPoly a = random_poly(rng, 3);
        UniPoly b = random_poly(rng, 3);
        UniPoly c = random_poly(rng, 3);
        CHECK(resultant(a * b, c) == resultant(a, c) * resultant(b, c));
    }
}

TEST_CASE("resultant agrees with the cofactor-expansion determinant") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 25; ++i) {
        UniPoly a = random_poly(rng, 3);
        UniPoly b = random_poly(rng, 3);
        if (a.degree() + b.degree() == 0) continue;
        auto m = oracles::sylvester_ascending(a, b);
        CHECK(resultant(a, b) == oracles::cofactor_determinant(m));
    }
}

TEST_CASE("resultant rejects the zero polynomial") {
    UniPoly a{q(1), q(1)};
    CHECK_THROWS_AS(resultant(a, UniPoly()), DegenerateInput);
    CHECK_THROWS_AS(resultant(UniPoly(), a), DegenerateInput);
}

TEST_CASE("resultant_y reduces to direct evaluation for linear q") {
    // a(x, y) = (x^2 + 1) y^2 + x y + 3, q = y - 5:
    // Res_y(a, q) must equal a(x, 5).
    std::vector<UniPoly> a_coeffs = {
        UniPoly{q(3)},
        UniPoly{q(0), q(1)},
        UniPoly{q(1), q(0), q(1)},
    };
    UniPoly qq{q(-5), q(1)};
    UniPoly f = resultant_y(a_coeffs, qq);
    UniPoly direct = a_coeffs[0] + q(5) * a_coeffs[1] + q(25) * a_coeffs[2];
    CHECK(f == direct);
}

TEST_CASE("bivar and trivar polynomial basics") {
    BivarPoly t = BivarPoly::term(q(1), 1, 0);
    BivarPoly x = BivarPoly::term(q(1), 0, 1);
    BivarPoly p = t * x + BivarPoly::term(q(-3), 0, 0);  // t*x - 3
    CHECK(p.degree_t() == 1);
    CHECK(p.degree_x() == 1);
    CHECK(p.eval(q(2), q(5)) == q(7));
    CHECK(p.specialize_t(q(4)).eval(q(1)) == q(1));

    TrivarPoly k = TrivarPoly::term(q(1), 1, 0, 0);
    TrivarPoly y = TrivarPoly::term(q(1), 0, 0, 1);
    TrivarPoly h = k * y - TrivarPoly::constant(q(6));
    CHECK(h.eval(q(2), q(0), q(3)) == q(0));
    CHECK(h.degree_y() == 1);
}

TEST_CASE("json round trip is bit exact") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 10; ++i) {
        UniPoly a = random_poly(rng, 6);
        auto j = to_json(a);
        CHECK(unipoly_from_json(nlohmann::json::parse(j.dump())) == a);
    }
    BivarPoly b = BivarPoly::term(q(123456789012345ll, 987654321ll), 3, 7) +
                  BivarPoly::term(q(-1, 3), 0, 0);
    CHECK(bivar_from_json(nlohmann::json::parse(to_json(b).dump())) == b);

    TrivarPoly t = TrivarPoly::term(q(-7, 2), 1, 2, 3) + TrivarPoly::term(q(5), 0, 0, 4);
    CHECK(trivar_from_json(nlohmann::json::parse(to_json(t).dump())) == t);
}
