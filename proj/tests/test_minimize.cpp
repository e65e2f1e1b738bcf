#include <doctest.h>

#include <cmath>
#include <random>

#include "morikawa/geometry.hpp"
#include "morikawa/minimize.hpp"
#include "oracles.hpp"

using namespace morikawa;
using namespace morikawa::minimize;

namespace {
const double kSqrt2 = std::sqrt(2.0);

// Frozen reference values computed with 40-digit arithmetic.
constexpr double kXm1 = 0.37321527221097516;
constexpr double kMu1 = 0.38539836298327002;
constexpr double kXm4 = 0.59434031488531494;
constexpr double kMu4 = 0.65550190223098454;
}  // namespace

TEST_CASE("closed-form spot values of z") {
    CHECK(std::abs(z(1.0, 1.0) - kSqrt2) <= 1e-12);
    CHECK(std::abs(z(1.0, 1.0 - 1.0 / kSqrt2) - std::sqrt(2.0 - kSqrt2)) <= 1e-12);
}

TEST_CASE("z domain errors and clamping") {
    CHECK_THROWS_AS(z(1.0, 0.05), DomainError);   // inner radicand negative
    CHECK_THROWS_AS(z(1.0, -0.2), DomainError);   // 2x - x^2 negative
    CHECK_THROWS_AS(z(0.5, 0.5), DomainError);    // r < 1
    // left edge at r=1 makes the inner radicand vanish up to rounding dust
    CHECK(z(1.0, 1.0 - 1.0 / kSqrt2) > 0.0);
}

TEST_CASE("z matches the geometric side length inside the contact range") {
    // Find theta with v_A at height x, then compare side lengths.
    auto scene = geometry::Scene::with_radius(4.0);
    for (double x : {0.55, kXm4, 0.65}) {
        double lo = 0.05, hi = 1.2;
        for (int i = 0; i < 80; ++i) {
            double mid = 0.5 * (lo + hi);
            double height = geometry::inscribed_square(scene, mid).v_A.y;
            (height > x ? lo : hi) = mid;
        }
        double s_geom = geometry::inscribed_square(scene, 0.5 * (lo + hi)).s;
        CHECK(std::abs(z(4.0, x) - s_geom) <= 1e-9);
    }
}

TEST_CASE("z_prime matches central differences") {
    CHECK(std::abs(z_prime(1.0, 0.5) - oracles::fd_z_prime(1.0, 0.5)) <= 1e-6);
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> rd(1.0, 16.0);
    std::uniform_real_distribution<double> xd(0.32, 0.93);
    int done = 0;
    while (done < 100) {
        double r = rd(rng);
        double x = xd(rng);
        double zp;
        try {
            zp = z_prime(r, x);
        } catch (const DomainError&) {
            continue;
        }
        double fd = oracles::fd_z_prime(r, x);
        CHECK(std::abs(zp - fd) <= 1e-6 * std::max(1.0, std::abs(zp)));
        ++done;
    }
}

TEST_CASE("z_prime signs around the valley and stationarity at x_m") {
    CHECK(z_prime(1.0, 1.0 - 1.0 / kSqrt2 + 0.01) < 0.0);
    CHECK(z_prime(1.0, 0.99) > 0.0);
    for (double r : {1.0, 1.5, 2.0, 4.0, 9.0}) {
        auto res = minimize_mu(r);
        CHECK(std::abs(z_prime(r, res.x_m)) <= 1e-9);
    }
}

TEST_CASE("z_prime domain guard near radicand zeros") {
    CHECK_THROWS_AS(z_prime(1.0, 1.0 - 1.0 / kSqrt2), DomainError);
    CHECK_THROWS_AS(z_prime(1.0, 2e-14), DomainError);
}

TEST_CASE("minimize_mu at r=1: below the #9 square, matches references") {
    auto res = minimize_mu(1.0);
    CHECK(res.mu < kSqrt2 - 1.0);
    CHECK(std::abs(res.x_m - kXm1) <= 1e-10);
    CHECK(std::abs(res.mu - kMu1) <= 1e-12);
    CHECK(std::abs(res.mu - z(1.0, res.x_m)) <= 1e-12 * res.mu);
}

TEST_CASE("minimize_mu stays in the open interval") {
    for (double r : {1.0, 2.0, 16.0}) {
        auto res = minimize_mu(r);
        CHECK(res.x_m > interval_lo());
        CHECK(res.x_m < 1.0);
        CHECK(res.residual_zprime <= 1e-9);
    }
}

TEST_CASE("minimize_mu parameter validation") {
    CHECK_THROWS_AS(minimize_mu(0.9), DomainError);
    CHECK_THROWS_AS(minimize_mu(1.0, 1e-15), DomainError);
}

TEST_CASE("minimize_mu handles very large radii, valley near the right edge") {
    for (double r : {1e5, 1e6}) {
        auto res = minimize_mu(r);
        CHECK(res.x_m > interval_lo());
        CHECK(res.x_m < 1.0);
        CHECK(res.residual_zprime <= 1e-9);
        CHECK(z_prime(r, res.x_m - 1e-4) < 0.0);
        CHECK(z_prime(r, res.x_m + 1e-4) > 0.0);
    }
}

TEST_CASE("cross-oracle agreement between the two minimization paths") {
    for (double r : {1.0, 1.21, 2.0, 4.0, 7.29, 16.0}) {
        auto scene = geometry::Scene::with_radius(r);
        auto brute = geometry::brute_force_mu(scene, 2000);
        auto analytic = minimize_mu(r);
        CHECK(std::abs(brute.mu - analytic.mu) <= 1e-8);
    }
}

TEST_CASE("unimodality on a dense grid") {
    const double lo = interval_lo() + 1e-9;
    const double hi = 1.0 - 1e-9;
    for (double r : {1.0, 1.5, 2.0, 4.0, 9.0}) {
        int changes = 0;
        int prev_sign = 0;
        double prev = z(r, lo);
        for (int i = 1; i < 10000; ++i) {
            double x = lo + (hi - lo) * i / 9999.0;
            double cur = z(r, x);
            double diff = cur - prev;
            int sign = diff > 0.0 ? 1 : (diff < 0.0 ? -1 : 0);
            if (sign != 0) {
                if (prev_sign != 0 && sign != prev_sign) ++changes;
                prev_sign = sign;
            }
            prev = cur;
        }
        CHECK(changes == 1);
    }
}

TEST_CASE("expanded A agrees with z^2") {
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> rd(1.0, 16.0);
    std::uniform_real_distribution<double> xd(0.31, 0.97);
    int done = 0;
    while (done < 100) {
        double r = rd(rng);
        double x = xd(rng);
        double zv;
        try {
            zv = z(r, x);
        } catch (const DomainError&) {
            continue;
        }
        double a = oracles::A_expanded(r, x);
        CHECK(std::abs(a - zv * zv) <= 1e-10 * std::max(1.0, zv * zv));
        ++done;
    }
}

TEST_CASE("xi and lambda definitions") {
    CHECK(xi(1.0) == minimize_mu(1.0).x_m);
    CHECK(xi(2.0) == minimize_mu(4.0).x_m);
    double mu1 = minimize_mu(1.0).mu;
    CHECK(lambda_fn(1.0) == mu1 * mu1);
    CHECK_THROWS_AS(xi(0.99), DomainError);
}

TEST_CASE("lambda(2) against the geometric brute force") {
    auto scene = geometry::Scene::with_radius(4.0);
    double mu_brute = geometry::brute_force_mu(scene, 2000).mu;
    CHECK(std::abs(lambda_fn(2.0) - mu_brute * mu_brute) <= 2e-8);
}
