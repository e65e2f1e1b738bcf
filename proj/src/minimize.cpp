#include "morikawa/minimize.hpp"

#include <array>
#include <cmath>
#include <limits>

namespace morikawa::minimize {

namespace {

constexpr double kClampSlack = 1e-14;   // radicand dust treated as zero
constexpr double kPrimeGuard = 1e-13;   // z_prime domain margin
constexpr double kEndpointInset = 1e-9;

// Double-double helpers. The inner radicand vanishes at the interval
// endpoint, where plain doubles leave O(1e-16) noise of arbitrary sign; the
// spot values at the endpoints need the sign of that near-zero difference
// resolved correctly.
struct DD {
    double hi = 0.0;
    double lo = 0.0;
};

DD two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    return {s, (a - (s - bb)) + (b - bb)};
}

DD renorm(double hi, double lo) {
    double s = hi + lo;
    return {s, lo - (s - hi)};
}

DD two_prod(double a, double b) {
    double p = a * b;
    return {p, std::fma(a, b, -p)};
}

DD dd_add(DD a, DD b) {
    DD s = two_sum(a.hi, b.hi);
    return renorm(s.hi, s.lo + a.lo + b.lo);
}

DD dd_neg(DD a) { return {-a.hi, -a.lo}; }
DD dd_sub(DD a, DD b) { return dd_add(a, dd_neg(b)); }

DD dd_mul(DD a, DD b) {
    DD p = two_prod(a.hi, b.hi);
    return renorm(p.hi, p.lo + a.hi * b.lo + a.lo * b.hi);
}

DD dd_sqrt(DD a) {
    if (a.hi + a.lo <= 0.0) return {0.0, 0.0};
    double x = std::sqrt(a.hi);
    DD x2 = two_prod(x, x);
    DD rem = dd_sub(a, x2);
    double corr = (rem.hi + rem.lo) / (2.0 * x);
    return renorm(x, corr);
}

struct Radicands {
    double B;      // 2x - x^2
    double a;      // r^2 - (2*sqrt(r) - x - sqrt(B))^2, equal to E*sqrt(B) + F
    double sqrtB;  // principal root of the clamped B
    double sqrta;
};

Radicands radicands(double r, double x) {
    // Radicand dust within the slack is treated as zero on both sides: one
    // ulp of input rounding already shifts a radicand zero by ~1e-16, and the
    // square root would amplify that to ~1e-8 in z.
    DD xx = two_prod(x, x);
    DD B = dd_sub({2.0 * x, 0.0}, xx);
    double B_val = B.hi + B.lo;
    if (B_val < -kClampSlack) throw DomainError("z: radicand 2x - x^2 is negative");
    if (std::abs(B_val) <= kClampSlack) {
        B = {0.0, 0.0};
        B_val = 0.0;
    }
    DD sB = dd_sqrt(B);
    DD t = dd_sqrt({r, 0.0});
    DD w = dd_sub(dd_sub({2.0 * t.hi, 2.0 * t.lo}, {x, 0.0}), sB);
    DD a = dd_sub(two_prod(r, r), dd_mul(w, w));
    double a_val = a.hi + a.lo;
    if (a_val < -kClampSlack) throw DomainError("z: inner radicand is negative");
    if (std::abs(a_val) <= kClampSlack) a_val = 0.0;
    Radicands out;
    out.B = std::max(B_val, 0.0);
    out.a = std::max(a_val, 0.0);
    out.sqrtB = sB.hi + sB.lo;
    out.sqrta = a_val <= 0.0 ? 0.0 : std::sqrt(a_val);
    return out;
}

}  // namespace

double z(double r, double x) {
    if (!(r >= 1.0)) throw DomainError("z requires r >= 1");
    Radicands rad = radicands(r, x);
    double inner = r - x - rad.sqrta;
    return std::sqrt(x * x + inner * inner);
}

double z_prime(double r, double x) {
    if (!(r >= 1.0)) throw DomainError("z_prime requires r >= 1");
    double t = std::sqrt(r);
    double B = 2.0 * x - x * x;
    if (B < kPrimeGuard) throw DomainError("z_prime: radicand 2x - x^2 too close to zero");
    double sB = std::sqrt(B);
    double w = 2.0 * t - x - sB;
    double a = r * r - w * w;
    if (a < kPrimeGuard) throw DomainError("z_prime: inner radicand too close to zero");
    double sa = std::sqrt(a);

    double half_dA =
        (x - t * t) * ((2.0 * t - 1.0) * sB + 2.0 * x * x - (2.0 * t + 3.0) * x + 2.0 * t) / (sa * sB) +
        sa + (x * x - (2.0 * t + 1.0) * x + 2.0 * t) / sB - sB + 2.0 * x - t * t + 2.0 * t - 1.0;

    double inner = r - x - sa;
    double zx = std::sqrt(x * x + inner * inner);
    return half_dA / zx;  // dz/dx = (dA/dx) / (2z) with A = z^2
}

double interval_lo() { return 1.0 - 1.0 / std::sqrt(2.0); }

MuResult minimize_mu(double r, double tol) {
    if (!(r >= 1.0)) throw DomainError("minimize_mu requires r >= 1");
    if (!(tol >= 1e-14)) throw DomainError("minimize_mu requires tol >= 1e-14");

    const double lo = interval_lo() + kEndpointInset;
    const double hi = 1.0 - kEndpointInset;

    // Scout pass: a single valley shows as at most one sign change (- to +)
    // in the successive differences. A monotone scout is still unimodal with
    // the valley hidden in an end cell (x_m approaches 1 like 1 - 2/sqrt(r)
    // for large r).
    constexpr int kScout = 64;
    std::array<double, kScout> zs{};
    for (int i = 0; i < kScout; ++i) {
        double x = lo + (hi - lo) * static_cast<double>(i) / (kScout - 1);
        zs[static_cast<size_t>(i)] = z(r, x);
    }
    int changes = 0;
    int first_sign = 0;
    int prev_sign = 0;
    int argmin = 0;
    for (int i = 1; i < kScout; ++i) {
        if (zs[static_cast<size_t>(i)] < zs[static_cast<size_t>(argmin)]) argmin = i;
        double diff = zs[static_cast<size_t>(i)] - zs[static_cast<size_t>(i - 1)];
        int sign = diff > 0.0 ? 1 : (diff < 0.0 ? -1 : 0);
        if (sign == 0) continue;
        if (first_sign == 0) first_sign = sign;
        if (prev_sign != 0 && sign != prev_sign) ++changes;
        prev_sign = sign;
    }
    bool rises_then_falls = changes == 1 && first_sign == 1;
    if (changes > 1 || rises_then_falls)
        throw ConvergenceError("minimize_mu: scout grid is not unimodal (internal error)");

    auto grid_x = [&](int i) { return lo + (hi - lo) * static_cast<double>(i) / (kScout - 1); };
    double a = argmin > 0 ? grid_x(argmin - 1) : lo;
    double b = argmin < kScout - 1 ? grid_x(argmin + 1) : hi;

    // Brent minimization on [a, b].
    const double gold = 0.3819660112501051;
    double x = a + gold * (b - a);
    double w = x, v = x;
    double fx = z(r, x), fw = fx, fv = fx;
    double d = 0.0, e = 0.0;
    int iter = 0;
    for (; iter < 200; ++iter) {
        double m = 0.5 * (a + b);
        double tol1 = tol * std::abs(x) + 1e-18;
        double tol2 = 2.0 * tol1;
        if (std::abs(x - m) <= tol2 - 0.5 * (b - a)) break;
        double p = 0.0, q = 0.0, rr = 0.0;
        bool parabolic = false;
        if (std::abs(e) > tol1) {
            rr = (x - w) * (fx - fv);
            q = (x - v) * (fx - fw);
            p = (x - v) * q - (x - w) * rr;
            q = 2.0 * (q - rr);
            if (q > 0.0) p = -p;
            q = std::abs(q);
            double etemp = e;
            e = d;
            if (std::abs(p) < std::abs(0.5 * q * etemp) && p > q * (a - x) && p < q * (b - x)) {
                parabolic = true;
                d = p / q;
                double u = x + d;
                if (u - a < tol2 || b - u < tol2) d = (m > x) ? tol1 : -tol1;
            }
        }
        if (!parabolic) {
            e = (x < m) ? b - x : a - x;
            d = gold * e;
        }
        double u = (std::abs(d) >= tol1) ? x + d : x + ((d > 0.0) ? tol1 : -tol1);
        double fu = z(r, u);
        if (fu <= fx) {
            if (u < x) b = x; else a = x;
            v = w; fv = fw;
            w = x; fw = fx;
            x = u; fx = fu;
        } else {
            if (u < x) a = u; else b = u;
            if (fu <= fw || w == x) {
                v = w; fv = fw;
                w = u; fw = fu;
            } else if (fu <= fv || v == x || v == w) {
                v = u; fv = fu;
            }
        }
    }

    // Brent locates the argmin only to the function-value resolution
    // (~sqrt(eps)); Newton steps on the closed-form derivative recover the
    // remaining digits.
    for (int i = 0; i < 12; ++i) {
        double g = z_prime(r, x);
        double h = 1e-7 * std::max(1.0, std::abs(x));
        double g2 = (z_prime(r, x + h) - z_prime(r, x - h)) / (2.0 * h);
        if (!(std::abs(g2) > 0.0)) break;
        double step = g / g2;
        double next = x - step;
        if (!(next > lo && next < hi)) break;
        x = next;
        ++iter;
        if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(x))) break;
    }
    fx = z(r, x);

    MuResult out;
    out.r = r;
    out.x_m = x;
    out.mu = fx;
    out.iterations = iter;
    out.residual_zprime = std::abs(z_prime(r, x));
    return out;
}

double xi(double k) {
    if (!(k >= 1.0)) throw DomainError("xi requires k >= 1");
    return minimize_mu(k * k).x_m;
}

double lambda_fn(double k) {
    if (!(k >= 1.0)) throw DomainError("lambda requires k >= 1");
    double mu = minimize_mu(k * k).mu;
    return mu * mu;
}

}  // namespace morikawa::minimize
