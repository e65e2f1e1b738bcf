#include "morikawa/algebra.hpp"

namespace morikawa::algebra {

namespace {

BivarPoly bivar_in_x(std::initializer_list<std::pair<int, BivarPoly>> x_coeffs) {
    BivarPoly out;
    for (const auto& [deg_x, coeff_t] : x_coeffs) {
        out = out + coeff_t * BivarPoly::term(Rational(1), 0, deg_x);
    }
    return out;
}

// Polynomial in t only, coefficients lowest degree first.
BivarPoly tpoly(std::initializer_list<long long> coeffs) {
    BivarPoly out;
    int deg = 0;
    for (long long c : coeffs) out = out + BivarPoly::term(Rational(c), deg++, 0);
    return out;
}

CoeffPolys make_coeff_polys() {
    CoeffPolys cp;
    // E = -2x + 4t
    cp.E = bivar_in_x({{1, tpoly({-2})}, {0, tpoly({0, 4})}});
    // F = (4t - 2)x + t^4 - 4t^2
    cp.F = bivar_in_x({{1, tpoly({-2, 4})}, {0, tpoly({0, 0, -4, 0, 1})}});
    // C = (6t - 3)x + t^4 - 2t^3 - 3t^2
    cp.C = bivar_in_x({{1, tpoly({-3, 6})}, {0, tpoly({0, 0, -3, -2, 1})}});
    // B = -x^2 + 2x
    cp.B = bivar_in_x({{2, tpoly({-1})}, {1, tpoly({2})}});
    // D = 4x^3 - (2t^2 + 6t + 7)x^2 + (2t^3 + 3t^2 + 10t)x - 2t^3
    cp.D = bivar_in_x({{3, tpoly({4})},
                       {2, tpoly({-7, -6, -2})},
                       {1, tpoly({0, 10, 3, 2})},
                       {0, tpoly({0, 0, 0, -2})}});
    // G = 8x^3 + (-4t^2 - 16)x^2 + (4t^3 - 2t^2 + 6)x - 4t^3 + 8t^2 - 4t
    cp.G = bivar_in_x({{3, tpoly({8})},
                       {2, tpoly({-16, 0, -4})},
                       {1, tpoly({6, 0, -2, 4})},
                       {0, tpoly({0, -4, 8, -4})}});
    // H = (4t^2 - 16t)x^3 + (-t^4 + 4t^3 - 10t^2 + 40t)x^2
    //     + (2t^4 - 8t^3 + 4t^2 - 20t + 2)x + 4t^2
    cp.H = bivar_in_x({{3, tpoly({0, -16, 4})},
                       {2, tpoly({0, 40, -10, 4, -1})},
                       {1, tpoly({2, -20, 4, -8, 2})},
                       {0, tpoly({0, 0, 4})}});
    return cp;
}

TrivarPoly make_h() {
    auto tv = [](long long c, int dk, int dx, int dy) { return TrivarPoly::term(Rational(c), dk, dx, dy); };
    TrivarPoly c1 = tv(1, 2, 0, 0) - tv(1, 0, 1, 0);             // k^2 - x
    TrivarPoly c2 = tv(1, 4, 0, 0);                              // k^4
    TrivarPoly c3 = tv(2, 1, 0, 0) - tv(1, 0, 1, 0);             // 2k - x
    TrivarPoly c4 = tv(2, 0, 1, 0) - tv(1, 0, 2, 0);             // 2x - x^2
    TrivarPoly y = tv(1, 0, 0, 1);
    TrivarPoly x2 = tv(1, 0, 2, 0);
    TrivarPoly W = y - x2 - c1 * c1 - c2 + c3 * c3 + c4;
    TrivarPoly four = TrivarPoly::constant(Rational(4));
    TrivarPoly eight = TrivarPoly::constant(Rational(8));
    TrivarPoly first =
        W * W + four * c3 * c3 * c4 - four * c1 * c1 * c2 + four * c1 * c1 * c3 * c3 + four * c1 * c1 * c4;
    TrivarPoly second = eight * c1 * c1 * c3 + four * c3 * W;
    return first * first - c4 * second * second;
}

}  // namespace

const CoeffPolys& coeff_polys() {
    static const CoeffPolys cp = make_coeff_polys();
    return cp;
}

const BivarPoly& build_p() {
    static const BivarPoly p = [] {
        const auto& c = coeff_polys();
        BivarPoly two = BivarPoly::constant(Rational(2));
        BivarPoly inner = c.E * c.H + c.F * c.G - two * c.C * c.D;
        BivarPoly outer = c.C * c.C * c.B + c.D * c.D - c.E * c.B * c.G - c.F * c.H;
        return c.B * inner * inner - outer * outer;
    }();
    return p;
}

const TrivarPoly& build_h() {
    static const TrivarPoly h = make_h();
    return h;
}

UniPoly specialize(const BivarPoly& poly, const Rational& t0) { return poly.specialize_t(t0); }

Rational eval(const BivarPoly& poly, const Rational& t, const Rational& x) { return poly.eval(t, x); }
double eval(const BivarPoly& poly, double t, double x) { return poly.eval(t, x); }
Rational eval(const TrivarPoly& poly, const Rational& k, const Rational& x, const Rational& y) {
    return poly.eval(k, x, y);
}
double eval(const TrivarPoly& poly, double k, double x, double y) { return poly.eval(k, x, y); }
Rational eval(const UniPoly& poly, const Rational& x) { return poly.eval(x); }
double eval(const UniPoly& poly, double x) { return poly.eval(x); }

ChainCheckResult resultant_chain(const Rational& k0, const UniPoly& q_spec) {
    if (q_spec.is_zero()) throw DegenerateInput("q_spec is the zero polynomial");
    auto h_slices = build_h().specialize_k_y_coeffs(k0);
    ChainCheckResult out;
    out.f = resultant_y(h_slices, q_spec);
    UniPoly p_k0 = specialize(build_p(), k0);
    if (out.f.is_zero() || p_k0.is_zero()) {
        // Res_x with a zero operand is degenerate; a vanishing f already
        // certifies the obstruction value 0.
        out.g = Rational(0);
        return out;
    }
    if (out.f.degree() == 0 && p_k0.degree() == 0) {
        out.g = Rational(1);
        return out;
    }
    out.g = resultant(out.f, p_k0);
    return out;
}

Rational resultant_chain_check(const Rational& k0, const UniPoly& q_spec) {
    if (k0 < 1) throw DomainError("resultant_chain_check requires k0 >= 1");
    return resultant_chain(k0, q_spec).g;
}

}  // namespace morikawa::algebra
