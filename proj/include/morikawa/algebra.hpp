#pragma once

#include "morikawa/polynomial.hpp"

namespace morikawa::algebra {

// The seven coefficient polynomials in (t, x), t = sqrt(r), that assemble the
// degree-10 certificate for the minimizing height x_m.
struct CoeffPolys {
    BivarPoly E, F, C, B, D, G, H;
};

const CoeffPolys& coeff_polys();

// B*(E*H + F*G - 2*C*D)^2 - (C^2*B + D^2 - E*B*G - F*H)^2, expanded exactly.
// Degree 10 in x; the x^6 terms of D^2 and E*B*G cancel identically in t. The
// leading x^10 coefficient is -128*(t^2+1)^2, nonzero for every real t.
const BivarPoly& build_p();

// Trivariate certificate h(k, x, y) annihilating (k, xi(k), lambda(k)):
//   h = (W^2 + 4*c3^2*c4 - 4*c1^2*c2 + 4*c1^2*c3^2 + 4*c1^2*c4)^2
//       - c4*(8*c1^2*c3 + 4*c3*W)^2,
// with c1 = k^2-x, c2 = k^4, c3 = 2k-x, c4 = 2x-x^2 and
// W = y - x^2 - c1^2 - c2 + c3^2 + c4. Degree 4 in y, monic in y.
const TrivarPoly& build_h();

// Exact substitution t = t0.
UniPoly specialize(const BivarPoly& poly, const Rational& t0);

Rational eval(const BivarPoly& poly, const Rational& t, const Rational& x);
double eval(const BivarPoly& poly, double t, double x);
Rational eval(const TrivarPoly& poly, const Rational& k, const Rational& x, const Rational& y);
double eval(const TrivarPoly& poly, double k, double x, double y);
Rational eval(const UniPoly& poly, const Rational& x);
double eval(const UniPoly& poly, double x);

using morikawa::resultant;

// Obstruction value for a putative certificate q(y) of the squared side
// length at k = k0: computes f(x) = Res_y(h(k0, x, .), q) exactly, then
// returns g = Res_x(f, p(k0, .)). A genuine certificate forces g to vanish
// for all k; a generic q gives g != 0.
Rational resultant_chain_check(const Rational& k0, const UniPoly& q_spec);

// Same, also exposing the intermediate f.
struct ChainCheckResult {
    UniPoly f;
    Rational g;
};
ChainCheckResult resultant_chain(const Rational& k0, const UniPoly& q_spec);

}  // namespace morikawa::algebra
