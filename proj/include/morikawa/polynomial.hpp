#pragma once

#include <array>
#include <initializer_list>
#include <map>
#include <vector>

#include "morikawa/rational.hpp"

namespace morikawa {

// Dense univariate polynomial over Q, coefficients lowest degree first.
// The zero polynomial has an empty coefficient vector; otherwise the leading
// coefficient is nonzero.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs);
    UniPoly(std::initializer_list<Rational> coeffs);

    static UniPoly constant(const Rational& c);

    bool is_zero() const { return coeffs_.empty(); }
    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Rational coeff(int k) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational leading() const;
    Rational max_abs_coeff() const;

    Rational eval(const Rational& x) const;
    // Compensated Horner: error-free transformations keep the rounding error
    // near one ulp even when terms cancel.
    double eval(double x) const;

    UniPoly operator-() const;
    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const Rational& c, const UniPoly& a);
    friend bool operator==(const UniPoly& a, const UniPoly& b) = default;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

// Sparse polynomial in (t, x) over Q, keyed by exponent pair. No stored zero
// coefficients.
class BivarPoly {
public:
    struct Exp {
        int t = 0;
        int x = 0;
        auto operator<=>(const Exp&) const = default;
    };

    BivarPoly() = default;
    static BivarPoly term(const Rational& c, int deg_t, int deg_x);
    static BivarPoly constant(const Rational& c) { return term(c, 0, 0); }

    bool is_zero() const { return terms_.empty(); }
    int degree_t() const;
    int degree_x() const;
    Rational coeff(int deg_t, int deg_x) const;
    const std::map<Exp, Rational>& terms() const { return terms_; }
    Rational max_abs_coeff() const;

    void set(int deg_t, int deg_x, const Rational& c);

    Rational eval(const Rational& t, const Rational& x) const;
    double eval(double t, double x) const;

    // Exact substitution t = t0; result is a polynomial in x.
    UniPoly specialize_t(const Rational& t0) const;
    // Coefficient of x^k as a polynomial in t.
    UniPoly coeff_in_x(int deg_x) const;

    BivarPoly operator-() const;
    friend BivarPoly operator+(const BivarPoly& a, const BivarPoly& b);
    friend BivarPoly operator-(const BivarPoly& a, const BivarPoly& b);
    friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);
    friend bool operator==(const BivarPoly& a, const BivarPoly& b) = default;

private:
    void add_term(const Exp& e, const Rational& c);
    std::map<Exp, Rational> terms_;
};

// Sparse polynomial in (k, x, y) over Q.
class TrivarPoly {
public:
    using Exp = std::array<int, 3>;  // (deg_k, deg_x, deg_y)

    TrivarPoly() = default;
    static TrivarPoly term(const Rational& c, int deg_k, int deg_x, int deg_y);
    static TrivarPoly constant(const Rational& c) { return term(c, 0, 0, 0); }

    bool is_zero() const { return terms_.empty(); }
    int degree_k() const;
    int degree_x() const;
    int degree_y() const;
    Rational coeff(int deg_k, int deg_x, int deg_y) const;
    const std::map<Exp, Rational>& terms() const { return terms_; }
    Rational max_abs_coeff() const;

    Rational eval(const Rational& k, const Rational& x, const Rational& y) const;
    double eval(double k, double x, double y) const;

    // Coefficients of powers of y after the exact substitution k = k0;
    // element [j] is the x-polynomial multiplying y^j.
    std::vector<UniPoly> specialize_k_y_coeffs(const Rational& k0) const;

    TrivarPoly operator-() const;
    friend TrivarPoly operator+(const TrivarPoly& a, const TrivarPoly& b);
    friend TrivarPoly operator-(const TrivarPoly& a, const TrivarPoly& b);
    friend TrivarPoly operator*(const TrivarPoly& a, const TrivarPoly& b);
    friend bool operator==(const TrivarPoly& a, const TrivarPoly& b) = default;

private:
    void add_term(const Exp& e, const Rational& c);
    std::map<Exp, Rational> terms_;
};

// Resultant of a and b: determinant of the Sylvester matrix whose rows hold
// coefficients in ascending degree order, a's rows first. Under this
// convention Res(x-u, x-v) = v-u. Evaluated by fraction-free Bareiss
// elimination. Throws DegenerateInput if either polynomial is zero.
Rational resultant(const UniPoly& a, const UniPoly& b);

// Resultant in y of sum_j a_ycoeffs[j](x) * y^j against q(y), returned as an
// exact polynomial in x (computed by evaluation at rational nodes followed by
// Lagrange interpolation). The leading y-coefficient must not vanish
// identically.
UniPoly resultant_y(const std::vector<UniPoly>& a_ycoeffs, const UniPoly& q);

}  // namespace morikawa
