#include "morikawa/polynomial.hpp"

#include <algorithm>
#include <cmath>

namespace morikawa {

// ---------------------------------------------------------------------------
// UniPoly

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly::UniPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

UniPoly UniPoly::constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational UniPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rational(0);
    return coeffs_[static_cast<size_t>(k)];
}

Rational UniPoly::leading() const {
    return coeffs_.empty() ? Rational(0) : coeffs_.back();
}

Rational UniPoly::max_abs_coeff() const {
    Rational m(0);
    for (const auto& c : coeffs_) {
        Rational a = c < 0 ? Rational(-c) : c;
        if (a > m) m = a;
    }
    return m;
}

Rational UniPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double UniPoly::eval(double x) const {
    if (coeffs_.empty()) return 0.0;
    double s = to_double(coeffs_.back());
    double e = 0.0;
    for (auto it = coeffs_.rbegin() + 1; it != coeffs_.rend(); ++it) {
        double p = s * x;
        double pe = std::fma(s, x, -p);
        double ci = to_double(*it);
        double t = p + ci;
        double zz = t - p;
        double te = (p - (t - zz)) + (ci - zz);
        s = t;
        e = e * x + (pe + te);
    }
    return s + e;
}

UniPoly UniPoly::operator-() const {
    std::vector<Rational> out(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = -coeffs_[i];
    return UniPoly(std::move(out));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
    return UniPoly(std::move(out));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
        for (size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return UniPoly(std::move(out));
}

UniPoly operator*(const Rational& c, const UniPoly& a) {
    if (c == 0) return UniPoly();
    std::vector<Rational> out(a.coeffs_.size());
    for (size_t i = 0; i < a.coeffs_.size(); ++i) out[i] = c * a.coeffs_[i];
    return UniPoly(std::move(out));
}

// ---------------------------------------------------------------------------
// BivarPoly

BivarPoly BivarPoly::term(const Rational& c, int deg_t, int deg_x) {
    BivarPoly p;
    if (c != 0) p.terms_[{deg_t, deg_x}] = c;
    return p;
}

void BivarPoly::add_term(const Exp& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void BivarPoly::set(int deg_t, int deg_x, const Rational& c) {
    Exp e{deg_t, deg_x};
    terms_.erase(e);
    if (c != 0) terms_[e] = c;
}

int BivarPoly::degree_t() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.t);
    return d;
}

int BivarPoly::degree_x() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.x);
    return d;
}

Rational BivarPoly::coeff(int deg_t, int deg_x) const {
    auto it = terms_.find({deg_t, deg_x});
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational BivarPoly::max_abs_coeff() const {
    Rational m(0);
    for (const auto& [e, c] : terms_) {
        Rational a = c < 0 ? Rational(-c) : c;
        if (a > m) m = a;
    }
    return m;
}

Rational BivarPoly::eval(const Rational& t, const Rational& x) const {
    // Exact: Horner in x over exactly evaluated t-coefficients.
    Rational acc(0);
    for (int j = degree_x(); j >= 0; --j) acc = acc * x + coeff_in_x(j).eval(t);
    return acc;
}

double BivarPoly::eval(double t, double x) const {
    int dx = degree_x();
    if (dx < 0) return 0.0;
    // Compensated Horner in x over t-coefficients that were themselves
    // evaluated with compensated Horner.
    std::vector<double> cx(static_cast<size_t>(dx) + 1, 0.0);
    for (int j = 0; j <= dx; ++j) cx[static_cast<size_t>(j)] = coeff_in_x(j).eval(t);
    double s = cx.back();
    double e = 0.0;
    for (auto it = cx.rbegin() + 1; it != cx.rend(); ++it) {
        double p = s * x;
        double pe = std::fma(s, x, -p);
        double tt = p + *it;
        double zz = tt - p;
        double te = (p - (tt - zz)) + (*it - zz);
        s = tt;
        e = e * x + (pe + te);
    }
    return s + e;
}

UniPoly BivarPoly::specialize_t(const Rational& t0) const {
    int dx = degree_x();
    if (dx < 0) return UniPoly();
    std::vector<Rational> out(static_cast<size_t>(dx) + 1, Rational(0));
    for (int j = 0; j <= dx; ++j) out[static_cast<size_t>(j)] = coeff_in_x(j).eval(t0);
    return UniPoly(std::move(out));
}

UniPoly BivarPoly::coeff_in_x(int deg_x) const {
    std::vector<Rational> out;
    for (const auto& [e, c] : terms_) {
        if (e.x != deg_x) continue;
        if (static_cast<int>(out.size()) <= e.t) out.resize(static_cast<size_t>(e.t) + 1, Rational(0));
        out[static_cast<size_t>(e.t)] = c;
    }
    return UniPoly(std::move(out));
}

BivarPoly BivarPoly::operator-() const {
    BivarPoly out;
    for (const auto& [e, c] : terms_) out.terms_[e] = -c;
    return out;
}

BivarPoly operator+(const BivarPoly& a, const BivarPoly& b) {
    BivarPoly out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(e, c);
    return out;
}

BivarPoly operator-(const BivarPoly& a, const BivarPoly& b) { return a + (-b); }

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
    BivarPoly out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            out.add_term({ea.t + eb.t, ea.x + eb.x}, ca * cb);
    return out;
}

// ---------------------------------------------------------------------------
// TrivarPoly

TrivarPoly TrivarPoly::term(const Rational& c, int deg_k, int deg_x, int deg_y) {
    TrivarPoly p;
    if (c != 0) p.terms_[{deg_k, deg_x, deg_y}] = c;
    return p;
}

void TrivarPoly::add_term(const Exp& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

int TrivarPoly::degree_k() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[0]);
    return d;
}

int TrivarPoly::degree_x() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[1]);
    return d;
}

int TrivarPoly::degree_y() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[2]);
    return d;
}

Rational TrivarPoly::coeff(int deg_k, int deg_x, int deg_y) const {
    auto it = terms_.find({deg_k, deg_x, deg_y});
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational TrivarPoly::max_abs_coeff() const {
    Rational m(0);
    for (const auto& [e, c] : terms_) {
        Rational a = c < 0 ? Rational(-c) : c;
        if (a > m) m = a;
    }
    return m;
}

Rational TrivarPoly::eval(const Rational& k, const Rational& x, const Rational& y) const {
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (int i = 0; i < e[0]; ++i) term *= k;
        for (int i = 0; i < e[1]; ++i) term *= x;
        for (int i = 0; i < e[2]; ++i) term *= y;
        acc += term;
    }
    return acc;
}

double TrivarPoly::eval(double k, double x, double y) const {
    // Terms are accumulated with Neumaier summation; products are exact
    // powers times the coefficient.
    double sum = 0.0, comp = 0.0;
    for (const auto& [e, c] : terms_) {
        double term = to_double(c);
        for (int i = 0; i < e[0]; ++i) term *= k;
        for (int i = 0; i < e[1]; ++i) term *= x;
        for (int i = 0; i < e[2]; ++i) term *= y;
        double t = sum + term;
        if (std::abs(sum) >= std::abs(term))
            comp += (sum - t) + term;
        else
            comp += (term - t) + sum;
        sum = t;
    }
    return sum + comp;
}

std::vector<UniPoly> TrivarPoly::specialize_k_y_coeffs(const Rational& k0) const {
    int dy = degree_y();
    int dx = degree_x();
    if (dy < 0) return {};
    std::vector<std::vector<Rational>> buckets(
        static_cast<size_t>(dy) + 1,
        std::vector<Rational>(static_cast<size_t>(std::max(dx, 0)) + 1, Rational(0)));
    for (const auto& [e, c] : terms_) {
        Rational kpow(1);
        for (int i = 0; i < e[0]; ++i) kpow *= k0;
        buckets[static_cast<size_t>(e[2])][static_cast<size_t>(e[1])] += c * kpow;
    }
    std::vector<UniPoly> out;
    out.reserve(buckets.size());
    for (auto& b : buckets) out.emplace_back(std::move(b));
    return out;
}

TrivarPoly TrivarPoly::operator-() const {
    TrivarPoly out;
    for (const auto& [e, c] : terms_) out.terms_[e] = -c;
    return out;
}

TrivarPoly operator+(const TrivarPoly& a, const TrivarPoly& b) {
    TrivarPoly out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(e, c);
    return out;
}

TrivarPoly operator-(const TrivarPoly& a, const TrivarPoly& b) { return a + (-b); }

TrivarPoly operator*(const TrivarPoly& a, const TrivarPoly& b) {
    TrivarPoly out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            out.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
    return out;
}

// ---------------------------------------------------------------------------
// Resultants

namespace {

// Fraction-free Bareiss determinant; consumes the matrix.
Rational bareiss_determinant(std::vector<std::vector<Rational>>& m) {
    const size_t n = m.size();
    if (n == 0) return Rational(1);
    int sign = 1;
    Rational prev(1);
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return Rational(0);
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : Rational(-m[n - 1][n - 1]);
}

std::vector<std::vector<Rational>> sylvester_matrix(const UniPoly& a, const UniPoly& b) {
    const int m = a.degree();
    const int n = b.degree();
    const size_t size = static_cast<size_t>(m + n);
    std::vector<std::vector<Rational>> mat(size, std::vector<Rational>(size, Rational(0)));
    // n shifted rows of a (ascending coefficients), then m rows of b.
    for (int row = 0; row < n; ++row)
        for (int j = 0; j <= m; ++j) mat[static_cast<size_t>(row)][static_cast<size_t>(row + j)] = a.coeff(j);
    for (int row = 0; row < m; ++row)
        for (int j = 0; j <= n; ++j) mat[static_cast<size_t>(n + row)][static_cast<size_t>(row + j)] = b.coeff(j);
    return mat;
}

}  // namespace

Rational resultant(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) throw DegenerateInput("resultant of a zero polynomial");
    if (a.degree() == 0 && b.degree() == 0) return Rational(1);
    auto mat = sylvester_matrix(a, b);
    return bareiss_determinant(mat);
}

UniPoly resultant_y(const std::vector<UniPoly>& a_ycoeffs, const UniPoly& q) {
    if (q.is_zero()) throw DegenerateInput("resultant against the zero polynomial");
    int dy = static_cast<int>(a_ycoeffs.size()) - 1;
    while (dy >= 0 && a_ycoeffs[static_cast<size_t>(dy)].is_zero()) --dy;
    if (dy < 0) throw DegenerateInput("resultant of the zero polynomial");

    int max_dx = 0;
    for (int j = 0; j <= dy; ++j) max_dx = std::max(max_dx, a_ycoeffs[static_cast<size_t>(j)].degree());

    // At a node where the leading y-coefficient vanishes the specialized
    // Sylvester determinant is not the value of the resultant polynomial, so
    // such nodes are skipped.
    const UniPoly& lead = a_ycoeffs[static_cast<size_t>(dy)];

    const int bound = max_dx * q.degree();  // degree bound for the result
    const int samples = bound + 1;

    std::vector<Rational> nodes, values;
    nodes.reserve(static_cast<size_t>(samples));
    values.reserve(static_cast<size_t>(samples));
    Rational node(0);
    while (static_cast<int>(nodes.size()) < samples) {
        if (lead.eval(node) != 0) {
            std::vector<Rational> slice(static_cast<size_t>(dy) + 1);
            for (int j = 0; j <= dy; ++j) slice[static_cast<size_t>(j)] = a_ycoeffs[static_cast<size_t>(j)].eval(node);
            nodes.push_back(node);
            values.push_back(resultant(UniPoly(std::move(slice)), q));
        }
        node += 1;
    }

    // Lagrange interpolation over Q.
    UniPoly acc;
    for (int i = 0; i < samples; ++i) {
        UniPoly basis = UniPoly::constant(Rational(1));
        Rational denom(1);
        for (int j = 0; j < samples; ++j) {
            if (i == j) continue;
            basis = basis * UniPoly{-nodes[static_cast<size_t>(j)], Rational(1)};
            denom *= nodes[static_cast<size_t>(i)] - nodes[static_cast<size_t>(j)];
        }
        acc = acc + (values[static_cast<size_t>(i)] / denom) * basis;
    }
    return acc;
}

}  // namespace morikawa
