#pragma once

/**
 * @file binary_form.hpp
 * @brief Dense binary forms and the differentiation action.
 *
 * A BinaryForm of degree d stores exactly d+1 raw coefficients c_0..c_d of
 * the monomials x^{d-i} y^i. No binomial weights are built in. The same type
 * represents elements of the operator ring, where x and y are read as the
 * partial derivatives X and Y.
 *
 * The degree is ambient: leading or trailing coefficients may vanish, and the
 * zero form of any degree is representable.
 */

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "waring/errors.hpp"
#include "waring/field.hpp"

namespace waring {

template <RationalAlgebra R>
class BinaryForm {
public:
    BinaryForm() : coeffs_(1, R(Rational(0))) {}

    explicit BinaryForm(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw validation_error("binary form needs at least one coefficient");
    }

    BinaryForm(std::initializer_list<R> coeffs) : BinaryForm(std::vector<R>(coeffs)) {}

    static BinaryForm zero(int degree) {
        check_degree(degree);
        return BinaryForm(std::vector<R>(static_cast<std::size_t>(degree) + 1, R(Rational(0))));
    }

    /// x^{d-i} y^i scaled by `c`.
    static BinaryForm monomial(int degree, int y_power, R const& c = R(Rational(1))) {
        BinaryForm f = zero(degree);
        if (y_power < 0 || y_power > degree) throw validation_error("monomial exponent out of range");
        f.coeffs_[static_cast<std::size_t>(y_power)] = c;
        return f;
    }

    /// a*x + b*y.
    static BinaryForm linear(R const& a, R const& b) { return BinaryForm(std::vector<R>{a, b}); }

    static BinaryForm constant(R const& c) { return BinaryForm(std::vector<R>{c}); }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    std::span<R const> coeffs() const { return coeffs_; }
    R const& coeff(int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
    R const& operator[](int i) const { return coeffs_[static_cast<std::size_t>(i)]; }

    bool is_zero() const {
        using waring::is_zero;
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](R const& c) { return is_zero(c); });
    }

    /// Index of the first nonzero coefficient, or -1 for the zero form.
    int leading_index() const {
        using waring::is_zero;
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (!is_zero(coeffs_[i])) return static_cast<int>(i);
        return -1;
    }

    /// Index of the last nonzero coefficient, or -1 for the zero form.
    int trailing_index() const {
        using waring::is_zero;
        for (std::size_t i = coeffs_.size(); i-- > 0;)
            if (!is_zero(coeffs_[i])) return static_cast<int>(i);
        return -1;
    }

    friend bool operator==(BinaryForm const& a, BinaryForm const& b) { return a.coeffs_ == b.coeffs_; }

    friend BinaryForm operator+(BinaryForm const& a, BinaryForm const& b) {
        same_degree(a, b);
        std::vector<R> r(a.coeffs_.size());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeffs_[i] + b.coeffs_[i];
        return BinaryForm(std::move(r));
    }
    friend BinaryForm operator-(BinaryForm const& a, BinaryForm const& b) {
        same_degree(a, b);
        std::vector<R> r(a.coeffs_.size());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeffs_[i] - b.coeffs_[i];
        return BinaryForm(std::move(r));
    }
    BinaryForm operator-() const { return scaled(R(Rational(-1))); }

    friend BinaryForm operator*(BinaryForm const& a, BinaryForm const& b) {
        std::vector<R> r(a.coeffs_.size() + b.coeffs_.size() - 1, R(Rational(0)));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                r[i + j] = r[i + j] + a.coeffs_[i] * b.coeffs_[j];
        return BinaryForm(std::move(r));
    }

    BinaryForm scaled(R const& s) const {
        std::vector<R> r(coeffs_.size());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeffs_[i] * s;
        return BinaryForm(std::move(r));
    }

    BinaryForm pow(unsigned e) const {
        BinaryForm r = constant(R(Rational(1)));
        for (unsigned k = 0; k < e; ++k) r = r * *this;
        return r;
    }

    /// f(y, x).
    BinaryForm swapped() const {
        std::vector<R> r(coeffs_.rbegin(), coeffs_.rend());
        return BinaryForm(std::move(r));
    }

    /// f(a x + b y, c x + e y).
    BinaryForm substituted(R const& a, R const& b, R const& c, R const& e) const {
        BinaryForm lx = linear(a, b), ly = linear(c, e);
        BinaryForm r = zero(degree());
        int d = degree();
        for (int i = 0; i <= d; ++i) {
            using waring::is_zero;
            if (is_zero(coeffs_[static_cast<std::size_t>(i)])) continue;
            r = r + (lx.pow(static_cast<unsigned>(d - i)) * ly.pow(static_cast<unsigned>(i)))
                        .scaled(coeffs_[static_cast<std::size_t>(i)]);
        }
        return r;
    }

    /// f(x + c y, y).
    BinaryForm sheared(R const& c) const {
        return substituted(R(Rational(1)), c, R(Rational(0)), R(Rational(1)));
    }

    BinaryForm derivative_x() const {
        if (degree() == 0) return zero(0);
        int d = degree();
        std::vector<R> r(static_cast<std::size_t>(d));
        for (int i = 0; i < d; ++i) r[static_cast<std::size_t>(i)] = coeffs_[static_cast<std::size_t>(i)] * R(Rational(d - i));
        return BinaryForm(std::move(r));
    }

    BinaryForm derivative_y() const {
        if (degree() == 0) return zero(0);
        int d = degree();
        std::vector<R> r(static_cast<std::size_t>(d));
        for (int i = 1; i <= d; ++i) r[static_cast<std::size_t>(i - 1)] = coeffs_[static_cast<std::size_t>(i)] * R(Rational(i));
        return BinaryForm(std::move(r));
    }

    /// Human-readable and re-parseable, e.g. "x^3 + 2*x*y^2 - y^3".
    std::string to_string(char x = 'x', char y = 'y') const {
        using waring::is_zero;
        std::string out;
        int d = degree();
        for (int i = 0; i <= d; ++i) {
            R const& c = coeffs_[static_cast<std::size_t>(i)];
            if (is_zero(c)) continue;
            std::string coeff = waring::to_string(c);
            bool negative = coeff[0] == '-' && coeff.find_first_of("+-", 1) == std::string::npos;
            if (negative) coeff.erase(0, 1);
            if (coeff.find_first_of("+-") != std::string::npos) coeff = "(" + coeff + ")";
            std::string mono;
            auto append = [&](char v, int e) {
                if (e == 0) return;
                if (!mono.empty()) mono += "*";
                mono += v;
                if (e > 1) mono += "^" + std::to_string(e);
            };
            append(x, d - i);
            append(y, i);
            std::string body = mono.empty() ? coeff : (coeff == "1" ? mono : coeff + "*" + mono);
            if (out.empty())
                out = negative ? "-" + body : body;
            else
                out += (negative ? " - " : " + ") + body;
        }
        return out.empty() ? "0" : out;
    }

private:
    static void check_degree(int degree) {
        if (degree < 0) throw validation_error("negative degree");
    }
    static void same_degree(BinaryForm const& a, BinaryForm const& b) {
        if (a.degree() != b.degree())
            throw validation_error("adding binary forms of degrees " + std::to_string(a.degree()) +
                                   " and " + std::to_string(b.degree()));
    }

    std::vector<R> coeffs_;
};

/// Action of the operator q(X, Y), X = d/dx and Y = d/dy, on f. Bilinear.
template <RationalAlgebra R>
BinaryForm<R> apply_operator(BinaryForm<R> const& q, BinaryForm<R> const& f) {
    int s = q.degree(), d = f.degree();
    if (s > d)
        throw validation_error("operator of degree " + std::to_string(s) +
                               " applied to a form of degree " + std::to_string(d));
    std::vector<R> out(static_cast<std::size_t>(d - s) + 1, R(Rational(0)));
    using waring::is_zero;
    for (int j = 0; j <= s; ++j) {
        R const& qj = q[j];
        if (is_zero(qj)) continue;
        // X^{s-j} Y^j applied to x^{d-i} y^i lands on x^{d-s-(i-j)} y^{i-j}.
        for (int i = j; i <= d - (s - j); ++i) {
            R const& ci = f[i];
            if (is_zero(ci)) continue;
            Rational weight = falling_factorial(d - i, s - j) * falling_factorial(i, j);
            out[static_cast<std::size_t>(i - j)] = out[static_cast<std::size_t>(i - j)] + qj * ci * R(weight);
        }
    }
    return BinaryForm<R>(std::move(out));
}

namespace detail {

// Univariate helpers over a field; coefficient vectors in ascending powers.
template <ExactField F>
void trim(std::vector<F>& p) {
    while (!p.empty() && is_zero(p.back())) p.pop_back();
}

template <ExactField F>
std::vector<F> poly_rem(std::vector<F> a, std::vector<F> const& b) {
    trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        F factor = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = a[shift + i] - factor * b[i];
        a.pop_back();
        trim(a);
    }
    return a;
}

template <ExactField F>
std::vector<F> poly_gcd(std::vector<F> a, std::vector<F> b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        auto r = poly_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

}  // namespace detail

/// Scales so the first nonzero coefficient is 1. The zero form is returned unchanged.
template <ExactField F>
BinaryForm<F> normalized(BinaryForm<F> const& f) {
    int k = f.leading_index();
    if (k < 0) return f;
    return f.scaled(F(Rational(1)) / f[k]);
}

/**
 * Greatest common divisor, normalized so its first nonzero coefficient is 1.
 *
 * Each input is written as y^k * p(x, y) with p(1, 0) != 0; the powers of y
 * (roots at [1:0]) are matched separately and the rest goes through the
 * Euclidean algorithm on p(x, 1).
 */
template <ExactField F>
BinaryForm<F> form_gcd(BinaryForm<F> const& p, BinaryForm<F> const& q) {
    if (p.is_zero() && q.is_zero()) throw validation_error("gcd of two zero forms");
    if (p.is_zero()) return normalized(q);
    if (q.is_zero()) return normalized(p);

    auto dehomogenize = [](BinaryForm<F> const& f) {
        int k = f.leading_index();
        std::vector<F> u;
        // p(x, 1) = sum_{i >= k} c_i x^{d-i}: ascending powers run from c_d up to c_k.
        for (int i = f.degree(); i >= k; --i) u.push_back(f[i]);
        return std::pair{k, u};
    };
    auto [kp, up] = dehomogenize(p);
    auto [kq, uq] = dehomogenize(q);
    auto g = detail::poly_gcd(up, uq);
    int e = static_cast<int>(g.size()) - 1;
    int ypow = std::min(kp, kq);
    std::vector<F> coeffs(static_cast<std::size_t>(e + ypow) + 1, F(Rational(0)));
    // g(x) of degree e re-homogenizes to sum g_m x^m y^{e-m}.
    for (int m = 0; m <= e; ++m) coeffs[static_cast<std::size_t>(e - m + ypow)] = g[static_cast<std::size_t>(m)];
    return normalized(BinaryForm<F>(std::move(coeffs)));
}

/// True iff g has no repeated linear factor over an algebraic closure.
template <ExactField F>
bool is_squarefree(BinaryForm<F> const& g) {
    if (g.is_zero()) throw validation_error("squarefree test on the zero form");
    if (g.degree() <= 1) return true;
    return form_gcd(g.derivative_x(), g.derivative_y()).degree() == 0;
}

/// f / g when g divides f exactly; throws otherwise.
template <ExactField F>
BinaryForm<F> exact_divide(BinaryForm<F> const& f, BinaryForm<F> const& g) {
    int kg = g.leading_index();
    if (kg < 0) throw validation_error("division by the zero form");
    int df = f.degree(), dg = g.degree();
    if (dg > df) throw validation_error("divisor degree exceeds dividend degree");
    int dq = df - dg;
    std::vector<F> q(static_cast<std::size_t>(dq) + 1, F(Rational(0)));
    for (int i = 0; i <= dq; ++i) {
        if (i + kg > df) break;
        F acc = f[i + kg];
        for (int j = 0; j < i; ++j) {
            int gi = i + kg - j;
            if (gi <= dg) acc = acc - q[static_cast<std::size_t>(j)] * g[gi];
        }
        q[static_cast<std::size_t>(i)] = acc / g[kg];
    }
    BinaryForm<F> quotient(std::move(q));
    if (!(quotient * g == f)) throw validation_error("form is not divisible by " + g.to_string());
    return quotient;
}

/// Product of the linear forms a_i x + b_i y.
template <RationalAlgebra R>
BinaryForm<R> product_of_linear(std::vector<std::pair<R, R>> const& factors) {
    BinaryForm<R> r = BinaryForm<R>::constant(R(Rational(1)));
    for (auto const& [a, b] : factors) r = r * BinaryForm<R>::linear(a, b);
    return r;
}

}  // namespace waring
