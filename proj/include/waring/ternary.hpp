#pragma once

/**
 * @file ternary.hpp
 * @brief Rank of the ternary form F = z * f(x, y).
 *
 * With Ann(f) = (g1, g2) and d1 = deg g1 <= d2 = deg g2, the apolar ideal
 * of z*f is (g1, g2, Z^2) and rank(z*f) = d1 * d2. Only the generator
 * structure is certified here, by differentiating z*f directly.
 */

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "waring/apolar.hpp"
#include "waring/invariants.hpp"
#include "waring/multipoly.hpp"
#include "waring/quadratic.hpp"

namespace waring {

template <ExactField F>
using TernaryPoly = MultiPoly<F, 3>;

/// Embeds a binary form (or operator) as a polynomial in x, y, z.
template <ExactField F>
TernaryPoly<F> to_ternary(BinaryForm<F> const& f) {
    TernaryPoly<F> p;
    int d = f.degree();
    for (int i = 0; i <= d; ++i) p.add_term({d - i, i, 0}, f[i]);
    return p;
}

template <ExactField F>
struct TernaryProductReport {
    BinaryForm<F> f;
    int d1 = 0;
    int d2 = 0;
    int ternary_rank = 0;
    std::array<int, 3> ann_generator_degrees{};
};

template <ExactField F>
void require_ternary_hypothesis(BinaryForm<F> const& f) {
    if (f.is_zero()) throw validation_error("z*f analysis of the zero form");
    if (is_pure_power(f))
        throw validation_error("z*f rank formula needs rank f >= 2; " + f.to_string() + " is a pure power");
}

template <ExactField F>
TernaryProductReport<F> ternary_rank_zf(BinaryForm<F> const& f) {
    require_ternary_hypothesis(f);
    auto pair = apolar_pair(f);
    TernaryProductReport<F> r;
    r.f = f;
    r.d1 = pair.d1();
    r.d2 = pair.d2();
    r.ternary_rank = r.d1 * r.d2;
    r.ann_generator_degrees = {r.d1, r.d2, 2};
    return r;
}

/// True iff `op` (in X, Y, Z) kills z*f.
template <ExactField F>
bool annihilates_zf(TernaryPoly<F> const& op, BinaryForm<F> const& f) {
    auto zf = TernaryPoly<F>::variable(2) * to_ternary(f);
    return zf.differentiate_by(op).is_zero();
}

/// g1(X, Y), g2(X, Y) and Z^2 each annihilate z*f.
template <ExactField F>
bool verify_ann_zf(BinaryForm<F> const& f) {
    require_ternary_hypothesis(f);
    auto pair = apolar_pair(f);
    TernaryPoly<F> z2 = TernaryPoly<F>::monomial({0, 0, 2}, F(Rational(1)));
    return annihilates_zf(to_ternary(pair.g1), f) && annihilates_zf(to_ternary(pair.g2), f) &&
           annihilates_zf(z2, f);
}

/// Line a x + b y + c z.
template <ExactField F>
using Line = std::array<F, 3>;

/**
 * Intersection lattice summary of a line arrangement: for each multiplicity
 * m >= 2, the number of points lying on exactly m lines.
 */
template <ExactField F>
std::map<int, int> intersection_multiplicities(std::vector<Line<F>> const& lines) {
    auto cross = [](Line<F> const& u, Line<F> const& v) {
        return Line<F>{u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
    };
    auto on_line = [](Line<F> const& p, Line<F> const& l) {
        return is_zero(p[0] * l[0] + p[1] * l[1] + p[2] * l[2]);
    };
    auto same_point = [&](Line<F> const& p, Line<F> const& q) {
        auto c = cross(p, q);
        return is_zero(c[0]) && is_zero(c[1]) && is_zero(c[2]);
    };
    std::vector<Line<F>> points;
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            auto p = cross(lines[i], lines[j]);
            if (is_zero(p[0]) && is_zero(p[1]) && is_zero(p[2]))
                throw validation_error("arrangement contains a repeated line");
            bool seen = false;
            for (auto const& q : points) seen = seen || same_point(p, q);
            if (!seen) points.push_back(p);
        }
    std::map<int, int> histogram;
    for (auto const& p : points) {
        int m = 0;
        for (auto const& l : lines) m += on_line(p, l) ? 1 : 0;
        ++histogram[m];
    }
    return histogram;
}

/// "m1^n1 m2^n2 ..." sorted by decreasing multiplicity, e.g. "4^1 2^4".
inline std::string lattice_descriptor(std::map<int, int> const& histogram) {
    std::string out;
    for (auto it = histogram.rbegin(); it != histogram.rend(); ++it) {
        if (!out.empty()) out += " ";
        out += std::to_string(it->first) + "^" + std::to_string(it->second);
    }
    return out;
}

struct CombinatoricsRow {
    std::string label;
    std::string parameters;
    int d1 = 0;
    int d2 = 0;
    int ternary_rank = 0;
    std::string lattice;
    bool ann_verified = false;
};

namespace detail {

template <ExactField F>
CombinatoricsRow combinatorics_row(std::string label, std::string parameters,
                                   std::vector<std::pair<F, F>> const& factors) {
    auto f = product_of_linear(factors);
    auto report = ternary_rank_zf(f);
    std::vector<Line<F>> lines;
    for (auto const& [a, b] : factors) lines.push_back({a, b, F(Rational(0))});
    lines.push_back({F(Rational(0)), F(Rational(0)), F(Rational(1))});
    return {std::move(label),  std::move(parameters), report.d1, report.d2, report.ternary_rank,
            lattice_descriptor(intersection_multiplicities(lines)), verify_ann_zf(f)};
}

}  // namespace detail

/**
 * Two arrangements z*f = 0 made of a pencil of d lines plus a transversal,
 * same combinatorics, different Waring ranks of z*f.
 *
 * d = 4: xy(x+y)(x+2y) and xy(x+y)(x+3y).
 * d = 5: f_{s,t} at the golden pair (phi, 1+phi) and at (2, 3).
 */
inline std::vector<CombinatoricsRow> combinatorics_vs_rank_demo(int degree) {
    Rational one(1), zero(0);
    if (degree == 4) {
        std::vector<CombinatoricsRow> rows;
        for (int t : {2, 3}) {
            std::vector<std::pair<Rational, Rational>> factors{{one, zero}, {zero, one}, {one, one}, {one, Rational(t)}};
            rows.push_back(detail::combinatorics_row<Rational>("t=" + std::to_string(t), "t=" + std::to_string(t), factors));
        }
        return rows;
    }
    if (degree == 5) {
        QuadExt qone(1), qzero(0);
        QuadExt phi = golden_ratio_plus();
        std::vector<std::pair<QuadExt, QuadExt>> golden{{qone, qzero}, {qzero, qone}, {qone, qone}, {qone, phi},
                                                        {qone, qone + phi}};
        std::vector<std::pair<Rational, Rational>> generic{{one, zero}, {zero, one}, {one, one}, {one, Rational(2)},
                                                           {one, Rational(3)}};
        return {detail::combinatorics_row<QuadExt>("golden", "s=" + phi.to_string() + ";t=" + (qone + phi).to_string(),
                                                   golden),
                detail::combinatorics_row<Rational>("generic", "s=2;t=3", generic)};
    }
    throw validation_error("combinatorics demo supports degree 4 or 5, got " + std::to_string(degree));
}

}  // namespace waring
