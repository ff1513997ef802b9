#pragma once

/**
 * @file apolar.hpp
 * @brief Catalecticant matrices and the two generators of the apolar ideal.
 */

#include <optional>
#include <string>
#include <vector>

#include "waring/binary_form.hpp"
#include "waring/matrix.hpp"

namespace waring {

/// Matrix of q -> q.f from operators of degree s to forms of degree d-s.
/// Column j is X^{s-j} Y^j applied to f; rows follow x^{d-s-i} y^i.
template <RationalAlgebra R>
std::vector<std::vector<R>> catalecticant_entries(BinaryForm<R> const& f, int s) {
    int d = f.degree();
    if (s < 0 || s > d)
        throw validation_error("catalecticant degree " + std::to_string(s) + " outside [0, " +
                               std::to_string(d) + "]");
    std::vector<std::vector<R>> m(static_cast<std::size_t>(d - s) + 1,
                                  std::vector<R>(static_cast<std::size_t>(s) + 1, R(Rational(0))));
    for (int j = 0; j <= s; ++j) {
        auto column = apply_operator(BinaryForm<R>::monomial(s, j), f);
        for (int i = 0; i <= d - s; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = column[i];
    }
    return m;
}

template <ExactField F>
ExactMatrix<F> catalecticant(BinaryForm<F> const& f, int s) {
    return ExactMatrix<F>(catalecticant_entries(f, s));
}

/// Basis of Ann(f)_s as operators, in reduced-echelon order.
template <ExactField F>
std::vector<BinaryForm<F>> annihilator_component(BinaryForm<F> const& f, int s) {
    std::vector<BinaryForm<F>> out;
    for (auto& v : nullspace(catalecticant(f, s))) out.emplace_back(std::move(v));
    return out;
}

template <ExactField F>
int kernel_dimension(BinaryForm<F> const& f, int s) {
    auto m = catalecticant(f, s);
    return static_cast<int>(m.cols() - rank(m));
}

template <ExactField F>
struct ApolarPair {
    BinaryForm<F> g1;
    BinaryForm<F> g2;
    BinaryForm<F> source;

    int d1() const { return g1.degree(); }
    int d2() const { return g2.degree(); }
};

/// Ann(f)_1 != 0, i.e. f is a power of a linear form (or has degree 0).
template <ExactField F>
bool is_pure_power(BinaryForm<F> const& f) {
    if (f.is_zero()) throw validation_error("the zero form has no apolar analysis");
    if (f.degree() == 0) return true;
    return kernel_dimension(f, 1) > 0;
}

/**
 * Generators (g1, g2) of Ann(f) with deg g1 <= deg g2 and deg g1 + deg g2 = d + 2.
 *
 * d1 is the least degree with a nonzero annihilator. If d1 < d2 then g1 spans
 * Ann(f)_{d1} and g2 is the reduced-echelon representative of
 * Ann(f)_{d2} / (g1 * Q_{d2-d1}), scaled to a unit leading coefficient.
 * If d1 = d2 the two reduced-echelon kernel vectors are returned.
 */
template <ExactField F>
ApolarPair<F> apolar_pair(BinaryForm<F> const& f) {
    if (f.is_zero()) throw validation_error("apolar pair of the zero form");
    if (is_pure_power(f))
        throw validation_error("apolar pair undefined for a pure power (Ann(f)_1 != 0): " + f.to_string());
    int d = f.degree();
    int d1 = 2;
    std::vector<BinaryForm<F>> low;
    for (; d1 <= d; ++d1) {
        low = annihilator_component(f, d1);
        if (!low.empty()) break;
    }
    int d2 = d + 2 - d1;
    if (d1 > d2) throw computation_error("apolar ideal degrees out of order for " + f.to_string());

    if (d1 == d2) {
        if (low.size() != 2)
            throw computation_error("expected a two-dimensional Ann(f)_" + std::to_string(d1) +
                                    ", got " + std::to_string(low.size()));
        return {normalized(low[0]), normalized(low[1]), f};
    }
    if (low.size() != 1)
        throw computation_error("expected a one-dimensional Ann(f)_" + std::to_string(d1) + ", got " +
                                std::to_string(low.size()));
    BinaryForm<F> g1 = normalized(low[0]);

    // Row space of the multiples g1 * X^{e-k} Y^k, reduced.
    int e = d2 - d1;
    std::vector<std::vector<F>> multiples;
    for (int k = 0; k <= e; ++k) {
        auto m = g1 * BinaryForm<F>::monomial(e, k);
        multiples.emplace_back(m.coeffs().begin(), m.coeffs().end());
    }
    auto reduced = rref(ExactMatrix<F>(multiples));

    for (auto const& v : annihilator_component(f, d2)) {
        std::vector<F> w(v.coeffs().begin(), v.coeffs().end());
        for (std::size_t r = 0; r < reduced.pivot_columns.size(); ++r) {
            std::size_t pc = reduced.pivot_columns[r];
            F factor = w[pc];
            if (is_zero(factor)) continue;
            for (std::size_t c = 0; c < w.size(); ++c) w[c] = w[c] - factor * reduced.matrix(r, c);
        }
        BinaryForm<F> g2(std::move(w));
        if (!g2.is_zero()) return {g1, normalized(g2), f};
    }
    throw computation_error("no second generator found in Ann(f)_" + std::to_string(d2));
}

}  // namespace waring
