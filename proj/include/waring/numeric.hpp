#pragma once

/**
 * @file numeric.hpp
 * @brief Floating-point Waring decompositions from an exact witness, and a
 *        least-squares border-rank probe.
 *
 * The witness w = prod (b_j X - a_j Y) has roots (a_j : b_j); each l_j = a_j x + b_j y
 * is killed by w, so f = sum lambda_j l_j^d for some weights, found by a
 * linear solve. The weights are then absorbed into the forms by d-th roots.
 *
 * The probe fits r linear forms to f by Levenberg-Marquardt. It measures
 * border rank, which can be smaller than Waring rank: x^{d-1} y is a limit of
 * rank-2 forms but has rank d. Only "fits at r = rank" is a valid check.
 */

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <future>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "waring/binary_form.hpp"
#include "waring/errors.hpp"

namespace waring {

using complex = std::complex<double>;

/// alpha x + beta y.
struct LinearTerm {
    complex alpha;
    complex beta;
};

struct Decomposition {
    std::vector<LinearTerm> terms;
    double residual = 0.0;
};

/// z^n for n >= 0, with 0^0 = 1.
inline complex ipow(complex z, int n) {
    complex r(1.0, 0.0);
    for (int k = 0; k < n; ++k) r *= z;
    return r;
}

template <ExactField F>
std::vector<complex> to_complex_coefficients(BinaryForm<F> const& f) {
    std::vector<complex> out;
    for (auto const& c : f.coeffs()) out.emplace_back(to_double(c), 0.0);
    return out;
}

/// Raw coefficients of sum_j l_j^d by the binomial theorem.
inline std::vector<complex> reconstruct(std::vector<LinearTerm> const& terms, int degree) {
    if (terms.empty()) throw validation_error("reconstruct needs at least one term");
    std::vector<complex> out(static_cast<std::size_t>(degree) + 1, complex(0.0, 0.0));
    for (auto const& t : terms)
        for (int i = 0; i <= degree; ++i)
            out[static_cast<std::size_t>(i)] += binomial(degree, i).to_double() * ipow(t.alpha, degree - i) *
                                                ipow(t.beta, i);
    return out;
}

/// Max-norm coefficient distance.
inline double max_residual(std::vector<complex> const& a, std::vector<complex> const& b) {
    if (a.size() != b.size()) throw validation_error("residual of coefficient vectors of different length");
    double r = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) r = std::max(r, std::abs(a[i] - b[i]));
    return r;
}

/// Roots (a : b) in P^1 of a binary form, from companion-matrix eigenvalues of
/// w(a, 1); a drop in degree contributes the root (1 : 0).
inline std::vector<LinearTerm> projective_roots(std::vector<complex> const& w) {
    int r = static_cast<int>(w.size()) - 1;
    double scale = 0.0;
    for (auto const& c : w) scale = std::max(scale, std::abs(c));
    if (scale == 0.0) throw validation_error("roots of the zero form");
    int lead = 0;
    while (lead <= r && std::abs(w[static_cast<std::size_t>(lead)]) <= 1e-14 * scale) ++lead;

    std::vector<LinearTerm> roots;
    for (int k = 0; k < lead; ++k) roots.push_back({complex(1.0, 0.0), complex(0.0, 0.0)});

    // w(a, 1) = sum_j w_j a^{r-j}; after dropping `lead` leading zeros it has degree n.
    int n = r - lead;
    if (n == 0) return roots;
    complex top = w[static_cast<std::size_t>(lead)];
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i)
        // coefficient of a^i, monic-normalized, lives at index r - i
        companion(i, n - 1) = -w[static_cast<std::size_t>(r - i)] / top;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion);
    if (solver.info() != Eigen::Success) throw computation_error("companion eigenvalue solver did not converge");
    for (int i = 0; i < n; ++i) roots.push_back({solver.eigenvalues()(i), complex(1.0, 0.0)});
    return roots;
}

struct ExtractOptions {
    double max_condition = 1e12;
};

template <ExactField F>
Decomposition extract_decomposition(BinaryForm<F> const& f, BinaryForm<F> const& witness,
                                    ExtractOptions options = {}) {
    if (witness.is_zero() || !apply_operator(witness, f).is_zero())
        throw validation_error("witness does not annihilate the form");
    if (!is_squarefree(witness)) throw validation_error("witness has a repeated factor");

    int d = f.degree();
    auto directions = projective_roots(to_complex_coefficients(witness));
    auto target = to_complex_coefficients(f);
    int r = static_cast<int>(directions.size());

    Eigen::MatrixXcd system(d + 1, r);
    Eigen::VectorXcd rhs(d + 1);
    for (int i = 0; i <= d; ++i) {
        rhs(i) = target[static_cast<std::size_t>(i)];
        for (int j = 0; j < r; ++j) {
            auto const& t = directions[static_cast<std::size_t>(j)];
            system(i, j) = binomial(d, i).to_double() * ipow(t.alpha, d - i) * ipow(t.beta, i);
        }
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(system, Eigen::ComputeThinU | Eigen::ComputeThinV);
    auto const& sv = svd.singularValues();
    double condition = sv(sv.size() - 1) > 0 ? sv(0) / sv(sv.size() - 1) : std::numeric_limits<double>::infinity();
    if (!(condition <= options.max_condition))
        throw computation_error("ill-conditioned decomposition system (condition estimate " +
                                std::to_string(condition) + ")");
    Eigen::VectorXcd weights = svd.solve(rhs);

    Decomposition out;
    for (int j = 0; j < r; ++j) {
        complex root = std::pow(weights(j), 1.0 / d);
        auto const& t = directions[static_cast<std::size_t>(j)];
        out.terms.push_back({root * t.alpha, root * t.beta});
    }
    out.residual = max_residual(reconstruct(out.terms, d), target);
    return out;
}

struct ProbeOptions {
    double tolerance = 1e-6;
    int restarts = 20;
    int max_iterations = 20000;
    std::uint64_t seed = 0x5eed;
};

struct BorderProbe {
    bool fits = false;
    double residual = 0.0;
    int best_restart = -1;
    bool converged = false;
};

namespace detail {

struct ProbeRun {
    double residual = std::numeric_limits<double>::infinity();
    bool converged = false;
};

// Levenberg-Marquardt on the holomorphic residual rho(z) = coeffs(sum l_j^d) - f,
// z = (alpha_1, beta_1, ..., alpha_r, beta_r).
inline ProbeRun fit_linear_forms(std::vector<complex> const& target, int r, std::uint64_t seed,
                                 ProbeOptions const& options) {
    int d = static_cast<int>(target.size()) - 1;
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::VectorXcd z(2 * r);
    for (int k = 0; k < 2 * r; ++k) z(k) = complex(normal(rng), normal(rng));

    std::vector<double> binom(static_cast<std::size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) binom[static_cast<std::size_t>(i)] = binomial(d, i).to_double();

    auto residual_of = [&](Eigen::VectorXcd const& p) {
        Eigen::VectorXcd rho(d + 1);
        for (int i = 0; i <= d; ++i) {
            complex s = -target[static_cast<std::size_t>(i)];
            for (int j = 0; j < r; ++j) s += binom[static_cast<std::size_t>(i)] * ipow(p(2 * j), d - i) * ipow(p(2 * j + 1), i);
            rho(i) = s;
        }
        return rho;
    };
    auto jacobian_of = [&](Eigen::VectorXcd const& p) {
        Eigen::MatrixXcd jac(d + 1, 2 * r);
        for (int i = 0; i <= d; ++i)
            for (int j = 0; j < r; ++j) {
                complex a = p(2 * j), b = p(2 * j + 1);
                double c = binom[static_cast<std::size_t>(i)];
                jac(i, 2 * j) = d - i > 0 ? c * (d - i) * ipow(a, d - i - 1) * ipow(b, i) : complex(0.0);
                jac(i, 2 * j + 1) = i > 0 ? c * i * ipow(a, d - i) * ipow(b, i - 1) : complex(0.0);
            }
        return jac;
    };

    double mu = 1e-3;
    Eigen::VectorXcd rho = residual_of(z);
    double cost = rho.squaredNorm();
    ProbeRun run;
    for (int it = 0; it < options.max_iterations; ++it) {
        if (rho.cwiseAbs().maxCoeff() < options.tolerance * 1e-3) {
            run.converged = true;
            break;
        }
        Eigen::MatrixXcd jac = jacobian_of(z);
        Eigen::MatrixXcd normal_matrix = jac.adjoint() * jac;
        Eigen::VectorXcd gradient = jac.adjoint() * rho;
        bool improved = false;
        for (int attempt = 0; attempt < 30 && !improved; ++attempt) {
            Eigen::MatrixXcd damped = normal_matrix;
            for (int k = 0; k < damped.rows(); ++k) damped(k, k) += mu * (1.0 + std::real(normal_matrix(k, k)));
            Eigen::VectorXcd step = damped.ldlt().solve(-gradient);
            if (!step.allFinite()) {
                mu *= 10.0;
                continue;
            }
            Eigen::VectorXcd candidate = z + step;
            Eigen::VectorXcd candidate_rho = residual_of(candidate);
            double candidate_cost = candidate_rho.squaredNorm();
            if (std::isfinite(candidate_cost) && candidate_cost < cost) {
                z = candidate;
                rho = candidate_rho;
                cost = candidate_cost;
                mu = std::max(mu / 3.0, 1e-15);
                improved = true;
            } else {
                mu *= 10.0;
            }
        }
        if (!improved) break;
    }
    run.residual = rho.cwiseAbs().maxCoeff();
    if (run.residual < options.tolerance) run.converged = true;
    return run;
}

}  // namespace detail

/**
 * Multi-start least-squares fit of r linear forms. Restarts run concurrently;
 * the best residual wins, ties going to the lower restart index.
 */
template <ExactField F>
BorderProbe border_rank_probe(BinaryForm<F> const& f, int r, ProbeOptions options = {}) {
    if (r < 1) throw validation_error("border rank probe needs r >= 1");
    auto target = to_complex_coefficients(f);
    std::vector<std::future<detail::ProbeRun>> runs;
    for (int k = 0; k < options.restarts; ++k)
        runs.push_back(std::async(std::launch::async, [&, k] {
            return detail::fit_linear_forms(target, r, options.seed + static_cast<std::uint64_t>(k), options);
        }));
    BorderProbe best;
    best.residual = std::numeric_limits<double>::infinity();
    for (int k = 0; k < options.restarts; ++k) {
        auto run = runs[static_cast<std::size_t>(k)].get();
        if (run.residual < best.residual) {
            best.residual = run.residual;
            best.best_restart = k;
            best.converged = run.converged;
        }
    }
    best.fits = best.residual < options.tolerance;
    return best;
}

}  // namespace waring
