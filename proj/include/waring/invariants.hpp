#pragma once

/**
 * @file invariants.hpp
 * @brief Rank classification of squarefree quartics and quintics.
 *
 * Quartics: the invariants S, T and j = S^3 / (S^3 - 27 T^2). A squarefree
 * quartic has rank 2 exactly when j = 1 (T = 0, harmonic roots), else 3.
 *
 * Quintics, normalized as f_{s,t} = xy(x+y)(x+sy)(x+ty) = xy(x+y)(x^2+Sxy+Py^2):
 * rank 2 on the twelve golden-ratio pairs, otherwise 3 or 4 according to
 * whether the cubic generator g1 of Ann(f) is squarefree, i.e. Delta(S,P) != 0.
 */

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "waring/binary_form.hpp"
#include "waring/matrix.hpp"
#include "waring/multipoly.hpp"
#include "waring/quadratic.hpp"

namespace waring {

// ---------------------------------------------------------------------------
// Quartics

/// Raw coefficients c_i rewritten as a_i with c_i = binom(4, i) a_i. This is
/// the only place the binomial-weighted convention appears.
template <RationalAlgebra R>
std::array<R, 5> binomial_weighted_quartic(BinaryForm<R> const& f) {
    if (f.degree() != 4) throw validation_error("quartic invariants need degree 4, got " + std::to_string(f.degree()));
    std::array<R, 5> a;
    for (int i = 0; i <= 4; ++i) a[static_cast<std::size_t>(i)] = f[i] * R(Rational(1) / binomial(4, i));
    return a;
}

template <RationalAlgebra R>
struct QuarticInvariants {
    R S;
    R T;
};

/// S = a0 a4 - 4 a1 a3 + 3 a2^2 and the Hankel determinant T.
template <RationalAlgebra R>
QuarticInvariants<R> quartic_ST(BinaryForm<R> const& f) {
    auto [a0, a1, a2, a3, a4] = binomial_weighted_quartic(f);
    R S = a0 * a4 - R(Rational(4)) * a1 * a3 + R(Rational(3)) * a2 * a2;
    R T = det3(a0, a1, a2, a1, a2, a3, a2, a3, a4);
    return {S, T};
}

/// Value in F, or the point at infinity.
template <ExactField F>
struct ProjectiveValue {
    std::optional<F> value;

    bool is_infinite() const { return !value.has_value(); }
    std::string to_string() const { return value ? waring::to_string(*value) : "infinity"; }
    friend bool operator==(ProjectiveValue const&, ProjectiveValue const&) = default;
};

template <ExactField F>
ProjectiveValue<F> j_from_invariants(QuarticInvariants<F> const& st) {
    F cube = st.S * st.S * st.S;
    F denom = cube - F(Rational(27)) * st.T * st.T;
    if (is_zero(denom)) return {std::nullopt};
    return {cube / denom};
}

template <ExactField F>
void require_squarefree_quartic(BinaryForm<F> const& f) {
    if (f.degree() != 4) throw validation_error("expected a quartic, got degree " + std::to_string(f.degree()));
    if (f.is_zero() || !is_squarefree(f))
        throw validation_error("quartic has a multiple factor: " + f.to_string());
}

template <ExactField F>
ProjectiveValue<F> quartic_j(BinaryForm<F> const& f) {
    require_squarefree_quartic(f);
    return j_from_invariants(quartic_ST(f));
}

/// j of xy(x+y)(x+ty): (4/27) (t^2-t+1)^3 / (t^2 (t-1)^2).
template <ExactField F>
F j_from_parameter(F const& t) {
    F one(Rational(1));
    if (is_zero(t) || is_zero(t - one)) throw validation_error("t = 0 or 1 gives a multiple factor");
    F u = t * t - t + one;
    F v = t * (t - one);
    return F(Rational(4, 27)) * u * u * u / (v * v);
}

/// xy(x+y)(x+ty).
template <RationalAlgebra R>
BinaryForm<R> quartic_family(R const& t) {
    R one(Rational(1)), zero(Rational(0));
    return product_of_linear<R>({{one, zero}, {zero, one}, {one, one}, {one, t}});
}

template <ExactField F>
int classify_quartic(BinaryForm<F> const& f) {
    auto j = quartic_j(f);
    return (j.value && *j.value == F(Rational(1))) ? 2 : 3;
}

/// Cross-ratio (p1, p2; p3, p4) of points [a:b] of P^1,
/// [p1,p3][p2,p4] / ([p2,p3][p1,p4]) with [p,q] = p.a q.b - q.a p.b.
template <ExactField F>
ProjectiveValue<F> cross_ratio(std::array<std::pair<F, F>, 4> const& p) {
    auto bracket = [&](int i, int j) {
        auto const& [ai, bi] = p[static_cast<std::size_t>(i)];
        auto const& [aj, bj] = p[static_cast<std::size_t>(j)];
        return ai * bj - aj * bi;
    };
    F num = bracket(0, 2) * bracket(1, 3);
    F den = bracket(1, 2) * bracket(0, 3);
    if (is_zero(den)) return {std::nullopt};
    return {num / den};
}

/// Harmonic cross-ratio: lambda in {-1, 1/2, 2}.
template <ExactField F>
bool is_harmonic(ProjectiveValue<F> const& lambda) {
    if (lambda.is_infinite()) throw validation_error("degenerate cross-ratio (infinite)");
    F const& l = *lambda.value;
    if (is_zero(l) || l == F(Rational(1))) throw validation_error("degenerate cross-ratio " + waring::to_string(l));
    return l == F(Rational(-1)) || l == F(Rational(1, 2)) || l == F(Rational(2));
}

template <ExactField F>
bool is_harmonic(F const& lambda) {
    return is_harmonic(ProjectiveValue<F>{lambda});
}

template <ExactField F>
struct QuarticReport {
    F S;
    F T;
    ProjectiveValue<F> j;
    bool harmonic = false;
    int rank = 0;
};

template <ExactField F>
QuarticReport<F> quartic_report(BinaryForm<F> const& f) {
    require_squarefree_quartic(f);
    auto st = quartic_ST(f);
    auto j = j_from_invariants(st);
    QuarticReport<F> r{st.S, st.T, j, is_zero(st.T), 0};
    r.rank = (j.value && *j.value == F(Rational(1))) ? 2 : 3;
    return r;
}

// ---------------------------------------------------------------------------
// Quintics

/// xy(x+y)(x^2 + S xy + P y^2).
template <RationalAlgebra R>
BinaryForm<R> quintic_family_SP(R const& S, R const& P) {
    R one(Rational(1)), zero(Rational(0));
    auto cubic = product_of_linear<R>({{one, zero}, {zero, one}, {one, one}});
    return cubic * BinaryForm<R>(std::vector<R>{one, S, P});
}

/// xy(x+y)(x+sy)(x+ty).
template <RationalAlgebra R>
BinaryForm<R> quintic_family(R const& s, R const& t) {
    R one(Rational(1)), zero(Rational(0));
    return product_of_linear<R>({{one, zero}, {zero, one}, {one, one}, {one, s}, {one, t}});
}

template <ExactField F>
void require_distinct_quintic_parameters(F const& s, F const& t) {
    F one(Rational(1));
    if (is_zero(s) || is_zero(t) || s == one || t == one || s == t)
        throw validation_error("quintic parameters need s, t not in {0, 1} and s != t (got s=" + to_string(s) +
                               ", t=" + to_string(t) + ")");
}

/// x^2 + Sxy + Py^2 must have distinct roots, none of them 0, -1 or infinity.
template <ExactField F>
void require_distinct_quintic_SP(F const& S, F const& P) {
    F one(Rational(1));
    if (is_zero(P) || is_zero(one - S + P) || is_zero(S * S - F(Rational(4)) * P))
        throw validation_error("(S, P) = (" + to_string(S) + ", " + to_string(P) +
                               ") gives a quintic with a multiple factor");
}

/// C(f)_2 of f_{S,P}: 4x3, columns X^2, XY, Y^2.
template <RationalAlgebra R>
std::vector<std::vector<R>> quintic_catalecticant2(R const& S, R const& P) {
    auto k = [](int v) { return R(Rational(v)); };
    R s1 = S + k(1), sp = S + P;
    return {{k(0), k(4), k(2) * s1},
            {k(12), k(6) * s1, k(6) * sp},
            {k(6) * s1, k(6) * sp, k(12) * P},
            {k(2) * sp, k(4) * P, k(0)}};
}

/// C(f)_3 of f_{S,P} with its rows divided by 6, 12, 6: 3x4.
template <RationalAlgebra R>
std::vector<std::vector<R>> quintic_reduced_matrix(R const& S, R const& P) {
    auto k = [](int v) { return R(Rational(v)); };
    R s1 = k(1) + S, sp = S + P;
    return {{k(0), k(2), s1, sp}, {k(2), s1, sp, k(2) * P}, {s1, sp, k(2) * P, k(0)}};
}

/// The four maximal minors of a 3x4 or 4x3 matrix, deleting column or row i.
template <RationalAlgebra R>
std::array<R, 4> maximal_minors(std::vector<std::vector<R>> const& m) {
    bool wide = m.size() == 3;
    auto at = [&](std::size_t i, std::size_t j) -> R const& { return wide ? m[i][j] : m[j][i]; };
    std::array<R, 4> out;
    for (std::size_t del = 0; del < 4; ++del) {
        std::array<std::size_t, 3> keep{};
        for (std::size_t c = 0, k = 0; c < 4; ++c)
            if (c != del) keep[k++] = c;
        out[del] = det3(at(0, keep[0]), at(0, keep[1]), at(0, keep[2]), at(1, keep[0]), at(1, keep[1]),
                        at(1, keep[2]), at(2, keep[0]), at(2, keep[1]), at(2, keep[2]));
    }
    return out;
}

template <ExactField F>
bool catalecticant_rank2_test_SP(F const& S, F const& P) {
    for (auto const& m : maximal_minors(quintic_catalecticant2(S, P)))
        if (!is_zero(m)) return false;
    return true;
}

/// True iff every 3-minor of C(f_{s,t})_2 vanishes, i.e. rank f_{s,t} = 2.
template <ExactField F>
bool quintic_catalecticant_rank2_test(F const& s, F const& t) {
    require_distinct_quintic_parameters(s, t);
    return catalecticant_rank2_test_SP(s + t, s * t);
}

/// g1 = a X^3 + 3b X^2 Y + 3c X Y^2 + d Y^3 with (a, 3b, 3c, d) = (m1, -m2, m3, -m4).
template <RationalAlgebra R>
struct QuinticG1 {
    R a, b, c, d;
    std::array<R, 4> minors;

    /// Raw operator coefficients (a, 3b, 3c, d).
    std::vector<R> raw() const { return {a, R(Rational(3)) * b, R(Rational(3)) * c, d}; }
    R alpha() const { return a * c - b * b; }
    R beta() const { return a * d - b * c; }
    R gamma() const { return b * d - c * c; }
    R delta() const {
        R be = beta();
        return be * be - R(Rational(4)) * alpha() * gamma();
    }
};

/// Ring-generic construction; no rank check.
template <RationalAlgebra R>
QuinticG1<R> quintic_g1_generic(R const& S, R const& P) {
    auto m = maximal_minors(quintic_reduced_matrix(S, P));
    R third(Rational(1, 3));
    return {m[0], -m[1] * third, m[2] * third, -m[3], m};
}

template <ExactField F>
QuinticG1<F> quintic_g1(F const& S, F const& P) {
    auto g = quintic_g1_generic(S, P);
    bool all_zero = true;
    for (auto const& m : g.minors) all_zero = all_zero && is_zero(m);
    if (all_zero)
        throw validation_error("reduced catalecticant has rank < 3 at (S, P) = (" + to_string(S) + ", " +
                               to_string(P) + "): golden pair, rank 2");
    return g;
}

template <ExactField F>
F delta_eval(F const& S, F const& P) {
    return quintic_g1(S, P).delta();
}

using BivariatePoly = MultiPoly<Rational, 2>;

/// beta^2 - 4 alpha gamma expanded over Q[S, P] (variable 0 = S, 1 = P).
inline BivariatePoly delta_polynomial() {
    auto S = BivariatePoly::variable(0), P = BivariatePoly::variable(1);
    return quintic_g1_generic(S, P).delta();
}

/// Scales to coprime integer coefficients with a positive leading term.
inline BivariatePoly primitive_part(BivariatePoly const& p) {
    if (p.is_zero()) return p;
    mpz_class num_gcd = 0, den_lcm = 1;
    for (auto const& [e, c] : p.terms()) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.numerator().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.denominator().get_mpz_t());
    }
    Rational scale(den_lcm, num_gcd);
    if (p.terms().rbegin()->second.sign() < 0) scale = -scale;
    return p.scaled(scale);
}

/// The twelve (s, t) with rank f_{s,t} = 2, built from both roots of z^2 - z - 1.
inline std::vector<std::pair<QuadExt, QuadExt>> golden_pairs() {
    std::vector<std::pair<QuadExt, QuadExt>> out;
    QuadExt one(1);
    for (auto const& phi : {golden_ratio_plus(), golden_ratio_minus()}) {
        out.emplace_back(phi, one + phi);
        out.emplace_back(one + phi, phi);
        out.emplace_back(-phi, one + phi);
        out.emplace_back(one + phi, -phi);
        out.emplace_back(phi - one, phi);
        out.emplace_back(phi, phi - one);
    }
    return out;
}

template <ExactField F>
struct QuinticReport {
    std::optional<std::pair<F, F>> st;
    F S;
    F P;
    bool golden = false;
    std::optional<QuinticG1<F>> g1;
    int rank = 0;

    std::optional<F> delta() const {
        if (!g1) return std::nullopt;
        return g1->delta();
    }
};

template <ExactField F>
QuinticReport<F> classify_quintic_SP(F const& S, F const& P) {
    require_distinct_quintic_SP(S, P);
    QuinticReport<F> r;
    r.S = S;
    r.P = P;
    if (catalecticant_rank2_test_SP(S, P)) {
        r.golden = true;
        r.rank = 2;
        return r;
    }
    r.g1 = quintic_g1(S, P);
    r.rank = is_zero(r.g1->delta()) ? 4 : 3;
    return r;
}

template <ExactField F>
QuinticReport<F> classify_quintic(F const& s, F const& t) {
    require_distinct_quintic_parameters(s, t);
    auto r = classify_quintic_SP(s + t, s * t);
    r.st = std::pair{s, t};
    return r;
}

/// (j(h1), ..., j(h5)) for h_i = f_{s,t} divided by its i-th factor x, y, x+y, x+sy, x+ty.
template <ExactField F>
std::vector<F> quintic_j_tuple(F const& s, F const& t) {
    require_distinct_quintic_parameters(s, t);
    F one(Rational(1)), zero(Rational(0));
    std::vector<std::pair<F, F>> factors{{one, zero}, {zero, one}, {one, one}, {one, s}, {one, t}};
    auto f = product_of_linear(factors);
    std::vector<F> out;
    for (auto const& [a, b] : factors) {
        auto h = exact_divide(f, BinaryForm<F>::linear(a, b));
        auto j = quartic_j(h);
        if (j.is_infinite()) throw computation_error("infinite j for a squarefree quartic");
        out.push_back(*j.value);
    }
    return out;
}

/// Equality of two sequences as multisets.
template <class T>
bool same_multiset(std::vector<T> a, std::vector<T> const& b) {
    if (a.size() != b.size()) return false;
    for (auto const& x : b) {
        auto it = std::find(a.begin(), a.end(), x);
        if (it == a.end()) return false;
        a.erase(it);
    }
    return true;
}

}  // namespace waring
