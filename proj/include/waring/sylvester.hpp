#pragma once

/**
 * @file sylvester.hpp
 * @brief Exact Waring rank of a binary form with a squarefree annihilator witness.
 *
 * Triage: f = 0 is rejected; Ann(f)_1 != 0 means f is a pure power (rank 1);
 * otherwise Ann(f) = (g1, g2) with d1 <= d2 and the rank is d1 when g1 is
 * squarefree and d2 otherwise.
 *
 * A squarefree element of Ann(f)_r is the witness: its roots are the
 * directions of a minimal decomposition.
 */

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "waring/apolar.hpp"

namespace waring {

enum class RankCase { PurePower, SylvesterD1, SylvesterD2 };

inline std::string to_string(RankCase c) {
    switch (c) {
        case RankCase::PurePower: return "PurePower";
        case RankCase::SylvesterD1: return "Sylvester-d1";
        case RankCase::SylvesterD2: return "Sylvester-d2";
    }
    return "?";
}

enum class WitnessStatus {
    Found,
    // Every member of each searched pencil has a repeated factor, proved by the
    // discriminant vanishing at more points than its degree.
    CertifiedAbsent,
    // Search budget exhausted without a certificate.
    NotFound,
};

inline std::string to_string(WitnessStatus s) {
    switch (s) {
        case WitnessStatus::Found: return "found";
        case WitnessStatus::CertifiedAbsent: return "certified-absent";
        case WitnessStatus::NotFound: return "not-found";
    }
    return "?";
}

template <ExactField F>
struct RankResult {
    int rank = 0;
    RankCase kind = RankCase::PurePower;
    std::optional<BinaryForm<F>> witness;
    std::optional<ApolarPair<F>> pair;
    WitnessStatus witness_status = WitnessStatus::Found;
};

/// (1:0), (0:1), (1:1), (1:-1), (1:2), (1:-2), ... : pairwise distinct points of P^1.
inline std::pair<Rational, Rational> pencil_point(int index) {
    if (index == 0) return {Rational(1), Rational(0)};
    if (index == 1) return {Rational(0), Rational(1)};
    int k = (index - 2) / 2 + 1;
    return {Rational(1), Rational(index % 2 == 0 ? k : -k)};
}

template <ExactField F>
struct PencilSearch {
    std::optional<BinaryForm<F>> witness;
    bool certified_absent = false;
};

/**
 * First squarefree member of the pencil lambda*a + mu*b in the fixed point
 * order. The discriminant of the member is a form of degree 2(r-1) in
 * (lambda, mu); if it vanishes at 2(r-1)+1 distinct points it vanishes
 * identically and no member is squarefree.
 */
template <ExactField F>
PencilSearch<F> search_pencil(BinaryForm<F> const& a, BinaryForm<F> const& b) {
    int r = a.degree();
    int points = 2 * (r - 1) + 1;
    for (int k = 0; k < points; ++k) {
        auto [lambda, mu] = pencil_point(k);
        auto g = a.scaled(F(lambda)) + b.scaled(F(mu));
        if (!g.is_zero() && is_squarefree(g)) return {normalized(g), false};
    }
    return {std::nullopt, true};
}

namespace detail {

// X, Y, X+Y, X-Y, X+2Y, X-2Y, ...
template <ExactField F>
BinaryForm<F> search_line(int index) {
    if (index == 0) return BinaryForm<F>::linear(F(Rational(1)), F(Rational(0)));
    if (index == 1) return BinaryForm<F>::linear(F(Rational(0)), F(Rational(1)));
    int k = (index - 2) / 2 + 1;
    return BinaryForm<F>::linear(F(Rational(1)), F(Rational(index % 2 == 0 ? k : -k)));
}

inline constexpr int kMaxSearchLines = 12;

}  // namespace detail

/**
 * Squarefree element of Ann(f)_{d2} for the r = d2 branch.
 *
 * d1 = d2: the pencil spanned by g1, g2.
 * d1 < d2: pencils g2 + mu * g1 * l^{d2-d1} for a fixed sequence of lines l.
 */
template <ExactField F>
std::pair<std::optional<BinaryForm<F>>, WitnessStatus> search_top_degree_witness(ApolarPair<F> const& pair) {
    if (pair.d1() == pair.d2()) {
        auto s = search_pencil(pair.g1, pair.g2);
        if (s.witness) return {s.witness, WitnessStatus::Found};
        return {std::nullopt, WitnessStatus::CertifiedAbsent};
    }
    unsigned e = static_cast<unsigned>(pair.d2() - pair.d1());
    for (int k = 0; k < detail::kMaxSearchLines; ++k) {
        auto other = pair.g1 * detail::search_line<F>(k).pow(e);
        auto s = search_pencil(pair.g2, other);
        if (s.witness) return {s.witness, WitnessStatus::Found};
    }
    // Certified pencils here would still only cover part of Ann(f)_{d2}.
    return {std::nullopt, WitnessStatus::NotFound};
}

template <ExactField F>
RankResult<F> waring_rank(BinaryForm<F> const& f) {
    if (f.is_zero()) throw validation_error("Waring rank of the zero form");
    if (f.degree() < 1) throw validation_error("Waring rank needs degree >= 1");

    RankResult<F> result;
    if (is_pure_power(f)) {
        result.rank = 1;
        result.kind = RankCase::PurePower;
        result.witness = normalized(annihilator_component(f, 1).front());
        return result;
    }

    auto pair = apolar_pair(f);
    if (is_squarefree(pair.g1)) {
        result.rank = pair.d1();
        result.kind = RankCase::SylvesterD1;
        result.witness = pair.g1;
    } else {
        result.rank = pair.d2();
        result.kind = RankCase::SylvesterD2;
        auto [w, status] = search_top_degree_witness(pair);
        result.witness = std::move(w);
        result.witness_status = status;
    }
    result.pair = std::move(pair);
    return result;
}

/// Squarefree annihilator of degree rank(f); f must not be a pure power.
template <ExactField F>
BinaryForm<F> decomposition_witness(BinaryForm<F> const& f) {
    auto r = waring_rank(f);
    if (r.kind == RankCase::PurePower)
        throw validation_error("decomposition witness requested for a pure power: " + f.to_string());
    if (!r.witness)
        throw computation_error("no squarefree annihilator of degree " + std::to_string(r.rank) + " (" +
                                to_string(r.witness_status) + ") for " + f.to_string());
    return *r.witness;
}

}  // namespace waring
