#include <gtest/gtest.h>

#include <random>

#include "waring/sylvester.hpp"
#include "waring/ternary.hpp"

using namespace waring;

namespace {

using Form = BinaryForm<Rational>;

Rational q(long long p, long long r = 1) { return Rational(p, r); }

Form form(std::initializer_list<long long> c) {
    std::vector<Rational> v;
    for (auto x : c) v.emplace_back(x);
    return Form(std::move(v));
}

// Oracle: apply a binary operator g(X, Y) times Z^c to z*f without the
// trivariate machinery. Z kills everything after one derivative, and for c = 0
// the z factor rides along: g(z f) = z g(f).
bool kills_zf(Form const& g, int z_order, Form const& f) {
    if (z_order >= 2) return true;
    if (g.degree() > f.degree()) return true;
    return apply_operator(g, f).is_zero();
}

std::vector<Form> fixtures() {
    auto quartic = [](long long t) {
        return product_of_linear<Rational>({{q(1), q(0)}, {q(0), q(1)}, {q(1), q(1)}, {q(1), q(t)}});
    };
    return {form({1, 0, 0, 1}), quartic(2), quartic(3), form({0, 1, 0, 0, 0}), form({0, 0, 1, 0, 0}),
            quintic_family(q(2), q(3)), quintic_family_SP(q(0), q(1))};
}

}  // namespace

TEST(TernaryRank, Examples) {
    auto quartic = [](long long t) {
        return product_of_linear<Rational>({{q(1), q(0)}, {q(0), q(1)}, {q(1), q(1)}, {q(1), q(t)}});
    };
    EXPECT_EQ(ternary_rank_zf(quartic(2)).ternary_rank, 8);
    EXPECT_EQ(ternary_rank_zf(quartic(3)).ternary_rank, 9);
    EXPECT_EQ(ternary_rank_zf(quintic_family(q(2), q(3))).ternary_rank, 12);
    auto phi = golden_ratio_plus();
    EXPECT_EQ(ternary_rank_zf(quintic_family(phi, QuadExt(1) + phi)).ternary_rank, 10);
    auto r = ternary_rank_zf(form({1, 0, 0, 1}));
    EXPECT_EQ(r.d1, 2);
    EXPECT_EQ(r.d2, 3);
    EXPECT_EQ(r.ternary_rank, 6);
    EXPECT_EQ(r.ann_generator_degrees, (std::array<int, 3>{2, 3, 2}));
}

TEST(TernaryRank, RejectsOutsideHypothesis) {
    EXPECT_THROW(ternary_rank_zf(Form::zero(3)), validation_error);
    EXPECT_THROW(ternary_rank_zf(form({1, 2}).pow(4)), validation_error);
    EXPECT_THROW(verify_ann_zf(form({0, 0, 1})), validation_error);
}

TEST(TernaryRank, ReportInvariants) {
    for (auto const& f : fixtures()) {
        auto r = ternary_rank_zf(f);
        EXPECT_EQ(r.ternary_rank, r.d1 * r.d2);
        EXPECT_EQ(r.d1 + r.d2, f.degree() + 2);
        int rank = waring_rank(f).rank;
        EXPECT_LE(r.d1, rank);
        EXPECT_LE(rank, r.d2);
    }
}

TEST(VerifyAnn, Examples) {
    for (auto const& f : fixtures()) EXPECT_TRUE(verify_ann_zf(f)) << f.to_string();
    auto f = form({1, 0, 0, 1});
    EXPECT_TRUE(annihilates_zf(to_ternary(form({0, 1, 0})), f));
    EXPECT_TRUE(annihilates_zf(to_ternary(form({1, 0, 0, -1})), f));
    // Z alone leaves f behind.
    EXPECT_FALSE(annihilates_zf(TernaryPoly<Rational>::variable(2), f));
    EXPECT_TRUE(annihilates_zf(TernaryPoly<Rational>::monomial({0, 0, 2}, Rational(1)), f));
}

TEST(VerifyAnn, TrivariateDifferentiationMatchesOracle) {
    std::mt19937_64 rng(103);
    std::uniform_int_distribution<int> c(-3, 3);
    for (auto const& f : fixtures())
        for (int k = 0; k < 30; ++k) {
            int s = 1 + k % f.degree();
            std::vector<Rational> g(static_cast<std::size_t>(s) + 1);
            for (auto& x : g) x = Rational(c(rng));
            Form op(g);
            if (op.is_zero()) continue;
            for (int z_order = 0; z_order <= 2; ++z_order) {
                auto tern = to_ternary(op) * TernaryPoly<Rational>::monomial({0, 0, z_order}, Rational(1));
                EXPECT_EQ(annihilates_zf(tern, f), kills_zf(op, z_order, f));
            }
        }
}

TEST(LineArrangement, PencilPlusTransversal) {
    for (int d = 3; d <= 6; ++d) {
        std::vector<Line<Rational>> lines;
        for (int k = 0; k < d; ++k) lines.push_back({q(1), q(k), q(0)});
        lines.push_back({q(0), q(0), q(1)});
        auto h = intersection_multiplicities(lines);
        EXPECT_EQ(h.size(), 2u);
        EXPECT_EQ(h[d], 1);
        EXPECT_EQ(h[2], d);
        EXPECT_EQ(lattice_descriptor(h), std::to_string(d) + "^1 2^" + std::to_string(d));
    }
}

TEST(LineArrangement, GenericAndRepeatedLines) {
    // Three lines in general position meet in three double points.
    std::vector<Line<Rational>> triangle{{q(1), q(0), q(0)}, {q(0), q(1), q(0)}, {q(0), q(0), q(1)}};
    EXPECT_EQ(lattice_descriptor(intersection_multiplicities(triangle)), "2^3");
    std::vector<Line<Rational>> repeated{{q(1), q(2), q(0)}, {q(2), q(4), q(0)}};
    EXPECT_THROW(intersection_multiplicities(repeated), validation_error);
}

TEST(CombinatoricsDemo, QuarticAndQuinticTables) {
    auto four = combinatorics_vs_rank_demo(4);
    ASSERT_EQ(four.size(), 2u);
    EXPECT_EQ(four[0].ternary_rank, 8);
    EXPECT_EQ(four[1].ternary_rank, 9);
    EXPECT_EQ(four[0].lattice, four[1].lattice);
    EXPECT_EQ(four[0].lattice, "4^1 2^4");

    auto five = combinatorics_vs_rank_demo(5);
    ASSERT_EQ(five.size(), 2u);
    EXPECT_EQ(five[0].label, "golden");
    EXPECT_EQ(five[0].ternary_rank, 10);
    EXPECT_EQ(five[1].ternary_rank, 12);
    EXPECT_EQ(five[0].lattice, five[1].lattice);
    EXPECT_EQ(five[0].lattice, "5^1 2^5");

    for (auto const& rows : {four, five})
        for (auto const& r : rows) {
            EXPECT_TRUE(r.ann_verified);
            EXPECT_EQ(r.ternary_rank, r.d1 * r.d2);
        }
    EXPECT_THROW(combinatorics_vs_rank_demo(3), validation_error);
}
