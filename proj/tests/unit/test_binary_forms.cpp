#include <gtest/gtest.h>

#include <random>

#include "waring/apolar.hpp"
#include "waring/binary_form.hpp"
#include "waring/quadratic.hpp"

using namespace waring;

namespace {

using Form = BinaryForm<Rational>;

Rational q(long long p, long long r = 1) { return Rational(p, r); }

Form form(std::initializer_list<long long> c) {
    std::vector<Rational> v;
    for (auto x : c) v.emplace_back(x);
    return Form(std::move(v));
}

Form random_form(std::mt19937_64& rng, int degree, int bound = 6) {
    std::uniform_int_distribution<int> coeff(-bound, bound);
    std::vector<Rational> v;
    for (int i = 0; i <= degree; ++i) v.emplace_back(coeff(rng));
    if (v.front().is_zero() && v.back().is_zero()) v.front() = Rational(1);
    return Form(std::move(v));
}

// Oracle for the operator action: differentiate monomial by monomial.
Form differentiate_oracle(Form const& q_op, Form const& f) {
    int s = q_op.degree(), d = f.degree();
    std::vector<Rational> out(static_cast<std::size_t>(d - s) + 1);
    for (int j = 0; j <= s; ++j)
        for (int i = 0; i <= d; ++i) {
            int a = s - j, b = j;  // X^a Y^b on x^{d-i} y^i
            int ex = d - i, ey = i;
            if (a > ex || b > ey) continue;
            Rational w(1);
            for (int k = 0; k < a; ++k) w *= Rational(ex - k);
            for (int k = 0; k < b; ++k) w *= Rational(ey - k);
            out[static_cast<std::size_t>(ey - b)] += q_op[j] * f[i] * w;
        }
    return Form(std::move(out));
}

}  // namespace

TEST(BinaryForm, ConstructionAndAccessors) {
    auto f = form({1, 0, 0, 1});
    EXPECT_EQ(f.degree(), 3);
    EXPECT_EQ(f.leading_index(), 0);
    EXPECT_EQ(f.trailing_index(), 3);
    EXPECT_EQ(f.to_string(), "x^3 + y^3");
    EXPECT_EQ(Form::zero(4).to_string(), "0");
    EXPECT_TRUE(Form::zero(4).is_zero());
    EXPECT_EQ(Form::monomial(4, 1).to_string(), "x^3*y");
    EXPECT_EQ(form({2, 0, -3, 0}).to_string(), "2*x^3 - 3*x*y^2");
    EXPECT_THROW(Form::zero(-1), validation_error);
}

TEST(BinaryForm, ProductOfLinearFactors) {
    auto f = product_of_linear<Rational>({{q(1), q(0)}, {q(0), q(1)}, {q(1), q(1)}, {q(1), q(2)}});
    EXPECT_EQ(f, form({0, 1, 3, 2, 0}));
    EXPECT_EQ(f.to_string(), "x^3*y + 3*x^2*y^2 + 2*x*y^3");
}

TEST(BinaryForm, SumOfDegreeMismatchThrows) { EXPECT_THROW(form({1, 0}) + form({1, 0, 0}), validation_error); }

TEST(BinaryForm, PrintsQuadraticCoefficients) {
    auto phi = golden_ratio_plus();
    BinaryForm<QuadExt> f{QuadExt(1), phi, -phi, -QuadExt::sqrt(5)};
    EXPECT_EQ(f.to_string(), "x^3 + (1/2+1/2*sqrt(5))*x^2*y + (-1/2-1/2*sqrt(5))*x*y^2 - sqrt(5)*y^3");
}

TEST(ApplyOperator, Examples) {
    auto f = form({1, 0, 0, 1});                       // x^3 + y^3
    EXPECT_TRUE(apply_operator(form({0, 1, 0}), f).is_zero());  // XY
    EXPECT_EQ(apply_operator(form({1, 0}), f), form({3, 0, 0}));  // X -> 3x^2
    EXPECT_EQ(apply_operator(form({1, 0, 0, 0}), f), form({6}));
    EXPECT_THROW(apply_operator(form({1, 0, 0, 0, 0}), f), validation_error);
}

TEST(ApplyOperator, MatchesMonomialOracleAndIsBilinear) {
    std::mt19937_64 rng(23);
    for (int d = 1; d <= 7; ++d)
        for (int s = 0; s <= d; ++s)
            for (int k = 0; k < 5; ++k) {
                auto f = random_form(rng, d), g = random_form(rng, d);
                auto a = random_form(rng, s), b = random_form(rng, s);
                EXPECT_EQ(apply_operator(a, f), differentiate_oracle(a, f));
                EXPECT_EQ(apply_operator(a + b, f), apply_operator(a, f) + apply_operator(b, f));
                EXPECT_EQ(apply_operator(a, f + g), apply_operator(a, f) + apply_operator(a, g));
            }
}

TEST(ApplyOperator, CompositionIsProduct) {
    std::mt19937_64 rng(29);
    for (int k = 0; k < 50; ++k) {
        auto f = random_form(rng, 6);
        auto a = random_form(rng, 2), b = random_form(rng, 1);
        EXPECT_EQ(apply_operator(a * b, f), apply_operator(a, apply_operator(b, f)));
    }
}

TEST(FormGcd, Examples) {
    auto l1 = form({1, 1}), l2 = form({1, -2}), l3 = form({0, 1});
    EXPECT_EQ(form_gcd(l1 * l2, l1 * l3), l1);
    EXPECT_EQ(form_gcd(l3 * l3 * l1, l3 * l2), l3);
    EXPECT_EQ(form_gcd(l1, l2).degree(), 0);
    EXPECT_EQ(form_gcd(Form::zero(2), l1 * l2.scaled(q(3))), normalized(l1 * l2));
    EXPECT_THROW(form_gcd(Form::zero(1), Form::zero(2)), validation_error);
}

TEST(FormGcd, RecoversPlantedCommonFactor) {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> c(-5, 5);
    auto lin = [&] {
        int a = c(rng), b = c(rng);
        if (a == 0 && b == 0) a = 1;
        return form({a, b});
    };
    for (int k = 0; k < 200; ++k) {
        auto common = lin() * lin();
        Form p = common * lin(), r = common * lin() * lin();
        auto g = form_gcd(p, r);
        EXPECT_EQ(exact_divide(p, g) * g, p);
        EXPECT_EQ(exact_divide(r, g) * g, r);
        EXPECT_GE(g.degree(), 2);
        // Normalization: first nonzero coefficient is 1.
        EXPECT_EQ(g[g.leading_index()], q(1));
    }
}

TEST(Squarefree, Examples) {
    EXPECT_TRUE(is_squarefree(form({1, 0, 0, 1})));
    EXPECT_TRUE(is_squarefree(form({0, 1, 0})));  // xy
    EXPECT_FALSE(is_squarefree(form({0, 0, 1})));  // y^2
    EXPECT_FALSE(is_squarefree(form({1, 0, 0})));  // x^2
    EXPECT_FALSE(is_squarefree(form({1, 2, 1})));
    EXPECT_TRUE(is_squarefree(form({3, 5})));
    EXPECT_TRUE(is_squarefree(form({7})));
    // (Y - X)(X + Y)^2
    EXPECT_FALSE(is_squarefree(form({-1, -1, 1, 1})));
    EXPECT_THROW(is_squarefree(Form::zero(3)), validation_error);
}

TEST(Squarefree, PlantedRepeatedFactors) {
    std::mt19937_64 rng(37);
    std::uniform_int_distribution<int> c(-4, 4);
    for (int k = 0; k < 200; ++k) {
        std::vector<std::pair<Rational, Rational>> factors;
        std::vector<std::pair<int, int>> seen;
        for (int i = 0; i < 4; ++i) {
            int a = c(rng), b = c(rng);
            if (a == 0 && b == 0) b = 1;
            factors.emplace_back(q(a), q(b));
        }
        auto f = product_of_linear(factors);
        // Oracle: squarefree iff no two factors are proportional.
        bool distinct = true;
        for (std::size_t i = 0; i < factors.size(); ++i)
            for (std::size_t j = i + 1; j < factors.size(); ++j)
                if ((factors[i].first * factors[j].second - factors[i].second * factors[j].first).is_zero())
                    distinct = false;
        EXPECT_EQ(is_squarefree(f), distinct);
    }
}

TEST(ExactDivide, QuotientAndFailure) {
    auto f = form({0, 1, 3, 2, 0});
    EXPECT_EQ(exact_divide(f, form({1, 0})), form({0, 1, 3, 2}));
    EXPECT_EQ(exact_divide(f, form({0, 1})), form({1, 3, 2, 0}));
    EXPECT_EQ(exact_divide(f, form({1, 2})), form({0, 1, 1, 0}));
    EXPECT_THROW(exact_divide(f, form({1, 5})), validation_error);
    EXPECT_THROW(exact_divide(f, Form::zero(1)), validation_error);
}

TEST(Transformations, SwapShearAndDerivatives) {
    auto f = form({1, 2, 0, 5});
    EXPECT_EQ(f.swapped(), form({5, 0, 2, 1}));
    EXPECT_EQ(f.derivative_x(), form({3, 4, 0}));
    EXPECT_EQ(f.derivative_y(), form({2, 0, 15}));
    // (x + y)^2 from x^2 sheared by 1.
    EXPECT_EQ(form({1, 0, 0}).sheared(q(1)), form({1, 2, 1}));
    // Euler: x f_x + y f_y = d f.
    auto euler = form({1, 0}) * f.derivative_x() + form({0, 1}) * f.derivative_y();
    EXPECT_EQ(euler, f.scaled(q(3)));
}

TEST(Catalecticant, KnownMatrix) {
    // x^3 + y^3, s = 1: rows x^2, xy, y^2; columns X, Y.
    auto c = catalecticant(form({1, 0, 0, 1}), 1);
    ExactMatrix<Rational> want({{q(3), q(0)}, {q(0), q(0)}, {q(0), q(3)}});
    EXPECT_EQ(c, want);
}

TEST(Catalecticant, HilbertFunctionIdentity) {
    // dim Ann(f)_s = (s + 1) - rank C(f)_s for every s.
    std::mt19937_64 rng(41);
    for (int d = 2; d <= 8; ++d)
        for (int k = 0; k < 5; ++k) {
            auto f = random_form(rng, d);
            for (int s = 0; s <= d; ++s) {
                auto c = catalecticant(f, s);
                EXPECT_EQ(static_cast<std::size_t>(kernel_dimension(f, s)) + rank(c), static_cast<std::size_t>(s + 1));
                for (auto const& g : annihilator_component(f, s)) EXPECT_TRUE(apply_operator(g, f).is_zero());
            }
        }
}
