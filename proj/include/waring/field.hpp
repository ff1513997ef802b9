#pragma once

#include <concepts>
#include <string>

#include "waring/quadratic.hpp"
#include "waring/rational.hpp"

namespace waring {

/// Commutative ring containing the rationals (coefficients may be built from
/// any Rational constant).
template <class R>
concept RationalAlgebra = std::regular<R> && requires(R a, R b, Rational q) {
    R(q);
    { a + b } -> std::convertible_to<R>;
    { a - b } -> std::convertible_to<R>;
    { a * b } -> std::convertible_to<R>;
    { -a } -> std::convertible_to<R>;
    { is_zero(a) } -> std::convertible_to<bool>;
};

/// Exact field: a rational algebra with exact division.
template <class F>
concept ExactField = RationalAlgebra<F> && requires(F a, F b) {
    { a / b } -> std::convertible_to<F>;
    { to_string(a) } -> std::convertible_to<std::string>;
    { to_double(a) } -> std::convertible_to<double>;
};

static_assert(ExactField<Rational>);
static_assert(ExactField<QuadExt>);

template <RationalAlgebra R>
R power(R const& base, unsigned exponent) {
    R result(Rational(1)), b = base;
    while (exponent) {
        if (exponent & 1U) result = result * b;
        exponent >>= 1U;
        if (exponent) b = b * b;
    }
    return result;
}

/// n! / (n-k)!, zero when k > n.
inline Rational falling_factorial(int n, int k) {
    if (k < 0 || k > n) return Rational(0);
    mpz_class r = 1;
    for (int i = 0; i < k; ++i) r *= n - i;
    return Rational(r);
}

inline Rational binomial(int n, int k) {
    if (k < 0 || k > n) return Rational(0);
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(r);
}

}  // namespace waring
