#pragma once

/**
 * @file rational.hpp
 * @brief Arbitrary-precision rationals.
 *
 * Thin value type over GMP's mpq_class. Every value is kept canonical:
 * positive denominator, numerator and denominator coprime, zero as 0/1.
 * Equality is therefore componentwise.
 */

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include "waring/errors.hpp"

namespace waring {

class Rational {
public:
    Rational() = default;
    Rational(int n) : q_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(long n) : q_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(long long n) : q_(mpz_from(n)) {}  // NOLINT(google-explicit-constructor)
    explicit Rational(mpz_class const& n) : q_(n) {}

    Rational(mpz_class const& num, mpz_class const& den) {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }

    Rational(long long num, long long den) : Rational(mpz_from(num), mpz_from(den)) {}

    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    /// Parses "p" or "p/q" with optional leading sign.
    static Rational parse(std::string_view text) {
        std::string s(text);
        auto bad = [&] { return validation_error("malformed rational '" + s + "'"); };
        if (s.empty()) throw bad();
        auto slash = s.find('/');
        auto digits_ok = [](std::string const& part, bool allow_sign) {
            std::size_t i = 0;
            if (allow_sign && i < part.size() && (part[i] == '-' || part[i] == '+')) ++i;
            if (i == part.size()) return false;
            for (; i < part.size(); ++i)
                if (part[i] < '0' || part[i] > '9') return false;
            return true;
        };
        std::string num = s.substr(0, slash);
        std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
        if (!digits_ok(num, true) || !digits_ok(den, false)) throw bad();
        if (num[0] == '+') num.erase(0, 1);
        mpz_class n(num, 10), d(den, 10);
        if (d == 0) throw validation_error("zero denominator in '" + s + "'");
        return Rational(n, d);
    }

    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }
    mpq_class const& raw() const { return q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    double to_double() const { return q_.get_d(); }

    std::string to_string() const {
        if (is_integer()) return q_.get_num().get_str();
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

    Rational operator-() const { return Rational(mpq_class(-q_)); }

    Rational& operator+=(Rational const& o) { q_ += o.q_; return *this; }
    Rational& operator-=(Rational const& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(Rational const& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(Rational const& o) {
        if (o.is_zero()) throw std::domain_error("division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, Rational const& b) { return a += b; }
    friend Rational operator-(Rational a, Rational const& b) { return a -= b; }
    friend Rational operator*(Rational a, Rational const& b) { return a *= b; }
    friend Rational operator/(Rational a, Rational const& b) { return a /= b; }

    friend bool operator==(Rational const& a, Rational const& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(Rational const& a, Rational const& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    Rational reciprocal() const {
        if (is_zero()) throw std::domain_error("reciprocal of zero");
        return Rational(mpq_class(1) / q_);
    }

    std::size_t hash() const {
        std::hash<std::string> h;
        return h(to_string());
    }

private:
    static mpz_class mpz_from(long long n) { return mpz_class(std::to_string(n), 10); }

    mpq_class q_{0};
};

inline bool is_zero(Rational const& x) { return x.is_zero(); }
inline std::string to_string(Rational const& x) { return x.to_string(); }
inline double to_double(Rational const& x) { return x.to_double(); }

inline Rational pow(Rational const& base, unsigned exponent) {
    Rational result(1), b = base;
    while (exponent) {
        if (exponent & 1U) result *= b;
        b *= b;
        exponent >>= 1U;
    }
    return result;
}

inline std::ostream& operator<<(std::ostream& os, Rational const& x) { return os << x.to_string(); }

}  // namespace waring

template <>
struct std::hash<waring::Rational> {
    std::size_t operator()(waring::Rational const& x) const { return x.hash(); }
};
