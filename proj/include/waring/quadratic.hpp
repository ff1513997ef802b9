#pragma once

/**
 * @file quadratic.hpp
 * @brief Exact arithmetic in a real quadratic field Q(sqrt(D)).
 *
 * An element a + b*sqrt(D) stores its two rational coordinates and a handle
 * to an interned QuadField context. The context is shared, never copied per
 * element, and two elements whose contexts differ cannot be combined.
 *
 * An element with a null context is a plain rational (b == 0). It combines
 * with any field, which is how Rational embeds into every Q(sqrt(D)).
 */

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <string>

#include "waring/errors.hpp"
#include "waring/rational.hpp"

namespace waring {

class QuadField {
public:
    /// Interned context for Q(sqrt(D)); D must be a squarefree integer > 1.
    static QuadField const& get(long radicand) {
        if (radicand < 2 || !squarefree(radicand))
            throw validation_error("sqrt(" + std::to_string(radicand) +
                                   "): radicand must be a squarefree integer > 1");
        static std::mutex mutex;
        static std::map<long, std::unique_ptr<QuadField>> registry;
        std::lock_guard lock(mutex);
        auto& slot = registry[radicand];
        if (!slot) slot.reset(new QuadField(radicand));
        return *slot;
    }

    long radicand() const { return radicand_; }

    QuadField(QuadField const&) = delete;
    QuadField& operator=(QuadField const&) = delete;

private:
    explicit QuadField(long radicand) : radicand_(radicand) {}

    static bool squarefree(long n) {
        for (long p = 2; p * p <= n; ++p)
            if (n % (p * p) == 0) return false;
        return true;
    }

    long radicand_;
};

class QuadExt {
public:
    QuadExt() = default;
    QuadExt(int a) : a_(a) {}  // NOLINT(google-explicit-constructor)
    QuadExt(Rational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
    QuadExt(Rational a, Rational b, QuadField const& field)
        : a_(std::move(a)), b_(std::move(b)), field_(&field) {}

    static QuadExt sqrt(long radicand) { return {0, 1, QuadField::get(radicand)}; }

    Rational const& rational_part() const { return a_; }
    Rational const& radical_part() const { return b_; }
    QuadField const* field() const { return field_; }
    long radicand() const { return field_ ? field_->radicand() : 0; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }

    /// a^2 - D b^2.
    Rational norm() const { return a_ * a_ - Rational(radicand()) * b_ * b_; }

    QuadExt conjugate() const { return make(a_, -b_, field_); }

    QuadExt operator-() const { return make(-a_, -b_, field_); }

    friend QuadExt operator+(QuadExt const& u, QuadExt const& v) {
        auto f = common_field(u, v);
        return make(u.a_ + v.a_, u.b_ + v.b_, f);
    }
    friend QuadExt operator-(QuadExt const& u, QuadExt const& v) {
        auto f = common_field(u, v);
        return make(u.a_ - v.a_, u.b_ - v.b_, f);
    }
    friend QuadExt operator*(QuadExt const& u, QuadExt const& v) {
        auto f = common_field(u, v);
        Rational d(f ? f->radicand() : 0L);
        return make(u.a_ * v.a_ + d * u.b_ * v.b_, u.a_ * v.b_ + v.a_ * u.b_, f);
    }
    friend QuadExt operator/(QuadExt const& u, QuadExt const& v) { return u * v.inverse(); }

    QuadExt& operator+=(QuadExt const& o) { return *this = *this + o; }
    QuadExt& operator-=(QuadExt const& o) { return *this = *this - o; }
    QuadExt& operator*=(QuadExt const& o) { return *this = *this * o; }
    QuadExt& operator/=(QuadExt const& o) { return *this = *this / o; }

    QuadExt inverse() const {
        Rational n = norm();
        if (n.is_zero()) throw std::domain_error("inverse of zero in Q(sqrt(D))");
        return make(a_ / n, -b_ / n, field_);
    }

    /// Componentwise; contexts only matter when a radical part is present.
    friend bool operator==(QuadExt const& u, QuadExt const& v) {
        if (u.b_.is_zero() && v.b_.is_zero()) return u.a_ == v.a_;
        return u.field_ == v.field_ && u.a_ == v.a_ && u.b_ == v.b_;
    }

    double to_double() const {
        return a_.to_double() + b_.to_double() * std::sqrt(static_cast<double>(radicand()));
    }

    /// "a+b*sqrt(D)"; a zero a and a unit b are omitted, "a" alone when b = 0.
    std::string to_string() const {
        if (b_.is_zero()) return a_.to_string();
        std::string radical = "sqrt(" + std::to_string(radicand()) + ")";
        std::string head = a_.is_zero() ? "" : a_.to_string();
        Rational mag = b_.sign() < 0 ? -b_ : b_;
        std::string tail = mag == Rational(1) ? radical : mag.to_string() + "*" + radical;
        if (b_.sign() < 0) return head + "-" + tail;
        return head + (head.empty() ? "" : "+") + tail;
    }

private:
    static QuadExt make(Rational a, Rational b, QuadField const* f) {
        QuadExt r;
        r.a_ = std::move(a);
        r.b_ = std::move(b);
        r.field_ = f;
        return r;
    }

    static QuadField const* common_field(QuadExt const& u, QuadExt const& v) {
        if (!u.field_) return v.field_;
        if (!v.field_ || u.field_ == v.field_) return u.field_;
        throw field_mismatch("cannot combine elements of Q(sqrt(" +
                             std::to_string(u.field_->radicand()) + ")) and Q(sqrt(" +
                             std::to_string(v.field_->radicand()) + "))");
    }

    Rational a_;
    Rational b_;
    QuadField const* field_ = nullptr;
};

inline bool is_zero(QuadExt const& x) { return x.is_zero(); }
inline std::string to_string(QuadExt const& x) { return x.to_string(); }
inline double to_double(QuadExt const& x) { return x.to_double(); }

inline std::ostream& operator<<(std::ostream& os, QuadExt const& x) { return os << x.to_string(); }

/// Roots of z^2 - z - 1: (1 + sqrt 5)/2 and (1 - sqrt 5)/2.
inline QuadExt golden_ratio_plus() {
    return {Rational(1, 2), Rational(1, 2), QuadField::get(5)};
}
inline QuadExt golden_ratio_minus() {
    return {Rational(1, 2), Rational(-1, 2), QuadField::get(5)};
}

}  // namespace waring
