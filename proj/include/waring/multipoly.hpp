#pragma once

/**
 * @file multipoly.hpp
 * @brief Sparse polynomials in a fixed number of variables.
 *
 * Used where a computation has to be carried out symbolically: the Delta(S,P)
 * construction over Q[S,P], identities in the quartic parameter t, and the
 * trivariate differentiation behind the z*f(x,y) annihilator check.
 */

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "waring/field.hpp"

namespace waring {

template <class K, std::size_t N>
class MultiPoly {
public:
    using Exponent = std::array<int, N>;
    using Terms = std::map<Exponent, K>;

    MultiPoly() = default;
    MultiPoly(int c) : MultiPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
    MultiPoly(Rational const& c) { add_term(Exponent{}, K(c)); }  // NOLINT(google-explicit-constructor)
    explicit MultiPoly(K const& c) requires(!std::same_as<K, Rational>) { add_term(Exponent{}, c); }

    static MultiPoly variable(std::size_t index) {
        Exponent e{};
        e[index] = 1;
        return monomial(e, K(Rational(1)));
    }

    static MultiPoly monomial(Exponent const& e, K const& c) {
        MultiPoly p;
        p.add_term(e, c);
        return p;
    }

    Terms const& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    K coefficient(Exponent const& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? K(Rational(0)) : it->second;
    }

    int total_degree() const {
        int best = -1;
        for (auto const& [e, c] : terms_) {
            int s = 0;
            for (int v : e) s += v;
            if (s > best) best = s;
        }
        return best;
    }

    void add_term(Exponent const& e, K const& c) {
        if (is_zero_coeff(c)) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second = it->second + c;
            if (is_zero_coeff(it->second)) terms_.erase(it);
        }
    }

    MultiPoly operator-() const {
        MultiPoly r;
        for (auto const& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    friend MultiPoly operator+(MultiPoly a, MultiPoly const& b) {
        for (auto const& [e, c] : b.terms_) a.add_term(e, c);
        return a;
    }
    friend MultiPoly operator-(MultiPoly a, MultiPoly const& b) {
        for (auto const& [e, c] : b.terms_) a.add_term(e, -c);
        return a;
    }
    friend MultiPoly operator*(MultiPoly const& a, MultiPoly const& b) {
        MultiPoly r;
        for (auto const& [ea, ca] : a.terms_)
            for (auto const& [eb, cb] : b.terms_) {
                Exponent e;
                for (std::size_t i = 0; i < N; ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    MultiPoly& operator+=(MultiPoly const& o) { return *this = *this + o; }
    MultiPoly& operator-=(MultiPoly const& o) { return *this = *this - o; }
    MultiPoly& operator*=(MultiPoly const& o) { return *this = *this * o; }

    friend bool operator==(MultiPoly const& a, MultiPoly const& b) { return a.terms_ == b.terms_; }

    MultiPoly scaled(K const& s) const {
        MultiPoly r;
        for (auto const& [e, c] : terms_) r.add_term(e, c * s);
        return r;
    }

    /// d^k/dv^k with respect to variable `var`.
    MultiPoly derivative(std::size_t var, int order = 1) const {
        MultiPoly r;
        for (auto const& [e, c] : terms_) {
            if (e[var] < order) continue;
            Exponent ne = e;
            ne[var] -= order;
            r.add_term(ne, c * K(falling_factorial(e[var], order)));
        }
        return r;
    }

    /// Applies the constant-coefficient operator `op` (variables read as
    /// partial derivatives) to this polynomial.
    MultiPoly differentiate_by(MultiPoly const& op) const {
        MultiPoly r;
        for (auto const& [e, c] : op.terms_) {
            MultiPoly part = *this;
            for (std::size_t v = 0; v < N; ++v)
                if (e[v] > 0) part = part.derivative(v, e[v]);
            r += part.scaled(c);
        }
        return r;
    }

    template <class V>
    V evaluate(std::array<V, N> const& point) const {
        V sum(Rational(0));
        for (auto const& [e, c] : terms_) {
            V term = V(c);
            for (std::size_t i = 0; i < N; ++i)
                for (int k = 0; k < e[i]; ++k) term = term * point[i];
            sum = sum + term;
        }
        return sum;
    }

    std::string to_string(std::array<char const*, N> const& names) const {
        if (terms_.empty()) return "0";
        std::string out;
        // Highest exponents (lexicographic) first.
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            std::string coeff = waring::to_string(it->second);
            bool constant = true;
            std::string mono;
            for (std::size_t i = 0; i < N; ++i) {
                if (it->first[i] == 0) continue;
                constant = false;
                if (!mono.empty()) mono += "*";
                mono += names[i];
                if (it->first[i] > 1) mono += "^" + std::to_string(it->first[i]);
            }
            bool negative = !coeff.empty() && coeff[0] == '-' &&
                            coeff.find_first_of("+-", 1) == std::string::npos;
            if (negative) coeff.erase(0, 1);
            bool compound = coeff.find_first_of("+-", 0) != std::string::npos;
            if (compound) coeff = "(" + coeff + ")";
            std::string body = constant ? coeff : (coeff == "1" ? mono : coeff + "*" + mono);
            if (out.empty())
                out = negative ? "-" + body : body;
            else
                out += negative ? " - " + body : " + " + body;
        }
        return out;
    }

private:
    static bool is_zero_coeff(K const& c) {
        using waring::is_zero;
        return is_zero(c);
    }

    Terms terms_;
};

template <class K, std::size_t N>
bool is_zero(MultiPoly<K, N> const& p) {
    return p.is_zero();
}

template <class K, std::size_t N>
std::string to_string(MultiPoly<K, N> const& p) {
    std::array<char const*, N> names{};
    static constexpr char const* defaults[] = {"u0", "u1", "u2", "u3", "u4", "u5"};
    for (std::size_t i = 0; i < N; ++i) names[i] = defaults[i];
    return p.to_string(names);
}

}  // namespace waring
