#pragma once

/**
 * @file parse.hpp
 * @brief Text input for binary forms, scalars and parameter grids.
 *
 * Form grammar (whitespace ignored, juxtaposition multiplies):
 *
 *   expr    := term (('+' | '-') term)*
 *   term    := unary (('*' | '/')? unary)*
 *   unary   := ('+' | '-') unary | power
 *   power   := primary ('^' integer)?
 *   primary := integer | 'x' | 'y' | 'sqrt' '(' integer ')' | '(' expr ')'
 *
 * Division is only by constants. Alternatively "coeffs:<d>:[c0,...,cd]" gives
 * the raw coefficients of x^{d-i} y^i directly.
 */

#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "waring/binary_form.hpp"
#include "waring/errors.hpp"
#include "waring/multipoly.hpp"
#include "waring/quadratic.hpp"

namespace waring {

using XYPoly = MultiPoly<QuadExt, 2>;

namespace detail {

class ExpressionParser {
public:
    ExpressionParser(std::string_view text, bool allow_variables)
        : text_(text), allow_variables_(allow_variables) {}

    XYPoly parse() {
        skip_space();
        if (at_end()) throw parse_error("empty expression", pos_);
        XYPoly v = expr();
        skip_space();
        if (!at_end()) throw parse_error(std::string("unexpected '") + text_[pos_] + "'", pos_);
        return v;
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }
    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        skip_space();
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) throw parse_error(std::string("expected '") + c + "'", pos_);
    }

    XYPoly expr() {
        XYPoly v = term();
        for (;;) {
            if (accept('+'))
                v = v + term();
            else if (accept('-'))
                v = v - term();
            else
                return v;
        }
    }

    bool starts_primary() {
        skip_space();
        char c = peek();
        return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) || c == '(';
    }

    XYPoly term() {
        XYPoly v = unary();
        for (;;) {
            if (accept('*')) {
                v = v * unary();
            } else if (accept('/')) {
                std::size_t at = pos_;
                XYPoly d = unary();
                v = v * constant_inverse(d, at);
            } else if (starts_primary()) {
                v = v * unary();
            } else {
                return v;
            }
        }
    }

    XYPoly constant_inverse(XYPoly const& d, std::size_t at) {
        if (d.total_degree() > 0) throw parse_error("division by a non-constant", at);
        QuadExt c = d.coefficient({0, 0});
        if (c.is_zero()) throw parse_error("division by zero", at);
        return XYPoly(c.inverse());
    }

    XYPoly unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    XYPoly power() {
        XYPoly base = primary();
        if (accept('^')) {
            skip_space();
            std::size_t at = pos_;
            auto e = integer();
            if (!e) throw parse_error("expected a non-negative integer exponent", at);
            if (*e > 256) throw parse_error("exponent too large", at);
            XYPoly r(1);
            for (long k = 0; k < *e; ++k) r = r * base;
            return r;
        }
        return base;
    }

    std::optional<long> integer() {
        skip_space();
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) return std::nullopt;
        if (pos_ - start > 18) throw parse_error("integer literal too long for an exponent", start);
        return std::stol(std::string(text_.substr(start, pos_ - start)));
    }

    XYPoly primary() {
        skip_space();
        std::size_t start = pos_;
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            mpz_class n(std::string(text_.substr(start, pos_ - start)), 10);
            return XYPoly(Rational(n));
        }
        if (accept('(')) {
            XYPoly v = expr();
            expect(')');
            return v;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            while (!at_end() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            std::string name(text_.substr(start, pos_ - start));
            if (name == "sqrt") {
                expect('(');
                skip_space();
                std::size_t at = pos_;
                auto radicand = integer();
                if (!radicand) throw parse_error("sqrt expects an integer radicand", at);
                expect(')');
                try {
                    return XYPoly(QuadExt::sqrt(*radicand));
                } catch (validation_error const& e) {
                    throw parse_error(e.what(), at);
                }
            }
            if (name == "x" || name == "y") {
                if (!allow_variables_) throw parse_error("variable '" + name + "' in a scalar", start);
                return XYPoly::variable(name == "x" ? 0 : 1);
            }
            throw parse_error("unknown variable '" + name + "'", start);
        }
        if (at_end()) throw parse_error("unexpected end of input", pos_);
        throw parse_error(std::string("unexpected '") + c + "'", pos_);
    }

    std::string_view text_;
    bool allow_variables_;
    std::size_t pos_ = 0;
};

// Elements of Q(sqrt D) can still meet a second radicand inside one
// expression; report that as a parse error at the start.
template <class Fn>
auto with_field_check(Fn&& fn) {
    try {
        return fn();
    } catch (field_mismatch const& e) {
        throw parse_error(e.what(), 0);
    }
}

}  // namespace detail

/// Constant expression such as "3/4", "-2", "1/2+1/2*sqrt(5)".
inline QuadExt parse_scalar(std::string_view text) {
    return detail::with_field_check([&] {
        auto p = detail::ExpressionParser(text, false).parse();
        return p.coefficient({0, 0});
    });
}

inline BinaryForm<QuadExt> parse_form(std::string_view text) {
    static constexpr std::string_view prefix = "coeffs:";
    std::string_view trimmed = text;
    while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front()))) trimmed.remove_prefix(1);

    if (trimmed.substr(0, prefix.size()) == prefix) {
        std::size_t offset = static_cast<std::size_t>(trimmed.data() - text.data()) + prefix.size();
        std::string_view rest = trimmed.substr(prefix.size());
        auto colon = rest.find(':');
        if (colon == std::string_view::npos) throw parse_error("expected 'coeffs:<degree>:[...]'", offset);
        std::string degree_text(rest.substr(0, colon));
        int degree = -1;
        try {
            std::size_t used = 0;
            degree = std::stoi(degree_text, &used);
            if (used != degree_text.size()) degree = -1;
        } catch (std::exception const&) {
            degree = -1;
        }
        if (degree < 0) throw parse_error("bad degree '" + degree_text + "'", offset);
        std::string_view list = rest.substr(colon + 1);
        std::size_t list_offset = offset + colon + 1;
        while (!list.empty() && std::isspace(static_cast<unsigned char>(list.back()))) list.remove_suffix(1);
        if (list.size() < 2 || list.front() != '[' || list.back() != ']')
            throw parse_error("expected a bracketed coefficient list", list_offset);
        std::vector<QuadExt> coeffs;
        std::string_view body = list.substr(1, list.size() - 2);
        std::size_t start = 0;
        while (start <= body.size()) {
            auto comma = body.find(',', start);
            auto item = body.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
            try {
                coeffs.push_back(parse_scalar(item));
            } catch (parse_error const& e) {
                throw parse_error("coefficient " + std::to_string(coeffs.size()) + ": " + e.reason(),
                                  list_offset + 1 + start + e.position());
            }
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
        if (static_cast<int>(coeffs.size()) != degree + 1)
            throw validation_error("degree " + std::to_string(degree) + " needs " + std::to_string(degree + 1) +
                                   " coefficients, got " + std::to_string(coeffs.size()));
        // Mixed radicands are rejected by summing all coefficients once.
        detail::with_field_check([&] {
            QuadExt sum;
            for (auto const& c : coeffs) sum = sum + c;
            return sum;
        });
        return BinaryForm<QuadExt>(std::move(coeffs));
    }

    auto poly = detail::with_field_check([&] { return detail::ExpressionParser(text, true).parse(); });
    if (poly.is_zero()) return BinaryForm<QuadExt>::zero(0);
    int degree = -1;
    for (auto const& [e, c] : poly.terms()) {
        int deg = e[0] + e[1];
        if (degree < 0) degree = deg;
        if (deg != degree)
            throw validation_error("inhomogeneous input: terms of degree " + std::to_string(degree) + " and " +
                                   std::to_string(deg));
    }
    std::vector<QuadExt> coeffs(static_cast<std::size_t>(degree) + 1);
    for (auto const& [e, c] : poly.terms()) coeffs[static_cast<std::size_t>(e[1])] = c;
    // Distinct monomials never add, so a second radicand can hide in them.
    detail::with_field_check([&] {
        QuadExt sum;
        for (auto const& c : coeffs) sum = sum + c;
        return sum;
    });
    return BinaryForm<QuadExt>(std::move(coeffs));
}

/// Radicand shared by the form's coefficients, or 0 when they are all rational.
inline long form_radicand(BinaryForm<QuadExt> const& f) {
    for (auto const& c : f.coeffs())
        if (!c.is_rational()) return c.radicand();
    return 0;
}

inline BinaryForm<Rational> to_rational_form(BinaryForm<QuadExt> const& f) {
    std::vector<Rational> out;
    for (auto const& c : f.coeffs()) {
        if (!c.is_rational()) throw validation_error("form has irrational coefficients");
        out.push_back(c.rational_part());
    }
    return BinaryForm<Rational>(std::move(out));
}

template <ExactField F>
BinaryForm<QuadExt> to_quad_form(BinaryForm<F> const& f) {
    std::vector<QuadExt> out(f.coeffs().begin(), f.coeffs().end());
    return BinaryForm<QuadExt>(std::move(out));
}

/// Canonical text that parse_form maps back to the same coefficients.
template <ExactField F>
std::string print_form(BinaryForm<F> const& f) {
    if (f.is_zero()) {
        std::string out = "coeffs:" + std::to_string(f.degree()) + ":[";
        for (int i = 0; i <= f.degree(); ++i) out += i ? ",0" : "0";
        return out + "]";
    }
    return f.to_string();
}

/// Inclusive rational grid "name=a..b step h".
struct GridAxis {
    std::string name;
    Rational start;
    Rational stop;
    Rational step;

    std::vector<Rational> points() const {
        std::vector<Rational> out;
        for (Rational v = start; v <= stop; v += step) out.push_back(v);
        return out;
    }
};

inline GridAxis parse_grid_axis(std::string_view text) {
    std::string s(text);
    auto trim = [](std::string v) {
        auto b = v.find_first_not_of(" \t");
        auto e = v.find_last_not_of(" \t");
        return b == std::string::npos ? std::string() : v.substr(b, e - b + 1);
    };
    auto eq = s.find('=');
    auto dots = s.find("..");
    auto step = s.find(" step ");
    if (eq == std::string::npos || dots == std::string::npos || step == std::string::npos || dots < eq ||
        step < dots)
        throw validation_error("grid axis must look like 'name=a..b step h', got '" + s + "'");
    GridAxis axis;
    axis.name = trim(s.substr(0, eq));
    auto scalar = [&](std::string const& part) {
        auto v = parse_scalar(trim(part));
        if (!v.is_rational()) throw validation_error("grid endpoints and steps must be rational");
        return v.rational_part();
    };
    axis.start = scalar(s.substr(eq + 1, dots - eq - 1));
    axis.stop = scalar(s.substr(dots + 2, step - dots - 2));
    axis.step = scalar(s.substr(step + 6));
    if (axis.name.empty()) throw validation_error("grid axis needs a name");
    if (axis.step.sign() <= 0) throw validation_error("grid step must be positive");
    if (axis.stop < axis.start) throw validation_error("grid end precedes grid start");
    return axis;
}

/// Axes separated by ';'.
inline std::vector<GridAxis> parse_grid(std::string_view text) {
    std::vector<GridAxis> axes;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto semi = text.find(';', start);
        auto part = text.substr(start, semi == std::string_view::npos ? std::string_view::npos : semi - start);
        if (part.find_first_not_of(" \t") != std::string_view::npos) axes.push_back(parse_grid_axis(part));
        if (semi == std::string_view::npos) break;
        start = semi + 1;
    }
    if (axes.empty()) throw validation_error("empty grid");
    return axes;
}

}  // namespace waring
