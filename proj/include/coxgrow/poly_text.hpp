#ifndef COXGROW_POLY_TEXT_HPP
#define COXGROW_POLY_TEXT_HPP

#include <cctype>
#include <cstddef>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "polynomial.hpp"

namespace coxgrow {

/// Deterministic descending-power rendering: "5t^2+4t-1", "-t^3+1", "0".
inline std::string to_text(const IntPolynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        const Integer& c = p.coeff(static_cast<std::size_t>(k));
        if (c == 0) continue;
        Integer a = c < 0 ? Integer(-c) : c;
        if (first) {
            if (c < 0) out << '-';
            first = false;
        } else {
            out << (c < 0 ? '-' : '+');
        }
        if (a != 1 || k == 0) out << a.get_str();
        if (k >= 1) {
            out << 't';
            if (k >= 2) out << '^' << k;
        }
    }
    return out.str();
}

/// Parses the ASCII polynomial syntax: optional-sign terms of the form
/// "5t^2", "t", "4t", "7".  Whitespace is permitted between tokens.
inline IntPolynomial parse_polynomial(std::string_view text) {
    std::map<std::size_t, Integer> terms;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto fail = [&](const std::string& why) -> void {
        throw std::invalid_argument("parse_polynomial: " + why + " at position " +
                                    std::to_string(i) + " in \"" + std::string(text) + "\"");
    };
    skip_ws();
    if (i == text.size()) fail("empty input");
    bool first = true;
    while (i < text.size()) {
        int sign = 1;
        skip_ws();
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip_ws();
        } else if (!first) {
            fail("expected '+' or '-'");
        }
        first = false;

        std::string digits;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
            digits.push_back(text[i++]);
        skip_ws();

        bool has_var = i < text.size() && text[i] == 't';
        if (!has_var && digits.empty()) fail("expected coefficient or 't'");

        Integer coeff = digits.empty() ? Integer(1) : Integer(digits, 10);
        if (sign < 0) coeff = -coeff;

        std::size_t power = 0;
        if (has_var) {
            ++i;
            power = 1;
            skip_ws();
            if (i < text.size() && text[i] == '^') {
                ++i;
                skip_ws();
                std::string exp;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                    exp.push_back(text[i++]);
                if (exp.empty()) fail("expected exponent after '^'");
                power = std::stoul(exp);
            }
        }
        terms[power] += coeff;
        skip_ws();
    }
    std::vector<Integer> coeffs;
    for (const auto& [power, coeff] : terms) {
        if (coeffs.size() <= power) coeffs.resize(power + 1, Integer(0));
        coeffs[power] = coeff;
    }
    return IntPolynomial::from_coefficients(std::move(coeffs));
}

}  // namespace coxgrow

#endif
