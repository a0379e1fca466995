#pragma once

/**
 * @file parser.hpp
 * @brief Text form of monomial ideals.
 *
 * Grammar (whitespace insignificant, positions reported 1-based):
 *
 *     ideal  :=  term (',' term)*
 *     term   :=  factor ('*' factor)*
 *     factor :=  ident ('^' positive-integer)?  |  '1'
 *
 * Variables are declared up front (never inferred), which pins the
 * exponent-vector order. Repeated variables accumulate: "x*x" is x^2.
 * Two closure extensions keep render/parse a total round trip: "1" is
 * the unit monomial, and a term "0" contributes no generator (so "0"
 * alone denotes the zero ideal).
 */

#include <cohlen/monomial.hpp>

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cohlen {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error(message + " at position " + std::to_string(position)),
          position_(position) {}

    /// 1-based character position in the input.
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Validates declared variable names: unique identifiers.
inline std::vector<std::string> parse_variable_names(std::string_view text) {
    std::vector<std::string> names;
    std::string current;
    auto flush = [&] {
        if (current.empty()) throw std::invalid_argument("empty variable name");
        for (const std::string& seen : names)
            if (seen == current)
                throw std::invalid_argument("duplicate variable name: " + current);
        names.push_back(current);
        current.clear();
    };
    for (char c : text) {
        if (c == ',') {
            flush();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            if (current.empty() ? !(std::isalpha(static_cast<unsigned char>(c)) || c == '_')
                                : !(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
                throw std::invalid_argument(std::string("invalid variable name character: ") + c);
            current += c;
        }
    }
    flush();
    return names;
}

/// Parses the ideal text over the declared variables; the result is
/// minimalized. Errors carry the 1-based input position.
inline MonomialIdeal parse_ideal(std::string_view text,
                                 const std::vector<std::string>& variables) {
    const int dim = static_cast<int>(variables.size());
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto lookup = [&](const std::string& name) {
        for (int i = 0; i < dim; ++i)
            if (variables[static_cast<std::size_t>(i)] == name) return i;
        return -1;
    };

    std::vector<Monomial> gens;
    while (true) {
        skip_ws();
        std::vector<int> exponents(static_cast<std::size_t>(dim), 0);
        bool zero_term = false;
        while (true) {
            skip_ws();
            if (pos < text.size() &&
                (std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
                std::size_t ident_start = pos + 1;
                std::string name;
                while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                             text[pos] == '_'))
                    name += text[pos++];
                int var = lookup(name);
                if (var < 0) throw ParseError("unknown variable " + name, ident_start);
                long long exponent = 1;
                skip_ws();
                if (pos < text.size() && text[pos] == '^') {
                    ++pos;
                    skip_ws();
                    std::size_t exp_start = pos + 1;
                    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
                        throw ParseError("malformed exponent", exp_start);
                    exponent = 0;
                    while (pos < text.size() &&
                           std::isdigit(static_cast<unsigned char>(text[pos]))) {
                        exponent = exponent * 10 + (text[pos++] - '0');
                        if (exponent > 1000000000)
                            throw ParseError("malformed exponent", exp_start);
                    }
                    if (exponent == 0) throw ParseError("malformed exponent", exp_start);
                }
                exponents[static_cast<std::size_t>(var)] += static_cast<int>(exponent);
            } else if (pos < text.size() && (text[pos] == '0' || text[pos] == '1')) {
                if (text[pos] == '0') zero_term = true;
                ++pos;
            } else {
                throw ParseError("empty term", pos + 1);
            }
            skip_ws();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                continue;
            }
            break;
        }
        if (!zero_term) gens.push_back(Monomial(std::move(exponents)));
        skip_ws();
        if (pos >= text.size()) break;
        if (text[pos] != ',') throw ParseError("unexpected character", pos + 1);
        ++pos;
    }
    return MonomialIdeal(dim, std::move(gens));
}

inline std::string render_monomial(const Monomial& m,
                                   const std::vector<std::string>& variables) {
    std::string s;
    for (int i = 0; i < m.vars(); ++i) {
        if (m[i] == 0) continue;
        if (!s.empty()) s += '*';
        s += variables[static_cast<std::size_t>(i)];
        if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
    return s.empty() ? "1" : s;
}

inline std::string render_ideal(const MonomialIdeal& ideal,
                                const std::vector<std::string>& variables) {
    if (ideal.is_zero()) return "0";
    std::string s;
    for (const Monomial& g : ideal.generators()) {
        if (!s.empty()) s += ", ";
        s += render_monomial(g, variables);
    }
    return s;
}

}  // namespace cohlen
