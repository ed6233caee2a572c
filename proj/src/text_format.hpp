#pragma once

// Shared tokenizer/formatter for the text forms of supernumbers and superfields.

#include <string>
#include <vector>

#include "superconf/gaussian_rational.hpp"

namespace superconf::text {

struct Symbol {
    enum class Kind { Zeta, Even, ThetaPlus, ThetaMinus, Theta };
    Kind kind;
    int value = 0;  // generator label for Zeta, exponent for Even

    static Symbol zeta(int label) { return {Kind::Zeta, label}; }
    static Symbol even(int power) { return {Kind::Even, power}; }
    std::string to_string() const;
};

struct Term {
    GaussianRational coeff{1};
    std::vector<Symbol> symbols;
};

std::string format_sum(const std::vector<Term>& terms);
std::vector<Term> parse_sum(const std::string& text);

}  // namespace superconf::text
