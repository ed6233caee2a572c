#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "superconf/superfield.hpp"

namespace superconf {

/// Deterministic generator of small random algebraic objects for property checks.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    int uniform(int lo, int hi);
    bool coin(double p = 0.5);
    std::mt19937_64& engine() { return rng_; }

    /// Small Gaussian rational, possibly zero.
    GaussianRational scalar();
    GaussianRational nonzero_scalar();
    /// Small nonzero real rational.
    GaussianRational nonzero_real();

    /// Random element of Λ_L supported on labels 1..max_label, with at most max_terms terms.
    /// When parity is given the result is homogeneous of that parity. with_body=false forces a pure soul.
    Supernumber supernumber(int generators, int max_label, std::optional<Parity> parity, bool with_body = true,
                            int max_terms = 3);

    /// Random Laurent-free superpolynomial of z-degree <= max_degree.
    SuperPolynomial superpolynomial(int generators, int odd_count, int max_label, std::optional<Parity> parity,
                                    int max_degree = 3, int max_terms = 4);

private:
    std::mt19937_64 rng_;
};

}  // namespace superconf
