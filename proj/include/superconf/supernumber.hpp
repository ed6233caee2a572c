#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "superconf/gaussian_rational.hpp"

namespace superconf {

/// Set of anticommuting generator labels, bit k standing for label k+1.
using Mask = std::uint32_t;

/// Largest supported generator count; combined superfield masks reserve two bits for the odd variables.
inline constexpr int kMaxGenerators = 24;

enum class Parity : int { Even = 0, Odd = 1 };

inline Parity operator+(Parity a, Parity b) {
    return static_cast<Parity>((static_cast<int>(a) + static_cast<int>(b)) & 1);
}
inline int sign_of(Parity a, Parity b) {
    return (a == Parity::Odd && b == Parity::Odd) ? -1 : 1;
}
inline Parity parity_of_mask(Mask m) { return static_cast<Parity>(std::popcount(m) & 1); }

/// Sign from reordering the concatenated monomials a·b into increasing label order;
/// 0 when a and b share a generator.
inline int reorder_sign(Mask a, Mask b) {
    if (a & b) return 0;
    int swaps = 0;
    for (Mask rest = b; rest; rest &= rest - 1) {
        int j = std::countr_zero(rest);
        swaps += std::popcount(a >> (j + 1));
    }
    return (swaps & 1) ? -1 : 1;
}

/// Strictly increasing list of generator labels in 1..L; the empty list is (∅).
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::vector<int> labels);
    static MultiIndex from_mask(Mask m);

    const std::vector<int>& labels() const { return labels_; }
    Mask mask() const;
    Parity parity() const { return static_cast<Parity>(labels_.size() & 1); }
    bool empty() const { return labels_.empty(); }
    int max_label() const { return labels_.empty() ? 0 : labels_.back(); }

    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

private:
    std::vector<int> labels_;
};

/// Element of the Grassmann algebra on L generators with Gaussian-rational coefficients.
/// Zero coefficients are never stored, so structural equality is mathematical equality.
class Supernumber {
public:
    using Terms = std::map<Mask, GaussianRational>;

    Supernumber() = default;
    explicit Supernumber(int generators);
    Supernumber(int generators, const GaussianRational& scalar);

    static Supernumber generator(int generators, int label);
    static Supernumber monomial(int generators, const MultiIndex& index, const GaussianRational& coeff = 1);
    static Supernumber from_terms(int generators, const Terms& terms);

    int generators() const { return generators_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    GaussianRational coefficient(const MultiIndex& index) const;
    GaussianRational coefficient(Mask m) const;

    GaussianRational body() const;
    Supernumber soul() const;
    Supernumber even_part() const;
    Supernumber odd_part() const;
    bool is_even() const;
    bool is_odd() const;
    /// Homogeneous parity; zero counts as even; nullopt when mixed.
    std::optional<Parity> parity() const;
    /// True when all generator labels used are <= k (membership in the subalgebra on k generators).
    bool within(int k) const;
    int max_label() const;

    Supernumber operator-() const;
    Supernumber& operator+=(const Supernumber& o);
    Supernumber& operator-=(const Supernumber& o);
    Supernumber& operator*=(const GaussianRational& c);
    friend Supernumber operator+(Supernumber a, const Supernumber& b) { return a += b; }
    friend Supernumber operator-(Supernumber a, const Supernumber& b) { return a -= b; }
    friend Supernumber operator*(const Supernumber& a, const Supernumber& b);
    friend Supernumber operator*(Supernumber a, const GaussianRational& c) { return a *= c; }
    friend Supernumber operator*(const GaussianRational& c, Supernumber a) { return a *= c; }
    friend bool operator==(const Supernumber& a, const Supernumber& b) {
        return a.generators_ == b.generators_ && a.terms_ == b.terms_;
    }

    Supernumber pow(unsigned k) const;
    /// Two-sided inverse via the terminating soul series; NotInvertible when the body is zero.
    Supernumber inverse() const;
    /// exp of a pure-soul even element (terminating series).
    Supernumber exp_soul() const;
    /// Square root with the given body root; the soul part uses the binomial series of (1+s)^(1/2).
    Supernumber sqrt_with_body(const GaussianRational& body_root) const;

    Supernumber extend(int generators) const;
    Supernumber restrict_to(int generators) const;

    /// "3/2 + (0+1i)*z[1]z[2]"
    std::string to_string() const;
    static Supernumber parse(int generators, const std::string& text);

private:
    void add_term(Mask m, const GaussianRational& c);
    int generators_ = 0;
    Terms terms_;
};

void check_same_generators(int a, int b, const char* where);

// Named entry points mirroring the module contract.
Supernumber gr_mul(const Supernumber& x, const Supernumber& y);
std::pair<GaussianRational, Supernumber> gr_body_soul(const Supernumber& x);
Supernumber gr_inv(const Supernumber& x);
Supernumber gr_extend(const Supernumber& x, int generators);
Supernumber gr_restrict(const Supernumber& x, int generators);

}  // namespace superconf
