#pragma once

#include <vector>

#include "superconf/gaussian_rational.hpp"

namespace superconf {

/// Laurent polynomial in one variable with Gaussian-rational coefficients.
/// Stored densely from the lowest nonzero exponent; trimmed on both ends.
class Poly {
public:
    Poly() = default;
    Poly(const GaussianRational& c);  // NOLINT(google-explicit-constructor)
    static Poly monomial(const GaussianRational& c, int exponent);
    /// Coefficients of z^low, z^(low+1), ...
    static Poly from_coeffs(std::vector<GaussianRational> coeffs, int low = 0);
    /// z - root
    static Poly linear_factor(const GaussianRational& root);

    bool is_zero() const { return coeffs_.empty(); }
    int low() const { return low_; }
    /// Highest exponent; meaningless for zero.
    int high() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
    /// Degree of an ordinary polynomial (requires low() >= 0); -1 for zero.
    int degree() const { return is_zero() ? -1 : high(); }
    bool is_polynomial() const { return is_zero() || low_ >= 0; }
    bool is_constant() const { return is_zero() || (low_ == 0 && coeffs_.size() == 1); }
    GaussianRational coeff(int exponent) const;
    const GaussianRational& leading() const { return coeffs_.back(); }
    const std::vector<GaussianRational>& dense() const { return coeffs_; }

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const GaussianRational& c);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const GaussianRational& c) { return a *= c; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.low_ == b.low_ && a.coeffs_ == b.coeffs_; }

    /// Multiply by z^k.
    Poly shifted(int k) const;
    Poly derivative() const;
    Poly pow(unsigned k) const;
    GaussianRational eval(const GaussianRational& z) const;

    /// Polynomial long division (both operands ordinary polynomials, divisor nonzero).
    static void divmod(const Poly& num, const Poly& den, Poly& quot, Poly& rem);
    /// Exact quotient; throws when the division leaves a remainder.
    static Poly exact_div(const Poly& num, const Poly& den);
    /// Monic gcd of ordinary polynomials; gcd(0,0) = 0.
    static Poly gcd(const Poly& a, const Poly& b);
    Poly monic() const;

private:
    void trim();
    int low_ = 0;
    std::vector<GaussianRational> coeffs_;
};

}  // namespace superconf
