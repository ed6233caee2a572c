#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "superconf/poly.hpp"
#include "superconf/supernumber.hpp"

namespace superconf {

/// Which odd variable an odd derivative or D operator refers to.
enum class Odd : int { Plus = 0, Minus = 1 };

/// Combined monomial masks used by superfields: bit 0 is θ⁺ (or θ when there is a single odd
/// variable), bit 1 is θ⁻, bits 2.. are the Grassmann generators ζ₁, ζ₂, ...
/// Ordering the odd variables before the generators fixes every sign: a term θ^A ζ^J z^e is
/// the ordered product of its factors.
inline constexpr Mask kThetaBits = 0b11;
inline constexpr int kThetaShift = 2;
inline constexpr Mask theta_bit(Odd which) { return Mask{1} << static_cast<int>(which); }
inline Mask zeta_to_combined(Mask zeta) { return zeta << kThetaShift; }
inline Mask combined_to_zeta(Mask m) { return m >> kThetaShift; }

/// Laurent superpolynomial in one even variable z and nOdd ∈ {0,1,2} odd variables,
/// with Grassmann coefficients. Stored as combined monomial → Laurent polynomial in z.
class SuperPolynomial {
public:
    using Terms = std::map<Mask, Poly>;

    SuperPolynomial() = default;
    SuperPolynomial(int generators, int odd_count);

    static SuperPolynomial constant(int generators, int odd_count, const Supernumber& c);
    static SuperPolynomial scalar(int generators, int odd_count, const GaussianRational& c);
    /// c · z^e
    static SuperPolynomial power(int generators, int odd_count, const Supernumber& c, int exponent);
    static SuperPolynomial z(int generators, int odd_count);
    static SuperPolynomial theta(int generators, int odd_count, Odd which);
    static SuperPolynomial from_terms(int generators, int odd_count, const Terms& terms);

    int generators() const { return generators_; }
    int odd_count() const { return odd_count_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Grassmann coefficient of θ^theta_mask z^exponent.
    Supernumber coefficient(int exponent, Mask theta_mask) const;
    /// f_A(z) in F = Σ_A θ^A f_A(z), as a θ-free superpolynomial.
    SuperPolynomial theta_component(Mask theta_mask) const;
    /// Part with no odd variables.
    SuperPolynomial theta_free() const { return theta_component(0); }
    /// Coefficient of (∅) with no odd variables: an ordinary Laurent polynomial.
    Poly body() const;

    bool is_even() const;
    bool is_odd() const;
    std::optional<Parity> parity() const;
    SuperPolynomial even_part() const;
    SuperPolynomial odd_part() const;
    /// All Grassmann coefficients lie in the subalgebra on the first k generators.
    bool coefficients_within(int k) const;
    int min_exponent() const;
    int max_exponent() const;
    bool is_polynomial() const { return is_zero() || min_exponent() >= 0; }

    SuperPolynomial operator-() const;
    SuperPolynomial& operator+=(const SuperPolynomial& o);
    SuperPolynomial& operator-=(const SuperPolynomial& o);
    SuperPolynomial& operator*=(const GaussianRational& c);
    friend SuperPolynomial operator+(SuperPolynomial a, const SuperPolynomial& b) { return a += b; }
    friend SuperPolynomial operator-(SuperPolynomial a, const SuperPolynomial& b) { return a -= b; }
    friend SuperPolynomial operator*(const SuperPolynomial& a, const SuperPolynomial& b);
    friend SuperPolynomial operator*(SuperPolynomial a, const GaussianRational& c) { return a *= c; }
    friend SuperPolynomial operator*(const Supernumber& c, const SuperPolynomial& a);
    friend SuperPolynomial operator*(const SuperPolynomial& a, const Supernumber& c);
    friend SuperPolynomial operator*(const SuperPolynomial& a, const Poly& p);
    friend bool operator==(const SuperPolynomial& a, const SuperPolynomial& b) {
        return a.generators_ == b.generators_ && a.odd_count_ == b.odd_count_ && a.terms_ == b.terms_;
    }

    SuperPolynomial pow(unsigned k) const;
    SuperPolynomial shifted(int k) const;
    /// Divide every component exactly by a scalar polynomial.
    SuperPolynomial exact_div(const Poly& p) const;
    SuperPolynomial derivative_z() const;
    /// Left derivative ∂/∂θ: removes the variable after moving it to the front.
    SuperPolynomial derivative_theta(Odd which) const;
    /// D± = ∂/∂θ± + θ∓ ∂/∂z (two odd variables only).
    SuperPolynomial apply_D(Odd which) const;

    /// Reinterpret over a different number of odd variables (only the variables kept may occur).
    SuperPolynomial with_odd_count(int odd_count) const;
    SuperPolynomial extend(int generators) const;
    SuperPolynomial restrict_to(int generators) const;

    std::string to_string() const;
    static SuperPolynomial parse(int generators, int odd_count, const std::string& text);

private:
    void add(Mask m, const Poly& p);
    int generators_ = 0;
    int odd_count_ = 0;
    Terms terms_;
};

/// Point (z, θ...) of superspace at which a superfunction is evaluated.
struct SuperPoint {
    Supernumber z;
    std::vector<Supernumber> thetas;
};

/// numerator / denominator with a monic scalar denominator, reduced so that no nonconstant
/// factor of the denominator divides every numerator component. The reduced form is unique,
/// so structural equality is mathematical equality.
class RationalSuperfunction {
public:
    RationalSuperfunction() = default;
    RationalSuperfunction(int generators, int odd_count);
    RationalSuperfunction(const SuperPolynomial& numerator);  // NOLINT(google-explicit-constructor)
    RationalSuperfunction(const SuperPolynomial& numerator, const Poly& denominator);

    static RationalSuperfunction constant(int generators, int odd_count, const Supernumber& c);
    static RationalSuperfunction scalar(int generators, int odd_count, const GaussianRational& c);
    static RationalSuperfunction z(int generators, int odd_count);
    static RationalSuperfunction theta(int generators, int odd_count, Odd which);
    /// p(z)/q(z) with scalar polynomials.
    static RationalSuperfunction scalar_ratio(int generators, int odd_count, const Poly& p, const Poly& q);

    int generators() const { return num_.generators(); }
    int odd_count() const { return num_.odd_count(); }
    const SuperPolynomial& numerator() const { return num_; }
    const Poly& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    RationalSuperfunction theta_component(Mask theta_mask) const;
    RationalSuperfunction theta_free() const { return theta_component(0); }
    /// θ-dependent remainder F − F|θ=0.
    RationalSuperfunction theta_nilpotent() const;
    /// The body rational function: numerator body over the denominator.
    Poly body_numerator() const { return num_.body(); }
    bool has_nonzero_body() const { return !num_.body().is_zero(); }

    bool is_even() const { return num_.is_even(); }
    bool is_odd() const { return num_.is_odd(); }
    std::optional<Parity> parity() const { return num_.parity(); }
    bool coefficients_within(int k) const { return num_.coefficients_within(k); }

    RationalSuperfunction operator-() const;
    RationalSuperfunction& operator+=(const RationalSuperfunction& o);
    RationalSuperfunction& operator-=(const RationalSuperfunction& o);
    friend RationalSuperfunction operator+(RationalSuperfunction a, const RationalSuperfunction& b) { return a += b; }
    friend RationalSuperfunction operator-(RationalSuperfunction a, const RationalSuperfunction& b) { return a -= b; }
    friend RationalSuperfunction operator*(const RationalSuperfunction& a, const RationalSuperfunction& b);
    friend RationalSuperfunction operator*(const RationalSuperfunction& a, const GaussianRational& c);
    friend RationalSuperfunction operator*(const Supernumber& c, const RationalSuperfunction& a);
    friend RationalSuperfunction operator*(const RationalSuperfunction& a, const Supernumber& c);
    /// a · b⁻¹; NotInvertible when b has zero body.
    friend RationalSuperfunction operator/(const RationalSuperfunction& a, const RationalSuperfunction& b);
    friend bool operator==(const RationalSuperfunction& a, const RationalSuperfunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    /// Inverse through the terminating geometric series in the nilpotent part of the numerator.
    RationalSuperfunction inverse() const;
    /// Integer power; negative powers need an invertible body.
    RationalSuperfunction pow(int k) const;

    RationalSuperfunction derivative_z() const;
    RationalSuperfunction derivative_theta(Odd which) const;
    RationalSuperfunction apply_D(Odd which) const;

    /// Value at a superpoint; PoleAtPoint when the denominator body vanishes there.
    Supernumber evaluate(const SuperPoint& p) const;

    /// F(w, odd_images): z ↦ w and θ_k ↦ odd_images[k]. w is split into its θ-free part and a
    /// θ-nilpotent remainder whose cube vanishes, and F is expanded to second order in it.
    RationalSuperfunction substitute(const RationalSuperfunction& w,
                                     const std::vector<RationalSuperfunction>& odd_images) const;

    RationalSuperfunction with_odd_count(int odd_count) const;
    RationalSuperfunction extend(int generators) const;
    RationalSuperfunction restrict_to(int generators) const;

    /// "num" when the denominator is 1, otherwise "(num)/(den)".
    std::string to_string() const;
    static RationalSuperfunction parse(int generators, int odd_count, const std::string& text);

private:
    void normalize();
    /// θ-free self composed with θ-free w.
    RationalSuperfunction compose_theta_free(const RationalSuperfunction& w) const;
    SuperPolynomial num_;
    Poly den_{GaussianRational(1)};
};

/// Exact equality through cross-multiplication (independent of the reduced form).
bool equal_by_cross_multiplication(const RationalSuperfunction& a, const RationalSuperfunction& b);

// Named entry points mirroring the module contract.
Supernumber sf_evaluate(const RationalSuperfunction& f, const SuperPoint& p);
RationalSuperfunction sf_diff_even(const RationalSuperfunction& f);
RationalSuperfunction sf_diff_odd(const RationalSuperfunction& f, Odd which);
RationalSuperfunction sf_apply_Dpm(const RationalSuperfunction& f, Odd which);
RationalSuperfunction sf_substitute(const RationalSuperfunction& f, const RationalSuperfunction& w,
                                    const std::vector<RationalSuperfunction>& odd_images);

}  // namespace superconf
