#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "superconf/gaussian_rational.hpp"
#include "superconf/superfield.hpp"
#include "superconf/verdict.hpp"

namespace superconf {

/// Basis element of the N=2 Neveu-Schwarz algebra. For L and J, `index` is the mode m; for G± it
/// is twice the half-integer mode (always odd).
struct NSBasisSymbol {
    enum class Kind { L, J, GPlus, GMinus, Central };
    Kind kind = Kind::Central;
    int index = 0;

    static NSBasisSymbol L(int m) { return {Kind::L, m}; }
    static NSBasisSymbol J(int m) { return {Kind::J, m}; }
    /// G± with mode twice_r / 2; twice_r must be odd.
    static NSBasisSymbol G(Odd sign, int twice_r);
    static NSBasisSymbol central() { return {Kind::Central, 0}; }

    Parity parity() const { return kind == Kind::GPlus || kind == Kind::GMinus ? Parity::Odd : Parity::Even; }
    /// Mode as an exact rational (half-integer for G±).
    GaussianRational mode() const;
    std::string to_string() const;
    static NSBasisSymbol parse(const std::string& text);
    friend auto operator<=>(const NSBasisSymbol&, const NSBasisSymbol&) = default;
};

/// Finite linear combination of basis symbols with no zero coefficients.
class NSElement {
public:
    using Terms = std::map<NSBasisSymbol, GaussianRational>;

    NSElement() = default;
    NSElement(const NSBasisSymbol& s, const GaussianRational& c = GaussianRational(1));  // NOLINT
    static NSElement from_terms(const Terms& terms);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    GaussianRational coefficient(const NSBasisSymbol& s) const;
    std::optional<Parity> parity() const;
    /// Drops the central term.
    NSElement without_central() const;

    NSElement& operator+=(const NSElement& o);
    NSElement& operator-=(const NSElement& o);
    NSElement& operator*=(const GaussianRational& c);
    friend NSElement operator+(NSElement a, const NSElement& b) { return a += b; }
    friend NSElement operator-(NSElement a, const NSElement& b) { return a -= b; }
    friend NSElement operator*(NSElement a, const GaussianRational& c) { return a *= c; }
    friend NSElement operator*(const GaussianRational& c, NSElement a) { return a *= c; }
    NSElement operator-() const { return *this * GaussianRational(-1); }
    friend bool operator==(const NSElement&, const NSElement&) = default;

    std::string to_string() const;

private:
    void add(const NSBasisSymbol& s, const GaussianRational& c);
    Terms terms_;
};

NSElement ns_bracket(const NSBasisSymbol& a, const NSBasisSymbol& b);
NSElement ns_bracket(const NSElement& u, const NSElement& v);

/// L_m, J_m, G±_r for |m|, |r| ≤ band, plus the central element.
std::vector<NSBasisSymbol> ns_band_basis(int band);
/// Graded Jacobi sum for one triple (zero when the identity holds).
NSElement ns_jacobi_sum(const NSElement& x, const NSElement& y, const NSElement& z);
/// Super-Jacobi over every triple of ns_band_basis(band).
Verdict ns_jacobi_check(int band);

/// Superderivation of the Laurent superfield ring in (x, φ⁺, φ⁻), given by its values on the
/// generators. Coefficients may carry Grassmann constants.
struct DerivationField {
    Parity parity = Parity::Even;
    SuperPolynomial dx;
    SuperPolynomial dphi_plus;
    SuperPolynomial dphi_minus;

    static DerivationField zero(int generators, Parity p = Parity::Even);
    int generators() const { return dx.generators(); }
    /// Action on an arbitrary superfield, extended from the generators by the super-Leibniz rule.
    SuperPolynomial apply(const SuperPolynomial& h) const;
    friend bool operator==(const DerivationField& a, const DerivationField& b) {
        return a.dx == b.dx && a.dphi_plus == b.dphi_plus && a.dphi_minus == b.dphi_minus;
    }
    DerivationField operator+(const DerivationField& o) const;
    DerivationField operator*(const GaussianRational& c) const;
    /// Left multiplication by a homogeneous Grassmann constant.
    DerivationField scaled_by(const Supernumber& c) const;
};

/// XY − (−1)^{η(X)η(Y)} YX, computed on the generators.
DerivationField derivation_bracket(const DerivationField& x, const DerivationField& y);
/// The vector field realizing a basis symbol (the central element acts by zero).
DerivationField ns_rep(const NSBasisSymbol& s, int generators = 0);
DerivationField ns_rep(const NSElement& u, int generators = 0);
/// Compares rep of the bracket (central term dropped) with the bracket of reps.
Verdict ns_rep_bracket_check(const NSBasisSymbol& a, const NSBasisSymbol& b);
/// All pairs of ns_band_basis(band).
Verdict ns_rep_check(int band);

/// Exact coefficients of `target` in the span of `basis`, if it lies there.
std::optional<std::vector<GaussianRational>> ns_span_coordinates(const std::vector<NSElement>& basis,
                                                                 const NSElement& target);

/// The listed basis of 𝔤ₙ: the four even elements first, then the odd ones.
std::vector<NSElement> g_n_basis(int n);
/// (even dimension, odd dimension) by the rule 4 | (4 for |n| ≤ 2, |n|+2 for |n| ≥ 2).
std::pair<int, int> g_n_expected_dimensions(int n);
/// Displayed action of the even part on the odd basis for |n| ≥ 2: σₙ(u)(G_{k−½}) as a multiple of
/// the odd basis element with the given k (nullopt when it leaves the range 0..|n|+1).
struct SigmaEntry {
    GaussianRational coefficient;
    int target_k;
};
/// even_slot indexes {L₋₁, L₀ − (n/2)J₀, L₁ − nJ₁, J₀}.
SigmaEntry sigma_n(int n, int even_slot, int k);

struct ClosureReport {
    Verdict verdict;
    /// (i, j) ↦ coordinates of [bᵢ, bⱼ] in the basis, for i ≤ j.
    std::map<std::pair<int, int>, std::vector<GaussianRational>> table;
};
ClosureReport g_n_closure_check(int n);

/// Coordinate triple (x, φ⁺, φ⁻) ↦ (X, Φ⁺, Φ⁻) with Grassmann coefficients.
struct CoordinateTriple {
    SuperPolynomial x;
    SuperPolynomial phi_plus;
    SuperPolynomial phi_minus;
    static CoordinateTriple identity(int generators);
    friend bool operator==(const CoordinateTriple&, const CoordinateTriple&) = default;
};

/// exp(−p·X)·(x, φ⁺, φ⁻) for a nilpotent parameter p: p odd with X odd, or p an even soul with X
/// even. The series terminates and the result is exact.
CoordinateTriple ns_flow(const NSElement& x, const Supernumber& param);
/// Formal flow in an even parameter y: entry k is the coefficient of y^k, namely (−X)^k/k! applied
/// to the coordinates, for k = 0..order.
std::vector<CoordinateTriple> ns_flow_formal(const NSElement& x, int order, int generators = 0);

/// Closed forms for the flows of L₋₁, L₀, J₀, L₁ − nJ₁ and L₀ − (n/2)J₀ as y-series up to `order`.
std::vector<CoordinateTriple> ns_closed_form_series(const std::string& which, int n, int order, int generators = 0);
/// Closed form for exp(−ξG±_{k−½}) with ξ odd (k ≥ 0).
CoordinateTriple ns_closed_form_odd(Odd sign, int k, const Supernumber& xi);

/// Compares soul-parameter flows of 𝔤ₙ elements with the matching group action or odd translation.
Verdict ns_flow_vs_group(int n, const Supernumber& y_soul, const Supernumber& xi);

}  // namespace superconf
