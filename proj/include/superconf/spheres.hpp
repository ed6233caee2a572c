#pragma once

#include <optional>
#include <string>
#include <vector>

#include "superconf/random.hpp"
#include "superconf/superconformal.hpp"

namespace superconf {

/// The two-chart sphere S²Ĉ(n), represented by its transition map.
struct SuperSphere {
    int n;
    SuperconformalMap transition;
};

/// (z, θ⁺, θ⁻) ↦ (1/z, iθ⁺z^{n−1}, iθ⁻z^{−n−1}) as component data over L generators.
SuperconformalMap sphere_transition(int n, int generators);
SuperSphere make_sphere(int n, int generators);

/// Parameters of an automorphism of S²Ĉ(n). ψ vectors are indexed by power: psi_minus[j] is ψ⁻_j.
/// eps is ε (ε⁺ when n = 0); eps_minus is ε⁻ and only used when n = 0.
struct AutomorphismParams {
    int n = 0;
    Supernumber a, b, c, d;
    Supernumber eps;
    Supernumber eps_minus;
    std::vector<Supernumber> psi_plus;
    std::vector<Supernumber> psi_minus;

    int generators() const { return a.generators(); }
    friend bool operator==(const AutomorphismParams&, const AutomorphismParams&) = default;
};

/// Expected (ψ⁺ count, ψ⁻ count) for the regime of n.
std::pair<int, int> psi_counts(int n);

/// Throws InvalidParams when the tuple violates its regime invariants.
void validate_params(const AutomorphismParams& p);

struct SphereAutomorphism {
    int n;
    SuperconformalMap southern;
    friend bool operator==(const SphereAutomorphism&, const SphereAutomorphism&) = default;
};

SphereAutomorphism aut_build(const AutomorphismParams& p);

/// Northern-chart representative and its cross-checks.
struct NorthernView {
    SuperconformalMap north;          // Iₙ⁻¹ ∘ T_S ∘ Iₙ, computed by composition
    SuperconformalMap closed_form;    // from the tilde formulas
    std::vector<std::string> formula_mismatches;  // components where the two disagree
    std::vector<std::string> pole_violations;     // poles outside the allowed body point
    bool consistent() const { return formula_mismatches.empty() && pole_violations.empty(); }
};

NorthernView aut_to_north(const SphereAutomorphism& t);
/// Closed tilde formulas for the northern components of a southern map.
SuperconformalMap tilde_formulas(const SuperconformalMap& south, int n);
/// Pole check of the southern chart: every denominator is a power of (z + d_B/c_B), or 1 when c_B = 0.
std::vector<std::string> southern_pole_violations(const SuperconformalMap& south);
/// Pole check of the northern chart: powers of (z + a_B/b_B), or 1 when b_B = 0 (a, b read from the southern body).
std::vector<std::string> northern_pole_violations(const SuperconformalMap& north, const SuperconformalMap& south);

/// Recovers the parameters of m, normalized by the sign tie-break; NotInFamily on the first violated clause.
AutomorphismParams aut_validate(const SuperconformalMap& m, int n);
SphereAutomorphism aut_compose(const SphereAutomorphism& t2, const SphereAutomorphism& t1);
SphereAutomorphism aut_inverse(const SphereAutomorphism& t);

/// Element (a, b, c, d, ε) of SL(2, Λ⁰) × GL(1, Λ⁰).
struct GroupElement {
    Supernumber a, b, c, d, eps;
    friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

GroupElement group_identity(int generators);
GroupElement group_multiply(const GroupElement& x, const GroupElement& y);
GroupElement group_inverse(const GroupElement& x);
/// (z, θ⁺, θ⁻) ↦ ((az+b)/(cz+d), θ⁺ε(cz+d)^{n−1}, θ⁻ε⁻¹(cz+d)^{−n−1})
SphereAutomorphism group_action(int n, const GroupElement& alpha);
/// Parameters of group_action(n, α) in the automorphism family (all odd data zero).
AutomorphismParams action_params(int n, const GroupElement& alpha);
bool kernel_check(int n, const GroupElement& alpha, const GroupElement& beta);
/// x lies in K_{n mod 2}: the identity, or (−I, −1) for even n and (−I, 1) for odd n.
bool in_kernel(int n, const GroupElement& x);

/// Odd translation for |n| ≥ 2. coeffs lists (ψ_{|n|+1}, …, ψ₁, ψ₀), highest power first.
SphereAutomorphism odd_translation(int n, const std::vector<Supernumber>& coeffs);
/// Expected coefficient vector (same ordering) of α ∘ odd_translation(coeffs) ∘ α⁻¹.
std::vector<Supernumber> conjugated_translation(int n, const GroupElement& alpha, const std::vector<Supernumber>& coeffs);

/// Normalizes (a, b, c, d) with ad − bc = 1 + s, s a soul, by the binomial series for (1 + s)^{−1/2}.
void normalize_determinant(Supernumber& a, Supernumber& b, Supernumber& c, Supernumber& d);

// Random data for property checks (coefficients supported on the first L−2 generators).
GroupElement random_group_element(Sampler& s, int generators, bool with_souls = true);
AutomorphismParams random_params(Sampler& s, int n, int generators);
std::vector<Supernumber> random_odd_vector(Sampler& s, int length, int generators);

}  // namespace superconf
