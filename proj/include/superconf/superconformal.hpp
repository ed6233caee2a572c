#pragma once

#include <string>
#include <vector>

#include "superconf/random.hpp"
#include "superconf/superfield.hpp"

namespace superconf {

/// Full coordinate map (z, θ⁺, θ⁻) ↦ (z̃, θ̃⁺, θ̃⁻) as three (1,2)-superfunctions.
struct FullMap {
    RationalSuperfunction z;
    RationalSuperfunction theta_plus;
    RationalSuperfunction theta_minus;

    static FullMap identity(int generators);
    int generators() const { return z.generators(); }
    friend bool operator==(const FullMap&, const FullMap&) = default;
};

/// Component data (f, g⁺, g⁻, ψ⁺, ψ⁻) of an N=2 superconformal map. Each component is a θ-free
/// function of z, stored over two odd variables so that it combines directly with θ⁺, θ⁻.
struct SuperconformalMap {
    RationalSuperfunction f;
    RationalSuperfunction g_plus;
    RationalSuperfunction g_minus;
    RationalSuperfunction psi_plus;
    RationalSuperfunction psi_minus;

    static SuperconformalMap identity(int generators);
    /// Möbius body map (az+b)/(cz+d) with g± = (cz+d)^{-1} and ψ± = 0 (requires ad−bc = 1).
    static SuperconformalMap mobius(const Supernumber& a, const Supernumber& b, const Supernumber& c,
                                    const Supernumber& d);
    int generators() const { return f.generators(); }
    SuperconformalMap extend(int generators) const;
    friend bool operator==(const SuperconformalMap&, const SuperconformalMap&) = default;
};

/// Outcome of sc_check: which clauses failed, plus parity observations that do not affect validity.
struct SuperconformalDiagnosis {
    std::vector<std::string> failures;
    std::vector<std::string> notes;
    bool ok() const { return failures.empty(); }
    explicit operator bool() const { return ok(); }
    std::string summary() const;
};

/// N=1 superanalytic map (z, θ) ↦ (f₁ + θξ, ψ + θg); components are θ-free over one odd variable.
struct N1SuperanalyticMap {
    RationalSuperfunction f1;
    RationalSuperfunction g;
    RationalSuperfunction xi;
    RationalSuperfunction psi;

    int generators() const { return f1.generators(); }
    /// (f₁ + θξ, ψ + θg)
    std::pair<RationalSuperfunction, RationalSuperfunction> expand() const;
    friend bool operator==(const N1SuperanalyticMap&, const N1SuperanalyticMap&) = default;
};

SuperconformalDiagnosis sc_check(const SuperconformalMap& m);
FullMap sc_expand(const SuperconformalMap& m);
SuperconformalMap sc_extract(const FullMap& full);
/// m2 ∘ m1
SuperconformalMap sc_compose(const SuperconformalMap& m2, const SuperconformalMap& m1);
SuperconformalMap sc_invert(const SuperconformalMap& m);
N1SuperanalyticMap sc_F1(const SuperconformalMap& m);
SuperconformalMap sc_F2(const N1SuperanalyticMap& h);

/// Substitute the full map `inner` into every component of `outer` (outer ∘ inner).
FullMap compose_full(const FullMap& outer, const FullMap& inner);
/// Re-home a θ-free function of z in the two-odd-variable setting.
RationalSuperfunction as_component(const RationalSuperfunction& f);

/// Random polynomial superconformal map: f, g⁺, ψ± drawn at random (coefficients in Λ_{L−2}),
/// g⁻ solved from the constraint. The body of f is affine so the map is invertible.
SuperconformalMap random_superconformal(Sampler& s, int generators);

}  // namespace superconf
