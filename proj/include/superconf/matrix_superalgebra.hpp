#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "superconf/ns_algebra.hpp"

namespace superconf {

/// Element of gl(2|2): rows and columns 0, 1 are even, 2, 3 odd. Diagonal blocks are even,
/// off-diagonal blocks odd.
class BlockMatrix {
public:
    using Rows = std::array<std::array<GaussianRational, 4>, 4>;

    BlockMatrix();
    explicit BlockMatrix(const Rows& rows) : m_(rows) {}
    /// Matrix unit E_{ij} with 1-based indices, matching the usual display.
    static BlockMatrix unit(int i, int j, const GaussianRational& c = GaussianRational(1));
    /// diag(a, b, c, d)
    static BlockMatrix diag(const GaussianRational& a, const GaussianRational& b, const GaussianRational& c,
                            const GaussianRational& d);

    const GaussianRational& at(int i, int j) const { return m_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
    bool is_zero() const;
    /// Parity if the support lies in blocks of one class (the zero matrix counts as even).
    std::optional<Parity> parity() const;
    /// tr(upper-left) − tr(lower-right)
    GaussianRational supertrace() const;

    BlockMatrix operator+(const BlockMatrix& o) const;
    BlockMatrix operator-(const BlockMatrix& o) const;
    BlockMatrix operator*(const BlockMatrix& o) const;
    BlockMatrix operator*(const GaussianRational& c) const;
    friend bool operator==(const BlockMatrix&, const BlockMatrix&) = default;

    std::string to_string() const;

private:
    Rows m_;
};

/// XY − (−1)^{η(X)η(Y)} YX; ParityError for non-homogeneous inputs.
BlockMatrix msa_superbracket(const BlockMatrix& x, const BlockMatrix& y);

/// Membership in the displayed families of gl(2|2).
bool in_osp22(const BlockMatrix& m);
bool in_p22(const BlockMatrix& m);

/// Linear map from an NS subalgebra (given by a basis) to gl(2|2).
struct HomTable {
    std::string name;
    std::vector<NSElement> source;
    std::vector<BlockMatrix> images;
};

/// 𝔤₀ → osp(2|2).
HomTable msa_osp_table();
/// 𝔤_{±1} → gl(1) ⋉ p(2|2), for sign = ±1; the last entry is J₀.
HomTable msa_p_table(int sign);

/// (sl₂ ⊕ gl₁) acting on the abelian odd part of 𝔤ₙ, |n| ≥ 2.
struct SemidirectData {
    int n = 0;
    std::vector<NSElement> acting;            // L₋₁, L₀ − (n/2)J₀, L₁ − nJ₁, J₀
    std::vector<BlockMatrix> acting_images;   // sl₂ in the upper-left block, J₀ ↦ E₃₃
    std::vector<NSElement> ideal;             // G∓_{k−½}, k = 0..|n|+1
    /// sigma[slot][i][k]: coefficient of ideal[i] in σ(acting[slot])(ideal[k]).
    std::vector<std::vector<std::vector<GaussianRational>>> sigma;
};
SemidirectData msa_gn_table(int n);

struct Discrepancy {
    std::string pair;
    std::string expected;
    std::string got;
};

struct HomReport {
    Verdict verdict;
    std::vector<Discrepancy> discrepancies;
    /// False when an NS bracket of two source elements leaves the source span.
    bool ns_consistent = true;
};

HomReport msa_verify_hom(const HomTable& t);
HomReport msa_verify_hom(const SemidirectData& sd);

/// u + v with u in the acting algebra and v in the ideal.
struct SemidirectElement {
    NSElement acting;
    NSElement ideal;
    friend bool operator==(const SemidirectElement&, const SemidirectElement&) = default;
};

/// [u+v, u'+v'] = [u,u'] + σ_u(v') − (−1)^{η(v)η(u')} σ_{u'}(v) + [v,v']; MembershipError when a
/// component lies outside its declared part.
SemidirectElement msa_semidirect_bracket(const SemidirectData& sd, const SemidirectElement& x,
                                         const SemidirectElement& y);

}  // namespace superconf
