#include "superconf/matrix_superalgebra.hpp"

#include <cstdlib>

#include "superconf/errors.hpp"

namespace superconf {

namespace {

using GR = GaussianRational;
using Matrix = std::vector<std::vector<GR>>;

bool odd_index(int i) { return i >= 2; }

std::size_t rank(Matrix rows) {
    std::size_t r = 0;
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c].is_zero()) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[r]);
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            if (rows[i][c].is_zero()) continue;
            GR f = rows[i][c] / rows[r][c];
            for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
        }
        ++r;
    }
    return r;
}

std::vector<GR> flatten(const BlockMatrix& m) {
    std::vector<GR> v;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) v.push_back(m.at(i, j));
    return v;
}

BlockMatrix E(int i, int j, long c = 1) { return BlockMatrix::unit(i, j, GR(c)); }

// Embedding of sl₂ through the displayed correspondence, plus an optional lower-block twin.
struct Sl2Images {
    BlockMatrix raise, cartan, lower;
};

Sl2Images sl2_upper() {
    return {E(1, 2), (E(1, 1) - E(2, 2)) * GR::fraction(1, 2), E(2, 1, -1)};
}

std::string pair_name(const NSElement& a, const NSElement& b) { return "[" + a.to_string() + ", " + b.to_string() + "]"; }

// Image of an NS element under a table: its coordinates in the source basis applied to the images.
std::optional<BlockMatrix> image_of(const std::vector<NSElement>& source, const std::vector<BlockMatrix>& images,
                                    const NSElement& u) {
    auto coords = ns_span_coordinates(source, u);
    if (!coords) return std::nullopt;
    BlockMatrix out;
    for (std::size_t i = 0; i < source.size(); ++i) out = out + images[i] * (*coords)[i];
    return out;
}

void verify_pairs(const std::vector<NSElement>& source, const std::vector<BlockMatrix>& images, HomReport& rep) {
    for (std::size_t i = 0; i < source.size(); ++i) {
        auto sp = source[i].parity();
        rep.verdict.expect(sp && images[i].parity() == sp,
                           "image of " + source[i].to_string() + " has the wrong parity");
    }
    Matrix flat;
    for (const auto& m : images) flat.push_back(flatten(m));
    rep.verdict.expect(rank(flat) == images.size(), "images are linearly dependent");
    for (std::size_t i = 0; i < source.size(); ++i)
        for (std::size_t j = i; j < source.size(); ++j) {
            NSElement br = ns_bracket(source[i], source[j]);
            auto expected = image_of(source, images, br);
            std::string name = pair_name(source[i], source[j]);
            if (!expected) {
                rep.ns_consistent = false;
                rep.verdict.fail(name + " = " + br.to_string() + " leaves the source span");
                continue;
            }
            BlockMatrix got = msa_superbracket(images[i], images[j]);
            if (got == *expected) {
                rep.verdict.pass();
            } else {
                rep.discrepancies.push_back({name, expected->to_string(), got.to_string()});
                rep.verdict.fail(name + ": image of the bracket differs from the matrix bracket");
            }
        }
}

// σ(slot) as a matrix acting on ideal coordinates.
Matrix apply_sigma(const Matrix& s, const Matrix& t) {
    const std::size_t n = s.size();
    Matrix out(n, std::vector<GR>(n, GR(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) out[i][j] += s[i][k] * t[k][j];
    return out;
}

std::vector<GR> coords_or_throw(const std::vector<NSElement>& basis, const NSElement& u, const char* part) {
    if (u.is_zero()) return std::vector<GR>(basis.size(), GR(0));
    auto c = ns_span_coordinates(basis, u);
    if (!c) throw MembershipError(std::string(u.to_string()) + " is not in the " + part);
    return *c;
}

NSElement combine(const std::vector<NSElement>& basis, const std::vector<GR>& c) {
    NSElement out;
    for (std::size_t i = 0; i < basis.size(); ++i) out += basis[i] * c[i];
    return out;
}

}  // namespace

BlockMatrix::BlockMatrix() {
    for (auto& row : m_) row.fill(GR(0));
}

BlockMatrix BlockMatrix::unit(int i, int j, const GaussianRational& c) {
    if (i < 1 || i > 4 || j < 1 || j > 4) throw DimensionError("matrix unit index out of range");
    BlockMatrix m;
    m.m_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = c;
    return m;
}

BlockMatrix BlockMatrix::diag(const GaussianRational& a, const GaussianRational& b, const GaussianRational& c,
                              const GaussianRational& d) {
    return unit(1, 1, a) + unit(2, 2, b) + unit(3, 3, c) + unit(4, 4, d);
}

bool BlockMatrix::is_zero() const {
    for (const auto& row : m_)
        for (const auto& x : row)
            if (!x.is_zero()) return false;
    return true;
}

std::optional<Parity> BlockMatrix::parity() const {
    bool even = false, odd = false;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (!at(i, j).is_zero()) (odd_index(i) == odd_index(j) ? even : odd) = true;
    if (even && odd) return std::nullopt;
    return odd ? Parity::Odd : Parity::Even;
}

GaussianRational BlockMatrix::supertrace() const { return at(0, 0) + at(1, 1) - at(2, 2) - at(3, 3); }

BlockMatrix BlockMatrix::operator+(const BlockMatrix& o) const {
    BlockMatrix r;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) r.m_[i][j] = m_[i][j] + o.m_[i][j];
    return r;
}

BlockMatrix BlockMatrix::operator-(const BlockMatrix& o) const { return *this + o * GR(-1); }

BlockMatrix BlockMatrix::operator*(const BlockMatrix& o) const {
    BlockMatrix r;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            for (std::size_t k = 0; k < 4; ++k) r.m_[i][j] += m_[i][k] * o.m_[k][j];
    return r;
}

BlockMatrix BlockMatrix::operator*(const GaussianRational& c) const {
    BlockMatrix r = *this;
    for (auto& row : r.m_)
        for (auto& x : row) x *= c;
    return r;
}

std::string BlockMatrix::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < 4; ++i) {
        s += i ? "; " : "";
        for (std::size_t j = 0; j < 4; ++j) {
            s += j == 2 ? " | " : (j ? " " : "");
            s += m_[i][j].to_string();
        }
    }
    return s + "]";
}

BlockMatrix msa_superbracket(const BlockMatrix& x, const BlockMatrix& y) {
    auto px = x.parity(), py = y.parity();
    if (!px || !py) throw ParityError("superbracket needs parity-homogeneous matrices");
    GR s(*px == Parity::Odd && *py == Parity::Odd ? -1 : 1);
    return x * y - (y * x) * s;
}

bool in_osp22(const BlockMatrix& m) {
    auto at = [&](int i, int j) { return m.at(i - 1, j - 1); };
    const GR a = at(1, 1), b = at(1, 2), s = at(1, 3), q = at(1, 4), c = at(2, 1), r = -at(2, 3), p = -at(2, 4),
             d = at(3, 3);
    BlockMatrix want(BlockMatrix::Rows{{{a, b, s, q}, {c, -a, -r, -p}, {p, q, d, GR(0)}, {r, s, GR(0), -d}}});
    return want == m;
}

bool in_p22(const BlockMatrix& m) {
    auto at = [&](int i, int j) { return m.at(i - 1, j - 1); };
    const GR a = at(1, 1), b = at(1, 2), p = at(1, 3), q = at(1, 4), c = at(2, 1), r = at(2, 4), s = at(3, 2);
    GR z(0);
    BlockMatrix want(BlockMatrix::Rows{{{a, b, p, q}, {c, -a, q, r}, {z, s, -a, -c}, {-s, z, -b, a}}});
    return want == m;
}

HomTable msa_osp_table() {
    Sl2Images sl = sl2_upper();
    HomTable t;
    t.name = "osp(2|2)";
    t.source = g_n_basis(0);
    t.images = {sl.raise,
                sl.cartan,
                sl.lower,
                E(3, 3) - E(4, 4),
                E(1, 4) + E(3, 2),
                E(2, 4, -1) + E(3, 1),
                E(1, 3) + E(4, 2),
                E(2, 3, -1) + E(4, 1)};
    return t;
}

HomTable msa_p_table(int sign) {
    if (sign != 1 && sign != -1) throw InvalidParams("p(2|2) table sign must be +1 or -1");
    using S = NSBasisSymbol;
    const Odd lone = sign > 0 ? Odd::Plus : Odd::Minus;
    const Odd many = sign > 0 ? Odd::Minus : Odd::Plus;
    std::vector<NSElement> g = g_n_basis(sign);
    HomTable t;
    t.name = sign > 0 ? "gl(1) x p(2|2), n=+1" : "gl(1) x p(2|2), n=-1";
    t.source = {g[0], g[1], g[2], S::G(lone, -1), S::G(many, -1), S::G(many, 1), S::G(many, 3), g[3]};
    // sl₂ block [[a, b], [c, −a]] ↦ diag-block form with lower block [[−a, −c], [−b, a]]
    t.images = {E(1, 2) - E(4, 3),
                (E(1, 1) - E(2, 2) - E(3, 3) + E(4, 4)) * GR::fraction(1, 2),
                E(2, 1, -1) + E(3, 4),
                E(3, 2) - E(4, 1),
                E(1, 3, 2),
                E(1, 4, -1) + E(2, 3, -1),
                E(2, 4, 2),
                (E(3, 3) + E(4, 4)) * GR(sign)};
    return t;
}

SemidirectData msa_gn_table(int n) {
    if (std::abs(n) < 2) throw InvalidParams("the semidirect description needs |n| >= 2");
    std::vector<NSElement> g = g_n_basis(n);
    SemidirectData sd;
    sd.n = n;
    sd.acting.assign(g.begin(), g.begin() + 4);
    sd.ideal.assign(g.begin() + 4, g.end());
    Sl2Images sl = sl2_upper();
    sd.acting_images = {sl.raise, sl.cartan, sl.lower, E(3, 3)};
    const int size = static_cast<int>(sd.ideal.size());
    for (int slot = 0; slot < 4; ++slot) {
        Matrix s(static_cast<std::size_t>(size), std::vector<GR>(static_cast<std::size_t>(size), GR(0)));
        for (int k = 0; k < size; ++k) {
            SigmaEntry e = sigma_n(n, slot, k);
            if (e.target_k >= 0 && e.target_k < size)
                s[static_cast<std::size_t>(e.target_k)][static_cast<std::size_t>(k)] = e.coefficient;
        }
        sd.sigma.push_back(std::move(s));
    }
    return sd;
}

HomReport msa_verify_hom(const HomTable& t) {
    HomReport rep;
    if (t.source.size() != t.images.size()) {
        rep.verdict.fail(t.name + ": table is not total");
        return rep;
    }
    verify_pairs(t.source, t.images, rep);
    return rep;
}

HomReport msa_verify_hom(const SemidirectData& sd) {
    HomReport rep;
    verify_pairs(sd.acting, sd.acting_images, rep);
    const std::size_t size = sd.ideal.size();
    // σ against the NS bracket
    for (std::size_t slot = 0; slot < sd.acting.size(); ++slot)
        for (std::size_t k = 0; k < size; ++k) {
            NSElement br = ns_bracket(sd.acting[slot], sd.ideal[k]);
            std::string name = pair_name(sd.acting[slot], sd.ideal[k]);
            auto c = br.is_zero() ? std::optional<std::vector<GR>>(std::vector<GR>(size, GR(0)))
                                  : ns_span_coordinates(sd.ideal, br);
            if (!c) {
                rep.ns_consistent = false;
                rep.verdict.fail(name + " = " + br.to_string() + " leaves the odd part");
                continue;
            }
            std::vector<GR> table_col;
            for (std::size_t i = 0; i < size; ++i) table_col.push_back(sd.sigma[slot][i][k]);
            if (*c == table_col) {
                rep.verdict.pass();
            } else {
                rep.discrepancies.push_back({name, combine(sd.ideal, table_col).to_string(), br.to_string()});
                rep.verdict.fail(name + ": sigma table differs from the bracket");
            }
        }
    // the odd part is abelian
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = i; j < size; ++j) {
            NSElement br = ns_bracket(sd.ideal[i], sd.ideal[j]);
            if (br.is_zero()) {
                rep.verdict.pass();
            } else {
                rep.ns_consistent = false;
                rep.verdict.fail(pair_name(sd.ideal[i], sd.ideal[j]) + " = " + br.to_string() + " is not zero");
            }
        }
    // σ is a homomorphism into the derivations of the odd part
    for (std::size_t i = 0; i < sd.acting.size(); ++i)
        for (std::size_t j = i + 1; j < sd.acting.size(); ++j) {
            auto c = ns_span_coordinates(sd.acting, ns_bracket(sd.acting[i], sd.acting[j]));
            if (!c) {
                rep.ns_consistent = false;
                rep.verdict.fail(pair_name(sd.acting[i], sd.acting[j]) + " leaves the even part");
                continue;
            }
            Matrix lhs(size, std::vector<GR>(size, GR(0)));
            for (std::size_t l = 0; l < sd.acting.size(); ++l)
                for (std::size_t r = 0; r < size; ++r)
                    for (std::size_t s = 0; s < size; ++s) lhs[r][s] += (*c)[l] * sd.sigma[l][r][s];
            Matrix ab = apply_sigma(sd.sigma[i], sd.sigma[j]), ba = apply_sigma(sd.sigma[j], sd.sigma[i]);
            Matrix rhs = ab;
            for (std::size_t r = 0; r < size; ++r)
                for (std::size_t s = 0; s < size; ++s) rhs[r][s] -= ba[r][s];
            rep.verdict.expect(lhs == rhs, "sigma of " + pair_name(sd.acting[i], sd.acting[j]) +
                                               " is not the commutator of the sigmas");
        }
    return rep;
}

SemidirectElement msa_semidirect_bracket(const SemidirectData& sd, const SemidirectElement& x,
                                         const SemidirectElement& y) {
    std::vector<GR> u = coords_or_throw(sd.acting, x.acting, "acting algebra");
    std::vector<GR> v = coords_or_throw(sd.ideal, x.ideal, "odd ideal");
    std::vector<GR> u2 = coords_or_throw(sd.acting, y.acting, "acting algebra");
    std::vector<GR> v2 = coords_or_throw(sd.ideal, y.ideal, "odd ideal");
    const std::size_t size = sd.ideal.size();
    auto sigma_apply = [&](const std::vector<GR>& a, const std::vector<GR>& w) {
        std::vector<GR> out(size, GR(0));
        for (std::size_t l = 0; l < a.size(); ++l)
            for (std::size_t r = 0; r < size; ++r)
                for (std::size_t s = 0; s < size; ++s) out[r] += a[l] * sd.sigma[l][r][s] * w[s];
        return out;
    };
    // the acting algebra is even, so the sign in front of σ_{u'}(v) is +1
    std::vector<GR> first = sigma_apply(u, v2), second = sigma_apply(u2, v);
    for (std::size_t r = 0; r < size; ++r) first[r] -= second[r];
    NSElement acting = ns_bracket(combine(sd.acting, u), combine(sd.acting, u2));
    return {acting, combine(sd.ideal, first)};
}

}  // namespace superconf
