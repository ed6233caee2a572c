#include "superconf/ns_algebra.hpp"

#include <cstdlib>
#include <set>

#include "superconf/errors.hpp"
#include "superconf/spheres.hpp"

namespace superconf {

namespace {

using Kind = NSBasisSymbol::Kind;
using GR = GaussianRational;

GR half(long num) { return GR::fraction(num, 2); }

bool is_g(Kind k) { return k == Kind::GPlus || k == Kind::GMinus; }

int sign_of_g(Kind k) { return k == Kind::GPlus ? 1 : -1; }

NSElement g_symbol(Kind k, int twice_r) { return NSBasisSymbol{k, twice_r}; }

// Structure constants on an ordered pair of symbols.
NSElement bracket_symbols(const NSBasisSymbol& a, const NSBasisSymbol& b) {
    const NSBasisSymbol d = NSBasisSymbol::central();
    if (a.kind == Kind::Central || b.kind == Kind::Central) return {};
    if (a.kind == Kind::L && b.kind == Kind::L) {
        const long m = a.index, n = b.index;
        NSElement out;
        if (m != n) out += NSElement(NSBasisSymbol::L(a.index + b.index), GR(m - n));
        if (m + n == 0 && m * m * m != m) out += NSElement(d, GR::fraction(m * m * m - m, 12));
        return out;
    }
    if (a.kind == Kind::J && b.kind == Kind::J) {
        if (a.index + b.index != 0 || a.index == 0) return {};
        return NSElement(d, GR::fraction(a.index, 3));
    }
    if (a.kind == Kind::L && b.kind == Kind::J) {
        if (b.index == 0) return {};
        return NSElement(NSBasisSymbol::J(a.index + b.index), GR(-b.index));
    }
    if (a.kind == Kind::J && b.kind == Kind::L) return -bracket_symbols(b, a);
    if (a.kind == Kind::L && is_g(b.kind)) {
        // (m/2 − r) G_{m+r}
        GR c = half(a.index) - half(b.index);
        if (c.is_zero()) return {};
        return g_symbol(b.kind, 2 * a.index + b.index) * c;
    }
    if (a.kind == Kind::J && is_g(b.kind)) return g_symbol(b.kind, 2 * a.index + b.index) * GR(sign_of_g(b.kind));
    if (is_g(a.kind) && !is_g(b.kind)) return -bracket_symbols(b, a);
    if (a.kind == b.kind) return {};
    // {G+_r, G-_s} = 2L_{r+s} + (r − s)J_{r+s} + (r² − ¼)/3 δ d
    const NSBasisSymbol& gp = a.kind == Kind::GPlus ? a : b;
    const NSBasisSymbol& gm = a.kind == Kind::GPlus ? b : a;
    const int total = (gp.index + gm.index) / 2;
    NSElement out(NSBasisSymbol::L(total), GR(2));
    GR diff = half(gp.index - gm.index);
    if (!diff.is_zero()) out += NSElement(NSBasisSymbol::J(total), diff);
    if (total == 0) {
        GR r = half(gp.index);
        GR c = (r * r - GR::fraction(1, 4)) * GR::fraction(1, 3);
        if (!c.is_zero()) out += NSElement(d, c);
    }
    return out;
}

Parity parity_of(const NSElement& u) {
    auto p = u.parity();
    if (!p) throw ParityError("element is not parity-homogeneous");
    return *p;
}

int graded_sign(Parity a, Parity b) { return a == Parity::Odd && b == Parity::Odd ? -1 : 1; }

SuperPolynomial X(int L, int e) { return SuperPolynomial::power(L, 2, Supernumber(L, 1), e); }
SuperPolynomial phi(int L, Odd w) { return SuperPolynomial::theta(L, 2, w); }

GR factorial(int k) {
    GR f(1);
    for (int i = 2; i <= k; ++i) f *= GR(i);
    return f;
}

GR power(const GR& base, int k) {
    GR out(1);
    for (int i = 0; i < k; ++i) out *= base;
    return out;
}

// Generalized binomial coefficient C(a, k) for integer a.
GR binomial(long a, int k) {
    GR out(1);
    for (int i = 0; i < k; ++i) out = out * GR(a - i) / GR(i + 1);
    return out;
}

RationalSuperfunction as_rsf(const SuperPolynomial& p) { return RationalSuperfunction(p); }

FullMap to_full(const CoordinateTriple& t) { return {as_rsf(t.x), as_rsf(t.phi_plus), as_rsf(t.phi_minus)}; }

}  // namespace

// ---------------------------------------------------------------- symbols

NSBasisSymbol NSBasisSymbol::G(Odd sign, int twice_r) {
    if (twice_r % 2 == 0) throw InvalidParams("G modes are half-integers; twice the mode must be odd");
    return {sign == Odd::Plus ? Kind::GPlus : Kind::GMinus, twice_r};
}

GaussianRational NSBasisSymbol::mode() const { return is_g(kind) ? half(index) : GR(index); }

std::string NSBasisSymbol::to_string() const {
    switch (kind) {
        case Kind::L: return "L(" + std::to_string(index) + ")";
        case Kind::J: return "J(" + std::to_string(index) + ")";
        case Kind::GPlus: return "G+(" + std::to_string(index) + "/2)";
        case Kind::GMinus: return "G-(" + std::to_string(index) + "/2)";
        case Kind::Central: return "d";
    }
    return "?";
}

NSBasisSymbol NSBasisSymbol::parse(const std::string& text) {
    if (text == "d") return central();
    auto open = text.find('('), close = text.rfind(')');
    if (open == std::string::npos || close != text.size() - 1 || close <= open + 1)
        throw ParseError("bad basis symbol: " + text);
    std::string head = text.substr(0, open), body = text.substr(open + 1, close - open - 1);
    try {
        std::size_t used = 0;
        if (head == "L" || head == "J") {
            int m = std::stoi(body, &used);
            if (used != body.size()) throw ParseError("bad mode in " + text);
            return head == "L" ? L(m) : J(m);
        }
        if (head == "G+" || head == "G-") {
            if (body.size() < 3 || body.substr(body.size() - 2) != "/2") throw ParseError("G modes are written k/2: " + text);
            std::string n = body.substr(0, body.size() - 2);
            int twice = std::stoi(n, &used);
            if (used != n.size() || twice % 2 == 0) throw ParseError("bad G mode in " + text);
            return G(head == "G+" ? Odd::Plus : Odd::Minus, twice);
        }
    } catch (const std::logic_error&) {
        throw ParseError("bad basis symbol: " + text);
    }
    throw ParseError("bad basis symbol: " + text);
}

// ---------------------------------------------------------------- elements

NSElement::NSElement(const NSBasisSymbol& s, const GaussianRational& c) { add(s, c); }

NSElement NSElement::from_terms(const Terms& terms) {
    NSElement e;
    for (const auto& [s, c] : terms) e.add(s, c);
    return e;
}

void NSElement::add(const NSBasisSymbol& s, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(s, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

GaussianRational NSElement::coefficient(const NSBasisSymbol& s) const {
    auto it = terms_.find(s);
    return it == terms_.end() ? GR(0) : it->second;
}

std::optional<Parity> NSElement::parity() const {
    if (terms_.empty()) return Parity::Even;
    Parity p = terms_.begin()->first.parity();
    for (const auto& [s, c] : terms_)
        if (s.parity() != p) return std::nullopt;
    return p;
}

NSElement NSElement::without_central() const {
    NSElement e = *this;
    e.terms_.erase(NSBasisSymbol::central());
    return e;
}

NSElement& NSElement::operator+=(const NSElement& o) {
    for (const auto& [s, c] : o.terms_) add(s, c);
    return *this;
}

NSElement& NSElement::operator-=(const NSElement& o) {
    for (const auto& [s, c] : o.terms_) add(s, -c);
    return *this;
}

NSElement& NSElement::operator*=(const GaussianRational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [s, v] : terms_) v *= c;
    return *this;
}

std::string NSElement::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [s, c] : terms_) {
        if (!out.empty()) out += " + ";
        if (!c.is_one()) out += c.to_string() + "*";
        out += s.to_string();
    }
    return out;
}

NSElement ns_bracket(const NSBasisSymbol& a, const NSBasisSymbol& b) { return bracket_symbols(a, b); }

NSElement ns_bracket(const NSElement& u, const NSElement& v) {
    NSElement out;
    for (const auto& [a, ca] : u.terms())
        for (const auto& [b, cb] : v.terms()) out += bracket_symbols(a, b) * (ca * cb);
    return out;
}

std::vector<NSBasisSymbol> ns_band_basis(int band) {
    std::vector<NSBasisSymbol> out;
    for (int m = -band; m <= band; ++m) out.push_back(NSBasisSymbol::L(m));
    for (int m = -band; m <= band; ++m) out.push_back(NSBasisSymbol::J(m));
    for (Odd s : {Odd::Plus, Odd::Minus})
        for (int t = -2 * band + 1; t <= 2 * band - 1; t += 2) out.push_back(NSBasisSymbol::G(s, t));
    out.push_back(NSBasisSymbol::central());
    return out;
}

NSElement ns_jacobi_sum(const NSElement& x, const NSElement& y, const NSElement& z) {
    Parity px = parity_of(x), py = parity_of(y), pz = parity_of(z);
    return ns_bracket(x, ns_bracket(y, z)) * GR(graded_sign(px, pz)) +
           ns_bracket(y, ns_bracket(z, x)) * GR(graded_sign(py, px)) +
           ns_bracket(z, ns_bracket(x, y)) * GR(graded_sign(pz, py));
}

Verdict ns_jacobi_check(int band) {
    Verdict v;
    auto basis = ns_band_basis(band);
    for (const auto& a : basis)
        for (const auto& b : basis)
            for (const auto& c : basis) {
                NSElement s = ns_jacobi_sum(a, b, c);
                v.expect(s.is_zero(), "(" + a.to_string() + ", " + b.to_string() + ", " + c.to_string() + ") -> " +
                                          s.to_string());
            }
    return v;
}

// ---------------------------------------------------------------- derivations

DerivationField DerivationField::zero(int L, Parity p) {
    return {p, SuperPolynomial(L, 2), SuperPolynomial(L, 2), SuperPolynomial(L, 2)};
}

SuperPolynomial DerivationField::apply(const SuperPolynomial& h) const {
    return dx * h.derivative_z() + dphi_plus * h.derivative_theta(Odd::Plus) +
           dphi_minus * h.derivative_theta(Odd::Minus);
}

DerivationField DerivationField::operator+(const DerivationField& o) const {
    if (o.parity != parity && !(o.dx.is_zero() && o.dphi_plus.is_zero() && o.dphi_minus.is_zero()))
        throw ParityError("sum of derivations of different parity");
    return {parity, dx + o.dx, dphi_plus + o.dphi_plus, dphi_minus + o.dphi_minus};
}

DerivationField DerivationField::operator*(const GaussianRational& c) const {
    return {parity, dx * c, dphi_plus * c, dphi_minus * c};
}

DerivationField DerivationField::scaled_by(const Supernumber& c) const {
    auto p = c.parity();
    if (!p) throw ParityError("scaling constant must be homogeneous");
    return {(parity + *p), c * dx, c * dphi_plus, c * dphi_minus};
}

DerivationField derivation_bracket(const DerivationField& x, const DerivationField& y) {
    GR s(graded_sign(x.parity, y.parity));
    auto on = [&](const SuperPolynomial& xg, const SuperPolynomial& yg) { return x.apply(yg) - y.apply(xg) * s; };
    return {(x.parity + y.parity), on(x.dx, y.dx), on(x.dphi_plus, y.dphi_plus),
            on(x.dphi_minus, y.dphi_minus)};
}

DerivationField ns_rep(const NSBasisSymbol& s, int L) {
    DerivationField f = DerivationField::zero(L, s.parity());
    SuperPolynomial pp = phi(L, Odd::Plus), pm = phi(L, Odd::Minus);
    switch (s.kind) {
        case Kind::L: {
            const int n = s.index;
            f.dx = -X(L, n + 1);
            f.dphi_plus = X(L, n) * pp * (-half(n + 1));
            f.dphi_minus = X(L, n) * pm * (-half(n + 1));
            break;
        }
        case Kind::J:
            f.dphi_plus = -(X(L, s.index) * pp);
            f.dphi_minus = X(L, s.index) * pm;
            break;
        case Kind::GPlus:
        case Kind::GMinus: {
            // G±_{n−½} = −(xⁿ(∂φ± − φ∓∂x) ± n x^{n−1} φ⁺φ⁻ ∂φ±)
            const int n = (s.index + 1) / 2;
            const bool plus = s.kind == Kind::GPlus;
            SuperPolynomial other = plus ? pm : pp;
            SuperPolynomial own = -X(L, n) - X(L, n - 1) * pp * pm * GR(plus ? n : -n);
            f.dx = X(L, n) * other;
            (plus ? f.dphi_plus : f.dphi_minus) = own;
            break;
        }
        case Kind::Central: break;
    }
    return f;
}

DerivationField ns_rep(const NSElement& u, int L) {
    auto p = u.without_central().parity();
    if (!p) throw ParityError("element is not parity-homogeneous");
    DerivationField out = DerivationField::zero(L, *p);
    for (const auto& [s, c] : u.terms())
        if (s.kind != Kind::Central) out = out + ns_rep(s, L) * c;
    return out;
}

Verdict ns_rep_bracket_check(const NSBasisSymbol& a, const NSBasisSymbol& b) {
    Verdict v;
    DerivationField lhs = ns_rep(ns_bracket(a, b).without_central());
    DerivationField rhs = derivation_bracket(ns_rep(a), ns_rep(b));
    v.expect(lhs == rhs, "rep of [" + a.to_string() + ", " + b.to_string() + "] differs from the bracket of reps");
    return v;
}

Verdict ns_rep_check(int band) {
    Verdict v;
    auto basis = ns_band_basis(band);
    for (const auto& a : basis)
        for (const auto& b : basis) v.merge(ns_rep_bracket_check(a, b));
    return v;
}

// ---------------------------------------------------------------- subalgebras

std::optional<std::vector<GaussianRational>> ns_span_coordinates(const std::vector<NSElement>& basis,
                                                                 const NSElement& target) {
    std::set<NSBasisSymbol> symbols;
    for (const auto& b : basis)
        for (const auto& [s, c] : b.terms()) symbols.insert(s);
    for (const auto& [s, c] : target.terms()) symbols.insert(s);
    const std::size_t cols = basis.size();
    std::vector<std::vector<GR>> rows;
    for (const auto& s : symbols) {
        std::vector<GR> row;
        for (const auto& b : basis) row.push_back(b.coefficient(s));
        row.push_back(target.coefficient(s));
        rows.push_back(std::move(row));
    }
    // Gauss-Jordan elimination on the augmented matrix.
    std::vector<int> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c].is_zero()) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[r]);
        GR inv = rows[r][c].inverse();
        for (auto& x : rows[r]) x *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c].is_zero()) continue;
            GR f = rows[i][c];
            for (std::size_t j = c; j <= cols; ++j) rows[i][j] -= f * rows[r][j];
        }
        pivot_col.push_back(static_cast<int>(c));
        ++r;
    }
    for (std::size_t i = r; i < rows.size(); ++i)
        if (!rows[i][cols].is_zero()) return std::nullopt;
    std::vector<GR> out(cols, GR(0));
    for (std::size_t i = 0; i < pivot_col.size(); ++i) out[static_cast<std::size_t>(pivot_col[i])] = rows[i][cols];
    return out;
}

std::vector<NSElement> g_n_basis(int n) {
    using S = NSBasisSymbol;
    std::vector<NSElement> out{S::L(-1), NSElement(S::L(0)) - NSElement(S::J(0), half(n)),
                               NSElement(S::L(1)) - NSElement(S::J(1), GR(n)), S::J(0)};
    auto g = [](Odd s, int twice) { return NSElement(S::G(s, twice)); };
    if (n == 0) {
        for (Odd s : {Odd::Plus, Odd::Minus}) {
            out.push_back(g(s, -1));
            out.push_back(g(s, 1));
        }
    } else if (n == 1 || n == -1) {
        Odd lone = n == 1 ? Odd::Plus : Odd::Minus;
        auto push = [&](Odd s) {
            if (s == lone) out.push_back(g(s, -1));
            else
                for (int t : {-1, 1, 3}) out.push_back(g(s, t));
        };
        push(Odd::Plus);
        push(Odd::Minus);
    } else {
        Odd s = n >= 2 ? Odd::Minus : Odd::Plus;
        for (int k = 0; k <= std::abs(n) + 1; ++k) out.push_back(g(s, 2 * k - 1));
    }
    return out;
}

std::pair<int, int> g_n_expected_dimensions(int n) { return {4, std::abs(n) <= 2 ? 4 : std::abs(n) + 2}; }

SigmaEntry sigma_n(int n, int even_slot, int k) {
    if (std::abs(n) < 2) throw InvalidParams("the sigma table is defined for |n| >= 2");
    const int m = std::abs(n);
    switch (even_slot) {
        case 0: return {GR(-k), k - 1};
        case 1: return {GR(-k) + half(m + 1), k};
        case 2: return {GR(-k + m + 1), k + 1};
        case 3: return {GR(n >= 2 ? -1 : 1), k};
        default: throw InvalidParams("even slot must be 0..3");
    }
}

ClosureReport g_n_closure_check(int n) {
    ClosureReport rep;
    auto basis = g_n_basis(n);
    const int size = static_cast<int>(basis.size());
    auto [ev, od] = g_n_expected_dimensions(n);
    rep.verdict.expect(size == ev + od, "dimension of g_" + std::to_string(n) + " is " + std::to_string(size));
    int even = 0;
    for (const auto& b : basis)
        if (b.parity() == Parity::Even) ++even;
    rep.verdict.expect(even == ev, "even dimension of g_" + std::to_string(n) + " is " + std::to_string(even));
    for (int i = 0; i < size; ++i)
        for (int j = i; j < size; ++j) {
            NSElement br = ns_bracket(basis[static_cast<std::size_t>(i)], basis[static_cast<std::size_t>(j)]);
            auto coords = ns_span_coordinates(basis, br);
            if (coords) {
                rep.table[{i, j}] = *coords;
                rep.verdict.pass();
            } else {
                rep.verdict.fail("[" + basis[static_cast<std::size_t>(i)].to_string() + ", " +
                                 basis[static_cast<std::size_t>(j)].to_string() + "] = " + br.to_string() +
                                 " leaves g_" + std::to_string(n));
            }
        }
    if (std::abs(n) >= 2) {
        const int top = std::abs(n) + 1;
        for (int slot = 0; slot < 4; ++slot)
            for (int k = 0; k <= top; ++k) {
                SigmaEntry e = sigma_n(n, slot, k);
                NSElement expected;
                if (e.target_k >= 0 && e.target_k <= top) expected = basis[static_cast<std::size_t>(4 + e.target_k)] * e.coefficient;
                else if (!e.coefficient.is_zero())
                    expected = NSElement(NSBasisSymbol::G(n >= 2 ? Odd::Minus : Odd::Plus, 2 * e.target_k - 1), e.coefficient);
                NSElement got = ns_bracket(basis[static_cast<std::size_t>(slot)], basis[static_cast<std::size_t>(4 + k)]);
                rep.verdict.expect(got == expected, "sigma table entry (" + basis[static_cast<std::size_t>(slot)].to_string() +
                                                        ", k=" + std::to_string(k) + "): bracket gives " + got.to_string() +
                                                        ", table gives " + expected.to_string());
            }
    }
    return rep;
}

// ---------------------------------------------------------------- flows

CoordinateTriple CoordinateTriple::identity(int L) { return {X(L, 1), phi(L, Odd::Plus), phi(L, Odd::Minus)}; }

CoordinateTriple ns_flow(const NSElement& x, const Supernumber& param) {
    const int L = param.generators();
    if (param == Supernumber(L)) return CoordinateTriple::identity(L);
    auto px = x.without_central().parity();
    auto pp = param.parity();
    if (!px || !pp) throw ParityError("flow needs homogeneous generator and parameter");
    if (*px != *pp) throw ParityError("flow parameter parity must match the generator");
    if (!param.body().is_zero()) throw InvalidParams("exact flows need a nilpotent parameter; use the formal flow");
    DerivationField y = ns_rep(x, L).scaled_by(-param);
    CoordinateTriple out = CoordinateTriple::identity(L);
    CoordinateTriple term = out;
    for (int k = 1;; ++k) {
        term = {y.apply(term.x) * GR(k).inverse(), y.apply(term.phi_plus) * GR(k).inverse(),
                y.apply(term.phi_minus) * GR(k).inverse()};
        if (term.x.is_zero() && term.phi_plus.is_zero() && term.phi_minus.is_zero()) break;
        if (k > 4 * kMaxGenerators + 8) throw Error("flow series failed to terminate");
        out = {out.x + term.x, out.phi_plus + term.phi_plus, out.phi_minus + term.phi_minus};
    }
    return out;
}

std::vector<CoordinateTriple> ns_flow_formal(const NSElement& x, int order, int L) {
    auto px = x.without_central().parity();
    if (px != Parity::Even) throw ParityError("formal flows need an even generator");
    DerivationField y = ns_rep(x, L) * GR(-1);
    std::vector<CoordinateTriple> out{CoordinateTriple::identity(L)};
    for (int k = 1; k <= order; ++k) {
        const CoordinateTriple& prev = out.back();
        GR inv = GR(k).inverse();
        out.push_back({y.apply(prev.x) * inv, y.apply(prev.phi_plus) * inv, y.apply(prev.phi_minus) * inv});
    }
    return out;
}

std::vector<CoordinateTriple> ns_closed_form_series(const std::string& which, int n, int order, int L) {
    SuperPolynomial pp = phi(L, Odd::Plus), pm = phi(L, Odd::Minus), zero(L, 2);
    std::vector<CoordinateTriple> out;
    for (int k = 0; k <= order; ++k) {
        GR kf = factorial(k).inverse();
        if (which == "L-1") {
            out.push_back(k == 0 ? CoordinateTriple::identity(L)
                                 : CoordinateTriple{k == 1 ? X(L, 0) : zero, zero, zero});
        } else if (which == "L0") {
            GR w = power(half(1), k) * kf;
            out.push_back({X(L, 1) * kf, pp * w, pm * w});
        } else if (which == "J0") {
            out.push_back({k == 0 ? X(L, 1) : zero, pp * kf, pm * (power(GR(-1), k) * kf)});
        } else if (which == "L1-nJ1") {
            GR sgn = power(GR(-1), k);
            out.push_back({X(L, k + 1), X(L, k) * pp * (binomial(n - 1, k) * sgn),
                           X(L, k) * pm * (binomial(-n - 1, k) * sgn)});
        } else if (which == "L0-n/2J0") {
            out.push_back({X(L, 1) * kf, pp * (power(half(1 - n), k) * kf), pm * (power(half(1 + n), k) * kf)});
        } else {
            throw InvalidParams("unknown closed-form flow: " + which);
        }
    }
    return out;
}

CoordinateTriple ns_closed_form_odd(Odd sign, int k, const Supernumber& xi) {
    const int L = xi.generators();
    SuperPolynomial pp = phi(L, Odd::Plus), pm = phi(L, Odd::Minus);
    SuperPolynomial xik = SuperPolynomial::power(L, 2, xi, k);
    SuperPolynomial tail = k == 0 ? SuperPolynomial(L, 2) : pp * pm * SuperPolynomial::power(L, 2, xi, k - 1) * GR(k);
    if (sign == Odd::Plus) return {X(L, 1) + pm * xik, xik + pp + tail, pm};
    return {X(L, 1) + pp * xik, pp, xik + pm - tail};
}

Verdict ns_flow_vs_group(int n, const Supernumber& y, const Supernumber& xi) {
    using S = NSBasisSymbol;
    const int L = y.generators();
    Verdict v;
    Supernumber one(L, 1), zero(L);
    Supernumber a = (y * half(1)).exp_soul(), d = (y * half(-1)).exp_soul();
    auto compare = [&](const std::string& what, const NSElement& gen, const Supernumber& param,
                       const SphereAutomorphism& target) {
        FullMap flow = to_full(ns_flow(gen, param));
        v.expect(flow == sc_expand(target.southern), what + " flow differs from the group action for n = " + std::to_string(n));
    };
    compare("L(-1)", S::L(-1), y, group_action(n, {one, y, zero, one, one}));
    compare("L(0)", S::L(0), y, group_action(n, {a, zero, zero, d, (y * half(n)).exp_soul()}));
    compare("L(0)-(n/2)J(0)", NSElement(S::L(0)) - NSElement(S::J(0), half(n)), y, group_action(n, {a, zero, zero, d, one}));
    compare("J(0)", S::J(0), y, group_action(n, {one, zero, zero, one, y.exp_soul()}));
    compare("L(1)-nJ(1)", NSElement(S::L(1)) - NSElement(S::J(1), GR(n)), y, group_action(n, {one, zero, -y, one, one}));

    // Every basis flow of 𝔤ₙ is an automorphism of the sphere.
    for (const auto& b : g_n_basis(n)) {
        Supernumber p = b.parity() == Parity::Odd ? xi : y;
        try {
            SuperconformalMap m = sc_extract(to_full(ns_flow(b, p)));
            aut_validate(m, n);
            v.pass();
        } catch (const Error& e) {
            v.fail("flow of " + b.to_string() + " is not an automorphism for n = " + std::to_string(n) + ": " + e.what());
        }
    }
    if (std::abs(n) >= 2) {
        const int len = std::abs(n) + 2;
        const Odd s = n >= 2 ? Odd::Minus : Odd::Plus;
        for (int k = 0; k < len; ++k) {
            std::vector<Supernumber> coeffs(static_cast<std::size_t>(len), zero);
            coeffs[static_cast<std::size_t>(len - 1 - k)] = xi;
            compare("G(k=" + std::to_string(k) + ")", S::G(s, 2 * k - 1), xi, odd_translation(n, coeffs));
        }
    }
    return v;
}

}  // namespace superconf
