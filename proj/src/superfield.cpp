#include "superconf/superfield.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <set>

#include "superconf/errors.hpp"
#include "text_format.hpp"

namespace superconf {

namespace {

void check_odd_count(int odd_count) {
    if (odd_count < 0 || odd_count > 2) throw DimensionError("odd variable count must be 0, 1 or 2");
}

int highest_zeta_label(Mask combined) {
    Mask z = combined_to_zeta(combined);
    return z ? 32 - std::countl_zero(z) : 0;
}

void check_compatible(const SuperPolynomial& a, const SuperPolynomial& b, const char* where) {
    check_same_generators(a.generators(), b.generators(), where);
    if (a.odd_count() != b.odd_count())
        throw DimensionError(std::string(where) + ": odd variable counts differ");
}

// Horner evaluation of a Laurent polynomial at an even supernumber.
Supernumber eval_poly(const Poly& p, const Supernumber& z) {
    Supernumber acc(z.generators());
    if (p.is_zero()) return acc;
    const auto& c = p.dense();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + Supernumber(z.generators(), *it);
    if (p.low() > 0) {
        acc = acc * z.pow(static_cast<unsigned>(p.low()));
    } else if (p.low() < 0) {
        if (z.body().is_zero()) throw PoleAtPoint("negative power of z at a point with zero body");
        acc = acc * z.inverse().pow(static_cast<unsigned>(-p.low()));
    }
    return acc;
}

}  // namespace

// ---------------------------------------------------------------- SuperPolynomial

SuperPolynomial::SuperPolynomial(int generators, int odd_count) : generators_(generators), odd_count_(odd_count) {
    if (generators < 0 || generators > kMaxGenerators) throw DimensionError("generator count out of range");
    check_odd_count(odd_count);
}

void SuperPolynomial::add(Mask m, const Poly& p) {
    if (p.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, p);
    if (!inserted) {
        it->second += p;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SuperPolynomial SuperPolynomial::constant(int generators, int odd_count, const Supernumber& c) {
    return power(generators, odd_count, c, 0);
}

SuperPolynomial SuperPolynomial::scalar(int generators, int odd_count, const GaussianRational& c) {
    SuperPolynomial s(generators, odd_count);
    s.add(0, Poly(c));
    return s;
}

SuperPolynomial SuperPolynomial::power(int generators, int odd_count, const Supernumber& c, int exponent) {
    check_same_generators(generators, c.generators(), "SuperPolynomial::power");
    SuperPolynomial s(generators, odd_count);
    for (const auto& [m, v] : c.terms()) s.add(zeta_to_combined(m), Poly::monomial(v, exponent));
    return s;
}

SuperPolynomial SuperPolynomial::z(int generators, int odd_count) {
    SuperPolynomial s(generators, odd_count);
    s.add(0, Poly::monomial(GaussianRational(1), 1));
    return s;
}

SuperPolynomial SuperPolynomial::theta(int generators, int odd_count, Odd which) {
    if (static_cast<int>(which) >= odd_count) throw DimensionError("odd variable not present");
    SuperPolynomial s(generators, odd_count);
    s.add(theta_bit(which), Poly(GaussianRational(1)));
    return s;
}

SuperPolynomial SuperPolynomial::from_terms(int generators, int odd_count, const Terms& terms) {
    SuperPolynomial s(generators, odd_count);
    for (const auto& [m, p] : terms) {
        if (highest_zeta_label(m) > generators) throw DimensionError("term exceeds generator count");
        if ((m & kThetaBits) >> odd_count) throw DimensionError("term uses an absent odd variable");
        s.add(m, p);
    }
    return s;
}

Supernumber SuperPolynomial::coefficient(int exponent, Mask theta_mask) const {
    Supernumber::Terms out;
    for (const auto& [m, p] : terms_)
        if ((m & kThetaBits) == theta_mask) {
            GaussianRational c = p.coeff(exponent);
            if (!c.is_zero()) out.emplace(combined_to_zeta(m), c);
        }
    return Supernumber::from_terms(generators_, out);
}

SuperPolynomial SuperPolynomial::theta_component(Mask theta_mask) const {
    SuperPolynomial s(generators_, odd_count_);
    for (const auto& [m, p] : terms_)
        if ((m & kThetaBits) == theta_mask) s.terms_.emplace(m & ~kThetaBits, p);
    return s;
}

Poly SuperPolynomial::body() const {
    auto it = terms_.find(0);
    return it == terms_.end() ? Poly() : it->second;
}

bool SuperPolynomial::is_even() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return parity_of_mask(t.first) == Parity::Even; });
}

bool SuperPolynomial::is_odd() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return parity_of_mask(t.first) == Parity::Odd; });
}

std::optional<Parity> SuperPolynomial::parity() const {
    if (is_even()) return Parity::Even;
    if (is_odd()) return Parity::Odd;
    return std::nullopt;
}

SuperPolynomial SuperPolynomial::even_part() const {
    SuperPolynomial s(generators_, odd_count_);
    for (const auto& [m, p] : terms_)
        if (parity_of_mask(m) == Parity::Even) s.terms_.emplace(m, p);
    return s;
}

SuperPolynomial SuperPolynomial::odd_part() const {
    SuperPolynomial s(generators_, odd_count_);
    for (const auto& [m, p] : terms_)
        if (parity_of_mask(m) == Parity::Odd) s.terms_.emplace(m, p);
    return s;
}

bool SuperPolynomial::coefficients_within(int k) const {
    return std::all_of(terms_.begin(), terms_.end(), [k](const auto& t) { return highest_zeta_label(t.first) <= k; });
}

int SuperPolynomial::min_exponent() const {
    int lo = 0;
    bool first = true;
    for (const auto& [m, p] : terms_) {
        lo = first ? p.low() : std::min(lo, p.low());
        first = false;
    }
    return lo;
}

int SuperPolynomial::max_exponent() const {
    int hi = 0;
    bool first = true;
    for (const auto& [m, p] : terms_) {
        hi = first ? p.high() : std::max(hi, p.high());
        first = false;
    }
    return hi;
}

SuperPolynomial SuperPolynomial::operator-() const {
    SuperPolynomial s = *this;
    for (auto& [m, p] : s.terms_) p = -p;
    return s;
}

SuperPolynomial& SuperPolynomial::operator+=(const SuperPolynomial& o) {
    check_compatible(*this, o, "SuperPolynomial +");
    for (const auto& [m, p] : o.terms_) add(m, p);
    return *this;
}

SuperPolynomial& SuperPolynomial::operator-=(const SuperPolynomial& o) {
    check_compatible(*this, o, "SuperPolynomial -");
    for (const auto& [m, p] : o.terms_) add(m, -p);
    return *this;
}

SuperPolynomial& SuperPolynomial::operator*=(const GaussianRational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, p] : terms_) p *= c;
    return *this;
}

SuperPolynomial operator*(const SuperPolynomial& a, const SuperPolynomial& b) {
    check_compatible(a, b, "SuperPolynomial *");
    SuperPolynomial out(a.generators_, a.odd_count_);
    for (const auto& [ma, pa] : a.terms_)
        for (const auto& [mb, pb] : b.terms_) {
            int sign = reorder_sign(ma, mb);
            if (sign == 0) continue;
            Poly prod = pa * pb;
            out.add(ma | mb, sign < 0 ? -prod : prod);
        }
    return out;
}

SuperPolynomial operator*(const Supernumber& c, const SuperPolynomial& a) {
    return SuperPolynomial::constant(a.generators(), a.odd_count(), c) * a;
}

SuperPolynomial operator*(const SuperPolynomial& a, const Supernumber& c) {
    return a * SuperPolynomial::constant(a.generators(), a.odd_count(), c);
}

SuperPolynomial operator*(const SuperPolynomial& a, const Poly& p) {
    SuperPolynomial out(a.generators_, a.odd_count_);
    for (const auto& [m, q] : a.terms_) out.add(m, q * p);
    return out;
}

SuperPolynomial SuperPolynomial::pow(unsigned k) const {
    SuperPolynomial result = scalar(generators_, odd_count_, GaussianRational(1));
    SuperPolynomial base = *this;
    while (k) {
        if (k & 1u) result = result * base;
        k >>= 1u;
        if (k) base = base * base;
    }
    return result;
}

SuperPolynomial SuperPolynomial::shifted(int k) const {
    SuperPolynomial s = *this;
    for (auto& [m, p] : s.terms_) p = p.shifted(k);
    return s;
}

SuperPolynomial SuperPolynomial::exact_div(const Poly& d) const {
    SuperPolynomial s(generators_, odd_count_);
    for (const auto& [m, p] : terms_) {
        int lift = p.low() < 0 ? -p.low() : 0;
        s.add(m, Poly::exact_div(p.shifted(lift), d).shifted(-lift));
    }
    return s;
}

SuperPolynomial SuperPolynomial::derivative_z() const {
    SuperPolynomial s(generators_, odd_count_);
    for (const auto& [m, p] : terms_) s.add(m, p.derivative());
    return s;
}

SuperPolynomial SuperPolynomial::derivative_theta(Odd which) const {
    if (static_cast<int>(which) >= odd_count_) throw DimensionError("odd variable not present");
    Mask bit = theta_bit(which);
    SuperPolynomial s(generators_, odd_count_);
    for (const auto& [m, p] : terms_) {
        if (!(m & bit)) continue;
        bool flip = std::popcount(m & (bit - 1)) & 1;
        s.add(m & ~bit, flip ? -p : p);
    }
    return s;
}

SuperPolynomial SuperPolynomial::apply_D(Odd which) const {
    if (odd_count_ != 2) throw DimensionError("D± needs two odd variables");
    Odd other = which == Odd::Plus ? Odd::Minus : Odd::Plus;
    return derivative_theta(which) + theta(generators_, 2, other) * derivative_z();
}

SuperPolynomial SuperPolynomial::with_odd_count(int odd_count) const {
    check_odd_count(odd_count);
    SuperPolynomial s(generators_, odd_count);
    for (const auto& [m, p] : terms_) {
        if ((m & kThetaBits) >> odd_count) throw DimensionError("with_odd_count: dropped odd variable occurs");
        s.terms_.emplace(m, p);
    }
    return s;
}

SuperPolynomial SuperPolynomial::extend(int generators) const {
    if (generators < generators_) throw DimensionError("extend: target generator count is smaller");
    SuperPolynomial s(generators, odd_count_);
    s.terms_ = terms_;
    return s;
}

SuperPolynomial SuperPolynomial::restrict_to(int generators) const {
    if (generators > generators_ || generators < 0) throw DimensionError("restrict: target generator count is larger");
    SuperPolynomial s(generators, odd_count_);
    for (const auto& [m, p] : terms_)
        if (highest_zeta_label(m) <= generators) s.terms_.emplace(m, p);
    return s;
}

std::string SuperPolynomial::to_string() const {
    std::vector<text::Term> out;
    for (const auto& [m, p] : terms_) {
        for (int e = p.low(); e <= p.high(); ++e) {
            GaussianRational c = p.coeff(e);
            if (c.is_zero()) continue;
            text::Term t;
            t.coeff = c;
            if (odd_count_ == 1) {
                if (m & 1u) t.symbols.push_back({text::Symbol::Kind::Theta});
            } else {
                if (m & 1u) t.symbols.push_back({text::Symbol::Kind::ThetaPlus});
                if (m & 2u) t.symbols.push_back({text::Symbol::Kind::ThetaMinus});
            }
            MultiIndex index = MultiIndex::from_mask(combined_to_zeta(m));
            for (int l : index.labels()) t.symbols.push_back(text::Symbol::zeta(l));
            t.symbols.push_back(text::Symbol::even(e));
            out.push_back(std::move(t));
        }
    }
    return text::format_sum(out);
}

SuperPolynomial SuperPolynomial::parse(int generators, int odd_count, const std::string& input) {
    SuperPolynomial out(generators, odd_count);
    for (const auto& term : text::parse_sum(input)) {
        SuperPolynomial product = scalar(generators, odd_count, term.coeff);
        for (const auto& sym : term.symbols) {
            using K = text::Symbol::Kind;
            switch (sym.kind) {
                case K::Zeta:
                    product = product * SuperPolynomial::constant(generators, odd_count,
                                                                  Supernumber::generator(generators, sym.value));
                    break;
                case K::Even: product = product.shifted(sym.value); break;
                case K::ThetaPlus:
                case K::ThetaMinus:
                    if (odd_count != 2) throw ParseError("thp/thm need two odd variables");
                    product = product * theta(generators, 2, sym.kind == K::ThetaPlus ? Odd::Plus : Odd::Minus);
                    break;
                case K::Theta:
                    if (odd_count != 1) throw ParseError("th needs exactly one odd variable");
                    product = product * theta(generators, 1, Odd::Plus);
                    break;
            }
        }
        out += product;
    }
    return out;
}

// ---------------------------------------------------------------- RationalSuperfunction

RationalSuperfunction::RationalSuperfunction(int generators, int odd_count) : num_(generators, odd_count) {}

RationalSuperfunction::RationalSuperfunction(const SuperPolynomial& numerator) : num_(numerator) { normalize(); }

RationalSuperfunction::RationalSuperfunction(const SuperPolynomial& numerator, const Poly& denominator)
    : num_(numerator), den_(denominator) {
    if (den_.is_zero()) throw NotInvertible("zero denominator");
    normalize();
}

RationalSuperfunction RationalSuperfunction::constant(int generators, int odd_count, const Supernumber& c) {
    return RationalSuperfunction(SuperPolynomial::constant(generators, odd_count, c));
}

RationalSuperfunction RationalSuperfunction::scalar(int generators, int odd_count, const GaussianRational& c) {
    return RationalSuperfunction(SuperPolynomial::scalar(generators, odd_count, c));
}

RationalSuperfunction RationalSuperfunction::z(int generators, int odd_count) {
    return RationalSuperfunction(SuperPolynomial::z(generators, odd_count));
}

RationalSuperfunction RationalSuperfunction::theta(int generators, int odd_count, Odd which) {
    return RationalSuperfunction(SuperPolynomial::theta(generators, odd_count, which));
}

RationalSuperfunction RationalSuperfunction::scalar_ratio(int generators, int odd_count, const Poly& p, const Poly& q) {
    SuperPolynomial n(generators, odd_count);
    n += SuperPolynomial::scalar(generators, odd_count, GaussianRational(1)) * p;
    return RationalSuperfunction(n, q);
}

void RationalSuperfunction::normalize() {
    if (num_.is_zero()) {
        den_ = Poly(GaussianRational(1));
        return;
    }
    // Fold negative powers into the denominator so the numerator is an ordinary polynomial.
    int lo = std::min(num_.min_exponent(), 0);
    if (den_.low() < 0) {
        int k = -den_.low();
        num_ = num_.shifted(k);
        den_ = den_.shifted(k);
        lo = std::min(num_.min_exponent(), 0);
    }
    if (lo < 0) {
        num_ = num_.shifted(-lo);
        den_ = den_.shifted(-lo);
    }
    GaussianRational lead = den_.leading();
    if (!lead.is_one()) {
        num_ *= lead.inverse();
        den_ = den_.monic();
    }
    if (den_.degree() == 0) return;
    Poly g = den_;
    for (const auto& [m, p] : num_.terms()) {
        g = Poly::gcd(g, p);
        if (g.degree() == 0) return;
    }
    num_ = num_.exact_div(g);
    den_ = Poly::exact_div(den_, g);
}

RationalSuperfunction RationalSuperfunction::theta_component(Mask theta_mask) const {
    return RationalSuperfunction(num_.theta_component(theta_mask), den_);
}

RationalSuperfunction RationalSuperfunction::theta_nilpotent() const { return *this - theta_free(); }

RationalSuperfunction RationalSuperfunction::operator-() const {
    RationalSuperfunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalSuperfunction& RationalSuperfunction::operator+=(const RationalSuperfunction& o) {
    check_compatible(num_, o.num_, "RationalSuperfunction +");
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        Poly g = Poly::gcd(den_, o.den_);
        Poly mine = Poly::exact_div(o.den_, g);
        Poly theirs = Poly::exact_div(den_, g);
        num_ = num_ * mine + o.num_ * theirs;
        den_ = den_ * mine;
    }
    normalize();
    return *this;
}

RationalSuperfunction& RationalSuperfunction::operator-=(const RationalSuperfunction& o) { return *this += -o; }

RationalSuperfunction operator*(const RationalSuperfunction& a, const RationalSuperfunction& b) {
    if (a.is_zero()) return a;
    if (b.is_zero()) return b;
    return RationalSuperfunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalSuperfunction operator*(const RationalSuperfunction& a, const GaussianRational& c) {
    RationalSuperfunction r = a;
    r.num_ *= c;
    if (r.num_.is_zero()) r.den_ = Poly(GaussianRational(1));
    return r;
}

RationalSuperfunction operator*(const Supernumber& c, const RationalSuperfunction& a) {
    return RationalSuperfunction(c * a.num_, a.den_);
}

RationalSuperfunction operator*(const RationalSuperfunction& a, const Supernumber& c) {
    return RationalSuperfunction(a.num_ * c, a.den_);
}

RationalSuperfunction RationalSuperfunction::inverse() const {
    Poly body = num_.body();
    if (body.is_zero()) throw NotInvertible("superfunction with vanishing body is not invertible");
    // 1/(c(M + S)) = (1/c) Σ_k (-1)^k S^k / M^{k+1}, which stops once S^k = 0.
    GaussianRational c = body.leading();
    GaussianRational inv_c = c.inverse();
    Poly monic_body = body * inv_c;
    SuperPolynomial soul = num_;
    soul -= SuperPolynomial::scalar(generators(), odd_count(), GaussianRational(1)) * body;
    soul *= inv_c;

    std::vector<SuperPolynomial> powers{SuperPolynomial::scalar(generators(), odd_count(), GaussianRational(1))};
    while (true) {
        SuperPolynomial next = powers.back() * soul;
        if (next.is_zero()) break;
        powers.push_back(std::move(next));
    }
    int top = static_cast<int>(powers.size()) - 1;
    SuperPolynomial series(generators(), odd_count());
    Poly mpow(GaussianRational(1));
    for (int k = top; k >= 0; --k) {
        SuperPolynomial term = powers[static_cast<std::size_t>(k)] * mpow;
        if (k & 1)
            series -= term;
        else
            series += term;
        mpow = mpow * monic_body;
    }
    // mpow is now monic_body^{top+1}
    return RationalSuperfunction(series * den_ * inv_c, mpow);
}

RationalSuperfunction operator/(const RationalSuperfunction& a, const RationalSuperfunction& b) {
    return a * b.inverse();
}

RationalSuperfunction RationalSuperfunction::pow(int k) const {
    if (k < 0) return inverse().pow(-k);
    RationalSuperfunction result = scalar(generators(), odd_count(), GaussianRational(1));
    RationalSuperfunction base = *this;
    auto e = static_cast<unsigned>(k);
    while (e) {
        if (e & 1u) result = result * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return result;
}

RationalSuperfunction RationalSuperfunction::derivative_z() const {
    if (is_polynomial()) return RationalSuperfunction(num_.derivative_z());
    SuperPolynomial top = num_.derivative_z() * den_ - num_ * den_.derivative();
    return RationalSuperfunction(top, den_ * den_);
}

RationalSuperfunction RationalSuperfunction::derivative_theta(Odd which) const {
    return RationalSuperfunction(num_.derivative_theta(which), den_);
}

RationalSuperfunction RationalSuperfunction::apply_D(Odd which) const {
    if (odd_count() != 2) throw DimensionError("D± needs two odd variables");
    Odd other = which == Odd::Plus ? Odd::Minus : Odd::Plus;
    return derivative_theta(which) + theta(generators(), 2, other) * derivative_z();
}

Supernumber RationalSuperfunction::evaluate(const SuperPoint& p) const {
    const int L = generators();
    check_same_generators(L, p.z.generators(), "sf_evaluate");
    if (static_cast<int>(p.thetas.size()) != odd_count()) throw DimensionError("sf_evaluate: wrong number of odd coordinates");
    for (const auto& t : p.thetas) check_same_generators(L, t.generators(), "sf_evaluate");

    Supernumber d = eval_poly(den_, p.z);
    if (d.body().is_zero()) throw PoleAtPoint("denominator vanishes at the body of the point");
    Supernumber value(L);
    for (const auto& [m, poly] : num_.terms()) {
        Supernumber factor(L, GaussianRational(1));
        for (int k = 0; k < odd_count(); ++k)
            if (m & (Mask{1} << k)) factor = factor * p.thetas[static_cast<std::size_t>(k)];
        Mask zeta = combined_to_zeta(m);
        if (zeta) factor = factor * Supernumber::from_terms(L, {{zeta, GaussianRational(1)}});
        value += factor * eval_poly(poly, p.z);
    }
    return value * d.inverse();
}

RationalSuperfunction RationalSuperfunction::compose_theta_free(const RationalSuperfunction& w) const {
    const int L = w.generators();
    const int nodd = w.odd_count();
    const SuperPolynomial& P = w.num_;
    const Poly& R = w.den_;

    auto homogenize = [&](const SuperPolynomial& f, int degree) {
        // Σ_e f_e P^e R^{degree-e}, by Horner from the top coefficient.
        SuperPolynomial acc(L, nodd);
        Poly rpow(GaussianRational(1));
        std::vector<Poly> rpows{rpow};
        for (int k = 1; k <= degree; ++k) rpows.push_back(rpows.back() * R);
        for (int e = degree; e >= 0; --e) {
            SuperPolynomial coeff = SuperPolynomial::constant(L, nodd, f.coefficient(e, 0));
            acc = acc * P + coeff * rpows[static_cast<std::size_t>(degree - e)];
        }
        return acc;
    };

    SuperPolynomial fnum = num_.with_odd_count(0).with_odd_count(nodd);
    int dn = fnum.is_zero() ? 0 : fnum.max_exponent();
    int dq = den_.degree();
    SuperPolynomial top = homogenize(fnum, dn);
    SuperPolynomial dens = SuperPolynomial::scalar(L, nodd, GaussianRational(1)) * den_;
    SuperPolynomial bottom = dq == 0 ? SuperPolynomial::scalar(L, nodd, GaussianRational(1)) : homogenize(dens, dq);

    RationalSuperfunction lhs = dq >= dn ? RationalSuperfunction(top * R.pow(static_cast<unsigned>(dq - dn)))
                                         : RationalSuperfunction(top, R.pow(static_cast<unsigned>(dn - dq)));
    if (dq == 0) return lhs;
    if (bottom.body().is_zero()) throw SingularComposition("denominator body vanishes identically after substitution");
    return lhs * RationalSuperfunction(bottom).inverse();
}

RationalSuperfunction RationalSuperfunction::substitute(const RationalSuperfunction& w,
                                                        const std::vector<RationalSuperfunction>& odd_images) const {
    check_same_generators(generators(), w.generators(), "sf_substitute");
    if (static_cast<int>(odd_images.size()) != odd_count())
        throw DimensionError("sf_substitute: need one image per odd variable");
    for (const auto& img : odd_images) {
        check_same_generators(generators(), img.generators(), "sf_substitute");
        if (img.odd_count() != w.odd_count()) throw DimensionError("sf_substitute: images live in different spaces");
    }
    if (!w.is_even()) throw ParityError("sf_substitute: the even image must be even");

    const int L = generators();
    const int nodd = w.odd_count();
    RationalSuperfunction w_red = w.theta_free();
    RationalSuperfunction w_nil = w - w_red;
    RationalSuperfunction w_nil2 = w_nil * w_nil;
    if (!(w_nil2 * w_nil).is_zero()) throw Error("sf_substitute: nilpotent part of the even image has nonzero cube");

    std::set<Mask> theta_masks;
    for (const auto& [m, p] : num_.terms()) theta_masks.insert(m & kThetaBits);

    RationalSuperfunction result(L, nodd);
    for (Mask a : theta_masks) {
        RationalSuperfunction fa = theta_component(a).with_odd_count(0);
        RationalSuperfunction value = fa.compose_theta_free(w_red);
        if (!w_nil.is_zero()) {
            RationalSuperfunction d1 = fa.derivative_z();
            value += d1.compose_theta_free(w_red) * w_nil;
            if (!w_nil2.is_zero()) {
                RationalSuperfunction d2 = d1.derivative_z();
                value += d2.compose_theta_free(w_red) * w_nil2 * GaussianRational(Rational(1, 2));
            }
        }
        RationalSuperfunction prefix = scalar(L, nodd, GaussianRational(1));
        for (int k = 0; k < odd_count(); ++k)
            if (a & (Mask{1} << k)) prefix = prefix * odd_images[static_cast<std::size_t>(k)];
        result += prefix * value;
    }
    return result;
}

RationalSuperfunction RationalSuperfunction::with_odd_count(int odd_count) const {
    RationalSuperfunction r = *this;
    r.num_ = num_.with_odd_count(odd_count);
    return r;
}

RationalSuperfunction RationalSuperfunction::extend(int generators) const {
    RationalSuperfunction r = *this;
    r.num_ = num_.extend(generators);
    return r;
}

RationalSuperfunction RationalSuperfunction::restrict_to(int generators) const {
    return RationalSuperfunction(num_.restrict_to(generators), den_);
}

std::string RationalSuperfunction::to_string() const {
    if (is_polynomial()) return num_.to_string();
    SuperPolynomial d = SuperPolynomial::scalar(generators(), odd_count(), GaussianRational(1)) * den_;
    return "(" + num_.to_string() + ")/(" + d.to_string() + ")";
}

RationalSuperfunction RationalSuperfunction::parse(int generators, int odd_count, const std::string& input) {
    std::string s;
    for (char c : input)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    // "(num)/(den)": the first parenthesis must close right before a '/'.
    if (!s.empty() && s.front() == '(') {
        int depth = 0;
        std::size_t close = std::string::npos;
        for (std::size_t k = 0; k < s.size(); ++k) {
            if (s[k] == '(') ++depth;
            if (s[k] == ')' && --depth == 0) {
                close = k;
                break;
            }
        }
        if (close != std::string::npos && close + 2 < s.size() && s[close + 1] == '/' && s[close + 2] == '(' &&
            s.back() == ')') {
            auto num = SuperPolynomial::parse(generators, odd_count, s.substr(1, close - 1));
            auto den = SuperPolynomial::parse(generators, odd_count, s.substr(close + 3, s.size() - close - 4));
            return RationalSuperfunction(num) / RationalSuperfunction(den);
        }
    }
    return RationalSuperfunction(SuperPolynomial::parse(generators, odd_count, s));
}

bool equal_by_cross_multiplication(const RationalSuperfunction& a, const RationalSuperfunction& b) {
    if (a.generators() != b.generators() || a.odd_count() != b.odd_count()) return false;
    return a.numerator() * b.denominator() == b.numerator() * a.denominator();
}

Supernumber sf_evaluate(const RationalSuperfunction& f, const SuperPoint& p) { return f.evaluate(p); }
RationalSuperfunction sf_diff_even(const RationalSuperfunction& f) { return f.derivative_z(); }
RationalSuperfunction sf_diff_odd(const RationalSuperfunction& f, Odd which) { return f.derivative_theta(which); }
RationalSuperfunction sf_apply_Dpm(const RationalSuperfunction& f, Odd which) { return f.apply_D(which); }
RationalSuperfunction sf_substitute(const RationalSuperfunction& f, const RationalSuperfunction& w,
                                    const std::vector<RationalSuperfunction>& odd_images) {
    return f.substitute(w, odd_images);
}

}  // namespace superconf
