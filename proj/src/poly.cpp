#include "superconf/poly.hpp"

#include <algorithm>

#include "superconf/errors.hpp"

namespace superconf {

Poly::Poly(const GaussianRational& c) {
    if (!c.is_zero()) coeffs_.push_back(c);
}

Poly Poly::monomial(const GaussianRational& c, int exponent) {
    Poly p(c);
    if (!p.is_zero()) p.low_ = exponent;
    return p;
}

Poly Poly::from_coeffs(std::vector<GaussianRational> coeffs, int low) {
    Poly p;
    p.coeffs_ = std::move(coeffs);
    p.low_ = low;
    p.trim();
    return p;
}

Poly Poly::linear_factor(const GaussianRational& root) { return from_coeffs({-root, GaussianRational(1)}); }

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
    if (lead > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
        low_ += static_cast<int>(lead);
    }
    if (coeffs_.empty()) low_ = 0;
}

GaussianRational Poly::coeff(int exponent) const {
    if (is_zero() || exponent < low_ || exponent > high()) return {};
    return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

Poly Poly::operator-() const {
    Poly p = *this;
    for (auto& c : p.coeffs_) c = -c;
    return p;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    int lo = std::min(low_, o.low_);
    int hi = std::max(high(), o.high());
    if (lo < low_) {
        coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - lo), GaussianRational{});
        low_ = lo;
    }
    coeffs_.resize(static_cast<std::size_t>(hi - lo + 1));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[static_cast<std::size_t>(o.low_ - lo) + k] += o.coeffs_[k];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly& Poly::operator*=(const GaussianRational& c) {
    if (c.is_zero()) {
        coeffs_.clear();
        low_ = 0;
        return *this;
    }
    for (auto& v : coeffs_) v *= c;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<GaussianRational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly::from_coeffs(std::move(out), a.low_ + b.low_);
}

Poly Poly::shifted(int k) const {
    Poly p = *this;
    if (!p.is_zero()) p.low_ += k;
    return p;
}

Poly Poly::derivative() const {
    std::vector<GaussianRational> out(coeffs_.size());
    for (std::size_t k = 0; k < coeffs_.size(); ++k) out[k] = coeffs_[k] * GaussianRational(low_ + static_cast<long>(k));
    return from_coeffs(std::move(out), low_ - 1);
}

Poly Poly::pow(unsigned k) const {
    Poly result(GaussianRational(1));
    Poly base = *this;
    while (k) {
        if (k & 1u) result = result * base;
        k >>= 1u;
        if (k) base = base * base;
    }
    return result;
}

GaussianRational Poly::eval(const GaussianRational& z) const {
    GaussianRational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
    if (low_ > 0) {
        for (int k = 0; k < low_; ++k) acc *= z;
    } else if (low_ < 0) {
        GaussianRational inv = z.inverse();
        for (int k = 0; k < -low_; ++k) acc *= inv;
    }
    return acc;
}

void Poly::divmod(const Poly& num, const Poly& den, Poly& quot, Poly& rem) {
    if (den.is_zero()) throw NotInvertible("polynomial division by zero");
    if (!num.is_polynomial() || !den.is_polynomial()) throw Error("divmod requires ordinary polynomials");
    std::vector<GaussianRational> r(static_cast<std::size_t>(std::max(num.degree() + 1, 0)));
    for (int e = 0; e <= num.degree(); ++e) r[static_cast<std::size_t>(e)] = num.coeff(e);
    int dd = den.degree();
    GaussianRational inv_lead = den.leading().inverse();
    std::vector<GaussianRational> q(static_cast<std::size_t>(std::max(num.degree() - dd + 1, 0)));
    for (int e = num.degree(); e >= dd; --e) {
        GaussianRational c = r[static_cast<std::size_t>(e)];
        if (c.is_zero()) continue;
        c *= inv_lead;
        q[static_cast<std::size_t>(e - dd)] = c;
        for (int k = 0; k <= dd; ++k) {
            GaussianRational dk = den.coeff(k);
            if (!dk.is_zero()) r[static_cast<std::size_t>(e - dd + k)] -= c * dk;
        }
    }
    quot = from_coeffs(std::move(q));
    r.resize(static_cast<std::size_t>(std::max(dd, 0)));
    rem = from_coeffs(std::move(r));
}

Poly Poly::exact_div(const Poly& num, const Poly& den) {
    Poly q, r;
    divmod(num, den, q, r);
    if (!r.is_zero()) throw Error("inexact polynomial division");
    return q;
}

Poly Poly::monic() const {
    if (is_zero()) return {};
    return *this * leading().inverse();
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
    Poly x = a.monic(), y = b.monic();
    while (!y.is_zero()) {
        if (y.degree() == 0) return Poly(GaussianRational(1));
        Poly q, r;
        divmod(x, y, q, r);
        x = std::move(y);
        y = r.monic();
    }
    return x;
}

}  // namespace superconf
