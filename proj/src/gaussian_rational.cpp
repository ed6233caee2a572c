#include "superconf/gaussian_rational.hpp"

#include <cctype>

#include "superconf/errors.hpp"

namespace superconf {

GaussianRational::GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
}

GaussianRational GaussianRational::inverse() const {
    if (is_zero()) throw NotInvertible("division by zero Gaussian rational");
    Rational n = norm();
    return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ *= o.re_;
        return *this;
    }
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    if (sgn(o.im_) == 0) {
        if (sgn(o.re_) == 0) throw NotInvertible("division by zero Gaussian rational");
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    return *this *= o.inverse();
}

std::strong_ordering operator<=>(const GaussianRational& a, const GaussianRational& b) {
    int c = cmp(a.re_, b.re_);
    if (c == 0) c = cmp(a.im_, b.im_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::string GaussianRational::to_string() const {
    if (is_real()) return re_.get_str();
    std::string s = "(" + re_.get_str();
    s += sgn(im_) < 0 ? "-" : "+";
    s += Rational(abs(im_)).get_str() + "i)";
    return s;
}

namespace {

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational literal");
    for (std::size_t k = 0; k < text.size(); ++k) {
        char c = text[k];
        bool ok = std::isdigit(static_cast<unsigned char>(c)) || c == '/' || ((c == '-' || c == '+') && k == 0);
        if (!ok) throw ParseError("bad rational literal '" + text + "'");
    }
    std::string body = text[0] == '+' ? text.substr(1) : text;
    Rational q;
    if (q.set_str(body, 10) != 0) throw ParseError("bad rational literal '" + text + "'");
    if (sgn(q.get_den()) == 0) throw ParseError("zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

}  // namespace

GaussianRational GaussianRational::parse(const std::string& raw) {
    std::string text;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) text += c;
    if (text.empty()) throw ParseError("empty coefficient");
    if (text.front() != '(') return {parse_rational(text)};
    if (text.back() != ')' || text.size() < 4 || text[text.size() - 2] != 'i')
        throw ParseError("bad complex literal '" + raw + "'");
    std::string inner = text.substr(1, text.size() - 3);
    // split at the sign separating real and imaginary parts (not a leading sign)
    std::size_t split = std::string::npos;
    for (std::size_t k = inner.size(); k-- > 1;) {
        if (inner[k] == '+' || inner[k] == '-') {
            split = k;
            break;
        }
    }
    if (split == std::string::npos) throw ParseError("bad complex literal '" + raw + "'");
    return {parse_rational(inner.substr(0, split)), parse_rational(inner.substr(split))};
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.to_string(); }

namespace {

std::optional<Rational> rational_sqrt(const Rational& q) {
    if (sgn(q) < 0) return std::nullopt;
    if (sgn(q) == 0) return Rational(0);
    mpz_class n = q.get_num(), d = q.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
    mpz_class rn = sqrt(n), rd = sqrt(d);
    Rational r(rn, rd);
    r.canonicalize();
    return r;
}

}  // namespace

std::optional<GaussianRational> exact_sqrt(const GaussianRational& z) {
    if (z.is_zero()) return GaussianRational{};
    auto modulus = rational_sqrt(z.norm());
    if (!modulus) return std::nullopt;
    auto x = rational_sqrt((*modulus + z.re()) / 2);
    auto y = rational_sqrt((*modulus - z.re()) / 2);
    if (!x || !y) return std::nullopt;
    Rational im = sgn(z.im()) < 0 ? Rational(-*y) : *y;
    GaussianRational root(*x, im);
    if (!(root * root == z)) return std::nullopt;
    return root;
}

}  // namespace superconf
