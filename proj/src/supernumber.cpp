#include "superconf/supernumber.hpp"

#include <sstream>

#include "superconf/errors.hpp"
#include "text_format.hpp"

namespace superconf {

MultiIndex::MultiIndex(std::vector<int> labels) : labels_(std::move(labels)) {
    for (std::size_t k = 0; k < labels_.size(); ++k) {
        if (labels_[k] < 1 || labels_[k] > kMaxGenerators)
            throw DimensionError("generator label out of range: " + std::to_string(labels_[k]));
        if (k > 0 && labels_[k] <= labels_[k - 1])
            throw DimensionError("multi-index labels must be strictly increasing");
    }
}

MultiIndex MultiIndex::from_mask(Mask m) {
    std::vector<int> labels;
    for (Mask rest = m; rest; rest &= rest - 1) labels.push_back(std::countr_zero(rest) + 1);
    return MultiIndex(std::move(labels));
}

Mask MultiIndex::mask() const {
    Mask m = 0;
    for (int l : labels_) m |= Mask{1} << (l - 1);
    return m;
}

void check_same_generators(int a, int b, const char* where) {
    if (a != b)
        throw DimensionError(std::string(where) + ": generator counts differ (" + std::to_string(a) + " vs " +
                             std::to_string(b) + ")");
}

namespace {

void check_generator_count(int generators) {
    if (generators < 0 || generators > kMaxGenerators)
        throw DimensionError("generator count out of range: " + std::to_string(generators));
}

int highest_label(Mask m) { return m ? 32 - std::countl_zero(m) : 0; }

}  // namespace

Supernumber::Supernumber(int generators) : generators_(generators) { check_generator_count(generators); }

Supernumber::Supernumber(int generators, const GaussianRational& scalar) : Supernumber(generators) {
    add_term(0, scalar);
}

Supernumber Supernumber::generator(int generators, int label) {
    if (label < 1 || label > generators)
        throw DimensionError("generator label " + std::to_string(label) + " outside 1.." + std::to_string(generators));
    Supernumber s(generators);
    s.terms_.emplace(Mask{1} << (label - 1), GaussianRational(1));
    return s;
}

Supernumber Supernumber::monomial(int generators, const MultiIndex& index, const GaussianRational& coeff) {
    if (index.max_label() > generators) throw DimensionError("multi-index exceeds generator count");
    Supernumber s(generators);
    s.add_term(index.mask(), coeff);
    return s;
}

Supernumber Supernumber::from_terms(int generators, const Terms& terms) {
    Supernumber s(generators);
    for (const auto& [m, c] : terms) {
        if (highest_label(m) > generators) throw DimensionError("term exceeds generator count");
        s.add_term(m, c);
    }
    return s;
}

void Supernumber::add_term(Mask m, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

GaussianRational Supernumber::coefficient(Mask m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? GaussianRational{} : it->second;
}

GaussianRational Supernumber::coefficient(const MultiIndex& index) const { return coefficient(index.mask()); }

GaussianRational Supernumber::body() const { return coefficient(Mask{0}); }

Supernumber Supernumber::soul() const {
    Supernumber s = *this;
    s.terms_.erase(0);
    return s;
}

Supernumber Supernumber::even_part() const {
    Supernumber s(generators_);
    for (const auto& [m, c] : terms_)
        if (parity_of_mask(m) == Parity::Even) s.terms_.emplace(m, c);
    return s;
}

Supernumber Supernumber::odd_part() const {
    Supernumber s(generators_);
    for (const auto& [m, c] : terms_)
        if (parity_of_mask(m) == Parity::Odd) s.terms_.emplace(m, c);
    return s;
}

bool Supernumber::is_even() const {
    for (const auto& [m, c] : terms_)
        if (parity_of_mask(m) == Parity::Odd) return false;
    return true;
}

bool Supernumber::is_odd() const {
    for (const auto& [m, c] : terms_)
        if (parity_of_mask(m) == Parity::Even) return false;
    return true;
}

std::optional<Parity> Supernumber::parity() const {
    if (is_even()) return Parity::Even;
    if (is_odd()) return Parity::Odd;
    return std::nullopt;
}

int Supernumber::max_label() const {
    Mask all = 0;
    for (const auto& [m, c] : terms_) all |= m;
    return highest_label(all);
}

bool Supernumber::within(int k) const { return max_label() <= k; }

Supernumber Supernumber::operator-() const {
    Supernumber s = *this;
    for (auto& [m, c] : s.terms_) c = -c;
    return s;
}

Supernumber& Supernumber::operator+=(const Supernumber& o) {
    check_same_generators(generators_, o.generators_, "supernumber addition");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Supernumber& Supernumber::operator-=(const Supernumber& o) {
    check_same_generators(generators_, o.generators_, "supernumber subtraction");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Supernumber& Supernumber::operator*=(const GaussianRational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

Supernumber operator*(const Supernumber& a, const Supernumber& b) {
    check_same_generators(a.generators_, b.generators_, "supernumber product");
    Supernumber out(a.generators_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            int s = reorder_sign(ma, mb);
            if (s == 0) continue;
            GaussianRational c = ca * cb;
            if (s < 0) c = -c;
            out.add_term(ma | mb, c);
        }
    }
    return out;
}

Supernumber Supernumber::pow(unsigned k) const {
    Supernumber result(generators_, 1);
    Supernumber base = *this;
    while (k) {
        if (k & 1u) result = result * base;
        k >>= 1u;
        if (k) base = base * base;
    }
    return result;
}

Supernumber Supernumber::inverse() const {
    GaussianRational b = body();
    if (b.is_zero()) throw NotInvertible("supernumber with zero body is not invertible: " + to_string());
    GaussianRational inv_b = b.inverse();
    // 1/(b + s) = sum_k (-1)^k s^k / b^(k+1), and s^(L+1) = 0
    Supernumber ratio = soul() * inv_b;
    Supernumber term(generators_, 1);
    Supernumber sum(generators_, 1);
    for (int k = 1; k <= generators_ + 1; ++k) {
        term = -(term * ratio);
        if (term.is_zero()) break;
        sum += term;
    }
    return sum * inv_b;
}

Supernumber Supernumber::exp_soul() const {
    if (!body().is_zero()) throw NotInvertible("exp_soul requires a pure soul argument");
    Supernumber sum(generators_, 1);
    Supernumber term(generators_, 1);
    for (long k = 1; k <= generators_ + 1; ++k) {
        term = term * *this * GaussianRational(Rational(1, k));
        if (term.is_zero()) break;
        sum += term;
    }
    return sum;
}

Supernumber Supernumber::sqrt_with_body(const GaussianRational& body_root) const {
    if (!(body_root * body_root == body()) || body_root.is_zero())
        throw NotInvertible("sqrt_with_body: supplied root does not square to the nonzero body");
    // sqrt(b(1+s)) = r * sum_k binom(1/2, k) s^k
    Supernumber s = soul() * body().inverse();
    Supernumber sum(generators_, 1);
    Supernumber power(generators_, 1);
    Rational coeff = 1;
    for (long k = 1; k <= generators_ + 1; ++k) {
        power = power * s;
        if (power.is_zero()) break;
        coeff = coeff * (Rational(1, 2) - (k - 1)) / k;
        sum += power * GaussianRational(coeff);
    }
    return sum * body_root;
}

Supernumber Supernumber::extend(int generators) const {
    if (generators < generators_) throw DimensionError("extend: target generator count is smaller");
    Supernumber s(generators);
    s.terms_ = terms_;
    return s;
}

Supernumber Supernumber::restrict_to(int generators) const {
    if (generators > generators_ || generators < 0) throw DimensionError("restrict: target generator count is larger");
    Supernumber s(generators);
    for (const auto& [m, c] : terms_)
        if (highest_label(m) <= generators) s.terms_.emplace(m, c);
    return s;
}

std::string Supernumber::to_string() const {
    std::vector<text::Term> terms;
    for (const auto& [m, c] : terms_) {
        text::Term t;
        t.coeff = c;
        MultiIndex index = MultiIndex::from_mask(m);
        for (int l : index.labels()) t.symbols.push_back(text::Symbol::zeta(l));
        terms.push_back(std::move(t));
    }
    return text::format_sum(terms);
}

Supernumber Supernumber::parse(int generators, const std::string& input) {
    Supernumber out(generators);
    for (const auto& term : text::parse_sum(input)) {
        Supernumber product(generators, term.coeff);
        for (const auto& sym : term.symbols) {
            if (sym.kind != text::Symbol::Kind::Zeta)
                throw ParseError("unexpected symbol in supernumber: " + sym.to_string());
            product = product * generator(generators, sym.value);
        }
        out += product;
    }
    return out;
}

Supernumber gr_mul(const Supernumber& x, const Supernumber& y) { return x * y; }

std::pair<GaussianRational, Supernumber> gr_body_soul(const Supernumber& x) { return {x.body(), x.soul()}; }

Supernumber gr_inv(const Supernumber& x) { return x.inverse(); }

Supernumber gr_extend(const Supernumber& x, int generators) { return x.extend(generators); }

Supernumber gr_restrict(const Supernumber& x, int generators) { return x.restrict_to(generators); }

}  // namespace superconf
