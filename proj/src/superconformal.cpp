#include "superconf/superconformal.hpp"

#include "superconf/errors.hpp"

namespace superconf {

namespace {

using RSF = RationalSuperfunction;

RSF one(int L) { return RSF::scalar(L, 2, GaussianRational(1)); }
RSF thp(int L) { return RSF::theta(L, 2, Odd::Plus); }
RSF thm(int L) { return RSF::theta(L, 2, Odd::Minus); }

void require_components(const SuperconformalMap& m) {
    const int L = m.generators();
    for (const RSF* c : {&m.f, &m.g_plus, &m.g_minus, &m.psi_plus, &m.psi_minus}) {
        check_same_generators(L, c->generators(), "superconformal map");
        if (c->odd_count() != 2) throw DimensionError("components must be stored over two odd variables");
    }
}

// Body rational function p/q of a θ-free even component.
struct BodyRatio {
    Poly num;
    Poly den;
};

BodyRatio body_ratio(const RSF& f) {
    RSF reduced = RSF::scalar_ratio(f.generators(), 2, f.body_numerator(), f.denominator());
    return {reduced.body_numerator(), reduced.denominator()};
}

RSF from_body(int L, const BodyRatio& r) { return RSF::scalar_ratio(L, 2, r.num, r.den); }

}  // namespace

FullMap FullMap::identity(int L) { return {RSF::z(L, 2), thp(L), thm(L)}; }

SuperconformalMap SuperconformalMap::identity(int L) {
    return {RSF::z(L, 2), one(L), one(L), RSF(L, 2), RSF(L, 2)};
}

SuperconformalMap SuperconformalMap::mobius(const Supernumber& a, const Supernumber& b, const Supernumber& c,
                                            const Supernumber& d) {
    const int L = a.generators();
    if (!(a * d - b * c == Supernumber(L, 1))) throw InvalidParams("Möbius data must satisfy ad − bc = 1");
    RSF z = RSF::z(L, 2);
    RSF den = RSF::constant(L, 2, c) * z + RSF::constant(L, 2, d);
    RSF inv = den.inverse();
    return {(RSF::constant(L, 2, a) * z + RSF::constant(L, 2, b)) * inv, inv, inv, RSF(L, 2), RSF(L, 2)};
}

SuperconformalMap SuperconformalMap::extend(int L) const {
    return {f.extend(L), g_plus.extend(L), g_minus.extend(L), psi_plus.extend(L), psi_minus.extend(L)};
}

std::string SuperconformalDiagnosis::summary() const {
    if (ok()) return "ok";
    std::string s;
    for (const auto& f : failures) s += (s.empty() ? "" : "; ") + f;
    return s;
}

std::pair<RSF, RSF> N1SuperanalyticMap::expand() const {
    const int L = generators();
    RSF th = RSF::theta(L, 1, Odd::Plus);
    return {f1 + th * xi, psi + th * g};
}

SuperconformalDiagnosis sc_check(const SuperconformalMap& m) {
    require_components(m);
    SuperconformalDiagnosis d;
    const std::pair<const char*, const RSF*> named[] = {
        {"f", &m.f}, {"g+", &m.g_plus}, {"g-", &m.g_minus}, {"psi+", &m.psi_plus}, {"psi-", &m.psi_minus}};
    bool theta_free = true;
    for (const auto& [name, c] : named)
        if (!(c->theta_free() == *c)) {
            d.failures.push_back(std::string(name) + " depends on the odd variables");
            theta_free = false;
        }
    for (const auto& [name, c] : named) {
        bool even_slot = name[0] != 'p';
        if (even_slot ? !c->is_even() : !c->is_odd())
            d.notes.push_back(std::string(name) + (even_slot ? " is not even" : " is not odd"));
    }
    if (!theta_free) return d;
    RSF lhs = m.f.derivative_z();
    RSF rhs = m.psi_plus.derivative_z() * m.psi_minus - m.psi_plus * m.psi_minus.derivative_z() + m.g_plus * m.g_minus;
    if (!(lhs == rhs)) d.failures.push_back("constraint f' = (psi+)'psi- - psi+(psi-)' + g+g- fails");
    if (!m.g_plus.has_nonzero_body()) d.failures.push_back("g+ has vanishing body, so D+ of theta+~ vanishes");
    if (!m.g_minus.has_nonzero_body()) d.failures.push_back("g- has vanishing body, so D- of theta-~ vanishes");
    return d;
}

FullMap sc_expand(const SuperconformalMap& m) {
    SuperconformalDiagnosis d = sc_check(m);
    if (!d) throw NotSuperconformal(d.summary());
    const int L = m.generators();
    RSF tp = thp(L), tm = thm(L), tpm = tp * tm;
    FullMap out;
    out.z = m.f + tp * m.g_plus * m.psi_minus + tm * m.g_minus * m.psi_plus +
            tpm * (m.psi_plus * m.psi_minus).derivative_z();
    out.theta_plus = m.psi_plus + tp * m.g_plus + tpm * m.psi_plus.derivative_z();
    out.theta_minus = m.psi_minus + tm * m.g_minus - tpm * m.psi_minus.derivative_z();
    return out;
}

SuperconformalMap sc_extract(const FullMap& full) {
    if (full.z.odd_count() != 2 || full.theta_plus.odd_count() != 2 || full.theta_minus.odd_count() != 2)
        throw DimensionError("sc_extract needs (1,2)-superfunctions");
    if (!full.theta_minus.apply_D(Odd::Plus).is_zero()) throw NotSuperconformal("D+ of theta-~ is not zero");
    if (!full.theta_plus.apply_D(Odd::Minus).is_zero()) throw NotSuperconformal("D- of theta+~ is not zero");
    if (!(full.z.apply_D(Odd::Plus) - full.theta_minus * full.theta_plus.apply_D(Odd::Plus)).is_zero())
        throw NotSuperconformal("D+ z~ - theta-~ D+ theta+~ is not zero");
    if (!(full.z.apply_D(Odd::Minus) - full.theta_plus * full.theta_minus.apply_D(Odd::Minus)).is_zero())
        throw NotSuperconformal("D- z~ - theta+~ D- theta-~ is not zero");
    SuperconformalMap m{full.z.theta_free(), full.theta_plus.theta_component(theta_bit(Odd::Plus)),
                        full.theta_minus.theta_component(theta_bit(Odd::Minus)), full.theta_plus.theta_free(),
                        full.theta_minus.theta_free()};
    SuperconformalDiagnosis d = sc_check(m);
    if (!d) throw NotSuperconformal(d.summary());
    if (!(sc_expand(m) == full)) throw NotSuperconformal("full map is not of superconformal form");
    return m;
}

FullMap compose_full(const FullMap& outer, const FullMap& inner) {
    std::vector<RSF> odd{inner.theta_plus, inner.theta_minus};
    return {outer.z.substitute(inner.z, odd), outer.theta_plus.substitute(inner.z, odd),
            outer.theta_minus.substitute(inner.z, odd)};
}

SuperconformalMap sc_compose(const SuperconformalMap& m2, const SuperconformalMap& m1) {
    check_same_generators(m2.generators(), m1.generators(), "sc_compose");
    return sc_extract(compose_full(sc_expand(m2), sc_expand(m1)));
}

SuperconformalMap sc_invert(const SuperconformalMap& m) {
    FullMap full = sc_expand(m);
    const int L = m.generators();

    // Body Möbius transformation and its inverse.
    BodyRatio fb = body_ratio(m.f);
    if (fb.num.degree() > 1 || fb.den.degree() > 1)
        throw NotInvertible("sc_invert: body of f is not a Möbius transformation");
    GaussianRational a = fb.num.coeff(1), b = fb.num.coeff(0), c = fb.den.coeff(1), d = fb.den.coeff(0);
    if ((a * d - b * c).is_zero()) throw NotInvertible("sc_invert: degenerate body Möbius transformation");
    RSF z = RSF::z(L, 2);
    RSF finv = (z * d - RSF::scalar(L, 2, b)) / (z * (-c) + RSF::scalar(L, 2, a));
    std::vector<RSF> none{thp(L), thm(L)};
    RSF gp = from_body(L, body_ratio(m.g_plus)).substitute(finv, none);
    RSF gm = from_body(L, body_ratio(m.g_minus)).substitute(finv, none);
    FullMap k0{finv, thp(L) * gp.inverse(), thm(L) * gm.inverse()};

    // N = m ∘ K₀ differs from the identity by nilpotent terms; solve K = id − E∘K.
    FullMap n = compose_full(full, k0);
    FullMap id = FullMap::identity(L);
    FullMap e{n.z - id.z, n.theta_plus - id.theta_plus, n.theta_minus - id.theta_minus};
    FullMap k = id;
    for (int round = 0; round <= L + 1; ++round) {
        FullMap ek = compose_full(e, k);
        FullMap next{id.z - ek.z, id.theta_plus - ek.theta_plus, id.theta_minus - ek.theta_minus};
        if (next == k) break;
        k = std::move(next);
    }
    return sc_extract(compose_full(k0, k));
}

N1SuperanalyticMap sc_F1(const SuperconformalMap& m) {
    SuperconformalDiagnosis d = sc_check(m);
    if (!d) throw NotSuperconformal(d.summary());
    auto one_odd = [](const RSF& x) { return x.with_odd_count(1); };
    return {one_odd(m.f + m.psi_plus * m.psi_minus), one_odd(m.g_plus),
            one_odd(m.g_plus * m.psi_minus * GaussianRational(2)), one_odd(m.psi_plus)};
}

RationalSuperfunction as_component(const RationalSuperfunction& f) {
    if (!(f.theta_free() == f)) throw DimensionError("component functions must not depend on odd variables");
    return f.with_odd_count(0).with_odd_count(2);
}

SuperconformalMap sc_F2(const N1SuperanalyticMap& h) {
    if (!h.g.has_nonzero_body()) throw NotInvertibleComponent("g has vanishing body");
    RSF f1 = as_component(h.f1), g = as_component(h.g), xi = as_component(h.xi), psi = as_component(h.psi);
    RSF ginv = g.inverse();
    RSF half = RSF::scalar(h.generators(), 2, GaussianRational::fraction(1, 2));
    SuperconformalMap m;
    m.f = f1 - psi * xi * ginv * half;
    m.g_plus = g;
    m.g_minus = f1.derivative_z() * ginv - psi.derivative_z() * xi * ginv * ginv;
    m.psi_plus = psi;
    m.psi_minus = xi * ginv * half;
    return m;
}

SuperconformalMap random_superconformal(Sampler& s, int L) {
    const int k = L - 2;
    auto poly = [&](std::optional<Parity> p, bool body, int degree) {
        SuperPolynomial out(L, 0);
        for (int e = 0; e <= degree; ++e)
            out += SuperPolynomial::power(L, 0, s.supernumber(L, k, p, body, 2), e);
        return RSF(out.with_odd_count(2));
    };
    RSF z = RSF::z(L, 2);
    RSF f = z * s.nonzero_scalar() + RSF::scalar(L, 2, s.scalar()) + poly(Parity::Even, false, 2);
    RSF gp = RSF::scalar(L, 2, s.nonzero_scalar()) + poly(Parity::Even, false, 1);
    RSF pp = s.coin(0.8) ? poly(Parity::Odd, false, 2) : RSF(L, 2);
    RSF pm = s.coin(0.8) ? poly(Parity::Odd, false, 2) : RSF(L, 2);
    RSF gm = (f.derivative_z() - pp.derivative_z() * pm + pp * pm.derivative_z()) / gp;
    return {f, gp, gm, pp, pm};
}

}  // namespace superconf
