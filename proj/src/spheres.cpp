#include "superconf/spheres.hpp"

#include <array>
#include <cstdlib>

#include "superconf/errors.hpp"

namespace superconf {

namespace {

using RSF = RationalSuperfunction;

RSF K(const Supernumber& s) { return RSF::constant(s.generators(), 2, s); }
RSF Z(int L) { return RSF::z(L, 2); }
RSF C(int L, const GaussianRational& v) { return RSF::scalar(L, 2, v); }

// Σ coeffs[j] z^j
RSF power_sum(int L, const std::vector<Supernumber>& coeffs) {
    SuperPolynomial p(L, 2);
    for (std::size_t j = 0; j < coeffs.size(); ++j)
        p += SuperPolynomial::power(L, 2, coeffs[j], static_cast<int>(j));
    return RSF(p);
}

std::vector<Supernumber> zeros(int L, int k) { return std::vector<Supernumber>(static_cast<std::size_t>(k), Supernumber(L)); }

bool is_even_within(const Supernumber& x, int k) { return x.is_even() && x.within(k); }
bool is_odd_within(const Supernumber& x, int k) { return x.is_odd() && x.within(k); }

// Body Möbius coefficients (a, b, c, d) of a component f, up to a common scale.
std::array<GaussianRational, 4> body_mobius(const RSF& f) {
    RSF reduced = RSF::scalar_ratio(f.generators(), 2, f.body_numerator(), f.denominator());
    const Poly& p = reduced.body_numerator();
    const Poly& q = reduced.denominator();
    if (p.degree() > 1 || q.degree() > 1) throw NotInFamily("body of f is not a Möbius transformation");
    return {p.coeff(1), p.coeff(0), q.coeff(1), q.coeff(0)};
}

bool is_power_of(const Poly& den, const std::optional<GaussianRational>& root) {
    if (den.degree() == 0) return true;
    if (!root) return false;
    return den == Poly::linear_factor(*root).pow(static_cast<unsigned>(den.degree()));
}

std::vector<std::string> pole_violations(const SuperconformalMap& m, const std::optional<GaussianRational>& root,
                                         const char* chart) {
    std::vector<std::string> out;
    const std::pair<const char*, const RSF*> named[] = {
        {"f", &m.f}, {"g+", &m.g_plus}, {"g-", &m.g_minus}, {"psi+", &m.psi_plus}, {"psi-", &m.psi_minus}};
    for (const auto& [name, c] : named)
        if (!is_power_of(c->denominator(), root))
            out.push_back(std::string(chart) + " " + name + " has a pole outside the allowed point");
    return out;
}

std::optional<Supernumber> grassmann_sqrt(const Supernumber& x) {
    auto r = exact_sqrt(x.body());
    if (!r || r->is_zero()) return std::nullopt;
    return x.sqrt_with_body(*r);
}

// Coefficients of a θ-free polynomial component up to max_degree; NotInFamily otherwise.
std::vector<Supernumber> poly_coeffs(const RSF& r, int max_degree, const std::string& what) {
    if (!r.is_polynomial()) throw NotInFamily(what + " has an unexpected denominator");
    if (!r.is_zero() && r.numerator().max_exponent() > max_degree)
        throw NotInFamily(what + " has degree above " + std::to_string(max_degree));
    std::vector<Supernumber> out;
    for (int e = 0; e <= max_degree; ++e) out.push_back(r.numerator().coefficient(e, 0));
    return out;
}

Supernumber constant_of(const RSF& r, const std::string& what) { return poly_coeffs(r, 0, what)[0]; }

bool needs_flip(const Supernumber& a, const Supernumber& b, const Supernumber& c, const Supernumber& d) {
    for (const Supernumber* x : {&d, &c, &b, &a}) {
        GaussianRational v = x->body();
        if (v.is_zero()) continue;
        if (sgn(v.re()) != 0) return sgn(v.re()) < 0;
        return sgn(v.im()) < 0;
    }
    return false;
}

}  // namespace

SuperconformalMap sphere_transition(int n, int L) {
    RSF z = Z(L);
    RSF i = C(L, GaussianRational::i());
    return {z.inverse(), i * z.pow(n - 1), i * z.pow(-n - 1), RSF(L, 2), RSF(L, 2)};
}

SuperSphere make_sphere(int n, int L) { return {n, sphere_transition(n, L)}; }

std::pair<int, int> psi_counts(int n) {
    if (n == 0) return {2, 2};
    if (n == 1) return {1, 3};
    if (n == -1) return {3, 1};
    if (n >= 2) return {0, n + 2};
    return {-n + 2, 0};
}

void validate_params(const AutomorphismParams& p) {
    const int L = p.generators();
    if (L < 2) throw InvalidParams("need at least two generators");
    const int k = L - 2;
    for (const Supernumber* x : {&p.b, &p.c, &p.d, &p.eps})
        if (x->generators() != L) throw InvalidParams("parameters over different generator counts");
    for (const auto& [name, x] : {std::pair{"a", &p.a}, {"b", &p.b}, {"c", &p.c}, {"d", &p.d}, {"eps", &p.eps}})
        if (!is_even_within(*x, k)) throw InvalidParams(std::string(name) + " must be even in the subalgebra on L-2 generators");
    if (!(p.a * p.d - p.b * p.c == Supernumber(L, 1))) throw InvalidParams("ad - bc must equal 1");
    if (p.eps.body().is_zero()) throw InvalidParams("eps must be invertible");
    auto [np, nm] = psi_counts(p.n);
    if (static_cast<int>(p.psi_plus.size()) != np || static_cast<int>(p.psi_minus.size()) != nm)
        throw InvalidParams("psi coefficient counts do not match the regime of n = " + std::to_string(p.n));
    for (const auto* v : {&p.psi_plus, &p.psi_minus})
        for (const auto& x : *v) {
            if (x.generators() != L) throw InvalidParams("parameters over different generator counts");
            if (!is_odd_within(x, k)) throw InvalidParams("psi coefficients must be odd in the subalgebra on L-2 generators");
        }
    if (p.n == 0) {
        if (p.eps_minus.generators() != L || !is_even_within(p.eps_minus, k) || p.eps_minus.body().is_zero())
            throw InvalidParams("eps- must be even and invertible");
        const auto &pp = p.psi_plus, &pm = p.psi_minus;
        Supernumber rhs = Supernumber(L, 1) - pp[1] * pm[0] - pm[1] * pp[0];
        if (!(p.eps * p.eps_minus == rhs)) throw InvalidParams("eps+ eps- must equal 1 - psi1+ psi0- - psi1- psi0+");
    }
}

SphereAutomorphism aut_build(const AutomorphismParams& p) {
    validate_params(p);
    const int L = p.generators();
    const int n = p.n;
    RSF z = Z(L);
    RSF lin = K(p.c) * z + K(p.d);
    RSF inv = lin.inverse();
    SuperconformalMap m;
    m.f = (K(p.a) * z + K(p.b)) * inv;
    if (n == 0) {
        const auto &pp = p.psi_plus, &pm = p.psi_minus;
        m.psi_plus = power_sum(L, pp) * inv;
        m.psi_minus = power_sum(L, pm) * inv;
        Supernumber q11 = pp[1] * pm[1];
        Supernumber core = pp[0] * pm[0] * p.c - (pp[1] * pm[0] - pm[1] * pp[0]) * p.d;
        Supernumber quartic = q11 * pp[0] * pm[0] * p.d;
        auto g = [&](const Supernumber& e, int sign) {
            GaussianRational s(sign);
            Supernumber fcoef = e * q11 * p.d * (-s);
            Supernumber hcoef = e * (core - quartic * s) * s;
            return K(e) * inv + (K(fcoef) * z + K(hcoef)) * inv * inv;
        };
        m.g_plus = g(p.eps, 1);
        m.g_minus = g(p.eps_minus, -1);
    } else if (n == 1 || n == -1) {
        // The regime with a constant odd parameter on one side and a quadratic numerator on the other.
        const auto& quad = n == 1 ? p.psi_minus : p.psi_plus;
        const Supernumber& lone = n == 1 ? p.psi_plus[0] : p.psi_minus[0];
        RSF quadratic = power_sum(L, quad) * inv * inv;
        RSF correction = (K(quad[2] * p.d * GaussianRational(2)) * z - K(quad[1]) * (K(p.c) * z - K(p.d)) -
                          K(quad[0] * p.c * GaussianRational(2))) *
                         inv.pow(3) * K(p.eps.inverse());
        RSF main = (K(p.eps) * lin * lin).inverse();
        if (n == 1) {
            m.psi_plus = K(lone);
            m.psi_minus = quadratic;
            m.g_plus = K(p.eps);
            m.g_minus = main + K(lone) * correction;
        } else {
            m.psi_plus = quadratic;
            m.psi_minus = K(lone);
            m.g_plus = main - correction * K(lone);
            m.g_minus = K(p.eps);
        }
    } else if (n >= 2) {
        m.psi_plus = RSF(L, 2);
        m.psi_minus = power_sum(L, p.psi_minus) * inv.pow(n + 1);
        m.g_plus = K(p.eps) * lin.pow(n - 1);
        m.g_minus = K(p.eps.inverse()) * lin.pow(-n - 1);
    } else {
        m.psi_plus = power_sum(L, p.psi_plus) * inv.pow(-n + 1);
        m.psi_minus = RSF(L, 2);
        m.g_plus = K(p.eps.inverse()) * lin.pow(n - 1);
        m.g_minus = K(p.eps) * lin.pow(-n - 1);
    }
    return {n, m};
}

SuperconformalMap tilde_formulas(const SuperconformalMap& s, int n) {
    const int L = s.generators();
    RSF z = Z(L);
    RSF zinv = z.inverse();
    std::vector<RSF> keep{RSF::theta(L, 2, Odd::Plus), RSF::theta(L, 2, Odd::Minus)};
    auto at_inv = [&](const RSF& h) { return h.substitute(zinv, keep); };
    RSF F = at_inv(s.f);
    RSF pp = at_inv(s.psi_plus), pm = at_inv(s.psi_minus);
    RSF minus_i = C(L, -GaussianRational::i());
    SuperconformalMap t;
    t.f = F.inverse();
    t.psi_plus = minus_i * pp * F.pow(n - 1);
    t.psi_minus = minus_i * pm * F.pow(-n - 1);
    t.g_plus = z.pow(n - 1) * at_inv(s.g_plus) * F.pow(n - 2) * (F - pp * pm * GaussianRational(n - 1));
    t.g_minus = z.pow(-n - 1) * at_inv(s.g_minus) * F.pow(-n - 2) * (F - pp * pm * GaussianRational(n + 1));
    return t;
}

std::vector<std::string> southern_pole_violations(const SuperconformalMap& south) {
    auto [a, b, c, d] = body_mobius(south.f);
    std::optional<GaussianRational> root;
    if (!c.is_zero()) root = -d / c;
    return pole_violations(south, root, "southern");
}

std::vector<std::string> northern_pole_violations(const SuperconformalMap& north, const SuperconformalMap& south) {
    auto [a, b, c, d] = body_mobius(south.f);
    std::optional<GaussianRational> root;
    if (!b.is_zero()) root = -a / b;
    return pole_violations(north, root, "northern");
}

NorthernView aut_to_north(const SphereAutomorphism& t) {
    const int L = t.southern.generators();
    SuperconformalMap in = sphere_transition(t.n, L);
    SuperconformalMap in_inv = sc_invert(in);
    NorthernView v;
    v.north = sc_compose(in_inv, sc_compose(t.southern, in));
    v.closed_form = tilde_formulas(t.southern, t.n);
    const std::pair<const char*, RSF SuperconformalMap::*> parts[] = {
        {"f", &SuperconformalMap::f},
        {"g+", &SuperconformalMap::g_plus},
        {"g-", &SuperconformalMap::g_minus},
        {"psi+", &SuperconformalMap::psi_plus},
        {"psi-", &SuperconformalMap::psi_minus}};
    for (const auto& [name, member] : parts)
        if (!(v.north.*member == v.closed_form.*member)) v.formula_mismatches.push_back(name);
    v.pole_violations = southern_pole_violations(t.southern);
    for (auto& s : northern_pole_violations(v.north, t.southern)) v.pole_violations.push_back(std::move(s));
    return v;
}

AutomorphismParams aut_validate(const SuperconformalMap& m, int n) {
    SuperconformalDiagnosis diag = sc_check(m);
    if (!diag) throw NotInFamily("not superconformal: " + diag.summary());
    const int L = m.generators();
    RSF z = Z(L);

    // f' = (cz + d)^{-2}, so 1/f' = c²z² + 2cdz + d².
    RSF fp = m.f.derivative_z();
    if (!fp.has_nonzero_body()) throw NotInFamily("f' vanishes at the body level");
    std::vector<Supernumber> sq = poly_coeffs(fp.inverse(), 2, "1/f'");
    Supernumber c, d;
    if (!sq[2].body().is_zero()) {
        auto root = grassmann_sqrt(sq[2]);
        if (!root) throw NotInFamily("c^2 has no exact square root");
        c = *root;
        d = sq[1] * (c * GaussianRational(2)).inverse();
    } else {
        auto root = grassmann_sqrt(sq[0]);
        if (!root) throw NotInFamily("d^2 has no exact square root or vanishes");
        d = *root;
        c = sq[1] * (d * GaussianRational(2)).inverse();
    }
    std::vector<Supernumber> ab = poly_coeffs(m.f * (K(c) * z + K(d)), 1, "f (cz + d)");
    Supernumber a = ab[1], b = ab[0];
    if (!(a * d - b * c == Supernumber(L, 1))) throw NotInFamily("f is not (az + b)/(cz + d) with ad - bc = 1");
    if (needs_flip(a, b, c, d)) {
        a = -a;
        b = -b;
        c = -c;
        d = -d;
    }

    AutomorphismParams p;
    p.n = n;
    p.a = a;
    p.b = b;
    p.c = c;
    p.d = d;
    p.eps_minus = Supernumber(L);
    RSF lin = K(c) * z + K(d);
    auto [np, nm] = psi_counts(n);
    auto read_psi = [&](const RSF& psi, int count, const char* what) {
        if (count == 0) {
            if (!psi.is_zero()) throw NotInFamily(std::string(what) + " must vanish for n = " + std::to_string(n));
            return std::vector<Supernumber>{};
        }
        int power = count - 1;
        return poly_coeffs(psi * lin.pow(power), count - 1, std::string(what) + " times (cz + d)^" + std::to_string(power));
    };
    p.psi_plus = read_psi(m.psi_plus, np, "psi+");
    p.psi_minus = read_psi(m.psi_minus, nm, "psi-");

    if (n >= 2) {
        p.eps = constant_of(m.g_plus * lin.pow(1 - n), "g+ (cz + d)^(1-n)");
    } else if (n <= -2) {
        p.eps = constant_of(m.g_minus * lin.pow(n + 1), "g- (cz + d)^(n+1)");
    } else if (n == 1) {
        p.eps = constant_of(m.g_plus, "g+");
    } else if (n == -1) {
        p.eps = constant_of(m.g_minus, "g-");
    } else {
        const auto &pp = p.psi_plus, &pm = p.psi_minus;
        Supernumber q11 = pp[1] * pm[1];
        Supernumber core = pp[0] * pm[0] * c - (pp[1] * pm[0] - pm[1] * pp[0]) * d;
        Supernumber quartic = q11 * pp[0] * pm[0] * d;
        auto solve = [&](const RSF& g, int sign, const char* what) {
            GaussianRational s(sign);
            std::vector<Supernumber> k = poly_coeffs(g * lin * lin, 1, std::string(what) + " (cz + d)^2");
            Supernumber u1 = c - q11 * d * s;
            Supernumber u0 = d + (core - quartic * s) * s;
            if (!u0.body().is_zero()) return k[0] * u0.inverse();
            if (!u1.body().is_zero()) return k[1] * u1.inverse();
            throw NotInFamily(std::string(what) + " cannot be solved for eps");
        };
        p.eps = solve(m.g_plus, 1, "g+");
        p.eps_minus = solve(m.g_minus, -1, "g-");
    }

    SphereAutomorphism rebuilt;
    try {
        rebuilt = aut_build(p);
    } catch (const InvalidParams& e) {
        throw NotInFamily(std::string("recovered parameters are invalid: ") + e.what());
    }
    if (!(rebuilt.southern == m)) throw NotInFamily("components do not match the family for n = " + std::to_string(n));
    return p;
}

SphereAutomorphism aut_compose(const SphereAutomorphism& t2, const SphereAutomorphism& t1) {
    if (t2.n != t1.n) throw InvalidParams("aut_compose: automorphisms of different spheres");
    SuperconformalMap m = sc_compose(t2.southern, t1.southern);
    aut_validate(m, t1.n);
    return {t1.n, m};
}

SphereAutomorphism aut_inverse(const SphereAutomorphism& t) {
    SuperconformalMap m = sc_invert(t.southern);
    aut_validate(m, t.n);
    return {t.n, m};
}

GroupElement group_identity(int L) { return {Supernumber(L, 1), Supernumber(L), Supernumber(L), Supernumber(L, 1), Supernumber(L, 1)}; }

GroupElement group_multiply(const GroupElement& x, const GroupElement& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d, x.eps * y.eps};
}

GroupElement group_inverse(const GroupElement& x) { return {x.d, -x.b, -x.c, x.a, x.eps.inverse()}; }

SphereAutomorphism group_action(int n, const GroupElement& al) {
    const int L = al.a.generators();
    if (!(al.a * al.d - al.b * al.c == Supernumber(L, 1))) throw InvalidParams("ad - bc must equal 1");
    if (al.eps.body().is_zero()) throw InvalidParams("eps must be invertible");
    RSF z = Z(L);
    RSF lin = K(al.c) * z + K(al.d);
    SuperconformalMap m{(K(al.a) * z + K(al.b)) / lin, K(al.eps) * lin.pow(n - 1), K(al.eps.inverse()) * lin.pow(-n - 1),
                        RSF(L, 2), RSF(L, 2)};
    return {n, m};
}

AutomorphismParams action_params(int n, const GroupElement& al) {
    const int L = al.a.generators();
    AutomorphismParams p;
    p.n = n;
    p.a = al.a;
    p.b = al.b;
    p.c = al.c;
    p.d = al.d;
    p.eps = n <= -1 ? al.eps.inverse() : al.eps;
    p.eps_minus = n == 0 ? al.eps.inverse() : Supernumber(L);
    auto [np, nm] = psi_counts(n);
    p.psi_plus = zeros(L, np);
    p.psi_minus = zeros(L, nm);
    return p;
}

bool kernel_check(int n, const GroupElement& alpha, const GroupElement& beta) {
    return group_action(n, alpha) == group_action(n, beta);
}

bool in_kernel(int n, const GroupElement& x) {
    const int L = x.a.generators();
    GroupElement id = group_identity(L);
    if (x == id) return true;
    Supernumber m1(L, -1);
    GroupElement flip{m1, Supernumber(L), Supernumber(L), m1, std::abs(n) % 2 == 0 ? m1 : Supernumber(L, 1)};
    return x == flip;
}

SphereAutomorphism odd_translation(int n, const std::vector<Supernumber>& coeffs) {
    if (std::abs(n) < 2) throw InvalidParams("odd translations are defined for |n| >= 2");
    if (static_cast<int>(coeffs.size()) != std::abs(n) + 2)
        throw InvalidParams("odd translation needs |n| + 2 coefficients");
    const int L = coeffs.front().generators();
    for (const auto& x : coeffs)
        if (x.generators() != L || !is_odd_within(x, L - 2))
            throw InvalidParams("odd translation coefficients must be odd in the subalgebra on L-2 generators");
    std::vector<Supernumber> by_power(coeffs.rbegin(), coeffs.rend());
    RSF psi = power_sum(L, by_power);
    SuperconformalMap m = SuperconformalMap::identity(L);
    (n >= 2 ? m.psi_minus : m.psi_plus) = psi;
    return {n, m};
}

std::vector<Supernumber> conjugated_translation(int n, const GroupElement& al, const std::vector<Supernumber>& coeffs) {
    const int L = al.a.generators();
    const int top = std::abs(n) + 1;
    SuperPolynomial z = SuperPolynomial::z(L, 2);
    auto k = [&](const Supernumber& s) { return SuperPolynomial::constant(L, 2, s); };
    SuperPolynomial num = k(al.d) * z - k(al.b);
    SuperPolynomial den = k(al.a) - k(al.c) * z;
    SuperPolynomial sum(L, 2);
    for (int j = 0; j <= top; ++j)
        sum += k(coeffs[static_cast<std::size_t>(top - j)]) * num.pow(static_cast<unsigned>(j)) * den.pow(static_cast<unsigned>(top - j));
    Supernumber weight = n >= 2 ? al.eps.inverse() : al.eps;
    sum = k(weight) * sum;
    std::vector<Supernumber> out;
    for (int e = top; e >= 0; --e) out.push_back(sum.coefficient(e, 0));
    return out;
}

void normalize_determinant(Supernumber& a, Supernumber& b, Supernumber& c, Supernumber& d) {
    Supernumber det = a * d - b * c;
    if (!det.body().is_one()) throw InvalidParams("determinant body must be 1 for exact normalization");
    Supernumber r = det.sqrt_with_body(GaussianRational(1)).inverse();
    a = a * r;
    b = b * r;
    c = c * r;
    d = d * r;
}

GroupElement random_group_element(Sampler& s, int L, bool with_souls) {
    const int k = L - 2;
    // body: product of a few elementary SL(2) matrices
    std::array<GaussianRational, 4> m{GaussianRational(1), GaussianRational(0), GaussianRational(0), GaussianRational(1)};
    int steps = s.uniform(1, 3);
    for (int i = 0; i < steps; ++i) {
        std::array<GaussianRational, 4> e{GaussianRational(1), GaussianRational(0), GaussianRational(0), GaussianRational(1)};
        switch (s.uniform(0, 3)) {
            case 0: e[1] = s.nonzero_scalar(); break;
            case 1: e[2] = s.nonzero_scalar(); break;
            case 2: {
                GaussianRational t = s.nonzero_scalar();
                e[0] = t;
                e[3] = t.inverse();
                break;
            }
            default: e = {GaussianRational(0), GaussianRational(-1), GaussianRational(1), GaussianRational(0)}; break;
        }
        m = {m[0] * e[0] + m[1] * e[2], m[0] * e[1] + m[1] * e[3], m[2] * e[0] + m[3] * e[2], m[2] * e[1] + m[3] * e[3]};
    }
    auto soul = [&]() { return with_souls ? s.supernumber(L, k, Parity::Even, false, 2) : Supernumber(L); };
    Supernumber a = Supernumber(L, m[0]) + soul(), b = Supernumber(L, m[1]) + soul(), c = Supernumber(L, m[2]) + soul(),
                d = Supernumber(L, m[3]) + soul();
    Supernumber one(L, 1);
    if (!a.body().is_zero())
        d = (one + b * c) * a.inverse();
    else if (!d.body().is_zero())
        a = (one + b * c) * d.inverse();
    else
        c = (a * d - one) * b.inverse();
    Supernumber eps = Supernumber(L, s.nonzero_scalar()) + soul();
    return {a, b, c, d, eps};
}

std::vector<Supernumber> random_odd_vector(Sampler& s, int length, int L) {
    std::vector<Supernumber> out;
    for (int i = 0; i < length; ++i) out.push_back(s.coin(0.75) ? s.supernumber(L, L - 2, Parity::Odd, false, 2) : Supernumber(L));
    return out;
}

AutomorphismParams random_params(Sampler& s, int n, int L) {
    GroupElement g = random_group_element(s, L);
    AutomorphismParams p = action_params(n, g);
    auto [np, nm] = psi_counts(n);
    p.psi_plus = random_odd_vector(s, np, L);
    p.psi_minus = random_odd_vector(s, nm, L);
    if (n == 0) {
        const auto &pp = p.psi_plus, &pm = p.psi_minus;
        Supernumber rhs = Supernumber(L, 1) - pp[1] * pm[0] - pm[1] * pp[0];
        p.eps_minus = rhs * p.eps.inverse();
    }
    return p;
}

}  // namespace superconf
