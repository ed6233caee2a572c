#include "superconf/json_io.hpp"

#include "superconf/errors.hpp"

namespace superconf::json_io {

namespace {

using GR = GaussianRational;

Json coefficient(const GR& c) { return {{"re", Rational(c.re()).get_str()}, {"im", Rational(c.im()).get_str()}}; }

GR read_coefficient(const Json& j) {
    try {
        Rational re(j.at("re").get<std::string>()), im(j.at("im").get<std::string>());
        re.canonicalize();
        im.canonicalize();
        return GR(re, im);
    } catch (const Json::exception& e) {
        throw ParseError(std::string("coefficient: ") + e.what());
    } catch (const std::invalid_argument&) {
        throw ParseError("coefficient: not a rational");
    }
}

Json labels(Mask zeta) {
    Json out = Json::array();
    const MultiIndex idx = MultiIndex::from_mask(zeta);
    for (int k : idx.labels()) out.push_back(k);
    return out;
}

Mask read_labels(const Json& j) {
    std::vector<int> ls;
    for (const auto& v : j) ls.push_back(v.get<int>());
    return MultiIndex(ls).mask();
}

template <class F>
auto guarded(const char* what, F&& f) {
    try {
        return f();
    } catch (const Json::exception& e) {
        throw ParseError(std::string(what) + ": " + e.what());
    }
}

}  // namespace

Json to_json(const Supernumber& x) {
    Json out = Json::array();
    for (const auto& [m, c] : x.terms()) {
        Json t{{"index", labels(m)}};
        t.update(coefficient(c));
        out.push_back(std::move(t));
    }
    return out;
}

Supernumber supernumber_from_json(int generators, const Json& j) {
    return guarded("supernumber", [&] {
        Supernumber x(generators);
        for (const auto& t : j) x += Supernumber::monomial(generators, MultiIndex::from_mask(read_labels(t.at("index"))),
                                                           read_coefficient(t));
        return x;
    });
}

Json to_json(const SuperPolynomial& p) {
    Json out = Json::array();
    for (const auto& [m, poly] : p.terms()) {
        Json theta = Json::array();
        if (m & theta_bit(Odd::Plus)) theta.push_back("+");
        if (m & theta_bit(Odd::Minus)) theta.push_back("-");
        for (int e = poly.low(); e <= poly.high(); ++e) {
            GR c = poly.coeff(e);
            if (c.is_zero()) continue;
            Json t{{"theta", theta}, {"z", e}, {"index", labels(combined_to_zeta(m))}};
            t.update(coefficient(c));
            out.push_back(std::move(t));
        }
    }
    return out;
}

SuperPolynomial superpolynomial_from_json(int generators, int odd_count, const Json& j) {
    return guarded("superpolynomial", [&] {
        SuperPolynomial::Terms terms;
        for (const auto& t : j) {
            Mask theta = 0;
            for (const auto& s : t.at("theta")) {
                std::string sym = s.get<std::string>();
                if (sym == "+") theta |= theta_bit(Odd::Plus);
                else if (sym == "-" && odd_count == 2) theta |= theta_bit(Odd::Minus);
                else throw ParseError("superpolynomial: bad theta symbol '" + sym + "'");
            }
            Mask m = theta | zeta_to_combined(read_labels(t.at("index")));
            terms[m] += Poly::monomial(read_coefficient(t), t.at("z").get<int>());
        }
        return SuperPolynomial::from_terms(generators, odd_count, terms);
    });
}

Json to_json(const RationalSuperfunction& f) {
    Json den = Json::array();
    const Poly& d = f.denominator();
    for (int e = d.low(); e <= d.high(); ++e)
        if (!d.coeff(e).is_zero()) {
            Json t{{"z", e}};
            t.update(coefficient(d.coeff(e)));
            den.push_back(std::move(t));
        }
    return {{"numerator", to_json(f.numerator())}, {"denominator", den}};
}

RationalSuperfunction superfunction_from_json(int generators, int odd_count, const Json& j) {
    return guarded("superfunction", [&] {
        Poly den;
        for (const auto& t : j.at("denominator")) den += Poly::monomial(read_coefficient(t), t.at("z").get<int>());
        if (den.is_zero()) throw ParseError("superfunction: zero denominator");
        return RationalSuperfunction(superpolynomial_from_json(generators, odd_count, j.at("numerator")), den);
    });
}

Json to_json(const SuperconformalMap& m) {
    return {{"generators", m.generators()}, {"f", to_json(m.f)},         {"g+", to_json(m.g_plus)},
            {"g-", to_json(m.g_minus)},     {"psi+", to_json(m.psi_plus)}, {"psi-", to_json(m.psi_minus)}};
}

SuperconformalMap map_from_json(const Json& j) {
    return guarded("map", [&] {
        const int L = j.at("generators").get<int>();
        auto comp = [&](const char* key) { return superfunction_from_json(L, 2, j.at(key)); };
        return SuperconformalMap{comp("f"), comp("g+"), comp("g-"), comp("psi+"), comp("psi-")};
    });
}

Json to_json(const AutomorphismParams& p) {
    Json psi_plus = Json::array(), psi_minus = Json::array();
    for (const auto& x : p.psi_plus) psi_plus.push_back(to_json(x));
    for (const auto& x : p.psi_minus) psi_minus.push_back(to_json(x));
    Json j{{"n", p.n}, {"generators", p.generators()}, {"a", to_json(p.a)}, {"b", to_json(p.b)},
           {"c", to_json(p.c)}, {"d", to_json(p.d)}, {"eps", to_json(p.eps)}};
    if (p.n == 0) j["eps-"] = to_json(p.eps_minus);
    j["psi+"] = psi_plus;
    j["psi-"] = psi_minus;
    return j;
}

AutomorphismParams params_from_json(const Json& j) {
    return guarded("params", [&] {
        const int L = j.at("generators").get<int>();
        auto num = [&](const Json& v) { return supernumber_from_json(L, v); };
        AutomorphismParams p;
        p.n = j.at("n").get<int>();
        p.a = num(j.at("a"));
        p.b = num(j.at("b"));
        p.c = num(j.at("c"));
        p.d = num(j.at("d"));
        p.eps = num(j.at("eps"));
        p.eps_minus = j.contains("eps-") ? num(j.at("eps-")) : Supernumber(L);
        for (const auto& v : j.at("psi+")) p.psi_plus.push_back(num(v));
        for (const auto& v : j.at("psi-")) p.psi_minus.push_back(num(v));
        return p;
    });
}

Json validation_report(const SuperconformalMap& m, int n) {
    try {
        return {{"n", n}, {"status", "in-family"}, {"params", to_json(aut_validate(m, n))}};
    } catch (const NotInFamily& e) {
        return {{"n", n}, {"status", "not-in-family"}, {"reason", e.what()}};
    }
}

Json to_json(const NSElement& e) {
    Json out = Json::array();
    for (const auto& [s, c] : e.terms()) {
        Json t{{"symbol", s.to_string()}};
        t.update(coefficient(c));
        out.push_back(std::move(t));
    }
    return out;
}

NSElement ns_element_from_json(const Json& j) {
    return guarded("ns element", [&] {
        NSElement e;
        for (const auto& t : j) e += NSElement(NSBasisSymbol::parse(t.at("symbol").get<std::string>()), read_coefficient(t));
        return e;
    });
}

Json bracket_table(int band) {
    if (band < 1) throw InvalidParams("band must be at least 1");
    Json entries = Json::array();
    auto basis = ns_band_basis(band);
    for (const auto& a : basis)
        for (const auto& b : basis)
            entries.push_back({{"left", a.to_string()}, {"right", b.to_string()}, {"bracket", to_json(ns_bracket(a, b))}});
    return {{"band", band}, {"entries", entries}};
}

std::vector<std::string> bracket_table_mismatches(const Json& table) {
    return guarded("bracket table", [&] {
        std::vector<std::string> out;
        for (const auto& e : table.at("entries")) {
            auto a = NSBasisSymbol::parse(e.at("left").get<std::string>());
            auto b = NSBasisSymbol::parse(e.at("right").get<std::string>());
            if (ns_element_from_json(e.at("bracket")) != ns_bracket(a, b))
                out.push_back("[" + a.to_string() + ", " + b.to_string() + "]");
        }
        return out;
    });
}

Json to_json(const std::vector<Discrepancy>& ledger) {
    Json out = Json::array();
    for (const auto& d : ledger) out.push_back({{"pair", d.pair}, {"expected", d.expected}, {"got", d.got}});
    return out;
}

}  // namespace superconf::json_io
