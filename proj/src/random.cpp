#include "superconf/random.hpp"

namespace superconf {

int Sampler::uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

bool Sampler::coin(double p) { return std::bernoulli_distribution(p)(rng_); }

GaussianRational Sampler::scalar() {
    Rational re(uniform(-3, 3), uniform(1, 2));
    Rational im = coin(0.3) ? Rational(uniform(-2, 2), uniform(1, 2)) : Rational(0);
    re.canonicalize();
    im.canonicalize();
    return {re, im};
}

GaussianRational Sampler::nonzero_scalar() {
    for (;;) {
        GaussianRational c = scalar();
        if (!c.is_zero()) return c;
    }
}

GaussianRational Sampler::nonzero_real() {
    for (;;) {
        Rational re(uniform(-3, 3), uniform(1, 2));
        re.canonicalize();
        if (sgn(re) != 0) return GaussianRational(re);
    }
}

Supernumber Sampler::supernumber(int generators, int max_label, std::optional<Parity> parity, bool with_body,
                                 int max_terms) {
    Supernumber::Terms terms;
    if (max_label > 0) {
        int count = uniform(0, max_terms);
        Mask full = (Mask{1} << max_label) - 1;
        for (int k = 0; k < count; ++k) {
            Mask m = static_cast<Mask>(uniform(1, static_cast<int>(full)));
            if (parity && parity_of_mask(m) != *parity) continue;
            terms[m] = nonzero_scalar();
        }
    }
    if (with_body && (!parity || *parity == Parity::Even) && coin(0.7)) terms[0] = nonzero_scalar();
    return Supernumber::from_terms(generators, terms);
}

SuperPolynomial Sampler::superpolynomial(int generators, int odd_count, int max_label, std::optional<Parity> parity,
                                         int max_degree, int max_terms) {
    SuperPolynomial out(generators, odd_count);
    int count = uniform(1, max_terms);
    Mask theta_full = (Mask{1} << odd_count) - 1;
    for (int k = 0; k < count; ++k) {
        Mask th = static_cast<Mask>(uniform(0, static_cast<int>(theta_full)));
        std::optional<Parity> want;
        if (parity) want = *parity + parity_of_mask(th);
        Supernumber c = supernumber(generators, max_label, want, true, 2);
        if (c.is_zero()) c = want == Parity::Odd && max_label > 0 ? Supernumber::generator(generators, uniform(1, max_label))
                                                                 : Supernumber(generators, nonzero_scalar());
        if (want == Parity::Odd && max_label == 0) continue;
        SuperPolynomial mono = SuperPolynomial::power(generators, odd_count, c, uniform(0, max_degree));
        for (int b = 0; b < odd_count; ++b)
            if (th & (Mask{1} << b)) mono = SuperPolynomial::theta(generators, odd_count, static_cast<Odd>(b)) * mono;
        out += mono;
    }
    return out;
}

}  // namespace superconf
