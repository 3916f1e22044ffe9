#include "gl11/coords.hpp"

namespace gl11 {

EdgeCoords::EdgeCoords(GrassmannNumber a_, GrassmannNumber b_, GrassmannNumber alpha_,
                       GrassmannNumber beta_)
    : a(std::move(a_)), b(std::move(b_)), alpha(std::move(alpha_)), beta(std::move(beta_)) {
    int n = a.generator_count();
    if (b.generator_count() != n || alpha.generator_count() != n || beta.generator_count() != n)
        throw std::invalid_argument("EdgeCoords entries disagree on generator_count");
    if (!a.is_even() || !b.is_even() || !alpha.is_odd() || !beta.is_odd())
        throw std::invalid_argument("EdgeCoords parity violation (a, b even; alpha, beta odd)");
    if (a.body() <= 0 || b.body() <= 0)
        throw std::invalid_argument("EdgeCoords requires positive bodies for a and b");
}

EdgeCoords EdgeCoords::identity(int n) {
    return EdgeCoords(GrassmannNumber::one(n), GrassmannNumber::one(n), GrassmannNumber::zero(n),
                      GrassmannNumber::zero(n));
}

std::string EdgeCoords::to_string() const {
    return "(" + a.to_string() + ", " + b.to_string() + "; " + alpha.to_string() + ", " +
           beta.to_string() + ")";
}

EdgeCoords compose(const EdgeCoords& x, const EdgeCoords& y) {
    int n = x.generator_count();
    const Rat half(1, 2);
    GrassmannNumber one = GrassmannNumber::one(n);
    GrassmannNumber f1 = one - half * (x.beta * y.alpha);
    GrassmannNumber f2 = one - half * (x.b * x.b * y.b * y.b * x.alpha * y.beta);
    return EdgeCoords(x.a * y.a * f1 * f2, x.b * y.b,
                      x.alpha + ginv(x.b * x.b) * y.alpha,
                      ginv(y.b * y.b) * x.beta + y.beta);
}

EdgeCoords cinv(const EdgeCoords& x) {
    GrassmannNumber b2 = x.b * x.b;
    return EdgeCoords(ginv(x.a), ginv(x.b), -(b2 * x.alpha), -(b2 * x.beta));
}

Supermatrix to_matrix(const EdgeCoords& x) {
    int n = x.generator_count();
    const Rat half(1, 2);
    GrassmannNumber one = GrassmannNumber::one(n);
    GrassmannNumber b2ab = x.b * x.b * x.alpha * x.beta;
    GrassmannNumber ab = x.a * x.b;
    return Supermatrix(x.a * ginv(x.b) * (one - half * b2ab), ab * x.alpha, ab * x.beta,
                       ab * (one + half * b2ab));
}

EdgeCoords from_matrix(const Supermatrix& m) {
    if (!m.is_gl11())
        throw std::domain_error("from_matrix: matrix not in the identity component");
    int n = m.generator_count();
    const Rat half(1, 2);
    // Gaussian data: alpha, beta read off directly; b^2 = q/p, a^2 = p q (1 + b^2 al be / 2)^-2
    GaussianFactors f = gaussian_decompose(m);
    GrassmannNumber alpha = f.upper;
    GrassmannNumber beta = f.lower;
    GrassmannNumber b = gsqrt(f.diag_b * ginv(f.diag_a));
    GrassmannNumber corr = GrassmannNumber::one(n) + half * (b * b * alpha * beta);
    GrassmannNumber a = gsqrt(f.diag_a * f.diag_b) * ginv(corr);
    return EdgeCoords(a, b, alpha, beta);
}

HatCoords to_hat(const EdgeCoords& x) {
    int n = x.generator_count();
    const Rat half(1, 2);
    GrassmannNumber b2 = x.b * x.b;
    GrassmannNumber corr = GrassmannNumber::one(n) - half * (x.alpha * b2 * x.beta);
    return HatCoords{x.a * ginv(corr), x.b, x.alpha, b2 * x.beta};
}

EdgeCoords from_hat(const HatCoords& h) {
    int n = h.a_hat.generator_count();
    const Rat half(1, 2);
    GrassmannNumber corr = GrassmannNumber::one(n) - half * (h.alpha_hat * h.beta_hat);
    return EdgeCoords(h.a_hat * corr, h.b_hat, h.alpha_hat, ginv(h.b_hat * h.b_hat) * h.beta_hat);
}

}  // namespace gl11
