#include "gl11/supermatrix.hpp"

namespace gl11 {

Supermatrix::Supermatrix(GrassmannNumber a, GrassmannNumber alpha, GrassmannNumber beta,
                         GrassmannNumber b)
    : a_(std::move(a)), alpha_(std::move(alpha)), beta_(std::move(beta)), b_(std::move(b)) {
    int n = a_.generator_count();
    if (alpha_.generator_count() != n || beta_.generator_count() != n || b_.generator_count() != n)
        throw std::invalid_argument("supermatrix entries disagree on generator_count");
}

Supermatrix Supermatrix::even(GrassmannNumber a, GrassmannNumber alpha, GrassmannNumber beta,
                              GrassmannNumber b) {
    Supermatrix m(std::move(a), std::move(alpha), std::move(beta), std::move(b));
    if (!m.is_format_even())
        throw std::invalid_argument("parity violation: expected even diagonal, odd off-diagonal");
    return m;
}

Supermatrix Supermatrix::odd(GrassmannNumber a, GrassmannNumber alpha, GrassmannNumber beta,
                             GrassmannNumber b) {
    Supermatrix m(std::move(a), std::move(alpha), std::move(beta), std::move(b));
    if (!m.is_format_odd())
        throw std::invalid_argument("parity violation: expected odd diagonal, even off-diagonal");
    return m;
}

Supermatrix Supermatrix::identity(int n) {
    return Supermatrix(GrassmannNumber::one(n), GrassmannNumber::zero(n), GrassmannNumber::zero(n),
                       GrassmannNumber::one(n));
}

Supermatrix Supermatrix::zero(int n) {
    return Supermatrix(GrassmannNumber::zero(n), GrassmannNumber::zero(n),
                       GrassmannNumber::zero(n), GrassmannNumber::zero(n));
}

Supermatrix Supermatrix::gen_E(int n) { return identity(n); }

Supermatrix Supermatrix::gen_N(int n) {
    return Supermatrix(GrassmannNumber::scalar(n, Rat(1, 2)), GrassmannNumber::zero(n),
                       GrassmannNumber::zero(n), GrassmannNumber::scalar(n, Rat(-1, 2)));
}

Supermatrix Supermatrix::gen_psi_plus(int n) {
    return Supermatrix(GrassmannNumber::zero(n), GrassmannNumber::one(n), GrassmannNumber::zero(n),
                       GrassmannNumber::zero(n));
}

Supermatrix Supermatrix::gen_psi_minus(int n) {
    return Supermatrix(GrassmannNumber::zero(n), GrassmannNumber::zero(n), GrassmannNumber::one(n),
                       GrassmannNumber::zero(n));
}

bool Supermatrix::is_format_even() const {
    return a_.is_even() && b_.is_even() && alpha_.is_odd() && beta_.is_odd();
}

bool Supermatrix::is_format_odd() const {
    return a_.is_odd() && b_.is_odd() && alpha_.is_even() && beta_.is_even();
}

bool Supermatrix::is_gl11() const {
    return is_format_even() && a_.body() > 0 && b_.body() > 0;
}

Supermatrix Supermatrix::operator-() const { return Supermatrix(-a_, -alpha_, -beta_, -b_); }

Supermatrix operator+(const Supermatrix& x, const Supermatrix& y) {
    return Supermatrix(x.a_ + y.a_, x.alpha_ + y.alpha_, x.beta_ + y.beta_, x.b_ + y.b_);
}

Supermatrix operator-(const Supermatrix& x, const Supermatrix& y) {
    return Supermatrix(x.a_ - y.a_, x.alpha_ - y.alpha_, x.beta_ - y.beta_, x.b_ - y.b_);
}

Supermatrix operator*(const GrassmannNumber& s, const Supermatrix& x) {
    return Supermatrix(s * x.a_, s * x.alpha_, s * x.beta_, s * x.b_);
}

bool Supermatrix::operator==(const Supermatrix& rhs) const {
    return a_ == rhs.a_ && alpha_ == rhs.alpha_ && beta_ == rhs.beta_ && b_ == rhs.b_;
}

std::string Supermatrix::to_string() const {
    return "[[" + a_.to_string() + ", " + alpha_.to_string() + "], [" + beta_.to_string() + ", " +
           b_.to_string() + "]]";
}

Supermatrix smul(const Supermatrix& x, const Supermatrix& y) {
    // (X*Y)_{ij} = sum_k Y_{kj} . X_{ik}
    return Supermatrix(y.a() * x.a() + y.beta() * x.alpha(),
                       y.alpha() * x.a() + y.b() * x.alpha(),
                       y.a() * x.beta() + y.beta() * x.b(),
                       y.alpha() * x.beta() + y.b() * x.b());
}

Supermatrix sinv(const Supermatrix& x) {
    if (!x.is_gl11())
        throw std::domain_error("sinv: matrix not in the identity component of GL(1|1)");
    int n = x.generator_count();
    GaussianFactors f = gaussian_decompose(x);
    // X = U D L  =>  X^-1 = L^-1 D^-1 U^-1
    Supermatrix li(GrassmannNumber::one(n), GrassmannNumber::zero(n), -f.lower,
                   GrassmannNumber::one(n));
    Supermatrix di(ginv(f.diag_a), GrassmannNumber::zero(n), GrassmannNumber::zero(n),
                   ginv(f.diag_b));
    Supermatrix ui(GrassmannNumber::one(n), -f.upper, GrassmannNumber::zero(n),
                   GrassmannNumber::one(n));
    return smul(smul(li, di), ui);
}

GrassmannNumber supertrace(const Supermatrix& x) { return x.a() - x.b(); }

GaussianFactors gaussian_decompose(const Supermatrix& x) {
    if (x.b().body() == 0)
        throw std::domain_error("gaussian_decompose: bottom-right entry not invertible");
    GrassmannNumber ib = ginv(x.b());
    return GaussianFactors{x.alpha() * ib, x.a() + x.alpha() * x.beta() * ib, x.b(),
                           x.beta() * ib};
}

Supermatrix gaussian_recompose(const GaussianFactors& f) {
    int n = f.diag_b.generator_count();
    Supermatrix u(GrassmannNumber::one(n), f.upper, GrassmannNumber::zero(n),
                  GrassmannNumber::one(n));
    Supermatrix d(f.diag_a, GrassmannNumber::zero(n), GrassmannNumber::zero(n), f.diag_b);
    Supermatrix l(GrassmannNumber::one(n), GrassmannNumber::zero(n), f.lower,
                  GrassmannNumber::one(n));
    return smul(smul(u, d), l);
}

Supermatrix lie_bracket(const Supermatrix& x, int parity_x, const Supermatrix& y, int parity_y) {
    bool fmt_ok = (parity_x == 0 && x.is_format_even()) || (parity_x == 1 && x.is_format_odd());
    bool fmt_ok_y = (parity_y == 0 && y.is_format_even()) || (parity_y == 1 && y.is_format_odd());
    if (!fmt_ok || !fmt_ok_y)
        throw std::invalid_argument("lie_bracket: inputs not homogeneous of the declared parity");
    Supermatrix xy = smul(x, y);
    Supermatrix yx = smul(y, x);
    return (parity_x & parity_y) ? xy + yx : xy - yx;
}

}  // namespace gl11
