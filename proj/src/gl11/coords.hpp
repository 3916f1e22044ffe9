#pragma once

#include "gl11/supermatrix.hpp"

namespace gl11 {

// The (a, b; alpha, beta) chart on the identity component of GL(1|1).
struct EdgeCoords {
    GrassmannNumber a, b, alpha, beta;

    EdgeCoords() = default;
    EdgeCoords(GrassmannNumber a_, GrassmannNumber b_, GrassmannNumber alpha_,
               GrassmannNumber beta_);

    static EdgeCoords identity(int gen_count);
    int generator_count() const { return a.generator_count(); }

    bool operator==(const EdgeCoords& rhs) const {
        return a == rhs.a && b == rhs.b && alpha == rhs.alpha && beta == rhs.beta;
    }
    bool operator!=(const EdgeCoords& rhs) const { return !(*this == rhs); }

    std::string to_string() const;
};

// Group product in coordinates (the paper's closed formula):
// (a,b;al,be)(c,d;ga,de) = (ac(1-be.ga/2)(1-b^2 d^2 al.de/2), bd; al + b^-2 ga, d^-2 be + de)
EdgeCoords compose(const EdgeCoords& x, const EdgeCoords& y);

// (a,b;al,be)^-1 = (a^-1, b^-1; -b^2 al, -b^2 be); involutive.
EdgeCoords cinv(const EdgeCoords& x);

// The supermatrix a.b^-1(1-b^2 al be/2) / a.b.al / a.b.be / a.b(1+b^2 al be/2);
// a group isomorphism onto the identity component (validated by tests against
// smul/sinv and the one-parameter-subgroup factorizations).
Supermatrix to_matrix(const EdgeCoords& x);

// Two-sided inverse of to_matrix; requires the recovered b^2, a^2 to have
// rational-square bodies (always true for matrices produced by this library).
EdgeCoords from_matrix(const Supermatrix& m);

// The rearranged one-parameter-subgroup chart of the Poisson section:
// g(a,b;al,be) = ahat U(alhat) L(behat) diag(bhat^-1, bhat).
struct HatCoords {
    GrassmannNumber a_hat, b_hat, alpha_hat, beta_hat;
    bool operator==(const HatCoords& rhs) const {
        return a_hat == rhs.a_hat && b_hat == rhs.b_hat && alpha_hat == rhs.alpha_hat &&
               beta_hat == rhs.beta_hat;
    }
};

HatCoords to_hat(const EdgeCoords& x);
EdgeCoords from_hat(const HatCoords& h);

}  // namespace gl11
