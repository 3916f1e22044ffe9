#pragma once

#include "gl11/grassmann.hpp"

#include <array>

namespace gl11 {

// 2x2 supermatrix [[a, alpha], [beta, b]] over the Grassmann algebra.
//
// The product follows the paper's sign convention, realized entrywise as
// (X*Y)_{ij} = sum_k Y_{kj} . X_{ik} (reverse-order Grassmann products).
// On matrices in GL(1|1) format (even diagonal, odd off-diagonal) this is
// the displayed formula (ac-αδ, aγ+dα; cβ+bδ, bd-βγ) with the bottom-left
// entry corrected to cβ+bδ, the unique associative completion; on
// real-entried generator matrices it is ordinary matrix multiplication.
class Supermatrix {
public:
    Supermatrix() = default;

    // Unchecked entries; use even()/odd() to enforce a format parity.
    Supermatrix(GrassmannNumber a, GrassmannNumber alpha, GrassmannNumber beta, GrassmannNumber b);

    // Format-even supermatrix: diagonal entries even, off-diagonal odd.
    static Supermatrix even(GrassmannNumber a, GrassmannNumber alpha, GrassmannNumber beta,
                            GrassmannNumber b);
    // Format-odd supermatrix: diagonal entries odd, off-diagonal even.
    static Supermatrix odd(GrassmannNumber a, GrassmannNumber alpha, GrassmannNumber beta,
                           GrassmannNumber b);

    static Supermatrix identity(int gen_count);
    static Supermatrix zero(int gen_count);

    // Defining representation of gl(1|1).
    static Supermatrix gen_E(int gen_count);
    static Supermatrix gen_N(int gen_count);
    static Supermatrix gen_psi_plus(int gen_count);
    static Supermatrix gen_psi_minus(int gen_count);

    const GrassmannNumber& a() const { return a_; }
    const GrassmannNumber& alpha() const { return alpha_; }
    const GrassmannNumber& beta() const { return beta_; }
    const GrassmannNumber& b() const { return b_; }
    int generator_count() const { return a_.generator_count(); }

    bool is_format_even() const;
    bool is_format_odd() const;
    // Identity component of GL(1|1): format-even with positive-body diagonal.
    bool is_gl11() const;

    Supermatrix operator-() const;
    friend Supermatrix operator+(const Supermatrix& x, const Supermatrix& y);
    friend Supermatrix operator-(const Supermatrix& x, const Supermatrix& y);
    friend Supermatrix operator*(const GrassmannNumber& s, const Supermatrix& x);

    bool operator==(const Supermatrix& rhs) const;
    bool operator!=(const Supermatrix& rhs) const { return !(*this == rhs); }

    std::string to_string() const;

private:
    GrassmannNumber a_, alpha_, beta_, b_;
};

Supermatrix smul(const Supermatrix& x, const Supermatrix& y);

// Group inverse in the identity component.
Supermatrix sinv(const Supermatrix& x);

GrassmannNumber supertrace(const Supermatrix& x);

struct GaussianFactors {
    GrassmannNumber upper;  // alpha / b
    GrassmannNumber diag_a;  // a + alpha beta / b
    GrassmannNumber diag_b;  // b
    GrassmannNumber lower;  // beta / b
};

// Unique factorization X = [[1,u],[0,1]] [[p,0],[0,q]] [[1,0],[l,1]];
// requires invertible bottom-right entry.
GaussianFactors gaussian_decompose(const Supermatrix& x);
Supermatrix gaussian_recompose(const GaussianFactors& f);

// Super-commutator X Y - (-1)^{|X||Y|} Y X of homogeneous supermatrices
// with declared parities (0 even, 1 odd).
Supermatrix lie_bracket(const Supermatrix& x, int parity_x, const Supermatrix& y, int parity_y);

}  // namespace gl11
