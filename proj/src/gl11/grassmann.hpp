#pragma once

#include "gl11/rational.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace gl11 {

// A multi-index beta_[i1] beta_[i2] ... (i1 < i2 < ...) stored as a bitmask:
// bit k set  <=>  generator k+1 appears. The empty mask is the unit monomial.
using MultiIndex = std::uint64_t;

enum class Parity { even, odd, mixed };

inline int index_weight(MultiIndex m) { return __builtin_popcountll(m); }

// Koszul sign for merging two disjoint sorted multi-indices; 0 on collision.
int merge_sign(MultiIndex a, MultiIndex b);

// Element of the real Grassmann algebra on N generators with exact rational
// coefficients, kept canonical (no zero coefficients, indices within range).
class GrassmannNumber {
public:
    GrassmannNumber() : gen_count_(0) {}
    explicit GrassmannNumber(int gen_count, const Rat& scalar = Rat(0));

    static GrassmannNumber zero(int gen_count) { return GrassmannNumber(gen_count); }
    static GrassmannNumber one(int gen_count) { return GrassmannNumber(gen_count, Rat(1)); }
    static GrassmannNumber scalar(int gen_count, const Rat& q) { return GrassmannNumber(gen_count, q); }
    // beta_[i], 1-based
    static GrassmannNumber generator(int gen_count, int i);
    static GrassmannNumber monomial(int gen_count, MultiIndex idx, const Rat& coeff);

    int generator_count() const { return gen_count_; }
    const std::map<MultiIndex, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rat body() const;
    GrassmannNumber soul() const;
    GrassmannNumber even_part() const;
    GrassmannNumber odd_part() const;
    Parity parity() const;
    bool is_even() const { return parity() != Parity::odd && parity() != Parity::mixed; }
    bool is_odd() const { return terms_.empty() || parity() == Parity::odd; }

    Rat coefficient(MultiIndex idx) const;

    GrassmannNumber operator-() const;
    GrassmannNumber& operator+=(const GrassmannNumber& rhs);
    GrassmannNumber& operator-=(const GrassmannNumber& rhs);

    friend GrassmannNumber operator+(GrassmannNumber lhs, const GrassmannNumber& rhs) {
        lhs += rhs;
        return lhs;
    }
    friend GrassmannNumber operator-(GrassmannNumber lhs, const GrassmannNumber& rhs) {
        lhs -= rhs;
        return lhs;
    }
    friend GrassmannNumber operator*(const GrassmannNumber& lhs, const GrassmannNumber& rhs);
    friend GrassmannNumber operator*(const Rat& q, GrassmannNumber x);

    bool operator==(const GrassmannNumber& rhs) const {
        return gen_count_ == rhs.gen_count_ && terms_ == rhs.terms_;
    }
    bool operator!=(const GrassmannNumber& rhs) const { return !(*this == rhs); }

    // Total order (generator count, then termwise); used for canonical maps.
    bool operator<(const GrassmannNumber& rhs) const;

    std::string to_string() const;
    static GrassmannNumber from_string(int gen_count, const std::string& s);

private:
    void check_compatible(const GrassmannNumber& rhs) const;
    void insert(MultiIndex idx, const Rat& coeff);

    int gen_count_;
    std::map<MultiIndex, Rat> terms_;
};

GrassmannNumber gmul(const GrassmannNumber& x, const GrassmannNumber& y);
GrassmannNumber gadd(const GrassmannNumber& x, const GrassmannNumber& y);
GrassmannNumber gscale(const Rat& q, const GrassmannNumber& x);

// Multiplicative inverse; requires nonzero body (terminating geometric series).
GrassmannNumber ginv(const GrassmannNumber& x);

// Square root with positive body; the body must be a perfect rational square.
GrassmannNumber gsqrt(const GrassmannNumber& x);

// x^k for integer k (negative k uses ginv).
GrassmannNumber gpow(const GrassmannNumber& x, long k);

}  // namespace gl11
