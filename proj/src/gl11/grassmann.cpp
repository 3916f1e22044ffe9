#include "gl11/grassmann.hpp"

#include <sstream>

namespace gl11 {

int merge_sign(MultiIndex a, MultiIndex b) {
    if (a & b) return 0;
    // parity of #{(i,j) : i in a, j in b, i > j}
    int inversions = 0;
    MultiIndex rest = a;
    while (b) {
        MultiIndex low = b & -b;  // lowest set bit of b
        inversions += __builtin_popcountll(rest & ~(low - 1) & ~low);
        b ^= low;
    }
    return (inversions & 1) ? -1 : 1;
}

GrassmannNumber::GrassmannNumber(int gen_count, const Rat& scalar) : gen_count_(gen_count) {
    if (gen_count < 0 || gen_count > 64)
        throw std::invalid_argument("generator count must be in [0, 64]");
    if (scalar != 0) terms_[0] = scalar;
}

GrassmannNumber GrassmannNumber::generator(int gen_count, int i) {
    if (i < 1 || i > gen_count)
        throw std::invalid_argument("generator index out of range");
    return monomial(gen_count, MultiIndex(1) << (i - 1), Rat(1));
}

GrassmannNumber GrassmannNumber::monomial(int gen_count, MultiIndex idx, const Rat& coeff) {
    GrassmannNumber x(gen_count);
    if (gen_count < 64 && (idx >> gen_count) != 0)
        throw std::invalid_argument("multi-index uses generators beyond generator_count");
    if (coeff != 0) x.terms_[idx] = coeff;
    return x;
}

Rat GrassmannNumber::body() const {
    auto it = terms_.find(0);
    return it == terms_.end() ? Rat(0) : it->second;
}

GrassmannNumber GrassmannNumber::soul() const {
    GrassmannNumber r(gen_count_);
    for (const auto& [k, v] : terms_)
        if (k != 0) r.terms_[k] = v;
    return r;
}

GrassmannNumber GrassmannNumber::even_part() const {
    GrassmannNumber r(gen_count_);
    for (const auto& [k, v] : terms_)
        if (!(index_weight(k) & 1)) r.terms_[k] = v;
    return r;
}

GrassmannNumber GrassmannNumber::odd_part() const {
    GrassmannNumber r(gen_count_);
    for (const auto& [k, v] : terms_)
        if (index_weight(k) & 1) r.terms_[k] = v;
    return r;
}

Parity GrassmannNumber::parity() const {
    bool has_even = false, has_odd = false;
    for (const auto& [k, v] : terms_)
        (index_weight(k) & 1 ? has_odd : has_even) = true;
    if (has_even && has_odd) return Parity::mixed;
    if (has_odd) return Parity::odd;
    return Parity::even;
}

Rat GrassmannNumber::coefficient(MultiIndex idx) const {
    auto it = terms_.find(idx);
    return it == terms_.end() ? Rat(0) : it->second;
}

void GrassmannNumber::check_compatible(const GrassmannNumber& rhs) const {
    if (gen_count_ != rhs.gen_count_)
        throw std::invalid_argument("mismatched generator_count");
}

void GrassmannNumber::insert(MultiIndex idx, const Rat& coeff) {
    auto it = terms_.find(idx);
    if (it == terms_.end()) {
        if (coeff != 0) terms_.emplace(idx, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

GrassmannNumber GrassmannNumber::operator-() const {
    GrassmannNumber r(gen_count_);
    for (const auto& [k, v] : terms_) r.terms_[k] = -v;
    return r;
}

GrassmannNumber& GrassmannNumber::operator+=(const GrassmannNumber& rhs) {
    check_compatible(rhs);
    for (const auto& [k, v] : rhs.terms_) insert(k, v);
    return *this;
}

GrassmannNumber& GrassmannNumber::operator-=(const GrassmannNumber& rhs) {
    check_compatible(rhs);
    for (const auto& [k, v] : rhs.terms_) insert(k, -v);
    return *this;
}

GrassmannNumber operator*(const GrassmannNumber& lhs, const GrassmannNumber& rhs) {
    lhs.check_compatible(rhs);
    GrassmannNumber r(lhs.gen_count_);
    for (const auto& [ka, va] : lhs.terms_) {
        for (const auto& [kb, vb] : rhs.terms_) {
            int s = merge_sign(ka, kb);
            if (s) r.insert(ka | kb, s > 0 ? va * vb : -va * vb);
        }
    }
    return r;
}

GrassmannNumber operator*(const Rat& q, GrassmannNumber x) {
    if (q == 0) return GrassmannNumber(x.gen_count_);
    for (auto& [k, v] : x.terms_) v *= q;
    return x;
}

bool GrassmannNumber::operator<(const GrassmannNumber& rhs) const {
    if (gen_count_ != rhs.gen_count_) return gen_count_ < rhs.gen_count_;
    return terms_ < rhs.terms_;
}

GrassmannNumber gmul(const GrassmannNumber& x, const GrassmannNumber& y) { return x * y; }
GrassmannNumber gadd(const GrassmannNumber& x, const GrassmannNumber& y) { return x + y; }
GrassmannNumber gscale(const Rat& q, const GrassmannNumber& x) { return q * x; }

GrassmannNumber ginv(const GrassmannNumber& x) {
    Rat b = x.body();
    if (b == 0) throw std::domain_error("ginv: zero body, not invertible");
    int n = x.generator_count();
    GrassmannNumber u = Rat(1) / b * x.soul();  // nilpotent: u^(n+1) = 0
    GrassmannNumber acc = GrassmannNumber::one(n);
    GrassmannNumber term = GrassmannNumber::one(n);
    for (int k = 0; k < n; ++k) {
        term = Rat(-1) * (term * u);
        if (term.is_zero()) break;
        acc += term;
    }
    return Rat(1) / b * acc;
}

GrassmannNumber gsqrt(const GrassmannNumber& x) {
    Rat b = x.body();
    if (b <= 0) throw std::domain_error("gsqrt: body must be positive");
    auto root = rational_sqrt(b);
    if (!root)
        throw std::domain_error("gsqrt: body " + rat_to_string(b) + " is not a rational square");
    int n = x.generator_count();
    GrassmannNumber u = Rat(1) / b * x.soul();
    // sqrt(b) * sum_k C(1/2, k) u^k, terminating by nilpotency
    GrassmannNumber acc = GrassmannNumber::one(n);
    GrassmannNumber upow = GrassmannNumber::one(n);
    Rat coeff(1);
    for (int k = 1; k <= n; ++k) {
        coeff *= Rat(3 - 2 * k, 2 * k);  // C(1/2,k) = C(1/2,k-1) * (1/2-k+1)/k
        upow = upow * u;
        if (upow.is_zero()) break;
        acc += coeff * upow;
    }
    return *root * acc;
}

GrassmannNumber gpow(const GrassmannNumber& x, long k) {
    GrassmannNumber base = k < 0 ? ginv(x) : x;
    GrassmannNumber r = GrassmannNumber::one(x.generator_count());
    for (long i = 0, n = k < 0 ? -k : k; i < n; ++i) r = r * base;
    return r;
}

std::string GrassmannNumber::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : terms_) {
        if (!first) os << "+";
        first = false;
        os << rat_to_string(v) << "*[";
        bool f2 = true;
        for (int i = 0; i < gen_count_; ++i) {
            if (k >> i & 1) {
                if (!f2) os << ",";
                f2 = false;
                os << (i + 1);
            }
        }
        os << "]";
    }
    return os.str();
}

GrassmannNumber GrassmannNumber::from_string(int gen_count, const std::string& s) {
    GrassmannNumber r(gen_count);
    if (s == "0" || s.empty()) return r;
    size_t pos = 0;
    while (pos < s.size()) {
        size_t star = s.find('*', pos);
        if (star == std::string::npos || star + 1 >= s.size() || s[star + 1] != '[')
            throw std::invalid_argument("bad grassmann literal near '" + s.substr(pos) + "'");
        Rat coeff = rat_from_string(s.substr(pos, star - pos));
        size_t close = s.find(']', star);
        if (close == std::string::npos)
            throw std::invalid_argument("unterminated multi-index in '" + s + "'");
        MultiIndex idx = 0;
        std::string inner = s.substr(star + 2, close - star - 2);
        size_t p = 0;
        int last = 0;
        while (p < inner.size()) {
            size_t comma = inner.find(',', p);
            std::string tok = inner.substr(p, comma == std::string::npos ? std::string::npos : comma - p);
            int i = std::stoi(tok);
            if (i <= last || i > gen_count)
                throw std::invalid_argument("multi-index not strictly increasing / out of range in '" + s + "'");
            last = i;
            idx |= MultiIndex(1) << (i - 1);
            if (comma == std::string::npos) break;
            p = comma + 1;
        }
        r.insert(idx, coeff);
        pos = close + 1;
        if (pos < s.size()) {
            if (s[pos] != '+')
                throw std::invalid_argument("expected '+' between terms in '" + s + "'");
            ++pos;
        }
    }
    return r;
}

}  // namespace gl11
