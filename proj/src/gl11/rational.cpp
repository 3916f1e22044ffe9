#include "gl11/rational.hpp"

namespace gl11 {

Int integer_nth_root(const Int& x, unsigned n) {
    if (x < 0) throw std::domain_error("integer_nth_root: negative radicand");
    if (n == 0) throw std::domain_error("integer_nth_root: zeroth root");
    if (x == 0 || x == 1 || n == 1) return x;
    Int lo = 0;
    Int hi = 1;
    while (boost::multiprecision::pow(hi, n) <= x) hi <<= 1;
    // invariant: lo^n <= x < hi^n
    lo = hi >> 1;
    while (hi - lo > 1) {
        Int mid = (lo + hi) / 2;
        if (boost::multiprecision::pow(mid, n) <= x)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

std::optional<Rat> rational_nth_root(const Rat& x, unsigned n) {
    if (x < 0) return std::nullopt;
    Int p = rat_num(x), q = rat_den(x);
    Int rp = integer_nth_root(p, n), rq = integer_nth_root(q, n);
    if (boost::multiprecision::pow(rp, n) != p || boost::multiprecision::pow(rq, n) != q)
        return std::nullopt;
    return Rat(rp, rq);
}

std::string rat_to_string(const Rat& q) {
    std::string s = rat_num(q).str();
    if (rat_den(q) != 1) s += "/" + rat_den(q).str();
    return s;
}

Rat rat_from_string(const std::string& s) {
    auto bad = [&]() { throw std::invalid_argument("bad rational literal: '" + s + "'"); };
    if (s.empty()) bad();
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) bad();
        return Rat(num, den);
    } catch (const std::runtime_error&) {
        bad();
    }
    return Rat();  // unreachable
}

}  // namespace gl11
