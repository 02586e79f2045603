#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <string>
#include <vector>

#include "vknot/error.hpp"

namespace vknot {

using BigInt = boost::multiprecision::cpp_int;

// Laurent polynomial over the integers: a map exponent -> coefficient with no
// stored zero coefficients.  Equality is coefficient-wise.
class LaurentPolynomial {
public:
    LaurentPolynomial() = default;

    static LaurentPolynomial monomial(BigInt coeff, int exponent) {
        LaurentPolynomial p;
        if (coeff != 0) p.terms_[exponent] = std::move(coeff);
        return p;
    }

    static LaurentPolynomial one() { return monomial(1, 0); }

    bool is_zero() const { return terms_.empty(); }

    // Unit of the Laurent ring: +-t^k.
    bool is_unit() const {
        return terms_.size() == 1 &&
               (terms_.begin()->second == 1 || terms_.begin()->second == -1);
    }

    const std::map<int, BigInt>& terms() const { return terms_; }

    BigInt coeff(int exponent) const {
        auto it = terms_.find(exponent);
        return it == terms_.end() ? BigInt(0) : it->second;
    }

    int min_exponent() const { return terms_.begin()->first; }   // pre: !is_zero()
    int max_exponent() const { return terms_.rbegin()->first; }  // pre: !is_zero()

    LaurentPolynomial& operator+=(const LaurentPolynomial& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }

    LaurentPolynomial& operator-=(const LaurentPolynomial& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }

    friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) {
        a += b;
        return a;
    }

    friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) {
        a -= b;
        return a;
    }

    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        LaurentPolynomial r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
        return r;
    }

    LaurentPolynomial operator-() const {
        LaurentPolynomial r;
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }

    // Multiply by t^k.
    LaurentPolynomial shifted(int k) const {
        LaurentPolynomial r;
        for (const auto& [e, c] : terms_) r.terms_[e + k] = c;
        return r;
    }

    // Shift so the lowest exponent is 0 and make the leading (highest
    // exponent) coefficient positive.  Zero stays zero.
    LaurentPolynomial normalized() const {
        if (is_zero()) return {};
        LaurentPolynomial r = shifted(-min_exponent());
        if (r.terms_.rbegin()->second < 0) return -r;
        return r;
    }

    friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

    // Text form: terms "c*t^k" with exponents descending, joined by " + ";
    // negative coefficients carry a leading '-'; the zero polynomial is "0".
    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            if (!out.empty()) out += " + ";
            out += it->second.str() + "*t^" + std::to_string(it->first);
        }
        return out;
    }

private:
    void add_term(int e, const BigInt& c) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (c != 0) terms_[e] = c;
            return;
        }
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }

    std::map<int, BigInt> terms_;
};

namespace detail {

// Dense Z[t] helpers used by gcd and exact division.  Coefficient vectors are
// low-to-high with a nonzero back (or empty for zero).

inline std::vector<BigInt> to_dense(const LaurentPolynomial& p) {
    if (p.is_zero()) return {};
    int lo = p.min_exponent(), hi = p.max_exponent();
    std::vector<BigInt> v(static_cast<size_t>(hi - lo + 1));
    for (const auto& [e, c] : p.terms()) v[static_cast<size_t>(e - lo)] = c;
    return v;
}

inline LaurentPolynomial from_dense(const std::vector<BigInt>& v, int shift = 0) {
    LaurentPolynomial p;
    for (size_t i = 0; i < v.size(); i++)
        p += LaurentPolynomial::monomial(v[i], static_cast<int>(i) + shift);
    return p;
}

inline void strip(std::vector<BigInt>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

inline BigInt int_gcd(BigInt a, BigInt b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        BigInt r = a % b;
        a = b;
        b = r;
    }
    return a;
}

inline BigInt content(const std::vector<BigInt>& v) {
    BigInt g = 0;
    for (const auto& c : v) g = int_gcd(g, c);
    return g;
}

inline std::vector<BigInt> scaled_down(std::vector<BigInt> v, const BigInt& d) {
    for (auto& c : v) c /= d;
    return v;
}

// Pseudo-remainder of a by b (deg a >= deg b >= 0, b nonzero):
// lc(b)^(deg a - deg b + 1) * a  mod b.
inline std::vector<BigInt> pseudo_rem(std::vector<BigInt> a, const std::vector<BigInt>& b) {
    const BigInt& lead = b.back();
    int db = static_cast<int>(b.size()) - 1;
    while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
        int shift = static_cast<int>(a.size()) - 1 - db;
        BigInt q = a.back();
        for (auto& c : a) c *= lead;
        for (int i = 0; i <= db; i++) a[static_cast<size_t>(i + shift)] -= q * b[static_cast<size_t>(i)];
        strip(a);
    }
    return a;
}

// gcd in Z[t] via content/primitive split and pseudo-remainder Euclid.
inline std::vector<BigInt> poly_gcd_z(std::vector<BigInt> a, std::vector<BigInt> b) {
    strip(a);
    strip(b);
    if (a.empty()) return b;
    if (b.empty()) return a;
    BigInt ca = content(a), cb = content(b);
    std::vector<BigInt> pa = scaled_down(a, ca), pb = scaled_down(b, cb);
    if (pa.size() < pb.size()) pa.swap(pb);
    while (!pb.empty()) {
        std::vector<BigInt> r = pseudo_rem(pa, pb);
        strip(r);
        if (!r.empty()) r = scaled_down(r, content(r));
        pa = std::move(pb);
        pb = std::move(r);
    }
    BigInt g = int_gcd(ca, cb);
    for (auto& c : pa) c *= g;
    return pa;
}

} // namespace detail

// gcd up to units, returned normalized (lowest exponent 0, positive leading
// coefficient).  gcd(0, 0) = 0.
inline LaurentPolynomial laurent_gcd(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    if (a.is_zero()) return b.normalized();
    if (b.is_zero()) return a.normalized();
    auto g = detail::poly_gcd_z(detail::to_dense(a), detail::to_dense(b));
    return detail::from_dense(g).normalized();
}

// Exact division; throws std::logic_error if the quotient is not in the ring.
// Used by the fraction-free determinant, where divisibility is guaranteed.
inline LaurentPolynomial divide_exact(const LaurentPolynomial& num, const LaurentPolynomial& den) {
    if (den.is_zero()) throw std::logic_error("divide_exact: zero divisor");
    if (num.is_zero()) return {};
    std::vector<BigInt> a = detail::to_dense(num);
    std::vector<BigInt> b = detail::to_dense(den);
    int shift = num.min_exponent() - den.min_exponent();
    std::vector<BigInt> q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
    while (a.size() >= b.size() && !a.empty()) {
        if (a.back() % b.back() != 0)
            throw std::logic_error("divide_exact: inexact division");
        BigInt qc = a.back() / b.back();
        size_t pos = a.size() - b.size();
        q[pos] = qc;
        for (size_t i = 0; i < b.size(); i++) a[pos + i] -= qc * b[i];
        detail::strip(a);
    }
    if (!a.empty()) throw std::logic_error("divide_exact: inexact division");
    return detail::from_dense(q, shift);
}

} // namespace vknot
