#pragma once

#include <algorithm>
#include <sstream>
#include <utility>
#include <vector>

#include "bunpoly/core.hpp"

namespace bunpoly {

// Truncated formal power series in one variable t over exact integers.
// coeffs()[i] is the coefficient of t^i; every operation truncates at an
// explicit cap (inclusive) and is exact below it.
class UniSeries {
public:
    UniSeries() : coeffs_(1) {}

    explicit UniSeries(int cap) {
        check_cap(cap);
        coeffs_.assign(static_cast<std::size_t>(cap) + 1, Int(0));
    }

    UniSeries(std::vector<Int> coeffs, int cap) {
        check_cap(cap);
        coeffs.resize(static_cast<std::size_t>(cap) + 1, Int(0));
        coeffs_ = std::move(coeffs);
    }

    static UniSeries one(int cap) { return constant(1, cap); }

    static UniSeries constant(Int c, int cap) {
        UniSeries s(cap);
        s.coeffs_[0] = std::move(c);
        return s;
    }

    // (1 + t^k)^e; coefficients are binomial numbers.
    static UniSeries binomial_power(int k, int e, int cap) {
        if (k < 1) throw std::invalid_argument("binomial_power: monomial exponent must be >= 1");
        if (e < 0) throw std::invalid_argument("binomial_power: power must be >= 0");
        UniSeries s(cap);
        for (int j = 0; j <= e && k * j <= cap; ++j) s.coeffs_[static_cast<std::size_t>(k) * j] = binomial(e, j);
        return s;
    }

    int cap() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Int& operator[](int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
    Int& at(int i) { return coeffs_[static_cast<std::size_t>(i)]; }
    const std::vector<Int>& coeffs() const { return coeffs_; }

    bool operator==(const UniSeries&) const = default;

    // Largest degree with a nonzero coefficient (0 for the zero series).
    int degree() const {
        for (int i = cap(); i > 0; --i)
            if (coeffs_[static_cast<std::size_t>(i)] != 0) return i;
        return 0;
    }

    UniSeries truncated(int new_cap) const {
        if (new_cap > cap()) throw std::invalid_argument("truncated: new cap exceeds current cap");
        check_cap(new_cap);
        return UniSeries(std::vector<Int>(coeffs_.begin(), coeffs_.begin() + new_cap + 1), new_cap);
    }

    // Zero-pads up to new_cap. Only meaningful when the series is a genuine
    // polynomial of degree <= cap (construction-calculus use).
    UniSeries extended(int new_cap) const {
        if (new_cap < cap()) throw std::invalid_argument("extended: new cap below current cap");
        return UniSeries(coeffs_, new_cap);
    }

    // Multiplication by t^k, truncated at out_cap. out_cap may exceed cap():
    // the shift of a series exact to degree cap() is exact to cap() + k.
    UniSeries shifted(int k, int out_cap) const {
        if (k < 0) throw std::invalid_argument("shifted: negative shift");
        if (out_cap > cap() + k) throw std::invalid_argument("shifted: out cap exceeds known degrees");
        UniSeries s(out_cap);
        for (int i = 0; i + k <= out_cap && i <= cap(); ++i) s.coeffs_[static_cast<std::size_t>(i + k)] = coeffs_[static_cast<std::size_t>(i)];
        return s;
    }

    UniSeries& operator+=(const UniSeries& o) {
        require_same_cap(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        return *this;
    }

    UniSeries& operator-=(const UniSeries& o) {
        require_same_cap(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        return *this;
    }

    friend UniSeries operator+(UniSeries a, const UniSeries& b) { return a += b; }
    friend UniSeries operator-(UniSeries a, const UniSeries& b) { return a -= b; }

    UniSeries& scale(const Int& c) {
        for (auto& x : coeffs_) x *= c;
        return *this;
    }

    // Exact value at s in {-1, +1}. The caller is responsible for knowing the
    // series is a genuine polynomial within its cap.
    Int eval_at(int s) const {
        if (s != 1 && s != -1) throw std::invalid_argument("eval_at: s must be -1 or +1");
        Int v = 0;
        for (int i = 0; i <= cap(); ++i) {
            if (s == 1 || i % 2 == 0)
                v += coeffs_[static_cast<std::size_t>(i)];
            else
                v -= coeffs_[static_cast<std::size_t>(i)];
        }
        return v;
    }

    bool vanishes_above(int deg) const {
        for (int i = std::max(deg + 1, 0); i <= cap(); ++i)
            if (coeffs_[static_cast<std::size_t>(i)] != 0) return false;
        return true;
    }

    // coeffs[i] == coeffs[n-i] for 0 <= i <= n, zero above n.
    bool is_palindrome(int n) const {
        if (n < 0 || n > cap()) throw std::invalid_argument("is_palindrome: need 0 <= n <= cap");
        if (!vanishes_above(n)) return false;
        for (int i = 0; 2 * i <= n; ++i)
            if (coeffs_[static_cast<std::size_t>(i)] != coeffs_[static_cast<std::size_t>(n - i)]) return false;
        return true;
    }

    bool nonnegative() const {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Int& c) { return c >= 0; });
    }

    std::string str() const {
        std::ostringstream os;
        bool first = true;
        for (int i = 0; i <= cap(); ++i) {
            const Int& c = coeffs_[static_cast<std::size_t>(i)];
            if (c == 0) continue;
            if (!first) os << (c > 0 ? " + " : " - ");
            else if (c < 0) os << "-";
            Int a = abs(c);
            if (a != 1 || i == 0) os << a.str();
            if (i >= 1) os << (a != 1 ? "*t" : "t");
            if (i >= 2) os << "^" << i;
            first = false;
        }
        if (first) os << "0";
        return os.str();
    }

private:
    static void check_cap(int cap) {
        if (cap < 0) throw std::invalid_argument("series cap must be >= 0");
    }
    void require_same_cap(const UniSeries& o) const {
        if (o.cap() != cap()) throw std::invalid_argument("series caps must match");
    }

    std::vector<Int> coeffs_;
};

// Exact product truncated at cap; requires both operands to be valid at least
// up to cap.
inline UniSeries mul(const UniSeries& a, const UniSeries& b, int cap) {
    if (cap > a.cap() || cap > b.cap()) throw std::invalid_argument("mul: cap exceeds operand caps");
    UniSeries r(cap);
    for (int i = 0; i <= cap; ++i) {
        const Int& ai = a[i];
        if (ai == 0) continue;
        for (int j = 0; i + j <= cap; ++j) {
            if (b[j] != 0) r.at(i + j) += ai * b[j];
        }
    }
    return r;
}

inline UniSeries operator*(const UniSeries& a, const UniSeries& b) {
    return mul(a, b, std::min(a.cap(), b.cap()));
}

// a * (1 - t^k)^m, truncated at cap. For m < 0 this multiplies by the
// geometric expansion 1/(1-t^k)^|m|, computed exactly. Each factor is a
// single in-place sweep:
//   * (1 - t^k):   c[i] -= c[i-k], descending i (reads untouched entries)
//   * 1/(1 - t^k): c[i] += c[i-k], ascending i  (reads updated entries)
inline UniSeries geom_factor(const UniSeries& a, int k, int m, int cap) {
    if (k < 1) throw std::invalid_argument("geom_factor: monomial exponent must be >= 1");
    if (cap > a.cap()) throw std::invalid_argument("geom_factor: cap exceeds operand cap");
    UniSeries r = a.truncated(cap);
    for (int rep = 0; rep < m; ++rep)
        for (int i = cap; i >= k; --i) r.at(i) -= r[i - k];
    for (int rep = 0; rep < -m; ++rep)
        for (int i = k; i <= cap; ++i) r.at(i) += r[i - k];
    return r;
}

// Series quotient num/den up to num.cap, requiring every coefficient step to
// divide exactly; verified by re-multiplying. Used for the fixed-determinant
// factorizations, where a failure means an upstream bug, hence internal_error.
inline UniSeries exact_div(const UniSeries& num, const UniSeries& den) {
    if (den[0] == 0) throw std::invalid_argument("exact_div: divisor constant term is zero");
    const int cap = num.cap();
    UniSeries q(cap);
    std::vector<Int> rem(num.coeffs());
    for (int i = 0; i <= cap; ++i) {
        Int quot, r;
        divide_qr(rem[static_cast<std::size_t>(i)], den[0], quot, r);
        if (r != 0) throw internal_error("exact_div: non-exact division at degree " + std::to_string(i));
        q.at(i) = quot;
        if (quot != 0)
            for (int k = 1; k <= den.cap() && i + k <= cap; ++k) rem[static_cast<std::size_t>(i + k)] -= quot * den[k];
    }
    if (mul(q, den.cap() >= cap ? den : den.extended(cap), cap) != num)
        throw internal_error("exact_div: quotient check failed");
    return q;
}

}  // namespace bunpoly
