#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "bunpoly/core.hpp"
#include "bunpoly/uni_series.hpp"

namespace bunpoly {

// Truncated formal power series in two variables x, y over exact integers,
// with total-degree truncation: coefficients exist exactly for i + j <= cap.
// Storage is a dense triangle, row i holding degrees j = 0..cap-i.
class BiSeries {
public:
    BiSeries() : cap_(0), coeffs_(1) {}

    explicit BiSeries(int cap) : cap_(cap) {
        if (cap < 0) throw std::invalid_argument("series cap must be >= 0");
        coeffs_.assign(triangle_size(cap), Int(0));
    }

    static BiSeries one(int cap) {
        BiSeries s(cap);
        s.coeffs_[0] = 1;
        return s;
    }

    // (1 + x^kx y^ky)^e with kx + ky >= 1.
    static BiSeries binomial_power(int kx, int ky, int e, int cap) {
        if (kx < 0 || ky < 0 || kx + ky < 1)
            throw std::invalid_argument("binomial_power: monomial exponents must be >= 0 and not both zero");
        if (e < 0) throw std::invalid_argument("binomial_power: power must be >= 0");
        BiSeries s(cap);
        for (int j = 0; j <= e && (kx + ky) * j <= cap; ++j) s.at(kx * j, ky * j) = binomial(e, j);
        return s;
    }

    int cap() const { return cap_; }

    const Int& at(int i, int j) const { return coeffs_[index(i, j)]; }
    Int& at(int i, int j) { return coeffs_[index(i, j)]; }

    bool operator==(const BiSeries&) const = default;

    BiSeries truncated(int new_cap) const {
        if (new_cap > cap_) throw std::invalid_argument("truncated: new cap exceeds current cap");
        BiSeries s(new_cap);
        for (int i = 0; i <= new_cap; ++i)
            for (int j = 0; i + j <= new_cap; ++j) s.at(i, j) = at(i, j);
        return s;
    }

    // Multiplication by x^kx y^ky, truncated at out_cap (which may exceed
    // cap() by up to kx + ky: shifting preserves exactness degreewise).
    BiSeries shifted(int kx, int ky, int out_cap) const {
        if (kx < 0 || ky < 0) throw std::invalid_argument("shifted: negative shift");
        if (out_cap > cap_ + kx + ky) throw std::invalid_argument("shifted: out cap exceeds known degrees");
        BiSeries s(out_cap);
        for (int i = 0; i <= cap_ && i + kx <= out_cap; ++i)
            for (int j = 0; i + j <= cap_ && (i + kx) + (j + ky) <= out_cap; ++j) s.at(i + kx, j + ky) = at(i, j);
        return s;
    }

    BiSeries& operator+=(const BiSeries& o) {
        require_same_cap(o);
        for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
        return *this;
    }

    BiSeries& operator-=(const BiSeries& o) {
        require_same_cap(o);
        for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
        return *this;
    }

    friend BiSeries operator+(BiSeries a, const BiSeries& b) { return a += b; }
    friend BiSeries operator-(BiSeries a, const BiSeries& b) { return a -= b; }

    BiSeries& scale(const Int& c) {
        for (auto& x : coeffs_) x *= c;
        return *this;
    }

    bool vanishes_above(int total_deg) const {
        for (int i = 0; i <= cap_; ++i)
            for (int j = 0; i + j <= cap_; ++j)
                if (i + j > total_deg && at(i, j) != 0) return false;
        return true;
    }

    // Hodge symmetry h^{i,j} = h^{j,i} within the stored triangle.
    bool swap_symmetric() const {
        for (int i = 0; i <= cap_; ++i)
            for (int j = i + 1; i + j <= cap_; ++j)
                if (at(i, j) != at(j, i)) return false;
        return true;
    }

    bool nonnegative() const {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Int& c) { return c >= 0; });
    }

    // Exact value at (sx, sy), each in {-1, +1}; used for the signature
    // H_{(-1,1)}. The stored triangle must contain the full polynomial.
    Int eval_signs(int sx, int sy) const {
        if ((sx != 1 && sx != -1) || (sy != 1 && sy != -1))
            throw std::invalid_argument("eval_signs: signs must be -1 or +1");
        Int v = 0;
        for (int i = 0; i <= cap_; ++i)
            for (int j = 0; i + j <= cap_; ++j) {
                const Int& c = at(i, j);
                if (c == 0) continue;
                bool neg = (sx == -1 && i % 2 == 1) != (sy == -1 && j % 2 == 1);
                if (neg)
                    v -= c;
                else
                    v += c;
            }
        return v;
    }

private:
    static std::size_t triangle_size(int cap) {
        return static_cast<std::size_t>(cap + 1) * static_cast<std::size_t>(cap + 2) / 2;
    }
    std::size_t index(int i, int j) const {
        return static_cast<std::size_t>(i) * (cap_ + 1) - static_cast<std::size_t>(i) * (i - 1) / 2 +
               static_cast<std::size_t>(j);
    }
    void require_same_cap(const BiSeries& o) const {
        if (o.cap_ != cap_) throw std::invalid_argument("series caps must match");
    }

    int cap_;
    std::vector<Int> coeffs_;
};

inline BiSeries mul(const BiSeries& a, const BiSeries& b, int cap) {
    if (cap > a.cap() || cap > b.cap()) throw std::invalid_argument("mul: cap exceeds operand caps");
    BiSeries r(cap);
    for (int i1 = 0; i1 <= cap; ++i1)
        for (int j1 = 0; i1 + j1 <= cap; ++j1) {
            const Int& av = a.at(i1, j1);
            if (av == 0) continue;
            const int rem = cap - i1 - j1;
            for (int i2 = 0; i2 <= rem; ++i2)
                for (int j2 = 0; i2 + j2 <= rem; ++j2) {
                    const Int& bv = b.at(i2, j2);
                    if (bv != 0) r.at(i1 + i2, j1 + j2) += av * bv;
                }
        }
    return r;
}

inline BiSeries operator*(const BiSeries& a, const BiSeries& b) {
    return mul(a, b, std::min(a.cap(), b.cap()));
}

// a * (1 - x^kx y^ky)^m, truncated at cap; m < 0 multiplies by the geometric
// expansion, exactly. In-place sweeps as in the univariate case; iterating i
// then j monotonically keeps the read side on the correct (old/new) values
// because kx >= 0 and ky >= 0.
inline BiSeries geom_factor(const BiSeries& a, int kx, int ky, int m, int cap) {
    if (kx < 0 || ky < 0 || kx + ky < 1)
        throw std::invalid_argument("geom_factor: monomial exponents must be >= 0 and not both zero");
    if (cap > a.cap()) throw std::invalid_argument("geom_factor: cap exceeds operand cap");
    BiSeries r = a.truncated(cap);
    for (int rep = 0; rep < m; ++rep)
        for (int i = cap; i >= kx; --i)
            for (int j = cap - i; j >= ky; --j) r.at(i, j) -= r.at(i - kx, j - ky);
    for (int rep = 0; rep < -m; ++rep)
        for (int i = kx; i <= cap; ++i)
            for (int j = ky; i + j <= cap; ++j) r.at(i, j) += r.at(i - kx, j - ky);
    return r;
}

enum class Specialize { t1, tt };

// Substitution into one variable. Mode tt sets x = y = t (total-degree
// collapse); mode t1 sets x = t, y = 1 (row sums over the stored triangle).
// A t1 result is complete up to degree D only when cap >= D + (largest
// y-degree actually present); callers must size the input accordingly.
inline UniSeries specialize(const BiSeries& a, Specialize mode) {
    UniSeries u(a.cap());
    for (int i = 0; i <= a.cap(); ++i)
        for (int j = 0; i + j <= a.cap(); ++j) {
            const Int& c = a.at(i, j);
            if (c == 0) continue;
            u.at(mode == Specialize::tt ? i + j : i) += c;
        }
    return u;
}

}  // namespace bunpoly
