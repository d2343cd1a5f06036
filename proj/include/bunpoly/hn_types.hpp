#pragma once

#include <compare>
#include <string>
#include <vector>

#include "bunpoly/core.hpp"

namespace bunpoly {

// One block (rank, degree) of a Harder-Narasimhan type.
struct HNBlock {
    int rank;
    int degree;
    friend bool operator==(const HNBlock&, const HNBlock&) = default;
    friend std::strong_ordering operator<=>(const HNBlock&, const HNBlock&) = default;
};

// A Harder-Narasimhan type: the ordered (rank, degree) pairs of the
// successive semistable quotients of the HN filtration. Slopes d_i/r_i must
// strictly decrease; comparisons are done by integer cross-multiplication.
struct HNType {
    std::vector<HNBlock> blocks;

    int length() const { return static_cast<int>(blocks.size()); }
    friend bool operator==(const HNType&, const HNType&) = default;
    friend std::strong_ordering operator<=>(const HNType&, const HNType&) = default;

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            if (i) s += ",";
            s += "(" + std::to_string(blocks[i].rank) + "," + std::to_string(blocks[i].degree) + ")";
        }
        return s + ")";
    }
};

// Genus and number of real circles of the curve. n is used only by real
// computations, which require 1 <= n <= g+1 (Harnack-Klein bound).
struct CurveData {
    int g;
    int n;

    bool maximal() const { return n == g + 1; }
};

inline void require_genus(int g) {
    if (g < 1) throw std::invalid_argument("g must satisfy g >= 1 (got g=" + std::to_string(g) + ")");
}

inline void require_real_admissible(CurveData curve) {
    require_genus(curve.g);
    if (curve.n < 1 || curve.n > curve.g + 1)
        throw std::invalid_argument("n must satisfy 1 <= n <= g+1 (got n=" + std::to_string(curve.n) +
                                    ", g=" + std::to_string(curve.g) + ")");
}

inline void require_real_admissible(int g, int n) { require_real_admissible(CurveData{g, n}); }

// Codimension of the HN stratum of type mu in the moduli stack:
//   d_mu = sum_{i<j} (r_j d_i - r_i d_j + r_i r_j (g-1)).
// Defined only for proper types (at least two blocks).
inline long long codim(const HNType& mu, int g) {
    if (mu.length() < 2) throw std::invalid_argument("codim: HN type must have at least two blocks");
    long long s = 0;
    for (std::size_t i = 0; i < mu.blocks.size(); ++i)
        for (std::size_t j = i + 1; j < mu.blocks.size(); ++j) {
            const auto& a = mu.blocks[i];
            const auto& b = mu.blocks[j];
            s += static_cast<long long>(b.rank) * a.degree - static_cast<long long>(a.rank) * b.degree +
                 static_cast<long long>(a.rank) * b.rank * (g - 1);
        }
    return s;
}

// Constraints (1), (2), (3): ranks sum to r, degrees sum to d, slopes
// strictly decrease. The single-block type (r, d) itself is valid.
inline bool validate(const HNType& mu, int r, int d) {
    if (mu.blocks.empty()) return false;
    long long rsum = 0, dsum = 0;
    for (const auto& b : mu.blocks) {
        if (b.rank < 1) return false;
        rsum += b.rank;
        dsum += b.degree;
    }
    if (rsum != r || dsum != d) return false;
    for (std::size_t i = 0; i + 1 < mu.blocks.size(); ++i) {
        const auto& a = mu.blocks[i];
        const auto& b = mu.blocks[i + 1];
        // d_i/r_i > d_{i+1}/r_{i+1}  <=>  d_i r_{i+1} > d_{i+1} r_i
        if (static_cast<long long>(a.degree) * b.rank <= static_cast<long long>(b.degree) * a.rank) return false;
    }
    return true;
}

namespace detail {

// Depth-first block enumeration. At each step the remaining (rr, dd) either
// closes as a single final block (slope strictly below the previous one) or
// splits off a leading block (r1, d1). The codimension of the leading block
// against its whole tail is
//   cross = rr*d1 - r1*dd + r1*(rr-r1)*(g-1),
// and since every pairwise term of d_mu is positive for a valid type, cross
// must fit in the remaining budget; together with the slope lower bound
// d1/r1 > dd/rr this gives a finite window for d1.
inline void enumerate_rec(int rr, long long dd, int g, long long budget, bool have_prev, long long prev_d,
                          int prev_r, std::vector<HNBlock>& prefix, std::vector<HNType>& out) {
    if (have_prev && dd * prev_r < prev_d * rr) {
        prefix.push_back({rr, static_cast<int>(dd)});
        out.push_back(HNType{prefix});
        prefix.pop_back();
    }
    for (int r1 = 1; r1 < rr; ++r1) {
        const long long fixed = static_cast<long long>(r1) * (rr - r1) * (g - 1);
        long long lo = floor_div(r1 * dd, rr) + 1;  // rr*d1 - r1*dd >= 1
        long long hi = floor_div(budget - fixed + r1 * dd, rr);
        if (have_prev) hi = std::min(hi, floor_div(prev_d * r1 - 1, prev_r));  // d1/r1 < prev slope
        for (long long d1 = lo; d1 <= hi; ++d1) {
            const long long cross = rr * d1 - r1 * dd + fixed;
            if (cross > budget) break;
            prefix.push_back({r1, static_cast<int>(d1)});
            enumerate_rec(rr - r1, dd - d1, g, budget - cross, true, d1, r1, prefix, out);
            prefix.pop_back();
        }
    }
}

}  // namespace detail

// All proper HN types mu in I_{r,d} (at least two blocks) with d_mu <= cap,
// each exactly once, sorted lexicographically by block sequence. For r = 1
// the list is empty. I_{r,d} itself is infinite for r >= 2; finiteness comes
// from the codimension cap.
inline std::vector<HNType> enumerate(int r, int d, int g, long long cap) {
    if (r < 1) throw std::invalid_argument("enumerate: rank must be >= 1");
    if (g < 2) throw std::invalid_argument("enumerate: genus must be >= 2");
    std::vector<HNType> out;
    if (r == 1 || cap < 0) return out;
    std::vector<HNBlock> prefix;
    detail::enumerate_rec(r, d, g, cap, false, 0, 1, prefix, out);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace bunpoly
