#pragma once

#include <string>
#include <string_view>

#include "bunpoly/core.hpp"
#include "bunpoly/hn_types.hpp"
#include "bunpoly/uni_series.hpp"

namespace bunpoly {

// Closed-form Hodge/real-Betti data for one variety. hodge_t1 is the
// specialization H_{(t,1)} (ascending diagonal sums of the Hodge diamond),
// poincare_real the mod-2 Poincare polynomial of the real locus. Both are
// genuine polynomials held at cap = dim. Torsion-freeness of the integral
// cohomology is a declared attribute propagated by the product, projective
// bundle, blow-up and Lefschetz rules; it is never computed.
struct VarietyData {
    int dim = 0;
    UniSeries hodge_t1;
    UniSeries poincare_real;
    bool torsion_free = true;
    std::string label;

    bool hodge_expressive() const { return torsion_free && hodge_t1 == poincare_real; }
    Int total_betti_complex() const { return hodge_t1.eval_at(1); }
    Int total_betti_real() const { return poincare_real.eval_at(1); }
    bool maximal() const { return total_betti_real() == total_betti_complex(); }
    Int euler_real() const { return poincare_real.eval_at(-1); }
    Int signature() const { return hodge_t1.eval_at(-1); }  // = H_{(-1,1)}
    bool chi_eq_sigma() const { return euler_real() == signature(); }
};

inline VarietyData point() {
    return VarietyData{0, UniSeries::one(0), UniSeries::one(0), true, "point"};
}

// Picard variety Pic^d(C) of a genus-g curve whose real locus has n circles.
// H_{(t,1)} = 2^g (1+t)^g always; the real side is 2^{n-1} (1+t)^g when the
// curve has real points, and for n = 0 depends on the parities of g and d:
// empty when both are odd, 2(1+t)^g for g odd / d even, (1+t)^g for g even.
inline VarietyData pic(int g, int n, int d) {
    require_genus(g);
    if (n < 0 || n > g + 1)
        throw std::invalid_argument("n must satisfy 0 <= n <= g+1 (got n=" + std::to_string(n) +
                                    ", g=" + std::to_string(g) + ")");
    VarietyData v;
    v.dim = g;
    v.hodge_t1 = UniSeries::binomial_power(1, g, g).scale(pow2(g));
    if (n >= 1)
        v.poincare_real = UniSeries::binomial_power(1, g, g).scale(pow2(n - 1));
    else if (g % 2 == 1 && d % 2 != 0)
        v.poincare_real = UniSeries(g);  // RPic = empty set
    else if (g % 2 == 1)
        v.poincare_real = UniSeries::binomial_power(1, g, g).scale(2);
    else
        v.poincare_real = UniSeries::binomial_power(1, g, g);
    v.label = "Pic^" + std::to_string(d) + "(C_{g=" + std::to_string(g) + ",n=" + std::to_string(n) + "})";
    return v;
}

// Gaussian binomial [m choose k]_t: the generating polynomial of Schubert
// cell dimensions, via [m k] = [m-1 k] + t^{m-k} [m-1 k-1].
inline UniSeries gaussian_binomial(int m, int k) {
    if (k < 0 || m < 0 || k > m)
        throw std::invalid_argument("gaussian_binomial requires 0 <= k <= m");
    const int cap = k * (m - k);
    std::vector<UniSeries> row(static_cast<std::size_t>(k) + 1, UniSeries(cap));  // row[j] = [mm choose j]_t
    row[0] = UniSeries::one(cap);
    for (int mm = 1; mm <= m; ++mm)
        for (int j = std::min(k, mm); j >= 1; --j) row[static_cast<std::size_t>(j)] += row[static_cast<std::size_t>(j) - 1].shifted(mm - j, cap);
    return row[static_cast<std::size_t>(k)];
}

// Grassmannian of k-planes in m-space with its standard real structure.
// Schubert cells give b_i(RGr) = b_{2i}(Gr) = h^{i,i}(Gr), so both sides
// equal the Gaussian binomial and the variety is Hodge-expressive.
inline VarietyData grassmannian(int k, int m) {
    UniSeries q = gaussian_binomial(m, k);
    VarietyData v;
    v.dim = k * (m - k);
    v.hodge_t1 = q;
    v.poincare_real = std::move(q);
    v.label = "Gr(" + std::to_string(k) + "," + std::to_string(m) + ")";
    return v;
}

inline VarietyData combine_product(const VarietyData& a, const VarietyData& b) {
    VarietyData v;
    v.dim = a.dim + b.dim;
    v.hodge_t1 = mul(a.hodge_t1.extended(v.dim), b.hodge_t1.extended(v.dim), v.dim);
    v.poincare_real = mul(a.poincare_real.extended(v.dim), b.poincare_real.extended(v.dim), v.dim);
    v.torsion_free = a.torsion_free && b.torsion_free;
    v.label = a.label + " x " + b.label;
    return v;
}

// Projectivization of a rank-r real algebraic vector bundle over the base:
// both sides are multiplied by 1 + t + ... + t^{r-1} (Leray-Hirsch).
inline VarietyData proj_bundle(const VarietyData& base, int r) {
    if (r < 1) throw std::invalid_argument("proj_bundle requires rank >= 1");
    if (!base.torsion_free) throw std::invalid_argument("proj_bundle requires a torsion-free base");
    VarietyData v;
    v.dim = base.dim + r - 1;
    UniSeries fiber(v.dim);
    for (int i = 0; i < r; ++i) fiber.at(i) = 1;
    v.hodge_t1 = mul(base.hodge_t1.extended(v.dim), fiber, v.dim);
    v.poincare_real = mul(base.poincare_real.extended(v.dim), fiber, v.dim);
    v.label = "P(E_" + std::to_string(r) + " -> " + base.label + ")";
    return v;
}

// Blow-up of X along a center Y of codimension r: both sides gain
// (t^{r-1} + ... + t) times the data of Y.
inline VarietyData blowup(const VarietyData& X, const VarietyData& Y, int r) {
    if (r < 2) throw std::invalid_argument("blowup requires codimension >= 2");
    if (Y.dim + r != X.dim)
        throw std::invalid_argument("blowup: dim Y + codim must equal dim X (got " + std::to_string(Y.dim) + " + " +
                                    std::to_string(r) + " != " + std::to_string(X.dim) + ")");
    if (!X.torsion_free || !Y.torsion_free) throw std::invalid_argument("blowup requires torsion-free X and Y");
    UniSeries band(X.dim);
    for (int i = 1; i < r; ++i) band.at(i) = 1;
    VarietyData v;
    v.dim = X.dim;
    v.hodge_t1 = X.hodge_t1 + mul(band, Y.hodge_t1.extended(X.dim), X.dim);
    v.poincare_real = X.poincare_real + mul(band, Y.poincare_real.extended(X.dim), X.dim);
    v.label = "Bl_{" + Y.label + "}(" + X.label + ")";
    return v;
}

// k-th symmetric power of the curve for k >= 2g-1, realized as a projective
// bundle of rank k-g+1 over the Picard variety. Below that threshold the
// bundle description fails and no closed form is implemented, so those
// inputs are rejected.
inline VarietyData sym_power_curve(int g, int n, int k) {
    require_real_admissible(g, n);
    if (k < 2 * g - 1)
        throw std::invalid_argument("sym_power_curve requires k >= 2g-1 (got k=" + std::to_string(k) +
                                    ", g=" + std::to_string(g) + ")");
    VarietyData v = proj_bundle(pic(g, n, k), k - g + 1);
    v.label = "C^[" + std::to_string(k) + "], g=" + std::to_string(g) + ", n=" + std::to_string(n);
    return v;
}

// Double cover of the plane branched along a Harnack curve of degree 2k,
// i.e. w^2 = P(x,y,z) in CP(1,1,1,k). Real Betti numbers match the middle
// Hodge row, so these surfaces are Hodge-expressive by construction;
// H^*(X;Z) is torsion-free by the Lefschetz hyperplane section theorem.
inline VarietyData harnack_double_cover(int k) {
    if (k < 1) throw std::invalid_argument("harnack_double_cover requires k >= 1");
    const Int corner = Int(k - 1) * (k - 2) / 2;
    const Int middle = Int(3) * k * (k - 1) + 2;
    UniSeries p(2);
    p.at(0) = corner + 1;
    p.at(1) = middle;
    p.at(2) = corner + 1;
    VarietyData v;
    v.dim = 2;
    v.hodge_t1 = p;
    v.poincare_real = std::move(p);
    v.label = "Harnack double cover, degree " + std::to_string(2 * k);
    return v;
}

// Tabulated surface examples: the maximal Abelian surface (real locus four
// tori) and Kharlamov's three topological types of maximal real K3s, only
// the first of which (sphere + genus-10 surface) is Hodge-expressive.
enum class SurfaceGallery { abelian_maximal, k3_expressive, k3_maximal_5spheres, k3_maximal_9spheres };

inline SurfaceGallery parse_gallery_name(std::string_view name) {
    if (name == "abelian_maximal") return SurfaceGallery::abelian_maximal;
    if (name == "k3_expressive") return SurfaceGallery::k3_expressive;
    if (name == "k3_maximal_5spheres") return SurfaceGallery::k3_maximal_5spheres;
    if (name == "k3_maximal_9spheres") return SurfaceGallery::k3_maximal_9spheres;
    throw std::invalid_argument("unknown gallery name: " + std::string(name));
}

inline VarietyData surface_gallery(SurfaceGallery which) {
    auto poly3 = [](Int a, Int b, Int c) {
        UniSeries p(2);
        p.at(0) = std::move(a);
        p.at(1) = std::move(b);
        p.at(2) = std::move(c);
        return p;
    };
    VarietyData v;
    v.dim = 2;
    switch (which) {
        case SurfaceGallery::abelian_maximal:
            v.hodge_t1 = poly3(4, 8, 4);      // diagonal sums of 1;2,2;1,4,1;2,2;1
            v.poincare_real = poly3(4, 8, 4);  // four tori
            v.label = "maximal Abelian surface";
            break;
        case SurfaceGallery::k3_expressive:
            v.hodge_t1 = poly3(2, 20, 2);
            v.poincare_real = poly3(2, 20, 2);  // sphere + genus-10 surface
            v.label = "maximal K3, S^2 + genus-10";
            break;
        case SurfaceGallery::k3_maximal_5spheres:
            v.hodge_t1 = poly3(2, 20, 2);
            v.poincare_real = poly3(6, 12, 6);  // five spheres + genus-6 surface
            v.label = "maximal K3, 5 S^2 + genus-6";
            break;
        case SurfaceGallery::k3_maximal_9spheres:
            v.hodge_t1 = poly3(2, 20, 2);
            v.poincare_real = poly3(10, 4, 10);  // nine spheres + genus-2 surface
            v.label = "maximal K3, 9 S^2 + genus-2";
            break;
    }
    return v;
}

}  // namespace bunpoly
