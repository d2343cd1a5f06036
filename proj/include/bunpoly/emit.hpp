#pragma once

#include <json.hpp>

#include <sstream>
#include <string>

#include "bunpoly/bi_series.hpp"
#include "bunpoly/constructions.hpp"
#include "bunpoly/moduli.hpp"

namespace bunpoly {

using json = nlohmann::ordered_json;

// Polynomial coefficients are serialized as decimal strings indexed by
// degree, trimmed at the true degree; Betti numbers overflow native integer
// widths quickly, and strings round-trip exactly through any JSON consumer.
inline json coeff_array(const UniSeries& s) {
    json a = json::array();
    for (int i = 0; i <= s.degree(); ++i) a.push_back(s[i].str());
    return a;
}

inline json to_json(const ModuliReport& rep) {
    json j;
    j["g"] = rep.g;
    j["r"] = rep.r;
    j["d"] = rep.d;
    j["n"] = rep.n;
    j["dim_complex"] = rep.dim_complex;
    j["poincare_complex"] = coeff_array(rep.poincare_complex);
    j["hodge_t1"] = coeff_array(rep.hodge_t1);
    j["poincare_real"] = coeff_array(rep.poincare_real);
    j["fixed_det"] = {{"hodge_t1", coeff_array(rep.fixed_det_hodge_t1)},
                      {"poincare_real", coeff_array(rep.fixed_det_real)}};
    j["verdicts"] = {{"hodge_expressive", rep.hodge_expressive},
                     {"maximal", rep.maximal},
                     {"chi_eq_sigma", rep.chi_eq_sigma}};
    j["b0_real"] = rep.b0_real.str();
    j["total_betti_complex"] = rep.total_betti_complex.str();
    j["total_betti_real"] = rep.total_betti_real.str();
    return j;
}

inline json to_json(const VarietyData& v) {
    json j;
    j["label"] = v.label;
    j["dim"] = v.dim;
    j["hodge_t1"] = coeff_array(v.hodge_t1);
    j["poincare_real"] = coeff_array(v.poincare_real);
    j["verdicts"] = {{"hodge_expressive", v.hodge_expressive()},
                     {"maximal", v.maximal()},
                     {"chi_eq_sigma", v.chi_eq_sigma()}};
    j["total_betti_complex"] = v.total_betti_complex().str();
    j["total_betti_real"] = v.total_betti_real().str();
    return j;
}

// CSV layout for scans: one row per cell, polynomials omitted.
inline std::string csv_header() {
    return "g,r,d,n,dim_complex,b0_real,total_betti_complex,total_betti_real,"
           "hodge_expressive,maximal,chi_eq_sigma";
}

inline std::string csv_row(const ModuliReport& rep) {
    std::ostringstream os;
    auto b = [](bool v) { return v ? "true" : "false"; };
    os << rep.g << ',' << rep.r << ',' << rep.d << ',' << rep.n << ',' << rep.dim_complex << ',' << rep.b0_real
       << ',' << rep.total_betti_complex << ',' << rep.total_betti_real << ',' << b(rep.hodge_expressive) << ','
       << b(rep.maximal) << ',' << b(rep.chi_eq_sigma);
    return os.str();
}

}  // namespace bunpoly
