#pragma once

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "bunpoly/emit.hpp"

namespace bunpoly::cli {

// Inclusive integer range, written on the command line as "A..B" or "A".
struct Range {
    int lo = 0;
    int hi = 0;
};

inline Range parse_range(const std::string& text) {
    const auto pos = text.find("..");
    try {
        if (pos == std::string::npos) {
            const int v = std::stoi(text);
            return {v, v};
        }
        Range r{std::stoi(text.substr(0, pos)), std::stoi(text.substr(pos + 2))};
        if (r.lo > r.hi) throw std::invalid_argument("range '" + text + "' is empty (need lo <= hi)");
        return r;
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("cannot parse range '" + text + "' (expected N or A..B)");
    }
}

// Grid-scan request: inclusive ranges, degree policy (a fixed d, or the
// smallest coprime degree per rank, which is d = 1), output format and
// worker count. Cells with gcd(r,d) > 1 or n > g+1 are skipped.
struct ScanSpec {
    Range g_range;
    Range r_range;
    Range n_range;
    std::optional<int> fixed_d;
    std::string format = "json";
    int workers = 1;
};

namespace detail {

struct Cell {
    int g, n, r, d;
};

inline std::vector<ModuliReport> run_cells(const std::vector<Cell>& cells, int workers) {
    std::vector<ModuliReport> results(cells.size());
    workers = std::clamp<int>(workers, 1, static_cast<int>(std::max<std::size_t>(cells.size(), 1)));
    if (workers == 1) {
        std::map<int, ModuliEngine> engines;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            const Cell& c = cells[i];
            results[i] = engines.try_emplace(c.g, c.g).first->second.report(c.n, c.r, c.d);
        }
        return results;
    }
    // Cells are independent; each worker owns its engines (memo tables are
    // per-worker). Results land at fixed indices, so output order does not
    // depend on scheduling.
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        std::map<int, ModuliEngine> engines;
        try {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= cells.size()) break;
                const Cell& c = cells[i];
                results[i] = engines.try_emplace(c.g, c.g).first->second.report(c.n, c.r, c.d);
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next.store(cells.size());
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    return results;
}

inline int require_opt(const std::optional<int>& v, const char* flag, const char* name) {
    if (!v) throw std::invalid_argument(std::string("construct ") + name + " requires " + flag);
    return *v;
}

}  // namespace detail

// Runs a grid scan and writes the results (in cell order, so the output is
// byte-deterministic regardless of the worker count).
inline void run_scan(const ScanSpec& spec, std::ostream& out) {
    std::vector<detail::Cell> cells;
    for (int g = spec.g_range.lo; g <= spec.g_range.hi; ++g)
        for (int r = spec.r_range.lo; r <= spec.r_range.hi; ++r) {
            const int d = spec.fixed_d.value_or(1);
            if (!coprime(r, d)) continue;
            for (int n = std::max(spec.n_range.lo, 1); n <= std::min(spec.n_range.hi, g + 1); ++n)
                cells.push_back({g, n, r, d});
        }
    const std::vector<ModuliReport> results = detail::run_cells(cells, spec.workers);
    if (spec.format == "json") {
        json arr = json::array();
        for (const auto& r : results) arr.push_back(to_json(r));
        out << arr.dump(2) << "\n";
    } else {
        out << csv_header() << "\n";
        for (const auto& r : results) out << csv_row(r) << "\n";
    }
}

// Command-line front end. Exit codes: 0 success, 2 usage/parameter error,
// 1 internal assertion failure.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact Poincare/Hodge polynomials of moduli of vector bundles over real curves"};
    app.require_subcommand(1);

    // report
    int rep_g = 0, rep_r = 0, rep_d = 0, rep_n = 0;
    std::string rep_format = "json";
    bool rep_hodge_xy = false;
    auto* rep = app.add_subcommand("report", "compute one (g,n,r,d) cell with verdicts");
    rep->add_option("--g", rep_g, "curve genus")->required();
    rep->add_option("--r", rep_r, "bundle rank")->required();
    rep->add_option("--d", rep_d, "bundle degree (coprime to r)")->required();
    rep->add_option("--n", rep_n, "number of real circles of the curve")->required();
    rep->add_option("--format", rep_format, "output format")->check(CLI::IsMember({"json", "csv"}));
    rep->add_flag("--hodge-xy", rep_hodge_xy, "also run the bivariate Hodge recursion as a cross-check");

    // scan
    std::string scan_g, scan_r, scan_n;
    std::optional<int> scan_d;
    std::string scan_policy = "coprime-min", scan_format = "json";
    int scan_workers = 1;
    auto* scan = app.add_subcommand("scan", "grid scan over (g,r,n) ranges");
    scan->add_option("--g", scan_g, "genus range A..B")->required();
    scan->add_option("--r", scan_r, "rank range A..B")->required();
    scan->add_option("--n", scan_n, "real-circle range A..B (clamped to 1..g+1)")->required();
    scan->add_option("--d", scan_d, "fixed degree (cells with gcd(r,d) > 1 are skipped)");
    scan->add_option("--d-policy", scan_policy, "degree policy when --d is absent")
        ->check(CLI::IsMember({"coprime-min"}));
    scan->add_option("--format", scan_format, "output format")->check(CLI::IsMember({"json", "csv"}));
    scan->add_option("--workers", scan_workers, "worker threads")->check(CLI::PositiveNumber);

    // construct
    std::string con_name;
    std::optional<int> con_g, con_n, con_d, con_k, con_m;
    auto* con = app.add_subcommand("construct", "closed-form construction gallery");
    con->add_option("name", con_name,
                    "pic | grassmannian | sym-power | harnack | abelian_maximal | k3_expressive | "
                    "k3_maximal_5spheres | k3_maximal_9spheres")
        ->required();
    con->add_option("--g", con_g, "genus");
    con->add_option("--n", con_n, "number of real circles (0 allowed for pic)");
    con->add_option("--d", con_d, "degree");
    con->add_option("--k", con_k, "plane count / symmetric power / Harnack parameter");
    con->add_option("--m", con_m, "ambient dimension (grassmannian)");

    // hodge
    int h_g = 0, h_r = 0, h_d = 0;
    std::optional<int> h_cap;
    std::string h_spec = "t1";
    auto* hod = app.add_subcommand("hodge", "Hodge series of one (g,r,d), bivariate or specialized");
    hod->add_option("--g", h_g, "curve genus")->required();
    hod->add_option("--r", h_r, "bundle rank")->required();
    hod->add_option("--d", h_d, "bundle degree")->required();
    hod->add_option("--spec", h_spec, "t1 (x=t,y=1), tt (x=y=t) or xy (full array)")
        ->check(CLI::IsMember({"t1", "tt", "xy"}));
    hod->add_option("--cap", h_cap, "truncation override (default from N = r^2(g-1)+1)");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*rep) {
            ModuliEngine engine(rep_g);
            const ModuliReport r = engine.report(rep_n, rep_r, rep_d, rep_hodge_xy);
            if (rep_format == "json")
                out << to_json(r).dump(2) << "\n";
            else
                out << csv_header() << "\n" << csv_row(r) << "\n";
        } else if (*scan) {
            ScanSpec spec;
            spec.g_range = parse_range(scan_g);
            spec.r_range = parse_range(scan_r);
            spec.n_range = parse_range(scan_n);
            spec.fixed_d = scan_d;
            spec.format = scan_format;
            spec.workers = scan_workers;
            run_scan(spec, out);
        } else if (*con) {
            VarietyData v;
            if (con_name == "pic")
                v = pic(detail::require_opt(con_g, "--g", "pic"), detail::require_opt(con_n, "--n", "pic"),
                        detail::require_opt(con_d, "--d", "pic"));
            else if (con_name == "grassmannian")
                v = grassmannian(detail::require_opt(con_k, "--k", "grassmannian"),
                                 detail::require_opt(con_m, "--m", "grassmannian"));
            else if (con_name == "sym-power")
                v = sym_power_curve(detail::require_opt(con_g, "--g", "sym-power"),
                                    detail::require_opt(con_n, "--n", "sym-power"),
                                    detail::require_opt(con_k, "--k", "sym-power"));
            else if (con_name == "harnack")
                v = harnack_double_cover(detail::require_opt(con_k, "--k", "harnack"));
            else
                v = surface_gallery(parse_gallery_name(con_name));
            out << to_json(v).dump(2) << "\n";
        } else if (*hod) {
            ModuliEngine engine(h_g);
            const int N = ModuliEngine::dim_complex(h_g, h_r);
            json j;
            j["g"] = h_g;
            j["r"] = h_r;
            j["d"] = h_d;
            j["spec"] = h_spec;
            if (h_spec == "t1") {
                const int cap = h_cap.value_or(N + 2);
                j["cap"] = cap;
                j["coeffs"] = coeff_array(engine.hodge_t1(h_r, h_d, cap));
            } else {
                const int cap = h_cap.value_or(2 * N + 2);
                j["cap"] = cap;
                const BiSeries h = engine.hodge_biseries(h_r, h_d, cap);
                if (h_spec == "tt") {
                    j["coeffs"] = coeff_array(specialize(h, Specialize::tt));
                } else {
                    json rows = json::array();
                    for (int i = 0; i <= h.cap(); ++i) {
                        json row = json::array();
                        for (int jj = 0; i + jj <= h.cap(); ++jj) row.push_back(h.at(i, jj).str());
                        rows.push_back(std::move(row));
                    }
                    j["coeffs"] = std::move(rows);
                }
            }
            out << j.dump(2) << "\n";
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const internal_error& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace bunpoly::cli
