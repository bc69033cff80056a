#pragma once

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace ordcalc::dynamics {

struct singular_step_error : std::domain_error {
    explicit singular_step_error(const std::string& what) : std::domain_error(what) {}
};

// One step of the scalar-source recursion d2 = (k - d0*d1) / (d1 - 2*d0).
inline double step(double d0, double d1, double k, double singular_eps = 1e-12) {
    const double den = d1 - 2.0 * d0;
    if (std::fabs(den) < singular_eps)
        throw singular_step_error("step: denominator below singular_eps");
    return (k - d0 * d1) / den;
}

// d2*(d1 - d0) - (d2 - d1)*d0 - k; zero for exact iterates of the recursion.
inline double residual(double d0, double d1, double d2, double k) {
    return d2 * (d1 - d0) - (d2 - d1) * d0 - k;
}

enum class OrbitClass { bounded, escaped, singular };

inline const char* to_string(OrbitClass c) {
    switch (c) {
        case OrbitClass::bounded: return "bounded";
        case OrbitClass::escaped: return "escaped";
        case OrbitClass::singular: return "singular";
    }
    return "?";
}

struct OrbitLimits {
    int max_steps = 10000;
    double escape_threshold = 1e12;
    double singular_eps = 1e-12;
};

struct OrbitParams {
    double delta0 = 0.0;
    double delta1 = 0.0;
    double k = 0.0;
    OrbitLimits limits;
};

struct OrbitResult {
    std::vector<double> samples;  // delta0, delta1, then computed iterates
    OrbitClass classification = OrbitClass::bounded;
    int terminal_step = 0;  // escape/singular step, or last computed index
    double max_abs = 0.0;
};

inline OrbitResult iterate(const OrbitParams& p) {
    if (p.limits.max_steps < 0 || p.limits.escape_threshold <= 0 || p.limits.singular_eps <= 0)
        throw std::invalid_argument("iterate: bad limits");
    OrbitResult out;
    out.samples = {p.delta0, p.delta1};
    out.max_abs = std::max(std::fabs(p.delta0), std::fabs(p.delta1));
    for (int s = 0; s < 2; ++s) {
        if (std::fabs(out.samples[s]) > p.limits.escape_threshold) {
            out.classification = OrbitClass::escaped;
            out.terminal_step = s;
            out.samples.resize(static_cast<std::size_t>(s) + 1);
            return out;
        }
    }
    for (int n = 0; n < p.limits.max_steps; ++n) {
        const double d0 = out.samples[out.samples.size() - 2];
        const double d1 = out.samples.back();
        if (std::fabs(d1 - 2.0 * d0) < p.limits.singular_eps) {
            out.classification = OrbitClass::singular;
            out.terminal_step = static_cast<int>(out.samples.size());
            return out;
        }
        const double v = step(d0, d1, p.k, p.limits.singular_eps);
        out.samples.push_back(v);
        if (std::fabs(v) > out.max_abs) out.max_abs = std::fabs(v);
        if (std::fabs(v) > p.limits.escape_threshold) {
            out.classification = OrbitClass::escaped;
            out.terminal_step = static_cast<int>(out.samples.size()) - 1;
            return out;
        }
    }
    out.classification = OrbitClass::bounded;
    out.terminal_step = static_cast<int>(out.samples.size()) - 1;
    return out;
}

struct ScanGrid {
    double d0_min = -2.0, d0_max = 2.0;
    double d1_min = -2.0, d1_max = 2.0;
    int resolution = 101;  // points per axis, >= 2
};

struct ScanCell {
    double d0 = 0.0, d1 = 0.0;
    OrbitClass classification = OrbitClass::bounded;
    int terminal_step = 0;
    double max_abs = 0.0;
};

// Row-major grid of orbit summaries: d0 varies along rows, d1 along columns.
// Cells are independent; rows may be evaluated in parallel but the result
// order never depends on scheduling.
inline std::vector<ScanCell> scan(const ScanGrid& grid, double k, const OrbitLimits& limits,
                                  int threads = 1) {
    if (grid.resolution < 2) throw std::invalid_argument("scan: resolution must be >= 2");
    const int n = grid.resolution;
    std::vector<ScanCell> cells(static_cast<std::size_t>(n) * n);
    auto axis = [](double lo, double hi, int res, int i) {
        return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(res - 1);
    };
    auto run_rows = [&](int row_begin, int row_end) {
        for (int i = row_begin; i < row_end; ++i) {
            const double d0 = axis(grid.d0_min, grid.d0_max, n, i);
            for (int j = 0; j < n; ++j) {
                const double d1 = axis(grid.d1_min, grid.d1_max, n, j);
                OrbitParams p{d0, d1, k, limits};
                OrbitResult r = iterate(p);
                cells[static_cast<std::size_t>(i) * n + j] =
                    ScanCell{d0, d1, r.classification, r.terminal_step, r.max_abs};
            }
        }
    };
    if (threads <= 1) {
        run_rows(0, n);
    } else {
        std::vector<std::thread> pool;
        const int chunk = (n + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            const int lo = t * chunk;
            const int hi = std::min(n, lo + chunk);
            if (lo < hi) pool.emplace_back(run_rows, lo, hi);
        }
        for (auto& th : pool) th.join();
    }
    return cells;
}

inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline void write_orbit_csv(std::ostream& os, const OrbitResult& r) {
    os << "step,delta\n";
    for (std::size_t s = 0; s < r.samples.size(); ++s)
        os << s << "," << format_double(r.samples[s]) << "\n";
}

inline void write_scan_csv(std::ostream& os, double k, const std::vector<ScanCell>& cells) {
    os << "d0,d1,k,classification,terminal_step,max_abs\n";
    for (const auto& c : cells)
        os << format_double(c.d0) << "," << format_double(c.d1) << "," << format_double(k) << ","
           << to_string(c.classification) << "," << c.terminal_step << ","
           << format_double(c.max_abs) << "\n";
}

}  // namespace ordcalc::dynamics
