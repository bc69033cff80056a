// Command-line front end: identity-verification suites and the computable
// experiments, with CSV/JSON output for offline analysis.

#include <CLI11.hpp>
#include <json.hpp>

#include "ordcalc/dynamics.hpp"
#include "ordcalc/json_io.hpp"
#include "ordcalc/ordcalc.hpp"
#include "ordcalc/verify.hpp"

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

namespace {

using nlohmann::json;
using namespace ordcalc;

int write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return 0;
    }
    std::ofstream os(path, std::ios::binary);
    if (!os) {
        std::cerr << "cannot open output file: " << path << "\n";
        return 2;
    }
    os << content;
    return 0;
}

json report_to_json(const verify::Report& r) {
    json checks = json::array();
    for (const auto& c : r.checks) {
        json jc{{"name", c.name}, {"passed", c.passed}};
        if (!c.detail.empty()) jc["detail"] = c.detail;
        checks.push_back(jc);
    }
    return json{{"suite", r.suite}, {"cases", r.cases}, {"checks", checks}, {"passed", r.all_passed()}};
}

json load_json_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::invalid_argument("cannot open file: " + path);
    json j;
    try {
        is >> j;
    } catch (const json::exception& ex) {
        throw std::invalid_argument(std::string("malformed json in ") + path + ": " + ex.what());
    }
    return j;
}

struct VerifyOpts {
    std::string suite;
    std::uint64_t seed = 1;
    int cases = 1000;
    std::string out = "-";
};

int run_verify(const VerifyOpts& o) {
    verify::Report report;
    if (o.suite == "doc-identities")
        report = verify::doc_identities(o.seed, o.cases);
    else if (o.suite == "poisson")
        report = verify::poisson_suite(o.seed, o.cases);
    else if (o.suite == "qcalc")
        report = verify::qcalc_suite(o.seed, std::max(o.cases / 5, 200));
    else if (o.suite == "hopf")
        report = verify::hopf_suite();
    else if (o.suite == "netamp-oracles")
        report = verify::netamp_oracles(o.seed);
    else {
        std::cerr << "unknown suite '" << o.suite
                  << "' (expected doc-identities|poisson|qcalc|hopf|netamp-oracles)\n";
        return 2;
    }
    int rc = write_output(o.out, report_to_json(report).dump(2) + "\n");
    if (rc != 0) return rc;
    return report.all_passed() ? 0 : 1;
}

struct ChaosOpts {
    double d0 = 0, d1 = 0, k = 0;
    int steps = 10000;
    double threshold = 1e12;
    double eps = 1e-12;
    std::string grid = "-2:2:101";
    std::string grid_d1;
    int threads = 1;
    std::string out = "-";
};

dynamics::OrbitLimits limits_of(const ChaosOpts& o) { return {o.steps, o.threshold, o.eps}; }

bool parse_grid(const std::string& text, double& lo, double& hi, int& res) {
    std::istringstream is(text);
    char c1 = 0, c2 = 0;
    if (!(is >> lo >> c1 >> hi >> c2 >> res)) return false;
    char extra = 0;
    if (is >> extra) return false;
    return c1 == ':' && c2 == ':' && res >= 2 && hi > lo;
}

int run_chaos_step(const ChaosOpts& o) {
    std::string line;
    try {
        line = dynamics::format_double(dynamics::step(o.d0, o.d1, o.k, o.eps)) + "\n";
    } catch (const dynamics::singular_step_error&) {
        line = "singular\n";
    }
    return write_output(o.out, line);
}

int run_chaos_orbit(const ChaosOpts& o) {
    dynamics::OrbitResult r = dynamics::iterate({o.d0, o.d1, o.k, limits_of(o)});
    std::ostringstream os;
    dynamics::write_orbit_csv(os, r);
    os << "# classification," << dynamics::to_string(r.classification) << ",terminal_step,"
       << r.terminal_step << ",max_abs," << dynamics::format_double(r.max_abs) << "\n";
    return write_output(o.out, os.str());
}

int run_chaos_scan(const ChaosOpts& o) {
    dynamics::ScanGrid grid;
    if (!parse_grid(o.grid, grid.d0_min, grid.d0_max, grid.resolution)) {
        std::cerr << "bad --grid (expected min:max:resolution)\n";
        return 2;
    }
    grid.d1_min = grid.d0_min;
    grid.d1_max = grid.d0_max;
    if (!o.grid_d1.empty()) {
        int res1 = 0;
        if (!parse_grid(o.grid_d1, grid.d1_min, grid.d1_max, res1) || res1 != grid.resolution) {
            std::cerr << "bad --grid-d1 (same resolution as --grid required)\n";
            return 2;
        }
    }
    auto cells = dynamics::scan(grid, o.k, limits_of(o), o.threads);
    std::ostringstream os;
    dynamics::write_scan_csv(os, o.k, cells);
    return write_output(o.out, os.str());
}

struct QcalcOpts {
    int n = 10;
    std::string poly;
    std::string out = "-";
};

int run_qcalc_table(const QcalcOpts& o) {
    std::ostringstream os;
    for (int n = 0; n <= o.n; ++n)
        os << "[" << n << "]_q = " << qcalc::q_integer(n).to_string() << "\n";
    for (int n = 0; n <= o.n; ++n)
        os << "[" << n << "]_q! = " << qcalc::q_factorial(n).to_string() << "\n";
    for (int n = 0; n <= o.n; ++n)
        for (int k = 0; k <= n; ++k)
            os << "binom(" << n << "," << k << ")_q = " << qcalc::q_binomial(n, k).to_string()
               << "\n";
    return write_output(o.out, os.str());
}

qcalc::QPoly parse_qpoly(const std::string& text) {
    // reuse the expression grammar with a single scalar family "x"
    auto alg = std::make_shared<ncalg::Algebra>();
    alg->declare("x", ncalg::scalar_family());
    ncalg::Expr e = ncalg::parse_expr(alg, text);
    qcalc::QPoly out;
    for (const auto& t : e.terms()) {
        if (t.jpow != 0) throw std::invalid_argument("polynomial in x cannot contain J");
        for (const auto& atom : t.word)
            if (atom.shift != 0) throw std::invalid_argument("polynomial in x cannot contain shifts");
        out += qcalc::QPoly::monomial(static_cast<int>(t.word.size()), t.coeff);
    }
    return out;
}

int run_qcalc_dq(const QcalcOpts& o) {
    qcalc::QPoly f = parse_qpoly(o.poly);
    return write_output(o.out, qcalc::dq(f).to_string() + "\n");
}

struct NetOpts {
    std::string file;
    bool oracle = false;
    std::string trace;
    std::string matrix = "dirac2";
    std::string matrix_file;
    int m = 1;
    std::string a = "L", b = "L";
    int t = 10;
    int x0 = 0;
    std::string dir = "R";
    std::string out = "-";
};

int run_netamp_partition(const NetOpts& o, bool penrose_only) {
    io::NetworkFile nf = io::network_from_json(load_json_file(o.file));
    if (penrose_only && nf.rule_kind != "penrose") {
        std::cerr << "netamp penrose requires a penrose-rule network\n";
        return 2;
    }
    netamp::VertexRule rule = io::make_rule(nf);
    json j;
    if (penrose_only) {
        const long long count = netamp::penrose_count(nf.net);
        netamp::Amplitude amp = netamp::partition_function(nf.net, rule);
        j = io::amplitude_to_json(amp);
        j["count"] = count;
        if (o.oracle) {
            const long long brute = netamp::count_proper_3_edge_colorings(nf.net);
            j["oracle"] = brute;
            if (brute != count) {
                std::cerr << "oracle mismatch: amplitude " << count << " vs brute force " << brute
                          << "\n";
                write_output(o.out, j.dump(2) + "\n");
                return 1;
            }
        }
    } else {
        netamp::Amplitude amp = netamp::partition_function(nf.net, rule);
        j = io::amplitude_to_json(amp);
        std::ostringstream trace_csv;
        if (!o.trace.empty() || o.oracle) {
            trace_csv << "coloring,weight\n";
            netamp::Amplitude brute = netamp::partition_function_brute_force(
                nf.net, rule, [&](const std::vector<int>& colors, const Scalar& w) {
                    std::string key;
                    for (std::size_t k = 0; k < colors.size(); ++k) {
                        if (k) key += " ";
                        key += std::to_string(colors[k]);
                    }
                    trace_csv << key << "," << w.to_string() << "\n";
                });
            j["oracle"] = brute.value.to_string();
            if (!o.trace.empty()) {
                std::ofstream ts(o.trace, std::ios::binary);
                if (!ts) {
                    std::cerr << "cannot open trace file: " << o.trace << "\n";
                    return 2;
                }
                ts << trace_csv.str();
            }
            if (o.oracle && brute.value != amp.value) {
                std::cerr << "oracle mismatch: pruned evaluation disagrees with enumeration\n";
                write_output(o.out, j.dump(2) + "\n");
                return 1;
            }
        }
    }
    return write_output(o.out, j.dump(2) + "\n");
}

int state_index(const std::string& label, int n) {
    if (n == 2 && (label == "L" || label == "l")) return 0;
    if (n == 2 && (label == "R" || label == "r")) return 1;
    try {
        const int v = std::stoi(label);
        if (v >= 0 && v < n) return v;
    } catch (...) {
    }
    throw std::invalid_argument("bad state label '" + label + "'");
}

int run_netamp_chain(const NetOpts& o) {
    netamp::WeightMatrix m;
    if (!o.matrix_file.empty()) {
        json j = load_json_file(o.matrix_file);
        for (const auto& row : j) {
            std::vector<Scalar> r;
            for (const auto& cell : row) r.push_back(ncalg::parse_scalar(cell.get<std::string>()));
            m.push_back(std::move(r));
        }
    } else if (o.matrix == "dirac2") {
        m = netamp::dirac_weights();
    } else {
        std::cerr << "unknown --matrix (use dirac2 or --file)\n";
        return 2;
    }
    netamp::validate_matrix(m);
    const int n = static_cast<int>(m.size());
    const int a = state_index(o.a, n), b = state_index(o.b, n);
    Scalar amp = netamp::chain_amplitude(m, o.m, a, b);
    json j{{"value", amp.to_string()}, {"m", o.m}, {"a", o.a}, {"b", o.b}};
    if (o.oracle) {
        Scalar brute = netamp::chain_amplitude_brute_force(m, o.m, a, b);
        Scalar matpow = netamp::matrix_power_entry(m, o.m + 1, a, b);
        j["oracle"] = brute.to_string();
        if (amp != brute || amp != matpow) {
            std::cerr << "oracle mismatch in chain amplitude\n";
            write_output(o.out, j.dump(2) + "\n");
            return 1;
        }
    }
    return write_output(o.out, j.dump(2) + "\n");
}

int run_netamp_checkerboard(const NetOpts& o) {
    const netamp::Dir d0 = (o.dir == "L" || o.dir == "l") ? netamp::Dir::left : netamp::Dir::right;
    netamp::CheckerboardState st = netamp::checkerboard_evolve(o.t, o.x0, d0);
    json psi = json::array();
    for (int x = o.x0 - o.t; x <= o.x0 + o.t; ++x)
        for (netamp::Dir d : {netamp::Dir::left, netamp::Dir::right}) {
            const Scalar& v = st.at(o.t, x, d);
            if (!v.is_zero())
                psi.push_back({{"x", x}, {"dir", netamp::to_string(d)}, {"amp", v.to_string()}});
        }
    json j{{"t", o.t}, {"x0", o.x0}, {"dir", netamp::to_string(d0)}, {"psi", psi}};
    if (o.oracle) {
        bool ok = true;
        for (int t = 0; t <= o.t && ok; ++t)
            for (int x = o.x0 - t; x <= o.x0 + t && ok; ++x)
                for (netamp::Dir d : {netamp::Dir::left, netamp::Dir::right})
                    if (st.at(t, x, d) != netamp::brute_force_path_sum(t, o.x0, d0, x, d)) {
                        ok = false;
                        break;
                    }
        j["oracle"] = ok ? "match" : "mismatch";
        if (!ok) {
            std::cerr << "oracle mismatch: table disagrees with the path sum\n";
            write_output(o.out, j.dump(2) + "\n");
            return 1;
        }
    }
    return write_output(o.out, j.dump(2) + "\n");
}

struct HopfOpts {
    std::string builtin = "sweedler";
    int n = 3;
    std::string file;
    std::string grouplike = "g";
    std::string out = "-";
};

hopf::FiniteHopf load_hopf(const HopfOpts& o) {
    if (!o.file.empty()) return io::hopf_from_json(load_json_file(o.file));
    if (o.builtin == "sweedler") return hopf::sweedler();
    if (o.builtin == "cyclic") return hopf::cyclic_group_algebra(o.n);
    throw std::invalid_argument("unknown --builtin (use sweedler or cyclic)");
}

int run_hopf_verify(const HopfOpts& o) {
    hopf::FiniteHopf h = load_hopf(o);
    hopf::HopfReport r = hopf::verify_hopf(h);
    json j = io::hopf_report_to_json(r);
    j["dim"] = h.dim();
    int rc = write_output(o.out, j.dump(2) + "\n");
    if (rc != 0) return rc;
    return r.all_passed() ? 0 : 1;
}

int run_hopf_doc(const HopfOpts& o) {
    hopf::FiniteHopf h = load_hopf(o);
    const hopf::Element g = hopf::basis_element(h, h.index_of(o.grouplike));
    json rows = json::array();
    for (std::size_t k = 0; k < h.dim(); ++k) {
        hopf::Element dx = hopf::doc_derivative(h, g, hopf::basis_element(h, k));
        std::string text;
        for (std::size_t c = 0; c < h.dim(); ++c) {
            if (dx[c].is_zero()) continue;
            if (!text.empty()) text += " + ";
            std::string cs = dx[c].to_string();
            text += (cs == "1" ? "" : "(" + cs + ")*") + h.basis[c];
        }
        if (text.empty()) text = "0";
        rows.push_back({{"x", h.basis[k]}, {"D(x)", text}});
    }
    json j{{"grouplike", o.grouplike}, {"derivatives", rows},
           {"time_exists", false}};
    for (const auto& row : rows)
        if (row.at("D(x)").get<std::string>() != "0") j["time_exists"] = true;
    return write_output(o.out, j.dump(2) + "\n");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact engine for the discrete ordered calculus and its companion experiments"};
    app.require_subcommand(1);

    VerifyOpts vo;
    CLI::App* verify_cmd = app.add_subcommand("verify", "run an identity-verification suite");
    verify_cmd->add_option("suite", vo.suite,
                           "doc-identities|poisson|qcalc|hopf|netamp-oracles")->required();
    verify_cmd->add_option("--seed", vo.seed, "random seed");
    verify_cmd->add_option("--cases", vo.cases, "randomized cases per check");
    verify_cmd->add_option("--out", vo.out, "output path (default stdout)");

    ChaosOpts co;
    CLI::App* chaos = app.add_subcommand("chaos", "scalar-source recursion experiments");
    chaos->require_subcommand(1);
    CLI::App* cstep = chaos->add_subcommand("step", "one step of the recursion");
    CLI::App* corbit = chaos->add_subcommand("orbit", "iterate one orbit, CSV output");
    CLI::App* cscan = chaos->add_subcommand("scan", "classify a grid of initial pairs, CSV output");
    for (CLI::App* c : {cstep, corbit}) {
        c->add_option("--d0", co.d0, "delta at step 0")->required();
        c->add_option("--d1", co.d1, "delta at step 1")->required();
    }
    for (CLI::App* c : {cstep, corbit, cscan}) {
        c->add_option("--k", co.k, "constant k")->required();
        c->add_option("--eps", co.eps, "singularity guard");
        c->add_option("--out", co.out, "output path (default stdout)");
    }
    for (CLI::App* c : {corbit, cscan}) {
        c->add_option("--steps", co.steps, "maximum iterates");
        c->add_option("--threshold", co.threshold, "escape threshold");
    }
    cscan->add_option("--grid", co.grid, "d0 axis as min:max:resolution (also d1 unless --grid-d1)");
    cscan->add_option("--grid-d1", co.grid_d1, "d1 axis as min:max:resolution");
    cscan->add_option("--threads", co.threads, "worker threads (output order is fixed)");

    QcalcOpts qo;
    CLI::App* qcmd = app.add_subcommand("qcalc", "q-integers, q-binomials and the q-derivative");
    qcmd->require_subcommand(1);
    CLI::App* qtable = qcmd->add_subcommand("table", "print [n]_q, [n]_q! and binomial tables");
    qtable->add_option("--n", qo.n, "table size");
    qtable->add_option("--out", qo.out, "output path (default stdout)");
    CLI::App* qdq = qcmd->add_subcommand("dq", "apply the q-derivative to a polynomial in x");
    qdq->add_option("--poly", qo.poly, "polynomial, e.g. \"x^3 + 2*x\"")->required();
    qdq->add_option("--out", qo.out, "output path (default stdout)");

    NetOpts no;
    CLI::App* net = app.add_subcommand("netamp", "network amplitudes");
    net->require_subcommand(1);
    CLI::App* npen = net->add_subcommand("penrose", "three-coloring amplitude of a plane network");
    npen->add_option("--file", no.file, "network JSON")->required();
    CLI::App* npart = net->add_subcommand("partition", "partition function of a colored network");
    npart->add_option("--file", no.file, "network JSON")->required();
    npart->add_option("--trace", no.trace, "write per-coloring CSV to this path");
    CLI::App* nchain = net->add_subcommand("chain", "amplitude of a measurement chain");
    nchain->add_option("--matrix", no.matrix, "builtin weight matrix (dirac2)");
    nchain->add_option("--file", no.matrix_file, "weight matrix JSON (rows of scalar strings)");
    nchain->add_option("--m", no.m, "number of internal nodes")->required();
    nchain->add_option("--a", no.a, "initial state (L/R or index)");
    nchain->add_option("--b", no.b, "final state (L/R or index)");
    CLI::App* ncheck = net->add_subcommand("checkerboard", "lattice path-sum table");
    ncheck->add_option("--t", no.t, "time steps")->required();
    ncheck->add_option("--x0", no.x0, "initial position");
    ncheck->add_option("--dir", no.dir, "initial direction L|R");
    for (CLI::App* c : {npen, npart, nchain, ncheck}) {
        c->add_flag("--oracle", no.oracle, "cross-check against brute force, nonzero exit on mismatch");
        c->add_option("--out", no.out, "output path (default stdout)");
    }

    HopfOpts ho;
    CLI::App* hcmd = app.add_subcommand("hopf", "finite-dimensional Hopf algebras");
    hcmd->require_subcommand(1);
    CLI::App* hverify = hcmd->add_subcommand("verify", "check every Hopf axiom, JSON report");
    CLI::App* hdoc = hcmd->add_subcommand("doc", "doc derivative table for a grouplike clock");
    for (CLI::App* c : {hverify, hdoc}) {
        c->add_option("--builtin", ho.builtin, "sweedler|cyclic");
        c->add_option("--n", ho.n, "order for the cyclic group algebra");
        c->add_option("--file", ho.file, "structure constants JSON");
        c->add_option("--out", ho.out, "output path (default stdout)");
    }
    hdoc->add_option("--grouplike", ho.grouplike, "basis label of the clock element");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp" ||
            e.get_name() == "CallForVersion")
            return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (verify_cmd->parsed()) return run_verify(vo);
        if (chaos->parsed()) {
            if (cstep->parsed()) return run_chaos_step(co);
            if (corbit->parsed()) return run_chaos_orbit(co);
            if (cscan->parsed()) return run_chaos_scan(co);
        }
        if (qcmd->parsed()) {
            if (qtable->parsed()) return run_qcalc_table(qo);
            if (qdq->parsed()) return run_qcalc_dq(qo);
        }
        if (net->parsed()) {
            if (npen->parsed()) return run_netamp_partition(no, true);
            if (npart->parsed()) return run_netamp_partition(no, false);
            if (nchain->parsed()) return run_netamp_chain(no);
            if (ncheck->parsed()) return run_netamp_checkerboard(no);
        }
        if (hcmd->parsed()) {
            if (hverify->parsed()) return run_hopf_verify(ho);
            if (hdoc->parsed()) return run_hopf_doc(ho);
        }
    } catch (const std::invalid_argument& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 2;
}
