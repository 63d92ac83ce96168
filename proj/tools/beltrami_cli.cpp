#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "beltrami/bifurcation.hpp"
#include "beltrami/config.hpp"
#include "beltrami/dispersion.hpp"
#include "beltrami/error.hpp"
#include "beltrami/multipliers.hpp"
#include "beltrami/residual.hpp"
#include "beltrami/serialization.hpp"
#include "beltrami/spectral.hpp"
#include "beltrami/symbols.hpp"

namespace fs = std::filesystem;
using namespace beltrami;

namespace {

struct Common {
    std::string config_path;
    std::string out_dir;
    bool json_errors = false;
    unsigned seed = 0;
};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::vector<double> parse_list(const std::string& s) {
    std::vector<double> v;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            v.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw Error(ErrorKind::config, "bad number '" + item + "' in list");
        }
    }
    return v;
}

Vec2 parse_pair(const std::string& s, const char* what) {
    const std::vector<double> v = parse_list(s);
    if (v.size() != 2) throw Error(ErrorKind::config, std::string(what) + " expects two comma-separated numbers");
    return {v[0], v[1]};
}

class Output {
public:
    Output(const Common& c, const RunConfig& cfg) : dir_(c.out_dir), cfg_(cfg) {
        if (!dir_.empty()) {
            std::error_code ec;
            fs::create_directories(dir_, ec);
            if (ec) throw Error(ErrorKind::io, "cannot create output directory " + dir_);
        }
    }

    json stamp(json j) const {
        j["config_hash"] = cfg_.hash;
        j["version"] = kVersion;
        return j;
    }

    void json_file(const std::string& name, const json& j) const {
        write(name, stamp(j).dump(2) + "\n");
    }

    void csv_file(const std::string& name, const std::string& header,
                  const std::vector<std::string>& rows) const {
        std::string s = "# config_hash=" + cfg_.hash + " version=" + kVersion + "\n" + header + "\n";
        for (const auto& r : rows) s += r + "\n";
        write(name, s);
    }

private:
    void write(const std::string& name, const std::string& body) const {
        if (dir_.empty()) {
            std::cout << body;
            return;
        }
        const fs::path p = fs::path(dir_) / name;
        std::ofstream out(p, std::ios::binary);
        if (!out) throw Error(ErrorKind::io, "cannot write " + p.string());
        out << body;
    }

    std::string dir_;
    const RunConfig& cfg_;
};

int exit_code(ErrorKind k) {
    switch (k) {
        case ErrorKind::config:
        case ErrorKind::io: return 2;
        case ErrorKind::resonance: return 3;
        case ErrorKind::transversality: return 4;
        case ErrorKind::degenerate_lattice:
        case ErrorKind::near_zero_divisor:
        case ErrorKind::degenerate_fit:
        case ErrorKind::range_violation: return 5;
        default: return 1;
    }
}

int report_error(const Common& c, ErrorKind kind, const std::string& what) {
    if (c.json_errors) {
        json j = {{"error", {{"kind", std::string(to_string(kind))}, {"message", what}}},
                  {"exit_code", exit_code(kind)},
                  {"version", kVersion}};
        std::cerr << j.dump() << "\n";
    } else {
        std::cerr << "error (" << to_string(kind) << "): " << what << "\n";
    }
    return exit_code(kind);
}

RunConfig load(const Common& c, bool need_c0) {
    RunConfig cfg = load_config(c.config_path);
    const NonresonanceReport nr = check_nonresonance(cfg.lattice, cfg.params, cfg.N, cfg.tol.resonance);
    if (!nr.ok()) {
        const ResonantMode& m = nr.resonant_modes.front();
        std::ostringstream os;
        os << nr.resonant_modes.size() << " resonant mode(s), first (" << m.index.m1 << ", "
           << m.index.m2 << ") " << to_string(m.kind) << " margin " << m.margin;
        throw Error(ErrorKind::resonance, os.str());
    }
    if (need_c0) resolve_c0(cfg);
    return cfg;
}

json nr_json(const NonresonanceReport& nr) {
    json modes = json::array();
    for (const auto& m : nr.resonant_modes)
        modes.push_back({{"m", {m.index.m1, m.index.m2}},
                         {"kind", to_string(m.kind)},
                         {"margin", m.margin}});
    return {{"ok", nr.ok()},
            {"min_margin", std::isfinite(nr.min_margin) ? json(nr.min_margin) : json(nullptr)},
            {"tolerance", nr.tolerance},
            {"resonant_modes", modes}};
}

int cmd_validate(const Common& c) {
    RunConfig cfg = load_config(c.config_path);
    const NonresonanceReport nr = check_nonresonance(cfg.lattice, cfg.params, cfg.N, cfg.tol.resonance);
    json out = {{"config", config_to_json(cfg)}, {"nonresonance", nr_json(nr)}};
    int code = 0;
    if (!nr.ok()) {
        code = 3;
    } else {
        resolve_c0(cfg);
        out["config"] = config_to_json(cfg);
        const TransversalityReport tr = check_transversality(cfg.lattice, cfg.params, cfg.N, cfg.tol.root);
        json roots = json::array();
        for (const auto& m : tr.roots_found) roots.push_back({m.m1, m.m2});
        out["transversality"] = {{"pass", tr.pass},
                                 {"roots_found", roots},
                                 {"det", tr.det_value},
                                 {"min_nonkernel_ratio", tr.min_nonkernel_ratio}};
        if (!tr.pass) code = 4;
    }
    out["pass"] = code == 0;
    Output(c, cfg).json_file("validate.json", out);
    return code;
}

int cmd_dispersion_scan(const Common& c) {
    RunConfig cfg = load(c, true);
    const PhysicalParams& p = cfg.params;
    std::vector<std::string> rows;
    for (int m1 = -cfg.N; m1 <= cfg.N; ++m1) {
        for (int m2 = -cfg.N; m2 <= cfg.N; ++m2) {
            if (m1 == 0 && m2 == 0) continue;
            const Vec2 k = cfg.lattice.mode(m1, m2);
            const double r = rho({k, p.c0, p.beta}, p);
            const double cc = multipliers_c_t(norm(k), p, cfg.tol.resonance).c;
            std::string flags;
            if (is_kernel_mode({m1, m2})) flags = "kernel";
            if (std::abs(r) < cfg.tol.root * rho_scale(k, p)) flags += flags.empty() ? "root" : "|root";
            const std::string inv = r == 0.0 ? "inf" : num(norm2(k) / (cc * r));
            rows.push_back(std::to_string(m1) + "," + std::to_string(m2) + "," + num(k.x) + "," +
                           num(k.y) + "," + num(r) + "," + inv + "," + flags);
        }
    }
    Output(c, cfg).csv_file("dispersion_scan.csv", "m1,m2,k1,k2,rho,inverse_multiplier,flags", rows);
    return 0;
}

int cmd_dispersion_eval(const Common& c, const std::string& kstr, const std::string& cstr) {
    RunConfig cfg = load(c, cstr.empty());
    const Vec2 k = parse_pair(kstr, "--k");
    const Vec2 vel = cstr.empty() ? cfg.params.c0 : parse_pair(cstr, "--c");
    const DispersionQuery q{k, vel, cfg.params.beta};
    json out = {{"k", to_json(k)},
                {"c", to_json(vel)},
                {"beta", cfg.params.beta},
                {"rho", rho(q, cfg.params)},
                {"grad_c_rho", to_json(grad_c_rho(q, cfg.params))},
                {"scale", rho_scale(k, cfg.params)}};
    Output(c, cfg).json_file("dispersion_eval.json", out);
    return 0;
}

int cmd_solve_c0(const Common& c, const std::string& guess_str, bool fd) {
    RunConfig cfg = load(c, false);
    const Vec2 guess = guess_str.empty() ? c0_guess(cfg.lattice, cfg.params) : parse_pair(guess_str, "--guess");
    SolveOptions opts;
    opts.tol = cfg.tol.newton;
    opts.finite_difference_jacobian = fd;
    const SolveResult r = solve_c0(cfg.lattice, cfg.params, cfg.params.beta, guess, opts);
    json out = {{"c0", to_json(r.c0)},
                {"guess", to_json(guess)},
                {"iterations", r.iterations},
                {"residual", r.residual}};
    Output(c, cfg).json_file("solve_c0.json", out);
    return 0;
}

json tables_json(const ExpansionTables& t) {
    json eta2 = json::object();
    for (const auto& [key, field] : t.eta2) eta2[key.str()] = to_json(field);
    return {{"ab", {{t.ab[0][0], t.ab[0][1], t.ab[0][2], t.ab[0][3]},
                    {t.ab[1][0], t.ab[1][1], t.ab[1][2], t.ab[1][3]}}},
            {"mu1", {{"A2", t.mu1.A2}, {"B2", t.mu1.B2}}},
            {"mu2", {{"A2", t.mu2.A2}, {"B2", t.mu2.B2}}},
            {"eta2", eta2},
            {"formal", t.formal}};
}

int cmd_expand(const Common& c) {
    RunConfig cfg = load(c, true);
    const ExpansionTables t = build_tables(cfg.params, cfg.lattice, cfg.N);
    json out = tables_json(t);
    out["c0"] = to_json(cfg.params.c0);
    if (t.formal) out["note"] = "formal approximate solution (beta = 0)";
    Output(c, cfg).json_file("expand.json", out);
    return 0;
}

cplx parse_complex(const std::string& s, const char* what) {
    const Vec2 v = parse_pair(s, what);
    return {v.x, v.y};
}

int cmd_synthesize(const Common& c, const std::string& A, const std::string& B, int M) {
    RunConfig cfg = load(c, true);
    if (M < 2) throw Error(ErrorKind::config, "--grid must be at least 2");
    const ExpansionTables t = build_tables(cfg.params, cfg.lattice, cfg.N);
    const Synthesis s =
        synthesize_wave({parse_complex(A, "--A"), parse_complex(B, "--B")}, t, cfg.lattice, cfg.N);
    std::vector<std::pair<Vec2, cplx>> modes;
    for (std::size_t i = 0; i < s.eta.size(); ++i) {
        const cplx v = s.eta.data()[i];
        if (v == cplx{}) continue;
        const ModeIndex m = s.eta.index_of(i);
        modes.emplace_back(cfg.lattice.mode(m.m1, m.m2), v);
    }
    std::vector<std::string> rows;
    for (int j1 = 0; j1 < M; ++j1) {
        for (int j2 = 0; j2 < M; ++j2) {
            const Vec2 x = cfg.lattice.point(double(j1) / M, double(j2) / M);
            double e = 0.0;
            for (const auto& [k, v] : modes) e += (v * std::exp(cplx(0.0, dot(k, x)))).real();
            rows.push_back(num(x.x) + "," + num(x.y) + "," + num(e));
        }
    }
    const Output out(c, cfg);
    out.csv_file("surface.csv", "x,y,eta", rows);
    out.json_file("synthesis.json", {{"A", {parse_complex(A, "--A").real(), parse_complex(A, "--A").imag()}},
                                     {"B", {parse_complex(B, "--B").real(), parse_complex(B, "--B").imag()}},
                                     {"mu", to_json(s.mu)},
                                     {"eta", to_json(s.eta)},
                                     {"formal", t.formal}});
    return 0;
}

int cmd_residual(const Common& c, const std::string& amps, const std::string& dA, const std::string& dB,
                 int K) {
    RunConfig cfg = load(c, true);
    const std::vector<double> a = parse_list(amps);
    const int order = K > 0 ? K : cfg.K;
    ExpansionOptions opts;
    opts.padding = cfg.tol.padding;
    const ScalingStudy st = scaling_study(a, {parse_complex(dA, "--dir-A"), parse_complex(dB, "--dir-B")},
                                          order, cfg.params, cfg.lattice, cfg.N, opts);
    std::vector<std::string> rows;
    json table = json::array();
    for (const auto& r : st.rows) {
        rows.push_back(num(r.amplitude) + "," + num(r.l2) + "," + num(r.sup) + "," + num(r.kernel_l2));
        table.push_back({{"amplitude", r.amplitude}, {"l2", r.l2}, {"sup", r.sup}, {"kernel_l2", r.kernel_l2}});
    }
    const Output out(c, cfg);
    out.csv_file("residual.csv", "amplitude,l2,sup,kernel_l2", rows);
    out.json_file("residual.json", {{"K", st.K},
                                    {"full_slope", st.full_slope},
                                    {"kernel_slope", st.kernel_slope},
                                    {"rows", table}});
    return 0;
}

int cmd_symbols_eval(const Common& c, const std::string& input) {
    RunConfig cfg = load_config(c.config_path);
    std::ifstream in(input);
    if (!in) throw Error(ErrorKind::io, "cannot open " + input);
    std::vector<std::string> rows;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        if (line.find_first_not_of("0123456789+-.eE, \t") != std::string::npos) continue;  // header
        const std::vector<double> v = parse_list(line);
        if (v.size() != 7)
            throw Error(ErrorKind::config, "symbols input line " + std::to_string(lineno) +
                                               ": expected 7 columns (etax,etay,etaxx,etaxy,etayy,k1,k2)");
        const SymbolPoint pt{{v[0], v[1]}, {v[2], v[3], v[4]}};
        const Vec2 k{v[5], v[6]};
        const SymbolValue s = eval_lambda(pt, k, cfg.params);
        std::string r;
        for (double d : v) r += num(d) + ",";
        for (cplx z : {s.lambda1, s.lambda0, s.lambda0_alpha, s.m1, s.m0})
            r += num(z.real()) + "," + num(z.imag()) + ",";
        r.pop_back();
        rows.push_back(r);
    }
    Output(c, cfg).csv_file(
        "symbols.csv",
        "etax,etay,etaxx,etaxy,etayy,k1,k2,lambda1_re,lambda1_im,lambda0_re,lambda0_im,"
        "lambda0_alpha_re,lambda0_alpha_im,m1_re,m1_im,m0_re,m0_im",
        rows);
    return 0;
}

// Randomised equivariance and Hermitian-symmetry check of the residual functional.
int cmd_check(const Common& c, int trials) {
    RunConfig cfg = load(c, true);
    std::mt19937_64 rng(c.seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    const int band = std::min(3, cfg.N);
    ExpansionOptions opts;
    opts.padding = cfg.tol.padding;
    double worst_reflect = 0.0, worst_translate = 0.0;
    bool hermitian = true;
    for (int t = 0; t < trials; ++t) {
        SpectralScalarField eta(cfg.lattice, cfg.N);
        for (int m1 = -band; m1 <= band; ++m1)
            for (int m2 = -band; m2 <= band; ++m2) {
                if (std::make_pair(m1, m2) <= std::make_pair(0, 0)) continue;
                const cplx z = 0.05 / (1.0 + m1 * m1 + m2 * m2) * cplx(gauss(rng), gauss(rng));
                eta.set({m1, m2}, z);
                eta.set({-m1, -m2}, std::conj(z));
            }
        eta.set({0, 0}, 0.05 * gauss(rng));
        const Vec2 mu{0.01 * gauss(rng), 0.01 * gauss(rng)};
        const Vec2 shift = cfg.lattice.point(unif(rng), unif(rng));
        const auto J = evaluate_J(eta, mu, cfg.K, cfg.params, cfg.lattice, opts).residual_field;
        hermitian = hermitian && J.is_hermitian();
        const auto Jr = evaluate_J(eta.reflect(), mu, cfg.K, cfg.params, cfg.lattice, opts).residual_field;
        const auto Jt = evaluate_J(eta.translate(shift), mu, cfg.K, cfg.params, cfg.lattice, opts).residual_field;
        worst_reflect = std::max(worst_reflect, (Jr - J.reflect()).max_abs());
        worst_translate = std::max(worst_translate, (Jt - J.translate(shift)).max_abs());
    }
    const bool pass = hermitian && worst_reflect <= 1e-11 && worst_translate <= 1e-11;
    Output(c, cfg).json_file("check.json", {{"seed", c.seed},
                                            {"trials", trials},
                                            {"hermitian", hermitian},
                                            {"max_reflection_error", worst_reflect},
                                            {"max_translation_error", worst_translate},
                                            {"pass", pass}});
    return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Doubly periodic steady water waves over Beltrami flows"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);
    Common common;
    app.add_flag("--json-errors", common.json_errors, "Report errors as JSON on stderr");

    auto with_config = [&](CLI::App* sub) {
        sub->add_option("--config", common.config_path, "Run configuration (JSON)")->required();
        sub->add_option("--out", common.out_dir, "Output directory (default: stdout)");
        sub->add_option("--seed", common.seed, "Seed for randomised commands");
    };

    auto* validate = app.add_subcommand("validate", "Non-resonance and transversality report");
    with_config(validate);

    auto* dispersion = app.add_subcommand("dispersion", "Dispersion relation");
    dispersion->require_subcommand(1);
    auto* scan = dispersion->add_subcommand("scan", "rho on every mode of the truncation box");
    with_config(scan);
    auto* eval = dispersion->add_subcommand("eval", "rho and its velocity gradient at one k");
    with_config(eval);
    std::string k_str, c_str;
    eval->add_option("--k", k_str, "Wave vector kx,ky")->required();
    eval->add_option("--c", c_str, "Velocity cx,cy (default: c0)");

    auto* solve = app.add_subcommand("solve-c0", "Newton solve for the reference velocity");
    with_config(solve);
    std::string guess;
    bool fd = false;
    solve->add_option("--guess", guess, "Initial guess cx,cy");
    solve->add_flag("--fd-jacobian", fd, "Finite-difference Jacobian");

    auto* expand = app.add_subcommand("expand", "Second-order expansion tables");
    with_config(expand);

    auto* synth = app.add_subcommand("synthesize", "Second-order wave profile");
    with_config(synth);
    std::string A = "0,0", B = "0,0";
    int grid = 64;
    synth->add_option("--A", A, "Amplitude re,im");
    synth->add_option("--B", B, "Amplitude re,im");
    synth->add_option("--grid", grid, "Physical grid side M");

    auto* resid = app.add_subcommand("residual", "Residual scaling study");
    with_config(resid);
    std::string amps = "0.01,0.005,0.0025,0.00125", dA = "1,0", dB = "1,0";
    int K = 0;
    resid->add_option("--amplitudes", amps, "Decreasing amplitudes");
    resid->add_option("--dir-A", dA, "Direction of A re,im");
    resid->add_option("--dir-B", dB, "Direction of B re,im");
    resid->add_option("--K", K, "Taylor order (default: config K)");

    auto* symbols = app.add_subcommand("symbols", "Pseudodifferential symbols");
    symbols->require_subcommand(1);
    auto* seval = symbols->add_subcommand("eval", "Batch evaluation from CSV");
    with_config(seval);
    std::string input;
    seval->add_option("--input", input, "CSV rows etax,etay,etaxx,etaxy,etayy,k1,k2")->required();

    auto* check = app.add_subcommand("check", "Randomised equivariance check");
    with_config(check);
    int trials = 3;
    check->add_option("--trials", trials, "Number of random surfaces");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        if (common.json_errors) return report_error(common, ErrorKind::config, e.what());
        app.exit(e);
        return 2;
    }

    try {
        if (*validate) return cmd_validate(common);
        if (*scan) return cmd_dispersion_scan(common);
        if (*eval) return cmd_dispersion_eval(common, k_str, c_str);
        if (*solve) return cmd_solve_c0(common, guess, fd);
        if (*expand) return cmd_expand(common);
        if (*synth) return cmd_synthesize(common, A, B, grid);
        if (*resid) return cmd_residual(common, amps, dA, dB, K);
        if (*seval) return cmd_symbols_eval(common, input);
        if (*check) return cmd_check(common, trials);
    } catch (const Error& e) {
        return report_error(common, e.kind(), e.what());
    } catch (const std::exception& e) {
        return report_error(common, ErrorKind::io, e.what());
    }
    return 1;
}
