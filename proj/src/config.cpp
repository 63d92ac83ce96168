#include "beltrami/config.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "beltrami/dispersion.hpp"
#include "beltrami/error.hpp"
#include "beltrami/multipliers.hpp"

namespace beltrami {

namespace {

void reject_unknown(const json& obj, std::initializer_list<const char*> allowed, const char* where) {
    for (const auto& [key, _] : obj.items()) {
        bool ok = false;
        for (const char* a : allowed) ok = ok || key == a;
        if (!ok) throw Error(ErrorKind::config, std::string("unknown key '") + key + "' in " + where);
    }
}

double number(const json& obj, const char* key, double fallback) {
    if (!obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (!v.is_number()) throw Error(ErrorKind::config, std::string("'") + key + "' must be a number");
    return v.get<double>();
}

int integer(const json& obj, const char* key, int fallback) {
    if (!obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (!v.is_number_integer())
        throw Error(ErrorKind::config, std::string("'") + key + "' must be an integer");
    return v.get<int>();
}

}  // namespace

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char ch : bytes) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

RunConfig parse_config(const json& doc) {
    if (!doc.is_object()) throw Error(ErrorKind::config, "config must be a JSON object");
    reject_unknown(doc, {"schema_version", "lattice", "alpha", "gravity", "beta", "depth", "c0", "N",
                         "K", "tolerances"},
                   "config");
    const int schema = integer(doc, "schema_version", kSchemaVersion);
    if (schema != kSchemaVersion)
        throw Error(ErrorKind::config, "unsupported schema_version " + std::to_string(schema));
    RunConfig cfg;
    try {
        if (!doc.contains("lattice")) throw Error(ErrorKind::config, "missing 'lattice'");
        const json& lat = doc.at("lattice");
        if (!lat.is_object()) throw Error(ErrorKind::config, "'lattice' must be an object");
        reject_unknown(lat, {"lambda1", "lambda2"}, "lattice");
        cfg.lattice = LatticePair::build(vec2_from_json(lat.at("lambda1")),
                                         vec2_from_json(lat.at("lambda2")));
        cfg.params.alpha = number(doc, "alpha", 0.0);
        cfg.params.gravity = number(doc, "gravity", 1.0);
        cfg.params.beta = number(doc, "beta", 0.0);
        cfg.params.depth = number(doc, "depth", 1.0);
        if (doc.contains("c0")) {
            cfg.params.c0 = vec2_from_json(doc.at("c0"));
            cfg.c0_given = true;
        }
        cfg.N = integer(doc, "N", 16);
        cfg.K = integer(doc, "K", 4);
        if (doc.contains("tolerances")) {
            const json& t = doc.at("tolerances");
            if (!t.is_object()) throw Error(ErrorKind::config, "'tolerances' must be an object");
            reject_unknown(t, {"resonance", "root", "padding", "newton"}, "tolerances");
            cfg.tol.resonance = number(t, "resonance", cfg.tol.resonance);
            cfg.tol.root = number(t, "root", cfg.tol.root);
            cfg.tol.padding = number(t, "padding", cfg.tol.padding);
            cfg.tol.newton = number(t, "newton", cfg.tol.newton);
        }
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::degenerate_lattice) throw;
        throw Error(ErrorKind::config, e.what());
    } catch (const json::exception& e) {
        throw Error(ErrorKind::config, std::string("malformed config: ") + e.what());
    }
    cfg.params.validate();
    if (cfg.N < 2 || cfg.N > 256) throw Error(ErrorKind::config, "N must lie in [2, 256]");
    if (cfg.K < 1 || cfg.K > 12) throw Error(ErrorKind::config, "K must lie in [1, 12]");
    if (!(cfg.tol.resonance > 0.0) || !(cfg.tol.root > 0.0) || !(cfg.tol.newton > 0.0))
        throw Error(ErrorKind::config, "tolerances must be positive");
    if (!(cfg.tol.padding >= 1.5)) throw Error(ErrorKind::config, "padding must be at least 1.5");
    cfg.hash = fnv1a_hex(doc.dump());
    return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::io, "cannot open config " + path.string());
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw Error(ErrorKind::config, "config is not valid JSON: " + std::string(e.what()));
    }
    return parse_config(doc);
}

Vec2 c0_guess(const LatticePair& lattice, const PhysicalParams& params) {
    const Vec2 k1 = lattice.k1(), k2 = lattice.k2();
    auto speed = [&](const Vec2& k) {
        const double t = multipliers_c_t(norm(k), params).t;
        const double v = (params.gravity + params.beta * norm2(k)) * norm2(k) * t;
        return std::sqrt(std::max(v, 0.0));
    };
    const double r1 = speed(k1), r2 = speed(k2);
    const double det = k1.x * k2.y - k1.y * k2.x;
    return {(r1 * k2.y - r2 * k1.y) / det, (k1.x * r2 - k2.x * r1) / det};
}

void resolve_c0(RunConfig& cfg) {
    if (cfg.c0_given) return;
    SolveOptions opts;
    opts.tol = cfg.tol.newton;
    const SolveResult r =
        solve_c0(cfg.lattice, cfg.params, cfg.params.beta, c0_guess(cfg.lattice, cfg.params), opts);
    cfg.params.c0 = r.c0;
}

json config_to_json(const RunConfig& cfg) {
    return {{"schema_version", kSchemaVersion},
            {"lattice", {{"lambda1", to_json(cfg.lattice.lambda1())},
                         {"lambda2", to_json(cfg.lattice.lambda2())}}},
            {"alpha", cfg.params.alpha},
            {"gravity", cfg.params.gravity},
            {"beta", cfg.params.beta},
            {"depth", cfg.params.depth},
            {"c0", to_json(cfg.params.c0)},
            {"c0_solved", !cfg.c0_given},
            {"N", cfg.N},
            {"K", cfg.K},
            {"tolerances", {{"resonance", cfg.tol.resonance},
                            {"root", cfg.tol.root},
                            {"padding", cfg.tol.padding},
                            {"newton", cfg.tol.newton}}}};
}

}  // namespace beltrami
