#pragma once

#include <filesystem>
#include <string>

#include "beltrami/lattice.hpp"
#include "beltrami/serialization.hpp"

namespace beltrami {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

struct Tolerances {
    double resonance = 1e-8;
    double root = 1e-8;
    double padding = 2.0;
    double newton = 1e-12;
};

struct RunConfig {
    LatticePair lattice = LatticePair::build({2.0 * 3.141592653589793, 0.0}, {0.0, 2.0 * 3.141592653589793});
    PhysicalParams params;
    bool c0_given = false;
    int N = 16;
    int K = 4;
    Tolerances tol;
    // FNV-1a of the canonical dump of the input document.
    std::string hash;
};

// Throws ErrorKind::config on schema violations or invalid physical parameters.
RunConfig parse_config(const json& doc);
RunConfig load_config(const std::filesystem::path& path);

// 16 hex digits.
std::string fnv1a_hex(const std::string& bytes);

// Velocity with (c·k_i)^2 = (g + beta |k_i|^2) |k_i|^2 t(|k_i|), ignoring the alpha coupling.
Vec2 c0_guess(const LatticePair& lattice, const PhysicalParams& params);

// Solves for c0 when the config leaves it out.
void resolve_c0(RunConfig& cfg);

json config_to_json(const RunConfig& cfg);

}  // namespace beltrami
