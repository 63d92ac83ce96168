#pragma once

#include <json.hpp>

#include "beltrami/expansion.hpp"
#include "beltrami/field.hpp"
#include "beltrami/lattice.hpp"

namespace beltrami {

using json = nlohmann::json;

json to_json(const Vec2& v);
Vec2 vec2_from_json(const json& j);

json to_json(const LatticePair& lattice);
LatticePair lattice_from_json(const json& j);

// {"N": int, "coeffs": [[m1, m2, re, im], ...]} with nonzero coefficients only.
json to_json(const SpectralScalarField& f);
SpectralScalarField scalar_field_from_json(const json& j, const LatticePair& lattice);

json to_json(const SpectralVectorField& f);
SpectralVectorField vector_field_from_json(const json& j, const LatticePair& lattice);

json to_json(const ScalarSeries& s);
json to_json(const VectorSeries& s);

}  // namespace beltrami
