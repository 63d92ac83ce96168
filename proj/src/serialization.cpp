#include "beltrami/serialization.hpp"

#include "beltrami/error.hpp"

namespace beltrami {

json to_json(const Vec2& v) { return json::array({v.x, v.y}); }

Vec2 vec2_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) throw Error(ErrorKind::config, "expected a 2-vector");
    return {j[0].get<double>(), j[1].get<double>()};
}

json to_json(const LatticePair& lattice) {
    return {{"lambda1", to_json(lattice.lambda1())},
            {"lambda2", to_json(lattice.lambda2())},
            {"k1", to_json(lattice.k1())},
            {"k2", to_json(lattice.k2())},
            {"cell_area", lattice.cell_area()}};
}

LatticePair lattice_from_json(const json& j) {
    return LatticePair::build(vec2_from_json(j.at("lambda1")), vec2_from_json(j.at("lambda2")));
}

json to_json(const SpectralScalarField& f) {
    json coeffs = json::array();
    for (std::size_t i = 0; i < f.size(); ++i) {
        const cplx c = f.data()[i];
        if (c == cplx{}) continue;
        const ModeIndex m = f.index_of(i);
        coeffs.push_back(json::array({m.m1, m.m2, c.real(), c.imag()}));
    }
    return {{"N", f.N()}, {"coeffs", coeffs}};
}

SpectralScalarField scalar_field_from_json(const json& j, const LatticePair& lattice) {
    try {
        SpectralScalarField f(lattice, j.at("N").get<int>());
        for (const auto& row : j.at("coeffs")) {
            if (!row.is_array() || row.size() != 4)
                throw Error(ErrorKind::config, "coefficient rows must be [m1, m2, re, im]");
            f.set({row[0].get<int>(), row[1].get<int>()},
                  {row[2].get<double>(), row[3].get<double>()});
        }
        return f;
    } catch (const json::exception& e) {
        throw Error(ErrorKind::config, std::string("malformed field JSON: ") + e.what());
    }
}

json to_json(const SpectralVectorField& f) { return {{"x", to_json(f.x)}, {"y", to_json(f.y)}}; }

SpectralVectorField vector_field_from_json(const json& j, const LatticePair& lattice) {
    return {scalar_field_from_json(j.at("x"), lattice), scalar_field_from_json(j.at("y"), lattice)};
}

json to_json(const ScalarSeries& s) {
    json out = json::array();
    for (std::size_t k = 0; k < s.terms.size(); ++k)
        out.push_back({{"order", k}, {"arity", "scalar"}, {"field", to_json(s.terms[k])}});
    return out;
}

json to_json(const VectorSeries& s) {
    json out = json::array();
    for (std::size_t k = 0; k < s.terms.size(); ++k)
        out.push_back({{"order", k}, {"arity", "vector"}, {"field", to_json(s.terms[k])}});
    return out;
}

}  // namespace beltrami
