#pragma once

#include <json.hpp>

#include "horolat/discreteness.hpp"
#include "horolat/horospherical.hpp"
#include "horolat/lattice_geometry.hpp"
#include "horolat/orbit.hpp"

namespace horolat {

using Json = nlohmann::json;

// Wire formats. Rationals travel as "p/q" strings (q omitted when 1),
// complex scalars as {"re": ..., "im": ...}, matrices as row-major nested
// arrays. Parse failures throw std::invalid_argument with a diagnostic.

Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json to_json(const GaussianRational& z);
GaussianRational gaussian_from_json(const Json& j);

Json to_json(const GMatrix& m);
GMatrix gmatrix_from_json(const Json& j);

Json to_json(const RMatrix& m);
RMatrix rmatrix_from_json(const Json& j);

Json to_json(const HoroLattice& f);
HoroLattice horolattice_from_json(const Json& j);

Json to_json(const EngineConfig& cfg);
EngineConfig config_from_json(const Json& j);  // missing fields keep defaults

Json to_json(const ZLattice4& L);
ZLattice4 zlattice_from_json(const Json& j);

Json to_json(const Verdict& v);

Json to_json(const MahlerReport& r);

struct CheckDiscreteInput {
    HoroLattice f1;
    HoroLattice f2;
    EngineConfig config;
};
CheckDiscreteInput check_input_from_json(const Json& j);

struct OrbitTraceInput {
    RMatrix g1;
    OrbitPath path;
    OrbitSide side = OrbitSide::Left;
};
OrbitTraceInput orbit_input_from_json(const Json& j);

}  // namespace horolat
