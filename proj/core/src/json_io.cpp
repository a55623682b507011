#include "horolat/json_io.hpp"

#include <stdexcept>

namespace horolat {

namespace {

[[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("json: " + what);
}

const Json& field(const Json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end()) fail(std::string("missing field '") + name + "'");
    return *it;
}

}  // namespace

Json to_json(const Rational& q) { return rational_str(q); }

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
    if (!j.is_string()) fail("rational must be a \"p/q\" string");
    return parse_rational(j.get<std::string>());
}

Json to_json(const GaussianRational& z) {
    return Json{{"re", rational_str(z.re)}, {"im", rational_str(z.im)}};
}

GaussianRational gaussian_from_json(const Json& j) {
    if (j.is_string() || j.is_number_integer()) return GaussianRational(rational_from_json(j));
    if (!j.is_object()) fail("complex scalar must be {\"re\",\"im\"} or a rational");
    GaussianRational z;
    if (j.contains("re")) z.re = rational_from_json(j.at("re"));
    if (j.contains("im")) z.im = rational_from_json(j.at("im"));
    return z;
}

namespace {

template <typename T, typename FromJson>
Matrix<T> matrix_from_json(const Json& j, FromJson from) {
    if (!j.is_array() || j.empty()) fail("matrix must be a non-empty nested array");
    int n = static_cast<int>(j.size());
    Matrix<T> m(n);
    for (int i = 0; i < n; ++i) {
        const Json& row = j.at(i);
        if (!row.is_array() || static_cast<int>(row.size()) != n) fail("matrix must be square");
        for (int c = 0; c < n; ++c) m.at(i, c) = from(row.at(c));
    }
    return m;
}

}  // namespace

Json to_json(const GMatrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.dim(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.dim(); ++j) row.push_back(to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

GMatrix gmatrix_from_json(const Json& j) {
    return matrix_from_json<GaussianRational>(j, gaussian_from_json);
}

Json to_json(const RMatrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.dim(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.dim(); ++j) row.push_back(to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

RMatrix rmatrix_from_json(const Json& j) {
    return matrix_from_json<Rational>(j, rational_from_json);
}

Json to_json(const HoroLattice& f) {
    Json basis = Json::array();
    for (const Complex2& v : f.basis())
        basis.push_back(Json::array({to_json(v[0]), to_json(v[1])}));
    Json out{{"side", f.side().tag == HoroTag::U ? "U" : "Uminus"}, {"basis", basis}};
    if (f.side().shape == PairShape::TwoOne) out["shape"] = "2x1";
    return out;
}

HoroLattice horolattice_from_json(const Json& j) {
    HoroSide side;
    std::string tag = field(j, "side").get<std::string>();
    if (tag == "U")
        side.tag = HoroTag::U;
    else if (tag == "Uminus")
        side.tag = HoroTag::Uminus;
    else
        fail("side must be \"U\" or \"Uminus\"");
    if (j.contains("shape")) {
        std::string shape = j.at("shape").get<std::string>();
        if (shape == "2x1")
            side.shape = PairShape::TwoOne;
        else if (shape != "1x2")
            fail("shape must be \"1x2\" or \"2x1\"");
    }
    const Json& basis = field(j, "basis");
    if (!basis.is_array() || basis.size() != 4) fail("basis must list 4 vectors");
    std::array<Complex2, 4> b;
    for (int i = 0; i < 4; ++i) {
        const Json& v = basis.at(i);
        if (!v.is_array() || v.size() != 2) fail("basis vectors live in C^2");
        b[i] = Complex2{gaussian_from_json(v.at(0)), gaussian_from_json(v.at(1))};
    }
    return HoroLattice(side, b);
}

Json to_json(const EngineConfig& cfg) {
    return Json{{"max_word_len", cfg.max_word_len},
                {"eps2", rational_str(cfg.eps2)},
                {"cascade_max", cfg.cascade_max},
                {"element_cap", cfg.element_cap},
                {"height_cap", cfg.height_cap}};
}

EngineConfig config_from_json(const Json& j) {
    EngineConfig cfg;
    if (!j.is_object()) fail("config must be an object");
    if (j.contains("max_word_len")) cfg.max_word_len = j.at("max_word_len").get<int>();
    if (j.contains("eps2")) cfg.eps2 = rational_from_json(j.at("eps2"));
    if (j.contains("cascade_max")) cfg.cascade_max = j.at("cascade_max").get<int>();
    if (j.contains("element_cap")) cfg.element_cap = j.at("element_cap").get<std::size_t>();
    if (j.contains("height_cap")) cfg.height_cap = j.at("height_cap").get<std::size_t>();
    cfg.validate();
    return cfg;
}

Json to_json(const ZLattice4& L) { return Json{{"basis", to_json(L.basis())}}; }

ZLattice4 zlattice_from_json(const Json& j) {
    RMatrix m = rmatrix_from_json(field(j, "basis"));
    if (m.dim() != 4) fail("lattice basis must be 4x4");
    return ZLattice4(std::move(m));
}

Json to_json(const Verdict& v) {
    Json out{{"kind", verdict_name(v.kind)}, {"note", v.note}};
    Json stats{{"words_tried", v.stats.words_tried},
               {"elements", v.stats.elements},
               {"dup_hits", v.stats.dup_hits},
               {"height_rejections", v.stats.height_rejections},
               {"element_cap_hit", v.stats.element_cap_hit},
               {"completed_word_len", v.stats.completed_word_len}};
    out["stats"] = std::move(stats);
    if (v.witness) {
        Json w{{"matrix", to_json(v.witness->matrix)}, {"word", v.witness->word}};
        out["witness"] = std::move(w);
    }
    if (v.witness_frob2) out["witness_frob2"] = rational_str(*v.witness_frob2);
    if (v.min_nontrivial_frob2)
        out["min_nontrivial_frob2"] = rational_str(*v.min_nontrivial_frob2);
    if (v.certified_bound) out["certified_bound"] = rational_str(*v.certified_bound);
    if (!v.cascade_profile.empty()) out["cascade_profile"] = v.cascade_profile;
    return out;
}

Json to_json(const MahlerReport& r) {
    Json out{{"pass", r.pass}};
    Json violations = Json::array();
    for (const MahlerViolation& v : r.violations) {
        Json jv{{"index", v.index},
                {"condition", std::string(1, v.condition)},
                {"value", rational_str(v.value)}};
        if (v.witness) {
            jv["witness"] = Json{{"coeffs", v.witness->coeffs},
                                 {"norm2", rational_str(v.witness->norm2)}};
        }
        violations.push_back(std::move(jv));
    }
    out["violations"] = std::move(violations);
    return out;
}

CheckDiscreteInput check_input_from_json(const Json& j) {
    HoroLattice f1 = horolattice_from_json(field(j, "f1"));
    HoroLattice f2 = horolattice_from_json(field(j, "f2"));
    EngineConfig cfg = j.contains("config") ? config_from_json(j.at("config")) : EngineConfig{};
    cfg.validate();
    return CheckDiscreteInput{std::move(f1), std::move(f2), cfg};
}

OrbitTraceInput orbit_input_from_json(const Json& j) {
    RMatrix g1 = rmatrix_from_json(field(j, "g1"));
    const Json& p = field(j, "path");
    OrbitPath path;
    std::string kind = field(p, "kind").get<std::string>();
    if (kind == "diagonal")
        path.kind = PathKind::Diagonal;
    else if (kind == "unipotent_real")
        path.kind = PathKind::UnipotentReal;
    else if (kind == "unipotent_imag")
        path.kind = PathKind::UnipotentImag;
    else
        fail("path kind must be diagonal | unipotent_real | unipotent_imag");
    path.t_min = field(p, "t_min").get<double>();
    path.t_max = field(p, "t_max").get<double>();
    path.steps = field(p, "steps").get<int>();
    path.validate();

    OrbitSide side = OrbitSide::Left;
    if (j.contains("side")) {
        std::string s = j.at("side").get<std::string>();
        if (s == "transpose_inverse")
            side = OrbitSide::TransposeInverse;
        else if (s != "left")
            fail("side must be left | transpose_inverse");
    }
    return OrbitTraceInput{std::move(g1), path, side};
}

}  // namespace horolat
