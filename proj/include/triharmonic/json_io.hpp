#ifndef TRIHARMONIC_JSON_IO_HPP
#define TRIHARMONIC_JSON_IO_HPP

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "affine.hpp"
#include "algebra.hpp"
#include "errors.hpp"
#include "grid.hpp"
#include "phifun.hpp"
#include "scalar.hpp"
#include "solver.hpp"
#include "tripoly.hpp"

namespace triharmonic {

using Json = nlohmann::ordered_json;

namespace jsonio {

inline Json load_json_text(const std::string& text, const std::string& what) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw BadInput(what + ": malformed JSON");
    return j;
}

inline Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw BadInput("cannot open file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return load_json_text(ss.str(), path);
}

inline Rational parse_rational(const Json& v, const std::string& what) {
    if (v.is_number_integer()) return Rational(v.get<long long>());
    if (v.is_string()) return rational_from_string(v.get<std::string>());
    if (v.is_number_float()) return rational_from_double(v.get<double>());
    throw BadInput(what + ": expected integer, \"num/den\" string, or float");
}

inline Vec3<Rational> parse_element(const Json& v, const std::string& what) {
    if (!v.is_array() || v.size() != 3) throw BadInput(what + ": expected an array of 3 entries");
    return {parse_rational(v[0], what), parse_rational(v[1], what), parse_rational(v[2], what)};
}

inline Json element_to_json(const Element<Rational>& e) {
    return Json::array({rational_to_string(e[0]), rational_to_string(e[1]),
                        rational_to_string(e[2])});
}

// ---- AlgebraParams <-> {"p": [p1..p6]} ----

inline AlgebraParams<Rational> params_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("p")) throw BadInput("params: expected object with key \"p\"");
    const Json& arr = j["p"];
    if (!arr.is_array() || arr.size() != 6) throw BadInput("params: \"p\" must hold 6 entries");
    std::array<Rational, 6> p;
    for (std::size_t i = 0; i < 6; ++i) p[i] = parse_rational(arr[i], "params.p");
    return AlgebraParams<Rational>(p);
}

inline Json params_to_json(const AlgebraParams<Rational>& P) {
    Json arr = Json::array();
    for (const auto& v : P.p) arr.push_back(rational_to_string(v));
    return Json{{"p", arr}};
}

// ---- AffineMap <-> {"A": [[..],[..],[..]], "k": [..]} ----

inline AffineMap<Rational> affine_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("A")) throw BadInput("map: expected object with key \"A\"");
    const Json& a = j["A"];
    if (!a.is_array() || a.size() != 3) throw BadInput("map: \"A\" must hold 3 rows");
    AffineMap<Rational> m;
    for (std::size_t i = 0; i < 3; ++i) m.A[i] = parse_element(a[i], "map.A row");
    if (j.contains("k")) m.k = parse_element(j["k"], "map.k");
    else m.k = Element<Rational>{Rational(0), Rational(0), Rational(0)};
    return m;
}

inline Json affine_to_json(const AffineMap<Rational>& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < 3; ++i) rows.push_back(element_to_json(m.A[i]));
    return Json{{"A", rows}, {"k", element_to_json(m.k)}};
}

// ---- PhiFunction <-> {"kind": ..., ...} ----

inline std::vector<Element<Rational>> parse_coeff_list(const Json& arr, const std::string& what) {
    if (!arr.is_array()) throw BadInput(what + ": expected an array of coefficient elements");
    std::vector<Element<Rational>> out;
    for (const auto& c : arr) out.push_back(parse_element(c, what));
    return out;
}

inline PhiFunction<Rational> phifun_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("kind"))
        throw BadInput("function: expected object with key \"kind\"");
    const std::string kind = j["kind"].get<std::string>();
    PhiFunction<Rational> f;
    if (kind == "poly") {
        f.kind = FunKind::Polynomial;
        if (!j.contains("coeffs")) throw BadInput("function: poly kind needs \"coeffs\"");
        f.coeffs = parse_coeff_list(j["coeffs"], "function.coeffs");
    } else if (kind == "rational") {
        f.kind = FunKind::Rational;
        if (!j.contains("num") || !j.contains("den"))
            throw BadInput("function: rational kind needs \"num\" and \"den\"");
        f.num_coeffs = parse_coeff_list(j["num"], "function.num");
        f.den_coeffs = parse_coeff_list(j["den"], "function.den");
    } else if (kind == "exp" || kind == "sin" || kind == "cos" || kind == "sinh" ||
               kind == "cosh") {
        f.kind = kind == "exp" ? FunKind::Exp
                 : kind == "sin" ? FunKind::Sin
                 : kind == "cos" ? FunKind::Cos
                 : kind == "sinh" ? FunKind::Sinh
                                  : FunKind::Cosh;
        if (j.contains("coeff")) f.tcoeff = parse_element(j["coeff"], "function.coeff");
        else f.tcoeff = Element<Rational>{Rational(1), Rational(0), Rational(0)};
    } else {
        throw BadInput("function: unknown kind \"" + kind + "\"");
    }
    if (j.contains("params")) f.P = params_from_json(j["params"]);
    if (j.contains("map")) f.phi = affine_from_json(j["map"]);
    return f;
}

inline Json phifun_to_json(const PhiFunction<Rational>& f) {
    Json j;
    j["kind"] = to_string(f.kind);
    switch (f.kind) {
        case FunKind::Polynomial: {
            Json arr = Json::array();
            for (const auto& c : f.coeffs) arr.push_back(element_to_json(c));
            j["coeffs"] = arr;
            break;
        }
        case FunKind::Rational: {
            Json num = Json::array(), den = Json::array();
            for (const auto& c : f.num_coeffs) num.push_back(element_to_json(c));
            for (const auto& c : f.den_coeffs) den.push_back(element_to_json(c));
            j["num"] = num;
            j["den"] = den;
            break;
        }
        default:
            j["coeff"] = element_to_json(f.tcoeff);
    }
    j["params"] = params_to_json(f.P);
    j["map"] = affine_to_json(f.phi);
    return j;
}

// ---- PolyField <-> {"F1": [{"e":[i,j,k],"c":...},...], ...} ----

inline TriPoly<Rational> poly_from_json(const Json& arr, const std::string& what) {
    if (!arr.is_array()) throw BadInput(what + ": expected an array of terms");
    TriPoly<Rational> p;
    for (const auto& t : arr) {
        if (!t.is_object() || !t.contains("e") || !t.contains("c"))
            throw BadInput(what + ": each term needs \"e\" (exponents) and \"c\" (coefficient)");
        const Json& e = t["e"];
        if (!e.is_array() || e.size() != 3) throw BadInput(what + ": \"e\" must hold 3 exponents");
        TriPoly<Rational>::Key k{e[0].get<int>(), e[1].get<int>(), e[2].get<int>()};
        if (k[0] < 0 || k[1] < 0 || k[2] < 0) throw BadInput(what + ": exponents must be >= 0");
        p.add_term(k, parse_rational(t["c"], what));
    }
    return p;
}

inline Json poly_to_json(const TriPoly<Rational>& p) {
    Json arr = Json::array();
    for (const auto& [k, c] : p.terms)
        arr.push_back(Json{{"e", Json::array({k[0], k[1], k[2]})}, {"c", rational_to_string(c)}});
    return arr;
}

inline PolyField<Rational> polyfield_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("F1") || !j.contains("F2") || !j.contains("F3"))
        throw BadInput("field: expected object with keys \"F1\", \"F2\", \"F3\"");
    return {poly_from_json(j["F1"], "field.F1"), poly_from_json(j["F2"], "field.F2"),
            poly_from_json(j["F3"], "field.F3")};
}

inline Json polyfield_to_json(const PolyField<Rational>& f, bool lamellar = false) {
    Json j;
    j["F1"] = poly_to_json(f.f1);
    j["F2"] = poly_to_json(f.f2);
    j["F3"] = poly_to_json(f.f3);
    if (lamellar) j["lamellar"] = true;
    return j;
}

// ---- Field spec: a PhiFunction or an explicit PolyField ----

struct LoadedField {
    enum class Type { Function, Polynomial } type = Type::Function;
    PhiFunction<Rational> fun;
    PolyField<Rational> poly;
    bool lamellar_declared = false;
};

inline LoadedField field_from_json(const Json& j) {
    LoadedField lf;
    if (j.is_object() && j.contains("kind")) {
        lf.type = LoadedField::Type::Function;
        lf.fun = phifun_from_json(j);
    } else if (j.is_object() && j.contains("F1")) {
        lf.type = LoadedField::Type::Polynomial;
        lf.poly = polyfield_from_json(j);
        lf.lamellar_declared = j.value("lamellar", false);
    } else {
        throw BadInput("field spec: expected a function object (\"kind\") or a field object (\"F1\"..)");
    }
    return lf;
}

// ---- GridSpec <-> {"min": [...], "max": [...], "n": [...]} ----

inline GridSpec grid_from_json(const Json& j) {
    if (!j.is_object()) throw BadInput("grid: expected object");
    GridSpec g; // absent keys keep the [-1,1]^3, 11^3 defaults
    const auto vec = [&](const char* key, Vec3<double>& out) {
        if (!j.contains(key)) return;
        const Json& a = j[key];
        if (!a.is_array() || a.size() != 3)
            throw BadInput(std::string("grid: \"") + key + "\" must hold 3 numbers");
        for (std::size_t i = 0; i < 3; ++i) out[i] = a[i].get<double>();
    };
    vec("min", g.min);
    vec("max", g.max);
    if (j.contains("n")) {
        const Json& n = j["n"];
        if (!n.is_array() || n.size() != 3) throw BadInput("grid: \"n\" must hold 3 counts");
        for (std::size_t i = 0; i < 3; ++i) g.n[i] = n[i].get<int>();
    }
    return g;
}

inline Json grid_to_json(const GridSpec& g) {
    return Json{{"min", {g.min[0], g.min[1], g.min[2]}},
                {"max", {g.max[0], g.max[1], g.max[2]}},
                {"n", {g.n[0], g.n[1], g.n[2]}}};
}

// ---- Solver candidates ----

inline Json param_candidates_to_json(const std::vector<ParamCandidate>& cs) {
    Json arr = Json::array();
    for (const auto& c : cs) {
        Json p = Json::array();
        for (double v : c.params.p) p.push_back(v);
        arr.push_back(Json{{"p", p}, {"residual", c.residual}, {"restart_index", c.restart_index}});
    }
    return arr;
}

inline Json matrix_candidates_to_json(const std::vector<MatrixCandidate>& cs) {
    Json arr = Json::array();
    for (const auto& c : cs) {
        Json rows = Json::array();
        for (std::size_t i = 0; i < 3; ++i)
            rows.push_back(Json::array({c.phi.A(i, 0), c.phi.A(i, 1), c.phi.A(i, 2)}));
        arr.push_back(
            Json{{"A", rows}, {"residual", c.residual}, {"restart_index", c.restart_index}});
    }
    return arr;
}

// ---- Sample tables: CSV and JSON ----

inline const char* table_header(bool with_stencils) {
    return with_stencils ? "x,y,z,F1,F2,F3,div,curl1,curl2,curl3,lap1,lap2,lap3"
                         : "x,y,z,F1,F2,F3";
}

inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline std::string table_to_csv(const SampleTable& t) {
    std::string out = table_header(t.with_stencils);
    out += "\n";
    const std::size_t ncols = t.ncols();
    for (const auto& row : t.rows) {
        for (std::size_t cidx = 0; cidx < ncols; ++cidx) {
            if (cidx) out += ",";
            out += format_double(row[cidx]);
        }
        out += "\n";
    }
    return out;
}

inline Json table_to_json(const SampleTable& t) {
    Json cols = Json::array();
    {
        std::string header = table_header(t.with_stencils);
        std::size_t pos = 0;
        while (pos != std::string::npos) {
            const std::size_t comma = header.find(',', pos);
            cols.push_back(header.substr(pos, comma == std::string::npos ? comma : comma - pos));
            pos = comma == std::string::npos ? comma : comma + 1;
        }
    }
    Json rows = Json::array();
    const std::size_t ncols = t.ncols();
    for (const auto& row : t.rows) {
        Json r = Json::array();
        for (std::size_t cidx = 0; cidx < ncols; ++cidx) r.push_back(row[cidx]);
        rows.push_back(r);
    }
    return Json{{"columns", cols}, {"rows", rows}, {"singular_rows", t.singular_rows}};
}

/// Parse a table back from CSV text (header + %.17g cells; "nan" allowed).
inline SampleTable table_from_csv(const std::string& text) {
    SampleTable t;
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw BadInput("table: empty CSV");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string h13 = table_header(true), h6 = table_header(false);
    if (line == h13) t.with_stencils = true;
    else if (line == h6) t.with_stencils = false;
    else throw BadInput("table: unrecognized CSV header");
    const std::size_t ncols = t.ncols();
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::array<double, 13> row{};
        std::size_t pos = 0;
        for (std::size_t cidx = 0; cidx < ncols; ++cidx) {
            const std::size_t comma = line.find(',', pos);
            const std::string cell =
                line.substr(pos, comma == std::string::npos ? comma : comma - pos);
            try {
                row[cidx] = std::stod(cell);
            } catch (const std::exception&) {
                throw BadInput("table: bad numeric cell \"" + cell + "\"");
            }
            if (comma == std::string::npos && cidx + 1 < ncols)
                throw BadInput("table: short CSV row");
            pos = comma + 1;
        }
        if (std::isnan(row[3]) || std::isnan(row[4]) || std::isnan(row[5])) ++t.singular_rows;
        t.rows.push_back(row);
    }
    return t;
}

} // namespace jsonio

} // namespace triharmonic

#endif // TRIHARMONIC_JSON_IO_HPP
