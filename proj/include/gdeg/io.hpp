#pragma once

#include "lifting.hpp"

#include <json.hpp>

#include <fstream>
#include <numeric>
#include <sstream>

namespace gdeg {

using json = nlohmann::json;

#ifndef GDEG_DATA_DIR
#define GDEG_DATA_DIR "data"
#endif

inline std::string& data_dir()
{
    static std::string d = GDEG_DATA_DIR;
    return d;
}

inline std::string data_path(const std::string& rel) { return data_dir() + "/" + rel; }

inline std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Non-empty lines, with '#' comment lines skipped.
inline std::vector<std::string> read_lines(const std::string& path)
{
    std::istringstream in(read_file(path));
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos || line[b] == '#') continue;
        auto e = line.find_last_not_of(" \t\r");
        out.push_back(line.substr(b, e - b + 1));
    }
    return out;
}

inline json read_json(const std::string& path)
{
    try {
        return json::parse(read_file(path));
    } catch (const json::parse_error& e) {
        throw Error("bad JSON in '" + path + "': " + e.what());
    }
}

inline Q json_rational(const json& j)
{
    if (j.is_number_integer()) return Q(j.get<long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw Error("expected an integer or a rational string");
}

inline QVec json_qvec(const json& j)
{
    QVec v;
    for (const auto& x : j) v.push_back(json_rational(x));
    return v;
}

inline json qvec_json(const QVec& v)
{
    json a = json::array();
    for (const auto& q : v) {
        if (q.get_den() == 1 && q.get_num().fits_slong_p())
            a.push_back(q.get_num().get_si());
        else
            a.push_back(q.get_str());
    }
    return a;
}

// {"vars": [...], "d": [...], "laurent": bool}
inline RingPtr ring_from_json(const json& j)
{
    auto vars = j.at("vars").get<std::vector<std::string>>();
    QVec d = j.contains("d") ? json_qvec(j["d"]) : QVec(vars.size(), Q(1));
    return Ring::make(vars, d, j.value("laurent", false));
}

inline json ring_json(const Ring& r)
{
    return json{{"vars", r.vars()}, {"d", qvec_json(r.d())}, {"laurent", r.laurent()}};
}

// Accepts lex, grevlex, weighted, or {"weight_rows": [[...]...], "tiebreak": "lex"|"revlex", "vars": [...]}.
// "vars" lists the variables by decreasing tiebreak priority; "perm" gives the same as indices.
inline OrderSpec order_from_json(const json& j, const Ring& r)
{
    size_t n = r.nvars();
    if (j.is_string()) {
        auto s = j.get<std::string>();
        if (s == "lex") return OrderSpec::lex(n);
        if (s == "grevlex") return OrderSpec::grevlex(n);
        if (s == "weighted") return OrderSpec::weighted_revlex(r.d());
        throw Error("unknown order '" + s + "'");
    }
    if (!j.is_object()) throw Error("order must be a name or an object");
    OrderSpec o;
    const char* key = j.contains("weight_rows") ? "weight_rows" : "weights";
    if (j.contains(key))
        for (const auto& row : j.at(key)) o.weight_rows.push_back(json_qvec(row));
    auto tb = j.value("tiebreak", std::string("lex"));
    if (tb == "lex")
        o.tiebreak = Tiebreak::Lex;
    else if (tb == "revlex")
        o.tiebreak = Tiebreak::RevLex;
    else
        throw Error("unknown tiebreak '" + tb + "'");
    o.perm.resize(n);
    std::iota(o.perm.begin(), o.perm.end(), size_t(0));
    if (j.contains("perm")) o.perm = j["perm"].get<std::vector<size_t>>();
    if (j.contains("vars")) {
        o.perm.clear();
        for (const auto& v : j["vars"]) o.perm.push_back(r.at(v.get<std::string>()));
    }
    o.validate(n);
    return o;
}

inline json order_json(const OrderSpec& o)
{
    json rows = json::array();
    for (const auto& r : o.weight_rows) rows.push_back(qvec_json(r));
    return json{{"weight_rows", rows}, {"tiebreak", o.tiebreak == Tiebreak::Lex ? "lex" : "revlex"}, {"perm", o.perm}};
}

inline std::vector<std::string> poly_strings(const std::vector<Polynomial>& ps)
{
    std::vector<std::string> out;
    for (const auto& p : ps) out.push_back(p.str());
    return out;
}

inline RayMatrix rays_from_json(const json& j)
{
    std::vector<QVec> rows;
    for (const auto& r : j) rows.push_back(json_qvec(r));
    return RayMatrix(rows);
}

}  // namespace gdeg
