#ifndef BQT_SERIALIZE_HPP
#define BQT_SERIALIZE_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "axioms.hpp"
#include "module.hpp"
#include "structural_iso.hpp"
#include "table.hpp"

namespace bqt {

inline constexpr int json_schema_version = 1;

inline nlohmann::ordered_json json_envelope(const std::string& kind) {
    nlohmann::ordered_json j;
    j["schema"] = "bqt";
    j["version"] = json_schema_version;
    j["kind"] = kind;
    return j;
}

inline const char* violation_kind_name(AxiomViolation::Kind k) {
    switch (k) {
        case AxiomViolation::Kind::equation: return "equation";
        case AxiomViolation::Kind::existence: return "existence";
        case AxiomViolation::Kind::uniqueness: return "uniqueness";
    }
    return "?";
}

inline nlohmann::ordered_json to_json(const AxiomReport& r) {
    auto j = json_envelope("axiom_report");
    j["passed"] = r.passed;
    auto list = nlohmann::ordered_json::array();
    for (const auto& v : r.violations) {
        std::vector<std::size_t> w;
        for (auto e : v.witness) w.push_back(e.index());
        list.push_back({{"axiom", v.axiom}, {"kind", violation_kind_name(v.kind)}, {"witness", w}});
    }
    j["violations"] = std::move(list);
    return j;
}

inline std::vector<std::size_t> one_line(const ElementMap& f) {
    std::vector<std::size_t> out;
    for (auto e : f) out.push_back(e.index());
    return out;
}

/// Module elements are written with format(): "3" for scalar modules, "(1,0)" otherwise.
inline nlohmann::ordered_json pairs_json(const FiniteModule& M, const FiniteModule& M2, const ModuleMap& m) {
    auto list = nlohmann::ordered_json::array();
    for (auto [x, y] : m.pairs()) list.push_back({M.format(x), M2.format(y)});
    return list;
}

inline nlohmann::ordered_json to_json(const FiniteModule& M, const FiniteModule& M2, const IsoWitness& w) {
    nlohmann::ordered_json j;
    j["h"] = pairs_json(M, M2, w.h);
    j["k"] = pairs_json(M, M2, w.k);
    j["f"] = one_line(w.f);
    return j;
}

inline std::string format_one_line(const ElementMap& f) {
    std::string out = "[";
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(f[i].index());
    }
    return out + "]";
}

}  // namespace bqt

#endif
