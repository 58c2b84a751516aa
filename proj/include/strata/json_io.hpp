// JSON encodings of the library's interchange objects. Schemas:
//   poset        { "elements": [string], "covers": [[string,string]] }
//   arrangement  { "d": int, "p": int, "q": int, "matrix": [[int..]..] }
//   complex      { "vertices": [string], "facets": [[string..]..] }
//   action       { "poset": <poset>, "generators": [{elem: image}..] }
//   complex act. { "vertices", "facets", "generators", "decomposition" }
//   polynomials  { "vars": ["x","y"], "terms": [{"exp":[i,j],"coef":c}..] }
// Emission is deterministic: keys are sorted by the json library and all
// sequences follow the library's canonical element order.
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "strata/action.hpp"
#include "strata/arrangement.hpp"
#include "strata/facering.hpp"
#include "strata/gsemimatroid.hpp"
#include "strata/homology.hpp"
#include "strata/poset.hpp"

namespace strata {

using nlohmann::json;

inline json int_to_json(const Int& v) {
    if (v.fits_slong_p()) return json(v.get_si());
    return json(v.get_str());
}

inline Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return Int(j.get<std::string>());
    throw Error("json: expected integer");
}

// ---- poset ----

inline json poset_to_json(const FinitePoset& p) {
    json j;
    j["elements"] = json::array();
    for (const auto& n : p.names()) j["elements"].push_back(n);
    j["covers"] = json::array();
    for (const auto& [a, b] : p.cover_pairs())
        j["covers"].push_back(json::array({p.name(a), p.name(b)}));
    return j;
}

inline FinitePoset poset_from_json(const json& j) {
    if (!j.contains("elements") || !j.contains("covers"))
        throw Error("json: poset needs \"elements\" and \"covers\"");
    std::vector<std::string> elements = j.at("elements").get<std::vector<std::string>>();
    std::vector<std::pair<std::string, std::string>> covers;
    for (const auto& c : j.at("covers")) {
        if (!c.is_array() || c.size() != 2) throw Error("json: cover must be a pair");
        covers.emplace_back(c.at(0).get<std::string>(), c.at(1).get<std::string>());
    }
    return FinitePoset(std::move(elements), covers);
}

// ---- arrangement ----

inline json arrangement_to_json(const ArrangementSpec& s) {
    json j;
    j["d"] = s.d;
    j["p"] = s.p;
    j["q"] = s.q;
    j["matrix"] = json::array();
    for (int r = 0; r < s.d; ++r) {
        json row = json::array();
        for (int c = 0; c < s.n; ++c) row.push_back(int_to_json(s.matrix.at(r, c)));
        j["matrix"].push_back(row);
    }
    return j;
}

inline ArrangementSpec arrangement_from_json(const json& j) {
    ArrangementSpec s;
    if (!j.contains("d") || !j.contains("matrix"))
        throw Error("json: arrangement needs \"d\" and \"matrix\"");
    s.d = j.at("d").get<int>();
    s.p = j.value("p", 0);
    s.q = j.value("q", 0);
    const json& m = j.at("matrix");
    if (!m.is_array() || static_cast<int>(m.size()) != s.d)
        throw Error("json: matrix must have d rows");
    s.n = s.d == 0 ? 0 : static_cast<int>(m.at(0).size());
    s.matrix = IntMatrix(s.d, s.n);
    for (int r = 0; r < s.d; ++r) {
        if (static_cast<int>(m.at(r).size()) != s.n) throw Error("json: ragged matrix");
        for (int c = 0; c < s.n; ++c) s.matrix.at(r, c) = int_from_json(m.at(r).at(c));
    }
    return s;
}

// ---- simplicial complex ----

inline json complex_to_json(const SimplicialComplexData& sc) {
    json j;
    j["vertices"] = sc.vertices();
    j["facets"] = json::array();
    for (const Face& f : sc.facets()) {
        json face = json::array();
        for (int v : f) face.push_back(sc.vertices()[v]);
        j["facets"].push_back(face);
    }
    return j;
}

inline SimplicialComplexData complex_from_json(const json& j) {
    if (!j.contains("vertices") || !j.contains("facets"))
        throw Error("json: complex needs \"vertices\" and \"facets\"");
    std::vector<std::string> vertices = j.at("vertices").get<std::vector<std::string>>();
    std::map<std::string, int> idx;
    for (size_t i = 0; i < vertices.size(); ++i) idx[vertices[i]] = static_cast<int>(i);
    std::vector<Face> facets;
    for (const auto& f : j.at("facets")) {
        Face face;
        for (const auto& v : f) {
            auto it = idx.find(v.get<std::string>());
            if (it == idx.end()) throw Error("json: unknown vertex in facet");
            face.push_back(it->second);
        }
        facets.push_back(std::move(face));
    }
    return SimplicialComplexData(std::move(vertices), std::move(facets));
}

// ---- actions ----

inline Perm perm_from_json(const json& j, const std::vector<std::string>& names) {
    std::map<std::string, int> idx;
    for (size_t i = 0; i < names.size(); ++i) idx[names[i]] = static_cast<int>(i);
    Perm g(names.size());
    if (!j.is_object()) throw Error("json: permutation must be an object");
    for (size_t i = 0; i < names.size(); ++i) g[i] = static_cast<int>(i);
    for (const auto& [k, v] : j.items()) {
        auto a = idx.find(k);
        auto b = idx.find(v.get<std::string>());
        if (a == idx.end() || b == idx.end()) throw Error("json: unknown element in permutation");
        g[a->second] = b->second;
    }
    return g;
}

inline json perm_to_json(const Perm& g, const std::vector<std::string>& names) {
    json j = json::object();
    for (size_t i = 0; i < g.size(); ++i)
        if (g[i] != static_cast<int>(i)) j[names[i]] = names[g[i]];
    return j;
}

inline PosetAction poset_action_from_json(const json& j) {
    if (!j.contains("poset")) throw Error("json: action needs \"poset\"");
    FinitePoset p = poset_from_json(j.at("poset"));
    std::vector<Perm> gens;
    for (const auto& gj : j.value("generators", json::array()))
        gens.push_back(perm_from_json(gj, p.names()));
    return PosetAction(std::move(p), std::move(gens));
}

inline ComplexAction complex_action_from_json(const json& j) {
    SimplicialComplexData sc = complex_from_json(j);
    std::vector<Perm> gens;
    for (const auto& gj : j.value("generators", json::array()))
        gens.push_back(perm_from_json(gj, sc.vertices()));
    std::vector<std::vector<Perm>> decomp;
    for (const auto& sub : j.value("decomposition", json::array())) {
        std::vector<Perm> part;
        for (const auto& gj : sub) part.push_back(perm_from_json(gj, sc.vertices()));
        decomp.push_back(std::move(part));
    }
    return ComplexAction(std::move(sc), std::move(gens), std::move(decomp));
}

// ---- polynomials ----

inline json poly1_to_json(const Polynomial1& p, const std::string& var = "t") {
    json j;
    j["vars"] = json::array({var});
    j["terms"] = json::array();
    for (int e = 0; e <= p.degree(); ++e)
        if (p.coeff(e) != 0)
            j["terms"].push_back({{"exp", json::array({e})}, {"coef", int_to_json(p.coeff(e))}});
    j["pretty"] = p.str(var);
    return j;
}

inline json poly2_to_json(const Polynomial2& p) {
    json j;
    j["vars"] = json::array({"x", "y"});
    j["terms"] = json::array();
    for (const auto& [e, c] : p.terms())
        j["terms"].push_back(
            {{"exp", json::array({e.first, e.second})}, {"coef", int_to_json(c)}});
    j["pretty"] = p.str();
    return j;
}

// ---- reports ----

inline json homology_to_json(const HomologyResult& h) {
    json j = json::object();
    for (const auto& [deg, rank] : h.betti) {
        json entry;
        entry["rank"] = rank;
        entry["torsion"] = json::array();
        for (const Int& t : h.torsion_at(deg)) entry["torsion"].push_back(int_to_json(t));
        j[std::to_string(deg)] = entry;
    }
    return j;
}

inline json cm_poset_report_to_json(long characteristic, const CmPosetReport& r) {
    json j;
    j["characteristic"] = characteristic;
    j["cm"] = r.cm;
    if (!r.cm) j["witness"] = json::array({r.witness_lo, r.witness_hi});
    else j["witness"] = nullptr;
    return j;
}

inline json hilbert_to_json(const HilbertTable& t) {
    json j;
    j["characteristic"] = t.characteristic;
    j["values"] = json::array();
    for (const Int& v : t.values) j["values"].push_back(int_to_json(v));
    return j;
}

inline json delta_report_to_json(const DeltaReport& r) {
    json j;
    j["per_basis"] = json::array();
    for (const auto& e : r.per_basis) {
        json entry;
        entry["basis"] = json::array();
        for (int i : e.basis) entry["basis"].push_back(i + 1);  // 1-based, as printed
        entry["w"] = json::array();
        for (const auto& w : e.w) {
            json v = json::array();
            for (const Int& c : w) v.push_back(int_to_json(c));
            entry["w"].push_back(v);
        }
        entry["delta"] = int_to_json(e.delta);
        j["per_basis"].push_back(entry);
    }
    j["delta"] = int_to_json(r.delta);
    return j;
}

inline json presentation_to_json(const GradedPresentation& pres) {
    json j;
    j["variables"] = json::array();
    for (const auto& v : pres.vars)
        j["variables"].push_back({{"name", v.name}, {"degree", v.degree}});
    j["generators"] = json::array();
    for (const auto& g : pres.generators) {
        json gen = json::array();
        for (const auto& [m, c] : g) {
            json term;
            term["coef"] = int_to_json(c);
            term["monomial"] = json::object();
            for (size_t i = 0; i < m.size(); ++i)
                if (m[i] != 0) term["monomial"][pres.vars[i].name] = m[i];
            gen.push_back(term);
        }
        j["generators"].push_back(gen);
    }
    return j;
}

}  // namespace strata
