#pragma once

#include "ordcalc/expr_io.hpp"
#include "ordcalc/hopf.hpp"
#include "ordcalc/netamp.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace ordcalc::io {

using nlohmann::json;

// --- networks ---------------------------------------------------------------

struct NetworkFile {
    netamp::Network net;
    std::string rule_kind;  // "penrose" or "table"
    // one weight map per vertex; key is the comma-joined color tuple in
    // cyclic order, value a scalar string; missing tuples weigh zero
    std::vector<std::map<std::string, std::string>> table;
};

inline NetworkFile network_from_json(const json& j) {
    NetworkFile out;
    try {
        for (const auto& e : j.at("edges"))
            out.net.edges.push_back({e.at("id").get<int>(), e.at("domain").get<int>()});
        for (const auto& v : j.at("vertices")) out.net.vertices.push_back(v.get<std::vector<int>>());
        if (j.contains("fixed"))
            for (const auto& [key, val] : j.at("fixed").items())
                out.net.fixed[std::stoi(key)] = val.get<int>();
        const json& rule = j.at("rule");
        if (rule.is_string()) {
            out.rule_kind = rule.get<std::string>();
            if (out.rule_kind != "penrose")
                throw std::invalid_argument("network json: unknown rule '" + out.rule_kind + "'");
        } else {
            if (rule.at("type").get<std::string>() != "table")
                throw std::invalid_argument("network json: unknown rule type");
            out.rule_kind = "table";
            for (const auto& per_vertex : rule.at("weights"))
                out.table.push_back(per_vertex.get<std::map<std::string, std::string>>());
            if (out.table.size() != out.net.vertices.size())
                throw std::invalid_argument("network json: one weight table per vertex required");
        }
    } catch (const json::exception& ex) {
        throw std::invalid_argument(std::string("network json: ") + ex.what());
    }
    netamp::validate(out.net);
    return out;
}

inline netamp::VertexRule make_rule(const NetworkFile& file) {
    if (file.rule_kind == "penrose") return netamp::penrose_rule();
    // parse every table entry up front so malformed scalars fail at load time
    std::vector<std::map<std::string, Scalar>> parsed(file.table.size());
    for (std::size_t v = 0; v < file.table.size(); ++v)
        for (const auto& [key, val] : file.table[v]) parsed[v].emplace(key, ncalg::parse_scalar(val));
    return [parsed](std::size_t vertex, const std::vector<int>& colors) {
        std::string key;
        for (std::size_t k = 0; k < colors.size(); ++k) {
            if (k) key += ",";
            key += std::to_string(colors[k]);
        }
        const auto& table = parsed.at(vertex);
        auto it = table.find(key);
        return it == table.end() ? Scalar() : it->second;
    };
}

inline json network_to_json(const netamp::Network& net, const std::string& rule_kind = "penrose") {
    json j;
    j["edges"] = json::array();
    for (const auto& e : net.edges) j["edges"].push_back({{"id", e.id}, {"domain", e.domain}});
    j["vertices"] = net.vertices;
    if (!net.fixed.empty()) {
        json fixed = json::object();
        for (const auto& [id, c] : net.fixed) fixed[std::to_string(id)] = c;
        j["fixed"] = fixed;
    }
    j["rule"] = rule_kind;
    return j;
}

inline json amplitude_to_json(const netamp::Amplitude& amp) {
    return json{{"value", amp.value.to_string()}, {"colorings", amp.colorings}};
}

// --- hopf algebras ----------------------------------------------------------

inline json element_to_json(const hopf::Element& e) {
    json out = json::array();
    for (const auto& c : e) out.push_back(c.to_string());
    return out;
}

inline hopf::Element element_from_json(const json& j) {
    hopf::Element out;
    for (const auto& c : j) out.push_back(ncalg::parse_scalar(c.get<std::string>()));
    return out;
}

inline json hopf_to_json(const hopf::FiniteHopf& h) {
    json j;
    j["basis"] = h.basis;
    j["unit"] = element_to_json(h.unit);
    json mult = json::array();
    for (const auto& row : h.mult) {
        json jrow = json::array();
        for (const auto& cell : row) jrow.push_back(element_to_json(cell));
        mult.push_back(jrow);
    }
    j["mult"] = mult;
    json comult = json::array();
    for (const auto& terms : h.comult) {
        json jterms = json::array();
        for (const auto& t : terms)
            jterms.push_back({{"left", t.left}, {"right", t.right}, {"coeff", t.coeff.to_string()}});
        comult.push_back(jterms);
    }
    j["comult"] = comult;
    json counit = json::array();
    for (const auto& c : h.counit) counit.push_back(c.to_string());
    j["counit"] = counit;
    json antipode = json::array();
    for (const auto& row : h.antipode) antipode.push_back(element_to_json(row));
    j["antipode"] = antipode;
    return j;
}

inline hopf::FiniteHopf hopf_from_json(const json& j) {
    hopf::FiniteHopf h;
    try {
        h.basis = j.at("basis").get<std::vector<std::string>>();
        h.unit = element_from_json(j.at("unit"));
        for (const auto& row : j.at("mult")) {
            std::vector<hopf::Element> r;
            for (const auto& cell : row) r.push_back(element_from_json(cell));
            h.mult.push_back(std::move(r));
        }
        for (const auto& terms : j.at("comult")) {
            std::vector<hopf::CoTerm> ts;
            for (const auto& t : terms)
                ts.push_back({t.at("left").get<std::size_t>(), t.at("right").get<std::size_t>(),
                              ncalg::parse_scalar(t.at("coeff").get<std::string>())});
            h.comult.push_back(std::move(ts));
        }
        for (const auto& c : j.at("counit")) h.counit.push_back(ncalg::parse_scalar(c.get<std::string>()));
        for (const auto& row : j.at("antipode")) h.antipode.push_back(element_from_json(row));
    } catch (const json::exception& ex) {
        throw std::invalid_argument(std::string("hopf json: ") + ex.what());
    }
    hopf::validate_shape(h);
    return h;
}

inline json hopf_report_to_json(const hopf::HopfReport& report) {
    json checks = json::array();
    for (const auto& c : report.checks) {
        json jc{{"name", c.name}, {"passed", c.passed}};
        if (!c.detail.empty()) jc["detail"] = c.detail;
        checks.push_back(jc);
    }
    return json{{"checks", checks}, {"passed", report.all_passed()}};
}

}  // namespace ordcalc::io
