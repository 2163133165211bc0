#pragma once

// JSON shapes:
//   Partition      [2,1]            (empty partition: [])
//   Tableau        [[1,1],[2]]
//   QSeries        {"truncation": D, "coeffs": [c0, ..., cD]}
//                  coefficients that do not fit in 64 bits are written as decimal strings
//   KType          {"k": 2, "nu": [{"plus": [1], "minus": []}, {"plus": [], "minus": [1]}]}
//   RationalWeight [1,0,-1]

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "character_oracle.hpp"
#include "errors.hpp"
#include "partition.hpp"
#include "qseries.hpp"
#include "stable_multiplicity.hpp"
#include "tableau.hpp"

namespace cyclic_quiver {

using json = nlohmann::ordered_json;

namespace detail {

inline std::vector<int> int_array(const json& j, const char* what)
{
    if (!j.is_array()) throw UsageError(std::string(what) + " must be a JSON array of integers");
    std::vector<int> out;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw UsageError(std::string(what) + " must contain only integers");
        out.push_back(x.get<int>());
    }
    return out;
}

} // namespace detail

inline json to_json(const Partition& p)
{
    json j = json::array();
    for (int part : p.parts()) j.push_back(part);
    return j;
}

inline Partition partition_from_json(const json& j)
{
    auto parts = detail::int_array(j, "partition");
    for (int x : parts)
        if (x < 1) throw UsageError("partition parts must be positive integers");
    return Partition(std::move(parts));
}

inline json to_json(const Tableau& t)
{
    json j = json::array();
    for (const auto& row : t.rows()) j.push_back(row);
    return j;
}

inline Tableau tableau_from_json(const json& j)
{
    if (!j.is_array()) throw UsageError("tableau must be a JSON array of rows");
    std::vector<std::vector<int>> rows;
    for (const auto& row : j) rows.push_back(detail::int_array(row, "tableau row"));
    return Tableau(std::move(rows));
}

inline json to_json(const Integer& c)
{
    if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
        return json(static_cast<std::int64_t>(c));
    return json(c.str());
}

inline json to_json(const QSeries& s)
{
    json coeffs = json::array();
    for (const auto& c : s.coeffs()) coeffs.push_back(to_json(c));
    return json{{"truncation", s.truncation()}, {"coeffs", std::move(coeffs)}};
}

inline QSeries qseries_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("truncation") || !j.contains("coeffs"))
        throw UsageError("q-series must be an object with \"truncation\" and \"coeffs\"");
    if (!j["truncation"].is_number_integer()) throw UsageError("q-series truncation must be an integer");
    QSeries s(j["truncation"].get<int>());
    const auto& coeffs = j["coeffs"];
    if (!coeffs.is_array() || static_cast<int>(coeffs.size()) != s.truncation() + 1)
        throw UsageError("q-series coeffs must have truncation + 1 entries");
    for (int d = 0; d <= s.truncation(); ++d) {
        const auto& c = coeffs[static_cast<std::size_t>(d)];
        if (c.is_number_integer())
            s[d] = Integer(c.get<std::int64_t>());
        else if (c.is_string())
            s[d] = Integer(c.get<std::string>());
        else
            throw UsageError("q-series coefficients must be integers or decimal strings");
    }
    return s;
}

inline json to_json(const KType& nu)
{
    json nodes = json::array();
    for (const auto& n : nu.nodes()) nodes.push_back(json{{"plus", to_json(n.plus)}, {"minus", to_json(n.minus)}});
    return json{{"k", nu.k()}, {"nu", std::move(nodes)}};
}

inline KType ktype_from_json(const json& j)
{
    if (!j.is_object()) throw UsageError("K-type must be a JSON object with \"k\" and \"nu\"");
    if (!j.contains("k") || !j["k"].is_number_integer()) throw UsageError("K-type needs an integer \"k\"");
    if (!j.contains("nu") || !j["nu"].is_array()) throw UsageError("K-type needs an array \"nu\"");
    std::vector<NodeType> nodes;
    for (const auto& entry : j["nu"]) {
        if (!entry.is_object()) throw UsageError("each K-type node must be an object with \"plus\" and \"minus\"");
        NodeType node;
        if (entry.contains("plus")) node.plus = partition_from_json(entry["plus"]);
        if (entry.contains("minus")) node.minus = partition_from_json(entry["minus"]);
        nodes.push_back(std::move(node));
    }
    return KType(j["k"].get<int>(), std::move(nodes));
}

inline json to_json(const TableauTuple& t)
{
    json nodes = json::array();
    for (const auto& p : t.nodes()) nodes.push_back(json{{"plus", to_json(p.plus)}, {"minus", to_json(p.minus)}});
    return nodes;
}

inline json to_json(const LambdaProfile& p)
{
    json lambdas = json::array(), alphas = json::array();
    for (const auto& l : p.lambdas) lambdas.push_back(to_json(l));
    for (const auto& a : p.alphas) alphas.push_back(to_json(a));
    return json{{"lambda_min", to_json(p.lambda_min)}, {"lambdas", std::move(lambdas)}, {"alphas", std::move(alphas)},
                {"degree", p.degree}};
}

inline json to_json(const RationalWeight& w) { return json(w.entries()); }

inline json to_json(const KTypeWeights& weights)
{
    json j = json::array();
    for (const auto& w : weights) j.push_back(to_json(w));
    return j;
}

} // namespace cyclic_quiver
