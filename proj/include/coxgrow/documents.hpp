#ifndef COXGROW_DOCUMENTS_HPP
#define COXGROW_DOCUMENTS_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "coxeter.hpp"
#include "polyhedron.hpp"

namespace coxgrow {

class document_error : public std::runtime_error {
public:
    document_error(std::string field, std::string why)
        : std::runtime_error("document field \"" + field + "\": " + why),
          field_(std::move(field)) {}

    const std::string& field() const { return field_; }

private:
    std::string field_;
};

/// Reads {"rank": n, "orders": [[...]]}; "inf" or 0 stand for infinity.
/// The document must supply at least the upper triangle; a missing or
/// null lower-triangle entry is mirrored.
inline CoxeterMatrix parse_coxeter_matrix(const nlohmann::json& doc) {
    if (!doc.is_object()) throw document_error("(root)", "expected a JSON object");
    if (!doc.contains("rank") || !doc["rank"].is_number_unsigned())
        throw document_error("rank", "missing or not a nonnegative integer");
    const std::size_t rank = doc["rank"].get<std::size_t>();
    if (rank == 0) throw document_error("rank", "must be >= 1");
    if (!doc.contains("orders") || !doc["orders"].is_array() || doc["orders"].size() != rank)
        throw document_error("orders", "expected an array of " + std::to_string(rank) + " rows");

    auto entry = [&](std::size_t i, std::size_t j) -> Order {
        const auto& row = doc["orders"][i];
        if (!row.is_array() || row.size() != rank)
            throw document_error("orders[" + std::to_string(i) + "]",
                                 "expected an array of " + std::to_string(rank) + " entries");
        const auto& cell = row[j];
        if (cell.is_string()) {
            if (cell.get<std::string>() == "inf") return std::nullopt;
            throw document_error("orders[" + std::to_string(i) + "][" + std::to_string(j) + "]",
                                 "only \"inf\" is accepted as a string entry");
        }
        if (!cell.is_number_unsigned())
            throw document_error("orders[" + std::to_string(i) + "][" + std::to_string(j) + "]",
                                 "expected a nonnegative integer or \"inf\"");
        unsigned m = cell.get<unsigned>();
        if (m == 0) return std::nullopt;
        return Order(m);
    };

    std::vector<std::vector<Order>> orders(rank, std::vector<Order>(rank));
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = 0; j < rank; ++j) orders[i][j] = entry(i, j);
    try {
        return CoxeterMatrix(std::move(orders));
    } catch (const std::invalid_argument& err) {
        throw document_error("orders", err.what());
    }
}

/// Reads {"facets": [...], "edges": [{"facets": ["A","B"], "m": 2}, ...],
/// "vertices": [["A","B","C"], ...], "noncompact": bool}.
inline PolyhedronScheme parse_polyhedron(const nlohmann::json& doc) {
    if (!doc.is_object()) throw document_error("(root)", "expected a JSON object");
    if (!doc.contains("facets") || !doc["facets"].is_array())
        throw document_error("facets", "missing or not an array");

    std::vector<std::string> facets;
    std::map<std::string, std::size_t> index;
    for (const auto& name : doc["facets"]) {
        if (!name.is_string()) throw document_error("facets", "facet names must be strings");
        if (!index.emplace(name.get<std::string>(), facets.size()).second)
            throw document_error("facets", "duplicate facet name " + name.get<std::string>());
        facets.push_back(name.get<std::string>());
    }

    auto facet_index = [&](const nlohmann::json& name, const std::string& field) -> std::size_t {
        if (!name.is_string()) throw document_error(field, "facet reference must be a string");
        auto it = index.find(name.get<std::string>());
        if (it == index.end())
            throw document_error(field, "unknown facet " + name.get<std::string>());
        return it->second;
    };

    if (!doc.contains("edges") || !doc["edges"].is_array())
        throw document_error("edges", "missing or not an array");
    std::vector<SchemeEdge> edges;
    for (const auto& e : doc["edges"]) {
        if (!e.is_object() || !e.contains("facets") || !e["facets"].is_array() ||
            e["facets"].size() != 2 || !e.contains("m"))
            throw document_error("edges", "each edge needs \"facets\": [a, b] and \"m\"");
        if (!e["m"].is_number_unsigned() || e["m"].get<unsigned>() < 2)
            throw document_error("edges", "edge order m must be an integer >= 2");
        edges.push_back({facet_index(e["facets"][0], "edges"), facet_index(e["facets"][1], "edges"),
                         e["m"].get<unsigned>()});
    }

    if (!doc.contains("vertices") || !doc["vertices"].is_array())
        throw document_error("vertices", "missing or not an array");
    std::vector<std::vector<std::size_t>> vertices;
    for (const auto& tuple : doc["vertices"]) {
        if (!tuple.is_array()) throw document_error("vertices", "each vertex must be an array");
        std::vector<std::size_t> vertex;
        for (const auto& name : tuple) vertex.push_back(facet_index(name, "vertices"));
        vertices.push_back(std::move(vertex));
    }

    bool noncompact = false;
    if (doc.contains("noncompact")) {
        if (!doc["noncompact"].is_boolean())
            throw document_error("noncompact", "expected a boolean");
        noncompact = doc["noncompact"].get<bool>();
    }

    try {
        return PolyhedronScheme(std::move(facets), std::move(edges), std::move(vertices),
                                noncompact);
    } catch (const std::invalid_argument& err) {
        throw document_error("(structure)", err.what());
    }
}

}  // namespace coxgrow

#endif
