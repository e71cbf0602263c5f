#ifndef COXGROW_POLYHEDRON_HPP
#define COXGROW_POLYHEDRON_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "coxeter.hpp"

namespace coxgrow {

struct SchemeEdge {
    std::size_t a = 0, b = 0;  // facet indices, a < b
    unsigned order = 2;        // m >= 2
};

/// Combinatorial model of a Coxeter polyhedron: named facets, labeled
/// edges, and vertices given as cyclically ordered facet tuples of length
/// 3 or 4.  Construction validates the structural invariants.
class PolyhedronScheme {
public:
    PolyhedronScheme(std::vector<std::string> facets, std::vector<SchemeEdge> edges,
                     std::vector<std::vector<std::size_t>> vertices, bool noncompact)
        : facets_(std::move(facets)),
          edges_(std::move(edges)),
          vertices_(std::move(vertices)),
          noncompact_(noncompact) {
        validate();
    }

    const std::vector<std::string>& facets() const { return facets_; }
    const std::vector<SchemeEdge>& edges() const { return edges_; }
    const std::vector<std::vector<std::size_t>>& vertices() const { return vertices_; }
    bool noncompact() const { return noncompact_; }

    /// Order of the edge between two facets; 0 when they are not adjacent.
    unsigned edge_order(std::size_t a, std::size_t b) const {
        auto it = edge_index_.find(minmax_pair(a, b));
        return it == edge_index_.end() ? 0 : edges_[it->second].order;
    }

private:
    static std::pair<std::size_t, std::size_t> minmax_pair(std::size_t a, std::size_t b) {
        return a < b ? std::pair{a, b} : std::pair{b, a};
    }

    void validate() {
        const std::size_t f = facets_.size();
        {
            std::set<std::string> names(facets_.begin(), facets_.end());
            if (names.size() != f)
                throw std::invalid_argument("polyhedron: duplicate facet name");
        }
        for (std::size_t k = 0; k < edges_.size(); ++k) {
            auto& e = edges_[k];
            if (e.a >= f || e.b >= f)
                throw std::invalid_argument("polyhedron: edge references unknown facet");
            if (e.a == e.b)
                throw std::invalid_argument("polyhedron: edge facet pair must be distinct");
            if (e.order < 2)
                throw std::invalid_argument("polyhedron: edge order must be >= 2");
            if (e.a > e.b) std::swap(e.a, e.b);
            if (!edge_index_.emplace(std::pair{e.a, e.b}, k).second)
                throw std::invalid_argument("polyhedron: duplicate edge " + facets_[e.a] + "-" +
                                            facets_[e.b]);
        }
        std::vector<std::size_t> endpoints(edges_.size(), 0);
        for (const auto& tuple : vertices_) {
            if (tuple.size() != 3 && tuple.size() != 4)
                throw std::invalid_argument("polyhedron: vertex tuple length must be 3 or 4");
            for (std::size_t x : tuple)
                if (x >= f)
                    throw std::invalid_argument("polyhedron: vertex references unknown facet");
            for (std::size_t i = 0; i < tuple.size(); ++i) {
                std::size_t a = tuple[i], b = tuple[(i + 1) % tuple.size()];
                auto it = edge_index_.find(minmax_pair(a, b));
                if (it == edge_index_.end())
                    throw std::invalid_argument("polyhedron: consecutive facets " + facets_[a] +
                                                "," + facets_[b] + " in a vertex are not an edge");
                ++endpoints[it->second];
            }
        }
        for (std::size_t k = 0; k < edges_.size(); ++k)
            if (endpoints[k] != 2)
                throw std::invalid_argument("polyhedron: edge " + facets_[edges_[k].a] + "-" +
                                            facets_[edges_[k].b] + " has " +
                                            std::to_string(endpoints[k]) +
                                            " endpoints, expected 2");
    }

    std::vector<std::string> facets_;
    std::vector<SchemeEdge> edges_;
    std::vector<std::vector<std::size_t>> vertices_;
    bool noncompact_ = false;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> edge_index_;
};

enum class VertexKind { Cusp2222, EuclideanCusp, FiniteVertex };

struct VertexType {
    VertexKind kind;
    std::array<unsigned, 3> orders{};  // sorted ascending; unused for Cusp2222
};

/// Classifies a vertex from the orders of its incident edges: a 4-tuple
/// needs all four consecutive orders equal to 2; a 3-tuple (a1,a2,a3) is a
/// finite vertex when 1/a1+1/a2+1/a3 > 1 and a Euclidean cusp at equality.
inline VertexType vertex_type(const PolyhedronScheme& scheme,
                              const std::vector<std::size_t>& vertex) {
    std::vector<unsigned> orders;
    for (std::size_t i = 0; i < vertex.size(); ++i) {
        unsigned m = scheme.edge_order(vertex[i], vertex[(i + 1) % vertex.size()]);
        if (m == 0) throw std::invalid_argument("vertex_type: vertex does not belong to scheme");
        orders.push_back(m);
    }
    if (vertex.size() == 4) {
        for (unsigned m : orders)
            if (m != 2)
                throw std::domain_error(
                    "vertex_type: four-valent vertex with a non-right angle is not a Coxeter "
                    "polyhedron vertex");
        return {VertexKind::Cusp2222, {2, 2, 2}};
    }
    std::sort(orders.begin(), orders.end());
    std::array<unsigned, 3> a{orders[0], orders[1], orders[2]};
    // compare 1/a1+1/a2+1/a3 with 1 over a common denominator
    unsigned long lhs = static_cast<unsigned long>(a[1]) * a[2] +
                        static_cast<unsigned long>(a[0]) * a[2] +
                        static_cast<unsigned long>(a[0]) * a[1];
    unsigned long rhs = static_cast<unsigned long>(a[0]) * a[1] * a[2];
    if (lhs > rhs) return {VertexKind::FiniteVertex, a};
    if (lhs == rhs) return {VertexKind::EuclideanCusp, a};
    throw std::domain_error("vertex_type: angle sum below pi is not a Coxeter polyhedron vertex");
}

/// Tallies of the combinatorial symbols: facet/edge/vertex totals, per-order
/// edge counts, and per-type vertex counts.
struct CountVector {
    long f = 0, e = 0, v = 0;
    std::map<unsigned, long> e_m;                    // order -> count
    long v2222 = 0;                                  // four-valent right-angled cusps
    std::map<std::array<unsigned, 3>, long> v_abc;   // sorted triple -> count

    long edge_count(unsigned m) const {
        auto it = e_m.find(m);
        return it == e_m.end() ? 0 : it->second;
    }
    long triple(unsigned a, unsigned b, unsigned c) const {
        std::array<unsigned, 3> key{a, b, c};
        std::sort(key.begin(), key.end());
        auto it = v_abc.find(key);
        return it == v_abc.end() ? 0 : it->second;
    }
};

inline CountVector count_vector(const PolyhedronScheme& scheme) {
    CountVector counts;
    counts.f = static_cast<long>(scheme.facets().size());
    counts.e = static_cast<long>(scheme.edges().size());
    counts.v = static_cast<long>(scheme.vertices().size());
    for (const auto& edge : scheme.edges()) counts.e_m[edge.order] += 1;
    for (const auto& vertex : scheme.vertices()) {
        VertexType type = vertex_type(scheme, vertex);
        if (type.kind == VertexKind::Cusp2222)
            counts.v2222 += 1;
        else
            counts.v_abc[type.orders] += 1;
    }
    return counts;
}

struct IdentityCheck {
    std::string name;
    long lhs = 0, rhs = 0;
    bool inequality = false;  // lhs >= rhs instead of lhs == rhs
    bool pass = false;
};

struct Lemma2Report {
    std::vector<IdentityCheck> checks;

    bool all_pass() const {
        return std::all_of(checks.begin(), checks.end(),
                           [](const IdentityCheck& c) { return c.pass; });
    }
};

/// Evaluates the Euler identity, the vertex and edge partitions, the
/// edge/vertex double counts per order, and (for non-compact schemes) the
/// cusp-existence inequality.  Failures are report entries, not errors.
inline Lemma2Report check_lemma2(const CountVector& c, bool noncompact) {
    Lemma2Report report;
    auto push = [&](std::string name, long lhs, long rhs, bool inequality = false) {
        bool pass = inequality ? lhs >= rhs : lhs == rhs;
        report.checks.push_back({std::move(name), lhs, rhs, inequality, pass});
    };

    push("euler", c.v - c.e + c.f, 2);

    long vertex_sum = c.v2222;
    for (const auto& [triple, n] : c.v_abc) vertex_sum += n;
    push("vertex-partition", c.v, vertex_sum);

    long edge_sum = 0;
    for (const auto& [m, n] : c.e_m) edge_sum += n;
    push("edge-partition", c.e, edge_sum);

    long v22n_high = 0;  // sum of v_{2,2,n} over n >= 3
    unsigned max_n = 2;
    for (const auto& [triple, n] : c.v_abc) {
        if (triple[0] == 2 && triple[1] == 2 && triple[2] >= 3) v22n_high += n;
        max_n = std::max(max_n, triple[2]);
    }
    for (const auto& [m, n] : c.e_m) max_n = std::max(max_n, m);

    push("pi/2-edges", 2 * c.edge_count(2),
         4 * c.v2222 + 3 * c.triple(2, 2, 2) + 2 * v22n_high + c.triple(2, 3, 3) +
             c.triple(2, 3, 4) + c.triple(2, 3, 5) + c.triple(2, 3, 6) + c.triple(2, 4, 4));
    push("pi/3-edges", 2 * c.edge_count(3),
         3 * c.triple(3, 3, 3) + 2 * c.triple(2, 3, 3) + c.triple(2, 2, 3) + c.triple(2, 3, 4) +
             c.triple(2, 3, 5) + c.triple(2, 3, 6));
    push("pi/4-edges", 2 * c.edge_count(4),
         2 * c.triple(2, 4, 4) + c.triple(2, 2, 4) + c.triple(2, 3, 4));
    push("pi/5-edges", 2 * c.edge_count(5), c.triple(2, 2, 5) + c.triple(2, 3, 5));
    push("pi/6-edges", 2 * c.edge_count(6), c.triple(2, 2, 6) + c.triple(2, 3, 6));
    for (unsigned n = 7; n <= max_n; ++n)
        push("pi/" + std::to_string(n) + "-edges", 2 * c.edge_count(n), c.triple(2, 2, n));

    if (noncompact)
        push("cusp-existence",
             c.v2222 + c.triple(2, 3, 6) + c.triple(2, 4, 4) + c.triple(3, 3, 3), 1, true);
    return report;
}

/// One generator per facet; the order of a pair is its edge label, and
/// infinity for non-adjacent facets (including facets meeting only at a
/// cusp).
inline CoxeterMatrix to_coxeter_matrix(const PolyhedronScheme& scheme) {
    const std::size_t n = scheme.facets().size();
    std::vector<std::vector<Order>> m(n, std::vector<Order>(n, std::nullopt));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = Order(1);
    for (const auto& edge : scheme.edges()) m[edge.a][edge.b] = m[edge.b][edge.a] = Order(edge.order);
    return CoxeterMatrix(std::move(m));
}

}  // namespace coxgrow

#endif
