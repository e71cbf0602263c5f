#ifndef COXGROW_COXETER_HPP
#define COXGROW_COXETER_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "polynomial.hpp"
#include "rational_function.hpp"

namespace coxgrow {

/// Order of a pair of generators; disengaged = infinity.
using Order = std::optional<unsigned>;

/// Symmetric matrix of orders m_ij: m_ii = 1, off-diagonal entries >= 2 or
/// infinity.  Encodes the Coxeter presentation.
class CoxeterMatrix {
public:
    explicit CoxeterMatrix(std::vector<std::vector<Order>> orders) : orders_(std::move(orders)) {
        const std::size_t n = orders_.size();
        for (std::size_t i = 0; i < n; ++i) {
            if (orders_[i].size() != n)
                throw std::invalid_argument("CoxeterMatrix: matrix is not square");
            if (orders_[i][i] != Order(1))
                throw std::invalid_argument("CoxeterMatrix: diagonal entry must be 1");
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j) continue;
                if (orders_[i][j] != orders_[j][i])
                    throw std::invalid_argument("CoxeterMatrix: matrix is not symmetric");
                if (orders_[i][j] && *orders_[i][j] < 2)
                    throw std::invalid_argument("CoxeterMatrix: off-diagonal entry must be >= 2");
            }
        }
    }

    static CoxeterMatrix rank2(Order m) {
        return CoxeterMatrix({{Order(1), m}, {m, Order(1)}});
    }

    std::size_t rank() const { return orders_.size(); }

    Order order(std::size_t i, std::size_t j) const { return orders_[i][j]; }

    bool is_infinite_order(std::size_t i, std::size_t j) const { return !orders_[i][j]; }

private:
    std::vector<std::vector<Order>> orders_;
};

enum class Family { A, B, D, E6, E7, E8, F4, H3, H4, I2 };

/// One of the ten irreducible finite types.  parameter is n for A/B/D and
/// m for I2; 0 for the exceptional families.  I2(3) and I2(4) are
/// canonicalized to A2 and B2.
struct FiniteTypeLabel {
    Family family;
    unsigned parameter = 0;

    friend bool operator==(const FiniteTypeLabel&, const FiniteTypeLabel&) = default;
    friend auto operator<=>(const FiniteTypeLabel&, const FiniteTypeLabel&) = default;
};

inline std::string to_string(const FiniteTypeLabel& label) {
    switch (label.family) {
        case Family::A: return "A" + std::to_string(label.parameter);
        case Family::B: return "B" + std::to_string(label.parameter);
        case Family::D: return "D" + std::to_string(label.parameter);
        case Family::E6: return "E6";
        case Family::E7: return "E7";
        case Family::E8: return "E8";
        case Family::F4: return "F4";
        case Family::H3: return "H3";
        case Family::H4: return "H4";
        case Family::I2: return "I2(" + std::to_string(label.parameter) + ")";
    }
    return "?";
}

/// Parses labels of the form "A3", "B2", "D4", "E6".."E8", "F4", "H3",
/// "H4", "I2(m)".
inline FiniteTypeLabel parse_label(std::string_view text) {
    auto fail = [&] {
        throw std::invalid_argument("unrecognized finite type label: \"" + std::string(text) +
                                    "\"");
    };
    auto number_after = [&](std::size_t pos) -> unsigned {
        unsigned value = 0;
        if (pos >= text.size()) fail();
        for (std::size_t i = pos; i < text.size(); ++i) {
            if (text[i] < '0' || text[i] > '9') fail();
            value = value * 10 + static_cast<unsigned>(text[i] - '0');
        }
        return value;
    };
    if (text.empty()) fail();
    if (text.rfind("I2(", 0) == 0 && text.back() == ')') {
        std::string inner(text.substr(3, text.size() - 4));
        unsigned m = 0;
        for (char c : inner) {
            if (c < '0' || c > '9') fail();
            m = m * 10 + static_cast<unsigned>(c - '0');
        }
        if (m < 3) fail();
        if (m == 3) return {Family::A, 2};
        if (m == 4) return {Family::B, 2};
        return {Family::I2, m};
    }
    switch (text[0]) {
        case 'A': {
            unsigned n = number_after(1);
            if (n < 1) fail();
            return {Family::A, n};
        }
        case 'B': {
            unsigned n = number_after(1);
            if (n < 2) fail();
            return {Family::B, n};
        }
        case 'D': {
            unsigned n = number_after(1);
            if (n < 4) fail();
            return {Family::D, n};
        }
        case 'E': {
            unsigned n = number_after(1);
            if (n == 6) return {Family::E6, 0};
            if (n == 7) return {Family::E7, 0};
            if (n == 8) return {Family::E8, 0};
            fail();
            break;
        }
        case 'F':
            if (text == "F4") return {Family::F4, 0};
            fail();
            break;
        case 'H':
            if (text == "H3") return {Family::H3, 0};
            if (text == "H4") return {Family::H4, 0};
            fail();
            break;
        default: fail();
    }
    fail();
    return {};
}

/// Exponent multiset of an irreducible finite type.
inline std::vector<unsigned> exponents(const FiniteTypeLabel& label) {
    switch (label.family) {
        case Family::A: {
            std::vector<unsigned> e(label.parameter);
            for (unsigned i = 0; i < label.parameter; ++i) e[i] = i + 1;
            return e;
        }
        case Family::B: {
            std::vector<unsigned> e(label.parameter);
            for (unsigned i = 0; i < label.parameter; ++i) e[i] = 2 * i + 1;
            return e;
        }
        case Family::D: {
            std::vector<unsigned> e;
            for (unsigned i = 0; i + 1 < label.parameter; ++i) e.push_back(2 * i + 1);
            e.push_back(label.parameter - 1);
            std::sort(e.begin(), e.end());
            return e;
        }
        case Family::E6: return {1, 4, 5, 7, 8, 11};
        case Family::E7: return {1, 5, 7, 9, 11, 13, 17};
        case Family::E8: return {1, 7, 11, 13, 17, 19, 23, 29};
        case Family::F4: return {1, 5, 7, 11};
        case Family::H3: return {1, 5, 9};
        case Family::H4: return {1, 11, 19, 29};
        case Family::I2: return {1, label.parameter - 1};
    }
    throw std::logic_error("exponents: bad family");
}

/// Group order, computed as the product of (exponent + 1).
inline Integer group_order(const FiniteTypeLabel& label) {
    Integer n(1);
    for (unsigned m : exponents(label)) n *= m + 1;
    return n;
}

/// Growth polynomial of a finite Coxeter system given as a multiset of
/// irreducible component labels.  The empty multiset gives 1.
inline IntPolynomial solomon_series(std::span<const FiniteTypeLabel> labels) {
    IntPolynomial p(1);
    for (const auto& label : labels) {
        std::vector<unsigned> ns;
        for (unsigned m : exponents(label)) ns.push_back(m + 1);
        p *= bracket_product(ns);
    }
    return p;
}

inline IntPolynomial solomon_series(std::initializer_list<FiniteTypeLabel> labels) {
    return solomon_series(std::span<const FiniteTypeLabel>(labels.begin(), labels.size()));
}

/// Matches a connected induced diagram against the ten finite families.
/// Edges of the diagram are the pairs with m >= 3 (infinity included).
/// Returns nullopt when the component is not of finite type; throws when
/// the induced diagram is disconnected.
inline std::optional<FiniteTypeLabel> classify_component(const CoxeterMatrix& matrix,
                                                         std::span<const std::size_t> subset) {
    const std::size_t n = subset.size();
    if (n == 0) throw std::invalid_argument("classify_component: empty subset");
    if (n == 1) return FiniteTypeLabel{Family::A, 1};

    auto edge_order = [&](std::size_t a, std::size_t b) { return matrix.order(subset[a], subset[b]); };

    // adjacency over diagram edges (m >= 3 or infinity)
    std::vector<std::vector<std::size_t>> adj(n);
    std::size_t edge_count = 0;
    bool has_infinity = false;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            Order m = edge_order(a, b);
            if (!m) has_infinity = true;
            if (!m || *m >= 3) {
                adj[a].push_back(b);
                adj[b].push_back(a);
                ++edge_count;
            }
        }

    // connectivity precondition
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        std::size_t x = stack.back();
        stack.pop_back();
        for (std::size_t y : adj[x])
            if (!seen[y]) {
                seen[y] = true;
                ++reached;
                stack.push_back(y);
            }
    }
    if (reached != n)
        throw std::invalid_argument("classify_component: subset diagram is disconnected");

    if (has_infinity) return std::nullopt;
    if (edge_count != n - 1) return std::nullopt;  // a cycle; no finite type has one

    std::vector<std::size_t> branch;
    for (std::size_t a = 0; a < n; ++a) {
        if (adj[a].size() >= 4) return std::nullopt;
        if (adj[a].size() == 3) branch.push_back(a);
    }
    if (branch.size() >= 2) return std::nullopt;

    if (branch.empty()) {
        // linear diagram: walk the path from one end
        std::size_t start = 0;
        for (std::size_t a = 0; a < n; ++a)
            if (adj[a].size() == 1) {
                start = a;
                break;
            }
        std::vector<unsigned> labels;  // edge labels along the path
        std::size_t prev = n, cur = start;
        while (labels.size() + 1 < n) {
            std::size_t next = n;
            for (std::size_t y : adj[cur])
                if (y != prev) next = y;
            labels.push_back(*edge_order(cur, next));
            prev = cur;
            cur = next;
        }
        if (n == 2) {
            unsigned m = labels[0];
            if (m == 3) return FiniteTypeLabel{Family::A, 2};
            if (m == 4) return FiniteTypeLabel{Family::B, 2};
            return FiniteTypeLabel{Family::I2, m};
        }
        std::vector<std::size_t> marked;  // positions of labels >= 4
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (labels[i] >= 4) marked.push_back(i);
        if (marked.empty()) return FiniteTypeLabel{Family::A, static_cast<unsigned>(n)};
        if (marked.size() >= 2) return std::nullopt;
        const std::size_t pos = marked[0];
        const unsigned mark = labels[pos];
        const bool at_end = pos == 0 || pos == labels.size() - 1;
        if (mark == 4) {
            if (at_end) return FiniteTypeLabel{Family::B, static_cast<unsigned>(n)};
            if (n == 4) return FiniteTypeLabel{Family::F4, 0};
            return std::nullopt;
        }
        if (mark == 5 && at_end) {
            if (n == 3) return FiniteTypeLabel{Family::H3, 0};
            if (n == 4) return FiniteTypeLabel{Family::H4, 0};
        }
        return std::nullopt;
    }

    // one branch vertex: only unlabeled (m = 3) edges can appear
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t y : adj[a])
            if (*edge_order(a, y) != 3) return std::nullopt;
    std::vector<std::size_t> arms;
    for (std::size_t y0 : adj[branch[0]]) {
        std::size_t len = 1, prev = branch[0], cur = y0;
        while (adj[cur].size() == 2) {
            std::size_t next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
            prev = cur;
            cur = next;
            ++len;
        }
        arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1)
        return FiniteTypeLabel{Family::D, static_cast<unsigned>(n)};
    if (arms[0] == 1 && arms[1] == 2) {
        if (arms[2] == 2) return FiniteTypeLabel{Family::E6, 0};
        if (arms[2] == 3) return FiniteTypeLabel{Family::E7, 0};
        if (arms[2] == 4) return FiniteTypeLabel{Family::E8, 0};
    }
    return std::nullopt;
}

/// Splits a generator subset into connected components of the induced
/// diagram and classifies each; nullopt when any component is infinite.
inline std::optional<std::vector<FiniteTypeLabel>> classify_subset(
    const CoxeterMatrix& matrix, std::span<const std::size_t> subset) {
    const std::size_t n = subset.size();
    std::vector<bool> used(n, false);
    std::vector<FiniteTypeLabel> labels;
    for (std::size_t a = 0; a < n; ++a) {
        if (used[a]) continue;
        std::vector<std::size_t> comp;
        std::vector<std::size_t> stack{a};
        used[a] = true;
        while (!stack.empty()) {
            std::size_t x = stack.back();
            stack.pop_back();
            comp.push_back(subset[x]);
            for (std::size_t b = 0; b < n; ++b) {
                if (used[b]) continue;
                Order m = matrix.order(subset[x], subset[b]);
                if (!m || *m >= 3) {
                    used[b] = true;
                    stack.push_back(b);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        auto label = classify_component(matrix, comp);
        if (!label) return std::nullopt;
        labels.push_back(*label);
    }
    std::sort(labels.begin(), labels.end());
    return labels;
}

struct ParabolicEntry {
    std::vector<std::size_t> subset;        // sorted generator indices
    std::vector<FiniteTypeLabel> components;
    IntPolynomial growth;                   // f_T
};

/// All generator subsets T whose parabolic subgroup is finite, with the
/// component decomposition and Solomon growth polynomial of each.
/// Downward closed; contains the empty subset with growth 1; listed in
/// lexicographic order.
struct ParabolicCatalog {
    std::vector<ParabolicEntry> entries;
};

inline ParabolicCatalog finite_parabolic_subsets(const CoxeterMatrix& matrix) {
    ParabolicCatalog catalog;
    catalog.entries.push_back({{}, {}, IntPolynomial(1)});
    const std::size_t rank = matrix.rank();
    std::vector<std::size_t> current;

    // depth-first over inclusion; supersets of an infinite subset are
    // infinite, so the first failure prunes the whole branch
    auto extend = [&](auto&& self, std::size_t start) -> void {
        for (std::size_t i = start; i < rank; ++i) {
            current.push_back(i);
            auto labels = classify_subset(matrix, current);
            if (labels) {
                catalog.entries.push_back({current, *labels, solomon_series(*labels)});
                self(self, i + 1);
            }
            current.pop_back();
        }
    };
    extend(extend, 0);
    return catalog;
}

/// Growth function f_S(t) via Steinberg's alternating sum over the finite
/// parabolic catalog, followed by the t -> 1/t substitution and inversion.
inline RationalFunction steinberg_growth(const CoxeterMatrix& matrix) {
    ParabolicCatalog catalog = finite_parabolic_subsets(matrix);
    RationalFunction sum;
    for (const auto& entry : catalog.entries) {
        RationalFunction term(IntPolynomial(1), entry.growth);
        if (entry.subset.size() % 2 == 0)
            sum += term;
        else
            sum -= term;
    }
    if (sum.is_zero())
        throw std::logic_error("steinberg_growth: alternating sum vanished");
    return reciprocal_substitution(sum).reciprocal();
}

}  // namespace coxgrow

#endif
