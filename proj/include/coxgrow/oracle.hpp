#ifndef COXGROW_ORACLE_HPP
#define COXGROW_ORACLE_HPP

#include <cstddef>
#include <map>
#include <queue>
#include <stdexcept>
#include <vector>

#include "coxeter.hpp"
#include "polynomial.hpp"

namespace coxgrow {

/// One-line notation for a signed permutation: entry i holds the image of
/// symbol i+1 as +-(j+1).  Plain permutations use positive entries only.
using SignedPerm = std::vector<int>;

inline SignedPerm sp_identity(std::size_t n) {
    SignedPerm p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<int>(i + 1);
    return p;
}

inline SignedPerm sp_compose(const SignedPerm& g, const SignedPerm& h) {
    SignedPerm r(h.size());
    for (std::size_t i = 0; i < h.size(); ++i) {
        int hi = h[i];
        int j = hi > 0 ? hi : -hi;
        r[i] = hi > 0 ? g[j - 1] : -g[j - 1];
    }
    return r;
}

/// Faithful permutation or signed-permutation model of a small finite
/// Coxeter group, used as BFS ground truth against Solomon's formula.
struct ConcreteGroupModel {
    FiniteTypeLabel label;
    std::size_t symbols = 0;
    std::vector<SignedPerm> generators;
};

/// Coxeter matrix of a supported irreducible type (A, B, D, I2).
inline CoxeterMatrix diagram_matrix(const FiniteTypeLabel& label) {
    auto path = [](std::size_t n, std::vector<unsigned> edge_labels) {
        std::vector<std::vector<Order>> m(n, std::vector<Order>(n, Order(2)));
        for (std::size_t i = 0; i < n; ++i) m[i][i] = Order(1);
        for (std::size_t i = 0; i + 1 < n; ++i) m[i][i + 1] = m[i + 1][i] = Order(edge_labels[i]);
        return CoxeterMatrix(std::move(m));
    };
    const unsigned n = label.parameter;
    switch (label.family) {
        case Family::A: return path(n, std::vector<unsigned>(n > 0 ? n - 1 : 0, 3));
        case Family::B: {
            std::vector<unsigned> e(n - 1, 3);
            e.back() = 4;
            return path(n, e);
        }
        case Family::D: {
            std::vector<std::vector<Order>> m(n, std::vector<Order>(n, Order(2)));
            for (unsigned i = 0; i < n; ++i) m[i][i] = Order(1);
            for (unsigned i = 0; i + 2 < n; ++i) m[i][i + 1] = m[i + 1][i] = Order(3);
            m[n - 3][n - 1] = m[n - 1][n - 3] = Order(3);
            return CoxeterMatrix(std::move(m));
        }
        case Family::I2: return CoxeterMatrix::rank2(Order(n));
        default:
            throw std::invalid_argument("diagram_matrix: unsupported family " + to_string(label));
    }
}

inline unsigned sp_order(const SignedPerm& g, unsigned cap = 64) {
    SignedPerm acc = g;
    SignedPerm id = sp_identity(g.size());
    for (unsigned k = 1; k <= cap; ++k) {
        if (acc == id) return k;
        acc = sp_compose(acc, g);
    }
    throw std::logic_error("sp_order: order exceeds cap");
}

/// Builds the concrete model and verifies that generator pair-products
/// realize the orders of the type's Coxeter matrix.  Supported: A_n (n<=5),
/// B_n (n<=4), D4, I2(m) (m<=12); A2/B2 are accepted via their I2 aliases.
inline ConcreteGroupModel build_model(const FiniteTypeLabel& label) {
    ConcreteGroupModel model{label, 0, {}};
    const unsigned n = label.parameter;
    switch (label.family) {
        case Family::A: {
            if (n < 1 || n > 5)
                throw std::invalid_argument("build_model: A_n supported for n <= 5");
            model.symbols = n + 1;
            for (unsigned i = 0; i + 1 <= n; ++i) {
                SignedPerm s = sp_identity(model.symbols);
                std::swap(s[i], s[i + 1]);
                model.generators.push_back(std::move(s));
            }
            break;
        }
        case Family::B: {
            if (n < 2 || n > 4)
                throw std::invalid_argument("build_model: B_n supported for 2 <= n <= 4");
            model.symbols = n;
            for (unsigned i = 0; i + 2 <= n; ++i) {
                SignedPerm s = sp_identity(n);
                std::swap(s[i], s[i + 1]);
                model.generators.push_back(std::move(s));
            }
            SignedPerm flip = sp_identity(n);
            flip[n - 1] = -flip[n - 1];
            model.generators.push_back(std::move(flip));
            break;
        }
        case Family::D: {
            if (n != 4) throw std::invalid_argument("build_model: only D4 is supported");
            model.symbols = n;
            for (unsigned i = 0; i + 2 <= n; ++i) {
                SignedPerm s = sp_identity(n);
                std::swap(s[i], s[i + 1]);
                model.generators.push_back(std::move(s));
            }
            SignedPerm s = sp_identity(n);  // swap last two with both signs flipped
            s[n - 2] = -static_cast<int>(n);
            s[n - 1] = -static_cast<int>(n - 1);
            model.generators.push_back(std::move(s));
            break;
        }
        case Family::I2: {
            if (n < 5 || n > 12)
                throw std::invalid_argument("build_model: I2(m) supported for 5 <= m <= 12");
            model.symbols = n;
            SignedPerm a(n), b(n);  // reflections i -> -i and i -> 1-i of the m-gon
            for (unsigned i = 0; i < n; ++i) {
                a[i] = static_cast<int>((n - i) % n + 1);
                b[i] = static_cast<int>((n + 1 - i) % n + 1);
            }
            model.generators.push_back(std::move(a));
            model.generators.push_back(std::move(b));
            break;
        }
        default:
            throw std::invalid_argument("build_model: unsupported label " + to_string(label));
    }

    CoxeterMatrix matrix = diagram_matrix(label);
    for (std::size_t i = 0; i < model.generators.size(); ++i) {
        if (sp_order(model.generators[i]) != 2)
            throw std::logic_error("build_model: generator is not an involution");
        for (std::size_t j = i + 1; j < model.generators.size(); ++j) {
            unsigned got = sp_order(sp_compose(model.generators[i], model.generators[j]));
            if (got != *matrix.order(i, j))
                throw std::logic_error("build_model: pair-product order mismatch for " +
                                       to_string(label));
        }
    }
    return model;
}

/// Word-length census by breadth-first search over the Cayley graph:
/// coefficient k counts elements at distance k from the identity.
inline IntPolynomial bfs_growth(const ConcreteGroupModel& model,
                                std::size_t element_cap = 2'000'000) {
    std::map<SignedPerm, std::size_t> distance;
    std::queue<SignedPerm> frontier;
    SignedPerm id = sp_identity(model.symbols);
    distance[id] = 0;
    frontier.push(id);
    std::vector<Integer> counts{Integer(1)};
    while (!frontier.empty()) {
        SignedPerm g = frontier.front();
        frontier.pop();
        std::size_t d = distance[g];
        for (const auto& s : model.generators) {
            SignedPerm h = sp_compose(g, s);
            if (distance.emplace(h, d + 1).second) {
                if (distance.size() > element_cap)
                    throw std::runtime_error("bfs_growth: element cap exceeded");
                if (counts.size() <= d + 1) counts.resize(d + 2, Integer(0));
                counts[d + 1] += 1;
                frontier.push(h);
            }
        }
    }
    return IntPolynomial::from_coefficients(std::move(counts));
}

}  // namespace coxgrow

#endif
