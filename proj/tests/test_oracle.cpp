#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coxgrow/coxeter.hpp"
#include "coxgrow/oracle.hpp"

using namespace coxgrow;

TEST_CASE("BFS census equals the Solomon formula for every concrete model") {
    std::vector<FiniteTypeLabel> labels;
    for (unsigned n = 1; n <= 5; ++n) labels.push_back({Family::A, n});
    for (unsigned n = 2; n <= 4; ++n) labels.push_back({Family::B, n});
    labels.push_back({Family::D, 4});
    for (unsigned m = 5; m <= 12; ++m) labels.push_back({Family::I2, m});

    for (const auto& label : labels) {
        CAPTURE(to_string(label));
        ConcreteGroupModel model = build_model(label);
        IntPolynomial bfs = bfs_growth(model);
        CHECK(bfs == solomon_series({label}));
        CHECK(bfs.evaluate(Integer(1)) == group_order(label));
    }
}

TEST_CASE("BFS censuses are longest-element symmetric") {
    for (FiniteTypeLabel label : {FiniteTypeLabel{Family::A, 4}, FiniteTypeLabel{Family::B, 3},
                                  FiniteTypeLabel{Family::I2, 9}}) {
        IntPolynomial census = bfs_growth(build_model(label));
        for (int k = 0; k <= census.degree(); ++k)
            CHECK(census.coeff(static_cast<std::size_t>(k)) ==
                  census.coeff(static_cast<std::size_t>(census.degree() - k)));
    }
}

TEST_CASE("model construction rejects unsupported parameters") {
    CHECK_THROWS_AS(build_model({Family::A, 6}), std::invalid_argument);
    CHECK_THROWS_AS(build_model({Family::D, 5}), std::invalid_argument);
    CHECK_THROWS_AS(build_model({Family::I2, 13}), std::invalid_argument);
    CHECK_THROWS_AS(build_model({Family::E8}), std::invalid_argument);
}

TEST_CASE("generator pair products realize the diagram orders") {
    // build_model validates this internally; spot-check one model's data here
    ConcreteGroupModel b3 = build_model({Family::B, 3});
    CHECK(b3.generators.size() == 3);
    CHECK(sp_order(sp_compose(b3.generators[0], b3.generators[1])) == 3);
    CHECK(sp_order(sp_compose(b3.generators[1], b3.generators[2])) == 4);
    CHECK(sp_order(sp_compose(b3.generators[0], b3.generators[2])) == 2);
}
