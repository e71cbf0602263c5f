#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <complex>
#include <numeric>
#include <random>

#include "coxgrow/poly_text.hpp"
#include "coxgrow/roots.hpp"

using namespace coxgrow;

namespace {

Rational rat(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// Random polynomial of the positive-coefficient form: constant -1, other
/// coefficients in [0, 9], support gcd 1, degree in [2, 8].
IntPolynomial random_prop1_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> deg(2, 8), coeff(1, 9), flip(0, 1);
    while (true) {
        int d = deg(rng);
        std::vector<Integer> c(static_cast<std::size_t>(d) + 1, Integer(0));
        c[0] = -1;
        c[static_cast<std::size_t>(d)] = coeff(rng);
        for (int k = 1; k < d; ++k)
            if (flip(rng)) c[static_cast<std::size_t>(k)] = coeff(rng);
        std::size_t gcd = 0;
        for (int k = 1; k <= d; ++k)
            if (c[static_cast<std::size_t>(k)] != 0) gcd = std::gcd(gcd, static_cast<std::size_t>(k));
        if (gcd != 1) continue;
        return IntPolynomial::from_coefficients(std::move(c));
    }
}

double eval_abs(const IntPolynomial& p, std::complex<double> z) {
    std::complex<double> acc(0.0, 0.0);
    for (int k = p.degree(); k >= 0; --k)
        acc = acc * z + std::complex<double>(p.coeff(static_cast<std::size_t>(k)).get_d(), 0.0);
    return std::abs(acc);
}

}  // namespace

TEST_CASE("sturm_isolate recovers constructed rational roots with multiplicities") {
    IntPolynomial t = IntPolynomial::variable();
    // (2t-1)^2 (t+3) (3t-4)
    IntPolynomial p = (Integer(2) * t - IntPolynomial(1)) * (Integer(2) * t - IntPolynomial(1)) *
                      (t + IntPolynomial(3)) * (Integer(3) * t - IntPolynomial(4));
    auto roots = sturm_isolate(p);
    REQUIRE(roots.size() == 3);
    CHECK(roots[0].exact);
    CHECK(roots[0].lo == rat(-3));
    CHECK(roots[0].multiplicity == 1);
    CHECK(roots[1].lo == rat(1, 2));
    CHECK(roots[1].multiplicity == 2);
    CHECK(roots[2].lo == rat(4, 3));
    CHECK(roots[2].multiplicity == 1);
}

TEST_CASE("sturm_isolate enclosures are disjoint, sorted, and sign-changing") {
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> coeff(-9, 9), deg(1, 7);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Integer> c(static_cast<std::size_t>(deg(rng)) + 1);
        for (auto& x : c) x = coeff(rng);
        IntPolynomial p = IntPolynomial::from_coefficients(std::move(c));
        if (p.degree() < 1) continue;
        auto roots = sturm_isolate(p);
        for (std::size_t i = 0; i < roots.size(); ++i) {
            const auto& enc = roots[i];
            if (enc.exact) {
                CHECK(p.evaluate(enc.lo) == 0);
            } else if (enc.multiplicity % 2 == 1) {
                // endpoints may coincide with a neighboring exact root, so <=
                CHECK(sgn(p.evaluate(enc.lo)) * sgn(p.evaluate(enc.hi)) <= 0);
            } else {
                CHECK(sgn(p.evaluate(enc.lo)) * sgn(p.evaluate(enc.hi)) >= 0);
            }
            if (i > 0) CHECK(roots[i - 1].hi <= enc.lo);
        }
        // distinct-real-root count cross-check against the numeric solver
        auto approx = rootdetail::aberth_double(rootdetail::squarefree_part(p));
        std::size_t numeric_real = 0;
        for (auto z : approx)
            if (std::abs(z.imag()) < 1e-7) ++numeric_real;
        CHECK(roots.size() == numeric_real);
    }
}

TEST_CASE("golden-ratio conjugate enclosure to 2^-40") {
    IntPolynomial p = parse_polynomial("t^2+t-1");
    auto result = smallest_modulus_root(p, 40);
    REQUIRE(result.certified);
    CHECK(result.root.is_real);
    CHECK(result.root.multiplicity == 1);
    CHECK(result.root.width() <= Rational(1, Integer(1) << 40));
    // (sqrt(5)-1)/2 = 0.61803398874989484820...
    Rational below("61803398874989484820/100000000000000000000");
    Rational above("61803398874989484821/100000000000000000000");
    CHECK(result.root.lo <= above);
    CHECK(result.root.hi >= below);
}

TEST_CASE("prop1_applies") {
    CHECK(prop1_applies(parse_polynomial("5t^2+4t-1")));
    CHECK(prop1_applies(parse_polynomial("t^5+t^4+t^3+t^2-1")));
    CHECK(!prop1_applies(parse_polynomial("t^2-1")));        // support gcd 2
    CHECK(!prop1_applies(parse_polynomial("t^2+t-2")));      // constant != -1
    CHECK(!prop1_applies(parse_polynomial("t^2-t-1")));      // negative coefficient
    CHECK(!prop1_applies(parse_polynomial("t-1")));          // degree 1
}

TEST_CASE("equal-modulus pairs defeat certification") {
    IntPolynomial p = parse_polynomial("t^2-1");
    auto result = smallest_modulus_root(p);
    CHECK(!result.certified);
    CHECK_THROWS_AS(smallest_modulus_root(parse_polynomial("t^2+t")), std::invalid_argument);
    CHECK_THROWS_AS(smallest_modulus_root(IntPolynomial(3)), std::invalid_argument);
}

TEST_CASE("linear core is solved exactly") {
    auto result = smallest_modulus_root(parse_polynomial("5t-1"));
    REQUIRE(result.certified);
    CHECK(result.method == "linear");
    CHECK(result.root.exact);
    CHECK(result.root.lo == rat(1, 5));
}

TEST_CASE("random positive-form polynomials are certified with the numeric cross-check") {
    std::mt19937 rng(47);
    for (int trial = 0; trial < 120; ++trial) {
        IntPolynomial p = random_prop1_poly(rng);
        CAPTURE(to_text(p));
        REQUIRE(prop1_applies(p));
        auto result = smallest_modulus_root(p);
        REQUIRE(result.certified);
        CHECK(result.root.is_real);
        CHECK(result.root.lo > 0);
        CHECK(result.root.hi < 1);
        // numeric cross-check: the solver's minimal modulus matches
        auto approx = rootdetail::aberth_double(rootdetail::squarefree_part(p));
        double min_mod = 1e9;
        for (auto z : approx) min_mod = std::min(min_mod, std::abs(z));
        double mid = (result.root.lo.get_d() + result.root.hi.get_d()) / 2;
        CHECK(std::abs(min_mod - mid) < 1e-6);
        CHECK(eval_abs(p, {mid, 0.0}) < 1e-6);
    }
}

TEST_CASE("growth_rate") {
    IntPolynomial t = IntPolynomial::variable();
    // octahedron: (t^2+2t+1)/(5t^2-6t+1), smallest denominator root 1/5
    RationalFunction octa(parse_polynomial("t^2+2t+1"), parse_polynomial("5t^2-6t+1"));
    auto tau = growth_rate(octa);
    REQUIRE(tau.has_value());
    CHECK(tau->exact);
    CHECK(tau->lo == rat(5));

    // finite: polynomial growth function
    CHECK(!growth_rate(RationalFunction(parse_polynomial("t^3+2t^2+2t+1"))).has_value());

    // infinite dihedral: tau = 1
    RationalFunction dihedral(IntPolynomial(1) + t, IntPolynomial(1) - t);
    auto one = growth_rate(dihedral);
    REQUIRE(one.has_value());
    CHECK(one->exact);
    CHECK(one->lo == rat(1));

    // irrational rate: golden ratio for 1/(t^2+t-1)
    RationalFunction golden(IntPolynomial(1), parse_polynomial("t^2+t-1"));
    auto phi = growth_rate(golden, 64);
    REQUIRE(phi.has_value());
    CHECK(!phi->exact);
    CHECK(phi->lo < Rational("16180339888/10000000000"));
    CHECK(phi->hi > Rational("16180339887/10000000000"));
}

TEST_CASE("strip_cyclotomic_content") {
    IntPolynomial core = parse_polynomial("5t-1");
    IntPolynomial padded = core * bracket_product({2, 2, 3});
    CHECK(strip_cyclotomic_content(padded) == core);
    CHECK(strip_cyclotomic_content(bracket_product({2, 2, 3})).degree() == 0);
    // bracket stripping is a fixed point, not a full cyclotomic factorization:
    // [2][4][6] leaves the unit-modulus residue Phi_4 Phi_6
    CHECK(strip_cyclotomic_content(bracket_product({2, 4, 6})) ==
          parse_polynomial("t^4-t^3+2t^2-t+1"));
}

TEST_CASE("perron_check verdicts") {
    // octahedron with the H hint: Prop1 path
    RationalFunction octa(parse_polynomial("t^2+2t+1"), parse_polynomial("5t^2-6t+1"));
    PerronVerdict fast = perron_check(octa, 128, parse_polynomial("5t^2+4t-1"));
    CHECK(fast.status == PerronStatus::Perron);
    CHECK(fast.method == "Prop1");
    REQUIRE(fast.tau.has_value());
    CHECK(fast.tau->exact);
    CHECK(fast.tau->lo == rat(5));

    // finite control
    PerronVerdict finite = perron_check(RationalFunction(parse_polynomial("t^3+2t^2+2t+1")));
    CHECK(finite.status == PerronStatus::NotApplicable);

    // equal-modulus control: denominator 4t^2-1 has roots +-1/2
    PerronVerdict tied = perron_check(RationalFunction(IntPolynomial(1),
                                                       parse_polynomial("4t^2-1")));
    CHECK(tied.status == PerronStatus::NotCertified);

    // tau = 1 control
    IntPolynomial t = IntPolynomial::variable();
    PerronVerdict unit = perron_check(RationalFunction(IntPolynomial(1) + t, IntPolynomial(1) - t));
    CHECK(unit.status == PerronStatus::NotApplicable);
}
