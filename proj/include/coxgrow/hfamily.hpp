#ifndef COXGROW_HFAMILY_HPP
#define COXGROW_HFAMILY_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "coxeter.hpp"
#include "polyhedron.hpp"
#include "polynomial.hpp"
#include "rational_function.hpp"

namespace coxgrow {

enum class HFamilyTag { H2, H23, H236, H25, H2356, H23456 };

inline std::string to_string(HFamilyTag tag) {
    switch (tag) {
        case HFamilyTag::H2: return "H2";
        case HFamilyTag::H23: return "H23";
        case HFamilyTag::H236: return "H236";
        case HFamilyTag::H25: return "H25";
        case HFamilyTag::H2356: return "H2356";
        case HFamilyTag::H23456: return "H23456";
    }
    return "?";
}

inline HFamilyTag parse_family(std::string_view text) {
    for (HFamilyTag tag : {HFamilyTag::H2, HFamilyTag::H23, HFamilyTag::H236, HFamilyTag::H25,
                           HFamilyTag::H2356, HFamilyTag::H23456})
        if (to_string(tag) == text) return tag;
    throw std::invalid_argument("unrecognized H family: \"" + std::string(text) + "\"");
}

/// Angle family of a polyhedron together with the fixed bracket product
/// appearing in the denominator of its growth-function factorization.
struct HFamily {
    HFamilyTag tag;
    IntPolynomial cyclotomic_base;
};

inline HFamily make_family(HFamilyTag tag) {
    switch (tag) {
        case HFamilyTag::H2: return {tag, bracket_product({2, 2, 2})};
        case HFamilyTag::H23: return {tag, bracket_product({2, 2, 3, 4})};
        case HFamilyTag::H236: return {tag, bracket_product({2, 2, 4, 6})};
        case HFamilyTag::H25: return {tag, bracket_product({2, 2, 2, 5})};
        case HFamilyTag::H2356: return {tag, bracket_product({2, 4, 6, 10})};
        case HFamilyTag::H23456: return {tag, bracket_product({2, 4, 6, 10})};
    }
    throw std::logic_error("make_family: bad tag");
}

/// Smallest family whose angle alphabet covers the orders with e_m > 0.
/// Orders m >= 7 are outside the treated families.
inline HFamily detect_family(const CountVector& counts) {
    for (const auto& [m, n] : counts.e_m)
        if (m >= 7 && n > 0)
            throw std::domain_error("detect_family: pi/" + std::to_string(m) +
                                    "-edges are outside the m <= 6 families");
    const bool e3 = counts.edge_count(3) > 0;
    const bool e4 = counts.edge_count(4) > 0;
    const bool e5 = counts.edge_count(5) > 0;
    const bool e6 = counts.edge_count(6) > 0;
    if (e4) return make_family(HFamilyTag::H23456);
    if (e5) return make_family(!e3 && !e6 ? HFamilyTag::H25 : HFamilyTag::H2356);
    if (e6) return make_family(HFamilyTag::H236);
    if (e3) return make_family(HFamilyTag::H23);
    return make_family(HFamilyTag::H2);
}

namespace detail {

/// Doubled closed-form coefficients (ascending), exact integers; the final
/// halving carries a parity guard.
inline std::vector<Integer> doubled_closed_form(HFamilyTag tag, const CountVector& c) {
    const long f = c.f;
    const long q2222 = c.v2222;
    const long q223 = c.triple(2, 2, 3);
    const long q233 = c.triple(2, 3, 3);
    const long q333 = c.triple(3, 3, 3);
    const long q225 = c.triple(2, 2, 5);
    const long q235 = c.triple(2, 3, 5);
    const long q226 = c.triple(2, 2, 6);
    const long q236 = c.triple(2, 3, 6);
    auto I = [](long x) { return Integer(x); };
    switch (tag) {
        case HFamilyTag::H2:
            return {I(-2), I(2 * (f - 4)), I(2 * (q2222 - 1))};
        case HFamilyTag::H23:
            return {I(-2),
                    I(2 * (f - 5)),
                    I(2 * q2222 + q223 + 2 * q233 + 3 * q333 + 2 * f - 14),
                    I(2 * (q2222 + q233 + 2 * q333 + 2 * f - 10)),
                    I(4 * q2222 + q223 + 2 * q233 + 5 * q333 + 2 * f - 14),
                    I(2 * (q2222 + 2 * q333 + f - 5)),
                    I(2 * (q2222 + q333 - 1))};
        case HFamilyTag::H236:
            return {I(-2),
                    I(2 * (f - 5)),
                    I(2 * q2222 + q223 + q226 + 2 * q233 + 2 * q236 + 3 * q333 + 2 * f - 14),
                    I(2 * q2222 + q226 + 2 * q233 + 3 * q236 + 4 * q333 + 4 * f - 22),
                    I(4 * q2222 + q223 + 2 * q226 + 2 * q233 + 5 * q236 + 5 * q333 + 4 * f - 24),
                    I(4 * q2222 + q223 + 2 * q226 + 2 * q233 + 7 * q236 + 7 * q333 + 4 * f - 24),
                    I(4 * q2222 + q226 + 2 * q233 + 7 * q236 + 6 * q333 + 4 * f - 22),
                    I(4 * q2222 + q223 + q226 + 2 * q233 + 6 * q236 + 5 * q333 + 2 * f - 14),
                    I(2 * (q2222 + 2 * q236 + 2 * q333 + f - 5)),
                    I(2 * (q2222 + q236 + q333 - 1))};
        case HFamilyTag::H25:
            return {I(-2),
                    I(2 * (f - 5)),
                    I(2 * (q2222 + f - 5)),
                    I(2 * (q2222 + f - 5)),
                    I(2 * (q2222 + f - 5)),
                    I(2 * (q2222 + f - 5)),
                    I(2 * (q2222 - 1))};
        case HFamilyTag::H2356:
            return {I(-2),
                    I(2 * (f - 5)),
                    I(2 * q2222 + q223 + q225 + q226 + 2 * q233 + 2 * q235 + 2 * q236 +
                      3 * q333 + 2 * f - 16),
                    I(2 * q2222 + q225 + q226 + 2 * q233 + 3 * q235 + 3 * q236 + 4 * q333 +
                      6 * f - 32),
                    I(6 * q2222 + 2 * q223 + 3 * q225 + 3 * q226 + 4 * q233 + 7 * q235 +
                      7 * q236 + 8 * q333 + 6 * f - 40),
                    I(6 * q2222 + q223 + 2 * q225 + 3 * q226 + 4 * q233 + 9 * q235 +
                      10 * q236 + 11 * q333 + 10 * f - 56),
                    I(10 * q2222 + 2 * q223 + 4 * q225 + 4 * q226 + 6 * q233 + 12 * q235 +
                      14 * q236 + 14 * q333 + 10 * f - 62),
                    I(10 * q2222 + 2 * q223 + 3 * q225 + 4 * q226 + 6 * q233 + 13 * q235 +
                      16 * q236 + 16 * q333 + 12 * f - 70),
                    I(12 * q2222 + 2 * q223 + 4 * q225 + 4 * q226 + 6 * q233 + 14 * q235 +
                      18 * q236 + 18 * q333 + 12 * f - 72),
                    I(12 * q2222 + 2 * q223 + 4 * q225 + 4 * q226 + 6 * q233 + 14 * q235 +
                      18 * q236 + 18 * q333 + 12 * f - 72),
                    I(12 * q2222 + 2 * q223 + 3 * q225 + 4 * q226 + 6 * q233 + 13 * q235 +
                      18 * q236 + 18 * q333 + 12 * f - 70),
                    I(12 * q2222 + 2 * q223 + 4 * q225 + 4 * q226 + 6 * q233 + 12 * q235 +
                      18 * q236 + 18 * q333 + 10 * f - 62),
                    I(10 * q2222 + q223 + 2 * q225 + 3 * q226 + 4 * q233 + 9 * q235 +
                      16 * q236 + 15 * q333 + 10 * f - 56),
                    I(10 * q2222 + 2 * q223 + 3 * q225 + 3 * q226 + 4 * q233 + 7 * q235 +
                      15 * q236 + 14 * q333 + 6 * f - 40),
                    I(6 * q2222 + q225 + q226 + 2 * q233 + 3 * q235 + 11 * q236 + 10 * q333 +
                      6 * f - 32),
                    I(6 * q2222 + q223 + q225 + q226 + 2 * q233 + 2 * q235 + 8 * q236 +
                      7 * q333 + 2 * f - 16),
                    I(2 * (q2222 + 2 * q236 + 2 * q333 + f - 5)),
                    I(2 * (q2222 + q236 + q333 - 1))};
        case HFamilyTag::H23456:
            throw std::domain_error(
                "h_closed_form: no closed form for H23456; use extract_h or the difference "
                "identity");
    }
    throw std::logic_error("doubled_closed_form: bad tag");
}

}  // namespace detail

/// The per-family closed-form polynomial with counts substituted.  All
/// arithmetic is done on the doubled coefficients; a non-integral
/// (odd-doubled) coefficient signals counts violating the parity forced by
/// the double-count identities.
inline IntPolynomial h_closed_form(const HFamily& family, const CountVector& counts) {
    std::vector<Integer> doubled = detail::doubled_closed_form(family.tag, counts);
    std::vector<Integer> halved(doubled.size());
    for (std::size_t k = 0; k < doubled.size(); ++k) {
        if (mpz_odd_p(doubled[k].get_mpz_t()))
            throw std::domain_error("h_closed_form: non-integral coefficient at index " +
                                    std::to_string(k) + "; counts violate parity");
        halved[k] = doubled[k] / 2;
    }
    return IntPolynomial::from_coefficients(std::move(halved));
}

/// 1/f_P(t) expressed directly from a count vector via the alternating sum
/// over the empty set, facets, edges, and finite vertices.  Valid whenever
/// the finite parabolic subsets of the polyhedron are exactly those; serves
/// as the Steinberg-side ground truth for sampled count vectors.
inline RationalFunction growth_reciprocal_from_counts(const CountVector& counts) {
    RationalFunction sum(IntPolynomial(1));
    IntPolynomial t = IntPolynomial::variable();
    sum -= RationalFunction(Integer(counts.f) * t, bracket(2));
    for (const auto& [m, n] : counts.e_m) {
        if (n == 0) continue;
        IntPolynomial g = bracket_product({2, m});
        sum += RationalFunction(
            Integer(n) * IntPolynomial::monomial(1, static_cast<std::size_t>(g.degree())), g);
    }
    for (const auto& [triple, n] : counts.v_abc) {
        if (n == 0) continue;
        // rank-3 system with pairwise orders (a1,a2,a3)
        std::vector<std::vector<Order>> m(3, std::vector<Order>(3, Order(1)));
        m[0][1] = m[1][0] = Order(triple[0]);
        m[1][2] = m[2][1] = Order(triple[1]);
        m[0][2] = m[2][0] = Order(triple[2]);
        CoxeterMatrix vertex_group(std::move(m));
        std::vector<std::size_t> all{0, 1, 2};
        auto labels = classify_subset(vertex_group, all);
        if (!labels) continue;  // Euclidean cusp types carry no finite parabolic
        IntPolynomial growth = solomon_series(*labels);
        sum -= RationalFunction(
            Integer(n) * IntPolynomial::monomial(1, static_cast<std::size_t>(growth.degree())),
            growth);
    }
    return sum;
}

/// H(t) recovered from a growth function via the family factorization
/// 1/f_P(t) = (t-1) H(t) / base(t).  Throws when the growth function does
/// not factor this way.
inline IntPolynomial extract_h(const RationalFunction& growth, const HFamily& family) {
    if (growth.is_zero()) throw std::invalid_argument("extract_h: zero growth function");
    IntPolynomial t = IntPolynomial::variable();
    RationalFunction h = RationalFunction(family.cyclotomic_base) * growth.reciprocal() /
                         RationalFunction(t - IntPolynomial(1));
    if (!h.is_polynomial())
        throw std::domain_error("extract_h: growth function does not factor over " +
                                to_string(family.tag) + " (division not exact)");
    return h.numerator();
}

/// As extract_h but starting from 1/f_P given directly (count-vector form).
inline IntPolynomial extract_h_from_reciprocal(const RationalFunction& reciprocal,
                                               const HFamily& family) {
    if (reciprocal.is_zero())
        throw std::invalid_argument("extract_h: zero growth reciprocal");
    IntPolynomial t = IntPolynomial::variable();
    RationalFunction h = RationalFunction(family.cyclotomic_base) * reciprocal /
                         RationalFunction(t - IntPolynomial(1));
    if (!h.is_polynomial())
        throw std::domain_error("extract_h: reciprocal does not factor over " +
                                to_string(family.tag) + " (division not exact)");
    return h.numerator();
}

/// One line of the printed difference polynomial: doubled coefficients of
/// v_{2,2,4}, v_{2,3,4}, v_{2,4,4} at a given power.  Lines whose printed
/// subscripts are internally inconsistent are flagged suspect and carry the
/// literal reading.
struct DifferenceLine {
    std::size_t power;
    std::array<long, 3> doubled;  // multipliers of v224, v234, v244, times 2
    bool suspect;
};

inline std::vector<DifferenceLine> printed_difference_lines() {
    return {
        {17, {2, 0, 0}, false},  {16, {1, 1, 5}, false},   {15, {2, 3, 9}, false},
        {14, {4, 6, 13}, false}, {13, {5, 9, 17}, false},  {12, {7, 12, 21}, false},
        {11, {8, 14, 23}, false},
        {10, {0, 15, 33}, true},  // printed with v244 where v224 is expected
        {9, {9, 15, 24}, false},
        {8, {0, 15, 33}, true},   // printed with v244 where v224 is expected
        {7, {9, 15, 22}, false}, {6, {8, 14, 19}, false},
        {5, {0, 12, 22}, true},   // printed with v244 where v224 is expected
        {4, {5, 9, 11}, false},  {3, {4, 6, 7}, false},    {2, {2, 3, 3}, false},
        {1, {1, 1, 1}, false},
        {0, {0, 0, 0}, true},     // printed constant -1; the difference of two
                                  // polynomials with constant -1 has constant 0
    };
}

struct DifferenceReport {
    IntPolynomial h_full;            // H_{2,3,4,5,6} from the Steinberg side
    IntPolynomial reduced_doubled;   // 2 * H_{2,3,5,6} closed form on the same counts
    IntPolynomial difference_doubled;  // 2 * (H_full - H_reduced); halves need not be integral
    bool nonnegative = false;        // all coefficients >= 0 with zero constant
    bool vanishes = false;
    bool pi4_free = false;           // v224 = v234 = v244 = 0
    struct Line {
        std::size_t power;
        Integer derived_doubled;
        Integer printed_doubled;
        bool suspect;
        bool agrees;
    };
    std::vector<Line> lines;

    bool consistent_lines_agree() const {
        return std::all_of(lines.begin(), lines.end(),
                           [](const Line& l) { return l.suspect || l.agrees; });
    }
};

/// H_{2,3,4,5,6} - H_{2,3,5,6} on a single count vector, with the derived
/// difference checked line-by-line against the printed polynomial.  All
/// arithmetic stays on doubled coefficients: the H_{2,3,5,6} closed form may
/// have half-integral coefficients once pi/4 counts enter the identities, so
/// the plain difference need not be integral even though H_{2,3,4,5,6} is.
inline DifferenceReport difference_identity(const CountVector& counts) {
    DifferenceReport report;
    HFamily full = make_family(HFamilyTag::H23456);
    report.h_full = extract_h_from_reciprocal(growth_reciprocal_from_counts(counts), full);
    report.reduced_doubled = IntPolynomial::from_coefficients(
        detail::doubled_closed_form(HFamilyTag::H2356, counts));
    report.difference_doubled = Integer(2) * report.h_full - report.reduced_doubled;

    report.pi4_free = counts.triple(2, 2, 4) == 0 && counts.triple(2, 3, 4) == 0 &&
                      counts.triple(2, 4, 4) == 0;
    report.vanishes = report.difference_doubled.is_zero();
    report.nonnegative = report.difference_doubled.coeff(0) == 0;
    for (int k = 1; k <= report.difference_doubled.degree(); ++k)
        if (report.difference_doubled.coeff(static_cast<std::size_t>(k)) < 0)
            report.nonnegative = false;

    for (const auto& line : printed_difference_lines()) {
        Integer printed = Integer(line.doubled[0]) * counts.triple(2, 2, 4) +
                          Integer(line.doubled[1]) * counts.triple(2, 3, 4) +
                          Integer(line.doubled[2]) * counts.triple(2, 4, 4);
        if (line.power == 0) printed -= 2;  // the printed constant reads -1
        Integer derived = report.difference_doubled.coeff(line.power);
        report.lines.push_back({line.power, derived, printed, line.suspect, derived == printed});
    }
    return report;
}

struct CoefficientCheck {
    std::size_t index;
    std::string origin;   // a_k name in the family's closed form
    Integer value;
    char required;        // '+' strictly positive, '0' nonnegative, '-' equal to -1
    bool pass;
};

struct NonnegativityReport {
    HFamilyTag family;
    bool preconditions_ok = true;
    std::vector<std::string> precondition_failures;
    IntPolynomial h;
    std::vector<CoefficientCheck> coefficients;
    bool support_gcd_ok = false;
    bool two_positive = false;
    bool degree1_special = false;  // linear H: the unique-positive-root case
    bool pass = false;
};

/// Strictly-positive coefficient indices proved per family.
inline std::vector<std::size_t> strict_indices(HFamilyTag tag) {
    switch (tag) {
        case HFamilyTag::H2: return {};
        case HFamilyTag::H23: return {3, 5};
        case HFamilyTag::H236: return {7, 8};
        case HFamilyTag::H25: return {2, 3, 4, 5};
        case HFamilyTag::H2356: return {15};
        case HFamilyTag::H23456: return {15};
    }
    return {};
}

/// Replays the coefficient arguments: H has constant term -1, every other
/// coefficient nonnegative, the proved indices strictly positive, and the
/// support of the nonconstant part has gcd 1 (or H is linear, the
/// unique-positive-root case).  Precondition violations are reported, not
/// thrown.
inline NonnegativityReport nonnegativity_check(const HFamily& family, const CountVector& counts) {
    NonnegativityReport report;
    report.family = family.tag;

    auto require = [&](bool ok, const std::string& what) {
        if (!ok) {
            report.preconditions_ok = false;
            report.precondition_failures.push_back(what);
        }
    };
    require(counts.f >= 5, "f >= 5");
    require(check_lemma2(counts, true).all_pass(), "Lemma 2 identities with a cusp");
    switch (family.tag) {
        case HFamilyTag::H2: break;
        case HFamilyTag::H23: require(counts.edge_count(3) >= 1, "e3 >= 1"); break;
        case HFamilyTag::H236: require(counts.edge_count(6) >= 1, "e6 >= 1"); break;
        case HFamilyTag::H25: require(counts.edge_count(5) == 1, "e5 = 1"); break;
        case HFamilyTag::H2356:
            require(counts.edge_count(5) >= 1, "e5 >= 1");
            require(counts.edge_count(3) >= 1 || counts.edge_count(6) >= 1, "e3 >= 1 or e6 >= 1");
            break;
        case HFamilyTag::H23456:
            // The pi/4 argument reduces to the H2356 case: the difference is
            // nonnegative, so nonnegativity of the H2356 part carries over,
            // and that part needs the H2356 hypotheses.  Counts with e4 >= 1
            // but e5 = 0 can produce a negative coefficient (the bundled
            // pyramid fixture has a2 = -1) even though its growth rate is
            // still certified Perron by the general root path.
            require(counts.edge_count(4) >= 1, "e4 >= 1");
            require(counts.edge_count(5) >= 1, "e5 >= 1");
            require(counts.edge_count(3) >= 1 || counts.edge_count(6) >= 1, "e3 >= 1 or e6 >= 1");
            break;
    }
    if (!report.preconditions_ok) return report;

    report.h = family.tag == HFamilyTag::H23456
                   ? extract_h_from_reciprocal(growth_reciprocal_from_counts(counts), family)
                   : h_closed_form(family, counts);

    auto strict = strict_indices(family.tag);
    bool all_ok = true;
    std::size_t top = static_cast<std::size_t>(std::max(report.h.degree(), 0));
    std::size_t positives = 0;
    std::vector<std::size_t> support;
    for (std::size_t k = 0; k <= top; ++k) {
        const Integer& a = report.h.coeff(k);
        char required = '0';
        if (k == 0)
            required = '-';
        else if (std::find(strict.begin(), strict.end(), k) != strict.end() &&
                 k <= static_cast<std::size_t>(report.h.degree()))
            required = '+';
        bool pass = required == '-' ? a == -1 : (required == '+' ? a > 0 : a >= 0);
        report.coefficients.push_back({k, "a" + std::to_string(k), a, required, pass});
        all_ok = all_ok && pass;
        if (k > 0 && a > 0) {
            ++positives;
            support.push_back(k);
        }
    }
    std::size_t gcd = 0;
    for (std::size_t k : support) gcd = std::gcd(gcd, k);
    report.support_gcd_ok = gcd == 1;
    report.two_positive = positives >= 2;
    report.degree1_special = report.h.degree() == 1;
    report.pass = all_ok && (report.degree1_special || (report.two_positive && report.support_gcd_ok));
    return report;
}

class sampler_exhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Seeded rejection sampler over count vectors satisfying the double-count
/// identities, the Euler relation, the cusp inequality, f >= 5, and the
/// family's angle alphabet and edge-existence preconditions.  Counts are
/// bounded by 40.  Deterministic for a fixed seed.
inline std::vector<CountVector> sample_admissible_counts(HFamilyTag tag, std::uint64_t seed,
                                                         std::size_t n,
                                                         std::size_t attempt_budget = 4'000'000) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> small(0, 6);

    std::vector<std::array<unsigned, 3>> alphabet{{2, 2, 2}};
    bool with3 = tag == HFamilyTag::H23 || tag == HFamilyTag::H236 || tag == HFamilyTag::H2356 ||
                 tag == HFamilyTag::H23456;
    bool with4 = tag == HFamilyTag::H23456;
    bool with5 = tag == HFamilyTag::H25 || tag == HFamilyTag::H2356 || tag == HFamilyTag::H23456;
    bool with6 = tag == HFamilyTag::H236 || tag == HFamilyTag::H2356 || tag == HFamilyTag::H23456;
    if (with3) {
        alphabet.push_back({2, 2, 3});
        alphabet.push_back({2, 3, 3});
        alphabet.push_back({3, 3, 3});
    }
    if (with4) {
        alphabet.push_back({2, 2, 4});
        alphabet.push_back({2, 3, 4});
        alphabet.push_back({2, 4, 4});
    }
    if (with5) {
        alphabet.push_back({2, 2, 5});
        if (tag != HFamilyTag::H25) alphabet.push_back({2, 3, 5});
    }
    if (with6) {
        alphabet.push_back({2, 2, 6});
        alphabet.push_back({2, 3, 6});
    }

    std::vector<CountVector> out;
    std::size_t attempts = 0;
    while (out.size() < n) {
        if (++attempts > attempt_budget)
            throw sampler_exhausted("sample_admissible_counts: no admissible vector for " +
                                    to_string(tag) + " within the attempt budget");
        CountVector c;
        c.v2222 = small(rng);
        for (const auto& triple : alphabet) {
            long k = small(rng);
            if (k > 0) c.v_abc[triple] = k;
        }
        // derive edge counts from the double-count identities
        long v22n_high = 0;
        for (const auto& [triple, count] : c.v_abc)
            if (triple[0] == 2 && triple[1] == 2 && triple[2] >= 3) v22n_high += count;
        long twice_e2 = 4 * c.v2222 + 3 * c.triple(2, 2, 2) + 2 * v22n_high +
                        c.triple(2, 3, 3) + c.triple(2, 3, 4) + c.triple(2, 3, 5) +
                        c.triple(2, 3, 6) + c.triple(2, 4, 4);
        long twice_e3 = 3 * c.triple(3, 3, 3) + 2 * c.triple(2, 3, 3) + c.triple(2, 2, 3) +
                        c.triple(2, 3, 4) + c.triple(2, 3, 5) + c.triple(2, 3, 6);
        long twice_e4 = 2 * c.triple(2, 4, 4) + c.triple(2, 2, 4) + c.triple(2, 3, 4);
        long twice_e5 = c.triple(2, 2, 5) + c.triple(2, 3, 5);
        long twice_e6 = c.triple(2, 2, 6) + c.triple(2, 3, 6);
        if ((twice_e2 | twice_e3 | twice_e4 | twice_e5 | twice_e6) & 1) continue;
        c.e_m.clear();
        if (twice_e2) c.e_m[2] = twice_e2 / 2;
        if (twice_e3) c.e_m[3] = twice_e3 / 2;
        if (twice_e4) c.e_m[4] = twice_e4 / 2;
        if (twice_e5) c.e_m[5] = twice_e5 / 2;
        if (twice_e6) c.e_m[6] = twice_e6 / 2;
        c.e = (twice_e2 + twice_e3 + twice_e4 + twice_e5 + twice_e6) / 2;
        c.v = c.v2222;
        for (const auto& [triple, count] : c.v_abc) c.v += count;
        c.f = 2 + c.e - c.v;
        if (c.f < 5 || c.f > 40 || c.e > 40 || c.v > 40) continue;
        if (c.v2222 + c.triple(2, 3, 6) + c.triple(2, 4, 4) + c.triple(3, 3, 3) < 1) continue;
        // family preconditions and exact angle alphabet
        switch (tag) {
            case HFamilyTag::H2:
                if (c.edge_count(2) < 1) continue;
                break;
            case HFamilyTag::H23:
                if (c.edge_count(3) < 1) continue;
                break;
            case HFamilyTag::H236:
                if (c.edge_count(6) < 1) continue;
                break;
            case HFamilyTag::H25:
                if (c.edge_count(5) != 1) continue;
                break;
            case HFamilyTag::H2356:
                if (c.edge_count(5) < 1) continue;
                if (c.edge_count(3) < 1 && c.edge_count(6) < 1) continue;
                break;
            case HFamilyTag::H23456:
                if (c.edge_count(4) < 1) continue;
                if (c.edge_count(5) < 1) continue;
                if (c.edge_count(3) < 1 && c.edge_count(6) < 1) continue;
                break;
        }
        if (detect_family(c).tag != tag) continue;
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace coxgrow

#endif
