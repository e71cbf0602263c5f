#ifndef COXGROW_ROOTS_HPP
#define COXGROW_ROOTS_HPP

#include <algorithm>
#include <complex>
#include <cstddef>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "polynomial.hpp"
#include "rational_function.hpp"

namespace coxgrow {

/// Certified enclosure of one distinct real (or, in disk form, complex)
/// root: either an exact rational point (lo == hi) or an open interval with
/// sign change, plus the root's multiplicity in the original polynomial.
struct RootEnclosure {
    Rational lo, hi;
    bool exact = false;
    unsigned multiplicity = 1;
    bool is_real = true;

    Rational width() const { return hi - lo; }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
};

namespace rootdetail {

using QPoly = std::vector<Rational>;  // ascending, trimmed

inline void qp_trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline QPoly qp_from(const IntPolynomial& p) {
    QPoly q(p.coefficients().size());
    for (std::size_t i = 0; i < q.size(); ++i) q[i] = Rational(p.coeff(i));
    return q;
}

inline Rational qp_eval(const QPoly& p, const Rational& x) {
    Rational acc(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

inline QPoly qp_deriv(const QPoly& p) {
    if (p.size() <= 1) return {};
    QPoly d(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = Rational(Integer(i)) * p[i];
    return d;
}

inline QPoly qp_neg_rem(QPoly a, const QPoly& b) {
    while (a.size() >= b.size() && !a.empty()) {
        Rational c = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        a.pop_back();
        qp_trim(a);
    }
    for (auto& c : a) c = -c;
    return a;
}

inline std::vector<QPoly> sturm_chain(const IntPolynomial& p) {
    std::vector<QPoly> chain;
    QPoly s0 = qp_from(p);
    qp_trim(s0);
    if (s0.empty()) return chain;
    chain.push_back(s0);
    QPoly s1 = qp_deriv(s0);
    while (!s1.empty()) {
        chain.push_back(s1);
        QPoly next = qp_neg_rem(chain[chain.size() - 2], s1);
        s1 = std::move(next);
    }
    return chain;
}

inline int sign_of(const Rational& x) { return sgn(x); }

inline std::size_t sign_variations(const std::vector<QPoly>& chain, const Rational& x) {
    std::size_t v = 0;
    int last = 0;
    for (const auto& p : chain) {
        int s = sign_of(qp_eval(p, x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

/// Distinct real roots of the chain's polynomial in (a, b]; endpoints must
/// not be roots of the polynomial itself for exact counting semantics.
inline long sturm_count(const std::vector<QPoly>& chain, const Rational& a, const Rational& b) {
    return static_cast<long>(sign_variations(chain, a)) -
           static_cast<long>(sign_variations(chain, b));
}

/// Cauchy bound: every root has modulus < 1 + max |a_i| / |a_n|.
inline Rational cauchy_bound(const IntPolynomial& p) {
    Rational best(0);
    Integer lead = p.leading();
    if (lead < 0) lead = -lead;
    for (int i = 0; i < p.degree(); ++i) {
        Integer a = p.coeff(static_cast<std::size_t>(i));
        if (a < 0) a = -a;
        Rational q = Rational(a) / Rational(lead);
        if (q > best) best = q;
    }
    return best + 1;
}

/// Yun square-free decomposition of the primitive part: result[k] is the
/// (primitive) factor whose roots have multiplicity k+1.
inline std::vector<IntPolynomial> squarefree_factors(const IntPolynomial& p) {
    IntPolynomial a = p.primitive_part();
    if (a.leading() < 0) a = -a;
    std::vector<IntPolynomial> factors;
    if (a.degree() <= 0) return factors;
    IntPolynomial g = poly_gcd(a, a.derivative());
    if (g.degree() == 0) {
        factors.push_back(a);
        return factors;
    }
    IntPolynomial w = exact_divide(a, g).primitive_part();
    IntPolynomial y = exact_divide(a.derivative(), g).primitive_part();
    // keep y consistent with w: y was divided by content, recompute z directly
    w = exact_divide(a, g);
    y = exact_divide(a.derivative(), g);
    IntPolynomial z = y - w.derivative();
    while (w.degree() > 0) {
        IntPolynomial f = z.is_zero() ? w : poly_gcd(w, z);
        factors.push_back(f.primitive_part());
        if (f.degree() == 0 && z.is_zero()) break;
        w = exact_divide(w, f);
        if (z.is_zero()) break;
        y = exact_divide(z, f);
        z = y - w.derivative();
    }
    return factors;
}

inline IntPolynomial squarefree_part(const IntPolynomial& p) {
    IntPolynomial result(1);
    for (const auto& f : squarefree_factors(p))
        if (f.degree() > 0) result *= f;
    if (result.leading() < 0) result = -result;
    return result.primitive_part();
}

/// Small-divisor enumeration for the rational root theorem; empty when the
/// bound would make enumeration unreasonable.
inline std::vector<Integer> divisors_of(const Integer& value, unsigned long cap = 2'000'000) {
    Integer v = value < 0 ? Integer(-value) : value;
    std::vector<Integer> out;
    if (v == 0 || v > cap) return out;
    unsigned long n = v.get_ui();
    for (unsigned long d = 1; d * d <= n; ++d)
        if (n % d == 0) {
            out.emplace_back(d);
            if (d != n / d) out.emplace_back(n / d);
        }
    return out;
}

/// Exact rational roots of a polynomial (each listed once), found by the
/// rational root theorem when the constant and leading coefficients are
/// small enough to enumerate.
inline std::vector<Rational> rational_roots(const IntPolynomial& p) {
    std::vector<Rational> out;
    if (p.degree() <= 0) return out;
    if (p.coeff(0) == 0) return out;  // caller deflates t-powers first
    auto nums = divisors_of(p.coeff(0));
    auto dens = divisors_of(p.leading());
    for (const auto& n : nums)
        for (const auto& d : dens)
            for (int sign : {1, -1}) {
                Rational candidate = Rational(sign * n, d);
                candidate.canonicalize();
                if (qp_eval(qp_from(p), candidate) == 0 &&
                    std::find(out.begin(), out.end(), candidate) == out.end())
                    out.push_back(candidate);
            }
    return out;
}

/// Divides out the exact linear factor (d t - n) for root n/d.
inline IntPolynomial deflate_rational_root(const IntPolynomial& p, const Rational& root) {
    IntPolynomial factor = Integer(root.get_den()) * IntPolynomial::variable() -
                           IntPolynomial(Integer(root.get_num()));
    return exact_divide(Integer(root.get_den()) * p, factor);
}

struct IsolatedInterval {
    Rational lo, hi;  // open interval with a single simple root and sign change
};

/// Isolating intervals for all real roots of a square-free polynomial with
/// no rational roots (so rational endpoints are never roots).
inline std::vector<IsolatedInterval> isolate_squarefree(const IntPolynomial& p) {
    std::vector<IsolatedInterval> out;
    if (p.degree() <= 0) return out;
    auto chain = sturm_chain(p);
    Rational bound = cauchy_bound(p);
    struct Piece {
        Rational lo, hi;
        long count;
    };
    std::vector<Piece> work;
    long total = sturm_count(chain, -bound, bound);
    if (total > 0) work.push_back({-bound, bound, total});
    while (!work.empty()) {
        Piece piece = work.back();
        work.pop_back();
        if (piece.count == 1) {
            out.push_back({piece.lo, piece.hi});
            continue;
        }
        Rational mid = (piece.lo + piece.hi) / 2;
        long left = sturm_count(chain, piece.lo, mid);
        long right = piece.count - left;
        if (left > 0) work.push_back({piece.lo, mid, left});
        if (right > 0) work.push_back({mid, piece.hi, right});
    }
    return out;
}

/// One bisection step on an interval whose endpoints have opposite signs.
inline void refine_once(const IntPolynomial& p, Rational& lo, Rational& hi) {
    Rational mid = (lo + hi) / 2;
    Rational flo = p.evaluate(lo), fm = p.evaluate(mid);
    if (fm == 0) {
        // rational midpoint hit: shrink asymmetrically; cannot happen for
        // factors with rational roots deflated, kept as a safety net
        Rational third = lo + (hi - lo) / 3;
        mid = third;
        fm = p.evaluate(mid);
        if (fm == 0) return;
    }
    if (sign_of(flo) * sign_of(fm) < 0)
        hi = mid;
    else
        lo = mid;
}

inline void refine_to_width(const IntPolynomial& p, Rational& lo, Rational& hi,
                            const Rational& target) {
    while (hi - lo > target) refine_once(p, lo, hi);
}

}  // namespace rootdetail

/// Disjoint enclosures of all distinct real roots of p, sorted; rational
/// roots are reported exactly; multiplicities recovered from the square-free
/// decomposition.
inline std::vector<RootEnclosure> sturm_isolate(const IntPolynomial& p) {
    using namespace rootdetail;
    if (p.is_zero()) throw std::invalid_argument("sturm_isolate: zero polynomial");
    std::vector<RootEnclosure> out;
    if (p.degree() <= 0) return out;

    IntPolynomial body = p;
    std::size_t t_power = 0;
    while (body.coeff(0) == 0) {
        body = exact_divide(body, IntPolynomial::variable());
        ++t_power;
    }
    if (t_power > 0)
        out.push_back({Rational(0), Rational(0), true, static_cast<unsigned>(t_power), true});

    auto factors = squarefree_factors(body);
    struct Pending {
        IntPolynomial factor;  // square-free, no rational roots
        Rational lo, hi;
        unsigned multiplicity;
    };
    std::vector<Pending> pending;
    for (std::size_t k = 0; k < factors.size(); ++k) {
        IntPolynomial f = factors[k];
        if (f.degree() <= 0) continue;
        const unsigned multiplicity = static_cast<unsigned>(k + 1);
        for (const Rational& root : rational_roots(f)) {
            out.push_back({root, root, true, multiplicity, true});
            f = deflate_rational_root(f, root);
        }
        for (const auto& interval : isolate_squarefree(f))
            pending.push_back({f, interval.lo, interval.hi, multiplicity});
    }

    // refine until all enclosures (including exact points) are disjoint
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < pending.size(); ++i) {
            for (std::size_t j = i + 1; j < pending.size(); ++j) {
                if (pending[i].hi <= pending[j].lo || pending[j].hi <= pending[i].lo) continue;
                refine_once(pending[i].factor, pending[i].lo, pending[i].hi);
                refine_once(pending[j].factor, pending[j].lo, pending[j].hi);
                changed = true;
            }
            for (const auto& fixed : out) {
                if (!(pending[i].lo < fixed.lo && fixed.hi < pending[i].hi)) continue;
                refine_once(pending[i].factor, pending[i].lo, pending[i].hi);
                changed = true;
            }
        }
    }
    for (const auto& item : pending)
        out.push_back({item.lo, item.hi, false, item.multiplicity, true});
    std::sort(out.begin(), out.end(),
              [](const RootEnclosure& a, const RootEnclosure& b) { return a.lo < b.lo; });
    return out;
}

/// True iff p = sum a_k t^k - 1 with every a_k a nonnegative integer,
/// degree >= 2, and gcd of the exponents with a_k != 0 equal to 1.
inline bool prop1_applies(const IntPolynomial& p) {
    if (p.degree() < 2) return false;
    if (p.coeff(0) != -1) return false;
    std::size_t gcd = 0;
    for (int k = 1; k <= p.degree(); ++k) {
        const Integer& a = p.coeff(static_cast<std::size_t>(k));
        if (a < 0) return false;
        if (a > 0) gcd = std::gcd(gcd, static_cast<std::size_t>(k));
    }
    return gcd == 1;
}

// ---------------------------------------------------------------------------
// Smith-disk certification of the smallest-modulus root.
// Approximate all roots (Aberth), round to Gaussian rationals, and verify
// exactly: the disks D(z_i, R_i) with R_i = n |p(z_i)| / (|a_n| prod |z_i-z_j|)
// jointly contain all roots, and pairwise-disjoint disks contain one each.
// All verification arithmetic is exact rational; square roots enter only
// through one-sided integer-sqrt bounds.
// ---------------------------------------------------------------------------

namespace rootdetail {

inline Rational sqrt_upper(const Rational& q, unsigned bits = 48) {
    if (q < 0) throw std::logic_error("sqrt_upper: negative input");
    Integer num = q.get_num(), den = q.get_den();
    Integer scaled = num * den;
    mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), 2 * bits);
    Integer s;
    mpz_sqrt(s.get_mpz_t(), scaled.get_mpz_t());
    Integer d = den;
    mpz_mul_2exp(d.get_mpz_t(), d.get_mpz_t(), bits);
    Rational r(s + 1, d);
    r.canonicalize();
    return r;
}

inline Rational sqrt_lower(const Rational& q, unsigned bits = 48) {
    if (q <= 0) return Rational(0);
    Integer num = q.get_num(), den = q.get_den();
    Integer scaled = num * den;
    mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), 2 * bits);
    Integer s;
    mpz_sqrt(s.get_mpz_t(), scaled.get_mpz_t());
    Integer d = den;
    mpz_mul_2exp(d.get_mpz_t(), d.get_mpz_t(), bits);
    Rational r(s, d);
    r.canonicalize();
    return r;
}

struct QComplex {
    Rational re, im;
};

inline QComplex qc_sub(const QComplex& a, const QComplex& b) { return {a.re - b.re, a.im - b.im}; }

inline Rational qc_norm(const QComplex& z) { return z.re * z.re + z.im * z.im; }

inline QComplex qc_eval(const IntPolynomial& p, const QComplex& z) {
    QComplex acc{Rational(0), Rational(0)};
    for (int k = p.degree(); k >= 0; --k) {
        Rational re = acc.re * z.re - acc.im * z.im + Rational(p.coeff(static_cast<std::size_t>(k)));
        Rational im = acc.re * z.im + acc.im * z.re;
        acc = {re, im};
    }
    return acc;
}

inline Rational round_to_scale(double x, long bits) {
    mpf_class v(x, 64);
    mpf_mul_2exp(v.get_mpf_t(), v.get_mpf_t(), static_cast<unsigned long>(bits));
    mpz_class n;
    mpz_set_f(n.get_mpz_t(), v.get_mpf_t());
    Rational r(n, Integer(1) << bits);
    r.canonicalize();
    return r;
}

inline Rational round_mpf_to_scale(const mpf_class& x, long bits) {
    mpf_class v = x;
    mpf_mul_2exp(v.get_mpf_t(), v.get_mpf_t(), static_cast<unsigned long>(bits));
    mpz_class n;
    mpz_set_f(n.get_mpz_t(), v.get_mpf_t());
    Rational r(n, Integer(1) << bits);
    r.canonicalize();
    return r;
}

inline std::vector<std::complex<double>> aberth_double(const IntPolynomial& p,
                                                       unsigned iterations = 400) {
    const int n = p.degree();
    std::vector<std::complex<double>> c(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) c[static_cast<std::size_t>(k)] = p.coeff(static_cast<std::size_t>(k)).get_d();
    auto eval = [&](std::complex<double> z, std::complex<double>& d) {
        std::complex<double> v = 0, dv = 0;
        for (int k = n; k >= 0; --k) {
            dv = dv * z + v;
            v = v * z + c[static_cast<std::size_t>(k)];
        }
        d = dv;
        return v;
    };
    double r0 = std::pow(std::abs(c[0].real() / c[static_cast<std::size_t>(n)].real()), 1.0 / n);
    if (!(r0 > 0) || !std::isfinite(r0)) r0 = 1.0;
    std::vector<std::complex<double>> z(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        double angle = 2.0 * 3.141592653589793 * k / n + 0.43;
        z[static_cast<std::size_t>(k)] = std::polar(r0 * (1.0 + 0.05 * k / n), angle);
    }
    for (unsigned iter = 0; iter < iterations; ++iter) {
        double movement = 0;
        for (int i = 0; i < n; ++i) {
            std::complex<double> d;
            std::complex<double> v = eval(z[static_cast<std::size_t>(i)], d);
            if (std::abs(v) == 0) continue;
            std::complex<double> ratio = v / d;
            std::complex<double> s = 0;
            for (int j = 0; j < n; ++j)
                if (j != i) s += 1.0 / (z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)]);
            std::complex<double> delta = ratio / (1.0 - ratio * s);
            z[static_cast<std::size_t>(i)] -= delta;
            movement = std::max(movement, std::abs(delta));
        }
        if (movement < 1e-15) break;
    }
    return z;
}

struct MC {
    mpf_class re, im;
};

inline std::vector<MC> aberth_mpf(const IntPolynomial& p, unsigned prec_bits,
                                  unsigned iterations = 2000) {
    const int n = p.degree();
    std::vector<mpf_class> c(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k)
        c[static_cast<std::size_t>(k)] = mpf_class(p.coeff(static_cast<std::size_t>(k)), prec_bits);
    auto cmul = [&](const MC& a, const MC& b) {
        return MC{a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    };
    auto cdiv = [&](const MC& a, const MC& b) {
        mpf_class d = b.re * b.re + b.im * b.im;
        return MC{(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    };
    auto eval = [&](const MC& z, MC& dv) {
        MC v{mpf_class(0, prec_bits), mpf_class(0, prec_bits)};
        dv = v;
        for (int k = n; k >= 0; --k) {
            dv = cmul(dv, z);
            dv.re += v.re;
            dv.im += v.im;
            v = cmul(v, z);
            v.re += c[static_cast<std::size_t>(k)];
        }
        return v;
    };
    // seed from the double pass
    auto seed = aberth_double(p);
    std::vector<MC> z(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
        z[static_cast<std::size_t>(k)] = {
            mpf_class(seed[static_cast<std::size_t>(k)].real(), prec_bits),
            mpf_class(seed[static_cast<std::size_t>(k)].imag() + 1e-20 * (k + 1), prec_bits)};
    mpf_class tol(1, prec_bits);
    mpf_div_2exp(tol.get_mpf_t(), tol.get_mpf_t(), prec_bits - 4);
    for (unsigned iter = 0; iter < iterations; ++iter) {
        mpf_class movement(0, prec_bits);
        for (int i = 0; i < n; ++i) {
            MC d;
            MC v = eval(z[static_cast<std::size_t>(i)], d);
            if (v.re == 0 && v.im == 0) continue;
            MC ratio = cdiv(v, d);
            MC s{mpf_class(0, prec_bits), mpf_class(0, prec_bits)};
            for (int j = 0; j < n; ++j)
                if (j != i) {
                    MC diff{z[static_cast<std::size_t>(i)].re - z[static_cast<std::size_t>(j)].re,
                            z[static_cast<std::size_t>(i)].im - z[static_cast<std::size_t>(j)].im};
                    MC inv = cdiv(MC{mpf_class(1, prec_bits), mpf_class(0, prec_bits)}, diff);
                    s.re += inv.re;
                    s.im += inv.im;
                }
            MC denom = cmul(ratio, s);
            denom.re = 1 - denom.re;
            denom.im = -denom.im;
            MC delta = cdiv(ratio, denom);
            z[static_cast<std::size_t>(i)].re -= delta.re;
            z[static_cast<std::size_t>(i)].im -= delta.im;
            mpf_class mag = abs(delta.re) + abs(delta.im);
            if (mag > movement) movement = mag;
        }
        if (movement < tol) break;
    }
    return z;
}

struct Disk {
    QComplex center;
    Rational radius_sq;      // exact upper bound R_i^2
    Rational modulus_lo, modulus_hi;
    Rational radius_hi;      // one-sided sqrt bound of radius_sq
};

/// Builds Smith disks for a set of rational-complex approximations of the
/// roots of the square-free polynomial psf; returns nullopt when two
/// approximations coincide.
inline std::optional<std::vector<Disk>> smith_disks(const IntPolynomial& psf,
                                                    const std::vector<QComplex>& z) {
    const int n = psf.degree();
    Rational lead_sq = Rational(psf.leading()) * Rational(psf.leading());
    std::vector<Disk> disks;
    disks.reserve(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) {
        Rational prod(1);
        for (std::size_t j = 0; j < z.size(); ++j) {
            if (j == i) continue;
            Rational nij = qc_norm(qc_sub(z[i], z[j]));
            if (nij == 0) return std::nullopt;
            prod *= nij;
        }
        Rational value_sq = qc_norm(qc_eval(psf, z[i]));
        Rational r_sq = Rational(Integer(n) * Integer(n)) * value_sq / (lead_sq * prod);
        Disk d;
        d.center = z[i];
        d.radius_sq = r_sq;
        d.radius_hi = sqrt_upper(r_sq);
        Rational center_norm = qc_norm(z[i]);
        Rational mlo = sqrt_lower(center_norm) - d.radius_hi;
        if (mlo < 0) mlo = 0;
        d.modulus_lo = mlo;
        d.modulus_hi = sqrt_upper(center_norm) + d.radius_hi;
        disks.push_back(std::move(d));
    }
    return disks;
}

inline bool disks_pairwise_disjoint(const std::vector<Disk>& disks) {
    for (std::size_t i = 0; i < disks.size(); ++i)
        for (std::size_t j = i + 1; j < disks.size(); ++j) {
            Rational dist_lo = sqrt_lower(qc_norm(qc_sub(disks[i].center, disks[j].center)));
            if (!(dist_lo > disks[i].radius_hi + disks[j].radius_hi)) return false;
        }
    return true;
}

/// -1 outside, +1 inside, 0 undecided, for a real interval against a disk
/// (exact squared-distance comparison).
inline int interval_vs_disk(const Rational& lo, const Rational& hi, const Disk& d) {
    auto dist_sq = [&](const Rational& x) -> Rational {
        Rational dx = x - d.center.re;
        return dx * dx + d.center.im * d.center.im;
    };
    Rational at_lo = dist_sq(lo), at_hi = dist_sq(hi);
    Rational max_sq = std::max(at_lo, at_hi);
    Rational min_sq;
    if (lo <= d.center.re && d.center.re <= hi)
        min_sq = d.center.im * d.center.im;
    else
        min_sq = std::min(at_lo, at_hi);
    if (max_sq <= d.radius_sq) return 1;
    if (min_sq > d.radius_sq) return -1;
    return 0;
}

}  // namespace rootdetail

struct SeparationCertificate {
    bool certified = false;
    Rational root_modulus_hi;     // upper bound on the smallest root's modulus
    Rational others_modulus_lo;   // lower bound on every other root's modulus
    bool strict_gap = false;      // others_modulus_lo > root_modulus_hi verified numerically
};

struct SmallestRootResult {
    bool certified = false;
    RootEnclosure root;           // real enclosure when is_real, else disk x-range
    SeparationCertificate separation;
    std::string method;           // "prop1" | "general" | "linear"
    std::string note;             // diagnostic on failure
};

/// Certified smallest-modulus root of p (p(0) != 0): the unique root of
/// minimal modulus, its enclosure, multiplicity, and a separation
/// certificate.  Fails gracefully (certified = false) when the precision
/// schedule is exhausted or moduli cannot be separated.
inline SmallestRootResult smallest_modulus_root(const IntPolynomial& p,
                                                unsigned precision_bits = 128) {
    using namespace rootdetail;
    SmallestRootResult result;
    if (p.is_zero() || p.degree() < 1)
        throw std::invalid_argument("smallest_modulus_root: polynomial must be nonconstant");
    if (p.coeff(0) == 0)
        throw std::invalid_argument("smallest_modulus_root: deflate the t-factor first (p(0)=0)");

    const bool p1 = prop1_applies(p);
    IntPolynomial psf = squarefree_part(p);
    auto yun = squarefree_factors(p);
    const bool squarefree = p.primitive_part().degree() == psf.degree();

    auto multiplicity_of_real = [&](const Rational& lo, const Rational& hi,
                                    bool exact) -> unsigned {
        if (squarefree) return 1;
        for (std::size_t k = 0; k < yun.size(); ++k) {
            const IntPolynomial& f = yun[k];
            if (f.degree() <= 0) continue;
            if (exact) {
                if (qp_eval(qp_from(f), lo) == 0) return static_cast<unsigned>(k + 1);
            } else {
                auto chain = sturm_chain(f);
                if (sturm_count(chain, lo, hi) == 1) return static_cast<unsigned>(k + 1);
            }
        }
        return 1;
    };

    if (psf.degree() == 1) {
        Rational root(-psf.coeff(0), psf.leading());
        root.canonicalize();
        result.certified = true;
        result.method = "linear";
        result.root = {root, root, true, multiplicity_of_real(root, root, true), true};
        Rational mod = root < 0 ? Rational(-root) : root;
        result.separation = {true, mod, mod, false};
        return result;
    }

    const Rational target_width = Rational(1, Integer(1) << std::min(precision_bits, 512u));

    // precision escalation: double first, then mpf doubling 64 -> 4096
    std::vector<unsigned> schedule{0, 64, 128, 256, 512, 1024, 2048, 4096};
    for (unsigned prec : schedule) {
        std::vector<QComplex> z;
        if (prec == 0) {
            auto approx = aberth_double(psf);
            for (const auto& w : approx)
                z.push_back({round_to_scale(w.real(), 48), round_to_scale(w.imag(), 48)});
        } else {
            auto approx = aberth_mpf(psf, prec);
            for (const auto& w : approx)
                z.push_back({round_mpf_to_scale(w.re, static_cast<long>(prec) - 8),
                             round_mpf_to_scale(w.im, static_cast<long>(prec) - 8)});
        }
        auto disks_opt = smith_disks(psf, z);
        if (!disks_opt) continue;
        auto& disks = *disks_opt;
        if (!disks_pairwise_disjoint(disks)) continue;

        std::size_t smallest = 0;
        for (std::size_t i = 1; i < disks.size(); ++i)
            if (disks[i].modulus_hi < disks[smallest].modulus_hi) smallest = i;
        Rational others_lo;
        bool first = true;
        bool separated = true;
        for (std::size_t i = 0; i < disks.size(); ++i) {
            if (i == smallest) continue;
            if (first || disks[i].modulus_lo < others_lo) others_lo = disks[i].modulus_lo;
            first = false;
            if (!(disks[i].modulus_lo > disks[smallest].modulus_hi)) separated = false;
        }
        if (!separated) {
            result.note = "smallest-modulus disk not separated from the others";
            continue;
        }

        // locate the real root (if any) sitting in the smallest disk
        auto real_roots = sturm_isolate(psf);
        std::optional<RootEnclosure> real_in_disk;
        bool undecided = false;
        for (auto& enc : real_roots) {
            Rational lo = enc.lo, hi = enc.hi;
            int relation = interval_vs_disk(lo, hi, disks[smallest]);
            for (int step = 0; step < 512 && relation == 0 && !enc.exact; ++step) {
                refine_once(psf, lo, hi);
                relation = interval_vs_disk(lo, hi, disks[smallest]);
            }
            if (relation == 1) {
                real_in_disk = RootEnclosure{lo, hi, enc.exact, 1, true};
                break;
            }
            if (relation == 0) undecided = true;
        }
        if (undecided && !real_in_disk) {
            result.note = "could not decide realness of the smallest-modulus root";
            continue;
        }

        result.certified = true;
        result.method = p1 ? "prop1" : "general";
        result.separation = {true, disks[smallest].modulus_hi, others_lo, true};
        if (real_in_disk) {
            if (!real_in_disk->exact)
                refine_to_width(psf, real_in_disk->lo, real_in_disk->hi, target_width);
            real_in_disk->multiplicity =
                multiplicity_of_real(real_in_disk->lo, real_in_disk->hi, real_in_disk->exact);
            result.root = *real_in_disk;
            if (result.root.multiplicity > 1) {
                // conjugate dominance cannot be concluded for a repeated root
                result.certified = false;
                result.note = "smallest-modulus root has multiplicity > 1";
            }
        } else {
            result.root = {disks[smallest].center.re - disks[smallest].radius_hi,
                           disks[smallest].center.re + disks[smallest].radius_hi, false,
                           squarefree ? 1u : 0u, false};
            if (!squarefree) {
                result.certified = false;
                result.note = "complex smallest root of a non-square-free polynomial";
            }
        }
        return result;
    }

    // Proposition 1 fallback: the unique smallest root is the positive real
    // one; isolate it by Sturm and report the criterion-backed separation.
    if (p1) {
        auto chain = sturm_chain(psf);
        long in_unit = sturm_count(chain, Rational(0), Rational(1));
        if (in_unit >= 1) {
            auto roots = sturm_isolate(psf);
            for (auto& enc : roots) {
                if (enc.hi <= 0 || enc.lo >= 1) continue;
                Rational lo = enc.lo < 0 ? Rational(0) : enc.lo, hi = enc.hi;
                if (!enc.exact) refine_to_width(psf, lo, hi, target_width);
                result.certified = true;
                result.method = "prop1";
                result.root = {lo, hi, enc.exact, 1, true};
                result.separation = {true, hi, hi, false};
                result.note = "separation by the positive-coefficient root criterion";
                return result;
            }
        }
    }
    if (result.note.empty()) result.note = "precision schedule exhausted";
    result.certified = false;
    return result;
}

/// Rational interval for the growth rate tau; exact when lo == hi.
struct RateInterval {
    Rational lo, hi;
    bool exact = false;
};

/// tau as the reciprocal of the smallest positive real root of the growth
/// function's denominator, enclosed to relative width 2^(1-precision).
/// nullopt means the denominator has no root in (0,1]: a finite group.
inline std::optional<RateInterval> growth_rate(const RationalFunction& growth,
                                               unsigned precision_bits = 128) {
    using namespace rootdetail;
    const IntPolynomial& den = growth.denominator();
    if (den.degree() <= 0) return std::nullopt;
    if (den.coeff(0) == 0)
        throw std::invalid_argument("growth_rate: reduced denominator vanishes at 0");
    auto roots = sturm_isolate(den);
    IntPolynomial psf = squarefree_part(den);
    for (auto& enc : roots) {
        if (enc.hi <= 0) continue;
        Rational lo = enc.lo, hi = enc.hi;
        if (!enc.exact && lo < 0) {
            // straddles 0 is impossible: den(0) != 0 and the interval has a
            // sign change, but clamp defensively
            lo = Rational(0);
        }
        if (enc.exact) {
            if (lo > 1) return std::nullopt;  // smallest positive root beyond 1
            return RateInterval{Rational(1) / lo, Rational(1) / lo, true};
        }
        // decide against 1
        while (lo < 1 && hi > 1) refine_once(psf, lo, hi);
        if (lo >= 1) return std::nullopt;
        const Rational rel = Rational(1, Integer(1) << std::min(precision_bits, 1024u));
        while ((hi - lo) > rel * lo) refine_once(psf, lo, hi);
        return RateInterval{Rational(1) / hi, Rational(1) / lo, false};
    }
    return std::nullopt;
}

enum class PerronStatus { Perron, NotCertified, NotApplicable };

struct PerronVerdict {
    PerronStatus status = PerronStatus::NotApplicable;
    std::string method;  // "Prop1" | "General" | ""
    std::optional<RateInterval> tau;
    std::string note;
};

inline std::string to_string(PerronStatus s) {
    switch (s) {
        case PerronStatus::Perron: return "Perron";
        case PerronStatus::NotCertified: return "NotCertified";
        case PerronStatus::NotApplicable: return "NotApplicable";
    }
    return "?";
}

/// Strips (t-1) and bracket factors [2]..[10] from q to a fixed point.
inline IntPolynomial strip_cyclotomic_content(IntPolynomial q) {
    IntPolynomial t_minus_1 = IntPolynomial::variable() - IntPolynomial(1);
    bool changed = true;
    while (changed && q.degree() > 0) {
        changed = false;
        if (divides(t_minus_1, q)) {
            q = exact_divide(q, t_minus_1);
            changed = true;
            continue;
        }
        for (unsigned n = 2; n <= 10; ++n) {
            IntPolynomial b = bracket(n);
            if (q.degree() >= b.degree() && divides(b, q)) {
                q = exact_divide(q, b);
                changed = true;
                break;
            }
        }
    }
    return q.primitive_part();
}

/// Perron certification of a growth function.  The denominator's cyclotomic
/// content contributes only unit-modulus roots; the verdict rests on the
/// smallest-modulus root of the stripped core being real, positive, simple,
/// of modulus < 1, and strictly separated from all other roots.  An
/// H-polynomial hint (when the pipeline has one) enables the Prop. 1 fast
/// path even when reduction cancelled part of the bracket content.
inline PerronVerdict perron_check(const RationalFunction& growth, unsigned precision_bits = 128,
                                  const std::optional<IntPolynomial>& h_hint = std::nullopt) {
    PerronVerdict verdict;
    verdict.tau = growth_rate(growth, precision_bits);
    if (!verdict.tau) {
        verdict.status = PerronStatus::NotApplicable;
        verdict.note = "finite growth: no denominator root in (0,1]";
        return verdict;
    }
    if (verdict.tau->hi <= 1) {
        verdict.status = PerronStatus::NotApplicable;
        verdict.note = "growth rate is not > 1";
        return verdict;
    }

    IntPolynomial core = strip_cyclotomic_content(growth.denominator());
    if (core.degree() <= 0) {
        // all roots are cyclotomic; tau > 1 cannot happen here, guard anyway
        verdict.status = PerronStatus::NotApplicable;
        verdict.note = "denominator is purely cyclotomic";
        return verdict;
    }

    // Prop. 1 fast path via the H-polynomial: core's roots are a subset of
    // the hint's, whose unique smallest-modulus root is real in (0,1).
    if (h_hint && prop1_applies(*h_hint) && divides(core, *h_hint)) {
        auto fast = smallest_modulus_root(core, precision_bits);
        if (fast.certified && fast.root.is_real && fast.root.lo > 0 &&
            fast.root.multiplicity == 1 && fast.separation.root_modulus_hi < 1) {
            verdict.status = PerronStatus::Perron;
            verdict.method = "Prop1";
            return verdict;
        }
    }

    auto smallest = smallest_modulus_root(core, precision_bits);
    if (!smallest.certified) {
        verdict.status = PerronStatus::NotCertified;
        verdict.note = smallest.note;
        return verdict;
    }
    if (smallest.root.is_real && smallest.root.lo > 0 && smallest.root.multiplicity == 1 &&
        smallest.separation.root_modulus_hi < 1 &&
        (smallest.separation.strict_gap || smallest.method == "prop1")) {
        verdict.status = PerronStatus::Perron;
        verdict.method = smallest.method == "prop1" ? "Prop1" : "General";
        return verdict;
    }
    verdict.status = PerronStatus::NotCertified;
    verdict.note = smallest.note.empty() ? "smallest-modulus root is not a simple positive real"
                                         : smallest.note;
    return verdict;
}

}  // namespace coxgrow

#endif
