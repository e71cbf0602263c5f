#ifndef COXGROW_POLYNOMIAL_HPP
#define COXGROW_POLYNOMIAL_HPP

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace coxgrow {

using Integer = mpz_class;
using Rational = mpq_class;

class not_divisible_error;

/// Dense univariate polynomial over the integers with arbitrary-precision
/// coefficients.  Coefficients are stored ascending by degree with no
/// trailing zeros; the zero polynomial is the empty coefficient list and
/// reports degree -1.
class IntPolynomial {
public:
    IntPolynomial() = default;

    IntPolynomial(Integer constant) {
        if (constant != 0) coeffs_.push_back(std::move(constant));
    }

    IntPolynomial(long constant) : IntPolynomial(Integer(constant)) {}
    IntPolynomial(int constant) : IntPolynomial(Integer(constant)) {}

    static IntPolynomial from_coefficients(std::vector<Integer> ascending) {
        IntPolynomial p;
        p.coeffs_ = std::move(ascending);
        p.normalize();
        return p;
    }

    static IntPolynomial from_coefficients(std::initializer_list<long> ascending) {
        std::vector<Integer> c;
        c.reserve(ascending.size());
        for (long x : ascending) c.emplace_back(x);
        return from_coefficients(std::move(c));
    }

    static IntPolynomial monomial(Integer coefficient, std::size_t power) {
        if (coefficient == 0) return {};
        IntPolynomial p;
        p.coeffs_.assign(power + 1, Integer(0));
        p.coeffs_[power] = std::move(coefficient);
        return p;
    }

    static IntPolynomial variable() { return monomial(1, 1); }

    bool is_zero() const { return coeffs_.empty(); }

    bool is_constant() const { return coeffs_.size() <= 1; }

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    const Integer& coeff(std::size_t k) const {
        static const Integer zero(0);
        return k < coeffs_.size() ? coeffs_[k] : zero;
    }

    const Integer& leading() const {
        static const Integer zero(0);
        return coeffs_.empty() ? zero : coeffs_.back();
    }

    std::span<const Integer> coefficients() const { return coeffs_; }

    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
        std::vector<Integer> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Integer(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
        return from_coefficients(std::move(c));
    }

    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
        std::vector<Integer> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Integer(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
        return from_coefficients(std::move(c));
    }

    IntPolynomial operator-() const {
        IntPolynomial p(*this);
        for (auto& c : p.coeffs_) c = -c;
        return p;
    }

    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Integer> c(a.coeffs_.size() + b.coeffs_.size() - 1, Integer(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return from_coefficients(std::move(c));
    }

    friend IntPolynomial operator*(const Integer& s, const IntPolynomial& p) {
        if (s == 0) return {};
        IntPolynomial q(p);
        for (auto& c : q.coeffs_) c *= s;
        return q;
    }

    IntPolynomial& operator+=(const IntPolynomial& o) { return *this = *this + o; }
    IntPolynomial& operator-=(const IntPolynomial& o) { return *this = *this - o; }
    IntPolynomial& operator*=(const IntPolynomial& o) { return *this = *this * o; }

    Integer evaluate(const Integer& x) const {
        Integer acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Rational evaluate(const Rational& x) const {
        Rational acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    IntPolynomial derivative() const {
        if (coeffs_.size() <= 1) return {};
        std::vector<Integer> c(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = Integer(i) * coeffs_[i];
        return from_coefficients(std::move(c));
    }

    /// gcd of all coefficients, with the sign of the leading coefficient;
    /// 0 for the zero polynomial.
    Integer content() const {
        Integer g(0);
        for (const auto& c : coeffs_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (!coeffs_.empty() && coeffs_.back() < 0) g = -g;
        return g;
    }

    IntPolynomial primitive_part() const {
        if (is_zero()) return {};
        Integer g = content();
        IntPolynomial p(*this);
        for (auto& c : p.coeffs_) c /= g;
        return p;
    }

    /// Coefficient list reversed, i.e. t^deg * p(1/t).
    IntPolynomial reversed() const {
        std::vector<Integer> c(coeffs_.rbegin(), coeffs_.rend());
        return from_coefficients(std::move(c));
    }

private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Integer> coeffs_;
};

class not_divisible_error : public std::runtime_error {
public:
    not_divisible_error(std::string what, IntPolynomial remainder)
        : std::runtime_error(std::move(what)), remainder_(std::move(remainder)) {}

    const IntPolynomial& remainder() const { return remainder_; }

private:
    IntPolynomial remainder_;
};

/// The polynomial 1 + t + ... + t^{n-1}.
inline IntPolynomial bracket(unsigned n) {
    if (n == 0) throw std::invalid_argument("bracket: order must be >= 1");
    std::vector<Integer> c(n, Integer(1));
    return IntPolynomial::from_coefficients(std::move(c));
}

/// Product of brackets; the empty product is 1.
inline IntPolynomial bracket_product(std::span<const unsigned> ns) {
    IntPolynomial p(1);
    for (unsigned n : ns) p *= bracket(n);
    return p;
}

inline IntPolynomial bracket_product(std::initializer_list<unsigned> ns) {
    return bracket_product(std::span<const unsigned>(ns.begin(), ns.size()));
}

/// Quotient of p by q when the division is exact over the integers.
/// Throws not_divisible_error carrying the remainder otherwise.
inline IntPolynomial exact_divide(const IntPolynomial& p, const IntPolynomial& q) {
    if (q.is_zero()) throw std::invalid_argument("exact_divide: division by zero polynomial");
    if (p.is_zero()) return {};
    std::vector<Integer> rem(p.coefficients().begin(), p.coefficients().end());
    const int dq = q.degree();
    const Integer& lq = q.leading();
    std::vector<Integer> quot;
    int dr = static_cast<int>(rem.size()) - 1;
    while (dr >= dq) {
        while (dr >= 0 && rem[dr] == 0) --dr;
        if (dr < dq) break;
        Integer c, r;
        mpz_tdiv_qr(c.get_mpz_t(), r.get_mpz_t(), rem[dr].get_mpz_t(), lq.get_mpz_t());
        if (r != 0)
            throw not_divisible_error("exact_divide: leading coefficient not divisible",
                                      IntPolynomial::from_coefficients(std::move(rem)));
        std::size_t shift = static_cast<std::size_t>(dr - dq);
        if (quot.size() < shift + 1) quot.resize(shift + 1, Integer(0));
        quot[shift] = c;
        for (int i = 0; i <= dq; ++i) rem[shift + i] -= c * q.coeff(i);
        --dr;
    }
    auto remainder = IntPolynomial::from_coefficients(std::move(rem));
    if (!remainder.is_zero())
        throw not_divisible_error("exact_divide: nonzero remainder", std::move(remainder));
    return IntPolynomial::from_coefficients(std::move(quot));
}

inline bool divides(const IntPolynomial& q, const IntPolynomial& p) {
    try {
        exact_divide(p, q);
        return true;
    } catch (const not_divisible_error&) {
        return false;
    }
}

/// Primitive gcd over Z, computed by monic Euclid over Q and cleared back to
/// a primitive integer polynomial with positive leading coefficient.
inline IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero()) return b.is_zero() ? IntPolynomial{} : b.primitive_part();
    if (b.is_zero()) return a.primitive_part();

    using QPoly = std::vector<Rational>;
    auto to_q = [](const IntPolynomial& p) {
        QPoly q(p.coefficients().size());
        for (std::size_t i = 0; i < q.size(); ++i) q[i] = Rational(p.coeff(i));
        return q;
    };
    auto trim = [](QPoly& p) {
        while (!p.empty() && p.back() == 0) p.pop_back();
    };
    QPoly u = to_q(a), v = to_q(b);
    while (!v.empty()) {
        // u mod v
        QPoly r = u;
        while (r.size() >= v.size()) {
            Rational c = r.back() / v.back();
            std::size_t shift = r.size() - v.size();
            for (std::size_t i = 0; i < v.size(); ++i) r[shift + i] -= c * v[i];
            r.pop_back();
            trim(r);
        }
        u = std::move(v);
        v = std::move(r);
    }
    // clear denominators of u, return primitive part
    Integer lcm(1);
    for (const auto& c : u) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<Integer> z(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        Rational scaled = u[i] * Rational(lcm);
        z[i] = scaled.get_num();
    }
    auto g = IntPolynomial::from_coefficients(std::move(z)).primitive_part();
    if (g.leading() < 0) g = -g;
    return g;
}

}  // namespace coxgrow

#endif
