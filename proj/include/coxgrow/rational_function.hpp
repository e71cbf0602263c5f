#ifndef COXGROW_RATIONAL_FUNCTION_HPP
#define COXGROW_RATIONAL_FUNCTION_HPP

#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "polynomial.hpp"

namespace coxgrow {

/// Ratio of two integer polynomials kept in reduced canonical form:
/// gcd(num, den) is a unit, contents are coprime, and the denominator's
/// leading coefficient is positive.
class RationalFunction {
public:
    RationalFunction() : num_{}, den_{1} {}

    RationalFunction(IntPolynomial numerator, IntPolynomial denominator = IntPolynomial(1))
        : num_(std::move(numerator)), den_(std::move(denominator)) {
        if (den_.is_zero())
            throw std::invalid_argument("RationalFunction: zero denominator");
        reduce();
    }

    const IntPolynomial& numerator() const { return num_; }
    const IntPolynomial& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_ == IntPolynomial(1); }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }

    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }

    RationalFunction operator-() const {
        RationalFunction r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }

    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw std::invalid_argument("RationalFunction: division by zero");
        return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
    }

    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

    /// Multiplicative inverse; rejects zero.
    RationalFunction reciprocal() const {
        if (is_zero()) throw std::invalid_argument("RationalFunction: reciprocal of zero");
        return RationalFunction(den_, num_);
    }

private:
    void reduce() {
        if (num_.is_zero()) {
            den_ = IntPolynomial(1);
            return;
        }
        IntPolynomial g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = exact_divide(num_, g);
            den_ = exact_divide(den_, g);
        }
        Integer cn = num_.content(), cd = den_.content();
        Integer cg;
        mpz_gcd(cg.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
        if (cg > 1) {
            num_ = exact_divide(num_, IntPolynomial(cg));
            den_ = exact_divide(den_, IntPolynomial(cg));
        }
        if (den_.leading() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
    }

    IntPolynomial num_;
    IntPolynomial den_;
};

struct SignedTerm {
    int sign;  // +1 or -1
    RationalFunction rf;
};

/// Exact signed sum of rational functions, reduced canonical.
inline RationalFunction rational_sum(std::span<const SignedTerm> terms) {
    RationalFunction acc;
    for (const auto& [sign, rf] : terms) {
        if (sign == 1)
            acc += rf;
        else if (sign == -1)
            acc -= rf;
        else
            throw std::invalid_argument("rational_sum: sign must be +1 or -1");
    }
    return acc;
}

/// rf(1/t) with numerator and denominator cleared by t^D,
/// D = max(deg num, deg den).  An involution on reduced forms.
inline RationalFunction reciprocal_substitution(const RationalFunction& rf) {
    if (rf.is_zero())
        throw std::invalid_argument("reciprocal_substitution: zero input");
    const int dn = rf.numerator().degree();
    const int dd = rf.denominator().degree();
    const int d = std::max(dn, dd);
    IntPolynomial num = rf.numerator().reversed();
    IntPolynomial den = rf.denominator().reversed();
    // restore the shared power of t dropped by coefficient reversal
    if (dn < d) num = num * IntPolynomial::monomial(1, static_cast<std::size_t>(d - dn));
    if (dd < d) den = den * IntPolynomial::monomial(1, static_cast<std::size_t>(d - dd));
    return RationalFunction(std::move(num), std::move(den));
}

/// First n coefficients of the power-series expansion of rf at t = 0,
/// computed by exact long division.  The denominator must not vanish at 0
/// and every produced coefficient must be an integer.
inline std::vector<Integer> taylor_coefficients(const RationalFunction& rf, std::size_t n) {
    const IntPolynomial& den = rf.denominator();
    if (den.coeff(0) == 0)
        throw std::invalid_argument("taylor_coefficients: pole at the origin");
    const Integer& d0 = den.coeff(0);
    std::vector<Integer> out;
    out.reserve(n);
    std::vector<Integer> rem;  // running remainder coefficients, ascending
    {
        auto c = rf.numerator().coefficients();
        rem.assign(c.begin(), c.end());
    }
    rem.resize(std::max(rem.size(), n + den.coefficients().size()), Integer(0));
    for (std::size_t k = 0; k < n; ++k) {
        Integer q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rem[k].get_mpz_t(), d0.get_mpz_t());
        if (r != 0)
            throw std::domain_error("taylor_coefficients: non-integral series coefficient");
        for (std::size_t i = 0; i < den.coefficients().size() && k + i < rem.size(); ++i)
            rem[k + i] -= q * den.coeff(i);
        out.push_back(std::move(q));
    }
    return out;
}

}  // namespace coxgrow

#endif
