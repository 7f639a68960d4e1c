#ifndef RAMIFY_BIGFLOAT_HPP
#define RAMIFY_BIGFLOAT_HPP

#include <mpfr.h>

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ramify/rational.hpp"

namespace ramify {

inline constexpr long kMinPrecBits = 64;
inline constexpr long kDefaultPrecBits = 256;

/// Arbitrary-precision binary float. Every value carries its working
/// precision; binary operations round to the minimum of the operand
/// precisions.
class BigFloat {
  public:
    explicit BigFloat(long prec = kDefaultPrecBits) {
        check_prec(prec);
        mpfr_init2(v_, prec);
        mpfr_set_zero(v_, 1);
    }
    BigFloat(long value, long prec) {
        check_prec(prec);
        mpfr_init2(v_, prec);
        mpfr_set_si(v_, value, MPFR_RNDN);
    }
    BigFloat(double value, long prec) {
        check_prec(prec);
        mpfr_init2(v_, prec);
        mpfr_set_d(v_, value, MPFR_RNDN);
    }
    BigFloat(const Rational& q, long prec) {
        check_prec(prec);
        mpfr_init2(v_, prec);
        mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
    }
    BigFloat(const Integer& z, long prec) {
        check_prec(prec);
        mpfr_init2(v_, prec);
        mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN);
    }
    static BigFloat from_string(const std::string& s, long prec) {
        BigFloat r(prec);
        if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
            throw std::invalid_argument("bad float literal: " + s);
        return r;
    }

    BigFloat(const BigFloat& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigFloat(BigFloat&& o) noexcept {
        mpfr_init2(v_, kMinPrecBits);
        mpfr_swap(v_, o.v_);
    }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    long prec() const { return mpfr_get_prec(v_); }
    BigFloat at_prec(long prec) const {
        BigFloat r(prec);
        mpfr_set(r.v_, v_, MPFR_RNDN);
        return r;
    }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    int sign() const { return mpfr_sgn(v_); }
    bool is_zero() const { return mpfr_zero_p(v_); }
    bool is_finite() const { return mpfr_number_p(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b) {
        return binop(a, b, mpfr_add);
    }
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b) {
        return binop(a, b, mpfr_sub);
    }
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b) {
        return binop(a, b, mpfr_mul);
    }
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
        return binop(a, b, mpfr_div);
    }
    BigFloat operator-() const {
        BigFloat r(prec());
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }
    BigFloat& operator+=(const BigFloat& o) { return *this = *this + o; }
    BigFloat& operator-=(const BigFloat& o) { return *this = *this - o; }
    BigFloat& operator*=(const BigFloat& o) { return *this = *this * o; }
    BigFloat& operator/=(const BigFloat& o) { return *this = *this / o; }

    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_); }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.v_, b.v_); }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.v_, b.v_); }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_greaterequal_p(a.v_, b.v_); }
    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_); }
    friend bool operator!=(const BigFloat& a, const BigFloat& b) { return !mpfr_equal_p(a.v_, b.v_); }

    BigFloat abs() const {
        BigFloat r(prec());
        mpfr_abs(r.v_, v_, MPFR_RNDN);
        return r;
    }
    BigFloat sqrt() const {
        BigFloat r(prec());
        mpfr_sqrt(r.v_, v_, MPFR_RNDN);
        return r;
    }
    /// this * 2^e, exact.
    BigFloat ldexp(long e) const {
        BigFloat r(prec());
        mpfr_mul_2si(r.v_, v_, e, MPFR_RNDN);
        return r;
    }
    static BigFloat pow2(long e, long prec) { return BigFloat(1L, prec).ldexp(e); }

    static BigFloat hypot(const BigFloat& a, const BigFloat& b) {
        BigFloat r(std::min(a.prec(), b.prec()));
        mpfr_hypot(r.raw(), a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    static BigFloat atan2(const BigFloat& y, const BigFloat& x) {
        BigFloat r(std::min(y.prec(), x.prec()));
        mpfr_atan2(r.raw(), y.v_, x.v_, MPFR_RNDN);
        return r;
    }
    BigFloat cos() const {
        BigFloat r(prec());
        mpfr_cos(r.v_, v_, MPFR_RNDN);
        return r;
    }
    BigFloat sin() const {
        BigFloat r(prec());
        mpfr_sin(r.v_, v_, MPFR_RNDN);
        return r;
    }
    /// Principal real n-th root of a nonnegative value.
    BigFloat rootn(unsigned long n) const {
        BigFloat r(prec());
        mpfr_rootn_ui(r.v_, v_, n, MPFR_RNDN);
        return r;
    }

    /// Decimal string, round-trippable at the value's own precision when
    /// digits == 0 (then ~prec/3.32 digits are emitted).
    std::string str(size_t digits = 0) const {
        if (!is_finite()) return mpfr_nan_p(v_) ? "nan" : (sign() > 0 ? "inf" : "-inf");
        if (is_zero()) return "0";
        if (digits == 0) digits = static_cast<size_t>(static_cast<double>(prec()) * 0.30103) + 2;
        mpfr_exp_t e;
        char* s = mpfr_get_str(nullptr, &e, 10, digits, v_, MPFR_RNDN);
        std::string mant(s);
        mpfr_free_str(s);
        std::string sign_part;
        if (mant[0] == '-') {
            sign_part = "-";
            mant = mant.substr(1);
        }
        // strip trailing zeros of the mantissa
        size_t last = mant.find_last_not_of('0');
        mant = mant.substr(0, std::max<size_t>(last + 1, 1));
        return sign_part + "0." + mant + "e" + std::to_string(static_cast<long>(e));
    }

    friend std::ostream& operator<<(std::ostream& os, const BigFloat& x) { return os << x.str(); }

  private:
    static void check_prec(long prec) {
        if (prec < kMinPrecBits) throw std::invalid_argument("precision below 64 bits");
    }
    template <class Fn>
    static BigFloat binop(const BigFloat& a, const BigFloat& b, Fn fn) {
        BigFloat r(std::min(a.prec(), b.prec()));
        fn(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }

    mpfr_t v_;
};

/// Complex number over BigFloat; precision rules follow the parts.
struct BigComplex {
    BigFloat re, im;

    explicit BigComplex(long prec = kDefaultPrecBits) : re(prec), im(prec) {}
    BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
    BigComplex(long v, long prec) : re(v, prec), im(prec) {}
    BigComplex(const GaussianRational& g, long prec) : re(g.re, prec), im(g.im, prec) {}
    BigComplex(double r, double i, long prec) : re(r, prec), im(i, prec) {}

    long prec() const { return std::min(re.prec(), im.prec()); }
    BigComplex at_prec(long p) const { return {re.at_prec(p), im.at_prec(p)}; }
    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool is_finite() const { return re.is_finite() && im.is_finite(); }

    BigComplex conj() const { return {re, -im}; }
    BigFloat abs() const { return BigFloat::hypot(re, im); }
    BigFloat norm() const { return re * re + im * im; }
    BigFloat arg() const { return BigFloat::atan2(im, re); }

    BigComplex operator-() const { return {-re, -im}; }
    friend BigComplex operator+(const BigComplex& a, const BigComplex& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend BigComplex operator-(const BigComplex& a, const BigComplex& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend BigComplex operator/(const BigComplex& a, const BigComplex& b) {
        BigFloat n = b.norm();
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    BigComplex& operator+=(const BigComplex& o) { return *this = *this + o; }
    BigComplex& operator-=(const BigComplex& o) { return *this = *this - o; }
    BigComplex& operator*=(const BigComplex& o) { return *this = *this * o; }
    BigComplex& operator/=(const BigComplex& o) { return *this = *this / o; }
    friend bool operator==(const BigComplex& a, const BigComplex& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const BigComplex& a, const BigComplex& b) { return !(a == b); }

    BigComplex inverse() const {
        BigFloat n = norm();
        return {re / n, -im / n};
    }

    static BigComplex from_polar(const BigFloat& r, const BigFloat& theta) {
        return {r * theta.cos(), r * theta.sin()};
    }

    /// All n distinct n-th roots, ordered by argument of the k = 0.. branch.
    std::vector<BigComplex> roots(unsigned long n) const {
        long p = prec();
        BigFloat r = abs().rootn(n);
        BigFloat th = arg();
        BigFloat pi(p);
        mpfr_const_pi(pi.raw(), MPFR_RNDN);
        std::vector<BigComplex> out;
        for (unsigned long k = 0; k < n; ++k) {
            BigFloat ang = (th + BigFloat(2L * static_cast<long>(k), p) * pi) / BigFloat(static_cast<long>(n), p);
            out.push_back(from_polar(r, ang));
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const BigComplex& z) {
        return os << "(" << z.re << ", " << z.im << ")";
    }
};

}  // namespace ramify

#endif
