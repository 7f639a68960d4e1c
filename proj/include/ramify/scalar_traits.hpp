#ifndef RAMIFY_SCALAR_TRAITS_HPP
#define RAMIFY_SCALAR_TRAITS_HPP

#include <complex>

#include "ramify/bigfloat.hpp"
#include "ramify/rational.hpp"

namespace ramify {

/// Uniform view over the coefficient fields used by the generic code:
/// exact (Rational, GaussianRational) vs. floating (BigFloat, BigComplex).
template <class K>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
    static constexpr bool exact = true;
    static Rational zero(const Rational&) { return Rational(0); }
    static Rational one(const Rational&) { return Rational(1); }
    static Rational from_long(long v, const Rational&) { return Rational(v); }
    static bool is_zero(const Rational& x) { return sgn(x) == 0; }
    static std::complex<double> to_cd(const Rational& x) { return {x.get_d(), 0.0}; }
};

template <>
struct scalar_traits<GaussianRational> {
    static constexpr bool exact = true;
    static GaussianRational zero(const GaussianRational&) { return {}; }
    static GaussianRational one(const GaussianRational&) { return GaussianRational(1); }
    static GaussianRational from_long(long v, const GaussianRational&) { return GaussianRational(v); }
    static bool is_zero(const GaussianRational& x) { return x.is_zero(); }
    static std::complex<double> to_cd(const GaussianRational& x) {
        return {x.re.get_d(), x.im.get_d()};
    }
};

template <>
struct scalar_traits<BigFloat> {
    static constexpr bool exact = false;
    static BigFloat zero(const BigFloat& like) { return BigFloat(like.prec()); }
    static BigFloat one(const BigFloat& like) { return BigFloat(1L, like.prec()); }
    static BigFloat from_long(long v, const BigFloat& like) { return BigFloat(v, like.prec()); }
    static bool is_zero(const BigFloat& x) { return x.is_zero(); }
    static std::complex<double> to_cd(const BigFloat& x) { return {x.to_double(), 0.0}; }
};

template <>
struct scalar_traits<BigComplex> {
    static constexpr bool exact = false;
    static BigComplex zero(const BigComplex& like) { return BigComplex(like.prec()); }
    static BigComplex one(const BigComplex& like) { return BigComplex(1L, like.prec()); }
    static BigComplex from_long(long v, const BigComplex& like) { return BigComplex(v, like.prec()); }
    static bool is_zero(const BigComplex& x) { return x.is_zero(); }
    static std::complex<double> to_cd(const BigComplex& x) {
        return {x.re.to_double(), x.im.to_double()};
    }
};

}  // namespace ramify

#endif
