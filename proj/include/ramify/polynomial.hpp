#ifndef RAMIFY_POLYNOMIAL_HPP
#define RAMIFY_POLYNOMIAL_HPP

#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ramify/scalar_traits.hpp"

namespace ramify {

template <class To, class From>
To convert_scalar(const From& x, const To& like);

template <class K>
inline K convert_scalar_same(const K& x, const K&) { return x; }

template <> inline Rational convert_scalar(const Rational& x, const Rational& l) { return convert_scalar_same(x, l); }
template <> inline GaussianRational convert_scalar(const GaussianRational& x, const GaussianRational& l) { return convert_scalar_same(x, l); }
template <> inline BigFloat convert_scalar(const BigFloat& x, const BigFloat& l) { return x.at_prec(l.prec()); }
template <> inline BigComplex convert_scalar(const BigComplex& x, const BigComplex& l) { return x.at_prec(l.prec()); }
template <> inline GaussianRational convert_scalar(const Rational& x, const GaussianRational&) { return GaussianRational(x); }
template <> inline BigFloat convert_scalar(const Rational& x, const BigFloat& l) { return BigFloat(x, l.prec()); }
template <> inline BigComplex convert_scalar(const Rational& x, const BigComplex& l) { return BigComplex(GaussianRational(x), l.prec()); }
template <> inline BigComplex convert_scalar(const GaussianRational& x, const BigComplex& l) { return BigComplex(x, l.prec()); }
template <> inline BigComplex convert_scalar(const BigFloat& x, const BigComplex& l) {
    return BigComplex(x.at_prec(l.prec()), BigFloat(l.prec()));
}

/// Dense univariate polynomial, index = power, no trailing zero coefficients
/// (empty list encodes the zero polynomial).
template <class K>
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<K> coeffs) : c_(coeffs) { trim(); }

    static Polynomial constant(K v) { return Polynomial(std::vector<K>{std::move(v)}); }
    static Polynomial identity(const K& like) {
        return Polynomial(std::vector<K>{scalar_traits<K>::zero(like), scalar_traits<K>::one(like)});
    }

    const std::vector<K>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }

    const K& lead() const {
        if (c_.empty()) throw std::domain_error("zero polynomial");
        return c_.back();
    }
    K coeff(size_t i) const {
        if (i < c_.size()) return c_[i];
        return c_.empty() ? K{} : scalar_traits<K>::zero(c_[0]);
    }
    K zero_like() const { return c_.empty() ? K{} : scalar_traits<K>::zero(c_[0]); }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<K> r(std::max(a.c_.size(), b.c_.size()), pick_zero(a, b));
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
        return Polynomial(std::move(r));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
    Polynomial operator-() const {
        std::vector<K> r(c_);
        for (auto& x : r) x = -x;
        return Polynomial(std::move(r));
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial();
        std::vector<K> r(a.c_.size() + b.c_.size() - 1, scalar_traits<K>::zero(a.c_[0]));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return Polynomial(std::move(r));
    }
    friend Polynomial operator*(const K& s, const Polynomial& p) {
        std::vector<K> r(p.c_);
        for (auto& x : r) x = s * x;
        return Polynomial(std::move(r));
    }
    Polynomial scaled_by_inverse(const K& s) const {
        std::vector<K> r(c_);
        for (auto& x : r) x = x / s;
        return Polynomial(std::move(r));
    }
    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    /// Horner evaluation; the point may live in a larger field than the
    /// coefficients (e.g. rational coefficients at a BigComplex point).
    template <class T>
    T eval(const T& x) const {
        T acc = scalar_traits<T>::zero(x);
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + convert_scalar<T>(c_[i], x);
        return acc;
    }

    Polynomial derivative(long order = 1) const {
        if (order < 0) throw std::invalid_argument("negative derivative order");
        Polynomial p = *this;
        for (long l = 0; l < order; ++l) {
            if (p.c_.size() <= 1) return Polynomial();
            std::vector<K> r(p.c_.size() - 1, scalar_traits<K>::zero(p.c_[0]));
            for (size_t i = 1; i < p.c_.size(); ++i)
                r[i - 1] = scalar_traits<K>::from_long(static_cast<long>(i), p.c_[0]) * p.c_[i];
            p = Polynomial(std::move(r));
        }
        return p;
    }

    /// t^n p(1/t): the coefficient list reversed within length n+1.
    Polynomial reverse(long n) const {
        if (degree() > n) throw std::domain_error("degree exceeds reversal bound");
        if (is_zero()) return Polynomial();
        std::vector<K> r(static_cast<size_t>(n) + 1, scalar_traits<K>::zero(c_[0]));
        for (size_t i = 0; i < c_.size(); ++i) r[static_cast<size_t>(n) - i] = c_[i];
        return Polynomial(std::move(r));
    }

    /// Euclidean division over a field; returns (quotient, remainder).
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const {
        if (d.is_zero()) throw std::domain_error("division by zero polynomial");
        Polynomial q, r = *this;
        if (r.degree() < d.degree()) return {q, r};
        std::vector<K> qc(static_cast<size_t>(r.degree() - d.degree()) + 1,
                          scalar_traits<K>::zero(d.c_[0]));
        while (!r.is_zero() && r.degree() >= d.degree()) {
            K f = r.lead() / d.lead();
            long sh = r.degree() - d.degree();
            qc[static_cast<size_t>(sh)] = f;
            std::vector<K> rc = r.c_;
            for (size_t i = 0; i < d.c_.size(); ++i)
                rc[i + static_cast<size_t>(sh)] -= f * d.c_[i];
            rc.pop_back();  // leading term cancels exactly
            r = Polynomial(std::move(rc));
        }
        return {Polynomial(std::move(qc)), r};
    }

    Polynomial monic() const {
        if (is_zero()) return *this;
        return scaled_by_inverse(lead());
    }

    /// p(g(x)) by Horner over polynomials.
    Polynomial compose(const Polynomial& g) const {
        Polynomial acc;
        for (size_t i = c_.size(); i-- > 0;) acc = acc * g + Polynomial::constant(c_[i]);
        return acc;
    }

  private:
    static K pick_zero(const Polynomial& a, const Polynomial& b) {
        if (!a.c_.empty()) return scalar_traits<K>::zero(a.c_[0]);
        if (!b.c_.empty()) return scalar_traits<K>::zero(b.c_[0]);
        return K{};
    }
    void trim() {
        while (!c_.empty() && scalar_traits<K>::is_zero(c_.back())) c_.pop_back();
    }

    std::vector<K> c_;
};

/// Monic gcd by the Euclidean algorithm; exact coefficient fields only.
template <class K>
Polynomial<K> poly_gcd(Polynomial<K> a, Polynomial<K> b) {
    static_assert(scalar_traits<K>::exact, "poly_gcd requires an exact field");
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd of zero polynomials");
    while (!b.is_zero()) {
        auto [q, r] = a.divmod(b);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// (gcd(p, q), squarefree part of p).
template <class K>
std::pair<Polynomial<K>, Polynomial<K>> gcd_squarefree(const Polynomial<K>& p,
                                                       const Polynomial<K>& q) {
    Polynomial<K> g = poly_gcd(p, q);
    Polynomial<K> sf;
    if (!p.is_zero()) {
        if (p.degree() == 0) {
            sf = Polynomial<K>::constant(scalar_traits<K>::one(p.coeffs()[0]));
        } else {
            Polynomial<K> gp = poly_gcd(p, p.derivative());
            sf = p.divmod(gp).first.monic();
        }
    }
    return {g, sf};
}

template <class K>
Polynomial<K> squarefree_part(const Polynomial<K>& p) {
    return gcd_squarefree(p, p).second;
}

/// Yun squarefree decomposition: returns (factor, multiplicity) pairs with
/// p = lead * prod factor_i^{m_i}, factors monic squarefree and coprime.
template <class K>
std::vector<std::pair<Polynomial<K>, long>> squarefree_decomposition(const Polynomial<K>& p) {
    if (p.is_zero()) throw std::domain_error("zero polynomial");
    std::vector<std::pair<Polynomial<K>, long>> out;
    if (p.degree() == 0) return out;
    Polynomial<K> pm = p.monic();
    Polynomial<K> g = poly_gcd(pm, pm.derivative());
    Polynomial<K> w = pm.divmod(g).first;
    Polynomial<K> y = pm.derivative().divmod(g).first;
    Polynomial<K> z = y - w.derivative();
    long i = 1;
    while (w.degree() > 0) {
        Polynomial<K> gi = z.is_zero() ? w.monic() : poly_gcd(w, z);
        if (gi.degree() > 0) out.emplace_back(gi, i);
        w = w.divmod(gi).first;
        if (w.degree() == 0) break;
        y = z.divmod(gi).first;
        z = y - w.derivative();
        ++i;
    }
    return out;
}

/// Exact Newton interpolation through the given samples (distinct nodes).
template <class K>
Polynomial<K> interpolate(const std::vector<std::pair<K, K>>& samples) {
    if (samples.empty()) return Polynomial<K>();
    const K& like = samples[0].first;
    std::vector<K> nodes, table;
    nodes.reserve(samples.size());
    table.reserve(samples.size());
    for (auto& [x, y] : samples) {
        for (const K& n : nodes)
            if (n == x) throw std::domain_error("repeated node");
        nodes.push_back(x);
        table.push_back(y);
    }
    for (size_t level = 1; level < table.size(); ++level) {
        for (size_t i = table.size() - 1; i >= level; --i) {
            table[i] = (table[i] - table[i - 1]) / (nodes[i] - nodes[i - level]);
            if (i == level) break;
        }
    }
    // assemble: sum table[i] * prod_{j<i}(x - nodes[j])
    Polynomial<K> result, basis = Polynomial<K>::constant(scalar_traits<K>::one(like));
    for (size_t i = 0; i < table.size(); ++i) {
        result = result + table[i] * basis;
        basis = basis * Polynomial<K>({-nodes[i], scalar_traits<K>::one(like)});
    }
    return result;
}

template <class To, class From>
Polynomial<To> convert_poly(const Polynomial<From>& p, const To& like) {
    std::vector<To> c;
    c.reserve(p.coeffs().size());
    for (const auto& x : p.coeffs()) c.push_back(convert_scalar<To>(x, like));
    return Polynomial<To>(std::move(c));
}

/// Integer content/primitive part of a rational-coefficient polynomial:
/// returns the unique integer-coefficient multiple with content 1 and
/// positive leading coefficient.
inline Polynomial<Rational> primitive_integer_part(const Polynomial<Rational>& p) {
    if (p.is_zero()) return p;
    Integer den_lcm = 1;
    for (const auto& c : p.coeffs()) {
        Integer d = c.get_den();
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    }
    std::vector<Rational> scaled;
    Integer content = 0;
    for (const auto& c : p.coeffs()) {
        Rational s = c * Rational(den_lcm);
        s.canonicalize();
        scaled.push_back(s);
        Integer n = s.get_num();
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), n.get_mpz_t());
    }
    if (sgn(p.lead()) < 0) content = -content;
    for (auto& c : scaled) c /= Rational(content);
    return Polynomial<Rational>(std::move(scaled));
}

/// Reduced pair (P, Q) representing f = P/Q.
template <class K>
struct RationalMap {
    Polynomial<K> num, den;

    RationalMap() = default;
    RationalMap(Polynomial<K> p, Polynomial<K> q) : num(std::move(p)), den(std::move(q)) {
        if (den.is_zero()) throw std::domain_error("zero denominator");
        if constexpr (scalar_traits<K>::exact) reduce();
    }

    long degree() const { return std::max(num.degree(), den.degree()); }
    bool is_constant() const { return num.degree() <= 0 && den.degree() <= 0; }

    void reduce() {
        static_assert(scalar_traits<K>::exact);
        if (num.is_zero()) {
            den = Polynomial<K>::constant(scalar_traits<K>::one(den.coeffs()[0]));
            return;
        }
        Polynomial<K> g = poly_gcd(num, den);
        if (g.degree() > 0) {
            num = num.divmod(g).first;
            den = den.divmod(g).first;
        }
    }

    template <class T>
    T eval(const T& x) const {
        return num.eval(x) / den.eval(x);
    }

    /// Wronskian P'Q - PQ': the numerator of f'.
    Polynomial<K> wronskian() const { return num.derivative() * den - num * den.derivative(); }

    /// Same map up to a common scalar on (P, Q); exact cross-multiplication.
    friend bool equivalent(const RationalMap& a, const RationalMap& b) {
        return a.num * b.den == b.num * a.den;
    }
};

/// f ∘ g as a reduced rational map; deg(f∘g) = deg f · deg g.
template <class K>
RationalMap<K> compose(const RationalMap<K>& f, const RationalMap<K>& g) {
    if (f.is_constant() || g.is_constant()) throw std::domain_error("degenerate composition");
    const K like = g.num.is_zero() ? g.den.coeffs()[0] : g.num.coeffs()[0];
    long n = f.degree();
    // powers of g.num and g.den
    std::vector<Polynomial<K>> an(static_cast<size_t>(n) + 1), bn(static_cast<size_t>(n) + 1);
    an[0] = bn[0] = Polynomial<K>::constant(scalar_traits<K>::one(like));
    for (long i = 1; i <= n; ++i) {
        an[static_cast<size_t>(i)] = an[static_cast<size_t>(i - 1)] * g.num;
        bn[static_cast<size_t>(i)] = bn[static_cast<size_t>(i - 1)] * g.den;
    }
    Polynomial<K> P, Q;
    for (long i = 0; i <= n; ++i) {
        Polynomial<K> basis = an[static_cast<size_t>(i)] * bn[static_cast<size_t>(n - i)];
        P = P + f.num.coeff(static_cast<size_t>(i)) * basis;
        Q = Q + f.den.coeff(static_cast<size_t>(i)) * basis;
    }
    return RationalMap<K>(std::move(P), std::move(Q));
}

}  // namespace ramify

#endif
