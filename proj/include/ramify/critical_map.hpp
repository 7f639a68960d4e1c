#ifndef RAMIFY_CRITICAL_MAP_HPP
#define RAMIFY_CRITICAL_MAP_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ramify/linalg.hpp"
#include "ramify/polynomial.hpp"

namespace ramify {

/// A point of the extended plane: a finite scalar or the point at infinity.
template <class K>
struct ExtendedPoint {
    bool infinite = false;
    K value{};

    static ExtendedPoint at(K v) { return {false, std::move(v)}; }
    static ExtendedPoint inf(const K& like) { return {true, scalar_traits<K>::zero(like)}; }

    friend bool operator==(const ExtendedPoint& a, const ExtendedPoint& b) {
        if (a.infinite != b.infinite) return false;
        return a.infinite || a.value == b.value;
    }
    friend bool operator!=(const ExtendedPoint& a, const ExtendedPoint& b) { return !(a == b); }
};

/// Prescription "f takes the value b at z with local multiplicity nu + 1".
/// nu = 0 is a plain interpolation constraint f(z) = b.
template <class K>
struct CriticalTriple {
    ExtendedPoint<K> z;
    long nu = 0;
    ExtendedPoint<K> b;
};

/// Degree forced by the total branching: n = 1 + (sum of nu) / 2.
template <class K>
long rh_degree(const std::vector<CriticalTriple<K>>& data) {
    long total = 0;
    for (const auto& t : data) {
        if (t.nu < 0) throw std::invalid_argument("negative multiplicity");
        total += t.nu;
    }
    if (total % 2 != 0) throw std::domain_error("parity");
    return 1 + total / 2;
}

namespace detail {

/// Row of the constraint (d/dz)^l [P - b Q](z) = 0 in the coefficient basis
/// (p_0..p_n, q_0..q_n); the four point/value cases of the map.
template <class K>
void append_rows(Matrix<K>& m, size_t& row, const CriticalTriple<K>& t, long n, const K& like) {
    const K zero = scalar_traits<K>::zero(like);
    const K one = scalar_traits<K>::one(like);
    size_t np1 = static_cast<size_t>(n) + 1;
    for (long l = 0; l <= t.nu; ++l, ++row) {
        if (!t.z.infinite) {
            // weight of p_j in P^{(l)}(z): j(j-1)..(j-l+1) z^{j-l}
            std::vector<K> w(np1, zero);
            K zp = one;
            for (long j = l; j <= n; ++j) {
                K fall = one;
                for (long d = 0; d < l; ++d) fall = fall * scalar_traits<K>::from_long(j - d, like);
                w[static_cast<size_t>(j)] = fall * zp;
                zp = zp * t.z.value;
            }
            for (size_t j = 0; j < np1; ++j) {
                if (t.b.infinite) {
                    m.at(row, np1 + j) = -w[j];
                } else {
                    m.at(row, j) = w[j];
                    m.at(row, np1 + j) = -(t.b.value * w[j]);
                }
            }
        } else {
            // at infinity the reversed polynomials t^n P(1/t) are probed at
            // 0: the l-th derivative picks out the coefficient of z^{n-l}
            size_t j = static_cast<size_t>(n - l);
            if (t.b.infinite) {
                m.at(row, np1 + j) = -one;
            } else {
                m.at(row, j) = one;
                m.at(row, np1 + j) = -t.b.value;
            }
        }
    }
}

}  // namespace detail

/// The critical evaluation map as a (sum nu_i + s) x (2n+2) matrix acting on
/// coefficient vectors of the pair (P, Q), deg <= n.
template <class K>
Matrix<K> assemble(const std::vector<CriticalTriple<K>>& data, long n, const K& like,
                   bool check_distinct = true) {
    if (check_distinct) {
        long at_inf = 0;
        for (size_t i = 0; i < data.size(); ++i) {
            if (data[i].z.infinite) ++at_inf;
            for (size_t j = i + 1; j < data.size(); ++j)
                if (data[i].z == data[j].z) throw std::domain_error("coincident critical points");
        }
        if (at_inf > 1) throw std::domain_error("coincident critical points");
    }
    for (const auto& t : data)
        if (t.z.infinite && t.nu > n) throw std::invalid_argument("multiplicity exceeds degree");
    size_t rows = 0;
    for (const auto& t : data) rows += static_cast<size_t>(t.nu) + 1;
    Matrix<K> m(rows, 2 * (static_cast<size_t>(n) + 1), scalar_traits<K>::zero(like));
    size_t row = 0;
    for (const auto& t : data) detail::append_rows(m, row, t, n, like);
    return m;
}

/// Split a kernel vector (p_0..p_n, q_0..q_n) into the pair (P, Q),
/// normalized so the first nonzero coefficient of (Q, then P) is one.
template <class K>
std::pair<Polynomial<K>, Polynomial<K>> split_kernel_vector(std::vector<K> v, const K& like) {
    if (v.size() % 2 != 0) throw std::invalid_argument("odd kernel vector length");
    size_t np1 = v.size() / 2;
    K pivot = scalar_traits<K>::zero(like);
    for (size_t j = 0; j < np1 && scalar_traits<K>::is_zero(pivot); ++j)
        if (!scalar_traits<K>::is_zero(v[np1 + j])) pivot = v[np1 + j];
    for (size_t j = 0; j < np1 && scalar_traits<K>::is_zero(pivot); ++j)
        if (!scalar_traits<K>::is_zero(v[j])) pivot = v[j];
    if (!scalar_traits<K>::is_zero(pivot))
        for (auto& x : v) x = x / pivot;
    std::vector<K> p(v.begin(), v.begin() + static_cast<long>(np1));
    std::vector<K> q(v.begin() + static_cast<long>(np1), v.end());
    return {Polynomial<K>(std::move(p)), Polynomial<K>(std::move(q))};
}

/// Kernel of the map over an exact field, as normalized (P, Q) pairs.
template <class K>
std::vector<std::pair<Polynomial<K>, Polynomial<K>>> nullspace(const Matrix<K>& m, const K& like) {
    std::vector<std::pair<Polynomial<K>, Polynomial<K>>> out;
    for (auto& v : exact_kernel(m)) out.push_back(split_kernel_vector(std::move(v), like));
    return out;
}

/// Numeric kernel with residual certification: each basis vector must have
/// relative residual below the given tolerance.
inline std::vector<std::pair<Polynomial<BigComplex>, Polynomial<BigComplex>>> nullspace_numeric(
    const Matrix<BigComplex>& m, long prec, const BigFloat& rel_tol) {
    std::vector<std::pair<Polynomial<BigComplex>, Polynomial<BigComplex>>> out;
    for (auto& v : numeric_kernel(m, rel_tol)) {
        if (residual_norm(m, v) > rel_tol) continue;
        out.push_back(split_kernel_vector(std::move(v), BigComplex(prec)));
    }
    return out;
}

/// Outcome of checking a map against prescribed critical data.
struct VerifyReport {
    bool ok = false;
    bool degree_consistent = false;      // sum nu == 2 deg - 2
    std::vector<bool> triple_ok;         // per-triple order conditions
    std::string detail;
};

namespace detail {

/// Vanishing order of g at z0, capped at `cap`. Numeric scalars use
/// |g^(l)(z0)| <= tol * (1 + max |coeff of g^(l)|) as the zero test.
template <class K, class Tol>
long vanishing_order(const Polynomial<K>& g, const K& z0, long cap, const Tol& tol) {
    Polynomial<K> d = g;
    for (long l = 0; l <= cap; ++l) {
        if (d.is_zero()) return cap + 1;
        K val = d.eval(z0);
        bool zero;
        if constexpr (scalar_traits<K>::exact) {
            (void)tol;
            zero = scalar_traits<K>::is_zero(val);
        } else {
            BigFloat m(val.prec());
            for (const auto& c : d.coeffs()) {
                BigFloat a = c.abs();
                if (a > m) m = a;
            }
            zero = val.abs() <= tol * (BigFloat(1L, val.prec()) + m);
        }
        if (!zero) return l;
        d = d.derivative();
    }
    return cap + 1;
}

}  // namespace detail

/// Check that f realizes each triple with the exact local multiplicity and
/// that no branching remains unaccounted for (total equals 2 deg - 2).
template <class K, class Tol = int>
VerifyReport verify_critical_data(const RationalMap<K>& f, const std::vector<CriticalTriple<K>>& data,
                                  const Tol& tol = 0) {
    VerifyReport rep;
    long d = f.degree();
    if (d < 1) {
        rep.detail = "constant map";
        return rep;
    }
    long total = 0;
    for (const auto& t : data) total += t.nu;
    rep.degree_consistent = (total == 2 * d - 2);

    const K like = f.den.coeffs()[0];
    for (const auto& t : data) {
        Polynomial<K> g;
        K z0 = scalar_traits<K>::zero(like);
        if (!t.z.infinite) {
            z0 = t.z.value;
            g = t.b.infinite ? f.den : f.num - t.b.value * f.den;
        } else {
            Polynomial<K> rp = f.num.reverse(d), rq = f.den.reverse(d);
            g = t.b.infinite ? rq : rp - t.b.value * rq;
        }
        long ord = detail::vanishing_order(g, z0, t.nu + 1, tol);
        bool ok = (t.nu == 0) ? (ord >= 1) : (ord == t.nu + 1);
        rep.triple_ok.push_back(ok);
    }
    rep.ok = rep.degree_consistent;
    for (bool b : rep.triple_ok) rep.ok = rep.ok && b;
    return rep;
}

}  // namespace ramify

#endif
