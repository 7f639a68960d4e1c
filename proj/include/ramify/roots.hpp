#ifndef RAMIFY_ROOTS_HPP
#define RAMIFY_ROOTS_HPP

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ramify/polynomial.hpp"

namespace ramify {

/// An interval with rational endpoints containing exactly one distinct real
/// root of `factor` (a squarefree factor of the isolated polynomial).
/// lo == hi encodes an exact rational root.
struct RootBracket {
    Polynomial<Rational> factor;
    Rational lo, hi;
    long multiplicity = 1;

    bool is_exact() const { return lo == hi; }
};

namespace detail {

/// Coefficients of p(x + 1), in place (Pascal-triangle shift).
inline void taylor_shift_one(std::vector<Rational>& c) {
    if (c.size() < 2) return;
    for (size_t k = 0; k + 1 < c.size(); ++k)
        for (size_t i = c.size() - 1; i-- > k;) c[i] += c[i + 1];
}

inline int sign_variations(const std::vector<Rational>& c) {
    int vars = 0, prev = 0;
    for (const auto& x : c) {
        int s = sgn(x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++vars;
        prev = s;
    }
    return vars;
}

/// Descartes bound for the number of roots of f in the open interval
/// (lo, hi): sign variations of (1+x)^d f((lo + hi x)/(1+x)).
inline int descartes_count(const Polynomial<Rational>& f, const Rational& lo, const Rational& hi) {
    // g(t) = f(lo + (hi-lo) t) maps (0,1) to (lo,hi)
    long d = f.degree();
    Rational w = hi - lo;
    std::vector<Rational> g(static_cast<size_t>(d) + 1, Rational(0));
    {
        // Horner with the affine argument, tracking powers of (hi-lo)
        Polynomial<Rational> affine({lo, w});
        Polynomial<Rational> acc;
        for (size_t i = f.coeffs().size(); i-- > 0;)
            acc = acc * affine + Polynomial<Rational>::constant(f.coeffs()[i]);
        for (size_t i = 0; i < acc.coeffs().size(); ++i) g[i] = acc.coeffs()[i];
    }
    // h(x) = (1+x)^d g(x/(1+x)) = reverse then shift by one
    std::reverse(g.begin(), g.end());
    taylor_shift_one(g);
    return sign_variations(g);
}

inline void isolate_in(const Polynomial<Rational>& f, const Rational& lo, const Rational& hi,
                       long multiplicity, std::vector<RootBracket>& out) {
    int v = descartes_count(f, lo, hi);
    if (v == 0) return;
    if (v == 1) {
        out.push_back({f, lo, hi, multiplicity});
        return;
    }
    Rational mid = (lo + hi) / 2;
    if (sgn(f.eval(mid)) == 0) out.push_back({f, mid, mid, multiplicity});
    isolate_in(f, lo, mid, multiplicity, out);
    isolate_in(f, mid, hi, multiplicity, out);
}

inline Rational root_bound(const Polynomial<Rational>& f) {
    // Cauchy bound 1 + max |a_i / a_d|, rounded up to keep endpoints off roots
    Rational m(0);
    for (const auto& c : f.coeffs()) {
        Rational a = abs(c / f.lead());
        if (a > m) m = a;
    }
    return m + 2;
}

inline void bisect_once(RootBracket& b) {
    if (b.is_exact()) return;
    Rational mid = (b.lo + b.hi) / 2;
    int sm = sgn(b.factor.eval(mid));
    if (sm == 0) {
        b.lo = b.hi = mid;
        return;
    }
    if (sm == sgn(b.factor.eval(b.lo)))
        b.lo = mid;
    else
        b.hi = mid;
}

}  // namespace detail

/// Disjoint isolating intervals for all distinct real roots of p, with the
/// multiplicity each root has in p. Descartes/bisection on the squarefree
/// factors from the Yun decomposition.
inline std::vector<RootBracket> isolate_real_roots(const Polynomial<Rational>& p) {
    if (p.is_zero()) throw std::domain_error("zero polynomial");
    std::vector<RootBracket> out;
    if (p.degree() == 0) return out;
    for (auto& [factor, mult] : squarefree_decomposition(p)) {
        Rational bound = detail::root_bound(factor);
        // linear factors have their root available exactly
        if (factor.degree() == 1) {
            Rational r = -factor.coeffs()[0] / factor.coeffs()[1];
            out.push_back({factor, r, r, mult});
            continue;
        }
        Rational neg_bound = -bound;
        if (sgn(factor.eval(neg_bound)) == 0 || sgn(factor.eval(bound)) == 0)
            throw std::logic_error("root bound not strict");
        detail::isolate_in(factor, neg_bound, bound, mult, out);
    }
    // brackets from distinct squarefree factors may overlap; shrink until
    // pairwise disjoint
    bool again = true;
    while (again) {
        again = false;
        for (size_t i = 0; i < out.size(); ++i)
            for (size_t j = i + 1; j < out.size(); ++j) {
                RootBracket &a = out[i], &b = out[j];
                bool overlap = !(a.hi < b.lo || b.hi < a.lo);
                if (a.is_exact() && b.is_exact()) overlap = false;
                if (overlap) {
                    detail::bisect_once(a.hi - a.lo >= b.hi - b.lo ? a : b);
                    detail::bisect_once(a.hi - a.lo >= b.hi - b.lo ? a : b);
                    again = true;
                }
            }
    }
    std::sort(out.begin(), out.end(),
              [](const RootBracket& a, const RootBracket& b) { return a.lo < b.lo; });
    return out;
}

/// Bisect the bracket down to width 2^(-prec-2) and return the midpoint at
/// `prec` bits; the result is within 2^(-prec+2) of the root for the root
/// sizes in scope. Deterministic for fixed inputs.
inline BigFloat refine_root_real(const RootBracket& b, long prec) {
    if (b.is_exact()) return BigFloat(b.lo, prec);
    Rational lo = b.lo, hi = b.hi;
    int slo = sgn(b.factor.eval(lo)), shi = sgn(b.factor.eval(hi));
    if (slo == 0) return BigFloat(lo, prec);
    if (shi == 0) return BigFloat(hi, prec);
    if (slo == shi) throw std::domain_error("invalid bracket: no sign change");
    Rational width = hi - lo;
    Rational target = Rational(1);
    target >>= static_cast<unsigned long>(prec + 2);  // 2^-(prec+2)
    while (width > target) {
        Rational mid = (lo + hi) / 2;
        int sm = sgn(b.factor.eval(mid));
        if (sm == 0) return BigFloat(mid, prec);
        if (sm == slo)
            lo = mid;
        else
            hi = mid;
        width = hi - lo;
    }
    return BigFloat((lo + hi) / 2, prec);
}

inline BigComplex refine_root(const RootBracket& b, long prec) {
    return {refine_root_real(b, prec), BigFloat(prec)};
}

namespace detail {

inline BigComplex eval_at(const Polynomial<BigComplex>& p, const BigComplex& z) { return p.eval(z); }

}  // namespace detail

/// All complex roots with multiplicities by Aberth–Ehrlich simultaneous
/// iteration from a perturbed-circle start, followed by Newton polish and
/// cluster merging. Multiplicities are recovered from cluster sizes; the
/// residual contract is |p(root)| <= 2^(-prec/2) * max|coeff|.
template <class K>
std::vector<std::pair<BigComplex, long>> complex_roots(const Polynomial<K>& p, long prec) {
    if (p.degree() < 1) throw std::domain_error("zero polynomial");
    const BigComplex like(prec);
    Polynomial<BigComplex> q = convert_poly<BigComplex>(p, like);
    q = q.scaled_by_inverse(q.lead());  // monic

    std::vector<std::pair<BigComplex, long>> result;
    // deflate exact zero roots
    {
        std::vector<BigComplex> c = q.coeffs();
        size_t nz = 0;
        while (nz < c.size() && c[nz].is_zero()) ++nz;
        if (nz > 0) {
            result.emplace_back(BigComplex(prec), static_cast<long>(nz));
            c.erase(c.begin(), c.begin() + static_cast<long>(nz));
            q = Polynomial<BigComplex>(std::move(c));
        }
    }
    long d = q.degree();
    if (d > 0) {
        BigFloat bound(1L, prec);
        for (const auto& c : q.coeffs()) {
            BigFloat a = c.abs();
            if (a > bound) bound = a;
        }
        bound = bound + BigFloat(1L, prec);

        BigFloat pi(prec);
        mpfr_const_pi(pi.raw(), MPFR_RNDN);
        std::vector<BigComplex> z;
        for (long j = 0; j < d; ++j) {
            // perturbed circle: irrational-ish angle offset breaks symmetry
            BigFloat ang = (BigFloat(2L * j, prec) * pi) / BigFloat(d, prec) +
                           BigFloat(0.4, prec) / BigFloat(d, prec);
            BigFloat rad = bound * (BigFloat(0.5, prec) +
                                    BigFloat(0.4, prec) * BigFloat(j + 1, prec) / BigFloat(d, prec));
            z.push_back(BigComplex::from_polar(rad, ang));
        }

        Polynomial<BigComplex> dq = q.derivative();
        BigFloat stop = BigFloat::pow2(-prec + 8, prec);
        long max_iter = 400 + 10 * d;
        for (long iter = 0; iter < max_iter; ++iter) {
            BigFloat worst(prec);
            for (long j = 0; j < d; ++j) {
                BigComplex pv = q.eval(z[static_cast<size_t>(j)]);
                BigComplex dv = dq.eval(z[static_cast<size_t>(j)]);
                if (dv.is_zero()) {
                    z[static_cast<size_t>(j)] += BigComplex(BigFloat::pow2(-prec / 3, prec),
                                                            BigFloat::pow2(-prec / 3, prec));
                    worst = BigFloat(1L, prec);
                    continue;
                }
                BigComplex w = pv / dv;
                BigComplex s(prec);
                for (long k = 0; k < d; ++k) {
                    if (k == j) continue;
                    BigComplex diff = z[static_cast<size_t>(j)] - z[static_cast<size_t>(k)];
                    if (diff.is_zero()) continue;
                    s += diff.inverse();
                }
                BigComplex denom = BigComplex(1L, prec) - w * s;
                BigComplex corr = denom.is_zero() ? w : w / denom;
                z[static_cast<size_t>(j)] -= corr;
                BigFloat rel = corr.abs() / (BigFloat(1L, prec) + z[static_cast<size_t>(j)].abs());
                if (rel > worst) worst = rel;
            }
            if (worst < stop) break;
        }
        // Newton polish
        for (auto& root : z)
            for (int it = 0; it < 4; ++it) {
                BigComplex dv = dq.eval(root);
                if (dv.is_zero()) break;
                root -= q.eval(root) / dv;
            }

        // cluster within a relative radius; multiple roots converge to a
        // cluster of that size around the true root
        BigFloat scale(1L, prec);
        for (const auto& r : z) {
            BigFloat a = r.abs();
            if (a > scale) scale = a;
        }
        BigFloat cluster_radius = scale * BigFloat::pow2(-prec / 8, prec);
        std::vector<bool> used(static_cast<size_t>(d), false);
        for (size_t i = 0; i < z.size(); ++i) {
            if (used[i]) continue;
            std::vector<size_t> members{i};
            for (size_t j = i + 1; j < z.size(); ++j) {
                if (used[j]) continue;
                if ((z[j] - z[i]).abs() < cluster_radius) {
                    members.push_back(j);
                    used[j] = true;
                }
            }
            BigComplex centroid(prec);
            for (size_t m : members) centroid += z[m];
            centroid = centroid / BigComplex(static_cast<long>(members.size()), prec);
            result.emplace_back(centroid, static_cast<long>(members.size()));
        }
    }
    std::sort(result.begin(), result.end(),
              [](const auto& a, const auto& b) {
                  if (a.first.re != b.first.re) return a.first.re < b.first.re;
                  return a.first.im < b.first.im;
              });
    return result;
}

}  // namespace ramify

#endif
