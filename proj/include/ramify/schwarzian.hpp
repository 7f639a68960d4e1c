#ifndef RAMIFY_SCHWARZIAN_HPP
#define RAMIFY_SCHWARZIAN_HPP

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ramify/families.hpp"
#include "ramify/roots.hpp"

namespace ramify {

/// Reduced Schwarzian derivative S = num / base^2 of a rational map. The
/// monic polynomial base has a simple root at every finite critical point
/// of the source map, so den = base^2 carries exactly the double poles of S.
template <typename K>
struct SchwarzianRational {
    Polynomial<K> num;
    Polynomial<K> den;
    Polynomial<K> base;

    bool is_zero() const { return num.is_zero(); }
};

namespace detail {

/// Unreduced numerator/denominator of S = N' - N^2/2 with
/// N = W'/W - 2 Q'/Q and W the Wronskian P'Q - PQ': writing N = A/B with
/// A = W'Q - 2Q'W and B = WQ gives S = (2(A'B - AB') - A^2) / (2 B^2).
template <typename K>
std::pair<Polynomial<K>, Polynomial<K>> schwarzian_unreduced(const RationalMap<K>& f) {
    Polynomial<K> W = f.wronskian();
    if (W.is_zero()) throw std::domain_error("constant map has no Schwarzian");
    Polynomial<K> qw = f.den.derivative() * W;
    Polynomial<K> A = W.derivative() * f.den - (qw + qw);
    Polynomial<K> B = W * f.den;
    Polynomial<K> t = A.derivative() * B - A * B.derivative();
    Polynomial<K> num = t + t - A * A;
    Polynomial<K> den = B * B + B * B;
    return {std::move(num), std::move(den)};
}

}  // namespace detail

/// Exact reduced Schwarzian derivative of an exact rational map.
template <typename K>
SchwarzianRational<K> schwarzian(const RationalMap<K>& f) {
    static_assert(scalar_traits<K>::exact, "use schwarzian_sampled for floating maps");
    if (f.is_constant()) throw std::domain_error("constant map has no Schwarzian");
    auto [num, den] = detail::schwarzian_unreduced(f);
    K one = scalar_traits<K>::one(f.num.lead());
    if (num.is_zero())
        return {Polynomial<K>(), Polynomial<K>::constant(one), Polynomial<K>::constant(one)};
    Polynomial<K> g = poly_gcd(num, den);
    if (g.degree() > 0) {
        num = num.divmod(g).first;
        den = den.divmod(g).first;
    }
    num = num.scaled_by_inverse(den.lead());
    den = den.monic();
    Polynomial<K> base = den.degree() > 0 ? squarefree_part(den) : Polynomial<K>::constant(one);
    return {std::move(num), std::move(den), std::move(base)};
}

/// Reduced Schwarzian of a map whose finite critical points are known
/// (exactly or numerically): the reduced numerator sigma = S * E^2 is a
/// polynomial of degree at most 2 deg E - 2, recovered by sampling S away
/// from the critical points and interpolating. Works for floating
/// coefficient fields where polynomial gcd is not available.
template <typename K>
SchwarzianRational<K> schwarzian_sampled(const RationalMap<K>& f,
                                         const std::vector<K>& critical_points) {
    if (f.is_constant()) throw std::domain_error("constant map has no Schwarzian");
    K like = f.num.lead();
    K one = scalar_traits<K>::one(like);
    Polynomial<K> base = Polynomial<K>::constant(one);
    for (const K& p : critical_points) {
        K neg = scalar_traits<K>::zero(like) - p;
        base = base * Polynomial<K>({neg, one});
    }
    auto [num0, den0] = detail::schwarzian_unreduced(f);
    if (num0.is_zero())
        return {Polynomial<K>(), Polynomial<K>::constant(one), Polynomial<K>::constant(one)};
    long target = base.degree() > 0 ? 2 * base.degree() - 2 : 0;
    std::vector<std::pair<K, K>> samples;
    long x = 2;
    while (static_cast<long>(samples.size()) < target + 1) {
        K xk = scalar_traits<K>::from_long(x, like);
        ++x;
        bool near = false;
        for (const K& p : critical_points) {
            auto d = scalar_traits<K>::to_cd(xk - p);
            if (std::abs(d) < 0.5) near = true;
        }
        if (near) continue;
        K d0 = den0.eval(xk);
        if (scalar_traits<K>::is_zero(d0)) continue;
        K e = base.eval(xk);
        samples.emplace_back(xk, num0.eval(xk) * e * e / d0);
    }
    Polynomial<K> num = interpolate(samples);
    if constexpr (!scalar_traits<K>::exact) {
        // drop leading coefficients at the noise floor of the interpolation:
        // they are exact zeros of the true numerator and would otherwise
        // dominate the high-degree terms of the derivative numerators
        const auto& c = num.coeffs();
        double top = 0.0;
        for (const auto& v : c) top = std::max(top, std::abs(scalar_traits<K>::to_cd(v)));
        double floor = top * std::ldexp(1.0, static_cast<int>(std::max(-900L, -like.prec() / 2)));
        size_t keep = c.size();
        while (keep > 1 && std::abs(scalar_traits<K>::to_cd(c[keep - 1])) < floor) --keep;
        if (keep < c.size())
            num = Polynomial<K>(std::vector<K>(c.begin(), c.begin() + static_cast<long>(keep)));
    }
    return {std::move(num), base * base, std::move(base)};
}

/// The normalized cubic data extracted from a Schwarzian: after re-centering
/// at zstar and rescaling by lambda, S matches -2(4 z^3 - 2 a z - 28 b).
struct CubicPotential {
    BigComplex a, b, zstar, lambda;
    long prec = kDefaultPrecBits;
};

namespace detail {

/// Numerators of the first three derivatives of S = sigma / E^(j): with
/// S^(i) = A_i / E^(i+2), A_0 = sigma, A_{i+1} = A_i' E - (i+2) E' A_i.
inline std::vector<Polynomial<BigComplex>> schwarzian_derivative_numerators(
    const Polynomial<BigComplex>& sigma, const Polynomial<BigComplex>& base) {
    std::vector<Polynomial<BigComplex>> a{sigma};
    Polynomial<BigComplex> ep = base.derivative();
    for (int i = 0; i < 3; ++i) {
        Polynomial<BigComplex> scaled = ep * a.back();
        Polynomial<BigComplex> acc = scaled;
        for (int j = 0; j < i + 1; ++j) acc = acc + scaled;  // (i+2) * scaled
        a.push_back(a.back().derivative() * base - acc);
    }
    return a;
}

inline BigComplex eval_derivative(const std::vector<Polynomial<BigComplex>>& nums,
                                  const Polynomial<BigComplex>& base, int order,
                                  const BigComplex& z) {
    BigComplex e = base.eval(z);
    BigComplex den = e * e;
    for (int i = 0; i < order; ++i) den = den * e;
    return nums[static_cast<size_t>(order)].eval(z) / den;
}

}  // namespace detail

/// Re-center and rescale a Schwarzian to the cubic normal form
/// {f, z} = -2(4 z^3 - 2 a z - 28 b): zstar is the root of the numerator of
/// S'' of smallest modulus (ties by largest real part, then by largest
/// imaginary part so conjugate pairs resolve deterministically), lambda solves
/// lambda^5 = -48 / S'''(zstar) (real branch when the right side is real,
/// otherwise continuation via the optional hint), a = lambda^3 S'(zstar)/4
/// and b = lambda^2 S(zstar)/56.
template <typename K>
CubicPotential normalize_cubic(const SchwarzianRational<K>& s, long prec,
                               std::optional<BigComplex> lambda_hint = std::nullopt) {
    if (s.is_zero()) throw std::domain_error("vanishing Schwarzian has no cubic form");
    const BigComplex like(prec);
    Polynomial<BigComplex> sigma = convert_poly<BigComplex>(s.num, like);
    Polynomial<BigComplex> base = convert_poly<BigComplex>(s.base, like);
    auto nums = detail::schwarzian_derivative_numerators(sigma, base);
    if (nums[2].degree() < 1) throw std::domain_error("second derivative has no root");

    auto roots = complex_roots(nums[2], prec);
    BigFloat tol = BigFloat::pow2(-prec / 4, prec);
    BigComplex zstar = roots[0].first;
    BigFloat best = zstar.abs();
    for (const auto& [r, mult] : roots) {
        BigFloat m = r.abs();
        if (m < best - tol ||
            ((m - best).abs() <= tol &&
             (r.re > zstar.re + tol || ((r.re - zstar.re).abs() <= tol && r.im > zstar.im)))) {
            zstar = r;
            best = m;
        }
    }

    BigComplex s3 = detail::eval_derivative(nums, base, 3, zstar);
    BigFloat scale(1L, prec);
    for (const auto& c : nums[3].coeffs())
        if (c.abs() > scale) scale = c.abs();
    if (s3.abs() < scale * BigFloat::pow2(-prec / 2, prec))
        throw std::domain_error("degenerate third derivative");

    BigComplex rhs = BigComplex(-48L, prec) / s3;
    BigComplex lambda(prec);
    if (rhs.im.abs() <= (rhs.abs() + BigFloat(1L, prec)) * BigFloat::pow2(-prec / 3, prec)) {
        lambda = BigComplex(rhs.re.rootn(5), BigFloat(prec));
    } else {
        auto branches = rhs.roots(5);
        auto score = [&](const BigComplex& c) {
            if (lambda_hint) return (c - *lambda_hint).abs();
            // seed branch: argument in (-pi/5, pi/5]
            BigFloat a = c.arg().abs();
            return a;
        };
        lambda = branches[0];
        BigFloat bestscore = score(lambda);
        for (const auto& c : branches) {
            BigFloat sc = score(c);
            if (sc < bestscore) {
                lambda = c;
                bestscore = sc;
            }
        }
    }

    BigComplex s1 = detail::eval_derivative(nums, base, 1, zstar);
    BigComplex s0 = detail::eval_derivative(nums, base, 0, zstar);
    CubicPotential out;
    out.prec = prec;
    out.zstar = zstar;
    out.lambda = lambda;
    out.a = lambda * lambda * lambda * s1 / BigComplex(4L, prec);
    out.b = lambda * lambda * s0 / BigComplex(56L, prec);
    return out;
}

/// One extracted pole estimate of the sequence.
struct PoleEstimate {
    long k = 0;
    CubicPotential potential;
    bool pre_asymptotic = false;
};

/// The full sequence report: per-k potentials, successive differences of a,
/// and the extrapolated limit from the last three values.
struct PoleReport {
    long n = 0, m = 0;
    std::vector<PoleEstimate> estimates;
    std::vector<BigFloat> diffs;
    std::optional<BigComplex> extrapolated;
    std::vector<std::pair<long, std::string>> failures;
};

/// Solve the family members k = k_lo..k_hi, extract the normalized cubic of
/// each, and report the pole estimates a_k with their convergence data.
/// Solver failures are recorded per k without aborting the sequence; root
/// and branch selection are threaded by continuation from the previous k.
inline PoleReport pole_sequence(long n, long m, long k_lo, long k_hi,
                                long prec = kDefaultPrecBits) {
    if (k_lo < 0 || k_hi < k_lo) throw std::invalid_argument("bad k range");
    PoleReport report;
    report.n = n;
    report.m = m;
    std::map<int, Rational> hints;
    std::optional<BigComplex> lambda_hint;
    for (long k = k_lo; k <= k_hi; ++k) {
        try {
            auto data = critical_data(FamilyIndex::tritronquee(n, m, k));
            auto out = solve(data, prec, hints);
            const HurwitzSolution* chosen = nullptr;
            for (const auto& sol : out.solutions)
                if (sol.admissible && (chosen == nullptr || sol.selected)) chosen = &sol;
            if (chosen == nullptr && !out.solutions.empty()) chosen = &out.solutions[0];
            if (chosen == nullptr) throw std::runtime_error("no solution");

            const BigComplex like(prec);
            std::vector<BigComplex> pts;
            auto triples = instantiate(data, chosen->points, like);
            for (const auto& t : triples)
                if (!t.z.infinite && t.nu >= 1) pts.push_back(t.z.value);

            SchwarzianRational<BigComplex> s;
            if (chosen->exact) {
                RationalMap<BigComplex> fnum(convert_poly<BigComplex>(chosen->map_exact.num, like),
                                             convert_poly<BigComplex>(chosen->map_exact.den, like));
                s = schwarzian_sampled(fnum, pts);
            } else {
                s = schwarzian_sampled(chosen->map_numeric, pts);
            }
            PoleEstimate est;
            est.k = k;
            est.potential = normalize_cubic(s, prec, lambda_hint);
            est.pre_asymptotic = (k < 3);
            lambda_hint = est.potential.lambda;
            report.estimates.push_back(std::move(est));

            hints.clear();
            for (const auto& [id, z] : chosen->points)
                hints[id] = Rational(z.re.to_double());
        } catch (const std::exception& e) {
            report.failures.emplace_back(k, e.what());
        }
    }
    for (size_t i = 1; i < report.estimates.size(); ++i)
        report.diffs.push_back(
            (report.estimates[i].potential.a - report.estimates[i - 1].potential.a).abs());
    if (report.estimates.size() >= 3) {
        // Richardson extrapolation of a geometric tail from the last three
        const auto& e = report.estimates;
        BigComplex a0 = e[e.size() - 3].potential.a;
        BigComplex a1 = e[e.size() - 2].potential.a;
        BigComplex a2 = e[e.size() - 1].potential.a;
        BigComplex d1 = a1 - a0, d2 = a2 - a1;
        BigComplex denom = d2 - d1;
        if (!denom.is_zero()) report.extrapolated = a2 - d2 * d2 / denom;
    }
    return report;
}

}  // namespace ramify

#endif
