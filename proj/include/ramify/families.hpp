#ifndef RAMIFY_FAMILIES_HPP
#define RAMIFY_FAMILIES_HPP

#include <stdexcept>
#include <vector>

#include "ramify/hurwitz.hpp"

namespace ramify {

/// Index into one of the three parametric families of critical data.
struct FamilyIndex {
    enum class Kind { Harmonic, Airy, Tritronquee };
    Kind kind = Kind::Harmonic;
    long n = 0, m = 0, k = 0;

    static FamilyIndex harmonic(long n, long k) { return {Kind::Harmonic, n, 0, k}; }
    static FamilyIndex airy(long n) { return {Kind::Airy, n, 0, 0}; }
    static FamilyIndex tritronquee(long n, long m, long k) { return {Kind::Tritronquee, n, m, k}; }

    long degree() const {
        switch (kind) {
            case Kind::Harmonic: return 2 * n + 4 * k + 2;
            case Kind::Airy: return 3 * n + 1;
            case Kind::Tritronquee: return 2 * n + 2 * m + 5 * k + 3 - (deep_tritronquee() ? 2 : 0);
        }
        throw std::logic_error("unreachable");
    }

    /// Deep approximant members (n = m = 0, k >= 2) follow the published
    /// resultant list P_2..P_5: their sixth critical point of value infinity
    /// sits at 1/2 instead of infinity and the fixed points 0, 1 carry
    /// multiplicity lowered by two, so the degree drops by two as well.
    bool deep_tritronquee() const {
        return kind == Kind::Tritronquee && n == 0 && m == 0 && k >= 2;
    }
};

/// The prescribed critical data of the indexed family, including unknown
/// locations, ties and admissibility filters where applicable.
inline HurwitzData critical_data(const FamilyIndex& idx) {
    if (idx.n < 0 || idx.m < 0 || idx.k < 0) throw std::invalid_argument("negative index");
    using EP = ExtendedPoint<Gaussian>;
    HurwitzData d;
    switch (idx.kind) {
        case FamilyIndex::Kind::Harmonic: {
            long n = idx.n, k = idx.k;
            d.triples = {
                {HurwitzPoint::fixed(EP::at(Gaussian(1))), 2 * k, EP::at(Gaussian(1))},
                {HurwitzPoint::fixed(EP::at(Gaussian::i())), 2 * n + 2 * k + 1, EP::at(Gaussian::i())},
                {HurwitzPoint::fixed(EP::at(Gaussian(-1))), 2 * k, EP::at(Gaussian(1))},
                {HurwitzPoint::fixed(EP::at(-Gaussian::i())), 2 * n + 2 * k + 1, EP::at(-Gaussian::i())},
            };
            break;
        }
        case FamilyIndex::Kind::Airy: {
            long n = idx.n;
            d.triples = {
                {HurwitzPoint::fixed(EP::at(Gaussian(0))), 2 * n, EP::at(Gaussian(0))},
                {HurwitzPoint::fixed(EP::at(Gaussian(1))), 2 * n, EP::at(Gaussian(1))},
                {HurwitzPoint::fixed(EP::inf(Gaussian())), 2 * n, EP::inf(Gaussian())},
            };
            break;
        }
        case FamilyIndex::Kind::Tritronquee: {
            long n = idx.n, m = idx.m, k = idx.k;
            // unknown 0 = z_{-1} (value 0 side), unknown 1 = z_{1}
            if (idx.deep_tritronquee()) {
                // deep members matching the published resultants P_2..P_5:
                // the value-infinity critical point sits at 1/2 and the
                // fixed points carry multiplicity 2k - 1
                d.triples = {
                    {HurwitzPoint::fixed(EP::at(Gaussian(make_rational(1, 2)))), 2 * k + 2,
                     EP::inf(Gaussian())},
                    {HurwitzPoint::free(1), 2 * k, EP::at(Gaussian(1))},
                    {HurwitzPoint::fixed(EP::at(Gaussian(0))), 2 * k - 1, EP::at(Gaussian(0))},
                    {HurwitzPoint::free(0), 2 * k, EP::at(Gaussian(0))},
                    {HurwitzPoint::fixed(EP::at(Gaussian(1))), 2 * k - 1, EP::at(Gaussian(1))},
                };
            } else {
                d.triples = {
                    {HurwitzPoint::fixed(EP::inf(Gaussian())), 2 * (m + n + k + 1),
                     EP::inf(Gaussian())},
                    {HurwitzPoint::free(1), 2 * k, EP::at(Gaussian(1))},
                    {HurwitzPoint::fixed(EP::at(Gaussian(0))), 2 * (n + k) + 1, EP::at(Gaussian(0))},
                    {HurwitzPoint::free(0), 2 * k, EP::at(Gaussian(0))},
                    {HurwitzPoint::fixed(EP::at(Gaussian(1))), 2 * (m + k) + 1, EP::at(Gaussian(1))},
                };
            }
            if (n == m) d.ties.push_back({/*dst=*/1, /*src=*/0, Rational(-1), Rational(1)});
            d.filters.push_back({/*id=*/0, /*greater=*/true, Rational(1)});
            d.filters.push_back({/*id=*/1, /*greater=*/false, Rational(0)});
            break;
        }
    }
    return d;
}

/// One step of the harmonic family, carried as the pair (P, Q) with the
/// exact slope parameter gamma.
struct RecursionState {
    long n = 0, k = 0;
    Polynomial<Gaussian> P, Q;
    Rational gamma;
};

/// gamma_{n,k} = (2n+2) * prod_{l=1..k} (4l+2n+2)/(4l+2n); at n = 0 this is
/// the familiar product (2) * prod (4l+2)/(4l).
inline Rational harmonic_gamma(long n, long k) {
    Rational g(2 * n + 2);
    for (long l = 1; l <= k; ++l) g *= make_rational(4 * l + 2 * n + 2, 4 * l + 2 * n);
    return g;
}

namespace detail {

/// Double antiderivative of R with prescribed value and slope at 0.
inline Polynomial<Gaussian> double_antiderivative(const Polynomial<Gaussian>& r, const Gaussian& at0,
                                                  const Gaussian& slope0) {
    std::vector<Gaussian> c(r.coeffs().size() + 2, Gaussian(0));
    c[0] = at0;
    c[1] = slope0;
    for (size_t j = 0; j < r.coeffs().size(); ++j)
        c[j + 2] = r.coeffs()[j] / Gaussian(make_rational(static_cast<long>((j + 1) * (j + 2))));
    return Polynomial<Gaussian>(std::move(c));
}

}  // namespace detail

/// States k = 0..k_max of the harmonic family at fixed n: the base case is
/// the direct kernel of the k = 0 data (scaled so P(0) = 1); each further
/// step integrates P'' = V_k * P_{k-1} (same for Q) twice, with the
/// integration constants pinned by the Cauchy data at 0.
inline std::vector<RecursionState> harmonic_recursion(long n, long k_max) {
    if (n < 0 || k_max < 0) throw std::invalid_argument("negative index");
    std::vector<RecursionState> out;
    {
        RecursionState s;
        s.n = n;
        s.k = 0;
        s.gamma = harmonic_gamma(n, 0);
        auto data = critical_data(FamilyIndex::harmonic(n, 0));
        auto triples = instantiate(data, {}, Gaussian());
        auto pairs = nullspace(assemble(triples, FamilyIndex::harmonic(n, 0).degree(), Gaussian()),
                               Gaussian());
        if (pairs.size() != 1) throw std::logic_error("harmonic base kernel not one-dimensional");
        Gaussian p0 = pairs[0].first.coeff(0);
        if (p0.is_zero()) throw std::logic_error("harmonic base has P(0) = 0");
        s.P = pairs[0].first.scaled_by_inverse(p0);
        s.Q = pairs[0].second.scaled_by_inverse(p0);
        out.push_back(std::move(s));
    }
    for (long k = 1; k <= k_max; ++k) {
        const RecursionState& prev = out.back();
        RecursionState s;
        s.n = n;
        s.k = k;
        s.gamma = harmonic_gamma(n, k);
        // V_{n,k}(z) = (4k+2n+2) ((4k+2n+1) z^2 - (2n+1))
        Gaussian a(Rational(4 * k + 2 * n + 2));
        Polynomial<Gaussian> V({a * Gaussian(Rational(-(2 * n + 1))), Gaussian(0),
                                a * Gaussian(Rational(4 * k + 2 * n + 1))});
        // Cauchy data at 0: P(0) = 1, Q(0) = (-1)^(n+1), Q'(0) = -gamma,
        // P'(0) = (-1)^n Q'(0).
        Gaussian sign = (n % 2 == 0) ? Gaussian(-1) : Gaussian(1);  // (-1)^(n+1)
        Gaussian g(s.gamma);
        s.P = detail::double_antiderivative(V * prev.P, Gaussian(1), sign * g);
        s.Q = detail::double_antiderivative(V * prev.Q, sign, -g);
        out.push_back(std::move(s));
    }
    return out;
}

/// The degree-(3n+1) map fixing 0, 1, infinity prescribed by the Airy data.
inline RationalMap<Gaussian> airy_map(long n) {
    auto data = critical_data(FamilyIndex::airy(n));
    auto triples = instantiate(data, {}, Gaussian());
    auto pairs = nullspace(assemble(triples, FamilyIndex::airy(n).degree(), Gaussian()), Gaussian());
    if (pairs.size() != 1) throw std::logic_error("airy kernel not one-dimensional");
    return {pairs[0].first, pairs[0].second};
}

/// A_n composed with the cubic -2z^3 + 3z^2.
inline RationalMap<Gaussian> compose_airy(long n) {
    Polynomial<Gaussian> cubic({Gaussian(0), Gaussian(0), Gaussian(3), Gaussian(-2)});
    RationalMap<Gaussian> base(cubic, Polynomial<Gaussian>::constant(Gaussian(1)));
    if (n == 0) return base;
    return compose(airy_map(n), base);
}

}  // namespace ramify

#endif
