#include <catch2/catch_amalgamated.hpp>

#include "ramify/families.hpp"
#include "ramify/hurwitz.hpp"

using namespace ramify;

using G = Gaussian;
using QPoly = Polynomial<Rational>;

namespace {

QPoly qpoly(std::initializer_list<long> coeffs) {
    std::vector<Rational> c;
    for (long v : coeffs) c.emplace_back(v);
    return QPoly(std::move(c));
}

Polynomial<G> gp(std::initializer_list<long> coeffs) {
    std::vector<G> c;
    for (long v : coeffs) c.emplace_back(v);
    return Polynomial<G>(std::move(c));
}

const QPoly kP0 = qpoly({-3, 2});
const QPoly kP1 = qpoly({-7, 4});
const QPoly kP2 = qpoly({693, -2310, 2772, -1416, 256});
const QPoly kP3 = qpoly({1859, -6006, 6864, -3328, 576});

}  // namespace

TEST_CASE("admissibility validation") {
    // two distinct values only
    HurwitzData two;
    two.triples = {
        {HurwitzPoint::fixed(ExtendedPoint<G>::at(G(0))), 1, ExtendedPoint<G>::at(G(0))},
        {HurwitzPoint::fixed(ExtendedPoint<G>::at(G(1))), 1, ExtendedPoint<G>::at(G(1))},
    };
    CHECK(validate(two).size() == 1);

    // lone odd multiplicity
    HurwitzData odd;
    odd.triples = {
        {HurwitzPoint::fixed(ExtendedPoint<G>::at(G(0))), 3, ExtendedPoint<G>::at(G(0))},
        {HurwitzPoint::fixed(ExtendedPoint<G>::at(G(1))), 0, ExtendedPoint<G>::at(G(1))},
        {HurwitzPoint::fixed(ExtendedPoint<G>::at(G(2))), 0, ExtendedPoint<G>::at(G(2))},
    };
    bool found_parity = false;
    for (const auto& v : validate(odd)) found_parity = found_parity || v.find("odd") != std::string::npos;
    CHECK(found_parity);

    for (long n = 0; n <= 10; ++n)
        for (long k = 0; k <= 10; ++k)
            CHECK(validate(critical_data(FamilyIndex::harmonic(n, k))).empty());
    for (long k = 0; k <= 4; ++k)
        CHECK(validate(critical_data(FamilyIndex::tritronquee(0, 0, k))).empty());
}

TEST_CASE("minor gcd contains the defining linear factors") {
    for (long k : {0L, 1L}) {
        auto data = critical_data(FamilyIndex::tritronquee(0, 0, k));
        auto minors = minor_polynomials(data);
        REQUIRE(!minors.empty());
        QPoly g;
        for (const auto& m : minors) {
            if (m.is_zero()) continue;
            g = g.is_zero() ? m : poly_gcd(g, m);
        }
        REQUIRE(!g.is_zero());
        const QPoly& pk = (k == 0) ? kP0 : kP1;
        CHECK(g.divmod(pk).second.is_zero());
    }
}

TEST_CASE("cubic member: exact root and map") {
    auto out = solve(critical_data(FamilyIndex::tritronquee(0, 0, 0)));
    CHECK(out.resultant == kP0);
    REQUIRE(out.solutions.size() == 1);
    const auto& sol = out.solutions[0];
    CHECK(sol.exact);
    CHECK(sol.admissible);
    CHECK(sol.selected);
    CHECK(sol.kernel_dim == 1);
    CHECK(sol.exact_points.at(0) == make_rational(3, 2));
    CHECK(sol.exact_points.at(1) == make_rational(-1, 2));
    RationalMap<G> cubic(gp({0, 0, 3, -2}), gp({1}));
    CHECK(equivalent(sol.map_exact, cubic));
}

TEST_CASE("first member: resultant -7+4z with exact root 7/4") {
    auto out = solve(critical_data(FamilyIndex::tritronquee(0, 0, 1)));
    CHECK(out.resultant == kP1);
    REQUIRE(out.solutions.size() == 1);
    const auto& sol = out.solutions[0];
    CHECK(sol.exact);
    CHECK(sol.admissible);
    CHECK(sol.exact_points.at(0) == make_rational(7, 4));
    // the realized map satisfies its own critical data, including exact
    // orders
    auto triples = instantiate(critical_data(FamilyIndex::tritronquee(0, 0, 1)),
                               {{0, G(make_rational(7, 4))}}, G());
    CHECK(verify_critical_data(sol.map_exact, triples).ok);
}

TEST_CASE("second member: quartic resultant and one admissible root") {
    long prec = 256;
    auto out = solve(critical_data(FamilyIndex::tritronquee(0, 0, 2)), prec);
    CHECK(out.resultant == kP2);
    long admissible = 0;
    for (const auto& s : out.solutions)
        if (s.admissible) ++admissible;
    CHECK(admissible == 1);
    for (const auto& s : out.solutions) {
        if (!s.admissible) continue;
        CHECK(s.kernel_dim == 1);
        // z_{-1} real in (1, oo), z_1 = 1 - z_{-1} < 0
        CHECK(s.points.at(0).re > BigFloat(1L, prec));
        CHECK(s.points.at(1).re < BigFloat(prec));
        // the numeric map satisfies the instantiated critical data
        std::map<int, BigComplex> vals{{0, s.points.at(0)}};
        auto triples = instantiate(critical_data(FamilyIndex::tritronquee(0, 0, 2)), vals,
                                   BigComplex(prec));
        auto rep = verify_critical_data(s.map_numeric, triples, BigFloat::pow2(-prec / 4, prec));
        CHECK(rep.ok);
    }
}

TEST_CASE("third member: resultant matches the degree-4 list") {
    auto out = solve(critical_data(FamilyIndex::tritronquee(0, 0, 3)));
    CHECK(out.resultant == kP3);
    long admissible = 0;
    for (const auto& s : out.solutions)
        if (s.admissible) ++admissible;
    CHECK(admissible == 1);
}

TEST_CASE("fixed-point family solves to the printed degree-8 map") {
    auto out = solve(critical_data(FamilyIndex::harmonic(1, 1)));
    REQUIRE(out.solutions.size() == 1);
    const auto& sol = out.solutions[0];
    REQUIRE(sol.exact);
    CHECK(sol.kernel_dim == 1);
    Polynomial<G> num = gp({3, 16, -36, -48, 50, 48, -36, -16, 3});
    Polynomial<G> den = gp({3, -16, -36, 48, 50, -48, -36, 16, 3});
    CHECK(equivalent(sol.map_exact, RationalMap<G>(num, den)));
}

TEST_CASE("continuation hint orders solutions") {
    auto data = critical_data(FamilyIndex::tritronquee(0, 0, 2));
    auto plain = solve(data);
    REQUIRE(!plain.solutions.empty());
    // hint at the admissible root: it must come first and be selected
    Rational near;
    for (const auto& s : plain.solutions)
        if (s.admissible) near = Rational(s.points.at(0).re.to_double());
    auto hinted = solve(data, kDefaultPrecBits, {{0, near}});
    REQUIRE(!hinted.solutions.empty());
    CHECK(hinted.solutions[0].admissible);
    CHECK(hinted.solutions[0].selected);
}
