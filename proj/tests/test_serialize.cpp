#include <catch2/catch_amalgamated.hpp>

#include "ramify/serialize.hpp"

using namespace ramify;

TEST_CASE("rationals round trip through num/den strings") {
    Rational q = make_rational(-22, 8);  // canonicalizes to -11/4
    std::string s = rational_string(q);
    CHECK(s == "-11/4");
    CHECK(rational_from_string(s) == q);
    CHECK(rational_from_string("5") == Rational(5));
}

TEST_CASE("gaussian scalars round trip through re/im objects") {
    Gaussian g{make_rational(3, 7), make_rational(-1, 2)};
    json j = gaussian_json(g);
    CHECK(j.at("re") == "3/7");
    CHECK(j.at("im") == "-1/2");
    CHECK(gaussian_from_json(j) == g);
}

TEST_CASE("big floats carry a decimal value and their precision") {
    BigFloat x(make_rational(1, 3), 192);
    json j = bigfloat_json(x);
    CHECK(j.at("prec_bits") == 192);
    BigFloat back = bigfloat_from_json(j);
    CHECK((back - x).abs() < BigFloat::pow2(-150, 192));

    BigComplex z(1.5, -0.25, 256);
    json jc = bigcomplex_json(z);
    CHECK(jc.at("prec_bits") == 256);
    BigComplex zb = bigcomplex_from_json(jc);
    CHECK((zb - z).abs() < BigFloat::pow2(-200, 256));
}

TEST_CASE("polynomials serialize lowest power first and round trip") {
    Polynomial<Gaussian> p({Gaussian(1), Gaussian::i(), Gaussian(make_rational(-2, 3))});
    json j = polynomial_json(p);
    REQUIRE(j.size() == 3);
    CHECK(j[0].at("re") == "1/1");
    CHECK(j[1].at("im") == "1/1");
    CHECK(gaussian_polynomial_from_json(j).coeffs() == p.coeffs());
}

TEST_CASE("solved family members serialize with resultant and tagged points") {
    auto idx = FamilyIndex::tritronquee(0, 0, 2);
    auto out = solve(critical_data(idx), 192);
    json j = hurwitz_outcome_json(out, family_tag(idx));
    CHECK(j.at("family") == "tritronquee(0,0,2)");
    // published degree-4 resultant, integer strings, lowest power first
    REQUIRE(j.at("resultant").size() == 5);
    CHECK(j.at("resultant")[0] == "693");
    CHECK(j.at("resultant")[4] == "256");
    REQUIRE(!j.at("solutions").empty());
    bool any_selected = false;
    for (const auto& s : j.at("solutions")) {
        CHECK(s.contains("kernel_dim"));
        CHECK(s.at("points").contains("0"));
        if (s.at("selected").get<bool>()) {
            any_selected = true;
            double u = std::stod(s.at("points").at("0").at("re").get<std::string>());
            CHECK(u > 1.0);
            CHECK(s.at("points").at("0").at("prec_bits") == 192);
        }
    }
    CHECK(any_selected);
}

TEST_CASE("exact solutions embed their maps with exact coefficients") {
    auto idx = FamilyIndex::harmonic(0, 1);
    auto out = solve(critical_data(idx), 128);
    REQUIRE(out.solutions.size() == 1);
    json j = hurwitz_solution_json(out.solutions[0]);
    CHECK(j.at("exact") == true);
    CHECK(j.at("map").at("num").size() == out.solutions[0].map_exact.num.coeffs().size());
    // coefficients are rational strings, reconstructible
    auto num = gaussian_polynomial_from_json(j.at("map").at("num"));
    CHECK(num.coeffs() == out.solutions[0].map_exact.num.coeffs());
}

TEST_CASE("pole reports expose the normalized potentials and diffs") {
    auto rep = pole_sequence(0, 0, 0, 1, 192);
    json j = pole_report_json(rep);
    CHECK(j.at("n") == 0);
    CHECK(j.at("m") == 0);
    REQUIRE(j.at("estimates").size() == 2);
    const auto& e0 = j.at("estimates")[0];
    CHECK(e0.at("k") == 0);
    CHECK(e0.at("prec_bits") == 192);
    CHECK(e0.contains("a"));
    CHECK(e0.at("a").contains("re"));
    CHECK(e0.contains("zstar"));
    CHECK(e0.contains("lambda"));
    CHECK(e0.at("pre_asymptotic") == true);
    REQUIRE(j.at("diffs").size() == 1);
    CHECK(j.at("failures").empty());
    // serialization is deterministic byte for byte
    CHECK(pole_report_json(rep).dump(2) == j.dump(2));
}

TEST_CASE("non integral resultants are rejected") {
    Polynomial<Rational> p({make_rational(1, 2), Rational(1)});
    CHECK_THROWS_AS(resultant_json(p), std::invalid_argument);
}
