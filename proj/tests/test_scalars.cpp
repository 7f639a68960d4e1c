#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ramify/bigfloat.hpp"
#include "ramify/rational.hpp"

using namespace ramify;

namespace {

GaussianRational random_gaussian(std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-50, 50), den(1, 20);
    return {make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng))};
}

}  // namespace

TEST_CASE("gaussian rational field axioms") {
    std::mt19937 rng(20240811);
    for (int t = 0; t < 200; ++t) {
        GaussianRational x = random_gaussian(rng), y = random_gaussian(rng);
        CHECK((x + y) - y == x);
        CHECK(x * y == y * x);
        if (!x.is_zero()) CHECK(x * x.inverse() == GaussianRational(1));
        if (!y.is_zero()) CHECK((x / y) * y == x);
    }
}

TEST_CASE("gaussian rational basics") {
    GaussianRational i = GaussianRational::i();
    CHECK(i * i == GaussianRational(-1));
    CHECK(i.conj() == -i);
    CHECK(i.norm() == 1);
    CHECK(GaussianRational(Rational(3, 2)).is_real());
    CHECK((i / i) == GaussianRational(1));
}

TEST_CASE("rational parts stay canonical") {
    Rational q = make_rational(6, 4);
    CHECK(q.get_num() == 3);
    CHECK(q.get_den() == 2);
    CHECK(to_fraction_string(q) == "3/2");
    CHECK(rational_from_string("3/2") == q);
    CHECK(rational_from_string("-7") == Rational(-7));
}

TEST_CASE("bigfloat carries min precision through arithmetic") {
    BigFloat a(Rational(1, 3), 256);
    BigFloat b(Rational(1, 7), 128);
    CHECK((a + b).prec() == 128);
    CHECK((a * b).prec() == 128);
    CHECK((a / b).prec() == 128);
    CHECK(a.prec() == 256);
    CHECK_THROWS(BigFloat(32));  // below the 64-bit floor
}

TEST_CASE("bigfloat values") {
    BigFloat x(Rational(3, 2), 128);
    CHECK(x.to_double() == 1.5);
    CHECK((x - x).is_zero());
    CHECK(x > BigFloat(1L, 128));
    BigFloat tiny = BigFloat::pow2(-100, 128);
    CHECK(tiny.sign() > 0);
    CHECK((tiny.ldexp(100) - BigFloat(1L, 128)).is_zero());
    // string round trip
    BigFloat y = BigFloat::from_string(x.str(), 128);
    CHECK((x - y).abs() < BigFloat::pow2(-120, 128));
}

TEST_CASE("bigcomplex arithmetic and roots") {
    long prec = 192;
    BigComplex i(GaussianRational::i(), prec);
    CHECK(((i * i) + BigComplex(1L, prec)).abs() < BigFloat::pow2(-180, prec));
    BigComplex z(3.0, 4.0, prec);
    CHECK((z.abs() - BigFloat(5L, prec)).abs() < BigFloat::pow2(-180, prec));
    CHECK((z * z.inverse() - BigComplex(1L, prec)).abs() < BigFloat::pow2(-180, prec));

    // fifth roots of 32 include the real root 2
    auto r = BigComplex(32L, prec).roots(5);
    REQUIRE(r.size() == 5);
    bool found_two = false;
    for (auto& root : r) {
        BigComplex p = root;
        for (int k = 0; k < 4; ++k) p = p * root;
        CHECK((p - BigComplex(32L, prec)).abs() < BigFloat::pow2(-150, prec));
        if ((root - BigComplex(2L, prec)).abs() < BigFloat::pow2(-150, prec)) found_two = true;
    }
    CHECK(found_two);
}
