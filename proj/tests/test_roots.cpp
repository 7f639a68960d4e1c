#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ramify/roots.hpp"
#include "support/sturm_oracle.hpp"

using namespace ramify;

using QPoly = Polynomial<Rational>;

namespace {

QPoly from_longs(std::initializer_list<long> coeffs) {
    std::vector<Rational> c;
    for (long v : coeffs) c.emplace_back(v);
    return QPoly(std::move(c));
}

QPoly random_product_of_linears(std::mt19937& rng, std::vector<Rational>& roots_out) {
    std::uniform_int_distribution<int> count(1, 5);
    std::uniform_int_distribution<long> num(-8, 8), den(1, 4);
    QPoly p({Rational(1)});
    int k = count(rng);
    for (int i = 0; i < k; ++i) {
        Rational r = make_rational(num(rng), den(rng));
        roots_out.push_back(r);
        p = p * QPoly({-r, Rational(1)});
    }
    return p;
}

}  // namespace

TEST_CASE("isolation count matches the sturm oracle") {
    std::mt19937 rng(41);
    std::uniform_int_distribution<long> coeff(-9, 9);
    int nontrivial = 0;
    while (nontrivial < 60) {
        std::vector<Rational> c(7);
        for (auto& x : c) x = Rational(coeff(rng));
        QPoly p(c);
        if (p.degree() < 1) continue;
        ++nontrivial;
        auto brackets = isolate_real_roots(p);
        CHECK(static_cast<int>(brackets.size()) == testing::sturm_count_all(p));
    }
}

TEST_CASE("isolated brackets are disjoint and each contains a sign change") {
    std::mt19937 rng(43);
    std::vector<Rational> roots;
    QPoly p = random_product_of_linears(rng, roots);
    for (int extra = 0; extra < 20; ++extra) {
        roots.clear();
        p = random_product_of_linears(rng, roots);
        auto brackets = isolate_real_roots(p);
        std::sort(roots.begin(), roots.end());
        roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
        REQUIRE(brackets.size() == roots.size());
        for (size_t i = 0; i < brackets.size(); ++i) {
            CHECK(brackets[i].lo <= roots[i]);
            CHECK(roots[i] <= brackets[i].hi);
            if (i > 0) CHECK(brackets[i - 1].hi < brackets[i].lo);
        }
    }
}

TEST_CASE("known small cases") {
    // -7 + 4z: single rational root 7/4
    auto b1 = isolate_real_roots(from_longs({-7, 4}));
    REQUIRE(b1.size() == 1);
    CHECK(b1[0].is_exact());
    CHECK(b1[0].lo == make_rational(7, 4));

    // z^2 + 1: no real roots
    CHECK(isolate_real_roots(from_longs({1, 0, 1})).empty());

    // 693 - 2310z + 2772z^2 - 1416z^3 + 256z^4: real root count against the
    // oracle, including the count in (1, oo)
    QPoly q = from_longs({693, -2310, 2772, -1416, 256});
    auto bq = isolate_real_roots(q);
    CHECK(static_cast<int>(bq.size()) == testing::sturm_count_all(q));
    int beyond_one = 0;
    for (const auto& b : bq)
        if (b.lo >= 1) ++beyond_one;
    CHECK(beyond_one == testing::sturm_count(q, Rational(1), Rational(1000)));
}

TEST_CASE("multiplicities from repeated factors") {
    QPoly zm2 = from_longs({-2, 1});
    auto b = isolate_real_roots(zm2 * zm2 * zm2);
    REQUIRE(b.size() == 1);
    CHECK(b[0].multiplicity == 3);
    CHECK(b[0].lo == Rational(2));

    QPoly zm1 = from_longs({-1, 1});
    auto b2 = isolate_real_roots(zm2 * zm2 * zm1);
    REQUIRE(b2.size() == 2);
    CHECK(b2[0].multiplicity == 1);
    CHECK(b2[1].multiplicity == 2);
}

TEST_CASE("refined roots satisfy the width contract") {
    // -3 + 2z refines to exactly 3/2
    auto b = isolate_real_roots(from_longs({-3, 2}));
    REQUIRE(b.size() == 1);
    BigFloat r = refine_root_real(b[0], 128);
    CHECK(r == BigFloat(make_rational(3, 2), 128));

    // z^2 - 2: both refinements square to 2 within tolerance
    auto b2 = isolate_real_roots(from_longs({-2, 0, 1}));
    REQUIRE(b2.size() == 2);
    for (long prec : {128L, 256L}) {
        for (const auto& br : b2) {
            BigFloat x = refine_root_real(br, prec);
            CHECK((x * x - BigFloat(2L, prec)).abs() < BigFloat::pow2(-prec + 6, prec));
        }
    }
}

TEST_CASE("complex roots recover a known multiset") {
    long prec = 256;
    // z^2 + 1 -> +-i
    auto r = complex_roots(from_longs({1, 0, 1}), prec);
    REQUIRE(r.size() == 2);
    CHECK((r[0].first - BigComplex(GaussianRational(Rational(0), Rational(-1)), prec)).abs() <
          BigFloat::pow2(-200, prec));
    CHECK((r[1].first - BigComplex(GaussianRational::i(), prec)).abs() < BigFloat::pow2(-200, prec));

    // product of distinct rational roots
    std::mt19937 rng(47);
    for (int t = 0; t < 10; ++t) {
        std::vector<Rational> roots;
        QPoly p = random_product_of_linears(rng, roots);
        std::sort(roots.begin(), roots.end());
        roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
        // rebuild with distinct roots only so every multiplicity is one
        QPoly q({Rational(1)});
        for (const auto& x : roots) q = q * QPoly({-x, Rational(1)});
        auto found = complex_roots(q, prec);
        REQUIRE(found.size() == roots.size());
        for (size_t i = 0; i < roots.size(); ++i) {
            CHECK(found[i].second == 1);
            CHECK((found[i].first - BigComplex(GaussianRational(roots[i]), prec)).abs() <
                  BigFloat::pow2(-prec / 2, prec));
        }
    }
}

TEST_CASE("complex roots cluster multiplicities") {
    long prec = 256;
    // (z - 2)^3 (z + 1)
    QPoly p = from_longs({-2, 1});
    QPoly q = p * p * p * from_longs({1, 1});
    auto r = complex_roots(q, prec);
    REQUIRE(r.size() == 2);
    CHECK(r[0].second == 1);
    CHECK((r[0].first - BigComplex(-1L, prec)).abs() < BigFloat::pow2(-prec / 4, prec));
    CHECK(r[1].second == 3);
    CHECK((r[1].first - BigComplex(2L, prec)).abs() < BigFloat::pow2(-prec / 4, prec));
}

TEST_CASE("complex roots satisfy the residual contract") {
    std::mt19937 rng(53);
    std::uniform_int_distribution<long> coeff(-9, 9);
    long prec = 256;
    int done = 0;
    while (done < 8) {
        std::vector<Rational> c(8);
        for (auto& x : c) x = Rational(coeff(rng));
        QPoly p(c);
        if (p.degree() < 2) continue;
        ++done;
        BigFloat norm(prec);
        for (const auto& x : p.coeffs()) {
            BigFloat a = BigFloat(x, prec).abs();
            if (a > norm) norm = a;
        }
        long total = 0;
        for (const auto& [root, mult] : complex_roots(p, prec)) {
            total += mult;
            if (mult == 1)
                CHECK(p.eval(BigComplex(root)).abs() < BigFloat::pow2(-prec / 2, prec) * norm);
        }
        CHECK(total == p.degree());
    }
}
