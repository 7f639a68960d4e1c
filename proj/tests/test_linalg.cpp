#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ramify/linalg.hpp"

using namespace ramify;

namespace {

Integer cofactor_determinant(const std::vector<std::vector<Integer>>& a) {
    size_t n = a.size();
    if (n == 1) return a[0][0];
    Integer det = 0;
    for (size_t j = 0; j < n; ++j) {
        std::vector<std::vector<Integer>> sub;
        for (size_t i = 1; i < n; ++i) {
            std::vector<Integer> row;
            for (size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(a[i][k]);
            sub.push_back(std::move(row));
        }
        Integer term = a[0][j] * cofactor_determinant(sub);
        det += (j % 2 == 0) ? term : Integer(-term);
    }
    return det;
}

std::vector<std::vector<Integer>> random_int_matrix(std::mt19937& rng, size_t rows, size_t cols) {
    std::uniform_int_distribution<long> d(-9, 9);
    std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
    for (auto& row : a)
        for (auto& x : row) x = d(rng);
    return a;
}

}  // namespace

TEST_CASE("exact kernel spans the null space") {
    // rows (1, 2, 3) and (2, 4, 6) are dependent; kernel has dimension 2
    Matrix<Rational> m(2, 3, Rational(0));
    m.at(0, 0) = 1; m.at(0, 1) = 2; m.at(0, 2) = 3;
    m.at(1, 0) = 2; m.at(1, 1) = 4; m.at(1, 2) = 6;
    auto basis = exact_kernel(m);
    REQUIRE(basis.size() == 2);
    for (const auto& v : basis)
        for (const auto& y : m.apply(v)) CHECK(sgn(y) == 0);
}

TEST_CASE("exact kernel of a full-rank square matrix is empty") {
    Matrix<GaussianRational> m(2, 2, GaussianRational(0));
    m.at(0, 0) = GaussianRational(1);
    m.at(0, 1) = GaussianRational::i();
    m.at(1, 0) = -GaussianRational::i();
    m.at(1, 1) = GaussianRational(2);
    CHECK(exact_kernel(m).empty());
}

TEST_CASE("exact kernel vectors really solve random rank-deficient systems") {
    std::mt19937 rng(59);
    std::uniform_int_distribution<long> d(-5, 5);
    for (int t = 0; t < 25; ++t) {
        // build a 4x6 matrix whose rows are combinations of two random rows
        std::vector<std::vector<Rational>> gen(2, std::vector<Rational>(6));
        for (auto& row : gen)
            for (auto& x : row) x = Rational(d(rng));
        Matrix<Rational> m(4, 6, Rational(0));
        for (size_t i = 0; i < 4; ++i) {
            long c0 = d(rng), c1 = d(rng);
            for (size_t j = 0; j < 6; ++j) m.at(i, j) = Rational(c0) * gen[0][j] + Rational(c1) * gen[1][j];
        }
        auto basis = exact_kernel(m);
        CHECK(basis.size() >= 4);  // rank at most 2
        for (const auto& v : basis)
            for (const auto& y : m.apply(v)) CHECK(sgn(y) == 0);
    }
}

TEST_CASE("numeric kernel finds the direction of a known singular matrix") {
    long prec = 256;
    // columns c0, c1, c2 with c2 = c0 + 2 c1: kernel direction (1, 2, -1)
    Matrix<BigComplex> m(3, 3, BigComplex(prec));
    double c0[3][2] = {{1.0, 0.5}, {-2.0, 3.0}, {0.25, -1.0}};
    double c1[3][2] = {{0.0, 2.0}, {1.5, -0.5}, {3.0, 0.75}};
    for (size_t i = 0; i < 3; ++i) {
        m.at(i, 0) = BigComplex(c0[i][0], c0[i][1], prec);
        m.at(i, 1) = BigComplex(c1[i][0], c1[i][1], prec);
        m.at(i, 2) = m.at(i, 0) + BigComplex(2L, prec) * m.at(i, 1);
    }
    auto basis = numeric_kernel(m, BigFloat::pow2(-prec / 2, prec));
    REQUIRE(basis.size() == 1);
    CHECK(residual_norm(m, basis[0]) < BigFloat::pow2(-prec + 16, prec));
    // direction proportional to (1, 2, -1)
    BigComplex scale = basis[0][0];
    CHECK((basis[0][1] - BigComplex(2L, prec) * scale).abs() < BigFloat::pow2(-prec + 24, prec));
    CHECK((basis[0][2] + scale).abs() < BigFloat::pow2(-prec + 24, prec));
}

TEST_CASE("numeric kernel of a well-conditioned matrix is empty") {
    long prec = 128;
    Matrix<BigComplex> m(2, 2, BigComplex(prec));
    m.at(0, 0) = BigComplex(3L, prec);
    m.at(1, 1) = BigComplex(5L, prec);
    m.at(0, 1) = BigComplex(1L, prec);
    CHECK(numeric_kernel(m, BigFloat::pow2(-prec / 2, prec)).empty());
}

TEST_CASE("bareiss determinant matches cofactor expansion") {
    std::mt19937 rng(61);
    for (size_t n = 1; n <= 5; ++n)
        for (int t = 0; t < 10; ++t) {
            auto a = random_int_matrix(rng, n, n);
            CHECK(bareiss_determinant(a) == cofactor_determinant(a));
        }
    // known cases
    std::vector<std::vector<Integer>> id = {{1, 0}, {0, 1}};
    CHECK(bareiss_determinant(id) == 1);
    std::vector<std::vector<Integer>> sing = {{1, 2}, {2, 4}};
    CHECK(bareiss_determinant(sing) == 0);
}

TEST_CASE("maximal minors match row-deleted determinants") {
    std::mt19937 rng(67);
    for (size_t n = 2; n <= 6; ++n)
        for (int t = 0; t < 8; ++t) {
            auto a = random_int_matrix(rng, n + 1, n);
            auto minors = maximal_minors(a);
            REQUIRE(minors.size() == n + 1);
            for (size_t drop = 0; drop <= n; ++drop) {
                std::vector<std::vector<Integer>> sub;
                for (size_t i = 0; i <= n; ++i)
                    if (i != drop) sub.push_back(a[i]);
                CHECK(minors[drop] == bareiss_determinant(sub));
            }
        }
}

TEST_CASE("maximal minors of a rank-deficient matrix vanish") {
    // rows all proportional to (1, 2)
    std::vector<std::vector<Integer>> a = {{1, 2}, {2, 4}, {3, 6}};
    for (const auto& m : maximal_minors(a)) CHECK(sgn(m) == 0);
}
