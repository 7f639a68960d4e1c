#ifndef RAMIFY_LINALG_HPP
#define RAMIFY_LINALG_HPP

#include <stdexcept>
#include <utility>
#include <vector>

#include "ramify/polynomial.hpp"

namespace ramify {

/// Dense row-major matrix over any scalar in the traits family.
template <class K>
class Matrix {
  public:
    Matrix() = default;
    Matrix(size_t rows, size_t cols, const K& fill) : r_(rows), c_(cols), d_(rows * cols, fill) {}

    size_t rows() const { return r_; }
    size_t cols() const { return c_; }
    K& at(size_t i, size_t j) { return d_[i * c_ + j]; }
    const K& at(size_t i, size_t j) const { return d_[i * c_ + j]; }

    Matrix transposed() const {
        Matrix t(c_, r_, d_.empty() ? K{} : scalar_traits<K>::zero(d_[0]));
        for (size_t i = 0; i < r_; ++i)
            for (size_t j = 0; j < c_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    std::vector<K> apply(const std::vector<K>& v) const {
        if (v.size() != c_) throw std::invalid_argument("dimension mismatch");
        std::vector<K> out(r_, d_.empty() ? K{} : scalar_traits<K>::zero(d_[0]));
        for (size_t i = 0; i < r_; ++i)
            for (size_t j = 0; j < c_; ++j) out[i] += at(i, j) * v[j];
        return out;
    }

  private:
    size_t r_ = 0, c_ = 0;
    std::vector<K> d_;
};

/// Basis of the right kernel over an exact field, by Gaussian elimination
/// with partial (first nonzero) pivoting.
template <class K>
std::vector<std::vector<K>> exact_kernel(Matrix<K> m) {
    static_assert(scalar_traits<K>::exact, "exact_kernel requires an exact field");
    size_t rows = m.rows(), cols = m.cols();
    if (cols == 0) return {};
    const K zero = scalar_traits<K>::is_zero(m.at(0, 0)) ? m.at(0, 0)
                                                         : scalar_traits<K>::zero(m.at(0, 0));
    std::vector<long> pivot_of_col(cols, -1);
    size_t pr = 0;
    for (size_t pc = 0; pc < cols && pr < rows; ++pc) {
        size_t sel = pr;
        while (sel < rows && scalar_traits<K>::is_zero(m.at(sel, pc))) ++sel;
        if (sel == rows) continue;
        if (sel != pr)
            for (size_t j = 0; j < cols; ++j) std::swap(m.at(sel, j), m.at(pr, j));
        K inv = scalar_traits<K>::one(m.at(pr, pc)) / m.at(pr, pc);
        for (size_t j = pc; j < cols; ++j) m.at(pr, j) = inv * m.at(pr, j);
        for (size_t i = 0; i < rows; ++i) {
            if (i == pr || scalar_traits<K>::is_zero(m.at(i, pc))) continue;
            K f = m.at(i, pc);
            for (size_t j = pc; j < cols; ++j) m.at(i, j) -= f * m.at(pr, j);
        }
        pivot_of_col[pc] = static_cast<long>(pr);
        ++pr;
    }
    std::vector<std::vector<K>> basis;
    for (size_t fc = 0; fc < cols; ++fc) {
        if (pivot_of_col[fc] >= 0) continue;
        std::vector<K> v(cols, zero);
        v[fc] = scalar_traits<K>::one(zero);
        for (size_t c = 0; c < fc; ++c)
            if (pivot_of_col[c] >= 0) v[c] = -m.at(static_cast<size_t>(pivot_of_col[c]), fc);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Numeric kernel over BigComplex: full-pivot elimination; columns whose
/// pivot falls below rel_tol * (largest initial entry) are treated as free.
/// Returns the kernel basis; each vector is certified downstream by the
/// caller via `residual_norm`.
inline std::vector<std::vector<BigComplex>> numeric_kernel(Matrix<BigComplex> m,
                                                           const BigFloat& rel_tol) {
    size_t rows = m.rows(), cols = m.cols();
    if (cols == 0) return {};
    long prec = m.at(0, 0).prec();
    BigFloat scale(prec);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) {
            BigFloat a = m.at(i, j).abs();
            if (a > scale) scale = a;
        }
    if (scale.is_zero()) scale = BigFloat(1L, prec);
    BigFloat threshold = rel_tol * scale;

    std::vector<long> pivot_of_col(cols, -1);
    std::vector<size_t> col_perm(cols);
    for (size_t j = 0; j < cols; ++j) col_perm[j] = j;
    size_t pr = 0;
    for (size_t step = 0; step < cols && pr < rows; ++step) {
        // full pivot over the remaining block
        size_t bi = pr, bj = step;
        BigFloat best(prec);
        for (size_t i = pr; i < rows; ++i)
            for (size_t j = step; j < cols; ++j) {
                BigFloat a = m.at(i, col_perm[j]).abs();
                if (a > best) {
                    best = a;
                    bi = i;
                    bj = j;
                }
            }
        if (best <= threshold) break;
        std::swap(col_perm[step], col_perm[bj]);
        if (bi != pr)
            for (size_t j = 0; j < cols; ++j) std::swap(m.at(bi, j), m.at(pr, j));
        size_t pc = col_perm[step];
        BigComplex inv = m.at(pr, pc).inverse();
        for (size_t j = 0; j < cols; ++j) m.at(pr, j) = inv * m.at(pr, j);
        for (size_t i = 0; i < rows; ++i) {
            if (i == pr) continue;
            BigComplex f = m.at(i, pc);
            if (f.is_zero()) continue;
            for (size_t j = 0; j < cols; ++j) m.at(i, j) -= f * m.at(pr, j);
        }
        pivot_of_col[pc] = static_cast<long>(pr);
        ++pr;
    }
    std::vector<std::vector<BigComplex>> basis;
    for (size_t fc = 0; fc < cols; ++fc) {
        if (pivot_of_col[fc] >= 0) continue;
        std::vector<BigComplex> v(cols, BigComplex(prec));
        v[fc] = BigComplex(1L, prec);
        for (size_t c = 0; c < cols; ++c)
            if (pivot_of_col[c] >= 0) v[c] = -m.at(static_cast<size_t>(pivot_of_col[c]), fc);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// max_i |(M v)_i| / (max|M| * max|v|), the certificate that v spans a
/// numeric kernel direction.
inline BigFloat residual_norm(const Matrix<BigComplex>& m, const std::vector<BigComplex>& v) {
    long prec = v.empty() ? kDefaultPrecBits : v[0].prec();
    BigFloat mnorm(prec), vnorm(prec), rnorm(prec);
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) {
            BigFloat a = m.at(i, j).abs();
            if (a > mnorm) mnorm = a;
        }
    for (const auto& x : v) {
        BigFloat a = x.abs();
        if (a > vnorm) vnorm = a;
    }
    for (const auto& x : m.apply(v)) {
        BigFloat a = x.abs();
        if (a > rnorm) rnorm = a;
    }
    if (mnorm.is_zero() || vnorm.is_zero()) return rnorm;
    return rnorm / (mnorm * vnorm);
}

/// Determinant of a square BigComplex matrix by LU with partial pivoting.
inline BigComplex numeric_determinant(Matrix<BigComplex> m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("matrix not square");
    size_t n = m.rows();
    if (n == 0) return BigComplex(1L, kDefaultPrecBits);
    long prec = m.at(0, 0).prec();
    BigComplex det(1L, prec);
    for (size_t k = 0; k < n; ++k) {
        size_t piv = k;
        BigFloat best = m.at(k, k).abs();
        for (size_t i = k + 1; i < n; ++i) {
            BigFloat a = m.at(i, k).abs();
            if (a > best) {
                best = a;
                piv = i;
            }
        }
        if (best.is_zero()) return BigComplex(prec);
        if (piv != k) {
            for (size_t j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(k, j));
            det = -det;
        }
        det = det * m.at(k, k);
        BigComplex inv = m.at(k, k).inverse();
        for (size_t i = k + 1; i < n; ++i) {
            BigComplex f = m.at(i, k) * inv;
            if (f.is_zero()) continue;
            for (size_t j = k; j < n; ++j) m.at(i, j) -= f * m.at(k, j);
        }
    }
    return det;
}

/// Determinant of a square integer matrix by the Bareiss fraction-free
/// algorithm; all intermediate divisions are exact.
inline Integer bareiss_determinant(std::vector<std::vector<Integer>> a) {
    size_t n = a.size();
    for (const auto& row : a)
        if (row.size() != n) throw std::invalid_argument("matrix not square");
    if (n == 0) return 1;
    Integer prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        size_t piv = k;
        while (piv < n && sgn(a[piv][k]) == 0) ++piv;
        if (piv == n) return 0;
        if (piv != k) {
            std::swap(a[piv], a[k]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                Integer num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : Integer(-a[n - 1][n - 1]);
}

/// All maximal minors of an (N+1) x N integer matrix A: minor i is the
/// determinant of A with row i deleted. Rather than N+1 determinants, this
/// computes one kernel vector of A^T (whose entries are proportional to the
/// signed minors) and a single reference determinant to fix the scale.
inline std::vector<Integer> maximal_minors(const std::vector<std::vector<Integer>>& a) {
    size_t nrows = a.size();
    if (nrows < 2) throw std::invalid_argument("need at least two rows");
    size_t ncols = a[0].size();
    if (nrows != ncols + 1) throw std::invalid_argument("expected (N+1) x N shape");
    for (const auto& row : a)
        if (row.size() != ncols) throw std::invalid_argument("ragged matrix");

    // kernel of A^T over the rationals: v with sum_i v_i * a[i][j] = 0;
    // v_i = (-1)^i * minor_i up to a common factor. Fraction-free Bareiss
    // forward elimination keeps every intermediate an integer minor.
    std::vector<std::vector<Integer>> b(ncols, std::vector<Integer>(nrows));
    for (size_t i = 0; i < nrows; ++i)
        for (size_t j = 0; j < ncols; ++j) b[j][i] = a[i][j];
    std::vector<Integer> minors(nrows, 0);

    Integer prev = 1;
    std::vector<std::pair<size_t, size_t>> pivots;  // (row, col) in b
    size_t pr = 0;
    for (size_t pc = 0; pc < nrows && pr < ncols; ++pc) {
        size_t sel = pr;
        while (sel < ncols && sgn(b[sel][pc]) == 0) ++sel;
        if (sel == ncols) continue;  // free column
        if (sel != pr) std::swap(b[sel], b[pr]);
        for (size_t i = pr + 1; i < ncols; ++i) {
            for (size_t j = pc + 1; j < nrows; ++j) {
                Integer num = b[i][j] * b[pr][pc] - b[i][pc] * b[pr][j];
                mpz_divexact(b[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            b[i][pc] = 0;
        }
        prev = b[pr][pc];
        pivots.emplace_back(pr, pc);
        ++pr;
    }
    if (pr < ncols) return minors;  // rank < N: every maximal minor vanishes

    // back-substitute for the single kernel direction (free column -> 1)
    size_t fc = nrows;
    {
        std::vector<bool> piv_col(nrows, false);
        for (auto& [r, c] : pivots) piv_col[c] = true;
        for (size_t c = 0; c < nrows; ++c)
            if (!piv_col[c]) fc = c;
    }
    std::vector<Rational> v(nrows, Rational(0));
    v[fc] = 1;
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
        auto [r, c] = *it;
        Rational s(0);
        for (size_t j = c + 1; j < nrows; ++j)
            if (sgn(v[j]) != 0) s += Rational(b[r][j]) * v[j];
        v[c] = -s / Rational(b[r][c]);
        v[c].canonicalize();
    }

    // clear denominators and content
    Integer den_lcm = 1;
    for (const auto& x : v) {
        Integer d = x.get_den();
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    }
    std::vector<Integer> w(nrows);
    Integer content = 0;
    for (size_t i = 0; i < nrows; ++i) {
        Rational s = v[i] * Rational(den_lcm);
        s.canonicalize();
        w[i] = s.get_num();
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), w[i].get_mpz_t());
    }
    for (auto& x : w) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), content.get_mpz_t());

    // one reference determinant pins the overall integer scale and sign
    size_t ref = 0;
    while (ref < nrows && sgn(w[ref]) == 0) ++ref;
    std::vector<std::vector<Integer>> sub;
    sub.reserve(ncols);
    for (size_t i = 0; i < nrows; ++i)
        if (i != ref) sub.push_back(a[i]);
    Integer ref_det = bareiss_determinant(std::move(sub));
    // minor_i = (-1)^(i - ref) * ref_det * w_i / w_ref
    for (size_t i = 0; i < nrows; ++i) {
        Integer num = ref_det * w[i];
        mpz_divexact(minors[i].get_mpz_t(), num.get_mpz_t(), w[ref].get_mpz_t());
        if ((i + ref) % 2 == 1) minors[i] = -minors[i];
    }
    return minors;
}

}  // namespace ramify

#endif
