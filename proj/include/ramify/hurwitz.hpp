#ifndef RAMIFY_HURWITZ_HPP
#define RAMIFY_HURWITZ_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ramify/critical_map.hpp"
#include "ramify/linalg.hpp"
#include "ramify/roots.hpp"

namespace ramify {

using Gaussian = GaussianRational;

/// A critical point that is either pinned to a known location or left as an
/// unknown to be solved for.
struct HurwitzPoint {
    int unknown = -1;                 // >= 0: identifier of the unknown
    ExtendedPoint<Gaussian> z{};      // meaningful when unknown < 0

    bool is_unknown() const { return unknown >= 0; }
    static HurwitzPoint fixed(ExtendedPoint<Gaussian> p) { return {-1, std::move(p)}; }
    static HurwitzPoint free(int id) { return {id, {}}; }
};

struct HurwitzTriple {
    HurwitzPoint z;
    long nu = 0;
    ExtendedPoint<Gaussian> b;
};

/// Affine dependence z_dst = scale * z_src + offset between unknowns.
struct AffineTie {
    int dst = 0, src = 0;
    Rational scale, offset;
};

/// Requires the unknown to be real and on one side of a rational bound.
struct RealFilter {
    int id = 0;
    bool greater = true;
    Rational bound;
};

struct HurwitzData {
    std::vector<HurwitzTriple> triples;
    std::vector<AffineTie> ties;
    std::vector<RealFilter> filters;

    std::vector<int> unknown_ids() const {
        std::set<int> s;
        for (const auto& t : triples)
            if (t.z.is_unknown()) s.insert(t.z.unknown);
        return {s.begin(), s.end()};
    }
    /// Unknowns not determined by a tie.
    std::vector<int> free_ids() const {
        std::set<int> s;
        for (const auto& t : triples)
            if (t.z.is_unknown()) s.insert(t.z.unknown);
        for (const auto& tie : ties) s.erase(tie.dst);
        return {s.begin(), s.end()};
    }
};

inline long hurwitz_degree(const HurwitzData& data) {
    long total = 0;
    for (const auto& t : data.triples) total += t.nu;
    if (total % 2 != 0) throw std::domain_error("parity");
    return 1 + total / 2;
}

/// Admissibility: (i) at least three distinct values, (ii) even total
/// branching, (iii) no value absorbs more than half the branching.
inline std::vector<std::string> validate(const HurwitzData& data) {
    std::vector<std::string> violations;
    std::vector<ExtendedPoint<Gaussian>> values;
    for (const auto& t : data.triples) {
        bool seen = false;
        for (const auto& v : values) seen = seen || v == t.b;
        if (!seen) values.push_back(t.b);
    }
    if (values.size() < 3) violations.push_back("fewer than three distinct critical values");
    long total = 0;
    for (const auto& t : data.triples) total += t.nu;
    if (total % 2 != 0) violations.push_back("odd total branching");
    for (const auto& v : values) {
        long at_v = 0;
        for (const auto& t : data.triples)
            if (t.b == v) at_v += t.nu;
        if (2 * at_v > total) {
            violations.push_back("one critical value carries more than half the branching");
            break;
        }
    }
    return violations;
}

namespace detail {

/// Value of unknown `id` given the free assignments, following ties.
template <class K>
K resolve_unknown(const HurwitzData& data, int id, const std::map<int, K>& free_values,
                  const K& like) {
    auto it = free_values.find(id);
    if (it != free_values.end()) return it->second;
    for (const auto& tie : data.ties)
        if (tie.dst == id) {
            K src = resolve_unknown(data, tie.src, free_values, like);
            return convert_scalar<K>(tie.scale, like) * src + convert_scalar<K>(tie.offset, like);
        }
    throw std::invalid_argument("unresolved unknown");
}

}  // namespace detail

/// Substitute concrete locations for the unknowns.
template <class K>
std::vector<CriticalTriple<K>> instantiate(const HurwitzData& data,
                                           const std::map<int, K>& free_values, const K& like) {
    std::vector<CriticalTriple<K>> out;
    for (const auto& t : data.triples) {
        CriticalTriple<K> c;
        c.nu = t.nu;
        c.b = t.b.infinite ? ExtendedPoint<K>::inf(like)
                           : ExtendedPoint<K>::at(convert_scalar<K>(t.b.value, like));
        if (t.z.is_unknown())
            c.z = ExtendedPoint<K>::at(detail::resolve_unknown(data, t.z.unknown, free_values, like));
        else
            c.z = t.z.z.infinite ? ExtendedPoint<K>::inf(like)
                               : ExtendedPoint<K>::at(convert_scalar<K>(t.z.z.value, like));
        out.push_back(std::move(c));
    }
    return out;
}

namespace detail {

inline Rational real_part_checked(const Gaussian& g, const char* what) {
    if (!g.is_real()) throw std::domain_error(std::string("minor system requires rational ") + what);
    return g.re;
}

/// Incremental Newton interpolation: nodes are added one at a time and the
/// top divided-difference coefficients reveal when the polynomial is
/// complete.
class NewtonAccumulator {
  public:
    void add(const Rational& x, const Rational& y) {
        Rational acc(0), prod(1);
        for (size_t i = 0; i < nodes_.size(); ++i) {
            acc += coeffs_[i] * prod;
            prod *= x - nodes_[i];
        }
        Rational c = (y - acc) / prod;
        c.canonicalize();
        nodes_.push_back(x);
        coeffs_.push_back(c);
    }
    size_t size() const { return nodes_.size(); }
    bool top_coeffs_zero(size_t count) const {
        if (coeffs_.size() < count) return false;
        for (size_t i = coeffs_.size() - count; i < coeffs_.size(); ++i)
            if (sgn(coeffs_[i]) != 0) return false;
        return true;
    }
    Polynomial<Rational> to_poly() const {
        Polynomial<Rational> result, basis = Polynomial<Rational>::constant(Rational(1));
        for (size_t i = 0; i < coeffs_.size(); ++i) {
            result = result + coeffs_[i] * basis;
            basis = basis * Polynomial<Rational>({-nodes_[i], Rational(1)});
        }
        return result;
    }

  private:
    std::vector<Rational> nodes_, coeffs_;
};

/// Integer matrix of the critical evaluation map at a concrete rational
/// location of the free unknown; rows scaled by node-independent multipliers
/// so every entry is an integer.
inline std::vector<std::vector<Integer>> integer_matrix_at(const HurwitzData& data, int free_id,
                                                           const Rational& u, long n,
                                                           const std::vector<Integer>& row_mult) {
    std::map<int, Gaussian> vals{{free_id, Gaussian(u)}};
    auto triples = instantiate(data, vals, Gaussian());
    auto m = assemble(triples, n, Gaussian(), /*check_distinct=*/false);
    std::vector<std::vector<Integer>> a(m.rows(), std::vector<Integer>(m.cols()));
    size_t row = 0;
    size_t block = 0;
    for (const auto& t : data.triples) {
        for (long l = 0; l <= t.nu; ++l, ++row)
            for (size_t j = 0; j < m.cols(); ++j) {
                Rational e = real_part_checked(m.at(row, j), "matrix entries") * Rational(row_mult[block]);
                e.canonicalize();
                if (e.get_den() != 1) throw std::logic_error("row multiplier too small");
                a[row][j] = e.get_num();
            }
        ++block;
    }
    return a;
}

/// Per-triple integer multiplier bounding every denominator that can appear
/// in that triple's rows, independent of the unknown's (integer) location.
inline std::vector<Integer> row_multipliers(const HurwitzData& data, long n) {
    std::vector<Integer> mult;
    for (const auto& t : data.triples) {
        Integer m = 1;
        if (!t.b.infinite) {
            Rational br = real_part_checked(t.b.value, "critical values");
            m *= br.get_den();
        }
        Integer zden = 1;
        if (t.z.is_unknown()) {
            for (const auto& tie : data.ties)
                if (tie.dst == t.z.unknown) {
                    Integer d = tie.scale.get_den();
                    mpz_lcm(zden.get_mpz_t(), zden.get_mpz_t(), d.get_mpz_t());
                    d = tie.offset.get_den();
                    mpz_lcm(zden.get_mpz_t(), zden.get_mpz_t(), d.get_mpz_t());
                }
        } else if (!t.z.z.infinite) {
            zden = real_part_checked(t.z.z.value, "critical points").get_den();
        }
        Integer zpow;
        mpz_pow_ui(zpow.get_mpz_t(), zden.get_mpz_t(), static_cast<unsigned long>(n));
        m *= zpow;
        mult.push_back(m);
    }
    return mult;
}

}  // namespace detail

/// The maximal minors of the evaluation matrix as exact polynomials in the
/// single free unknown, reconstructed by evaluation at integer nodes and
/// Newton interpolation. Interpolation stops early once four consecutive
/// divided differences vanish for every minor, then the result is verified
/// against direct evaluation at three fresh nodes (resuming if it fails).
inline std::vector<Polynomial<Rational>> minor_polynomials(const HurwitzData& data) {
    auto free = data.free_ids();
    if (free.size() != 1) throw std::invalid_argument("expected exactly one free unknown");
    int fid = free[0];
    long n = hurwitz_degree(data);
    size_t rows = 0;
    for (const auto& t : data.triples) rows += static_cast<size_t>(t.nu) + 1;
    size_t cols = 2 * (static_cast<size_t>(n) + 1);
    if (rows != cols + 1)
        throw std::invalid_argument("minor system needs one more row than columns");

    long nu_unknown = 0;
    for (const auto& t : data.triples)
        if (t.z.is_unknown()) nu_unknown += t.nu;
    long node_cap = n * (nu_unknown + 2) + 1;

    auto mult = detail::row_multipliers(data, n);
    std::vector<detail::NewtonAccumulator> acc(rows);
    long next_node = 2;
    auto feed = [&](long count) {
        for (long c = 0; c < count; ++c, ++next_node) {
            Rational u(next_node);
            auto values = maximal_minors(detail::integer_matrix_at(data, fid, u, n, mult));
            for (size_t i = 0; i < rows; ++i) acc[i].add(u, Rational(values[i]));
        }
    };

    constexpr size_t kStableRun = 4;
    while (true) {
        feed(1);
        bool stable = acc[0].size() > kStableRun;
        for (const auto& a : acc) stable = stable && a.top_coeffs_zero(kStableRun);
        if (!stable && static_cast<long>(acc[0].size()) < node_cap + 1) continue;

        // candidate polynomials; confirm at three fresh nodes
        std::vector<Polynomial<Rational>> minors;
        minors.reserve(rows);
        for (const auto& a : acc) minors.push_back(a.to_poly());
        bool confirmed = true;
        long probe = next_node;
        for (long c = 0; c < 3; ++c, ++probe) {
            Rational u(probe);
            auto values = maximal_minors(detail::integer_matrix_at(data, fid, u, n, mult));
            for (size_t i = 0; i < rows; ++i)
                confirmed = confirmed && (minors[i].eval(u) == Rational(values[i]));
        }
        if (confirmed) return minors;
        if (static_cast<long>(acc[0].size()) >= node_cap + 1)
            throw std::logic_error("minor interpolation failed to stabilize");
        feed(3);  // the probes were spent; keep extending
    }
}

/// One concrete solution of the problem: point assignments plus the
/// realized map.
struct HurwitzSolution {
    std::map<int, Rational> exact_points;   // present when the root is rational
    std::map<int, BigComplex> points;       // numeric values, always present
    bool exact = false;
    bool admissible = false;
    bool selected = false;
    long kernel_dim = 0;
    RationalMap<Gaussian> map_exact;        // valid when exact
    RationalMap<BigComplex> map_numeric;    // valid otherwise
};

struct HurwitzOutcome {
    Polynomial<Rational> resultant = Polynomial<Rational>::constant(Rational(1));
    std::vector<HurwitzSolution> solutions;
};

namespace detail {

/// Linear polynomials in u whose roots would collide two prescribed points;
/// such roots of the minor gcd are artifacts and are divided out.
inline std::vector<Polynomial<Rational>> collision_factors(const HurwitzData& data, int fid) {
    // affine expression of each unknown in u
    std::map<int, std::pair<Rational, Rational>> expr;  // id -> (a, b): a u + b
    std::map<int, Gaussian> probe0{{fid, Gaussian(Rational(0))}};
    std::map<int, Gaussian> probe1{{fid, Gaussian(Rational(1))}};
    for (int id : data.unknown_ids()) {
        Rational b = real_part_checked(resolve_unknown(data, id, probe0, Gaussian()), "ties");
        Rational a = real_part_checked(resolve_unknown(data, id, probe1, Gaussian()), "ties") - b;
        expr[id] = {a, b};
    }
    std::vector<Polynomial<Rational>> out;
    auto add = [&](const Rational& a, const Rational& b) {
        if (sgn(a) != 0) out.push_back(Polynomial<Rational>({b, a}));
    };
    // unknown meets fixed finite point
    for (const auto& [id, ab] : expr)
        for (const auto& t : data.triples)
            if (!t.z.is_unknown() && !t.z.z.infinite) {
                Rational zv = real_part_checked(t.z.z.value, "critical points");
                add(ab.first, ab.second - zv);
            }
    // unknown meets unknown
    for (auto i = expr.begin(); i != expr.end(); ++i)
        for (auto j = std::next(i); j != expr.end(); ++j)
            add(i->second.first - j->second.first, i->second.second - j->second.second);
    return out;
}

/// Decide a filter on an isolating bracket, refining while undecided.
inline bool filter_passes(const RealFilter& f, const Rational& scale, const Rational& offset,
                          RootBracket bracket) {
    for (int iter = 0; iter < 512; ++iter) {
        Rational lo = scale * bracket.lo + offset;
        Rational hi = scale * bracket.hi + offset;
        if (lo > hi) std::swap(lo, hi);
        if (f.greater && lo > f.bound) return true;
        if (!f.greater && hi < f.bound) return true;
        if (f.greater && hi <= f.bound) return false;
        if (!f.greater && lo >= f.bound) return false;
        if (bracket.is_exact()) return false;  // root exactly on the bound
        detail::bisect_once(bracket);
    }
    return false;
}

}  // namespace detail

/// Full solve: dispatch on the number of free unknowns. Zero unknowns use
/// the direct nullspace; one unknown goes through the minor-vanishing
/// system; two unknowns use damped Newton on two numeric minors with an
/// a-posteriori check that the whole matrix drops rank.
HurwitzOutcome solve(const HurwitzData& data, long prec = kDefaultPrecBits,
                     const std::map<int, Rational>& continuation_hint = {});

namespace detail {

inline void attach_exact_map(HurwitzSolution& sol, const HurwitzData& data,
                             const std::map<int, Rational>& free_values, long n, long prec) {
    std::map<int, Gaussian> gv;
    for (const auto& [id, v] : free_values) gv[id] = Gaussian(v);
    auto triples = instantiate(data, gv, Gaussian());
    auto pairs = nullspace(assemble(triples, n, Gaussian()), Gaussian());
    sol.kernel_dim = static_cast<long>(pairs.size());
    if (pairs.size() == 1) {
        sol.map_exact = RationalMap<Gaussian>(pairs[0].first, pairs[0].second);
        sol.exact = true;
    }
    for (int id : data.unknown_ids()) {
        Gaussian z = resolve_unknown(data, id, gv, Gaussian());
        sol.exact_points[id] = real_part_checked(z, "solution points");
        sol.points.emplace(id, BigComplex(z, prec));
    }
}

inline void attach_numeric_map(HurwitzSolution& sol, const HurwitzData& data,
                               const std::map<int, BigComplex>& free_values, long n, long prec) {
    BigComplex like(prec);
    auto triples = instantiate(data, free_values, like);
    auto m = assemble(triples, n, like, /*check_distinct=*/false);
    auto pairs = nullspace_numeric(m, prec, BigFloat::pow2(-prec / 2, prec));
    sol.kernel_dim = static_cast<long>(pairs.size());
    if (pairs.size() == 1)
        sol.map_numeric = RationalMap<BigComplex>(pairs[0].first, pairs[0].second);
    for (int id : data.unknown_ids())
        sol.points.emplace(id, resolve_unknown(data, id, free_values, like));
}

}  // namespace detail

inline HurwitzOutcome solve_zero_unknowns(const HurwitzData& data, long prec) {
    HurwitzOutcome out;
    HurwitzSolution sol;
    detail::attach_exact_map(sol, data, {}, hurwitz_degree(data), prec);
    sol.admissible = true;
    sol.selected = true;
    out.solutions.push_back(std::move(sol));
    return out;
}

inline HurwitzOutcome solve_one_unknown(const HurwitzData& data, long prec,
                                        const std::map<int, Rational>& hint) {
    int fid = data.free_ids()[0];
    long n = hurwitz_degree(data);
    auto minors = minor_polynomials(data);

    // gcd of all minors over Q[u]
    Polynomial<Rational> g;
    for (const auto& m : minors) {
        if (m.is_zero()) continue;
        g = g.is_zero() ? m : poly_gcd(g, m);
    }
    HurwitzOutcome out;
    if (g.is_zero()) {
        // identically rank-deficient: not expected for admissible data
        out.resultant = Polynomial<Rational>();
        return out;
    }
    // strip collision artifacts
    for (const auto& f : detail::collision_factors(data, fid)) {
        while (g.degree() >= 1) {
            auto [q, r] = g.divmod(f);
            if (!r.is_zero()) break;
            g = q;
        }
    }
    out.resultant = primitive_integer_part(g);
    if (out.resultant.degree() < 1) return out;  // no admissible location

    // expression of every unknown as an affine function of u, for filters
    std::map<int, std::pair<Rational, Rational>> expr;
    {
        std::map<int, Gaussian> p0{{fid, Gaussian(Rational(0))}};
        std::map<int, Gaussian> p1{{fid, Gaussian(Rational(1))}};
        for (int id : data.unknown_ids()) {
            Rational b = detail::real_part_checked(detail::resolve_unknown(data, id, p0, Gaussian()), "ties");
            Rational a = detail::real_part_checked(detail::resolve_unknown(data, id, p1, Gaussian()), "ties") - b;
            expr[id] = {a, b};
        }
    }

    auto brackets = isolate_real_roots(out.resultant);
    for (const auto& br : brackets) {
        HurwitzSolution sol;
        bool pass = true;
        for (const auto& f : data.filters) {
            auto [a, b] = expr.at(f.id);
            pass = pass && detail::filter_passes(f, a, b, br);
        }
        sol.admissible = pass;
        if (br.is_exact()) {
            detail::attach_exact_map(sol, data, {{fid, br.lo}}, n, prec);
        } else {
            BigComplex u = refine_root(br, prec);
            detail::attach_numeric_map(sol, data, {{fid, u}}, n, prec);
        }
        out.solutions.push_back(std::move(sol));
    }

    // continuation ordering: nearest to the hint first, then mark selection
    if (!hint.empty() && hint.count(fid)) {
        BigFloat target(hint.at(fid), prec);
        std::stable_sort(out.solutions.begin(), out.solutions.end(),
                         [&](const HurwitzSolution& a, const HurwitzSolution& b) {
                             return (a.points.at(fid).re - target).abs() <
                                    (b.points.at(fid).re - target).abs();
                         });
    }
    for (auto& s : out.solutions)
        if (s.admissible) {
            s.selected = true;
            break;
        }
    return out;
}

inline HurwitzOutcome solve_two_unknowns(const HurwitzData& data, long prec,
                                         const std::map<int, Rational>& hint) {
    auto free = data.free_ids();
    int id0 = free[0], id1 = free[1];
    long n = hurwitz_degree(data);
    BigComplex like(prec);

    auto matrix_at = [&](const BigComplex& u, const BigComplex& v) {
        std::map<int, BigComplex> vals{{id0, u}, {id1, v}};
        return assemble(instantiate(data, vals, like), n, like, /*check_distinct=*/false);
    };
    size_t rows = 0;
    for (const auto& t : data.triples) rows += static_cast<size_t>(t.nu) + 1;
    size_t cols = 2 * (static_cast<size_t>(n) + 1);
    if (rows != cols + 1)
        throw std::invalid_argument("two-unknown solve needs one more row than columns");

    auto minor_value = [&](const Matrix<BigComplex>& m, size_t drop) {
        Matrix<BigComplex> s(cols, cols, BigComplex(prec));
        size_t r = 0;
        for (size_t i = 0; i < rows; ++i) {
            if (i == drop) continue;
            for (size_t j = 0; j < cols; ++j) s.at(r, j) = m.at(i, j);
            ++r;
        }
        return numeric_determinant(s);
    };

    // objective: two minors, each dropping the first row of one free-point
    // block. Dropping a row of the id0 block removes (or lowers) the
    // u-dependence of that minor and vice versa, so the pair cannot vanish
    // identically along the spurious locus shared by minors that keep both
    // free rows (a rank drop of the fixed-row core).
    size_t drop_a = 0, drop_b = 0, off = 0;
    for (const auto& t : data.triples) {
        if (t.z.is_unknown()) {
            int rid = t.z.unknown;
            // follow ties back to the free identifier
            for (const auto& tie : data.ties)
                if (tie.dst == rid) rid = tie.src;
            if (rid == id0) drop_a = off;
            if (rid == id1) drop_b = off;
        }
        off += static_cast<size_t>(t.nu) + 1;
    }
    auto F = [&](const BigFloat& u, const BigFloat& v) {
        auto m = matrix_at(BigComplex(u, BigFloat(prec)), BigComplex(v, BigFloat(prec)));
        return std::pair{minor_value(m, drop_a), minor_value(m, drop_b)};
    };

    // seeds: continuation hint first, then local minima of the
    // collision-deflated residual on a coarse grid over the region allowed
    // by the filters (id0 = z_{-1} > 1, id1 = z_1 < 0). Deflation divides
    // out the minors' artificial zeros where an unknown collides with a
    // fixed point (no genuine kernel there, but Newton is attracted).
    std::vector<std::pair<double, double>> seeds;
    if (hint.count(id0) && hint.count(id1))
        seeds.emplace_back(hint.at(id0).get_d(), hint.at(id1).get_d());
    {
        // grid cells where both minors change sign are Newton seeds; the
        // zero curves of the two minors cross transversally at genuine
        // solutions, while even-order collision zeros do not flip signs
        const long gu = 24, gv = 24;
        auto unode = [&](long i) { return 1.03 + 4.0 * static_cast<double>(i) / (gu - 1); };
        auto vnode = [&](long j) { return -4.0 + 3.97 * static_cast<double>(j) / (gv - 1); };
        std::vector<std::vector<double>> v1(gu, std::vector<double>(gv, 0.0)), v2 = v1;
        for (long i = 0; i < gu; ++i)
            for (long j = 0; j < gv; ++j) {
                auto [f1, f2] = F(BigFloat(unode(i), prec), BigFloat(vnode(j), prec));
                v1[i][j] = f1.re.to_double();
                v2[i][j] = f2.re.to_double();
            }
        std::vector<std::tuple<double, double, double>> cells;
        for (long i = 0; i + 1 < gu; ++i)
            for (long j = 0; j + 1 < gv; ++j) {
                auto flips = [&](const std::vector<std::vector<double>>& f) {
                    double a = f[i][j], b = f[i + 1][j], c = f[i][j + 1], d = f[i + 1][j + 1];
                    return (a < 0) != (b < 0) || (a < 0) != (c < 0) || (a < 0) != (d < 0);
                };
                if (flips(v1) && flips(v2)) {
                    double mag = std::abs(v1[i][j]) + std::abs(v2[i][j]);
                    cells.emplace_back(mag, (unode(i) + unode(i + 1)) / 2.0,
                                       (vnode(j) + vnode(j + 1)) / 2.0);
                }
            }
        std::sort(cells.begin(), cells.end());
        for (const auto& [s, u, v] : cells) seeds.emplace_back(u, v);
    }

    HurwitzOutcome out;
    out.resultant = Polynomial<Rational>();
    BigFloat h = BigFloat::pow2(-prec / 3, prec);
    size_t tried = 0;
    for (const auto& [su, sv] : seeds) {
        if (++tried > 12) break;
        BigFloat bu(su, prec), bv(sv, prec);
        // damped Newton with finite-difference Jacobian
        auto [f1, f2] = F(bu, bv);
        BigFloat res = f1.abs() + f2.abs();
        for (int iter = 0; iter < 80 && !res.is_zero(); ++iter) {
            auto [fu1, fu2] = F(bu + h, bv);
            auto [fv1, fv2] = F(bu, bv + h);
            BigComplex j11 = (fu1 - f1) / BigComplex(h, BigFloat(prec));
            BigComplex j21 = (fu2 - f2) / BigComplex(h, BigFloat(prec));
            BigComplex j12 = (fv1 - f1) / BigComplex(h, BigFloat(prec));
            BigComplex j22 = (fv2 - f2) / BigComplex(h, BigFloat(prec));
            BigComplex det = j11 * j22 - j12 * j21;
            if (det.is_zero()) break;
            BigComplex du = (f1 * j22 - f2 * j12) / det;
            BigComplex dv = (j11 * f2 - j21 * f1) / det;
            // damping: halve until the residual shrinks
            BigFloat lambda(1L, prec);
            bool moved = false;
            for (int cut = 0; cut < 30; ++cut) {
                BigFloat nu_ = bu - lambda * du.re;
                BigFloat nv = bv - lambda * dv.re;
                auto [g1, g2] = F(nu_, nv);
                BigFloat nres = g1.abs() + g2.abs();
                if (nres < res) {
                    bu = nu_;
                    bv = nv;
                    f1 = g1;
                    f2 = g2;
                    res = nres;
                    moved = true;
                    break;
                }
                lambda = lambda / BigFloat(2L, prec);
            }
            if (!moved || res < BigFloat::pow2(-prec + 16, prec)) break;
        }

        // reject convergence into a collision: no genuine kernel lives there
        double ud = bu.to_double(), vd = bv.to_double();
        double sep = std::min({std::abs(ud - 1.0), std::abs(ud), std::abs(vd),
                               std::abs(vd - 1.0), std::abs(ud - vd)});
        if (sep < 1e-6) continue;

        HurwitzSolution sol;
        std::map<int, BigComplex> vals{{id0, BigComplex(bu, BigFloat(prec))},
                                       {id1, BigComplex(bv, BigFloat(prec))}};
        detail::attach_numeric_map(sol, data, vals, n, prec);
        // a-posteriori certificate: the full matrix drops rank at the solution
        if (sol.kernel_dim < 1) continue;
        bool filters_ok = true;
        for (const auto& f : data.filters) {
            BigFloat v = sol.points.at(f.id).re;
            filters_ok =
                filters_ok && (f.greater ? v > BigFloat(f.bound, prec) : v < BigFloat(f.bound, prec));
            filters_ok = filters_ok && sol.points.at(f.id).im.abs() < BigFloat::pow2(-prec / 2, prec);
        }
        sol.admissible = filters_ok;
        sol.selected = sol.admissible;
        out.solutions.push_back(std::move(sol));
        break;
    }
    return out;
}

inline HurwitzOutcome solve(const HurwitzData& data, long prec,
                            const std::map<int, Rational>& continuation_hint) {
    auto violations = validate(data);
    if (!violations.empty()) {
        std::string msg = "inadmissible data:";
        for (const auto& v : violations) msg += " " + v + ";";
        throw std::invalid_argument(msg);
    }
    switch (data.free_ids().size()) {
        case 0: return solve_zero_unknowns(data, prec);
        case 1: return solve_one_unknown(data, prec, continuation_hint);
        case 2: return solve_two_unknowns(data, prec, continuation_hint);
        default: throw std::invalid_argument("more than two free unknowns is unsupported");
    }
}

}  // namespace ramify

#endif
