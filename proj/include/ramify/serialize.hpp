#ifndef RAMIFY_SERIALIZE_HPP
#define RAMIFY_SERIALIZE_HPP

#include <nlohmann/json.hpp>
#include <stdexcept>
#include <string>

#include "ramify/schwarzian.hpp"

namespace ramify {

using json = nlohmann::ordered_json;

// ---- exact scalars -------------------------------------------------------

/// Rationals serialize as canonical "num/den" strings via
/// to_fraction_string / rational_from_string of the scalar layer.
inline std::string rational_string(const Rational& q) { return to_fraction_string(q); }

inline json gaussian_json(const Gaussian& g) {
    return json{{"re", rational_string(g.re)}, {"im", rational_string(g.im)}};
}

inline Gaussian gaussian_from_json(const json& j) {
    return {rational_from_string(j.at("re").get<std::string>()),
            rational_from_string(j.at("im").get<std::string>())};
}

// ---- big floats ----------------------------------------------------------

/// Big floats serialize as decimal strings plus the precision they carry.
inline json bigfloat_json(const BigFloat& x) {
    return json{{"value", x.str()}, {"prec_bits", x.prec()}};
}

inline BigFloat bigfloat_from_json(const json& j) {
    return BigFloat::from_string(j.at("value").get<std::string>(), j.at("prec_bits").get<long>());
}

inline json bigcomplex_json(const BigComplex& z) {
    return json{{"re", z.re.str()}, {"im", z.im.str()}, {"prec_bits", z.re.prec()}};
}

inline BigComplex bigcomplex_from_json(const json& j) {
    long prec = j.at("prec_bits").get<long>();
    return {BigFloat::from_string(j.at("re").get<std::string>(), prec),
            BigFloat::from_string(j.at("im").get<std::string>(), prec)};
}

// ---- polynomials and maps ------------------------------------------------

/// Polynomials serialize as arrays of scalar strings, lowest power first.
inline json polynomial_json(const Polynomial<Rational>& p) {
    json a = json::array();
    for (const auto& c : p.coeffs()) a.push_back(rational_string(c));
    return a;
}

inline json polynomial_json(const Polynomial<Gaussian>& p) {
    json a = json::array();
    for (const auto& c : p.coeffs()) a.push_back(gaussian_json(c));
    return a;
}

inline json polynomial_json(const Polynomial<BigComplex>& p) {
    json a = json::array();
    for (const auto& c : p.coeffs()) a.push_back(bigcomplex_json(c));
    return a;
}

inline Polynomial<Gaussian> gaussian_polynomial_from_json(const json& j) {
    std::vector<Gaussian> c;
    for (const auto& e : j) c.push_back(gaussian_from_json(e));
    return Polynomial<Gaussian>(std::move(c));
}

template <class K>
json rational_map_json(const RationalMap<K>& f) {
    return json{{"num", polynomial_json(f.num)}, {"den", polynomial_json(f.den)}};
}

// ---- Hurwitz outcomes ----------------------------------------------------

/// Resultants have integer coefficients; they serialize as integer strings.
inline json resultant_json(const Polynomial<Rational>& r) {
    json a = json::array();
    for (const auto& c : r.coeffs()) {
        if (c.get_den() != 1) throw std::invalid_argument("resultant is not integral");
        a.push_back(c.get_num().get_str());
    }
    return a;
}

inline json hurwitz_solution_json(const HurwitzSolution& sol) {
    json points = json::object();
    for (const auto& [id, z] : sol.points) points[std::to_string(id)] = bigcomplex_json(z);
    json j{{"admissible", sol.admissible},
           {"selected", sol.selected},
           {"kernel_dim", sol.kernel_dim},
           {"exact", sol.exact},
           {"points", points}};
    if (sol.exact) {
        json exact_points = json::object();
        for (const auto& [id, q] : sol.exact_points)
            exact_points[std::to_string(id)] = rational_string(q);
        j["exact_points"] = exact_points;
        j["map"] = rational_map_json(sol.map_exact);
    } else if (!sol.map_numeric.num.is_zero()) {
        j["map"] = rational_map_json(sol.map_numeric);
    }
    return j;
}

inline json hurwitz_outcome_json(const HurwitzOutcome& out, const std::string& family_tag = {}) {
    json j = json::object();
    if (!family_tag.empty()) j["family"] = family_tag;
    j["resultant"] = resultant_json(out.resultant);
    json sols = json::array();
    for (const auto& s : out.solutions) sols.push_back(hurwitz_solution_json(s));
    j["solutions"] = sols;
    return j;
}

inline std::string family_tag(const FamilyIndex& idx) {
    switch (idx.kind) {
        case FamilyIndex::Kind::Harmonic:
            return "harmonic(" + std::to_string(idx.n) + "," + std::to_string(idx.k) + ")";
        case FamilyIndex::Kind::Airy:
            return "airy(" + std::to_string(idx.n) + ")";
        case FamilyIndex::Kind::Tritronquee:
            return "tritronquee(" + std::to_string(idx.n) + "," + std::to_string(idx.m) + "," +
                   std::to_string(idx.k) + ")";
    }
    return "";
}

// ---- pole reports --------------------------------------------------------

inline json pole_estimate_json(long n, long m, const PoleEstimate& e) {
    return json{{"n", n},
                {"m", m},
                {"k", e.k},
                {"a", json{{"re", e.potential.a.re.str()}, {"im", e.potential.a.im.str()}}},
                {"b", json{{"re", e.potential.b.re.str()}, {"im", e.potential.b.im.str()}}},
                {"zstar", json{{"re", e.potential.zstar.re.str()}, {"im", e.potential.zstar.im.str()}}},
                {"lambda",
                 json{{"re", e.potential.lambda.re.str()}, {"im", e.potential.lambda.im.str()}}},
                {"prec_bits", e.potential.prec},
                {"pre_asymptotic", e.pre_asymptotic}};
}

inline json pole_report_json(const PoleReport& rep) {
    json estimates = json::array();
    for (const auto& e : rep.estimates) estimates.push_back(pole_estimate_json(rep.n, rep.m, e));
    json diffs = json::array();
    for (const auto& d : rep.diffs) diffs.push_back(d.str());
    json j{{"n", rep.n}, {"m", rep.m}, {"estimates", estimates}, {"diffs", diffs}};
    if (rep.extrapolated)
        j["extrapolated"] = json{{"re", rep.extrapolated->re.str()}, {"im", rep.extrapolated->im.str()}};
    else
        j["extrapolated"] = nullptr;
    json failures = json::array();
    for (const auto& [k, msg] : rep.failures) failures.push_back(json{{"k", k}, {"error", msg}});
    j["failures"] = failures;
    return j;
}

}  // namespace ramify

#endif
