// Command-line workbench: solve critical-data problems, run the harmonic
// recursion with its kernel cross-check, extract pole estimates, trace level
// curves to SVG/CSV, and re-run the acceptance fixtures.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "ramify/verification.hpp"

using namespace ramify;

namespace {

// ---- small helpers -------------------------------------------------------

void write_artifact(const std::string& out, const std::string& payload) {
    if (out.empty()) {
        std::cout << payload;
        if (!payload.empty() && payload.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output path: " + out);
    f << payload;
}

json load_json_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot read file: " + path);
    return json::parse(f);
}

long parse_range_lo(const std::string& s) {
    auto pos = s.find("..");
    return std::stol(pos == std::string::npos ? s : s.substr(0, pos));
}

long parse_range_hi(const std::string& s) {
    auto pos = s.find("..");
    return std::stol(pos == std::string::npos ? s : s.substr(pos + 2));
}

FamilyIndex parse_family(const std::string& family, long n, long m, long k) {
    if (family == "harmonic") return FamilyIndex::harmonic(n, k);
    if (family == "airy") return FamilyIndex::airy(n);
    if (family == "tritronquee") return FamilyIndex::tritronquee(n, m, k);
    throw std::invalid_argument("unknown family: " + family +
                                " (expected harmonic, airy, or tritronquee)");
}

// ---- explicit data files -------------------------------------------------

ExtendedPoint<Gaussian> point_from_json(const json& j) {
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        if (s == "inf") return ExtendedPoint<Gaussian>::inf(Gaussian());
        return ExtendedPoint<Gaussian>::at(Gaussian(rational_from_string(s)));
    }
    return ExtendedPoint<Gaussian>::at(gaussian_from_json(j));
}

/// Explicit problem files list triples with fixed points ("3/2", "inf",
/// {"re","im"}) or unknowns ({"unknown": id}), plus optional affine ties and
/// real location filters.
HurwitzData hurwitz_data_from_json(const json& j) {
    HurwitzData data;
    for (const auto& t : j.at("triples")) {
        HurwitzTriple triple;
        const auto& z = t.at("z");
        if (z.is_object() && z.contains("unknown"))
            triple.z = HurwitzPoint::free(z.at("unknown").get<int>());
        else
            triple.z = HurwitzPoint::fixed(point_from_json(z));
        triple.nu = t.at("nu").get<long>();
        triple.b = point_from_json(t.at("b"));
        data.triples.push_back(std::move(triple));
    }
    for (const auto& t : j.value("ties", json::array())) {
        AffineTie tie;
        tie.dst = t.at("dst").get<int>();
        tie.src = t.at("src").get<int>();
        tie.scale = rational_from_string(t.at("scale").get<std::string>());
        tie.offset = rational_from_string(t.at("offset").get<std::string>());
        data.ties.push_back(std::move(tie));
    }
    for (const auto& f : j.value("filters", json::array())) {
        RealFilter filter;
        filter.id = f.at("id").get<int>();
        filter.greater = f.at("greater").get<bool>();
        filter.bound = rational_from_string(f.at("bound").get<std::string>());
        data.filters.push_back(std::move(filter));
    }
    return data;
}

RationalMap<Gaussian> map_from_json(const json& j) {
    auto poly = [](const json& a) {
        std::vector<Gaussian> c;
        for (const auto& e : a)
            c.push_back(e.is_string() ? Gaussian(rational_from_string(e.get<std::string>()))
                                      : gaussian_from_json(e));
        return Polynomial<Gaussian>(std::move(c));
    };
    return {poly(j.at("num")), poly(j.at("den"))};
}

// ---- subcommand implementations ------------------------------------------

int run_solve(const std::string& family, long n, long m, long k, const std::string& data_file,
              long prec, const std::string& out) {
    HurwitzData data;
    std::string tag;
    if (!data_file.empty()) {
        data = hurwitz_data_from_json(load_json_file(data_file));
        tag = "explicit";
    } else {
        auto idx = parse_family(family, n, m, k);
        data = critical_data(idx);
        tag = family_tag(idx);
    }
    auto violations = validate(data);
    if (!violations.empty()) throw std::invalid_argument("inadmissible data: " + violations[0]);
    json j = hurwitz_outcome_json(solve(data, prec), tag);
    write_artifact(out, j.dump(2));
    return 0;
}

int run_harmonic(long n, const std::string& krange, const std::string& out) {
    long k_hi = parse_range_hi(krange);
    auto states = harmonic_recursion(n, k_hi);
    json arr = json::array();
    for (long k = parse_range_lo(krange); k <= k_hi; ++k) {
        const auto& s = states[static_cast<size_t>(k)];
        RationalMap<Gaussian> rec{s.P, s.Q};
        bool confirmed = false;
        std::string note;
        try {
            auto idx = FamilyIndex::harmonic(n, k);
            auto triples = instantiate(critical_data(idx), {}, Gaussian());
            auto pairs = nullspace(assemble(triples, idx.degree(), Gaussian()), Gaussian());
            confirmed = pairs.size() == 1 &&
                        equivalent(rec, RationalMap<Gaussian>(pairs[0].first, pairs[0].second));
        } catch (const std::exception& e) {
            note = e.what();
        }
        json entry{{"family", family_tag(FamilyIndex::harmonic(n, k))},
                   {"gamma", rational_string(s.gamma)},
                   {"map", rational_map_json(rec)},
                   {"kernel_cross_check", confirmed ? "CONFIRMED" : "FAILED"}};
        if (!note.empty()) entry["error"] = note;
        arr.push_back(std::move(entry));
    }
    write_artifact(out, arr.dump(2));
    return 0;
}

int run_poles(long n, long m, const std::string& krange, long prec, const std::string& out) {
    auto rep = pole_sequence(n, m, parse_range_lo(krange), parse_range_hi(krange), prec);
    write_artifact(out, pole_report_json(rep).dump(2));
    return rep.failures.empty() ? 0 : 1;
}

int run_graph(const std::string& family, long n, long m, long k, const std::string& map_file,
              const std::string& level, const std::string& window, long resolution,
              const std::string& format, const std::string& out) {
    RationalMap<Gaussian> f{Polynomial<Gaussian>({Gaussian(0), Gaussian(1)}),
                            Polynomial<Gaussian>({Gaussian(1)})};
    if (!map_file.empty()) {
        f = map_from_json(load_json_file(map_file));
    } else if (!family.empty()) {
        if (family == "harmonic") {
            auto states = harmonic_recursion(n, k);
            f = {states[static_cast<size_t>(k)].P, states[static_cast<size_t>(k)].Q};
        } else if (family == "airy") {
            f = compose_airy(n);
        } else {
            throw std::invalid_argument("graph supports --family harmonic|airy or --map FILE");
        }
        (void)m;
    }
    LevelCurveSpec spec;
    if (level == "modulus")
        spec.kind = LevelKind::ModulusOne;
    else if (level == "real")
        spec.kind = LevelKind::RealZero;
    else
        throw std::invalid_argument("unknown level kind: " + level + " (expected modulus or real)");
    if (!window.empty()) {
        std::istringstream ss(window);
        char comma;
        if (!(ss >> spec.x0 >> comma >> spec.y0 >> comma >> spec.x1 >> comma >> spec.y1))
            throw std::invalid_argument("bad --window, expected x0,y0,x1,y1");
    }
    spec.resolution = resolution;
    auto curves = trace_level_set(f, spec);
    if (format == "svg") {
        write_artifact(out, level_curves_svg(curves));
    } else if (format == "csv") {
        write_artifact(out, level_curves_csv(curves));
    } else if (format == "json") {
        json arr = json::array();
        for (const auto& line : curves.polylines) {
            json pts = json::array();
            for (const auto& p : line)
                pts.push_back(json{{"x", detail::fixed6(p.real())},
                                   {"y", detail::fixed6(p.imag())}});
            arr.push_back(std::move(pts));
        }
        write_artifact(out, json{{"polylines", arr}}.dump(2));
    } else {
        throw std::invalid_argument("unknown format: " + format);
    }
    return 0;
}

int run_verify(long prec, const std::string& out) {
    auto results = run_verification(prec);
    int failures = 0;
    for (const auto& c : results) {
        std::cout << "[" << (c.pass ? "PASS" : "FAIL") << "] criterion " << c.id << ": " << c.name
                  << "\n";
        for (const auto& line : c.lines) std::cout << line << "\n";
        if (!c.pass) ++failures;
    }
    if (!out.empty()) write_artifact(out, verification_json(results).dump(2));
    return failures;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"workbench for critical-data rational maps and pole estimates"};
    app.require_subcommand(1);

    std::string family = "tritronquee", krange = "0", window, out, format = "json";
    std::string data_file, map_file, level = "modulus";
    long n = 0, m = 0, prec = 256, resolution = 512;

    auto add_common = [&](CLI::App* sub, bool with_k) {
        sub->add_option("--n", n, "first family index");
        sub->add_option("--m", m, "second family index");
        if (with_k) sub->add_option("--k", krange, "depth index or range lo..hi");
        sub->add_option("--prec-bits", prec, "working precision in bits (>= 64)");
        sub->add_option("--out", out, "output path (default: stdout)");
    };

    auto* solve_cmd = app.add_subcommand("solve", "solve a critical-data problem");
    solve_cmd->add_option("--family", family, "harmonic | airy | tritronquee");
    solve_cmd->add_option("--data", data_file, "explicit critical-data JSON file");
    add_common(solve_cmd, true);

    auto* harmonic_cmd =
        app.add_subcommand("harmonic", "run the recursion and cross-check against the kernel");
    add_common(harmonic_cmd, true);

    auto* poles_cmd = app.add_subcommand("poles", "normalized cubic pole estimates");
    add_common(poles_cmd, true);

    auto* graph_cmd = app.add_subcommand("graph", "trace level curves to SVG/CSV/JSON");
    graph_cmd->add_option("--family", family, "harmonic | airy (default: identity map)");
    graph_cmd->add_option("--map", map_file, "explicit rational-map JSON file");
    graph_cmd->add_option("--level", level, "modulus | real");
    graph_cmd->add_option("--window", window, "x0,y0,x1,y1 (default -3,-3,3,3)");
    graph_cmd->add_option("--resolution", resolution, "grid resolution (default 512)");
    graph_cmd->add_option("--format", format, "svg | csv | json");
    add_common(graph_cmd, true);

    auto* verify_cmd = app.add_subcommand("verify", "re-run the acceptance fixtures");
    verify_cmd->add_option("--prec-bits", prec, "working precision in bits (>= 64)");
    verify_cmd->add_option("--out", out, "verification JSON output path");

    try {
        app.parse(argc, argv);
        if (prec < 64) throw std::invalid_argument("--prec-bits must be at least 64");
        if (solve_cmd->parsed())
            return run_solve(family, n, m, parse_range_lo(krange), data_file, prec, out);
        if (harmonic_cmd->parsed()) return run_harmonic(n, krange, out);
        if (poles_cmd->parsed()) return run_poles(n, m, krange, prec, out);
        if (graph_cmd->parsed())
            return run_graph(graph_cmd->count("--family") ? family : "", n, m,
                             parse_range_lo(krange), map_file, level, window, resolution, format,
                             out);
        if (verify_cmd->parsed()) return run_verify(prec, out);
        return 1;
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        json err{{"error", {{"message", e.what()}}}};
        std::cout << err.dump(2) << std::endl;
        return 1;
    }
}
