#ifndef RAMIFY_LEVEL_CURVES_HPP
#define RAMIFY_LEVEL_CURVES_HPP

#include <cmath>
#include <complex>
#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ramify/polynomial.hpp"

namespace ramify {

/// Which implicit curve of the map to trace.
enum class LevelKind { ModulusOne, RealZero };

/// Axis-aligned sampling window with a square grid of `resolution` cells per
/// side.
struct LevelCurveSpec {
    LevelKind kind = LevelKind::ModulusOne;
    double x0 = -3.0, y0 = -3.0, x1 = 3.0, y1 = 3.0;
    long resolution = 512;
};

/// Polylines approximating the requested level set, in scanline discovery
/// order.
struct LevelCurveSet {
    LevelCurveSpec spec;
    std::vector<std::vector<std::complex<double>>> polylines;
};

namespace detail {

/// The scalar field whose zero set is traced.
inline double level_field(const std::complex<double>& v, LevelKind kind) {
    if (kind == LevelKind::ModulusOne) return std::norm(v) - 1.0;
    return v.real();
}

/// Key of an edge crossing: cell coordinates plus 0 = bottom horizontal edge,
/// 1 = left vertical edge of the node (i, j).
struct EdgeKey {
    long i = 0, j = 0;
    int dir = 0;
    bool operator<(const EdgeKey& o) const {
        if (i != o.i) return i < o.i;
        if (j != o.j) return j < o.j;
        return dir < o.dir;
    }
    bool operator==(const EdgeKey& o) const { return i == o.i && j == o.j && dir == o.dir; }
};

struct Segment {
    EdgeKey a, b;
};

}  // namespace detail

/// Marching-squares extraction of the level set of |f|^2 - 1 or Re f on the
/// window grid, with one linear-interpolation refinement per crossing edge.
/// A grid node landing exactly on a pole (or other undefined sample) causes
/// one retry on a half-cell-shifted grid; a second failure is an error.
template <class K>
LevelCurveSet trace_level_set(const RationalMap<K>& f, const LevelCurveSpec& spec) {
    if (spec.resolution < 16) throw std::invalid_argument("resolution below 16");
    if (!(spec.x1 > spec.x0) || !(spec.y1 > spec.y0))
        throw std::invalid_argument("degenerate window");

    std::vector<std::complex<double>> num_c, den_c;
    for (const auto& c : f.num.coeffs()) num_c.push_back(scalar_traits<K>::to_cd(c));
    for (const auto& c : f.den.coeffs()) den_c.push_back(scalar_traits<K>::to_cd(c));
    auto horner = [](const std::vector<std::complex<double>>& c, std::complex<double> x) {
        std::complex<double> v(0.0, 0.0);
        for (size_t i = c.size(); i-- > 0;) v = v * x + c[i];
        return v;
    };

    const long n = spec.resolution;
    const double dx = (spec.x1 - spec.x0) / static_cast<double>(n);
    const double dy = (spec.y1 - spec.y0) / static_cast<double>(n);

    LevelCurveSet out;
    out.spec = spec;

    for (int attempt = 0; attempt < 2; ++attempt) {
        const double sx = spec.x0 + (attempt == 0 ? 0.0 : dx / 2.0);
        const double sy = spec.y0 + (attempt == 0 ? 0.0 : dy / 2.0);
        std::vector<double> field(static_cast<size_t>((n + 1) * (n + 1)));
        bool ok = true;
        for (long j = 0; j <= n && ok; ++j) {
            for (long i = 0; i <= n; ++i) {
                std::complex<double> z(sx + dx * static_cast<double>(i),
                                       sy + dy * static_cast<double>(j));
                std::complex<double> p = horner(num_c, z), q = horner(den_c, z);
                double g;
                if (std::abs(q) == 0.0) {
                    if (std::abs(p) == 0.0 || spec.kind == LevelKind::RealZero) {
                        ok = false;
                        break;
                    }
                    g = 1.0;  // |f| = infinity: strictly outside the unit circle
                } else {
                    g = detail::level_field(p / q, spec.kind);
                    if (!std::isfinite(g)) {
                        ok = false;
                        break;
                    }
                }
                field[static_cast<size_t>(j * (n + 1) + i)] = g;
            }
        }
        if (!ok) {
            if (attempt == 1) throw std::runtime_error("level field undefined on both grids");
            continue;
        }

        auto at = [&](long i, long j) { return field[static_cast<size_t>(j * (n + 1) + i)]; };
        auto node = [&](long i, long j) {
            return std::complex<double>(sx + dx * static_cast<double>(i),
                                        sy + dy * static_cast<double>(j));
        };
        // crossing location on the edge from node (i,j) in direction dir
        std::map<detail::EdgeKey, std::complex<double>> cross;
        auto crossing = [&](const detail::EdgeKey& e) {
            auto it = cross.find(e);
            if (it != cross.end()) return it->second;
            long i2 = e.i + (e.dir == 0 ? 1 : 0), j2 = e.j + (e.dir == 1 ? 1 : 0);
            double va = at(e.i, e.j), vb = at(i2, j2);
            double t = va / (va - vb);
            if (!(t >= 0.0 && t <= 1.0)) t = 0.5;
            std::complex<double> pa = node(e.i, e.j), pb = node(i2, j2);
            std::complex<double> p = pa + t * (pb - pa);
            cross.emplace(e, p);
            return p;
        };

        // per-cell segments between crossing edges
        std::vector<detail::Segment> segments;
        std::map<detail::EdgeKey, std::vector<size_t>> by_edge;
        auto push_segment = [&](const detail::EdgeKey& a, const detail::EdgeKey& b) {
            by_edge[a].push_back(segments.size());
            by_edge[b].push_back(segments.size());
            segments.push_back({a, b});
        };
        for (long j = 0; j < n; ++j) {
            for (long i = 0; i < n; ++i) {
                double v00 = at(i, j), v10 = at(i + 1, j), v01 = at(i, j + 1),
                       v11 = at(i + 1, j + 1);
                auto sgn = [](double v) { return v < 0.0; };
                int code = (sgn(v00) ? 1 : 0) | (sgn(v10) ? 2 : 0) | (sgn(v11) ? 4 : 0) |
                           (sgn(v01) ? 8 : 0);
                if (code == 0 || code == 15) continue;
                detail::EdgeKey bottom{i, j, 0}, top{i, j + 1, 0}, left{i, j, 1},
                    right{i + 1, j, 1};
                switch (code) {
                    case 1: case 14: push_segment(left, bottom); break;
                    case 2: case 13: push_segment(bottom, right); break;
                    case 3: case 12: push_segment(left, right); break;
                    case 4: case 11: push_segment(right, top); break;
                    case 6: case 9:  push_segment(bottom, top); break;
                    case 7: case 8:  push_segment(left, top); break;
                    case 5: case 10: {
                        // saddle: resolve by the sign at the cell center
                        double center = (v00 + v10 + v01 + v11) / 4.0;
                        bool center_neg = center < 0.0;
                        if ((code == 5) == center_neg) {
                            push_segment(left, top);
                            push_segment(bottom, right);
                        } else {
                            push_segment(left, bottom);
                            push_segment(right, top);
                        }
                        break;
                    }
                    default: break;
                }
            }
        }

        // chain segments into polylines, scanline discovery order
        std::vector<bool> used(segments.size(), false);
        for (size_t s = 0; s < segments.size(); ++s) {
            if (used[s]) continue;
            std::vector<detail::EdgeKey> chain{segments[s].a, segments[s].b};
            used[s] = true;
            // extend forward, then backward
            for (int side = 0; side < 2; ++side) {
                for (;;) {
                    detail::EdgeKey tip = (side == 0) ? chain.back() : chain.front();
                    size_t next = segments.size();
                    for (size_t idx : by_edge[tip])
                        if (!used[idx]) { next = idx; break; }
                    if (next == segments.size()) break;
                    used[next] = true;
                    detail::EdgeKey other =
                        (segments[next].a == tip) ? segments[next].b : segments[next].a;
                    if (side == 0)
                        chain.push_back(other);
                    else
                        chain.insert(chain.begin(), other);
                }
            }
            std::vector<std::complex<double>> pts;
            pts.reserve(chain.size());
            for (const auto& e : chain) pts.push_back(crossing(e));
            out.polylines.push_back(std::move(pts));
        }
        return out;
    }
    throw std::runtime_error("unreachable");
}

namespace detail {

inline std::string fixed6(double v) {
    if (v == 0.0) v = 0.0;  // normalize -0
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

}  // namespace detail

/// CSV serialization: one row per point, "curve,x,y"; header included.
inline std::string level_curves_csv(const LevelCurveSet& set) {
    std::ostringstream os;
    os << "curve,x,y\n";
    for (size_t c = 0; c < set.polylines.size(); ++c)
        for (const auto& p : set.polylines[c])
            os << c << ',' << detail::fixed6(p.real()) << ',' << detail::fixed6(p.imag()) << '\n';
    return os.str();
}

/// Inverse of level_curves_csv for round-trip testing; the spec is not
/// recoverable from the file and is left default.
inline LevelCurveSet level_curves_from_csv(const std::string& text) {
    LevelCurveSet set;
    std::istringstream is(text);
    std::string line;
    std::getline(is, line);  // header
    size_t current = static_cast<size_t>(-1);
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        size_t c1 = line.find(','), c2 = line.find(',', c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos)
            throw std::invalid_argument("bad csv row");
        size_t curve = std::stoul(line.substr(0, c1));
        double x = std::stod(line.substr(c1 + 1, c2 - c1 - 1));
        double y = std::stod(line.substr(c2 + 1));
        if (curve != current) {
            set.polylines.emplace_back();
            current = curve;
        }
        set.polylines.back().emplace_back(x, y);
    }
    return set;
}

/// Deterministic SVG rendering: one path element per polyline, window mapped
/// to a fixed 640x640 viewport, y axis pointing up.
inline std::string level_curves_svg(const LevelCurveSet& set) {
    const double w = 640.0;
    const auto& s = set.spec;
    double scale_x = w / (s.x1 - s.x0), scale_y = w / (s.y1 - s.y0);
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"640\" "
          "viewBox=\"0 0 640 640\">\n";
    os << "<rect width=\"640\" height=\"640\" fill=\"white\"/>\n";
    for (const auto& poly : set.polylines) {
        if (poly.empty()) continue;
        os << "<path fill=\"none\" stroke=\"black\" stroke-width=\"1\" d=\"";
        for (size_t i = 0; i < poly.size(); ++i) {
            double px = (poly[i].real() - s.x0) * scale_x;
            double py = w - (poly[i].imag() - s.y0) * scale_y;
            os << (i == 0 ? 'M' : 'L') << detail::fixed6(px) << ' ' << detail::fixed6(py);
        }
        os << "\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace ramify

#endif
