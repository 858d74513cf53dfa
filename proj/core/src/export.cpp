#include "schurproc/export.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace schurproc {

double GridSpec::tau(int i) const {
    if (n_tau < 2) throw std::invalid_argument("GridSpec: n_tau >= 2 required");
    return tau_min + (tau_max - tau_min) * i / (n_tau - 1);
}

double GridSpec::chi(int j) const {
    if (n_chi < 2) throw std::invalid_argument("GridSpec: n_chi >= 2 required");
    return chi_min + (chi_max - chi_min) * j / (n_chi - 1);
}

DensityGrid density_grid(const GridSpec& g) {
    DensityGrid out;
    out.spec = g;
    out.theta.resize(static_cast<std::size_t>(g.n_tau) * static_cast<std::size_t>(g.n_chi));
    out.rho.resize(out.theta.size());
    for (int i = 0; i < g.n_tau; ++i) {
        for (int j = 0; j < g.n_chi; ++j) {
            auto [th, rho] = theta_density({g.tau(i), g.chi(j)});
            out.theta[out.index(i, j)] = th;
            out.rho[out.index(i, j)] = rho;
        }
    }
    return out;
}

ShapeMesh shape_mesh(const GridSpec& g, double tol) {
    ShapeMesh out;
    out.spec = g;
    out.points.reserve(static_cast<std::size_t>(g.n_tau) * static_cast<std::size_t>(g.n_chi));
    for (int i = 0; i < g.n_tau; ++i)
        for (int j = 0; j < g.n_chi; ++j)
            out.points.push_back(limit_shape({g.tau(i), g.chi(j)}, tol));
    return out;
}

namespace {

// Linear interpolation of the level crossing between two grid corners.
std::pair<double, double> cross(double a, double b, double pa_t, double pa_c,
                                double pb_t, double pb_c, double level) {
    double s = (level - a) / (b - a);
    return {pa_t + s * (pb_t - pa_t), pa_c + s * (pb_c - pa_c)};
}

}  // namespace

std::vector<Polyline> level_curves(const DensityGrid& g, double theta_level) {
    std::vector<Polyline> out;
    const auto& s = g.spec;
    for (int i = 0; i + 1 < s.n_tau; ++i) {
        for (int j = 0; j + 1 < s.n_chi; ++j) {
            double v00 = g.theta_at(i, j), v01 = g.theta_at(i, j + 1);
            double v10 = g.theta_at(i + 1, j), v11 = g.theta_at(i + 1, j + 1);
            double t0 = s.tau(i), t1 = s.tau(i + 1);
            double c0 = s.chi(j), c1 = s.chi(j + 1);

            std::vector<std::pair<double, double>> hits;
            auto edge = [&](double a, double b, double at, double ac, double bt,
                            double bc) {
                if ((a < theta_level) != (b < theta_level))
                    hits.push_back(cross(a, b, at, ac, bt, bc, theta_level));
            };
            edge(v00, v01, t0, c0, t0, c1);  // left
            edge(v10, v11, t1, c0, t1, c1);  // right
            edge(v00, v10, t0, c0, t1, c0);  // bottom
            edge(v01, v11, t0, c1, t1, c1);  // top
            // ambiguous saddles (4 hits) are split arbitrarily into two pairs
            for (std::size_t k = 0; k + 1 < hits.size(); k += 2)
                out.push_back({hits[k], hits[k + 1]});
        }
    }
    return out;
}

std::string density_csv(const DensityGrid& g, const std::string& header) {
    std::ostringstream os;
    os.precision(12);
    os << "# " << header << "\n";
    os << "tau,chi,theta,rho\n";
    for (int i = 0; i < g.spec.n_tau; ++i)
        for (int j = 0; j < g.spec.n_chi; ++j)
            os << g.spec.tau(i) << "," << g.spec.chi(j) << "," << g.theta_at(i, j)
               << "," << g.rho_at(i, j) << "\n";
    return os.str();
}

std::string shape_csv(const ShapeMesh& m, const std::string& header) {
    std::ostringstream os;
    os.precision(12);
    os << "# " << header << "\n";
    os << "tau,chi,x,y,z\n";
    for (int i = 0; i < m.spec.n_tau; ++i)
        for (int j = 0; j < m.spec.n_chi; ++j) {
            const auto& p =
                m.points[static_cast<std::size_t>(i) *
                             static_cast<std::size_t>(m.spec.n_chi) +
                         static_cast<std::size_t>(j)];
            os << m.spec.tau(i) << "," << m.spec.chi(j) << "," << p.x << "," << p.y
               << "," << p.z << "\n";
        }
    return os.str();
}

namespace {

constexpr double kSvgSize = 640.0;
constexpr double kSvgPad = 20.0;

struct Viewport {
    double tmin, tmax, cmin, cmax;
    double x(double tau) const {
        return kSvgPad + (tau - tmin) / (tmax - tmin) * (kSvgSize - 2 * kSvgPad);
    }
    double y(double chi) const {
        return kSvgSize - kSvgPad -
               (chi - cmin) / (cmax - cmin) * (kSvgSize - 2 * kSvgPad);
    }
};

}  // namespace

std::string density_svg(const DensityGrid& g, const std::string& header) {
    const auto& s = g.spec;
    Viewport vp{s.tau_min, s.tau_max, s.chi_min, s.chi_max};
    std::ostringstream os;
    os.precision(8);
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSvgSize
       << "\" height=\"" << kSvgSize << "\">\n";
    os << "<!-- " << header << " -->\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (int k = 0; k <= 8; ++k) {
        // k = 0 and 8 are the bulk boundaries; theta is clamped to exactly
        // 0 / pi outside, so nudge those levels into the open interval.
        double level = std::clamp(k * std::numbers::pi / 8.0, 1e-9,
                                  std::numbers::pi - 1e-9);
        int hue = 30 * k;
        for (const auto& seg : level_curves(g, level)) {
            os << "<polyline fill=\"none\" stroke=\"hsl(" << hue
               << ",70%,40%)\" stroke-width=\"1.2\" points=\"";
            for (const auto& [t, c] : seg) os << vp.x(t) << "," << vp.y(c) << " ";
            os << "\"/>\n";
        }
    }
    os << "</svg>\n";
    return os.str();
}

namespace {

// (x,y,z) -> (t,h) projection used for all tiling figures.
std::pair<double, double> proj(double x, double y, double z) {
    return {y - x, z - (x + y) / 2.0};
}

void face(std::ostringstream& os, const Viewport& vp,
          const std::vector<std::array<double, 3>>& corners, const char* fill) {
    os << "<polygon fill=\"" << fill << "\" stroke=\"#333\" stroke-width=\"0.4\" points=\"";
    for (const auto& c : corners) {
        auto [t, h] = proj(c[0], c[1], c[2]);
        os << vp.x(t) << "," << vp.y(h) << " ";
    }
    os << "\"/>\n";
}

}  // namespace

std::string tiling_svg(const PlanePartition& pi, int bound,
                       const std::string& header) {
    if (bound < 1) throw std::invalid_argument("tiling_svg: bound >= 1 required");
    double hmax = static_cast<double>(pi.at(1, 1)) + 1.0;
    Viewport vp{-(double)bound - 1, (double)bound + 1, -(double)bound - 1, hmax};
    std::ostringstream os;
    os.precision(8);
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSvgSize
       << "\" height=\"" << kSvgSize << "\">\n";
    os << "<!-- " << header << " -->\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    const char* top = "#d9d9f2";
    const char* xside = "#8a8acc";
    const char* yside = "#b3b3df";
    for (int i = 1; i <= bound; ++i) {
        for (int j = 1; j <= bound; ++j) {
            double v = pi.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
            // horizontal tile: the top of the column (the floor when v = 0)
            face(os, vp,
                 {{{i - 1.0, j - 1.0, v}},
                  {{(double)i, j - 1.0, v}},
                  {{(double)i, (double)j, v}},
                  {{i - 1.0, (double)j, v}}},
                 top);
            // exposed side faces toward the two decreasing directions
            int vx = (i < bound) ? pi.at(static_cast<std::size_t>(i) + 1,
                                         static_cast<std::size_t>(j))
                                 : 0;
            for (int k = vx + 1; k <= v; ++k)
                face(os, vp,
                     {{{(double)i, j - 1.0, k - 1.0}},
                      {{(double)i, (double)j, k - 1.0}},
                      {{(double)i, (double)j, (double)k}},
                      {{(double)i, j - 1.0, (double)k}}},
                     xside);
            int vy = (j < bound) ? pi.at(static_cast<std::size_t>(i),
                                         static_cast<std::size_t>(j) + 1)
                                 : 0;
            for (int k = vy + 1; k <= v; ++k)
                face(os, vp,
                     {{{i - 1.0, (double)j, k - 1.0}},
                      {{(double)i, (double)j, k - 1.0}},
                      {{(double)i, (double)j, (double)k}},
                      {{i - 1.0, (double)j, (double)k}}},
                     yside);
        }
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace schurproc
