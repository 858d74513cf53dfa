// schurproc: command-line front end for the Schur process library.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <schurproc/asympt.hpp>
#include <schurproc/export.hpp>
#include <schurproc/io.hpp>
#include <schurproc/kernel.hpp>
#include <schurproc/mcmc.hpp>
#include <schurproc/process.hpp>

using json = nlohmann::json;
using namespace schurproc;

namespace {

struct Opts {
    double q = 0.1;
    double r = 0.0;          // set iff --r used
    double alpha = 0.0;      // set iff --alpha used
    long long cutoff = 8;
    std::vector<int> box = {20, 20, 20};
    std::string grid = "-2:2:81,-2:2:81";
    double tol = 1e-6;
    std::uint64_t seed = 42;
    std::string out;
    std::string format = "json";
    long long steps = 1000000;
    std::string points;
    std::string in;
    bool det = false;
    int window = 30;

    bool r_given = false;
    bool alpha_given = false;
};

GridSpec parse_grid(const std::string& s) {
    GridSpec g;
    if (std::sscanf(s.c_str(), "%lf:%lf:%d,%lf:%lf:%d", &g.tau_min, &g.tau_max,
                    &g.n_tau, &g.chi_min, &g.chi_max, &g.n_chi) != 6)
        throw CLI::ValidationError("--grid", "expected tmin:tmax:n,cmin:cmax:n");
    if (g.n_tau < 2 || g.n_chi < 2)
        throw CLI::ValidationError("--grid", "resolutions must be >= 2");
    return g;
}

std::string config_header(const std::string& sub, const Opts& o) {
    std::ostringstream os;
    os << "schurproc " << sub << " q=" << o.q;
    if (o.alpha_given) os << " alpha=" << o.alpha;
    os << " cutoff=" << o.cutoff << " box=" << o.box[0] << "," << o.box[1] << ","
       << o.box[2] << " grid=" << o.grid << " tol=" << o.tol
       << " seed=" << o.seed << " steps=" << o.steps << " format=" << o.format;
    return os.str();
}

void emit(const Opts& o, const std::string& body) {
    if (o.out.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + o.out);
    f << body;
}

// Apply the JSON config file (if any) before flag parsing; flags win.
void apply_config(const std::string& path, Opts& o) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open config file: " + path);
    json c = json::parse(f);
    if (c.contains("q")) o.q = c["q"].get<double>();
    if (c.contains("r")) {
        o.r = c["r"].get<double>();
        o.r_given = true;
    }
    if (c.contains("alpha")) {
        o.alpha = c["alpha"].get<double>();
        o.alpha_given = true;
    }
    if (c.contains("cutoff")) o.cutoff = c["cutoff"].get<long long>();
    if (c.contains("box")) o.box = c["box"].get<std::vector<int>>();
    if (c.contains("grid")) o.grid = c["grid"].get<std::string>();
    if (c.contains("tol")) o.tol = c["tol"].get<double>();
    if (c.contains("seed")) o.seed = c["seed"].get<std::uint64_t>();
    if (c.contains("out")) o.out = c["out"].get<std::string>();
    if (c.contains("format")) o.format = c["format"].get<std::string>();
    if (c.contains("steps")) o.steps = c["steps"].get<long long>();
    if (c.contains("points")) o.points = c["points"].get<std::string>();
    if (c.contains("in")) o.in = c["in"].get<std::string>();
    if (c.contains("det")) o.det = c["det"].get<bool>();
    if (c.contains("window")) o.window = c["window"].get<int>();
}

std::vector<long long> mcmahon_counts(long long n) {
    std::vector<long long> c(static_cast<std::size_t>(n) + 1, 0);
    c[0] = 1;
    for (long long k = 1; k <= n; ++k)
        for (long long rep = 0; rep < k; ++rep)
            for (long long v = k; v <= n; ++v)
                c[static_cast<std::size_t>(v)] += c[static_cast<std::size_t>(v - k)];
    return c;
}

// ---- verify -----------------------------------------------------------------

int cmd_verify(const Opts& o) {
    struct Suite {
        std::string name;
        bool pass;
        std::string detail;
    };
    std::vector<Suite> suites;

    auto p = mq_params(o.q, static_cast<int>(o.cutoff));
    auto ens = enumerate_configs(p, o.cutoff);
    if (ens.tail_bound > 0.1)
        std::cerr << "warning: enumeration tail bound " << ens.tail_bound
                  << " is large; raise --cutoff or lower --q, truncation may "
                     "dominate the comparisons\n";

    {
        auto expect = mcmahon_counts(o.cutoff);
        std::map<long long, long long> counts;
        for (const auto& [cfg, w] : ens.configs) ++counts[cfg.total_size()];
        bool ok = true;
        for (long long n = 0; n <= o.cutoff; ++n)
            ok = ok && counts[n] == expect[static_cast<std::size_t>(n)];
        suites.push_back({"mcmahon counts", ok,
                          "volumes 0.." + std::to_string(o.cutoff)});
    }

    {
        QuadratureSpec quad;
        quad.tol = std::min(o.tol, 1e-8);
        double worst = 0.0;
        for (const TilePoint& tp :
             {TilePoint{0, 1}, TilePoint{0, -1}, TilePoint{1, 0}, TilePoint{-1, -2}}) {
            double bf = correlation_bruteforce(std::vector<TilePoint>{tp}, p, o.cutoff);
            double kv = kernel_3d(tp, tp, o.q, quad).value;
            worst = std::max(worst, std::abs(bf - kv));
        }
        bool ok = worst <= std::max(o.tol, 1e-5);
        char buf[64];
        std::snprintf(buf, sizeof buf, "max diff %.2e", worst);
        suites.push_back({"kernel vs bruteforce", ok, buf});
    }

    {
        BulkPoint b{0.5, 0.2};
        auto cd = critical_points(b);
        double worst = 0.0;
        for (int k = -2; k <= 2; ++k)
            for (int l = -2; l <= 2; ++l)
                worst = std::max(
                    worst, std::abs(beta_double_integral(k, l, b, 1e-9) -
                                    incomplete_beta(k, l, cd.z_star, k >= 0)));
        char buf[64];
        std::snprintf(buf, sizeof buf, "max diff %.2e", worst);
        suites.push_back({"incomplete beta identity", worst <= 1e-6, buf});
    }

    {
        auto restricted = restrict_times(p, {-1, 0, 1});
        std::map<std::tuple<Partition, Partition, Partition>, double> grouped;
        for (const auto& [cfg, w] : ens.configs)
            grouped[{cfg.slice(-1), cfg.slice(0), cfg.slice(1)}] += w;
        double worst = 0.0;
        for (const auto& [key, w] : grouped) {
            SliceSequence rs;
            rs.set_slice(0, std::get<0>(key));
            rs.set_slice(1, std::get<1>(key));
            rs.set_slice(2, std::get<2>(key));
            worst = std::max(worst, std::abs(w - config_weight(rs, restricted)));
        }
        bool ok = worst <= std::max(o.tol, 1e-6);
        char buf[64];
        std::snprintf(buf, sizeof buf, "max diff %.2e", worst);
        suites.push_back({"restriction consistency", ok, buf});
    }

    {
        const double q = 0.5;
        std::map<PlanePartition, double> exact;
        double z = 0.0;
        // 2x2x2 box states by direct height enumeration
        for (int a = 0; a <= 2; ++a)
            for (int b = 0; b <= a; ++b)
                for (int c = 0; c <= a; ++c)
                    for (int d = 0; d <= std::min(b, c); ++d) {
                        std::vector<std::vector<int>> rows;
                        if (a > 0) rows = {{a, b}, {c, d}};
                        PlanePartition pi(rows);
                        double w = std::pow(q, a + b + c + d);
                        exact[pi] = w;
                        z += w;
                    }
        BoxSampler s(q, 2, 2, 2, o.seed);
        std::map<std::tuple<int, int, int, int>, long long> counts;
        const long long steps = 200000;
        for (long long k = 0; k < steps; ++k) {
            s.step();
            ++counts[{s.height(1, 1), s.height(1, 2), s.height(2, 1),
                      s.height(2, 2)}];
        }
        double tv = 0.0;
        for (const auto& [pi, w] : exact) {
            auto key = std::make_tuple(pi.at(1, 1), pi.at(1, 2), pi.at(2, 1),
                                       pi.at(2, 2));
            tv += std::abs(static_cast<double>(counts[key]) / steps - w / z);
        }
        tv /= 2.0;
        char buf[64];
        std::snprintf(buf, sizeof buf, "TV %.4f", tv);
        suites.push_back({"sampler total variation", tv <= 0.03, buf});
    }

    std::cout << "# " << config_header("verify", o) << "\n";
    bool all = true;
    for (const auto& s : suites) {
        std::printf("%-28s %s  %s\n", s.name.c_str(),
                    s.pass ? "PASS" : "FAIL", s.detail.c_str());
        all = all && s.pass;
    }
    if (!all) {
        for (const auto& s : suites)
            if (!s.pass) {
                std::cerr << "first failing suite: " << s.name << "\n";
                break;
            }
        return 1;
    }
    return 0;
}

// ---- kernel -----------------------------------------------------------------

json quad_record(const json& query, const QuadResult& r) {
    return {{"query", query},
            {"value", r.value},
            {"N_used", r.nodes_used},
            {"est_error", r.est_error}};
}

int cmd_kernel(const Opts& o) {
    QuadratureSpec quad;
    quad.tol = o.tol;
    json outj;
    outj["config"] = config_header("kernel", o);
    outj["records"] = json::array();

    if (o.alpha_given) {
        // Plancherel mode: points are doubled half-integers "x2;x2;..."
        std::vector<int> xs;
        std::stringstream ss(o.points);
        std::string tok;
        while (std::getline(ss, tok, ';'))
            if (!tok.empty()) xs.push_back(std::stoi(tok));
        if (xs.empty()) throw CLI::ValidationError("--points", "no points given");
        if (o.det) {
            std::vector<std::vector<double>> K(xs.size(),
                                               std::vector<double>(xs.size()));
            for (std::size_t i = 0; i < xs.size(); ++i)
                for (std::size_t j = 0; j < xs.size(); ++j)
                    K[i][j] = kernel_planch(xs[i], xs[j], o.alpha, quad).value;
            outj["det"] = correlation_det(
                xs.size(), [&](std::size_t i, std::size_t j) { return K[i][j]; });
        } else {
            for (int x2 : xs) {
                try {
                    outj["records"].push_back(
                        quad_record(json::array({x2, x2}),
                                    kernel_planch(x2, x2, o.alpha, quad)));
                } catch (const std::exception& e) {
                    outj["records"].push_back(
                        {{"query", json::array({x2, x2})}, {"error", e.what()}});
                }
            }
        }
        emit(o, outj.dump(2) + "\n");
        return 0;
    }

    if (!o.in.empty()) {
        // batch point-frame queries "t1 x1_2 t2 x2_2", one per line
        auto p = mq_params(o.q, o.window);
        std::ifstream f(o.in);
        if (!f) throw std::runtime_error("cannot open query file: " + o.in);
        KernelQuery kq;
        while (f >> kq.t1 >> kq.x1_2 >> kq.t2 >> kq.x2_2) {
            json query = json::array({kq.t1, kq.x1_2, kq.t2, kq.x2_2});
            try {
                outj["records"].push_back(quad_record(query, kernel_entry(p, kq, quad)));
            } catch (const std::exception& e) {
                outj["records"].push_back({{"query", query}, {"error", e.what()}});
            }
        }
        emit(o, outj.dump(2) + "\n");
        return 0;
    }

    // tile-frame points "t,h2;t,h2;..." against the closed-form M_q kernel
    std::vector<TilePoint> pts;
    std::stringstream ss(o.points);
    std::string tok;
    while (std::getline(ss, tok, ';')) {
        TilePoint tp;
        if (std::sscanf(tok.c_str(), "%d,%d", &tp.t, &tp.h2) != 2)
            throw CLI::ValidationError("--points", "expected t,h2;t,h2;...");
        pts.push_back(tp);
    }
    if (pts.empty()) throw CLI::ValidationError("--points", "no points given");
    if (o.det) {
        std::vector<std::vector<double>> K(pts.size(),
                                           std::vector<double>(pts.size()));
        for (std::size_t i = 0; i < pts.size(); ++i)
            for (std::size_t j = 0; j < pts.size(); ++j)
                K[i][j] = kernel_3d(pts[i], pts[j], o.q, quad).value;
        outj["det"] = correlation_det(
            pts.size(), [&](std::size_t i, std::size_t j) { return K[i][j]; });
    } else {
        for (const auto& tp : pts) {
            json query = json::array({tp.t, tp.h2});
            try {
                outj["records"].push_back(
                    quad_record(query, kernel_3d(tp, tp, o.q, quad)));
            } catch (const std::exception& e) {
                outj["records"].push_back({{"query", query}, {"error", e.what()}});
            }
        }
    }
    emit(o, outj.dump(2) + "\n");
    return 0;
}

// ---- density / limit-shape ---------------------------------------------------

int cmd_density(const Opts& o) {
    auto g = parse_grid(o.grid);
    auto dg = density_grid(g);
    std::string header = config_header("density", o);
    if (o.format == "svg")
        emit(o, density_svg(dg, header));
    else
        emit(o, density_csv(dg, header));
    return 0;
}

int cmd_limit_shape(const Opts& o) {
    auto g = parse_grid(o.grid);
    auto mesh = shape_mesh(g, std::min(o.tol, 1e-8));
    emit(o, shape_csv(mesh, config_header("limit-shape", o)));
    return 0;
}

// ---- sample -------------------------------------------------------------------

int cmd_sample(const Opts& o) {
    if (o.box.size() != 3)
        throw CLI::ValidationError("--box", "expected a,b,c");
    PlanePartition pi =
        mcmc_sample(o.q, o.box[0], o.box[1], o.box[2], o.steps, o.seed);
    std::string header = config_header("sample", o);
    if (o.format == "svg") {
        emit(o, tiling_svg(pi, std::max(o.box[0], o.box[1]), header));
    } else if (o.format == "csv") {
        // empirical horizontal-tile indicator per (tau, chi) cell
        double r = -std::log(o.q);
        auto pc = point_config(diagonal_slices(pi));
        int bound = std::max(o.box[0], o.box[1]);
        std::ostringstream os;
        os.precision(10);
        os << "# " << header << "\n";
        os << "t,h2,tau,chi,occupied\n";
        for (int t = -bound + 1; t < bound; ++t)
            for (int h2 = -2 * bound; h2 <= 2 * o.box[2]; ++h2) {
                TilePoint tp{t, h2};
                if (!valid_tile_parity(tp)) continue;
                os << t << "," << h2 << "," << r * t << "," << r * h2 / 2.0
                   << "," << (tile_contains(pc, tp) ? 1 : 0) << "\n";
            }
        emit(o, os.str());
    } else {
        json outj;
        outj["config"] = header;
        outj["volume"] = pi.volume();
        outj["sample"] = json::parse(to_json(pi));
        emit(o, outj.dump(2) + "\n");
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    Opts o;

    // config file first, flags override
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--config") {
            try {
                apply_config(argv[i + 1], o);
            } catch (const std::exception& e) {
                std::cerr << "error: " << e.what() << "\n";
                return 2;
            }
        }

    CLI::App app{"Schur process toolkit: exact kernels, densities, limit shapes, sampling"};
    app.require_subcommand(1);
    std::string config_path;
    app.add_option("--config", config_path, "JSON config file; flags override");

    auto add_common = [&](CLI::App* sub, bool with_alpha) {
        sub->add_option("--config", config_path, "JSON config file; flags override");
        auto* oq = sub->add_option("--q", o.q, "measure parameter q in (0,1)");
        auto* orr = sub->add_option("--r", o.r, "rate r > 0, sets q = exp(-r)");
        oq->excludes(orr);
        orr->excludes(oq);
        if (with_alpha)
            sub->add_option("--alpha", o.alpha, "poissonized Plancherel parameter");
        sub->add_option("--cutoff", o.cutoff, "enumeration volume cutoff");
        sub->add_option("--box", o.box, "box sides a,b,c")->delimiter(',')->expected(3);
        sub->add_option("--grid", o.grid, "tmin:tmax:n,cmin:cmax:n");
        sub->add_option("--tol", o.tol, "quadrature tolerance");
        sub->add_option("--seed", o.seed, "RNG seed");
        sub->add_option("--out", o.out, "output path (default stdout)");
        sub->add_option("--format", o.format, "output format")
            ->check(CLI::IsMember({"json", "csv", "svg"}));
        sub->add_option("--steps", o.steps, "Metropolis step count");
        return std::make_pair(orr, with_alpha ? sub->get_option("--alpha") : nullptr);
    };

    auto* verify = app.add_subcommand("verify", "run the oracle suites");
    auto [vr, va] = add_common(verify, false);

    auto* kernel = app.add_subcommand("kernel", "evaluate correlation kernels");
    auto [kr, ka] = add_common(kernel, true);
    kernel->add_option("--points", o.points,
                       "tile points t,h2;... (or x2;... with --alpha)");
    kernel->add_option("--in", o.in, "batch file of point-frame queries");
    kernel->add_flag("--det", o.det, "emit the correlation determinant");
    kernel->add_option("--window", o.window, "transition window half-width M");

    auto* density = app.add_subcommand("density", "tile density over a grid");
    auto [dr, da] = add_common(density, false);

    auto* shape = app.add_subcommand("limit-shape", "limit shape mesh");
    auto [sr, sa] = add_common(shape, false);

    auto* sample = app.add_subcommand("sample", "MCMC sample in a box");
    auto [mr, ma] = add_common(sample, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    o.r_given = o.r_given || vr->count() || kr->count() || dr->count() ||
                sr->count() || mr->count();
    o.alpha_given = o.alpha_given || (ka && ka->count());
    if (o.r_given) o.q = std::exp(-o.r);
    if (!(o.q > 0.0 && o.q < 1.0)) {
        std::cerr << "error: q must lie in (0,1)\n";
        return 2;
    }

    try {
        if (*verify) return cmd_verify(o);
        if (*kernel) return cmd_kernel(o);
        if (*density) return cmd_density(o);
        if (*shape) return cmd_limit_shape(o);
        if (*sample) return cmd_sample(o);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
