#include "schurproc/process.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace schurproc {

std::pair<int, int> SchurProcessParams::window2() const {
    if (phi.empty()) return {1, -1};
    return {phi.begin()->first, phi.rbegin()->first};
}

std::pair<int, int> SchurProcessParams::slice_times() const {
    auto [lo2, hi2] = window2();
    if (lo2 >= hi2) return {0, -1};
    return {(lo2 + 1) / 2, (hi2 - 1) / 2};
}

const SpecPair& SchurProcessParams::pair_at(int m2) const {
    static const SpecPair kTrivial;
    auto it = phi.find(m2);
    return it == phi.end() ? kTrivial : it->second;
}

double config_weight(const SliceSequence& s, const SchurProcessParams& p) {
    auto [lo2, hi2] = p.window2();
    auto [slo, shi] = s.support();
    if (slo <= shi) {
        lo2 = std::min(lo2, 2 * slo - 1);
        hi2 = std::max(hi2, 2 * shi + 1);
    }
    double w = 1.0;
    for (int m2 = lo2; m2 <= hi2; m2 += 2) {
        w *= transition_weight(s.slice((m2 - 1) / 2), s.slice((m2 + 1) / 2),
                               p.pair_at(m2));
        if (w == 0.0) return 0.0;
    }
    return w;
}

double partition_function(const SchurProcessParams& p, int K) {
    double z = 1.0;
    for (auto i = p.phi.begin(); i != p.phi.end(); ++i) {
        if (i->second.plus.trivial()) continue;
        for (auto j = std::next(i); j != p.phi.end(); ++j) {
            if (j->second.minus.trivial()) continue;
            z *= commutation_constant(i->second.plus, j->second.minus, K);
        }
    }
    return z;
}

SchurProcessParams mq_params(double q, int M) {
    return anisotropic_params(q, [](double m) { return std::abs(m); }, M);
}

SchurProcessParams anisotropic_params(double q,
                                      const std::function<double(double)>& V,
                                      int M) {
    if (q <= 0.0 || q >= 1.0)
        throw std::invalid_argument("anisotropic_params: q in (0,1) required");
    if (M < 1) throw std::invalid_argument("anisotropic_params: M >= 1 required");
    SchurProcessParams p;
    for (int k = 1; k <= M; ++k) {
        int m2 = 2 * k - 1;
        double m = m2 / 2.0;
        p.phi[-m2].plus.add(Factor{FactorKind::geom_pole, std::pow(q, V(-m))});
        p.phi[m2].minus.add(Factor{FactorKind::geom_pole, std::pow(q, V(m))});
    }
    return p;
}

SchurProcessParams plancherel_params(double alpha) {
    if (alpha <= 0.0)
        throw std::invalid_argument("plancherel_params: alpha > 0 required");
    SchurProcessParams p;
    double c = std::sqrt(alpha);
    p.phi[-1].plus.add(Factor{FactorKind::exp, c});
    p.phi[1].minus.add(Factor{FactorKind::exp, c});
    return p;
}

SchurProcessParams restrict_times(const SchurProcessParams& p,
                                  const std::vector<int>& times) {
    if (times.empty())
        throw std::invalid_argument("restrict_times: nonempty time list required");
    for (std::size_t i = 1; i < times.size(); ++i)
        if (times[i] <= times[i - 1])
            throw std::invalid_argument("restrict_times: times must increase");

    int n = static_cast<int>(times.size());
    SchurProcessParams out;
    for (const auto& [m2, pr] : p.phi) {
        // slot index: number of selected times strictly below m
        int c = 0;
        while (c < n && 2 * times[c] < m2) ++c;
        int key = 2 * c - 1;
        if (auto it = out.phi.find(key); it != out.phi.end()) {
            it->second.plus = it->second.plus.concat(pr.plus);
            it->second.minus = it->second.minus.concat(pr.minus);
        } else {
            out.phi[key] = pr;
        }
    }
    return out;
}

double marginal_weight(const Partition& lambda, int t,
                       const SchurProcessParams& p) {
    Specialization left(Orientation::plus);
    Specialization right(Orientation::minus);
    for (const auto& [m2, pr] : p.phi) {
        if (m2 < 2 * t)
            left = left.concat(pr.plus);
        else if (m2 > 2 * t)
            right = right.concat(pr.minus);
    }
    return skew_schur(lambda, Partition{}, left) *
           skew_schur(lambda, Partition{}, right);
}

namespace {

// single one-sided geom_pole factor, the transitions of M_q
bool one_sided_geom(const SpecPair& pr, bool& plus_side) {
    const Specialization* s = nullptr;
    if (pr.minus.trivial() && !pr.plus.trivial()) {
        s = &pr.plus;
        plus_side = true;
    } else if (pr.plus.trivial() && !pr.minus.trivial()) {
        s = &pr.minus;
        plus_side = false;
    } else {
        return false;
    }
    return s->factors().size() == 1 &&
           s->factors().front().kind == FactorKind::geom_pole;
}

struct ConfigDfs {
    const SchurProcessParams& p;
    int tlo, thi;
    long long cutoff;
    const ConfigVisitor& visit;
    std::vector<Partition> slices;

    void rec(int t, const Partition& prev, long long used, double w) {
        if (t > thi) {
            double wf = w * transition_weight(prev, Partition{}, p.pair_at(2 * t - 1));
            if (wf != 0.0) visit(slices, tlo, wf);
            return;
        }
        const SpecPair& pr = p.pair_at(2 * t - 1);
        long long budget = cutoff - used;
        auto handle = [&](const Partition& cand) {
            if (cand.sum() > budget) return;
            double ws = transition_weight(prev, cand, pr);
            if (ws == 0.0) return;
            slices[static_cast<std::size_t>(t - tlo)] = cand;
            rec(t + 1, cand, used + cand.sum(), w * ws);
            slices[static_cast<std::size_t>(t - tlo)] = Partition{};
        };
        bool plus_side;
        if (one_sided_geom(pr, plus_side)) {
            if (plus_side)
                for_each_interlacing_above(prev, static_cast<int>(budget), handle);
            else
                for_each_interlacing_below(prev, handle);
        } else {
            for_each_partition_up_to(static_cast<int>(budget), handle);
        }
    }
};

}  // namespace

void for_each_config(const SchurProcessParams& p, long long cutoff,
                     const ConfigVisitor& visit) {
    if (cutoff < 0) return;
    auto [tlo, thi] = p.slice_times();
    if (tlo > thi) {
        std::vector<Partition> none;
        visit(none, 0, 1.0);
        return;
    }
    ConfigDfs dfs{p, tlo, thi, cutoff, visit,
                  std::vector<Partition>(static_cast<std::size_t>(thi - tlo + 1))};
    dfs.rec(tlo, Partition{}, 0, 1.0);
}

BoxedEnsemble enumerate_configs(const SchurProcessParams& p, long long cutoff) {
    BoxedEnsemble e;
    e.params = p;
    e.volume_cutoff = cutoff;
    for_each_config(p, cutoff, [&](const std::vector<Partition>& sl, int tlo,
                                   double w) {
        if (e.configs.size() >= 10'000'000)
            throw std::runtime_error("enumerate_configs: count exceeds 1e7");
        SliceSequence s;
        for (std::size_t i = 0; i < sl.size(); ++i)
            s.set_slice(tlo + static_cast<int>(i), sl[i]);
        e.total_weight += w;
        e.configs.emplace_back(std::move(s), w);
    });
    double a_max = 0.0;
    for (const auto& [m2, pr] : p.phi)
        a_max = std::max({a_max, pr.plus.max_abs_param(), pr.minus.max_abs_param()});
    e.tail_bound = std::pow(a_max, static_cast<double>(cutoff + 1)) *
                   static_cast<double>(e.configs.size());
    return e;
}

double correlation_bruteforce(const std::vector<std::pair<int, int>>& points,
                              const SchurProcessParams& p, long long cutoff) {
    double hit = 0.0, total = 0.0;
    for_each_config(p, cutoff, [&](const std::vector<Partition>& sl, int lo,
                                   double w) {
        total += w;
        for (const auto& [t, x2] : points) {
            static const Partition kEmpty;
            const Partition& lam = (t >= lo && t < lo + static_cast<int>(sl.size()))
                                       ? sl[static_cast<std::size_t>(t - lo)]
                                       : kEmpty;
            if (!slice_contains(lam, x2)) return;
        }
        hit += w;
    });
    if (total == 0.0) throw std::runtime_error("correlation_bruteforce: zero mass");
    return hit / total;
}

double correlation_bruteforce(const std::vector<TilePoint>& tiles,
                              const SchurProcessParams& p, long long cutoff) {
    std::vector<std::pair<int, int>> pts;
    pts.reserve(tiles.size());
    for (const TilePoint& q : tiles) {
        if (!valid_tile_parity(q))
            throw std::invalid_argument("correlation_bruteforce: parity violation");
        pts.emplace_back(q.t, q.h2 + std::abs(q.t));
    }
    return correlation_bruteforce(pts, p, cutoff);
}

double expected_volume(double q) {
    if (q <= 0.0 || q >= 1.0)
        throw std::invalid_argument("expected_volume: q in (0,1) required");
    double s = 0.0;
    for (long long n = 1;; ++n) {
        double qn = std::pow(q, static_cast<double>(n));
        double term = static_cast<double>(n) * static_cast<double>(n) * qn / (1.0 - qn);
        s += term;
        // remaining tail is bounded by term * sum_{j>=1} ((n+j)/n)^2 q^j
        if (term < 1e-13 * (1.0 - q) && n > 2) break;
    }
    return s;
}

}  // namespace schurproc
