#pragma once

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "schurproc/plane_partition.hpp"
#include "schurproc/schur.hpp"

namespace schurproc {

/// Parameters of a Schur process: transition specializations phi[m] keyed by
/// the doubled half-integer time 2m (an odd integer). Outside the stored keys
/// phi[m] is the trivial pair.
struct SchurProcessParams {
    std::map<int, SpecPair> phi;

    /// Doubled times of the first and last nontrivial transition; {1, -1}
    /// when empty.
    std::pair<int, int> window2() const;

    /// Integer times that can carry a nonempty slice: the open interior of
    /// the transition window. Returns {0, -1} when fewer than two transitions.
    std::pair<int, int> slice_times() const;

    const SpecPair& pair_at(int m2) const;
};

/// Unnormalized weight prod_m S_{phi[m]}(lambda(m-1/2), lambda(m+1/2)).
/// Slices outside the transition window force the weight to 0 unless empty.
double config_weight(const SliceSequence& s, const SchurProcessParams& p);

/// Z = prod_{m1 < m2} exp(sum_k k (log phi[m1])_k (log phi[m2])_{-k}),
/// truncated at order K with the tail bound enforced by commutation_constant.
double partition_function(const SchurProcessParams& p, int K);

/// phi[m] = GeomPole(q^{|m|}), plus side for m < 0 and minus side for m > 0,
/// over half-integers |m| <= M - 1/2.
SchurProcessParams mq_params(double q, int M);

/// Same shape with exponent V(m) in place of |m|; V takes the half-integer m.
SchurProcessParams anisotropic_params(double q,
                                      const std::function<double(double)>& V,
                                      int M);

/// phi[-1/2] = Exp(sqrt(alpha)) plus side, phi[+1/2] = Exp(sqrt(alpha)) minus
/// side; only lambda(0) is nontrivial.
SchurProcessParams plancherel_params(double alpha);

/// Restriction to an increasing list of times: the result is a Schur process
/// on times 0..n-1 whose transition l+1/2 concatenates all phi[m] with
/// times[l] < m < times[l+1] (boundaries gather everything beyond).
SchurProcessParams restrict_times(const SchurProcessParams& p,
                                  const std::vector<int>& times);

/// Unnormalized marginal s_lambda(prod_{m<t} phi+[m]) s_lambda(prod_{m>t} phi-[m]).
double marginal_weight(const Partition& lambda, int t,
                       const SchurProcessParams& p);

/// Streaming enumeration of all configurations with sum_t |lambda(t)| <= cutoff.
/// The visitor receives the slices for integer times tlo..tlo+slices.size()-1
/// (trailing slices may be empty) and the unnormalized weight.
using ConfigVisitor =
    std::function<void(const std::vector<Partition>& slices, int tlo, double w)>;
void for_each_config(const SchurProcessParams& p, long long cutoff,
                     const ConfigVisitor& visit);

struct BoxedEnsemble {
    SchurProcessParams params;
    long long volume_cutoff = 0;
    std::vector<std::pair<SliceSequence, double>> configs;
    double total_weight = 0.0;
    double tail_bound = 0.0;  // a_max^(cutoff+1) * count, a_max over factors
};

/// Materialized ensemble; throws when the configuration count exceeds 1e7.
BoxedEnsemble enumerate_configs(const SchurProcessParams& p, long long cutoff);

/// P(U subset of the point configuration) within the cutoff ensemble,
/// U given as (t, 2x) point-frame pairs with x a half-integer.
double correlation_bruteforce(const std::vector<std::pair<int, int>>& points,
                              const SchurProcessParams& p, long long cutoff);

/// Same in the tile frame (t, h) with x = h + |t|/2.
double correlation_bruteforce(const std::vector<TilePoint>& tiles,
                              const SchurProcessParams& p, long long cutoff);

/// E|pi| = sum_{n>=1} n^2 q^n / (1 - q^n), summed until the tail is < 1e-12.
double expected_volume(double q);

}  // namespace schurproc
