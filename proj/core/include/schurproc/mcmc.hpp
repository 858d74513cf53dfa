#pragma once

#include <cstdint>
#include <vector>

#include "schurproc/plane_partition.hpp"

namespace schurproc {

/// Counter-based 64-bit generator (splitmix64): same seed gives the same
/// stream on every platform.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0,1).
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform in {0, ..., n-1} by rejection.
    std::uint64_t next_below(std::uint64_t n);

private:
    std::uint64_t state_;
};

/// Metropolis chain on plane partitions inside an a x b x c box with
/// stationary distribution proportional to q^|pi|. A step picks a uniform
/// cell (i,j) and a uniform direction; adding a cube is accepted with
/// probability q, removal always. The proposal is symmetric, so the
/// acceptance ratio for a transition and its reverse is exactly q^(dvolume).
class BoxSampler {
public:
    BoxSampler(double q, int a, int b, int c, std::uint64_t seed);

    void step();
    void run(long long steps);

    int height(int i, int j) const { return h_[idx(i, j)]; }  // 1-based
    long long volume() const { return volume_; }
    PlanePartition state() const;

    int box_a() const { return a_; }
    int box_b() const { return b_; }
    int box_c() const { return c_; }

private:
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(b_) +
               static_cast<std::size_t>(j - 1);
    }
    bool can_add(int i, int j) const;
    bool can_remove(int i, int j) const;

    double q_;
    int a_, b_, c_;
    std::vector<int> h_;
    long long volume_ = 0;
    SplitMix64 rng_;
};

/// Final state of the chain after `steps` Metropolis steps from the empty
/// plane partition.
PlanePartition mcmc_sample(double q, int a, int b, int c, long long steps,
                           std::uint64_t seed);

}  // namespace schurproc
