#include "schurproc/mcmc.hpp"

#include <stdexcept>

namespace schurproc {

std::uint64_t SplitMix64::next_below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("next_below: n > 0 required");
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
        x = next();
    } while (x >= limit);
    return x % n;
}

BoxSampler::BoxSampler(double q, int a, int b, int c, std::uint64_t seed)
    : q_(q), a_(a), b_(b), c_(c),
      h_(static_cast<std::size_t>(a) * static_cast<std::size_t>(b), 0),
      rng_(seed) {
    if (q <= 0.0 || q >= 1.0)
        throw std::invalid_argument("BoxSampler: q in (0,1) required");
    if (a < 1 || b < 1 || c < 1)
        throw std::invalid_argument("BoxSampler: positive box required");
}

bool BoxSampler::can_add(int i, int j) const {
    int v = h_[idx(i, j)];
    if (v >= c_) return false;
    if (i > 1 && h_[idx(i - 1, j)] < v + 1) return false;
    if (j > 1 && h_[idx(i, j - 1)] < v + 1) return false;
    return true;
}

bool BoxSampler::can_remove(int i, int j) const {
    int v = h_[idx(i, j)];
    if (v <= 0) return false;
    if (i < a_ && h_[idx(i + 1, j)] > v - 1) return false;
    if (j < b_ && h_[idx(i, j + 1)] > v - 1) return false;
    return true;
}

void BoxSampler::step() {
    std::uint64_t cells = static_cast<std::uint64_t>(a_) * static_cast<std::uint64_t>(b_);
    std::uint64_t r = rng_.next_below(2 * cells);
    bool add = (r & 1) != 0;
    std::uint64_t cell = r >> 1;
    int i = static_cast<int>(cell / static_cast<std::uint64_t>(b_)) + 1;
    int j = static_cast<int>(cell % static_cast<std::uint64_t>(b_)) + 1;
    if (add) {
        if (!can_add(i, j)) return;
        if (rng_.next_double() < q_) {
            ++h_[idx(i, j)];
            ++volume_;
        }
    } else {
        if (!can_remove(i, j)) return;
        --h_[idx(i, j)];
        --volume_;
    }
}

void BoxSampler::run(long long steps) {
    for (long long s = 0; s < steps; ++s) step();
}

PlanePartition BoxSampler::state() const {
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(a_));
    for (int i = 1; i <= a_; ++i) {
        rows[static_cast<std::size_t>(i - 1)].resize(static_cast<std::size_t>(b_));
        for (int j = 1; j <= b_; ++j)
            rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
                h_[idx(i, j)];
    }
    return PlanePartition(std::move(rows));
}

PlanePartition mcmc_sample(double q, int a, int b, int c, long long steps,
                           std::uint64_t seed) {
    if (steps < 0) throw std::invalid_argument("mcmc_sample: steps >= 0 required");
    BoxSampler s(q, a, b, c, seed);
    s.run(steps);
    return s.state();
}

}  // namespace schurproc
