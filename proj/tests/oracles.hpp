#pragma once

// Independent reference computations used to pin expected values in tests.

#include <cstdint>
#include <vector>

#include <schurproc/plane_partition.hpp>

namespace oracles {

// Coefficients of prod_{n=1..N} (1 - q^n)^{-n} up to q^N (McMahon's
// generating function for plane partitions by volume).
inline std::vector<std::int64_t> mcmahon_coeffs(int N) {
    std::vector<std::int64_t> c(static_cast<std::size_t>(N) + 1, 0);
    c[0] = 1;
    for (int n = 1; n <= N; ++n)
        for (int rep = 0; rep < n; ++rep)
            for (int k = n; k <= N; ++k)
                c[static_cast<std::size_t>(k)] += c[static_cast<std::size_t>(k - n)];
    return c;
}

// Schur polynomial of lambda in a single variable x: x^|lambda| if lambda has
// at most one row, else 0 (from expanding prod (1 - x y_i)^{-1} in one y).
inline double schur_one_variable(const schurproc::Partition& lambda, double x) {
    if (lambda.rows() > 1) return 0.0;
    double v = 1.0;
    for (long long i = 0; i < lambda.sum(); ++i) v *= x;
    return v;
}

// All plane partitions inside an a x b box with entries <= c, by recursion
// over cells in row-major order.
inline std::vector<schurproc::PlanePartition> enumerate_boxed(int a, int b, int c) {
    std::vector<schurproc::PlanePartition> out;
    std::vector<std::vector<int>> h(static_cast<std::size_t>(a),
                                    std::vector<int>(static_cast<std::size_t>(b), 0));
    auto rec = [&](auto&& self, int i, int j) -> void {
        if (i == a) {
            out.emplace_back(h);
            return;
        }
        int ni = (j == b - 1) ? i + 1 : i;
        int nj = (j == b - 1) ? 0 : j + 1;
        int hi = c;
        if (i > 0) hi = std::min(hi, h[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)]);
        if (j > 0) hi = std::min(hi, h[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)]);
        for (int v = 0; v <= hi; ++v) {
            h[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
            self(self, ni, nj);
        }
        h[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 0;
    };
    rec(rec, 0, 0);
    return out;
}

}  // namespace oracles
