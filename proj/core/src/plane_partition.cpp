#include "schurproc/plane_partition.hpp"

#include <algorithm>

namespace schurproc {

PlanePartition::PlanePartition(std::vector<std::vector<int>> rows)
    : rows_(std::move(rows)) {
    // strip trailing zeros per row, then empty trailing rows
    for (auto& r : rows_)
        while (!r.empty() && r.back() == 0) r.pop_back();
    while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();

    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const auto& r = rows_[i];
        for (std::size_t j = 0; j < r.size(); ++j) {
            if (r[j] < 0)
                throw std::invalid_argument("PlanePartition: negative entry");
            if (j > 0 && r[j] > r[j - 1])
                throw std::invalid_argument("PlanePartition: row not weakly decreasing");
            if (i > 0 && r[j] > at(i, j + 1))
                throw std::invalid_argument("PlanePartition: column not weakly decreasing");
        }
        if (i > 0 && r.size() > rows_[i - 1].size())
            throw std::invalid_argument("PlanePartition: column not weakly decreasing");
    }
}

int PlanePartition::at(std::size_t i, std::size_t j) const {
    if (i < 1 || j < 1) throw std::out_of_range("PlanePartition::at: 1-based indices");
    if (i > rows_.size()) return 0;
    const auto& r = rows_[i - 1];
    return j <= r.size() ? r[j - 1] : 0;
}

std::size_t PlanePartition::col_count() const {
    return rows_.empty() ? 0 : rows_.front().size();
}

long long PlanePartition::volume() const {
    long long v = 0;
    for (const auto& r : rows_)
        for (int e : r) v += e;
    return v;
}

SliceSequence::SliceSequence(std::map<int, Partition> slices)
    : slices_(std::move(slices)) {
    for (auto it = slices_.begin(); it != slices_.end();)
        it = it->second.empty() ? slices_.erase(it) : std::next(it);
}

const Partition& SliceSequence::slice(int t) const {
    static const Partition kEmpty;
    auto it = slices_.find(t);
    return it == slices_.end() ? kEmpty : it->second;
}

void SliceSequence::set_slice(int t, Partition p) {
    if (p.empty())
        slices_.erase(t);
    else
        slices_[t] = std::move(p);
}

std::pair<int, int> SliceSequence::support() const {
    if (slices_.empty()) return {0, -1};
    return {slices_.begin()->first, slices_.rbegin()->first};
}

long long SliceSequence::total_size() const {
    long long v = 0;
    for (const auto& [t, p] : slices_) v += p.sum();
    return v;
}

bool valid_tile_parity(const TilePoint& p) {
    // h + (t+1)/2 integral  <=>  2h + t + 1 even
    return ((p.h2 + p.t + 1) & 1) == 0;
}

SliceSequence diagonal_slices(const PlanePartition& pi) {
    SliceSequence s;
    int n = static_cast<int>(pi.row_count());
    int m = static_cast<int>(pi.col_count());
    for (int t = -(n - 1); t <= m - 1; ++t) {
        std::vector<int> parts;
        for (std::size_t i = (t >= 0 ? 1 : 1 - t);; ++i) {
            int v = pi.at(i, static_cast<std::size_t>(static_cast<int>(i) + t));
            if (v == 0) break;
            parts.push_back(v);
        }
        s.set_slice(t, Partition(std::move(parts)));
    }
    return s;
}

PlanePartition from_slices(const SliceSequence& s) {
    auto [lo, hi] = s.support();
    if (lo > hi) return PlanePartition{};
    // validate the chain, including the boundary transitions to empty slices
    for (int t = lo - 1; t <= hi; ++t) {
        const Partition& a = s.slice(t);
        const Partition& b = s.slice(t + 1);
        bool ok = (t < 0) ? interlaces(b, a) : interlaces(a, b);
        if (!ok)
            throw interlacing_error(
                t, "from_slices: interlacing fails between t=" + std::to_string(t) +
                       " and t=" + std::to_string(t + 1));
    }
    std::vector<std::vector<int>> rows;
    for (std::size_t i = 1;; ++i) {
        std::vector<int> row;
        for (std::size_t j = 1;; ++j) {
            int t = static_cast<int>(j) - static_cast<int>(i);
            int v = s.slice(t).part(std::min(i, j) - 1);
            if (v == 0) break;
            row.push_back(v);
        }
        if (row.empty()) break;
        rows.push_back(std::move(row));
    }
    return PlanePartition(std::move(rows));
}

PointConfig point_config(const SliceSequence& s) { return PointConfig(s); }

bool slice_contains(const Partition& lam, int x2) {
    if ((x2 & 1) == 0)
        throw std::invalid_argument("slice_contains: x must be a half-integer");
    int n = static_cast<int>(lam.rows());
    for (int i = 1; i <= n; ++i)
        if (x2 == 2 * lam.part(i - 1) - 2 * i + 1) return true;
    // tail: i > n gives x = -i + 1/2, i.e. every x <= -(n+1) + 1/2
    return x2 <= -2 * (n + 1) + 1;
}

bool PointConfig::contains(int t, int x2) const {
    return slice_contains(slices_.slice(t), x2);
}

std::vector<int> PointConfig::column_above(int t, int x2_min) const {
    const Partition& lam = slices_.slice(t);
    std::vector<int> out;
    for (int i = 1;; ++i) {
        int x2 = 2 * lam.part(i - 1) - 2 * i + 1;
        if (x2 < x2_min) break;
        out.push_back(x2);
    }
    return out;
}

bool tile_contains(const PointConfig& pc, const TilePoint& p) {
    if (!valid_tile_parity(p))
        throw std::invalid_argument("tile_contains: parity violation");
    return pc.contains(p.t, p.h2 + std::abs(p.t));
}

std::vector<TilePoint> tile_centers(const PlanePartition& pi, int bound) {
    std::vector<TilePoint> out;
    out.reserve(static_cast<std::size_t>(bound) * bound);
    for (int i = 1; i <= bound; ++i)
        for (int j = 1; j <= bound; ++j) {
            int v = pi.at(i, j);
            out.push_back(TilePoint{j - i, 2 * v - (i + j - 1)});
        }
    return out;
}

}  // namespace schurproc
