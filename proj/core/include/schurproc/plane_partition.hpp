#pragma once

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "schurproc/partition.hpp"

namespace schurproc {

/// Plane partition: rows nonincreasing along both indices, finite total sum.
class PlanePartition {
public:
    PlanePartition() = default;

    /// Rows given top to bottom; validated for weak decrease in both directions.
    explicit PlanePartition(std::vector<std::vector<int>> rows);

    /// Entry pi_{ij} with 1-based indices; 0 outside the stored array.
    int at(std::size_t i, std::size_t j) const;

    std::size_t row_count() const { return rows_.size(); }
    std::size_t col_count() const;
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    bool empty() const { return rows_.empty(); }

    long long volume() const;

    auto operator<=>(const PlanePartition&) const = default;

private:
    std::vector<std::vector<int>> rows_;
};

/// Sequence of diagonal slices lambda(t), empty outside a finite window.
class SliceSequence {
public:
    SliceSequence() = default;
    explicit SliceSequence(std::map<int, Partition> slices);

    const Partition& slice(int t) const;
    void set_slice(int t, Partition p);

    /// Window [t_min, t_max] of nonempty slices; returns {0,-1} when all empty.
    std::pair<int, int> support() const;

    long long total_size() const;
    const std::map<int, Partition>& nonempty() const { return slices_; }

    auto operator<=>(const SliceSequence&) const = default;

private:
    std::map<int, Partition> slices_;  // nonempty slices only
};

/// Thrown by from_slices when the interlacing chain fails; `time` is the
/// first t whose transition t -> t+1 violates the chain.
class interlacing_error : public std::runtime_error {
public:
    interlacing_error(int time, const std::string& what)
        : std::runtime_error(what), time_(time) {}
    int time() const { return time_; }

private:
    int time_;
};

/// Center of a horizontal lozenge: (t, h) with h stored doubled; the parity
/// constraint is 2h + t odd, i.e. h + (t+1)/2 integral.
struct TilePoint {
    int t;
    int h2;  // 2h
    auto operator<=>(const TilePoint&) const = default;
};

bool valid_tile_parity(const TilePoint& p);

/// lambda(t)_i = pi_{i, t+i}.
SliceSequence diagonal_slices(const PlanePartition& pi);

/// Inverse of diagonal_slices; throws interlacing_error on invalid chains.
PlanePartition from_slices(const SliceSequence& s);

/// Point field S({lambda(t)}) on Z x (Z + 1/2): occupied sites are
/// (t, lambda(t)_i - i + 1/2), including the infinite filled tail.
class PointConfig {
public:
    PointConfig() = default;
    explicit PointConfig(SliceSequence slices) : slices_(std::move(slices)) {}

    /// Membership of (t, x) with x doubled (x2 odd).
    bool contains(int t, int x2) const;

    /// The finitely many occupied sites with x2 >= x2_min in column t.
    std::vector<int> column_above(int t, int x2_min) const;

    const SliceSequence& slices() const { return slices_; }

private:
    SliceSequence slices_;
};

PointConfig point_config(const SliceSequence& s);

/// Single-slice membership: x = lambda_i - i + 1/2 for some i >= 1 (x2 odd).
bool slice_contains(const Partition& lam, int x2);

/// Membership of a tile point in the horizontal-tile set S~(pi), via the
/// conversion (t,h) in S~(pi)  <=>  (t, h + |t|/2) in S({lambda(t)}).
bool tile_contains(const PointConfig& pc, const TilePoint& p);

/// Horizontal-tile centers {(j-i, pi_{ij} - (i+j-1)/2)} for 1 <= i,j <= bound.
/// Zero entries (floor tiles) are included; bound controls the rendered frame.
std::vector<TilePoint> tile_centers(const PlanePartition& pi, int bound);

}  // namespace schurproc
