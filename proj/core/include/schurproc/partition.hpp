#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace schurproc {

/// Integer partition: weakly decreasing positive parts, trailing zeros dropped.
/// The empty partition is the default-constructed value.
class Partition {
public:
    Partition() = default;

    /// Validates weak decrease and nonnegativity; trailing zeros are stripped.
    explicit Partition(std::vector<int> parts);

    /// Part at 0-based index i; parts beyond the stored length are 0.
    int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    std::size_t rows() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    long long sum() const;

    const std::vector<int>& parts() const { return parts_; }

    auto operator<=>(const Partition&) const = default;

    std::string to_string() const;

private:
    std::vector<int> parts_;
};

/// lambda and mu interlace: lambda_1 >= mu_1 >= lambda_2 >= mu_2 >= ...
bool interlaces(const Partition& lambda, const Partition& mu);

/// mu_i <= lambda_i for all i (containment of Young diagrams).
bool contains(const Partition& lambda, const Partition& mu);

using PartitionVisitor = std::function<void(const Partition&)>;

/// All partitions with |lambda| <= max_sum.
void for_each_partition_up_to(int max_sum, const PartitionVisitor& visit);

/// All nu with nu_i <= shape_i (sub-partitions of a shape).
void for_each_subpartition(const Partition& shape, const PartitionVisitor& visit);

/// All lambda with lambda ≻ mu and |lambda| <= max_sum.
void for_each_interlacing_above(const Partition& mu, int max_sum,
                                const PartitionVisitor& visit);

/// All lambda with mu ≻ lambda (|lambda| <= |mu| automatically).
void for_each_interlacing_below(const Partition& mu, const PartitionVisitor& visit);

}  // namespace schurproc
