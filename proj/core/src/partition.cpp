#include "schurproc/partition.hpp"

#include <numeric>
#include <utility>

namespace schurproc {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0)
            throw std::invalid_argument("Partition: negative part");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

long long Partition::sum() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

std::string Partition::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    s += ")";
    return s;
}

bool interlaces(const Partition& lambda, const Partition& mu) {
    std::size_t n = std::max(lambda.rows(), mu.rows() + 1);
    for (std::size_t i = 0; i < n; ++i) {
        if (lambda.part(i) < mu.part(i)) return false;
        if (mu.part(i) < lambda.part(i + 1)) return false;
    }
    return true;
}

bool contains(const Partition& lambda, const Partition& mu) {
    for (std::size_t i = 0; i < mu.rows(); ++i)
        if (mu.part(i) > lambda.part(i)) return false;
    return true;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& acc,
                    const PartitionVisitor& visit) {
    visit(Partition(acc));
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        acc.push_back(p);
        partitions_rec(remaining - p, p, acc, visit);
        acc.pop_back();
    }
}

void subpartitions_rec(const Partition& shape, std::size_t i, int prev,
                       std::vector<int>& acc, const PartitionVisitor& visit) {
    if (i == shape.rows()) {
        visit(Partition(acc));
        return;
    }
    // Remaining rows may also be cut short: emit the current prefix too.
    visit(Partition(acc));
    int hi = std::min(shape.part(i), prev);
    for (int v = 1; v <= hi; ++v) {
        acc.push_back(v);
        subpartitions_rec(shape, i + 1, v, acc, visit);
        acc.pop_back();
    }
}

void above_rec(const Partition& mu, std::size_t i, int budget,
               std::vector<int>& acc, const PartitionVisitor& visit) {
    // Choosing lambda_i subject to lambda ≻ mu: mu_i <= lambda_i <= mu_{i-1},
    // with lambda_1 capped only by the volume budget.
    int lo = mu.part(i);
    int cap = (i == 0) ? lo + budget : std::min(mu.part(i - 1), lo + budget);
    if (lo == 0) {
        // Rows at or past the end of mu: lambda may stop here, or take one
        // more positive row (lambda_{i+1} <= mu_i = 0 forces termination).
        visit(Partition(acc));
        for (int v = 1; v <= cap; ++v) {
            acc.push_back(v);
            visit(Partition(acc));
            acc.pop_back();
        }
        return;
    }
    for (int v = lo; v <= cap; ++v) {
        acc.push_back(v);
        above_rec(mu, i + 1, budget - (v - lo), acc, visit);
        acc.pop_back();
    }
}

void below_rec(const Partition& mu, std::size_t i, std::vector<int>& acc,
               const PartitionVisitor& visit) {
    if (i >= mu.rows()) {
        visit(Partition(acc));
        return;
    }
    // mu ≻ lambda: mu_i >= lambda_i >= mu_{i+1}
    for (int v = mu.part(i + 1); v <= mu.part(i); ++v) {
        if (v == 0) {
            visit(Partition(acc));
            continue;
        }
        acc.push_back(v);
        below_rec(mu, i + 1, acc, visit);
        acc.pop_back();
    }
}

}  // namespace

void for_each_partition_up_to(int max_sum, const PartitionVisitor& visit) {
    if (max_sum < 0) return;
    std::vector<int> acc;
    partitions_rec(max_sum, max_sum, acc, visit);
}

void for_each_subpartition(const Partition& shape, const PartitionVisitor& visit) {
    std::vector<int> acc;
    if (shape.empty()) {
        visit(shape);
        return;
    }
    subpartitions_rec(shape, 0, shape.part(0), acc, visit);
}

void for_each_interlacing_above(const Partition& mu, int max_sum,
                                const PartitionVisitor& visit) {
    int budget = max_sum - static_cast<int>(mu.sum());
    if (budget < 0) return;
    std::vector<int> acc;
    above_rec(mu, 0, budget, acc, visit);
}

void for_each_interlacing_below(const Partition& mu, const PartitionVisitor& visit) {
    std::vector<int> acc;
    below_rec(mu, 0, acc, visit);
}

}  // namespace schurproc
