#pragma once

#include "wreathmac/partition.hpp"

namespace wreathmac {

// r-tuple of partitions indexed by I, component 0 first.
class MultiPartition {
  public:
    MultiPartition() = default;
    explicit MultiPartition(int r) : comps_(r) {}
    explicit MultiPartition(std::vector<Partition> comps) : comps_(std::move(comps)) {}

    int r() const { return static_cast<int>(comps_.size()); }
    const Partition& comp(int i) const { return comps_[imod(i, r())]; }
    Partition& comp(int i) { return comps_[imod(i, r())]; }
    const std::vector<Partition>& comps() const { return comps_; }

    int size() const;
    bool all_empty() const;

    // slot permutation: component i moves to slot u(i)
    MultiPartition permuted(const std::vector<int>& u) const;
    // reverse of the componentwise transpose (the * involution)
    MultiPartition star() const;
    MultiPartition transposed() const;  // componentwise transpose

    auto operator<=>(const MultiPartition&) const = default;

    std::string str() const;  // e.g. "[[1],[],[2]]"
    static MultiPartition parse(const std::string& text);

  private:
    std::vector<Partition> comps_;
};

// All multipartitions with r components and total size n; cached, order is
// deterministic (lexicographic in the component list).
const std::vector<MultiPartition>& multipartitions_of(int r, int n);

}  // namespace wreathmac
