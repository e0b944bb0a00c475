#pragma once

#include <compare>
#include <string>
#include <vector>

#include "wreathmac/basics.hpp"

namespace wreathmac {

// Cell (a,b) of a Young diagram: a = column index, b = row index, both >= 0.
struct Cell {
    int a = 0;
    int b = 0;
    auto operator<=>(const Cell&) const = default;
};

struct HookData {
    int arm = 0;
    int leg = 0;
    int hook = 0;
};

// Integer partition, parts weakly decreasing and positive.
class Partition {
  public:
    Partition() = default;
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int part(int i) const { return i < static_cast<int>(parts_.size()) ? parts_[i] : 0; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const;
    bool empty() const { return parts_.empty(); }

    bool contains(const Cell& c) const;
    std::vector<Cell> cells() const;
    Partition transpose() const;

    HookData hook_data(const Cell& c) const;  // throws CellOutsideError
    // n(mu) = sum_i (i-1) mu_i
    long n_stat() const;
    // number of standard Young tableaux (hook length formula)
    Int num_standard_tableaux() const;
    // z_mu = prod_i i^{m_i} m_i!
    Int z() const;

    // cells addable/removable; residue filter (b-a) mod r when r > 0, with
    // i the residue class (ignored when r <= 0).
    std::vector<Cell> addable(int r = 0, int i = 0) const;
    std::vector<Cell> removable(int r = 0, int i = 0) const;

    // dominance partial order; false when incomparable or sizes differ
    bool dominates(const Partition& o) const;

    auto operator<=>(const Partition&) const = default;

    std::string str() const;  // e.g. "[4,3,2,2]"
    static Partition parse(const std::string& text);

  private:
    std::vector<int> parts_;
};

int cell_residue(const Cell& c, int r);

// All partitions of n, in descending lexicographic order ((n) first, (1^n)
// last); this order refines dominance downward.  Cached.
const std::vector<Partition>& partitions_of(int n);

}  // namespace wreathmac
