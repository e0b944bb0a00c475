#pragma once

#include <set>

#include "wreathmac/partition.hpp"

namespace wreathmac {

// Maya diagram / 1-runner abacus b : Z -> {0,1} with beads (0) far left and
// holes (1) far right, stored as a charged partition.  The border path of
// shape() is traced bottom-right to top-left, so the holes sit at positions
// charge + j - 1 - mu_j for j = 1, 2, ...
class MayaDiagram {
  public:
    MayaDiagram() = default;
    MayaDiagram(Partition shape, long charge) : shape_(std::move(shape)), charge_(charge) {}

    const Partition& shape() const { return shape_; }
    long charge() const { return charge_; }

    // b(i): true = hole, false = bead.
    bool hole_at(long i) const;
    // Positions of holes below `hi`, ascending (finite look at the diagram).
    std::vector<long> holes_below(long hi) const;

    // Durfee measure: common count in the charge balance.
    long durfee() const;

    // Recover the charged partition from an explicit hole set: positions in
    // `holes` are holes, everything < lo is a bead and everything >= hi a
    // hole.  Validates that this describes a Maya diagram.
    static MayaDiagram from_holes(const std::set<long>& holes, long lo, long hi);

    bool operator==(const MayaDiagram&) const = default;

  private:
    Partition shape_;
    long charge_ = 0;
};

}  // namespace wreathmac
