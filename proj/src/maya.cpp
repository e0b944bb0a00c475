#include "wreathmac/maya.hpp"

#include <algorithm>

namespace wreathmac {

bool MayaDiagram::hole_at(long i) const {
    // Holes are at charge + j - 1 - mu_j for j >= 1, strictly increasing in j.
    // Solve for j: the candidate j satisfies i = charge + j - 1 - mu_j.
    long len = shape_.length();
    if (i >= charge_ + len) return true;  // mu_j = 0 tail
    // search among j = 1..len
    for (long j = 1; j <= len; ++j)
        if (i == charge_ + j - 1 - shape_.parts()[j - 1]) return true;
    return false;
}

std::vector<long> MayaDiagram::holes_below(long hi) const {
    std::vector<long> out;
    for (long j = 1;; ++j) {
        long pos = charge_ + j - 1 - shape_.part(static_cast<int>(j - 1));
        if (pos >= hi) break;
        out.push_back(pos);
    }
    return out;
}

long MayaDiagram::durfee() const {
    // number of holes at positions < charge
    long d = 0;
    for (long pos : holes_below(charge_)) {
        (void)pos;
        ++d;
    }
    return d;
}

MayaDiagram MayaDiagram::from_holes(const std::set<long>& holes, long lo, long hi) {
    for (long h : holes)
        if (h < lo || h >= hi) throw InvariantViolationError("MayaDiagram: hole outside window");
    // charge c: #holes below c equals #beads at or above c.
    // Scan candidates inside the window.
    long nholes_below = 0;
    long charge = 0;
    bool found = false;
    for (long c = lo; c <= hi; ++c) {
        // beads >= c: positions in [c, hi) not in holes
        long beads_above = (hi - c) - static_cast<long>(std::distance(holes.lower_bound(c), holes.end()));
        if (nholes_below == beads_above) {
            charge = c;
            found = true;
            break;
        }
        if (holes.count(c)) ++nholes_below;
    }
    if (!found) throw InvariantViolationError("MayaDiagram: no balanced charge in window");
    // mu_j = charge + j - 1 - h_j over ascending holes, padded with the tail
    // hi, hi+1, ... of holes.
    std::vector<int> parts;
    long j = 1;
    for (long h : holes) {
        long p = charge + j - 1 - h;
        if (p < 0) throw InvariantViolationError("MayaDiagram: holes not consistent with a partition");
        if (p > 0) parts.push_back(static_cast<int>(p));
        ++j;
    }
    // tail holes at hi, hi+1, ... give parts charge + j - 1 - (hi + k); all
    // must be <= 0, which holds iff charge + j - 1 <= hi.
    if (charge + j - 1 - hi > 0) throw InvariantViolationError("MayaDiagram: window too small");
    return MayaDiagram(Partition(std::move(parts)), charge);
}

}  // namespace wreathmac
