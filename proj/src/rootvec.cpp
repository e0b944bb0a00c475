#include "wreathmac/rootvec.hpp"

#include <numeric>
#include <sstream>

namespace wreathmac {

RootVec::RootVec(std::vector<long> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) throw std::domain_error("RootVec: empty");
    if (std::accumulate(coords_.begin(), coords_.end(), 0L) != 0)
        throw InvariantViolationError("RootVec: coordinates must sum to zero");
}

RootVec RootVec::simple(int r, int i) {
    if (i < 1 || i > r - 1) throw std::domain_error("RootVec::simple: index out of range");
    std::vector<long> c(r, 0);
    c[i - 1] = 1;
    c[i] = -1;
    return RootVec(std::move(c));
}

RootVec RootVec::from_simple_coords(int r, const std::vector<long>& n) {
    if (static_cast<int>(n.size()) != r - 1) throw SizeMismatchError("RootVec: expected r-1 simple coordinates");
    std::vector<long> c(r, 0);
    for (int j = 0; j < r; ++j) {
        long nj1 = (j + 1 <= r - 1) ? n[j] : 0;  // n_{j+1}
        long nj = (j >= 1) ? n[j - 1] : 0;       // n_j
        c[j] = nj1 - nj;
    }
    return RootVec(std::move(c));
}

std::vector<long> RootVec::simple_coords() const {
    // n_i = sum_{j<i} eps_j
    std::vector<long> n(r() - 1, 0);
    long acc = 0;
    for (int i = 1; i <= r() - 1; ++i) {
        acc += coords_[i - 1];
        n[i - 1] = acc;
    }
    return n;
}

RootVec RootVec::operator-() const {
    std::vector<long> c(coords_);
    for (auto& v : c) v = -v;
    return RootVec(std::move(c));
}

RootVec operator+(const RootVec& x, const RootVec& y) {
    if (x.r() != y.r()) throw SizeMismatchError("RootVec: mixed r");
    std::vector<long> c(x.coords_);
    for (int i = 0; i < x.r(); ++i) c[i] += y.coords_[i];
    return RootVec(std::move(c));
}

RootVec operator-(const RootVec& x, const RootVec& y) {
    return x + (-y);
}

RootVec RootVec::scaled(long k) const {
    std::vector<long> c(coords_);
    for (auto& v : c) v *= k;
    return RootVec(std::move(c));
}

RootVec RootVec::permuted(const std::vector<int>& u) const {
    std::vector<long> c(coords_.size(), 0);
    for (int i = 0; i < r(); ++i) c[u[i]] = coords_[i];
    return RootVec(std::move(c));
}

bool RootVec::is_zero() const {
    for (long v : coords_)
        if (v) return false;
    return true;
}

std::string RootVec::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < r(); ++i) {
        if (i) os << ",";
        os << coords_[i];
    }
    os << "]";
    return os.str();
}

}  // namespace wreathmac
