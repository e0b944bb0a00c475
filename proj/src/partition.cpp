#include "wreathmac/partition.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace wreathmac {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::domain_error("Partition: parts must be positive");
        if (i && parts_[i - 1] < parts_[i]) throw std::domain_error("Partition: parts must weakly decrease");
    }
}

int Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool Partition::contains(const Cell& c) const {
    return c.a >= 0 && c.b >= 0 && c.a < part(c.b);
}

std::vector<Cell> Partition::cells() const {
    std::vector<Cell> out;
    for (int b = 0; b < length(); ++b)
        for (int a = 0; a < parts_[b]; ++a) out.push_back({a, b});
    return out;
}

Partition Partition::transpose() const {
    std::vector<int> t;
    if (parts_.empty()) return Partition();
    t.resize(parts_[0], 0);
    for (int p : parts_)
        for (int a = 0; a < p; ++a) ++t[a];
    return Partition(std::move(t));
}

HookData Partition::hook_data(const Cell& c) const {
    if (!contains(c)) throw CellOutsideError("hook_data: cell outside diagram");
    HookData h;
    h.arm = part(c.b) - c.a - 1;
    h.leg = 0;
    for (int b = c.b + 1; b < length(); ++b)
        if (parts_[b] > c.a) ++h.leg;
    h.hook = 1 + h.arm + h.leg;
    return h;
}

long Partition::n_stat() const {
    long n = 0;
    for (size_t i = 0; i < parts_.size(); ++i) n += static_cast<long>(i) * parts_[i];
    return n;
}

Int Partition::num_standard_tableaux() const {
    Int fact(1);
    for (int i = 2; i <= size(); ++i) fact *= i;
    Int hooks(1);
    for (const Cell& c : cells()) hooks *= hook_data(c).hook;
    return fact / hooks;
}

Int Partition::z() const {
    Int z(1);
    std::map<int, int> mult;
    for (int p : parts_) ++mult[p];
    for (auto [v, m] : mult) {
        for (int i = 0; i < m; ++i) z *= v;
        for (int i = 2; i <= m; ++i) z *= i;
    }
    return z;
}

std::vector<Cell> Partition::addable(int r, int i) const {
    std::vector<Cell> out;
    for (int b = 0; b <= length(); ++b) {
        int width = part(b);
        int above = b == 0 ? width + 1 : part(b - 1);
        if (b == 0 || width < above) {
            Cell c{width, b};
            if (r <= 0 || cell_residue(c, r) == i) out.push_back(c);
        }
    }
    return out;
}

std::vector<Cell> Partition::removable(int r, int i) const {
    std::vector<Cell> out;
    for (int b = 0; b < length(); ++b) {
        if (b + 1 < length() && parts_[b + 1] == parts_[b]) continue;
        Cell c{parts_[b] - 1, b};
        if (r <= 0 || cell_residue(c, r) == i) out.push_back(c);
    }
    return out;
}

bool Partition::dominates(const Partition& o) const {
    if (size() != o.size()) return false;
    long s1 = 0, s2 = 0;
    int n = std::max(length(), o.length());
    for (int i = 0; i < n; ++i) {
        s1 += part(i);
        s2 += o.part(i);
        if (s1 < s2) return false;
    }
    return true;
}

std::string Partition::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ",";
        os << parts_[i];
    }
    os << "]";
    return os.str();
}

Partition Partition::parse(const std::string& text) {
    std::vector<int> parts;
    size_t pos = 0;
    auto skip = [&] { while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos; };
    skip();
    if (pos >= text.size() || text[pos] != '[') throw ParseError("Partition: expected '[' in " + text);
    ++pos;
    skip();
    while (pos < text.size() && text[pos] != ']') {
        int v = 0;
        if (!std::isdigit(static_cast<unsigned char>(text[pos]))) throw ParseError("Partition: expected digit in " + text);
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) v = v * 10 + (text[pos++] - '0');
        parts.push_back(v);
        skip();
        if (pos < text.size() && text[pos] == ',') {
            ++pos;
            skip();
        }
    }
    if (pos >= text.size()) throw ParseError("Partition: missing ']' in " + text);
    return Partition(std::move(parts));
}

int cell_residue(const Cell& c, int r) {
    return static_cast<int>(imod(c.b - c.a, r));
}

const std::vector<Partition>& partitions_of(int n) {
    static std::mutex mu;
    static std::map<int, std::vector<Partition>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int maxpart) -> void {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    if (n >= 0) rec(rec, n, n == 0 ? 1 : n);
    return cache.emplace(n, std::move(out)).first->second;
}

}  // namespace wreathmac
