#include "wreathmac/symtables.hpp"

#include <algorithm>
#include <mutex>

namespace wreathmac {

namespace {

Partition partition_from_beta(std::vector<long> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<long>());
    const long L = static_cast<long>(beta.size());
    std::vector<int> parts;
    for (long i = 0; i < L; ++i) {
        long p = beta[i] - (L - 1 - i);
        if (p > 0) parts.push_back(static_cast<int>(p));
    }
    return Partition(std::move(parts));
}

}  // namespace

long long sym_character(const Partition& lambda, const Partition& rho) {
    if (lambda.size() != rho.size()) throw SizeMismatchError("sym_character: |lambda| != |rho|");
    static std::mutex mu;
    static std::map<std::pair<Partition, Partition>, long long> cache;
    if (lambda.empty()) return 1;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find({lambda, rho});
        if (it != cache.end()) return it->second;
    }
    const int k = rho.parts()[0];
    Partition rest(std::vector<int>(rho.parts().begin() + 1, rho.parts().end()));
    // first-column hook lengths (beta numbers)
    const long L = lambda.length();
    std::vector<long> beta(L);
    for (long i = 0; i < L; ++i) beta[i] = lambda.parts()[i] + (L - 1 - i);
    long long total = 0;
    for (long i = 0; i < L; ++i) {
        long b = beta[i];
        long nb = b - k;
        if (nb < 0) continue;
        if (std::find(beta.begin(), beta.end(), nb) != beta.end()) continue;
        int height = 0;
        for (long x : beta)
            if (x > nb && x < b) ++height;
        std::vector<long> nbeta = beta;
        nbeta[i] = nb;
        long long sub = sym_character(partition_from_beta(std::move(nbeta)), rest);
        total += (height % 2 ? -sub : sub);
    }
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(std::make_pair(lambda, rho), total);
    return total;
}

const std::map<Partition, Rat>& complete_in_p(const Partition& mu) {
    static std::mutex mtx;
    static std::map<Partition, std::map<Partition, Rat>> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(mu);
    if (it != cache.end()) return it->second;
    std::map<Partition, Rat> acc;
    acc[Partition()] = 1;
    for (int part : mu.parts()) {
        std::map<Partition, Rat> next;
        for (const Partition& rho : partitions_of(part)) {
            Rat c = Rat(1) / Rat(rho.z());
            for (const auto& [sigma, v] : acc) {
                std::vector<int> merged(sigma.parts());
                merged.insert(merged.end(), rho.parts().begin(), rho.parts().end());
                std::sort(merged.begin(), merged.end(), std::greater<int>());
                next[Partition(std::move(merged))] += v * c;
            }
        }
        acc = std::move(next);
    }
    return cache.emplace(mu, std::move(acc)).first->second;
}

const DegreeTables& degree_tables(int n) {
    static std::mutex mtx;
    static std::map<int, DegreeTables> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    DegreeTables t;
    t.parts = partitions_of(n);
    const size_t N = t.parts.size();
    for (size_t i = 0; i < N; ++i) t.index[t.parts[i]] = static_cast<int>(i);
    t.zvals.resize(N);
    for (size_t i = 0; i < N; ++i) t.zvals[i] = t.parts[i].z();
    // K_{lambda mu} = <s_lambda, h_mu> = sum_rho chi^lambda(rho) [p_rho](h_mu)
    t.kostka.assign(N, std::vector<Rat>(N, Rat(0)));
    for (size_t m = 0; m < N; ++m) {
        const auto& hp = complete_in_p(t.parts[m]);
        for (size_t l = 0; l < N; ++l) {
            Rat acc(0);
            for (const auto& [rho, c] : hp) acc += Rat(sym_character(t.parts[l], rho)) * c;
            t.kostka[l][m] = acc;
        }
    }
    // invert the unitriangular Kostka matrix
    t.kostka_inv.assign(N, std::vector<Rat>(N, Rat(0)));
    for (size_t j = 0; j < N; ++j) {
        t.kostka_inv[j][j] = 1;
        // columns solved top-down using triangularity K[l][m] = 0 for l > m
        for (size_t i = j; i-- > 0;) {
            Rat acc(0);
            for (size_t k = i + 1; k <= j; ++k) acc += t.kostka[i][k] * t.kostka_inv[k][j];
            t.kostka_inv[i][j] = -acc;
        }
    }
    return cache.emplace(n, std::move(t)).first->second;
}

}  // namespace wreathmac
