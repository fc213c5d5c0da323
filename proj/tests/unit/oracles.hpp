#pragma once

// Independent reference computations for the tests. Nothing here calls the
// library routines it is used to check.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "symprod/frobenius.hpp"
#include "symprod/permutation.hpp"

namespace oracle {

using symprod::Scalar;

inline std::string data_path(const std::string& name) { return std::string(SYMPROD_DATA_DIR) + "/" + name; }

inline symprod::AlgebraPtr load(const std::string& name, bool twist = false) {
    return symprod::load_algebra_file(data_path(name + ".json"), twist);
}

using Dense = std::vector<std::vector<Scalar>>;

// Solves A x = b by Gaussian elimination; A must be square and invertible.
inline std::vector<Scalar> solve(Dense a, std::vector<Scalar> b) {
    const std::size_t n = a.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) throw std::runtime_error("singular system");
        std::swap(a[pivot], a[col]);
        std::swap(b[pivot], b[col]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Scalar f = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    std::vector<Scalar> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

inline std::vector<std::vector<int>> permutations(int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

inline std::vector<int> cycle_lengths(const std::vector<int>& image) {
    std::vector<bool> seen(image.size());
    std::vector<int> lengths;
    for (std::size_t i = 0; i < image.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(image[j])) {
            seen[j] = true;
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.rbegin(), lengths.rend());
    return lengths;
}

inline std::vector<int> compose(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[static_cast<std::size_t>(b[i])];
    return out;
}

// Orbits of the centralizer of sigma on basis tensors over the cycles of
// sigma, counted by degree (unshifted). Valid for algebras with only
// even-degree classes, where no orbit cancels by sign.
inline std::map<int, long> sector_orbit_counts(const symprod::FrobeniusAlgebra& alg, const std::vector<int>& sigma) {
    const std::size_t n = sigma.size();
    std::vector<int> cycle_of(n, -1);
    int cycles = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (cycle_of[i] >= 0) continue;
        for (std::size_t j = i; cycle_of[j] < 0; j = static_cast<std::size_t>(sigma[j])) cycle_of[j] = cycles;
        ++cycles;
    }
    std::vector<std::vector<int>> central;
    for (const auto& h : permutations(static_cast<int>(n))) {
        if (compose(h, sigma) == compose(sigma, h)) central.push_back(h);
    }
    // Cycle c is mapped by h to the cycle containing h(first point of c).
    std::vector<int> first(static_cast<std::size_t>(cycles), -1);
    for (std::size_t i = 0; i < n; ++i) {
        if (first[static_cast<std::size_t>(cycle_of[i])] < 0) first[static_cast<std::size_t>(cycle_of[i])] = static_cast<int>(i);
    }
    std::set<std::vector<int>> seen;
    std::map<int, long> counts;
    std::vector<int> key(static_cast<std::size_t>(cycles), 0);
    const int dim = static_cast<int>(alg.dimension());
    while (true) {
        if (!seen.count(key)) {
            int degree = 0;
            for (int k : key) degree += alg.degree(static_cast<symprod::BasisIndex>(k));
            ++counts[degree];
            for (const auto& h : central) {
                std::vector<int> moved(key.size());
                for (std::size_t c = 0; c < key.size(); ++c) {
                    moved[static_cast<std::size_t>(cycle_of[static_cast<std::size_t>(h[static_cast<std::size_t>(first[c])])])] = key[c];
                }
                seen.insert(moved);
            }
        }
        std::size_t pos = 0;
        while (pos < key.size() && ++key[pos] == dim) key[pos++] = 0;
        if (pos == key.size()) break;
    }
    return counts;
}

// Hilbert scheme Betti numbers of an even surface algebra by enumerating
// multisets of (part m, basis element e) with parts summing to n; each pair
// contributes degree 2m - 2 + deg e.
inline std::map<int, long> colored_partition_counts(const symprod::FrobeniusAlgebra& alg, int n) {
    std::vector<std::pair<int, int>> labels;  // (m, deg e), one per basis element per m
    for (int m = 1; m <= n; ++m) {
        for (const auto& b : alg.basis()) labels.emplace_back(m, b.degree);
    }
    std::map<int, long> counts;
    // Non-decreasing sequences of label indices.
    auto recurse = [&](auto&& self, std::size_t start, int remaining, int degree) -> void {
        if (remaining == 0) {
            ++counts[degree];
            return;
        }
        for (std::size_t i = start; i < labels.size(); ++i) {
            auto [m, d] = labels[i];
            if (m > remaining) continue;
            self(self, i, remaining - m, degree + 2 * m - 2 + d);
        }
    };
    recurse(recurse, 0, n, 0);
    return counts;
}

}  // namespace oracle
