#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "symprod/orbifold_ring.hpp"

namespace symprod::suite {

inline constexpr std::uint64_t kDefaultSeed = 20240917;

struct PropertyResult {
    PropertyResult(std::string g, std::string n) : group(std::move(g)), name(std::move(n)) {}

    std::string group;
    std::string name;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::string first_failure;

    bool ok() const { return failed == 0; }
    void record(bool success, const std::function<std::string()>& describe);
};

struct Options {
    int n = 2;
    std::uint64_t seed = kDefaultSeed;
    std::size_t iters = 100;
    // Ring axioms run over all basis triples of the total ring when there
    // are at most this many triples, and on `iters` random triples otherwise.
    std::size_t exhaustive_limit = 20000;
};

using Rng = std::mt19937_64;

Permutation random_permutation(int n, Rng& rng);
// One basis tensor in a random sector with a small nonzero coefficient.
SectorTerm random_sector_term(const AlgebraPtr& algebra, int n, Rng& rng);
SectorTerm random_sector_term(const AlgebraPtr& algebra, const Permutation& sigma, Rng& rng);
// Sum of one to three random sector terms.
RingElement random_element(const AlgebraPtr& algebra, int n, Rng& rng);
// Every (sigma, basis tensor) pair of the total ring, coefficient 1.
std::vector<SectorTerm> total_ring_basis(const AlgebraPtr& algebra, int n);

std::vector<PropertyResult> algebra_properties(const AlgebraPtr& algebra, Rng& rng, std::size_t iters);
std::vector<PropertyResult> permutation_properties(int n, Rng& rng, std::size_t iters);
std::vector<PropertyResult> tensor_properties(const AlgebraPtr& algebra, int n, Rng& rng, std::size_t iters);
std::vector<PropertyResult> ring_properties(const AlgebraPtr& algebra, const Options& options, Rng& rng);
std::vector<PropertyResult> duality_properties(const AlgebraPtr& algebra, int n, Rng& rng, std::size_t iters);
std::vector<PropertyResult> betti_properties(const AlgebraPtr& algebra, int n);

// Every group above, seeded from options.seed.
std::vector<PropertyResult> run_all(const AlgebraPtr& algebra, const Options& options);

std::string render(const std::vector<PropertyResult>& results);

}  // namespace symprod::suite
