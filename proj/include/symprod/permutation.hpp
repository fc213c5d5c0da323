#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace symprod {

/// Element of S_n acting on the points {0, .., n-1}.
///
/// Composition is right-to-left: (a * b)(i) = a(b(i)). Cycle notation in
/// text is 1-based: "(1 2)(3 4 5)", or "id".
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> image);

    static Permutation identity(int n);
    static Permutation parse(std::string_view text, int n);
    static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

    int size() const noexcept { return static_cast<int>(image_.size()); }
    int operator()(int point) const { return image_[static_cast<std::size_t>(point)]; }
    const std::vector<int>& image() const noexcept { return image_; }

    bool is_identity() const noexcept;
    Permutation inverse() const;
    std::vector<std::vector<int>> cycles() const;  // 0-based, each starting at its minimum
    std::string to_string() const;                 // 1-based cycle notation, "id" for identity

    friend Permutation operator*(const Permutation& a, const Permutation& b);
    friend auto operator<=>(const Permutation&, const Permutation&) = default;
    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> image_;
};

Permutation compose(const Permutation& a, const Permutation& b);
Permutation conjugate(const Permutation& h, const Permutation& sigma);  // h sigma h^-1

/// A set partition of {0, .., n-1}. Blocks are sorted internally and
/// ordered by their minimal element; tensor factors follow this order.
class OrbitPartition {
public:
    OrbitPartition() = default;
    OrbitPartition(int n, std::vector<std::vector<int>> blocks);

    static OrbitPartition singletons(int n);

    int size() const noexcept { return n_; }
    std::size_t block_count() const noexcept { return blocks_.size(); }
    const std::vector<std::vector<int>>& blocks() const noexcept { return blocks_; }
    const std::vector<int>& block(std::size_t index) const { return blocks_.at(index); }
    std::size_t block_of(int point) const { return block_of_.at(static_cast<std::size_t>(point)); }

    // Every block of this partition lies inside some block of `coarse`.
    bool refines(const OrbitPartition& coarse) const;

    friend bool operator==(const OrbitPartition& a, const OrbitPartition& b) { return a.blocks_ == b.blocks_; }

private:
    int n_ = 0;
    std::vector<std::vector<int>> blocks_;
    std::vector<std::size_t> block_of_;
};

// Orbits of sigma on a sigma-stable subset (default: all points). The
// returned partition is of the full point set only when gamma is omitted;
// otherwise its blocks cover exactly gamma.
std::vector<std::vector<int>> orbit_blocks(const Permutation& sigma,
                                           std::optional<std::span<const int>> gamma = std::nullopt);
std::vector<std::vector<int>> joint_orbit_blocks(const Permutation& sigma, const Permutation& rho,
                                                 std::optional<std::span<const int>> gamma = std::nullopt);

OrbitPartition orbits(const Permutation& sigma);
OrbitPartition joint_orbits(const Permutation& sigma, const Permutation& rho);

// Minimal number of transpositions: n - |O(sigma)|.
int length(const Permutation& sigma);

// 2 * iota(sigma) = d * |sigma| for d = dim_C X (even).
int degree_shift(const Permutation& sigma, int complex_dim);

// (|G| + 2 - |O(pi;G)| - |O(rho;G)| - |O(pi rho;G)|) / 2 on one joint orbit G.
int graph_defect(const Permutation& pi, const Permutation& rho, std::span<const int> joint_orbit);

// Graph defect on every block of joint_orbits(pi, rho), in block order.
std::vector<int> graph_defects(const Permutation& pi, const Permutation& rho);

using CycleType = std::vector<int>;  // parts in descending order

CycleType cycle_type(const Permutation& sigma);

struct ConjugacyClass {
    CycleType type;
    Permutation representative;
    std::size_t class_size = 0;
    std::size_t centralizer_order = 0;
};

// All partitions of n in lexicographic order (identity class first).
// Representatives place cycles on consecutive points, longest first.
std::vector<ConjugacyClass> conjugacy_classes(int n);

std::vector<Permutation> all_permutations(int n);
std::vector<Permutation> centralizer(const Permutation& sigma);

std::size_t factorial(int n);

}  // namespace symprod
