#include "symprod/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "symprod/errors.hpp"

namespace symprod {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
    std::vector<bool> hit(image_.size(), false);
    for (int v : image_) {
        if (v < 0 || static_cast<std::size_t>(v) >= image_.size() || hit[static_cast<std::size_t>(v)]) {
            throw std::invalid_argument("permutation image is not a bijection");
        }
        hit[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> image(static_cast<std::size_t>(n));
    std::iota(image.begin(), image.end(), 0);
    return Permutation(std::move(image));
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
    std::vector<int> image(static_cast<std::size_t>(n));
    std::iota(image.begin(), image.end(), 0);
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    for (const auto& cycle : cycles) {
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            int p = cycle[i];
            if (p < 0 || p >= n) throw std::invalid_argument("cycle point out of range");
            if (used[static_cast<std::size_t>(p)]) throw std::invalid_argument("cycles are not disjoint");
            used[static_cast<std::size_t>(p)] = true;
            image[static_cast<std::size_t>(p)] = cycle[(i + 1) % cycle.size()];
        }
    }
    return Permutation(std::move(image));
}

Permutation Permutation::parse(std::string_view text, int n) {
    if (n <= 0) throw ExpressionError("permutation size must be positive", 0);
    std::size_t pos = 0;
    auto skip_space = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_space();
    if (text.substr(pos, 2) == "id") {
        pos += 2;
        skip_space();
        if (pos != text.size()) throw ExpressionError("unexpected text after 'id'", pos);
        return identity(n);
    }
    std::vector<std::vector<int>> cycles;
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    while (true) {
        skip_space();
        if (pos == text.size()) break;
        if (text[pos] != '(') throw ExpressionError("expected '(' or 'id'", pos);
        ++pos;
        std::vector<int> cycle;
        while (true) {
            skip_space();
            if (pos == text.size()) throw ExpressionError("unterminated cycle", pos);
            if (text[pos] == ')') {
                ++pos;
                break;
            }
            if (!std::isdigit(static_cast<unsigned char>(text[pos]))) {
                throw ExpressionError("expected a point number", pos);
            }
            std::size_t start = pos;
            long value = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                value = value * 10 + (text[pos] - '0');
                if (value > 1000000) throw ExpressionError("point number too large", start);
                ++pos;
            }
            if (value < 1 || value > n) {
                throw ExpressionError("point " + std::to_string(value) + " outside 1.." + std::to_string(n), start);
            }
            auto point = static_cast<int>(value - 1);
            if (used[static_cast<std::size_t>(point)]) {
                throw ExpressionError("point " + std::to_string(value) + " repeated", start);
            }
            used[static_cast<std::size_t>(point)] = true;
            cycle.push_back(point);
        }
        if (!cycle.empty()) cycles.push_back(std::move(cycle));
    }
    return from_cycles(n, cycles);
}

bool Permutation::is_identity() const noexcept {
    for (std::size_t i = 0; i < image_.size(); ++i) {
        if (image_[i] != static_cast<int>(i)) return false;
    }
    return true;
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(image_.size());
    for (std::size_t i = 0; i < image_.size(); ++i) inv[static_cast<std::size_t>(image_[i])] = static_cast<int>(i);
    return Permutation(std::move(inv));
}

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(image_.size(), false);
    for (std::size_t start = 0; start < image_.size(); ++start) {
        if (seen[start]) continue;
        std::vector<int> cycle;
        for (auto p = static_cast<int>(start); !seen[static_cast<std::size_t>(p)]; p = image_[static_cast<std::size_t>(p)]) {
            seen[static_cast<std::size_t>(p)] = true;
            cycle.push_back(p);
        }
        out.push_back(std::move(cycle));
    }
    return out;
}

std::string Permutation::to_string() const {
    std::ostringstream os;
    bool any = false;
    for (const auto& cycle : cycles()) {
        if (cycle.size() < 2) continue;
        any = true;
        os << '(';
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            if (i) os << ' ';
            os << cycle[i] + 1;
        }
        os << ')';
    }
    return any ? os.str() : "id";
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) {
        throw SizeMismatch("cannot compose permutations of sizes " + std::to_string(a.size()) + " and " +
                           std::to_string(b.size()));
    }
    std::vector<int> image(a.image_.size());
    for (std::size_t i = 0; i < image.size(); ++i) image[i] = a.image_[static_cast<std::size_t>(b.image_[i])];
    Permutation out;
    out.image_ = std::move(image);
    return out;
}

Permutation compose(const Permutation& a, const Permutation& b) { return a * b; }

Permutation conjugate(const Permutation& h, const Permutation& sigma) { return h * sigma * h.inverse(); }

OrbitPartition::OrbitPartition(int n, std::vector<std::vector<int>> blocks) : n_(n), blocks_(std::move(blocks)) {
    for (auto& b : blocks_) {
        if (b.empty()) throw std::invalid_argument("empty block in partition");
        std::sort(b.begin(), b.end());
    }
    std::sort(blocks_.begin(), blocks_.end(), [](const auto& x, const auto& y) { return x.front() < y.front(); });
    block_of_.assign(static_cast<std::size_t>(n), blocks_.size());
    for (std::size_t bi = 0; bi < blocks_.size(); ++bi) {
        for (int p : blocks_[bi]) {
            if (p < 0 || p >= n || block_of_[static_cast<std::size_t>(p)] != blocks_.size()) {
                throw std::invalid_argument("blocks do not partition the point set");
            }
            block_of_[static_cast<std::size_t>(p)] = bi;
        }
    }
    for (auto b : block_of_) {
        if (b == blocks_.size()) throw std::invalid_argument("blocks do not cover the point set");
    }
}

OrbitPartition OrbitPartition::singletons(int n) { return orbits(Permutation::identity(n)); }

bool OrbitPartition::refines(const OrbitPartition& coarse) const {
    if (coarse.n_ != n_) return false;
    for (const auto& b : blocks_) {
        std::size_t target = coarse.block_of(b.front());
        for (int p : b) {
            if (coarse.block_of(p) != target) return false;
        }
    }
    return true;
}

namespace {

struct DisjointSets {
    std::vector<int> parent;
    explicit DisjointSets(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
};

std::vector<int> domain(int n, std::optional<std::span<const int>> gamma) {
    std::vector<int> points;
    if (gamma) {
        points.assign(gamma->begin(), gamma->end());
        std::sort(points.begin(), points.end());
        if (std::adjacent_find(points.begin(), points.end()) != points.end()) {
            throw NotStable("subset lists a point twice");
        }
        for (int p : points) {
            if (p < 0 || p >= n) throw NotStable("subset point out of range");
        }
    } else {
        points.resize(static_cast<std::size_t>(n));
        std::iota(points.begin(), points.end(), 0);
    }
    return points;
}

void require_stable(const Permutation& sigma, const std::vector<int>& points) {
    for (int p : points) {
        if (!std::binary_search(points.begin(), points.end(), sigma(p))) {
            throw NotStable("subset is not stable under " + sigma.to_string());
        }
    }
}

std::vector<std::vector<int>> blocks_from(DisjointSets& sets, const std::vector<int>& points) {
    std::vector<std::vector<int>> blocks;
    std::vector<int> root_to_block(sets.parent.size(), -1);
    for (int p : points) {  // ascending, so blocks come out ordered by minimum
        int r = sets.find(p);
        if (root_to_block[static_cast<std::size_t>(r)] < 0) {
            root_to_block[static_cast<std::size_t>(r)] = static_cast<int>(blocks.size());
            blocks.emplace_back();
        }
        blocks[static_cast<std::size_t>(root_to_block[static_cast<std::size_t>(r)])].push_back(p);
    }
    return blocks;
}

}  // namespace

std::vector<std::vector<int>> orbit_blocks(const Permutation& sigma, std::optional<std::span<const int>> gamma) {
    auto points = domain(sigma.size(), gamma);
    require_stable(sigma, points);
    DisjointSets sets(sigma.size());
    for (int p : points) sets.unite(p, sigma(p));
    return blocks_from(sets, points);
}

std::vector<std::vector<int>> joint_orbit_blocks(const Permutation& sigma, const Permutation& rho,
                                                 std::optional<std::span<const int>> gamma) {
    if (sigma.size() != rho.size()) throw SizeMismatch("joint orbits of permutations of different sizes");
    auto points = domain(sigma.size(), gamma);
    require_stable(sigma, points);
    require_stable(rho, points);
    DisjointSets sets(sigma.size());
    for (int p : points) {
        sets.unite(p, sigma(p));
        sets.unite(p, rho(p));
    }
    return blocks_from(sets, points);
}

OrbitPartition orbits(const Permutation& sigma) { return OrbitPartition(sigma.size(), orbit_blocks(sigma)); }

OrbitPartition joint_orbits(const Permutation& sigma, const Permutation& rho) {
    return OrbitPartition(sigma.size(), joint_orbit_blocks(sigma, rho));
}

int length(const Permutation& sigma) {
    int cycles = 0;
    std::vector<bool> seen(static_cast<std::size_t>(sigma.size()), false);
    for (int s = 0; s < sigma.size(); ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        ++cycles;
        for (int p = s; !seen[static_cast<std::size_t>(p)]; p = sigma(p)) seen[static_cast<std::size_t>(p)] = true;
    }
    return sigma.size() - cycles;
}

int degree_shift(const Permutation& sigma, int complex_dim) {
    if (complex_dim % 2 != 0) throw OddDimensionError(complex_dim);
    return complex_dim * length(sigma);
}

int graph_defect(const Permutation& pi, const Permutation& rho, std::span<const int> joint_orbit) {
    if (pi.size() != rho.size()) throw SizeMismatch("graph defect of permutations of different sizes");
    std::vector<std::vector<int>> joint;
    try {
        joint = joint_orbit_blocks(pi, rho, joint_orbit);
    } catch (const NotStable&) {
        throw NotJointOrbit("subset is not stable under <pi, rho>");
    }
    if (joint.size() != 1) throw NotJointOrbit("subset splits into several <pi, rho> orbits");
    const auto size = static_cast<int>(joint_orbit.size());
    const auto o_pi = static_cast<int>(orbit_blocks(pi, joint_orbit).size());
    const auto o_rho = static_cast<int>(orbit_blocks(rho, joint_orbit).size());
    const auto o_prod = static_cast<int>(orbit_blocks(pi * rho, joint_orbit).size());
    const int twice = size + 2 - o_pi - o_rho - o_prod;
    if (twice < 0) throw DefectError("negative graph defect");
    if (twice % 2 != 0) throw DefectError("half-integral graph defect");
    return twice / 2;
}

std::vector<int> graph_defects(const Permutation& pi, const Permutation& rho) {
    std::vector<int> out;
    for (const auto& block : joint_orbit_blocks(pi, rho)) out.push_back(graph_defect(pi, rho, block));
    return out;
}

CycleType cycle_type(const Permutation& sigma) {
    CycleType type;
    for (const auto& c : sigma.cycles()) type.push_back(static_cast<int>(c.size()));
    std::sort(type.begin(), type.end(), std::greater<>());
    return type;
}

std::size_t factorial(int n) {
    std::size_t out = 1;
    for (int i = 2; i <= n; ++i) out *= static_cast<std::size_t>(i);
    return out;
}

namespace {

void partitions_into(int remaining, int max_part, CycleType& prefix, std::vector<CycleType>& out) {
    if (remaining == 0) {
        out.push_back(prefix);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        prefix.push_back(part);
        partitions_into(remaining - part, part, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<ConjugacyClass> conjugacy_classes(int n) {
    std::vector<CycleType> types;
    CycleType prefix;
    partitions_into(n, n, prefix, types);
    std::sort(types.begin(), types.end());

    std::vector<ConjugacyClass> out;
    for (const auto& type : types) {
        std::vector<std::vector<int>> cycles;
        int next = 0;
        std::size_t centralizer = 1;
        std::vector<int> multiplicity(static_cast<std::size_t>(n) + 1, 0);
        for (int part : type) {
            std::vector<int> cycle(static_cast<std::size_t>(part));
            std::iota(cycle.begin(), cycle.end(), next);
            next += part;
            cycles.push_back(std::move(cycle));
            centralizer *= static_cast<std::size_t>(part);
            centralizer *= static_cast<std::size_t>(++multiplicity[static_cast<std::size_t>(part)]);
        }
        out.push_back({type, Permutation::from_cycles(n, cycles), factorial(n) / centralizer, centralizer});
    }
    return out;
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> image(static_cast<std::size_t>(n));
    std::iota(image.begin(), image.end(), 0);
    std::vector<Permutation> out;
    out.reserve(factorial(n));
    do {
        out.emplace_back(image);
    } while (std::next_permutation(image.begin(), image.end()));
    return out;
}

std::vector<Permutation> centralizer(const Permutation& sigma) {
    std::vector<Permutation> out;
    for (auto& h : all_permutations(sigma.size())) {
        if (h * sigma == sigma * h) out.push_back(std::move(h));
    }
    return out;
}

}  // namespace symprod
