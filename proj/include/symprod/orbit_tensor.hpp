#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "symprod/frobenius.hpp"
#include "symprod/permutation.hpp"

namespace symprod {

// One basis index per block of the partition, in canonical block order.
using FactorKey = std::vector<BasisIndex>;

// Sign of reordering a sequence of homogeneous factors: the new sequence is
// old[order[0]], old[order[1]], ...; only odd factors contribute.
int koszul_sign(std::span<const int> degrees, std::span<const std::size_t> order);

/// Element of H*(X)^{(x) O} for an orbit partition O: tensor factors are
/// indexed by blocks, serialized by block minimum. Odd-degree factors pick
/// up Koszul signs whenever they are reordered; those signs are folded into
/// the stored coefficients.
class OrbitTensor {
public:
    using Terms = std::map<FactorKey, Scalar>;

    OrbitTensor(AlgebraPtr algebra, OrbitPartition partition);

    static OrbitTensor unit(AlgebraPtr algebra, OrbitPartition partition);
    // Tensor product of one algebra element per block.
    static OrbitTensor product_of(AlgebraPtr algebra, OrbitPartition partition,
                                  const std::vector<AlgebraElement>& factors);

    const FrobeniusAlgebra& algebra() const noexcept { return *algebra_; }
    const AlgebraPtr& algebra_ptr() const noexcept { return algebra_; }
    const OrbitPartition& partition() const noexcept { return partition_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    void add(const FactorKey& key, const Scalar& coeff);
    Scalar coefficient(const FactorKey& key) const;

    // Unshifted Kunneth degree; nullopt when the tensor is zero or mixes degrees.
    std::optional<int> degree() const;
    int term_degree(const FactorKey& key) const;

    OrbitTensor& operator+=(const OrbitTensor& other);
    OrbitTensor& operator*=(const Scalar& factor);
    bool operator==(const OrbitTensor& other) const;

    // (a_1 (x) .. (x) a_m)(b_1 (x) .. (x) b_m) = +-(a_1 b_1 (x) .. (x) a_m b_m).
    OrbitTensor multiply_factorwise(const OrbitTensor& other) const;

    // Pullback along the diagonal of a coarsening: factors of the fine
    // blocks inside each coarse block are multiplied together.
    OrbitTensor pull(const OrbitPartition& coarse) const;

    // Pushforward along the diagonal into a refinement: each coarse factor
    // is split by the structural k-fold coproduct over its fine blocks.
    OrbitTensor push(const OrbitPartition& fine) const;

    // Product of the untwisted counit over all factors.
    Scalar counit() const;

private:
    void check_key(const FactorKey& key) const;

    AlgebraPtr algebra_;
    OrbitPartition partition_;
    Terms terms_;
};

// <t, u> = counit(t u) with the factorwise product; untwisted.
Scalar tensor_pairing(const OrbitTensor& t, const OrbitTensor& u);

/// A summand H*(X)^{(x) O(sigma)} . sigma of the total ring.
struct SectorTerm {
    Permutation sigma;
    OrbitTensor tensor;

    SectorTerm(Permutation s, OrbitTensor t);
};

// Kunneth degree plus degree_shift(sigma, d); nullopt for non-homogeneous.
std::optional<int> shifted_degree(const SectorTerm& term);

// (alpha, sigma) -> ((h^-1)^* alpha, h sigma h^-1): the factor on block B
// moves to block h(B).
SectorTerm relabel(const Permutation& h, const SectorTerm& term);

}  // namespace symprod
