#pragma once

#include <map>
#include <optional>
#include <vector>

#include "symprod/orbit_tensor.hpp"

namespace symprod {

/// Element of the total ring A(X^n, S_n) = sum over sigma in S_n of
/// H*(X)^{(x) O(sigma)} . sigma. Sectors are kept in permutation order
/// (identity first) and zero sectors are dropped.
class RingElement {
public:
    using Sectors = std::map<Permutation, OrbitTensor>;

    RingElement(AlgebraPtr algebra, int n);
    explicit RingElement(const SectorTerm& term);

    static RingElement unit(AlgebraPtr algebra, int n);

    const FrobeniusAlgebra& algebra() const noexcept { return *algebra_; }
    const AlgebraPtr& algebra_ptr() const noexcept { return algebra_; }
    int n() const noexcept { return n_; }
    const Sectors& sectors() const noexcept { return sectors_; }
    bool is_zero() const noexcept { return sectors_.empty(); }
    std::size_t term_count() const;

    void add(const SectorTerm& term);
    void add(const Permutation& sigma, const FactorKey& key, const Scalar& coeff);
    Scalar coefficient(const Permutation& sigma, const FactorKey& key) const;
    // Sector tensor, or nullptr if that sector is zero.
    const OrbitTensor* sector(const Permutation& sigma) const;

    // Shifted degree if homogeneous and nonzero.
    std::optional<int> shifted_degree() const;

    RingElement& operator+=(const RingElement& other);
    RingElement& operator-=(const RingElement& other);
    RingElement& operator*=(const Scalar& factor);
    friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
    friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
    friend RingElement operator*(const Scalar& f, RingElement a) { return a *= f; }
    bool operator==(const RingElement& other) const;

private:
    void check_compatible(const RingElement& other) const;

    AlgebraPtr algebra_;
    int n_;
    Sectors sectors_;
};

// m_{pi,rho}: pull both tensors to O(pi, rho), multiply factorwise, multiply
// block G by e(X)^{g(pi,rho)(G)}, push to O(pi rho).
SectorTerm sector_product(const SectorTerm& s, const SectorTerm& t);

RingElement ring_product(const RingElement& a, const RingElement& b);
RingElement operator*(const RingElement& a, const RingElement& b);

RingElement act(const Permutation& h, const RingElement& a);

/// S_n-invariant element, stored in full together with its restriction to
/// the conjugacy class representatives.
struct InvariantElement {
    RingElement full;
    std::map<Permutation, OrbitTensor> by_class;

    explicit InvariantElement(RingElement element);
};

// (1/n!) sum over h of act(h, a).
InvariantElement symmetrize(const RingElement& a);

// Fixed by the generators (1 2) and (1 2 .. n), hence by all of S_n.
bool is_invariant(const RingElement& a);

/// Basis vector of the invariant ring: the symmetrization of one basis
/// tensor over a class representative, normalized so the coefficient of
/// that representative term is 1.
struct InvariantBasisElement {
    InvariantElement element;
    Permutation representative;
    FactorKey representative_key;
    std::size_t class_index = 0;  // position in conjugacy_classes(n)
    int shifted_degree = 0;
};

struct DegreeRange {
    int min = 0;
    int max = 0;
    bool contains(int degree) const { return degree >= min && degree <= max; }
};

// Ordered by shifted degree, then class, then representative key. Spans
// the image of symmetrize restricted to the degree range.
std::vector<InvariantBasisElement> invariant_basis(const AlgebraPtr& algebra, int n,
                                                   std::optional<DegreeRange> degrees = std::nullopt);

// Coordinates of invariant elements on an invariant basis, read off the
// representative terms. Basis vectors have disjoint supports, so no solve
// is needed. Terms outside the basis (e.g. outside a truncated degree
// range) are ignored.
class InvariantCoordinates {
public:
    explicit InvariantCoordinates(const std::vector<InvariantBasisElement>& basis);

    // Nonzero coordinates in ascending basis order.
    std::vector<std::pair<std::size_t, Scalar>> sparse(const RingElement& a) const;
    std::vector<Scalar> dense(const RingElement& a) const;

private:
    std::size_t size_;
    std::map<Permutation, std::map<FactorKey, std::size_t>> index_;
};

std::vector<Scalar> invariant_coordinates(const std::vector<InvariantBasisElement>& basis, const RingElement& a);

// Shifted degree -> dimension of the invariant basis.
std::map<int, std::size_t> invariant_dimensions(const std::vector<InvariantBasisElement>& basis);

// Counit of the identity sector, negated under the sign twist. This is the
// single integral that every orbifold pairing and three-point value reduces to.
Scalar orbifold_counit(const RingElement& a);

// <(a, h1), (b, h2), (c, h3)>: zero unless h1 h2 h3 = id; otherwise the
// counit over O(h1, h2) of the pulled-back product with Euler factors.
Scalar three_point(const SectorTerm& a, const SectorTerm& b, const SectorTerm& c);

// Zero unless rho = sigma^-1; otherwise the blockwise counit of a b over O(sigma).
Scalar poincare_pair(const SectorTerm& a, const SectorTerm& b);

// Bilinear extensions over all sector pairs.
Scalar poincare_pair(const RingElement& a, const RingElement& b);
Scalar three_point(const RingElement& a, const RingElement& b, const RingElement& c);

// Signed sector terms of an element, one term per stored key.
std::vector<SectorTerm> split_terms(const RingElement& a);

}  // namespace symprod
