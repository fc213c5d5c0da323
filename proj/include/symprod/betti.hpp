#pragma once

#include <map>
#include <optional>
#include <string>

#include "symprod/frobenius.hpp"
#include "symprod/permutation.hpp"

namespace symprod {

// Degree -> dimension. Zero entries are not stored.
using PoincarePolynomial = std::map<int, Integer>;

PoincarePolynomial betti_table(const FrobeniusAlgebra& algebra);

// Sum of coefficients.
Integer total_dimension(const PoincarePolynomial& p);

// Palindromic about `center`: dim(center - k) == dim(center + k).
bool is_palindromic(const PoincarePolynomial& p, int center);

/// Dimension of the centralizer invariants of H*(X)^{(x) O(sigma)}, by
/// shifted degree. Computed as the trace of the centralizer averaging
/// projector (trace of an idempotent = rank), using only relabel on basis
/// tensors. sigma may be any element of its class.
PoincarePolynomial sector_poincare(const AlgebraPtr& algebra, const Permutation& sigma);

// Sum of sector_poincare over class representatives.
PoincarePolynomial orbifold_poincare(const AlgebraPtr& algebra, int n);

// Coefficient of q^n in prod_{m >= 1} prod_{i=0}^{4}
// (1 - (-1)^i t^{2m-2+i} q^m)^{-(-1)^i b_i}, as a polynomial in t.
// Throws NotASurface unless complex_dim == 2.
PoincarePolynomial gottsche_polynomial(const FrobeniusAlgebra& algebra, int n);

struct BettiReport {
    int n = 0;
    std::string algebra;
    PoincarePolynomial ring_side;
    PoincarePolynomial oracle_side;
    std::optional<PoincarePolynomial> gottsche_side;
    bool ring_matches_oracle = false;
    std::optional<bool> gottsche_matches;

    bool all_agree() const { return ring_matches_oracle && gottsche_matches.value_or(true); }
};

// Ring side from invariant_basis, oracle side from orbifold_poincare, and
// the Gottsche series when requested.
BettiReport compare(const AlgebraPtr& algebra, int n, bool with_gottsche);

std::string render_text(const BettiReport& report);
std::string render_json(const BettiReport& report);

}  // namespace symprod
