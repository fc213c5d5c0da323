#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "symprod/orbifold_ring.hpp"

namespace symprod {

struct TableRow {
    // (j, k, c) with b_i * b_j = sum_k c b_k, sorted by (j, k).
    std::vector<std::tuple<std::size_t, std::size_t, Scalar>> entries;
};

/// Structure constants of the invariant ring on the basis returned by
/// invariant_basis. Rows are independent pure computations, so callers may
/// evaluate them in any order or in parallel and render afterwards.
class MultiplicationTable {
public:
    MultiplicationTable(AlgebraPtr algebra, int n, std::optional<DegreeRange> degrees = std::nullopt);

    std::size_t size() const noexcept { return basis_.size(); }
    const std::vector<InvariantBasisElement>& basis() const noexcept { return basis_; }
    bool truncated() const noexcept { return truncated_; }

    TableRow row(std::size_t i) const;

    // Basis manifest plus (i, j, k, "p/q") triples. Byte-identical for
    // identical rows.
    std::string render_json(const std::vector<TableRow>& rows) const;

private:
    AlgebraPtr algebra_;
    int n_;
    DegreeRange range_;
    bool truncated_;
    std::vector<InvariantBasisElement> basis_;
    InvariantCoordinates coordinates_;
};

}  // namespace symprod
