#include "symprod/table.hpp"

#include <sstream>

#include <json.hpp>

#include "symprod/errors.hpp"
#include "symprod/expression.hpp"

namespace symprod {

namespace {

DegreeRange full_range(const FrobeniusAlgebra& algebra, int n) { return {0, n * algebra.top_degree()}; }

std::string quoted(const std::string& s) { return nlohmann::json(s).dump(); }

std::string cycle_type_string(const CycleType& type) {
    std::string out;
    for (std::size_t i = 0; i < type.size(); ++i) {
        if (i) out += '+';
        out += std::to_string(type[i]);
    }
    return out;
}

}  // namespace

MultiplicationTable::MultiplicationTable(AlgebraPtr algebra, int n, std::optional<DegreeRange> degrees)
    : algebra_(std::move(algebra)),
      n_(n),
      range_(degrees.value_or(full_range(*algebra_, n))),
      truncated_(degrees && (degrees->min > 0 || degrees->max < n * algebra_->top_degree())),
      basis_(invariant_basis(algebra_, n, degrees)),
      coordinates_(basis_) {}

TableRow MultiplicationTable::row(std::size_t i) const {
    TableRow out;
    const auto& left = basis_.at(i);
    for (std::size_t j = 0; j < basis_.size(); ++j) {
        const auto& right = basis_[j];
        // Products of homogeneous classes are homogeneous; skip the ones
        // that land outside a truncated range.
        if (!range_.contains(left.shifted_degree + right.shifted_degree)) continue;
        RingElement product = ring_product(left.element.full, right.element.full);
        for (auto& [k, c] : coordinates_.sparse(product)) out.entries.emplace_back(j, k, std::move(c));
    }
    return out;
}

std::string MultiplicationTable::render_json(const std::vector<TableRow>& rows) const {
    if (rows.size() != basis_.size()) throw SizeMismatch("one table row per basis element is required");
    const auto classes = conjugacy_classes(n_);
    std::ostringstream os;
    os << "{\n";
    os << "  \"algebra\": " << quoted(algebra_->name()) << ",\n";
    os << "  \"n\": " << n_ << ",\n";
    os << "  \"sign_twist\": " << (algebra_->sign_twist() ? "true" : "false") << ",\n";
    os << "  \"degree_range\": [" << range_.min << ", " << range_.max << "],\n";
    os << "  \"truncated\": " << (truncated_ ? "true" : "false") << ",\n";
    os << "  \"basis\": [";
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        const auto& b = basis_[i];
        OrbitTensor rep(algebra_, orbits(b.representative));
        rep.add(b.representative_key, Scalar(1));
        RingElement term(SectorTerm(b.representative, rep));
        os << (i ? ",\n" : "\n") << "    {\"index\": " << i << ", \"class\": "
           << quoted(cycle_type_string(classes[b.class_index].type))
           << ", \"representative\": " << quoted(b.representative.to_string())
           << ", \"term\": " << quoted(format_ring_element(term)) << ", \"shifted_degree\": " << b.shifted_degree
           << "}";
    }
    os << (basis_.empty() ? "],\n" : "\n  ],\n");
    os << "  \"structure_constants\": [";
    bool first = true;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (const auto& [j, k, c] : rows[i].entries) {
            os << (first ? "\n" : ",\n") << "    [" << i << ", " << j << ", " << k << ", " << quoted(to_string(c))
               << "]";
            first = false;
        }
    }
    os << (first ? "]\n" : "\n  ]\n");
    os << "}\n";
    return os.str();
}

}  // namespace symprod
