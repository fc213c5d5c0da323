#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "symprod/linalg.hpp"
#include "symprod/scalar.hpp"

namespace symprod {

using BasisIndex = std::uint16_t;

struct BasisElement {
    std::string id;
    int degree = 0;
};

// Sparse vector over an algebra basis. Zero coefficients are never stored.
class AlgebraElement {
public:
    using Terms = std::map<BasisIndex, Scalar>;

    AlgebraElement() = default;
    static AlgebraElement basis(BasisIndex index, Scalar coeff = 1);

    void add(BasisIndex index, const Scalar& coeff);
    Scalar coefficient(BasisIndex index) const;

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    AlgebraElement& operator+=(const AlgebraElement& other);
    AlgebraElement& operator*=(const Scalar& factor);
    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator*(const Scalar& factor, AlgebraElement a) { return a *= factor; }
    friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

private:
    Terms terms_;
};

// k-fold tensor expansion: coefficient plus one basis index per factor.
using TensorExpansion = std::vector<std::pair<Scalar, std::vector<BasisIndex>>>;

// Raw description of an algebra, before validation. This is what the JSON
// loader produces and what tests build by hand.
struct AlgebraSpec {
    struct Product {
        std::string left;
        std::string right;
        std::string result;
        Scalar coeff;
    };

    std::string name;
    int complex_dim = 0;
    std::vector<BasisElement> basis;
    std::string unit;
    std::vector<std::pair<std::string, Scalar>> counit;
    std::vector<Product> products;
};

class FrobeniusAlgebra;
using AlgebraPtr = std::shared_ptr<const FrobeniusAlgebra>;

/// A finite graded-commutative Frobenius algebra with exact rational
/// structure constants, modelling H*(X; Q) for a compact complex manifold X
/// of even complex dimension d.
///
/// Instances are immutable once built. All validation happens in build():
/// degree additivity, graded commutativity, associativity, the unit law,
/// top-degree support of the counit and invertibility of the pairing are
/// checked exhaustively over basis tuples.
///
/// The sign twist replaces the counit T by -T. counit(), pairing(),
/// dual_basis() and coproduct() follow the twisted counit. The structural
/// maps used by the orbifold ring (structural_coproduct, euler_class) are
/// always taken from the untwisted counit.
class FrobeniusAlgebra {
public:
    static AlgebraPtr build(const AlgebraSpec& spec, bool sign_twist = false);

    // Copy of this algebra with the given twist flag. Shares caches.
    AlgebraPtr with_sign_twist(bool twist) const;

    const std::string& name() const noexcept { return name_; }
    int complex_dim() const noexcept { return complex_dim_; }
    int top_degree() const noexcept { return 2 * complex_dim_; }
    std::size_t dimension() const noexcept { return basis_.size(); }
    const std::vector<BasisElement>& basis() const noexcept { return basis_; }
    BasisIndex unit_index() const noexcept { return unit_; }
    bool sign_twist() const noexcept { return sign_twist_; }

    int degree(BasisIndex index) const { return basis_.at(index).degree; }
    const std::string& id(BasisIndex index) const { return basis_.at(index).id; }
    BasisIndex index_of(std::string_view id) const;
    AlgebraElement element(std::string_view id, Scalar coeff = 1) const;

    // Degree of a homogeneous element; nullopt for zero or mixed degrees.
    std::optional<int> degree(const AlgebraElement& a) const;

    const AlgebraElement& multiply_basis(BasisIndex i, BasisIndex j) const;
    AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) const;
    AlgebraElement unit() const { return AlgebraElement::basis(unit_); }

    Scalar counit(const AlgebraElement& a) const;
    Scalar counit_basis(BasisIndex index) const;
    Scalar untwisted_counit_basis(BasisIndex index) const { return counit_.at(index); }
    Scalar pairing(const AlgebraElement& a, const AlgebraElement& b) const;
    const Matrix& pairing_matrix() const;

    // f^i with pairing(e_i, f^j) = delta_ij under the current counit.
    std::vector<AlgebraElement> dual_basis() const;

    // Adjoint of k-fold multiplication under the current counit:
    // <coproduct(a, k), b_1 (x) .. (x) b_k> = counit(a b_1 .. b_k).
    TensorExpansion coproduct(const AlgebraElement& a, int k) const;

    // Same adjoint, always taken from the untwisted counit. Cached per
    // basis element and arity; thread-safe.
    const TensorExpansion& structural_coproduct(BasisIndex index, int k) const;

    // m(coproduct(1, 2)) for the untwisted counit.
    const AlgebraElement& euler_class() const noexcept { return euler_; }

    // Koszul sign (-1)^{deg(i) deg(j)}.
    int swap_sign(BasisIndex i, BasisIndex j) const {
        return (degree(i) % 2 != 0 && degree(j) % 2 != 0) ? -1 : 1;
    }

private:
    struct Cache;

    FrobeniusAlgebra() = default;
    void validate() const;
    TensorExpansion compute_coproduct(BasisIndex index, int k) const;
    Scalar untwisted_counit(const AlgebraElement& a) const;

    std::string name_;
    int complex_dim_ = 0;
    std::vector<BasisElement> basis_;
    std::unordered_map<std::string, BasisIndex> index_;
    BasisIndex unit_ = 0;
    std::vector<AlgebraElement> table_;  // row-major, dimension^2 entries
    std::vector<Scalar> counit_;         // untwisted
    Matrix pairing_;                     // untwisted T(e_i e_j)
    Matrix pairing_inverse_;             // untwisted
    std::vector<AlgebraElement> dual_;   // untwisted duals
    AlgebraElement euler_;
    bool sign_twist_ = false;
    Matrix current_pairing_;             // T(e_i e_j) under the current counit
    std::shared_ptr<Cache> cache_;
};

// JSON algebra document <-> FrobeniusAlgebra. Throws ParseError for
// malformed documents and ValidationError for axiom violations.
AlgebraSpec parse_algebra_spec(std::string_view json_text);
AlgebraPtr load_algebra(std::string_view json_text, bool sign_twist = false);
AlgebraPtr load_algebra_file(const std::filesystem::path& path, bool sign_twist = false);

}  // namespace symprod
