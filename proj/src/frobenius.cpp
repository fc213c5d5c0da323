#include "symprod/frobenius.hpp"

#include <map>
#include <mutex>
#include <set>
#include <sstream>

#include "symprod/errors.hpp"

namespace symprod {

AlgebraElement AlgebraElement::basis(BasisIndex index, Scalar coeff) {
    AlgebraElement out;
    out.add(index, coeff);
    return out;
}

void AlgebraElement::add(BasisIndex index, const Scalar& coeff) {
    if (symprod::is_zero(coeff)) return;
    auto [it, inserted] = terms_.try_emplace(index, coeff);
    if (inserted) return;
    it->second += coeff;
    if (symprod::is_zero(it->second)) terms_.erase(it);
}

Scalar AlgebraElement::coefficient(BasisIndex index) const {
    auto it = terms_.find(index);
    return it == terms_.end() ? Scalar(0) : it->second;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other) {
    for (const auto& [index, coeff] : other.terms_) add(index, coeff);
    return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Scalar& factor) {
    if (symprod::is_zero(factor)) {
        terms_.clear();
        return *this;
    }
    for (auto& [index, coeff] : terms_) coeff *= factor;
    return *this;
}

struct FrobeniusAlgebra::Cache {
    std::mutex mutex;
    std::map<std::pair<BasisIndex, int>, TensorExpansion> coproducts;
};

namespace {

std::string tuple_string(const FrobeniusAlgebra& alg, std::initializer_list<BasisIndex> ids) {
    std::ostringstream os;
    os << '(';
    bool first = true;
    for (BasisIndex i : ids) {
        if (!first) os << ", ";
        os << alg.id(i);
        first = false;
    }
    os << ')';
    return os.str();
}

}  // namespace

AlgebraPtr FrobeniusAlgebra::build(const AlgebraSpec& spec, bool sign_twist) {
    std::shared_ptr<FrobeniusAlgebra> alg(new FrobeniusAlgebra());
    alg->name_ = spec.name;
    alg->sign_twist_ = sign_twist;
    alg->cache_ = std::make_shared<Cache>();

    if (spec.complex_dim <= 0) {
        throw ValidationError("positive dimension",
                              "complex_dim " + std::to_string(spec.complex_dim) + " is not positive");
    }
    if (spec.complex_dim % 2 != 0) throw OddDimensionError(spec.complex_dim);
    alg->complex_dim_ = spec.complex_dim;

    if (spec.basis.empty()) throw ValidationError("nonempty basis", "basis list is empty");
    if (spec.basis.size() > 0xFFFF) throw ValidationError("basis size", "too many basis elements");
    int degree_zero_count = 0;
    for (const auto& element : spec.basis) {
        if (element.degree < 0 || element.degree > 2 * spec.complex_dim) {
            throw ValidationError("degree range", "basis element " + element.id + " has degree " +
                                                      std::to_string(element.degree) + " outside [0, " +
                                                      std::to_string(2 * spec.complex_dim) + "]");
        }
        auto index = static_cast<BasisIndex>(alg->basis_.size());
        if (!alg->index_.emplace(element.id, index).second) {
            throw ValidationError("unique ids", "basis id " + element.id + " appears twice");
        }
        alg->basis_.push_back(element);
        if (element.degree == 0) ++degree_zero_count;
    }
    auto unit_it = alg->index_.find(spec.unit);
    if (unit_it == alg->index_.end()) {
        throw ValidationError("unit", "unit id " + spec.unit + " is not a basis element");
    }
    alg->unit_ = unit_it->second;
    if (alg->basis_[alg->unit_].degree != 0) {
        throw ValidationError("unit", "unit " + spec.unit + " does not have degree 0");
    }
    if (degree_zero_count != 1) {
        throw ValidationError("unit", "expected exactly one basis element of degree 0, found " +
                                          std::to_string(degree_zero_count));
    }

    const std::size_t dim = alg->basis_.size();
    auto lookup = [&](const std::string& id) {
        auto it = alg->index_.find(id);
        if (it == alg->index_.end()) throw ParseError("unknown basis id '" + id + "' in products");
        return it->second;
    };

    alg->table_.assign(dim * dim, AlgebraElement{});
    std::set<std::pair<BasisIndex, BasisIndex>> listed;
    std::set<std::tuple<BasisIndex, BasisIndex, BasisIndex>> seen_triples;
    for (const auto& product : spec.products) {
        BasisIndex i = lookup(product.left);
        BasisIndex j = lookup(product.right);
        BasisIndex k = lookup(product.result);
        if (i != j && listed.count({j, i})) {
            throw ParseError("product (" + product.left + ", " + product.right +
                             ") listed in both orientations");
        }
        if (!seen_triples.emplace(i, j, k).second) {
            throw ParseError("duplicate product entry (" + product.left + ", " + product.right + ", " +
                             product.result + ")");
        }
        listed.emplace(i, j);
        if (is_zero(product.coeff)) continue;
        if (alg->degree(k) != alg->degree(i) + alg->degree(j)) {
            throw ValidationError("degree additivity",
                                  "product " + tuple_string(*alg, {i, j, k}) + " has degree " +
                                      std::to_string(alg->degree(k)) + " but factors sum to " +
                                      std::to_string(alg->degree(i) + alg->degree(j)));
        }
        alg->table_[i * dim + j].add(k, product.coeff);
        if (i != j) alg->table_[j * dim + i].add(k, alg->swap_sign(i, j) * product.coeff);
    }

    alg->counit_.assign(dim, Scalar(0));
    for (const auto& [id, value] : spec.counit) {
        auto it = alg->index_.find(id);
        if (it == alg->index_.end()) throw ParseError("unknown basis id '" + id + "' in counit");
        alg->counit_[it->second] = value;
    }

    alg->validate();

    alg->pairing_ = Matrix(dim, dim);
    for (BasisIndex i = 0; i < dim; ++i) {
        for (BasisIndex j = 0; j < dim; ++j) {
            alg->pairing_(i, j) = alg->untwisted_counit(alg->multiply_basis(i, j));
        }
    }
    auto inv = inverse(alg->pairing_);
    if (!inv) throw ValidationError("nondegenerate pairing", "pairing matrix T(e_i e_j) is degenerate");
    alg->pairing_inverse_ = std::move(*inv);

    // T(e_i g_j) = delta_ij with g_j = sum_l X_lj e_l  =>  X = P^{-1}.
    alg->dual_.resize(dim);
    for (BasisIndex j = 0; j < dim; ++j) {
        for (BasisIndex l = 0; l < dim; ++l) alg->dual_[j].add(l, alg->pairing_inverse_(l, j));
    }

    for (const auto& [coeff, factors] : alg->structural_coproduct(alg->unit_, 2)) {
        alg->euler_ += coeff * alg->multiply_basis(factors[0], factors[1]);
    }

    alg->current_pairing_ = alg->pairing_;
    if (sign_twist) {
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) alg->current_pairing_(i, j) = -alg->pairing_(i, j);
    }
    return alg;
}

void FrobeniusAlgebra::validate() const {
    const auto dim = static_cast<BasisIndex>(basis_.size());

    for (BasisIndex i = 0; i < dim; ++i) {
        if (degree(i) % 2 != 0 && !multiply_basis(i, i).is_zero()) {
            throw ValidationError("graded commutativity",
                                  "odd class squares to a nonzero element at " + tuple_string(*this, {i, i}));
        }
    }

    for (BasisIndex i = 0; i < dim; ++i) {
        if (multiply_basis(unit_, i) != AlgebraElement::basis(i)) {
            throw ValidationError("unit law", "1 * e != e at " + tuple_string(*this, {unit_, i}));
        }
    }

    for (BasisIndex i = 0; i < dim; ++i) {
        for (BasisIndex j = 0; j < dim; ++j) {
            const auto& ij = multiply_basis(i, j);
            for (BasisIndex k = 0; k < dim; ++k) {
                AlgebraElement left = multiply(ij, AlgebraElement::basis(k));
                AlgebraElement right = multiply(AlgebraElement::basis(i), multiply_basis(j, k));
                if (left != right) {
                    throw ValidationError("associativity",
                                          "(e_i e_j) e_k != e_i (e_j e_k) at " + tuple_string(*this, {i, j, k}));
                }
            }
        }
    }

    for (BasisIndex i = 0; i < dim; ++i) {
        if (!is_zero(counit_[i]) && degree(i) != top_degree()) {
            throw ValidationError("counit support", "counit is nonzero on " + basis_[i].id + " of degree " +
                                                        std::to_string(degree(i)) + " below the top degree " +
                                                        std::to_string(top_degree()));
        }
    }
}

AlgebraPtr FrobeniusAlgebra::with_sign_twist(bool twist) const {
    std::shared_ptr<FrobeniusAlgebra> copy(new FrobeniusAlgebra(*this));
    copy->sign_twist_ = twist;
    copy->current_pairing_ = pairing_;
    if (twist) {
        for (std::size_t i = 0; i < dimension(); ++i)
            for (std::size_t j = 0; j < dimension(); ++j) copy->current_pairing_(i, j) = -pairing_(i, j);
    }
    return copy;
}

BasisIndex FrobeniusAlgebra::index_of(std::string_view id) const {
    auto it = index_.find(std::string(id));
    if (it == index_.end()) throw UnknownBasisId("unknown basis id '" + std::string(id) + "'");
    return it->second;
}

AlgebraElement FrobeniusAlgebra::element(std::string_view id, Scalar coeff) const {
    return AlgebraElement::basis(index_of(id), std::move(coeff));
}

std::optional<int> FrobeniusAlgebra::degree(const AlgebraElement& a) const {
    std::optional<int> deg;
    for (const auto& [index, coeff] : a.terms()) {
        if (index >= dimension()) throw UnknownBasisId("basis index out of range");
        if (deg && *deg != degree(index)) return std::nullopt;
        deg = degree(index);
    }
    return deg;
}

const AlgebraElement& FrobeniusAlgebra::multiply_basis(BasisIndex i, BasisIndex j) const {
    if (i >= dimension() || j >= dimension()) throw UnknownBasisId("basis index out of range");
    return table_[static_cast<std::size_t>(i) * dimension() + j];
}

AlgebraElement FrobeniusAlgebra::multiply(const AlgebraElement& a, const AlgebraElement& b) const {
    AlgebraElement out;
    for (const auto& [i, ca] : a.terms()) {
        for (const auto& [j, cb] : b.terms()) {
            const auto& product = multiply_basis(i, j);
            if (product.is_zero()) continue;
            Scalar c = ca * cb;
            for (const auto& [k, ck] : product.terms()) out.add(k, c * ck);
        }
    }
    return out;
}

Scalar FrobeniusAlgebra::untwisted_counit(const AlgebraElement& a) const {
    Scalar total = 0;
    for (const auto& [index, coeff] : a.terms()) {
        if (index >= dimension()) throw UnknownBasisId("basis index out of range");
        if (!is_zero(counit_[index])) total += coeff * counit_[index];
    }
    return total;
}

Scalar FrobeniusAlgebra::counit(const AlgebraElement& a) const {
    Scalar value = untwisted_counit(a);
    if (sign_twist_) value = -value;
    return value;
}

Scalar FrobeniusAlgebra::counit_basis(BasisIndex index) const {
    if (index >= dimension()) throw UnknownBasisId("basis index out of range");
    return sign_twist_ ? Scalar(-counit_[index]) : counit_[index];
}

Scalar FrobeniusAlgebra::pairing(const AlgebraElement& a, const AlgebraElement& b) const {
    return counit(multiply(a, b));
}

const Matrix& FrobeniusAlgebra::pairing_matrix() const { return current_pairing_; }

std::vector<AlgebraElement> FrobeniusAlgebra::dual_basis() const {
    if (!sign_twist_) return dual_;
    std::vector<AlgebraElement> out = dual_;
    for (auto& f : out) f *= Scalar(-1);
    return out;
}

TensorExpansion FrobeniusAlgebra::compute_coproduct(BasisIndex index, int k) const {
    // coefficient of e_{l_1} (x) .. (x) e_{l_k} is kappa(L) T(e_index g_{l_1} .. g_{l_k}),
    // kappa(L) the Koszul sign of the factorwise product (e_L)(g_L).
    TensorExpansion out;
    std::vector<BasisIndex> chosen;
    chosen.reserve(static_cast<std::size_t>(k));
    const auto dim = static_cast<BasisIndex>(dimension());

    auto recurse = [&](auto&& self, const AlgebraElement& partial, int odd_count) -> void {
        if (partial.is_zero()) return;
        if (static_cast<int>(chosen.size()) == k) {
            Scalar value = untwisted_counit(partial);
            if (symprod::is_zero(value)) return;
            if ((odd_count * (odd_count - 1) / 2) % 2 != 0) value = -value;
            out.emplace_back(std::move(value), chosen);
            return;
        }
        for (BasisIndex l = 0; l < dim; ++l) {
            chosen.push_back(l);
            self(self, multiply(partial, dual_[l]), odd_count + (degree(l) % 2 != 0 ? 1 : 0));
            chosen.pop_back();
        }
    };
    recurse(recurse, AlgebraElement::basis(index), 0);
    return out;
}

const TensorExpansion& FrobeniusAlgebra::structural_coproduct(BasisIndex index, int k) const {
    if (index >= dimension()) throw UnknownBasisId("basis index out of range");
    if (k < 1) throw std::invalid_argument("coproduct arity must be positive");
    std::lock_guard lock(cache_->mutex);
    auto key = std::make_pair(index, k);
    auto it = cache_->coproducts.find(key);
    if (it == cache_->coproducts.end()) {
        TensorExpansion expansion;
        if (k == 1) {
            expansion.emplace_back(Scalar(1), std::vector<BasisIndex>{index});
        } else {
            expansion = compute_coproduct(index, k);
        }
        it = cache_->coproducts.emplace(key, std::move(expansion)).first;
    }
    return it->second;
}

TensorExpansion FrobeniusAlgebra::coproduct(const AlgebraElement& a, int k) const {
    if (k < 1) throw std::invalid_argument("coproduct arity must be positive");
    std::map<std::vector<BasisIndex>, Scalar> accum;
    // Under T -> -T the adjoint picks up (-1)^(k+1).
    const bool flip = sign_twist_ && k % 2 == 0;
    for (const auto& [index, coeff] : a.terms()) {
        for (const auto& [c, factors] : structural_coproduct(index, k)) {
            accum[factors] += flip ? Scalar(-coeff * c) : Scalar(coeff * c);
        }
    }
    TensorExpansion out;
    for (auto& [factors, coeff] : accum) {
        if (!symprod::is_zero(coeff)) out.emplace_back(std::move(coeff), factors);
    }
    return out;
}

}  // namespace symprod
