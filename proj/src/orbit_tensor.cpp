#include "symprod/orbit_tensor.hpp"

#include <functional>

#include "symprod/errors.hpp"

namespace symprod {

int koszul_sign(std::span<const int> degrees, std::span<const std::size_t> order) {
    int inversions = 0;
    for (std::size_t a = 0; a < order.size(); ++a) {
        if (degrees[order[a]] % 2 == 0) continue;
        for (std::size_t b = a + 1; b < order.size(); ++b) {
            if (degrees[order[b]] % 2 != 0 && order[b] < order[a]) ++inversions;
        }
    }
    return inversions % 2 == 0 ? 1 : -1;
}

namespace {

// Expands a tensor product of sparse factors into `out`, scaled by `coeff`.
void expand_into(OrbitTensor& out, const std::vector<AlgebraElement>& factors, const Scalar& coeff) {
    FactorKey key(factors.size());
    std::function<void(std::size_t, const Scalar&)> recurse = [&](std::size_t pos, const Scalar& c) {
        if (pos == factors.size()) {
            out.add(key, c);
            return;
        }
        for (const auto& [index, value] : factors[pos].terms()) {
            key[pos] = index;
            recurse(pos + 1, c * value);
        }
    };
    for (const auto& f : factors) {
        if (f.is_zero()) return;
    }
    recurse(0, coeff);
}

}  // namespace

OrbitTensor::OrbitTensor(AlgebraPtr algebra, OrbitPartition partition)
    : algebra_(std::move(algebra)), partition_(std::move(partition)) {}

OrbitTensor OrbitTensor::unit(AlgebraPtr algebra, OrbitPartition partition) {
    OrbitTensor out(algebra, partition);
    out.add(FactorKey(out.partition_.block_count(), algebra->unit_index()), Scalar(1));
    return out;
}

OrbitTensor OrbitTensor::product_of(AlgebraPtr algebra, OrbitPartition partition,
                                    const std::vector<AlgebraElement>& factors) {
    OrbitTensor out(std::move(algebra), std::move(partition));
    if (factors.size() != out.partition_.block_count()) {
        throw SizeMismatch("one factor per block is required");
    }
    expand_into(out, factors, Scalar(1));
    return out;
}

void OrbitTensor::check_key(const FactorKey& key) const {
    if (key.size() != partition_.block_count()) {
        throw SizeMismatch("tensor key has " + std::to_string(key.size()) + " factors, partition has " +
                           std::to_string(partition_.block_count()) + " blocks");
    }
    for (BasisIndex i : key) {
        if (i >= algebra_->dimension()) throw UnknownBasisId("basis index out of range");
    }
}

void OrbitTensor::add(const FactorKey& key, const Scalar& coeff) {
    if (symprod::is_zero(coeff)) return;
    check_key(key);
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (inserted) return;
    it->second += coeff;
    if (symprod::is_zero(it->second)) terms_.erase(it);
}

Scalar OrbitTensor::coefficient(const FactorKey& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Scalar(0) : it->second;
}

int OrbitTensor::term_degree(const FactorKey& key) const {
    int total = 0;
    for (BasisIndex i : key) total += algebra_->degree(i);
    return total;
}

std::optional<int> OrbitTensor::degree() const {
    std::optional<int> deg;
    for (const auto& [key, coeff] : terms_) {
        int d = term_degree(key);
        if (deg && *deg != d) return std::nullopt;
        deg = d;
    }
    return deg;
}

OrbitTensor& OrbitTensor::operator+=(const OrbitTensor& other) {
    if (other.algebra_ != algebra_) throw AlgebraMismatch("tensors over different algebras");
    if (!(other.partition_ == partition_)) throw SizeMismatch("tensors over different partitions");
    for (const auto& [key, coeff] : other.terms_) add(key, coeff);
    return *this;
}

OrbitTensor& OrbitTensor::operator*=(const Scalar& factor) {
    if (symprod::is_zero(factor)) {
        terms_.clear();
        return *this;
    }
    for (auto& [key, coeff] : terms_) coeff *= factor;
    return *this;
}

bool OrbitTensor::operator==(const OrbitTensor& other) const {
    return algebra_ == other.algebra_ && partition_ == other.partition_ && terms_ == other.terms_;
}

OrbitTensor OrbitTensor::multiply_factorwise(const OrbitTensor& other) const {
    if (other.algebra_ != algebra_) throw AlgebraMismatch("tensors over different algebras");
    if (!(other.partition_ == partition_)) throw SizeMismatch("factorwise product needs equal partitions");
    const std::size_t m = partition_.block_count();
    OrbitTensor out(algebra_, partition_);
    std::vector<AlgebraElement> factors(m);
    for (const auto& [a, ca] : terms_) {
        for (const auto& [b, cb] : other.terms_) {
            // Moving b_j left past a_i for i > j.
            int odd_passes = 0;
            for (std::size_t j = 0; j < m; ++j) {
                if (algebra_->degree(b[j]) % 2 == 0) continue;
                for (std::size_t i = j + 1; i < m; ++i) {
                    if (algebra_->degree(a[i]) % 2 != 0) ++odd_passes;
                }
            }
            for (std::size_t i = 0; i < m; ++i) factors[i] = algebra_->multiply_basis(a[i], b[i]);
            Scalar c = ca * cb;
            if (odd_passes % 2 != 0) c = -c;
            expand_into(out, factors, c);
        }
    }
    return out;
}

OrbitTensor OrbitTensor::pull(const OrbitPartition& coarse) const {
    if (!partition_.refines(coarse)) throw NotCoarsening("target partition does not coarsen the source");
    const std::size_t fine_count = partition_.block_count();
    const std::size_t coarse_count = coarse.block_count();

    // Fine blocks grouped by coarse block, each group in canonical order.
    std::vector<std::vector<std::size_t>> groups(coarse_count);
    for (std::size_t f = 0; f < fine_count; ++f) groups[coarse.block_of(partition_.block(f).front())].push_back(f);
    std::vector<std::size_t> order;
    for (const auto& g : groups) order.insert(order.end(), g.begin(), g.end());

    OrbitTensor out(algebra_, coarse);
    std::vector<int> degrees(fine_count);
    std::vector<AlgebraElement> factors(coarse_count);
    for (const auto& [key, coeff] : terms_) {
        for (std::size_t f = 0; f < fine_count; ++f) degrees[f] = algebra_->degree(key[f]);
        bool vanished = false;
        for (std::size_t c = 0; c < coarse_count && !vanished; ++c) {
            AlgebraElement product = algebra_->unit();
            for (std::size_t f : groups[c]) product = algebra_->multiply(product, AlgebraElement::basis(key[f]));
            vanished = product.is_zero();
            factors[c] = std::move(product);
        }
        if (vanished) continue;
        Scalar c = coeff;
        if (koszul_sign(degrees, order) < 0) c = -c;
        expand_into(out, factors, c);
    }
    return out;
}

OrbitTensor OrbitTensor::push(const OrbitPartition& fine) const {
    if (!fine.refines(partition_)) throw NotRefinement("target partition does not refine the source");
    const std::size_t coarse_count = partition_.block_count();
    const std::size_t fine_count = fine.block_count();

    std::vector<std::vector<std::size_t>> groups(coarse_count);
    for (std::size_t f = 0; f < fine_count; ++f) groups[partition_.block_of(fine.block(f).front())].push_back(f);
    // grouped position p holds fine block order[p]; canonical position f
    // holds grouped position inverse[f].
    std::vector<std::size_t> order;
    for (const auto& g : groups) order.insert(order.end(), g.begin(), g.end());
    std::vector<std::size_t> inverse(fine_count);
    for (std::size_t p = 0; p < fine_count; ++p) inverse[order[p]] = p;

    OrbitTensor out(algebra_, fine);
    std::vector<BasisIndex> grouped(fine_count);
    std::vector<int> degrees(fine_count);
    FactorKey key(fine_count);

    for (const auto& [coarse_key, coeff] : terms_) {
        std::vector<const TensorExpansion*> splits(coarse_count);
        for (std::size_t c = 0; c < coarse_count; ++c) {
            splits[c] = &algebra_->structural_coproduct(coarse_key[c], static_cast<int>(groups[c].size()));
        }
        std::function<void(std::size_t, std::size_t, const Scalar&)> recurse = [&](std::size_t c, std::size_t pos,
                                                                                   const Scalar& value) {
            if (c == coarse_count) {
                for (std::size_t p = 0; p < fine_count; ++p) degrees[p] = algebra_->degree(grouped[p]);
                for (std::size_t f = 0; f < fine_count; ++f) key[f] = grouped[inverse[f]];
                // Reorder from grouped to canonical: new position f takes grouped inverse[f].
                out.add(key, koszul_sign(degrees, inverse) < 0 ? Scalar(-value) : value);
                return;
            }
            for (const auto& [split_coeff, split_factors] : *splits[c]) {
                for (std::size_t i = 0; i < split_factors.size(); ++i) grouped[pos + i] = split_factors[i];
                recurse(c + 1, pos + split_factors.size(), value * split_coeff);
            }
        };
        recurse(0, 0, coeff);
    }
    return out;
}

Scalar OrbitTensor::counit() const {
    Scalar total = 0;
    for (const auto& [key, coeff] : terms_) {
        Scalar value = coeff;
        for (BasisIndex i : key) {
            value *= algebra_->untwisted_counit_basis(i);
            if (symprod::is_zero(value)) break;
        }
        total += value;
    }
    return total;
}

Scalar tensor_pairing(const OrbitTensor& t, const OrbitTensor& u) { return t.multiply_factorwise(u).counit(); }

SectorTerm::SectorTerm(Permutation s, OrbitTensor t) : sigma(std::move(s)), tensor(std::move(t)) {
    if (tensor.partition().size() != sigma.size()) throw SizeMismatch("sector tensor has the wrong number of points");
    if (!(tensor.partition() == orbits(sigma))) {
        throw std::invalid_argument("sector tensor partition differs from the orbits of " + sigma.to_string());
    }
}

std::optional<int> shifted_degree(const SectorTerm& term) {
    auto deg = term.tensor.degree();
    if (!deg) return std::nullopt;
    return *deg + degree_shift(term.sigma, term.tensor.algebra().complex_dim());
}

SectorTerm relabel(const Permutation& h, const SectorTerm& term) {
    if (h.size() != term.sigma.size()) throw SizeMismatch("relabel by a permutation of a different size");
    Permutation target_sigma = conjugate(h, term.sigma);
    OrbitPartition target = orbits(target_sigma);
    const auto& source = term.tensor.partition();
    const std::size_t m = source.block_count();

    std::vector<std::size_t> moved_to(m);
    for (std::size_t b = 0; b < m; ++b) moved_to[b] = target.block_of(h(source.block(b).front()));
    std::vector<std::size_t> order(m);  // new position j holds old block order[j]
    for (std::size_t b = 0; b < m; ++b) order[moved_to[b]] = b;

    OrbitTensor out(term.tensor.algebra_ptr(), target);
    std::vector<int> degrees(m);
    FactorKey key(m);
    for (const auto& [old_key, coeff] : term.tensor.terms()) {
        for (std::size_t b = 0; b < m; ++b) {
            degrees[b] = term.tensor.algebra().degree(old_key[b]);
            key[moved_to[b]] = old_key[b];
        }
        out.add(key, koszul_sign(degrees, order) < 0 ? Scalar(-coeff) : coeff);
    }
    return SectorTerm(std::move(target_sigma), std::move(out));
}

}  // namespace symprod
