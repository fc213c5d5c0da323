#include "symprod/orbifold_ring.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "symprod/errors.hpp"

namespace symprod {

RingElement::RingElement(AlgebraPtr algebra, int n) : algebra_(std::move(algebra)), n_(n) {}

RingElement::RingElement(const SectorTerm& term) : algebra_(term.tensor.algebra_ptr()), n_(term.sigma.size()) {
    add(term);
}

RingElement RingElement::unit(AlgebraPtr algebra, int n) {
    auto id = Permutation::identity(n);
    return RingElement(SectorTerm(id, OrbitTensor::unit(algebra, orbits(id))));
}

std::size_t RingElement::term_count() const {
    std::size_t total = 0;
    for (const auto& [sigma, tensor] : sectors_) total += tensor.terms().size();
    return total;
}

void RingElement::add(const SectorTerm& term) {
    if (term.tensor.algebra_ptr() != algebra_) throw AlgebraMismatch("sector term over a different algebra");
    if (term.sigma.size() != n_) throw SizeMismatch("sector term has the wrong number of points");
    if (term.tensor.is_zero()) return;
    auto it = sectors_.find(term.sigma);
    if (it == sectors_.end()) {
        sectors_.emplace(term.sigma, term.tensor);
        return;
    }
    it->second += term.tensor;
    if (it->second.is_zero()) sectors_.erase(it);
}

void RingElement::add(const Permutation& sigma, const FactorKey& key, const Scalar& coeff) {
    if (symprod::is_zero(coeff)) return;
    if (sigma.size() != n_) throw SizeMismatch("sector permutation has the wrong size");
    auto it = sectors_.find(sigma);
    if (it == sectors_.end()) it = sectors_.emplace(sigma, OrbitTensor(algebra_, orbits(sigma))).first;
    it->second.add(key, coeff);
    if (it->second.is_zero()) sectors_.erase(it);
}

Scalar RingElement::coefficient(const Permutation& sigma, const FactorKey& key) const {
    auto it = sectors_.find(sigma);
    return it == sectors_.end() ? Scalar(0) : it->second.coefficient(key);
}

const OrbitTensor* RingElement::sector(const Permutation& sigma) const {
    auto it = sectors_.find(sigma);
    return it == sectors_.end() ? nullptr : &it->second;
}

std::optional<int> RingElement::shifted_degree() const {
    std::optional<int> deg;
    for (const auto& [sigma, tensor] : sectors_) {
        auto d = tensor.degree();
        if (!d) return std::nullopt;
        int shifted = *d + degree_shift(sigma, algebra_->complex_dim());
        if (deg && *deg != shifted) return std::nullopt;
        deg = shifted;
    }
    return deg;
}

void RingElement::check_compatible(const RingElement& other) const {
    if (other.algebra_ != algebra_) throw AlgebraMismatch("ring elements over different algebras");
    if (other.n_ != n_) throw SizeMismatch("ring elements for different n");
}

RingElement& RingElement::operator+=(const RingElement& other) {
    check_compatible(other);
    for (const auto& [sigma, tensor] : other.sectors_) add(SectorTerm(sigma, tensor));
    return *this;
}

RingElement& RingElement::operator-=(const RingElement& other) {
    check_compatible(other);
    for (const auto& [sigma, tensor] : other.sectors_) {
        OrbitTensor negated = tensor;
        negated *= Scalar(-1);
        add(SectorTerm(sigma, std::move(negated)));
    }
    return *this;
}

RingElement& RingElement::operator*=(const Scalar& factor) {
    if (symprod::is_zero(factor)) {
        sectors_.clear();
        return *this;
    }
    for (auto& [sigma, tensor] : sectors_) tensor *= factor;
    return *this;
}

bool RingElement::operator==(const RingElement& other) const {
    return algebra_ == other.algebra_ && n_ == other.n_ && sectors_ == other.sectors_;
}

namespace {

void check_pair(const SectorTerm& s, const SectorTerm& t) {
    if (s.tensor.algebra_ptr() != t.tensor.algebra_ptr()) throw AlgebraMismatch("sector terms over different algebras");
    if (s.sigma.size() != t.sigma.size()) throw SizeMismatch("sector terms for different n");
}

// Multiplies block G of `t` by euler^{defect(G)}; returns zero when a
// power of the Euler class vanishes.
OrbitTensor with_euler_factors(OrbitTensor t, const std::vector<int>& defects) {
    if (std::all_of(defects.begin(), defects.end(), [](int g) { return g == 0; })) return t;
    const auto& alg = t.algebra();
    std::vector<AlgebraElement> factors;
    factors.reserve(defects.size());
    for (int g : defects) {
        AlgebraElement power = alg.unit();
        for (int i = 0; i < g; ++i) power = alg.multiply(power, alg.euler_class());
        if (power.is_zero()) return OrbitTensor(t.algebra_ptr(), t.partition());
        factors.push_back(std::move(power));
    }
    return t.multiply_factorwise(OrbitTensor::product_of(t.algebra_ptr(), t.partition(), factors));
}

Scalar twisted(const FrobeniusAlgebra& alg, Scalar value) {
    if (alg.sign_twist()) value = -value;
    return value;
}

}  // namespace

SectorTerm sector_product(const SectorTerm& s, const SectorTerm& t) {
    check_pair(s, t);
    const Permutation& pi = s.sigma;
    const Permutation& rho = t.sigma;
    Permutation product = pi * rho;
    OrbitPartition joint = joint_orbits(pi, rho);
    OrbitPartition target = orbits(product);
    if (s.tensor.is_zero() || t.tensor.is_zero()) {
        return SectorTerm(std::move(product), OrbitTensor(s.tensor.algebra_ptr(), std::move(target)));
    }
    OrbitTensor merged = s.tensor.pull(joint).multiply_factorwise(t.tensor.pull(joint));
    merged = with_euler_factors(std::move(merged), graph_defects(pi, rho));
    return SectorTerm(std::move(product), merged.push(target));
}

RingElement ring_product(const RingElement& a, const RingElement& b) {
    if (a.algebra_ptr() != b.algebra_ptr()) throw AlgebraMismatch("ring elements over different algebras");
    if (a.n() != b.n()) throw SizeMismatch("ring elements for different n");
    RingElement out(a.algebra_ptr(), a.n());
    for (const auto& [pi, s] : a.sectors()) {
        for (const auto& [rho, t] : b.sectors()) out.add(sector_product(SectorTerm(pi, s), SectorTerm(rho, t)));
    }
    return out;
}

RingElement operator*(const RingElement& a, const RingElement& b) { return ring_product(a, b); }

RingElement act(const Permutation& h, const RingElement& a) {
    if (h.size() != a.n()) throw SizeMismatch("acting permutation has the wrong size");
    RingElement out(a.algebra_ptr(), a.n());
    for (const auto& [sigma, tensor] : a.sectors()) out.add(relabel(h, SectorTerm(sigma, tensor)));
    return out;
}

InvariantElement::InvariantElement(RingElement element) : full(std::move(element)) {
    for (const auto& cls : conjugacy_classes(full.n())) {
        if (const OrbitTensor* t = full.sector(cls.representative)) by_class.emplace(cls.representative, *t);
    }
}

InvariantElement symmetrize(const RingElement& a) {
    RingElement sum(a.algebra_ptr(), a.n());
    const auto group = all_permutations(a.n());
    for (const auto& h : group) sum += act(h, a);
    sum *= make_scalar(1, static_cast<long>(group.size()));
    return InvariantElement(std::move(sum));
}

bool is_invariant(const RingElement& a) {
    const int n = a.n();
    if (n < 2) return true;
    std::vector<int> cycle(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) cycle[static_cast<std::size_t>(i)] = i;
    auto transposition = Permutation::from_cycles(n, {{0, 1}});
    auto long_cycle = Permutation::from_cycles(n, {cycle});
    return act(transposition, a) == a && act(long_cycle, a) == a;
}

namespace {

// Odometer over all keys with the given number of factors.
template <typename Visit>
void for_each_key(std::size_t factors, std::size_t dim, Visit&& visit) {
    FactorKey key(factors, 0);
    while (true) {
        visit(key);
        std::size_t pos = factors;
        while (pos > 0) {
            --pos;
            if (++key[pos] < dim) break;
            key[pos] = 0;
            if (pos == 0) return;
        }
        if (factors == 0) return;
    }
}

}  // namespace

std::vector<InvariantBasisElement> invariant_basis(const AlgebraPtr& algebra, int n, std::optional<DegreeRange> degrees) {
    std::vector<InvariantBasisElement> out;
    const auto classes = conjugacy_classes(n);
    for (std::size_t ci = 0; ci < classes.size(); ++ci) {
        const Permutation& sigma = classes[ci].representative;
        const int shift = degree_shift(sigma, algebra->complex_dim());
        const OrbitPartition partition = orbits(sigma);
        const auto stabilizer = centralizer(sigma);
        std::set<FactorKey> visited;
        for_each_key(partition.block_count(), algebra->dimension(), [&](const FactorKey& key) {
            if (visited.count(key)) return;
            OrbitTensor single(algebra, partition);
            single.add(key, Scalar(1));
            const int deg = single.term_degree(key) + shift;
            FactorKey rep = key;
            for (const auto& h : stabilizer) {
                SectorTerm moved = relabel(h, SectorTerm(sigma, single));
                const FactorKey& moved_key = moved.tensor.terms().begin()->first;
                visited.insert(moved_key);
                rep = std::min(rep, moved_key);
            }
            if (degrees && !degrees->contains(deg)) return;
            OrbitTensor rep_tensor(algebra, partition);
            rep_tensor.add(rep, Scalar(1));
            InvariantElement sym = symmetrize(RingElement(SectorTerm(sigma, rep_tensor)));
            Scalar c = sym.full.coefficient(sigma, rep);
            if (symprod::is_zero(c)) return;  // odd classes can cancel in the average
            RingElement normalized = sym.full;
            normalized *= Scalar(1 / c);
            out.push_back({InvariantElement(std::move(normalized)), sigma, rep, ci, deg});
        });
    }
    std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        return std::tie(x.shifted_degree, x.class_index, x.representative_key) <
               std::tie(y.shifted_degree, y.class_index, y.representative_key);
    });
    return out;
}

InvariantCoordinates::InvariantCoordinates(const std::vector<InvariantBasisElement>& basis) : size_(basis.size()) {
    for (std::size_t i = 0; i < basis.size(); ++i) {
        index_[basis[i].representative][basis[i].representative_key] = i;
    }
}

std::vector<std::pair<std::size_t, Scalar>> InvariantCoordinates::sparse(const RingElement& a) const {
    std::vector<std::pair<std::size_t, Scalar>> out;
    for (const auto& [sigma, keys] : index_) {
        const OrbitTensor* tensor = a.sector(sigma);
        if (!tensor) continue;
        for (const auto& [key, coeff] : tensor->terms()) {
            auto it = keys.find(key);
            if (it != keys.end()) out.emplace_back(it->second, coeff);
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    return out;
}

std::vector<Scalar> InvariantCoordinates::dense(const RingElement& a) const {
    std::vector<Scalar> out(size_);
    for (auto& [i, c] : sparse(a)) out[i] = std::move(c);
    return out;
}

std::vector<Scalar> invariant_coordinates(const std::vector<InvariantBasisElement>& basis, const RingElement& a) {
    return InvariantCoordinates(basis).dense(a);
}

std::map<int, std::size_t> invariant_dimensions(const std::vector<InvariantBasisElement>& basis) {
    std::map<int, std::size_t> dims;
    for (const auto& b : basis) ++dims[b.shifted_degree];
    return dims;
}

Scalar orbifold_counit(const RingElement& a) {
    const OrbitTensor* identity = a.sector(Permutation::identity(a.n()));
    if (!identity) return Scalar(0);
    return twisted(a.algebra(), identity->counit());
}

Scalar three_point(const SectorTerm& a, const SectorTerm& b, const SectorTerm& c) {
    check_pair(a, b);
    check_pair(a, c);
    const Permutation& h1 = a.sigma;
    const Permutation& h2 = b.sigma;
    if (!(h1 * h2 * c.sigma).is_identity()) return Scalar(0);
    OrbitPartition joint = joint_orbits(h1, h2);
    OrbitTensor merged = a.tensor.pull(joint).multiply_factorwise(b.tensor.pull(joint)).multiply_factorwise(
        c.tensor.pull(joint));
    merged = with_euler_factors(std::move(merged), graph_defects(h1, h2));
    return twisted(a.tensor.algebra(), merged.counit());
}

Scalar poincare_pair(const SectorTerm& a, const SectorTerm& b) {
    check_pair(a, b);
    if (!(b.sigma == a.sigma.inverse())) return Scalar(0);
    return twisted(a.tensor.algebra(), a.tensor.multiply_factorwise(b.tensor).counit());
}

Scalar poincare_pair(const RingElement& a, const RingElement& b) {
    Scalar total = 0;
    for (const auto& [sigma, s] : a.sectors()) {
        const OrbitTensor* t = b.sector(sigma.inverse());
        if (t) total += poincare_pair(SectorTerm(sigma, s), SectorTerm(sigma.inverse(), *t));
    }
    return total;
}

Scalar three_point(const RingElement& a, const RingElement& b, const RingElement& c) {
    Scalar total = 0;
    for (const auto& [h1, s] : a.sectors()) {
        for (const auto& [h2, t] : b.sectors()) {
            Permutation h3 = (h1 * h2).inverse();
            const OrbitTensor* u = c.sector(h3);
            if (u) total += three_point(SectorTerm(h1, s), SectorTerm(h2, t), SectorTerm(h3, *u));
        }
    }
    return total;
}

std::vector<SectorTerm> split_terms(const RingElement& a) {
    std::vector<SectorTerm> out;
    for (const auto& [sigma, tensor] : a.sectors()) {
        for (const auto& [key, coeff] : tensor.terms()) {
            OrbitTensor single(a.algebra_ptr(), tensor.partition());
            single.add(key, coeff);
            out.emplace_back(sigma, std::move(single));
        }
    }
    return out;
}

}  // namespace symprod
