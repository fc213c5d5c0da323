#include "property_suite.hpp"

#include <algorithm>
#include <iomanip>
#include <numeric>
#include <sstream>

#include "symprod/betti.hpp"
#include "symprod/errors.hpp"
#include "symprod/table.hpp"

namespace symprod::suite {

void PropertyResult::record(bool success, const std::function<std::string()>& describe) {
    if (success) {
        ++passed;
        return;
    }
    if (failed == 0) first_failure = describe();
    ++failed;
}

namespace {

Scalar random_coefficient(Rng& rng) {
    std::uniform_int_distribution<int> dist(1, 3);
    int value = dist(rng);
    return Scalar(std::bernoulli_distribution(0.5)(rng) ? value : -value);
}

BasisIndex random_index(const FrobeniusAlgebra& alg, Rng& rng) {
    std::uniform_int_distribution<std::size_t> dist(0, alg.dimension() - 1);
    return static_cast<BasisIndex>(dist(rng));
}

AlgebraElement random_algebra_element(const FrobeniusAlgebra& alg, Rng& rng) {
    AlgebraElement out;
    const int terms = std::uniform_int_distribution<int>(1, 3)(rng);
    for (int i = 0; i < terms; ++i) out.add(random_index(alg, rng), random_coefficient(rng));
    return out;
}

FactorKey random_key(const FrobeniusAlgebra& alg, std::size_t blocks, Rng& rng) {
    FactorKey key(blocks);
    for (auto& k : key) k = random_index(alg, rng);
    return key;
}

OrbitTensor random_tensor(const AlgebraPtr& algebra, const OrbitPartition& partition, Rng& rng) {
    OrbitTensor out(algebra, partition);
    const int terms = std::uniform_int_distribution<int>(1, 2)(rng);
    for (int i = 0; i < terms; ++i) out.add(random_key(*algebra, partition.block_count(), rng), random_coefficient(rng));
    return out;
}

bool all_even(const FrobeniusAlgebra& alg) {
    return std::all_of(alg.basis().begin(), alg.basis().end(), [](const auto& b) { return b.degree % 2 == 0; });
}

std::string show(const SectorTerm& s) {
    std::ostringstream os;
    os << "(" << s.sigma.to_string() << ": ";
    for (const auto& [key, coeff] : s.tensor.terms()) {
        os << to_string(coeff) << "*[";
        for (std::size_t i = 0; i < key.size(); ++i) os << (i ? "," : "") << s.tensor.algebra().id(key[i]);
        os << "] ";
    }
    os << ")";
    return os.str();
}

std::string show_element(const RingElement& a) {
    std::ostringstream os;
    os << "{";
    for (const auto& t : split_terms(a)) os << show(t);
    os << "}";
    return os.str();
}

std::string show_triple(const FrobeniusAlgebra& alg, BasisIndex i, BasisIndex j, BasisIndex k) {
    return "(" + alg.id(i) + ", " + alg.id(j) + ", " + alg.id(k) + ")";
}

int parity_sign(long exponent) { return exponent % 2 == 0 ? 1 : -1; }

// <u_1 (x) .. (x) u_k, b_1 (x) .. (x) b_k> for basis tensors, with the sign
// of moving every b_i past u_{i+1}, .., u_k.
Scalar basis_tensor_pairing(const FrobeniusAlgebra& alg, const std::vector<BasisIndex>& u,
                            const std::vector<BasisIndex>& b) {
    long exponent = 0;
    for (std::size_t i = 0; i < b.size(); ++i) {
        for (std::size_t j = i + 1; j < u.size(); ++j) exponent += static_cast<long>(alg.degree(b[i])) * alg.degree(u[j]);
    }
    Scalar value = parity_sign(exponent);
    for (std::size_t i = 0; i < u.size(); ++i) {
        value *= alg.counit(alg.multiply_basis(u[i], b[i]));
        if (is_zero(value)) break;
    }
    return value;
}

}  // namespace

Permutation random_permutation(int n, Rng& rng) {
    std::vector<int> image(static_cast<std::size_t>(n));
    std::iota(image.begin(), image.end(), 0);
    std::shuffle(image.begin(), image.end(), rng);
    return Permutation(std::move(image));
}

SectorTerm random_sector_term(const AlgebraPtr& algebra, const Permutation& sigma, Rng& rng) {
    OrbitPartition partition = orbits(sigma);
    OrbitTensor tensor(algebra, partition);
    tensor.add(random_key(*algebra, partition.block_count(), rng), random_coefficient(rng));
    return SectorTerm(sigma, std::move(tensor));
}

SectorTerm random_sector_term(const AlgebraPtr& algebra, int n, Rng& rng) {
    return random_sector_term(algebra, random_permutation(n, rng), rng);
}

RingElement random_element(const AlgebraPtr& algebra, int n, Rng& rng) {
    RingElement out(algebra, n);
    const int terms = std::uniform_int_distribution<int>(1, 3)(rng);
    for (int i = 0; i < terms; ++i) out.add(random_sector_term(algebra, n, rng));
    return out;
}

std::vector<SectorTerm> total_ring_basis(const AlgebraPtr& algebra, int n) {
    std::vector<SectorTerm> out;
    const std::size_t dim = algebra->dimension();
    for (const auto& sigma : all_permutations(n)) {
        OrbitPartition partition = orbits(sigma);
        FactorKey key(partition.block_count(), 0);
        while (true) {
            OrbitTensor t(algebra, partition);
            t.add(key, Scalar(1));
            out.emplace_back(sigma, std::move(t));
            std::size_t pos = 0;
            while (pos < key.size() && ++key[pos] == dim) key[pos++] = 0;
            if (pos == key.size()) break;
        }
    }
    return out;
}

std::vector<PropertyResult> algebra_properties(const AlgebraPtr& algebra, Rng& rng, std::size_t iters) {
    const auto& alg = *algebra;
    const auto dim = static_cast<BasisIndex>(alg.dimension());
    PropertyResult assoc{"algebra", "associativity"};
    PropertyResult comm{"algebra", "graded commutativity"};
    PropertyResult unit{"algebra", "unit law"};
    for (BasisIndex i = 0; i < dim; ++i) {
        unit.record(alg.multiply_basis(alg.unit_index(), i) == AlgebraElement::basis(i),
                    [&] { return "1 * " + alg.id(i); });
        for (BasisIndex j = 0; j < dim; ++j) {
            comm.record(alg.multiply_basis(i, j) == Scalar(alg.swap_sign(i, j)) * alg.multiply_basis(j, i),
                        [&] { return "(" + alg.id(i) + ", " + alg.id(j) + ")"; });
            for (BasisIndex k = 0; k < dim; ++k) {
                auto left = alg.multiply(alg.multiply_basis(i, j), AlgebraElement::basis(k));
                auto right = alg.multiply(AlgebraElement::basis(i), alg.multiply_basis(j, k));
                assoc.record(left == right, [&] { return show_triple(alg, i, j, k); });
            }
        }
    }

    PropertyResult dual{"algebra", "dual basis"};
    const auto duals = alg.dual_basis();
    for (BasisIndex i = 0; i < dim; ++i) {
        auto deg = alg.degree(duals[i]);
        dual.record(deg && *deg == alg.top_degree() - alg.degree(i), [&] { return "degree of dual of " + alg.id(i); });
        for (BasisIndex j = 0; j < dim; ++j) {
            Scalar expected = i == j ? 1 : 0;
            dual.record(alg.pairing(AlgebraElement::basis(i), duals[j]) == expected,
                        [&] { return "pairing(" + alg.id(i) + ", f^" + alg.id(j) + ")"; });
        }
    }

    PropertyResult adjoint{"algebra", "coproduct adjointness"};
    for (std::size_t it = 0; it < iters; ++it) {
        const int k = static_cast<int>(1 + it % 3);
        AlgebraElement a = random_algebra_element(alg, rng);
        std::vector<BasisIndex> b(static_cast<std::size_t>(k));
        for (auto& x : b) x = random_index(alg, rng);
        Scalar lhs = 0;
        for (const auto& [c, u] : alg.coproduct(a, k)) lhs += c * basis_tensor_pairing(alg, u, b);
        AlgebraElement product = a;
        for (BasisIndex x : b) product = alg.multiply(product, AlgebraElement::basis(x));
        Scalar rhs = alg.counit(product);
        adjoint.record(lhs == rhs, [&] { return "k = " + std::to_string(k) + ": " + to_string(lhs) + " vs " + to_string(rhs); });
    }

    PropertyResult euler{"algebra", "euler class counit"};
    long signed_count = 0;
    for (const auto& b : alg.basis()) signed_count += b.degree % 2 == 0 ? 1 : -1;
    Scalar euler_counit = alg.with_sign_twist(false)->counit(alg.euler_class());
    auto euler_deg = alg.degree(alg.euler_class());
    euler.record(euler_counit == signed_count && (alg.euler_class().is_zero() || euler_deg == alg.top_degree()),
                 [&] { return "counit " + to_string(euler_counit) + ", signed count " + std::to_string(signed_count); });

    PropertyResult twist{"algebra", "euler class twist independence"};
    twist.record(alg.with_sign_twist(!alg.sign_twist())->euler_class() == alg.euler_class(),
                 [] { return std::string("twisted euler class differs"); });

    return {assoc, comm, unit, dual, adjoint, euler, twist};
}

std::vector<PropertyResult> permutation_properties(int n, Rng& rng, std::size_t iters) {
    PropertyResult orbit_count{"permutations", "length + orbits = n"};
    PropertyResult conj{"permutations", "conjugation invariance"};
    PropertyResult defect{"permutations", "graph defect integral and nonnegative"};
    PropertyResult symmetry{"permutations", "graph defect symmetry"};
    PropertyResult classes{"permutations", "conjugacy class sizes"};

    auto check_single = [&](const Permutation& sigma, const Permutation& h) {
        orbit_count.record(length(sigma) + static_cast<int>(orbits(sigma).block_count()) == n,
                           [&] { return sigma.to_string(); });
        Permutation c = conjugate(h, sigma);
        conj.record(length(c) == length(sigma) && degree_shift(c, 2) == degree_shift(sigma, 2) &&
                        cycle_type(c) == cycle_type(sigma),
                    [&] { return sigma.to_string() + " by " + h.to_string(); });
    };
    auto check_pair = [&](const Permutation& pi, const Permutation& rho) {
        std::vector<int> g;
        try {
            g = graph_defects(pi, rho);
            defect.record(true, {});
        } catch (const Error& e) {
            defect.record(false, [&] { return pi.to_string() + ", " + rho.to_string() + ": " + e.what(); });
            return;
        }
        symmetry.record(graph_defects(rho.inverse(), pi.inverse()) == g,
                        [&] { return pi.to_string() + ", " + rho.to_string(); });
    };

    if (n <= 5) {
        const auto group = all_permutations(n);
        for (const auto& sigma : group) check_single(sigma, random_permutation(n, rng));
        for (const auto& pi : group) {
            for (const auto& rho : group) check_pair(pi, rho);
        }
    } else {
        for (std::size_t i = 0; i < iters; ++i) {
            check_single(random_permutation(n, rng), random_permutation(n, rng));
            check_pair(random_permutation(n, rng), random_permutation(n, rng));
        }
    }

    const std::size_t order = factorial(n);
    std::size_t total = 0;
    for (const auto& cls : conjugacy_classes(n)) {
        total += cls.class_size;
        classes.record(cls.class_size * cls.centralizer_order == order && cycle_type(cls.representative) == cls.type,
                       [&] { return cls.representative.to_string(); });
    }
    classes.record(total == order, [&] { return "class sizes sum to " + std::to_string(total); });
    return {orbit_count, conj, defect, symmetry, classes};
}

std::vector<PropertyResult> tensor_properties(const AlgebraPtr& algebra, int n, Rng& rng, std::size_t iters) {
    PropertyResult pull_ring{"tensors", "pull is a ring map"};
    PropertyResult adjoint{"tensors", "push/pull adjointness"};
    PropertyResult action{"tensors", "relabel action law"};
    PropertyResult degree{"tensors", "relabel preserves shifted degree"};
    PropertyResult even{"tensors", "even algebras fold no signs"};
    const bool even_algebra = all_even(*algebra);

    for (std::size_t it = 0; it < iters; ++it) {
        Permutation pi = random_permutation(n, rng);
        Permutation rho = random_permutation(n, rng);
        OrbitPartition fine = orbits(pi);
        OrbitPartition joint = joint_orbits(pi, rho);
        OrbitPartition target = orbits(pi * rho);

        OrbitTensor t = random_tensor(algebra, fine, rng);
        OrbitTensor u = random_tensor(algebra, fine, rng);
        pull_ring.record(t.multiply_factorwise(u).pull(joint) == t.pull(joint).multiply_factorwise(u.pull(joint)),
                         [&] { return pi.to_string() + " into joint orbits with " + rho.to_string(); });

        OrbitTensor coarse = random_tensor(algebra, joint, rng);
        OrbitTensor split = random_tensor(algebra, target, rng);
        adjoint.record(tensor_pairing(coarse.push(target), split) == tensor_pairing(coarse, split.pull(joint)),
                       [&] { return pi.to_string() + ", " + rho.to_string(); });

        SectorTerm s = random_sector_term(algebra, pi, rng);
        Permutation h1 = random_permutation(n, rng);
        Permutation h2 = random_permutation(n, rng);
        SectorTerm nested = relabel(h1, relabel(h2, s));
        SectorTerm direct = relabel(h1 * h2, s);
        action.record(nested.sigma == direct.sigma && nested.tensor == direct.tensor,
                      [&] { return show(s) + " by " + h1.to_string() + ", " + h2.to_string(); });
        degree.record(shifted_degree(direct) == shifted_degree(s), [&] { return show(s); });
        if (even_algebra) {
            even.record(direct.tensor.terms().begin()->second == s.tensor.terms().begin()->second,
                        [&] { return show(s) + " by " + (h1 * h2).to_string(); });
        }
    }
    std::vector<PropertyResult> out{pull_ring, adjoint, action, degree};
    if (even_algebra) out.push_back(even);
    return out;
}

std::vector<PropertyResult> ring_properties(const AlgebraPtr& algebra, const Options& options, Rng& rng) {
    const int n = options.n;
    PropertyResult assoc{"ring", "associativity"};
    PropertyResult unit_law{"ring", "unit law"};
    PropertyResult distrib{"ring", "distributivity"};
    PropertyResult additivity{"ring", "shifted degree additivity"};
    PropertyResult braided{"ring", "braided commutativity"};
    PropertyResult graded{"ring", "graded commutativity of invariants"};
    PropertyResult equivariance{"ring", "equivariance"};
    PropertyResult closure{"ring", "invariance closure"};
    PropertyResult projector{"ring", "symmetrize is a projector"};
    PropertyResult degeneration{"ring", "n = 1 degeneration"};

    const RingElement one = RingElement::unit(algebra, n);

    auto check_pair = [&](const SectorTerm& s, const SectorTerm& t) {
        RingElement a(s), b(t);
        RingElement ab = a * b;
        if (!ab.is_zero()) {
            auto deg = ab.shifted_degree();
            additivity.record(deg && *deg == *shifted_degree(s) + *shifted_degree(t),
                              [&] { return show(s) + " * " + show(t); });
        }
        // (a, sigma)(b, rho) = +-(sigma . b)(a, sigma)
        RingElement swapped = act(s.sigma, b) * a;
        const int sign = parity_sign(static_cast<long>(*s.tensor.degree()) * *t.tensor.degree());
        braided.record(ab == Scalar(sign) * swapped, [&] { return show(s) + ", " + show(t); });
    };
    auto check_triple = [&](const RingElement& a, const RingElement& b, const RingElement& c) {
        assoc.record((a * b) * c == a * (b * c),
                     [&] { return show_element(a) + " " + show_element(b) + " " + show_element(c); });
        distrib.record(a * (b + c) == a * b + a * c && (a + b) * c == a * c + b * c,
                       [&] { return show_element(a) + " " + show_element(b) + " " + show_element(c); });
    };

    const auto basis = total_ring_basis(algebra, n);
    const std::size_t m = basis.size();
    if (m * m * m <= options.exhaustive_limit) {
        std::vector<RingElement> elems;
        for (const auto& s : basis) elems.emplace_back(s);
        for (std::size_t i = 0; i < m; ++i) {
            unit_law.record(elems[i] * one == elems[i] && one * elems[i] == elems[i], [&] { return show(basis[i]); });
            for (std::size_t j = 0; j < m; ++j) {
                check_pair(basis[i], basis[j]);
                for (std::size_t k = 0; k < m; ++k) check_triple(elems[i], elems[j], elems[k]);
            }
        }
    } else {
        for (std::size_t it = 0; it < options.iters; ++it) {
            RingElement a = random_element(algebra, n, rng);
            unit_law.record(a * one == a && one * a == a, [&] { return show_element(a); });
            check_pair(random_sector_term(algebra, n, rng), random_sector_term(algebra, n, rng));
            check_triple(a, random_element(algebra, n, rng), random_element(algebra, n, rng));
        }
    }

    for (std::size_t it = 0; it < options.iters; ++it) {
        Permutation h = random_permutation(n, rng);
        RingElement a = random_element(algebra, n, rng);
        RingElement b = random_element(algebra, n, rng);
        equivariance.record(act(h, a * b) == act(h, a) * act(h, b),
                            [&] { return h.to_string() + " on " + show_element(a) + " " + show_element(b); });
    }

    const auto inv_basis = invariant_basis(algebra, n);
    auto check_invariants = [&](const RingElement& a, const RingElement& b) {
        RingElement ab = a * b;
        RingElement ba = b * a;
        auto da = a.shifted_degree();
        auto db = b.shifted_degree();
        const int sign = (da && db) ? parity_sign(static_cast<long>(*da) * *db) : 1;
        graded.record(ab == Scalar(sign) * ba, [&] { return show_element(a) + " " + show_element(b); });
        closure.record(is_invariant(ab), [&] { return show_element(a) + " " + show_element(b); });
    };
    if (inv_basis.size() * inv_basis.size() <= options.exhaustive_limit) {
        for (const auto& x : inv_basis) {
            for (const auto& y : inv_basis) check_invariants(x.element.full, y.element.full);
        }
    } else {
        std::uniform_int_distribution<std::size_t> pick(0, inv_basis.size() - 1);
        for (std::size_t it = 0; it < options.iters; ++it) {
            check_invariants(inv_basis[pick(rng)].element.full, inv_basis[pick(rng)].element.full);
        }
    }
    const std::size_t projector_iters = std::min<std::size_t>(options.iters, n <= 4 ? options.iters : 10);
    for (std::size_t it = 0; it < projector_iters; ++it) {
        RingElement a = random_element(algebra, n, rng);
        InvariantElement once = symmetrize(a);
        projector.record(is_invariant(once.full) && symmetrize(once.full).full == once.full,
                         [&] { return show_element(a); });
    }

    // n = 1: invariant basis, degrees and structure constants are those of the algebra.
    MultiplicationTable table(algebra, 1);
    const auto& alg = *algebra;
    degeneration.record(table.size() == alg.dimension(), [&] { return "basis size " + std::to_string(table.size()); });
    if (table.size() == alg.dimension()) {
        // Match table basis to algebra basis by representative key.
        std::vector<BasisIndex> to_alg(table.size());
        for (std::size_t i = 0; i < table.size(); ++i) {
            const auto& b = table.basis()[i];
            to_alg[i] = b.representative_key.front();
            degeneration.record(b.shifted_degree == alg.degree(to_alg[i]) &&
                                    b.element.full.coefficient(b.representative, b.representative_key) == 1 &&
                                    b.element.full.term_count() == 1,
                                [&] { return "basis element " + alg.id(to_alg[i]); });
        }
        for (std::size_t i = 0; i < table.size(); ++i) {
            std::map<std::size_t, AlgebraElement> products;
            for (const auto& [j, k, c] : table.row(i).entries) products[j].add(to_alg[k], c);
            for (std::size_t j = 0; j < table.size(); ++j) {
                degeneration.record(products[j] == alg.multiply_basis(to_alg[i], to_alg[j]),
                                    [&] { return alg.id(to_alg[i]) + " * " + alg.id(to_alg[j]); });
            }
        }
    }

    return {assoc, unit_law, distrib, additivity, braided, graded, equivariance, closure, projector, degeneration};
}

std::vector<PropertyResult> duality_properties(const AlgebraPtr& algebra, int n, Rng& rng, std::size_t iters) {
    PropertyResult pair_vs_three{"duality", "poincare pair = three-point with unit"};
    PropertyResult three_vs_product{"duality", "three-point = counit((a b) c)"};
    PropertyResult cyclic{"duality", "three-point cyclic symmetry"};
    PropertyResult nondegenerate{"duality", "nondegenerate pairing"};
    const bool even_algebra = all_even(*algebra);
    const SectorTerm unit_term(Permutation::identity(n), OrbitTensor::unit(algebra, OrbitPartition::singletons(n)));
    const RingElement unit(unit_term);

    for (std::size_t it = 0; it < iters; ++it) {
        SectorTerm a = random_sector_term(algebra, n, rng);
        Permutation rho = std::bernoulli_distribution(0.7)(rng) ? a.sigma.inverse() : random_permutation(n, rng);
        SectorTerm b = random_sector_term(algebra, rho, rng);
        pair_vs_three.record(poincare_pair(a, b) == three_point(a, b, unit_term) &&
                                 poincare_pair(RingElement(a), RingElement(b)) ==
                                     three_point(RingElement(a), RingElement(b), unit),
                             [&] { return show(a) + ", " + show(b); });

        SectorTerm c = random_sector_term(algebra, (a.sigma * b.sigma).inverse(), rng);
        Scalar value = three_point(a, b, c);
        three_vs_product.record(value == orbifold_counit((RingElement(a) * RingElement(b)) * RingElement(c)),
                                [&] { return show(a) + ", " + show(b) + ", " + show(c); });
        if (even_algebra) {
            cyclic.record(value == three_point(b, c, a) && value == three_point(c, a, b),
                          [&] { return show(a) + ", " + show(b) + ", " + show(c); });
        }
    }

    std::vector<PropertyResult> out{pair_vs_three, three_vs_product};
    if (even_algebra) out.push_back(cyclic);

    const auto basis = invariant_basis(algebra, n);
    if (basis.size() <= 400) {
        const int top = 2 * algebra->complex_dim() * n;
        std::map<int, std::vector<std::size_t>> by_degree;
        for (std::size_t i = 0; i < basis.size(); ++i) by_degree[basis[i].shifted_degree].push_back(i);
        for (const auto& [k, rows] : by_degree) {
            if (2 * k > top) break;
            auto it = by_degree.find(top - k);
            if (it == by_degree.end() || it->second.size() != rows.size()) {
                nondegenerate.record(false, [&, k = k] { return "degree " + std::to_string(k) + " has no dual piece"; });
                continue;
            }
            const auto& cols = it->second;
            Matrix m(rows.size(), cols.size());
            for (std::size_t r = 0; r < rows.size(); ++r) {
                for (std::size_t c = 0; c < cols.size(); ++c) {
                    m(r, c) = poincare_pair(basis[rows[r]].element.full, basis[cols[c]].element.full);
                }
            }
            nondegenerate.record(rank(m) == rows.size(),
                                 [&, k = k] { return "degree " + std::to_string(k) + " against " + std::to_string(top - k); });
        }
        out.push_back(nondegenerate);
    }
    return out;
}

std::vector<PropertyResult> betti_properties(const AlgebraPtr& algebra, int n) {
    PropertyResult dual_path{"betti", "ring dimensions = projector ranks"};
    PropertyResult palindrome{"betti", "palindromic Poincare polynomial"};
    BettiReport report = compare(algebra, n, false);
    dual_path.record(report.ring_matches_oracle, [] { return std::string("per-degree dimensions differ"); });
    palindrome.record(is_palindromic(report.oracle_side, n * algebra->complex_dim()),
                      [] { return std::string("not palindromic"); });
    std::vector<PropertyResult> out{dual_path, palindrome};
    if (algebra->complex_dim() == 2) {
        PropertyResult first{"betti", "gottsche n = 1 is the Betti table"};
        first.record(gottsche_polynomial(*algebra, 1) == betti_table(*algebra), [] { return std::string("differs"); });
        PropertyResult agree{"betti", "gottsche = orbifold Poincare polynomial"};
        agree.record(gottsche_polynomial(*algebra, n) == report.oracle_side, [] { return std::string("differs"); });
        out.push_back(first);
        out.push_back(agree);
    }
    return out;
}

std::vector<PropertyResult> run_all(const AlgebraPtr& algebra, const Options& options) {
    Rng rng(options.seed);
    std::vector<PropertyResult> out;
    auto append = [&](std::vector<PropertyResult> part) {
        for (auto& p : part) out.push_back(std::move(p));
    };
    append(algebra_properties(algebra, rng, options.iters));
    append(permutation_properties(options.n, rng, options.iters));
    append(tensor_properties(algebra, options.n, rng, options.iters));
    append(ring_properties(algebra, options, rng));
    append(duality_properties(algebra, options.n, rng, options.iters));
    append(betti_properties(algebra, options.n));
    return out;
}

std::string render(const std::vector<PropertyResult>& results) {
    std::ostringstream os;
    for (const auto& r : results) {
        os << (r.ok() ? "ok    " : "FAIL  ") << std::left << std::setw(14) << r.group << std::setw(44) << r.name
           << std::right << std::setw(8) << r.passed << "/" << r.passed + r.failed;
        if (!r.ok()) os << "  first failure: " << r.first_failure;
        os << "\n";
    }
    return os.str();
}

}  // namespace symprod::suite
