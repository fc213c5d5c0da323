#include "symprod/betti.hpp"

#include <iomanip>
#include <set>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "symprod/errors.hpp"
#include "symprod/orbifold_ring.hpp"
#include "symprod/orbit_tensor.hpp"

namespace symprod {

PoincarePolynomial betti_table(const FrobeniusAlgebra& algebra) {
    PoincarePolynomial out;
    for (const auto& b : algebra.basis()) out[b.degree] += 1;
    return out;
}

Integer total_dimension(const PoincarePolynomial& p) {
    Integer total = 0;
    for (const auto& [deg, dim] : p) total += dim;
    return total;
}

bool is_palindromic(const PoincarePolynomial& p, int center) {
    for (const auto& [deg, dim] : p) {
        auto it = p.find(2 * center - deg);
        if (it == p.end() || it->second != dim) return false;
    }
    return true;
}

PoincarePolynomial sector_poincare(const AlgebraPtr& algebra, const Permutation& sigma) {
    const OrbitPartition partition = orbits(sigma);
    const auto stabilizer = centralizer(sigma);
    const int shift = degree_shift(sigma, algebra->complex_dim());
    const std::size_t m = partition.block_count();
    const std::size_t dim = algebra->dimension();

    // trace(h) on a degree piece = signed count of basis tensors fixed by h.
    std::map<int, Scalar> trace_sum;
    FactorKey key(m, 0);
    while (true) {
        OrbitTensor single(algebra, partition);
        single.add(key, Scalar(1));
        const int deg = single.term_degree(key);
        Scalar fixed = 0;
        for (const auto& h : stabilizer) {
            SectorTerm moved = relabel(h, SectorTerm(sigma, single));
            fixed += moved.tensor.coefficient(key);
        }
        trace_sum[deg] += fixed;

        std::size_t pos = m;
        bool done = true;
        while (pos > 0) {
            --pos;
            if (++key[pos] < dim) {
                done = false;
                break;
            }
            key[pos] = 0;
        }
        if (done) break;
    }

    PoincarePolynomial out;
    const auto order = static_cast<long>(stabilizer.size());
    for (auto& [deg, trace] : trace_sum) {
        Scalar rank = trace / order;
        rank.canonicalize();
        if (rank.get_den() != 1 || sgn(rank) < 0) {
            throw std::logic_error("projector trace is not a nonnegative integer");
        }
        if (sgn(rank) != 0) out[deg + shift] = rank.get_num();
    }
    return out;
}

PoincarePolynomial orbifold_poincare(const AlgebraPtr& algebra, int n) {
    PoincarePolynomial out;
    for (const auto& cls : conjugacy_classes(n)) {
        for (const auto& [deg, dim] : sector_poincare(algebra, cls.representative)) out[deg] += dim;
    }
    return out;
}

namespace {

Integer binomial(const Integer& top, unsigned long k) {
    Integer out;
    mpz_bin_ui(out.get_mpz_t(), top.get_mpz_t(), k);
    return out;
}

}  // namespace

PoincarePolynomial gottsche_polynomial(const FrobeniusAlgebra& algebra, int n) {
    if (algebra.complex_dim() != 2) {
        throw NotASurface("Gottsche formula needs complex dimension 2, got " + std::to_string(algebra.complex_dim()));
    }
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    std::vector<Integer> betti(5, 0);
    for (const auto& b : algebra.basis()) betti[static_cast<std::size_t>(b.degree)] += 1;

    const std::size_t max_t = 4 * static_cast<std::size_t>(n);
    using Series = std::vector<std::vector<Integer>>;  // [q power][t power]
    auto zero = [&] { return Series(static_cast<std::size_t>(n) + 1, std::vector<Integer>(max_t + 1, 0)); };
    Series series = zero();
    series[0][0] = 1;

    for (int m = 1; m <= n; ++m) {
        for (int i = 0; i <= 4; ++i) {
            const Integer& b = betti[static_cast<std::size_t>(i)];
            if (b == 0) continue;
            const int t_step = 2 * m - 2 + i;
            // Even i: (1 - t^e q^m)^{-b} = sum_k C(b+k-1, k) t^{ek} q^{mk}.
            // Odd i:  (1 + t^e q^m)^{b}  = sum_k C(b, k) t^{ek} q^{mk}.
            Series next = zero();
            for (int k = 0; m * k <= n; ++k) {
                Integer coeff = (i % 2 == 0) ? binomial(b + k - 1, static_cast<unsigned long>(k))
                                             : binomial(b, static_cast<unsigned long>(k));
                if (coeff == 0) continue;
                const std::size_t dq = static_cast<std::size_t>(m * k);
                const std::size_t dt = static_cast<std::size_t>(t_step * k);
                for (std::size_t q = 0; q + dq <= static_cast<std::size_t>(n); ++q) {
                    for (std::size_t t = 0; t + dt <= max_t; ++t) {
                        if (series[q][t] != 0) next[q + dq][t + dt] += coeff * series[q][t];
                    }
                }
            }
            series = std::move(next);
        }
    }
    PoincarePolynomial out;
    for (std::size_t t = 0; t <= max_t; ++t) {
        if (series[static_cast<std::size_t>(n)][t] != 0) out[static_cast<int>(t)] = series[static_cast<std::size_t>(n)][t];
    }
    return out;
}

BettiReport compare(const AlgebraPtr& algebra, int n, bool with_gottsche) {
    BettiReport report;
    report.n = n;
    report.algebra = algebra->name();
    for (const auto& [deg, dim] : invariant_dimensions(invariant_basis(algebra, n))) {
        report.ring_side[deg] = static_cast<unsigned long>(dim);
    }
    report.oracle_side = orbifold_poincare(algebra, n);
    report.ring_matches_oracle = report.ring_side == report.oracle_side;
    if (with_gottsche) {
        report.gottsche_side = gottsche_polynomial(*algebra, n);
        report.gottsche_matches = *report.gottsche_side == report.oracle_side && *report.gottsche_side == report.ring_side;
    }
    return report;
}

std::string render_text(const BettiReport& report) {
    std::set<int> degrees;
    for (const auto& [d, v] : report.ring_side) degrees.insert(d);
    for (const auto& [d, v] : report.oracle_side) degrees.insert(d);
    if (report.gottsche_side)
        for (const auto& [d, v] : *report.gottsche_side) degrees.insert(d);

    auto cell = [](const PoincarePolynomial& p, int d) {
        auto it = p.find(d);
        return it == p.end() ? std::string("0") : it->second.get_str();
    };

    std::ostringstream os;
    os << "algebra " << report.algebra << ", n = " << report.n << "\n";
    os << std::setw(8) << "degree" << std::setw(14) << "ring" << std::setw(14) << "oracle";
    if (report.gottsche_side) os << std::setw(14) << "gottsche";
    os << "\n";
    for (int d : degrees) {
        os << std::setw(8) << d << std::setw(14) << cell(report.ring_side, d) << std::setw(14)
           << cell(report.oracle_side, d);
        if (report.gottsche_side) os << std::setw(14) << cell(*report.gottsche_side, d);
        os << "\n";
    }
    os << std::setw(8) << "total" << std::setw(14) << total_dimension(report.ring_side).get_str() << std::setw(14)
       << total_dimension(report.oracle_side).get_str();
    if (report.gottsche_side) os << std::setw(14) << total_dimension(*report.gottsche_side).get_str();
    os << "\n";
    os << "ring = oracle: " << (report.ring_matches_oracle ? "yes" : "NO") << "\n";
    if (report.gottsche_matches) os << "gottsche agrees: " << (*report.gottsche_matches ? "yes" : "NO") << "\n";
    return os.str();
}

namespace {

nlohmann::ordered_json polynomial_json(const PoincarePolynomial& p) {
    auto out = nlohmann::ordered_json::array();
    for (const auto& [deg, dim] : p) {
        nlohmann::ordered_json entry;
        entry["degree"] = deg;
        // Dimensions beyond 64 bits are not expected for the supported sizes.
        entry["dimension"] = dim.get_ui();
        out.push_back(entry);
    }
    return out;
}

}  // namespace

std::string render_json(const BettiReport& report) {
    nlohmann::ordered_json doc;
    doc["algebra"] = report.algebra;
    doc["n"] = report.n;
    doc["ring"] = polynomial_json(report.ring_side);
    doc["oracle"] = polynomial_json(report.oracle_side);
    if (report.gottsche_side) doc["gottsche"] = polynomial_json(*report.gottsche_side);
    doc["ring_matches_oracle"] = report.ring_matches_oracle;
    if (report.gottsche_matches) doc["gottsche_matches"] = *report.gottsche_matches;
    doc["agree"] = report.all_agree();
    return doc.dump(2) + "\n";
}

}  // namespace symprod
