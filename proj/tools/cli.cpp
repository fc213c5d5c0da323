#include "cli.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "property_suite.hpp"
#include "symprod/betti.hpp"
#include "symprod/errors.hpp"
#include "symprod/expression.hpp"
#include "symprod/table.hpp"

namespace symprod::cli {

unsigned resolve_threads(unsigned requested) {
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

namespace {

struct Common {
    std::string algebra_path;
    bool twist = false;
};

struct MultiplyArgs {
    int n = 0;
    std::string lhs;
    std::string rhs;
    bool sym = false;
};

struct TableArgs {
    int n = 0;
    std::optional<int> min_degree;
    std::optional<int> max_degree;
    std::string out_path;
    unsigned threads = 0;
};

struct BettiArgs {
    int n = 0;
    bool gottsche = false;
    bool json = false;
};

struct CheckArgs {
    int n = 0;
    std::uint64_t seed = suite::kDefaultSeed;
    std::size_t iters = 100;
};

void print_caret(std::ostream& err, const std::string& label, const std::string& text, const ExpressionError& e) {
    err << "error: " << label << ": " << e.what() << "\n";
    err << "  " << text << "\n";
    err << "  " << std::string(std::min(e.position(), text.size()), ' ') << "^\n";
}

int cmd_validate(const Common& common, std::ostream& out) {
    AlgebraPtr alg = load_algebra_file(common.algebra_path, common.twist);
    out << "algebra " << alg->name() << ": valid\n";
    out << "  complex dimension " << alg->complex_dim() << ", " << alg->dimension() << " basis elements\n";
    for (const char* axiom : {"even dimension", "degree range", "unique ids", "unit", "degree additivity",
                              "graded commutativity", "associativity", "unit law", "counit support",
                              "nondegenerate pairing"}) {
        out << "  ok  " << axiom << "\n";
    }
    out << "  betti:";
    for (const auto& [deg, dim] : betti_table(*alg)) out << " b" << deg << "=" << dim.get_str();
    out << "\n  euler class: ";
    RingElement euler(alg, 1);
    for (const auto& [index, coeff] : alg->euler_class().terms()) euler.add(Permutation::identity(1), {index}, coeff);
    out << format_ring_element(euler) << "\n";
    return kOk;
}

int cmd_multiply(const Common& common, const MultiplyArgs& args, std::ostream& out, std::ostream& err) {
    AlgebraPtr alg = load_algebra_file(common.algebra_path, common.twist);
    std::optional<RingElement> lhs, rhs;
    try {
        lhs = parse_ring_element(args.lhs, alg, args.n);
    } catch (const ExpressionError& e) {
        print_caret(err, "left operand", args.lhs, e);
        return kBadExpression;
    }
    try {
        rhs = parse_ring_element(args.rhs, alg, args.n);
    } catch (const ExpressionError& e) {
        print_caret(err, "right operand", args.rhs, e);
        return kBadExpression;
    }
    if (args.sym) {
        lhs = symmetrize(*lhs).full;
        rhs = symmetrize(*rhs).full;
    }
    out << format_ring_element(*lhs * *rhs) << "\n";
    return kOk;
}

int cmd_table(const Common& common, const TableArgs& args, std::ostream& out, std::ostream& err) {
    AlgebraPtr alg = load_algebra_file(common.algebra_path, common.twist);
    std::optional<DegreeRange> range;
    if (args.min_degree || args.max_degree) {
        range = DegreeRange{args.min_degree.value_or(0), args.max_degree.value_or(2 * alg->complex_dim() * args.n)};
    }
    MultiplicationTable table(alg, args.n, range);
    std::vector<TableRow> rows(table.size());
    const unsigned workers = std::min<unsigned>(resolve_threads(args.threads),
                                                static_cast<unsigned>(std::max<std::size_t>(1, table.size())));
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < rows.size(); i = next++) rows[i] = table.row(i);
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
    }
    const std::string json = table.render_json(rows);
    if (args.out_path.empty() || args.out_path == "-") {
        out << json;
        return kOk;
    }
    std::ofstream file(args.out_path, std::ios::binary);
    if (!file) {
        err << "error: cannot write " << args.out_path << "\n";
        return kParseFailure;
    }
    file << json;
    out << "wrote " << table.size() << " basis elements to " << args.out_path << "\n";
    return kOk;
}

int cmd_betti(const Common& common, const BettiArgs& args, std::ostream& out) {
    AlgebraPtr alg = load_algebra_file(common.algebra_path, common.twist);
    BettiReport report = compare(alg, args.n, args.gottsche);
    out << (args.json ? render_json(report) : render_text(report));
    return report.all_agree() ? kOk : kBettiMismatch;
}

int cmd_check(const Common& common, const CheckArgs& args, std::ostream& out) {
    AlgebraPtr alg = load_algebra_file(common.algebra_path, common.twist);
    suite::Options options;
    options.n = args.n;
    options.seed = args.seed;
    options.iters = args.iters;
    auto results = suite::run_all(alg, options);
    out << "check " << alg->name() << ", n = " << args.n << ", seed " << args.seed << ", " << args.iters
        << " iterations\n";
    out << suite::render(results);
    std::size_t failed = 0;
    for (const auto& r : results) failed += r.ok() ? 0 : 1;
    out << (failed == 0 ? "all properties hold\n" : std::to_string(failed) + " properties failed\n");
    return failed == 0 ? kOk : kPropertyFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Orbifold cohomology of symmetric products"};
    app.name("symprod");
    app.require_subcommand(1, 1);

    Common common;
    MultiplyArgs mult;
    TableArgs tab;
    BettiArgs bet;
    CheckArgs chk;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("algebra", common.algebra_path, "Algebra JSON file")->required();
        sub->add_flag("--twist", common.twist, "Replace the counit T by -T");
    };
    auto positive_n = [](CLI::App* sub, int& n) {
        sub->add_option("-n,--n", n, "Number of points")->required()->check(CLI::PositiveNumber);
    };

    auto* validate = app.add_subcommand("validate", "Load an algebra file and check every axiom");
    add_common(validate);

    auto* multiply = app.add_subcommand("multiply", "Multiply two ring elements");
    add_common(multiply);
    positive_n(multiply, mult.n);
    multiply->add_option("lhs", mult.lhs, "Left operand, e.g. '1*x@1 (x) 1@2 ; id'")->required();
    multiply->add_option("rhs", mult.rhs, "Right operand")->required();
    multiply->add_flag("--sym", mult.sym, "Symmetrize both operands first");

    auto* table = app.add_subcommand("table", "Export the invariant multiplication table as JSON");
    add_common(table);
    positive_n(table, tab.n);
    table->add_option("--min-degree", tab.min_degree, "Smallest shifted degree kept");
    table->add_option("--max-degree", tab.max_degree, "Largest shifted degree kept");
    table->add_option("-o,--out", tab.out_path, "Output file (default stdout)");
    table->add_option("--threads", tab.threads, "Worker threads, 0 for all cores")->envname("SYMPROD_THREADS");

    auto* betti = app.add_subcommand("betti", "Compare ring, projector and Gottsche Betti numbers");
    add_common(betti);
    positive_n(betti, bet.n);
    betti->add_flag("--gottsche", bet.gottsche, "Include the Gottsche series column");
    betti->add_flag("--json", bet.json, "Print JSON instead of a table");

    auto* check = app.add_subcommand("check", "Run the property suites");
    add_common(check);
    positive_n(check, chk.n);
    check->add_option("--seed", chk.seed, "Random seed");
    check->add_option("--iters", chk.iters, "Random cases per property");
    unsigned check_threads = 0;
    check->add_option("--threads", check_threads, "Accepted for symmetry; the suite is sequential")
        ->envname("SYMPROD_THREADS");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        if (auto* sub = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front()) {
            err << sub->help();
        } else {
            err << app.help();
        }
        return kParseFailure;
    }

    try {
        if (*validate) return cmd_validate(common, out);
        if (*multiply) return cmd_multiply(common, mult, out, err);
        if (*table) return cmd_table(common, tab, out, err);
        if (*betti) return cmd_betti(common, bet, out);
        if (*check) return cmd_check(common, chk, out);
    } catch (const ValidationError& e) {
        err << "invalid algebra: " << e.what() << "\n";
        return kInvalidAlgebra;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kParseFailure;
    } catch (const NotASurface& e) {
        err << "error: " << e.what() << "\n";
        return kNotASurface;
    } catch (const ExpressionError& e) {
        err << "error: " << e.what() << "\n";
        return kBadExpression;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kInvalidAlgebra;
    }
    return kOk;
}

}  // namespace symprod::cli
