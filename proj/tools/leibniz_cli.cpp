// Command-line front end: check / solve / series / inner / table over
// algebras given as bracket-table files or catalog references.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "leibniz/leibniz.hpp"

namespace {

using namespace leibniz;

Algebra load_source(const std::string& src) {
    if (auto ref = catalog::parse_ref(src)) return catalog::resolve_ref(*ref);
    std::ifstream in(src);
    if (!in) throw std::invalid_argument("cannot open '" + src + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_algebra(buf.str(), src);
}

std::vector<Rational> parse_samples(const std::string& csv) {
    std::vector<Rational> out;
    std::string item;
    std::istringstream in(csv);
    while (std::getline(in, item, ',')) {
        if (!item.empty()) out.push_back(Rational::parse(item));
    }
    if (out.empty()) throw std::invalid_argument("--alpha-samples: no values given");
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact derivations, antiderivations and biderivations of "
                 "finite-dimensional Leibniz algebras"};
    app.require_subcommand(1);
    app.fallthrough();  // --format may come before or after the subcommand

    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json", "latex"}))
        ->capture_default_str();

    std::string src, space = "der", convention = "c1", samples_csv = "2,3,5";
    int which = 1;

    auto* cmd_check = app.add_subcommand("check", "verify the Leibniz identity");
    cmd_check->add_option("src", src, "file path or catalog:ID[(alpha)]")->required();

    auto* cmd_solve = app.add_subcommand("solve", "compute a solution space");
    cmd_solve->add_option("--space", space, "which space")
        ->check(CLI::IsMember({"der", "antider", "bider"}))
        ->capture_default_str();
    cmd_solve->add_option("src", src, "file path or catalog:ID[(alpha)]")->required();

    auto* cmd_series = app.add_subcommand("series", "lower central series and nilpotency");
    cmd_series->add_option("src", src, "file path or catalog:ID[(alpha)]")->required();

    auto* cmd_inner = app.add_subcommand("inner", "inner derivations and candidate pairs");
    cmd_inner->add_option("src", src, "file path or catalog:ID[(alpha)]")->required();
    cmd_inner->add_option("--convention", convention, "pair convention")
        ->check(CLI::IsMember({"c1", "c2", "c3", "c4"}))
        ->capture_default_str();

    auto* cmd_tab = app.add_subcommand("table", "compare computed dims with the published table");
    cmd_tab->add_option("--which", which, "table number")->check(CLI::Range(1, 3))->required();
    cmd_tab->add_option("--alpha-samples", samples_csv, "samples for generic families")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        const OutputFormat fmt = parse_format(format);
        if (cmd_check->parsed()) {
            const Algebra a = load_source(src);
            std::cout << render(a.name(), check_leibniz(a), fmt);
        } else if (cmd_solve->parsed()) {
            const Algebra a = load_source(src);
            SpaceKind kind = space == "der"       ? SpaceKind::der
                             : space == "antider" ? SpaceKind::antider
                                                  : SpaceKind::bider;
            const SolutionSpace sp = solve_space(a, kind);
            std::cout << render(a.name(), sp, general_element(sp), fmt);
        } else if (cmd_series->parsed()) {
            const Algebra a = load_source(src);
            std::cout << render(a.name(), lower_central_series(a), fmt);
        } else if (cmd_inner->parsed()) {
            const Algebra a = load_source(src);
            const InnerDerivationSpace span = inner_derivation_space(a);
            const InnerPairReport pairs = inner_bider_pairs(a, parse_convention(convention));
            std::cout << render(a.name(), span, pairs, fmt);
        } else if (cmd_tab->parsed()) {
            const ComparisonReport report = cmd_table(which, parse_samples(samples_csv));
            std::cout << render(report, fmt);
            if (report.undocumented_mismatches > 0) return 2;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
