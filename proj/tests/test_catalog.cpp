#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <map>
#include <sstream>

#include "leibniz/catalog.hpp"
#include "leibniz/parse.hpp"

using namespace leibniz;

namespace {

std::map<std::string, std::string> load_fixture_sections() {
    std::ifstream in(std::string(FIXTURE_DIR) + "/catalog_tables.txt");
    REQUIRE(in.good());
    std::map<std::string, std::string> sections;
    std::string line, name, body;
    while (std::getline(in, line)) {
        if (line.rfind("== ", 0) == 0) {
            if (!name.empty()) sections[name] = body;
            name = line.substr(3, line.size() - 6);
            body.clear();
        } else {
            body += line + "\n";
        }
    }
    if (!name.empty()) sections[name] = body;
    return sections;
}

}  // namespace

TEST_CASE("catalog lists 21 entries in order") {
    const auto& entries = catalog::list();
    REQUIRE(entries.size() == 21);
    for (std::size_t i = 0; i < 21; ++i)
        CHECK(entries[i].id == "L" + std::to_string(i + 1));
}

TEST_CASE("exactly L4, L13, L14, L20 are parameterized") {
    for (const auto& e : catalog::list()) {
        const bool expect =
            e.id == "L4" || e.id == "L13" || e.id == "L14" || e.id == "L20";
        CHECK(e.parameterized == expect);
    }
    CHECK(catalog::entry("L13").constraint == catalog::ParamConstraint::any_rational);
    CHECK(catalog::entry("L4").constraint == catalog::ParamConstraint::zero_or_one);
    CHECK(catalog::entry("L20").constraint == catalog::ParamConstraint::any_rational_not_one);
    CHECK(catalog::entry("L1").constraint == catalog::ParamConstraint::none);
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(catalog::get("L20", Rational(1)), std::domain_error);
    CHECK_THROWS_AS(catalog::get("L4", Rational(2)), std::domain_error);
    CHECK_THROWS_AS(catalog::get("L13"), std::invalid_argument);           // missing alpha
    CHECK_THROWS_AS(catalog::get("L1", Rational(2)), std::invalid_argument);  // extra alpha
    CHECK_THROWS_AS(catalog::get("L22"), std::invalid_argument);
}

TEST_CASE("L1 has exactly three products") {
    const Algebra a = catalog::get("L1");
    std::size_t nonzero = 0;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            for (std::size_t k = 0; k < 4; ++k)
                if (!a.gamma(i, j, k).is_zero()) ++nonzero;
    CHECK(nonzero == 3);
}

TEST_CASE("L4 at alpha=1 includes [[e1,e2]] = e4") {
    const Algebra a = catalog::get("L4", Rational(1));
    CHECK(a.gamma(0, 1, 3) == Rational(1));
    const Algebra b = catalog::get("L4", Rational(0));
    CHECK(b.gamma(0, 1, 3).is_zero());
}

TEST_CASE("structure constants match the checked-in product tables") {
    const auto sections = load_fixture_sections();
    REQUIRE(sections.size() == 23);  // 21 entries, parameterized ones at sample values
    for (const auto& [name, expected] : sections) {
        const auto ref = catalog::parse_ref("catalog:" + name);
        REQUIRE(ref.has_value());
        const Algebra a = catalog::resolve_ref(*ref);
        const std::string rendered = render_bracket_table(doc_from_algebra(a));
        INFO("entry " << name);
        CHECK(rendered == expected);
    }
}

TEST_CASE("catalog references parse") {
    auto plain = catalog::parse_ref("catalog:L7");
    REQUIRE(plain.has_value());
    CHECK(plain->id == "L7");
    CHECK_FALSE(plain->alpha.has_value());

    auto with_alpha = catalog::parse_ref("catalog:L20(2/3)");
    REQUIRE(with_alpha.has_value());
    CHECK(with_alpha->id == "L20");
    CHECK(with_alpha->alpha == Rational(2, 3));

    CHECK_FALSE(catalog::parse_ref("some/file.tbl").has_value());
    CHECK_THROWS_AS(catalog::parse_ref("catalog:L20(2"), std::invalid_argument);
}

TEST_CASE("every catalog algebra is Leibniz and nilpotent at sample parameters") {
    for (const auto& e : catalog::list()) {
        std::vector<std::optional<Rational>> alphas;
        if (!e.parameterized) {
            alphas.push_back(std::nullopt);
        } else if (e.constraint == catalog::ParamConstraint::zero_or_one) {
            alphas = {Rational(0), Rational(1)};
        } else {
            alphas = {Rational(2), Rational(3), Rational(5)};
        }
        for (const auto& alpha : alphas) {
            const Algebra a = catalog::get(e.id, alpha);
            INFO("algebra " << a.name());
            CHECK(check_leibniz(a).holds);
            CHECK(lower_central_series(a).nilpotent);
        }
    }
}
