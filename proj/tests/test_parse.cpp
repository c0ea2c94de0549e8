#include <catch2/catch_amalgamated.hpp>

#include "leibniz/catalog.hpp"
#include "leibniz/parse.hpp"

using namespace leibniz;

TEST_CASE("single product line") {
    const Algebra a = parse_algebra("dim 4\n[e1,e1] = e2\n");
    CHECK(a.dim() == 4);
    CHECK(a.gamma(0, 0, 1) == Rational(1));
    std::size_t nonzero = 0;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            for (std::size_t k = 0; k < 4; ++k)
                if (!a.gamma(i, j, k).is_zero()) ++nonzero;
    CHECK(nonzero == 1);
}

TEST_CASE("signed and fractional coefficients") {
    const Algebra a = parse_algebra("dim 4\n[e2,e1] = -e3 + 1/2 e4\n");
    CHECK(a.gamma(1, 0, 2) == Rational(-1));
    CHECK(a.gamma(1, 0, 3) == Rational(1, 2));
}

TEST_CASE("whitespace insensitivity and optional star") {
    const Algebra a = parse_algebra("dim 4\n[ e2 , e1 ]=-e3+1/2*e4\n");
    const Algebra b = parse_algebra("dim 4\n[e2,e1]   =   - e3   +   1/2 e4\n");
    const Algebra c = parse_algebra("dim 4\n[e2,e1] = -1 e3 + 1/2 e4\n");
    CHECK(a == b);
    CHECK(a == c);
}

TEST_CASE("comments and blank lines are skipped") {
    const Algebra a = parse_algebra(
        "# a three-step filtration\n"
        "\n"
        "dim 4   # dimension line\n"
        "[e1,e1] = e2\n"
        "# middle comment\n"
        "[e2,e1] = e3\n"
        "[e3,e1] = e4  # trailing comment\n");
    CHECK(a == catalog::get("L1"));
}

TEST_CASE("index out of range is reported with its position") {
    try {
        parse_algebra("dim 4\n[e5,e1] = e2\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.col() == 2);
        CHECK(std::string(e.what()).find("out of range") != std::string::npos);
    }
    try {
        parse_algebra("dim 3\n[e1,e1] = e4\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(std::string(e.what()).find("out of range") != std::string::npos);
    }
}

TEST_CASE("syntax errors are reported with their position") {
    try {
        parse_algebra("dim 4\n[e1 e1] = e2\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(std::string(e.what()).find("','") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_algebra("dim 4\n[e1,e1] = \n"), ParseError);
    CHECK_THROWS_AS(parse_algebra("dim 4\n[e1,e1] e2\n"), ParseError);
    CHECK_THROWS_AS(parse_algebra("dim 4\n[e1,e1] = e2 e3\n"), ParseError);
    CHECK_THROWS_AS(parse_algebra("dim 4\n[e1,e1] = 1/0 e2\n"), ParseError);
}

TEST_CASE("duplicate product lines are rejected") {
    try {
        parse_algebra("dim 4\n[e1,e1] = e2\n[e1,e1] = e3\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
        CHECK(std::string(e.what()).find("duplicate") != std::string::npos);
    }
}

TEST_CASE("missing dim line is rejected") {
    try {
        parse_algebra("[e1,e1] = e2\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 1);
        CHECK(std::string(e.what()).find("dim") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_algebra(""), ParseError);
    CHECK_THROWS_AS(parse_algebra("# only a comment\n"), ParseError);
}

TEST_CASE("render and reparse reproduce every catalog algebra") {
    for (const auto& e : catalog::list()) {
        std::vector<std::optional<Rational>> alphas;
        if (!e.parameterized)
            alphas.push_back(std::nullopt);
        else if (e.constraint == catalog::ParamConstraint::zero_or_one)
            alphas = {Rational(0), Rational(1)};
        else
            alphas = {Rational(2), Rational(-7, 3)};
        for (const auto& alpha : alphas) {
            const Algebra a = catalog::get(e.id, alpha);
            const std::string text = render_bracket_table(doc_from_algebra(a));
            INFO("algebra " << a.name() << "\n" << text);
            CHECK(parse_algebra(text) == a);
        }
    }
}

TEST_CASE("terms with the same target accumulate") {
    const Algebra a = parse_algebra("dim 2\n[e1,e2] = e1 + e1 - 3 e2\n");
    CHECK(a.gamma(0, 1, 0) == Rational(2));
    CHECK(a.gamma(0, 1, 1) == Rational(-3));
}
