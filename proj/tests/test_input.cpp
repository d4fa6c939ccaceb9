#include <string>

#include "doctest.h"
#include "tfold/errors.hpp"
#include "tfold/fixtures.hpp"
#include "tfold/input.hpp"

using namespace tfold;

namespace {

const char* kChenDoc =
    "chi = 2\n"
    "q = 0\n"
    "pg = 0\n"
    "basket = 4*(1,2) 3*(1,3) 2*(1,4) (2,5) (4,9) (5,13)\n"
    "k3 = 1/1170\n"
    "P2 = 0\n";

struct Position {
    int line;
    int col;
};

Position error_position(const char* text) {
    try {
        parse_input(text);
    } catch (const ParseError& e) {
        return {e.line(), e.col()};
    }
    return {-1, -1};
}

}  // namespace

TEST_CASE("documents parse into their fields") {
    InputDocument doc = parse_input(kChenDoc);
    CHECK(doc.chi == 2);
    CHECK(doc.q == 0);
    CHECK(doc.pg == Int(0));
    CHECK(doc.k3 == Rational{Int(1), Int(1170)});
    REQUIRE(doc.basket.has_value());
    CHECK(doc.basket->total_points() == 12);
    REQUIRE(doc.constraints.size() == 1);
    CHECK(doc.constraints[0].m == 2);
    CHECK(doc.constraints[0].value == 0);

    // The parsed document describes exactly the built-in dataset.
    CHECK(to_threefold(doc) == chen_delta18());
}

TEST_CASE("comments, blank lines, and loose spacing are accepted") {
    InputDocument doc = parse_input(
        "# a comment line\n"
        "\n"
        "  chi=2   # trailing comment\n"
        "basket =   (1,2)  \n"
        "\n"
        "P4   =   7\n");
    CHECK(doc.chi == 2);
    CHECK(doc.basket->str() == "(1,2)");
    CHECK(doc.constraints[0].m == 4);
    CHECK(doc.constraints[0].value == 7);
    CHECK_FALSE(doc.q.has_value());
}

TEST_CASE("plurigenus constraints sort by level for a canonical form") {
    InputDocument doc = parse_input("chi = 1\nbasket = (1,2)\nP7 = 3\nP3 = 1\nP5 = 2\n");
    REQUIRE(doc.constraints.size() == 3);
    CHECK(doc.constraints[0].m == 3);
    CHECK(doc.constraints[1].m == 5);
    CHECK(doc.constraints[2].m == 7);
}

TEST_CASE("printing and re-parsing is the identity") {
    InputDocument doc = parse_input(kChenDoc);
    CHECK(print_input(doc) == kChenDoc);
    CHECK(parse_input(print_input(doc)) == doc);

    // Same for a document that leans on defaults and odd ordering.
    InputDocument sparse = parse_input("P9 = 1\nbasket = 2*(1,3)\nP2 = 0\nchi = -1\n");
    CHECK(parse_input(print_input(sparse)) == sparse);
}

TEST_CASE("parse errors carry 1-based line and column positions") {
    // Duplicate key, reported at the second occurrence.
    auto dup = error_position("chi = 2\nbasket = (1,2)\nchi = 3\n");
    CHECK(dup.line == 3);
    CHECK(dup.col == 1);

    auto unknown = error_position("flavor = 3\n");
    CHECK(unknown.line == 1);
    CHECK(unknown.col == 1);

    auto bad_int = error_position("chi = two\nbasket = (1,2)\n");
    CHECK(bad_int.line == 1);
    CHECK(bad_int.col == 7);

    auto no_eq = error_position("chi 2\n");
    CHECK(no_eq.line == 1);
    CHECK(no_eq.col == 1);

    auto no_value = error_position("chi =\nbasket = (1,2)\n");
    CHECK(no_value.line == 1);
    CHECK(no_value.col == 6);

    // Errors inside a basket value point into the document, not the item.
    auto bad_point = error_position("chi = 2\nbasket = (1,2) (3,9)\n");
    CHECK(bad_point.line == 2);
    CHECK(bad_point.col == 16);

    auto bad_k3 = error_position("chi = 2\nbasket = (1,2)\nk3 = 1/0\n");
    CHECK(bad_k3.line == 3);
    CHECK(bad_k3.col == 6);

    // Missing required keys are reported without a position.
    auto no_chi = error_position("basket = (1,2)\n");
    CHECK(no_chi.line == 0);
    auto no_basket = error_position("chi = 2\n");
    CHECK(no_basket.line == 0);
}

TEST_CASE("plurigenus keys start at P2") {
    CHECK_THROWS_AS(parse_input("chi = 1\nbasket = (1,2)\nP1 = 0\n"), ParseError);
    CHECK_THROWS_AS(parse_input("chi = 1\nbasket = (1,2)\nP0 = 0\n"), ParseError);
    try {
        parse_input("P1 = 0\n");
        FAIL("P1 must be rejected");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("P_1 belongs in key 'pg'") != std::string::npos);
    }
    // P-3 is not a plurigenus key at all, just unknown.
    CHECK_THROWS_AS(parse_input("P-3 = 0\n"), ParseError);
}

TEST_CASE("converting to threefold data validates the values") {
    CHECK_THROWS_AS(to_threefold(parse_input("chi = 2\nq = -1\nbasket = (1,2)\n")), DataError);
    CHECK_THROWS_AS(to_threefold(parse_input("chi = 2\nbasket = (1,2)\nk3 = -1/2\n")), DataError);
    CHECK_THROWS_AS(to_threefold(parse_input("chi = 2\nbasket = (1,2)\nP3 = -1\n")), DataError);
    CHECK_NOTHROW(to_threefold(parse_input("chi = 2\nbasket = (1,2)\n")));
}

TEST_CASE("unreadable files are parse errors") {
    CHECK_THROWS_AS(load_input("/no/such/file.txt"), ParseError);
}

TEST_CASE("built-in datasets are listed and fetched by name") {
    CHECK_FALSE(fixture_names().empty());
    CHECK(fixture_by_name("chen-delta18") == chen_delta18());
    CHECK_THROWS_AS(fixture_by_name("unknown-dataset"), DataError);
}
