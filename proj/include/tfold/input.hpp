#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "tfold/riemann_roch.hpp"

namespace tfold {

// Flat key-value document describing a threefold. One "key = value" pair per
// line; '#' starts a comment; blank lines are ignored. Keys:
//   chi    = <integer>                  required
//   q      = <integer>                  optional (default 0)
//   pg     = <integer>                  optional
//   basket = <basket items>             required ("N*(b,r)" / "(b,r)", space-separated)
//   k3     = <rational>                 optional ("p/q" or "p")
//   P<m>   = <integer>                  optional, repeatable, m >= 2
// Unknown or duplicate keys are parse errors.
struct InputDocument {
    std::optional<long long> chi;
    std::optional<long long> q;
    std::optional<Int> pg;
    std::optional<Basket> basket;
    std::optional<Rational> k3;
    std::vector<PlurigenusConstraint> constraints;

    friend bool operator==(const InputDocument&, const InputDocument&) = default;
};

// ParseError with 1-based line/column on malformed text (including a missing
// required key, reported at line 0).
InputDocument parse_input(std::string_view text);

// Reads the file and parses it; unreadable files are ParseError.
InputDocument load_input(const std::string& path);

// Canonical text form. parse_input(print_input(doc)) == doc for any document
// with the required keys present.
std::string print_input(const InputDocument& doc);

// Converts to ThreefoldData and validates it (DataError on bad values).
ThreefoldData to_threefold(const InputDocument& doc);

}  // namespace tfold
