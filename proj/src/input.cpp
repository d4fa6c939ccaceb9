#include "tfold/input.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "tfold/errors.hpp"

namespace tfold {

namespace {

std::string_view trim(std::string_view s, size_t* left_offset = nullptr) {
    size_t begin = 0, end = s.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
    if (left_offset) *left_offset = begin;
    return s.substr(begin, end - begin);
}

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && s.front() == '-') s.remove_prefix(1);
    if (s.empty()) return false;
    return std::all_of(s.begin(), s.end(),
                       [](char c) { return c >= '0' && c <= '9'; });
}

Int parse_int(std::string_view s, int line, int col, const char* what) {
    if (!is_integer_literal(s))
        throw ParseError(std::string("expected an integer for ") + what + ", got '" +
                             std::string(s) + "'",
                         line, col);
    return Int(std::string(s));
}

long long parse_ll(std::string_view s, int line, int col, const char* what) {
    Int v = parse_int(s, line, col, what);
    if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
        throw ParseError(std::string(what) + " out of range: '" + std::string(s) + "'", line, col);
    return v.convert_to<long long>();
}

}  // namespace

InputDocument parse_input(std::string_view text) {
    InputDocument doc;
    std::set<std::string, std::less<>> seen;
    int line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        ++line_no;
        size_t line_start = pos;
        pos = eol + 1;

        if (size_t hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        size_t content_offset = 0;
        std::string_view content = trim(line, &content_offset);
        if (content.empty()) continue;

        size_t eq = content.find('=');
        if (eq == std::string_view::npos)
            throw ParseError("expected 'key = value'", line_no,
                             static_cast<int>(content_offset) + 1);
        size_t key_offset = 0;
        std::string_view key = trim(content.substr(0, eq), &key_offset);
        int key_col = static_cast<int>(content_offset + key_offset) + 1;
        size_t value_offset = 0;
        std::string_view value = trim(content.substr(eq + 1), &value_offset);
        int value_col = static_cast<int>(content_offset + eq + 1 + value_offset) + 1;
        if (key.empty()) throw ParseError("empty key", line_no, key_col);
        if (value.empty())
            throw ParseError("missing value for key '" + std::string(key) + "'", line_no,
                             static_cast<int>(content_offset + eq) + 2);
        if (!seen.insert(std::string(key)).second)
            throw ParseError("duplicate key '" + std::string(key) + "'", line_no, key_col);

        if (key == "chi") {
            doc.chi = parse_ll(value, line_no, value_col, "chi");
        } else if (key == "q") {
            doc.q = parse_ll(value, line_no, value_col, "q");
        } else if (key == "pg") {
            doc.pg = parse_int(value, line_no, value_col, "pg");
        } else if (key == "basket") {
            try {
                doc.basket = Basket::parse(value);
            } catch (const ParseError& e) {
                throw ParseError(e.what(), line_no, value_col + std::max(e.col() - 1, 0));
            }
        } else if (key == "k3") {
            try {
                doc.k3 = Rational::parse(value);
            } catch (const ParseError& e) {
                throw ParseError(e.what(), line_no, value_col);
            }
        } else if (key.size() >= 2 && key.front() == 'P' &&
                   is_integer_literal(key.substr(1)) && key[1] != '-') {
            long long m = parse_ll(key.substr(1), line_no, key_col, "plurigenus index");
            if (m < 2)
                throw ParseError("plurigenus keys start at P2 (P_1 belongs in key 'pg')",
                                 line_no, key_col);
            doc.constraints.push_back({m, parse_int(value, line_no, value_col, "plurigenus value")});
        } else {
            throw ParseError("unknown key '" + std::string(key) + "'", line_no, key_col);
        }
        (void)line_start;
    }

    if (!doc.chi) throw ParseError("missing required key 'chi'");
    if (!doc.basket) throw ParseError("missing required key 'basket'");
    std::sort(doc.constraints.begin(), doc.constraints.end(),
              [](const PlurigenusConstraint& a, const PlurigenusConstraint& b) {
                  return a.m < b.m;
              });
    return doc;
}

InputDocument load_input(const std::string& path) {
    std::ifstream file(path);
    if (!file) throw ParseError("cannot read file '" + path + "'");
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return parse_input(buffer.str());
}

std::string print_input(const InputDocument& doc) {
    std::string out;
    if (doc.chi) out += "chi = " + std::to_string(*doc.chi) + "\n";
    if (doc.q) out += "q = " + std::to_string(*doc.q) + "\n";
    if (doc.pg) out += "pg = " + doc.pg->str() + "\n";
    if (doc.basket) out += "basket = " + doc.basket->str() + "\n";
    if (doc.k3) out += "k3 = " + doc.k3->str() + "\n";
    for (const auto& c : doc.constraints)
        out += "P" + std::to_string(c.m) + " = " + c.value.str() + "\n";
    return out;
}

ThreefoldData to_threefold(const InputDocument& doc) {
    if (!doc.chi) throw DataError("document missing required 'chi'");
    if (!doc.basket) throw DataError("document missing required 'basket'");
    ThreefoldData X;
    X.chi = *doc.chi;
    X.q = doc.q.value_or(0);
    X.basket = *doc.basket;
    X.k3 = doc.k3;
    X.known_plurigenera = doc.constraints;
    X.pg = doc.pg;
    X.validate();
    return X;
}

}  // namespace tfold
