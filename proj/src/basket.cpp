#include "tfold/basket.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "tfold/errors.hpp"

namespace tfold {

namespace {

// Index safety rail: local terms are accumulated in unsigned __int128 with
// per-term products below r^2, so keep r comfortably inside 64-bit range.
constexpr long long kMaxIndex = 1'000'000'000;

Int int_from_u128(unsigned __int128 v) {
    Int hi = static_cast<unsigned long long>(v >> 64);
    return (hi << 64) + static_cast<unsigned long long>(v);
}

// Minimal cursor over the basket grammar; positions are 1-based columns.
struct Cursor {
    std::string_view text;
    size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, 1, static_cast<int>(pos) + 1);
    }
    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }
    void skip_ws() {
        while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos;
    }
    void expect(char c, const char* what) {
        if (done() || peek() != c) fail(std::string("expected '") + c + "' in " + what);
        ++pos;
    }
    long long number(const char* what) {
        if (done() || !std::isdigit(static_cast<unsigned char>(peek())))
            fail(std::string("expected ") + what);
        long long value = 0;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
            value = value * 10 + (peek() - '0');
            if (value > kMaxIndex) fail(std::string(what) + " out of supported range");
            ++pos;
        }
        return value;
    }
};

}  // namespace

BasketPoint::BasketPoint(long long b_in, long long r_in) : b(b_in), r(r_in) {
    if (r < 2 || r > kMaxIndex)
        throw DataError("singularity index r out of range: (" + std::to_string(b) + "," +
                        std::to_string(r) + ")");
    if (b < 1 || b >= r)
        throw DataError("singularity weight must satisfy 0 < b < r: (" + std::to_string(b) + "," +
                        std::to_string(r) + ")");
    if (std::gcd(b, r) != 1)
        throw DataError("singularity weight and index must be coprime: (" + std::to_string(b) +
                        "," + std::to_string(r) + ")");
    if (2 * b > r) b = r - b;  // contribution only depends on {b, r-b}
}

Basket::Basket(std::vector<Entry> entries) {
    for (const auto& [point, mult] : entries)
        if (mult < 1)
            throw DataError("basket multiplicity must be positive: " + std::to_string(mult));
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        return std::pair(a.first.r, a.first.b) < std::pair(b.first.r, b.first.b);
    });
    for (auto& entry : entries) {
        if (!entries_.empty() && entries_.back().first == entry.first)
            entries_.back().second += entry.second;
        else
            entries_.push_back(entry);
    }
}

Basket Basket::parse(std::string_view text) {
    Cursor c{text};
    std::vector<Entry> entries;
    for (c.skip_ws(); !c.done(); c.skip_ws()) {
        size_t item_start = c.pos;
        long long mult = 1;
        if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
            mult = c.number("multiplicity");
            c.expect('*', "basket item (multiplicity must be followed by '*')");
            if (mult < 1) {
                c.pos = item_start;
                c.fail("multiplicity must be at least 1");
            }
        }
        c.expect('(', "basket item");
        c.skip_ws();
        long long b = c.number("singularity weight b");
        c.skip_ws();
        c.expect(',', "basket item");
        c.skip_ws();
        long long r = c.number("singularity index r");
        c.skip_ws();
        c.expect(')', "basket item");
        if (!c.done() && !std::isspace(static_cast<unsigned char>(c.peek())))
            c.fail("unexpected character after basket item");
        try {
            entries.emplace_back(BasketPoint(b, r), mult);
        } catch (const DataError& e) {
            throw ParseError(e.what(), 1, static_cast<int>(item_start) + 1);
        }
    }
    return Basket(std::move(entries));
}

long long Basket::total_points() const {
    long long total = 0;
    for (const auto& [point, mult] : entries_) total += mult;
    return total;
}

std::string Basket::str() const {
    std::string out;
    for (const auto& [point, mult] : entries_) {
        if (!out.empty()) out += ' ';
        if (mult != 1) out += std::to_string(mult) + "*";
        out += "(" + std::to_string(point.b) + "," + std::to_string(point.r) + ")";
    }
    return out;
}

Rational local_contribution(const BasketPoint& q, long long m) {
    if (m < 1) throw DataError("local contribution needs m >= 1, got m=" + std::to_string(m));
    const unsigned long long r = static_cast<unsigned long long>(q.r);
    const unsigned long long b = static_cast<unsigned long long>(q.b);
    unsigned __int128 acc = 0;
    unsigned long long bj = 0;  // b*j mod r, maintained incrementally
    for (long long j = 1; j < m; ++j) {
        bj += b;
        if (bj >= r) bj -= r;
        acc += static_cast<unsigned __int128>(bj) * (r - bj);
    }
    return Rational(int_from_u128(acc), Int(2) * q.r);
}

Rational basket_contribution(const Basket& basket, long long m) {
    Rational total;
    for (const auto& [point, mult] : basket.entries())
        total += local_contribution(point, m) * Rational(mult);
    return total;
}

Int cartier_index(const Basket& basket) {
    Int l = 1;
    for (const auto& [point, mult] : basket.entries())
        l = l / boost::multiprecision::gcd(l, Int(point.r)) * point.r;
    return l;
}

Rational basket_contribution_slope(const Basket& basket) {
    Rational slope;
    for (const auto& [point, mult] : basket.entries())
        slope += Rational(Int(point.r) * point.r - 1, Int(12) * point.r) * Rational(mult);
    return slope;
}

}  // namespace tfold
