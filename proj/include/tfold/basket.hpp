#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tfold/rational.hpp"

namespace tfold {

// One terminal cyclic quotient singularity of type 1/r(1,-1,b), recorded as
// the pair (b, r) with 0 < b < r and gcd(b, r) = 1. Its contribution to
// chi(O(mK)) depends only on {b, r-b}, so points normalize to b <= r/2 on
// construction and compare equal exactly when their contributions agree.
struct BasketPoint {
    long long b = 1;
    long long r = 2;

    BasketPoint() = default;
    BasketPoint(long long b_in, long long r_in);  // DataError on invalid data

    friend auto operator<=>(const BasketPoint&, const BasketPoint&) = default;
};

// Multiset of basket points. Canonical storage: sorted by (r, b), equal
// points merged, multiplicities >= 1. operator== is therefore multiset
// equality, and str() round-trips through parse().
class Basket {
public:
    using Entry = std::pair<BasketPoint, long long>;  // (point, multiplicity)

    Basket() = default;
    explicit Basket(std::vector<Entry> entries);  // DataError on multiplicity < 1

    // Whitespace-separated items, each "(b,r)" or "N*(b,r)" with N >= 1.
    // Spaces are allowed around the parenthesized numbers; the empty string
    // is the empty basket. ParseError carries a 1-based column.
    static Basket parse(std::string_view text);

    const std::vector<Entry>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    long long total_points() const;  // sum of multiplicities
    std::string str() const;

    friend bool operator==(const Basket&, const Basket&) = default;

private:
    std::vector<Entry> entries_;
};

// l(q, m) = sum_{j=1}^{m-1} jb(r - jb) / (2r), with jb taken mod r.
// This is the correction a point of type (b, r) adds to chi(O(mK)).
// Requires m >= 1; l(q, 1) = 0.
Rational local_contribution(const BasketPoint& q, long long m);

// Sum of local contributions over the whole basket, with multiplicities.
Rational basket_contribution(const Basket& basket, long long m);

// Smallest positive integer whose multiple of K is Cartier at every basket
// point: lcm of the indices r. Empty basket gives 1.
Int cartier_index(const Basket& basket);

// Average growth of the basket contribution per unit step in m:
//   sum over points of mult * (r^2 - 1) / (12 r).
// One full period of the local term sums to (r^2 - 1)/12, so
// basket_contribution(m + cartier_index) - basket_contribution(m) equals
// cartier_index * slope for every m >= 1.
Rational basket_contribution_slope(const Basket& basket);

}  // namespace tfold
