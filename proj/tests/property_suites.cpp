#include "property_suites.hpp"

#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

#include "tfold/basket.hpp"
#include "tfold/bound_engine.hpp"
#include "tfold/rational.hpp"

namespace tfold::props {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::runtime_error("property violated: " + msg);
}

}  // namespace

long long check_floor_sqrt(long long max_pq) {
    long long cases = 0;
    auto verify = [&](long long p, long long q) {
        Rational x{Int(p), Int(q)};
        Int n = floor_sqrt(x);
        require(n >= 0, "negative root for " + x.str());
        require(n * n * q <= p, "floor_sqrt overshoots at " + x.str());
        require((n + 1) * (n + 1) * q > p, "floor_sqrt undershoots at " + x.str());
        ++cases;
    };
    for (long long p = 0; p <= max_pq; ++p)
        for (long long q = 1; q <= max_pq; ++q) verify(p, q);
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<long long> big_p(0, 1'000'000'000'000LL);
    std::uniform_int_distribution<long long> big_q(1, 1'000'000LL);
    for (int i = 0; i < 2000; ++i) verify(big_p(rng), big_q(rng));
    return cases;
}

long long check_local_contribution(long long r_max, long long m_max) {
    long long cases = 0;
    for (long long r = 2; r <= r_max; ++r) {
        for (long long b = 1; b < r; ++b) {
            if (std::gcd(b, r) != 1) continue;
            BasketPoint point(b, r);
            require(BasketPoint(r - b, r) == point, "b and r-b must fold to one point");
            // The defining sum, term by term, with the raw (unfolded) b.
            auto brute = [&](long long m) {
                Rational sum;
                for (long long j = 1; j < m; ++j) {
                    long long bj = b * j % r;
                    sum += Rational{Int(bj * (r - bj)), Int(2 * r)};
                }
                return sum;
            };
            Rational period_gain{Int(r * r - 1), Int(12)};
            for (long long m = 1; m <= m_max; ++m) {
                Rational expected = brute(m);
                require(local_contribution(point, m) == expected,
                        "contribution of (" + std::to_string(b) + "," + std::to_string(r) +
                            ") at m=" + std::to_string(m));
                require(brute(m + r) - expected == period_gain,
                        "one period of (" + std::to_string(b) + "," + std::to_string(r) +
                            ") must add (r^2-1)/12");
                ++cases;
            }
        }
    }
    return cases;
}

long long check_optimize_xi(int cases) {
    std::mt19937 rng(20260817u);
    std::uniform_int_distribution<long long> deg_dist(1, 10);
    std::uniform_int_distribution<long long> num_dist(1, 30);
    std::uniform_int_distribution<long long> den_dist(1, 6);
    std::uniform_int_distribution<long long> beta_den(2, 40);
    std::bernoulli_distribution coin(0.5);
    constexpr long long kLo = 2, kHi = 120;
    long long checked = 0;
    for (int i = 0; i < cases; ++i) {
        XiProblem p{deg_dist(rng), Rational{Int(num_dist(rng)), Int(den_dist(rng))},
                    Rational{Int(1), Int(beta_den(rng))}, coin(rng)};
        Rational best = optimize_xi(p, kLo, kHi);
        require(best >= xi_initial(p), "optimize_xi fell below the starting bound");
        require(best.sign() > 0, "optimize_xi returned a non-positive bound");
        // Fixed point: no step over the sweep range strictly improves on it.
        for (long long m = kLo; m <= kHi; ++m) {
            auto step = xi_step(p, best, m);
            if (step) require(*step <= best, "xi_step improved on the optimized bound");
        }
        XiProblem bigger = p;
        bigger.deg_kc += 2;
        require(optimize_xi(bigger, kLo, kHi) >= best,
                "optimized bound must be monotone in the curve degree");
        ++checked;
    }
    return checked;
}

long long check_cartier_refine(int cases) {
    std::mt19937 rng(7u);
    std::uniform_int_distribution<long long> num(-100, 1000);
    std::uniform_int_distribution<long long> den(1, 60);
    std::uniform_int_distribution<long long> idx(1, 50);
    long long checked = 0;
    for (int i = 0; i < cases; ++i) {
        Rational x{Int(num(rng)), Int(den(rng))};
        Int r(idx(rng));
        Rational out = cartier_refine(x, r);
        Rational step{Int(1), r};
        require(out > x, "refined value must lie strictly above " + x.str());
        require(out - step <= x, "a smaller multiple of 1/r still lies above " + x.str());
        require((out * Rational(r)).is_integer(), "r times the refined value must be integral");
        ++checked;
    }
    return checked;
}

long long check_min_degree() {
    long long checked = 0;
    for (long long h0 = 1; h0 <= 6; ++h0) {
        for (long long g = 0; g <= 6; ++g) {
            Int expected(-1);
            for (long long d = 0; d <= 40; ++d) {
                if (d >= 2 * (h0 - 1) || d >= h0 + g - 1) {
                    expected = d;
                    break;
                }
            }
            require(min_degree_given_sections(Int(h0), Int(g)) == expected,
                    "degree for h0=" + std::to_string(h0) + ", g=" + std::to_string(g));
            ++checked;
        }
    }
    return checked;
}

}  // namespace tfold::props
