#include "tfold/riemann_roch.hpp"

#include <algorithm>
#include <string>

#include "tfold/errors.hpp"

namespace tfold {

namespace {

// Upper rail for any m this library will evaluate at. Keeps worst-case
// direct summation (O(m) per value) inside interactive time even for
// adversarial documents.
constexpr long long kMaxM = 100'000'000;

// Per-point prefix tables are materialized only while the total table size
// stays modest; beyond that the window code falls back to direct summation.
constexpr long long kMaxTableSpan = 1'000'000;

[[noreturn]] void throw_not_plurigenus(long long m, const std::string& value) {
    throw DataError("chi(O(" + std::to_string(m) + "K)) = " + value +
                    " is not a non-negative integer; the data does not describe a minimal "
                    "3-fold of general type");
}

// Exact shared tables for chi(O(mK)) * D, where D = lcm(12*den(K^3), 2*r_i).
// numerator(m) costs O(#points) big-int operations; the 64-bit mirror below
// brings that down to plain machine arithmetic when provably safe.
struct KernelTables {
    Int D, A, chiD;  // A = K^3 * D / 12, chiD = chi * D
    struct Pt {
        long long r = 0;
        long long mult = 0;
        Int factor;                                // D / (2r)
        Int period;                                // sum of one full period of g
        std::vector<unsigned long long> prefix;    // prefix[s] = sum_{j=1}^{s} g(j)
    };
    std::vector<Pt> pts;

    // g(j) = jb(r - jb) mod-r values fit unsigned 64-bit because r is capped
    // by kMaxTableSpan (period <= r^3/6 << 2^63).
    bool build(const ThreefoldData& X) {
        long long span = 0;
        for (const auto& [point, mult] : X.basket.entries()) {
            span += point.r;
            if (span > kMaxTableSpan) return false;
        }
        const Rational& k3 = *X.k3;
        D = Int(12) * k3.den();
        for (const auto& [point, mult] : X.basket.entries()) {
            Int two_r = Int(2) * point.r;
            D = D / boost::multiprecision::gcd(D, two_r) * two_r;
        }
        A = k3.num() * (D / (Int(12) * k3.den()));
        chiD = Int(X.chi) * D;
        for (const auto& [point, mult] : X.basket.entries()) {
            Pt p;
            p.r = point.r;
            p.mult = mult;
            p.factor = D / (Int(2) * point.r);
            p.prefix.resize(static_cast<size_t>(point.r));
            const unsigned long long r = static_cast<unsigned long long>(point.r);
            const unsigned long long b = static_cast<unsigned long long>(point.b);
            unsigned long long bj = 0, acc = 0;
            p.prefix[0] = 0;
            for (long long s = 1; s < point.r; ++s) {
                bj += b;
                if (bj >= r) bj -= r;
                acc += bj * (r - bj);
                p.prefix[static_cast<size_t>(s)] = acc;
            }
            p.period = Int(acc);
            pts.push_back(std::move(p));
        }
        return true;
    }

    Int numerator(long long m) const {
        Int mm{m};
        Int num = A * (mm * (mm - 1) * (2 * mm - 1)) + chiD * (1 - 2 * mm);
        const long long m1 = m - 1;
        for (const auto& p : pts) {
            long long quot = m1 / p.r;
            long long rem = m1 % p.r;
            num += p.factor * p.mult * (p.period * quot + p.prefix[static_cast<size_t>(rem)]);
        }
        return num;
    }
};

// 64-bit mirror of KernelTables, valid through a given m_hi. build() proves
// with exact arithmetic that every intermediate stays below 2^62.
struct KernelTables64 {
    long long D = 0, A = 0, chiD = 0;
    struct Pt {
        long long r = 0, mult = 0, factor = 0, period = 0;
        const std::vector<unsigned long long>* prefix = nullptr;
    };
    std::vector<Pt> pts;

    bool build(const KernelTables& t, long long m_hi) {
        const Int limit = Int(1) << 62;
        Int M{m_hi};
        Int bound = boost::multiprecision::abs(t.A) * (2 * M * M * M) +
                    boost::multiprecision::abs(t.chiD) * (2 * M + 1);
        for (const auto& p : t.pts) bound += p.factor * p.mult * ((M / p.r + 2) * p.period);
        if (bound >= limit || t.D >= limit) return false;
        D = t.D.convert_to<long long>();
        A = t.A.convert_to<long long>();
        chiD = t.chiD.convert_to<long long>();
        for (const auto& p : t.pts)
            pts.push_back({p.r, p.mult, p.factor.convert_to<long long>(),
                           p.period.convert_to<long long>(), &p.prefix});
        return true;
    }

    long long numerator(long long m) const {
        long long num = A * (m * (m - 1) * (2 * m - 1)) + chiD * (1 - 2 * m);
        const long long m1 = m - 1;
        for (const auto& p : pts) {
            long long quot = m1 / p.r;
            long long rem = m1 % p.r;
            num += p.factor * p.mult *
                   (p.period * quot + static_cast<long long>((*p.prefix)[static_cast<size_t>(rem)]));
        }
        return num;
    }
};

void check_window_range(long long m_lo, long long m_hi) {
    if (m_lo < 2) throw DataError("plurigenus evaluation starts at m = 2");
    if (m_hi > kMaxM)
        throw DataError("plurigenus index " + std::to_string(m_hi) + " out of supported range");
}

}  // namespace

void ThreefoldData::validate() const {
    if (q < 0) throw DataError("irregularity q must be non-negative");
    if (k3 && k3->sign() <= 0) throw DataError("K^3 must be positive, got " + k3->str());
    if (pg && *pg < 0) throw DataError("p_g must be non-negative");
    auto sorted = known_plurigenera;
    std::sort(sorted.begin(), sorted.end(),
              [](const PlurigenusConstraint& a, const PlurigenusConstraint& b) { return a.m < b.m; });
    for (size_t i = 0; i < sorted.size(); ++i) {
        const auto& c = sorted[i];
        if (c.m < 2)
            throw DataError("plurigenus constraints start at m = 2 (P_1 belongs in pg)");
        if (c.m > kMaxM)
            throw DataError("plurigenus index " + std::to_string(c.m) + " out of supported range");
        if (c.value < 0)
            throw DataError("P_" + std::to_string(c.m) + " must be non-negative");
        if (i > 0 && sorted[i - 1].m == c.m && !(sorted[i - 1].value == c.value))
            throw DataError("conflicting constraints for P_" + std::to_string(c.m));
    }
}

Rational chi_of_mK(const ThreefoldData& X, long long m) {
    if (m < 1) throw DataError("chi(O(mK)) needs m >= 1, got m=" + std::to_string(m));
    if (m > kMaxM)
        throw DataError("plurigenus index " + std::to_string(m) + " out of supported range");
    if (!X.k3) throw DataError("K^3 value required; solve or supply it first");
    Int mm{m};
    Rational cubic = *X.k3 * Rational(mm * (mm - 1) * (2 * mm - 1), 12);
    Rational linear{(Int(1) - 2 * mm) * X.chi};
    return cubic + linear + basket_contribution(X.basket, m);
}

Int plurigenus(const ThreefoldData& X, long long m) {
    if (m < 2) throw DataError("plurigenus needs m >= 2, got m=" + std::to_string(m));
    Rational chi_val = chi_of_mK(X, m);
    if (!chi_val.is_integer() || chi_val.sign() < 0) throw_not_plurigenus(m, chi_val.str());
    return chi_val.num();
}

Rational solve_k3(const ThreefoldData& X) {
    X.validate();
    if (X.known_plurigenera.empty()) {
        if (X.k3) return *X.k3;
        throw DataError("cannot determine K^3: no plurigenus constraints and no explicit value");
    }
    auto constraints = X.known_plurigenera;
    std::sort(constraints.begin(), constraints.end(),
              [](const PlurigenusConstraint& a, const PlurigenusConstraint& b) { return a.m < b.m; });
    const auto& lowest = constraints.front();
    Int mm{lowest.m};
    // P_m = (1/12) m(m-1)(2m-1) K^3 + (1-2m) chi + B(m), solved for K^3.
    Rational k3 = (Rational(lowest.value) - Rational((Int(1) - 2 * mm) * X.chi) -
                   basket_contribution(X.basket, lowest.m)) /
                  Rational(mm * (mm - 1) * (2 * mm - 1), 12);
    if (k3.sign() <= 0)
        throw DataError("solved K^3 = " + k3.str() + " is not positive; data inconsistent");
    if (X.k3 && !(*X.k3 == k3))
        throw DataError("explicit K^3 = " + X.k3->str() + " does not match K^3 = " + k3.str() +
                        " solved from P_" + std::to_string(lowest.m));
    ThreefoldData solved = X;
    solved.k3 = k3;
    for (size_t i = 1; i < constraints.size(); ++i) {
        Rational computed = chi_of_mK(solved, constraints[i].m);
        if (!(computed == Rational(constraints[i].value)))
            throw DataError("constraint P_" + std::to_string(constraints[i].m) + " = " +
                            constraints[i].value.str() + " is inconsistent: computed " +
                            computed.str());
    }
    return k3;
}

ThreefoldData resolve_k3(const ThreefoldData& X) {
    ThreefoldData out = X;
    out.k3 = solve_k3(X);
    return out;
}

std::vector<std::pair<long long, Int>> plurigenus_table(const ThreefoldData& X, long long m_max) {
    std::vector<std::pair<long long, Int>> table;
    if (m_max < 2) return table;
    std::vector<Int> values = plurigenus_window(X, 2, m_max);
    table.reserve(values.size());
    for (long long m = 2; m <= m_max; ++m)
        table.emplace_back(m, std::move(values[static_cast<size_t>(m - 2)]));
    return table;
}

long long delta_index(const ThreefoldData& X, long long search_limit) {
    if (search_limit < 2) throw DataError("delta search limit must be at least 2");
    std::vector<Int> values = plurigenus_window(X, 2, search_limit);
    for (long long m = 2; m <= search_limit; ++m)
        if (values[static_cast<size_t>(m - 2)] >= 2) return m;
    throw DataError("no m <= " + std::to_string(search_limit) + " has P_m >= 2");
}

std::vector<Int> plurigenus_window(const ThreefoldData& X, long long m_lo, long long m_hi) {
    check_window_range(m_lo, m_hi);
    if (m_hi < m_lo) return {};
    ThreefoldData solved = resolve_k3(X);
    const long long n = m_hi - m_lo + 1;
    std::vector<Int> out(static_cast<size_t>(n));

    KernelTables tables;
    if (!tables.build(solved)) {
        // Pathologically large singularity indices: no tables, direct summation.
        for (long long i = 0; i < n; ++i)
            out[static_cast<size_t>(i)] = plurigenus(solved, m_lo + i);
        return out;
    }

    KernelTables64 fast;
    if (fast.build(tables, m_hi)) {
        std::vector<long long> vals(static_cast<size_t>(n));
        long long first_bad = -1;
#pragma omp parallel for schedule(static)
        for (long long i = 0; i < n; ++i) {
            long long num = fast.numerator(m_lo + i);
            if (num < 0 || num % fast.D != 0) {
#pragma omp critical
                {
                    if (first_bad < 0 || m_lo + i < first_bad) first_bad = m_lo + i;
                }
            } else {
                vals[static_cast<size_t>(i)] = num / fast.D;
            }
        }
        if (first_bad >= 0)
            throw_not_plurigenus(first_bad, chi_of_mK(solved, first_bad).str());
        for (long long i = 0; i < n; ++i) out[static_cast<size_t>(i)] = vals[static_cast<size_t>(i)];
        return out;
    }

    for (long long i = 0; i < n; ++i) {
        Int num = tables.numerator(m_lo + i);
        if (num < 0 || num % tables.D != 0)
            throw_not_plurigenus(m_lo + i, chi_of_mK(solved, m_lo + i).str());
        out[static_cast<size_t>(i)] = num / tables.D;
    }
    return out;
}

std::vector<Int> plurigenus_window_reference(const ThreefoldData& X, long long m_lo,
                                             long long m_hi) {
    check_window_range(m_lo, m_hi);
    if (m_hi < m_lo) return {};
    ThreefoldData solved = resolve_k3(X);
    std::vector<Int> out;
    out.reserve(static_cast<size_t>(m_hi - m_lo + 1));
    for (long long m = m_lo; m <= m_hi; ++m) out.push_back(plurigenus(solved, m));
    return out;
}

PositivityCertificate certify_positive_from(const ThreefoldData& X, long long from_m,
                                            long long window_hi) {
    if (from_m < 2 || window_hi < from_m)
        throw DataError("positivity certificate needs 2 <= from_m <= window_hi");
    ThreefoldData solved = resolve_k3(X);
    PositivityCertificate cert;
    cert.from_m = from_m;
    cert.window_hi = window_hi;
    std::vector<Int> values = plurigenus_window(solved, from_m, window_hi);
    cert.window_positive =
        std::all_of(values.begin(), values.end(), [](const Int& v) { return v > 0; });
    Int T{window_hi};
    cert.tail_monotone = *solved.k3 * Rational(T * T) >= Rational(Int(4) * solved.chi);
    return cert;
}

}  // namespace tfold
