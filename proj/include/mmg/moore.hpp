#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "mmg/error.hpp"

namespace mmg::moore {

/// Largest possible order of a diameter-2 mixed graph with directed degree z
/// and undirected degree r: (r+z)^2 + z + 1.
inline long long mixed_moore_bound(long long z, long long r) {
    if (z < 0 || r < 0 || z + r < 1)
        fail("InvalidParameters", "mixed_moore_bound needs z, r >= 0 and z + r >= 1");
    const long long d = r + z;
    return d * d + z + 1;
}

/// Undirected Moore bound 1 + d + d(d-1) + ... + d(d-1)^(k-1).
inline long long undirected_moore_bound(long long d, long long k) {
    if (d < 1 || k < 1) fail("InvalidParameters", "undirected_moore_bound needs d, k >= 1");
    long long sum = 1, term = d;
    for (long long i = 0; i < k; ++i) {
        sum += term;
        term *= d - 1;
    }
    return sum;
}

/// Directed Moore bound 1 + d + d^2 + ... + d^k.
inline long long directed_moore_bound(long long d, long long k) {
    if (d < 1 || k < 1) fail("InvalidParameters", "directed_moore_bound needs d, k >= 1");
    long long sum = 1, term = d;
    for (long long i = 0; i < k; ++i) {
        sum += term;
        term *= d;
    }
    return sum;
}

struct BosakCheck {
    bool feasible = false;
    long long c = 0;  // witness odd divisor when feasible
};

/// Divisibility test for proper mixed Moore parameters (z, r >= 1): searches
/// the positive odd divisors c of (4z-3)(4z+5) for one with r = (c^2+3)/4.
/// The trivial non-proper cases are the caller's business.
inline BosakCheck bosak_feasible(long long z, long long r) {
    if (z < 1 || r < 1) fail("InvalidParameters", "bosak_feasible needs z, r >= 1");
    const long long product = (4 * z - 3) * (4 * z + 5);
    for (long long c = 1; c * c <= 4 * r - 3; c += 2) {
        if (product % c == 0 && c * c == 4 * r - 3) return {true, c};
    }
    return {false, 0};
}

/// A mixed graph with odd undirected degree cannot have odd order: dropping
/// arc directions leaves a (2z+r)-regular graph, and odd-degree regular
/// graphs have even order.
inline bool parity_excludes(long long r, long long n) {
    if (r < 1) fail("InvalidParameters", "parity_excludes needs r >= 1");
    return r % 2 == 1 && n % 2 == 1;
}

struct BoundReport {
    long long z = 0, r = 0;
    long long moore = 0;         // (r+z)^2 + z + 1
    long long after_bosak = 0;   // moore, or moore - 1 when Bosak fails there
    long long after_parity = 0;  // final upper bound
    std::vector<std::string> steps;

    /// "52 -> 51 (Bosak) -> 50 (parity)"
    std::string summary() const {
        std::string out = std::to_string(moore);
        if (after_bosak < moore) out += " -> " + std::to_string(after_bosak) + " (Bosak)";
        for (long long n = after_bosak - 1; n >= after_parity; --n)
            out += " -> " + std::to_string(n) + " (parity)";
        return out;
    }
};

/// Sharpest known order bound for a (z,r;2)-mixed graph: the Moore bound,
/// minus one when the Bosak condition rules the bound itself out, then
/// lowered past orders excluded by parity.
inline BoundReport best_upper_bound(long long z, long long r) {
    if (z < 1 || r < 1) fail("InvalidParameters", "best_upper_bound needs z, r >= 1");
    BoundReport report;
    report.z = z;
    report.r = r;
    report.moore = mixed_moore_bound(z, r);
    report.steps.push_back("Moore bound (r+z)^2+z+1 = " + std::to_string(report.moore));
    const BosakCheck bosak = bosak_feasible(z, r);
    if (bosak.feasible) {
        report.after_bosak = report.moore;
        report.steps.push_back("Bosak condition feasible (c=" + std::to_string(bosak.c) +
                               "), bound stays " + std::to_string(report.after_bosak));
    } else {
        report.after_bosak = report.moore - 1;
        report.steps.push_back("Bosak condition infeasible at " + std::to_string(report.moore) +
                               ", bound drops to " + std::to_string(report.after_bosak));
    }
    report.after_parity = report.after_bosak;
    while (parity_excludes(r, report.after_parity)) {
        --report.after_parity;
        report.steps.push_back("parity excludes odd order with odd r, bound drops to " +
                               std::to_string(report.after_parity));
    }
    return report;
}

struct FeasibilityRow {
    long long n = 0, d = 0, z = 0, r = 0;
    bool exists = false;     // known witness graph
    std::string status;      // witness name, or "unknown"
};

/// Every parameter set with order <= n_max that survives the Bosak condition
/// (proper rows, z >= 1 and r >= 1), plus the four classical non-proper rows.
/// Witness names are literature facts, not computations.
inline std::vector<FeasibilityRow> feasibility_table(long long n_max) {
    std::vector<FeasibilityRow> rows;
    for (long long z = 1; (z + 1) * (z + 1) + z + 1 <= n_max; ++z) {
        for (long long r = 1; (z + r) * (z + r) + z + 1 <= n_max; ++r) {
            if (!bosak_feasible(z, r).feasible) continue;
            FeasibilityRow row;
            row.z = z;
            row.r = r;
            row.d = z + r;
            row.n = row.d * row.d + z + 1;
            if (r == 1) {
                row.exists = true;
                row.status = "Ka(" + std::to_string(row.d) + ",2)";
            } else if (z == 1 && r == 3) {
                row.exists = true;
                row.status = "Bosak graph";
            } else if (z == 7 && r == 3) {
                row.exists = true;
                row.status = "Jorgensen graph";
            } else {
                row.status = "unknown";
            }
            rows.push_back(row);
        }
    }
    const FeasibilityRow non_proper[] = {
        {3, 1, 1, 0, true, "Z_3"},
        {5, 2, 0, 2, true, "C_5"},
        {10, 3, 0, 3, true, "Petersen graph"},
        {50, 7, 0, 7, true, "Hoffman-Singleton graph"},
    };
    for (const auto& row : non_proper)
        if (row.n <= n_max) rows.push_back(row);
    std::sort(rows.begin(), rows.end(), [](const FeasibilityRow& a, const FeasibilityRow& b) {
        return a.n != b.n ? a.n < b.n : a.z < b.z;
    });
    return rows;
}

/// Gap between the Moore bound at (z, r) = ((q-1)/2, q) and the order 2q^2
/// achieved by the t = 0 construction; equals (q^2 - 4q + 3)/4 for odd q.
inline long long defect_t0(long long q) {
    if (q % 2 == 0) fail("EvenQ", "defect_t0 needs odd q, got q=" + std::to_string(q));
    if (q < 3) fail("InvalidParameters", "defect_t0 needs q >= 3");
    const long long bound = mixed_moore_bound((q - 1) / 2, q);
    if (4 * bound != 9 * q * q - 4 * q + 3)
        fail("InternalError", "closed form (9q^2-4q+3)/4 violated");  // unreachable
    return bound - 2 * q * q;
}

}  // namespace mmg::moore
