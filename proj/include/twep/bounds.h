#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "twep/bigint.h"

namespace twep {

// Coding bounds for qubit protocols producing k good pairs out of n with at most t errors.
// All integer bounds are exact; negative values mean "no guarantee".

/// Largest k >= 1 with 2^k * count_errors(n, t, 2) <= 2^n (the quantum Hamming bound), or -1 when
/// not even a single pair fits.
long hamming_max_k(std::size_t n, std::size_t t);

/// n - 4t (the quantum Singleton bound), or -1 when that is negative.
long singleton_max_k(std::size_t n, std::size_t t);

/// Largest k with 2^{n-k} >= count_errors(n, 2t, 2) (quantum Gilbert-Varshamov existence bound).
/// Requires 2t <= n.
long gv_k(std::size_t n, std::size_t t);

/// n - ceil(log2 count_errors(n, t, 2)) - 2: the pair count the greedy bisection protocol
/// guarantees. May be negative.
long thm2_k(std::size_t n, std::size_t t);

/// m_0 = 1; m_i is the largest m with (m + sqrt(m))/2 <= m_{i-1} + 1. Returns `len` terms.
std::vector<BigInt> mi_sequence(std::size_t len);

struct BoundsRow {
    std::size_t n;
    std::size_t t;
    long hamming_k;
    long singleton_k;
    /// Absent when 2t > n.
    std::optional<long> gv_k;
    long thm2_k;
};

BoundsRow bounds_row(std::size_t n, std::size_t t);

/// Binary entropy in bits, with h(0) = h(1) = 0.
double binary_entropy(double x);

struct RatePoint {
    double x;
    /// max(0, 1 - x log2 3 - h(x)).
    double rate_2epp;
    /// max(0, 1 - 2x log2 3 - h(2x)).
    double rate_gv;
    /// h(x).
    double h;
    /// The two expressions before clamping.
    double raw_2epp;
    double raw_gv;
};

RatePoint rate_at(double x);

/// `points` evenly spaced ratios t/n covering [0, 1/2].
std::vector<RatePoint> rate_table(std::size_t points);

void write_bounds_csv(std::ostream &out, std::span<const BoundsRow> rows);
void write_rates_csv(std::ostream &out, std::span<const RatePoint> points);

/// Formats a double with a '.' decimal point regardless of locale.
std::string format_decimal(double v, int precision = 6);

}  // namespace twep
