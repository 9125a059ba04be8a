#include "twep/bounds.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>
#include <string>

#include "twep/errorspace.h"

namespace twep {

namespace {

void require_t_le_n(std::size_t n, std::size_t t) {
    if (t > n) {
        throw std::invalid_argument("t=" + std::to_string(t) + " exceeds n=" + std::to_string(n));
    }
}

}  // namespace

long hamming_max_k(std::size_t n, std::size_t t) {
    require_t_le_n(n, t);
    long k = static_cast<long>(n) - ceil_log2(count_errors(n, t, 2));
    return k >= 1 ? k : -1;
}

long singleton_max_k(std::size_t n, std::size_t t) {
    long k = static_cast<long>(n) - 4 * static_cast<long>(t);
    return k >= 0 ? k : -1;
}

long gv_k(std::size_t n, std::size_t t) {
    if (2 * t > n) {
        throw std::invalid_argument("Gilbert-Varshamov bound needs 2t <= n (n=" + std::to_string(n) +
                                    ", t=" + std::to_string(t) + ")");
    }
    return static_cast<long>(n) - ceil_log2(count_errors(n, 2 * t, 2));
}

long thm2_k(std::size_t n, std::size_t t) {
    require_t_le_n(n, t);
    return static_cast<long>(n) - ceil_log2(count_errors(n, t, 2)) - 2;
}

std::vector<BigInt> mi_sequence(std::size_t len) {
    if (len == 0) {
        throw std::invalid_argument("mi_sequence needs len >= 1");
    }
    std::vector<BigInt> seq{1};
    while (seq.size() < len) {
        // m is feasible iff m + sqrt(m) <= B, i.e. m <= B and m <= (B - m)^2.
        const BigInt bound = 2 * seq.back() + 2;
        auto feasible = [&](const BigInt &m) {
            BigInt gap = bound - m;
            return gap >= 0 && m <= gap * gap;
        };
        BigInt lo = seq.back();
        BigInt hi = bound;
        while (lo < hi) {
            BigInt mid = (lo + hi + 1) / 2;
            if (feasible(mid)) {
                lo = mid;
            } else {
                hi = mid - 1;
            }
        }
        seq.push_back(lo);
    }
    return seq;
}

BoundsRow bounds_row(std::size_t n, std::size_t t) {
    BoundsRow row{n, t, hamming_max_k(n, t), singleton_max_k(n, t), std::nullopt, thm2_k(n, t)};
    if (2 * t <= n) {
        row.gv_k = gv_k(n, t);
    }
    return row;
}

double binary_entropy(double x) {
    if (x <= 0.0 || x >= 1.0) {
        return 0.0;
    }
    return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

RatePoint rate_at(double x) {
    const double log2_3 = std::log2(3.0);
    double h = binary_entropy(x);
    double r2 = 1.0 - x * log2_3 - h;
    double rgv = 1.0 - 2.0 * x * log2_3 - binary_entropy(2.0 * x);
    return {x, std::clamp(r2, 0.0, 1.0), std::clamp(rgv, 0.0, 1.0), h, r2, rgv};
}

std::vector<RatePoint> rate_table(std::size_t points) {
    if (points < 2) {
        throw std::invalid_argument("rate_table needs at least 2 points");
    }
    std::vector<RatePoint> out;
    out.reserve(points);
    for (std::size_t i = 0; i < points; i++) {
        out.push_back(rate_at(0.5 * static_cast<double>(i) / static_cast<double>(points - 1)));
    }
    return out;
}

std::string format_decimal(double v, int precision) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed, precision);
    return std::string(buf, res.ptr);
}

void write_bounds_csv(std::ostream &out, std::span<const BoundsRow> rows) {
    out << "n,t,hamming_k,singleton_k,gv_k,thm2_k\n";
    for (const auto &r : rows) {
        out << r.n << ',' << r.t << ',' << r.hamming_k << ',' << r.singleton_k << ',';
        if (r.gv_k) {
            out << *r.gv_k;
        }
        out << ',' << r.thm2_k << '\n';
    }
}

void write_rates_csv(std::ostream &out, std::span<const RatePoint> points) {
    out << "x,rate_2epp,rate_gv\n";
    for (const auto &p : points) {
        out << format_decimal(p.x) << ',' << format_decimal(p.rate_2epp) << ',' << format_decimal(p.rate_gv) << '\n';
    }
}

}  // namespace twep
