#include "twep/stabilizer.h"

#include <algorithm>
#include <bit>
#include <string>

#include "twep/errors.h"

namespace twep {

namespace {

// Index of the first nonzero coordinate of (x|z), or 2n when v is the identity.
std::size_t leading_coordinate(const PauliVec &v) {
    auto scan = [&](std::span<const uint64_t> lo, std::span<const uint64_t> hi) -> std::size_t {
        for (std::size_t w = 0; w < lo.size(); w++) {
            uint64_t word = lo[w] | hi[w];
            if (word) {
                return w * 64 + static_cast<std::size_t>(std::countr_zero(word));
            }
        }
        return v.n();
    };
    std::size_t j = scan(v.x_lo(), v.x_hi());
    if (j < v.n()) {
        return j;
    }
    return v.n() + scan(v.z_lo(), v.z_hi());
}

void check_same_shape(const StabilizerSet &s, const PauliVec &p) {
    if (s.d() != p.d() || s.n() != p.n()) {
        throw DimensionMismatch("operator shape (d=" + std::to_string(p.d()) + ", n=" + std::to_string(p.n()) +
                                ") does not match stabilizer (d=" + std::to_string(s.d()) +
                                ", n=" + std::to_string(s.n()) + ")");
    }
}

uint64_t checked_power(uint64_t base, std::size_t exp, uint64_t limit) {
    uint64_t result = 1;
    for (std::size_t i = 0; i < exp; i++) {
        if (result > limit / base) {
            return limit + 1;
        }
        result *= base;
    }
    return result;
}

}  // namespace

RowSpace::RowSpace(int d, std::size_t n) : d_(d), n_(n) {
}

PauliVec RowSpace::reduce(const PauliVec &v) const {
    if (v.d() != d_ || v.n() != n_) {
        throw DimensionMismatch("row space and operator differ in dimension or register count");
    }
    PauliVec r = v;
    for (std::size_t i = 0; i < rows_.size(); i++) {
        int c = r.coordinate(pivots_[i]);
        if (c) {
            r.multiply_power(rows_[i], d_ - c);
        }
    }
    return r;
}

bool RowSpace::contains(const PauliVec &v) const {
    return reduce(v).is_identity();
}

bool RowSpace::insert(const PauliVec &v) {
    PauliVec r = reduce(v);
    std::size_t pivot = leading_coordinate(r);
    if (pivot == 2 * n_) {
        return false;
    }
    int c = r.coordinate(pivot);
    if (c != 1) {
        // Every unit of Z_2 and Z_3 is its own inverse.
        r = r.pow(c);
    }
    for (auto &row : rows_) {
        int e = row.coordinate(pivot);
        if (e) {
            row.multiply_power(r, d_ - e);
        }
    }
    rows_.push_back(std::move(r));
    pivots_.push_back(pivot);
    return true;
}

StabilizerSet::StabilizerSet(int d, std::size_t n) : d_(d), n_(n), span_(d, n) {
    if (d != 2 && d != 3) {
        throw std::invalid_argument("register dimension must be 2 or 3");
    }
}

StabilizerSet::StabilizerSet(int d, std::size_t n, std::span<const PauliVec> gens) : StabilizerSet(d, n) {
    for (const auto &g : gens) {
        append(g);
    }
}

void StabilizerSet::append(const PauliVec &g) {
    check_same_shape(*this, g);
    for (std::size_t i = 0; i < gens_.size(); i++) {
        if (symplectic_product(gens_[i], g) != 0) {
            throw StabilizerError(render(g) + " does not commute with generator " + std::to_string(i) + " (" +
                                  render(gens_[i]) + ")");
        }
    }
    if (!span_.insert(g)) {
        throw StabilizerError(render(g) + " is already in the span of the generators");
    }
    gens_.push_back(g);
}

StabilizerSet StabilizerSet::with(const PauliVec &g) const {
    StabilizerSet result = *this;
    result.append(g);
    return result;
}

std::size_t rank(std::span<const PauliVec> gens) {
    if (gens.empty()) {
        return 0;
    }
    RowSpace space(gens[0].d(), gens[0].n());
    for (const auto &g : gens) {
        if (g.d() != gens[0].d() || g.n() != gens[0].n()) {
            throw DimensionMismatch("generators differ in dimension or register count");
        }
        space.insert(g);
    }
    return space.dimension();
}

bool is_member(const StabilizerSet &s, const PauliVec &p) {
    check_same_shape(s, p);
    return s.span().contains(p);
}

bool in_normalizer(const StabilizerSet &s, const PauliVec &p) {
    check_same_shape(s, p);
    return std::all_of(s.generators().begin(), s.generators().end(),
                       [&](const PauliVec &g) { return symplectic_product(g, p) == 0; });
}

Syndrome syndrome(const StabilizerSet &s, const PauliVec &e) {
    check_same_shape(s, e);
    Syndrome out;
    out.reserve(s.rank());
    for (const auto &g : s.generators()) {
        out.push_back(symplectic_product(g, e));
    }
    return out;
}

std::size_t logical_count(const StabilizerSet &s) {
    return s.n() - s.rank();
}

std::vector<PauliVec> complete_discard(const StabilizerSet &s, std::span<const std::size_t> registers) {
    if (registers.empty()) {
        throw std::invalid_argument("discard set must be nonempty");
    }
    if (registers.size() > kMaxDiscardRegisters) {
        throw SizeLimitError("discard completion supports at most " + std::to_string(kMaxDiscardRegisters) +
                             " registers, got " + std::to_string(registers.size()));
    }
    std::vector<std::size_t> sorted(registers.begin(), registers.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() || sorted.back() >= s.n()) {
        throw std::invalid_argument("discard registers must be distinct and less than n");
    }

    const int d = s.d();
    const uint64_t base = static_cast<uint64_t>(d * d);
    constexpr uint64_t kMaxCandidates = uint64_t{1} << 20;
    uint64_t total = checked_power(base, registers.size(), kMaxCandidates);
    if (total > kMaxCandidates) {
        throw SizeLimitError("discard completion over " + std::to_string(registers.size()) +
                             " registers exceeds the candidate limit");
    }

    std::vector<PauliVec> out;
    std::vector<PauliVec> constraints = s.generators();
    RowSpace span = s.span();
    for (uint64_t counter = 1; counter < total && out.size() < registers.size(); counter++) {
        PauliVec candidate(d, s.n());
        uint64_t rest = counter;
        for (auto r : registers) {
            int code = static_cast<int>(rest % base);
            rest /= base;
            candidate.set(r, code % d, code / d);
        }
        bool commutes = std::all_of(constraints.begin(), constraints.end(),
                                    [&](const PauliVec &g) { return symplectic_product(g, candidate) == 0; });
        if (!commutes || !span.insert(candidate)) {
            continue;
        }
        constraints.push_back(candidate);
        out.push_back(std::move(candidate));
    }
    return out;
}

bool code_corrects(const StabilizerSet &s, std::span<const PauliVec> errors) {
    for (const auto &e : errors) {
        check_same_shape(s, e);
    }
    for (std::size_t i = 0; i < errors.size(); i++) {
        PauliVec inv = errors[i].inverse();
        for (std::size_t j = i + 1; j < errors.size(); j++) {
            PauliVec diff = inv * errors[j];
            if (in_normalizer(s, diff) && !is_member(s, diff)) {
                return false;
            }
        }
    }
    return true;
}

std::optional<std::size_t> min_normalizer_weight(const StabilizerSet &s) {
    constexpr uint64_t kLimit = uint64_t{1} << (2 * kMaxNormalizerScanRegisters);
    if (checked_power(static_cast<uint64_t>(s.d()), 2 * s.n(), kLimit) > kLimit) {
        throw SizeLimitError("normalizer scan over d=" + std::to_string(s.d()) + ", n=" + std::to_string(s.n()) +
                             " exceeds the 4^" + std::to_string(kMaxNormalizerScanRegisters) + " operator bound");
    }
    for (std::size_t w = 1; w <= s.n(); w++) {
        bool found = false;
        for_each_of_weight(s.d(), s.n(), w, [&](const PauliVec &p) {
            if (in_normalizer(s, p) && !is_member(s, p)) {
                found = true;
                return false;
            }
            return true;
        });
        if (found) {
            return w;
        }
    }
    return std::nullopt;
}

}  // namespace twep
