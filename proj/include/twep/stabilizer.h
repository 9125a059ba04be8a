#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "twep/pauli.h"

namespace twep {

/// Generators rejected because they fail to commute or are linearly dependent.
class StabilizerError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Fully row-reduced basis of a Z_d-subspace of the symplectic space Z_d^{2n}.
///
/// Every row has a unit pivot coordinate and every other row is zero there, so `reduce` yields a
/// canonical representative of each coset v + span.
class RowSpace {
   public:
    RowSpace(int d, std::size_t n);

    /// Adds v to the span. Returns false (and leaves the span unchanged) when v is already in it.
    bool insert(const PauliVec &v);
    PauliVec reduce(const PauliVec &v) const;
    bool contains(const PauliVec &v) const;

    std::size_t dimension() const noexcept {
        return rows_.size();
    }
    const std::vector<PauliVec> &rows() const noexcept {
        return rows_;
    }
    const std::vector<std::size_t> &pivots() const noexcept {
        return pivots_;
    }

   private:
    int d_;
    std::size_t n_;
    std::vector<PauliVec> rows_;
    std::vector<std::size_t> pivots_;
};

/// Ordered measurement outcomes, one scalar in Z_d per generator.
using Syndrome = std::vector<int>;

/// Mutually commuting, independent generators in measurement order, plus their reduced span.
class StabilizerSet {
   public:
    StabilizerSet(int d, std::size_t n);
    /// Throws StabilizerError unless `gens` commute pairwise and are independent.
    StabilizerSet(int d, std::size_t n, std::span<const PauliVec> gens);

    int d() const noexcept {
        return d_;
    }
    std::size_t n() const noexcept {
        return n_;
    }
    const std::vector<PauliVec> &generators() const noexcept {
        return gens_;
    }
    const RowSpace &span() const noexcept {
        return span_;
    }
    std::size_t rank() const noexcept {
        return gens_.size();
    }

    void append(const PauliVec &g);
    StabilizerSet with(const PauliVec &g) const;

   private:
    int d_;
    std::size_t n_;
    std::vector<PauliVec> gens_;
    RowSpace span_;
};

/// Rank over Z_d of the (x|z) matrix whose rows are `gens`.
std::size_t rank(std::span<const PauliVec> gens);

/// Phaseless membership of p in the group generated by S.
bool is_member(const StabilizerSet &s, const PauliVec &p);

/// p commutes with every generator of S.
bool in_normalizer(const StabilizerSet &s, const PauliVec &p);

/// values[i] = symplectic_product(S.gens[i], e).
Syndrome syndrome(const StabilizerSet &s, const PauliVec &e);

/// n - rank: the number of logical pairs left after decoding.
std::size_t logical_count(const StabilizerSet &s);

/// Largest number of registers `complete_discard` accepts.
inline constexpr std::size_t kMaxDiscardRegisters = 9;

/// Completes S with operators supported only on `registers` (zero-based) until nothing further
/// supported there can be added.
///
/// Candidates are scanned in increasing order of the integer whose base-d^2 digits are the
/// per-register codes x + d*z, the first listed register being the least significant digit; a
/// candidate is kept when it commutes with S and everything kept so far and is independent of
/// their span. For S = {XXXXII, ZZZZII} and registers {0,1,2,3} this yields X_0X_1 then Z_0Z_1.
std::vector<PauliVec> complete_discard(const StabilizerSet &s, std::span<const std::size_t> registers);

/// No E^{-1}F with E, F in `errors` lies in N(S) \ S.
bool code_corrects(const StabilizerSet &s, std::span<const PauliVec> errors);

/// Largest register count accepted by `min_normalizer_weight` (for qubits).
inline constexpr std::size_t kMaxNormalizerScanRegisters = 12;

/// Minimum weight over N(S) \ S, scanning operators by increasing weight; nullopt when
/// N(S) = S (no logical operators remain). Throws SizeLimitError when d^{2n} > 4^12.
std::optional<std::size_t> min_normalizer_weight(const StabilizerSet &s);

}  // namespace twep
