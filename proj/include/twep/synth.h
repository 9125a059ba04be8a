#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>

#include "twep/engine.h"
#include "twep/errorspace.h"
#include "twep/stabilizer.h"

namespace twep {

/// Every remaining candidate is coset-equivalent; nothing in N(S) can tell them apart.
class NoSeparator : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Largest register count the exhaustive generator scan accepts.
inline constexpr std::size_t kMaxSynthRegisters = 10;

struct SplitCount {
    std::size_t commuting = 0;
    std::size_t anticommuting = 0;
    /// commuting * anticommuting: pairs whose two errors give different outcomes for M.
    uint64_t separated_pairs = 0;

    std::size_t max_side() const noexcept {
        return commuting > anticommuting ? commuting : anticommuting;
    }
};

/// Qubits only.
SplitCount split_counts(const PauliVec &m, const ErrorSet &errors);

/// The element of N(S) \ S that separates the most candidate pairs (equivalently, the most
/// balanced commute/anticommute split). Ties go to the canonical-least operator.
///
/// When every candidate has the same syndrome under S, multiplying M by an element of S does not
/// change the split, so only the canonical representative of each coset of S in N(S) is scanned.
/// Otherwise all of N(S) \ S is scanned.
PauliVec choose_generator(const StabilizerSet &s, const ErrorSet &errors);

/// Adaptive bisection: recompute the surviving candidates from the history, finish once they
/// occupy a single coset of the measured stabilizer, otherwise measure `choose_generator`.
/// Claims max(0, thm2_k(n, t)) pairs.
Strategy greedy_strategy(std::size_t n, std::size_t t, uint64_t cap = kDefaultEnumerationCap);

}  // namespace twep
