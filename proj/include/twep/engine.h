#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "twep/errorspace.h"
#include "twep/pauli.h"
#include "twep/stabilizer.h"

namespace twep {

/// Measure a Pauli operator; it must commute with, and be independent of, everything measured so far.
struct Measure {
    PauliVec op;
};

/// Give up the listed registers (zero-based). The engine realizes this by measuring a maximal
/// local commuting set on them (see `complete_discard`).
struct Discard {
    std::vector<std::size_t> registers;
};

struct Finish {};

using Step = std::variant<Measure, Discard, Finish>;

struct HistoryEntry {
    PauliVec op;
    int outcome;
};

struct DiscardRecord {
    std::vector<std::size_t> registers;
    /// Number of history entries present when the discard was issued.
    std::size_t issued_at;
};

/// Everything the two parties have learned: measured operators with their syndrome values,
/// in order, plus the discards that produced some of them.
struct History {
    std::vector<HistoryEntry> entries;
    std::vector<DiscardRecord> discards;
};

/// An adaptive protocol. `next` must be a pure function of the history.
struct Strategy {
    std::string name;
    int d = 2;
    std::size_t n = 0;
    std::size_t t = 0;
    long k_claimed = 0;
    std::function<Step(const History &)> next;
};

struct Transcript {
    History history;
    StabilizerSet final_stabilizer;
    PauliVec correction;
    std::size_t k_out = 0;
};

enum class FailureKind {
    IllegalMeasurement,    // operator anticommutes with an earlier measurement
    RedundantMeasurement,  // operator already in the measured span
    InvalidStep,           // wrong shape or bad discard registers
    UnsoundFinish,         // surviving candidates span two or more cosets
    EmptyCandidates,       // no error of weight <= t matches the history
    NonTermination,        // more than 2n strategy calls
    InsufficientPairs,     // k_out below the claimed k
    WrongCorrection,       // correction and hidden error differ by an element outside the final stabilizer
};

const char *to_string(FailureKind kind);

class ProtocolError : public std::runtime_error {
   public:
    ProtocolError(FailureKind kind, const std::string &message) : std::runtime_error(message), kind_(kind) {
    }
    FailureKind kind() const noexcept {
        return kind_;
    }

   private:
    FailureKind kind_;
};

/// Called with the history and the surviving candidate errors: once before the first step and
/// again after every measurement.
using StepObserver = std::function<void(const History &, const ErrorSet &)>;

/// Runs `strategy` against `hidden`. Outcomes are symplectic_product(M, hidden). Throws
/// ProtocolError when the strategy misbehaves and std::invalid_argument when `hidden` breaks the
/// weight promise.
Transcript simulate(const Strategy &strategy, const PauliVec &hidden, const StepObserver &observer = {});

/// The canonical-least candidate once all candidates consistent with `history` lie in one coset
/// of S. Throws ProtocolError (UnsoundFinish or EmptyCandidates) otherwise.
PauliVec generic_correction(const StabilizerSet &s, const History &history, std::size_t t, int d);

/// Same as generic_correction for an already filtered candidate set.
PauliVec correction_from_survivors(const StabilizerSet &s, const ErrorSet &survivors);

struct Counterexample {
    PauliVec hidden;
    /// Complete when the run finished; otherwise the history up to the failure.
    Transcript transcript;
    FailureKind kind;
    std::string reason;
};

struct Report {
    std::string protocol;
    uint64_t errors_checked = 0;
    /// Minimum k_out over finished runs; -1 when none finished.
    long k_min = -1;
    long k_claimed = 0;
    bool pass = false;
    /// Longest measurement sequence seen, discard completions included.
    std::size_t max_measurements = 0;
    std::vector<Counterexample> counterexamples;
};

struct VerifyOptions {
    unsigned workers = 1;
    uint64_t cap = kDefaultEnumerationCap;
};

/// Simulates against every error of weight <= t, identity included, and checks the pair count
/// and that the correction lands in the hidden error's coset of the final stabilizer.
Report verify(const Strategy &strategy, const VerifyOptions &options = {});

}  // namespace twep
