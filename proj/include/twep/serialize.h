#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"
#include "twep/engine.h"

namespace twep {

/// One line per measurement, `{"op": "<pauli>", "outcome": <int>}`, then a final
/// `{"correction": "<pauli>", "k_out": <int>}` line. Every line ends in '\n'.
std::string transcript_jsonl(const Transcript &transcript);

/// Two-party rendering of a qubit transcript. For each measurement Alice's raw bit `alice` is drawn
/// from a fixed-seed generator, `y_parity` is the parity of Y factors in the operator, and Bob's
/// bit is alice ^ y_parity ^ outcome. Throws std::invalid_argument for qutrit transcripts.
std::string two_party_jsonl(const Transcript &transcript, uint64_t seed = 0x2E99);

/// Keys in order: protocol, errors_checked, k_claimed, k_min, max_measurements, pass, counterexamples.
nlohmann::ordered_json report_json(const Report &report);

}  // namespace twep
