#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "twep/engine.h"

namespace twep {

/// 2 good pairs from 6 with one error: measure XXXX and ZZZZ on pairs 1-4, then discard pairs
/// 1-4 if that detects an error and pairs 5-6 otherwise.
Strategy six_pair();

/// 2^m - m - 2 good pairs from 2^m - 1 with one error. Measures X on every pair; a detected Y/Z
/// error is located to one or two pairs by binary search over X-products, which are then
/// discarded; otherwise the m Hamming-code Z parity checks locate any X error. Requires m >= 3.
Strategy hamming_family(int m);

/// 1 good pair from 9 with two errors: the five-qubit code on pairs 1-5 next to the four-qubit
/// detecting code on pairs 6-9.
///  - error seen on 6-9: discard 6-9, the five-qubit code handles the rest (1 pair);
///  - error seen only on 1-5: discard 1-5, pairs 6-9 are clean (2 pairs);
///  - nothing seen: discard 6-9 (1 pair).
Strategy nine_pair();

/// 1 good qutrit pair from 4 with one error, from the 3-qutrit detecting code XXX, ZZZ.
Strategy qutrit_four();

/// The generators XZZXI, IXZZX, XIXZZ, ZXIXZ of the five-qubit code.
std::vector<PauliVec> five_qubit_code();
/// XXXX and ZZZZ.
std::vector<PauliVec> four_qubit_code();
/// XXX and ZZZ over qutrits.
std::vector<PauliVec> three_qutrit_code();

struct NamedProtocol {
    std::string name;
    Strategy strategy;
    std::string description;
};

/// Registry keys: six-pair, hamming-m3, hamming-m4, hamming-m5, nine-pair, qutrit-four.
std::vector<std::string> protocol_names();
std::optional<NamedProtocol> find_protocol(std::string_view name);

}  // namespace twep
