#include "twep/protocols.h"

#include <numeric>
#include <stdexcept>

namespace twep {

namespace {

PauliVec embed(const PauliVec &local, std::size_t n, std::size_t offset) {
    PauliVec out(local.d(), n);
    for (std::size_t i = 0; i < local.n(); i++) {
        out.set(offset + i, local.x(i), local.z(i));
    }
    return out;
}

std::vector<std::size_t> range(std::size_t begin, std::size_t end) {
    std::vector<std::size_t> out(end - begin);
    std::iota(out.begin(), out.end(), begin);
    return out;
}

bool any_nonzero(const History &h, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; i++) {
        if (h.entries[i].outcome != 0) {
            return true;
        }
    }
    return false;
}

}  // namespace

std::vector<PauliVec> five_qubit_code() {
    return {parse_pauli("XZZXI", 2), parse_pauli("IXZZX", 2), parse_pauli("XIXZZ", 2), parse_pauli("ZXIXZ", 2)};
}

std::vector<PauliVec> four_qubit_code() {
    return {parse_pauli("XXXX", 2), parse_pauli("ZZZZ", 2)};
}

std::vector<PauliVec> three_qutrit_code() {
    return {parse_pauli("X,X,X", 3), parse_pauli("Z,Z,Z", 3)};
}

Strategy six_pair() {
    constexpr std::size_t n = 6;
    std::vector<PauliVec> checks;
    for (const auto &g : four_qubit_code()) {
        checks.push_back(embed(g, n, 0));
    }
    Strategy s;
    s.name = "six-pair";
    s.d = 2;
    s.n = n;
    s.t = 1;
    s.k_claimed = 2;
    s.next = [checks](const History &h) -> Step {
        if (!h.discards.empty()) {
            return Finish{};
        }
        if (h.entries.size() < checks.size()) {
            return Measure{checks[h.entries.size()]};
        }
        if (any_nonzero(h, 0, 2)) {
            return Discard{range(0, 4)};
        }
        return Discard{range(4, 6)};
    };
    return s;
}

Strategy hamming_family(int m) {
    if (m < 3 || m > 20) {
        throw std::invalid_argument("hamming_family needs 3 <= m <= 20, got m=" + std::to_string(m));
    }
    const std::size_t n = (std::size_t{1} << m) - 1;
    const auto mm = static_cast<std::size_t>(m);

    // Parity check b (0 = most significant digit): Z on every pair whose zero-based number has
    // digit b equal to 0.
    std::vector<PauliVec> z_checks;
    for (std::size_t b = 0; b < mm; b++) {
        std::vector<std::size_t> sites;
        for (std::size_t p = 0; p < n; p++) {
            if (((p >> (mm - 1 - b)) & 1) == 0) {
                sites.push_back(p);
            }
        }
        z_checks.push_back(PauliVec::on_sites(2, n, sites, 0, 1));
    }

    Strategy s;
    s.name = "hamming-m" + std::to_string(m);
    s.d = 2;
    s.n = n;
    s.t = 1;
    s.k_claimed = static_cast<long>(n) - m - 1;
    s.next = [n, mm, z_checks](const History &h) -> Step {
        if (!h.discards.empty()) {
            return Finish{};
        }
        const std::size_t done = h.entries.size();
        if (done == 0) {
            return Measure{PauliVec::on_sites(2, n, range(0, n), 1, 0)};
        }
        if (h.entries[0].outcome == 0) {
            if (done - 1 < mm) {
                return Measure{z_checks[done - 1]};
            }
            return Finish{};
        }
        // Binary search: replay the halvings recorded so far.
        std::vector<std::size_t> candidates = range(0, n);
        for (std::size_t i = 1; i < done; i++) {
            std::size_t half = (candidates.size() + 1) / 2;
            if (h.entries[i].outcome != 0) {
                candidates.resize(half);
            } else {
                candidates.erase(candidates.begin(), candidates.begin() + static_cast<std::ptrdiff_t>(half));
            }
        }
        if (done - 1 < mm - 1) {
            std::vector<std::size_t> first(candidates.begin(), candidates.begin() + (candidates.size() + 1) / 2);
            return Measure{PauliVec::on_sites(2, n, first, 1, 0)};
        }
        return Discard{candidates};
    };
    return s;
}

Strategy nine_pair() {
    constexpr std::size_t n = 9;
    std::vector<PauliVec> checks;
    for (const auto &g : five_qubit_code()) {
        checks.push_back(embed(g, n, 0));
    }
    for (const auto &g : four_qubit_code()) {
        checks.push_back(embed(g, n, 5));
    }
    Strategy s;
    s.name = "nine-pair";
    s.d = 2;
    s.n = n;
    s.t = 2;
    s.k_claimed = 1;
    s.next = [checks](const History &h) -> Step {
        if (!h.discards.empty()) {
            return Finish{};
        }
        if (h.entries.size() < checks.size()) {
            return Measure{checks[h.entries.size()]};
        }
        bool last_four = any_nonzero(h, 4, 6);
        bool first_five = any_nonzero(h, 0, 4);
        if (!last_four && first_five) {
            return Discard{range(0, 5)};
        }
        return Discard{range(5, 9)};
    };
    return s;
}

Strategy qutrit_four() {
    constexpr std::size_t n = 4;
    std::vector<PauliVec> checks;
    for (const auto &g : three_qutrit_code()) {
        checks.push_back(embed(g, n, 0));
    }
    Strategy s;
    s.name = "qutrit-four";
    s.d = 3;
    s.n = n;
    s.t = 1;
    s.k_claimed = 1;
    s.next = [checks](const History &h) -> Step {
        if (!h.discards.empty()) {
            return Finish{};
        }
        if (h.entries.size() < checks.size()) {
            return Measure{checks[h.entries.size()]};
        }
        if (any_nonzero(h, 0, 2)) {
            return Discard{range(0, 3)};
        }
        return Discard{range(3, 4)};
    };
    return s;
}

std::vector<std::string> protocol_names() {
    return {"six-pair", "hamming-m3", "hamming-m4", "hamming-m5", "nine-pair", "qutrit-four"};
}

std::optional<NamedProtocol> find_protocol(std::string_view name) {
    if (name == "six-pair") {
        return NamedProtocol{"six-pair", six_pair(), "four-qubit detecting code on pairs 1-4, then discard"};
    }
    if (name == "nine-pair") {
        return NamedProtocol{"nine-pair", nine_pair(), "five-qubit code on 1-5 beside the four-qubit code on 6-9"};
    }
    if (name == "qutrit-four") {
        return NamedProtocol{"qutrit-four", qutrit_four(), "3-qutrit detecting code on pairs 1-3, then discard"};
    }
    for (int m = 3; m <= 5; m++) {
        if (name == "hamming-m" + std::to_string(m)) {
            return NamedProtocol{std::string(name), hamming_family(m),
                                 "binary search for Y/Z errors, Hamming parity checks for X errors"};
        }
    }
    return std::nullopt;
}

}  // namespace twep
