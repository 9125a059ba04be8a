#include "twep/synth.h"

#include <algorithm>
#include <bit>
#include <memory>
#include <string>

#include "twep/bounds.h"
#include "twep/errors.h"

namespace twep {

namespace {

// Qubit operators on n <= 32 registers packed as x in bits [0, 32) and z in bits [32, 64).
using Packed = uint64_t;
constexpr Packed kLow = 0xFFFFFFFFull;

Packed pack(const PauliVec &p) {
    return (p.x_lo()[0] & kLow) | ((p.z_lo()[0] & kLow) << 32);
}

PauliVec unpack(Packed v, std::size_t n) {
    PauliVec p(2, n);
    for (std::size_t i = 0; i < n; i++) {
        p.set(i, static_cast<int>((v >> i) & 1), static_cast<int>((v >> (32 + i)) & 1));
    }
    return p;
}

Packed swap_halves(Packed v) {
    return (v >> 32) | (v << 32);
}

// Matches canonical_less on packed qubit operators.
bool packed_less(Packed a, Packed b) {
    Packed sa = (a | (a >> 32)) & kLow;
    Packed sb = (b | (b >> 32)) & kLow;
    int wa = std::popcount(sa), wb = std::popcount(sb);
    if (wa != wb) {
        return wa < wb;
    }
    if (sa != sb) {
        Packed low = (sa ^ sb) & (~(sa ^ sb) + 1);
        return (sa & low) != 0;
    }
    Packed diff = a ^ b;
    Packed sites = (diff | (diff >> 32)) & kLow;
    if (!sites) {
        return false;
    }
    int i = std::countr_zero(sites);
    auto code = [i](Packed v) { return ((v >> i) & 1) + 2 * ((v >> (32 + i)) & 1); };
    return code(a) < code(b);
}

// Fully reduced GF(2) row space over packed vectors.
struct PackedSpace {
    std::vector<Packed> rows;
    std::vector<Packed> pivots;  // single-bit masks

    Packed reduce(Packed v) const {
        for (std::size_t i = 0; i < rows.size(); i++) {
            if (v & pivots[i]) {
                v ^= rows[i];
            }
        }
        return v;
    }

    bool insert(Packed v) {
        v = reduce(v);
        if (!v) {
            return false;
        }
        Packed pivot = v & (~v + 1);
        for (auto &r : rows) {
            if (r & pivot) {
                r ^= v;
            }
        }
        rows.push_back(v);
        pivots.push_back(pivot);
        return true;
    }
};

// Basis of {v : <v, g> = 0 for all g}, i.e. the null space of the rows swap(g).
std::vector<Packed> normalizer_basis(const std::vector<Packed> &gens, std::size_t n) {
    PackedSpace constraints;
    for (auto g : gens) {
        constraints.insert(swap_halves(g));
    }
    Packed used = 0;
    for (auto p : constraints.pivots) {
        used |= p;
    }
    std::vector<Packed> basis;
    for (std::size_t half = 0; half < 2; half++) {
        for (std::size_t i = 0; i < n; i++) {
            Packed free_bit = Packed{1} << (32 * half + i);
            if (used & free_bit) {
                continue;
            }
            // Set the free coordinate, then solve each pivot coordinate from its row.
            Packed v = free_bit;
            for (std::size_t r = 0; r < constraints.rows.size(); r++) {
                if (constraints.rows[r] & free_bit) {
                    v |= constraints.pivots[r];
                }
            }
            basis.push_back(v);
        }
    }
    return basis;
}

void require_qubits(int d) {
    if (d != 2) {
        throw std::invalid_argument("generator synthesis supports qubits (d=2) only");
    }
}

}  // namespace

SplitCount split_counts(const PauliVec &m, const ErrorSet &errors) {
    require_qubits(m.d());
    require_qubits(errors.d());
    if (m.n() != errors.n()) {
        throw DimensionMismatch("operator and error set differ in register count");
    }
    SplitCount out;
    for (const auto &e : errors.members()) {
        if (symplectic_product(m, e)) {
            out.anticommuting++;
        } else {
            out.commuting++;
        }
    }
    out.separated_pairs = static_cast<uint64_t>(out.commuting) * out.anticommuting;
    return out;
}

PauliVec choose_generator(const StabilizerSet &s, const ErrorSet &errors) {
    require_qubits(s.d());
    require_qubits(errors.d());
    if (s.n() != errors.n()) {
        throw DimensionMismatch("stabilizer and error set differ in register count");
    }
    const std::size_t n = s.n();
    if (n > kMaxSynthRegisters) {
        throw SizeLimitError("generator scan supports n <= " + std::to_string(kMaxSynthRegisters) +
                             ", got n=" + std::to_string(n));
    }
    if (errors.size() < 2 || coset_classes(errors, s).size() < 2) {
        throw NoSeparator("all candidate errors are equivalent modulo the stabilizer");
    }

    std::vector<Packed> gens;
    PackedSpace stab;
    for (const auto &g : s.generators()) {
        gens.push_back(pack(g));
        stab.insert(gens.back());
    }
    std::vector<Packed> swapped_errors;
    for (const auto &e : errors.members()) {
        swapped_errors.push_back(swap_halves(pack(e)));
    }
    bool shared_syndrome = std::all_of(errors.members().begin(), errors.members().end(),
                                       [&](const PauliVec &e) { return syndrome(s, e) == syndrome(s, errors[0]); });

    // Canonical coset representatives of N(S) / S, optionally followed by S itself.
    PackedSpace quotient = stab;
    std::vector<Packed> basis;
    for (auto v : normalizer_basis(gens, n)) {
        Packed r = stab.reduce(v);
        if (quotient.insert(r)) {
            basis.push_back(r);
        }
    }
    const std::size_t quotient_dim = basis.size();
    if (!shared_syndrome) {
        basis.insert(basis.end(), stab.rows.begin(), stab.rows.end());
    }

    const uint64_t total = errors.size();
    const uint64_t combos = uint64_t{1} << basis.size();
    const uint64_t quotient_mask = (uint64_t{1} << quotient_dim) - 1;
    Packed best = 0;
    uint64_t best_separated = 0;
    bool have_best = false;
    Packed current = 0;
    for (uint64_t i = 1; i < combos; i++) {
        // Gray code: exactly one basis vector toggles per step.
        current ^= basis[std::countr_zero(i)];
        uint64_t gray = i ^ (i >> 1);
        if ((gray & quotient_mask) == 0) {
            continue;  // inside span(S)
        }
        uint64_t anti = 0;
        for (auto e : swapped_errors) {
            anti += std::popcount(current & e) & 1;
        }
        uint64_t separated = anti * (total - anti);
        if (!have_best || separated > best_separated ||
            (separated == best_separated && packed_less(current, best))) {
            best = current;
            best_separated = separated;
            have_best = true;
        }
    }
    if (!have_best || best_separated == 0) {
        throw NoSeparator("no element of the normalizer separates the candidate errors");
    }
    return unpack(best, n);
}

Strategy greedy_strategy(std::size_t n, std::size_t t, uint64_t cap) {
    if (n > kMaxSynthRegisters) {
        throw SizeLimitError("greedy synthesis supports n <= " + std::to_string(kMaxSynthRegisters) +
                             ", got n=" + std::to_string(n));
    }
    auto initial = std::make_shared<const ErrorSet>(enumerate_errors(n, t, 2, cap));
    Strategy s;
    s.name = "greedy-n" + std::to_string(n) + "-t" + std::to_string(t);
    s.d = 2;
    s.n = n;
    s.t = t;
    s.k_claimed = std::max(0L, thm2_k(n, t));
    s.next = [initial, n](const History &h) -> Step {
        ErrorSet survivors = *initial;
        StabilizerSet stab(2, n);
        for (const auto &entry : h.entries) {
            survivors = filter_by_outcome(survivors, entry.op, entry.outcome);
            stab.append(entry.op);
        }
        if (coset_classes(survivors, stab).size() <= 1) {
            return Finish{};
        }
        return Measure{choose_generator(stab, survivors)};
    };
    return s;
}

}  // namespace twep
