#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "twep/bigint.h"
#include "twep/pauli.h"
#include "twep/stabilizer.h"

namespace twep {

/// Default bound on the number of errors `enumerate_errors` will materialize.
inline constexpr uint64_t kDefaultEnumerationCap = 10'000'000;

/// Distinct candidate errors sharing one (d, n).
class ErrorSet {
   public:
    ErrorSet(int d, std::size_t n);
    /// Throws std::invalid_argument on duplicates and DimensionMismatch on shape mismatches.
    ErrorSet(int d, std::size_t n, std::vector<PauliVec> members, std::optional<std::size_t> weight_bound = {});

    int d() const noexcept {
        return d_;
    }
    std::size_t n() const noexcept {
        return n_;
    }
    std::size_t size() const noexcept {
        return members_.size();
    }
    bool empty() const noexcept {
        return members_.empty();
    }
    const std::vector<PauliVec> &members() const noexcept {
        return members_;
    }
    const PauliVec &operator[](std::size_t i) const {
        return members_[i];
    }
    /// The weight bound t when the set is the full weight <= t enumeration; empty once filtered.
    std::optional<std::size_t> weight_bound() const noexcept {
        return weight_bound_;
    }

   private:
    struct Trusted {};
    ErrorSet(Trusted, int d, std::size_t n, std::vector<PauliVec> members, std::optional<std::size_t> weight_bound);

    friend ErrorSet enumerate_errors(std::size_t, std::size_t, int, uint64_t);
    friend ErrorSet filter_by_outcome(const ErrorSet &, const PauliVec &, int);

    int d_;
    std::size_t n_;
    std::vector<PauliVec> members_;
    std::optional<std::size_t> weight_bound_;
};

/// sum_{j=0}^{t} (d^2 - 1)^j C(n, j): the number of phaseless operators of weight at most t.
BigInt count_errors(std::size_t n, std::size_t t, int d);

/// Every operator of weight <= t, identity first, in canonical order. Throws SizeLimitError when
/// the count exceeds `cap`.
ErrorSet enumerate_errors(std::size_t n, std::size_t t, int d, uint64_t cap = kDefaultEnumerationCap);

/// Members e with symplectic_product(m, e) == outcome, order preserved.
ErrorSet filter_by_outcome(const ErrorSet &errors, const PauliVec &m, int outcome);

struct CosetClass {
    /// Indices into the partitioned set, ascending.
    std::vector<std::size_t> members;
    /// Index of the canonical-least member.
    std::size_t representative;
};

/// Partition by E ~ F iff E^{-1}F is in span(S). Classes are ordered by their first member.
std::vector<CosetClass> coset_classes(const ErrorSet &errors, const StabilizerSet &s);

}  // namespace twep
