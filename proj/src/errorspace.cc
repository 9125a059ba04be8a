#include "twep/errorspace.h"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "twep/errors.h"

namespace twep {

ErrorSet::ErrorSet(int d, std::size_t n) : d_(d), n_(n) {
}

ErrorSet::ErrorSet(int d, std::size_t n, std::vector<PauliVec> members, std::optional<std::size_t> weight_bound)
    : d_(d), n_(n), members_(std::move(members)), weight_bound_(weight_bound) {
    std::unordered_set<PauliVec, PauliVecHash> seen;
    for (const auto &m : members_) {
        if (m.d() != d_ || m.n() != n_) {
            throw DimensionMismatch("error set member " + render(m) + " has the wrong shape");
        }
        if (!seen.insert(m).second) {
            throw std::invalid_argument("duplicate error set member " + render(m));
        }
    }
    if (weight_bound_ && members_.size() != count_errors(n_, *weight_bound_, d_)) {
        throw std::invalid_argument("error set tagged with weight bound " + std::to_string(*weight_bound_) +
                                    " does not hold every operator of that weight");
    }
}

ErrorSet::ErrorSet(Trusted, int d, std::size_t n, std::vector<PauliVec> members,
                   std::optional<std::size_t> weight_bound)
    : d_(d), n_(n), members_(std::move(members)), weight_bound_(weight_bound) {
}

BigInt count_errors(std::size_t n, std::size_t t, int d) {
    BigInt total = 0;
    BigInt binom = 1;  // C(n, j)
    BigInt power = 1;  // (d^2 - 1)^j
    const int per_site = d * d - 1;
    for (std::size_t j = 0; j <= std::min(t, n); j++) {
        total += binom * power;
        binom = binom * (n - j) / (j + 1);
        power *= per_site;
    }
    return total;
}

ErrorSet enumerate_errors(std::size_t n, std::size_t t, int d, uint64_t cap) {
    if (t > n) {
        throw std::invalid_argument("weight bound t=" + std::to_string(t) + " exceeds n=" + std::to_string(n));
    }
    BigInt count = count_errors(n, t, d);
    if (count > cap) {
        throw SizeLimitError("enumerating " + count.str() + " errors (n=" + std::to_string(n) +
                             ", t=" + std::to_string(t) + ", d=" + std::to_string(d) + ") exceeds the cap of " +
                             std::to_string(cap));
    }
    std::vector<PauliVec> members;
    members.reserve(static_cast<std::size_t>(count));
    for (std::size_t w = 0; w <= t; w++) {
        for_each_of_weight(d, n, w, [&](const PauliVec &p) {
            members.push_back(p);
            return true;
        });
    }
    return ErrorSet(ErrorSet::Trusted{}, d, n, std::move(members), t);
}

ErrorSet filter_by_outcome(const ErrorSet &errors, const PauliVec &m, int outcome) {
    if (m.d() != errors.d() || m.n() != errors.n()) {
        throw DimensionMismatch("measured operator shape does not match the error set");
    }
    std::vector<PauliVec> kept;
    for (const auto &e : errors.members()) {
        if (symplectic_product(m, e) == outcome) {
            kept.push_back(e);
        }
    }
    return ErrorSet(ErrorSet::Trusted{}, errors.d(), errors.n(), std::move(kept), std::nullopt);
}

std::vector<CosetClass> coset_classes(const ErrorSet &errors, const StabilizerSet &s) {
    if (s.d() != errors.d() || s.n() != errors.n()) {
        throw DimensionMismatch("stabilizer shape does not match the error set");
    }
    // The fully reduced residue is a canonical label for the coset E + span(S).
    std::unordered_map<PauliVec, std::size_t, PauliVecHash> class_of;
    std::vector<CosetClass> classes;
    for (std::size_t i = 0; i < errors.size(); i++) {
        PauliVec label = s.span().reduce(errors[i]);
        auto [it, inserted] = class_of.try_emplace(std::move(label), classes.size());
        if (inserted) {
            classes.push_back({{i}, i});
            continue;
        }
        CosetClass &c = classes[it->second];
        c.members.push_back(i);
        if (canonical_less(errors[i], errors[c.representative])) {
            c.representative = i;
        }
    }
    return classes;
}

}  // namespace twep
