#include "twep/engine.h"

#include <algorithm>
#include <atomic>
#include <optional>
#include <thread>

#include "twep/errors.h"

namespace twep {

const char *to_string(FailureKind kind) {
    switch (kind) {
        case FailureKind::IllegalMeasurement: return "IllegalMeasurement";
        case FailureKind::RedundantMeasurement: return "RedundantMeasurement";
        case FailureKind::InvalidStep: return "InvalidStep";
        case FailureKind::UnsoundFinish: return "UnsoundFinish";
        case FailureKind::EmptyCandidates: return "EmptyCandidates";
        case FailureKind::NonTermination: return "NonTermination";
        case FailureKind::InsufficientPairs: return "InsufficientPairs";
        case FailureKind::WrongCorrection: return "WrongCorrection";
    }
    return "Unknown";
}

PauliVec correction_from_survivors(const StabilizerSet &s, const ErrorSet &survivors) {
    if (survivors.empty()) {
        throw ProtocolError(FailureKind::EmptyCandidates, "no error within the weight bound matches the outcomes");
    }
    auto classes = coset_classes(survivors, s);
    if (classes.size() > 1) {
        throw ProtocolError(FailureKind::UnsoundFinish,
                            "finished with " + std::to_string(survivors.size()) + " candidates in " +
                                std::to_string(classes.size()) + " distinct cosets (e.g. " +
                                render(survivors[classes[0].representative]) + " vs " +
                                render(survivors[classes[1].representative]) + ")");
    }
    return survivors[classes[0].representative];
}

PauliVec generic_correction(const StabilizerSet &s, const History &history, std::size_t t, int d) {
    ErrorSet survivors = enumerate_errors(s.n(), t, d);
    for (const auto &entry : history.entries) {
        survivors = filter_by_outcome(survivors, entry.op, entry.outcome);
    }
    return correction_from_survivors(s, survivors);
}

namespace {

struct Run {
    Transcript transcript;
    std::optional<ProtocolError> failure;
};

class Simulation {
   public:
    Simulation(const Strategy &strategy, const PauliVec &hidden, const ErrorSet &initial, const StepObserver &observer)
        : strategy_(strategy),
          hidden_(hidden),
          observer_(observer),
          stabilizer_(strategy.d, strategy.n),
          survivors_(initial) {
    }

    Run run() {
        try {
            return {finish(execute()), std::nullopt};
        } catch (const ProtocolError &e) {
            return {partial(), e};
        } catch (const std::exception &e) {
            return {partial(), ProtocolError(FailureKind::InvalidStep, std::string("strategy failed: ") + e.what())};
        }
    }

   private:
    PauliVec execute() {
        if (observer_) {
            observer_(history_, survivors_);
        }
        const std::size_t max_calls = 2 * strategy_.n;
        for (std::size_t calls = 1;; calls++) {
            if (calls > max_calls) {
                throw ProtocolError(FailureKind::NonTermination,
                                    "strategy did not finish within " + std::to_string(max_calls) + " steps");
            }
            Step step = strategy_.next(history_);
            if (auto *m = std::get_if<Measure>(&step)) {
                measure(m->op);
            } else if (auto *dsc = std::get_if<Discard>(&step)) {
                discard(dsc->registers);
            } else {
                return correction_from_survivors(stabilizer_, survivors_);
            }
        }
    }

    void measure(const PauliVec &op) {
        if (op.d() != strategy_.d || op.n() != strategy_.n) {
            throw ProtocolError(FailureKind::InvalidStep, "measured operator has the wrong shape");
        }
        if (!in_normalizer(stabilizer_, op)) {
            throw ProtocolError(FailureKind::IllegalMeasurement,
                                render(op) + " does not commute with the operators measured so far");
        }
        if (is_member(stabilizer_, op)) {
            throw ProtocolError(FailureKind::RedundantMeasurement,
                                render(op) + " is already determined by the operators measured so far");
        }
        int outcome = symplectic_product(op, hidden_);
        history_.entries.push_back({op, outcome});
        stabilizer_.append(op);
        survivors_ = filter_by_outcome(survivors_, op, outcome);
        if (observer_) {
            observer_(history_, survivors_);
        }
    }

    void discard(const std::vector<std::size_t> &registers) {
        std::vector<PauliVec> ops;
        try {
            ops = complete_discard(stabilizer_, registers);
        } catch (const std::exception &e) {
            throw ProtocolError(FailureKind::InvalidStep, std::string("bad discard: ") + e.what());
        }
        history_.discards.push_back({registers, history_.entries.size()});
        for (const auto &op : ops) {
            measure(op);
        }
    }

    Transcript finish(PauliVec correction) {
        Transcript t = partial();
        t.correction = std::move(correction);
        return t;
    }

    Transcript partial() const {
        return Transcript{history_, stabilizer_, PauliVec(strategy_.d, strategy_.n), logical_count(stabilizer_)};
    }

    const Strategy &strategy_;
    const PauliVec &hidden_;
    const StepObserver &observer_;
    History history_;
    StabilizerSet stabilizer_;
    ErrorSet survivors_;
};

void check_hidden(const Strategy &strategy, const PauliVec &hidden) {
    if (hidden.d() != strategy.d || hidden.n() != strategy.n) {
        throw DimensionMismatch("hidden error shape does not match the protocol (d=" + std::to_string(strategy.d) +
                                ", n=" + std::to_string(strategy.n) + ")");
    }
    if (hidden.weight() > strategy.t) {
        throw std::invalid_argument("hidden error " + render(hidden) + " has weight " +
                                    std::to_string(hidden.weight()) + " > t=" + std::to_string(strategy.t));
    }
}

}  // namespace

Transcript simulate(const Strategy &strategy, const PauliVec &hidden, const StepObserver &observer) {
    check_hidden(strategy, hidden);
    ErrorSet initial = enumerate_errors(strategy.n, strategy.t, strategy.d);
    Run r = Simulation(strategy, hidden, initial, observer).run();
    if (r.failure) {
        throw *r.failure;
    }
    return std::move(r.transcript);
}

Report verify(const Strategy &strategy, const VerifyOptions &options) {
    const ErrorSet errors = enumerate_errors(strategy.n, strategy.t, strategy.d, options.cap);
    const std::size_t total = errors.size();
    std::vector<std::optional<Counterexample>> failures(total);
    std::vector<long> k_out(total, -1);
    std::vector<std::size_t> lengths(total, 0);

    const StepObserver no_observer;
    auto check_one = [&](std::size_t i) {
        const PauliVec &hidden = errors[i];
        Run r = Simulation(strategy, hidden, errors, no_observer).run();
        lengths[i] = r.transcript.history.entries.size();
        if (r.failure) {
            failures[i] = Counterexample{hidden, std::move(r.transcript), r.failure->kind(), r.failure->what()};
            return;
        }
        const Transcript &t = r.transcript;
        k_out[i] = static_cast<long>(t.k_out);
        if (k_out[i] < strategy.k_claimed) {
            failures[i] = Counterexample{hidden, t, FailureKind::InsufficientPairs,
                                         "k_out=" + std::to_string(t.k_out) +
                                             " below claimed k=" + std::to_string(strategy.k_claimed)};
        } else if (!is_member(t.final_stabilizer, t.correction.inverse() * hidden)) {
            failures[i] = Counterexample{hidden, t, FailureKind::WrongCorrection,
                                         "correction " + render(t.correction) + " is not coset-equivalent to " +
                                             render(hidden)};
        }
    };

    const unsigned workers = std::max(1u, std::min<unsigned>(options.workers, static_cast<unsigned>(total)));
    if (workers == 1) {
        for (std::size_t i = 0; i < total; i++) {
            check_one(i);
        }
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; w++) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < total; i = next++) {
                    check_one(i);
                }
            });
        }
    }

    Report report;
    report.protocol = strategy.name;
    report.errors_checked = total;
    report.k_claimed = strategy.k_claimed;
    for (std::size_t i = 0; i < total; i++) {
        if (k_out[i] >= 0 && (report.k_min < 0 || k_out[i] < report.k_min)) {
            report.k_min = k_out[i];
        }
        report.max_measurements = std::max(report.max_measurements, lengths[i]);
        if (failures[i]) {
            report.counterexamples.push_back(std::move(*failures[i]));
        }
    }
    report.pass = report.counterexamples.empty() && report.k_min >= strategy.k_claimed;
    return report;
}

}  // namespace twep
