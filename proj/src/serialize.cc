#include "twep/serialize.h"

#include <random>
#include <sstream>
#include <stdexcept>

namespace twep {

namespace {

std::string correction_line(const Transcript &t) {
    std::ostringstream line;
    line << "{\"correction\": \"" << render(t.correction) << "\", \"k_out\": " << t.k_out << "}\n";
    return line.str();
}

int y_parity(const PauliVec &p) {
    int count = 0;
    for (std::size_t i = 0; i < p.n(); i++) {
        count += p.x(i) == 1 && p.z(i) == 1;
    }
    return count & 1;
}

}  // namespace

std::string transcript_jsonl(const Transcript &transcript) {
    std::ostringstream out;
    for (const auto &entry : transcript.history.entries) {
        out << "{\"op\": \"" << render(entry.op) << "\", \"outcome\": " << entry.outcome << "}\n";
    }
    out << correction_line(transcript);
    return out.str();
}

std::string two_party_jsonl(const Transcript &transcript, uint64_t seed) {
    if (transcript.final_stabilizer.d() != 2) {
        throw std::invalid_argument("the two-party view is defined for qubit protocols only");
    }
    std::mt19937_64 rng(seed);
    std::ostringstream out;
    for (const auto &entry : transcript.history.entries) {
        int alice = static_cast<int>(rng() & 1);
        int s = y_parity(entry.op);
        int bob = alice ^ s ^ entry.outcome;
        out << "{\"op\": \"" << render(entry.op) << "\", \"alice\": " << alice << ", \"bob\": " << bob
            << ", \"y_parity\": " << s << ", \"outcome\": " << entry.outcome << "}\n";
    }
    out << correction_line(transcript);
    return out.str();
}

nlohmann::ordered_json report_json(const Report &report) {
    nlohmann::ordered_json j;
    j["protocol"] = report.protocol;
    j["errors_checked"] = report.errors_checked;
    j["k_claimed"] = report.k_claimed;
    j["k_min"] = report.k_min;
    j["max_measurements"] = report.max_measurements;
    j["pass"] = report.pass;
    j["counterexamples"] = nlohmann::ordered_json::array();
    for (const auto &c : report.counterexamples) {
        nlohmann::ordered_json entry;
        entry["error"] = render(c.hidden);
        entry["kind"] = to_string(c.kind);
        entry["reason"] = c.reason;
        nlohmann::ordered_json steps = nlohmann::ordered_json::array();
        for (const auto &h : c.transcript.history.entries) {
            steps.push_back({{"op", render(h.op)}, {"outcome", h.outcome}});
        }
        steps.push_back({{"correction", render(c.transcript.correction)}, {"k_out", c.transcript.k_out}});
        entry["transcript"] = std::move(steps);
        j["counterexamples"].push_back(std::move(entry));
    }
    return j;
}

}  // namespace twep
