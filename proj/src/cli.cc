#include "twep/cli.h"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <optional>
#include <thread>

#include "CLI11.hpp"
#include "twep/bounds.h"
#include "twep/errors.h"
#include "twep/protocols.h"
#include "twep/serialize.h"
#include "twep/synth.h"

namespace twep {

namespace {

struct CliConfig {
    std::string protocol;
    std::optional<int> m;
    std::string error_text;
    std::string n_range;
    std::string t_range;
    std::size_t points = 51;
    std::size_t count = 10;
    std::string format = "json";
    bool two_party = false;
    bool verbose = false;
    unsigned workers = 1;
    uint64_t cap = kDefaultEnumerationCap;
};

/// Thrown for argument problems detected after CLI11 parsing; maps to exit code 2.
class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

unsigned default_workers() {
    if (const char *env = std::getenv("TWEP_WORKERS")) {
        unsigned value = 0;
        std::string_view text(env);
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec == std::errc() && ptr == text.data() + text.size() && value >= 1) {
            return value;
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

std::pair<std::size_t, std::size_t> parse_range(const std::string &text, const char *flag) {
    auto parse_one = [&](std::string_view part) {
        std::size_t value = 0;
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
        if (part.empty() || ec != std::errc() || ptr != part.data() + part.size()) {
            throw UsageError(std::string("malformed range for ") + flag + ": '" + text + "'");
        }
        return value;
    };
    std::string_view view(text);
    auto dots = view.find("..");
    if (dots == std::string_view::npos) {
        std::size_t v = parse_one(view);
        return {v, v};
    }
    std::size_t lo = parse_one(view.substr(0, dots));
    std::size_t hi = parse_one(view.substr(dots + 2));
    if (lo > hi) {
        throw UsageError(std::string("empty range for ") + flag + ": '" + text + "'");
    }
    return {lo, hi};
}

void require_json(const CliConfig &cfg, const char *command) {
    if (cfg.format != "json") {
        throw UsageError(std::string(command) + " only supports --format json");
    }
}

Strategy resolve_protocol(const CliConfig &cfg) {
    if (cfg.m && (cfg.protocol.empty() || cfg.protocol == "hamming")) {
        if (*cfg.m < 3) {
            throw UsageError("--m must be at least 3");
        }
        return hamming_family(*cfg.m);
    }
    if (auto p = find_protocol(cfg.protocol)) {
        return p->strategy;
    }
    std::string known;
    for (const auto &name : protocol_names()) {
        known += (known.empty() ? "" : ", ") + name;
    }
    throw UsageError("unknown protocol '" + cfg.protocol + "' (known: " + known + ", or hamming --m M)");
}

int cmd_verify(const CliConfig &cfg, std::ostream &out) {
    require_json(cfg, "verify");
    Strategy strategy = resolve_protocol(cfg);
    Report report = verify(strategy, {cfg.workers, cfg.cap});
    out << report_json(report).dump(2) << '\n';
    return report.pass ? kExitOk : kExitFailure;
}

int cmd_simulate(const CliConfig &cfg, std::ostream &out) {
    require_json(cfg, "simulate");
    Strategy strategy = resolve_protocol(cfg);
    PauliVec hidden = parse_pauli(cfg.error_text, strategy.d);
    if (hidden.n() != strategy.n) {
        throw UsageError("--error has " + std::to_string(hidden.n()) + " registers, protocol " + strategy.name +
                         " uses " + std::to_string(strategy.n));
    }
    if (hidden.weight() > strategy.t) {
        throw UsageError("--error has weight " + std::to_string(hidden.weight()) + ", protocol " + strategy.name +
                         " tolerates at most " + std::to_string(strategy.t));
    }
    if (cfg.two_party && strategy.d != 2) {
        throw UsageError("--two-party is only available for qubit protocols");
    }
    Transcript transcript = simulate(strategy, hidden);
    out << (cfg.two_party ? two_party_jsonl(transcript) : transcript_jsonl(transcript));
    return kExitOk;
}

int cmd_greedy(const CliConfig &cfg, std::ostream &out) {
    require_json(cfg, "greedy");
    auto [n, n_hi] = parse_range(cfg.n_range, "--n");
    auto [t, t_hi] = parse_range(cfg.t_range, "--t");
    if (n != n_hi || t != t_hi) {
        throw UsageError("greedy takes a single --n and --t");
    }
    if (t > n) {
        throw UsageError("--t must not exceed --n");
    }
    Strategy strategy = greedy_strategy(n, t, cfg.cap);
    Report report = verify(strategy, {cfg.workers, cfg.cap});
    const long step_bound = ceil_log2(count_errors(n, t, 2)) + 2;
    bool steps_ok = static_cast<long>(report.max_measurements) <= step_bound;

    auto j = report_json(report);
    j["max_steps"] = report.max_measurements;
    j["step_bound"] = step_bound;
    j["steps_within_bound"] = steps_ok;
    out << j.dump(2) << '\n';
    return report.pass && steps_ok ? kExitOk : kExitFailure;
}

int cmd_bounds(const CliConfig &cfg, std::ostream &out) {
    auto [n_lo, n_hi] = parse_range(cfg.n_range, "--n");
    auto [t_lo, t_hi] = parse_range(cfg.t_range, "--t");
    std::vector<BoundsRow> rows;
    for (std::size_t n = n_lo; n <= n_hi; n++) {
        for (std::size_t t = t_lo; t <= std::min(t_hi, n); t++) {
            rows.push_back(bounds_row(n, t));
        }
    }
    if (cfg.format == "csv") {
        write_bounds_csv(out, rows);
        return kExitOk;
    }
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto &r : rows) {
        nlohmann::ordered_json row;
        row["n"] = r.n;
        row["t"] = r.t;
        row["hamming_k"] = r.hamming_k;
        row["singleton_k"] = r.singleton_k;
        row["gv_k"] = r.gv_k ? nlohmann::ordered_json(*r.gv_k) : nlohmann::ordered_json(nullptr);
        row["thm2_k"] = r.thm2_k;
        j.push_back(std::move(row));
    }
    out << j.dump(2) << '\n';
    return kExitOk;
}

int cmd_rates(const CliConfig &cfg, std::ostream &out) {
    if (cfg.points < 2) {
        throw UsageError("--points must be at least 2");
    }
    auto table = rate_table(cfg.points);
    if (cfg.format == "csv") {
        write_rates_csv(out, table);
        return kExitOk;
    }
    // Hand-formatted so the decimals match the CSV output exactly.
    out << "[\n";
    for (std::size_t i = 0; i < table.size(); i++) {
        out << "  {\"x\": " << format_decimal(table[i].x) << ", \"rate_2epp\": " << format_decimal(table[i].rate_2epp)
            << ", \"rate_gv\": " << format_decimal(table[i].rate_gv) << "}" << (i + 1 < table.size() ? "," : "")
            << '\n';
    }
    out << "]\n";
    return kExitOk;
}

int cmd_mi(const CliConfig &cfg, std::ostream &out) {
    if (cfg.count < 1) {
        throw UsageError("--count must be at least 1");
    }
    auto seq = mi_sequence(cfg.count);
    if (cfg.format == "csv") {
        out << "i,m_i\n";
        for (std::size_t i = 0; i < seq.size(); i++) {
            out << i << ',' << seq[i] << '\n';
        }
        return kExitOk;
    }
    out << '[';
    for (std::size_t i = 0; i < seq.size(); i++) {
        out << (i ? ", " : "") << seq[i];
    }
    out << "]\n";
    return kExitOk;
}

void add_common(CLI::App *cmd, CliConfig &cfg) {
    cmd->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    cmd->add_flag("--verbose", cfg.verbose, "Print run metadata on the error stream");
}

void add_exhaustive(CLI::App *cmd, CliConfig &cfg) {
    cmd->add_option("--workers", cfg.workers, "Parallel workers (default: $TWEP_WORKERS or hardware threads)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--cap", cfg.cap, "Maximum number of errors to enumerate");
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CliConfig cfg;
    cfg.workers = default_workers();

    CLI::App app{"Verify and synthesize two-way entanglement purification protocols", "twep"};
    app.require_subcommand(1, 1);

    auto *verify_cmd = app.add_subcommand("verify", "Exhaustively verify a protocol against every error of weight <= t");
    verify_cmd->add_option("protocol", cfg.protocol, "Protocol name");
    verify_cmd->add_option("--m", cfg.m, "Hamming family parameter (with protocol 'hamming' or no name)");
    add_common(verify_cmd, cfg);
    add_exhaustive(verify_cmd, cfg);

    auto *simulate_cmd = app.add_subcommand("simulate", "Run a protocol against one hidden error");
    simulate_cmd->add_option("protocol", cfg.protocol, "Protocol name");
    simulate_cmd->add_option("--m", cfg.m, "Hamming family parameter");
    simulate_cmd->add_option("--error", cfg.error_text, "Hidden error as Pauli text")->required();
    simulate_cmd->add_flag("--two-party", cfg.two_party, "Show Alice's and Bob's raw bits");
    add_common(simulate_cmd, cfg);

    auto *greedy_cmd = app.add_subcommand("greedy", "Synthesize and verify the greedy bisection protocol");
    greedy_cmd->add_option("--n", cfg.n_range, "Number of pairs")->required();
    greedy_cmd->add_option("--t", cfg.t_range, "Maximum number of errors")->required();
    add_common(greedy_cmd, cfg);
    add_exhaustive(greedy_cmd, cfg);

    auto *bounds_cmd = app.add_subcommand("bounds", "Tabulate coding bounds over n and t ranges (a or a..b)");
    bounds_cmd->add_option("--n", cfg.n_range, "Range of n")->required();
    bounds_cmd->add_option("--t", cfg.t_range, "Range of t")->required();
    add_common(bounds_cmd, cfg);

    auto *rates_cmd = app.add_subcommand("rates", "Asymptotic rate curves over t/n in [0, 1/2]");
    rates_cmd->add_option("--points", cfg.points, "Number of sample points");
    add_common(rates_cmd, cfg);

    auto *mi_cmd = app.add_subcommand("mi", "The bisection step-count sequence m_i");
    mi_cmd->add_option("--count", cfg.count, "Number of terms");
    add_common(mi_cmd, cfg);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    auto started = std::chrono::steady_clock::now();
    int code = kExitUsage;
    try {
        if (*verify_cmd) {
            code = cmd_verify(cfg, out);
        } else if (*simulate_cmd) {
            code = cmd_simulate(cfg, out);
        } else if (*greedy_cmd) {
            code = cmd_greedy(cfg, out);
        } else if (*bounds_cmd) {
            code = cmd_bounds(cfg, out);
        } else if (*rates_cmd) {
            code = cmd_rates(cfg, out);
        } else if (*mi_cmd) {
            code = cmd_mi(cfg, out);
        }
    } catch (const UsageError &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const SizeLimitError &e) {
        err << "error: size limit: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ParseError &e) {
        err << "error: bad Pauli text: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ProtocolError &e) {
        err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
        return kExitFailure;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    if (cfg.verbose) {
        auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
        err << "twep: " << app.get_subcommands().front()->get_name() << " finished in " << format_decimal(elapsed, 3)
            << " s with " << cfg.workers << " worker(s), exit " << code << '\n';
    }
    return code;
}

}  // namespace twep
