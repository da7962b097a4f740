#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "koszul/gb.hpp"
#include "koszul/module.hpp"

namespace koszul {

// One parsed session: a ring declaration, named objects, and any commands
// that appeared between the declarations (kept as argv-style word lists, in
// order). Empty input parses to an empty script with no ring.
struct SessionScript {
    std::optional<PolyRing> ring;
    std::map<std::string, Ideal> ideals;
    std::map<std::string, Poly> polys;
    std::map<std::string, PresentedModule> modules;
    std::vector<std::vector<std::string>> commands;
};

// Errors: SyntaxError / UndeclaredName / NotHomogeneous, each carrying a
// line:column position of the offending token.
SessionScript parse_script(const std::string& text);

// Evaluate one polynomial expression in the script's environment (used by
// `nf` and available for tools); must be homogeneous.
Poly eval_poly(const SessionScript& script, const std::string& text);

// Output of one subcommand; both renderings are always produced.
struct CommandResult {
    std::string text;
    std::string json;
};

// args = subcommand followed by its arguments and flags.
CommandResult run_command(const SessionScript& script, const std::vector<std::string>& args);

// the fixed dispatch table (one entry per engine operation)
const std::vector<std::string>& command_names();

// ---- property-test scenarios ----

struct ScenarioInstance {
    int trial = 0;
    std::string description;
    bool ok = true;
    std::vector<std::pair<std::string, bool>> checks;          // assertion -> pass
    std::vector<std::pair<std::string, std::string>> values;   // name -> rendered value
};

struct ScenarioReport {
    std::string scenario;
    std::uint64_t seed = 0;
    int trials = 0;
    int passed = 0;
    int failed = 0;
    bool asserting = true; // explore scenarios report but never fail the run
    std::vector<ScenarioInstance> instances;

    bool ok() const { return !asserting || failed == 0; }
};

const std::vector<std::string>& scenario_names();
// 0 picks this default
int scenario_default_trials(const std::string& name);

// Deterministic for fixed (name, seed, trials, characteristic): trial k uses
// the Rng substream for_trial(seed, k) and reports are merged by trial index
// regardless of execution order.
ScenarioReport run_scenario(const std::string& name, std::uint64_t seed, int trials,
                            std::uint32_t characteristic = 32003);

// JSON omits wall-clock so the bytes depend only on (name, seed, trials, p).
std::string scenario_report_json(const ScenarioReport& r);
std::string scenario_report_text(const ScenarioReport& r, double wall_ms);

} // namespace koszul
