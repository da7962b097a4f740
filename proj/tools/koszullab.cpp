#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "CLI11.hpp"

#include "koszul/cli.hpp"
#include "koszul/errors.hpp"

namespace {

std::string read_script(const std::string& file)
{
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in) throw koszul::InvalidParameter("cannot open script file '" + file + "'");
        std::ostringstream os;
        os << in.rdbuf();
        return os.str();
    }
    if (isatty(fileno(stdin))) return "";
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
}

void print_result(const koszul::CommandResult& r, bool json)
{
    if (json)
        std::cout << r.json << "\n";
    else
        std::cout << r.text;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"graded module calculator over GF(p) with property-test scenarios"};
    app.allow_extras();

    bool json = false;
    std::uint64_t seed = 42;
    int trials = 0;
    std::uint32_t characteristic = 32003;
    std::string file;
    app.add_flag("--json", json, "machine-readable output");
    app.add_option("--seed", seed, "random seed for scenarios and searches");
    app.add_option("--trials", trials, "scenario trial count (0 = scenario default)");
    app.add_option("--char", characteristic, "field characteristic for scenarios");
    app.add_option("--file", file, "script file (default: stdin when piped)");

    CLI11_PARSE(app, argc, argv);
    std::vector<std::string> words = app.remaining();

    try {
        if (!words.empty() && words[0] == "run-scenario") {
            if (words.size() < 2)
                throw koszul::InvalidParameter("usage: run-scenario <name> [--seed s] "
                                               "[--trials n] [--char p] [--json]");
            auto t0 = std::chrono::steady_clock::now();
            koszul::ScenarioReport rep =
                koszul::run_scenario(words[1], seed, trials, characteristic);
            double ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
            if (json)
                std::cout << koszul::scenario_report_json(rep) << "\n";
            else
                std::cout << koszul::scenario_report_text(rep, ms);
            return rep.ok() ? 0 : 1;
        }

        koszul::SessionScript script = koszul::parse_script(read_script(file));
        for (const auto& cmd : script.commands)
            print_result(koszul::run_command(script, cmd), json);
        if (!words.empty()) {
            words.push_back("--seed");
            words.push_back(std::to_string(seed));
            print_result(koszul::run_command(script, words), json);
        } else if (script.commands.empty()) {
            std::cout << app.help();
            return 2;
        }
        return 0;
    } catch (const koszul::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return (int)e.kind();
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
