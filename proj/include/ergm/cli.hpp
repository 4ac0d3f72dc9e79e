#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ergm::cli {

enum class Command { density, represent, exact, expand, region, coeffs };

enum ExitCode : int { kOk = 0, kFailure = 1, kInvalidConfig = 2, kGuardExceeded = 3 };

struct RunConfig {
    Command command = Command::density;
    int n = 4;
    std::optional<int> n_max;  // exact: sweep n..n_max
    std::vector<std::string> motifs;
    std::vector<double> betas;
    std::optional<double> M;
    int order = 4;
    std::size_t max_links = 4;
    std::size_t head_links = 4;
    std::optional<std::string> graph;
    std::optional<std::string> output;
    std::string format = "json";
    std::uint64_t seed = 0;
    int random_betas = 0;  // exact: extra random parameter vectors drawn from seed
    bool force = false;
    int threads = 1;
    std::optional<int> p;  // region/coeffs; otherwise taken from the motifs
    std::optional<int> m;
    std::optional<double> norm;
    int terms = 30;
};

Command parse_command(const std::string& name);
std::string command_name(Command c);

/// Defaults, then --config file, then explicit flags. Throws ergm::InvalidArgument.
RunConfig parse_command_line(int argc, const char* const* argv);

/// Executes one command. Artifacts go to config.output (atomically) or to
/// `out`; failures print a JSON error object on `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_command_line + run, mapping parse failures to exit code 2.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ergm::cli
