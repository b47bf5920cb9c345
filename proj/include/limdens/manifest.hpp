#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace limdens {

// Everything that determines a run, serialized next to every output file so
// that `verify` can re-derive and compare.
struct ExperimentManifest {
    std::string command;
    std::map<std::string, std::string> params;  // flag -> value, sorted

    std::string to_json_string() const;
};

// The CLI entry point, callable in-process for tests. Writes results to
// `out`, diagnostics to `err`, and returns the exit code (0 success, 2 usage
// error, 3 budget exceeded, 4 verification failure).
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace limdens
