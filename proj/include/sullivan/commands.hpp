#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace sullivan {

struct CommandResult {
    nlohmann::ordered_json document;
    int exit_code = 0;
};

// Dispatch one CLI invocation (argv without the program name) and build the
// report document. Never throws; failures land in the document with the
// exit-code contract (1 usage/parse, 2 precondition, 3 internal).
CommandResult run_command(const std::vector<std::string>& args);

}  // namespace sullivan
