#include "sullivan/commands.hpp"

#include <iostream>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    sullivan::CommandResult res = sullivan::run_command(args);
    std::cout << res.document.dump(2) << "\n";
    return res.exit_code;
}
