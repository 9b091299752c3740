#include <cstdlib>
#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
    telescope::cli::CliHooks hooks;
    if (const char* corrupt = std::getenv("TELESCOPE_CORRUPT_IDENTITY"); corrupt && *corrupt)
        hooks.corrupt_identity = corrupt;
    return telescope::cli::run_cli({argv + 1, argv + argc}, std::cout, std::cerr, hooks);
}
