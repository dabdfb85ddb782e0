// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include "cli/commands.hpp"
#include "cli/run_spec.hpp"

int main(int argc, char** argv)
{
    irs::cli::RunSpec spec;
    try {
        spec = irs::cli::parse_args(argc, argv);
    } catch (const irs::cli::UsageError& e) {
        (e.exit_code() == 0 ? std::cout : std::cerr) << e.what() << '\n';
        return e.exit_code();
    }
    return irs::cli::run(spec, {&std::cout, &std::cerr, {}});
}
