#pragma once

namespace gfq {

// Parses argv, dispatches the subcommand, prints the report. Returns the
// process exit code: 0 all checks pass, 1 mathematical failure, 2 input
// validation, 3 resource cap.
int run_cli(int argc, char** argv);

}  // namespace gfq
