#include "gfq/cli_runner.hpp"

int main(int argc, char** argv) { return gfq::run_cli(argc, argv); }
