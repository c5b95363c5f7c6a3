#include "gapfill/cli.hpp"

int main(int argc, char** argv) { return gapfill::cli_main(argc, argv); }
