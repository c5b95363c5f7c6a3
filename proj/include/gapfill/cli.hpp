#pragma once

namespace gapfill {

// Entry point behind the command-line tool.  Returns the process exit
// status: 0 success, 1 processing failure, 2 usage error.
int cli_main(int argc, const char* const* argv);

}  // namespace gapfill
