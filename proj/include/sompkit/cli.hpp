#pragma once

namespace sompkit {

/// Command-line entry point. Exit codes: 0 success, 1 validation or
/// usage error, 2 runtime (I/O) error.
int cli_main(int argc, const char* const* argv);

}  // namespace sompkit
