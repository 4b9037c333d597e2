#pragma once

#include <ostream>

namespace primerep::cli {

/// Parses argv, runs one command and writes the report to `out`
/// (diagnostics to `err`). Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace primerep::cli
