#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hsw::cli {

inline constexpr const char* kToolName = "hsw";
inline constexpr const char* kVersion = "1.0.0";

/// Runs one command; `args` excludes the program name. Exit codes: 0 ok,
/// 1 usage error, 2 domain error, 3 requested mode infeasible. Reports go
/// to `out` (or --out), error JSON to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hsw::cli
