#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "polyspline/complex.hpp"
#include "report.hpp"

namespace polyspline::cli {

Report cmd_analyze(const Complex& c);
Report cmd_hp(const Complex& c, int r);
Report cmd_dim(const Complex& c, int r, int k, const std::string& method);
/// Returns the report plus whether stabilization was observed in range.
std::pair<Report, bool> cmd_verify(const Complex& c, int r, int kmin, int kmax);

/// Full command-line entry point. Returns the process exit code:
/// 0 success, 1 verification failure, 2 input/validation error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace polyspline::cli
