#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mirrorwell::cli {

enum class OutputFormat { Text, Csv, Json, Svg };

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumerical = 3;

// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Tables: 1 even polynomial parameters, 2 odd polynomial parameters,
// 3 double-well spectra, 4 single-well spectra.
std::string render_table(int which, OutputFormat format, bool parallel);

// "2d(-5 + 2d^2)" style rendering of the polynomial whose positive roots
// are the even (even = true) or odd parameters of degree n.
std::string parameter_polynomial(int n, bool even);

}  // namespace mirrorwell::cli
