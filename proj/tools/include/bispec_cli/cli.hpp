#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "bispec/error.hpp"
#include "bispec/json_io.hpp"

namespace bispec::cli {

enum ExitCode : int {
  kOk = 0,
  kInvalidInput = 2,
  kCertificationFailure = 3,
  kVerificationFailure = 4,
};

int exit_code(ErrorKind kind);

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// {tool, version, command, params, result}. Keys are sorted on output.
json transcript(const std::string& command, json params, json result);
std::string version();

// Stored expected documents for `examples`; empty if unknown.
std::string_view golden(std::string_view name);

struct ExampleRun {
  json result;                                     // compared against the golden
  std::vector<std::pair<std::string, bool>> checks;
  std::string text;
};

ExampleRun run_rank1(int depth);
ExampleRun run_example4(const Rational& nu, const Rational& a, const Rational& lambda, int depth);
ExampleRun run_dg_even(const BesselIndex& beta, int d, const std::vector<std::vector<Rational>>& t,
                       int depth, int degree_bound);

// Paths (JSON pointers) where two documents differ.
std::vector<std::string> json_differences(const json& expected, const json& actual);

}  // namespace bispec::cli
