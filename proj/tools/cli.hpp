#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "matrixless/eigen.hpp"

namespace matrixless::cli {

enum ExitCode { ok = 0, input_error = 2, numeric_failure = 3 };

struct RunConfig {
  std::string command;  // expand, recover, predict, exact, compare, quadrature
  std::string symbol_path;
  std::string preset;
  std::string table_path;
  std::string g_name;
  std::size_t n0 = 31;
  int alpha = 4;
  int bits = 128;
  std::size_t n_target = 1000;
  Order order = Order::ascending;
  std::string threshold;  // decimal, empty for the default
  int interp_degree = 4;
  std::size_t terms = 10;
  unsigned threads = 1;
  bool series_row0 = true;
  std::string out_dir = ".";
};

struct Preset {
  std::string name;
  std::string symbol;  // builtin symbol name
  std::string g;       // builtin g name or empty
  std::size_t n0;
  int alpha;
  int bits;
  std::size_t n;
  std::string summary;
};

const std::vector<Preset>& presets();
std::optional<Preset> find_preset(const std::string& name);

/// Parses argv into a config, applies the preset beneath explicit flags and
/// runs the command. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace matrixless::cli
