#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "matrixless/eigen.hpp"
#include "matrixless/expansion.hpp"
#include "matrixless/oracles.hpp"
#include "matrixless/predict.hpp"
#include "matrixless/recovery.hpp"
#include "matrixless/symbol.hpp"

namespace matrixless::io {

namespace fs = std::filesystem;

/// {"min_k": int, "coeffs": ["decimal", ...]}. Integer JSON numbers are
/// accepted; fractional JSON numbers are rejected since they were already
/// rounded to binary doubles by the time they reach us.
Symbol parse_symbol_json(const std::string& text, int bits);
Symbol read_symbol(const fs::path& path, int bits);
std::string symbol_json(const Symbol& s);

std::string order_name(Order o);
/// Accepts asc, ascending, desc, descending.
Order parse_order(const std::string& name);

/// The JSON sidecar that accompanies a table CSV.
fs::path sidecar_path(const fs::path& csv);

/// CSV `theta,c0,...,c_alpha` plus the sidecar {n0, alpha, bits, order, sizes}.
void write_table(const ExpansionTable& t, const fs::path& csv);
ExpansionTable read_table(const fs::path& csv);

std::string recovered_json(const RecoveredSymbol& rs);
void write_recovered(const RecoveredSymbol& rs, const fs::path& json);
RecoveredSymbol read_recovered(const fs::path& json);
/// CSV `k,abs_ghat`.
void write_ghat_magnitudes(const RecoveredSymbol& rs, const fs::path& csv);

/// CSV `j,theta,lambda`.
void write_predicted(const PredictedSpectrum& p, const fs::path& csv);
/// CSV `j,lambda`.
void write_spectrum(const SpectrumSample& s, const fs::path& csv);
/// CSV `j,re,im`, in the order given.
void write_complex_spectrum(const std::vector<Complex>& eigs, const fs::path& csv);
/// CSV `j,lambda,xi,residual,converged`.
void write_perfect_grid(const SpectrumSample& s, const PerfectGrid& pg, const fs::path& csv);
/// CSV `k,ghat`.
void write_coefficients(const std::vector<Real>& coeffs, const fs::path& csv);
/// CSV `j,predicted,reference,abs_error`.
void write_comparison(const PredictedSpectrum& p, const SpectrumSample& reference, const ComparisonReport& r,
                      const fs::path& csv);

/// Whole-file helpers that raise InputError with the path on failure.
std::string read_file(const fs::path& path);
void write_file(const fs::path& path, const std::string& text);

}  // namespace matrixless::io
