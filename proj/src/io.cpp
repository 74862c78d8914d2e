#include "matrixless/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "matrixless/errors.hpp"
#include "matrixless/toeplitz.hpp"

namespace matrixless::io {

using nlohmann::json;

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(trim(cell));
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

json parse_json(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(what + " is not valid JSON: " + e.what());
  }
}

std::string decimal_of(const json& v, const std::string& what) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number_unsigned()) return std::to_string(v.get<unsigned long long>());
  throw InputError(what + " must be a decimal string (fractional JSON numbers lose precision)");
}

template <typename T>
T field(const json& j, const char* name, const std::string& what) {
  if (!j.contains(name)) throw InputError(what + " is missing \"" + name + "\"");
  try {
    return j.at(name).get<T>();
  } catch (const json::exception&) {
    throw InputError(what + " has a malformed \"" + name + "\"");
  }
}

}  // namespace

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write " + path.string());
  out << text;
  if (!out) throw InputError("failed writing " + path.string());
}

Symbol parse_symbol_json(const std::string& text, int bits) {
  const json j = parse_json(text, "symbol file");
  if (!j.is_object()) throw InputError("symbol file must hold a JSON object");
  const int min_k = field<int>(j, "min_k", "symbol file");
  if (!j.contains("coeffs") || !j["coeffs"].is_array()) throw InputError("symbol file needs a \"coeffs\" array");
  std::vector<std::string> coeffs;
  for (const json& c : j["coeffs"]) coeffs.push_back(decimal_of(c, "symbol coefficient"));
  return Symbol::parse(min_k, coeffs, bits);
}

Symbol read_symbol(const fs::path& path, int bits) { return parse_symbol_json(read_file(path), bits); }

std::string symbol_json(const Symbol& s) {
  json j;
  j["min_k"] = s.min_k();
  j["coeffs"] = json::array();
  for (const Real& c : s.coeffs()) j["coeffs"].push_back(to_string(c));
  return j.dump(2) + "\n";
}

std::string order_name(Order o) { return o == Order::ascending ? "ascending" : "descending"; }

Order parse_order(const std::string& name) {
  if (name == "asc" || name == "ascending") return Order::ascending;
  if (name == "desc" || name == "descending") return Order::descending;
  throw InputError("order must be asc or desc, got \"" + name + "\"");
}

fs::path sidecar_path(const fs::path& csv) {
  fs::path p = csv;
  p.replace_extension(".json");
  return p;
}

void write_table(const ExpansionTable& t, const fs::path& csv) {
  std::ostringstream out;
  out << "theta";
  for (int k = 0; k <= t.alpha; ++k) out << ",c" << k;
  out << "\n";
  const std::vector<Real> thetas = t.thetas();
  for (std::size_t j = 0; j < t.n0; ++j) {
    out << to_string(thetas[j]);
    for (int k = 0; k <= t.alpha; ++k) out << "," << to_string(t.c(static_cast<std::size_t>(k), j));
    out << "\n";
  }
  write_file(csv, out.str());

  json side;
  side["n0"] = t.n0;
  side["alpha"] = t.alpha;
  side["bits"] = t.bits;
  side["order"] = order_name(t.order);
  side["sizes"] = t.sizes;
  write_file(sidecar_path(csv), side.dump(2) + "\n");
}

ExpansionTable read_table(const fs::path& csv) {
  const json side = parse_json(read_file(sidecar_path(csv)), "table sidecar " + sidecar_path(csv).string());
  ExpansionTable t;
  const std::string what = "table sidecar";
  t.n0 = field<std::size_t>(side, "n0", what);
  t.alpha = field<int>(side, "alpha", what);
  t.bits = field<int>(side, "bits", what);
  t.order = parse_order(field<std::string>(side, "order", what));
  t.sizes = field<std::vector<std::size_t>>(side, "sizes", what);
  if (t.n0 < 1 || t.alpha < 0) throw InputError("table sidecar has invalid n0 or alpha");
  if (t.sizes.size() != static_cast<std::size_t>(t.alpha) + 1) throw InputError("table sidecar sizes do not match alpha");
  PrecisionContext check(t.bits);  // validates bits

  std::istringstream in(read_file(csv));
  std::string line;
  if (!std::getline(in, line)) throw InputError(csv.string() + " is empty");
  const std::vector<std::string> header = split_csv_line(line);
  const std::size_t cols = static_cast<std::size_t>(t.alpha) + 2;
  if (header.size() != cols || header[0] != "theta")
    throw InputError(csv.string() + ": header must be theta,c0,...,c" + std::to_string(t.alpha));
  t.c = DenseMatrix(cols - 1, t.n0, Real::zero(t.bits));
  std::size_t j = 0;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    const std::vector<std::string> cells = split_csv_line(line);
    if (cells.size() != cols) throw InputError(csv.string() + ": row " + std::to_string(j + 1) + " has the wrong width");
    if (j >= t.n0) throw InputError(csv.string() + ": more rows than n0");
    for (std::size_t k = 0; k + 1 < cols; ++k) t.c(k, j) = Real::parse(cells[k + 1], t.bits);
    ++j;
  }
  if (j != t.n0) throw InputError(csv.string() + ": expected " + std::to_string(t.n0) + " rows, found " + std::to_string(j));
  return t;
}

std::string recovered_json(const RecoveredSymbol& rs) {
  json j;
  j["n0"] = rs.n0;
  j["bits"] = rs.bits;
  j["threshold"] = to_string(rs.threshold);
  if (rs.rctp_degree) j["rctp_degree"] = *rs.rctp_degree;
  j["ghat"] = json::array();
  for (const Real& g : rs.ghat) j["ghat"].push_back(to_string(g));
  return j.dump(2) + "\n";
}

void write_recovered(const RecoveredSymbol& rs, const fs::path& path) { write_file(path, recovered_json(rs)); }

RecoveredSymbol read_recovered(const fs::path& path) {
  const json j = parse_json(read_file(path), path.string());
  const std::string what = "recovered symbol";
  RecoveredSymbol rs;
  rs.n0 = field<std::size_t>(j, "n0", what);
  rs.bits = field<int>(j, "bits", what);
  PrecisionContext check(rs.bits);
  rs.threshold = Real::parse(field<std::string>(j, "threshold", what), rs.bits);
  if (j.contains("rctp_degree")) rs.rctp_degree = field<std::size_t>(j, "rctp_degree", what);
  for (const std::string& g : field<std::vector<std::string>>(j, "ghat", what)) rs.ghat.push_back(Real::parse(g, rs.bits));
  if (rs.ghat.size() != rs.n0) throw InputError("recovered symbol has " + std::to_string(rs.ghat.size()) + " coefficients, n0 = " + std::to_string(rs.n0));
  return rs;
}

void write_ghat_magnitudes(const RecoveredSymbol& rs, const fs::path& csv) {
  std::ostringstream out;
  out << "k,abs_ghat\n";
  for (std::size_t k = 0; k < rs.ghat.size(); ++k) out << k << "," << to_string(abs(rs.ghat[k])) << "\n";
  write_file(csv, out.str());
}

void write_predicted(const PredictedSpectrum& p, const fs::path& csv) {
  std::ostringstream out;
  out << "j,theta,lambda\n";
  for (std::size_t j = 0; j < p.n; ++j) out << j + 1 << "," << to_string(p.thetas[j]) << "," << to_string(p.values[j]) << "\n";
  write_file(csv, out.str());
}

void write_spectrum(const SpectrumSample& s, const fs::path& csv) {
  std::ostringstream out;
  out << "j,lambda\n";
  for (std::size_t j = 0; j < s.values.size(); ++j) out << j + 1 << "," << to_string(s.values[j]) << "\n";
  write_file(csv, out.str());
}

void write_complex_spectrum(const std::vector<Complex>& eigs, const fs::path& csv) {
  std::ostringstream out;
  out << "j,re,im\n";
  for (std::size_t j = 0; j < eigs.size(); ++j)
    out << j + 1 << "," << to_string(eigs[j].re) << "," << to_string(eigs[j].im) << "\n";
  write_file(csv, out.str());
}

void write_perfect_grid(const SpectrumSample& s, const PerfectGrid& pg, const fs::path& csv) {
  std::ostringstream out;
  out << "j,lambda,xi,residual,converged\n";
  for (std::size_t j = 0; j < pg.n; ++j)
    out << j + 1 << "," << to_string(s.values[j]) << "," << to_string(pg.xi[j]) << "," << to_string(pg.residuals[j])
        << "," << (pg.converged[j] ? 1 : 0) << "\n";
  write_file(csv, out.str());
}

void write_coefficients(const std::vector<Real>& coeffs, const fs::path& csv) {
  std::ostringstream out;
  out << "k,ghat\n";
  for (std::size_t k = 0; k < coeffs.size(); ++k) out << k << "," << to_string(coeffs[k]) << "\n";
  write_file(csv, out.str());
}

void write_comparison(const PredictedSpectrum& p, const SpectrumSample& reference, const ComparisonReport& r,
                      const fs::path& csv) {
  std::ostringstream out;
  out << "j,predicted,reference,abs_error\n";
  const std::size_t n = p.values.size();
  const bool flip = p.order != reference.order;
  for (std::size_t j = 0; j < n; ++j)
    out << j + 1 << "," << to_string(p.values[j]) << "," << to_string(reference.values[flip ? n - 1 - j : j]) << ","
        << to_string(r.errors[j]) << "\n";
  write_file(csv, out.str());
}

}  // namespace matrixless::io
