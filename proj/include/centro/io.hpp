#pragma once

#include <cctype>
#include <cerrno>
#include <cstdlib>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "centro/error.hpp"
#include "centro/matrix.hpp"
#include "centro/realization.hpp"
#include "centro/realize.hpp"
#include "centro/spectra.hpp"
#include "centro/verify.hpp"

namespace centro::io {

using nlohmann::json;

namespace detail {

inline double parse_real(std::string_view s, std::string_view whole) {
  const std::string buf(s);
  if (buf.empty()) fail(Errc::ParseError, "empty number in '" + std::string(whole) + "'");
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(buf.c_str(), &end);
  if (end != buf.c_str() + buf.size() || errno == ERANGE)
    fail(Errc::ParseError, "bad number '" + buf + "' in '" + std::string(whole) + "'");
  return v;
}

}  // namespace detail

/// "3", "-2+2i", "1.5e-3-4i", "i", "-i", "2j".
inline Complex parse_complex(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) fail(Errc::ParseError, "empty value");
  const char last = s.back();
  if (last != 'i' && last != 'j') return {detail::parse_real(s, text), 0.0};
  s.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;)
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  const std::string re = split == std::string::npos ? "" : s.substr(0, split);
  std::string im = split == std::string::npos ? s : s.substr(split);
  if (im.empty() || im == "+") im = "1";
  if (im == "-") im = "-1";
  return {re.empty() ? 0.0 : detail::parse_real(re, text), detail::parse_real(im, text)};
}

inline std::vector<Complex> parse_complex_csv(std::string_view csv) {
  std::vector<Complex> out;
  std::size_t pos = 0;
  while (pos <= csv.size()) {
    const std::size_t comma = csv.find(',', pos);
    const std::string_view tok = csv.substr(pos, comma == std::string_view::npos ? csv.npos : comma - pos);
    out.push_back(parse_complex(tok));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

inline std::vector<double> parse_real_csv(std::string_view csv) {
  std::vector<double> out;
  for (const Complex& z : parse_complex_csv(csv)) {
    if (z.imag() != 0.0) fail(Errc::ParseError, "expected real values");
    out.push_back(z.real());
  }
  return out;
}

inline Complex complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_string()) return parse_complex(j.get<std::string>());
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  fail(Errc::ParseError, "spectrum entry must be a number, a string or [re, im]: " + j.dump());
}

inline SpectrumList spectrum_from_json(const json& j) {
  if (!j.is_array()) fail(Errc::ParseError, "spectrum must be an array");
  std::vector<Complex> v;
  for (const auto& e : j) v.push_back(complex_from_json(e));
  return SpectrumList(v);
}

inline json to_json(Complex z) { return json::array({z.real(), z.imag()}); }

inline json to_json(const SpectrumList& s) {
  json a = json::array();
  for (const Complex& z : s.values()) a.push_back(to_json(z));
  return a;
}

inline DenseMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) fail(Errc::ParseError, "matrix must be a nonempty array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  DenseMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) fail(Errc::ParseError, "ragged matrix rows");
    for (std::size_t k = 0; k < cols; ++k) {
      const json& e = j[i][k];
      if (e.is_number())
        m(i, k) = e.get<double>();
      else if (e.is_string())
        m(i, k) = detail::parse_real(e.get<std::string>(), e.get<std::string>());
      else
        fail(Errc::ParseError, "matrix entries must be numbers");
    }
  }
  return m;
}

inline json to_json(const DenseMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (double x : m.row(i)) r.push_back(x == 0.0 ? 0.0 : x);
    rows.push_back(std::move(r));
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Problem files

inline const std::vector<std::string>& method_names() {
  static const std::vector<std::string> names{"auto",        "real-centro", "nonneg-real", "positive",
                                              "suleimanova", "partitioned", "4x4",         "4x4-diag"};
  return names;
}

struct ProblemFile {
  SpectrumList spectrum;
  std::string method = "auto";
  std::optional<DiagonalSpec> diagonal;
  std::optional<PartitionedProblem> partition;
  std::optional<double> tolerance;
};

inline PartitionedProblem partition_from_json(const json& j) {
  if (!j.is_object()) fail(Errc::ParseError, "partition must be an object");
  PartitionedProblem p;
  if (!j.contains("lambda0")) fail(Errc::ParseError, "partition needs lambda0");
  p.lambda0 = spectrum_from_json(j.at("lambda0"));
  if (j.contains("sublists"))
    for (const auto& s : j.at("sublists")) p.sublists.push_back(spectrum_from_json(s));
  if (j.contains("omegas")) p.omegas = j.at("omegas").get<std::vector<double>>();
  if (j.contains("middle")) p.middle = spectrum_from_json(j.at("middle"));
  if (j.contains("omega_mid")) p.omega_mid = j.at("omega_mid").get<double>();
  if (j.contains("base")) p.base = matrix_from_json(j.at("base"));
  if (j.contains("blocks"))
    for (const auto& b : j.at("blocks"))
      p.blocks.push_back(b.is_null() ? std::optional<DenseMatrix>{} : matrix_from_json(b));
  if (j.contains("middle_block")) p.middle_block = matrix_from_json(j.at("middle_block"));
  return p;
}

inline ProblemFile problem_from_json(const json& j) {
  if (!j.is_object()) fail(Errc::ParseError, "problem file must be an object");
  if (!j.contains("spectrum")) fail(Errc::ParseError, "problem file needs a spectrum");
  ProblemFile p;
  p.spectrum = spectrum_from_json(j.at("spectrum"));
  if (p.spectrum.empty()) fail(Errc::ParseError, "spectrum is empty");
  try {
    if (j.contains("method")) p.method = j.at("method").get<std::string>();
    if (j.contains("diagonal")) p.diagonal = DiagonalSpec{j.at("diagonal").get<std::vector<double>>()};
    if (j.contains("tolerance")) p.tolerance = j.at("tolerance").get<double>();
  } catch (const json::exception& e) {
    fail(Errc::ParseError, e.what());
  }
  const auto& names = method_names();
  if (std::find(names.begin(), names.end(), p.method) == names.end())
    fail(Errc::ParseError, "unknown method '" + p.method + "'");
  if (j.contains("partition")) p.partition = partition_from_json(j.at("partition"));
  return p;
}

inline ProblemFile parse_problem(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(Errc::ParseError, e.what());
  }
  try {
    return problem_from_json(j);
  } catch (const json::exception& e) {
    fail(Errc::ParseError, e.what());
  }
}

// ---------------------------------------------------------------------------
// Result files

inline json to_json(const Provenance& p) {
  json parts = json::array();
  for (const auto& s : p.partition) parts.push_back(to_json(s));
  return {{"construction", to_string(p.construction)},
          {"statement", p.statement},
          {"partition", parts},
          {"anchors", p.anchors},
          {"notes", p.notes}};
}

inline json to_json(const RealizationReport& r) {
  json pairs = json::array();
  for (const auto& m : r.spectrum.matched_pairs)
    pairs.push_back({{"target", to_json(m.target)}, {"computed", to_json(m.computed)}, {"distance", m.distance}});
  return {{"matched", r.spectrum.matched},
          {"max_distance", r.spectrum.max_distance},
          {"cluster_distance", r.spectrum.cluster_distance},
          {"centro_residual", r.centro_residual},
          {"nonneg_margin", r.nonneg_margin},
          {"kind", to_string(r.kind)},
          {"kind_holds", r.kind_holds()},
          {"accepted", r.accepted()},
          {"pairs", pairs}};
}

inline json result_json(const DenseMatrix& m, const SpectrumList& target, const RealizationReport& rep) {
  return {{"order", m.rows()},
          {"spectrum", to_json(target)},
          {"kind", to_string(rep.kind)},
          {"matrix", to_json(m)},
          {"report", to_json(rep)},
          {"provenance", to_json(rep.provenance)}};
}

inline std::optional<RealizationKind> kind_from_string(std::string_view s) {
  for (auto k : {RealizationKind::RealCentro, RealizationKind::NonnegCentro, RealizationKind::PositiveCentro})
    if (to_string(k) == s) return k;
  if (s == "real") return RealizationKind::RealCentro;
  if (s == "nonneg" || s == "nonnegative") return RealizationKind::NonnegCentro;
  if (s == "positive") return RealizationKind::PositiveCentro;
  return std::nullopt;
}

}  // namespace centro::io
