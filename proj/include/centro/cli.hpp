#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "centro/error.hpp"
#include "centro/fixtures.hpp"
#include "centro/io.hpp"
#include "centro/realize.hpp"
#include "centro/verify.hpp"

namespace centro::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kObstructed = 2,
  kNoConstruction = 3,
  kNotAccepted = 4,
};

namespace detail {

using nlohmann::json;

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::InvalidInput, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void emit(const json& doc, const std::string& out_path, std::ostream& out) {
  const std::string text = doc.dump(2) + "\n";
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f || !(f << text)) fail(Errc::InvalidInput, "cannot write '" + out_path + "'");
}

inline void report_error(std::ostream& err, const Error& e) {
  json j{{"error", std::string(errc_name(e.code()))}, {"message", e.what()}};
  if (!e.detail().empty()) j["detail"] = e.detail();
  err << j.dump() << "\n";
}

inline Realization dispatch(const io::ProblemFile& p) {
  const SpectrumList& l = p.spectrum;
  const std::string& m = p.method;
  if (m == "auto") return auto_realize(l, p.diagonal);
  if (m == "real-centro") return realize_real_centro(l);
  if (m == "nonneg-real") return realize_nonneg_real(l);
  if (m == "positive") return realize_positive(l);
  if (m == "suleimanova") return realize_suleimanova(l);
  if (m == "partitioned") {
    if (check_obstruction(l)) fail_obstructed();
    return p.partition ? realize_partitioned(l, *p.partition) : centro::detail::partition_heuristic(l);
  }
  if (m == "4x4") return centro::detail::realize_4x4_auto(l, std::nullopt);
  if (m == "4x4-diag") {
    if (!p.diagonal) fail(Errc::InvalidInput, "method 4x4-diag needs --diagonal");
    return centro::detail::realize_4x4_auto(l, p.diagonal);
  }
  fail(Errc::InvalidInput, "unknown method '" + m + "'");
}

inline json fixture_item(const std::string& name, const DenseMatrix& m, const SpectrumList& target,
                         RealizationKind kind, std::optional<double> tol, Provenance prov, bool& all_ok) {
  RealizationReport rep = verify_matrix(m, target, kind, tol);
  rep.provenance = std::move(prov);
  all_ok = all_ok && rep.accepted();
  return {{"name", name}, {"result", io::result_json(m, target, rep)}};
}

inline json run_fixture(const std::string& name, std::optional<double> tol, bool& all_ok) {
  using namespace centro::fixtures;
  const auto nn = RealizationKind::NonnegCentro;
  Provenance printed;
  printed.construction = Construction::External;
  printed.statement = "printed matrix";
  json items = json::array();
  if (name == "example1") {
    items.push_back(fixture_item("C", example1_c(), example1_spectrum(), nn, tol, printed, all_ok));
    items.push_back(
        fixture_item("C_prime", example1_c_prime(), example1_shifted_spectrum(), nn, tol, printed, all_ok));
    const Realization r = realize_suleimanova(example1_spectrum());
    items.push_back(fixture_item("pipeline", r.matrix.mat(), example1_spectrum(), r.kind, tol, r.provenance, all_ok));
  } else if (name == "example2") {
    items.push_back(fixture_item("A_plus_XC", example2_matrix(), example2_spectrum(), nn, tol, printed, all_ok));
    items.push_back(fixture_item("B", example2_base(), example2_partition(false).lambda0, nn, tol, printed, all_ok));
    const Realization r1 = realize_partitioned(example2_spectrum(), example2_partition(true));
    items.push_back(
        fixture_item("pipeline_printed_blocks", r1.matrix.mat(), example2_spectrum(), r1.kind, tol, r1.provenance, all_ok));
    const Realization r2 = realize_partitioned(example2_spectrum(), example2_partition(false));
    items.push_back(
        fixture_item("pipeline", r2.matrix.mat(), example2_spectrum(), r2.kind, tol, r2.provenance, all_ok));
  } else {
    fail(Errc::UnknownFixture, "unknown fixture '" + name + "' (known: example1, example2)");
  }
  return {{"fixture", name}, {"items", items}};
}

}  // namespace detail

/// Runs the command line; returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Centrosymmetric realizations of prescribed spectra"};
  app.require_subcommand(0, 1);

  std::string fixture_flag;
  app.add_option("--fixtures", fixture_flag, "Emit and verify a printed example (example1, example2)");

  std::string in_path, spectrum_csv, method = "auto", diagonal_csv, out_path;
  std::optional<double> tol;
  auto* realize = app.add_subcommand("realize", "Construct a centrosymmetric matrix with a given spectrum");
  realize->add_option("--in", in_path, "Problem file (JSON)");
  realize->add_option("--spectrum", spectrum_csv, "Comma-separated values, e.g. \"4,-2+2i,-2-2i\"");
  realize->add_option("--method", method, "auto|real-centro|nonneg-real|positive|suleimanova|partitioned|4x4|4x4-diag");
  realize->add_option("--diagonal", diagonal_csv, "Prescribed diagonal, comma-separated");
  realize->add_option("--tol", tol, "Absolute spectrum match tolerance");
  realize->add_option("--out", out_path, "Write the result here instead of stdout");

  std::string matrix_path, kind_name;
  auto* check = app.add_subcommand("check", "Verify a matrix against a spectrum");
  check->add_option("--matrix", matrix_path, "Matrix file: result document or array of rows")->required();
  check->add_option("--spectrum", spectrum_csv, "Target spectrum; defaults to the one stored in the file");
  check->add_option("--kind", kind_name, "real|nonneg|positive; defaults to the file's kind, else nonneg");
  check->add_option("--tol", tol, "Absolute spectrum match tolerance");
  check->add_option("--out", out_path, "Write the report here instead of stdout");

  std::string fixture_name;
  auto* fixtures = app.add_subcommand("fixtures", "Emit and verify a printed example");
  fixtures->add_option("name", fixture_name, "example1 | example2")->required();
  fixtures->add_option("--tol", tol, "Absolute spectrum match tolerance");
  fixtures->add_option("--out", out_path, "Write the document here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kInputError;
  }

  using detail::json;
  try {
    if (!fixture_flag.empty() || *fixtures) {
      bool ok = true;
      const json doc = detail::run_fixture(fixture_flag.empty() ? fixture_name : fixture_flag, tol, ok);
      detail::emit(doc, out_path, out);
      return ok ? kOk : kNotAccepted;
    }

    if (*check) {
      json doc;
      try {
        doc = json::parse(detail::read_file(matrix_path));
      } catch (const json::exception& e) {
        fail(Errc::ParseError, e.what());
      }
      const bool is_result = doc.is_object();
      const DenseMatrix m = io::matrix_from_json(is_result ? doc.at("matrix") : doc);
      SpectrumList target;
      if (!spectrum_csv.empty())
        target = SpectrumList(io::parse_complex_csv(spectrum_csv));
      else if (is_result && doc.contains("spectrum"))
        target = io::spectrum_from_json(doc.at("spectrum"));
      else
        fail(Errc::InvalidInput, "no target spectrum: pass --spectrum");
      std::string kn = kind_name;
      if (kn.empty() && is_result && doc.contains("kind")) kn = doc.at("kind").get<std::string>();
      if (kn.empty()) kn = "nonneg";
      const auto kind = io::kind_from_string(kn);
      if (!kind) fail(Errc::ParseError, "unknown kind '" + kn + "'");
      RealizationReport rep = verify_matrix(m, target, *kind, tol);
      if (is_result && doc.contains("provenance")) {
        rep.provenance.construction = Construction::External;
        rep.provenance.statement = doc.at("provenance").value("statement", "");
      }
      detail::emit(io::result_json(m, target, rep), out_path, out);
      return rep.accepted() ? kOk : kNotAccepted;
    }

    if (!*realize) {
      err << app.help();
      return kInputError;
    }

    io::ProblemFile problem;
    if (!in_path.empty()) {
      problem = io::parse_problem(detail::read_file(in_path));
    } else if (!spectrum_csv.empty()) {
      problem.spectrum = SpectrumList(io::parse_complex_csv(spectrum_csv));
    } else {
      fail(Errc::InvalidInput, "realize needs --in or --spectrum");
    }
    if (realize->count("--method")) {
      const auto& names = io::method_names();
      if (std::find(names.begin(), names.end(), method) == names.end())
        fail(Errc::ParseError, "unknown method '" + method + "'");
      problem.method = method;
    }
    if (!diagonal_csv.empty()) problem.diagonal = DiagonalSpec{io::parse_real_csv(diagonal_csv)};
    if (tol) problem.tolerance = tol;

    Realization r;
    try {
      r = detail::dispatch(problem);
    } catch (const Error& e) {
      detail::report_error(err, e);
      return e.code() == Errc::ObstructedList ? kObstructed : kNoConstruction;
    }
    const RealizationReport rep = verify_realization(r, problem.spectrum, problem.tolerance);
    detail::emit(io::result_json(r.matrix.mat(), problem.spectrum, rep), out_path, out);
    return rep.accepted() ? kOk : kNotAccepted;
  } catch (const Error& e) {
    detail::report_error(err, e);
    return kInputError;
  }
}

}  // namespace centro::cli
