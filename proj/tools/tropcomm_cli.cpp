// tropcomm: command-line front end over the C API.
//
//   tropcomm check  A B      does A commute with B?
//   tropcomm basis  A        basis of all matrices commuting with A
//   tropcomm bary   A        barycentric picture (SVG or TSV)
//   tropcomm verify          randomized + exhaustive oracle sweep
//
// Exit codes: 0 success / commute, 1 semantic failure, 2 input error,
// 3 unsupported case.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "tropcomm/tropcomm.h"

namespace {

enum Exit : int { kOk = 0, kSemantic = 1, kInput = 2, kUnsupported = 3 };

struct MatrixDeleter {
  void operator()(tcm_matrix* m) const { tcm_matrix_free(m); }
};
struct BasisDeleter {
  void operator()(tcm_basis* b) const { tcm_basis_free(b); }
};
struct ReportDeleter {
  void operator()(tcm_report* r) const { tcm_report_free(r); }
};
struct ProjectionDeleter {
  void operator()(tcm_projection* p) const { tcm_projection_free(p); }
};
struct StringDeleter {
  void operator()(char* s) const { tcm_string_free(s); }
};

using MatrixPtr = std::unique_ptr<tcm_matrix, MatrixDeleter>;
using BasisPtr = std::unique_ptr<tcm_basis, BasisDeleter>;
using ReportPtr = std::unique_ptr<tcm_report, ReportDeleter>;
using ProjectionPtr = std::unique_ptr<tcm_projection, ProjectionDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

struct Config {
  double tol = 1e-9;
  uint64_t seed = 1;
  int grid_radius = 5;
  std::string format;
  std::string out;
  bool mutate_basis = false;
};

/// Thrown to abort a command with a given exit code after printing msg.
struct CommandError {
  int code;
  std::string message;
};

int exit_for(tcm_status s) {
  return s == TCM_ERR_UNSUPPORTED ? kUnsupported : s == TCM_OK ? kOk : kInput;
}

void check_status(tcm_status s, const std::string& context) {
  if (s == TCM_OK) return;
  throw CommandError{exit_for(s), context + ": " + tcm_last_error()};
}

/// "-" reads stdin, an existing path reads the file, anything else is the
/// matrix text itself.
std::string read_source(const std::string& source) {
  if (source == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::error_code ec;
  if (std::filesystem::is_regular_file(source, ec)) {
    std::ifstream in(source, std::ios::binary);
    if (!in) throw CommandError{kInput, "cannot read " + source};
    return std::string(std::istreambuf_iterator<char>(in), {});
  }
  return source;
}

MatrixPtr load_matrix(const std::string& source, const char* name, bool require_finite) {
  tcm_matrix* raw = nullptr;
  check_status(tcm_matrix_parse(read_source(source).c_str(), &raw),
               std::string("cannot parse ") + name);
  MatrixPtr m(raw);
  if (tcm_matrix_rows(m.get()) != 2 || tcm_matrix_cols(m.get()) != 2) {
    throw CommandError{kInput, std::string(name) + " must be 2x2, got " +
                                   std::to_string(tcm_matrix_rows(m.get())) + "x" +
                                   std::to_string(tcm_matrix_cols(m.get()))};
  }
  if (require_finite && !tcm_matrix_is_finite(m.get())) {
    throw CommandError{kInput, std::string(name) + " must have finite entries"};
  }
  return m;
}

std::string render(const tcm_matrix* m, tcm_format format = TCM_FORMAT_TEXT) {
  char* raw = nullptr;
  check_status(tcm_matrix_render(m, format, &raw), "render");
  StringPtr s(raw);
  return s.get();
}

std::string render(const tcm_report* r, tcm_format format) {
  char* raw = nullptr;
  check_status(tcm_report_render(r, format, &raw), "render report");
  StringPtr s(raw);
  return s.get();
}

tcm_verify_options verify_options(const Config& cfg) {
  tcm_verify_options o;
  tcm_verify_options_init(&o);
  o.tol = cfg.tol;
  o.seed = cfg.seed;
  o.grid_radius = cfg.grid_radius;
  o.mutate_basis = cfg.mutate_basis ? 1 : 0;
  return o;
}

tcm_format text_or_json(const std::string& format) {
  return format == "json" ? TCM_FORMAT_JSON : TCM_FORMAT_TEXT;
}

int cmd_check(const std::string& a_src, const std::string& b_src, const Config& cfg) {
  MatrixPtr a = load_matrix(a_src, "A", true);
  MatrixPtr b = load_matrix(b_src, "B", false);

  tcm_matrix *ab_raw = nullptr, *ba_raw = nullptr;
  check_status(tcm_matrix_otimes(a.get(), b.get(), &ab_raw), "A (x) B");
  MatrixPtr ab(ab_raw);
  check_status(tcm_matrix_otimes(b.get(), a.get(), &ba_raw), "B (x) A");
  MatrixPtr ba(ba_raw);

  int commute = 0;
  check_status(tcm_commutes(a.get(), b.get(), cfg.tol, &commute), "commute check");
  const char* verdict = commute ? "COMMUTE" : "DO NOT COMMUTE";

  if (cfg.format == "json") {
    const nlohmann::json doc{
        {"a_otimes_b", nlohmann::json::parse(render(ab.get(), TCM_FORMAT_JSON))},
        {"b_otimes_a", nlohmann::json::parse(render(ba.get(), TCM_FORMAT_JSON))},
        {"tol", cfg.tol},
        {"commute", commute != 0}};
    std::cout << doc.dump(2) << '\n';
  } else {
    std::cout << "A (x) B = " << render(ab.get()) << '\n'
              << "B (x) A = " << render(ba.get()) << '\n'
              << verdict << '\n';
  }
  return commute ? kOk : kSemantic;
}

int cmd_basis(const std::string& a_src, const Config& cfg) {
  MatrixPtr a = load_matrix(a_src, "A", true);
  const tcm_verify_options opts = verify_options(cfg);
  tcm_report* raw = nullptr;
  check_status(tcm_verify(a.get(), &opts, &raw), "basis");
  ReportPtr report(raw);
  std::cout << render(report.get(), text_or_json(cfg.format));
  return tcm_report_passed(report.get()) ? kOk : kSemantic;
}

int cmd_bary(const std::string& a_src, const Config& cfg) {
  MatrixPtr a = load_matrix(a_src, "A", true);
  tcm_case diagonal;
  check_status(tcm_classify(a.get(), cfg.tol, &diagonal), "classify");
  if (diagonal == TCM_CASE_EQUAL) {
    throw CommandError{kUnsupported, "projection undefined for equal diagonal"};
  }

  tcm_basis* basis_raw = nullptr;
  check_status(tcm_basis_compute(a.get(), cfg.tol, TCM_ALPHA2_SYMMETRIC, &basis_raw), "basis");
  BasisPtr basis(basis_raw);
  tcm_projection* proj_raw = nullptr;
  check_status(tcm_projection_compute(basis.get(), cfg.tol, &proj_raw), "projection");
  ProjectionPtr proj(proj_raw);

  const tcm_format format = cfg.format == "tsv" ? TCM_FORMAT_TSV : TCM_FORMAT_SVG;
  if (cfg.out.empty()) {
    char* raw = nullptr;
    check_status(tcm_projection_render(proj.get(), format, &raw), "render plot");
    StringPtr s(raw);
    std::cout << s.get();
  } else {
    check_status(tcm_projection_write(proj.get(), format, cfg.out.c_str()), "write plot");
  }

  // Keep stdout clean for the plot when no --out is given.
  std::ostream& summary = cfg.out.empty() ? std::cerr : std::cout;
  double phi[3], xy[2];
  tcm_projection_omega(proj.get(), phi, xy);
  char line[256];
  std::snprintf(line, sizeof(line), "omega: phi = (%.9g, %.9g, %.9g), xy = (%.9g, %.9g)\n",
                phi[0], phi[1], phi[2], xy[0], xy[1]);
  summary << line;
  std::snprintf(line, sizeof(line), "concurrency residual: %.3g (%s)\n",
                tcm_projection_residual(proj.get()),
                tcm_projection_concurrent(proj.get()) ? "concurrent" : "NOT concurrent");
  summary << line;
  return tcm_projection_concurrent(proj.get()) ? kOk : kSemantic;
}

int cmd_verify(const Config& cfg) {
  const tcm_verify_options opts = verify_options(cfg);
  tcm_report* raw = nullptr;
  check_status(tcm_verify_sweep(&opts, &raw), "verify");
  ReportPtr report(raw);
  std::cout << render(report.get(), text_or_json(cfg.format));
  return tcm_report_passed(report.get()) ? kOk : kSemantic;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Max-plus 2x2 commuting matrices: commute checks, cone bases, projections"};
  app.require_subcommand(1);
  Config cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--tol", cfg.tol, "comparison tolerance")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
  };
  auto add_verify = [&](CLI::App* sub) {
    sub->add_option("--seed", cfg.seed, "seed for randomized checks")->capture_default_str();
    sub->add_option("--grid-radius", cfg.grid_radius, "exhaustive grid is {-inf, -r..r}")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_flag("--mutate-basis", cfg.mutate_basis,
                  "drop the last basis vector (negative control)");
  };

  std::string a_src, b_src;

  auto* check = app.add_subcommand("check", "test whether A (x) B == B (x) A");
  check->add_option("A", a_src, "matrix A (inline text, file, or - for stdin)")->required();
  check->add_option("B", b_src, "matrix B (may contain -inf)")->required();
  add_common(check);
  check->add_option("--format", cfg.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* basis = app.add_subcommand("basis", "basis of the cone of matrices commuting with A");
  basis->add_option("A", a_src, "finite 2x2 matrix A")->required();
  add_common(basis);
  add_verify(basis);
  basis->add_option("--format", cfg.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* bary = app.add_subcommand("bary", "barycentric projection of the commuting cone");
  bary->add_option("A", a_src, "finite 2x2 matrix A with a11 != a22")->required();
  add_common(bary);
  bary->add_option("--format", cfg.format, "svg or tsv")
      ->check(CLI::IsMember({"svg", "tsv"}));
  bary->add_option("--out", cfg.out, "output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "run the full oracle sweep");
  add_common(verify);
  add_verify(verify);
  verify->add_option("--format", cfg.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInput;
  }

  try {
    if (*check) return cmd_check(a_src, b_src, cfg);
    if (*basis) return cmd_basis(a_src, cfg);
    if (*bary) return cmd_bary(a_src, cfg);
    if (*verify) return cmd_verify(cfg);
  } catch (const CommandError& e) {
    std::cerr << "error: " << e.message << '\n';
    return e.code;
  }
  return kInput;
}
