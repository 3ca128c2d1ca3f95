#include "tropcomm/tropcomm.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <new>
#include <string>
#include <variant>

#include "tropcomm/bary.hpp"
#include "tropcomm/commute.hpp"
#include "tropcomm/error.hpp"
#include "tropcomm/io.hpp"
#include "tropcomm/sweep.hpp"

struct tcm_matrix {
  tropcomm::Matrix m;
};

struct tcm_basis {
  tropcomm::ConeBasis cone;
};

struct tcm_report {
  std::variant<tropcomm::VerifyReport, tropcomm::SweepReport> r;

  const std::vector<tropcomm::CheckResult>& checks() const {
    return std::visit([](const auto& x) -> const auto& { return x.checks; }, r);
  }
};

struct tcm_projection {
  tropcomm::TrianglePlot plot;
  tropcomm::ConcurrencyReport concurrency;
};

namespace {

thread_local std::string g_last_error;
thread_local long g_last_offset = -1;

tcm_status fail(tcm_status status, std::string message) {
  g_last_error = std::move(message);
  g_last_offset = -1;
  return status;
}

tcm_status from_kind(tropcomm::ErrorKind kind) {
  using tropcomm::ErrorKind;
  switch (kind) {
    case ErrorKind::kDimension: return TCM_ERR_DIMENSION;
    case ErrorKind::kDomain: return TCM_ERR_DOMAIN;
    case ErrorKind::kDegenerate: return TCM_ERR_DEGENERATE;
    case ErrorKind::kPrecondition: return TCM_ERR_PRECONDITION;
    case ErrorKind::kParse: return TCM_ERR_PARSE;
    case ErrorKind::kUnsupported: return TCM_ERR_UNSUPPORTED;
    case ErrorKind::kAmbiguous: return TCM_ERR_AMBIGUOUS;
    case ErrorKind::kIo: return TCM_ERR_IO;
  }
  return TCM_ERR_INTERNAL;
}

// Runs body, translating exceptions into status codes.
template <class F>
tcm_status guarded(F&& body) {
  try {
    body();
    return TCM_OK;
  } catch (const tropcomm::ParseError& e) {
    fail(TCM_ERR_PARSE, e.what());
    g_last_offset = static_cast<long>(e.offset());
    return TCM_ERR_PARSE;
  } catch (const tropcomm::Error& e) {
    return fail(from_kind(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(TCM_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(TCM_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(TCM_ERR_INTERNAL, "unknown error");
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

tropcomm::VerifyOptions to_options(const tcm_verify_options* opts) {
  tcm_verify_options o;
  tcm_verify_options_init(&o);
  if (opts) o = *opts;
  if (!(o.tol >= 0.0)) {
    throw tropcomm::Error(tropcomm::ErrorKind::kPrecondition, "tolerance must be >= 0");
  }
  if (o.grid_radius < 1) {
    throw tropcomm::Error(tropcomm::ErrorKind::kPrecondition, "grid radius must be >= 1");
  }
  tropcomm::VerifyOptions v;
  v.tol = o.tol;
  v.seed = o.seed;
  v.grid_radius = o.grid_radius;
  v.closure_trials = o.closure_trials;
  v.below_alpha2 = o.below_alpha2 == TCM_ALPHA2_REPEATED_INDEX
                       ? tropcomm::Alpha2Form::kRepeatedIndex
                       : tropcomm::Alpha2Form::kSymmetric;
  v.mutate_basis = o.mutate_basis != 0;
  return v;
}

void require_tol(double tol) {
  if (!(tol >= 0.0)) {
    throw tropcomm::Error(tropcomm::ErrorKind::kPrecondition, "tolerance must be >= 0");
  }
}

tropcomm::Vector vector_from(const double x[4]) {
  return tropcomm::Vector::from_doubles(std::span<const double>(x, 4));
}

}  // namespace

#define TCM_REQUIRE(cond)                                                 \
  do {                                                                    \
    if (!(cond)) return fail(TCM_ERR_INVALID_ARGUMENT, "invalid argument: " #cond); \
  } while (0)

extern "C" {

const char* tcm_version(void) { return "1.0.0"; }

const char* tcm_last_error(void) { return g_last_error.c_str(); }

long tcm_last_error_offset(void) { return g_last_offset; }

void tcm_string_free(char* s) { std::free(s); }

tcm_status tcm_matrix_parse(const char* text, tcm_matrix** out) {
  TCM_REQUIRE(text && out);
  return guarded([&] { *out = new tcm_matrix{tropcomm::parse_matrix(text)}; });
}

tcm_status tcm_matrix_create(size_t rows, size_t cols, const double* values, tcm_matrix** out) {
  TCM_REQUIRE(out && (values || rows * cols == 0));
  return guarded([&] {
    *out = new tcm_matrix{tropcomm::Matrix::from_doubles(
        rows, cols, std::span<const double>(values, rows * cols))};
  });
}

void tcm_matrix_free(tcm_matrix* m) { delete m; }

size_t tcm_matrix_rows(const tcm_matrix* m) { return m ? m->m.rows() : 0; }

size_t tcm_matrix_cols(const tcm_matrix* m) { return m ? m->m.cols() : 0; }

tcm_status tcm_matrix_get(const tcm_matrix* m, size_t i, size_t j, double* out) {
  TCM_REQUIRE(m && out);
  return guarded([&] { *out = m->m.at(i, j).to_double(); });
}

int tcm_matrix_is_finite(const tcm_matrix* m) { return m && m->m.is_finite() ? 1 : 0; }

tcm_status tcm_matrix_oplus(const tcm_matrix* a, const tcm_matrix* b, tcm_matrix** out) {
  TCM_REQUIRE(a && b && out);
  return guarded([&] { *out = new tcm_matrix{tropcomm::oplus(a->m, b->m)}; });
}

tcm_status tcm_matrix_otimes(const tcm_matrix* a, const tcm_matrix* b, tcm_matrix** out) {
  TCM_REQUIRE(a && b && out);
  return guarded([&] { *out = new tcm_matrix{tropcomm::otimes(a->m, b->m)}; });
}

tcm_status tcm_matrix_render(const tcm_matrix* m, tcm_format format, char** out) {
  TCM_REQUIRE(m && out);
  TCM_REQUIRE(format == TCM_FORMAT_TEXT || format == TCM_FORMAT_JSON);
  return guarded([&] {
    *out = dup_string(format == TCM_FORMAT_JSON ? tropcomm::matrix_to_json(m->m)
                                                : tropcomm::to_string(m->m));
  });
}

tcm_status tcm_commutes(const tcm_matrix* a, const tcm_matrix* b, double tol, int* out) {
  TCM_REQUIRE(a && b && out);
  return guarded([&] {
    require_tol(tol);
    *out = tropcomm::commutes(a->m, b->m, tol) ? 1 : 0;
  });
}

tcm_status tcm_is_solution(const tcm_matrix* a, const double x[4], double tol, int* out) {
  TCM_REQUIRE(a && x && out);
  return guarded([&] {
    require_tol(tol);
    *out = tropcomm::is_solution(vector_from(x), tropcomm::build_system(a->m), tol) ? 1 : 0;
  });
}

tcm_status tcm_build_system(const tcm_matrix* a, tcm_matrix** c, tcm_matrix** d) {
  TCM_REQUIRE(a);
  return guarded([&] {
    tropcomm::TwoSidedSystem sys = tropcomm::build_system(a->m);
    if (c) *c = new tcm_matrix{std::move(sys.c)};
    if (d) *d = new tcm_matrix{std::move(sys.d)};
  });
}

tcm_status tcm_classify(const tcm_matrix* a, double tol, tcm_case* out) {
  TCM_REQUIRE(a && out);
  return guarded([&] {
    require_tol(tol);
    *out = static_cast<tcm_case>(tropcomm::classify(a->m, tol));
  });
}

tcm_status tcm_basis_compute(const tcm_matrix* a, double tol, tcm_alpha2_form form,
                             tcm_basis** out) {
  TCM_REQUIRE(a && out);
  TCM_REQUIRE(form == TCM_ALPHA2_SYMMETRIC || form == TCM_ALPHA2_REPEATED_INDEX);
  return guarded([&] {
    require_tol(tol);
    *out = new tcm_basis{tropcomm::basis_commuting_cone(
        a->m, tol,
        form == TCM_ALPHA2_SYMMETRIC ? tropcomm::Alpha2Form::kSymmetric
                                     : tropcomm::Alpha2Form::kRepeatedIndex)};
  });
}

void tcm_basis_free(tcm_basis* b) { delete b; }

tcm_case tcm_basis_case(const tcm_basis* b) {
  return b ? static_cast<tcm_case>(b->cone.diagonal) : TCM_CASE_EQUAL;
}

size_t tcm_basis_size(const tcm_basis* b) { return b ? b->cone.basis.size() : 0; }

tcm_status tcm_basis_vector(const tcm_basis* b, size_t i, double out[4]) {
  TCM_REQUIRE(b && out);
  if (i >= b->cone.basis.size()) return fail(TCM_ERR_DIMENSION, "basis index out of range");
  const std::vector<double> v = b->cone.basis[i].to_doubles();
  std::copy(v.begin(), v.end(), out);
  return TCM_OK;
}

int tcm_basis_alphas(const tcm_basis* b, double* alpha1, double* alpha2) {
  if (!b || !b->cone.alpha1 || !b->cone.alpha2) return 0;
  if (alpha1) *alpha1 = *b->cone.alpha1;
  if (alpha2) *alpha2 = *b->cone.alpha2;
  return 1;
}

void tcm_verify_options_init(tcm_verify_options* opts) {
  if (!opts) return;
  const tropcomm::VerifyOptions d;
  opts->tol = d.tol;
  opts->seed = d.seed;
  opts->grid_radius = d.grid_radius;
  opts->closure_trials = d.closure_trials;
  opts->below_alpha2 = TCM_ALPHA2_SYMMETRIC;
  opts->mutate_basis = 0;
}

tcm_status tcm_verify(const tcm_matrix* a, const tcm_verify_options* opts, tcm_report** out) {
  TCM_REQUIRE(a && out);
  return guarded([&] { *out = new tcm_report{tropcomm::verify_basis(a->m, to_options(opts))}; });
}

tcm_status tcm_verify_report_json(const char* json, const tcm_verify_options* opts,
                                  tcm_report** out) {
  TCM_REQUIRE(json && out);
  return guarded([&] {
    auto [a, basis] = tropcomm::parse_report_json(json);
    *out = new tcm_report{tropcomm::verify_basis(a, basis, to_options(opts))};
  });
}

tcm_status tcm_verify_sweep(const tcm_verify_options* opts, tcm_report** out) {
  TCM_REQUIRE(out);
  return guarded([&] {
    tropcomm::SweepOptions s;
    s.verify = to_options(opts);
    *out = new tcm_report{tropcomm::run_sweep(s)};
  });
}

void tcm_report_free(tcm_report* r) { delete r; }

int tcm_report_passed(const tcm_report* r) {
  if (!r) return 0;
  return std::visit([](const auto& x) { return x.passed() ? 1 : 0; }, r->r);
}

size_t tcm_report_check_count(const tcm_report* r) { return r ? r->checks().size() : 0; }

tcm_status tcm_report_check(const tcm_report* r, size_t i, const char** name, int* pass) {
  TCM_REQUIRE(r);
  if (i >= r->checks().size()) return fail(TCM_ERR_DIMENSION, "check index out of range");
  if (name) *name = r->checks()[i].name.c_str();
  if (pass) *pass = r->checks()[i].pass ? 1 : 0;
  return TCM_OK;
}

tcm_status tcm_report_render(const tcm_report* r, tcm_format format, char** out) {
  TCM_REQUIRE(r && out);
  TCM_REQUIRE(format == TCM_FORMAT_TEXT || format == TCM_FORMAT_JSON);
  return guarded([&] {
    *out = dup_string(std::visit(
        [&](const auto& x) { return format == TCM_FORMAT_JSON ? x.to_json() : x.to_text(); },
        r->r));
  });
}

tcm_status tcm_projection_compute(const tcm_basis* b, double tol, tcm_projection** out) {
  TCM_REQUIRE(b && out);
  return guarded([&] {
    require_tol(tol);
    *out = new tcm_projection{tropcomm::build_plot(b->cone, tol),
                              tropcomm::concurrency_check(b->cone, tol)};
  });
}

void tcm_projection_free(tcm_projection* p) { delete p; }

size_t tcm_projection_point_count(const tcm_projection* p) {
  return p ? p->plot.points.size() : 0;
}

tcm_status tcm_projection_point(const tcm_projection* p, size_t i, double phi[3], double xy[2]) {
  TCM_REQUIRE(p);
  if (i >= p->plot.points.size()) return fail(TCM_ERR_DIMENSION, "point index out of range");
  const tropcomm::BaryPoint& q = p->plot.points[i];
  if (phi) std::copy(q.phi.begin(), q.phi.end(), phi);
  if (xy) {
    const tropcomm::Point2 c = tropcomm::to_cartesian(q, p->plot.triangle);
    xy[0] = c.x;
    xy[1] = c.y;
  }
  return TCM_OK;
}

tcm_status tcm_projection_omega(const tcm_projection* p, double phi[3], double xy[2]) {
  TCM_REQUIRE(p);
  const auto& c = p->concurrency;
  if (phi) std::copy(c.omega_bary.phi.begin(), c.omega_bary.phi.end(), phi);
  if (xy) {
    xy[0] = c.omega.x;
    xy[1] = c.omega.y;
  }
  return TCM_OK;
}

double tcm_projection_residual(const tcm_projection* p) {
  return p ? p->concurrency.residual : NAN;
}

int tcm_projection_concurrent(const tcm_projection* p) {
  return p && p->concurrency.holds ? 1 : 0;
}

tcm_status tcm_projection_render(const tcm_projection* p, tcm_format format, char** out) {
  TCM_REQUIRE(p && out);
  TCM_REQUIRE(format == TCM_FORMAT_SVG || format == TCM_FORMAT_TSV);
  return guarded([&] {
    *out = dup_string(tropcomm::emit_plot(
        p->plot, format == TCM_FORMAT_SVG ? tropcomm::PlotFormat::kSvg : tropcomm::PlotFormat::kTsv));
  });
}

tcm_status tcm_projection_write(const tcm_projection* p, tcm_format format, const char* path) {
  TCM_REQUIRE(p && path);
  TCM_REQUIRE(format == TCM_FORMAT_SVG || format == TCM_FORMAT_TSV);
  return guarded([&] {
    std::ofstream file(path, std::ios::binary);
    if (!file) {
      throw tropcomm::Error(tropcomm::ErrorKind::kIo, std::string("cannot open ") + path);
    }
    tropcomm::emit_plot(p->plot,
                        format == TCM_FORMAT_SVG ? tropcomm::PlotFormat::kSvg
                                                 : tropcomm::PlotFormat::kTsv,
                        file);
  });
}

}  // extern "C"
