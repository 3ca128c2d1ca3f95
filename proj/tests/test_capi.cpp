// Exercises the shared library through tropcomm.h only.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <memory>
#include <string>

#include "tropcomm/tropcomm.h"

namespace {

struct Freer {
  void operator()(tcm_matrix* m) const { tcm_matrix_free(m); }
  void operator()(tcm_basis* b) const { tcm_basis_free(b); }
  void operator()(tcm_report* r) const { tcm_report_free(r); }
  void operator()(tcm_projection* p) const { tcm_projection_free(p); }
  void operator()(char* s) const { tcm_string_free(s); }
};
template <class T>
using Owned = std::unique_ptr<T, Freer>;

Owned<tcm_matrix> parse(const char* text) {
  tcm_matrix* m = nullptr;
  REQUIRE(tcm_matrix_parse(text, &m) == TCM_OK);
  return Owned<tcm_matrix>(m);
}

std::string take(char* s) {
  Owned<char> owned(s);
  return s ? std::string(s) : std::string();
}

const char* kExample = "0.166 0.861; -0.62 -0.76";

}  // namespace

TEST_CASE("version and error state") {
  CHECK(std::string(tcm_version()) == "1.0.0");
  tcm_matrix* m = nullptr;
  CHECK(tcm_matrix_parse("0.1 x; 2 3", &m) == TCM_ERR_PARSE);
  CHECK(m == nullptr);
  CHECK(tcm_last_error_offset() == 4);
  CHECK(std::string(tcm_last_error()).find("offset 4") != std::string::npos);

  CHECK(tcm_matrix_parse(nullptr, &m) == TCM_ERR_INVALID_ARGUMENT);
  CHECK(tcm_matrix_parse("1", nullptr) == TCM_ERR_INVALID_ARGUMENT);
  CHECK(tcm_last_error_offset() == -1);
}

TEST_CASE("matrix handles") {
  auto a = parse(kExample);
  CHECK(tcm_matrix_rows(a.get()) == 2);
  CHECK(tcm_matrix_cols(a.get()) == 2);
  CHECK(tcm_matrix_is_finite(a.get()) == 1);
  double v = 0;
  REQUIRE(tcm_matrix_get(a.get(), 1, 0, &v) == TCM_OK);
  CHECK(v == -0.62);
  CHECK(tcm_matrix_get(a.get(), 2, 0, &v) == TCM_ERR_DIMENSION);

  const double vals[] = {0, -INFINITY, -INFINITY, 0};
  tcm_matrix* id = nullptr;
  REQUIRE(tcm_matrix_create(2, 2, vals, &id) == TCM_OK);
  Owned<tcm_matrix> identity(id);
  CHECK(tcm_matrix_is_finite(identity.get()) == 0);

  tcm_matrix* prod = nullptr;
  REQUIRE(tcm_matrix_otimes(identity.get(), a.get(), &prod) == TCM_OK);
  Owned<tcm_matrix> p(prod);
  char* text = nullptr;
  REQUIRE(tcm_matrix_render(p.get(), TCM_FORMAT_TEXT, &text) == TCM_OK);
  CHECK(take(text) == "0.166 0.861; -0.62 -0.76");
  REQUIRE(tcm_matrix_render(identity.get(), TCM_FORMAT_JSON, &text) == TCM_OK);
  CHECK(take(text).find("null") != std::string::npos);
  CHECK(tcm_matrix_render(p.get(), TCM_FORMAT_SVG, &text) == TCM_ERR_INVALID_ARGUMENT);

  tcm_matrix* sum = nullptr;
  REQUIRE(tcm_matrix_oplus(identity.get(), a.get(), &sum) == TCM_OK);
  Owned<tcm_matrix> s(sum);
  REQUIRE(tcm_matrix_get(s.get(), 0, 0, &v) == TCM_OK);
  CHECK(v == 0.166);

  const double bad[] = {0, NAN, 1, 2};
  tcm_matrix* x = nullptr;
  CHECK(tcm_matrix_create(2, 2, bad, &x) == TCM_ERR_DOMAIN);

  auto wide = parse("1 2 3; 4 5 6");
  CHECK(tcm_matrix_otimes(wide.get(), wide.get(), &x) == TCM_ERR_DIMENSION);
}

TEST_CASE("commute checks") {
  auto a = parse(kExample);
  auto id = parse("0 -inf; -inf 0");
  int ok = -1;
  REQUIRE(tcm_commutes(a.get(), id.get(), 1e-9, &ok) == TCM_OK);
  CHECK(ok == 1);
  auto far = parse("0 100; -inf 0");
  auto a2 = parse("0 1; 2 -5");
  REQUIRE(tcm_commutes(a2.get(), far.get(), 1e-9, &ok) == TCM_OK);
  CHECK(ok == 0);

  const double beta4[] = {0, 0.695, -0.786, -INFINITY};
  REQUIRE(tcm_is_solution(a.get(), beta4, 1e-9, &ok) == TCM_OK);
  CHECK(ok == 1);

  tcm_matrix *c = nullptr, *d = nullptr;
  REQUIRE(tcm_build_system(a.get(), &c, &d) == TCM_OK);
  Owned<tcm_matrix> cm(c), dm(d);
  CHECK(tcm_matrix_rows(cm.get()) == 4);
  double v = 0;
  tcm_matrix_get(cm.get(), 0, 2, &v);
  CHECK(v == 0.861);
  CHECK(tcm_build_system(id.get(), &c, nullptr) == TCM_ERR_DOMAIN);

  tcm_case kase;
  REQUIRE(tcm_classify(a.get(), 1e-9, &kase) == TCM_OK);
  CHECK(kase == TCM_CASE_ABOVE);
  CHECK(tcm_classify(a.get(), -1, &kase) == TCM_ERR_PRECONDITION);
}

TEST_CASE("basis handles") {
  auto a = parse(kExample);
  tcm_basis* raw = nullptr;
  REQUIRE(tcm_basis_compute(a.get(), 1e-9, TCM_ALPHA2_SYMMETRIC, &raw) == TCM_OK);
  Owned<tcm_basis> b(raw);
  CHECK(tcm_basis_case(b.get()) == TCM_CASE_ABOVE);
  REQUIRE(tcm_basis_size(b.get()) == 4);
  double v[4];
  REQUIRE(tcm_basis_vector(b.get(), 3, v) == TCM_OK);
  CHECK(v[0] == 0);
  CHECK(v[1] == doctest::Approx(0.695));
  CHECK(v[2] == doctest::Approx(-0.786));
  CHECK(std::isinf(v[3]));
  CHECK(tcm_basis_vector(b.get(), 4, v) == TCM_ERR_DIMENSION);
  double al1 = 0, al2 = 0;
  CHECK(tcm_basis_alphas(b.get(), &al1, &al2) == 1);
  CHECK(al1 == doctest::Approx(-0.14));
  CHECK(al2 == doctest::Approx(-1.621));

  auto eq = parse("0 -2; -3 0");
  REQUIRE(tcm_basis_compute(eq.get(), 1e-9, TCM_ALPHA2_SYMMETRIC, &raw) == TCM_OK);
  Owned<tcm_basis> e(raw);
  CHECK(tcm_basis_size(e.get()) == 6);
  CHECK(tcm_basis_alphas(e.get(), &al1, &al2) == 0);
  CHECK(tcm_basis_compute(eq.get(), 1e-9, static_cast<tcm_alpha2_form>(7), &raw) ==
        TCM_ERR_INVALID_ARGUMENT);
}

TEST_CASE("verify reports") {
  auto a = parse(kExample);
  tcm_report* raw = nullptr;
  REQUIRE(tcm_verify(a.get(), nullptr, &raw) == TCM_OK);
  Owned<tcm_report> r(raw);
  CHECK(tcm_report_passed(r.get()) == 1);
  REQUIRE(tcm_report_check_count(r.get()) == 5);
  const char* name = nullptr;
  int pass = 0;
  REQUIRE(tcm_report_check(r.get(), 3, &name, &pass) == TCM_OK);
  CHECK(std::string(name) == "complete");
  CHECK(pass == 1);

  char* text = nullptr;
  REQUIRE(tcm_report_render(r.get(), TCM_FORMAT_TEXT, &text) == TCM_OK);
  CHECK(take(text).find("seed: 1") != std::string::npos);
  REQUIRE(tcm_report_render(r.get(), TCM_FORMAT_JSON, &text) == TCM_OK);
  const std::string json = take(text);

  // Round trip through JSON gives the same verdict.
  REQUIRE(tcm_verify_report_json(json.c_str(), nullptr, &raw) == TCM_OK);
  Owned<tcm_report> again(raw);
  CHECK(tcm_report_passed(again.get()) == 1);

  tcm_verify_options opts;
  tcm_verify_options_init(&opts);
  opts.mutate_basis = 1;
  auto b = parse("1 2; 0 -1");
  REQUIRE(tcm_verify(b.get(), &opts, &raw) == TCM_OK);
  Owned<tcm_report> bad(raw);
  CHECK(tcm_report_passed(bad.get()) == 0);
  REQUIRE(tcm_report_render(bad.get(), TCM_FORMAT_JSON, &text) == TCM_OK);
  const std::string bad_json = take(text);
  CHECK(bad_json.find("witness") != std::string::npos);
  REQUIRE(tcm_verify_report_json(bad_json.c_str(), nullptr, &raw) == TCM_OK);
  Owned<tcm_report> bad_again(raw);
  CHECK(tcm_report_passed(bad_again.get()) == 0);

  opts.mutate_basis = 0;
  opts.grid_radius = 0;
  CHECK(tcm_verify(b.get(), &opts, &raw) == TCM_ERR_PRECONDITION);
  opts.grid_radius = 5;
  opts.tol = -1;
  CHECK(tcm_verify(b.get(), &opts, &raw) == TCM_ERR_PRECONDITION);

  auto inf = parse("0 -inf; 1 2");
  CHECK(tcm_verify(inf.get(), nullptr, &raw) == TCM_ERR_DOMAIN);
  CHECK(tcm_verify_report_json("{", nullptr, &raw) == TCM_ERR_PARSE);
  CHECK(tcm_report_check(nullptr, 0, &name, &pass) == TCM_ERR_INVALID_ARGUMENT);
}

TEST_CASE("projection handles") {
  auto a = parse(kExample);
  tcm_basis* braw = nullptr;
  REQUIRE(tcm_basis_compute(a.get(), 1e-9, TCM_ALPHA2_SYMMETRIC, &braw) == TCM_OK);
  Owned<tcm_basis> b(braw);
  tcm_projection* praw = nullptr;
  REQUIRE(tcm_projection_compute(b.get(), 1e-9, &praw) == TCM_OK);
  Owned<tcm_projection> p(praw);
  CHECK(tcm_projection_point_count(p.get()) == 4);
  double phi[3], xy[2];
  REQUIRE(tcm_projection_point(p.get(), 1, phi, xy) == TCM_OK);
  CHECK(phi[0] == doctest::Approx(0.465057054841785).epsilon(1e-12));
  REQUIRE(tcm_projection_omega(p.get(), phi, xy) == TCM_OK);
  CHECK(xy[0] == doctest::Approx(0.337533110489489).epsilon(1e-12));
  CHECK(xy[1] == doctest::Approx(0.41896498713872).epsilon(1e-12));
  CHECK(tcm_projection_residual(p.get()) < 1e-9);
  CHECK(tcm_projection_concurrent(p.get()) == 1);

  char* text = nullptr;
  REQUIRE(tcm_projection_render(p.get(), TCM_FORMAT_TSV, &text) == TCM_OK);
  CHECK(take(text).rfind("label\tphi1", 0) == 0);
  REQUIRE(tcm_projection_render(p.get(), TCM_FORMAT_SVG, &text) == TCM_OK);
  CHECK(take(text).find("<svg") != std::string::npos);
  CHECK(tcm_projection_render(p.get(), TCM_FORMAT_JSON, &text) == TCM_ERR_INVALID_ARGUMENT);

  const std::string path = "capi_plot.tsv";
  REQUIRE(tcm_projection_write(p.get(), TCM_FORMAT_TSV, path.c_str()) == TCM_OK);
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  CHECK(header == "label\tphi1\tphi2\tphi3\tx\ty");
  std::remove(path.c_str());
  CHECK(tcm_projection_write(p.get(), TCM_FORMAT_SVG, "/nonexistent/dir/x.svg") == TCM_ERR_IO);

  auto eq = parse("0 -2; -3 0");
  REQUIRE(tcm_basis_compute(eq.get(), 1e-9, TCM_ALPHA2_SYMMETRIC, &braw) == TCM_OK);
  Owned<tcm_basis> e(braw);
  CHECK(tcm_projection_compute(e.get(), 1e-9, &praw) == TCM_ERR_UNSUPPORTED);
}

TEST_CASE("null handles are tolerated") {
  tcm_matrix_free(nullptr);
  tcm_basis_free(nullptr);
  tcm_report_free(nullptr);
  tcm_projection_free(nullptr);
  tcm_string_free(nullptr);
  CHECK(tcm_matrix_rows(nullptr) == 0);
  CHECK(tcm_basis_size(nullptr) == 0);
  CHECK(tcm_report_passed(nullptr) == 0);
  CHECK(tcm_projection_concurrent(nullptr) == 0);
  CHECK(std::isnan(tcm_projection_residual(nullptr)));
}
