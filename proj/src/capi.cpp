#include "hsb.h"

#include <fstream>
#include <string>
#include <vector>

#include "hsb/commands.hpp"
#include "hsb/io.hpp"
#include "hsb/spaces.hpp"

struct hsb_datum {
  hsb::ClassificationDatum value;
};

struct hsb_report {
  hsb::Report value;
  std::vector<hsb::CheckRecord> records;
  std::string json;

  explicit hsb_report(hsb::Report r) : value(std::move(r)), records(value.records()), json(value.to_json()) {}
};

namespace {

thread_local std::string last_error;

hsb_status status_of(hsb::ErrorCode code) {
  using hsb::ErrorCode;
  switch (code) {
    case ErrorCode::invalid_argument: return HSB_ERR_INVALID_ARGUMENT;
    case ErrorCode::parse_error: return HSB_ERR_PARSE;
    case ErrorCode::shape_mismatch: return HSB_ERR_SHAPE_MISMATCH;
    case ErrorCode::dimension_mismatch: return HSB_ERR_DIMENSION_MISMATCH;
    case ErrorCode::not_hermitian: return HSB_ERR_NOT_HERMITIAN;
    case ErrorCode::negative_spectrum: return HSB_ERR_NEGATIVE_SPECTRUM;
    case ErrorCode::non_finite: return HSB_ERR_NON_FINITE;
    case ErrorCode::singular_bergman: return HSB_ERR_SINGULAR_BERGMAN;
    case ErrorCode::cut_locus: return HSB_ERR_CUT_LOCUS;
    case ErrorCode::closure_violation: return HSB_ERR_CLOSURE_VIOLATION;
    case ErrorCode::not_in_k: return HSB_ERR_NOT_IN_K;
    case ErrorCode::not_hermitian_structure: return HSB_ERR_NOT_HERMITIAN_STRUCTURE;
    case ErrorCode::covariance_violation: return HSB_ERR_COVARIANCE_VIOLATION;
    case ErrorCode::singular_gauge: return HSB_ERR_SINGULAR_GAUGE;
    case ErrorCode::not_unitary: return HSB_ERR_NOT_UNITARY;
  }
  return HSB_ERR_INTERNAL;
}

template <class F>
hsb_status guarded(F&& body) {
  try {
    body();
    return HSB_OK;
  } catch (const hsb::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    last_error = e.what();
    return HSB_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown exception";
    return HSB_ERR_INTERNAL;
  }
}

hsb_status null_argument(const char* what) {
  last_error = std::string("null argument: ") + what;
  return HSB_ERR_INVALID_ARGUMENT;
}

hsb::JordanElement element_from(const hsb::JordanTriple& t, const double* data) {
  hsb::CMatrix m(t.r, t.s);
  for (int i = 0; i < t.r; ++i)
    for (int j = 0; j < t.s; ++j) {
      const int k = i * t.s + j;
      m(i, j) = hsb::Complex(data[2 * k], data[2 * k + 1]);
    }
  return {t, std::move(m)};
}

void element_to(const hsb::JordanElement& x, double* out) {
  const auto& t = x.triple();
  for (int i = 0; i < t.r; ++i)
    for (int j = 0; j < t.s; ++j) {
      const int k = i * t.s + j;
      out[2 * k] = x.value()(i, j).real();
      out[2 * k + 1] = x.value()(i, j).imag();
    }
}

hsb_status emit(hsb::Report report, hsb_report** out) {
  *out = new hsb_report(std::move(report));
  return HSB_OK;
}

}  // namespace

extern "C" {

const char* hsb_version(void) { return "1.0.0"; }

const char* hsb_status_string(hsb_status status) {
  switch (status) {
    case HSB_OK: return "ok";
    case HSB_ERR_INVALID_ARGUMENT: return "invalid argument";
    case HSB_ERR_PARSE: return "parse error";
    case HSB_ERR_SHAPE_MISMATCH: return "shape mismatch";
    case HSB_ERR_DIMENSION_MISMATCH: return "dimension mismatch";
    case HSB_ERR_NOT_HERMITIAN: return "matrix not hermitian";
    case HSB_ERR_NEGATIVE_SPECTRUM: return "negative spectrum";
    case HSB_ERR_NON_FINITE: return "non-finite value";
    case HSB_ERR_SINGULAR_BERGMAN: return "singular Bergman operator";
    case HSB_ERR_CUT_LOCUS: return "cut locus";
    case HSB_ERR_CLOSURE_VIOLATION: return "bracket closure violated";
    case HSB_ERR_NOT_IN_K: return "operator is not a derivation";
    case HSB_ERR_NOT_HERMITIAN_STRUCTURE: return "hermitian structure required";
    case HSB_ERR_COVARIANCE_VIOLATION: return "covariance violated";
    case HSB_ERR_SINGULAR_GAUGE: return "singular gauge element";
    case HSB_ERR_NOT_UNITARY: return "gauge element not unitary";
    case HSB_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* hsb_last_error(void) { return last_error.c_str(); }

hsb_status hsb_datum_load(const char* path, hsb_datum** out) {
  if (path == nullptr) return null_argument("path");
  if (out == nullptr) return null_argument("out");
  return guarded([&] { *out = new hsb_datum{hsb::load_datum(path)}; });
}

hsb_status hsb_datum_parse(const char* json_text, hsb_datum** out) {
  if (json_text == nullptr) return null_argument("json_text");
  if (out == nullptr) return null_argument("out");
  return guarded([&] { *out = new hsb_datum{hsb::parse_datum(json_text)}; });
}

void hsb_datum_free(hsb_datum* datum) { delete datum; }

hsb_status hsb_datum_dims(const hsb_datum* datum, int* r, int* s, int* n, int* hermitian) {
  if (datum == nullptr) return null_argument("datum");
  if (r) *r = datum->value.triple.r;
  if (s) *s = datum->value.triple.s;
  if (n) *n = datum->value.h.n;
  if (hermitian) *hermitian = datum->value.h.hermitian ? 1 : 0;
  return HSB_OK;
}

hsb_status hsb_datum_fingerprint(const hsb_datum* datum, int max_word_len, double* re, double* im, size_t capacity,
                                 size_t* count) {
  if (datum == nullptr) return null_argument("datum");
  if (capacity > 0 && (re == nullptr || im == nullptr)) return null_argument("re/im");
  return guarded([&] {
    const auto values = hsb::orbit_fingerprint(datum->value, max_word_len);
    if (count) *count = values.size();
    for (size_t k = 0; k < values.size() && k < capacity; ++k) {
      re[k] = values[k].real();
      im[k] = values[k].imag();
    }
  });
}

hsb_status hsb_verify(int r, int s, int trials, uint64_t seed, double tol, hsb_report** out) {
  if (out == nullptr) return null_argument("out");
  return guarded([&] { emit(hsb::cmd_verify({r, s, trials, seed, tol}), out); });
}

hsb_status hsb_classify(const hsb_datum* datum, int epsilon, double tol, hsb_report** out) {
  if (datum == nullptr) return null_argument("datum");
  if (out == nullptr) return null_argument("out");
  return guarded([&] { emit(hsb::cmd_classify(datum->value, hsb::curvature_from_int(epsilon), tol), out); });
}

hsb_status hsb_dualize(const hsb_datum* datum, double tol, hsb_report** out) {
  if (datum == nullptr) return null_argument("datum");
  if (out == nullptr) return null_argument("out");
  return guarded([&] { emit(hsb::cmd_dualize(datum->value, tol), out); });
}

hsb_status hsb_curvature(const hsb_datum* datum, int epsilon, double tol, hsb_report** out) {
  if (datum == nullptr) return null_argument("datum");
  if (out == nullptr) return null_argument("out");
  return guarded([&] { emit(hsb::cmd_curvature(datum->value, hsb::curvature_from_int(epsilon), tol), out); });
}

void hsb_report_free(hsb_report* report) { delete report; }

int hsb_report_passed(const hsb_report* report) { return report != nullptr && report->value.passed() ? 1 : 0; }

size_t hsb_report_check_count(const hsb_report* report) { return report ? report->records.size() : 0; }

hsb_status hsb_report_check(const hsb_report* report, size_t index, const char** name, double* residual,
                            double* tolerance, int* pass) {
  if (report == nullptr) return null_argument("report");
  if (index >= report->records.size()) {
    last_error = "check index out of range";
    return HSB_ERR_INVALID_ARGUMENT;
  }
  const auto& rec = report->records[index];
  if (name) *name = rec.name.c_str();
  if (residual) *residual = rec.residual;
  if (tolerance) *tolerance = rec.tolerance;
  if (pass) *pass = rec.pass ? 1 : 0;
  return HSB_OK;
}

const char* hsb_report_json(const hsb_report* report) { return report ? report->json.c_str() : ""; }

hsb_status hsb_report_write(const hsb_report* report, const char* path) {
  if (report == nullptr) return null_argument("report");
  if (path == nullptr) return null_argument("path");
  std::ofstream f(path);
  if (!f) {
    last_error = std::string("cannot write ") + path;
    return HSB_ERR_INVALID_ARGUMENT;
  }
  f << report->json << '\n';
  return f ? HSB_OK : HSB_ERR_INTERNAL;
}

hsb_status hsb_triple_product(int r, int s, const double* u, const double* v, const double* w, double* out) {
  if (!u || !v || !w || !out) return null_argument("u/v/w/out");
  return guarded([&] {
    const hsb::JordanTriple t(r, s);
    element_to(hsb::triple_product(element_from(t, u), element_from(t, v), element_from(t, w)), out);
  });
}

hsb_status hsb_quasi_inverse(int r, int s, const double* z, const double* w, double* out) {
  if (!z || !w || !out) return null_argument("z/w/out");
  return guarded([&] {
    const hsb::JordanTriple t(r, s);
    element_to(hsb::quasi_inverse(element_from(t, z), element_from(t, w)), out);
  });
}

hsb_status hsb_transvection(int r, int s, int epsilon, const double* w, const double* z, double* out) {
  if (!w || !z || !out) return null_argument("w/z/out");
  return guarded([&] {
    const hsb::JordanTriple t(r, s);
    element_to(hsb::transvection(element_from(t, w), hsb::curvature_from_int(epsilon), element_from(t, z)), out);
  });
}

hsb_status hsb_tan_epsilon(int r, int s, int epsilon, const double* v, double* out) {
  if (!v || !out) return null_argument("v/out");
  return guarded([&] {
    const hsb::JordanTriple t(r, s);
    element_to(hsb::tan_epsilon(element_from(t, v), hsb::curvature_from_int(epsilon)), out);
  });
}

}  // extern "C"
