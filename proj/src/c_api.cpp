#include "hweyl/hweyl.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include <json.hpp>

#include "hweyl/checks.hpp"
#include "hweyl/deform.hpp"
#include "hweyl/errors.hpp"
#include "hweyl/expr.hpp"
#include "hweyl/homstar.hpp"
#include "hweyl/morphisms.hpp"
#include "hweyl/structure.hpp"
#include "hweyl/twist.hpp"

struct hw_poly {
  hweyl::WeylPoly value;
};
struct hw_twist {
  hweyl::TwistVector value;
};
struct hw_images {
  hweyl::GeneratorImages value;
};
struct hw_series {
  hweyl::ParamPoly value;
};

namespace {

using nlohmann::json;

thread_local std::string last_message;
thread_local long last_position = -1;

hw_status fail(hw_status s, const std::string& msg, long position = -1) {
  last_message = msg;
  last_position = position;
  return s;
}

class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

template <class T>
const T& need(const T* p, const char* what) {
  if (!p) throw ArgumentError(std::string("null ") + what);
  return *p;
}

template <class Body>
hw_status guarded(Body body) {
  last_message.clear();
  last_position = -1;
  try {
    body();
    return HW_OK;
  } catch (const hweyl::ParseError& e) {
    return fail(HW_ERR_PARSE, e.what(), static_cast<long>(e.position()));
  } catch (const hweyl::DimensionError& e) {
    return fail(HW_ERR_DIMENSION, e.what());
  } catch (const hweyl::IndexError& e) {
    return fail(HW_ERR_INDEX, e.what());
  } catch (const hweyl::ClassificationError& e) {
    return fail(HW_ERR_CLASSIFICATION, e.what());
  } catch (const hweyl::StructureError& e) {
    return fail(HW_ERR_STRUCTURE, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(HW_ERR_ARGUMENT, e.what());
  } catch (const std::out_of_range& e) {
    return fail(HW_ERR_INDEX, e.what());
  } catch (const std::exception& e) {
    return fail(HW_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(HW_ERR_INTERNAL, "unknown error");
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class T>
void put(T** out, T* value) {
  if (!out) {
    delete value;
    throw ArgumentError("null out-parameter");
  }
  *out = value;
}

void put_string(char** out, const std::string& s) {
  if (!out) throw ArgumentError("null out-parameter");
  *out = dup(s);
}

hw_poly* wrap(hweyl::WeylPoly p) { return new hw_poly{std::move(p)}; }

json defects_json(const std::vector<hweyl::EquationCheck>& checks) {
  json out = json::array();
  for (const auto& c : checks)
    out.push_back({{"id", c.id}, {"passed", c.passed()}, {"defect", hweyl::format(c.defect)}});
  return out;
}

json report_json(const hweyl::MorphismReport& r) {
  json out = {{"accepted", r.accepted()}, {"checks", defects_json(r.checks)}};
  out["structural_rejection"] = r.structural_rejection ? json(*r.structural_rejection) : json(nullptr);
  return out;
}

hweyl::ParamMap param_map(const hw_poly* a, const size_t* positions, size_t m) {
  if (m > 0 && !positions) throw ArgumentError("null positions");
  return hweyl::ParamMap(std::vector<std::size_t>(positions, positions + m), need(a, "polynomial").value.dim());
}

}  // namespace

extern "C" {

const char* hw_version(void) { return "1.0.0"; }

const char* hw_status_name(hw_status status) {
  switch (status) {
    case HW_OK: return "ok";
    case HW_CHECK_FAILED: return "check_failed";
    case HW_ERR_PARSE: return "parse_error";
    case HW_ERR_DIMENSION: return "dimension_error";
    case HW_ERR_INDEX: return "index_error";
    case HW_ERR_CLASSIFICATION: return "classification_error";
    case HW_ERR_STRUCTURE: return "structure_error";
    case HW_ERR_ARGUMENT: return "argument_error";
    case HW_ERR_INTERNAL: return "internal_error";
  }
  return "unknown";
}

const char* hw_last_error_message(void) { return last_message.c_str(); }
long hw_last_error_position(void) { return last_position; }
void hw_string_free(char* s) { std::free(s); }

hw_status hw_twist_parse(const char* text, hw_twist** out) {
  return guarded([&] {
    need(text, "text");
    put(out, new hw_twist{hweyl::TwistVector::parse(text)});
  });
}

hw_status hw_twist_zero(size_t n, hw_twist** out) {
  return guarded([&] {
    if (n == 0) throw hweyl::DimensionError("dimension must be positive");
    put(out, new hw_twist{hweyl::TwistVector::zero(n)});
  });
}

void hw_twist_free(hw_twist* k) { delete k; }
size_t hw_twist_dim(const hw_twist* k) { return k ? k->value.dim() : 0; }
size_t hw_twist_nonzero_count(const hw_twist* k) { return k ? k->value.nonzero_count() : 0; }

hw_status hw_twist_to_string(const hw_twist* k, char** out) {
  return guarded([&] { put_string(out, hweyl::to_string(need(k, "twist").value)); });
}

hw_status hw_poly_parse(const char* text, const hw_twist* k, hw_poly** out) {
  return guarded([&] {
    need(text, "text");
    put(out, wrap(hweyl::parse_poly(text, need(k, "twist").value)));
  });
}

void hw_poly_free(hw_poly* p) { delete p; }
size_t hw_poly_dim(const hw_poly* p) { return p ? p->value.dim() : 0; }
int hw_poly_is_zero(const hw_poly* p) { return p && p->value.is_zero(); }
int hw_poly_equal(const hw_poly* a, const hw_poly* b) { return a && b && a->value == b->value; }

hw_status hw_poly_to_string(const hw_poly* p, char** out) {
  return guarded([&] { put_string(out, hweyl::format(need(p, "polynomial").value)); });
}

hw_status hw_mul(const hw_poly* a, const hw_poly* b, hw_poly** out) {
  return guarded([&] { put(out, wrap(hweyl::mul_assoc(need(a, "a").value, need(b, "b").value))); });
}

hw_status hw_star(const hw_twist* k, const hw_poly* a, const hw_poly* b, hw_poly** out) {
  return guarded(
      [&] { put(out, wrap(hweyl::star(need(k, "twist").value, need(a, "a").value, need(b, "b").value))); });
}

hw_status hw_twist_apply(const hw_twist* k, long power, const hw_poly* p, hw_poly** out) {
  return guarded([&] {
    const auto& kv = need(k, "twist").value;
    const auto& pv = need(p, "polynomial").value;
    hweyl::require_same_dim(kv, pv);
    put(out, wrap(hweyl::twist_power(kv, power, pv)));
  });
}

hw_status hw_commutator(const hw_poly* a, const hw_poly* b, hw_poly** out) {
  return guarded([&] { put(out, wrap(hweyl::commutator(need(a, "a").value, need(b, "b").value))); });
}

hw_status hw_commutator_star(const hw_twist* k, const hw_poly* a, const hw_poly* b, hw_poly** out) {
  return guarded([&] {
    put(out, wrap(hweyl::commutator_star(need(k, "twist").value, need(a, "a").value, need(b, "b").value)));
  });
}

hw_status hw_associator_star(const hw_twist* k, const hw_poly* a, const hw_poly* b, const hw_poly* c,
                             hw_poly** out) {
  return guarded([&] {
    put(out, wrap(hweyl::associator_star(need(k, "twist").value, need(a, "a").value, need(b, "b").value,
                                         need(c, "c").value)));
  });
}

hw_status hw_hom_assoc_defect(const hw_twist* k, const hw_poly* a, const hw_poly* b, const hw_poly* c,
                              hw_poly** out) {
  return guarded([&] {
    put(out, wrap(hweyl::hom_assoc_defect(need(k, "twist").value, need(a, "a").value, need(b, "b").value,
                                          need(c, "c").value)));
  });
}

hw_status hw_reduce_json(const hw_twist* k, const hw_poly* p, char** json_out) {
  return guarded([&] {
    const auto& kv = need(k, "twist").value;
    const auto& pv = need(p, "polynomial").value;
    hweyl::require_same_dim(kv, pv);
    hweyl::Reduction red = hweyl::reduce_to_scalar(kv, pv);
    json steps = json::array();
    hweyl::WeylPoly cur = pv;
    for (const auto& step : red.trace) {
      cur = hweyl::apply_step(kv, step, cur);
      steps.push_back({{"step", hweyl::to_string(step)}, {"result", hweyl::format(cur)}});
    }
    put_string(json_out, json{{"steps", steps}, {"scalar", hweyl::to_string(red.scalar)}}.dump());
  });
}

hw_status hw_derivation_check_json(const hw_twist* k, const hw_poly* p, int* is_derivation, char** json_out) {
  return guarded([&] {
    const auto& kv = need(k, "twist").value;
    const auto& pv = need(p, "polynomial").value;
    hweyl::require_same_dim(kv, pv);
    bool structural = hweyl::is_hom_derivation(kv, pv);
    auto defects = hweyl::derivation_defect_on_generators(kv, pv);
    const std::size_t n = kv.dim();
    json list = json::array();
    for (std::size_t i = 0; i < defects.size(); ++i) {
      std::string id = i == 0 ? "unit" : i <= n ? "x" + std::to_string(i) : "y" + std::to_string(i - n);
      list.push_back({{"id", id}, {"passed", defects[i].is_zero()}, {"defect", hweyl::format(defects[i])}});
    }
    bool generators = hweyl::all_zero(defects);
    json out = {{"structural", structural}, {"generators", generators}, {"agree", structural == generators},
                {"defects", list}};
    if (!is_derivation) throw ArgumentError("null out-parameter");
    put_string(json_out, out.dump());
    *is_derivation = structural;
  });
}

hw_status hw_iso(const hw_twist* k, const hw_twist* k2, hw_images** out) {
  return guarded([&] { put(out, new hw_images{hweyl::build_iso(need(k, "k").value, need(k2, "k2").value)}); });
}

hw_status hw_inverse_iso(const hw_twist* k, const hw_twist* k2, hw_images** out) {
  return guarded(
      [&] { put(out, new hw_images{hweyl::build_inverse_iso(need(k, "k").value, need(k2, "k2").value)}); });
}

hw_status hw_images_new(size_t n, const hw_poly* const* x, const hw_poly* const* y, hw_images** out) {
  return guarded([&] {
    if (n == 0) throw hweyl::DimensionError("dimension must be positive");
    if (!x || !y) throw ArgumentError("null image array");
    std::vector<hweyl::WeylPoly> xs, ys;
    for (size_t i = 0; i < n; ++i) {
      xs.push_back(need(x[i], "image").value);
      ys.push_back(need(y[i], "image").value);
    }
    put(out, new hw_images{hweyl::GeneratorImages(std::move(xs), std::move(ys))});
  });
}

void hw_images_free(hw_images* phi) { delete phi; }
size_t hw_images_dim(const hw_images* phi) { return phi ? phi->value.n : 0; }

hw_status hw_images_get(const hw_images* phi, char which, size_t index, hw_poly** out) {
  return guarded([&] {
    const auto& v = need(phi, "images").value;
    hweyl::require_index(index, v.n, "image");
    if (which != 'x' && which != 'y') throw ArgumentError("generator kind must be 'x' or 'y'");
    put(out, wrap(which == 'x' ? v.x_img[index - 1] : v.y_img[index - 1]));
  });
}

hw_status hw_apply_morphism(const hw_images* phi, const hw_poly* p, hw_poly** out) {
  return guarded([&] { put(out, wrap(hweyl::apply_morphism(need(phi, "images").value, need(p, "p").value))); });
}

hw_status hw_morphism_check_json(const hw_twist* k, const hw_twist* k2, const hw_images* phi, int* accepted,
                                 int* agree, char** json_out) {
  return guarded([&] {
    const auto& kv = need(k, "k").value;
    const auto& k2v = need(k2, "k2").value;
    const auto& images = need(phi, "images").value;
    if (kv.dim() != k2v.dim() || kv.dim() != images.n)
      throw hweyl::DimensionError("k, k2 and the images must share one dimension");
    auto relations = hweyl::check_relations_and_intertwine(kv, k2v, images);
    auto equations = hweyl::check_hom_constraints(kv, k2v, images);
    bool same = relations.accepted() == equations.accepted();
    json out = {{"accepted", relations.accepted()},
                {"checkers_agree", same},
                {"relations", report_json(relations)},
                {"equations", report_json(equations)}};
    if (!accepted || !agree) throw ArgumentError("null out-parameter");
    put_string(json_out, out.dump());
    *accepted = relations.accepted();
    *agree = same;
  });
}

hw_status hw_deform_star(const hw_poly* a, const hw_poly* b, const size_t* positions, size_t m, hw_series** out) {
  return guarded([&] {
    auto pm = param_map(a, positions, m);
    put(out, new hw_series{hweyl::deform_star(a->value, need(b, "b").value, pm)});
  });
}

hw_status hw_deform_bracket(const hw_poly* a, const hw_poly* b, const size_t* positions, size_t m,
                            hw_series** out) {
  return guarded([&] {
    auto pm = param_map(a, positions, m);
    put(out, new hw_series{hweyl::deform_bracket(a->value, need(b, "b").value, pm)});
  });
}

hw_status hw_deform_twist(const hw_poly* a, const size_t* positions, size_t m, hw_series** out) {
  return guarded([&] {
    auto pm = param_map(a, positions, m);
    put(out, new hw_series{hweyl::deform_twist(a->value, pm)});
  });
}

void hw_series_free(hw_series* s) { delete s; }

hw_status hw_series_to_string(const hw_series* s, char** out) {
  return guarded([&] { put_string(out, hweyl::format(need(s, "series").value)); });
}

hw_status hw_series_terms_json(const hw_series* s, char** json_out) {
  return guarded([&] {
    json terms = json::array();
    for (const auto& [index, coeff] : need(s, "series").value.terms())
      terms.push_back({{"order", index}, {"coefficient", hweyl::format(coeff)}});
    put_string(json_out, terms.dump());
  });
}

hw_status hw_series_specialize(const hw_series* s, const char* const* values, size_t m, hw_poly** out) {
  return guarded([&] {
    const auto& series = need(s, "series").value;
    if (m > 0 && !values) throw ArgumentError("null values");
    std::vector<hweyl::Rational> v;
    for (size_t i = 0; i < m; ++i) {
      need(values[i], "value");
      v.push_back(hweyl::parse_rational(values[i]));
    }
    put(out, wrap(hweyl::specialize(series, v)));
  });
}

hw_status hw_selftest_json(uint64_t seed, unsigned degree_cap, double count_scale, int* all_passed,
                           char** json_out) {
  return guarded([&] {
    if (!all_passed) throw ArgumentError("null out-parameter");
    if (!(count_scale > 0)) throw ArgumentError("count scale must be positive");
    hweyl::SuiteOptions opt;
    opt.seed = seed;
    if (degree_cap > 0) opt.degree_cap = degree_cap;
    opt.count_scale = count_scale;
    json list = json::array();
    bool ok = true;
    for (const auto& r : hweyl::run_all_suites(opt)) {
      ok = ok && r.passed;
      list.push_back({{"id", r.id},
                      {"title", r.title},
                      {"passed", r.passed},
                      {"cases", r.cases},
                      {"seconds", r.seconds},
                      {"detail", r.detail}});
    }
    put_string(json_out, list.dump());
    *all_passed = ok;
  });
}

}  // extern "C"
