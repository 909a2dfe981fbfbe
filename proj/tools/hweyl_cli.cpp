// Command-line front end. Talks to the library only through hweyl.h.
#include <chrono>
#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hweyl/hweyl.h"

namespace {

using nlohmann::json;

// Exit codes.
constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kParseError = 2;
constexpr int kDimensionError = 3;
constexpr int kOtherError = 4;

struct ApiError {
  hw_status status;
  std::string message;
  long position;
};

void ok(hw_status s) {
  if (s != HW_OK) throw ApiError{s, hw_last_error_message(), hw_last_error_position()};
}

int exit_code_for(hw_status s) {
  switch (s) {
    case HW_ERR_PARSE: return kParseError;
    case HW_ERR_DIMENSION:
    case HW_ERR_INDEX: return kDimensionError;
    case HW_ERR_CLASSIFICATION: return kCheckFailed;
    default: return kOtherError;
  }
}

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using Poly = std::unique_ptr<hw_poly, Deleter<hw_poly, hw_poly_free>>;
using Twist = std::unique_ptr<hw_twist, Deleter<hw_twist, hw_twist_free>>;
using Images = std::unique_ptr<hw_images, Deleter<hw_images, hw_images_free>>;
using Series = std::unique_ptr<hw_series, Deleter<hw_series, hw_series_free>>;

std::string take(char* s) {
  std::string out(s);
  hw_string_free(s);
  return out;
}

std::string str(const hw_poly* p) {
  char* s = nullptr;
  ok(hw_poly_to_string(p, &s));
  return take(s);
}

std::string str(const hw_twist* k) {
  char* s = nullptr;
  ok(hw_twist_to_string(k, &s));
  return take(s);
}

std::string str(const hw_series* p) {
  char* s = nullptr;
  ok(hw_series_to_string(p, &s));
  return take(s);
}

json parse_json(char* s) { return json::parse(take(s)); }

template <class Handle, class Fn, class... Args>
Handle make(Fn fn, Args... args) {
  typename Handle::pointer raw = nullptr;
  ok(fn(args..., &raw));
  return Handle(raw);
}

// Options shared by every subcommand.
struct Common {
  std::optional<std::size_t> n;
  std::optional<std::string> k, k2;
  bool json = false;
  std::uint64_t seed = 20240917;
  unsigned degree_cap = 0;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--n", c.n, "number of generator pairs")->check(CLI::PositiveNumber);
  cmd->add_option("--k", c.k, "twist vector, comma-separated rationals (default all zero)");
  cmd->add_option("--k2", c.k2, "target twist vector for iso and morphism-check");
  cmd->add_flag("--json", c.json, "machine-readable output");
  cmd->add_option("--seed", c.seed, "seed for randomized suites");
  cmd->add_option("--degree-cap", c.degree_cap, "degree bound for randomized suites (0: defaults)");
}

class Session {
 public:
  Session(std::string command, const Common& c) : command_(std::move(command)), c_(c) {
    inputs_["n"] = nullptr;
    inputs_["k"] = c.k ? json(*c.k) : json(nullptr);
    if (c.k2) inputs_["k2"] = *c.k2;
  }

  Twist twist() {
    Twist k = c_.k ? make<Twist>(hw_twist_parse, c_.k->c_str()) : make<Twist>(hw_twist_zero, c_.n.value_or(1));
    std::size_t n = hw_twist_dim(k.get());
    if (c_.n && *c_.n != n)
      throw ApiError{HW_ERR_DIMENSION, "--k has " + std::to_string(n) + " entries but --n is " + std::to_string(*c_.n), -1};
    inputs_["n"] = n;
    return k;
  }

  Twist twist2(std::size_t n) {
    if (!c_.k2) throw ApiError{HW_ERR_ARGUMENT, "--k2 is required", -1};
    Twist k2 = make<Twist>(hw_twist_parse, c_.k2->c_str());
    if (hw_twist_dim(k2.get()) != n)
      throw ApiError{HW_ERR_DIMENSION, "--k2 must have " + std::to_string(n) + " entries", -1};
    return k2;
  }

  Poly poly(const std::string& text, const hw_twist* k) {
    inputs_["expressions"].push_back(text);
    return make<Poly>(hw_poly_parse, text.c_str(), k);
  }

  json& inputs() { return inputs_; }

  // Prints either the human lines or the JSON record; returns the exit code.
  int finish(bool passed, json payload, const std::vector<std::string>& lines) {
    if (c_.json) {
      json rec = {{"command", command_}, {"inputs", inputs_}, {"elapsed", elapsed()}, {"ok", passed}};
      for (auto& [key, value] : payload.items()) rec[key] = value;
      std::cout << rec.dump(2) << "\n";
    } else {
      for (const auto& line : lines) std::cout << line << "\n";
    }
    return passed ? kOk : kCheckFailed;
  }

  int error(const ApiError& e) {
    if (c_.json) {
      json err = {{"status", hw_status_name(e.status)}, {"message", e.message}};
      err["position"] = e.position >= 0 ? json(e.position) : json(nullptr);
      json rec = {{"command", command_}, {"inputs", inputs_}, {"error", err}, {"elapsed", elapsed()}, {"ok", false}};
      std::cout << rec.dump(2) << "\n";
    }
    std::cerr << "error: " << e.message;
    if (e.position >= 0) std::cerr << " (at offset " << e.position << ")";
    std::cerr << "\n";
    return exit_code_for(e.status);
  }

 private:
  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

  std::string command_;
  const Common& c_;
  json inputs_ = json::object();
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::string image_lines(const hw_images* phi, const char* name) {
  std::string out;
  std::size_t n = hw_images_dim(phi);
  for (char which : {'x', 'y'}) {
    for (std::size_t i = 1; i <= n; ++i) {
      Poly img = make<Poly>(hw_images_get, phi, which, i);
      out += std::string(name) + "(" + which + std::to_string(i) + ") = " + str(img.get()) + "\n";
    }
  }
  return out;
}

json image_json(const hw_images* phi) {
  json out = {{"x", json::array()}, {"y", json::array()}};
  std::size_t n = hw_images_dim(phi);
  for (char which : {'x', 'y'})
    for (std::size_t i = 1; i <= n; ++i)
      out[std::string(1, which)].push_back(str(make<Poly>(hw_images_get, phi, which, i).get()));
  return out;
}

std::vector<std::size_t> parse_positions(const std::string& csv) {
  std::vector<std::size_t> out;
  std::stringstream in(csv);
  for (std::string item; std::getline(in, item, ',');) {
    try {
      std::size_t used = 0;
      long v = std::stol(item, &used);
      if (used != item.size() || v < 1) throw std::invalid_argument(item);
      out.push_back(static_cast<std::size_t>(v));
    } catch (const std::logic_error&) {
      throw ApiError{HW_ERR_PARSE, "bad position '" + item + "'", -1};
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hom-associative Weyl algebras A_n^k over the rationals"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(hw_version()));

  Common c;
  std::vector<std::string> exprs;
  long power = 1;
  bool star_bracket = false, inverse = false;
  std::string op = "star";
  std::optional<std::string> positions, at;
  double scale = 1.0;

  auto sub = [&](const char* name, const char* help) {
    CLI::App* cmd = app.add_subcommand(name, help);
    add_common(cmd, c);
    return cmd;
  };

  auto* mul = sub("mul", "associative product in A_n, left to right");
  mul->add_option("expr", exprs)->required()->expected(1, -1);
  auto* star = sub("star", "product a*b = alpha_k(ab) of A_n^k, left to right");
  star->add_option("expr", exprs)->required()->expected(1, -1);
  auto* twist = sub("twist", "apply alpha_k (or a power of it)");
  twist->add_option("expr", exprs)->required()->expected(1);
  twist->add_option("--power", power, "exponent i of alpha_k^i, may be negative");
  auto* comm = sub("commutator", "[a, b] = ab - ba (or a*b - b*a with --star)");
  comm->add_option("expr", exprs)->required()->expected(2);
  comm->add_flag("--star", star_bracket, "use the star product");
  auto* assoc = sub("associator", "(a*b)*c - a*(b*c) in A_n^k");
  assoc->add_option("expr", exprs)->required()->expected(3);
  auto* homassoc = sub("homassoc-check", "alpha(a)*(b*c) - (a*b)*alpha(c)");
  homassoc->add_option("expr", exprs)->required()->expected(3);
  auto* reduce = sub("reduce", "commutator steps taking p to a nonzero scalar");
  reduce->add_option("expr", exprs)->required()->expected(1);
  auto* deriv = sub("derivation-check", "is ad_p a derivation of A_n^k?");
  deriv->add_option("expr", exprs)->required()->expected(1);
  auto* iso = sub("iso", "isomorphism A_n^k -> A_n^k2");
  iso->add_flag("--inverse", inverse, "print the inverse instead");
  auto* morph = sub("morphism-check", "check generator images x1..xn y1..yn as a map A_n^k -> A_n^k2");
  morph->add_option("images", exprs, "images of x1..xn then y1..yn")->required();
  auto* deform = sub("deform", "formal deformation in parameters t1..tm");
  deform->add_option("expr", exprs)->required()->expected(1, 2);
  deform->add_option("--op", op, "star, bracket or twist")->check(CLI::IsMember({"star", "bracket", "twist"}));
  deform->add_option("--positions", positions, "y indices carrying t1..tm (default: support of k)");
  deform->add_option("--at", at, "specialize at these parameter values");
  auto* selftest = sub("selftest", "run the randomized property suites");
  selftest->add_option("--scale", scale, "multiply case counts")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParseError;
  }

  CLI::App* cmd = app.get_subcommands().front();
  Session s(cmd->get_name(), c);
  try {
    if (cmd == mul || cmd == star) {
      Twist k = s.twist();
      Poly acc = s.poly(exprs[0], k.get());
      for (std::size_t i = 1; i < exprs.size(); ++i) {
        Poly next = s.poly(exprs[i], k.get());
        acc = cmd == mul ? make<Poly>(hw_mul, acc.get(), next.get())
                         : make<Poly>(hw_star, k.get(), acc.get(), next.get());
      }
      std::string r = str(acc.get());
      return s.finish(true, {{"result", r}}, {r});
    }
    if (cmd == twist) {
      Twist k = s.twist();
      Poly p = s.poly(exprs[0], k.get());
      s.inputs()["power"] = power;
      std::string r = str(make<Poly>(hw_twist_apply, k.get(), power, p.get()).get());
      return s.finish(true, {{"result", r}}, {r});
    }
    if (cmd == comm) {
      Twist k = s.twist();
      Poly a = s.poly(exprs[0], k.get()), b = s.poly(exprs[1], k.get());
      s.inputs()["star"] = star_bracket;
      Poly r = star_bracket ? make<Poly>(hw_commutator_star, k.get(), a.get(), b.get())
                            : make<Poly>(hw_commutator, a.get(), b.get());
      std::string text = str(r.get());
      return s.finish(true, {{"result", text}}, {text});
    }
    if (cmd == assoc || cmd == homassoc) {
      Twist k = s.twist();
      Poly a = s.poly(exprs[0], k.get()), b = s.poly(exprs[1], k.get()), cc = s.poly(exprs[2], k.get());
      if (cmd == assoc) {
        std::string r = str(make<Poly>(hw_associator_star, k.get(), a.get(), b.get(), cc.get()).get());
        return s.finish(true, {{"result", r}}, {r});
      }
      Poly d = make<Poly>(hw_hom_assoc_defect, k.get(), a.get(), b.get(), cc.get());
      bool zero = hw_poly_is_zero(d.get());
      std::string text = str(d.get());
      return s.finish(zero, {{"defects", {{"hom_assoc", text}}}},
                      {std::string(zero ? "hom-associative: defect 0" : "NOT hom-associative: defect " + text)});
    }
    if (cmd == reduce) {
      Twist k = s.twist();
      Poly p = s.poly(exprs[0], k.get());
      char* raw = nullptr;
      ok(hw_reduce_json(k.get(), p.get(), &raw));
      json r = parse_json(raw);
      std::vector<std::string> lines{str(p.get())};
      for (const auto& step : r["steps"])
        lines.push_back("  " + step["step"].get<std::string>() + " -> " + step["result"].get<std::string>());
      lines.push_back("scalar: " + r["scalar"].get<std::string>() + " (" + std::to_string(r["steps"].size()) +
                      " steps)");
      return s.finish(true, {{"result", r}}, lines);
    }
    if (cmd == deriv) {
      Twist k = s.twist();
      Poly p = s.poly(exprs[0], k.get());
      char* raw = nullptr;
      int is_der = 0;
      ok(hw_derivation_check_json(k.get(), p.get(), &is_der, &raw));
      json r = parse_json(raw);
      std::vector<std::string> lines{std::string("ad_p ") + (is_der ? "is" : "is NOT") + " a derivation of A_n^k"};
      for (const auto& d : r["defects"])
        if (!d["passed"].get<bool>())
          lines.push_back("  defect on " + d["id"].get<std::string>() + ": " + d["defect"].get<std::string>());
      if (!r["agree"].get<bool>()) lines.push_back("  WARNING: generator test disagrees");
      return s.finish(is_der && r["agree"].get<bool>(), {{"result", r}}, lines);
    }
    if (cmd == iso) {
      Twist k = s.twist();
      Twist k2 = s.twist2(hw_twist_dim(k.get()));
      s.inputs()["inverse"] = inverse;
      Images phi = make<Images>(hw_iso, k.get(), k2.get());
      Images inv = make<Images>(hw_inverse_iso, k.get(), k2.get());
      std::string text = inverse ? image_lines(inv.get(), "φ′") : image_lines(phi.get(), "φ");
      return s.finish(true, {{"result", {{"phi", image_json(phi.get())}, {"inverse", image_json(inv.get())}}}},
                      lines_of(text));
    }
    if (cmd == morph) {
      Twist k = s.twist();
      std::size_t n = hw_twist_dim(k.get());
      Twist k2 = s.twist2(n);
      if (exprs.size() != 2 * n)
        throw ApiError{HW_ERR_DIMENSION, "expected " + std::to_string(2 * n) + " images, got " +
                                             std::to_string(exprs.size()), -1};
      std::vector<Poly> polys;
      for (const auto& e : exprs) polys.push_back(s.poly(e, k2.get()));
      std::vector<const hw_poly*> xs, ys;
      for (std::size_t i = 0; i < n; ++i) {
        xs.push_back(polys[i].get());
        ys.push_back(polys[n + i].get());
      }
      Images phi = make<Images>(hw_images_new, n, xs.data(), ys.data());
      char* raw = nullptr;
      int accepted = 0, agree = 0;
      ok(hw_morphism_check_json(k.get(), k2.get(), phi.get(), &accepted, &agree, &raw));
      json r = parse_json(raw);
      std::vector<std::string> lines{std::string(accepted ? "hom-morphism" : "NOT a hom-morphism")};
      for (const char* part : {"relations", "equations"}) {
        const json& rep = r[part];
        if (!rep["structural_rejection"].is_null())
          lines.push_back(std::string("  ") + part + ": rejected, " + rep["structural_rejection"].get<std::string>());
        for (const auto& chk : rep["checks"])
          if (!chk["passed"].get<bool>())
            lines.push_back(std::string("  ") + part + " " + chk["id"].get<std::string>() + ": " +
                            chk["defect"].get<std::string>());
      }
      if (!agree) lines.push_back("  WARNING: the equation-set checker disagrees with the relation checker");
      return s.finish(accepted && agree, {{"defects", r}}, lines);
    }
    if (cmd == deform) {
      Twist k = s.twist();
      std::vector<std::size_t> pos;
      if (positions) {
        pos = parse_positions(*positions);
      } else {
        std::stringstream in(str(k.get()));
        std::size_t i = 0;
        for (std::string item; std::getline(in, item, ',');) {
          ++i;
          if (item != "0") pos.push_back(i);
        }
      }
      s.inputs()["op"] = op;
      s.inputs()["positions"] = pos;
      Poly a = s.poly(exprs[0], k.get());
      std::optional<Poly> b;
      if (op == "twist") {
        if (exprs.size() != 1) throw ApiError{HW_ERR_ARGUMENT, "--op twist takes one expression", -1};
      } else {
        if (exprs.size() != 2) throw ApiError{HW_ERR_ARGUMENT, "--op " + op + " takes two expressions", -1};
        b = s.poly(exprs[1], k.get());
      }
      Series series = op == "twist"  ? make<Series>(hw_deform_twist, a.get(), pos.data(), pos.size())
                      : op == "star" ? make<Series>(hw_deform_star, a.get(), b->get(), pos.data(), pos.size())
                                     : make<Series>(hw_deform_bracket, a.get(), b->get(), pos.data(), pos.size());
      char* raw = nullptr;
      ok(hw_series_terms_json(series.get(), &raw));
      json result = {{"series", str(series.get())}, {"terms", parse_json(raw)}};
      std::vector<std::string> lines{str(series.get())};
      if (at) {
        s.inputs()["at"] = *at;
        std::vector<std::string> values;
        std::stringstream in(*at);
        for (std::string item; std::getline(in, item, ',');) values.push_back(item);
        std::vector<const char*> ptrs;
        for (const auto& v : values) ptrs.push_back(v.c_str());
        std::string sp = str(make<Poly>(hw_series_specialize, series.get(), ptrs.data(), ptrs.size()).get());
        result["specialized"] = sp;
        lines.push_back("at (" + *at + "): " + sp);
      }
      return s.finish(true, {{"result", result}}, lines);
    }
    if (cmd == selftest) {
      s.inputs()["seed"] = c.seed;
      s.inputs()["degree_cap"] = c.degree_cap;
      s.inputs()["scale"] = scale;
      char* raw = nullptr;
      int all = 0;
      ok(hw_selftest_json(c.seed, c.degree_cap, scale, &all, &raw));
      json r = parse_json(raw);
      std::vector<std::string> lines;
      for (const auto& suite : r) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%6zu cases %8.2f s", suite["cases"].get<std::size_t>(),
                      suite["seconds"].get<double>());
        lines.push_back(std::string(suite["passed"].get<bool>() ? "[PASS] " : "[FAIL] ") +
                        suite["id"].get<std::string>() + "  " + buf + "  " + suite["detail"].get<std::string>());
      }
      return s.finish(all, {{"result", r}}, lines);
    }
  } catch (const ApiError& e) {
    return s.error(e);
  }
  return kOtherError;
}
