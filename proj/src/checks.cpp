#include "hweyl/checks.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <future>
#include <map>
#include <numeric>

#include "hweyl/deform.hpp"
#include "hweyl/errors.hpp"
#include "hweyl/expr.hpp"
#include "hweyl/free_word.hpp"
#include "hweyl/homstar.hpp"
#include "hweyl/morphisms.hpp"
#include "hweyl/random.hpp"
#include "hweyl/structure.hpp"
#include "hweyl/twist.hpp"

namespace hweyl {
namespace {

class Tally {
 public:
  void pass() { ++cases_; }
  void fail(const std::string& what) {
    ++cases_;
    ++failures_;
    if (first_.empty()) first_ = what;
  }
  void expect(bool ok, const std::function<std::string()>& what) {
    if (ok)
      pass();
    else
      fail(what());
  }

  std::size_t cases() const { return cases_; }
  bool ok() const { return failures_ == 0; }
  std::string detail(const std::string& summary) const {
    return ok() ? summary : std::to_string(failures_) + " failure(s); first: " + first_;
  }

 private:
  std::size_t cases_ = 0, failures_ = 0;
  std::string first_;
};

std::size_t scaled(const SuiteOptions& opt, std::size_t count) {
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(count * opt.count_scale)));
}

unsigned degree(const SuiteOptions& opt, unsigned fallback) { return opt.degree_cap.value_or(fallback); }

template <class Body>
SuiteResult timed(const char* id, const char* title, Body body) {
  auto start = std::chrono::steady_clock::now();
  SuiteResult r;
  r.id = id;
  r.title = title;
  try {
    body(r);
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

void finish(SuiteResult& r, const Tally& t, const std::string& summary) {
  r.passed = t.ok();
  r.cases = t.cases();
  r.detail = t.detail(summary);
}

std::string show(const WeylPoly& p) { return format(p); }

// All words over {x_1..x_n, y_1..y_n} of exactly the given length.
std::vector<FreeWord> words_of_length(std::size_t n, std::size_t length) {
  std::vector<FreeWord> out{FreeWord{}};
  for (std::size_t step = 0; step < length; ++step) {
    std::vector<FreeWord> next;
    for (const auto& w : out) {
      for (std::size_t i = 1; i <= n; ++i) {
        FreeWord a = w, b = w;
        a.push_back(Letter::X(i));
        b.push_back(Letter::Y(i));
        next.push_back(std::move(a));
        next.push_back(std::move(b));
      }
    }
    out = std::move(next);
  }
  return out;
}

// Product of the letters of w computed with mul_assoc only.
WeylPoly fold_word(std::size_t n, const FreeWord& w) {
  WeylPoly acc = WeylPoly::one(n);
  for (const auto& l : w) {
    if (l.kind == Letter::Kind::x)
      acc = acc * WeylPoly::x(n, l.index);
    else if (l.kind == Letter::Kind::y)
      acc = acc * WeylPoly::y(n, l.index);
    else
      acc = scale(l.value, acc);
  }
  return acc;
}

WeylPoly lowest_degree_part(const WeylPoly& p) {
  WeylPoly out(p.dim());
  if (p.is_zero()) return out;
  Exponent lowest = p.terms().rbegin()->first.total_degree();
  for (const auto& [m, c] : p.terms())
    if (m.total_degree() == lowest) out.add_term(m, c);
  return out;
}

WeylPoly yx(std::size_t n, std::size_t l) { return WeylPoly::y(n, l) * WeylPoly::x(n, l); }

// Random element of the form sum_{k_i != 0} f_i y_i + q(y_{zero set}, x).
WeylPoly random_derivation_generator(RandomSource& rng, const TwistVector& k, unsigned max_degree) {
  const std::size_t n = k.dim();
  WeylPoly p(n);
  for (std::size_t i : k.support())
    if (rng.uniform(0, 1)) p += scale(rng.nonzero_rational(), WeylPoly::y(n, i));
  WeylPoly q = rng.poly(n, max_degree);
  for (const auto& [m, c] : q.terms()) {
    Monomial mm = m;
    for (std::size_t i : k.support()) mm.y[i - 1] = 0;
    p.add_term(mm, c);
  }
  return p;
}

}  // namespace

SuiteResult suite_oracle_equivalence(const SuiteOptions& opt) {
  return timed("oracle", "mul_assoc agrees with the free-word rewriting oracle", [&](SuiteResult& r) {
    Tally t;
    const std::size_t max_len = 6;
    for (std::size_t n : {1u, 2u}) {
      std::vector<std::vector<FreeWord>> by_len;
      std::vector<std::vector<WeylPoly>> folded;
      for (std::size_t len = 0; len <= max_len; ++len) {
        by_len.push_back(words_of_length(n, len));
        folded.emplace_back();
        for (const auto& w : by_len.back()) folded.back().push_back(fold_word(n, w));
      }
      for (std::size_t l1 = 0; l1 <= max_len; ++l1) {
        for (std::size_t l2 = 0; l1 + l2 <= max_len; ++l2) {
          for (std::size_t a = 0; a < by_len[l1].size(); ++a) {
            for (std::size_t b = 0; b < by_len[l2].size(); ++b) {
              WeylPoly lhs = mul_assoc(folded[l1][a], folded[l2][b]);
              WeylPoly rhs = oracle_mul(n, by_len[l1][a], by_len[l2][b]);
              t.expect(lhs == rhs, [&] { return "n=" + std::to_string(n) + ": " + show(lhs) + " != " + show(rhs); });
            }
          }
        }
      }
    }
    RandomSource rng(opt.seed);
    const std::size_t n = 3;
    for (std::size_t c = 0; c < scaled(opt, 500); ++c) {
      WeylPoly p = rng.poly(n, degree(opt, 3)), q = rng.poly(n, degree(opt, 3));
      WeylPoly rhs(n);
      for (const auto& [m1, c1] : p.terms())
        for (const auto& [m2, c2] : q.terms()) rhs += scale(c1 * c2, oracle_mul(n, word_of(m1), word_of(m2)));
      WeylPoly lhs = mul_assoc(p, q);
      t.expect(lhs == rhs, [&] { return "n=3 random: (" + show(p) + ")(" + show(q) + ")"; });
    }
    finish(r, t, "all word pairs of length <= 6 for n = 1, 2 and random n = 3 pairs agree");
  });
}

SuiteResult suite_hom_associativity(const SuiteOptions& opt) {
  return timed("hom_assoc", "hom-associativity alpha(a)*(b*c) = (a*b)*alpha(c)", [&](SuiteResult& r) {
    Tally t;
    RandomSource rng(opt.seed + 1);
    for (std::size_t n : {1u, 2u, 3u}) {
      for (TwistPattern pattern : {TwistPattern::all_zero, TwistPattern::one_nonzero, TwistPattern::all_nonzero}) {
        TwistVector k = rng.twist(n, pattern);
        for (std::size_t c = 0; c < scaled(opt, 200); ++c) {
          unsigned d = degree(opt, 4);
          WeylPoly a = rng.poly(n, d, 3), b = rng.poly(n, d, 3), cc = rng.poly(n, d, 3);
          WeylPoly defect = hom_assoc_defect(k, a, b, cc);
          t.expect(defect.is_zero(), [&] {
            return "k=(" + to_string(k) + ") a=" + show(a) + " b=" + show(b) + " c=" + show(cc) +
                   " defect=" + show(defect);
          });
        }
      }
    }
    finish(r, t, "zero defect for every configuration");
  });
}

SuiteResult suite_twist_laws(const SuiteOptions& opt) {
  return timed("twist", "shift = exponential, alpha_k^i = alpha_ik, sequential = simultaneous shifts",
               [&](SuiteResult& r) {
                 Tally t;
                 RandomSource rng(opt.seed + 2);
                 const unsigned d = degree(opt, 4);
                 for (std::size_t c = 0; c < scaled(opt, 100); ++c) {
                   std::size_t n = rng.uniform(1, 3);
                   TwistVector k = rng.twist(n, TwistPattern::mixed);
                   WeylPoly p = rng.poly(n, d);
                   t.expect(apply_twist(k, p) == twist_via_exp(k, p),
                            [&] { return "exp form differs for k=(" + to_string(k) + ") p=" + show(p); });
                 }
                 for (std::size_t c = 0; c < scaled(opt, 100); ++c) {
                   std::size_t n = rng.uniform(1, 3);
                   TwistVector k = rng.twist(n, TwistPattern::mixed);
                   WeylPoly p = rng.poly(n, d);
                   bool ok = true;
                   for (long i = -3; i <= 3 && ok; ++i) {
                     // alpha_k applied |i| times (alpha_{-k} for negative i).
                     WeylPoly iterated = p;
                     TwistVector step = i < 0 ? k.scaled(-1) : k;
                     for (long s = 0; s < std::labs(i); ++s) iterated = apply_twist(step, iterated);
                     ok = iterated == twist_power(k, i, p);
                     for (long j = -3; j <= 3 && ok; ++j)
                       ok = twist_power(k, i, twist_power(k, j, p)) == twist_power(k, i + j, p);
                   }
                   t.expect(ok, [&] { return "power law fails for k=(" + to_string(k) + ") p=" + show(p); });
                 }
                 for (std::size_t c = 0; c < scaled(opt, 100); ++c) {
                   std::size_t n = rng.uniform(1, 3);
                   TwistVector k = rng.twist(n, TwistPattern::all_nonzero);
                   WeylPoly p = rng.poly(n, d);
                   std::vector<std::size_t> order(n);
                   std::iota(order.begin(), order.end(), 1);
                   std::shuffle(order.begin(), order.end(), rng.engine());
                   WeylPoly seq = p;
                   for (std::size_t i : order) seq = shift_single(i, k[i], seq);
                   t.expect(seq == apply_twist(k, p),
                            [&] { return "sequential shifts differ for k=(" + to_string(k) + ") p=" + show(p); });
                 }
                 finish(r, t, "all three laws hold on every sample");
               });
}

SuiteResult suite_power_associativity(const SuiteOptions& opt) {
  return timed("power_assoc", "star-associator of (y_l x_l)^3 vanishes iff k_l = 0, lowest term k_l x_l",
               [&](SuiteResult& r) {
                 Tally t;
                 RandomSource rng(opt.seed + 3);
                 for (std::size_t n : {1u, 2u, 3u}) {
                   for (TwistPattern pattern : {TwistPattern::all_zero, TwistPattern::one_nonzero,
                                                TwistPattern::all_nonzero, TwistPattern::mixed}) {
                     TwistVector k = rng.twist(n, pattern);
                     for (std::size_t l = 1; l <= n; ++l) {
                       WeylPoly e = yx(n, l);
                       WeylPoly assoc = associator_star(k, e, e, e);
                       if (k[l] == 0) {
                         t.expect(assoc.is_zero(), [&] {
                           return "k=(" + to_string(k) + ") l=" + std::to_string(l) + ": nonzero associator";
                         });
                       } else {
                         WeylPoly low = lowest_degree_part(assoc);
                         WeylPoly want = scale(k[l], WeylPoly::x(n, l));
                         t.expect(low == want, [&] {
                           return "k=(" + to_string(k) + ") l=" + std::to_string(l) + ": lowest part " + show(low);
                         });
                       }
                     }
                   }
                   TwistVector zero = TwistVector::zero(n);
                   for (std::size_t c = 0; c < scaled(opt, 20); ++c) {
                     WeylPoly p = rng.poly(n, degree(opt, 3), 3);
                     t.expect(associator_star(zero, p, p, p).is_zero(),
                              [&] { return "k=0 associator nonzero for p=" + show(p); });
                   }
                 }
                 finish(r, t, "dichotomy confirmed");
               });
}

SuiteResult suite_simplicity(const SuiteOptions& opt) {
  return timed("simplicity", "reduce_to_scalar yields a nonzero scalar within total-degree steps",
               [&](SuiteResult& r) {
                 Tally t;
                 RandomSource rng(opt.seed + 4);
                 for (std::size_t n : {1u, 2u, 3u}) {
                   for (std::size_t c = 0; c < scaled(opt, 100); ++c) {
                     TwistVector k = rng.twist(n, TwistPattern::mixed);
                     WeylPoly p = rng.nonzero_poly(n, degree(opt, 4));
                     Reduction red = reduce_to_scalar(k, p);
                     bool ok = red.scalar != 0 && red.trace.size() <= total_degree(p).value() &&
                               replay_trace(k, red.trace, p) == WeylPoly::constant(n, red.scalar);
                     WeylPoly cur = p;
                     for (const auto& step : red.trace) {
                       if (!ok) break;
                       WeylPoly next = apply_step(k, step, cur);
                       ok = step.kind == ReductionStep::Kind::left_x
                                ? deg_y(next, step.index) < deg_y(cur, step.index)
                                : deg_x(next, step.index) < deg_x(cur, step.index);
                       cur = std::move(next);
                     }
                     t.expect(ok, [&] { return "k=(" + to_string(k) + ") p=" + show(p); });
                   }
                 }
                 finish(r, t, "every reduction sound");
               });
}

SuiteResult suite_derivations(const SuiteOptions& opt) {
  return timed("derivations", "structural derivation test agrees with generator intertwining", [&](SuiteResult& r) {
    Tally t;
    RandomSource rng(opt.seed + 5);
    const unsigned d = degree(opt, 3);
    std::size_t accepted = 0;
    for (std::size_t c = 0; c < scaled(opt, 200); ++c) {
      std::size_t n = rng.uniform(1, 3);
      TwistVector k = rng.twist(n, TwistPattern::mixed);
      WeylPoly p = rng.uniform(0, 1) ? random_derivation_generator(rng, k, d) : rng.poly(n, d);
      bool structural = is_hom_derivation(k, p);
      bool generators = all_zero(derivation_defect_on_generators(k, p));
      t.expect(structural == generators, [&] {
        return "k=(" + to_string(k) + ") p=" + show(p) + ": structural=" + (structural ? "yes" : "no");
      });
      if (!structural) continue;
      ++accepted;
      for (std::size_t s = 0; s < scaled(opt, 20); ++s) {
        WeylPoly a = rng.poly(n, 2, 3), b = rng.poly(n, 2, 3);
        WeylPoly lhs = ad(p, star(k, a, b));
        WeylPoly rhs = star(k, ad(p, a), b) + star(k, a, ad(p, b));
        t.expect(lhs == rhs, [&] { return "Leibniz fails for p=" + show(p) + " k=(" + to_string(k) + ")"; });
      }
    }
    for (std::size_t n : {1u, 2u, 3u}) {
      TwistVector k = rng.twist(n, TwistPattern::mixed);
      for (std::size_t l = 1; l <= n; ++l) {
        WeylPoly y = WeylPoly::y(n, l), y2 = y * y;
        bool lin_ok = is_hom_derivation(k, y) && all_zero(derivation_defect_on_generators(k, y));
        bool sq_rejected = !is_hom_derivation(k, y2) && !all_zero(derivation_defect_on_generators(k, y2));
        t.expect(lin_ok && sq_rejected == (k[l] != 0),
                 [&] { return "ad_y / ad_y^2 test fails for k=(" + to_string(k) + ") l=" + std::to_string(l); });
      }
    }
    finish(r, t, std::to_string(accepted) + " accepted candidates satisfied the star-Leibniz rule");
  });
}

namespace {

std::pair<TwistVector, TwistVector> random_iso_pair(RandomSource& rng) {
  std::size_t n = rng.uniform(1, 3);
  std::size_t nonzero = rng.uniform(0, n);
  auto make = [&] {
    std::vector<Rational> k(n, 0);
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::shuffle(idx.begin(), idx.end(), rng.engine());
    for (std::size_t i = 0; i < nonzero; ++i) k[idx[i]] = rng.nonzero_rational();
    return TwistVector(std::move(k));
  };
  TwistVector k = make();
  return {k, make()};
}

}  // namespace

SuiteResult suite_isomorphisms(const SuiteOptions& opt) {
  return timed("isomorphism", "classifying isomorphisms for equal nonzero counts", [&](SuiteResult& r) {
    Tally t;
    RandomSource rng(opt.seed + 6);
    for (std::size_t c = 0; c < scaled(opt, 20); ++c) {
      auto [k, k2] = random_iso_pair(rng);
      const std::size_t n = k.dim();
      GeneratorImages phi = build_iso(k, k2), inv = build_inverse_iso(k, k2);
      auto tag = [&] { return "k=(" + to_string(k) + ") k'=(" + to_string(k2) + ")"; };
      t.expect(check_relations_and_intertwine(k, k2, phi).accepted(), [&] { return tag() + ": relation check"; });
      t.expect(check_hom_constraints(k, k2, phi).accepted(), [&] { return tag() + ": equation check"; });
      t.expect(check_relations_and_intertwine(k2, k, inv).accepted(), [&] { return tag() + ": inverse check"; });
      GeneratorImages id = GeneratorImages::identity(n);
      GeneratorImages fi = compose(phi, inv), ifi = compose(inv, phi);
      t.expect(fi.x_img == id.x_img && fi.y_img == id.y_img && ifi.x_img == id.x_img && ifi.y_img == id.y_img,
               [&] { return tag() + ": inverse does not compose to identity"; });
      for (std::size_t s = 0; s < scaled(opt, 50); ++s) {
        WeylPoly a = rng.poly(n, 3, 3), b = rng.poly(n, 3, 3);
        WeylPoly lhs = apply_morphism(phi, star(k, a, b));
        WeylPoly rhs = star(k2, apply_morphism(phi, a), apply_morphism(phi, b));
        t.expect(lhs == rhs, [&] { return tag() + ": not multiplicative on " + show(a) + ", " + show(b); });
        t.expect(apply_morphism(inv, apply_morphism(phi, a)) == a, [&] { return tag() + ": round trip"; });
      }
    }
    // Unequal nonzero counts: no isomorphism, separated by ad_{y_l^2}.
    const std::size_t want = scaled(opt, 20);
    std::size_t unequal = 0;
    for (std::size_t tries = 0; unequal < want && tries < 100 * want; ++tries) {
      std::size_t n = rng.uniform(1, 3);
      TwistVector k = rng.twist(n, TwistPattern::mixed), k2 = rng.twist(n, TwistPattern::mixed);
      if (k.nonzero_count() == k2.nonzero_count()) continue;
      ++unequal;
      bool threw = false;
      try {
        build_iso(k, k2);
      } catch (const ClassificationError&) {
        threw = true;
      }
      bool separated = false;
      for (std::size_t l = 1; l <= n && !separated; ++l) {
        WeylPoly y2 = WeylPoly::y(n, l) * WeylPoly::y(n, l);
        separated = is_hom_derivation(k, y2) != is_hom_derivation(k2, y2) &&
                    all_zero(derivation_defect_on_generators(k, y2)) !=
                        all_zero(derivation_defect_on_generators(k2, y2));
      }
      t.expect(threw && separated, [&] {
        return "k=(" + to_string(k) + ") k'=(" + to_string(k2) + "): " + (threw ? "no separating y_l^2" : "no error");
      });
    }
    if (unequal < want) t.fail("drew only " + std::to_string(unequal) + " unequal-count pairs");
    finish(r, t, "isomorphisms verified; " + std::to_string(unequal) + " unequal-count pairs rejected and separated");
  });
}

namespace {

struct Candidate {
  std::string label;
  TwistVector k, k2;
  GeneratorImages phi;
};

std::vector<Candidate> corruption_corpus(RandomSource& rng, std::size_t isos) {
  std::vector<Candidate> out;
  for (std::size_t c = 0; c < isos; ++c) {
    auto [k, k2] = random_iso_pair(rng);
    const std::size_t n = k.dim();
    GeneratorImages phi = build_iso(k, k2);
    std::string tag = "k=(" + to_string(k) + ") k'=(" + to_string(k2) + ")";
    out.push_back({tag + " valid", k, k2, phi});
    std::size_t l = rng.uniform(1, n);
    std::size_t j = rng.uniform(1, n);
    auto variant = [&](const std::string& what, auto mutate) {
      GeneratorImages v = phi;
      mutate(v);
      out.push_back({tag + " " + what, k, k2, std::move(v)});
    };
    variant("phi(y_l) doubled", [&](GeneratorImages& v) { v.y_img[l - 1] = scale(2, v.y_img[l - 1]); });
    variant("phi(x_l) doubled", [&](GeneratorImages& v) { v.x_img[l - 1] = scale(2, v.x_img[l - 1]); });
    variant("phi(x_l) + 1", [&](GeneratorImages& v) { v.x_img[l - 1] += WeylPoly::one(n); });
    variant("phi(y_l) + 1", [&](GeneratorImages& v) { v.y_img[l - 1] += WeylPoly::one(n); });
    variant("phi(x_l) + y_j", [&](GeneratorImages& v) { v.x_img[l - 1] += WeylPoly::y(n, j); });
    variant("phi(y_l) + y_j^2", [&](GeneratorImages& v) { v.y_img[l - 1] += WeylPoly::y(n, j) * WeylPoly::y(n, j); });
    variant("phi(y_l) + x_j", [&](GeneratorImages& v) { v.y_img[l - 1] += WeylPoly::x(n, j); });
    variant("phi(x_l) + x_j^2", [&](GeneratorImages& v) { v.x_img[l - 1] += WeylPoly::x(n, j) * WeylPoly::x(n, j); });
    variant("phi(y_l) replaced by unscaled generator", [&](GeneratorImages& v) {
      if (!v.y_img[l - 1].is_zero()) v.y_img[l - 1] = WeylPoly::monomial(v.y_img[l - 1].terms().begin()->first);
    });
    variant("phi(x_l) = 0", [&](GeneratorImages& v) { v.x_img[l - 1] = WeylPoly(n); });
    if (n >= 2 && l != j) {
      variant("x images of l and j swapped", [&](GeneratorImages& v) { std::swap(v.x_img[l - 1], v.x_img[j - 1]); });
      variant("x and y images of l and j swapped", [&](GeneratorImages& v) {
        std::swap(v.x_img[l - 1], v.x_img[j - 1]);
        std::swap(v.y_img[l - 1], v.y_img[j - 1]);
      });
    }
  }
  return out;
}

}  // namespace

SuiteResult suite_checker_agreement(const SuiteOptions& opt) {
  return timed("checker_agreement", "relation/intertwine checker and equation-set checker agree", [&](SuiteResult& r) {
    Tally t;
    RandomSource rng(opt.seed + 7);
    std::size_t rejected = 0, corrupted = 0;
    for (const auto& cand : corruption_corpus(rng, scaled(opt, 20))) {
      bool by_relations = check_relations_and_intertwine(cand.k, cand.k2, cand.phi).accepted();
      bool by_equations = check_hom_constraints(cand.k, cand.k2, cand.phi).accepted();
      if (cand.label.find(" valid") == std::string::npos) ++corrupted;
      if (!by_relations) ++rejected;
      t.expect(by_relations == by_equations, [&] {
        return cand.label + ": relations " + (by_relations ? "accept" : "reject") + ", equations " +
               (by_equations ? "accept" : "reject");
      });
    }
    if (corrupted < 40 && opt.count_scale >= 1.0) t.fail("corpus has only " + std::to_string(corrupted) + " variants");
    finish(r, t,
           std::to_string(t.cases()) + " candidates (" + std::to_string(corrupted) + " corrupted, " +
               std::to_string(rejected) + " rejected) with identical verdicts");
  });
}

SuiteResult suite_deformation(const SuiteOptions& opt) {
  return timed("deformation", "formal deformation specializes to the star product; hom-Lie coefficient-wise",
               [&](SuiteResult& r) {
                 Tally t;
                 RandomSource rng(opt.seed + 8);
                 const unsigned d = degree(opt, 3);
                 for (std::size_t c = 0; c < scaled(opt, 100); ++c) {
                   std::size_t n = rng.uniform(1, 3);
                   TwistVector k = rng.twist(n, TwistPattern::mixed);
                   ParamMap pm = ParamMap::support_of(k);
                   std::vector<Rational> values;
                   for (std::size_t i : pm.positions()) values.push_back(k[i]);
                   WeylPoly a = rng.poly(n, d), b = rng.poly(n, d);
                   ParamPoly s = deform_star(a, b, pm), sb = deform_star(b, a, pm);
                   ParamPoly br = deform_bracket(a, b, pm);
                   MultiIndex zero(pm.params(), 0);
                   bool ok = specialize(s, values) == star(k, a, b) && order_term(s, zero) == a * b &&
                             order_term(br, zero) == commutator(a, b) && br == s - sb &&
                             specialize(deform_twist(a, pm), values) == apply_twist(k, a);
                   t.expect(ok, [&] { return "k=(" + to_string(k) + ") a=" + show(a) + " b=" + show(b); });
                 }
                 for (std::size_t c = 0; c < scaled(opt, 100); ++c) {
                   std::size_t n = rng.uniform(1, 3);
                   TwistVector k = rng.twist(n, TwistPattern::mixed);
                   ParamMap pm = ParamMap::support_of(k);
                   WeylPoly a = rng.poly(n, 2, 3), b = rng.poly(n, 2, 3), cc = rng.poly(n, 2, 3);
                   auto [alt, jacobi] = series_hom_lie_defects(a, b, cc, pm);
                   bool ok = alt.is_zero() && jacobi.is_zero() && series_hom_assoc_defect(a, b, cc, pm).is_zero();
                   t.expect(ok, [&] { return "series identities fail for k=(" + to_string(k) + ")"; });
                 }
                 finish(r, t, "coherent on all samples");
               });
}

SuiteResult suite_weak_unitality(const SuiteOptions& opt) {
  return timed("weak_unit", "1 is the unique weak identity", [&](SuiteResult& r) {
    Tally t;
    RandomSource rng(opt.seed + 9);
    for (std::size_t c = 0; c < scaled(opt, 100); ++c) {
      std::size_t n = rng.uniform(1, 3);
      TwistVector k = rng.twist(n, TwistPattern::mixed);
      WeylPoly a = rng.poly(n, degree(opt, 4));
      auto [right, left] = weak_unit_defect(k, a);
      t.expect(right.is_zero() && left.is_zero(), [&] { return "k=(" + to_string(k) + ") a=" + show(a); });
    }
    // Every monomial e != 1 of degree <= 2 must fail the weak-identity
    // equations on some probe.
    for (std::size_t n : {1u, 2u, 3u}) {
      TwistVector k = rng.twist(n, TwistPattern::mixed);
      std::vector<WeylPoly> probes{WeylPoly::one(n)};
      for (std::size_t l = 1; l <= n; ++l) {
        probes.push_back(WeylPoly::x(n, l));
        probes.push_back(WeylPoly::y(n, l));
      }
      for (int s = 0; s < 5; ++s) probes.push_back(rng.nonzero_poly(n, 2));
      std::vector<Monomial> candidates;
      for (std::size_t s1 = 0; s1 < 2 * n; ++s1) {
        Monomial m(n);
        (s1 < n ? m.y[s1] : m.x[s1 - n]) += 1;
        candidates.push_back(m);
        for (std::size_t s2 = s1; s2 < 2 * n; ++s2) {
          Monomial m2 = m;
          (s2 < n ? m2.y[s2] : m2.x[s2 - n]) += 1;
          candidates.push_back(m2);
        }
      }
      for (const auto& m : candidates) {
        WeylPoly e = WeylPoly::monomial(m);
        bool refuted = std::any_of(probes.begin(), probes.end(), [&](const WeylPoly& a) {
          auto [right, left] = weak_identity_defect(k, e, a);
          return !right.is_zero() || !left.is_zero();
        });
        t.expect(refuted, [&] { return "monomial " + format(m) + " passed every weak-identity probe"; });
      }
    }
    finish(r, t, "weak unit equations hold; no other low-degree monomial qualifies");
  });
}

std::vector<SuiteResult> run_all_suites(const SuiteOptions& opt) {
  using Suite = SuiteResult (*)(const SuiteOptions&);
  const Suite suites[] = {suite_oracle_equivalence, suite_hom_associativity, suite_twist_laws,
                          suite_power_associativity, suite_simplicity,     suite_derivations,
                          suite_isomorphisms,        suite_checker_agreement, suite_deformation,
                          suite_weak_unitality};
  std::vector<std::future<SuiteResult>> running;
  for (Suite s : suites) running.push_back(std::async(std::launch::async, s, std::cref(opt)));
  std::vector<SuiteResult> out;
  for (auto& f : running) out.push_back(f.get());
  return out;
}

}  // namespace hweyl
