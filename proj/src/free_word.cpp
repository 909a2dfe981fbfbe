#include "hweyl/free_word.hpp"

#include <map>
#include <string>
#include <utility>

#include "hweyl/errors.hpp"

namespace hweyl {
namespace {

// Scalar-free letter encoded as a sort key: y_i -> i, x_i -> n + i. A word is
// in normal form exactly when its keys are nondecreasing.
using Key = std::size_t;
using KeyWord = std::vector<Key>;

}  // namespace

WeylPoly oracle_normal_form(std::size_t n, const FreeWord& w) {
  Rational scalar = 1;
  KeyWord start;
  for (const Letter& l : w) {
    switch (l.kind) {
      case Letter::Kind::scalar:
        scalar *= l.value;
        break;
      case Letter::Kind::y:
        require_index(l.index, n, "y");
        start.push_back(l.index);
        break;
      case Letter::Kind::x:
        require_index(l.index, n, "x");
        start.push_back(n + l.index);
        break;
    }
  }

  WeylPoly out(n);
  if (scalar == 0) return out;

  std::map<KeyWord, Rational> pending{{start, scalar}};
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    KeyWord word = std::move(node.key());
    Rational coeff = std::move(node.mapped());
    if (coeff == 0) continue;

    std::size_t pos = 0;
    while (pos + 1 < word.size() && word[pos] <= word[pos + 1]) ++pos;
    if (pos + 1 >= word.size()) {
      Monomial m(n);
      for (Key k : word) {
        if (k <= n)
          ++m.y[k - 1];
        else
          ++m.x[k - n - 1];
      }
      out.add_term(m, coeff);
      continue;
    }

    Key left = word[pos], right = word[pos + 1];
    bool left_is_x = left > n, right_is_y = right <= n;
    if (left_is_x && right_is_y && left - n == right) {
      // x_i y_i = y_i x_i + 1
      KeyWord contracted;
      contracted.insert(contracted.end(), word.begin(), word.begin() + pos);
      contracted.insert(contracted.end(), word.begin() + pos + 2, word.end());
      pending[contracted] += coeff;
    }
    std::swap(word[pos], word[pos + 1]);
    pending[word] += coeff;
  }
  return out;
}

WeylPoly oracle_mul(std::size_t n, const FreeWord& w1, const FreeWord& w2) {
  FreeWord joined = w1;
  joined.insert(joined.end(), w2.begin(), w2.end());
  return oracle_normal_form(n, joined);
}

FreeWord word_of(const Monomial& m) {
  FreeWord w;
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (Exponent e = 0; e < m.y[i]; ++e) w.push_back(Letter::Y(i + 1));
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (Exponent e = 0; e < m.x[i]; ++e) w.push_back(Letter::X(i + 1));
  return w;
}

}  // namespace hweyl
