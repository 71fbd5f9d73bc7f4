#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "smw/cartan.hpp"

namespace smw {

// A Weyl group element in canonical form: its integer matrix action on the
// root lattice in simple-root coordinates.  m[i][j] (0-based) is the
// coefficient of alpha_{i+1} in w(alpha_{j+1}).  Two elements are equal iff
// their matrices are; the matrix determines the element.
struct WeylElement {
  int8_t n = 0;
  std::array<std::array<int8_t, kMaxRank>, kMaxRank> m{};

  static WeylElement identity(int n);
  bool is_identity() const;

  bool operator==(const WeylElement& o) const { return n == o.n && m == o.m; }
  bool operator<(const WeylElement& o) const { return m < o.m; }

  // w(alpha_j) as a root vector (column j of the matrix).
  RootVec image_of_simple(int j) const;

  // True iff w(alpha_i) is a negative root, i.e. l(w s_i) < l(w).
  bool is_right_descent(int i) const;

  size_t hash() const;
};

struct WeylHash {
  size_t operator()(const WeylElement& w) const { return w.hash(); }
};

// A word in the generators together with the element it evaluates to.
// Construction via reduce()/word_of() guarantees the word is reduced.
struct ReducedWord {
  std::vector<int> letters;  // 1-based node indices
  int length() const { return static_cast<int>(letters.size()); }
};

struct ParabolicContext {
  const CartanDatum* datum;
  int excluded;  // J = S \ {s_excluded}

  std::vector<int> generators() const {
    std::vector<int> g;
    for (int j = 1; j <= datum->n; ++j)
      if (j != excluded) g.push_back(j);
    return g;
  }
};

WeylElement simple_reflection(const CartanDatum& d, int i);
WeylElement multiply(const WeylElement& v, const WeylElement& w);
WeylElement mul_right(const CartanDatum& d, const WeylElement& w, int i);  // w * s_i
WeylElement mul_left(const CartanDatum& d, int i, const WeylElement& w);   // s_i * w
WeylElement inverse(const CartanDatum& d, const WeylElement& w);

// Inversion count over the positive roots; exact length.
int length(const CartanDatum& d, const WeylElement& w);

WeylElement evaluate(const CartanDatum& d, const std::vector<int>& word);

// Any reduced word for the element of `word`, by descent stripping.
ReducedWord reduce(const CartanDatum& d, const std::vector<int>& word);
ReducedWord word_of(const CartanDatum& d, const WeylElement& w);
bool is_reduced(const CartanDatum& d, const std::vector<int>& word);

std::vector<int> left_descents(const CartanDatum& d, const WeylElement& w);
std::vector<int> right_descents(const CartanDatum& d, const WeylElement& w);

// w(lambda), with s_i(mu) = mu - <mu, alpha_i^vee> alpha_i.
Weight apply(const CartanDatum& d, const WeylElement& w, const Weight& lambda);
Weight apply_reflection(const CartanDatum& d, int i, const Weight& lambda);

inline constexpr long long kDefaultBudget = 1'000'000;

// Every element exactly once, sorted by length (breadth-first closure).
// Throws std::runtime_error naming the exact group order when it exceeds
// the budget.
std::vector<WeylElement> enumerate_group(const CartanDatum& d,
                                         long long budget = kDefaultBudget);

// Minimal-length coset representatives for W / W_{J_i}, sorted by length.
// Exactly the elements whose right descents are contained in {i}.
std::vector<WeylElement> quotient_representatives(const ParabolicContext& ctx);

long long quotient_size(const CartanDatum& d, int excluded);

WeylElement longest_element(const CartanDatum& d);
// Longest element w_{J,0} of the parabolic subgroup W_{J_i}.
WeylElement longest_parabolic(const ParabolicContext& ctx);
// w_0^{J_i}: the minimal coset representative of w_0 W_{J_i}.
WeylElement w0J(const ParabolicContext& ctx);

// Serialization: comma-separated 1-based indices ("3,2,1"); "" is the identity.
std::string word_str(const std::vector<int>& word);
std::vector<int> parse_word(const CartanDatum& d, std::string_view s);

}  // namespace smw
