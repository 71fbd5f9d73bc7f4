#include "smw/weyl.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace smw {

WeylElement WeylElement::identity(int n) {
  WeylElement w;
  w.n = static_cast<int8_t>(n);
  for (int i = 0; i < n && i < kMaxRank; ++i) w.m[i][i] = 1;
  return w;
}

bool WeylElement::is_identity() const {
  return *this == identity(n);
}

RootVec WeylElement::image_of_simple(int j) const {
  RootVec r{};
  for (int i = 0; i < n; ++i) r[i] = m[i][j - 1];
  return r;
}

bool WeylElement::is_right_descent(int i) const {
  for (int k = 0; k < n; ++k) {
    if (m[k][i - 1] > 0) return false;
    if (m[k][i - 1] < 0) return true;
  }
  return false;
}

size_t WeylElement::hash() const {
  size_t h = 1469598103934665603ull;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      h ^= static_cast<size_t>(static_cast<uint8_t>(m[i][j]));
      h *= 1099511628211ull;
    }
  return h;
}

WeylElement simple_reflection(const CartanDatum& d, int i) {
  return mul_right(d, WeylElement::identity(d.n), i);
}

WeylElement multiply(const WeylElement& v, const WeylElement& w) {
  WeylElement r;
  r.n = v.n;
  const int n = v.n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int s = 0;
      for (int k = 0; k < n; ++k) s += v.m[i][k] * w.m[k][j];
      r.m[i][j] = static_cast<int8_t>(s);
    }
  return r;
}

WeylElement mul_right(const CartanDatum& d, const WeylElement& w, int i) {
  // (w s_i)(alpha_j) = w(alpha_j) - a(i,j) w(alpha_i)
  WeylElement r = w;
  const int n = w.n;
  for (int j = 1; j <= n; ++j) {
    int aij = d.a(i, j);
    if (aij == 0) continue;
    for (int k = 0; k < n; ++k)
      r.m[k][j - 1] = static_cast<int8_t>(r.m[k][j - 1] - aij * w.m[k][i - 1]);
  }
  return r;
}

WeylElement mul_left(const CartanDatum& d, int i, const WeylElement& w) {
  // row i of s_i w is row_i - sum_j a(i,j) row_j  (including j = i).
  WeylElement r = w;
  const int n = w.n;
  for (int j = 1; j <= n; ++j) {
    int aij = d.a(i, j);
    if (aij == 0) continue;
    for (int k = 0; k < n; ++k)
      r.m[i - 1][k] = static_cast<int8_t>(r.m[i - 1][k] - aij * w.m[j - 1][k]);
  }
  return r;
}

WeylElement inverse(const CartanDatum& d, const WeylElement& w) {
  auto word = word_of(d, w).letters;
  std::reverse(word.begin(), word.end());
  return evaluate(d, word);
}

int length(const CartanDatum& d, const WeylElement& w) {
  int inv = 0;
  const int n = d.n;
  for (const auto& root : d.positive_roots) {
    for (int i = 0; i < n; ++i) {
      int s = 0;
      for (int j = 0; j < n; ++j) s += w.m[i][j] * root[j];
      if (s > 0) break;
      if (s < 0) { ++inv; break; }
    }
  }
  return inv;
}

WeylElement evaluate(const CartanDatum& d, const std::vector<int>& word) {
  WeylElement w = WeylElement::identity(d.n);
  for (int i : word) {
    if (i < 1 || i > d.n) throw std::invalid_argument("letter out of range: " + std::to_string(i));
    w = mul_right(d, w, i);
  }
  return w;
}

ReducedWord word_of(const CartanDatum& d, const WeylElement& w) {
  ReducedWord out;
  WeylElement cur = w;
  while (true) {
    int i = 0;
    for (int j = 1; j <= d.n; ++j)
      if (cur.is_right_descent(j)) { i = j; break; }
    if (i == 0) break;
    out.letters.push_back(i);
    cur = mul_right(d, cur, i);
  }
  if (!cur.is_identity()) throw std::logic_error("descent stripping stalled off the identity");
  std::reverse(out.letters.begin(), out.letters.end());
  return out;
}

ReducedWord reduce(const CartanDatum& d, const std::vector<int>& word) {
  return word_of(d, evaluate(d, word));
}

bool is_reduced(const CartanDatum& d, const std::vector<int>& word) {
  return length(d, evaluate(d, word)) == static_cast<int>(word.size());
}

std::vector<int> right_descents(const CartanDatum& d, const WeylElement& w) {
  std::vector<int> out;
  for (int i = 1; i <= d.n; ++i)
    if (w.is_right_descent(i)) out.push_back(i);
  return out;
}

std::vector<int> left_descents(const CartanDatum& d, const WeylElement& w) {
  std::vector<int> out;
  WeylElement wi = inverse(d, w);
  for (int i = 1; i <= d.n; ++i)
    if (wi.is_right_descent(i)) out.push_back(i);
  return out;
}

Weight apply_reflection(const CartanDatum& d, int i, const Weight& lambda) {
  Weight r = lambda;
  int ci = lambda.coord(i);
  if (ci == 0) return r;
  for (int k = 1; k <= d.n; ++k) r.set(k, r.coord(k) - ci * d.a(k, i));
  return r;
}

Weight apply(const CartanDatum& d, const WeylElement& w, const Weight& lambda) {
  auto word = word_of(d, w).letters;
  Weight mu = lambda;
  for (auto it = word.rbegin(); it != word.rend(); ++it) mu = apply_reflection(d, *it, mu);
  return mu;
}

namespace {

// Length-ordered BFS closure from the identity.  `step` produces the
// candidate successors of one element; `keep` filters membership.
template <typename Keep>
std::vector<WeylElement> bfs_closure(const CartanDatum& d, Keep keep) {
  std::vector<WeylElement> out;
  std::unordered_set<WeylElement, WeylHash> seen;
  std::vector<WeylElement> frontier{WeylElement::identity(d.n)};
  seen.insert(frontier.front());
  while (!frontier.empty()) {
    out.insert(out.end(), frontier.begin(), frontier.end());
    std::vector<WeylElement> next;
    for (const auto& w : frontier) {
      for (int i = 1; i <= d.n; ++i) {
        WeylElement u = mul_left(d, i, w);
        if (!keep(u)) continue;
        if (seen.insert(u).second) next.push_back(u);
      }
    }
    // deterministic order within a length level
    std::sort(next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

}  // namespace

std::vector<WeylElement> enumerate_group(const CartanDatum& d, long long budget) {
  if (d.group_order > budget)
    throw std::runtime_error("group order " + std::to_string(d.group_order) + " of " +
                             d.label.str() + " exceeds enumeration budget " +
                             std::to_string(budget));
  // New elements of length l+1 are s*w for w of length l, so plain left
  // BFS visits everything.
  auto all = bfs_closure(d, [](const WeylElement&) { return true; });
  if (static_cast<long long>(all.size()) != d.group_order)
    throw std::logic_error("BFS closure missed elements of " + d.label.str());
  return all;
}

std::vector<WeylElement> quotient_representatives(const ParabolicContext& ctx) {
  const CartanDatum& d = *ctx.datum;
  const int excl = ctx.excluded;
  // u in W^{J} iff every right descent of u equals the excluded node; left
  // factors of reduced products stay in W^{J}, so BFS with this filter is
  // exhaustive.
  auto in_quotient = [&](const WeylElement& u) {
    for (int j = 1; j <= d.n; ++j)
      if (j != excl && u.is_right_descent(j)) return false;
    return true;
  };
  return bfs_closure(d, in_quotient);
}

long long quotient_size(const CartanDatum& d, int excluded) {
  // |W_J| by closure over the parabolic generators.
  std::unordered_set<WeylElement, WeylHash> seen;
  std::vector<WeylElement> frontier{WeylElement::identity(d.n)};
  seen.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<WeylElement> next;
    for (const auto& w : frontier)
      for (int i = 1; i <= d.n; ++i) {
        if (i == excluded) continue;
        WeylElement u = mul_left(d, i, w);
        if (seen.insert(u).second) next.push_back(u);
      }
    frontier = std::move(next);
  }
  return d.group_order / static_cast<long long>(seen.size());
}

namespace {

WeylElement greedy_longest(const CartanDatum& d, const std::vector<int>& gens) {
  WeylElement w = WeylElement::identity(d.n);
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i : gens) {
      if (!w.is_right_descent(i)) {
        w = mul_right(d, w, i);
        moved = true;
      }
    }
  }
  return w;
}

}  // namespace

WeylElement longest_element(const CartanDatum& d) {
  std::vector<int> gens(d.n);
  for (int i = 0; i < d.n; ++i) gens[i] = i + 1;
  return greedy_longest(d, gens);
}

WeylElement longest_parabolic(const ParabolicContext& ctx) {
  return greedy_longest(*ctx.datum, ctx.generators());
}

WeylElement w0J(const ParabolicContext& ctx) {
  // w_0 = w_0^J w_{J,0} with additive lengths, and w_{J,0} is an involution.
  const CartanDatum& d = *ctx.datum;
  return multiply(longest_element(d), longest_parabolic(ctx));
}

std::string word_str(const std::vector<int>& word) {
  std::ostringstream os;
  for (size_t k = 0; k < word.size(); ++k) os << (k ? "," : "") << word[k];
  return os.str();
}

std::vector<int> parse_word(const CartanDatum& d, std::string_view s) {
  std::vector<int> out;
  size_t pos = 0;
  while (pos < s.size()) {
    size_t comma = s.find(',', pos);
    std::string tok(s.substr(pos, comma == std::string_view::npos ? comma : comma - pos));
    if (tok.empty()) throw std::invalid_argument("empty letter in word '" + std::string(s) + "'");
    int v;
    try {
      v = std::stoi(tok);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed letter '" + tok + "'");
    }
    if (v < 1 || v > d.n)
      throw std::invalid_argument("letter " + tok + " out of range for " + d.label.str());
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace smw
