#include "smw/minuscule.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace smw {

std::string to_string(MinusculeClass c) {
  switch (c) {
    case MinusculeClass::NotMinuscule: return "NotMinuscule";
    case MinusculeClass::MinusculeNotDominant: return "MinusculeNotDominant";
    case MinusculeClass::DominantNotStrong: return "DominantNotStrong";
    case MinusculeClass::Strong: return "Strong";
  }
  return "?";
}

std::string Classification::to_json() const {
  std::ostringstream os;
  os << "{\"status\":\"" << to_string(status) << "\"";
  if (status == MinusculeClass::Strong) {
    os << ",\"lambda\":[";
    for (int i = 0; i < lambda.n; ++i) os << (i ? "," : "") << lambda.c[i];
    os << "]";
  }
  os << "}";
  return os.str();
}

bool is_lambda_minuscule(const CartanDatum& d, const std::vector<int>& word,
                         const Weight& lambda) {
  if (!is_reduced(d, word))
    throw std::invalid_argument("is_lambda_minuscule requires a reduced word");
  Weight mu = lambda;  // running s_{i_{p+1}} ... s_{i_r}(Lambda)
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (mu.coord(*it) != 1) return false;
    mu = apply_reflection(d, *it, mu);  // subtracts alpha_{i_p}
  }
  return true;
}

MinusculeSolutionSet solve_minuscule_weights(const CartanDatum& d,
                                             const std::vector<int>& word) {
  const int n = d.n;
  MinusculeSolutionSet out;
  out.forced = Weight::zero(n);
  out.consistent = true;

  // Right-to-left: position p requires c_{i_p} = 1 + sum_{a>p} a(i_p, i_a).
  std::array<int, kMaxRank> suffix_count{};  // occurrences of each letter to the right
  std::array<bool, kMaxRank> pinned{};
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    int i = *it;
    int t = 1;
    for (int j = 1; j <= n; ++j) t += d.a(i, j) * suffix_count[j - 1];
    if (pinned[i - 1]) {
      if (out.forced.coord(i) != t) {
        out.consistent = false;
        return out;
      }
    } else {
      pinned[i - 1] = true;
      out.forced.set(i, t);
    }
    ++suffix_count[i - 1];
  }
  for (int j = 1; j <= n; ++j)
    if (!pinned[j - 1]) out.free_nodes.push_back(j);
  return out;
}

MinusculeSolutionSet solve_minuscule_weights(const CartanDatum& d, const WeylElement& w) {
  return solve_minuscule_weights(d, word_of(d, w).letters);
}

Classification classify(const CartanDatum& d, const WeylElement& w) {
  auto sol = solve_minuscule_weights(d, w);
  Classification c;
  if (!sol.consistent) {
    c.status = MinusculeClass::NotMinuscule;
  } else if (!sol.forced.dominant()) {
    c.status = MinusculeClass::MinusculeNotDominant;
  } else if (!sol.free_nodes.empty()) {
    c.status = MinusculeClass::DominantNotStrong;
  } else {
    c.status = MinusculeClass::Strong;
    c.lambda = sol.forced;
  }
  return c;
}

namespace {

// Independent re-derivation of a classification verdict: try every dominant
// weight with coordinates bounded by 2*l(w) against the defining condition.
// The bound is conservative: each forced coordinate is 1 plus a sum of at
// most l(w) Cartan entries.
void cross_check_verdict(const CartanDatum& d, const WeylElement& w,
                         const Classification& got) {
  auto word = word_of(d, w).letters;
  const int n = d.n;
  const int bound = std::max(1, 2 * static_cast<int>(word.size()));
  long long found = 0;
  Weight witness = Weight::zero(n);
  Weight lam = Weight::zero(n);
  // odometer over {0..bound}^n
  while (true) {
    if (is_lambda_minuscule(d, word, lam)) {
      if (found == 0) witness = lam;
      ++found;
      if (found > 1) break;  // non-unique is all we need to know
    }
    int k = 0;
    while (k < n && lam.c[k] == bound) lam.c[k++] = 0;
    if (k == n) break;
    ++lam.c[k];
  }
  bool dominant_exists = found >= 1;
  bool unique = found == 1;
  bool ok = false;
  switch (got.status) {
    case MinusculeClass::Strong:
      ok = unique && witness == got.lambda;
      break;
    case MinusculeClass::DominantNotStrong:
      ok = found > 1;
      break;
    case MinusculeClass::MinusculeNotDominant:
    case MinusculeClass::NotMinuscule:
      ok = !dominant_exists;
      break;
  }
  if (!ok)
    throw std::logic_error("classification cross-check failed for word " + word_str(word));
}

}  // namespace

std::vector<WeylElement> brute_force_strong_set(const CartanDatum& d, long long budget,
                                                bool cross_check) {
  std::vector<WeylElement> strong;
  for (const auto& w : enumerate_group(d, budget)) {
    auto c = classify(d, w);
    if (cross_check) cross_check_verdict(d, w, c);
    if (c.status == MinusculeClass::Strong) strong.push_back(w);
  }
  return strong;
}

ParityProfile parity_profile(const CartanDatum& d, const WeylElement& w,
                             const std::vector<int>& word) {
  auto c = classify(d, w);
  if (c.status != MinusculeClass::Strong)
    throw std::invalid_argument("parity_profile requires a strong minuscule element");
  if (!is_reduced(d, word) || !(evaluate(d, word) == w))
    throw std::invalid_argument("parity_profile requires a reduced word for w");

  ParityProfile prof;
  for (int i = 1; i <= d.n; ++i)
    if (c.lambda.coord(i) == 1) prof.i = i;

  const int r = static_cast<int>(word.size());
  for (int p = 1; p <= r - 1; ++p) {
    int ip = word[p - 1];
    int u = 0, t = 0, q = 0;
    for (int a = p + 1; a <= r; ++a) {
      int ia = word[a - 1];
      if (ia == ip) ++q;
      else if (d.a(ip, ia) == -1) ++u;
      else if (d.a(ip, ia) <= -2) ++t;
    }
    prof.u.push_back(u);
    prof.t.push_back(t);
    prof.q.push_back(q);
    bool even = (u % 2) == 0;
    if (even != (ip == prof.i)) prof.ok = false;
  }
  return prof;
}

bool stembridge_check(const CartanDatum& d, const std::vector<int>& word) {
  const int r = static_cast<int>(word.size());
  for (int i = 1; i <= d.n; ++i) {
    int last = -1;
    for (int p = r; p >= 1; --p)
      if (word[p - 1] == i) { last = p; break; }
    if (last < 0) continue;
    int ns = 0, nl = 0;
    for (int p = last + 1; p <= r; ++p) {
      int j = word[p - 1];
      if (d.a(i, j) == -1) ++ns;
      else if (d.a(i, j) <= -2) ++nl;
    }
    if (ns > 1 || nl > 0) return false;
  }
  return true;
}

std::vector<int> support(const CartanDatum& d, const WeylElement& w) {
  std::array<bool, kMaxRank> seen{};
  for (int i : word_of(d, w).letters) seen[i - 1] = true;
  std::vector<int> out;
  for (int i = 1; i <= d.n; ++i)
    if (seen[i - 1]) out.push_back(i);
  return out;
}

}  // namespace smw
