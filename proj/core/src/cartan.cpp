#include "smw/cartan.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace smw {

bool rank_valid(Family f, int rank) {
  switch (f) {
    case Family::A: return rank >= 1 && rank <= kMaxRank;
    case Family::B: return rank >= 2 && rank <= kMaxRank;
    case Family::C: return rank >= 2 && rank <= kMaxRank;
    case Family::D: return rank >= 3 && rank <= kMaxRank;
    case Family::E: return rank >= 6 && rank <= 8;
    case Family::F: return rank == 4;
    case Family::G: return rank == 2;
  }
  return false;
}

TypeLabel TypeLabel::parse(std::string_view s) {
  if (s.size() < 2) throw std::invalid_argument("type label too short: '" + std::string(s) + "'");
  char fam = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  if (fam < 'A' || fam > 'G') throw std::invalid_argument("unknown family letter in '" + std::string(s) + "'");
  int rank = 0;
  for (size_t k = 1; k < s.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(s[k])))
      throw std::invalid_argument("malformed rank in type label '" + std::string(s) + "'");
    rank = rank * 10 + (s[k] - '0');
  }
  TypeLabel t{static_cast<Family>(fam), rank};
  if (!rank_valid(t.family, rank))
    throw std::invalid_argument("rank " + std::to_string(rank) + " out of bounds for family " +
                                std::string(1, fam));
  return t;
}

std::string TypeLabel::str() const {
  return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

std::string Weight::str() const {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < n; ++i) os << (i ? "," : "") << c[i];
  os << ')';
  return os.str();
}

bool CartanDatum::in_K(int i) const {
  return std::find(K.begin(), K.end(), i) != K.end();
}

namespace {

long long factorial(int n) {
  long long r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

long long weyl_order(TypeLabel t) {
  int n = t.rank;
  switch (t.family) {
    case Family::A: return factorial(n + 1);
    case Family::B:
    case Family::C: return factorial(n) << n;
    case Family::D: return factorial(n) << (n - 1);
    case Family::E:
      if (n == 6) return 51840;
      if (n == 7) return 2903040;
      return 696729600;
    case Family::F: return 1152;
    case Family::G: return 12;
  }
  return 0;
}

// Fills the Cartan matrix a(i,j) = <alpha_j, alpha_i^vee> in this library's
// node numbering.  Double/triple edges point so that alpha_1 is short in
// type B (a(1,2) = -2) and long in type C, and alpha_3 is short in F4.
void fill_cartan(CartanDatum& d) {
  const int n = d.n;
  auto& a = d.cartan;
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto edge = [&](int i, int j) {  // simple edge, 1-based
    a[i - 1][j - 1] = -1;
    a[j - 1][i - 1] = -1;
  };
  auto chain = [&](int lo, int hi) {
    for (int i = lo; i < hi; ++i) edge(i, i + 1);
  };
  switch (d.label.family) {
    case Family::A:
      chain(1, n);
      break;
    case Family::B:
      chain(1, n);
      a[0][1] = -2;  // alpha_1 short
      break;
    case Family::C:
      chain(1, n);
      a[1][0] = -2;  // alpha_1 long
      break;
    case Family::D:
      chain(3, n);
      edge(1, 3);
      edge(2, 3);
      break;
    case Family::E:
      chain(1, n - 1);
      edge(3, n);
      break;
    case Family::F:
      chain(1, 4);
      a[2][1] = -2;  // alpha_2 long, alpha_3 short
      break;
    case Family::G:
      edge(1, 2);
      a[0][1] = -3;  // alpha_1 short
      break;
  }
}

// Relative squared root lengths from Cartan-matrix ratios:
// a(i,j)/a(j,i) = |alpha_j|^2 / |alpha_i|^2 on every edge.
std::vector<int> root_lengths(const CartanDatum& d) {
  const int n = d.n;
  std::vector<int> len(n + 1, 0);
  len[1] = 6;  // divisible by 2 and 3, keeps the propagation integral
  std::vector<int> todo{1};
  while (!todo.empty()) {
    int i = todo.back();
    todo.pop_back();
    for (int j = 1; j <= n; ++j) {
      if (i == j || d.a(i, j) == 0 || len[j] != 0) continue;
      len[j] = len[i] * d.a(i, j) / d.a(j, i);
      todo.push_back(j);
    }
  }
  return len;
}

int expected_positive_roots(TypeLabel t) {
  int n = t.rank;
  switch (t.family) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B:
    case Family::C: return n * n;
    case Family::D: return n * (n - 1);
    case Family::E: return n == 6 ? 36 : (n == 7 ? 63 : 120);
    case Family::F: return 24;
    case Family::G: return 6;
  }
  return 0;
}

// Closes {(alpha_i, alpha_i^vee)} under simple reflections, keeping the
// positive ones.  Roots and coroots transform in parallel:
//   s_i(beta)      = beta      - <beta, alpha_i^vee> alpha_i
//   s_i(beta^vee)  = beta^vee  - <alpha_i, beta^vee> alpha_i^vee
void generate_roots(CartanDatum& d) {
  const int n = d.n;
  using Pair = std::pair<RootVec, RootVec>;
  auto positive = [&](const RootVec& r) {
    for (int k = 0; k < n; ++k) {
      if (r[k] > 0) return true;
      if (r[k] < 0) return false;
    }
    return false;
  };
  std::set<RootVec> seen;
  std::vector<Pair> roots;
  for (int i = 1; i <= n; ++i) {
    RootVec r{}, rv{};
    r[i - 1] = 1;
    rv[i - 1] = 1;
    roots.emplace_back(r, rv);
    seen.insert(r);
  }
  for (size_t head = 0; head < roots.size(); ++head) {
    auto [r, rv] = roots[head];
    for (int i = 1; i <= n; ++i) {
      int pr = 0, pc = 0;  // <r, alpha_i^vee> and <alpha_i, rv>
      for (int j = 1; j <= n; ++j) {
        pr += r[j - 1] * d.a(i, j);
        pc += rv[j - 1] * d.a(j, i);
      }
      RootVec r2 = r, rv2 = rv;
      r2[i - 1] = static_cast<int8_t>(r2[i - 1] - pr);
      rv2[i - 1] = static_cast<int8_t>(rv2[i - 1] - pc);
      if (positive(r2) && seen.insert(r2).second) roots.emplace_back(r2, rv2);
    }
  }
  std::sort(roots.begin(), roots.end());
  for (auto& [r, rv] : roots) {
    d.positive_roots.push_back(r);
    d.positive_coroots.push_back(rv);
  }
  if (d.num_positive_roots() != expected_positive_roots(d.label))
    throw std::logic_error("positive-root count mismatch for " + d.label.str());
}

// Greedy ascent from the identity: multiply by any generator that raises
// the length until none does.  Works directly on the root-action matrix.
void compute_w0_word(CartanDatum& d) {
  const int n = d.n;
  std::array<std::array<int, kMaxRank>, kMaxRank> m{};
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  auto column_negative = [&](int j) {
    for (int i = 0; i < n; ++i) {
      if (m[i][j] > 0) return false;
      if (m[i][j] < 0) return true;
    }
    return false;
  };
  const int target = d.num_positive_roots();
  for (int step = 0; step < target; ++step) {
    int pick = -1;
    for (int j = 0; j < n; ++j)
      if (!column_negative(j)) { pick = j; break; }
    if (pick < 0) throw std::logic_error("w0 ascent stalled");
    d.w0_word.push_back(pick + 1);
    // right-multiply by s_{pick+1}: col_j -= a(pick+1, j+1) * col_pick
    std::array<int, kMaxRank> colk{};
    for (int i = 0; i < n; ++i) colk[i] = m[i][pick];
    for (int j = 0; j < n; ++j) {
      int aij = d.a(pick + 1, j + 1);
      if (aij == 0) continue;
      for (int i = 0; i < n; ++i) m[i][j] -= aij * colk[i];
    }
  }
  for (int j = 0; j < n; ++j)
    if (!column_negative(j)) throw std::logic_error("w0 ascent did not reach the top");
}

}  // namespace

CartanDatum build_datum(TypeLabel label) {
  CartanDatum d;
  d.label = label;
  d.n = label.rank;
  fill_cartan(d);
  d.group_order = weyl_order(label);

  auto len = root_lengths(d);
  int shortest = *std::min_element(len.begin() + 1, len.begin() + d.n + 1);
  for (int i = 1; i <= d.n; ++i)
    if (len[i] == shortest) d.K.push_back(i);

  d.adj_s_.resize(d.n);
  d.adj_l_.resize(d.n);
  for (int i = 1; i <= d.n; ++i)
    for (int j = 1; j <= d.n; ++j) {
      if (i == j || d.a(i, j) == 0) continue;
      (d.a(i, j) == -1 ? d.adj_s_[i - 1] : d.adj_l_[i - 1]).push_back(j);
    }

  generate_roots(d);
  compute_w0_word(d);
  return d;
}

int pair_coroot(const Weight& lambda, const RootVec& coroot, int n) {
  int s = 0;
  for (int j = 0; j < n; ++j) s += lambda.c[j] * coroot[j];
  return s;
}

bool is_minuscule_weight(const CartanDatum& datum, int i) {
  Weight li = Weight::fundamental(datum.n, i);
  for (const auto& cv : datum.positive_coroots) {
    int p = pair_coroot(li, cv, datum.n);
    if (p < -1 || p > 1) return false;
  }
  return true;
}

}  // namespace smw
