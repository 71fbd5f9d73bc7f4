#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace smw {

// Ranks never exceed 8 (E8), so fixed-size storage throughout.
inline constexpr int kMaxRank = 8;

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct TypeLabel {
  Family family;
  int rank;

  // Parses "A5", "d4", "E8" (case-insensitive letter + decimal rank).
  // Throws std::invalid_argument on malformed input or a rank outside the
  // family's bounds (A: n>=1, B/C: n>=2, D: n>=3, E: 6..8, F4, G2).
  static TypeLabel parse(std::string_view s);

  std::string str() const;
  bool operator==(const TypeLabel&) const = default;
};

bool rank_valid(Family f, int rank);

// A vector in simple-root (or simple-coroot) integer coordinates.
// Entry j-1 is the coefficient of alpha_j.
using RootVec = std::array<int8_t, kMaxRank>;

// Integral weight in fundamental-weight coordinates: coord(i) is the
// coefficient of Lambda_i, equivalently the pairing with alpha_i^vee.
struct Weight {
  int n = 0;
  std::array<int, kMaxRank> c{};

  int coord(int i) const { return c[i - 1]; }           // i in 1..n
  void set(int i, int v) { c[i - 1] = v; }

  bool dominant() const {
    for (int i = 0; i < n; ++i)
      if (c[i] < 0) return false;
    return true;
  }
  bool operator==(const Weight&) const = default;

  static Weight zero(int n) { Weight w; w.n = n; return w; }
  static Weight fundamental(int n, int i) {
    Weight w = zero(n);
    w.set(i, 1);
    return w;
  }
  std::string str() const;
};

// Root-system data for one finite type, under the node numbering where the
// B/C double edge sits between nodes 1 and 2, the D fork tips are nodes 1
// and 2 with trivalent node 3, and E/F/G follow the diagrams whose branch
// node is 3.  Immutable after construction; safe to share across threads.
struct CartanDatum {
  TypeLabel label;
  int n = 0;
  std::array<std::array<int8_t, kMaxRank>, kMaxRank> cartan{};

  std::vector<int> K;                         // nodes whose simple root is short
  std::vector<std::vector<int>> adj_s_;       // per node (index i-1): {j : a(i,j) = -1}
  std::vector<std::vector<int>> adj_l_;       // per node: {j : a(i,j) <= -2}
  std::vector<RootVec> positive_roots;        // simple-root coordinates
  std::vector<RootVec> positive_coroots;      // parallel list, simple-coroot coordinates
  std::vector<int> w0_word;                   // one reduced word for the longest element
  long long group_order = 0;

  int a(int i, int j) const { return cartan[i - 1][j - 1]; }  // i, j in 1..n
  const std::vector<int>& adj_s(int i) const { return adj_s_[i - 1]; }
  const std::vector<int>& adj_l(int i) const { return adj_l_[i - 1]; }
  bool in_K(int i) const;
  int num_positive_roots() const { return static_cast<int>(positive_roots.size()); }
};

CartanDatum build_datum(TypeLabel label);
inline CartanDatum build_datum(std::string_view s) { return build_datum(TypeLabel::parse(s)); }

// True iff <Lambda_i, beta^vee> in {0, +-1} for every positive root beta.
bool is_minuscule_weight(const CartanDatum& datum, int i);

// Pairing <lambda, beta^vee> for beta given by its positive-coroot coordinates.
int pair_coroot(const Weight& lambda, const RootVec& coroot, int n);

}  // namespace smw
