#pragma once

#include <optional>
#include <string>
#include <vector>

#include "smw/weyl.hpp"

namespace smw {

// The full solution set of integral weights Lambda making a fixed element
// Lambda-minuscule.  When consistent, that set is exactly
//   { forced + sum_{j in free_nodes} c_j Lambda_j  |  c_j integer },
// with forced supported on supp(w) and free_nodes = I \ supp(w).
struct MinusculeSolutionSet {
  bool consistent = false;
  Weight forced;
  std::vector<int> free_nodes;

  bool dominant_exists() const { return consistent && forced.dominant(); }
  bool strong() const { return dominant_exists() && free_nodes.empty(); }
};

enum class MinusculeClass { NotMinuscule, MinusculeNotDominant, DominantNotStrong, Strong };

struct Classification {
  MinusculeClass status = MinusculeClass::NotMinuscule;
  Weight lambda;  // Lambda_w; meaningful only when status == Strong

  std::string to_json() const;
};

std::string to_string(MinusculeClass c);

// Direct check of the defining suffix condition along a reduced word:
// <s_{i_{p+1}} ... s_{i_r}(Lambda), alpha_{i_p}^vee> = 1 for all p.
// Rejects non-reduced words (the condition is word-independent only for
// reduced expressions).
bool is_lambda_minuscule(const CartanDatum& d, const std::vector<int>& word,
                         const Weight& lambda);

// Exact affine solution set.  Each position p of a reduced word pins the
// coordinate c_{i_p} to 1 + sum_{a>p} a(i_p, i_a); repeated letters must
// agree or the system is inconsistent.
MinusculeSolutionSet solve_minuscule_weights(const CartanDatum& d, const WeylElement& w);
MinusculeSolutionSet solve_minuscule_weights(const CartanDatum& d,
                                             const std::vector<int>& reduced_word);

Classification classify(const CartanDatum& d, const WeylElement& w);

// Full-group sweep {w : classify(w) = Strong}.  With cross_check, every
// verdict is re-derived by enumerating all dominant weights with
// coordinates <= 2*l(w) and testing them directly; only feasible at small
// rank.  Throws when the group order exceeds the budget.
std::vector<WeylElement> brute_force_strong_set(const CartanDatum& d,
                                                long long budget = kDefaultBudget,
                                                bool cross_check = false);

// Per-position adjacency counts along a reduced word of w in SM_i, as used
// by the parity constraints: u_p counts adj_s letters after p, t_p counts
// adj_l letters, q_p repeats of i_p.
struct ParityProfile {
  int i = 0;
  std::vector<int> u, t, q;  // index p-1, for p = 1..r-1
  bool ok = true;            // u_p even iff i_p == i, for every p
};

// Requires classify(w) = Strong(Lambda_i) and a reduced word for w.
ParityProfile parity_profile(const CartanDatum& d, const WeylElement& w,
                             const std::vector<int>& reduced_word);

// Stembridge's constraint on dominant minuscule elements: after the last
// occurrence of each letter i, at most one adj_s(i) letter and no adj_l(i)
// letter appears.
bool stembridge_check(const CartanDatum& d, const std::vector<int>& word);

// supp(w): the letters of any reduced word.
std::vector<int> support(const CartanDatum& d, const WeylElement& w);

}  // namespace smw
