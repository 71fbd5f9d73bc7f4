#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "smw/minuscule.hpp"
#include "smw/weyl.hpp"

namespace smw {

// Integer sequence indexing one element of W^{J_i} in product form
// w_n(l_n) ... w_i(l_i).  For type D with i in {1,2} the alternating form
// is used instead: factors w_1/w_2 alternate and l holds l_1, ..., l_h
// (strictly decreasing).  branch disambiguates w_j(j-1) in type D, i >= 3:
// 1 means the suffix starting with s_1, 2 the one starting with s_2, 0 n/a.
struct LSequence {
  int i = 0;
  bool alternating = false;
  std::vector<int> l;       // classical: entry k is l_{i+k}; alternating: l_1..l_h
  std::vector<int> branch;  // parallel to l (classical form only)

  std::string to_json() const;
};

// Defining word of w_j for the Stumbo parametrization ((a')-(d')).
std::vector<int> wj_full_word(const CartanDatum& d, int j);

// Right-suffix of length l of the w_j word.  For type D, j >= 3, l = j-1
// the suffix is ambiguous and `branch` (1 or 2) is required; it is rejected
// in every other case.
ReducedWord build_wj(const CartanDatum& d, int j, int l, std::optional<int> branch = {});

// Defining word of v_i (classical families and the exceptional catalog).
// Verifies l(v_i) = n on every lookup; i must lie in K.
std::vector<int> vi_word(const CartanDatum& d, int i);
WeylElement vi_element(const CartanDatum& d, int i);

// Runs the catalog self-check for every i in K: the v_i word is reduced of
// length n and classifies as Strong(Lambda_i).  Throws on any violation.
void verify_vi_catalog(const CartanDatum& d);

// Stumbo parametrization of W^{J_i} (classical types only), bijective onto
// quotient_representatives.
std::vector<std::pair<LSequence, WeylElement>> enumerate_quotient_stumbo(
    const CartanDatum& d, int i);

// Word of the product w_n(l_n) ... w_i(l_i) encoded by the sequence.
std::vector<int> lsequence_word(const CartanDatum& d, const LSequence& s);

// SM_i by the closed-form conditions (classical types; i must be in K).
std::vector<std::pair<LSequence, WeylElement>> enumerate_smi_closed_form(
    const CartanDatum& d, int i);

// SM_i for E/F/G: quotient representatives filtered by classify = Strong(Lambda_i).
std::vector<WeylElement> enumerate_smi_exceptional(const CartanDatum& d, int i);

// One list for every type, via the appropriate route above.
std::vector<WeylElement> enumerate_smi(const CartanDatum& d, int i);

// Reference value from the closed-form count formulas / exceptional table.
long long closed_form_count(TypeLabel label, int i);

// Stream count, cross-checked against closed_form_count.  A mismatch is a
// hard failure (std::logic_error), not a warning.
long long count_smi(const CartanDatum& d, int i);

}  // namespace smw
