#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "smw/weyl.hpp"

namespace smw {

// Bruhat order with a per-instance memo table; deterministic results,
// concurrent use requires one comparator per thread.
class BruhatOrder {
 public:
  explicit BruhatOrder(const CartanDatum& d) : d_(&d) {}

  // Standard descent recursion: u <= w iff u = e, or for any right descent
  // s of w: (us < u ? us <= ws : u <= ws).
  bool leq(const WeylElement& u, const WeylElement& w);

 private:
  struct PairHash {
    size_t operator()(const std::pair<WeylElement, WeylElement>& p) const {
      return p.first.hash() * 1000003u ^ p.second.hash();
    }
  };
  const CartanDatum* d_;
  std::unordered_map<std::pair<WeylElement, WeylElement>, bool, PairHash> memo_;
};

struct IntervalQuery {
  WeylElement u, w;
  std::optional<ParabolicContext> ctx;  // restrict to W^{J_i}
};

// [u, w] (with ctx: [u, w]^{J_i}, computed by filtering the quotient
// stream, never by ambient enumeration).
std::vector<WeylElement> interval(const CartanDatum& d, const IntervalQuery& q,
                                  long long budget = kDefaultBudget);

// tau |-> w_0 tau w_{J_i,0}: an order-reversing involution on W^{J_i}.
// Rejects tau outside the quotient.
WeylElement bar_involution(const ParabolicContext& ctx, const WeylElement& tau);

// Interval description of SM_i, for the (type, i) pairs where one exists:
// SM_i = [v_i, w_0^{J_i}]^{J_i}.  The closed-form stream conditions put the
// top element w_0^{J_i} inside SM_i in every characterized case, so no
// endpoint is excluded.
struct SmiInterval {
  bool characterized = false;   // false: no interval form is known for (type, i)
  std::vector<WeylElement> elements;
};

SmiInterval smi_as_interval(const CartanDatum& d, int i);

// dim E_tau(Lambda_i) = #[e, tau]^{J_i}; requires Lambda_i minuscule and
// tau in W^{J_i}.
long long demazure_dim(const CartanDatum& d, int i, const WeylElement& tau);

// Closed-form reference value for dim E_{bar(v_i)}(Lambda_i), when the
// table covers (type, i).
std::optional<long long> demazure_dim_reference(TypeLabel label, int i);

}  // namespace smw
