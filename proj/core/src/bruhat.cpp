#include "smw/bruhat.hpp"

#include <algorithm>
#include <stdexcept>

#include "smw/stumbo.hpp"
#include "smw/tables.hpp"

namespace smw {

bool BruhatOrder::leq(const WeylElement& u, const WeylElement& w) {
  if (u.is_identity()) return true;
  if (u == w) return true;
  auto key = std::make_pair(u, w);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  const CartanDatum& d = *d_;
  int s = 0;
  for (int i = 1; i <= d.n; ++i)
    if (w.is_right_descent(i)) { s = i; break; }
  bool result;
  if (s == 0) {
    result = false;  // w = e, u != e
  } else {
    WeylElement ws = mul_right(d, w, s);
    if (u.is_right_descent(s))
      result = leq(mul_right(d, u, s), ws);
    else
      result = leq(u, ws);
  }
  memo_.emplace(key, result);
  return result;
}

std::vector<WeylElement> interval(const CartanDatum& d, const IntervalQuery& q,
                                  long long budget) {
  BruhatOrder order(d);
  std::vector<WeylElement> out;
  auto candidates = q.ctx ? quotient_representatives(*q.ctx) : enumerate_group(d, budget);
  for (const auto& v : candidates)
    if (order.leq(q.u, v) && order.leq(v, q.w)) out.push_back(v);
  return out;
}

WeylElement bar_involution(const ParabolicContext& ctx, const WeylElement& tau) {
  const CartanDatum& d = *ctx.datum;
  for (int j = 1; j <= d.n; ++j)
    if (j != ctx.excluded && tau.is_right_descent(j))
      throw std::invalid_argument("bar involution input is not a minimal coset representative");
  return multiply(multiply(longest_element(d), tau), longest_parabolic(ctx));
}

SmiInterval smi_as_interval(const CartanDatum& d, int i) {
  // Known interval forms: A (all i), B (i=1), C (i=n), D (i=1,2,n),
  // E6 (i=1,5), E7 (i=6).  In each case the whole interval is SM_i; in
  // particular the closed-form streams include w_0^{J_i} itself for
  // C_n i=n (l_n up to 2n-1) and D_n i=n (l_n up to 2n-2).
  SmiInterval out;
  const auto type = d.label.str();
  switch (d.label.family) {
    case Family::A: out.characterized = true; break;
    case Family::B: out.characterized = i == 1; break;
    case Family::C: out.characterized = i == d.n; break;
    case Family::D: out.characterized = i == 1 || i == 2 || i == d.n; break;
    case Family::E:
      out.characterized = (type == "E6" && (i == 1 || i == 5)) || (type == "E7" && i == 6);
      break;
    default: break;
  }
  if (!out.characterized) return out;

  ParabolicContext ctx{&d, i};
  IntervalQuery q{vi_element(d, i), w0J(ctx), ctx};
  out.elements = interval(d, q);
  return out;
}

long long demazure_dim(const CartanDatum& d, int i, const WeylElement& tau) {
  if (!is_minuscule_weight(d, i))
    throw std::invalid_argument("Lambda_" + std::to_string(i) + " is not a minuscule weight of " +
                                d.label.str() + "; the interval count is not a dimension");
  ParabolicContext ctx{&d, i};
  for (int j = 1; j <= d.n; ++j)
    if (j != i && tau.is_right_descent(j))
      throw std::invalid_argument("tau is not a minimal coset representative");
  BruhatOrder order(d);
  long long dim = 0;
  for (const auto& v : quotient_representatives(ctx))
    if (order.leq(v, tau)) ++dim;
  return dim;
}

std::optional<long long> demazure_dim_reference(TypeLabel label, int i) {
  const int n = label.rank;
  auto binom = [](int a, int b) -> long long {
    if (b < 0 || b > a) return 0;
    long long r = 1;
    for (int k = 1; k <= b; ++k) r = r * (a - b + k) / k;
    return r;
  };
  switch (label.family) {
    case Family::A: return binom(n - 1, i - 1);
    case Family::B:
      if (i == 1) return 1ll << (n - 1);
      return std::nullopt;
    case Family::C:
      // dim = #[e, bar(v_n)]^{J_n} = #SM_n = n: the quotient is a chain of
      // 2n elements and bar(v_n) sits at height n-1.
      if (i == n) return n;
      return std::nullopt;
    case Family::D:
      if (i == 1 || i == 2) return (1ll << (n - 2)) - 1;
      if (i == n) return n - 1;
      return std::nullopt;
    default: {
      auto type = label.str();
      for (const auto& e : tables::kExceptionalDemazureDims)
        if (type == e.type && e.i == i) return e.count;
      return std::nullopt;
    }
  }
}

}  // namespace smw
