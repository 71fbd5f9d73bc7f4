#include "doctest.h"

#include "smw/bruhat.hpp"
#include "smw/minuscule.hpp"
#include "smw/stumbo.hpp"

#include <set>
#include <stdexcept>
#include <unordered_set>

using namespace smw;

namespace {

// Subword oracle: along one fixed reduced word of w, the set of products of
// arbitrary subwords is exactly the lower interval [e, w].
std::unordered_set<WeylElement, WeylHash> lower_interval_by_subwords(const CartanDatum& d,
                                                                    const WeylElement& w) {
  std::unordered_set<WeylElement, WeylHash> cur{WeylElement::identity(d.n)};
  for (int i : word_of(d, w).letters) {
    std::unordered_set<WeylElement, WeylHash> next = cur;
    for (const auto& v : cur) next.insert(mul_right(d, v, i));
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

TEST_CASE("bruhat_leq agrees with the subword oracle on all pairs, A3 and B3") {
  for (const char* t : {"A3", "B3"}) {
    auto d = build_datum(t);
    auto all = enumerate_group(d);
    BruhatOrder order(d);
    for (const auto& w : all) {
      auto below = lower_interval_by_subwords(d, w);
      for (const auto& u : all)
        CHECK(order.leq(u, w) == (below.count(u) == 1));
    }
  }
}

TEST_CASE("bruhat basics") {
  auto d = build_datum("A4");
  BruhatOrder order(d);
  auto e = WeylElement::identity(4);
  auto w0 = longest_element(d);
  for (const auto& w : enumerate_group(d)) {
    CHECK(order.leq(e, w));
    CHECK(order.leq(w, w0));
  }
}

TEST_CASE("v_i <= w for every w in SM_i at small rank") {
  for (const char* t : {"A4", "B4", "C4", "D5"}) {
    auto d = build_datum(t);
    BruhatOrder order(d);
    for (int i : d.K) {
      auto vi = vi_element(d, i);
      for (const auto& w : enumerate_smi(d, i)) CHECK(order.leq(vi, w));
    }
  }
}

TEST_CASE("the A4 counterexample element sits in the plain interval but not the quotient") {
  auto d = build_datum("A4");
  auto s2v3 = evaluate(d, {2, 1, 2, 4, 3});
  auto v3 = vi_element(d, 3);
  ParabolicContext ctx{&d, 3};
  auto top = w0J(ctx);
  BruhatOrder order(d);
  CHECK(order.leq(v3, s2v3));
  CHECK(order.leq(s2v3, top));
  // not a minimal coset representative: it also has a right descent at 1
  bool extra_descent = false;
  for (int j = 1; j <= 4; ++j)
    if (j != 3 && s2v3.is_right_descent(j)) extra_descent = true;
  CHECK(extra_descent);
  auto plain = interval(d, {v3, top, std::nullopt});
  auto restricted = interval(d, {v3, top, ctx});
  CHECK(restricted.size() < plain.size());
  std::set<WeylElement> rset(restricted.begin(), restricted.end());
  CHECK(rset.count(s2v3) == 0);
}

TEST_CASE("interval edge cases") {
  auto d = build_datum("A3");
  auto e = WeylElement::identity(3);
  auto only_e = interval(d, {e, e, std::nullopt});
  CHECK(only_e.size() == 1);
  CHECK(only_e.front() == e);
}

TEST_CASE("quotient interval [v_1, top] in B3 has 4 elements") {
  auto d = build_datum("B3");
  ParabolicContext ctx{&d, 1};
  auto got = interval(d, {vi_element(d, 1), w0J(ctx), ctx});
  CHECK(got.size() == 4);
}

TEST_CASE("bar involution: bijective, involutive, order-reversing") {
  for (const char* t : {"A3", "B3", "D4"}) {
    auto d = build_datum(t);
    for (int i = 1; i <= d.n; ++i) {
      ParabolicContext ctx{&d, i};
      auto reps = quotient_representatives(ctx);
      BruhatOrder order(d);
      std::set<WeylElement> images;
      for (const auto& tau : reps) {
        auto bar = bar_involution(ctx, tau);
        CHECK(images.insert(bar).second);
        CHECK(bar_involution(ctx, bar) == tau);
      }
      auto top = w0J(ctx);
      CHECK(bar_involution(ctx, top).is_identity());
      CHECK(bar_involution(ctx, WeylElement::identity(d.n)) == top);
      for (const auto& u : reps)
        for (const auto& w : reps)
          CHECK(order.leq(u, w) == order.leq(bar_involution(ctx, w), bar_involution(ctx, u)));
    }
  }
}

TEST_CASE("bar involution rejects non-representatives") {
  auto d = build_datum("A3");
  ParabolicContext ctx{&d, 1};
  CHECK_THROWS_AS(bar_involution(ctx, simple_reflection(d, 2)), std::invalid_argument);
}

TEST_CASE("smi_as_interval matches the enumerated SM_i") {
  struct Case { const char* t; int i; };
  for (auto [t, i] : {Case{"A4", 1}, Case{"A4", 3}, Case{"B4", 1}, Case{"C3", 3},
                      Case{"C4", 4}, Case{"D4", 1}, Case{"D4", 2}, Case{"D5", 5}}) {
    auto d = build_datum(t);
    auto got = smi_as_interval(d, i);
    REQUIRE(got.characterized);
    std::set<WeylElement> lhs(got.elements.begin(), got.elements.end());
    auto smi = enumerate_smi(d, i);
    std::set<WeylElement> rhs(smi.begin(), smi.end());
    CHECK(lhs == rhs);
  }
}

TEST_CASE("uncharacterized cases are reported, not guessed") {
  auto c4 = build_datum("C4");
  CHECK_FALSE(smi_as_interval(c4, 2).characterized);
  auto d6 = build_datum("D6");
  CHECK_FALSE(smi_as_interval(d6, 4).characterized);
  auto f4 = build_datum("F4");
  CHECK_FALSE(smi_as_interval(f4, 3).characterized);
}

TEST_CASE("demazure dimensions at bar(v_i)") {
  struct Case { const char* t; int i; long long dim; };
  for (auto [t, i, dim] : {Case{"C4", 4, 4}, Case{"D5", 1, 7}, Case{"B4", 1, 8},
                           Case{"D4", 4, 3}, Case{"A5", 3, 6}}) {
    auto d = build_datum(t);
    ParabolicContext ctx{&d, i};
    auto tau = bar_involution(ctx, vi_element(d, i));
    CHECK(demazure_dim(d, i, tau) == dim);
    CHECK(demazure_dim_reference(d.label, i) == dim);
  }
}

TEST_CASE("demazure at tau = e is one-dimensional") {
  auto d = build_datum("A4");
  CHECK(demazure_dim(d, 2, WeylElement::identity(4)) == 1);
}

TEST_CASE("demazure refuses non-minuscule weights") {
  auto d = build_datum("B4");
  CHECK_THROWS_AS(demazure_dim(d, 4, WeylElement::identity(4)), std::invalid_argument);
  auto g = build_datum("G2");
  CHECK_THROWS_AS(demazure_dim(g, 1, WeylElement::identity(2)), std::invalid_argument);
}

TEST_CASE("bar-involution cardinality identity") {
  struct Case { const char* t; int i; };
  for (auto [t, i] : {Case{"A4", 2}, Case{"B4", 1}, Case{"C4", 4}, Case{"D5", 2}}) {
    auto d = build_datum(t);
    ParabolicContext ctx{&d, i};
    auto vi = vi_element(d, i);
    auto upper = interval(d, {vi, w0J(ctx), ctx});
    auto lower = interval(d, {WeylElement::identity(d.n), bar_involution(ctx, vi), ctx});
    CHECK(upper.size() == lower.size());
  }
}
