#include "doctest.h"

#include "smw/minuscule.hpp"
#include "smw/stumbo.hpp"

#include <functional>
#include <map>
#include <set>
#include <stdexcept>

using namespace smw;

TEST_CASE("lambda-minuscule basics") {
  auto d = build_datum("A3");
  CHECK(is_lambda_minuscule(d, {}, Weight::zero(3)));
  for (int i = 1; i <= 3; ++i)
    CHECK(is_lambda_minuscule(d, {i}, Weight::fundamental(3, i)));
  CHECK_FALSE(is_lambda_minuscule(d, {1}, Weight::fundamental(3, 2)));
  CHECK_THROWS_AS(is_lambda_minuscule(d, {1, 1}, Weight::fundamental(3, 1)),
                  std::invalid_argument);
}

TEST_CASE("v_1 in B_n is Lambda_1-minuscule") {
  for (int n : {2, 3, 4, 5}) {
    auto d = build_datum("B" + std::to_string(n));
    CHECK(is_lambda_minuscule(d, vi_word(d, 1), Weight::fundamental(n, 1)));
  }
}

TEST_CASE("solver on simple reflections") {
  auto d = build_datum("B3");
  auto sol = solve_minuscule_weights(d, simple_reflection(d, 2));
  CHECK(sol.consistent);
  CHECK(sol.forced == Weight::fundamental(3, 2));
  CHECK(sol.free_nodes == std::vector<int>{1, 3});
}

TEST_CASE("solver on v_k gives Strong(Lambda_k) for classical types") {
  for (const char* t : {"A4", "B4", "C4", "D5"}) {
    auto d = build_datum(t);
    for (int k : d.K) {
      auto c = classify(d, vi_element(d, k));
      CHECK(c.status == MinusculeClass::Strong);
      CHECK(c.lambda == Weight::fundamental(d.n, k));
    }
  }
}

TEST_CASE("s_2 v_3 in A4 is not minuscule") {
  auto d = build_datum("A4");
  auto w = evaluate(d, {2, 1, 2, 4, 3});
  CHECK(length(d, w) == 5);
  auto sol = solve_minuscule_weights(d, w);
  CHECK_FALSE(sol.consistent);
  CHECK(classify(d, w).status == MinusculeClass::NotMinuscule);
}

TEST_CASE("identity classifies as dominant but not strong") {
  auto d = build_datum("A2");
  auto c = classify(d, WeylElement::identity(2));
  CHECK(c.status == MinusculeClass::DominantNotStrong);
}

TEST_CASE("partial support is never strong") {
  auto d = build_datum("A4");
  // s_2 s_3: dominant minuscule (Lambda_2 works), support != I
  auto w = evaluate(d, {2, 3});
  auto sol = solve_minuscule_weights(d, w);
  CHECK(sol.consistent);
  CHECK(sol.forced.dominant());
  CHECK_FALSE(sol.free_nodes.empty());
  CHECK(classify(d, w).status == MinusculeClass::DominantNotStrong);
}

TEST_CASE("brute-force strong sets at small rank, with the dominant-weight oracle") {
  auto count_by_node = [](const CartanDatum& d, bool cross) {
    std::map<int, int> by;
    for (const auto& w : brute_force_strong_set(d, kDefaultBudget, cross)) {
      auto c = classify(d, w);
      for (int i = 1; i <= d.n; ++i)
        if (c.lambda.coord(i) == 1) ++by[i];
    }
    return by;
  };
  CHECK(count_by_node(build_datum("G2"), true) == std::map<int, int>{{1, 1}});
  CHECK(count_by_node(build_datum("A2"), true) == std::map<int, int>{{1, 1}, {2, 1}});
  CHECK(count_by_node(build_datum("B3"), true) == std::map<int, int>{{1, 4}});
  CHECK(count_by_node(build_datum("C3"), false) ==
        std::map<int, int>{{2, 1}, {3, 3}});
  CHECK(count_by_node(build_datum("D4"), false) ==
        std::map<int, int>{{1, 3}, {2, 3}, {3, 1}, {4, 3}});
}

TEST_CASE("strong elements have full support and Lambda_w = Lambda_i with i in K") {
  for (const char* t : {"A4", "B3", "C4", "D4", "G2", "F4"}) {
    auto d = build_datum(t);
    for (const auto& w : brute_force_strong_set(d)) {
      CHECK(support(d, w).size() == static_cast<size_t>(d.n));
      auto c = classify(d, w);
      int hits = 0;
      for (int i : d.K)
        if (c.lambda == Weight::fundamental(d.n, i)) ++hits;
      CHECK(hits == 1);
    }
  }
}

TEST_CASE("a reduced word of a strong element never ends outside K") {
  for (const char* t : {"B4", "C4", "G2", "F4"}) {
    auto d = build_datum(t);
    for (const auto& w : enumerate_group(d)) {
      auto sol = solve_minuscule_weights(d, w);
      if (!sol.consistent || !sol.forced.dominant()) continue;  // not dominant minuscule
      if (length(d, w) == 0) continue;
      auto word = word_of(d, w).letters;
      if (!d.in_K(word.back()))
        CHECK(classify(d, w).status != MinusculeClass::Strong);
    }
  }
}

TEST_CASE("factorization: strong with Lambda_k iff minuscule and l(w v_k^-1) = l(w) - n") {
  for (const char* t : {"A3", "B3", "C3", "D4", "G2"}) {
    auto d = build_datum(t);
    std::map<int, WeylElement> vk_inv;
    for (int k : d.K) vk_inv.emplace(k, inverse(d, vi_element(d, k)));
    for (const auto& w : enumerate_group(d)) {
      auto c = classify(d, w);
      bool minuscule = c.status != MinusculeClass::NotMinuscule;
      for (int k : d.K) {
        bool strong_k = c.status == MinusculeClass::Strong &&
                        c.lambda == Weight::fundamental(d.n, k);
        bool factored =
            minuscule && length(d, multiply(w, vk_inv.at(k))) == length(d, w) - d.n;
        CHECK(strong_k == factored);
      }
    }
  }
}

TEST_CASE("word independence of the minuscule condition across braid-equivalent words") {
  auto d = build_datum("B3");
  for (const auto& w : enumerate_group(d)) {
    auto sol = solve_minuscule_weights(d, w);
    if (!sol.consistent) continue;
    auto base = word_of(d, w).letters;
    // all reduced words via DFS over right descents, capped for speed
    std::set<std::vector<int>> words;
    std::vector<int> cur;
    std::function<void(WeylElement)> dfs = [&](WeylElement v) {
      if (words.size() > 40) return;
      if (v.is_identity()) {
        auto word = cur;
        std::reverse(word.begin(), word.end());
        words.insert(word);
        return;
      }
      for (int i = 1; i <= d.n; ++i)
        if (v.is_right_descent(i)) {
          cur.push_back(i);
          dfs(mul_right(d, v, i));
          cur.pop_back();
        }
    };
    dfs(w);
    for (const auto& word : words)
      CHECK(is_lambda_minuscule(d, word, sol.forced));
  }
}

TEST_CASE("parity profile holds on strong elements and rejects others") {
  for (const char* t : {"A4", "B3", "C4", "D4"}) {
    auto d = build_datum(t);
    for (const auto& w : brute_force_strong_set(d)) {
      auto word = word_of(d, w).letters;
      auto prof = parity_profile(d, w, word);
      CHECK(prof.ok);
      // from the defining condition: delta_{i,i_p} + u_p + 2t_p - 2q_p = 1,
      // so u_p = 2(q_p - t_p) when i_p = i, and 2(q_p - t_p) + 1 otherwise
      for (size_t p = 0; p < prof.u.size(); ++p)
        CHECK(prof.u[p] == 2 * (prof.q[p] - prof.t[p]) + (word[p] == prof.i ? 0 : 1));
    }
  }
  auto d = build_datum("A3");
  CHECK_THROWS_AS(parity_profile(d, WeylElement::identity(3), {}), std::invalid_argument);
}

TEST_CASE("parity of v_1 in B3 along 3,2,1") {
  auto d = build_datum("B3");
  auto prof = parity_profile(d, evaluate(d, {3, 2, 1}), {3, 2, 1});
  CHECK(prof.i == 1);
  CHECK(prof.ok);
}

TEST_CASE("Stembridge constraint on all dominant minuscule elements") {
  for (const char* t : {"A4", "B4", "C3", "D4", "G2"}) {
    auto d = build_datum(t);
    for (const auto& w : enumerate_group(d)) {
      auto sol = solve_minuscule_weights(d, w);
      if (sol.consistent && sol.forced.dominant())
        CHECK(stembridge_check(d, word_of(d, w).letters));
    }
  }
}

TEST_CASE("classification serializes to JSON") {
  auto d = build_datum("B3");
  auto c = classify(d, evaluate(d, {3, 2, 1}));
  CHECK(c.to_json() == "{\"status\":\"Strong\",\"lambda\":[1,0,0]}");
  CHECK(classify(d, WeylElement::identity(3)).to_json() ==
        "{\"status\":\"DominantNotStrong\"}");
}
