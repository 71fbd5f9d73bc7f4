#include "doctest.h"

#include "smw/minuscule.hpp"
#include "smw/stumbo.hpp"

#include <map>
#include <set>
#include <stdexcept>

using namespace smw;

namespace {

std::set<WeylElement> as_set(const std::vector<WeylElement>& v) {
  return {v.begin(), v.end()};
}

}  // namespace

TEST_CASE("w_j building blocks") {
  auto a5 = build_datum("A5");
  CHECK(build_wj(a5, 3, 3).letters == std::vector<int>{1, 2, 3});
  CHECK(build_wj(a5, 3, 0).letters.empty());
  auto b4 = build_datum("B4");
  CHECK(wj_full_word(b4, 2) == std::vector<int>{4, 3, 2, 1, 2});
  CHECK(build_wj(b4, 2, 3).letters == std::vector<int>{2, 1, 2});
  auto d5 = build_datum("D5");
  CHECK(wj_full_word(d5, 1) == std::vector<int>{5, 4, 3, 1});
  CHECK(wj_full_word(d5, 2) == std::vector<int>{5, 4, 3, 2});
  CHECK(wj_full_word(d5, 4) == std::vector<int>{5, 4, 3, 1, 2, 3, 4});
  CHECK(build_wj(d5, 4, 3, 2).letters == std::vector<int>{2, 3, 4});
  CHECK(build_wj(d5, 4, 3, 1).letters == std::vector<int>{1, 3, 4});
  CHECK(build_wj(d5, 4, 4).letters == std::vector<int>{1, 2, 3, 4});
  CHECK_THROWS_AS(build_wj(d5, 4, 3), std::invalid_argument);        // missing branch
  CHECK_THROWS_AS(build_wj(d5, 4, 2, 1), std::invalid_argument);     // superfluous branch
  CHECK_THROWS_AS(build_wj(d5, 4, 8), std::invalid_argument);        // out of range
}

TEST_CASE("v_i words have length n and classify Strong, all types") {
  for (const char* t : {"A5", "B5", "C5", "D6", "E6", "E7", "E8", "F4", "G2"}) {
    auto d = build_datum(t);
    CHECK_NOTHROW(verify_vi_catalog(d));
    for (int i : d.K) {
      auto w = vi_word(d, i);
      CHECK(static_cast<int>(w.size()) == d.n);
      CHECK(is_reduced(d, w));
    }
  }
  auto c4 = build_datum("C4");
  CHECK_THROWS_AS(vi_word(c4, 1), std::invalid_argument);  // 1 not in K for C
}

TEST_CASE("Stumbo parametrization is a bijection onto the BFS quotient") {
  struct Case { const char* t; int i; };
  for (auto [t, i] : {Case{"A4", 2}, Case{"A5", 3}, Case{"B4", 1}, Case{"B4", 3},
                      Case{"C4", 2}, Case{"C5", 5}, Case{"D4", 1}, Case{"D4", 2},
                      Case{"D5", 3}, Case{"D5", 1}, Case{"D6", 4}, Case{"D5", 5}}) {
    auto d = build_datum(t);
    auto stumbo = enumerate_quotient_stumbo(d, i);
    std::set<WeylElement> from_stumbo;
    for (auto& [s, w] : stumbo) {
      CHECK(from_stumbo.insert(w).second);  // injective
      // length additivity, factor by factor
      int total = 0;
      if (s.alternating) {
        for (size_t k = 0; k < s.l.size(); ++k) total += s.l[k];
      } else {
        for (int v : s.l) total += v;
      }
      CHECK(length(d, w) == total);
    }
    auto bfs = as_set(quotient_representatives({&d, i}));
    CHECK(from_stumbo == bfs);
  }
}

TEST_CASE("B_n quotient has 2^n Stumbo sequences") {
  for (int n : {2, 3, 4, 5}) {
    auto d = build_datum("B" + std::to_string(n));
    CHECK(enumerate_quotient_stumbo(d, 1).size() == (1u << n));
  }
  auto a3 = build_datum("A3");
  CHECK(enumerate_quotient_stumbo(a3, 2).size() == 6);
}

TEST_CASE("closed-form SM_i agrees with the brute-force strong set") {
  struct Case { const char* t; int i; };
  for (const char* t : {"A2", "A3", "A4", "A5", "B2", "B3", "B4", "C3", "C4", "C5",
                        "D4", "D5"}) {
    auto d = build_datum(t);
    // partition the brute-forced strong set by Lambda_w
    std::map<int, std::set<WeylElement>> by_node;
    for (const auto& w : brute_force_strong_set(d)) {
      auto c = classify(d, w);
      for (int i = 1; i <= d.n; ++i)
        if (c.lambda.coord(i) == 1) by_node[i].insert(w);
    }
    std::set<int> covered;
    for (int i : d.K) {
      auto closed = enumerate_smi_closed_form(d, i);
      std::set<WeylElement> s;
      for (auto& [seq, w] : closed) s.insert(w);
      CHECK(s == by_node[i]);
      covered.insert(i);
    }
    for (auto& [i, elems] : by_node) CHECK(covered.count(i) == 1);
  }
}

TEST_CASE("exceptional SM_i matches the embedded counts and brute force where feasible") {
  for (const char* t : {"G2", "F4"}) {
    auto d = build_datum(t);
    std::set<WeylElement> all_strong = as_set(brute_force_strong_set(d));
    std::set<WeylElement> from_quotients;
    for (int i : d.K) {
      auto smi = enumerate_smi_exceptional(d, i);
      CHECK(static_cast<long long>(smi.size()) == closed_form_count(d.label, i));
      for (auto& w : smi) CHECK(from_quotients.insert(w).second);
    }
    CHECK(from_quotients == all_strong);
  }
}

TEST_CASE("count_smi cross-checks closed forms, classical ranks 2..6") {
  for (char fam : {'A', 'B', 'C', 'D'}) {
    for (int n = 2; n <= 6; ++n) {
      if (fam == 'D' && n < 3) continue;
      auto label = TypeLabel::parse(std::string(1, fam) + std::to_string(n));
      auto d = build_datum(label);
      for (int i : d.K) CHECK(count_smi(d, i) == closed_form_count(label, i));
    }
  }
}

TEST_CASE("every SM element passes parity and Stembridge checks") {
  for (const char* t : {"A5", "B5", "C5", "D5", "G2", "F4"}) {
    auto d = build_datum(t);
    for (int i : d.K) {
      for (const auto& w : enumerate_smi(d, i)) {
        auto word = word_of(d, w).letters;
        CHECK(stembridge_check(d, word));
        CHECK(parity_profile(d, w, word).ok);
      }
    }
  }
}

TEST_CASE("v_i is in SM_i") {
  for (const char* t : {"A4", "B4", "C4", "D5", "E6", "F4", "G2"}) {
    auto d = build_datum(t);
    for (int i : d.K) {
      auto smi = as_set(enumerate_smi(d, i));
      CHECK(smi.count(vi_element(d, i)) == 1);
    }
  }
}

TEST_CASE("SM_n of C_n and D_n have the stated sizes") {
  auto c3 = build_datum("C3");
  CHECK(enumerate_smi(c3, 3).size() == 3);
  auto d4 = build_datum("D4");
  CHECK(enumerate_smi(d4, 4).size() == 3);
  auto d5 = build_datum("D5");
  CHECK(enumerate_smi(d5, 1).size() == 7);  // 2^3 - 1
  auto c5 = build_datum("C5");
  CHECK(enumerate_smi(c5, 3).size() == 4);  // C(4,1)
}

TEST_CASE("LSequence serializes to JSON") {
  LSequence s;
  s.i = 2;
  s.l = {2, 1};
  CHECK(s.to_json() == "{\"i\":2,\"l\":[2,1]}");
  s.branch = {0, 1};
  CHECK(s.to_json() == "{\"i\":2,\"l\":[2,1],\"branch\":[0,1]}");
}

TEST_CASE("D-type branch bookkeeping exercises (D4)") {
  auto d = build_datum("D5");
  int ambiguous_pairs = 0;
  for (auto& [s, w] : enumerate_quotient_stumbo(d, 3)) {
    for (size_t k = 0; k + 1 < s.l.size(); ++k) {
      int j = 3 + static_cast<int>(k);
      if (s.l[k] == j - 1 && s.l[k + 1] == j) {
        ++ambiguous_pairs;
        CHECK(s.branch[k] != s.branch[k + 1]);
        CHECK(s.branch[k] + s.branch[k + 1] == 3);
      }
    }
  }
  CHECK(ambiguous_pairs > 0);
}
