#include "smw/stumbo.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "smw/tables.hpp"

namespace smw {

std::string LSequence::to_json() const {
  std::ostringstream os;
  os << "{\"i\":" << i << ",\"l\":[";
  for (size_t k = 0; k < l.size(); ++k) os << (k ? "," : "") << l[k];
  os << "]";
  if (!branch.empty()) {
    os << ",\"branch\":[";
    for (size_t k = 0; k < branch.size(); ++k) os << (k ? "," : "") << branch[k];
    os << "]";
  }
  os << "}";
  return os.str();
}

namespace {

void require_classical(const CartanDatum& d, const char* what) {
  switch (d.label.family) {
    case Family::A:
    case Family::B:
    case Family::C:
    case Family::D: return;
    default:
      throw std::invalid_argument(std::string(what) + " is defined for classical types only, got " +
                                  d.label.str());
  }
}

std::vector<int> descending(int from, int to) {  // from, from-1, ..., to
  std::vector<int> v;
  for (int k = from; k >= to; --k) v.push_back(k);
  return v;
}

std::vector<int> ascending(int from, int to) {
  std::vector<int> v;
  for (int k = from; k <= to; ++k) v.push_back(k);
  return v;
}

void append(std::vector<int>& w, const std::vector<int>& tail) {
  w.insert(w.end(), tail.begin(), tail.end());
}

}  // namespace

std::vector<int> wj_full_word(const CartanDatum& d, int j) {
  require_classical(d, "wj_full_word");
  const int n = d.n;
  if (j < 1 || j > n) throw std::invalid_argument("node out of range");
  std::vector<int> w;
  switch (d.label.family) {
    case Family::A:
      w = ascending(1, j);
      break;
    case Family::B:
    case Family::C:
      w = descending(n, 1);
      append(w, ascending(2, j));
      break;
    case Family::D:
      if (j == 1) {
        w = descending(n, 3);
        w.push_back(1);
      } else if (j == 2) {
        w = descending(n, 3);
        w.push_back(2);
      } else {
        w = descending(n, 3);
        w.push_back(1);
        append(w, ascending(2, j));
      }
      break;
    default:
      break;
  }
  return w;
}

ReducedWord build_wj(const CartanDatum& d, int j, int l, std::optional<int> branch) {
  auto full = wj_full_word(d, j);
  const int len = static_cast<int>(full.size());
  if (l < 0 || l > len)
    throw std::invalid_argument("suffix length " + std::to_string(l) + " out of range for w_" +
                                std::to_string(j));
  const bool ambiguous = d.label.family == Family::D && j >= 3 && l == j - 1;
  if (ambiguous && !branch)
    throw std::invalid_argument("w_" + std::to_string(j) + "(" + std::to_string(l) +
                                ") in type D needs a branch choice");
  if (!ambiguous && branch)
    throw std::invalid_argument("superfluous branch choice for w_" + std::to_string(j) + "(" +
                                std::to_string(l) + ")");
  ReducedWord out;
  if (ambiguous) {
    if (*branch != 1 && *branch != 2) throw std::invalid_argument("branch must be 1 or 2");
    out.letters.push_back(*branch);
    append(out.letters, ascending(3, j));
  } else {
    out.letters.assign(full.end() - l, full.end());
  }
  if (!is_reduced(d, out.letters))
    throw std::logic_error("w_j suffix is not reduced");
  return out;
}

std::vector<int> vi_word(const CartanDatum& d, int i) {
  if (!d.in_K(i))
    throw std::invalid_argument("node " + std::to_string(i) + " is not a short-root node of " +
                                d.label.str());
  const int n = d.n;
  std::vector<int> w;
  switch (d.label.family) {
    case Family::A:
    case Family::C:
      w = descending(n, i + 1);
      append(w, ascending(1, i));
      break;
    case Family::B:
      w = descending(n, 1);
      break;
    case Family::D:
      if (i == 1 || i == 2) {
        w.push_back(3 - i);
        append(w, descending(n, 3));
        w.push_back(i);
      } else {
        w = descending(n, i + 1);
        append(w, ascending(1, i));
      }
      break;
    default: {
      auto type = d.label.str();
      for (const auto& e : tables::kExceptionalVi) {
        if (type == e.type && e.i == i) {
          w.assign(e.word.begin(), e.word.begin() + e.len);
          break;
        }
      }
      if (w.empty())
        throw std::invalid_argument("no v_i catalog entry for " + type + ", i=" + std::to_string(i));
      break;
    }
  }
  if (static_cast<int>(w.size()) != n || !is_reduced(d, w))
    throw std::logic_error("v_i word for " + d.label.str() + ", i=" + std::to_string(i) +
                           " failed the length-n check");
  return w;
}

WeylElement vi_element(const CartanDatum& d, int i) {
  return evaluate(d, vi_word(d, i));
}

void verify_vi_catalog(const CartanDatum& d) {
  for (int i : d.K) {
    auto w = vi_element(d, i);
    auto c = classify(d, w);
    if (c.status != MinusculeClass::Strong || c.lambda != Weight::fundamental(d.n, i))
      throw std::logic_error("v_i self-check failed for " + d.label.str() + ", i=" +
                             std::to_string(i));
  }
}

std::vector<int> lsequence_word(const CartanDatum& d, const LSequence& s) {
  std::vector<int> word;
  if (s.alternating) {
    // factors w_b(l_t), t = h..1, alternating base nodes ending in w_{s.i}(l_1)
    const int h = static_cast<int>(s.l.size());
    for (int t = h; t >= 1; --t) {
      int base = (t % 2 == 1) ? s.i : 3 - s.i;
      append(word, build_wj(d, base, s.l[t - 1]).letters);
    }
  } else {
    const int n = d.n;
    for (int j = n; j >= s.i; --j) {
      int k = j - s.i;
      std::optional<int> br;
      if (s.branch.size() > static_cast<size_t>(k) && s.branch[k] != 0) br = s.branch[k];
      append(word, build_wj(d, j, s.l[k], br).letters);
    }
  }
  return word;
}

namespace {

using Emit = std::function<void(const LSequence&)>;

// Shared recursion for the chained conditions (A)/(BC)/(D): `cap` bounds
// l_j, `couple` restricts l_{j+1} given l_j.
void enumerate_chain(int i, int n, const std::function<int(int)>& cap,
                     const std::function<int(int, int)>& next_cap, const Emit& emit) {
  LSequence s;
  s.i = i;
  s.l.assign(n - i + 1, 0);
  std::function<void(int)> rec = [&](int j) {
    if (j > n) {
      emit(s);
      return;
    }
    int hi = (j == i) ? cap(j) : std::min(cap(j), next_cap(j - 1, s.l[j - 1 - i]));
    for (int v = 0; v <= hi; ++v) {
      s.l[j - i] = v;
      rec(j + 1);
    }
  };
  rec(i);
}

void emit_with_branches(const CartanDatum& d, LSequence s, const Emit& emit) {
  // type D: every l_j = j-1 (j >= 3) needs a branch; consecutive ambiguous
  // factors with l_{j+1} = l_j + 1 = j must take opposite branches.
  const int i = s.i;
  const int n = d.n;
  std::vector<int> amb;
  for (int j = i; j <= n; ++j)
    if (s.l[j - i] == j - 1) amb.push_back(j);
  s.branch.assign(s.l.size(), 0);
  if (amb.empty()) {
    emit(s);
    return;
  }
  std::function<void(size_t)> rec = [&](size_t k) {
    if (k == amb.size()) {
      emit(s);
      return;
    }
    int j = amb[k];
    for (int b = 1; b <= 2; ++b) {
      if (k > 0 && amb[k - 1] == j - 1 && s.l[j - i] == s.l[j - 1 - i] + 1 &&
          s.branch[j - 1 - i] == b)
        continue;  // (D4)
      s.branch[j - i] = b;
      rec(k + 1);
    }
  };
  rec(0);
}

void enumerate_alternating(const CartanDatum& d, int i, int min_h, bool pin_top,
                           const Emit& emit) {
  // strictly decreasing l_1 > l_2 > ... > l_h in [1, n-1]; pin_top forces
  // l_1 = n-1.
  const int n = d.n;
  LSequence s;
  s.i = i;
  s.alternating = true;
  std::function<void(int)> rec = [&](int low) {
    if (static_cast<int>(s.l.size()) >= min_h) emit(s);
    // extend with a smaller value
    int hi = s.l.empty() ? n - 1 : s.l.back() - 1;
    for (int v = hi; v >= 1; --v) {
      s.l.push_back(v);
      rec(v);
      s.l.pop_back();
    }
  };
  if (pin_top) {
    s.l.push_back(n - 1);
    rec(n - 1);
  } else {
    rec(n);
  }
}

}  // namespace

std::vector<std::pair<LSequence, WeylElement>> enumerate_quotient_stumbo(const CartanDatum& d,
                                                                         int i) {
  require_classical(d, "enumerate_quotient_stumbo");
  const int n = d.n;
  if (i < 1 || i > n) throw std::invalid_argument("node out of range");
  std::vector<std::pair<LSequence, WeylElement>> out;
  auto emit = [&](const LSequence& s) {
    out.emplace_back(s, evaluate(d, lsequence_word(d, s)));
  };
  switch (d.label.family) {
    case Family::A:
      // (A): 0 <= l_n <= ... <= l_i <= i
      enumerate_chain(
          i, n, [&](int j) { return j == i ? i : n; },
          [](int, int prev) { return prev; }, emit);
      break;
    case Family::B:
    case Family::C:
      // (BC1)-(BC3)
      enumerate_chain(
          i, n, [&](int j) { return j + i - 1; },
          [](int j, int prev) { return prev <= j - 1 ? prev : prev + 1; }, emit);
      break;
    case Family::D:
      if (i >= 3) {
        // (D1)-(D4)
        enumerate_chain(
            i, n, [&](int j) { return j + i - 2; },
            [](int j, int prev) { return prev <= j - 2 ? prev : prev + 1; },
            [&](const LSequence& s) { emit_with_branches(d, s, emit); });
      } else {
        enumerate_alternating(d, i, 0, false, emit);
      }
      break;
    default:
      break;
  }
  return out;
}

std::vector<std::pair<LSequence, WeylElement>> enumerate_smi_closed_form(const CartanDatum& d,
                                                                         int i) {
  require_classical(d, "enumerate_smi_closed_form");
  if (!d.in_K(i))
    throw std::invalid_argument("node " + std::to_string(i) + " is not in K for " + d.label.str());
  const int n = d.n;
  std::vector<std::pair<LSequence, WeylElement>> out;
  auto emit = [&](const LSequence& s) {
    out.emplace_back(s, evaluate(d, lsequence_word(d, s)));
  };
  // weakly decreasing chains (reading j upward) with the given top bound
  // for l_{i+1} and l_j >= 1, below a fixed l_i.
  auto monotone_tail = [&](int li, int tail_cap) {
    LSequence s;
    s.i = i;
    s.l.assign(n - i + 1, 0);
    s.l[0] = li;
    std::function<void(int)> rec = [&](int j) {
      if (j > n) {
        emit(s);
        return;
      }
      int hi = (j == i + 1) ? tail_cap : s.l[j - 1 - i];
      for (int v = 1; v <= hi; ++v) {
        s.l[j - i] = v;
        rec(j + 1);
      }
    };
    if (i == n) emit(s);
    else rec(i + 1);
  };
  switch (d.label.family) {
    case Family::A:
      // (SA): condition (A) with l_i = i and l_n != 0
      monotone_tail(i, i);
      break;
    case Family::B:
      // (SB): (BC1)-(BC3) with i = 1, and l_n != 0
      enumerate_chain(
          1, n, [&](int j) { return j; },
          [](int j, int prev) { return prev <= j - 1 ? prev : prev + 1; },
          [&](const LSequence& s) {
            if (s.l.back() != 0) emit(s);
          });
      break;
    case Family::C:
      if (i == n) {
        for (int ln = n; ln <= 2 * n - 1; ++ln) monotone_tail(ln, 0);
      } else {
        // (SC): i <= l_i <= 2i-2, 1 <= l_n <= ... <= l_{i+1} <= 2i-l_i-1
        for (int li = i; li <= 2 * i - 2; ++li) monotone_tail(li, 2 * i - li - 1);
      }
      break;
    case Family::D:
      if (i == 1 || i == 2) {
        // (DS1): 2 <= h <= n-1, 1 <= l_h < ... < l_2 < l_1 = n-1
        enumerate_alternating(d, i, 2, true, emit);
      } else if (i == n) {
        // w_n(l_n), n <= l_n <= 2n-2
        for (int ln = n; ln <= 2 * n - 2; ++ln) monotone_tail(ln, 0);
      } else {
        // i <= l_i <= 2i-3, 1 <= l_n <= ... <= l_{i+1} <= 2i-l_i-2
        for (int li = i; li <= 2 * i - 3; ++li) monotone_tail(li, 2 * i - li - 2);
      }
      break;
    default:
      break;
  }
  return out;
}

std::vector<WeylElement> enumerate_smi_exceptional(const CartanDatum& d, int i) {
  switch (d.label.family) {
    case Family::E:
    case Family::F:
    case Family::G: break;
    default:
      throw std::invalid_argument("enumerate_smi_exceptional is for E/F/G types only");
  }
  if (!d.in_K(i))
    throw std::invalid_argument("node " + std::to_string(i) + " is not in K for " + d.label.str());
  const Weight li = Weight::fundamental(d.n, i);
  std::vector<WeylElement> out;
  for (const auto& w : quotient_representatives({&d, i})) {
    auto c = classify(d, w);
    if (c.status == MinusculeClass::Strong && c.lambda == li) out.push_back(w);
  }
  return out;
}

std::vector<WeylElement> enumerate_smi(const CartanDatum& d, int i) {
  switch (d.label.family) {
    case Family::E:
    case Family::F:
    case Family::G:
      return enumerate_smi_exceptional(d, i);
    default: {
      std::vector<WeylElement> out;
      for (auto& [s, w] : enumerate_smi_closed_form(d, i)) out.push_back(w);
      return out;
    }
  }
}

long long closed_form_count(TypeLabel label, int i) {
  const int n = label.rank;
  auto binom = [](int a, int b) -> long long {
    if (b < 0 || b > a) return 0;
    long long r = 1;
    for (int k = 1; k <= b; ++k) r = r * (a - b + k) / k;
    return r;
  };
  switch (label.family) {
    case Family::A:
      return binom(n - 1, i - 1);
    case Family::B:
      if (i == 1) return 1ll << (n - 1);
      break;
    case Family::C:
      if (i == n) return n;
      if (i >= 2 && i <= n - 1) return binom(n - 1, i - 2);
      break;
    case Family::D:
      if (i == 1 || i == 2) return (1ll << (n - 2)) - 1;
      if (i == n) return n - 1;
      if (i >= 3 && i <= n - 1) return binom(n - 2, i - 3);
      break;
    default: {
      auto type = label.str();
      for (const auto& e : tables::kExceptionalCounts)
        if (type == e.type && e.i == i) return e.count;
      break;
    }
  }
  throw std::invalid_argument("no closed-form count for " + label.str() + ", i=" +
                              std::to_string(i));
}

long long count_smi(const CartanDatum& d, int i) {
  long long got = static_cast<long long>(enumerate_smi(d, i).size());
  long long want = closed_form_count(d.label, i);
  if (got != want)
    throw std::logic_error("SM count mismatch for " + d.label.str() + ", i=" + std::to_string(i) +
                           ": enumerated " + std::to_string(got) + ", closed form " +
                           std::to_string(want));
  return got;
}

}  // namespace smw
