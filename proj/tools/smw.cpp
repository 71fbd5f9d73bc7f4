// smw: classify minuscule elements, enumerate SM_i, reproduce the reference
// tables, and run the cross-module invariant suite from the command line.

#include <algorithm>
#include <atomic>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "smw/bruhat.hpp"
#include "smw/cartan.hpp"
#include "smw/minuscule.hpp"
#include "smw/stumbo.hpp"
#include "smw/tables.hpp"
#include "smw/weyl.hpp"

namespace {

using namespace smw;

enum class Format { tsv, json, pretty };

struct Options {
  Format format = Format::pretty;
  long long budget = kDefaultBudget;
  int jobs = 1;
};

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Format parse_format(const std::string& s) {
  if (s == "tsv") return Format::tsv;
  if (s == "json") return Format::json;
  if (s == "pretty") return Format::pretty;
  throw UsageError("unknown format '" + s + "' (expected tsv, json, or pretty)");
}

TypeLabel parse_type(const std::string& s) {
  try {
    return TypeLabel::parse(s);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::string word_json(const std::vector<int>& word) {
  std::string out = "[";
  for (size_t k = 0; k < word.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(word[k]);
  }
  return out + "]";
}

// Deterministic element ordering for all listings: length, then the
// canonical reduced word lexicographically.
std::vector<std::vector<int>> sorted_words(const CartanDatum& d,
                                           const std::vector<WeylElement>& elems) {
  std::vector<std::vector<int>> words;
  words.reserve(elems.size());
  for (const auto& w : elems) words.push_back(word_of(d, w).letters);
  std::sort(words.begin(), words.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return words;
}

// Runs tasks over a fixed-size worker pool; each task fills its own output
// slot, so emission order never depends on scheduling.
void run_parallel(std::vector<std::function<void()>>& tasks, int jobs) {
  if (jobs <= 1 || tasks.size() <= 1) {
    for (auto& t : tasks) t();
    return;
  }
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t k = next.fetch_add(1); k < tasks.size(); k = next.fetch_add(1)) tasks[k]();
  };
  std::vector<std::thread> pool;
  int n = std::min<int>(jobs, static_cast<int>(tasks.size()));
  for (int k = 0; k < n; ++k) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
}

int require_node_in_K(const CartanDatum& d, int i) {
  if (i < 1 || i > d.n)
    throw UsageError("node " + std::to_string(i) + " is out of range for " + d.label.str());
  if (!d.in_K(i)) {
    std::string k;
    for (int j : d.K) k += (k.empty() ? "" : ", ") + std::to_string(j);
    throw UsageError("node " + std::to_string(i) + " of " + d.label.str() +
                     " is not a short-root node; SM_i is empty outside K = {" + k + "}");
  }
  return i;
}

int cmd_classify(const Options& opt, const std::string& type, const std::string& word_text) {
  auto d = build_datum(parse_type(type));
  std::vector<int> word;
  try {
    word = parse_word(d, word_text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  auto c = classify(d, evaluate(d, word));
  const char* status = c.status == MinusculeClass::NotMinuscule          ? "NotMinuscule"
                       : c.status == MinusculeClass::MinusculeNotDominant ? "MinusculeNotDominant"
                       : c.status == MinusculeClass::DominantNotStrong    ? "DominantNotStrong"
                                                                          : "Strong";
  bool strong = c.status == MinusculeClass::Strong;
  int node = 0;
  if (strong)
    for (int i = 1; i <= d.n; ++i)
      if (c.lambda.coord(i) == 1) node = i;
  switch (opt.format) {
    case Format::tsv:
      std::cout << status << "\t" << (strong ? std::to_string(node) : "") << "\n";
      break;
    case Format::json:
      std::cout << c.to_json() << "\n";
      break;
    case Format::pretty:
      std::cout << "status: " << status << "\n";
      if (strong) std::cout << "lambda: Lambda_" << node << " = " << c.lambda.str() << "\n";
      break;
  }
  return 0;
}

int cmd_enumerate(const Options& opt, const std::string& type, int node) {
  auto d = build_datum(parse_type(type));
  int i = require_node_in_K(d, node);
  auto elems = enumerate_smi(d, i);
  auto words = sorted_words(d, elems);
  long long expected = closed_form_count(d.label, i);
  bool match = static_cast<long long>(words.size()) == expected;
  switch (opt.format) {
    case Format::tsv:
      for (const auto& w : words) std::cout << w.size() << "\t" << word_str(w) << "\n";
      std::cout << "count\t" << words.size() << "\t" << expected << "\n";
      break;
    case Format::json: {
      std::cout << "{\"type\":\"" << d.label.str() << "\",\"i\":" << i << ",\"count\":"
                << words.size() << ",\"expected\":" << expected
                << ",\"match\":" << (match ? "true" : "false") << ",\"elements\":[";
      for (size_t k = 0; k < words.size(); ++k) {
        if (k) std::cout << ",";
        std::cout << "{\"length\":" << words[k].size() << ",\"word\":" << word_json(words[k])
                  << "}";
      }
      std::cout << "]}\n";
      break;
    }
    case Format::pretty:
      std::cout << "SM_" << i << " of " << d.label.str() << ":\n";
      for (const auto& w : words)
        std::cout << "  l=" << w.size() << "  " << word_str(w) << "\n";
      std::cout << "count: " << words.size() << " (closed form: " << expected << ", "
                << (match ? "match" : "MISMATCH") << ")\n";
      break;
  }
  return match ? 0 : kExitMismatch;
}

int cmd_table2(const Options& opt) {
  struct Cell {
    std::string type;
    int i;
    long long computed = -1;
    long long expected = -1;
  };
  std::vector<Cell> cells;
  for (const char* t : {"E6", "E7", "E8", "F4", "G2"}) {
    auto d = build_datum(t);
    for (int i : d.K) cells.push_back({t, i, -1, closed_form_count(d.label, i)});
  }
  std::vector<std::function<void()>> tasks;
  for (auto& c : cells)
    tasks.push_back([&c] {
      auto d = build_datum(c.type);
      c.computed = static_cast<long long>(enumerate_smi_exceptional(d, c.i).size());
    });
  run_parallel(tasks, opt.jobs);

  bool all_match = true;
  for (const auto& c : cells) all_match = all_match && c.computed == c.expected;
  switch (opt.format) {
    case Format::tsv:
      for (const auto& c : cells)
        std::cout << c.type << "\t" << c.i << "\t" << c.computed << "\t" << c.expected << "\t"
                  << (c.computed == c.expected ? "match" : "MISMATCH") << "\n";
      break;
    case Format::json: {
      std::cout << "{\"cells\":[";
      for (size_t k = 0; k < cells.size(); ++k) {
        const auto& c = cells[k];
        if (k) std::cout << ",";
        std::cout << "{\"type\":\"" << c.type << "\",\"i\":" << c.i << ",\"count\":" << c.computed
                  << ",\"expected\":" << c.expected
                  << ",\"match\":" << (c.computed == c.expected ? "true" : "false") << "}";
      }
      std::cout << "],\"all_match\":" << (all_match ? "true" : "false") << "}\n";
      break;
    }
    case Format::pretty: {
      std::cout << "strong minuscule counts, exceptional types:\n";
      std::string cur;
      for (const auto& c : cells) {
        if (c.type != cur) {
          cur = c.type;
          std::cout << cur << ":\n";
        }
        std::cout << "  i=" << c.i << "  " << c.computed << "  (expected " << c.expected << ", "
                  << (c.computed == c.expected ? "match" : "MISMATCH") << ")\n";
      }
      std::cout << (all_match ? "all 24 cells match\n" : "MISMATCH detected\n");
      break;
    }
  }
  return all_match ? 0 : kExitMismatch;
}

int cmd_demazure(const Options& opt, const std::string& type, int node) {
  auto d = build_datum(parse_type(type));
  if (node < 1 || node > d.n)
    throw UsageError("node " + std::to_string(node) + " is out of range for " + d.label.str());
  if (!is_minuscule_weight(d, node))
    throw UsageError("Lambda_" + std::to_string(node) + " is not a minuscule weight of " +
                     d.label.str());
  ParabolicContext ctx{&d, node};
  auto tau = bar_involution(ctx, vi_element(d, node));
  long long dim = demazure_dim(d, node, tau);
  auto expected = demazure_dim_reference(d.label, node);
  bool match = !expected || dim == *expected;
  switch (opt.format) {
    case Format::tsv:
      std::cout << d.label.str() << "\t" << node << "\t" << dim << "\t"
                << (expected ? std::to_string(*expected) : "") << "\t"
                << (match ? "match" : "MISMATCH") << "\n";
      break;
    case Format::json:
      std::cout << "{\"type\":\"" << d.label.str() << "\",\"i\":" << node << ",\"dim\":" << dim;
      if (expected) std::cout << ",\"expected\":" << *expected;
      std::cout << ",\"match\":" << (match ? "true" : "false") << "}\n";
      break;
    case Format::pretty:
      std::cout << "dim E_tau(Lambda_" << node << ") in " << d.label.str() << " at tau = bar(v_"
                << node << "): " << dim << "\n";
      if (expected)
        std::cout << "closed form: " << *expected << " (" << (match ? "match" : "MISMATCH")
                  << ")\n";
      else
        std::cout << "no closed-form reference for this case\n";
      break;
  }
  return match ? 0 : kExitMismatch;
}

struct VerifyReport {
  std::string type;
  std::vector<std::pair<bool, std::string>> checks;  // (passed, description)
};

VerifyReport verify_one(const TypeLabel& label, long long budget) {
  VerifyReport rep{label.str(), {}};
  auto run = [&rep](const std::string& what, auto&& fn) {
    try {
      fn();
      rep.checks.emplace_back(true, what);
    } catch (const std::exception& e) {
      rep.checks.emplace_back(false, what + ": " + e.what());
    }
  };
  auto d = build_datum(label);
  run("v_i catalog reduced, length n, Strong(Lambda_i)", [&] { verify_vi_catalog(d); });
  for (int i : d.K) {
    run("SM_" + std::to_string(i) + " count matches closed form",
        [&] { count_smi(d, i); });
    run("SM_" + std::to_string(i) + " parity and Stembridge checks", [&] {
      for (const auto& w : enumerate_smi(d, i)) {
        auto word = word_of(d, w).letters;
        if (!stembridge_check(d, word)) throw std::logic_error("Stembridge violation");
        if (!parity_profile(d, w, word).ok) throw std::logic_error("parity violation");
      }
    });
  }
  bool classical = label.family == Family::A || label.family == Family::B ||
                   label.family == Family::C || label.family == Family::D;
  if (classical) {
    for (int i = 1; i <= d.n; ++i) {
      run("Stumbo parametrization bijects onto W^{J_" + std::to_string(i) + "}", [&] {
        auto stumbo = enumerate_quotient_stumbo(d, i);
        std::set<WeylElement> seen;
        for (auto& [s, w] : stumbo) {
          if (!seen.insert(w).second) throw std::logic_error("duplicate element");
          int total = 0;
          for (int v : s.l) total += v;
          if (length(d, w) != total) throw std::logic_error("length additivity violation");
        }
        auto reps = quotient_representatives({&d, i});
        if (seen != std::set<WeylElement>(reps.begin(), reps.end()))
          throw std::logic_error("parametrization misses the BFS quotient");
      });
    }
  }
  if (d.group_order <= budget) {
    run("brute-force strong set partitions by Lambda_w into the SM_i", [&] {
      std::map<int, std::set<WeylElement>> by_node;
      for (const auto& w : brute_force_strong_set(d, budget)) {
        auto c = classify(d, w);
        for (int i = 1; i <= d.n; ++i)
          if (c.lambda.coord(i) == 1) by_node[i].insert(w);
      }
      for (int i : d.K) {
        auto smi = enumerate_smi(d, i);
        if (by_node[i] != std::set<WeylElement>(smi.begin(), smi.end()))
          throw std::logic_error("SM_" + std::to_string(i) + " disagrees with brute force");
      }
    });
  }
  return rep;
}

int cmd_verify(const Options& opt, const std::string& scope, int max_rank) {
  std::vector<TypeLabel> labels;
  if (scope.size() == 1) {
    char fam = static_cast<char>(std::toupper(static_cast<unsigned char>(scope[0])));
    if (std::string("ABCD").find(fam) == std::string::npos)
      throw UsageError("verify scope must be a family letter A/B/C/D or a full type label");
    int lo = fam == 'D' ? 4 : 2;
    if (max_rank < lo)
      throw UsageError("max rank " + std::to_string(max_rank) + " is below the minimum rank " +
                       std::to_string(lo) + " for family " + std::string(1, fam));
    for (int n = lo; n <= max_rank; ++n)
      labels.push_back(parse_type(std::string(1, fam) + std::to_string(n)));
  } else {
    labels.push_back(parse_type(scope));
  }
  std::vector<VerifyReport> reports(labels.size());
  std::vector<std::function<void()>> tasks;
  for (size_t k = 0; k < labels.size(); ++k)
    tasks.push_back([&, k] { reports[k] = verify_one(labels[k], opt.budget); });
  run_parallel(tasks, opt.jobs);

  int failures = 0, total = 0;
  for (const auto& rep : reports)
    for (const auto& [ok, what] : rep.checks) {
      ++total;
      if (!ok) ++failures;
    }
  switch (opt.format) {
    case Format::tsv:
      for (const auto& rep : reports)
        for (const auto& [ok, what] : rep.checks)
          std::cout << rep.type << "\t" << (ok ? "ok" : "FAIL") << "\t" << what << "\n";
      std::cout << "summary\t" << total << "\t" << failures << "\n";
      break;
    case Format::json: {
      std::cout << "{\"reports\":[";
      for (size_t k = 0; k < reports.size(); ++k) {
        if (k) std::cout << ",";
        std::cout << "{\"type\":\"" << reports[k].type << "\",\"checks\":[";
        for (size_t c = 0; c < reports[k].checks.size(); ++c) {
          if (c) std::cout << ",";
          std::string what = reports[k].checks[c].second;
          for (auto& ch : what)
            if (ch == '"') ch = '\'';
          std::cout << "{\"ok\":" << (reports[k].checks[c].first ? "true" : "false")
                    << ",\"what\":\"" << what << "\"}";
        }
        std::cout << "]}";
      }
      std::cout << "],\"total\":" << total << ",\"failures\":" << failures << "}\n";
      break;
    }
    case Format::pretty:
      for (const auto& rep : reports) {
        std::cout << rep.type << ":\n";
        for (const auto& [ok, what] : rep.checks)
          std::cout << "  " << (ok ? "ok  " : "FAIL") << "  " << what << "\n";
      }
      std::cout << total << " checks, " << failures << " failures\n";
      break;
  }
  return failures == 0 ? 0 : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations with strong minuscule Weyl group elements"};
  app.require_subcommand(1);

  Options opt;
  std::string format_name = "pretty";
  app.add_option("--format", format_name, "output format: tsv, json, or pretty")
      ->capture_default_str();
  app.add_option("--budget", opt.budget, "element-count limit for full-group enumeration")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--jobs", opt.jobs, "worker threads for independent (type, i) tasks")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  std::string type, word_text = "", scope;
  int node = 0, max_rank = 0;

  auto* classify_cmd =
      app.add_subcommand("classify", "classify a word as strong/dominant/minuscule or neither");
  classify_cmd->add_option("type", type, "type label, e.g. B3")->required();
  classify_cmd->add_option("word", word_text, "comma-separated generator indices, e.g. 3,2,1");

  auto* enumerate_cmd = app.add_subcommand("enumerate", "list SM_i as reduced words");
  enumerate_cmd->add_option("type", type, "type label")->required();
  enumerate_cmd->add_option("i", node, "node index (must lie in K)")->required();

  auto* table2_cmd =
      app.add_subcommand("table2", "strong minuscule counts for E6/E7/E8/F4/G2, all i in K");

  auto* demazure_cmd =
      app.add_subcommand("demazure", "dim E_tau(Lambda_i) at tau = bar(v_i)");
  demazure_cmd->add_option("type", type, "type label")->required();
  demazure_cmd->add_option("i", node, "node index (Lambda_i must be minuscule)")->required();

  auto* verify_cmd = app.add_subcommand("verify", "run the cross-module invariant suite");
  verify_cmd->add_option("scope", scope, "family letter A/B/C/D or a full type label")->required();
  verify_cmd->add_option("max_rank", max_rank, "largest rank to sweep (family scope only)");

  // let --format/--budget/--jobs appear after the subcommand as well
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    opt.format = parse_format(format_name);
    if (classify_cmd->parsed()) return cmd_classify(opt, type, word_text);
    if (enumerate_cmd->parsed()) return cmd_enumerate(opt, type, node);
    if (table2_cmd->parsed()) return cmd_table2(opt);
    if (demazure_cmd->parsed()) return cmd_demazure(opt, type, node);
    if (verify_cmd->parsed()) {
      if (scope.size() == 1 && max_rank == 0)
        throw UsageError("family scope requires a max_rank argument");
      return cmd_verify(opt, scope, max_rank);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::logic_error& e) {
    // reference-value cross-checks fail hard inside the library
    std::cerr << "mismatch: " << e.what() << "\n";
    return kExitMismatch;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
