#pragma once

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "compgraph/compgraph.hpp"

namespace compgraph::verify {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Independent restatement of the characterization, kept deliberately
/// separate from the oracle's decision table so drift in either copy is
/// caught by the comparison checks.
inline bool reference_admissible(const std::vector<int>& s) {
  const int k = static_cast<int>(s.size());
  switch (k) {
    case 1: return s[0] == 1;
    case 2: return false;
    case 3: return s[0] >= 5 && s[2] >= 4;
    case 4:
      return (s[0] >= 4 && s[2] >= 3 && s[3] == 1) || (s[0] >= 4 && s[2] == 2 && s[3] == 2) ||
             (s[2] >= 3 && s[3] >= 2);
    case 5:
      return (s[0] == 3 && s[1] == 3 && s[2] >= 2 && s[3] == 1) ||
             (s[0] >= 4 && s[2] >= 2 && s[3] == 1) || (s[3] >= 2);
    case 6:
      return (s[0] >= 5 && s[1] == 1) || (s[0] >= 3 && s[1] >= 2 && s[2] == 1) || (s[2] >= 2);
    default: return true;
  }
}

inline std::string tuple_string(const std::vector<int>& sizes) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < sizes.size(); ++i) os << (i ? "," : "") << sizes[i];
  os << ")";
  return os.str();
}

inline CheckResult check_witnesses() {
  CheckResult r{"witness-constructions", true, ""};
  for (WitnessId id : kAllWitnessIds) {
    try {
      const auto t = load_witness(id);
      const int n = t.d.vertex_count();
      for (int i = 0; i < n && r.pass; ++i)
        for (int j = i + 1; j < n; ++j)
          if (set_size(t.d.out_mask(i) & t.d.out_mask(j)) < 1) {
            r.pass = false;
            r.detail = std::string(witness_name(id)) + ": zero row inner product";
            break;
          }
      for (const auto& cond : condition_report(t)) {
        if (cond.applicable && !cond.pass) {
          r.pass = false;
          r.detail = std::string(witness_name(id)) + ": condition " +
                     condition_name(cond.id) + " fails";
        }
      }
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = e.what();
    }
  }
  if (r.pass) r.detail = "10 constructions valid, complete, positive row products";
  return r;
}

inline CheckResult check_oracle_table() {
  CheckResult r{"oracle-decision-table", true, ""};
  int checked = 0;
  for (const auto& sizes : size_tuples_up_to(16)) {
    ++checked;
    if (exists_complete_orientation(sizes).exists != reference_admissible(sizes)) {
      r.pass = false;
      r.detail = "verdict drift at " + tuple_string(sizes);
      return r;
    }
  }
  const std::vector<std::pair<int, std::optional<int>>> expected = {
      {2, std::nullopt}, {3, 13}, {4, 10}, {5, 9}, {6, 9}, {7, 7}, {8, 8}};
  for (auto [k, want] : expected) {
    if (minimal_total(k) != want) {
      r.pass = false;
      r.detail = "minimal_total(" + std::to_string(k) + ") mismatch";
      return r;
    }
  }
  r.detail = std::to_string(checked) + " tuples against the reference table, minimal totals exact";
  return r;
}

inline CheckResult check_counting_refutations() {
  CheckResult r{"counting-refutations", true, ""};
  const std::vector<std::vector<int>> must_refute = {
      {3, 3, 2, 2}, {3, 3, 3, 1}, {2, 2, 2, 1, 1}, {2, 2, 1, 1, 1, 1}, {3, 1, 1, 1, 1, 1}};
  for (const auto& sizes : must_refute) {
    if (!refute_by_counting(sizes).refuted) {
      r.pass = false;
      r.detail = "failed to refute " + tuple_string(sizes);
      return r;
    }
  }
  for (const auto& sizes : size_tuples_up_to(16)) {
    if (exists_complete_orientation(sizes).exists && refute_by_counting(sizes).refuted) {
      r.pass = false;
      r.detail = "refuted the admissible tuple " + tuple_string(sizes);
      return r;
    }
  }
  r.detail = "5 tuples refuted, no admissible tuple with sum <= 16 refuted";
  return r;
}

inline CheckResult check_crosscheck8(int workers) {
  CheckResult r{"search-oracle-crosscheck-sum8", true, ""};
  SearchConfig cfg;
  cfg.workers = workers;
  const auto rep = oracle_crosscheck(8, cfg);
  if (!rep.disagreements.empty()) {
    r.pass = false;
    r.detail = "disagreement at " + tuple_string(rep.rows[rep.disagreements[0]].sizes);
    return r;
  }
  const std::vector<std::vector<int>> want_yes = {
      {1, 1, 1, 1, 1, 1, 1}, {2, 1, 1, 1, 1, 1, 1}, {1, 1, 1, 1, 1, 1, 1, 1}};
  if (rep.yes_tuples() != want_yes) {
    r.pass = false;
    r.detail = "unexpected admissible set at sum <= 8";
    return r;
  }
  r.detail = std::to_string(rep.rows.size()) + " tuples, 0 disagreements, admissible set exact";
  return r;
}

inline CheckResult check_refute_444() {
  CheckResult r{"k444-balanced-exhaustion", true, ""};
  const auto res = refute_444();
  if (res.balanced_matrices != 90) {
    r.pass = false;
    r.detail = "expected 90 balanced matrices, got " + std::to_string(res.balanced_matrices);
  } else if (res.outcome.nodes_explored != 729000) {
    r.pass = false;
    r.detail = "expected 729000 candidates, examined " +
               std::to_string(res.outcome.nodes_explored);
  } else if (res.outcome.result != SearchResult::Exhausted) {
    r.pass = false;
    r.detail = "found an orientation of K_{4,4,4} with complete competition graph";
  } else {
    r.detail = "B=90, 90^3=729000 candidates, none complete";
  }
  return r;
}

inline CheckResult check_exhaustive_refutations(int workers) {
  CheckResult r{"exhaustive-refutations", true, ""};
  SearchConfig cfg;
  cfg.workers = workers;
  const std::vector<std::vector<int>> tuples = {{4, 1, 1, 1, 1, 1},
                                                {2, 2, 1, 1, 1, 1},
                                                {2, 2, 2, 1, 1},
                                                {3, 1, 1, 1, 1, 1},
                                                {3, 2, 2, 1, 1}};
  std::uint64_t nodes = 0;
  for (const auto& sizes : tuples) {
    const auto out = exhaustive_search(sizes, cfg);
    nodes += out.nodes_explored;
    if (out.result != SearchResult::Exhausted) {
      r.pass = false;
      r.detail = tuple_string(sizes) + ": " + search_result_name(out.result);
      return r;
    }
  }
  r.detail = "5 size tuples exhausted with no witness (" + std::to_string(nodes) + " nodes)";
  return r;
}

inline CheckResult check_synthesis_sweep(int max_sum) {
  CheckResult r{"witness-synthesis-sweep", true, ""};
  int built = 0;
  for (const auto& sizes : size_tuples_up_to(max_sum)) {
    const bool yes = exists_complete_orientation(sizes).exists;
    const auto witness = synthesize_witness(sizes);
    if (yes != witness.has_value()) {
      r.pass = false;
      r.detail = "synthesis disagrees with the verdict at " + tuple_string(sizes);
      return r;
    }
    if (witness) {
      ++built;
      if (!validate(*witness).empty() || !is_complete_competition(*witness) ||
          witness->parts.sizes() != sizes) {
        r.pass = false;
        r.detail = "defective witness for " + tuple_string(sizes);
        return r;
      }
    }
  }
  r.detail = std::to_string(built) + " witnesses built and re-verified (sum <= " +
             std::to_string(max_sum) + ")";
  return r;
}

inline CheckResult check_random_synthesis(std::uint64_t seed, int count, int max_sum) {
  CheckResult r{"random-synthesis-spotcheck", true, ""};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> sum_dist(9, max_sum);
  int built = 0;
  while (built < count) {
    const int sum = sum_dist(rng);
    // random nonincreasing tuple with the chosen sum
    std::vector<int> sizes;
    int remaining = sum;
    int hi = sum;
    while (remaining > 0) {
      std::uniform_int_distribution<int> part(1, std::min(hi, remaining));
      const int s = part(rng);
      sizes.push_back(s);
      hi = s;
      remaining -= s;
    }
    if (!exists_complete_orientation(sizes).exists) continue;
    const auto witness = synthesize_witness(sizes);
    if (!witness || !validate(*witness).empty() || !is_complete_competition(*witness)) {
      r.pass = false;
      r.detail = "defective witness for " + tuple_string(sizes);
      return r;
    }
    ++built;
  }
  r.detail = std::to_string(count) + " random admissible tuples synthesized (seed " +
             std::to_string(seed) + ")";
  return r;
}

inline std::vector<CheckResult> verify_paper(bool full, int workers, std::uint64_t seed) {
  std::vector<CheckResult> checks;
  checks.push_back(check_witnesses());
  checks.push_back(check_oracle_table());
  checks.push_back(check_counting_refutations());
  checks.push_back(check_crosscheck8(workers));
  checks.push_back(check_refute_444());
  if (full) {
    checks.push_back(check_exhaustive_refutations(workers));
    checks.push_back(check_synthesis_sweep(14));
    checks.push_back(check_random_synthesis(seed, 50, 20));
  }
  return checks;
}

}  // namespace compgraph::verify
