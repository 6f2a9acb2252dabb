#include "eco/oracles.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "eco/error.hpp"

namespace eco {
namespace {

void require_feasible(int n, int cap, const char* what) {
  if (n < 0 || n > cap) {
    throw Error(ErrorKind::InfeasibleSize,
                std::string(what) + ": n=" + std::to_string(n) + " outside [0, " +
                    std::to_string(cap) + "]",
                n);
  }
}

// Every maximal run of set bits (consecutive positions) has even length.
bool runs_even(unsigned mask, int n) {
  int run = 0;
  for (int i = 0; i <= n; ++i) {
    if (i < n && (mask >> i & 1u)) {
      ++run;
    } else {
      if (run % 2 != 0) return false;
      run = 0;
    }
  }
  return true;
}

// Visits every restricted growth string of length m; one per set partition.
std::uint64_t count_set_partitions(int m) {
  if (m == 0) return 1;
  std::vector<int> rgs(static_cast<std::size_t>(m), 0);
  std::vector<int> maxima(static_cast<std::size_t>(m), 0);
  std::uint64_t count = 0;
  while (true) {
    ++count;
    int i = m - 1;
    while (i > 0 && rgs[i] == maxima[i - 1] + 1) --i;
    if (i == 0) break;
    ++rgs[i];
    maxima[i] = std::max(maxima[i - 1], rgs[i]);
    for (int j = i + 1; j < m; ++j) {
      rgs[j] = 0;
      maxima[j] = maxima[i];
    }
  }
  return count;
}

std::uint64_t count_paths(int remaining, int height, bool long_level, bool odd_level) {
  if (height > remaining) return 0;
  if (remaining == 0) return 1;
  std::uint64_t total = count_paths(remaining - 1, height + 1, long_level, odd_level);
  if (height > 0) total += count_paths(remaining - 1, height - 1, long_level, odd_level);
  if (odd_level || height % 2 == 0) total += count_paths(remaining - 1, height, long_level, odd_level);
  if (long_level && remaining >= 2) total += count_paths(remaining - 2, height, long_level, odd_level);
  return total;
}

// Tree encoded by a Dyck word: '(' descends to a new child, ')' returns.
bool branches_long(const std::vector<char>& word) {
  const std::size_t nodes = word.size() / 2 + 1;
  std::vector<std::size_t> parent(nodes, 0);
  std::vector<int> children(nodes, 0);
  std::size_t current = 0;
  std::size_t next = 1;
  for (char c : word) {
    if (c == '(') {
      parent[next] = current;
      ++children[current];
      current = next++;
    } else {
      current = parent[current];
    }
  }
  auto special = [&](std::size_t v) { return v == 0 || children[v] != 1; };
  // walk up from each non-root special node to the previous special node
  for (std::size_t v = 1; v < nodes; ++v) {
    if (!special(v)) continue;
    int length = 1;
    std::size_t u = parent[v];
    while (!special(u)) {
      ++length;
      u = parent[u];
    }
    if (length < 2) return false;
  }
  return true;
}

void walk_dyck(std::vector<char>& word, int open, int close, int n, std::uint64_t& count) {
  if (close == n) {
    if (branches_long(word)) ++count;
    return;
  }
  if (open < n) {
    word.push_back('(');
    walk_dyck(word, open + 1, close, n, count);
    word.pop_back();
  }
  if (close < open) {
    word.push_back(')');
    walk_dyck(word, open, close + 1, n, count);
    word.pop_back();
  }
}

}  // namespace

BigInt count_lacunary_partitions(int n) {
  require_feasible(n, 12, "lacunary partitions");
  BigInt total = 0;
  const unsigned full = (1u << n) - 1u;
  for (unsigned complement = 0; complement <= full; ++complement) {
    if (!runs_even(complement, n)) continue;
    const int size = n - std::popcount(complement);
    total += static_cast<unsigned long>(count_set_partitions(size));
  }
  return total;
}

BigInt count_paired_coloured_permutations(int n) {
  require_feasible(n, 9, "paired coloured permutations");
  std::vector<unsigned> colourings;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (runs_even(mask, n)) colourings.push_back(mask);
  }
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  std::uint64_t count = 0;
  do {
    for ([[maybe_unused]] unsigned mask : colourings) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return BigInt(static_cast<unsigned long>(count));
}

BigInt count_2generalized_motzkin(int n) {
  require_feasible(n, 16, "2-generalized Motzkin paths");
  return BigInt(static_cast<unsigned long>(count_paths(n, 0, true, true)));
}

BigInt count_motzkin_no_odd_h(int n) {
  require_feasible(n, 16, "Motzkin paths without odd-height level steps");
  return BigInt(static_cast<unsigned long>(count_paths(n, 0, false, false)));
}

BigInt count_trees_no_unit_branch(int n) {
  require_feasible(n, 14, "ordered trees without unit branches");
  std::vector<char> word;
  word.reserve(static_cast<std::size_t>(2 * n));
  std::uint64_t count = 0;
  walk_dyck(word, 0, 0, n, count);
  return BigInt(static_cast<unsigned long>(count));
}

const std::vector<CountedFamily>& oracle_families() {
  static const std::vector<CountedFamily> families = {
      {"lacunary_partitions", count_lacunary_partitions, 12},
      {"paired_coloured_permutations", count_paired_coloured_permutations, 9},
      {"2generalized_motzkin", count_2generalized_motzkin, 16},
      {"motzkin_no_odd_h", count_motzkin_no_odd_h, 16},
      {"trees_no_unit_branch", count_trees_no_unit_branch, 14},
  };
  return families;
}

const CountedFamily& oracle_family(std::string_view name) {
  for (const auto& f : oracle_families()) {
    if (f.name == name) return f;
  }
  throw Error(ErrorKind::UnknownName, "unknown oracle family '" + std::string(name) + "'");
}

}  // namespace eco
