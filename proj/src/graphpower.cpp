#include "sqdepth/graphpower.hpp"

#include <algorithm>
#include <stdexcept>

namespace sqd {

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= n; ++i)
    for (int j : vars_of(adj[i - 1]))
      if (j > i) out.emplace_back(i, j);
  return out;
}

int Graph::edge_count() const {
  int total = 0;
  for (Mask m : adj) total += degree(m);
  return total / 2;
}

Graph build_power_graph(const GraphSpec& spec) {
  const int n = spec.n, k = spec.k;
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (n > kMaxVars) throw std::invalid_argument("n exceeds 64 variables");
  if (spec.family == Family::path && n < 2) throw std::invalid_argument("path needs n >= 2");
  if (spec.family == Family::cycle && n < 3) throw std::invalid_argument("cycle needs n >= 3");

  Graph g;
  g.n = n;
  g.adj.assign(n, 0);
  auto add_edge = [&](int i, int j) {
    g.adj[i - 1] |= var_bit(j);
    g.adj[j - 1] |= var_bit(i);
  };
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      int gap = j - i;
      bool edge = spec.family == Family::path ? gap <= k
                                              : (gap <= k || gap >= n - k);
      if (edge) add_edge(i, j);
    }
  return g;
}

MonomialIdeal edge_ideal(const Graph& g) {
  std::vector<Mask> gens;
  for (auto [i, j] : g.edges()) gens.push_back(var_bit(i) | var_bit(j));
  if (gens.empty()) throw std::invalid_argument("graph has an empty edge set");
  return MonomialIdeal::minimalize(g.n, std::move(gens));
}

Mask neighborhood(const Graph& g, int v) {
  if (v < 1 || v > g.n) throw std::invalid_argument("vertex out of range");
  return g.adj[v - 1];
}

namespace {

void check_prime_args(int n, int k, int j) {
  if (k < 2) throw std::invalid_argument("prime ideals require k >= 2");
  if (n < 2 * k + 2) throw std::invalid_argument("prime ideals require n >= 2k+2");
  if (n > kMaxVars) throw std::invalid_argument("n exceeds 64 variables");
  if (j < n - k || j > n - 1)
    throw std::invalid_argument("prime subscript must lie in [n-k, n-1]");
}

}  // namespace

MonomialIdeal prime_A(int n, int k, int j) {
  if (j == n - k - 1) {
    // The conventional A_{n-k-1} = (0).
    if (k < 2 || n < 2 * k + 2) throw std::invalid_argument("prime ideals require k >= 2, n >= 2k+2");
    return MonomialIdeal::zero(n);
  }
  check_prime_args(n, k, j);
  Mask vars = 0;
  for (int v = n - k; v <= j; ++v) vars |= var_bit(v);
  return MonomialIdeal::zero(n).add_primes(vars);
}

MonomialIdeal prime_B(int n, int k, int j) {
  check_prime_args(n, k, j);
  const int i = j - (n - k);
  Mask vars = 0;
  for (int v = n - 2 * k + i; v <= n - k + i - 1; ++v) vars |= var_bit(v);
  for (int v = n - k + i + 1; v <= n; ++v) vars |= var_bit(v);
  return MonomialIdeal::zero(n).add_primes(vars);
}

MonomialIdeal prime_D(int n, int k, int j) {
  check_prime_args(n, k, j);
  const int i = j - (n - k);
  Mask vars = 0;
  if (i == 0) {
    for (int v = n - 2 * k; v <= n - k - 1; ++v) vars |= var_bit(v);
    for (int v = n - k + 1; v <= n; ++v) vars |= var_bit(v);
  } else {
    for (int v = n - 2 * k + i; v <= n - k + i - 1; ++v) vars |= var_bit(v);
    for (int v = n - k + i + 1; v <= n; ++v) vars |= var_bit(v);
    for (int v = 1; v <= i; ++v) vars |= var_bit(v);
  }
  return MonomialIdeal::zero(n).add_primes(vars);
}

int f_exponent(int n, int k, int i) {
  if (k < 2 || i < 0 || i > k - 1 || n < 2 * k + 2 || n > 3 * k + 1)
    throw std::invalid_argument("f_exponent arguments outside the stated domain");
  const int m = n - 2 * k - 1 + i;
  if (m >= k + 1) return k;
  if (m >= 2) return n - 2 * k - 2 + i;
  throw std::invalid_argument("f_exponent arguments fall in neither branch");
}

bool is_independent(const Graph& g, Mask set) {
  for (int v : vars_of(set))
    if (g.adj[v - 1] & set) return false;
  return true;
}

bool is_maximal_independent(const Graph& g, Mask set) {
  if (!is_independent(g, set)) return false;
  Mask dominated = set;
  for (int v : vars_of(set)) dominated |= g.adj[v - 1];
  return dominated == full_mask(g.n);
}

MmisResult min_maximal_independent_set(const Graph& g) {
  if (g.n > 20) throw std::invalid_argument("exhaustive MMIS search capped at n <= 20");
  const Mask fm = full_mask(g.n);
  for (int size = 1; size <= g.n; ++size) {
    // Subsets of fixed popcount in increasing mask order.
    for (Mask s = (Mask{1} << size) - 1; s <= fm;) {
      if (is_maximal_independent(g, s)) return {size, s};
      // Gosper's hack.
      Mask c = s & -s, r = s + c;
      Mask next = (((r ^ s) >> 2) / c) | r;
      if (next <= s || next > fm) break;
      s = next;
    }
  }
  throw std::logic_error("no maximal independent set found");
}

}  // namespace sqd
