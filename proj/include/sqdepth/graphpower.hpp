#ifndef SQDEPTH_GRAPHPOWER_HPP
#define SQDEPTH_GRAPHPOWER_HPP

#include <utility>
#include <vector>

#include "sqdepth/monomial.hpp"

namespace sqd {

enum class Family { path, cycle };

struct GraphSpec {
  Family family;
  int n;
  int k;
};

// Simple graph on vertices 1..n, adjacency kept as per-vertex bitmasks.
struct Graph {
  int n = 0;
  std::vector<Mask> adj;  // adj[v-1] = neighbors of v as a mask

  bool has_edge(int i, int j) const { return (adj[i - 1] & var_bit(j)) != 0; }
  std::vector<std::pair<int, int>> edges() const;
  int edge_count() const;
};

// P_n^k or C_n^k.  Path needs n >= 2, cycle n >= 3, k >= 1.  Degenerate
// ranges (path n <= k+1, cycle n <= 2k+1) give the complete graph.
Graph build_power_graph(const GraphSpec& spec);

MonomialIdeal edge_ideal(const Graph& g);

// Open neighborhood N_G(x_v) as a mask; never contains v.
Mask neighborhood(const Graph& g, int v);

// The paper's auxiliary variable-generated prime ideals, addressed by their
// subscript j = n-k+i with 0 <= i <= k-1 (k >= 2, n >= 2k+2):
//   A_j = (x_{n-k}, ..., x_j), with A_{n-k-1} = (0);
//   B_j = (N_{P_n^k}(x_j));
//   D_j = (N_{C_n^k}(x_j)).
MonomialIdeal prime_A(int n, int k, int j);
MonomialIdeal prime_B(int n, int k, int j);
MonomialIdeal prime_D(int n, int k, int j);

// The two-branch exponent function on {n-k, ..., n-1}, defined for k >= 2
// and 2k+2 <= n <= 3k+1; rejects arguments outside both branches.
int f_exponent(int n, int k, int i);

struct MmisResult {
  int size = 0;
  Mask witness = 0;
};

// Minimum-cardinality maximal independent set, by exhaustive search over
// subsets in increasing cardinality (n <= 20).  The returned size upper
// bounds sdepth(S/I(g)) and depth(S/I(g)).
MmisResult min_maximal_independent_set(const Graph& g);

bool is_independent(const Graph& g, Mask set);
bool is_maximal_independent(const Graph& g, Mask set);

}  // namespace sqd

#endif
