#include "numsemi/presentation.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace numsemi {

namespace {

// Enumerates the coefficient vectors of n over `gens`, assigning the largest
// generator first. Emits vectors indexed by increasing generator.
void enumerate_factorizations(const std::vector<Int>& gens, Int n, std::size_t limit,
                              std::vector<std::vector<Int>>& out) {
  const std::size_t e = gens.size();
  std::vector<Int> coeff(e, 0);
  // walk positions e-1, e-2, ..., 0 (decreasing generator value)
  const auto dfs = [&](auto&& self, std::size_t pos, Int remaining) -> void {
    if (pos == 0) {
      if (remaining % gens[0] == 0) {
        coeff[0] = remaining / gens[0];
        out.push_back(coeff);
        if (out.size() > limit) throw OracleTooLargeError("factorization count exceeds limit");
      }
      return;
    }
    const Int g = gens[pos];
    for (Int c = remaining / g; c >= 0; --c) {
      coeff[pos] = c;
      self(self, pos - 1, remaining - c * g);
    }
    coeff[pos] = 0;
  };
  dfs(dfs, e - 1, n);
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

FactorizationGraph factorization_graph(const NumericalSemigroup& s, Int n,
                                       const OracleOptions& options) {
  FactorizationGraph graph;
  graph.element = n;
  if (!s.contains(n)) return graph;
  enumerate_factorizations(s.generators(), n, options.max_factorizations, graph.factorizations);
  assert(!graph.factorizations.empty());

  // Factorizations using a common generator form a clique, so it is enough
  // to chain together, per generator, everything whose support contains it.
  const std::size_t k = graph.factorizations.size();
  const std::size_t e = s.gens().size();
  UnionFind uf(k);
  for (std::size_t g = 0; g < e; ++g) {
    int first = -1;
    for (std::size_t i = 0; i < k; ++i) {
      if (graph.factorizations[i][g] == 0) continue;
      if (first < 0) {
        first = static_cast<int>(i);
      } else {
        uf.unite(first, static_cast<int>(i));
      }
    }
  }
  graph.component.resize(k);
  std::vector<int> labels;
  for (std::size_t i = 0; i < k; ++i) {
    const int root = uf.find(static_cast<int>(i));
    auto it = std::find(labels.begin(), labels.end(), root);
    if (it == labels.end()) {
      labels.push_back(root);
      it = labels.end() - 1;
    }
    graph.component[i] = static_cast<int>(it - labels.begin());
  }
  graph.component_count = static_cast<int>(labels.size());
  return graph;
}

Int minimal_presentation_cardinality(const NumericalSemigroup& s, const OracleOptions& options) {
  const Int bound = s.frobenius() + 2 * s.gens().largest();
  Int total = 0;
  for (Int n = s.multiplicity(); n <= bound; ++n) {
    if (!s.contains(n)) continue;
    const FactorizationGraph graph = factorization_graph(s, n, options);
    total += graph.component_count - 1;
  }
  return total;
}

bool is_ci_oracle(const NumericalSemigroup& s, const OracleOptions& options) {
  return minimal_presentation_cardinality(s, options) == s.embedding_dim() - 1;
}

}  // namespace numsemi
