#pragma once

/**
 * @file presentation.hpp
 * @brief Brute-force minimal-presentation counter.
 *
 * For an element n of the semigroup, the factorization graph has one vertex
 * per factorization of n over the minimal generators and an edge between two
 * factorizations whose supports share a generator. The cardinality of a
 * minimal presentation equals the sum, over all n, of (number of connected
 * components - 1). Scanning n up to F + 2*max(gens) suffices: beyond that
 * bound n - r_i - r_j exceeds the Frobenius number for every generator pair,
 * so any two factorizations are support-connected through a third one and
 * the graph is connected.
 *
 * This module is an oracle deliberately independent of the gluing recursion:
 * a semigroup is a complete intersection exactly when the count equals
 * (embedding dimension - 1).
 */

#include <cstddef>
#include <vector>

#include "numsemi/semigroup.hpp"

namespace numsemi {

struct OracleOptions {
  /// Abort with OracleTooLargeError when an element has more factorizations
  /// than this.
  std::size_t max_factorizations = 2'000'000;
};

/// The factorization graph of n over gens(S). Edges are implicit (shared
/// support); only the component structure is materialized.
struct FactorizationGraph {
  Int element = 0;
  /// Coefficient vectors over the generators in increasing order.
  std::vector<std::vector<Int>> factorizations;
  /// component[i] is the index of the component of factorizations[i].
  std::vector<int> component;
  int component_count = 0;
};

FactorizationGraph factorization_graph(const NumericalSemigroup& s, Int n,
                                       const OracleOptions& options = {});

/// Sum over n <= F + 2*max(gens) of (components of the factorization graph
/// of n) - 1.
Int minimal_presentation_cardinality(const NumericalSemigroup& s, const OracleOptions& options = {});

/// minimal_presentation_cardinality(s) == embedding_dim(s) - 1.
bool is_ci_oracle(const NumericalSemigroup& s, const OracleOptions& options = {});

}  // namespace numsemi
