#pragma once

/**
 * @file families.hpp
 * @brief Classifiers for free, telescopic, and plane-curve-singularity
 * numerical semigroups, plus the bound formulas used for search pruning.
 *
 * For an arrangement (r0,...,rh) of the minimal generators, write
 * d_k = gcd(r0,...,r_{k-1}) and e_k = d_k / d_{k+1}. The arrangement is
 * free when e_k * r_k lies in <r0,...,r_{k-1}> for every k; a semigroup is
 * free when some arrangement is, telescopic when the increasing arrangement
 * is, and planar (the semigroup of an irreducible plane curve singularity)
 * when additionally e_k * r_k < r_{k+1} for intermediate k.
 */

#include <optional>
#include <vector>

#include "numsemi/semigroup.hpp"

namespace numsemi {

/// An ordering of the minimal generators together with its gcd sequence
/// d_1,...,d_{h+1} and quotient sequence e_k = d_k/d_{k+1}.
struct Arrangement {
  std::vector<Int> order;  ///< r_0,...,r_h
  std::vector<Int> dseq;   ///< dseq[k-1] = d_k = gcd(r_0,...,r_{k-1}), size h+1
  std::vector<Int> eseq;   ///< eseq[k-1] = e_k = d_k/d_{k+1}, size h

  /// Validates that `order` is a permutation of gens(S) and fills the gcd
  /// sequences. Throws NotAPermutationError otherwise.
  static Arrangement of(const NumericalSemigroup& s, std::vector<Int> order);
};

/// True when the arrangement realizes S as an iterated gluing with N at
/// every step: e_k * r_k in <r_0,...,r_{k-1}> and e_k >= 2 for all k.
bool is_free_arrangement(const NumericalSemigroup& s, const Arrangement& arr);

/// Convenience overload building the Arrangement first.
bool is_free_arrangement(const NumericalSemigroup& s, std::vector<Int> order);

/// True when some arrangement of the generators is free. Candidates for the
/// last generator are tried in increasing order; memoized per thread.
bool is_free(const NumericalSemigroup& s);

/// A free arrangement of gens(S) (the one the search finds first), or
/// nullopt when S is not free.
std::optional<std::vector<Int>> find_free_arrangement(const NumericalSemigroup& s);

/// Free for the increasing arrangement of the generators.
bool is_telescopic(const NumericalSemigroup& s);

/// Telescopic with e_k * r_k < r_{k+1} for all k = 1,...,h-1 (vacuous for
/// two or fewer generators).
bool is_planar(const NumericalSemigroup& s);

namespace bounds {

/// Inclusive integer range; empty when hi < lo.
struct Range {
  Int lo = 0;
  Int hi = 0;
};

/// Smallest possible multiplicity of a complete intersection with embedding
/// dimension e: 2^(e-1). Requires e >= 1.
Int min_multiplicity_ci(Int e);

/// Largest possible embedding dimension of a complete intersection other
/// than N with conductor c: floor(log2 c) + 1. Requires c >= 1.
Int max_embdim_ci(Int c);

/// Refined form floor(log2(c-4)) + 1, valid outside the four exceptional
/// semigroups of refined_embdim_exceptions(). Requires c >= 5.
Int max_embdim_ci_refined(Int c);

/// Generator lists of the semigroups excluded from the refined bound:
/// N, <2,3>, <2,5>, <3,4>.
const std::vector<std::vector<Int>>& refined_embdim_exceptions();

/// Smallest possible conductor of a complete intersection with embedding
/// dimension e: (e-1) * 2^(e-1). Requires e >= 1.
Int min_conductor_ci(Int e);

/// Smallest possible conductor of a telescopic semigroup other than N with
/// embedding dimension e: (e-2) * 2^e + 2. Requires e >= 2.
Int min_conductor_telescopic(Int e);

/// Smallest possible conductor of a planar semigroup with h+1 generators:
/// (5 * 2^(2h) - 9 * 2^h + 4) / 3, an exact integer. Requires h >= 0.
Int min_conductor_planar(Int h);

/// Largest h compatible with a planar conductor c:
/// floor(log2((sqrt(60c+1) + 9) / 10)), evaluated with exact integer
/// comparisons. Requires c >= 0.
Int max_h_planar(Int c);

/// Range of the last generator r_h of a free semigroup with h+1 generators,
/// conductor c, and last gcd d = d_h. Requires h >= 2 and d >= 2.
Range rh_range_free(Int h, Int c, Int d);

/// Telescopic counterpart: lo = 2^(h+1) - 1.
Range rh_range_telescopic(Int h, Int c, Int d);

/// Planar counterpart: lo = (5 * 2^(2h-1) - 1) / 3, an exact integer.
Range rh_range_planar(Int h, Int c, Int d);

}  // namespace bounds

}  // namespace numsemi
