#pragma once

/**
 * @file gluing.hpp
 * @brief The gluing calculus for numerical semigroups.
 *
 * A partition A = A1 u A2 of a minimal generating set is a gluing when
 * d1*d2 = lcm(gcd A1, gcd A2) lies in both generated monoids. Writing
 * G1 = <A1/d1> and G2 = <A2/d2>, the glued semigroup is d1*G1 + d2*G2 and
 *
 *   F(G) = d1*F(G1) + d2*F(G2) + d1*d2
 *   c(G) = d1*c(G1) + d2*c(G2) + (d1-1)*(d2-1)
 *
 * A semigroup is a complete intersection exactly when it is N or a gluing
 * of two complete intersections; iterating the splits down to scaled copies
 * of N yields a decomposition tree whose glue points d(1),...,d(h) satisfy
 * F(G) = sum of glue points - sum of minimal generators.
 */

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "numsemi/semigroup.hpp"

namespace numsemi {

/// A certified gluing partition of a minimal generating set.
struct GluingSplit {
  std::vector<Int> left;   ///< A1, in increasing order
  std::vector<Int> right;  ///< A2, in increasing order
  Int d1 = 0;              ///< gcd(A1)
  Int d2 = 0;              ///< gcd(A2)
  Int glue_point = 0;      ///< d1*d2
};

/// Tests whether the subset of gens(S) selected by `mask` (bit i selects the
/// i-th smallest generator) forms a gluing partition with its complement.
/// The mask must select a proper nonempty subset. Returns the certified
/// split, or nullopt when some gluing condition fails.
std::optional<GluingSplit> try_split(const NumericalSemigroup& s, std::uint64_t mask);

/// Builds d1*S1 + d2*S2. Requires gcd(d1,d2) = 1, d1 in S2 but not one of
/// its minimal generators, and symmetrically d2 in S1; violations throw
/// GluingPreconditionError. The scaled generator union is verified to be
/// minimal and the Frobenius number is cross-checked against the gluing
/// formula (an InternalError on failure, since both are theorems here).
NumericalSemigroup glue(const NumericalSemigroup& s1, Int d1, const NumericalSemigroup& s2,
                        Int d2);

/// F(G) of a gluing from the factor data: d1*f1 + d2*f2 + d1*d2.
Int frobenius_of_gluing(Int f1, Int d1, Int f2, Int d2);

/// c(G) of a gluing from the factor data: d1*c1 + d2*c2 + (d1-1)*(d2-1).
Int conductor_of_gluing(Int c1, Int d1, Int c2, Int d2);

/// True when S is N or some partition of its generators is a gluing whose
/// two quotient semigroups are both complete intersections. Memoized on the
/// canonical generator list (per thread).
bool is_complete_intersection(const NumericalSemigroup& s);

/// Recursive record of gluings down to scaled copies of N. A leaf with
/// value a stands for a*N; an inner node carries the glue point in the
/// coordinates of the root semigroup.
class DecompositionTree {
 public:
  static DecompositionTree leaf(Int value);
  static DecompositionTree node(Int glue_point, DecompositionTree left, DecompositionTree right);

  bool is_leaf() const { return !left_; }
  Int value() const { return value_; }            ///< leaf payload
  Int glue_point() const { return glue_point_; }  ///< inner-node payload
  const DecompositionTree& left() const { return *left_; }
  const DecompositionTree& right() const { return *right_; }

  /// Glue points of all inner nodes, in preorder.
  std::vector<Int> glue_points() const;
  /// Leaf values from left to right; equals the minimal generators of the
  /// root semigroup (as a multiset).
  std::vector<Int> leaf_values() const;

 private:
  DecompositionTree() = default;
  Int value_ = 0;
  Int glue_point_ = 0;
  std::unique_ptr<DecompositionTree> left_;
  std::unique_ptr<DecompositionTree> right_;
};

/// A tree witnessing that S is a complete intersection, or nullopt. When
/// several partitions qualify the first one in lexicographic mask order is
/// used; callers may rely only on the tree invariants, not its shape.
std::optional<DecompositionTree> decomposition_tree(const NumericalSemigroup& s);

}  // namespace numsemi
