#pragma once

/**
 * @file semigroup.hpp
 * @brief Exact arithmetic kernel for numerical semigroups.
 *
 * A numerical semigroup is a submonoid of the nonnegative integers whose
 * complement is finite (equivalently, the gcd of its generators is 1).
 * Every numerical semigroup has a unique minimal generating set; the
 * GeneratorSet type enforces that canonical form, and NumericalSemigroup
 * caches the classical invariants derived from the Apery set with respect
 * to the multiplicity:
 *
 *   apery[i]   least element congruent to i modulo m (m = multiplicity)
 *   frobenius  largest integer not in the semigroup (-1 for N itself)
 *   conductor  frobenius + 1
 *   genus      number of gaps
 *
 * All values are exact 64-bit integers; no floating point is used.
 */

#include <cstdint>
#include <vector>

#include "numsemi/errors.hpp"

namespace numsemi {

using Int = std::int64_t;

/// Largest generator value the library accepts. Keeps the Apery table and
/// membership scans at a sane size; enumeration workloads stay far below it.
inline constexpr Int kMaxGeneratorValue = 4'000'000;

/// The unique minimal generating set of a numerical semigroup: a strictly
/// increasing list of positive integers with gcd 1 in which no value lies in
/// the submonoid generated by the others.
class GeneratorSet {
 public:
  /// Reduces arbitrary input values to the minimal generating set of the
  /// monoid they generate. Sorts, removes duplicates, and drops every value
  /// reachable from the smaller ones. Idempotent and order-insensitive.
  ///
  /// Throws EmptyInputError when no values are given and NotCoprimeError
  /// when gcd(values) > 1.
  static GeneratorSet canonicalize(std::vector<Int> values);

  /// Wraps values that are already canonical. Cheap structural checks run
  /// always; full minimality is re-verified in debug builds only.
  static GeneratorSet from_canonical(std::vector<Int> values);

  const std::vector<Int>& values() const { return values_; }
  Int smallest() const { return values_.front(); }
  Int largest() const { return values_.back(); }
  std::size_t size() const { return values_.size(); }

  friend bool operator==(const GeneratorSet&, const GeneratorSet&) = default;

 private:
  explicit GeneratorSet(std::vector<Int> values) : values_(std::move(values)) {}
  std::vector<Int> values_;
};

/// A numerical semigroup together with its cached invariants. Immutable
/// after construction and safe to share read-only across threads.
class NumericalSemigroup {
 public:
  /// Computes the Apery set (shortest-path relaxation over residues modulo
  /// the multiplicity) and all derived invariants.
  static NumericalSemigroup build(GeneratorSet gens);

  /// Convenience: canonicalize + build.
  static NumericalSemigroup make(std::vector<Int> values);

  /// The semigroup of all nonnegative integers, <1>.
  static NumericalSemigroup naturals();

  const GeneratorSet& gens() const { return gens_; }
  const std::vector<Int>& generators() const { return gens_.values(); }

  /// apery()[i] is the least element congruent to i modulo multiplicity().
  const std::vector<Int>& apery() const { return apery_; }

  Int frobenius() const { return frobenius_; }
  Int conductor() const { return frobenius_ + 1; }
  Int genus() const { return genus_; }
  Int multiplicity() const { return gens_.smallest(); }
  Int embedding_dim() const { return static_cast<Int>(gens_.size()); }

  /// Membership: x >= apery[x mod m] for x >= 0, false for negative x.
  bool contains(Int x) const;

  /// True when the genus equals half the conductor.
  bool is_symmetric() const { return 2 * genus_ == conductor(); }

  bool is_minimal_generator(Int x) const;

  friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) {
    return a.gens_ == b.gens_;
  }
  /// Lexicographic order on the canonical generator lists.
  friend bool operator<(const NumericalSemigroup& a, const NumericalSemigroup& b) {
    return a.generators() < b.generators();
  }

 private:
  NumericalSemigroup(GeneratorSet gens, std::vector<Int> apery, Int frobenius, Int genus)
      : gens_(std::move(gens)), apery_(std::move(apery)), frobenius_(frobenius), genus_(genus) {}

  GeneratorSet gens_;
  std::vector<Int> apery_;
  Int frobenius_;
  Int genus_;
};

}  // namespace numsemi
