#pragma once

/**
 * @file enumeration.hpp
 * @brief Recursive, memoized, bound-pruned enumeration of complete
 * intersection, free, telescopic, and planar numerical semigroups with a
 * fixed Frobenius number, plus genus-indexed count tables.
 *
 * The recursion inverts the gluing formula F = d1*F1 + d2*F2 + d1*d2: every
 * complete intersection with Frobenius number f is either <2, f+2> or a
 * gluing of two smaller complete intersections whose data (d1, d2, f1, f2)
 * solves that equation. Free, telescopic, and planar semigroups restrict
 * the right factor to a scaled copy of N, which turns the search into a
 * loop over pairs (d, r) with d | f + r. Frobenius numbers of these
 * semigroups (other than -1 for N itself) are odd, so even inputs yield
 * empty results.
 *
 * Results are deduplicated and sorted lexicographically by generator list;
 * output is identical for any thread count and for memoized and
 * non-memoized runs.
 */

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "numsemi/semigroup.hpp"

namespace numsemi {

enum class FamilyKind { CompleteIntersection, Free, Telescopic, Planar };

/// Short names used by the CLI and the cache file: ci, free, telescopic,
/// planar.
std::string_view family_name(FamilyKind family);
std::optional<FamilyKind> family_from_name(std::string_view name);

/// Search pruning level: None keeps only the constraints needed for
/// correctness and termination; Bounds adds the family-specific range and
/// conductor bounds. Both produce identical results.
enum class Pruning { None, Bounds };

/// One row of the genus count table.
struct CountRow {
  Int genus = 0;
  Int ci = 0;  ///< complete intersections
  Int fr = 0;  ///< free
  Int tl = 0;  ///< telescopic
  Int pc = 0;  ///< planar
  friend bool operator==(const CountRow&, const CountRow&) = default;
};

struct EnumerationOptions {
  Pruning pruning = Pruning::Bounds;
  int threads = 1;       ///< worker count for the top-level parameter loops
  bool memoize = true;   ///< disable only for cross-checking small inputs
};

/// Owns the per-family memo tables. Not safe for concurrent use of one
/// instance from several threads; internal parallelism is controlled by
/// EnumerationOptions::threads.
class Enumerator {
 public:
  explicit Enumerator(EnumerationOptions options = {});
  ~Enumerator();
  Enumerator(const Enumerator&) = delete;
  Enumerator& operator=(const Enumerator&) = delete;

  const EnumerationOptions& options() const;

  /// All semigroups of the family with the given Frobenius number, sorted
  /// lexicographically by generator list. frobenius must be -1 or a
  /// positive odd integer for a nonempty result; even nonnegative values
  /// return an empty list, and values below -1 throw InvalidFrobeniusError.
  std::vector<NumericalSemigroup> enumerate(FamilyKind family, Int frobenius);

  /// Genus 0 yields {N}; otherwise enumerate(family, 2*genus - 1).
  std::vector<NumericalSemigroup> enumerate_by_genus(FamilyKind family, Int genus);

  /// Generator lists only (no Apery materialization); same order.
  std::vector<std::vector<Int>> generator_lists(FamilyKind family, Int frobenius);

  Int count(FamilyKind family, Int frobenius);
  Int count_by_genus(FamilyKind family, Int genus);

  /// One CountRow per genus in [genus_first, genus_last].
  std::vector<CountRow> count_table(Int genus_first, Int genus_last);

  /// Tally of embedding dimensions over all family members with genus in
  /// [genus_first, genus_last].
  std::map<Int, Int> embdim_histogram(FamilyKind family, Int genus_first, Int genus_last);

  /// Number of search positions examined since construction or the last
  /// reset; deterministic for fixed inputs, pruning mode, and seed work.
  std::uint64_t nodes() const;
  void reset_nodes();

  /// Loads a previously saved memo. Returns false (leaving the memo
  /// untouched) on missing file, version mismatch, or malformed content.
  bool load_cache(const std::string& path);
  bool save_cache(const std::string& path) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// One-shot helpers with default options.
std::vector<NumericalSemigroup> enumerate(FamilyKind family, Int frobenius);
std::vector<NumericalSemigroup> enumerate_by_genus(FamilyKind family, Int genus);

}  // namespace numsemi
