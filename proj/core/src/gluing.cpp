#include "numsemi/gluing.hpp"

#include <algorithm>
#include <cassert>
#include <map>

#include "detail.hpp"

namespace numsemi {

namespace {

using detail::gcd_all;
using detail::monoid_contains;

struct RawSplit {
  std::vector<Int> left, right;
  Int d1 = 0, d2 = 0;
};

// Splits `gens` by mask and checks the gluing conditions on raw values:
// both gcds at least 2, coprime, and d2 in <A1/d1>, d1 in <A2/d2>.
std::optional<RawSplit> split_values(const std::vector<Int>& gens, std::uint64_t mask) {
  RawSplit s;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    ((mask >> i) & 1u ? s.left : s.right).push_back(gens[i]);
  }
  s.d1 = gcd_all(s.left);
  s.d2 = gcd_all(s.right);
  // A gcd of 1 on either side can never satisfy the non-minimal-generator
  // condition, so reject before any membership work.
  if (s.d1 < 2 || s.d2 < 2) return std::nullopt;
  if (std::gcd(s.d1, s.d2) != 1) return std::nullopt;

  std::vector<Int> q1(s.left), q2(s.right);
  for (Int& v : q1) v /= s.d1;
  for (Int& v : q2) v /= s.d2;
  if (!monoid_contains(q1, s.d2)) return std::nullopt;
  if (!monoid_contains(q2, s.d1)) return std::nullopt;
  return s;
}

std::vector<Int> divided(const std::vector<Int>& values, Int d) {
  std::vector<Int> out(values);
  for (Int& v : out) v /= d;
  return out;
}

bool is_ci_values(const std::vector<Int>& gens);

// A complete intersection with e minimal generators has multiplicity at
// least 2^(e-1). The contrapositive rejects wide semigroups up front and
// keeps the subset masks within 32 bits (2^22 > kMaxGeneratorValue).
bool multiplicity_rules_out_ci(const std::vector<Int>& gens) {
  const auto e = gens.size();
  if (e < 2) return false;
  if (e - 1 >= 22) return true;
  return gens.front() < (Int{1} << (e - 1));
}

// Iterates proper subsets containing the smallest generator (partitions are
// unordered, so this halves the search space).
template <typename Visit>
void for_each_split(const std::vector<Int>& gens, Visit visit) {
  const auto e = gens.size();
  assert(e >= 2 && e < 32);
  const std::uint32_t full = (1u << e) - 1;
  for (std::uint32_t mask = 1; mask < full; mask += 2) {
    auto split = split_values(gens, mask);
    if (!split) continue;
    if (visit(*split)) return;
  }
}

bool is_ci_values(const std::vector<Int>& gens) {
  if (gens.size() == 1) return true;  // canonical single generator is <1>
  if (multiplicity_rules_out_ci(gens)) return false;
  thread_local std::map<std::vector<Int>, bool> memo;
  if (auto it = memo.find(gens); it != memo.end()) return it->second;

  bool result = false;
  for_each_split(gens, [&](const RawSplit& s) {
    if (is_ci_values(divided(s.left, s.d1)) && is_ci_values(divided(s.right, s.d2))) {
      result = true;
      return true;
    }
    return false;
  });
  memo.emplace(gens, result);
  return result;
}

// Builds the witness tree for <gens> scaled by `scale`, or nullopt when the
// gens do not decompose to copies of N.
std::optional<DecompositionTree> tree_values(const std::vector<Int>& gens, Int scale) {
  if (gens.size() == 1) return DecompositionTree::leaf(scale * gens.front());
  if (!is_ci_values(gens)) return std::nullopt;
  std::optional<DecompositionTree> result;
  for_each_split(gens, [&](const RawSplit& s) {
    auto q1 = divided(s.left, s.d1);
    auto q2 = divided(s.right, s.d2);
    if (!is_ci_values(q1) || !is_ci_values(q2)) return false;
    auto left = tree_values(q1, scale * s.d1);
    auto right = tree_values(q2, scale * s.d2);
    assert(left && right);
    result = DecompositionTree::node(scale * s.d1 * s.d2, std::move(*left), std::move(*right));
    return true;
  });
  return result;
}

}  // namespace

std::optional<GluingSplit> try_split(const NumericalSemigroup& s, std::uint64_t mask) {
  const auto& gens = s.generators();
  const auto e = gens.size();
  if (e >= 64) throw DomainError("too many generators for subset selection");
  const std::uint64_t full = (std::uint64_t{1} << e) - 1;
  if (mask == 0 || (mask & ~full) != 0 || mask == full)
    throw DomainError("mask must select a proper nonempty subset of the generators");

  auto raw = split_values(gens, mask);
  if (!raw) return std::nullopt;

  // With a canonical generating set, d1 and d2 cannot be minimal generators
  // of the opposite quotient; a violation would mean the set was not minimal.
  auto q1 = divided(raw->left, raw->d1);
  auto q2 = divided(raw->right, raw->d2);
  if (std::binary_search(q1.begin(), q1.end(), raw->d2) ||
      std::binary_search(q2.begin(), q2.end(), raw->d1))
    throw InternalError("gluing gcd is a minimal generator of its quotient");

  GluingSplit out;
  out.left = std::move(raw->left);
  out.right = std::move(raw->right);
  out.d1 = raw->d1;
  out.d2 = raw->d2;
  out.glue_point = raw->d1 * raw->d2;
  return out;
}

NumericalSemigroup glue(const NumericalSemigroup& s1, Int d1, const NumericalSemigroup& s2,
                        Int d2) {
  if (d1 <= 0 || d2 <= 0) throw GluingPreconditionError("glue factors must be positive");
  if (std::gcd(d1, d2) != 1)
    throw GluingPreconditionError("glue factors are not coprime: gcd(" + std::to_string(d1) +
                                  "," + std::to_string(d2) + ") != 1");
  if (!s2.contains(d1))
    throw GluingPreconditionError("d1 = " + std::to_string(d1) + " does not belong to S2");
  if (s2.is_minimal_generator(d1))
    throw GluingPreconditionError("d1 = " + std::to_string(d1) + " is a minimal generator of S2");
  if (!s1.contains(d2))
    throw GluingPreconditionError("d2 = " + std::to_string(d2) + " does not belong to S1");
  if (s1.is_minimal_generator(d2))
    throw GluingPreconditionError("d2 = " + std::to_string(d2) + " is a minimal generator of S1");

  std::vector<Int> merged;
  merged.reserve(s1.gens().size() + s2.gens().size());
  for (Int v : s1.generators()) merged.push_back(detail::mul(d1, v));
  for (Int v : s2.generators()) merged.push_back(detail::mul(d2, v));
  std::sort(merged.begin(), merged.end());
  for (Int v : merged) {
    if (v > kMaxGeneratorValue)
      throw DomainError("glued generator " + std::to_string(v) + " exceeds the supported maximum");
  }

  // The scaled union is minimal whenever the preconditions hold; verify
  // rather than assume, and report a violation as an internal error.
  if (!detail::is_canonical_generating_set(merged))
    throw InternalError("gluing produced a non-minimal generating set");

  NumericalSemigroup out = NumericalSemigroup::build(GeneratorSet::from_canonical(merged));
  if (out.frobenius() != frobenius_of_gluing(s1.frobenius(), d1, s2.frobenius(), d2))
    throw InternalError("glued Frobenius number disagrees with the gluing formula");
  return out;
}

Int frobenius_of_gluing(Int f1, Int d1, Int f2, Int d2) {
  return detail::add(detail::add(detail::mul(d1, f1), detail::mul(d2, f2)), detail::mul(d1, d2));
}

Int conductor_of_gluing(Int c1, Int d1, Int c2, Int d2) {
  return detail::add(detail::add(detail::mul(d1, c1), detail::mul(d2, c2)),
                     detail::mul(d1 - 1, d2 - 1));
}

bool is_complete_intersection(const NumericalSemigroup& s) {
  return is_ci_values(s.generators());
}

DecompositionTree DecompositionTree::leaf(Int value) {
  DecompositionTree t;
  t.value_ = value;
  return t;
}

DecompositionTree DecompositionTree::node(Int glue_point, DecompositionTree left,
                                          DecompositionTree right) {
  DecompositionTree t;
  t.glue_point_ = glue_point;
  t.left_ = std::make_unique<DecompositionTree>(std::move(left));
  t.right_ = std::make_unique<DecompositionTree>(std::move(right));
  return t;
}

std::vector<Int> DecompositionTree::glue_points() const {
  std::vector<Int> out;
  if (is_leaf()) return out;
  out.push_back(glue_point_);
  auto l = left_->glue_points();
  auto r = right_->glue_points();
  out.insert(out.end(), l.begin(), l.end());
  out.insert(out.end(), r.begin(), r.end());
  return out;
}

std::vector<Int> DecompositionTree::leaf_values() const {
  if (is_leaf()) return {value_};
  auto l = left_->leaf_values();
  auto r = right_->leaf_values();
  l.insert(l.end(), r.begin(), r.end());
  return l;
}

std::optional<DecompositionTree> decomposition_tree(const NumericalSemigroup& s) {
  return tree_values(s.generators(), 1);
}

}  // namespace numsemi
