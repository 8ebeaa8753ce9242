#include "numsemi/semigroup.hpp"

#include <algorithm>
#include <cassert>
#include <queue>

#include "detail.hpp"

namespace numsemi {

namespace {

void check_value_range(const std::vector<Int>& values) {
  for (Int v : values) {
    if (v <= 0) throw DomainError("generators must be positive (got " + std::to_string(v) + ")");
    if (v > kMaxGeneratorValue)
      throw DomainError("generator " + std::to_string(v) + " exceeds the supported maximum " +
                        std::to_string(kMaxGeneratorValue));
  }
}

// Apery set with respect to the smallest generator m: the least element of
// the semigroup in every residue class mod m, found as shortest paths on the
// residue graph (edge i -> (i+g) mod m of weight g for every other
// generator g).
std::vector<Int> apery_set(const std::vector<Int>& gens) {
  const Int m = gens.front();
  if (m == 1) return {0};

  constexpr Int kUnreached = -1;
  std::vector<Int> dist(static_cast<std::size_t>(m), kUnreached);
  using Item = std::pair<Int, Int>;  // (value, residue)
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  dist[0] = 0;
  queue.push({0, 0});
  while (!queue.empty()) {
    auto [value, residue] = queue.top();
    queue.pop();
    if (value != dist[static_cast<std::size_t>(residue)]) continue;
    for (std::size_t k = 1; k < gens.size(); ++k) {
      const Int next_value = value + gens[k];
      const Int next_residue = next_value % m;
      Int& slot = dist[static_cast<std::size_t>(next_residue)];
      if (slot == kUnreached || next_value < slot) {
        slot = next_value;
        queue.push({next_value, next_residue});
      }
    }
  }
  for (Int d : dist) {
    if (d == kUnreached) throw InternalError("Apery set incomplete; generators not coprime?");
  }
  return dist;
}

}  // namespace

namespace detail {

bool is_canonical_generating_set(const std::vector<Int>& values) {
  if (values.empty()) return false;
  if (!std::is_sorted(values.begin(), values.end())) return false;
  if (std::adjacent_find(values.begin(), values.end()) != values.end()) return false;
  if (values.front() <= 0) return false;
  if (gcd_all(values) != 1) return false;
  SumClosure closure(values.back());
  for (Int v : values) {
    if (closure.test(v)) return false;
    closure.add_generator(v);
  }
  return true;
}

}  // namespace detail

GeneratorSet GeneratorSet::canonicalize(std::vector<Int> values) {
  if (values.empty()) throw EmptyInputError();
  check_value_range(values);
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  const Int g = detail::gcd_all(values);
  if (g != 1) throw NotCoprimeError(g);

  // Ascending sweep: a value reachable from the accepted smaller ones is
  // redundant. Skipped values stay reachable, so the closure over accepted
  // values is the full monoid below values.back().
  detail::SumClosure closure(values.back());
  std::vector<Int> kept;
  for (Int v : values) {
    if (closure.test(v)) continue;
    kept.push_back(v);
    closure.add_generator(v);
  }
  return GeneratorSet(std::move(kept));
}

GeneratorSet GeneratorSet::from_canonical(std::vector<Int> values) {
  if (values.empty()) throw EmptyInputError();
  check_value_range(values);
  if (!std::is_sorted(values.begin(), values.end()) || detail::gcd_all(values) != 1)
    throw DomainError("values are not a canonical generating set");
  assert(detail::is_canonical_generating_set(values));
  return GeneratorSet(std::move(values));
}

NumericalSemigroup NumericalSemigroup::build(GeneratorSet gens) {
  std::vector<Int> apery = apery_set(gens.values());
  const Int m = gens.smallest();
  const Int frobenius = *std::max_element(apery.begin(), apery.end()) - m;

  // genus = (sum of the Apery set)/m - (m-1)/2, always an integer.
  __int128 total = 0;
  for (Int a : apery) total += a;
  const __int128 numerator = 2 * total - static_cast<__int128>(m) * (m - 1);
  if (numerator % (2 * static_cast<__int128>(m)) != 0)
    throw InternalError("Apery sum inconsistent with genus formula");
  const Int genus = static_cast<Int>(numerator / (2 * static_cast<__int128>(m)));

  return NumericalSemigroup(std::move(gens), std::move(apery), frobenius, genus);
}

NumericalSemigroup NumericalSemigroup::make(std::vector<Int> values) {
  return build(GeneratorSet::canonicalize(std::move(values)));
}

NumericalSemigroup NumericalSemigroup::naturals() {
  return build(GeneratorSet::from_canonical({1}));
}

bool NumericalSemigroup::contains(Int x) const {
  if (x < 0) return false;
  const Int m = multiplicity();
  return x >= apery_[static_cast<std::size_t>(x % m)];
}

bool NumericalSemigroup::is_minimal_generator(Int x) const {
  return std::binary_search(generators().begin(), generators().end(), x);
}

}  // namespace numsemi
