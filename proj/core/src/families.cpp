#include "numsemi/families.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <map>

#include "detail.hpp"

namespace numsemi {

namespace {

using detail::gcd_all;
using detail::monoid_contains;

std::vector<Int> divided(const std::vector<Int>& values, Int d) {
  std::vector<Int> out(values);
  for (Int& v : out) v /= d;
  return out;
}

// Checks e_k * r_k in <r_0,...,r_{k-1}> as r_k / d_{k+1} in the numerical
// semigroup <r_0/d_k, ..., r_{k-1}/d_k>.
bool step_is_gluing(const std::vector<Int>& order, const std::vector<Int>& dseq, std::size_t k) {
  const Int dk = dseq[k - 1];
  const Int dk1 = dseq[k];
  std::vector<Int> prefix(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k));
  for (Int& v : prefix) v /= dk;
  std::sort(prefix.begin(), prefix.end());
  return monoid_contains(prefix, order[k] / dk1);
}

// Last-generator search shared by is_free and find_free_arrangement.
// `gens` must be a canonical generating set (of the scaled-down semigroup).
std::optional<std::vector<Int>> free_arrangement_values(const std::vector<Int>& gens) {
  if (gens.size() == 1) return std::vector<Int>{gens.front()};
  for (std::size_t idx = 0; idx < gens.size(); ++idx) {
    const Int r = gens[idx];
    std::vector<Int> rest(gens);
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(idx));
    const Int d = gcd_all(rest);
    if (d < 2) continue;  // e_h = d_h must be at least 2
    assert(std::gcd(d, r) == 1);
    std::vector<Int> quotient = divided(rest, d);
    if (!monoid_contains(quotient, r)) continue;
    if (auto sub = free_arrangement_values(quotient)) {
      for (Int& v : *sub) v *= d;
      sub->push_back(r);
      return sub;
    }
  }
  return std::nullopt;
}

bool is_free_values(const std::vector<Int>& gens) {
  if (gens.size() == 1) return true;
  // Free semigroups are complete intersections, so the multiplicity bound
  // 2^(e-1) <= m applies and cheaply rejects wide inputs.
  if (gens.size() - 1 >= 22 || gens.front() < (Int{1} << (gens.size() - 1))) return false;
  thread_local std::map<std::vector<Int>, bool> memo;
  if (auto it = memo.find(gens); it != memo.end()) return it->second;

  bool result = false;
  for (std::size_t idx = 0; idx < gens.size() && !result; ++idx) {
    const Int r = gens[idx];
    std::vector<Int> rest(gens);
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(idx));
    const Int d = gcd_all(rest);
    if (d < 2) continue;
    std::vector<Int> quotient = divided(rest, d);
    if (!monoid_contains(quotient, r)) continue;
    result = is_free_values(quotient);
  }
  memo.emplace(gens, result);
  return result;
}

}  // namespace

Arrangement Arrangement::of(const NumericalSemigroup& s, std::vector<Int> order) {
  std::vector<Int> sorted(order);
  std::sort(sorted.begin(), sorted.end());
  if (sorted != s.generators()) throw NotAPermutationError();

  Arrangement arr;
  arr.order = std::move(order);
  const std::size_t n = arr.order.size();
  arr.dseq.resize(n);
  Int g = 0;
  for (std::size_t k = 0; k < n; ++k) {
    g = std::gcd(g, arr.order[k]);
    arr.dseq[k] = g;  // d_{k+1} = gcd(r_0,...,r_k)
  }
  assert(arr.dseq.back() == 1);
  arr.eseq.resize(n - 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    assert(arr.dseq[k] % arr.dseq[k + 1] == 0);
    arr.eseq[k] = arr.dseq[k] / arr.dseq[k + 1];
  }
  return arr;
}

bool is_free_arrangement(const NumericalSemigroup& s, const Arrangement& arr) {
  if (arr.order.size() != s.gens().size()) throw NotAPermutationError();
  const std::size_t h = arr.order.size() - 1;
  if (h == 0) return true;
  for (std::size_t k = h; k >= 1; --k) {
    if (arr.eseq[k - 1] < 2) return false;
    if (!step_is_gluing(arr.order, arr.dseq, k)) return false;
  }
  return true;
}

bool is_free_arrangement(const NumericalSemigroup& s, std::vector<Int> order) {
  return is_free_arrangement(s, Arrangement::of(s, std::move(order)));
}

bool is_free(const NumericalSemigroup& s) { return is_free_values(s.generators()); }

std::optional<std::vector<Int>> find_free_arrangement(const NumericalSemigroup& s) {
  if (!is_free(s)) return std::nullopt;
  auto arr = free_arrangement_values(s.generators());
  assert(arr);
  return arr;
}

bool is_telescopic(const NumericalSemigroup& s) {
  return is_free_arrangement(s, Arrangement::of(s, s.generators()));
}

bool is_planar(const NumericalSemigroup& s) {
  if (!is_telescopic(s)) return false;
  const auto& gens = s.generators();
  const std::size_t h = gens.size() - 1;
  if (h <= 1) return true;
  const Arrangement arr = Arrangement::of(s, gens);
  for (std::size_t k = 1; k <= h - 1; ++k) {
    if (detail::mul(arr.eseq[k - 1], gens[k]) >= gens[k + 1]) return false;
  }
  return true;
}

namespace bounds {

namespace {

Int pow2_checked(Int k) {
  if (k < 0 || k > 61) throw DomainError("2^" + std::to_string(k) + " out of range");
  return Int{1} << k;
}

void require(bool ok, const char* what) {
  if (!ok) throw DomainError(what);
}

Int floor_div_big(__int128 a, __int128 b) {
  assert(b > 0);
  __int128 q = a / b;
  if (a % b != 0 && a < 0) --q;
  constexpr __int128 kCap = __int128{1} << 62;
  if (q > kCap) q = kCap;
  if (q < -kCap) q = -kCap;
  return static_cast<Int>(q);
}

}  // namespace

Int min_multiplicity_ci(Int e) {
  require(e >= 1, "min_multiplicity_ci requires e >= 1");
  return pow2_checked(e - 1);
}

Int max_embdim_ci(Int c) {
  require(c >= 1, "max_embdim_ci requires c >= 1");
  return std::bit_width(static_cast<std::uint64_t>(c));  // floor(log2 c) + 1
}

Int max_embdim_ci_refined(Int c) {
  require(c >= 5, "max_embdim_ci_refined requires c >= 5");
  return std::bit_width(static_cast<std::uint64_t>(c - 4));
}

const std::vector<std::vector<Int>>& refined_embdim_exceptions() {
  static const std::vector<std::vector<Int>> exceptions = {
      {1}, {2, 3}, {2, 5}, {3, 4}};
  return exceptions;
}

Int min_conductor_ci(Int e) {
  require(e >= 1 && e <= 58, "min_conductor_ci requires 1 <= e <= 58");
  return (e - 1) * pow2_checked(e - 1);
}

Int min_conductor_telescopic(Int e) {
  require(e >= 2 && e <= 57, "min_conductor_telescopic requires 2 <= e <= 57");
  return (e - 2) * pow2_checked(e) + 2;
}

Int min_conductor_planar(Int h) {
  require(h >= 0 && h <= 30, "min_conductor_planar requires 0 <= h <= 30");
  const Int value = 5 * pow2_checked(2 * h) - 9 * pow2_checked(h) + 4;
  assert(value % 3 == 0);
  return value / 3;
}

Int max_h_planar(Int c) {
  require(c >= 0, "max_h_planar requires c >= 0");
  // Largest h with (10 * 2^h - 9)^2 <= 60c + 1, i.e. 2^h <= (sqrt(60c+1)+9)/10.
  const __int128 target = static_cast<__int128>(60) * c + 1;
  Int h = 0;
  while (h < 62) {
    const __int128 side = (static_cast<__int128>(10) << (h + 1)) - 9;
    if (side * side > target) break;
    ++h;
  }
  return h;
}

Range rh_range_free(Int h, Int c, Int d) {
  require(h >= 2 && h <= 60, "rh_range_free requires h >= 2");
  require(d >= 2, "rh_range_free requires d >= 2");
  Range r;
  r.lo = pow2_checked(h) + 1;
  const __int128 numerator =
      static_cast<__int128>(c) - static_cast<__int128>(h - 1) * pow2_checked(h - 1) * d;
  r.hi = floor_div_big(numerator, d - 1) + 1;
  return r;
}

Range rh_range_telescopic(Int h, Int c, Int d) {
  require(h >= 2 && h <= 60, "rh_range_telescopic requires h >= 2");
  require(d >= 2, "rh_range_telescopic requires d >= 2");
  Range r;
  r.lo = pow2_checked(h + 1) - 1;
  const __int128 numerator =
      static_cast<__int128>(c) -
      (static_cast<__int128>(h - 2) * pow2_checked(h) + 2) * d;
  r.hi = floor_div_big(numerator, d - 1) + 1;
  return r;
}

Range rh_range_planar(Int h, Int c, Int d) {
  require(h >= 2 && h <= 30, "rh_range_planar requires h >= 2");
  require(d >= 2, "rh_range_planar requires d >= 2");
  Range r;
  const Int lo_numerator = 5 * pow2_checked(2 * h - 1) - 1;
  assert(lo_numerator % 3 == 0);
  r.lo = lo_numerator / 3;
  const Int b_numerator = 5 * pow2_checked(2 * h - 2) - 9 * pow2_checked(h - 1) + 4;
  assert(b_numerator % 3 == 0);
  const Int b = b_numerator / 3;
  const __int128 numerator = static_cast<__int128>(c) - static_cast<__int128>(b) * d;
  r.hi = floor_div_big(numerator, d - 1) + 1;
  return r;
}

}  // namespace bounds

}  // namespace numsemi
