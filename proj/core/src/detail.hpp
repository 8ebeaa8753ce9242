#pragma once

// Internal helpers shared by the core sources. Not installed.

#include <cassert>
#include <cstdint>
#include <numeric>
#include <vector>

#include "numsemi/semigroup.hpp"

namespace numsemi::detail {

// Reachability set of a finitely generated submonoid of N, restricted to a
// window [0, limit]. Generators are integrated with word-parallel doubling
// shifts: or-ing in W << v, W << 2v, W << 4v, ... covers every multiple of v
// combined with the bits already present.
class SumClosure {
 public:
  explicit SumClosure(Int limit) : limit_(limit) {
    if (limit_ >= 0) {
      words_.assign(static_cast<std::size_t>(limit_ / 64 + 1), 0);
      words_[0] = 1;  // 0 is always a member
    }
  }

  Int limit() const { return limit_; }

  void add_generator(Int v) {
    assert(v > 0);
    for (Int step = v; step <= limit_; step *= 2) shifted_or(step);
  }

  bool test(Int x) const {
    if (x < 0 || x > limit_) return false;
    return (words_[static_cast<std::size_t>(x / 64)] >> (x % 64)) & 1u;
  }

 private:
  void shifted_or(Int shift) {
    const auto n = static_cast<std::ptrdiff_t>(words_.size());
    const std::ptrdiff_t ws = shift / 64;
    const int bs = static_cast<int>(shift % 64);
    if (bs == 0) {
      for (std::ptrdiff_t i = n - 1; i >= ws; --i) words_[i] |= words_[i - ws];
    } else {
      for (std::ptrdiff_t i = n - 1; i >= ws; --i) {
        std::uint64_t bits = words_[i - ws] << bs;
        if (i - ws - 1 >= 0) bits |= words_[i - ws - 1] >> (64 - bs);
        words_[i] |= bits;
      }
    }
  }

  std::vector<std::uint64_t> words_;
  Int limit_;
};

// x in <gens>? Exact bounded reachability; gens need not have gcd 1.
inline bool monoid_contains(const std::vector<Int>& gens, Int x) {
  if (x == 0) return true;
  if (x < 0) return false;
  SumClosure closure(x);
  for (Int g : gens) {
    if (g <= x) closure.add_generator(g);
  }
  return closure.test(x);
}

inline Int gcd_all(const std::vector<Int>& values) {
  Int g = 0;
  for (Int v : values) {
    g = std::gcd(g, v);
    if (g == 1) break;
  }
  return g;
}

// Floor division for a possibly negative numerator and positive denominator.
inline Int floor_div(Int a, Int b) {
  assert(b > 0);
  Int q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

// Debug-checked multiplication/addition; release builds trust the range
// analysis (all enumeration quantities stay far below 2^62).
inline Int mul(Int a, Int b) {
#ifndef NDEBUG
  Int r = 0;
  assert(!__builtin_mul_overflow(a, b, &r));
  return r;
#else
  return a * b;
#endif
}

inline Int add(Int a, Int b) {
#ifndef NDEBUG
  Int r = 0;
  assert(!__builtin_add_overflow(a, b, &r));
  return r;
#else
  return a + b;
#endif
}

// True when `values` is sorted, strictly increasing, positive, and minimal
// (no value reachable from the preceding ones). Used by assertions.
bool is_canonical_generating_set(const std::vector<Int>& values);

}  // namespace numsemi::detail
