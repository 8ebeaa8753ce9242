#include "numsemi/enumeration.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <exception>
#include <fstream>
#include <functional>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "detail.hpp"
#include "numsemi/families.hpp"
#include "numsemi/gluing.hpp"
#include "numsemi/version.hpp"

namespace numsemi {

std::string_view family_name(FamilyKind family) {
  switch (family) {
    case FamilyKind::CompleteIntersection: return "ci";
    case FamilyKind::Free: return "free";
    case FamilyKind::Telescopic: return "telescopic";
    case FamilyKind::Planar: return "planar";
  }
  return "?";
}

std::optional<FamilyKind> family_from_name(std::string_view name) {
  if (name == "ci") return FamilyKind::CompleteIntersection;
  if (name == "free") return FamilyKind::Free;
  if (name == "telescopic") return FamilyKind::Telescopic;
  if (name == "planar") return FamilyKind::Planar;
  return std::nullopt;
}

namespace {

constexpr std::array<FamilyKind, 4> kAllFamilies = {
    FamilyKind::CompleteIntersection, FamilyKind::Free, FamilyKind::Telescopic,
    FamilyKind::Planar};

std::size_t family_index(FamilyKind family) { return static_cast<std::size_t>(family); }

// Compact working representation: generator list, Frobenius number, and a
// membership window over [0, F]. No Apery set is materialized during the
// recursion; full NumericalSemigroup objects are built only at the API
// boundary.
struct Entry {
  Entry(std::vector<Int> g, Int f) : gens(std::move(g)), frobenius(f), members(f) {
    for (Int v : gens) {
      if (v <= frobenius) members.add_generator(v);
    }
  }

  bool contains(Int x) const {
    if (x < 0) return false;
    if (x > frobenius) return true;
    return members.test(x);
  }
  bool is_min_gen(Int x) const {
    return std::binary_search(gens.begin(), gens.end(), x);
  }

  std::vector<Int> gens;
  Int frobenius;
  detail::SumClosure members;
};

using EntryList = std::vector<Entry>;
using EntryListPtr = std::shared_ptr<const EntryList>;
using Child = std::function<EntryListPtr(Int)>;

const EntryListPtr& empty_entries() {
  static const EntryListPtr empty = std::make_shared<EntryList>();
  return empty;
}

const EntryListPtr& natural_entries() {
  static const EntryListPtr naturals = [] {
    auto list = std::make_shared<EntryList>();
    list->emplace_back(std::vector<Int>{1}, Int{-1});
    return EntryListPtr(list);
  }();
  return naturals;
}

Entry glue_entries(const Entry& s1, Int d1, const Entry& s2, Int d2) {
  assert(std::gcd(d1, d2) == 1);
  assert(s2.contains(d1) && !s2.is_min_gen(d1));
  assert(s1.contains(d2) && !s1.is_min_gen(d2));
  std::vector<Int> merged;
  merged.reserve(s1.gens.size() + s2.gens.size());
  for (Int v : s1.gens) merged.push_back(d1 * v);
  for (Int v : s2.gens) merged.push_back(d2 * v);
  std::sort(merged.begin(), merged.end());
  // Theorem: under the gluing preconditions the scaled union is the minimal
  // generating set. Verify instead of assuming.
  if (!detail::is_canonical_generating_set(merged))
    throw InternalError("enumeration glued a non-minimal generating set");
  return Entry(std::move(merged), frobenius_of_gluing(s1.frobenius, d1, s2.frobenius, d2));
}

void sort_unique(EntryList& list) {
  std::sort(list.begin(), list.end(),
            [](const Entry& a, const Entry& b) { return a.gens < b.gens; });
  list.erase(std::unique(list.begin(), list.end(),
                         [](const Entry& a, const Entry& b) { return a.gens == b.gens; }),
             list.end());
}

// All complete intersections with Frobenius number f (odd, >= 1): the seed
// <2, f+2> plus every gluing d1*G1 + d2*G2 with 2 <= d2 < d1 and
// f = d1*f1 + d2*f2 + d1*d2, where f1 and f2 run over -1 and the odd
// positive integers and Gi has Frobenius number fi. The congruence
// f - d2*f2 = 0 (mod d1) selects the feasible f2.
EntryList compute_ci_chunk(Int f, Pruning pruning, const Child& child, int chunk, int nchunks,
                           std::uint64_t& nodes) {
  EntryList out;
  const Int c = f + 1;
  const bool bounds = pruning == Pruning::Bounds;
  if (chunk == 0) out.emplace_back(std::vector<Int>{2, f + 2}, f);

  // d1 < f holds for every gluing other than <2, f+2> itself; without that
  // fact the loop still terminates at the feasibility cap f + 2.
  const Int d1_max = bounds ? f - 1 : f + 2;
  for (Int d1 = 3; d1 <= d1_max; ++d1) {
    if ((d1 - 3) % nchunks != chunk) continue;
    Int d2_cap = d1 - 1;
    if (bounds) d2_cap = std::min(d2_cap, c / (d1 - 1) + 1);
    for (Int d2 = 2; d2 <= d2_cap; ++d2) {
      ++nodes;
      if (std::gcd(d1, d2) != 1) continue;
      const Int rem = f - d1 * d2;  // d1*f1 + d2*f2
      // With bounds the sweep keeps to -1, 1, 3, ...; without it every
      // integer >= -1 is tried and the impossible ones come back empty.
      for (Int f2 = -1;; f2 += bounds ? 2 : 1) {
        if (d2 * f2 > rem + d1) break;  // f1 >= -1 is infeasible beyond this
        ++nodes;
        const Int num = rem - d2 * f2;
        if (num % d1 != 0) continue;
        const Int f1 = num / d1;
        if (f1 < -1) break;
        if (bounds && f1 >= 0 && f1 % 2 == 0) continue;  // even Frobenius: no members
        const EntryListPtr set1 = child(f1);
        if (set1->empty()) continue;
        const EntryListPtr set2 = child(f2);
        if (set2->empty()) continue;
        for (const Entry& s1 : *set1) {
          ++nodes;
          if (!s1.contains(d2) || s1.is_min_gen(d2)) continue;
          for (const Entry& s2 : *set2) {
            ++nodes;
            if (!s2.contains(d1) || s2.is_min_gen(d1)) continue;
            out.push_back(glue_entries(s1, d1, s2, d2));
          }
        }
      }
    }
  }
  return out;
}

// Free / telescopic / planar semigroups with Frobenius number f: gluings
// d*G' + r*N with d >= 2, gcd(d, r) = 1, d | f + r, and G' in the same
// family with Frobenius number f' = (f + r)/d - r. Telescopic additionally
// requires r to exceed every other generator, planar the last slope
// condition e_{h-1} * r_{h-1} < r.
EntryList compute_glue_chunk(FamilyKind family, Int f, Pruning pruning, const Child& child,
                             int chunk, int nchunks, std::uint64_t& nodes) {
  assert(family != FamilyKind::CompleteIntersection);
  EntryList out;
  const Int c = f + 1;
  const bool bounds = pruning == Pruning::Bounds;
  const bool increasing = family != FamilyKind::Free;

  for (Int d = 2; d <= f + 2; ++d) {
    if ((d - 2) % nchunks != chunk) continue;
    // In the increasing arrangement d = d_h divides r_{h-1} < r_h, hence
    // c >= (r-1)(d-1) >= d(d-1) > (d-1)^2.
    if (bounds && increasing && (d - 1) * (d - 1) > c) break;

    Int r = ((-f) % d + d) % d;  // r = -f (mod d) makes f' an integer
    while (r < 2) r += d;
    for (; (d - 1) * (r - 1) <= c; r += d) {  // f' >= -1
      ++nodes;
      if (std::gcd(d, r) != 1) continue;
      const Int fp = (f + r) / d - r;
      assert(fp >= -1 && (f + r) % d == 0);
      if (bounds && fp >= 0 && fp % 2 == 0) continue;
      const EntryListPtr sub = child(fp);
      for (const Entry& g : *sub) {
        ++nodes;
        const Int h = static_cast<Int>(g.gens.size());  // new semigroup has h+1 generators
        if (increasing && r <= d * g.gens.back()) continue;
        if (family == FamilyKind::Planar && g.gens.size() >= 2) {
          Int e_prev = 0;
          for (std::size_t i = 0; i + 1 < g.gens.size(); ++i) e_prev = std::gcd(e_prev, g.gens[i]);
          if (e_prev * d * g.gens.back() >= r) continue;
        }
        if (bounds && h >= 2) {
          // The last generator of a free semigroup with h+1 generators is a
          // minimal generator, so at least the multiplicity bound 2^h. (The
          // sharper 2^h + 1 is only monitored; its proof covers d = 2 alone.)
          if (r < (Int{1} << h)) continue;
          bounds::Range range{};
          Int min_c = 0;
          switch (family) {
            case FamilyKind::Free:
              range = bounds::rh_range_free(h, c, d);
              min_c = bounds::min_conductor_ci(h + 1);
              break;
            case FamilyKind::Telescopic:
              range = bounds::rh_range_telescopic(h, c, d);
              min_c = bounds::min_conductor_telescopic(h + 1);
              break;
            default:
              range = bounds::rh_range_planar(h, c, d);
              min_c = bounds::min_conductor_planar(h);
              break;
          }
          if (r > range.hi) continue;
          if (min_c > c) continue;
        }
        if (!g.contains(r) || g.is_min_gen(r)) continue;
        out.push_back(glue_entries(g, d, (*natural_entries())[0], r));
      }
    }
  }
  return out;
}

EntryList compute_chunk(FamilyKind family, Int f, Pruning pruning, const Child& child, int chunk,
                        int nchunks, std::uint64_t& nodes) {
  if (family == FamilyKind::CompleteIntersection)
    return compute_ci_chunk(f, pruning, child, chunk, nchunks, nodes);
  return compute_glue_chunk(family, f, pruning, child, chunk, nchunks, nodes);
}

}  // namespace

struct Enumerator::Impl {
  EnumerationOptions options;
  std::array<std::unordered_map<Int, EntryListPtr>, 4> memo;
  std::uint64_t nodes = 0;

  explicit Impl(EnumerationOptions opts) : options(opts) {
    if (options.threads < 1) options.threads = 1;
  }

  // Memoized recursion; the single-threaded entry point.
  EntryListPtr get(FamilyKind family, Int f) {
    if (f < -1) throw InvalidFrobeniusError(f);
    if (f == -1) return natural_entries();
    if (f % 2 == 0) return empty_entries();
    auto& table = memo[family_index(family)];
    if (options.memoize) {
      if (auto it = table.find(f); it != table.end()) return it->second;
    }
    const Child child = [&](Int fp) { return get(family, fp); };
    auto result = std::make_shared<EntryList>(
        compute_chunk(family, f, options.pruning, child, 0, 1, nodes));
    sort_unique(*result);
    if (options.memoize) table.emplace(f, result);
    return result;
  }

  // Bottom-up, level-parallel fill: level f only reads strictly smaller
  // levels, so workers never touch an incomplete list.
  void prefill(FamilyKind family, Int f_max) {
    auto& table = memo[family_index(family)];
    const Child memo_child = [&table](Int fp) -> EntryListPtr {
      if (fp == -1) return natural_entries();
      if (fp % 2 == 0) return empty_entries();
      assert(fp >= 1);
      auto it = table.find(fp);
      if (it == table.end()) throw InternalError("memo miss during level prefill");
      return it->second;
    };
    for (Int f = 1; f <= f_max; f += 2) {
      if (table.contains(f)) continue;
      const int workers = options.threads;
      std::vector<EntryList> partial(static_cast<std::size_t>(workers));
      std::vector<std::uint64_t> local_nodes(static_cast<std::size_t>(workers), 0);
      std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
      std::vector<std::thread> pool;
      pool.reserve(static_cast<std::size_t>(workers));
      for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
          try {
            partial[w] = compute_chunk(family, f, options.pruning, memo_child, w, workers,
                                       local_nodes[w]);
          } catch (...) {
            errors[w] = std::current_exception();
          }
        });
      }
      for (auto& t : pool) t.join();
      for (const auto& err : errors) {
        if (err) std::rethrow_exception(err);
      }
      auto merged = std::make_shared<EntryList>();
      for (std::size_t w = 0; w < partial.size(); ++w) {
        merged->insert(merged->end(), std::make_move_iterator(partial[w].begin()),
                       std::make_move_iterator(partial[w].end()));
        nodes += local_nodes[w];
      }
      sort_unique(*merged);
      table.emplace(f, std::move(merged));
    }
  }

  EntryListPtr ensure(FamilyKind family, Int f) {
    if (options.threads > 1 && options.memoize && f >= 1 && f % 2 == 1) prefill(family, f);
    return get(family, f);
  }
};

Enumerator::Enumerator(EnumerationOptions options) : impl_(std::make_unique<Impl>(options)) {}
Enumerator::~Enumerator() = default;

const EnumerationOptions& Enumerator::options() const { return impl_->options; }

std::vector<NumericalSemigroup> Enumerator::enumerate(FamilyKind family, Int frobenius) {
  const EntryListPtr list = impl_->ensure(family, frobenius);
  std::vector<NumericalSemigroup> out;
  out.reserve(list->size());
  for (const Entry& e : *list)
    out.push_back(NumericalSemigroup::build(GeneratorSet::from_canonical(e.gens)));
  return out;
}

std::vector<NumericalSemigroup> Enumerator::enumerate_by_genus(FamilyKind family, Int genus) {
  if (genus < 0) throw DomainError("genus must be nonnegative");
  return enumerate(family, 2 * genus - 1);
}

std::vector<std::vector<Int>> Enumerator::generator_lists(FamilyKind family, Int frobenius) {
  const EntryListPtr list = impl_->ensure(family, frobenius);
  std::vector<std::vector<Int>> out;
  out.reserve(list->size());
  for (const Entry& e : *list) out.push_back(e.gens);
  return out;
}

Int Enumerator::count(FamilyKind family, Int frobenius) {
  return static_cast<Int>(impl_->ensure(family, frobenius)->size());
}

Int Enumerator::count_by_genus(FamilyKind family, Int genus) {
  if (genus < 0) throw DomainError("genus must be nonnegative");
  return count(family, 2 * genus - 1);
}

std::vector<CountRow> Enumerator::count_table(Int genus_first, Int genus_last) {
  if (genus_first < 0 || genus_last < genus_first)
    throw DomainError("count_table requires 0 <= genus_first <= genus_last");
  std::vector<CountRow> rows;
  rows.reserve(static_cast<std::size_t>(genus_last - genus_first + 1));
  for (Int g = genus_first; g <= genus_last; ++g) {
    CountRow row;
    row.genus = g;
    row.ci = count_by_genus(FamilyKind::CompleteIntersection, g);
    row.fr = count_by_genus(FamilyKind::Free, g);
    row.tl = count_by_genus(FamilyKind::Telescopic, g);
    row.pc = count_by_genus(FamilyKind::Planar, g);
    rows.push_back(row);
  }
  return rows;
}

std::map<Int, Int> Enumerator::embdim_histogram(FamilyKind family, Int genus_first,
                                                Int genus_last) {
  if (genus_first < 0 || genus_last < genus_first)
    throw DomainError("embdim_histogram requires 0 <= genus_first <= genus_last");
  std::map<Int, Int> histogram;
  for (Int g = genus_first; g <= genus_last; ++g) {
    const EntryListPtr list = impl_->ensure(family, 2 * g - 1);
    for (const Entry& e : *list) ++histogram[static_cast<Int>(e.gens.size())];
  }
  return histogram;
}

std::uint64_t Enumerator::nodes() const { return impl_->nodes; }
void Enumerator::reset_nodes() { impl_->nodes = 0; }

bool Enumerator::load_cache(const std::string& path) {
  std::ifstream in(path);
  if (!in) return false;
  std::string header;
  if (!std::getline(in, header)) return false;
  {
    std::istringstream hs(header);
    std::string magic, format, version;
    hs >> magic >> format >> version;
    if (magic != "numsemi-cache" || format != "1" || version != kVersion) return false;
  }

  // Parse everything before touching the memo so a malformed file is
  // discarded as a whole.
  std::array<std::unordered_map<Int, EntryListPtr>, 4> staged;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string fam_name;
    Int f = 0;
    std::string lists;
    if (!(ls >> fam_name >> f >> lists)) return false;
    const auto family = family_from_name(fam_name);
    if (!family || f < 1 || f % 2 == 0) return false;
    auto entries = std::make_shared<EntryList>();
    std::istringstream groups(lists);
    std::string group;
    while (std::getline(groups, group, '|')) {
      std::vector<Int> gens;
      std::istringstream vs(group);
      std::string value;
      while (std::getline(vs, value, ',')) {
        try {
          std::size_t pos = 0;
          const Int v = std::stoll(value, &pos);
          if (pos != value.size() || v <= 0) return false;
          gens.push_back(v);
        } catch (const std::exception&) {
          return false;
        }
      }
      if (gens.empty() || !std::is_sorted(gens.begin(), gens.end()) ||
          detail::gcd_all(gens) != 1)
        return false;
      Entry entry(std::move(gens), f);
      if (entry.members.test(f)) return false;  // f must be a gap
      entries->push_back(std::move(entry));
    }
    if (entries->empty()) return false;
    for (std::size_t i = 0; i + 1 < entries->size(); ++i) {
      if (!((*entries)[i].gens < (*entries)[i + 1].gens)) return false;
    }
    staged[family_index(*family)].emplace(f, std::move(entries));
  }
  for (std::size_t i = 0; i < staged.size(); ++i) {
    for (auto& [f, list] : staged[i]) impl_->memo[i].emplace(f, std::move(list));
  }
  return true;
}

bool Enumerator::save_cache(const std::string& path) const {
  std::ofstream out(path, std::ios::trunc);
  if (!out) return false;
  out << "numsemi-cache 1 " << kVersion << "\n";
  for (FamilyKind family : kAllFamilies) {
    const auto& table = impl_->memo[family_index(family)];
    std::vector<Int> keys;
    keys.reserve(table.size());
    for (const auto& [f, _] : table) keys.push_back(f);
    std::sort(keys.begin(), keys.end());
    for (Int f : keys) {
      const auto& list = *table.at(f);
      if (list.empty()) continue;
      out << family_name(family) << ' ' << f << ' ';
      for (std::size_t i = 0; i < list.size(); ++i) {
        if (i) out << '|';
        const auto& gens = list[i].gens;
        for (std::size_t j = 0; j < gens.size(); ++j) {
          if (j) out << ',';
          out << gens[j];
        }
      }
      out << "\n";
    }
  }
  return static_cast<bool>(out);
}

std::vector<NumericalSemigroup> enumerate(FamilyKind family, Int frobenius) {
  Enumerator e;
  return e.enumerate(family, frobenius);
}

std::vector<NumericalSemigroup> enumerate_by_genus(FamilyKind family, Int genus) {
  Enumerator e;
  return e.enumerate_by_genus(family, genus);
}

}  // namespace numsemi
