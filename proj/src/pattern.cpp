#include "coct/pattern.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "coct/error.hpp"

namespace coct {

namespace {

constexpr std::uint32_t kZero = 1U;

std::uint32_t bit(int label) { return std::uint32_t{1} << label; }

void check_label(int label) {
  if (label < 1 || label > Pattern::kMaxLabel) {
    throw InputError("label " + std::to_string(label) + " outside 1.." + std::to_string(Pattern::kMaxLabel));
  }
}

}  // namespace

Pattern::Pattern(std::vector<std::uint32_t> sets) {
  int zeros = 0;
  for (auto s : sets) {
    if (s == 0) throw InputError("pattern contains an empty set");
    if (s & kZero) ++zeros;
  }
  if (zeros != 1) throw InputError("pattern needs exactly one set containing 0");
  *this = canonical(std::move(sets));
}

Pattern::Pattern(std::vector<std::uint32_t> sets, Trusted) : sets_(std::move(sets)) {}

Pattern Pattern::canonical(std::vector<std::uint32_t> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  return {std::move(sets), Trusted{}};
}

std::uint32_t Pattern::zero_set() const {
  for (auto s : sets_) {
    if (s & kZero) return s;
  }
  throw InternalError("pattern without zero-set");
}

std::uint32_t Pattern::lbs() const {
  std::uint32_t all = 0;
  for (auto s : sets_) all |= s;
  return all & ~kZero;
}

std::uint32_t Pattern::sing() const {
  std::uint32_t out = 0;
  for (auto s : sets_) {
    if (!(s & kZero) && std::has_single_bit(s)) out |= s;
  }
  return out;
}

bool Pattern::is_cs() const {
  return std::all_of(sets_.begin(), sets_.end(),
                     [](std::uint32_t s) { return (s & kZero) || std::has_single_bit(s); }) &&
         is_complete();
}

std::string to_string(const Pattern& p) {
  auto render = [](std::uint32_t s) {
    std::string out;
    for (int e = 0; e <= Pattern::kMaxLabel; ++e) {
      if (s & bit(e)) {
        if (!out.empty()) out += ' ';
        out += std::to_string(e);
      }
    }
    return out;
  };
  std::string out = "[" + render(p.zero_set());
  for (auto s : p.sets()) {
    if (!(s & kZero)) out += " | " + render(s);
  }
  return out + "]";
}

Pattern pair_pattern(int i, int j) {
  check_label(i);
  check_label(j);
  return Pattern({kZero, bit(i) | bit(j)});
}

Pattern pattern_join(const Pattern& p, const Pattern& q) {
  // Sets are linked only across the two sides; a set present in both
  // patterns is a single element and links to either side.
  struct Item {
    std::uint32_t set;
    bool in_p;
    bool in_q;
  };
  std::vector<Item> items;
  for (auto s : p.sets()) items.push_back({s, true, false});
  for (auto s : q.sets()) {
    auto it = std::find_if(items.begin(), items.end(), [s](const Item& x) { return x.set == s; });
    if (it != items.end()) {
      it->in_q = true;
    } else {
      items.push_back({s, false, true});
    }
  }
  std::vector<std::size_t> parent(items.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t a = 0; a < items.size(); ++a) {
    for (std::size_t b = a + 1; b < items.size(); ++b) {
      const bool across = (items[a].in_p && items[b].in_q) || (items[a].in_q && items[b].in_p);
      if (across && (items[a].set & items[b].set)) parent[find(a)] = find(b);
    }
  }
  std::vector<std::uint32_t> merged(items.size(), 0);
  for (std::size_t i = 0; i < items.size(); ++i) merged[find(i)] |= items[i].set;
  std::vector<std::uint32_t> classes;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (find(i) == i) classes.push_back(merged[i]);
  }
  return Pattern::canonical(std::move(classes));
}

Pattern pattern_relabel(const Pattern& p, int i, int j) {
  check_label(i);
  check_label(j);
  if (i == j) throw InputError("relabel labels must differ");
  std::vector<std::uint32_t> sets(p.sets());
  for (auto& s : sets) {
    if (s & bit(i)) s = (s & ~bit(i)) | bit(j);
  }
  return Pattern::canonical(std::move(sets));
}

Pattern pattern_union(const Pattern& p, const Pattern& q) {
  std::vector<std::uint32_t> sets;
  sets.reserve(p.sets().size() + q.sets().size());
  std::uint32_t zero = 0;
  for (const auto* side : {&p, &q}) {
    for (auto s : side->sets()) {
      if (s & kZero) {
        zero |= s;
      } else {
        sets.push_back(s);
      }
    }
  }
  sets.push_back(zero);
  return Pattern::canonical(std::move(sets));
}

Pattern patadd(const Pattern& p, int i, int j) {
  const auto lbs = p.lbs();
  if (!(lbs & bit(i)) || !(lbs & bit(j))) return p;
  return pattern_join(p, pair_pattern(i, j));
}

Pattern fix(const Pattern& p, int i) {
  check_label(i);
  if (!(p.inc() & bit(i))) return p;
  std::vector<std::uint32_t> sets(p.sets());
  sets.push_back(bit(i));
  return Pattern::canonical(std::move(sets));
}

Pattern forget(const Pattern& p, int i) {
  check_label(i);
  if (!(p.inc() & bit(i))) return p;
  std::vector<std::uint32_t> sets;
  for (auto s : p.sets()) {
    s &= ~bit(i);
    if (s != 0) sets.push_back(s);
  }
  return Pattern::canonical(std::move(sets));
}

std::optional<Pattern> action(const Pattern& p, int l) {
  if (l < 1 || l > 4) throw InputError("action index must be in 1..4");
  const auto inc = p.inc();
  const int count = std::popcount(inc);
  if (count == 0) return p;
  if (count == 1) {
    const int i = std::countr_zero(inc);
    if (l == 1) return fix(p, i);
    if (l == 2) return forget(p, i);
    return std::nullopt;
  }
  if (count == 2) {
    const int i = std::countr_zero(inc);
    const int j = 31 - std::countl_zero(inc);
    switch (l) {
      case 1: return fix(fix(p, i), j);
      case 2: return forget(fix(p, i), j);
      case 3: return fix(forget(p, i), j);
      default: {
        // Forgetting i can turn {i, j} into the singleton {j}; j is still
        // forgotten, and that component can no longer reach the zero-set.
        std::vector<std::uint32_t> sets;
        for (auto s : p.sets()) {
          s &= ~(bit(i) | bit(j));
          if (s == 0) return std::nullopt;
          sets.push_back(s);
        }
        return Pattern(std::move(sets));
      }
    }
  }
  return std::nullopt;
}

bool consistent(const Pattern& p, const Pattern& q) { return pattern_join(p, q).sets().size() == 1; }

std::vector<Pattern> parrep(const Pattern& p) {
  if (!p.is_complete()) throw InputError("parrep needs a complete pattern: " + to_string(p));
  std::vector<std::uint32_t> targets;
  for (auto s : p.sets()) {
    if (!(s & kZero) && !std::has_single_bit(s)) targets.push_back(s);
  }

  std::vector<Pattern> family{p};
  for (auto target : targets) {
    std::map<Pattern, bool> odd;
    for (const auto& q : family) {
      const auto zero = q.zero_set();
      std::vector<std::uint32_t> rest;
      for (auto s : q.sets()) {
        if (s != zero && s != target) rest.push_back(s);
      }
      // Every strict subset of the target, the empty set included. Equal
      // results cancel in pairs.
      for (std::uint32_t sub = (target - 1) & target;; sub = (sub - 1) & target) {
        auto sets = rest;
        sets.push_back(zero | sub);
        odd[Pattern::canonical(std::move(sets))] ^= true;
        if (sub == 0) break;
      }
    }
    family.clear();
    for (auto& [pattern, flag] : odd) {
      if (flag) family.push_back(pattern);
    }
  }
  std::sort(family.begin(), family.end());
  return family;
}

std::vector<Pattern> all_patterns(int k) {
  if (k < 0 || k > 4) throw InputError("pattern enumeration supports k <= 4");
  std::vector<Pattern> out;
  const std::uint32_t universe = bit(k + 1) - 1;
  // Candidate non-zero sets: nonempty subsets of {1..k}, indexed by position.
  std::vector<std::uint32_t> nonzero;
  for (std::uint32_t s = 2; s <= universe; s += 2) nonzero.push_back(s);
  for (std::uint32_t zero_rest = 0; zero_rest <= universe; zero_rest += 2) {
    for (std::uint64_t family = 0; family < (std::uint64_t{1} << nonzero.size()); ++family) {
      std::vector<std::uint32_t> sets{zero_rest | kZero};
      for (std::size_t b = 0; b < nonzero.size(); ++b) {
        if (family >> b & 1U) sets.push_back(nonzero[b]);
      }
      out.push_back(Pattern(std::move(sets)));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

CsPattern::CsPattern(std::uint32_t x, std::uint32_t y) : x_(x), y_(y) {
  if ((y & ~x) != 0) throw InputError("CS-pattern zero labels must be a subset of its labels");
}

CsPattern::CsPattern(const Pattern& p) {
  if (!p.is_cs()) throw InputError("not a CS-pattern: " + to_string(p));
  x_ = p.lbs() >> 1;
  y_ = (p.zero_set() & ~kZero) >> 1;
}

Pattern CsPattern::to_pattern() const {
  std::vector<std::uint32_t> sets{kZero | (y_ << 1)};
  for (auto rest = x_; rest != 0; rest &= rest - 1) sets.push_back((rest & -rest) << 1);
  return Pattern::canonical(std::move(sets));
}

std::vector<CsPattern> all_cs_patterns(int k) {
  std::vector<CsPattern> out;
  const std::uint32_t full = (std::uint32_t{1} << k) - 1;
  for (std::uint32_t x = 0; x <= full; ++x) {
    for (std::uint32_t y = x;; y = (y - 1) & x) {
      out.emplace_back(x, y);
      if (y == 0) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace coct
