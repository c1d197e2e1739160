#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace coct {

/// A set of subsets of {0, 1, ..., k}. Each member is a bitmask where bit 0
/// stands for the element 0 and bit i for label i. Exactly one member, the
/// zero-set, contains 0. Members are kept sorted and unique so equality is
/// structural.
class Pattern {
 public:
  static constexpr int kMaxLabel = 30;

  /// The pattern [0] = {{0}}.
  Pattern() : sets_{1U} {}
  /// Throws InputError unless the sets form a valid pattern.
  explicit Pattern(std::vector<std::uint32_t> sets);

  const std::vector<std::uint32_t>& sets() const { return sets_; }
  std::uint32_t zero_set() const;
  /// Labels occurring anywhere, as a mask over bits 1..k.
  std::uint32_t lbs() const;
  /// Labels occurring as a singleton member.
  std::uint32_t sing() const;
  std::uint32_t inc() const { return lbs() & ~sing(); }
  bool is_complete() const { return inc() == 0; }
  /// Only the zero-set and singletons.
  bool is_cs() const;

  friend bool operator==(const Pattern&, const Pattern&) = default;
  friend auto operator<=>(const Pattern&, const Pattern&) = default;

 private:
  struct Trusted {};
  Pattern(std::vector<std::uint32_t> sets, Trusted);
  static Pattern canonical(std::vector<std::uint32_t> sets);

  friend Pattern pattern_join(const Pattern&, const Pattern&);
  friend Pattern pattern_relabel(const Pattern&, int, int);
  friend Pattern pattern_union(const Pattern&, const Pattern&);
  friend Pattern fix(const Pattern&, int);
  friend Pattern forget(const Pattern&, int);
  friend class CsPattern;
  friend std::vector<Pattern> parrep(const Pattern&);

  std::vector<std::uint32_t> sets_;
};

/// Bracket notation with the zero-set first, e.g. "[0 | 1 2 | 3]".
std::string to_string(const Pattern& p);

/// {{0}, {i, j}}
Pattern pair_pattern(int i, int j);

Pattern pattern_join(const Pattern& p, const Pattern& q);
Pattern pattern_relabel(const Pattern& p, int i, int j);
Pattern pattern_union(const Pattern& p, const Pattern& q);
Pattern patadd(const Pattern& p, int i, int j);
Pattern fix(const Pattern& p, int i);
Pattern forget(const Pattern& p, int i);
/// None when undefined, or when forgetting both labels strands a component.
std::optional<Pattern> action(const Pattern& p, int l);
bool consistent(const Pattern& p, const Pattern& q);
/// Sorted family of CS-patterns; p must be complete.
std::vector<Pattern> parrep(const Pattern& p);

/// Every pattern over labels 1..k.
std::vector<Pattern> all_patterns(int k);

/// A CS-pattern as the pair (X, Y), Y a subset of X. Label i is bit i-1.
class CsPattern {
 public:
  CsPattern() = default;
  CsPattern(std::uint32_t x, std::uint32_t y);
  /// Throws InputError unless p is a CS-pattern.
  explicit CsPattern(const Pattern& p);

  std::uint32_t labels() const { return x_; }
  std::uint32_t zero_labels() const { return y_; }
  Pattern to_pattern() const;

  friend bool operator==(const CsPattern&, const CsPattern&) = default;
  friend auto operator<=>(const CsPattern&, const CsPattern&) = default;

 private:
  std::uint32_t x_ = 0;
  std::uint32_t y_ = 0;
};

/// Every CS-pattern over labels 1..k, 3^k of them.
std::vector<CsPattern> all_cs_patterns(int k);

}  // namespace coct
