#pragma once

#include "compactlab/words.hpp"

namespace compactlab {

// A point of the tree boundary of F_rank: the eventually periodic infinite
// reduced word prefix . period . period . ...
//
// Stored in canonical form: minimal prefix length, then minimal (primitive)
// period; equal points are field-equal. Construction rejects seam
// cancellation (prefix.period or period.period not reduced).
class BoundaryPoint {
 public:
  static BoundaryPoint make(const ReducedWord& prefix, const ReducedWord& period);
  // Point grammar: word "(" word ")", e.g. "ab(aB)"; the parenthesized word is
  // the nonempty period. Normalized on parse.
  static BoundaryPoint parse(std::string_view text, int rank = 2);

  int rank() const { return prefix_.rank(); }
  const ReducedWord& prefix() const { return prefix_; }
  const ReducedWord& period() const { return period_; }

  Letter letter_at(std::size_t i) const;
  // First d letters of the infinite word; reduced by construction.
  ReducedWord prefix_word(std::size_t d) const;

  // Left action g.x with cancellation resolved; result is canonical.
  BoundaryPoint acted_by(const ReducedWord& g) const;

  std::string str() const;  // "prefix(period)"

  // Canonical forms are unique, so field equality decides point equality.
  friend bool operator==(const BoundaryPoint&, const BoundaryPoint&) = default;

 private:
  BoundaryPoint(ReducedWord prefix, ReducedWord period)
      : prefix_(std::move(prefix)), period_(std::move(period)) {}
  ReducedWord prefix_;
  ReducedWord period_;
};

// Prefix-agreement decision procedure: compares the infinite words to depth
// max(|x.prefix|, |y.prefix|) + |x.period| + |y.period| + lcm of the period
// lengths. Agrees with operator== (canonical-form equality).
bool points_equal(const BoundaryPoint& x, const BoundaryPoint& y);

// Common prefix length of a group element with the infinite word of x.
std::size_t common_prefix_length(const ReducedWord& g, const BoundaryPoint& x);

// The limit of g^n for g != identity: with g = w c w^-1 and c cyclically
// reduced, the ray w . c . c . ...
BoundaryPoint powers_limit(const ReducedWord& g);

}  // namespace compactlab
