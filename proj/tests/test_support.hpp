#pragma once

#include <random>

#include "compactlab/boundary.hpp"
#include "compactlab/measures.hpp"

// Independent reference implementations used as oracles by the unit tests.
// They must stay brute-force and must not call the code paths they check.
namespace testsupport {

using namespace compactlab;

// Stack-free reduction by repeated scanning: removes one adjacent inverse pair
// at a time until none is left.
inline std::vector<Letter> scan_reduce(std::vector<Letter> letters) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < letters.size(); ++i) {
      if (letters[i].cancels(letters[i + 1])) {
        letters.erase(letters.begin() + i, letters.begin() + i + 2);
        changed = true;
        break;
      }
    }
  }
  return letters;
}

// Re-derives a pushforward mass by enumerating all reduced words u of length
// |g| + |base| and summing nu([u]) over those with reduce(g.u) starting with
// the base. This is the depth-(|g|+|base|) cylinder partition of g^-1[base].
inline Rational enumerated_pushforward_mass(const ReducedWord& g,
                                            const CylinderMeasure& nu,
                                            const Cylinder& c) {
  const std::size_t depth = g.length() + c.base.length();
  Rational total(0);
  for (const ReducedWord& u : reduced_words_of_length(g.rank(), depth)) {
    const ReducedWord moved = multiply(g, u);
    if (common_prefix_length(moved, c.base) == c.base.length()) {
      total += nu.mass(Cylinder{u});
    }
  }
  total.canonicalize();
  return total;
}

// Word generators over F_2 by default.
struct Gen {
  std::mt19937_64 rng;

  explicit Gen(unsigned long long seed) : rng(seed) {}

  ReducedWord word(std::size_t max_len, int rank = 2) {
    std::uniform_int_distribution<std::size_t> len_dist(0, max_len);
    const std::size_t len = len_dist(rng);
    std::uniform_int_distribution<int> gen_dist(0, rank - 1);
    std::uniform_int_distribution<int> sign_dist(0, 1);
    std::vector<Letter> letters;
    while (letters.size() < len) {
      Letter l{static_cast<std::uint8_t>(gen_dist(rng)),
               static_cast<std::int8_t>(sign_dist(rng) ? 1 : -1)};
      if (!letters.empty() && letters.back().cancels(l)) continue;
      letters.push_back(l);
    }
    return ReducedWord(std::move(letters), rank);
  }

  ReducedWord nonempty_word(std::size_t max_len, int rank = 2) {
    while (true) {
      ReducedWord w = word(max_len, rank);
      if (!w.is_identity()) return w;
    }
  }

  std::vector<Letter> letter_sequence(std::size_t max_len, int rank = 2) {
    std::uniform_int_distribution<std::size_t> len_dist(0, max_len);
    std::uniform_int_distribution<int> gen_dist(0, rank - 1);
    std::uniform_int_distribution<int> sign_dist(0, 1);
    std::vector<Letter> letters(len_dist(rng));
    for (Letter& l : letters) {
      l = Letter{static_cast<std::uint8_t>(gen_dist(rng)),
                 static_cast<std::int8_t>(sign_dist(rng) ? 1 : -1)};
    }
    return letters;
  }

  // Eventually periodic boundary point with |prefix| <= max_prefix and
  // 1 <= |period| <= max_period (drawn until the seams are cancellation-free).
  BoundaryPoint point(std::size_t max_prefix, std::size_t max_period, int rank = 2) {
    while (true) {
      try {
        return BoundaryPoint::make(word(max_prefix, rank),
                                   nonempty_word(max_period, rank));
      } catch (const Error&) {
        // seam cancellation; draw again
      }
    }
  }
};

}  // namespace testsupport
