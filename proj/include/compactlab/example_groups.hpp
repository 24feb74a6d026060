#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "compactlab/words.hpp"

namespace compactlab {

// ---------------------------------------------------------------------------
// Lamplighter group Z/2 wr Z: a walker position and a finite set of lit lamps.
// ---------------------------------------------------------------------------

struct LamplighterElement {
  long long position = 0;
  std::set<long long> lamps;  // lit lamp coordinates

  friend bool operator==(const LamplighterElement&, const LamplighterElement&) = default;
};

std::set<long long> shift_lamps(const std::set<long long>& lamps, long long by);
std::set<long long> symmetric_difference(const std::set<long long>& a,
                                         const std::set<long long>& b);

// (p1, C1)(p2, C2) = (p1 + p2, C1 xor shift_{p1}(C2)); the group law induced by
// the action convention below.
LamplighterElement lamplighter_multiply(const LamplighterElement& g,
                                        const LamplighterElement& h);
LamplighterElement lamplighter_inverse(const LamplighterElement& g);

// A lamp configuration in the full product space: finitely supported, or
// eventually periodic with an explicit window and left/right periodic tails.
// Queried through nested windows [-N, N].
class LampConfig {
 public:
  static LampConfig finitely_supported(std::set<long long> lit);
  // base occupies [base_start, base_start + |base|); the left pattern tiles
  // positions below it (rightmost pattern bit adjacent to the base), the right
  // pattern tiles positions above it.
  static LampConfig window_periodic(std::vector<bool> left, std::vector<bool> base,
                                    std::vector<bool> right, long long base_start = 0);

  bool lit(long long i) const;
  std::vector<bool> window(long long radius) const;  // states on [-radius, radius]
  bool is_finitely_supported() const;
  // Defined only for finitely supported configurations.
  std::set<long long> support() const;
  std::string str() const;

  friend bool operator==(const LampConfig& a, const LampConfig& b);
  friend LampConfig lamplighter_act(const LamplighterElement& g, const LampConfig& x);

 private:
  struct Finite {
    std::set<long long> lit;
  };
  struct Periodic {
    std::vector<bool> left, base, right;
    long long base_start;
  };
  std::variant<Finite, Periodic> v_;
  explicit LampConfig(std::variant<Finite, Periodic> v) : v_(std::move(v)) {}
};

// (p, C).X = C xor shift_p(X): translate the configuration, then toggle.
LampConfig lamplighter_act(const LamplighterElement& g, const LampConfig& x);

// ---------------------------------------------------------------------------
// Infinite dihedral group in normal form rho^k sigma^eps.
// ---------------------------------------------------------------------------

struct DihedralElement {
  long long shift = 0;  // power of rho
  bool flip = false;    // sigma present

  friend bool operator==(const DihedralElement&, const DihedralElement&) = default;
};

// (k1, e1)(k2, e2) = (k1 + (-1)^e1 k2, e1 xor e2).
DihedralElement dihedral_multiply(const DihedralElement& g, const DihedralElement& h);
DihedralElement dihedral_inverse(const DihedralElement& g);

// rho is the right shift n -> n+1, sigma the reflection n -> -n.
long long dihedral_act_integer(const DihedralElement& g, long long n);

// Two-point space {a, b} as indices {0, 1}: rho acts trivially, sigma swaps.
int dihedral_act_two_point(const DihedralElement& g, int point);

// Z acting on {a, b} through parity (1.a = b).
int integer_act_two_point(long long k, int point);

// ---------------------------------------------------------------------------
// Generic finite actions: a point set with one permutation per generator.
// ---------------------------------------------------------------------------

class FiniteAction {
 public:
  FiniteAction(std::vector<std::string> points,
               std::map<std::string, std::vector<int>> generator_images);

  std::size_t size() const { return points_.size(); }
  const std::vector<std::string>& points() const { return points_; }
  int point_index(const std::string& name) const;
  const std::vector<int>& generator_image(const std::string& gen) const;
  // Image of a generator word (letters name generators; no inverses needed
  // for finite orders, but uppercase means inverse permutation).
  std::vector<int> word_image(const std::string& word) const;
  bool is_transitive() const;

 private:
  std::vector<std::string> points_;
  std::map<std::string, std::vector<int>> generator_images_;
};

// Permutation helpers shared by finite-system code.
std::vector<int> compose_permutations(const std::vector<int>& outer,
                                      const std::vector<int>& inner);
std::vector<int> invert_permutation(const std::vector<int>& p);
std::vector<int> identity_permutation(std::size_t n);
bool is_permutation(const std::vector<int>& p);

// ---------------------------------------------------------------------------
// Tagged dispatch mirroring the shared element_multiply / element_act surface.
// ---------------------------------------------------------------------------

using GroupElement = std::variant<LamplighterElement, DihedralElement, long long>;
using SpacePoint = std::variant<LampConfig, long long, int>;  // int = {a,b} index

GroupElement element_multiply(const GroupElement& g, const GroupElement& h);
SpacePoint element_act(const GroupElement& g, const SpacePoint& x);

}  // namespace compactlab
