#pragma once

#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "compactlab/boundary.hpp"
#include "compactlab/words.hpp"

namespace compactlab {

// Generator of an injective group-element sequence (gamma_n), n >= 1.
//
// Grammar: powers:<word> | prefixes:<point> | prefix-inverses:<point> |
//          explicit:<w1,w2,...> | rtrans:<spec>;<word>
class SequenceSpec {
 public:
  static SequenceSpec powers(const ReducedWord& g);
  static SequenceSpec prefixes(const BoundaryPoint& x);
  static SequenceSpec prefix_inverses(const BoundaryPoint& x);
  static SequenceSpec explicit_list(std::vector<ReducedWord> words);
  static SequenceSpec right_translate(SequenceSpec base, const ReducedWord& g);
  static SequenceSpec parse(std::string_view text, int rank = 2);

  int rank() const;
  // 1-based. Throws if n exceeds an explicit list.
  ReducedWord element(int n) const;
  // Largest usable index not exceeding requested (explicit lists are finite).
  int effective_horizon(int requested) const;
  // The generating element when this is a plain powers sequence.
  std::optional<ReducedWord> powers_generator() const;
  std::string str() const;

  SequenceSpec right_translated(const ReducedWord& g) const {
    return right_translate(*this, g);
  }

 private:
  struct Powers {
    ReducedWord g;
  };
  struct Prefixes {
    BoundaryPoint x;
  };
  struct PrefixInverses {
    BoundaryPoint x;
  };
  struct Explicit {
    std::vector<ReducedWord> words;
  };
  struct RightTranslate {
    std::shared_ptr<const SequenceSpec> base;
    ReducedWord g;
  };
  using Variant = std::variant<Powers, Prefixes, PrefixInverses, Explicit, RightTranslate>;

  explicit SequenceSpec(Variant v) : v_(std::move(v)) {}
  Variant v_;
};

}  // namespace compactlab
