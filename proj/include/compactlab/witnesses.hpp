#pragma once

#include <optional>
#include <string>
#include <vector>

#include "compactlab/oracle.hpp"

namespace compactlab {

// Position (0-based) where the n-th (1-based) maximal block of letters of the
// designated generator family begins in the infinite word of x. Throws when
// fewer than n such blocks exist (the tail has finitely many).
std::size_t nth_block_start(const BoundaryPoint& x, int designated_generator, int n);

// True when the infinite word of x contains infinitely many finite maximal
// blocks from the designated generator family (decidable from the period).
bool has_infinitely_many_blocks(const BoundaryPoint& x, int designated_generator);

// w_n: the inverse of the prefix of x0 that ends immediately before the n-th
// maximal block of generator-0 letters. w_1 is the identity exactly when x0
// opens with such a block. Requires infinitely many blocks.
ReducedWord prefix_inverse_sequence(const BoundaryPoint& x0, int n);

// A machine-checkable refutation of "the tree compactification equals the
// orbit compactification through x0", following the tail dichotomy of the
// boundary point.
struct WitnessCertificate {
  enum class Case { SingleLetterTail, InfinitelyManyBlocks };

  Case case_tag = Case::SingleLetterTail;
  BoundaryPoint x0;
  SequenceSpec spec;          // the refuting sequence
  SequenceSpec gromov_spec;   // subsequence with a computed tree limit
  BoundaryPoint gromov_target;

  // Single-letter tail: the orbit freezes at this point while the sequence
  // runs off along the opposite ray; they split at divergence_depth.
  std::optional<BoundaryPoint> constant_orbit;
  std::size_t divergence_depth = 0;

  // Infinitely-many-blocks: first letters of the sequence versus of its orbit
  // land in disjoint depth-1 cylinder families.
  std::vector<std::string> group_side_family;
  std::vector<std::string> orbit_side_family;

  std::size_t replay_depth = 0;  // depth of the orbit-oracle replay
  std::size_t gromov_depth = 0;  // depth of the tree-oracle replay
  int horizon = 0;
  ConvergenceVerdict replay_point_orbital;  // must be Refuted
  ConvergenceVerdict replay_gromov;         // must be SupportedUpTo
  bool verified = false;

  std::string case_name() const {
    return case_tag == Case::SingleLetterTail ? "single-letter-tail"
                                              : "infinitely-many-a-blocks";
  }
};

// Builds the refutation for any boundary point; every canonical point falls in
// exactly one of the two cases.
WitnessCertificate gromov_witness(const BoundaryPoint& x0, int horizon = 12,
                                  std::size_t depth = 6);

// Re-runs the certificate's oracle calls and separation checks from scratch.
bool verify_certificate(const WitnessCertificate& cert);

struct GeodesicProductViolation {
  int m = 0;
  int n = 0;
  std::size_t product = 0;
};

struct GeodesicProductReport {
  int horizon = 0;
  std::size_t products_checked = 0;
  std::vector<GeodesicProductViolation> violations;  // none expected in a tree
  bool all_zero() const { return violations.empty(); }
};

// With gamma_m the depth-m prefixes of x0, checks
// <gamma_m^-1, gamma_m^-1 gamma_n> = 0 for all 1 <= m < n <= horizon.
GeodesicProductReport geodesic_product_check(const BoundaryPoint& x0, int horizon);

struct AgreementRow {
  std::string spec;
  std::string target;
  ConvergenceVerdict gromov;
  ConvergenceVerdict orbital;
  bool agree = false;
};

struct AgreementReport {
  std::vector<AgreementRow> rows;
  std::size_t agreements = 0;
  Rational max_gap_at_horizon = Rational(0);
  std::optional<WitnessCertificate> point_orbital_disagreement;
};

// Compares tree and measure-orbit verdicts along specs with known tree
// targets; optionally pits a point-orbit oracle at x0 against them via the
// witness generator.
AgreementReport orbital_agreement_experiment(
    const CylinderMeasure& nu,
    const std::vector<std::pair<SequenceSpec, BoundaryPoint>>& targeted_specs,
    std::size_t depth, int horizon, const std::optional<BoundaryPoint>& x0 = {});

}  // namespace compactlab
