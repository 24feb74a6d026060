#pragma once

#include <optional>
#include <string>
#include <variant>

#include "compactlab/boundary.hpp"
#include "compactlab/measures.hpp"
#include "compactlab/sequences.hpp"

namespace compactlab {

// Convergence oracles for compactification topologies on F_rank u dF_rank,
// evaluated at a finite resolution (cylinder depth) and horizon.
//
//   Gromov       gamma_n -> x  iff the common prefix with x grows unboundedly
//   PointOrbital gamma_n -> x  iff the orbit gamma_n.x0 converges to x
//   Orbital      gamma_n -> x  iff the pushforwards gamma_n.nu concentrate on
//                              the depth-d cylinder of x (gap -> 0)
class TopologyOracle {
 public:
  static TopologyOracle gromov(int rank);
  static TopologyOracle point_orbital(const BoundaryPoint& x0);
  static TopologyOracle orbital(const CylinderMeasure& nu);

  int rank() const;
  std::string str() const;
  const BoundaryPoint* base_point() const;
  const CylinderMeasure* measure() const;

 private:
  struct Gromov {
    int rank;
  };
  struct PointOrbital {
    BoundaryPoint x0;
  };
  struct Orbital {
    CylinderMeasure nu;
  };
  using Variant = std::variant<Gromov, PointOrbital, Orbital>;
  explicit TopologyOracle(Variant v) : v_(std::move(v)) {}
  Variant v_;
  friend struct OracleEngine;
};

// Finite-horizon verdict. SupportedUpTo is one-sided evidence; Refuted records
// a violation at every tail of the horizon, and is marked permanent only when
// the violation is provably structural (e.g. a constant orbit pinned by a
// fixed point of the generating element).
struct ConvergenceVerdict {
  enum class Kind { SupportedUpTo, Refuted };
  Kind kind = Kind::Refuted;
  std::size_t depth = 0;
  int horizon = 0;

  // SupportedUpTo: least index from which the criterion held through the
  // horizon, plus the closing evidence value.
  int stabilization_index = 0;

  // Refuted: the witness index (last violating index) and exact evidence.
  int witness_index = 0;
  bool permanent = false;
  std::string reason;

  // Exact certificate values, oracle-dependent:
  //   Gromov:       common-prefix length at the witness / horizon
  //   PointOrbital: orbit point at the witness vs target (depth-d prefixes)
  //   Orbital:      the depth-d gap of gamma_n.nu against the target
  std::optional<Rational> gap_at_stabilization;
  std::optional<Rational> gap_at_horizon;
  std::optional<std::size_t> prefix_agreement;
  std::string orbit_value;   // printable witness data
  std::string target_value;

  bool supported() const { return kind == Kind::SupportedUpTo; }
};

// Evaluates the oracle criterion for n = 1..horizon at the given depth.
// Throws on depth 0 or horizon < 1.
ConvergenceVerdict oracle_decide(const TopologyOracle& oracle, const SequenceSpec& seq,
                                 const BoundaryPoint& target, std::size_t depth,
                                 int horizon);

// Orbital criterion: the target's depth-d cylinder holds a strict majority of
// the pushforward mass (gap < 1/2). A genuine weak* limit at a different point
// eventually forces the gap to 1, so the majority rule separates limits.
bool orbital_criterion_holds(const Rational& gap);

struct ProbeResult {
  bool agree = false;
  ConvergenceVerdict base;
  ConvergenceVerdict translated;
};

// Compares the verdicts of seq and seq.g toward the target: a projectivity
// check (right translation must not change limits).
ProbeResult projectivity_probe(const TopologyOracle& oracle, const SequenceSpec& seq,
                               const ReducedWord& g, const BoundaryPoint& target,
                               std::size_t depth, int horizon);

}  // namespace compactlab
