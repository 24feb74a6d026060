#include "compactlab/oracle.hpp"

namespace compactlab {

TopologyOracle TopologyOracle::gromov(int rank) {
  return TopologyOracle(Variant(Gromov{rank}));
}

TopologyOracle TopologyOracle::point_orbital(const BoundaryPoint& x0) {
  return TopologyOracle(Variant(PointOrbital{x0}));
}

TopologyOracle TopologyOracle::orbital(const CylinderMeasure& nu) {
  return TopologyOracle(Variant(Orbital{nu}));
}

int TopologyOracle::rank() const {
  return std::visit(
      [](const auto& o) -> int {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, Gromov>) return o.rank;
        if constexpr (std::is_same_v<T, PointOrbital>) return o.x0.rank();
        if constexpr (std::is_same_v<T, Orbital>) return o.nu.rank();
      },
      v_);
}

std::string TopologyOracle::str() const {
  return std::visit(
      [](const auto& o) -> std::string {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, Gromov>) return "gromov";
        if constexpr (std::is_same_v<T, PointOrbital>) return "point:" + o.x0.str();
        if constexpr (std::is_same_v<T, Orbital>) return "orbital:" + o.nu.description();
      },
      v_);
}

const BoundaryPoint* TopologyOracle::base_point() const {
  if (const auto* p = std::get_if<PointOrbital>(&v_)) return &p->x0;
  return nullptr;
}

const CylinderMeasure* TopologyOracle::measure() const {
  if (const auto* p = std::get_if<Orbital>(&v_)) return &p->nu;
  return nullptr;
}

bool orbital_criterion_holds(const Rational& gap) { return gap < Rational(1, 2); }

struct OracleEngine {
  static ConvergenceVerdict decide(const TopologyOracle& oracle, const SequenceSpec& seq,
                                   const BoundaryPoint& target, std::size_t depth,
                                   int horizon) {
    if (depth == 0) throw Error("oracle resolution depth must be >= 1");
    if (horizon < 1) throw Error("oracle horizon must be >= 1");
    if (oracle.rank() != seq.rank() || oracle.rank() != target.rank())
      throw Error("oracle, sequence and target must share one system");

    const int effective = seq.effective_horizon(horizon);
    if (effective < 1) throw Error("sequence has no usable index");

    ConvergenceVerdict v;
    v.depth = depth;
    v.horizon = effective;

    std::vector<bool> ok(static_cast<std::size_t>(effective) + 1, false);
    std::vector<Rational> gaps;
    std::vector<BoundaryPoint> orbit;
    const auto* point_orbital =
        std::get_if<TopologyOracle::PointOrbital>(&oracle.v_);
    const auto* orbital = std::get_if<TopologyOracle::Orbital>(&oracle.v_);

    for (int n = 1; n <= effective; ++n) {
      const ReducedWord gamma = seq.element(n);
      if (point_orbital) {
        const BoundaryPoint moved = point_orbital->x0.acted_by(gamma);
        orbit.push_back(moved);
        ok[static_cast<std::size_t>(n)] =
            moved.prefix_word(depth) == target.prefix_word(depth);
      } else if (orbital) {
        const Rational gap = dirac_gap(orbital->nu.translated(gamma), target, depth);
        gaps.push_back(gap);
        ok[static_cast<std::size_t>(n)] = orbital_criterion_holds(gap);
      } else {
        ok[static_cast<std::size_t>(n)] =
            common_prefix_length(gamma, target) >= depth;
      }
    }

    int stabilization = 0;
    for (int n = effective; n >= 1 && ok[static_cast<std::size_t>(n)]; --n)
      stabilization = n;

    if (stabilization != 0) {
      v.kind = ConvergenceVerdict::Kind::SupportedUpTo;
      v.stabilization_index = stabilization;
      if (orbital) {
        v.gap_at_stabilization = gaps[static_cast<std::size_t>(stabilization - 1)];
        v.gap_at_horizon = gaps.back();
      }
      if (point_orbital) {
        v.orbit_value = orbit.back().str();
        v.target_value = target.str();
      }
      if (!orbital && !point_orbital) {
        v.prefix_agreement = common_prefix_length(seq.element(effective), target);
      }
      return v;
    }

    v.kind = ConvergenceVerdict::Kind::Refuted;
    v.witness_index = effective;  // the violation recurs through the last index
    v.target_value = target.prefix_word(depth).str();

    if (point_orbital) {
      const BoundaryPoint& last = orbit.back();
      v.orbit_value = last.prefix_word(depth).str();
      // Permanence: a constant orbit pinned by a fixed point of the generator
      // stays put for every later index.
      if (auto g = seq.powers_generator()) {
        bool constant = true;
        for (std::size_t i = 1; i < orbit.size(); ++i)
          constant = constant && orbit[i] == orbit.front();
        if (constant && last.acted_by(*g) == last) {
          v.permanent = true;
          v.reason = "orbit is constant at " + last.str() + " (fixed by " + g->str() +
                     ") and disagrees with the target at depth " +
                     std::to_string(depth);
        }
      }
      if (!v.permanent)
        v.reason = "orbit disagrees with the target at depth " + std::to_string(depth) +
                   " through the horizon";
    } else if (orbital) {
      v.gap_at_horizon = gaps.back();
      v.reason = "pushforward gap at depth " + std::to_string(depth) +
                 " stays >= 1/2 through the horizon";
    } else {
      v.prefix_agreement = common_prefix_length(seq.element(effective), target);
      if (auto g = seq.powers_generator()) {
        // Powers follow the ray to their limit; a target whose depth-d
        // cylinder the ray leaves is refuted for good.
        const BoundaryPoint limit = powers_limit(*g);
        std::size_t stable = 0;
        while (stable < depth && limit.letter_at(stable) == target.letter_at(stable))
          ++stable;
        if (stable < depth) {
          v.permanent = true;
          v.reason = "powers of " + g->str() + " follow " + limit.str() +
                     ", which leaves the target's depth-" + std::to_string(depth) +
                     " cylinder";
        }
      }
      if (!v.permanent)
        v.reason = "common prefix with the target stays below " + std::to_string(depth) +
                   " through the horizon";
    }
    return v;
  }
};

ConvergenceVerdict oracle_decide(const TopologyOracle& oracle, const SequenceSpec& seq,
                                 const BoundaryPoint& target, std::size_t depth,
                                 int horizon) {
  return OracleEngine::decide(oracle, seq, target, depth, horizon);
}

ProbeResult projectivity_probe(const TopologyOracle& oracle, const SequenceSpec& seq,
                               const ReducedWord& g, const BoundaryPoint& target,
                               std::size_t depth, int horizon) {
  ProbeResult r;
  r.base = oracle_decide(oracle, seq, target, depth, horizon);
  r.translated = oracle_decide(oracle, seq.right_translated(g), target, depth, horizon);
  r.agree = r.base.supported() == r.translated.supported();
  return r;
}

}  // namespace compactlab
