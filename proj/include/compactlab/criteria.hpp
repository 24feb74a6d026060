#pragma once

#include <map>
#include <vector>

#include "compactlab/measures.hpp"

namespace compactlab {

// sup|f| minus the largest |P_nu f| over the radius-R ball. Nonnegative and
// nonincreasing in R; tending to 0 is the desk-scale isometry evidence.
Rational contractivity_deficit(const CylinderMeasure& nu, const CylinderFunction& f,
                               std::size_t radius);

// |P_nu(f g)(gamma) - P_nu f(gamma) P_nu g(gamma)|, exactly.
Rational multiplicativity_defect(const CylinderMeasure& nu, const CylinderFunction& f,
                                 const CylinderFunction& g, const ReducedWord& gamma);

// A finite-support rational perturbation on the group.
using FiniteSupportFunction = std::map<ReducedWord, Rational>;

struct ResidualViolation {
  ReducedWord gamma;
  Rational deviation;
};

// For F = P_nu f + phi, lists the gamma with R/2 <= |gamma| <= R where
// |F(gamma) - P_nu f(gamma)| > eps. An empty list certifies the perturbation's
// vanishing tail at scale (R, eps).
std::vector<ResidualViolation> decomposition_residual(const CylinderFunction& f,
                                                      const FiniteSupportFunction& phi,
                                                      const CylinderMeasure& nu,
                                                      std::size_t radius,
                                                      const Rational& eps);

// The candidate retraction through x0: gamma -> gamma.x0 on the group, the
// identity on the boundary.
BoundaryPoint retraction_eval(const BoundaryPoint& x0, const ReducedWord& gamma);
inline const BoundaryPoint& retraction_eval(const BoundaryPoint& /*x0*/,
                                            const BoundaryPoint& y) {
  return y;
}

// The measure-valued analogue: gamma -> gamma.nu on the group, x -> dirac(x)
// on the boundary.
CylinderMeasure quasi_retraction_eval(const CylinderMeasure& nu, const ReducedWord& gamma);
inline CylinderMeasure quasi_retraction_eval(const CylinderMeasure& /*nu*/,
                                             const BoundaryPoint& y) {
  return CylinderMeasure::dirac(y);
}

}  // namespace compactlab
