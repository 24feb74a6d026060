#include "compactlab/criteria.hpp"

namespace compactlab {

Rational contractivity_deficit(const CylinderMeasure& nu, const CylinderFunction& f,
                               std::size_t radius) {
  Rational best(0);
  for (const ReducedWord& gamma : ball(f.rank(), radius)) {
    best = std::max(best, Rational(abs(poisson_eval(f, nu, gamma))));
  }
  Rational deficit = f.sup_norm() - best;
  deficit.canonicalize();
  return deficit;
}

Rational multiplicativity_defect(const CylinderMeasure& nu, const CylinderFunction& f,
                                 const CylinderFunction& g, const ReducedWord& gamma) {
  const Rational product_side = poisson_eval(f * g, nu, gamma);
  const Rational split_side = poisson_eval(f, nu, gamma) * poisson_eval(g, nu, gamma);
  Rational defect = abs(product_side - split_side);
  defect.canonicalize();
  return defect;
}

std::vector<ResidualViolation> decomposition_residual(const CylinderFunction& f,
                                                      const FiniteSupportFunction& phi,
                                                      const CylinderMeasure& nu,
                                                      std::size_t radius,
                                                      const Rational& eps) {
  std::vector<ResidualViolation> violations;
  for (const ReducedWord& gamma : ball(f.rank(), radius)) {
    if (2 * gamma.length() < radius) continue;  // annulus R/2 <= |gamma| <= R
    const Rational base = poisson_eval(f, nu, gamma);
    auto it = phi.find(gamma);
    const Rational perturbed = it == phi.end() ? base : Rational(base + it->second);
    Rational deviation = abs(perturbed - base);
    deviation.canonicalize();
    if (deviation > eps) violations.push_back(ResidualViolation{gamma, deviation});
  }
  return violations;
}

BoundaryPoint retraction_eval(const BoundaryPoint& x0, const ReducedWord& gamma) {
  return x0.acted_by(gamma);
}

CylinderMeasure quasi_retraction_eval(const CylinderMeasure& nu, const ReducedWord& gamma) {
  return nu.translated(gamma);
}

}  // namespace compactlab
