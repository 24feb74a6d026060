#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>

#include "compactlab/boundary.hpp"
#include "compactlab/rational.hpp"
#include "compactlab/words.hpp"

namespace compactlab {

// The clopen set of boundary points whose infinite word starts with `base`;
// the empty base is the whole boundary.
struct Cylinder {
  ReducedWord base;
};

// A Kolmogorov-consistent probability mass function on boundary cylinders,
// with exact rational values. Left translates are carried symbolically, so
// g.nu is again a CylinderMeasure and mass queries stay exact.
class CylinderMeasure {
 public:
  // mass([w]) = 1/(2r) * (1/(2r-1))^(|w|-1); the full-support Markov measure.
  static CylinderMeasure uniform(int rank);
  static CylinderMeasure dirac(const BoundaryPoint& x);
  // Masses at one fixed depth; missing words carry mass zero. Validated for
  // nonnegativity and normalization. Queries deeper than `depth` throw.
  static CylinderMeasure table(int rank, std::size_t depth,
                               std::map<ReducedWord, Rational> masses);

  int rank() const { return rank_; }
  Rational mass(const Cylinder& c) const;
  // The pushforward g.nu with (g.nu)(E) = nu(g^-1 E).
  CylinderMeasure translated(const ReducedWord& g) const;

  bool is_dirac() const;
  std::string description() const;

 private:
  struct Uniform {};
  struct Dirac {
    BoundaryPoint x;
  };
  struct Table {
    std::size_t depth;
    std::map<ReducedWord, Rational> masses;
  };
  using Base = std::variant<Uniform, Dirac, Table>;

  CylinderMeasure(Base base, ReducedWord act, int rank)
      : rank_(rank), base_(std::move(base)), act_(std::move(act)) {}

  Rational base_mass(const ReducedWord& w) const;
  int rank_;
  Base base_;
  ReducedWord act_;  // identity for untranslated measures
  friend Rational pushforward_mass(const ReducedWord&, const CylinderMeasure&,
                                   const Cylinder&);
};

// nu(g^-1 [base]), evaluated by an exact stratification over the cancellation
// depth of boundary points against g^-1 (finitely many cylinder masses).
Rational pushforward_mass(const ReducedWord& g, const CylinderMeasure& nu,
                          const Cylinder& c);

// 1 - mu([prefix(x, depth)]): the resolution-`depth` gap to the Dirac at x.
Rational dirac_gap(const CylinderMeasure& mu, const BoundaryPoint& x, std::size_t depth);

// A locally constant function on the boundary: one rational value per reduced
// word of the fixed depth (words absent from the table take the fill value).
class CylinderFunction {
 public:
  static CylinderFunction constant(int rank, const Rational& value);
  static CylinderFunction indicator(const Cylinder& c);
  static CylinderFunction from_values(int rank, std::size_t depth,
                                      std::map<ReducedWord, Rational> values,
                                      const Rational& fill = Rational(0));

  int rank() const { return rank_; }
  std::size_t depth() const { return depth_; }
  // Value on the cylinder of u; requires |u| >= depth.
  Rational value(const ReducedWord& u) const;
  Rational sup_norm() const;
  CylinderFunction lifted(std::size_t depth) const;
  // (g.f)(x) = f(g x), locally constant at depth |g| + depth.
  CylinderFunction translated(const ReducedWord& g) const;
  std::string description() const;

  friend CylinderFunction operator*(const CylinderFunction& f, const CylinderFunction& g);
  friend CylinderFunction operator-(const CylinderFunction& f, const CylinderFunction& g);

 private:
  CylinderFunction(int rank, std::size_t depth, std::map<ReducedWord, Rational> values,
                   Rational fill)
      : rank_(rank), depth_(depth), values_(std::move(values)), fill_(std::move(fill)) {}
  int rank_;
  std::size_t depth_;
  std::map<ReducedWord, Rational> values_;
  Rational fill_;
};

// P_nu f (g) = integral of f against g.nu; unital, positive, equivariant.
Rational poisson_eval(const CylinderFunction& f, const CylinderMeasure& nu,
                      const ReducedWord& g);

}  // namespace compactlab
