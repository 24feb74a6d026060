#pragma once

#include <optional>
#include <string>
#include <vector>

#include "compactlab/example_groups.hpp"

namespace compactlab {

// A compactification of a group over a finite boundary, declared by cases: a
// rule table mapping sequence classes to limits. Each class consists of
// unbounded group sequences that all act through one element of the factored
// (finite) action group, so orbit limits are decidable exactly.
struct DeclaredClass {
  std::string name;        // e.g. "2n", "-2n", "rho^-n"
  std::vector<int> image;  // the common permutation image of the class
  int declared_limit;      // boundary point index the class converges to
};

class DeclaredSystem {
 public:
  // group_generators: images of the acting group's generators on the points;
  // the factored group is their closure together with the class images. When
  // empty, the class images alone generate it.
  DeclaredSystem(std::string name, std::vector<std::string> points,
                 std::vector<DeclaredClass> classes,
                 std::vector<std::vector<int>> group_generators = {});

  // Z acting on {a, b} by parity; evens to a / b and odds to b / a by sign.
  static DeclaredSystem z_two_point();
  // Infinite dihedral on {a, b}: rho^n to a, rho^-n to b.
  static DeclaredSystem dihedral_two_point();

  const std::string& name() const { return name_; }
  const std::vector<std::string>& points() const { return points_; }
  const std::vector<DeclaredClass>& classes() const { return classes_; }
  // Closure of the class images under composition.
  const std::vector<std::vector<int>>& factored_group() const { return factored_; }

 private:
  std::string name_;
  std::vector<std::string> points_;
  std::vector<DeclaredClass> classes_;
  std::vector<std::vector<int>> factored_;
};

struct CandidateAudit {
  std::string candidate;           // base point x0 under test
  bool point_orbital;              // no class contradicts tau = tau_{x0}
  std::string witness_class;       // first contradicting class, when any
  std::string declared_limit;      // its declared limit
  std::string orbit_limit;         // lim gamma_n.x0 for that class
};

struct FiniteAuditReport {
  std::string system;
  bool point_orbital;  // some candidate passes every class
  bool orbital;        // equal to point_orbital on finite boundaries
  std::string orbital_reduction_note;
  std::vector<CandidateAudit> candidates;
};

// Tests every candidate base point against every declared class.
FiniteAuditReport finite_audit(const DeclaredSystem& system);

// On a finite boundary, a non-Dirac measure has a finite orbit of non-Dirac
// measures, so no pushforward sequence reaches a Dirac limit: the orbital and
// point-orbital verdicts coincide. Checked by brute force over rational
// probability vectors with denominators <= max_denominator.
bool finite_orbital_reduction_holds(const DeclaredSystem& system, int max_denominator);

struct FiniteProbeDisagreement {
  std::string cls;        // sequence class probed
  std::string translate;  // factored element used for the right translation
  std::string base_limit;
  std::string translated_limit;
};

// Exhaustive projectivity probe for tau_{x0} over the factored group: for
// every class (image u) and every factored g, the orbit limits u.x0 and
// (u g).x0 must agree for right translation to preserve limits.
std::optional<FiniteProbeDisagreement> finite_projectivity_disagreement(
    const DeclaredSystem& system, int x0);

}  // namespace compactlab
