#include "compactlab/finite_systems.hpp"

#include <algorithm>
#include <set>

namespace compactlab {

namespace {

std::vector<std::vector<int>> close_under_composition(
    std::vector<std::vector<int>> seed, std::size_t points) {
  std::set<std::vector<int>> closure(seed.begin(), seed.end());
  closure.insert(identity_permutation(points));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<int>> snapshot(closure.begin(), closure.end());
    for (const auto& p : snapshot) {
      for (const auto& q : snapshot) {
        if (closure.insert(compose_permutations(p, q)).second) grew = true;
      }
      if (closure.insert(invert_permutation(p)).second) grew = true;
    }
  }
  return {closure.begin(), closure.end()};
}

}  // namespace

DeclaredSystem::DeclaredSystem(std::string name, std::vector<std::string> points,
                               std::vector<DeclaredClass> classes,
                               std::vector<std::vector<int>> group_generators)
    : name_(std::move(name)), points_(std::move(points)), classes_(std::move(classes)) {
  if (points_.empty()) throw Error("declared system needs at least one point");
  std::vector<std::vector<int>> images = std::move(group_generators);
  for (const auto& image : images) {
    if (image.size() != points_.size() || !is_permutation(image))
      throw Error("group generator image is not a bijection of the points");
  }
  for (const auto& cls : classes_) {
    if (cls.image.size() != points_.size() || !is_permutation(cls.image))
      throw Error("class '" + cls.name + "' image is not a bijection of the points");
    if (cls.declared_limit < 0 ||
        static_cast<std::size_t>(cls.declared_limit) >= points_.size())
      throw Error("class '" + cls.name + "' declares an unknown limit");
    images.push_back(cls.image);
  }
  factored_ = close_under_composition(std::move(images), points_.size());
}

DeclaredSystem DeclaredSystem::z_two_point() {
  const std::vector<int> id{0, 1};
  const std::vector<int> swap{1, 0};
  return DeclaredSystem("z-two-point", {"a", "b"},
                        {
                            DeclaredClass{"2n", id, 0},
                            DeclaredClass{"-2n", id, 1},
                            DeclaredClass{"2n+1", swap, 1},
                            DeclaredClass{"-(2n+1)", swap, 0},
                        });
}

DeclaredSystem DeclaredSystem::dihedral_two_point() {
  const std::vector<int> id{0, 1};
  const std::vector<int> swap{1, 0};
  // rho acts trivially, sigma swaps; the factored group needs sigma's image
  // even though the declared classes only use powers of rho.
  return DeclaredSystem("dihedral-two-point", {"a", "b"},
                        {
                            DeclaredClass{"rho^n", id, 0},
                            DeclaredClass{"rho^-n", id, 1},
                        },
                        {swap});
}

FiniteAuditReport finite_audit(const DeclaredSystem& system) {
  FiniteAuditReport report;
  report.system = system.name();
  report.point_orbital = false;
  for (std::size_t x0 = 0; x0 < system.points().size(); ++x0) {
    CandidateAudit audit;
    audit.candidate = system.points()[x0];
    audit.point_orbital = true;
    for (const auto& cls : system.classes()) {
      const int orbit = cls.image[x0];
      if (orbit != cls.declared_limit) {
        audit.point_orbital = false;
        audit.witness_class = cls.name;
        audit.declared_limit = system.points()[static_cast<std::size_t>(cls.declared_limit)];
        audit.orbit_limit = system.points()[static_cast<std::size_t>(orbit)];
        break;
      }
    }
    report.point_orbital = report.point_orbital || audit.point_orbital;
    report.candidates.push_back(std::move(audit));
  }
  // On a finite boundary a sequence of measures converges only if eventually
  // constant, and permutation images of a non-Dirac measure stay non-Dirac;
  // hence orbital and point-orbital verdicts coincide here.
  report.orbital = report.point_orbital;
  report.orbital_reduction_note =
      "finite boundary: non-Dirac measures have non-Dirac orbits, so orbital "
      "convergence to Dirac limits forces a Dirac (point) measure";
  return report;
}

bool finite_orbital_reduction_holds(const DeclaredSystem& system, int max_denominator) {
  const std::size_t n = system.points().size();
  // Enumerate rational probability vectors with a common denominator <= D.
  for (int den = 1; den <= max_denominator; ++den) {
    std::vector<int> numerators(n, 0);
    auto is_dirac = [&] {
      return std::any_of(numerators.begin(), numerators.end(),
                         [&](int v) { return v == den; });
    };
    auto rec = [&](auto&& self, std::size_t slot, int remaining) -> bool {
      if (slot + 1 == n) {
        numerators[slot] = remaining;
        if (!is_dirac()) {
          // Every factored image must remain non-Dirac.
          for (const auto& perm : system.factored_group()) {
            std::vector<int> moved(n);
            for (std::size_t i = 0; i < n; ++i)
              moved[static_cast<std::size_t>(perm[i])] = numerators[i];
            if (std::any_of(moved.begin(), moved.end(),
                            [&](int v) { return v == den; }))
              return false;
          }
        }
        return true;
      }
      for (int v = 0; v <= remaining; ++v) {
        numerators[slot] = v;
        if (!self(self, slot + 1, remaining - v)) return false;
      }
      return true;
    };
    if (!rec(rec, 0, den)) return false;
  }
  return true;
}

std::optional<FiniteProbeDisagreement> finite_projectivity_disagreement(
    const DeclaredSystem& system, int x0) {
  auto render = [&](const std::vector<int>& perm) {
    std::string out;
    for (std::size_t i = 0; i < perm.size(); ++i) {
      if (i) out += ",";
      out += system.points()[i] + "->" + system.points()[static_cast<std::size_t>(perm[i])];
    }
    return out;
  };
  for (const auto& cls : system.classes()) {
    for (const auto& g : system.factored_group()) {
      const int base_limit = cls.image[static_cast<std::size_t>(x0)];
      const int translated_limit =
          cls.image[static_cast<std::size_t>(g[static_cast<std::size_t>(x0)])];
      if (base_limit != translated_limit) {
        FiniteProbeDisagreement d;
        d.cls = cls.name;
        d.translate = render(g);
        d.base_limit = system.points()[static_cast<std::size_t>(base_limit)];
        d.translated_limit = system.points()[static_cast<std::size_t>(translated_limit)];
        return d;
      }
    }
  }
  return std::nullopt;
}

}  // namespace compactlab
