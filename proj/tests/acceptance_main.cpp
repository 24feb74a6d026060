// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Expected values are frozen from independent oracles (brute-force
// cylinder enumeration, stack-simulation reduction) computed in test_support.

#include <chrono>
#include <iostream>
#include <vector>

#include "compactlab/criteria.hpp"
#include "compactlab/finite_systems.hpp"
#include "compactlab/witnesses.hpp"
#include "test_support.hpp"

using namespace compactlab;

namespace {

int failures = 0;
std::vector<std::string> notes;

void note(const std::string& text) { notes.push_back(text); }

template <typename Fn>
void criterion(const std::string& name, Fn&& body) {
  notes.clear();
  const auto start = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = body();
  } catch (const std::exception& e) {
    note(std::string("exception: ") + e.what());
  }
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  std::cout << (ok ? "PASS" : "FAIL") << " " << name << " (" << elapsed << " ms)\n";
  for (const std::string& n : notes) std::cout << "       " << n << "\n";
  if (!ok) ++failures;
}

ReducedWord w(const char* text) { return ReducedWord::parse(text, 2); }
BoundaryPoint pt(const char* text) { return BoundaryPoint::parse(text, 2); }

// 1. The worked prefix-inverse values w_1..w_4.
bool criterion_paper_witness_values() {
  const BoundaryPoint x0 = pt("aaBAAAbbbbbab(aaaaaaab)");
  const std::vector<std::string> expected{"1", "bAA", "BBBBBaaabAA", "BABBBBBaaabAA"};
  for (int n = 1; n <= 4; ++n) {
    const std::string got = prefix_inverse_sequence(x0, n).str();
    if (got != expected[static_cast<std::size_t>(n - 1)]) {
      note("w_" + std::to_string(n) + " = " + got + ", expected " +
           expected[static_cast<std::size_t>(n - 1)]);
      return false;
    }
  }
  return true;
}

// 2. 200 random points: the witness replays to a refutation with disjoint
// separation families.
bool criterion_witness_refutations() {
  testsupport::Gen gen(0xACCE9701);
  int checked = 0;
  for (int i = 0; i < 200; ++i) {
    const BoundaryPoint x0 = gen.point(6, 6);
    const WitnessCertificate cert = gromov_witness(x0);
    const bool replay_ok = !cert.replay_point_orbital.supported() &&
                           cert.replay_gromov.supported() && cert.verified &&
                           verify_certificate(cert);
    bool families_ok = true;
    if (cert.case_tag == WitnessCertificate::Case::InfinitelyManyBlocks) {
      for (const std::string& g : cert.group_side_family) {
        for (const std::string& o : cert.orbit_side_family) {
          families_ok = families_ok && g != o;
        }
      }
      families_ok = families_ok && !cert.group_side_family.empty() &&
                    !cert.orbit_side_family.empty();
    }
    if (!replay_ok || !families_ok) {
      note("failure at x0 = " + x0.str());
      return false;
    }
    ++checked;
  }
  note("200/"
       "200 certificates replayed to refutations with disjoint families");
  return checked == 200;
}

// 3. Tree and measure-orbit verdicts agree on 100 seeded specs; the power-ray
// gaps match the enumeration-backed closed form exactly.
bool criterion_orbital_agreement() {
  testsupport::Gen gen(0xACCE9702);
  const CylinderMeasure nu = CylinderMeasure::uniform(2);
  std::vector<std::pair<SequenceSpec, BoundaryPoint>> specs;
  for (int i = 0; i < 100; ++i) {
    const BoundaryPoint x = gen.point(4, 4);
    if (i % 2 == 0) {
      specs.emplace_back(SequenceSpec::prefixes(x), x);
    } else {
      specs.emplace_back(SequenceSpec::prefixes(x).right_translated(gen.nonempty_word(4)),
                         x);
    }
  }
  const AgreementReport report = orbital_agreement_experiment(nu, specs, 6, 60);
  if (report.agreements != specs.size()) {
    note("only " + std::to_string(report.agreements) + "/100 verdicts agree");
    return false;
  }

  ReducedWord power(2);
  Rational expected = rat(1, 4);
  for (int n = 1; n <= 12; ++n) {
    power = multiply(power, w("a"));
    const Rational gap = dirac_gap(nu.translated(power), pt("(a)"), 1);
    if (gap != expected) {
      note("gap at n = " + std::to_string(n) + " is " + format_rational(gap));
      return false;
    }
    // Independent route: brute-force cylinder enumeration of nu(g^-1 [a]).
    if (n <= 10) {
      const Rational enumerated = Rational(1) - testsupport::enumerated_pushforward_mass(
                                                    power, nu, Cylinder{w("a")});
      if (gap != enumerated) {
        note("enumeration disagrees at n = " + std::to_string(n));
        return false;
      }
    }
    expected /= 3;
  }
  note("100/100 agreements; power-ray gaps exact for n = 1..12 (enumerated to 10)");
  return true;
}

// 4. Geodesic Gromov products vanish: 20 random rays, 1225 products each.
bool criterion_geodesic_products() {
  testsupport::Gen gen(0xACCE9703);
  for (int i = 0; i < 20; ++i) {
    const BoundaryPoint x0 = gen.point(6, 6);
    const GeodesicProductReport report = geodesic_product_check(x0, 50);
    if (!report.all_zero() || report.products_checked != 1225) {
      note("violation for x0 = " + x0.str());
      return false;
    }
  }
  return true;
}

// 5. Exact algebraic criteria: contractivity deficit and multiplicativity
// defect closed forms.
bool criterion_algebraic() {
  const CylinderMeasure nu = CylinderMeasure::uniform(2);
  const CylinderFunction ind_a = CylinderFunction::indicator(Cylinder{w("a")});
  Rational expected = rat(1, 4);
  for (std::size_t radius = 1; radius <= 8; ++radius) {
    const Rational deficit = contractivity_deficit(nu, ind_a, radius);
    if (deficit != expected) {
      note("deficit at R = " + std::to_string(radius) + " is " +
           format_rational(deficit) + ", expected " + format_rational(expected));
      return false;
    }
    expected /= 3;
  }
  ReducedWord power(2);
  Rational gap = rat(1, 4);
  for (int n = 1; n <= 12; ++n) {
    power = multiply(power, w("a"));
    const Rational p = Rational(1) - gap;
    const Rational defect = multiplicativity_defect(nu, ind_a, ind_a, power);
    if (defect != p - p * p) {
      note("defect at n = " + std::to_string(n) + " is " + format_rational(defect));
      return false;
    }
    gap /= 3;
  }
  return true;
}

// 6. Finite audits: both built-in systems fail point-orbitality with the
// declared contradiction classes, exhaustively over candidates.
bool criterion_finite_audits() {
  const FiniteAuditReport z2 = finite_audit(DeclaredSystem::z_two_point());
  bool ok = !z2.point_orbital && !z2.orbital && z2.candidates.size() == 2;
  for (const CandidateAudit& c : z2.candidates) ok = ok && !c.point_orbital;
  ok = ok && z2.candidates[0].candidate == "a" && z2.candidates[0].witness_class == "-2n" &&
       z2.candidates[0].declared_limit == "b" && z2.candidates[0].orbit_limit == "a";
  if (!ok) {
    note("z-two-point audit mismatch");
    return false;
  }
  const FiniteAuditReport dihedral = finite_audit(DeclaredSystem::dihedral_two_point());
  ok = !dihedral.point_orbital && dihedral.candidates.size() == 2 &&
       !dihedral.candidates[0].point_orbital &&
       dihedral.candidates[0].witness_class == "rho^-n" &&
       dihedral.candidates[0].orbit_limit == "a" &&
       dihedral.candidates[1].witness_class == "rho^n";
  if (!ok) {
    note("dihedral audit mismatch");
    return false;
  }
  return finite_orbital_reduction_holds(DeclaredSystem::z_two_point(), 12) &&
         finite_orbital_reduction_holds(DeclaredSystem::dihedral_two_point(), 12);
}

// 7. Lamplighter point-orbitality: the forgetting retraction equals the orbit
// map through the zero configuration, equivariantly.
bool criterion_lamplighter() {
  std::mt19937_64 rng(0xACCE9704);
  std::uniform_int_distribution<long long> position(-25, 25);
  std::uniform_int_distribution<int> count(0, 6);
  std::uniform_int_distribution<long long> lamp(-12, 12);
  auto random_element = [&]() {
    LamplighterElement g;
    g.position = position(rng);
    for (int i = count(rng); i > 0; --i) g.lamps.insert(lamp(rng));
    return g;
  };
  const LampConfig zero = LampConfig::finitely_supported({});
  for (int i = 0; i < 1000; ++i) {
    const LamplighterElement g = random_element();
    if (lamplighter_act(g, zero).support() != g.lamps) {
      note("orbit map mismatch");
      return false;
    }
  }
  for (int i = 0; i < 1000; ++i) {
    const LamplighterElement g = random_element();
    const LamplighterElement h = random_element();
    // phi(g h) = g . phi(h) with phi the lamp-forgetting retraction.
    const std::set<long long> lhs = lamplighter_multiply(g, h).lamps;
    const LampConfig rhs = lamplighter_act(g, LampConfig::finitely_supported(h.lamps));
    if (lhs != rhs.support()) {
      note("equivariance mismatch");
      return false;
    }
  }
  return true;
}

// 8. Module invariants under a seed-fixed property runner.
bool criterion_invariant_suites() {
  testsupport::Gen gen(0xACCE9705);
  const CylinderMeasure nu = CylinderMeasure::uniform(2);

  // Word algebra.
  for (int i = 0; i < 400; ++i) {
    const auto letters = gen.letter_sequence(12);
    const ReducedWord reduced = ReducedWord::reduce(letters, 2);
    if (reduced.letters() != testsupport::scan_reduce(letters)) {
      note("reduction disagrees with the scan oracle");
      return false;
    }
    if (ReducedWord::reduce(reduced.letters(), 2) != reduced) {
      note("reduction is not idempotent");
      return false;
    }
    const ReducedWord g = gen.word(8);
    const ReducedWord h = gen.word(8);
    const ReducedWord k = gen.word(8);
    if (multiply(multiply(g, h), k) != multiply(g, multiply(h, k))) {
      note("associativity failure");
      return false;
    }
    const std::size_t len = multiply(g, h).length();
    if (len > g.length() + h.length() || (len % 2) != ((g.length() + h.length()) % 2)) {
      note("length window failure");
      return false;
    }
    if (gromov_product(g, h) != common_prefix_length(g, h)) {
      note("gromov product is not the common prefix length");
      return false;
    }
    if (gromov_product(g, k) <
        std::min(gromov_product(g, h), gromov_product(h, k))) {
      note("0-hyperbolicity failure");
      return false;
    }
  }

  // Boundary action vs truncation, and group law on 1000 triples.
  for (int i = 0; i < 1000; ++i) {
    const ReducedWord g = gen.word(5);
    const ReducedWord h = gen.word(5);
    const BoundaryPoint x = gen.point(4, 4);
    if (x.acted_by(multiply(g, h)) != x.acted_by(h).acted_by(g)) {
      note("boundary action breaks the group law");
      return false;
    }
    const std::size_t d = 4;
    if (x.acted_by(g).prefix_word(d) != multiply(g, x.prefix_word(d + g.length())).prefix(d)) {
      note("action truncation identity failure");
      return false;
    }
  }

  // Measure consistency, pushforward cocycle and total mass.
  for (int i = 0; i < 80; ++i) {
    const ReducedWord g = gen.word(4);
    const ReducedWord h = gen.word(4);
    const ReducedWord base = gen.word(4);
    const CylinderMeasure via_product = nu.translated(multiply(g, h));
    const CylinderMeasure via_steps = nu.translated(h).translated(g);
    if (via_product.mass(Cylinder{base}) != via_steps.mass(Cylinder{base})) {
      note("pushforward cocycle failure");
      return false;
    }
    Rational split(0);
    for (const ReducedWord& u : reduced_words_of_length(2, base.length() + 1)) {
      if (common_prefix_length(u, base) == base.length())
        split += nu.translated(g).mass(Cylinder{u});
    }
    if (split != nu.translated(g).mass(Cylinder{base})) {
      note("consistency failure");
      return false;
    }
  }

  // Poisson transform: unital, positive, contractive, equivariant.
  const CylinderFunction one = CylinderFunction::constant(2, Rational(1));
  for (int i = 0; i < 40; ++i) {
    const ReducedWord gamma = gen.word(5);
    const ReducedWord g = gen.word(3);
    const ReducedWord base = gen.nonempty_word(2);
    const CylinderFunction f = CylinderFunction::indicator(Cylinder{base});
    if (poisson_eval(one, nu, gamma) != Rational(1)) {
      note("poisson transform is not unital");
      return false;
    }
    const Rational value = poisson_eval(f, nu, gamma);
    if (value < Rational(0) || value > Rational(1)) {
      note("poisson positivity/contraction failure");
      return false;
    }
    if (poisson_eval(f.translated(g), nu, gamma) !=
        poisson_eval(f, nu, multiply(g, gamma))) {
      note("poisson equivariance failure");
      return false;
    }
  }

  // Verdict soundness: every refutation re-evaluates to a genuine violation.
  for (int i = 0; i < 50; ++i) {
    const BoundaryPoint target = gen.point(3, 3);
    const SequenceSpec spec = SequenceSpec::powers(gen.nonempty_word(4));
    const BoundaryPoint x0 = gen.point(3, 3);
    for (const TopologyOracle& oracle :
         {TopologyOracle::gromov(2), TopologyOracle::orbital(nu),
          TopologyOracle::point_orbital(x0)}) {
      const ConvergenceVerdict verdict = oracle_decide(oracle, spec, target, 3, 20);
      if (verdict.supported()) continue;
      const ReducedWord witness = spec.element(verdict.witness_index);
      bool genuine = false;
      if (oracle.measure()) {
        genuine = !orbital_criterion_holds(dirac_gap(nu.translated(witness), target, 3));
      } else if (oracle.base_point()) {
        genuine = oracle.base_point()->acted_by(witness).prefix_word(3) !=
                  target.prefix_word(3);
      } else {
        genuine = common_prefix_length(witness, target) < 3;
      }
      if (!genuine) {
        note("refutation certificate does not re-evaluate");
        return false;
      }
    }
  }
  return true;
}

}  // namespace

int main() {
  criterion("criterion-1 paper-witness-values", criterion_paper_witness_values);
  criterion("criterion-2 gromov-non-point-orbitality", criterion_witness_refutations);
  criterion("criterion-3 orbital-agreement", criterion_orbital_agreement);
  criterion("criterion-4 geodesic-product-identity", criterion_geodesic_products);
  criterion("criterion-5 algebraic-criteria", criterion_algebraic);
  criterion("criterion-6 finite-audits", criterion_finite_audits);
  criterion("criterion-7 lamplighter-point-orbitality", criterion_lamplighter);
  criterion("criterion-8 invariant-suites", criterion_invariant_suites);
  if (failures != 0) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all acceptance criteria passed\n";
  return 0;
}
