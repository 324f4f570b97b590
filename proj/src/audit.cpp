#include "sdg/audit.hpp"

#include "sdg/splitmix64.hpp"

#include <sstream>

namespace sdg {

AuditResult audit_theorem_3_1(int mediate_trials, std::uint64_t seed, int coeff_range) {
  AuditResult a;
  auto injections = build_injections();

  a.injections_well_defined = true;
  for (const auto& inj : injections) {
    if (auto d = inj.map.defect()) {
      a.injections_well_defined = false;
      a.injection_defects.push_back("f_" + inj.word + ": " + d->describe());
    }
  }

  a.edges = verify_edges(injections);
  a.all_edges_hold = true;
  for (const auto& e : a.edges)
    if (!e.holds) a.all_edges_hold = false;

  ColimitSolver solver(universal_diagram());
  a.report = solver.report();

  // the candidate kernel element named by the hand analysis
  {
    SmallObject P = build_P();
    WeilPoly cand = WeilPoly::term(P, Monomial::of({3, 5}), 1);
    cand.add_term(Monomial::var(12), -1);
    cand.add_term(Monomial::var(13), -1);
    cand.add_term(Monomial::var(15), -1);
    a.candidate_kernel_element = cand.str();
    a.candidate_kernel_element_vanishes = true;
    for (const auto& inj : injections)
      if (!inj.map.pullback(cand).is_zero()) a.candidate_kernel_element_vanishes = false;
  }

  // mediator existence on seeded random compatible families, round-tripped
  SplitMix64 rng(seed);
  const auto& red = solver.constraint_reduction();
  a.mediate_trials = mediate_trials;
  for (int t = 0; t < mediate_trials; ++t) {
    std::vector<Rational> free_vals;
    for (std::size_t k = 0; k < red.free_cols().size(); ++k)
      free_vals.push_back(rat(rng.next_int(-coeff_range, coeff_range)));
    std::vector<WeilPoly> family = solver.unstack_family(red.complete_from_free(free_vals));
    ColimitSolver::MediateError err{};
    auto theta = solver.try_mediate(family, err);
    if (!theta || solver.pullback_family(*theta) != family) ++a.mediate_failures;
  }

  a.notes.push_back(
      "label expansion: the constraint line of the big object prints the lower bound "
      "of the first degree-3 family's index as 1; read as 11, since a lower bound of 1 "
      "would forbid pairs inside {1,..,4} and contradict every displayed injection.");
  a.notes.push_back(
      "running text vs tables: the duplicated position labels in the 4123 formula "
      "resolve to a blank column 8, as in the displayed degree-2 table.");
  a.notes.push_back(
      "displayed strong differences: a few displays omit shared degree-2 entries "
      "that the mediator equations force (d1d2 at position 5 in the fourth and "
      "fifth step-one objects, d1d2 at position 7 in the (4,1)-subscripted one); "
      "the replay carries the certified entries, which die at the next nesting "
      "level, so every displayed end vector is unaffected.");
  if (a.report.kernel_dim > 0)
    a.notes.push_back(
        "uniqueness finding: the pullback operator has kernel dimension " +
        std::to_string(a.report.kernel_dim) +
        ", so the cone is not a quasi-colimit in the strict sense; existence "
        "(the rank condition) holds, which is what the mediating-element corollary uses.");
  else
    a.notes.push_back("uniqueness finding: kernel is trivial; the quasi-colimit claim "
                      "holds in full.");
  return a;
}

std::string render_audit_markdown(const AuditResult& a) {
  std::ostringstream os;
  os << "# Universal-cone audit\n\n";
  os << "## Injections\n\n";
  os << "- all 24 maps well defined: " << (a.injections_well_defined ? "yes" : "NO") << "\n";
  for (const auto& d : a.injection_defects) os << "  - " << d << "\n";
  os << "\n## Edges\n\n";
  int held = 0;
  for (const auto& e : a.edges) held += e.holds ? 1 : 0;
  os << "- " << held << "/" << a.edges.size() << " edge equalities hold\n";
  for (const auto& e : a.edges)
    if (!e.holds)
      os << "  - R_" << e.edge.pair << "^{" << e.edge.u << "," << e.edge.v
         << "} FAILS: " << e.witness << "\n";
  os << "\n## Dimensions\n\n";
  os << "- apex algebra dimension: " << a.report.apex_dim << "\n";
  os << "- compatible-family dimension: " << a.report.compat_dim << "\n";
  os << "- pullback rank: " << a.report.rank << "\n";
  os << "- kernel dimension: " << a.report.kernel_dim << "\n";
  os << "- existence (image = compatible subspace): "
     << (a.report.exists_for_all ? "yes" : "NO") << "\n";
  os << "- uniqueness (trivial kernel): " << (a.report.unique ? "yes" : "NO") << "\n";
  os << "\n## Candidate kernel element\n\n";
  os << "- " << a.candidate_kernel_element << " pulls back to zero on all 24 legs: "
     << (a.candidate_kernel_element_vanishes ? "yes" : "NO") << "\n";
  os << "\n## Mediator round-trips\n\n";
  os << "- " << (a.mediate_trials - a.mediate_failures) << "/" << a.mediate_trials
     << " random compatible families mediated and round-tripped exactly\n";
  os << "\n## Notes\n\n";
  for (const auto& n : a.notes) os << "- " << n << "\n";
  return os.str();
}

}  // namespace sdg
