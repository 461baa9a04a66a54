#pragma once

#include <string>
#include <vector>

#include "homtwist/constructions.hpp"
#include "homtwist/structures.hpp"

namespace homtwist {
namespace catalog {

/// Finite group given by its multiplication table; the source of group
/// bialgebras and gradings.
struct GroupTable {
  int order;
  std::vector<std::vector<int>> product;  // product[a][b] = index of a*b
  int identity_index;

  static GroupTable trivial();
  static GroupTable cyclic(int n);

  /// Exhaustively verifies the group axioms. Throws NotAGroup.
  void validate() const;
};

/// F[G] with basis G, multiplication from the table, group-like
/// comultiplication Delta(b) = b (x) b, identity twisting map, and the group
/// identity as unit vector.
HomBialgebra group_bialgebra(const GroupTable& g);

/// One term of a graded comultiplication: x_{g,t} gets coeff * x_{h,i} (x) x_{k,j}.
struct GradedTerm {
  int h;
  int i;
  int k;
  int j;
  Rational coeff;
};

/// A coalgebra graded by a finite group, presented componentwise. Basis
/// vectors are indexed (g, t) with t < component_dims[g]; every
/// comultiplication term must satisfy h*k = g.
struct GradedCoalgebraSpec {
  GroupTable group;
  std::vector<int> component_dims;
  // comultiplication[g][t] lists the terms of Delta(x_{g,t})
  std::vector<std::vector<std::vector<GradedTerm>>> comultiplication;

  /// One-dimensional components with Delta(x_g) = sum_{hk=g} x_h (x) x_k.
  static GradedCoalgebraSpec convolution(const GroupTable& g);

  int total_dim() const;
  int basis_index(int g, int t) const;
};

/// Assembles the classical bundle: host F[G], the graded coalgebra, and the
/// coaction delta(x) = deg(x) (x) x. Throws GradingViolation when a term
/// breaks the grading or the assembled comultiplication is not coassociative.
Bundle graded_coalgebra_bundle(const GradedCoalgebraSpec& spec);

/// Comatrix coalgebra on an n x n matrix basis: Delta(e_ij) = sum_k e_ik (x) e_kj,
/// identity twisting map. Dimension n^2.
HomCoalgebra comatrix_coalgebra(int n);

/// Bundle with coaction delta(c) = unit (x) c. Requires h to carry a unit
/// vector that is idempotent and group-like (throws NoUnit otherwise).
Bundle trivial_coaction_bundle(const HomCoalgebra& c, const HomBialgebra& h);

/// All coalgebra endomorphisms of c with integer entries in
/// [-entry_range, entry_range], ordered lexicographically by row-major
/// entries. Throws SearchSpaceTooLarge past the enumeration guard.
std::vector<LinearMap> coalgebra_endomorphism_search(const HomCoalgebra& c, int entry_range);

/// Same for bialgebra endomorphisms of h.
std::vector<LinearMap> bialgebra_endomorphism_search(const HomBialgebra& h, int entry_range);

/// Every (alpha_h, alpha_c) with entries in [-entry_range, entry_range]
/// satisfying all deformation hypotheses against the given classical bundle,
/// ordered lexicographically by (alpha_h, alpha_c) entries.
std::vector<DeformationInput> endomorphism_search(const Bundle& bundle, int entry_range);

// Fixed structure sets used by the test suites.

std::vector<HomBialgebra> group_bialgebras();  // trivial, Z/2, Z/3
std::vector<Bundle> classical_bundles();       // graded Z/2, Z/3; trivial coactions
std::vector<HomCoalgebra> classical_coalgebras();

/// Structures that each violate exactly the named axiom; every checker test
/// gets a negative control.
struct NegativeControls {
  HomCoalgebra comultiplicativity_fail;
  HomCoalgebra hom_coassociativity_fail;
  HomAlgebra multiplicativity_fail;
  HomAlgebra hom_associativity_fail;
  HomBialgebra bialgebra_compat_fail;
  Comodule comodule_axiom_fail;  // checked against the Z/2 group bialgebra host
  Bundle bundle_axiom_fail;      // valid comodule, failed bundle axiom
  LinearMap colinearity_fail;    // degree swap on the graded Z/2 comodule
};

NegativeControls negative_controls();

}  // namespace catalog
}  // namespace homtwist
