#pragma once

#include <utility>
#include <vector>

#include "homtwist/structures.hpp"

namespace homtwist {

// Matrix-path axiom checkers. Each assembles both sides of the axiom with
// compose/kron/twist and reports the exact residual. The independent
// Sweedler-summation route for the same axioms lives in oracle.hpp.

/// Delta . alpha = (alpha (x) alpha) . Delta
CheckReport check_comultiplicativity(const HomCoalgebra& c);

/// (alpha (x) Delta) . Delta = (Delta (x) alpha) . Delta
CheckReport check_hom_coassociativity(const HomCoalgebra& c);

/// alpha . mu = mu . (alpha (x) alpha)
CheckReport check_multiplicativity(const HomAlgebra& a);

/// mu . (alpha (x) mu) = mu . (mu (x) alpha)
CheckReport check_hom_associativity(const HomAlgebra& a);

/// Delta . mu = (mu (x) mu) . (id (x) tau (x) id) . (Delta (x) Delta)
CheckReport check_bialgebra_compat(const HomBialgebra& h);

/// (i)  delta . alpha_m = (alpha_host (x) alpha_m) . delta
/// (ii) (alpha_host (x) delta) . delta = (delta_host (x) alpha_m) . delta
std::pair<CheckReport, CheckReport> check_comodule(const Comodule& m, const HomCoalgebra& host);

/// One report stacking colinearity (delta_n . f = (id (x) f) . delta_m) on top
/// of the underlying Hom-module condition (f . alpha_m = alpha_n . f); holds
/// means both equalities hold.
CheckReport check_comodule_morphism(const LinearMap& f, const Comodule& m, const Comodule& n);

/// (alpha_host^2 (x) Delta_C) . delta = delta_CC . Delta_C, where delta_CC is
/// the coaction induced on C (x) C.
CheckReport check_bundle_axiom(const Bundle& b);

// Validation suites: every axiom that applies to the structure, in a fixed
// order. A structure "validates" when all of its reports hold.

std::vector<CheckReport> validate_coalgebra(const HomCoalgebra& c);
std::vector<CheckReport> validate_algebra(const HomAlgebra& a);
std::vector<CheckReport> validate_bialgebra(const HomBialgebra& h);
std::vector<CheckReport> validate_comodule(const Comodule& m, const HomCoalgebra& host);
std::vector<CheckReport> validate_bundle(const Bundle& b);

bool all_hold(const std::vector<CheckReport>& reports);

bool coalgebra_valid(const HomCoalgebra& c);
bool algebra_valid(const HomAlgebra& a);
bool bialgebra_valid(const HomBialgebra& h);
bool comodule_valid(const Comodule& m, const HomCoalgebra& host);
bool bundle_valid(const Bundle& b);

/// Structure map (mu (x) id (x) id) . (id (x) tau (x) id) . (delta_m (x) delta_n)
/// of the tensor-product comodule M (x) N; with M = N = C it is the delta_CC of
/// the bundle axiom.
LinearMap tensor_coaction_map(const LinearMap& delta_m, const LinearMap& delta_n,
                              const LinearMap& host_mu, int host_dim, int m_dim, int n_dim);

}  // namespace homtwist
