#pragma once

#include <string>
#include <vector>

#include "homtwist/structures.hpp"

namespace homtwist {

// Independent evaluation path for every axiom: each side is assembled entry by
// entry as an explicit summation over basis indices and structure constants,
// transcribing the Sweedler-notation form of the axiom. No compose/kron/twist
// anywhere in here; agreement with the matrix path is what the path-equivalence
// tests and the CLI's --oracle mode certify.

CheckReport oracle_comultiplicativity(const HomCoalgebra& c);
CheckReport oracle_hom_coassociativity(const HomCoalgebra& c);
CheckReport oracle_multiplicativity(const HomAlgebra& a);
CheckReport oracle_hom_associativity(const HomAlgebra& a);
CheckReport oracle_bialgebra_compat(const HomBialgebra& h);
CheckReport oracle_comodule_morphism_axiom(const Comodule& m, const HomCoalgebra& host);
CheckReport oracle_comodule_axiom(const Comodule& m, const HomCoalgebra& host);
CheckReport oracle_bundle_axiom(const Bundle& b);
CheckReport oracle_comodule_morphism(const LinearMap& f, const Comodule& m, const Comodule& n);

/// Dispatch by axiom identifier; throws UnknownAxiom for names that do not
/// apply to the given structure kind.
CheckReport oracle_evaluate(const std::string& axiom_id, const HomCoalgebra& c);
CheckReport oracle_evaluate(const std::string& axiom_id, const HomAlgebra& a);
CheckReport oracle_evaluate(const std::string& axiom_id, const HomBialgebra& h);
CheckReport oracle_evaluate(const std::string& axiom_id, const Comodule& m, const HomCoalgebra& host);
CheckReport oracle_evaluate(const std::string& axiom_id, const Bundle& b);

// Mirrors of the validate_* suites in checks.hpp, same axioms in the same
// order, evaluated through the summation path.
std::vector<CheckReport> oracle_validate_coalgebra(const HomCoalgebra& c);
std::vector<CheckReport> oracle_validate_algebra(const HomAlgebra& a);
std::vector<CheckReport> oracle_validate_bialgebra(const HomBialgebra& h);
std::vector<CheckReport> oracle_validate_comodule(const Comodule& m, const HomCoalgebra& host);
std::vector<CheckReport> oracle_validate_bundle(const Bundle& b);

}  // namespace homtwist
