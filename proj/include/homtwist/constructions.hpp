#pragma once

#include "homtwist/checks.hpp"
#include "homtwist/structures.hpp"

namespace homtwist {

/// Input for deforming a classical comodule coalgebra along a pair of
/// endomorphisms. classical_bundle must have identity twisting maps
/// throughout; alpha_h must be a bialgebra endomorphism of the host, alpha_c a
/// coalgebra endomorphism of the coalgebra, and the pair must intertwine the
/// coaction: delta . alpha_c = (alpha_h (x) alpha_c) . delta.
struct DeformationInput {
  Bundle classical_bundle;
  LinearMap alpha_h;
  LinearMap alpha_c;
};

/// True when endo intertwines delta: delta . endo = (endo (x) endo) . delta.
bool is_coalgebra_endomorphism(const HomCoalgebra& c, const LinearMap& endo);

/// True when endo is an algebra morphism for mu: endo . mu = mu . (endo (x) endo).
bool is_algebra_endomorphism(const HomAlgebra& a, const LinearMap& endo);

/// Both of the above against the two halves of h.
bool is_bialgebra_endomorphism(const HomBialgebra& h, const LinearMap& endo);

/// Twist of a classical coalgebra along one of its endomorphisms:
/// (C, Delta . endo, endo). Requires c.alpha = id and the endomorphism
/// precheck; the result satisfies both Hom-coalgebra axioms.
HomCoalgebra yau_twist_coalgebra(const HomCoalgebra& c, const LinearMap& endo);

/// Twist of a classical bialgebra: (H, endo . mu, Delta . endo, endo).
/// unit_vector survives only when endo fixes it, so that twisting by the
/// identity changes nothing.
HomBialgebra yau_twist_bialgebra(const HomBialgebra& h, const LinearMap& endo);

/// The coaction (alpha_host^2 (x) id) . delta, which makes M a host-comodule
/// again. Requires m to validate over host.
Comodule tilde_comodule(const Comodule& m, const HomCoalgebra& host);

/// The coaction sum m_(-1) n_(-1) (x) m_(0) (x) n_(0) on M (x) N, with
/// twisting map alpha_m (x) alpha_n. Requires both inputs to validate over
/// host's coalgebra part.
Comodule tensor_comodule(const Comodule& m, const Comodule& n, const HomBialgebra& host);

struct Characterization {
  bool axiom_holds;     // the comodule Hom-coalgebra axiom for b
  bool morphism_holds;  // Delta_C a comodule morphism (C, tilde) -> (C (x) C, tensor)
};

/// Evaluates both sides of the characterization: the two booleans agree for
/// every bundle whose host and coaction validate.
Characterization characterize(const Bundle& b);

/// Deforms a classical comodule coalgebra along (alpha_h, alpha_c). All
/// hypotheses are hard prechecks; the returned bundle passes full validation
/// including the bundle axiom.
Bundle deform_bundle(const DeformationInput& input);

}  // namespace homtwist
