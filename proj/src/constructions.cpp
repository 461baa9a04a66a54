#include "homtwist/constructions.hpp"

#include <string>
#include <utility>

#include "homtwist/errors.hpp"

namespace homtwist {

bool is_coalgebra_endomorphism(const HomCoalgebra& c, const LinearMap& endo) {
  if (endo.domain_dim() != c.dim || endo.codomain_dim() != c.dim) return false;
  return compose(c.delta, endo) == compose(kron(endo, endo), c.delta);
}

bool is_algebra_endomorphism(const HomAlgebra& a, const LinearMap& endo) {
  if (endo.domain_dim() != a.dim || endo.codomain_dim() != a.dim) return false;
  return compose(endo, a.mu) == compose(a.mu, kron(endo, endo));
}

bool is_bialgebra_endomorphism(const HomBialgebra& h, const LinearMap& endo) {
  return is_algebra_endomorphism(h.algebra_part(), endo) &&
         is_coalgebra_endomorphism(h.coalgebra_part(), endo);
}

HomCoalgebra yau_twist_coalgebra(const HomCoalgebra& c, const LinearMap& endo) {
  if (!c.alpha.is_identity())
    throw NotAnEndomorphism("yau_twist_coalgebra expects a classical coalgebra (alpha = id)");
  if (!is_coalgebra_endomorphism(c, endo))
    throw NotAnEndomorphism("map is not a coalgebra endomorphism: Delta.endo != (endo(x)endo).Delta");
  return HomCoalgebra(c.dim, compose(c.delta, endo), endo);
}

HomBialgebra yau_twist_bialgebra(const HomBialgebra& h, const LinearMap& endo) {
  if (!h.alpha.is_identity())
    throw NotAnEndomorphism("yau_twist_bialgebra expects a classical bialgebra (alpha = id)");
  if (!is_algebra_endomorphism(h.algebra_part(), endo))
    throw NotAnEndomorphism("map is not an algebra endomorphism: endo.mu != mu.(endo(x)endo)");
  if (!is_coalgebra_endomorphism(h.coalgebra_part(), endo))
    throw NotAnEndomorphism("map is not a coalgebra endomorphism: Delta.endo != (endo(x)endo).Delta");

  std::optional<std::vector<Rational>> unit;
  if (h.unit_vector) {
    // endo(u) as a coordinate vector
    std::vector<Rational> image(static_cast<size_t>(h.dim), Rational(0));
    for (int i = 0; i < h.dim; ++i)
      for (int j = 0; j < h.dim; ++j) image[i] += endo.at(i, j) * (*h.unit_vector)[j];
    if (image == *h.unit_vector) unit = *h.unit_vector;
  }
  return HomBialgebra(h.dim, compose(endo, h.mu), compose(h.delta, endo), endo, std::move(unit));
}

Comodule tilde_comodule(const Comodule& m, const HomCoalgebra& host) {
  if (m.host_dim != host.dim)
    throw DimensionMismatch("tilde_comodule: comodule host_dim != host dim");
  if (!comodule_valid(m, host))
    throw InvalidComodule("tilde_comodule requires a valid comodule over the host");
  LinearMap alpha_sq = compose(host.alpha, host.alpha);
  LinearMap delta_tilde = compose(kron(alpha_sq, identity(m.m_dim)), m.delta);
  return Comodule(m.host_dim, m.m_dim, m.alpha_m, std::move(delta_tilde));
}

Comodule tensor_comodule(const Comodule& m, const Comodule& n, const HomBialgebra& host) {
  if (m.host_dim != host.dim || n.host_dim != host.dim)
    throw DimensionMismatch("tensor_comodule: comodule host_dim != host dim");
  const HomCoalgebra host_coalg = host.coalgebra_part();
  if (!comodule_valid(m, host_coalg) || !comodule_valid(n, host_coalg))
    throw InvalidComodule("tensor_comodule requires both factors to validate over the host");
  LinearMap delta_mn =
      tensor_coaction_map(m.delta, n.delta, host.mu, host.dim, m.m_dim, n.m_dim);
  return Comodule(host.dim, m.m_dim * n.m_dim, kron(m.alpha_m, n.alpha_m), std::move(delta_mn));
}

Characterization characterize(const Bundle& b) {
  if (!bialgebra_valid(b.host))
    throw InvalidComodule("characterize requires a valid Hom-bialgebra host");
  if (!comodule_valid(b.coaction, b.host.coalgebra_part()))
    throw InvalidComodule("characterize requires the coaction to validate over the host");
  const bool axiom_holds = check_bundle_axiom(b).holds;
  Comodule tilde = tilde_comodule(b.coaction, b.host.coalgebra_part());
  Comodule square = tensor_comodule(b.coaction, b.coaction, b.host);
  const bool morphism_holds = check_comodule_morphism(b.coalg.delta, tilde, square).holds;
  return Characterization{axiom_holds, morphism_holds};
}

Bundle deform_bundle(const DeformationInput& input) {
  const Bundle& b = input.classical_bundle;
  if (!b.host.alpha.is_identity() || !b.coalg.alpha.is_identity())
    throw InvalidClassicalBundle("classical bundle must have identity twisting maps");
  if (!bundle_valid(b))
    throw InvalidClassicalBundle("classical bundle fails validation");
  if (input.alpha_h.domain_dim() != b.host.dim || input.alpha_h.codomain_dim() != b.host.dim)
    throw DimensionMismatch("alpha_h must be a square map on the host");
  if (input.alpha_c.domain_dim() != b.coalg.dim || input.alpha_c.codomain_dim() != b.coalg.dim)
    throw DimensionMismatch("alpha_c must be a square map on the coalgebra");

  // Intertwining condition first: its failure is reported as such even when a
  // map also fails an endomorphism check.
  if (compose(b.coaction.delta, input.alpha_c) !=
      compose(kron(input.alpha_h, input.alpha_c), b.coaction.delta))
    throw CompatibilityFailure("delta . alpha_c != (alpha_h (x) alpha_c) . delta");
  if (!is_bialgebra_endomorphism(b.host, input.alpha_h))
    throw NotAnEndomorphism("alpha_h is not a bialgebra endomorphism of the host");
  if (!is_coalgebra_endomorphism(b.coalg, input.alpha_c))
    throw NotAnEndomorphism("alpha_c is not a coalgebra endomorphism of the coalgebra");

  HomBialgebra host_twisted = yau_twist_bialgebra(b.host, input.alpha_h);
  HomCoalgebra coalg_twisted = yau_twist_coalgebra(b.coalg, input.alpha_c);
  Comodule coaction_twisted(b.host.dim, b.coalg.dim, input.alpha_c,
                            compose(b.coaction.delta, input.alpha_c));
  return Bundle(std::move(host_twisted), std::move(coalg_twisted), std::move(coaction_twisted));
}

}  // namespace homtwist
