#include "homtwist/checks.hpp"

#include <utility>

#include "homtwist/errors.hpp"

namespace homtwist {

CheckReport check_comultiplicativity(const HomCoalgebra& c) {
  LinearMap lhs = compose(c.delta, c.alpha);
  LinearMap rhs = compose(kron(c.alpha, c.alpha), c.delta);
  return CheckReport::make("comultiplicativity", std::move(lhs), std::move(rhs));
}

CheckReport check_hom_coassociativity(const HomCoalgebra& c) {
  LinearMap lhs = compose(kron(c.alpha, c.delta), c.delta);
  LinearMap rhs = compose(kron(c.delta, c.alpha), c.delta);
  return CheckReport::make("hom_coassociativity", std::move(lhs), std::move(rhs));
}

CheckReport check_multiplicativity(const HomAlgebra& a) {
  LinearMap lhs = compose(a.alpha, a.mu);
  LinearMap rhs = compose(a.mu, kron(a.alpha, a.alpha));
  return CheckReport::make("multiplicativity", std::move(lhs), std::move(rhs));
}

CheckReport check_hom_associativity(const HomAlgebra& a) {
  LinearMap lhs = compose(a.mu, kron(a.alpha, a.mu));
  LinearMap rhs = compose(a.mu, kron(a.mu, a.alpha));
  return CheckReport::make("hom_associativity", std::move(lhs), std::move(rhs));
}

CheckReport check_bialgebra_compat(const HomBialgebra& h) {
  const int d = h.dim;
  LinearMap lhs = compose(h.delta, h.mu);
  LinearMap shuffle = kron(identity(d), kron(twist(d, d), identity(d)));
  LinearMap rhs = compose(kron(h.mu, h.mu), compose(shuffle, kron(h.delta, h.delta)));
  return CheckReport::make("bialgebra_compat", std::move(lhs), std::move(rhs));
}

std::pair<CheckReport, CheckReport> check_comodule(const Comodule& m, const HomCoalgebra& host) {
  if (m.host_dim != host.dim)
    throw DimensionMismatch("comodule host_dim " + std::to_string(m.host_dim) +
                            " != host coalgebra dim " + std::to_string(host.dim));
  CheckReport morphism = CheckReport::make(
      "comodule_morphism", compose(m.delta, m.alpha_m),
      compose(kron(host.alpha, m.alpha_m), m.delta));
  CheckReport axiom = CheckReport::make(
      "comodule_axiom", compose(kron(host.alpha, m.delta), m.delta),
      compose(kron(host.delta, m.alpha_m), m.delta));
  return {std::move(morphism), std::move(axiom)};
}

CheckReport check_comodule_morphism(const LinearMap& f, const Comodule& m, const Comodule& n) {
  if (m.host_dim != n.host_dim)
    throw DimensionMismatch("comodule morphism: hosts have different dims");
  if (f.domain_dim() != m.m_dim || f.codomain_dim() != n.m_dim)
    throw DimensionMismatch("comodule morphism: map is " + std::to_string(f.codomain_dim()) + "x" +
                            std::to_string(f.domain_dim()) + ", expected " +
                            std::to_string(n.m_dim) + "x" + std::to_string(m.m_dim));
  LinearMap colinear_lhs = compose(n.delta, f);
  LinearMap colinear_rhs = compose(kron(identity(m.host_dim), f), m.delta);
  LinearMap module_lhs = compose(f, m.alpha_m);
  LinearMap module_rhs = compose(n.alpha_m, f);
  return CheckReport::make("colinearity", vstack(colinear_lhs, module_lhs),
                           vstack(colinear_rhs, module_rhs));
}

LinearMap tensor_coaction_map(const LinearMap& delta_m, const LinearMap& delta_n,
                              const LinearMap& host_mu, int host_dim, int m_dim, int n_dim) {
  // (delta_m (x) delta_n) lands in H (x) M (x) H (x) N; the middle M (x) H
  // must become H (x) M before mu can collect the host legs.
  LinearMap shuffle = kron(identity(host_dim), kron(twist(m_dim, host_dim), identity(n_dim)));
  LinearMap legs = kron(delta_m, delta_n);
  LinearMap collect = kron(host_mu, identity(m_dim * n_dim));
  return compose(collect, compose(shuffle, legs));
}

CheckReport check_bundle_axiom(const Bundle& b) {
  const LinearMap alpha_sq = compose(b.host.alpha, b.host.alpha);
  LinearMap lhs = compose(kron(alpha_sq, b.coalg.delta), b.coaction.delta);
  LinearMap delta_cc = tensor_coaction_map(b.coaction.delta, b.coaction.delta, b.host.mu,
                                           b.host.dim, b.coalg.dim, b.coalg.dim);
  LinearMap rhs = compose(delta_cc, b.coalg.delta);
  return CheckReport::make("bundle_axiom", std::move(lhs), std::move(rhs));
}

std::vector<CheckReport> validate_coalgebra(const HomCoalgebra& c) {
  std::vector<CheckReport> reports;
  reports.push_back(check_comultiplicativity(c));
  reports.push_back(check_hom_coassociativity(c));
  return reports;
}

std::vector<CheckReport> validate_algebra(const HomAlgebra& a) {
  std::vector<CheckReport> reports;
  reports.push_back(check_multiplicativity(a));
  reports.push_back(check_hom_associativity(a));
  return reports;
}

std::vector<CheckReport> validate_bialgebra(const HomBialgebra& h) {
  std::vector<CheckReport> reports = validate_algebra(h.algebra_part());
  for (auto& r : validate_coalgebra(h.coalgebra_part())) reports.push_back(std::move(r));
  reports.push_back(check_bialgebra_compat(h));
  return reports;
}

std::vector<CheckReport> validate_comodule(const Comodule& m, const HomCoalgebra& host) {
  auto [morphism, axiom] = check_comodule(m, host);
  std::vector<CheckReport> reports;
  reports.push_back(std::move(morphism));
  reports.push_back(std::move(axiom));
  return reports;
}

std::vector<CheckReport> validate_bundle(const Bundle& b) {
  std::vector<CheckReport> reports = validate_bialgebra(b.host);
  for (auto& r : validate_coalgebra(b.coalg)) reports.push_back(std::move(r));
  for (auto& r : validate_comodule(b.coaction, b.host.coalgebra_part()))
    reports.push_back(std::move(r));
  reports.push_back(check_bundle_axiom(b));
  return reports;
}

bool all_hold(const std::vector<CheckReport>& reports) {
  for (const auto& r : reports)
    if (!r.holds) return false;
  return true;
}

bool coalgebra_valid(const HomCoalgebra& c) { return all_hold(validate_coalgebra(c)); }
bool algebra_valid(const HomAlgebra& a) { return all_hold(validate_algebra(a)); }
bool bialgebra_valid(const HomBialgebra& h) { return all_hold(validate_bialgebra(h)); }
bool comodule_valid(const Comodule& m, const HomCoalgebra& host) {
  return all_hold(validate_comodule(m, host));
}
bool bundle_valid(const Bundle& b) { return all_hold(validate_bundle(b)); }

}  // namespace homtwist
