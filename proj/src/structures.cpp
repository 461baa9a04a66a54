#include "homtwist/structures.hpp"

#include <string>
#include <utility>

#include "homtwist/errors.hpp"

namespace homtwist {

namespace {

void require_shape(const LinearMap& m, int cod, int dom, const std::string& name) {
  if (m.codomain_dim() != cod || m.domain_dim() != dom)
    throw DimensionMismatch(name + ": expected " + std::to_string(cod) + "x" + std::to_string(dom) +
                            ", got " + std::to_string(m.codomain_dim()) + "x" +
                            std::to_string(m.domain_dim()));
}

}  // namespace

HomCoalgebra::HomCoalgebra(int dim_, LinearMap delta_, LinearMap alpha_)
    : dim(dim_), delta(std::move(delta_)), alpha(std::move(alpha_)) {
  if (dim <= 0) throw DimensionMismatch("coalgebra dim must be positive");
  require_shape(delta, dim * dim, dim, "coalgebra delta");
  require_shape(alpha, dim, dim, "coalgebra alpha");
}

HomAlgebra::HomAlgebra(int dim_, LinearMap mu_, LinearMap alpha_)
    : dim(dim_), mu(std::move(mu_)), alpha(std::move(alpha_)) {
  if (dim <= 0) throw DimensionMismatch("algebra dim must be positive");
  require_shape(mu, dim, dim * dim, "algebra mu");
  require_shape(alpha, dim, dim, "algebra alpha");
}

HomBialgebra::HomBialgebra(int dim_, LinearMap mu_, LinearMap delta_, LinearMap alpha_,
                           std::optional<std::vector<Rational>> unit_vector_)
    : dim(dim_),
      mu(std::move(mu_)),
      delta(std::move(delta_)),
      alpha(std::move(alpha_)),
      unit_vector(std::move(unit_vector_)) {
  if (dim <= 0) throw DimensionMismatch("bialgebra dim must be positive");
  require_shape(mu, dim, dim * dim, "bialgebra mu");
  require_shape(delta, dim * dim, dim, "bialgebra delta");
  require_shape(alpha, dim, dim, "bialgebra alpha");
  if (unit_vector && static_cast<int>(unit_vector->size()) != dim)
    throw DimensionMismatch("bialgebra unit vector has length " +
                            std::to_string(unit_vector->size()) + ", expected " +
                            std::to_string(dim));
}

Comodule::Comodule(int host_dim_, int m_dim_, LinearMap alpha_m_, LinearMap delta_)
    : host_dim(host_dim_), m_dim(m_dim_), alpha_m(std::move(alpha_m_)), delta(std::move(delta_)) {
  if (host_dim <= 0 || m_dim <= 0) throw DimensionMismatch("comodule dims must be positive");
  require_shape(alpha_m, m_dim, m_dim, "comodule alpha_m");
  require_shape(delta, host_dim * m_dim, m_dim, "comodule delta");
}

Bundle::Bundle(HomBialgebra host_, HomCoalgebra coalg_, Comodule coaction_)
    : host(std::move(host_)), coalg(std::move(coalg_)), coaction(std::move(coaction_)) {
  if (coaction.host_dim != host.dim)
    throw DimensionMismatch("bundle coaction host_dim " + std::to_string(coaction.host_dim) +
                            " != host dim " + std::to_string(host.dim));
  if (coaction.m_dim != coalg.dim)
    throw DimensionMismatch("bundle coaction m_dim " + std::to_string(coaction.m_dim) +
                            " != coalgebra dim " + std::to_string(coalg.dim));
  if (coaction.alpha_m != coalg.alpha)
    throw DimensionMismatch("bundle coaction alpha_m must equal the coalgebra's alpha");
}

CheckReport CheckReport::make(std::string axiom_name, LinearMap lhs, LinearMap rhs) {
  LinearMap residual = difference(lhs, rhs);
  bool holds = residual.is_zero();
  Rational worst = residual.max_abs_entry();
  return CheckReport{std::move(axiom_name), holds, std::move(lhs), std::move(rhs),
                     std::move(residual), std::move(worst)};
}

bool operator==(const CheckReport& a, const CheckReport& b) {
  return a.axiom_name == b.axiom_name && a.holds == b.holds && a.lhs == b.lhs && a.rhs == b.rhs &&
         a.residual == b.residual && a.worst_entry == b.worst_entry;
}

}  // namespace homtwist
