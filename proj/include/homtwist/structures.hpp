#pragma once

#include <optional>
#include <string>
#include <vector>

#include "homtwist/linear_map.hpp"

namespace homtwist {

/// Hom-coassociative coalgebra (C, Delta, alpha): delta maps C -> C (x) C.
/// Plain data; whether the axioms hold is a separate question (see checks.hpp),
/// so axiom-violating structures are representable on purpose.
struct HomCoalgebra {
  int dim;
  LinearMap delta;  // dim^2 x dim
  LinearMap alpha;  // dim x dim

  HomCoalgebra(int dim, LinearMap delta, LinearMap alpha);

  friend bool operator==(const HomCoalgebra&, const HomCoalgebra&) = default;
};

/// Hom-associative algebra (A, mu, alpha): mu maps A (x) A -> A.
struct HomAlgebra {
  int dim;
  LinearMap mu;     // dim x dim^2
  LinearMap alpha;  // dim x dim

  HomAlgebra(int dim, LinearMap mu, LinearMap alpha);

  friend bool operator==(const HomAlgebra&, const HomAlgebra&) = default;
};

/// Hom-bialgebra (H, mu, Delta, alpha). The algebra and coalgebra parts share
/// dim and alpha. unit_vector, when present, is construction data for building
/// trivial coactions; no axiom refers to it.
struct HomBialgebra {
  int dim;
  LinearMap mu;     // dim x dim^2
  LinearMap delta;  // dim^2 x dim
  LinearMap alpha;  // dim x dim
  std::optional<std::vector<Rational>> unit_vector;  // length dim

  HomBialgebra(int dim, LinearMap mu, LinearMap delta, LinearMap alpha,
               std::optional<std::vector<Rational>> unit_vector = std::nullopt);

  HomCoalgebra coalgebra_part() const { return HomCoalgebra(dim, delta, alpha); }
  HomAlgebra algebra_part() const { return HomAlgebra(dim, mu, alpha); }

  friend bool operator==(const HomBialgebra&, const HomBialgebra&) = default;
};

/// Comodule (M, alpha_m) over a host coalgebra of dimension host_dim, with
/// structure map delta: M -> H (x) M.
struct Comodule {
  int host_dim;
  int m_dim;
  LinearMap alpha_m;  // m_dim x m_dim
  LinearMap delta;    // (host_dim * m_dim) x m_dim

  Comodule(int host_dim, int m_dim, LinearMap alpha_m, LinearMap delta);

  friend bool operator==(const Comodule&, const Comodule&) = default;
};

/// The full comodule Hom-coalgebra datum: a Hom-bialgebra host H, a
/// Hom-coalgebra C, and a coaction delta: C -> H (x) C tying them together.
struct Bundle {
  HomBialgebra host;
  HomCoalgebra coalg;
  Comodule coaction;  // host_dim = host.dim, m_dim = coalg.dim, alpha_m = coalg.alpha

  Bundle(HomBialgebra host, HomCoalgebra coalg, Comodule coaction);

  friend bool operator==(const Bundle&, const Bundle&) = default;
};

/// Outcome of one exact axiom check: both sides as matrices, their difference,
/// and the verdict. holds is true exactly when the residual is the zero map.
struct CheckReport {
  std::string axiom_name;
  bool holds;
  LinearMap lhs;
  LinearMap rhs;
  LinearMap residual;
  Rational worst_entry;  // largest |entry| of the residual

  static CheckReport make(std::string axiom_name, LinearMap lhs, LinearMap rhs);

  friend bool operator==(const CheckReport& a, const CheckReport& b);
  friend bool operator!=(const CheckReport& a, const CheckReport& b) { return !(a == b); }
};

}  // namespace homtwist
