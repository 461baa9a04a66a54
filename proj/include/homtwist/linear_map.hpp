#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "homtwist/rational.hpp"

namespace homtwist {

/// Dense linear map between based vector spaces, stored row-major.
///
/// Column j holds the image of domain basis vector j in the codomain basis.
/// Tensor products of spaces use the row-major flat pairing
///   (i, j) of U (x) V  <->  i * dim(V) + j,
/// and kron/twist below follow that one convention.
class LinearMap {
 public:
  LinearMap(int codomain_dim, int domain_dim);
  LinearMap(int codomain_dim, int domain_dim, std::vector<Rational> entries);

  /// Rows given as nested lists, row-major: {{a,b},{c,d}}.
  static LinearMap from_rows(std::initializer_list<std::initializer_list<Rational>> rows);

  int domain_dim() const { return domain_dim_; }
  int codomain_dim() const { return codomain_dim_; }

  const Rational& at(int row, int col) const { return entries_[static_cast<size_t>(row) * domain_dim_ + col]; }
  Rational& at(int row, int col) { return entries_[static_cast<size_t>(row) * domain_dim_ + col]; }

  const std::vector<Rational>& entries() const { return entries_; }

  bool is_zero() const;
  bool is_identity() const;

  /// Largest absolute value among the entries (0 for the empty map).
  Rational max_abs_entry() const;

  friend bool operator==(const LinearMap& a, const LinearMap& b);
  friend bool operator!=(const LinearMap& a, const LinearMap& b) { return !(a == b); }

 private:
  int codomain_dim_;
  int domain_dim_;
  std::vector<Rational> entries_;  // codomain_dim * domain_dim, row-major
};

/// Matrix product g . f (apply f first). Throws DimensionMismatch unless
/// g.domain_dim == f.codomain_dim.
LinearMap compose(const LinearMap& g, const LinearMap& f);

/// Kronecker product f (x) g under the row-major pairing; satisfies the
/// mixed-product law with compose.
LinearMap kron(const LinearMap& f, const LinearMap& g);

/// The twist map tau_{U,V}: U (x) V -> V (x) U, dim U = m, dim V = n,
/// sending basis (i, j) to (j, i).
LinearMap twist(int m, int n);

LinearMap identity(int n);
LinearMap zero(int codomain_dim, int domain_dim);

/// Entry-wise f - g. Throws DimensionMismatch on shape disagreement.
LinearMap difference(const LinearMap& f, const LinearMap& g);

/// Stacks f on top of g: same domain, codomains concatenated. Used to bundle
/// two linear-map equalities into a single one.
LinearMap vstack(const LinearMap& f, const LinearMap& g);

}  // namespace homtwist
