#include "homtwist/linear_map.hpp"

#include <string>

#include "homtwist/errors.hpp"

namespace homtwist {

namespace {

void require_positive_dims(int codomain_dim, int domain_dim) {
  if (codomain_dim <= 0 || domain_dim <= 0)
    throw DimensionMismatch("map dimensions must be positive, got " + std::to_string(codomain_dim) +
                            "x" + std::to_string(domain_dim));
}

}  // namespace

LinearMap::LinearMap(int codomain_dim, int domain_dim)
    : codomain_dim_(codomain_dim), domain_dim_(domain_dim) {
  require_positive_dims(codomain_dim, domain_dim);
  entries_.assign(static_cast<size_t>(codomain_dim) * domain_dim, Rational(0));
}

LinearMap::LinearMap(int codomain_dim, int domain_dim, std::vector<Rational> entries)
    : codomain_dim_(codomain_dim), domain_dim_(domain_dim), entries_(std::move(entries)) {
  require_positive_dims(codomain_dim, domain_dim);
  if (entries_.size() != static_cast<size_t>(codomain_dim) * domain_dim)
    throw DimensionMismatch("expected " + std::to_string(static_cast<size_t>(codomain_dim) * domain_dim) +
                            " entries for a " + std::to_string(codomain_dim) + "x" +
                            std::to_string(domain_dim) + " map, got " + std::to_string(entries_.size()));
}

LinearMap LinearMap::from_rows(std::initializer_list<std::initializer_list<Rational>> rows) {
  const int cod = static_cast<int>(rows.size());
  if (cod == 0) throw DimensionMismatch("empty row list");
  const int dom = static_cast<int>(rows.begin()->size());
  std::vector<Rational> entries;
  entries.reserve(static_cast<size_t>(cod) * dom);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != dom)
      throw DimensionMismatch("ragged row list");
    for (const auto& x : row) entries.push_back(x);
  }
  return LinearMap(cod, dom, std::move(entries));
}

bool LinearMap::is_zero() const {
  for (const auto& x : entries_)
    if (!x.is_zero()) return false;
  return true;
}

bool LinearMap::is_identity() const {
  if (codomain_dim_ != domain_dim_) return false;
  for (int r = 0; r < codomain_dim_; ++r)
    for (int c = 0; c < domain_dim_; ++c)
      if (at(r, c) != Rational(r == c ? 1 : 0)) return false;
  return true;
}

Rational LinearMap::max_abs_entry() const {
  Rational best(0);
  for (const auto& x : entries_) {
    Rational a = x.abs();
    if (a > best) best = a;
  }
  return best;
}

bool operator==(const LinearMap& a, const LinearMap& b) {
  return a.codomain_dim_ == b.codomain_dim_ && a.domain_dim_ == b.domain_dim_ &&
         a.entries_ == b.entries_;
}

LinearMap compose(const LinearMap& g, const LinearMap& f) {
  if (g.domain_dim() != f.codomain_dim())
    throw DimensionMismatch("compose: inner dims differ (" + std::to_string(g.domain_dim()) +
                            " vs " + std::to_string(f.codomain_dim()) + ")");
  LinearMap result(g.codomain_dim(), f.domain_dim());
  for (int i = 0; i < g.codomain_dim(); ++i) {
    for (int k = 0; k < g.domain_dim(); ++k) {
      const Rational& gik = g.at(i, k);
      if (gik.is_zero()) continue;
      for (int j = 0; j < f.domain_dim(); ++j) {
        const Rational& fkj = f.at(k, j);
        if (fkj.is_zero()) continue;
        result.at(i, j) += gik * fkj;
      }
    }
  }
  return result;
}

LinearMap kron(const LinearMap& f, const LinearMap& g) {
  const int fc = f.codomain_dim(), fd = f.domain_dim();
  const int gc = g.codomain_dim(), gd = g.domain_dim();
  LinearMap result(fc * gc, fd * gd);
  for (int i = 0; i < fc; ++i)
    for (int j = 0; j < fd; ++j) {
      const Rational& fij = f.at(i, j);
      if (fij.is_zero()) continue;
      for (int k = 0; k < gc; ++k)
        for (int l = 0; l < gd; ++l)
          result.at(i * gc + k, j * gd + l) = fij * g.at(k, l);
    }
  return result;
}

LinearMap twist(int m, int n) {
  if (m <= 0 || n <= 0) throw DimensionMismatch("twist: dims must be positive");
  LinearMap result(n * m, m * n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      result.at(j * m + i, i * n + j) = Rational(1);
  return result;
}

LinearMap identity(int n) {
  if (n <= 0) throw DimensionMismatch("identity: dim must be positive");
  LinearMap result(n, n);
  for (int i = 0; i < n; ++i) result.at(i, i) = Rational(1);
  return result;
}

LinearMap zero(int codomain_dim, int domain_dim) { return LinearMap(codomain_dim, domain_dim); }

LinearMap difference(const LinearMap& f, const LinearMap& g) {
  if (f.codomain_dim() != g.codomain_dim() || f.domain_dim() != g.domain_dim())
    throw DimensionMismatch("difference: shapes differ (" + std::to_string(f.codomain_dim()) + "x" +
                            std::to_string(f.domain_dim()) + " vs " + std::to_string(g.codomain_dim()) +
                            "x" + std::to_string(g.domain_dim()) + ")");
  LinearMap result(f.codomain_dim(), f.domain_dim());
  for (int r = 0; r < f.codomain_dim(); ++r)
    for (int c = 0; c < f.domain_dim(); ++c)
      result.at(r, c) = f.at(r, c) - g.at(r, c);
  return result;
}

LinearMap vstack(const LinearMap& f, const LinearMap& g) {
  if (f.domain_dim() != g.domain_dim())
    throw DimensionMismatch("vstack: domain dims differ");
  LinearMap result(f.codomain_dim() + g.codomain_dim(), f.domain_dim());
  for (int r = 0; r < f.codomain_dim(); ++r)
    for (int c = 0; c < f.domain_dim(); ++c)
      result.at(r, c) = f.at(r, c);
  for (int r = 0; r < g.codomain_dim(); ++r)
    for (int c = 0; c < g.domain_dim(); ++c)
      result.at(f.codomain_dim() + r, c) = g.at(r, c);
  return result;
}

}  // namespace homtwist
