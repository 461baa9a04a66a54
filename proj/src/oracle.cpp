#include "homtwist/oracle.hpp"

#include <utility>

#include "homtwist/errors.hpp"

namespace homtwist {

// Index conventions throughout: a coalgebra constant Delta^{ij}_c is
// delta.at(i*d + j, c), an algebra constant mu^c_{ab} is mu.at(c, a*d + b),
// and a coaction constant delta^{hn}_m is delta.at(h*m_dim + n, m).

CheckReport oracle_comultiplicativity(const HomCoalgebra& c) {
  const int d = c.dim;
  LinearMap lhs(d * d, d), rhs(d * d, d);
  // sum alpha(x)_1 (x) alpha(x)_2  vs  sum alpha(x_1) (x) alpha(x_2)
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int x = 0; x < d; ++x) {
        Rational l(0), r(0);
        for (int k = 0; k < d; ++k) l += c.delta.at(i * d + j, k) * c.alpha.at(k, x);
        for (int p = 0; p < d; ++p)
          for (int q = 0; q < d; ++q)
            r += c.alpha.at(i, p) * c.alpha.at(j, q) * c.delta.at(p * d + q, x);
        lhs.at(i * d + j, x) = std::move(l);
        rhs.at(i * d + j, x) = std::move(r);
      }
  return CheckReport::make("comultiplicativity", std::move(lhs), std::move(rhs));
}

CheckReport oracle_hom_coassociativity(const HomCoalgebra& c) {
  const int d = c.dim;
  LinearMap lhs(d * d * d, d), rhs(d * d * d, d);
  // sum alpha(x_1) (x) x_21 (x) x_22  vs  sum x_11 (x) x_12 (x) alpha(x_2)
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        const int row = (i * d + j) * d + k;
        for (int x = 0; x < d; ++x) {
          Rational l(0), r(0);
          for (int p = 0; p < d; ++p)
            for (int q = 0; q < d; ++q) {
              const Rational& top = c.delta.at(p * d + q, x);
              if (top.is_zero()) continue;
              l += top * c.alpha.at(i, p) * c.delta.at(j * d + k, q);
              r += top * c.delta.at(i * d + j, p) * c.alpha.at(k, q);
            }
          lhs.at(row, x) = std::move(l);
          rhs.at(row, x) = std::move(r);
        }
      }
  return CheckReport::make("hom_coassociativity", std::move(lhs), std::move(rhs));
}

CheckReport oracle_multiplicativity(const HomAlgebra& a) {
  const int d = a.dim;
  LinearMap lhs(d, d * d), rhs(d, d * d);
  // alpha(xy) vs alpha(x)alpha(y)
  for (int out = 0; out < d; ++out)
    for (int x = 0; x < d; ++x)
      for (int y = 0; y < d; ++y) {
        Rational l(0), r(0);
        for (int k = 0; k < d; ++k) l += a.alpha.at(out, k) * a.mu.at(k, x * d + y);
        for (int p = 0; p < d; ++p)
          for (int q = 0; q < d; ++q)
            r += a.mu.at(out, p * d + q) * a.alpha.at(p, x) * a.alpha.at(q, y);
        lhs.at(out, x * d + y) = std::move(l);
        rhs.at(out, x * d + y) = std::move(r);
      }
  return CheckReport::make("multiplicativity", std::move(lhs), std::move(rhs));
}

CheckReport oracle_hom_associativity(const HomAlgebra& a) {
  const int d = a.dim;
  LinearMap lhs(d, d * d * d), rhs(d, d * d * d);
  // alpha(x)(yz) vs (xy)alpha(z)
  for (int out = 0; out < d; ++out)
    for (int x = 0; x < d; ++x)
      for (int y = 0; y < d; ++y)
        for (int z = 0; z < d; ++z) {
          const int col = (x * d + y) * d + z;
          Rational l(0), r(0);
          for (int p = 0; p < d; ++p)
            for (int q = 0; q < d; ++q) {
              const Rational& glue = a.mu.at(out, p * d + q);
              if (glue.is_zero()) continue;
              l += a.alpha.at(p, x) * a.mu.at(q, y * d + z) * glue;
              r += a.mu.at(p, x * d + y) * a.alpha.at(q, z) * glue;
            }
          lhs.at(out, col) = std::move(l);
          rhs.at(out, col) = std::move(r);
        }
  return CheckReport::make("hom_associativity", std::move(lhs), std::move(rhs));
}

CheckReport oracle_bialgebra_compat(const HomBialgebra& h) {
  const int d = h.dim;
  LinearMap lhs(d * d, d * d), rhs(d * d, d * d);
  // Delta(xy) vs sum x_1 y_1 (x) x_2 y_2
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y) {
          Rational l(0), r(0);
          for (int k = 0; k < d; ++k) l += h.delta.at(i * d + j, k) * h.mu.at(k, x * d + y);
          for (int p = 0; p < d; ++p)
            for (int q = 0; q < d; ++q) {
              const Rational& dx = h.delta.at(p * d + q, x);
              if (dx.is_zero()) continue;
              for (int r2 = 0; r2 < d; ++r2)
                for (int s = 0; s < d; ++s)
                  r += dx * h.delta.at(r2 * d + s, y) * h.mu.at(i, p * d + r2) *
                       h.mu.at(j, q * d + s);
            }
          lhs.at(i * d + j, x * d + y) = std::move(l);
          rhs.at(i * d + j, x * d + y) = std::move(r);
        }
  return CheckReport::make("bialgebra_compat", std::move(lhs), std::move(rhs));
}

CheckReport oracle_comodule_morphism_axiom(const Comodule& m, const HomCoalgebra& host) {
  if (m.host_dim != host.dim) throw DimensionMismatch("oracle: comodule host_dim != host dim");
  const int dh = host.dim, dm = m.m_dim;
  LinearMap lhs(dh * dm, dm), rhs(dh * dm, dm);
  // sum alpha_M(x)_(-1) (x) alpha_M(x)_(0)  vs  sum alpha_H(x_(-1)) (x) alpha_M(x_(0))
  for (int h = 0; h < dh; ++h)
    for (int n = 0; n < dm; ++n)
      for (int x = 0; x < dm; ++x) {
        Rational l(0), r(0);
        for (int k = 0; k < dm; ++k) l += m.delta.at(h * dm + n, k) * m.alpha_m.at(k, x);
        for (int p = 0; p < dh; ++p)
          for (int q = 0; q < dm; ++q)
            r += host.alpha.at(h, p) * m.alpha_m.at(n, q) * m.delta.at(p * dm + q, x);
        lhs.at(h * dm + n, x) = std::move(l);
        rhs.at(h * dm + n, x) = std::move(r);
      }
  return CheckReport::make("comodule_morphism", std::move(lhs), std::move(rhs));
}

CheckReport oracle_comodule_axiom(const Comodule& m, const HomCoalgebra& host) {
  if (m.host_dim != host.dim) throw DimensionMismatch("oracle: comodule host_dim != host dim");
  const int dh = host.dim, dm = m.m_dim;
  LinearMap lhs(dh * dh * dm, dm), rhs(dh * dh * dm, dm);
  // sum alpha_H(x_(-1)) (x) x_(0)(-1) (x) x_(0)(0)
  //   vs sum (x_(-1))_1 (x) (x_(-1))_2 (x) alpha_M(x_(0))
  for (int h = 0; h < dh; ++h)
    for (int k = 0; k < dh; ++k)
      for (int n = 0; n < dm; ++n) {
        const int row = (h * dh + k) * dm + n;
        for (int x = 0; x < dm; ++x) {
          Rational l(0), r(0);
          for (int p = 0; p < dh; ++p)
            for (int q = 0; q < dm; ++q) {
              const Rational& leg = m.delta.at(p * dm + q, x);
              if (leg.is_zero()) continue;
              l += leg * host.alpha.at(h, p) * m.delta.at(k * dm + n, q);
              r += leg * host.delta.at(h * dh + k, p) * m.alpha_m.at(n, q);
            }
          lhs.at(row, x) = std::move(l);
          rhs.at(row, x) = std::move(r);
        }
      }
  return CheckReport::make("comodule_axiom", std::move(lhs), std::move(rhs));
}

CheckReport oracle_bundle_axiom(const Bundle& b) {
  const int dh = b.host.dim, dc = b.coalg.dim;
  // alpha_H^2 by direct summation
  LinearMap alpha_sq(dh, dh);
  for (int i = 0; i < dh; ++i)
    for (int j = 0; j < dh; ++j) {
      Rational s(0);
      for (int t = 0; t < dh; ++t) s += b.host.alpha.at(i, t) * b.host.alpha.at(t, j);
      alpha_sq.at(i, j) = std::move(s);
    }
  LinearMap lhs(dh * dc * dc, dc), rhs(dh * dc * dc, dc);
  // sum alpha_H^2(x_(-1)) (x) x_(0)1 (x) x_(0)2
  //   vs sum x_1(-1) x_2(-1) (x) x_1(0) (x) x_2(0)
  for (int h = 0; h < dh; ++h)
    for (int i = 0; i < dc; ++i)
      for (int j = 0; j < dc; ++j) {
        const int row = (h * dc + i) * dc + j;
        for (int x = 0; x < dc; ++x) {
          Rational l(0), r(0);
          for (int p = 0; p < dh; ++p)
            for (int q = 0; q < dc; ++q) {
              const Rational& leg = b.coaction.delta.at(p * dc + q, x);
              if (leg.is_zero()) continue;
              l += leg * alpha_sq.at(h, p) * b.coalg.delta.at(i * dc + j, q);
            }
          for (int u = 0; u < dc; ++u)
            for (int v = 0; v < dc; ++v) {
              const Rational& split = b.coalg.delta.at(u * dc + v, x);
              if (split.is_zero()) continue;
              for (int p = 0; p < dh; ++p)
                for (int q = 0; q < dh; ++q)
                  r += split * b.coaction.delta.at(p * dc + i, u) *
                       b.coaction.delta.at(q * dc + j, v) * b.host.mu.at(h, p * dh + q);
            }
          lhs.at(row, x) = std::move(l);
          rhs.at(row, x) = std::move(r);
        }
      }
  return CheckReport::make("bundle_axiom", std::move(lhs), std::move(rhs));
}

CheckReport oracle_comodule_morphism(const LinearMap& f, const Comodule& m, const Comodule& n) {
  if (m.host_dim != n.host_dim) throw DimensionMismatch("oracle: hosts have different dims");
  if (f.domain_dim() != m.m_dim || f.codomain_dim() != n.m_dim)
    throw DimensionMismatch("oracle: morphism shape mismatch");
  const int dh = m.host_dim, dm = m.m_dim, dn = n.m_dim;
  LinearMap lhs(dh * dn + dn, dm), rhs(dh * dn + dn, dm);
  // top block: sum f(x)_(-1) (x) f(x)_(0)  vs  sum x_(-1) (x) f(x_(0))
  for (int h = 0; h < dh; ++h)
    for (int nn = 0; nn < dn; ++nn)
      for (int x = 0; x < dm; ++x) {
        Rational l(0), r(0);
        for (int k = 0; k < dn; ++k) l += n.delta.at(h * dn + nn, k) * f.at(k, x);
        for (int q = 0; q < dm; ++q) r += m.delta.at(h * dm + q, x) * f.at(nn, q);
        lhs.at(h * dn + nn, x) = std::move(l);
        rhs.at(h * dn + nn, x) = std::move(r);
      }
  // bottom block: f . alpha_M vs alpha_N . f
  for (int nn = 0; nn < dn; ++nn)
    for (int x = 0; x < dm; ++x) {
      Rational l(0), r(0);
      for (int k = 0; k < dm; ++k) l += f.at(nn, k) * m.alpha_m.at(k, x);
      for (int k = 0; k < dn; ++k) r += n.alpha_m.at(nn, k) * f.at(k, x);
      lhs.at(dh * dn + nn, x) = std::move(l);
      rhs.at(dh * dn + nn, x) = std::move(r);
    }
  return CheckReport::make("colinearity", std::move(lhs), std::move(rhs));
}

namespace {

[[noreturn]] void unknown(const std::string& axiom_id, const std::string& kind,
                          const std::string& valid) {
  throw UnknownAxiom("'" + axiom_id + "' does not name an axiom of a " + kind +
                     " (valid: " + valid + ")");
}

}  // namespace

CheckReport oracle_evaluate(const std::string& axiom_id, const HomCoalgebra& c) {
  if (axiom_id == "comultiplicativity") return oracle_comultiplicativity(c);
  if (axiom_id == "hom_coassociativity") return oracle_hom_coassociativity(c);
  unknown(axiom_id, "coalgebra", "comultiplicativity, hom_coassociativity");
}

CheckReport oracle_evaluate(const std::string& axiom_id, const HomAlgebra& a) {
  if (axiom_id == "multiplicativity") return oracle_multiplicativity(a);
  if (axiom_id == "hom_associativity") return oracle_hom_associativity(a);
  unknown(axiom_id, "algebra", "multiplicativity, hom_associativity");
}

CheckReport oracle_evaluate(const std::string& axiom_id, const HomBialgebra& h) {
  if (axiom_id == "multiplicativity" || axiom_id == "hom_associativity")
    return oracle_evaluate(axiom_id, h.algebra_part());
  if (axiom_id == "comultiplicativity" || axiom_id == "hom_coassociativity")
    return oracle_evaluate(axiom_id, h.coalgebra_part());
  if (axiom_id == "bialgebra_compat") return oracle_bialgebra_compat(h);
  unknown(axiom_id, "bialgebra",
          "multiplicativity, hom_associativity, comultiplicativity, hom_coassociativity, "
          "bialgebra_compat");
}

CheckReport oracle_evaluate(const std::string& axiom_id, const Comodule& m,
                            const HomCoalgebra& host) {
  if (axiom_id == "comodule_morphism") return oracle_comodule_morphism_axiom(m, host);
  if (axiom_id == "comodule_axiom") return oracle_comodule_axiom(m, host);
  unknown(axiom_id, "comodule", "comodule_morphism, comodule_axiom");
}

CheckReport oracle_evaluate(const std::string& axiom_id, const Bundle& b) {
  if (axiom_id == "bundle_axiom") return oracle_bundle_axiom(b);
  if (axiom_id == "comodule_morphism" || axiom_id == "comodule_axiom")
    return oracle_evaluate(axiom_id, b.coaction, b.host.coalgebra_part());
  unknown(axiom_id, "bundle", "bundle_axiom, comodule_morphism, comodule_axiom");
}

std::vector<CheckReport> oracle_validate_coalgebra(const HomCoalgebra& c) {
  return {oracle_comultiplicativity(c), oracle_hom_coassociativity(c)};
}

std::vector<CheckReport> oracle_validate_algebra(const HomAlgebra& a) {
  return {oracle_multiplicativity(a), oracle_hom_associativity(a)};
}

std::vector<CheckReport> oracle_validate_bialgebra(const HomBialgebra& h) {
  std::vector<CheckReport> reports = oracle_validate_algebra(h.algebra_part());
  for (auto& r : oracle_validate_coalgebra(h.coalgebra_part())) reports.push_back(std::move(r));
  reports.push_back(oracle_bialgebra_compat(h));
  return reports;
}

std::vector<CheckReport> oracle_validate_comodule(const Comodule& m, const HomCoalgebra& host) {
  return {oracle_comodule_morphism_axiom(m, host), oracle_comodule_axiom(m, host)};
}

std::vector<CheckReport> oracle_validate_bundle(const Bundle& b) {
  std::vector<CheckReport> reports = oracle_validate_bialgebra(b.host);
  for (auto& r : oracle_validate_coalgebra(b.coalg)) reports.push_back(std::move(r));
  for (auto& r : oracle_validate_comodule(b.coaction, b.host.coalgebra_part()))
    reports.push_back(std::move(r));
  reports.push_back(oracle_bundle_axiom(b));
  return reports;
}

}  // namespace homtwist
