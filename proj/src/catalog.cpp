#include "homtwist/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <utility>

#include "homtwist/checks.hpp"
#include "homtwist/errors.hpp"

namespace homtwist {
namespace catalog {

GroupTable GroupTable::trivial() { return GroupTable{1, {{0}}, 0}; }

GroupTable GroupTable::cyclic(int n) {
  if (n < 1) throw NotAGroup("cyclic group order must be positive");
  std::vector<std::vector<int>> product(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) product[a][b] = (a + b) % n;
  return GroupTable{n, std::move(product), 0};
}

void GroupTable::validate() const {
  if (order <= 0) throw NotAGroup("order must be positive");
  if (static_cast<int>(product.size()) != order) throw NotAGroup("product table has wrong height");
  for (const auto& row : product) {
    if (static_cast<int>(row.size()) != order) throw NotAGroup("product table has wrong width");
    for (int x : row)
      if (x < 0 || x >= order) throw NotAGroup("product table entry out of range");
  }
  if (identity_index < 0 || identity_index >= order) throw NotAGroup("identity index out of range");
  const int e = identity_index;
  for (int a = 0; a < order; ++a)
    if (product[e][a] != a || product[a][e] != a)
      throw NotAGroup("identity element does not act as identity");
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b)
      for (int c = 0; c < order; ++c)
        if (product[product[a][b]][c] != product[a][product[b][c]])
          throw NotAGroup("product table is not associative");
  for (int a = 0; a < order; ++a) {
    bool has_inverse = false;
    for (int b = 0; b < order; ++b)
      if (product[a][b] == e && product[b][a] == e) {
        has_inverse = true;
        break;
      }
    if (!has_inverse) throw NotAGroup("element " + std::to_string(a) + " has no inverse");
  }
}

HomBialgebra group_bialgebra(const GroupTable& g) {
  g.validate();
  const int n = g.order;
  LinearMap mu(n, n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) mu.at(g.product[a][b], a * n + b) = Rational(1);
  LinearMap delta(n * n, n);
  for (int b = 0; b < n; ++b) delta.at(b * n + b, b) = Rational(1);
  std::vector<Rational> unit(static_cast<size_t>(n), Rational(0));
  unit[static_cast<size_t>(g.identity_index)] = Rational(1);
  return HomBialgebra(n, std::move(mu), std::move(delta), identity(n), std::move(unit));
}

GradedCoalgebraSpec GradedCoalgebraSpec::convolution(const GroupTable& g) {
  GradedCoalgebraSpec spec;
  spec.group = g;
  spec.component_dims.assign(static_cast<size_t>(g.order), 1);
  spec.comultiplication.resize(static_cast<size_t>(g.order));
  for (int target = 0; target < g.order; ++target) {
    std::vector<GradedTerm> terms;
    for (int h = 0; h < g.order; ++h)
      for (int k = 0; k < g.order; ++k)
        if (g.product[h][k] == target) terms.push_back(GradedTerm{h, 0, k, 0, Rational(1)});
    spec.comultiplication[static_cast<size_t>(target)] = {std::move(terms)};
  }
  return spec;
}

int GradedCoalgebraSpec::total_dim() const {
  int total = 0;
  for (int d : component_dims) total += d;
  return total;
}

int GradedCoalgebraSpec::basis_index(int g, int t) const {
  int offset = 0;
  for (int i = 0; i < g; ++i) offset += component_dims[static_cast<size_t>(i)];
  return offset + t;
}

Bundle graded_coalgebra_bundle(const GradedCoalgebraSpec& spec) {
  spec.group.validate();
  const int order = spec.group.order;
  if (static_cast<int>(spec.component_dims.size()) != order)
    throw GradingViolation("component_dims must list one dimension per group element");
  for (int d : spec.component_dims)
    if (d < 0) throw GradingViolation("component dimensions cannot be negative");
  if (static_cast<int>(spec.comultiplication.size()) != order)
    throw GradingViolation("comultiplication must cover every group element");
  const int dim = spec.total_dim();
  if (dim <= 0) throw GradingViolation("graded coalgebra must have positive total dimension");

  LinearMap delta(dim * dim, dim);
  for (int g = 0; g < order; ++g) {
    const auto& rows = spec.comultiplication[static_cast<size_t>(g)];
    if (static_cast<int>(rows.size()) != spec.component_dims[static_cast<size_t>(g)])
      throw GradingViolation("comultiplication of component " + std::to_string(g) +
                             " must give one entry per local basis vector");
    for (int t = 0; t < static_cast<int>(rows.size()); ++t) {
      for (const GradedTerm& term : rows[static_cast<size_t>(t)]) {
        if (term.h < 0 || term.h >= order || term.k < 0 || term.k >= order)
          throw GradingViolation("comultiplication term uses an unknown group element");
        if (spec.group.product[term.h][term.k] != g)
          throw GradingViolation("comultiplication term of degree " + std::to_string(g) +
                                 " lands in degrees (" + std::to_string(term.h) + ", " +
                                 std::to_string(term.k) + ") whose product differs");
        if (term.i < 0 || term.i >= spec.component_dims[static_cast<size_t>(term.h)] ||
            term.j < 0 || term.j >= spec.component_dims[static_cast<size_t>(term.k)])
          throw GradingViolation("comultiplication term local index out of range");
        const int row = spec.basis_index(term.h, term.i) * dim + spec.basis_index(term.k, term.j);
        delta.at(row, spec.basis_index(g, t)) += term.coeff;
      }
    }
  }

  HomCoalgebra coalg(dim, std::move(delta), identity(dim));
  if (!check_hom_coassociativity(coalg).holds)
    throw GradingViolation("assembled comultiplication is not coassociative");

  HomBialgebra host = group_bialgebra(spec.group);
  LinearMap coaction_delta(order * dim, dim);
  for (int g = 0; g < order; ++g)
    for (int t = 0; t < spec.component_dims[static_cast<size_t>(g)]; ++t) {
      const int c = spec.basis_index(g, t);
      coaction_delta.at(g * dim + c, c) = Rational(1);
    }
  Comodule coaction(order, dim, identity(dim), std::move(coaction_delta));
  Bundle bundle(std::move(host), std::move(coalg), std::move(coaction));
  if (!bundle_valid(bundle)) throw GradingViolation("assembled graded bundle failed validation");
  return bundle;
}

HomCoalgebra comatrix_coalgebra(int n) {
  if (n < 1) throw DimensionMismatch("comatrix coalgebra needs n >= 1");
  const int dim = n * n;
  LinearMap delta(dim * dim, dim);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const int left = i * n + k, right = k * n + j;
        delta.at(left * dim + right, i * n + j) = Rational(1);
      }
  return HomCoalgebra(dim, std::move(delta), identity(dim));
}

Bundle trivial_coaction_bundle(const HomCoalgebra& c, const HomBialgebra& h) {
  if (!c.alpha.is_identity() || !h.alpha.is_identity())
    throw InvalidClassicalBundle("trivial coaction requires classical structures (alpha = id)");
  if (!h.unit_vector) throw NoUnit("host bialgebra carries no unit vector");
  const auto& u = *h.unit_vector;
  const int n = h.dim;

  // mu(u (x) u) = u
  std::vector<Rational> square(static_cast<size_t>(n), Rational(0));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const Rational w = u[static_cast<size_t>(a)] * u[static_cast<size_t>(b)];
      if (w.is_zero()) continue;
      for (int k = 0; k < n; ++k) square[static_cast<size_t>(k)] += w * h.mu.at(k, a * n + b);
    }
  if (square != u) throw NoUnit("unit vector is not idempotent under mu");

  // Delta(u) = u (x) u
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      Rational lhs(0);
      for (int k = 0; k < n; ++k) lhs += h.delta.at(p * n + q, k) * u[static_cast<size_t>(k)];
      if (lhs != u[static_cast<size_t>(p)] * u[static_cast<size_t>(q)])
        throw NoUnit("unit vector is not group-like under Delta");
    }

  LinearMap coaction_delta(n * c.dim, c.dim);
  for (int x = 0; x < c.dim; ++x)
    for (int k = 0; k < n; ++k)
      coaction_delta.at(k * c.dim + x, x) = u[static_cast<size_t>(k)];
  Comodule coaction(n, c.dim, c.alpha, std::move(coaction_delta));
  Bundle bundle(h, c, std::move(coaction));
  if (!bundle_valid(bundle))
    throw InvalidClassicalBundle("trivial coaction bundle failed validation");
  return bundle;
}

namespace {

// One enumeration constraint: becomes decidable once all columns up to
// last_needed are assigned.
struct ColumnConstraint {
  int last_needed;
  std::function<bool(const LinearMap&)> holds;
};

void enumeration_guard(int dim, int entry_range, long double extra_candidates = 0.0L) {
  if (entry_range < 0) throw SearchSpaceTooLarge("entry range must be nonnegative");
  const long double width = 2.0L * entry_range + 1.0L;
  const long double candidates =
      std::pow(width, static_cast<long double>(dim) * dim) + extra_candidates;
  if (candidates > 1e8L)
    throw SearchSpaceTooLarge("enumeration would visit more than 1e8 candidates");
}

void enumerate_from_column(int dim, int range, const std::vector<ColumnConstraint>& constraints,
                           LinearMap& work, int col, std::vector<LinearMap>& out) {
  if (col == dim) {
    out.push_back(work);
    return;
  }
  std::vector<int> v(static_cast<size_t>(dim), -range);
  while (true) {
    for (int r = 0; r < dim; ++r) work.at(r, col) = Rational(v[static_cast<size_t>(r)]);
    bool ok = true;
    for (const auto& c : constraints)
      if (c.last_needed == col && !c.holds(work)) {
        ok = false;
        break;
      }
    if (ok) enumerate_from_column(dim, range, constraints, work, col + 1, out);
    size_t i = 0;
    while (i < v.size() && v[i] == range) {
      v[i] = -range;
      ++i;
    }
    if (i == v.size()) break;
    ++v[i];
  }
}

std::vector<LinearMap> enumerate_matrices(int dim, int range,
                                          std::vector<ColumnConstraint> constraints) {
  // Degenerate range: the all-zero matrix is the single candidate.
  std::vector<LinearMap> out;
  LinearMap work(dim, dim);
  enumerate_from_column(dim, range, constraints, work, 0, out);
  std::sort(out.begin(), out.end(), [](const LinearMap& a, const LinearMap& b) {
    return std::lexicographical_compare(a.entries().begin(), a.entries().end(),
                                        b.entries().begin(), b.entries().end());
  });
  return out;
}

// Delta . phi (e_x) = (phi (x) phi) . Delta (e_x), one constraint per basis
// vector x, checkable once column x and every column in supp(Delta e_x) exist.
std::vector<ColumnConstraint> coalgebra_constraints(const HomCoalgebra& c) {
  const int d = c.dim;
  std::vector<ColumnConstraint> constraints;
  for (int x = 0; x < d; ++x) {
    int last = x;
    for (int p = 0; p < d; ++p)
      for (int q = 0; q < d; ++q)
        if (!c.delta.at(p * d + q, x).is_zero()) last = std::max({last, p, q});
    const LinearMap& delta = c.delta;
    constraints.push_back(ColumnConstraint{
        last, [x, d, &delta](const LinearMap& phi) {
          for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
              Rational lhs(0), rhs(0);
              for (int k = 0; k < d; ++k) lhs += delta.at(i * d + j, k) * phi.at(k, x);
              for (int p = 0; p < d; ++p)
                for (int q = 0; q < d; ++q) {
                  const Rational& w = delta.at(p * d + q, x);
                  if (w.is_zero()) continue;
                  rhs += w * phi.at(i, p) * phi.at(j, q);
                }
              if (lhs != rhs) return false;
            }
          return true;
        }});
  }
  return constraints;
}

// phi(mu(e_x (x) e_y)) = mu(phi e_x (x) phi e_y), one constraint per pair.
std::vector<ColumnConstraint> algebra_constraints(const HomAlgebra& a) {
  const int d = a.dim;
  std::vector<ColumnConstraint> constraints;
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y) {
      int last = std::max(x, y);
      for (int k = 0; k < d; ++k)
        if (!a.mu.at(k, x * d + y).is_zero()) last = std::max(last, k);
      const LinearMap& mu = a.mu;
      constraints.push_back(ColumnConstraint{
          last, [x, y, d, &mu](const LinearMap& phi) {
            for (int out = 0; out < d; ++out) {
              Rational lhs(0), rhs(0);
              for (int k = 0; k < d; ++k) lhs += phi.at(out, k) * mu.at(k, x * d + y);
              for (int p = 0; p < d; ++p)
                for (int q = 0; q < d; ++q) {
                  const Rational& w = mu.at(out, p * d + q);
                  if (w.is_zero()) continue;
                  rhs += w * phi.at(p, x) * phi.at(q, y);
                }
              if (lhs != rhs) return false;
            }
            return true;
          }});
    }
  return constraints;
}

}  // namespace

std::vector<LinearMap> coalgebra_endomorphism_search(const HomCoalgebra& c, int entry_range) {
  enumeration_guard(c.dim, entry_range);
  return enumerate_matrices(c.dim, entry_range, coalgebra_constraints(c));
}

std::vector<LinearMap> bialgebra_endomorphism_search(const HomBialgebra& h, int entry_range) {
  enumeration_guard(h.dim, entry_range);
  const HomAlgebra alg = h.algebra_part();
  const HomCoalgebra coalg = h.coalgebra_part();
  std::vector<ColumnConstraint> constraints = coalgebra_constraints(coalg);
  for (auto& c : algebra_constraints(alg)) constraints.push_back(std::move(c));
  return enumerate_matrices(h.dim, entry_range, std::move(constraints));
}

std::vector<DeformationInput> endomorphism_search(const Bundle& bundle, int entry_range) {
  if (!bundle.host.alpha.is_identity() || !bundle.coalg.alpha.is_identity())
    throw InvalidClassicalBundle("endomorphism search requires a classical bundle");
  if (!bundle_valid(bundle))
    throw InvalidClassicalBundle("endomorphism search requires a valid classical bundle");
  const long double width = 2.0L * entry_range + 1.0L;
  const long double host_pool =
      std::pow(width, static_cast<long double>(bundle.host.dim) * bundle.host.dim);
  enumeration_guard(bundle.coalg.dim, entry_range, host_pool);

  std::vector<LinearMap> hosts = bialgebra_endomorphism_search(bundle.host, entry_range);
  std::vector<LinearMap> coalgs = coalgebra_endomorphism_search(bundle.coalg, entry_range);
  std::vector<DeformationInput> results;
  for (const LinearMap& ah : hosts)
    for (const LinearMap& ac : coalgs) {
      if (compose(bundle.coaction.delta, ac) == compose(kron(ah, ac), bundle.coaction.delta))
        results.push_back(DeformationInput{bundle, ah, ac});
    }
  return results;
}

std::vector<HomBialgebra> group_bialgebras() {
  return {group_bialgebra(GroupTable::trivial()), group_bialgebra(GroupTable::cyclic(2)),
          group_bialgebra(GroupTable::cyclic(3))};
}

std::vector<Bundle> classical_bundles() {
  std::vector<Bundle> bundles;
  bundles.push_back(graded_coalgebra_bundle(
      GradedCoalgebraSpec::convolution(GroupTable::cyclic(2))));
  bundles.push_back(graded_coalgebra_bundle(
      GradedCoalgebraSpec::convolution(GroupTable::cyclic(3))));
  bundles.push_back(trivial_coaction_bundle(comatrix_coalgebra(1),
                                            group_bialgebra(GroupTable::trivial())));
  bundles.push_back(trivial_coaction_bundle(comatrix_coalgebra(2),
                                            group_bialgebra(GroupTable::cyclic(2))));
  return bundles;
}

std::vector<HomCoalgebra> classical_coalgebras() {
  std::vector<HomCoalgebra> coalgebras;
  auto add = [&coalgebras](HomCoalgebra c) {
    if (std::find(coalgebras.begin(), coalgebras.end(), c) == coalgebras.end())
      coalgebras.push_back(std::move(c));
  };
  for (const Bundle& b : classical_bundles()) add(b.coalg);
  add(comatrix_coalgebra(1));
  add(comatrix_coalgebra(2));
  for (const HomBialgebra& h : group_bialgebras()) add(h.coalgebra_part());
  return coalgebras;
}

NegativeControls negative_controls() {
  const Bundle graded = graded_coalgebra_bundle(
      GradedCoalgebraSpec::convolution(GroupTable::cyclic(2)));
  const HomBialgebra z2 = group_bialgebra(GroupTable::cyclic(2));

  // Upper-triangular alpha breaks Delta . alpha = (alpha (x) alpha) . Delta.
  HomCoalgebra comult_fail(2, graded.coalg.delta,
                           LinearMap::from_rows({{1, 1}, {0, 1}}));

  // Zero one term of Delta(x1); the truncated coproduct is no longer
  // coassociative.
  LinearMap chopped = graded.coalg.delta;
  chopped.at(0 * 2 + 1, 1) = Rational(0);  // drop the x0 (x) x1 leg
  HomCoalgebra coassoc_fail(2, std::move(chopped), identity(2));

  HomAlgebra mult_fail(2, z2.mu, LinearMap::from_rows({{1, 0}, {1, 1}}));

  // Kill the e*e structure constant: (e e) g = 0 while e (e g) = g.
  LinearMap broken_mu = z2.mu;
  broken_mu.at(0, 0) = Rational(0);
  HomAlgebra assoc_fail(2, std::move(broken_mu), identity(2));

  // Delta(g) = 2 g (x) g stays coassociative but Delta(g g) = e (x) e while
  // Delta(g) Delta(g) = 4 e (x) e.
  LinearMap scaled_delta(4, 2);
  scaled_delta.at(0, 0) = Rational(1);  // Delta(e) = e (x) e
  scaled_delta.at(3, 1) = Rational(2);  // Delta(g) = 2 g (x) g
  HomBialgebra compat_fail(2, z2.mu, std::move(scaled_delta), identity(2));

  // Adding an e (x) x1 leg to delta(x1) breaks the coassociativity-style
  // comodule axiom while the morphism condition stays trivially true.
  LinearMap spread = graded.coaction.delta;
  spread.at(0 * 2 + 1, 1) = Rational(1);  // delta(x1) = (e + g) (x) x1
  Comodule comodule_fail(2, 2, identity(2), std::move(spread));

  // Zeroing delta(x1) keeps both comodule axioms (everything vanishes) but
  // the bundle axiom now sees Delta(x0) split through dead legs.
  LinearMap truncated = graded.coaction.delta;
  truncated.at(1 * 2 + 1, 1) = Rational(0);
  Comodule truncated_coaction(2, 2, identity(2), std::move(truncated));
  Bundle bundle_fail(graded.host, graded.coalg, std::move(truncated_coaction));

  LinearMap degree_swap = LinearMap::from_rows({{0, 1}, {1, 0}});

  return NegativeControls{std::move(comult_fail), std::move(coassoc_fail),
                          std::move(mult_fail),   std::move(assoc_fail),
                          std::move(compat_fail), std::move(comodule_fail),
                          std::move(bundle_fail), std::move(degree_swap)};
}

}  // namespace catalog
}  // namespace homtwist
