#include <doctest.h>

#include <random>

#include "homtwist/catalog.hpp"
#include "homtwist/checks.hpp"
#include "homtwist/constructions.hpp"
#include "homtwist/errors.hpp"
#include "test_helpers.hpp"

using namespace homtwist;
using catalog::GradedCoalgebraSpec;
using catalog::GroupTable;

namespace {

Bundle z2_graded() {
  return catalog::graded_coalgebra_bundle(GradedCoalgebraSpec::convolution(GroupTable::cyclic(2)));
}

HomBialgebra z2_group() { return catalog::group_bialgebra(GroupTable::cyclic(2)); }

const LinearMap kSign = LinearMap::from_rows({{1, 0}, {0, -1}});

}  // namespace

TEST_SUITE("checks") {

TEST_CASE("comultiplicativity") {
  HomCoalgebra grouplike(1, LinearMap::from_rows({{1}}), LinearMap::from_rows({{1}}));
  CHECK(check_comultiplicativity(grouplike).holds);

  // graded Z/2 coproduct with the sign map as alpha: sign is an endomorphism,
  // so comultiplicativity holds even though this is not the twisted coalgebra
  HomCoalgebra signed_coalg(2, z2_graded().coalg.delta, kSign);
  CHECK(check_comultiplicativity(signed_coalg).holds);

  CheckReport bad = check_comultiplicativity(catalog::negative_controls().comultiplicativity_fail);
  CHECK(!bad.holds);
  CHECK(!bad.residual.is_zero());
  CHECK(bad.worst_entry > Rational(0));
}

TEST_CASE("hom_coassociativity") {
  // classical coassociative + identity alpha reduces to coassociativity
  CHECK(check_hom_coassociativity(z2_graded().coalg).holds);
  CHECK(check_hom_coassociativity(catalog::comatrix_coalgebra(2)).holds);

  // Yau twist by the sign endomorphism
  HomCoalgebra twisted = yau_twist_coalgebra(z2_graded().coalg, kSign);
  CHECK(check_hom_coassociativity(twisted).holds);
  CHECK(check_comultiplicativity(twisted).holds);

  // the untwisted coproduct paired with the sign map is NOT Hom-coassociative
  HomCoalgebra signed_coalg(2, z2_graded().coalg.delta, kSign);
  CHECK(!check_hom_coassociativity(signed_coalg).holds);

  CHECK(!check_hom_coassociativity(catalog::negative_controls().hom_coassociativity_fail).holds);
}

TEST_CASE("multiplicativity") {
  HomBialgebra z2 = z2_group();
  CHECK(check_multiplicativity(z2.algebra_part()).holds);

  // alpha induced by the group map g -> e
  LinearMap collapse = LinearMap::from_rows({{1, 1}, {0, 0}});
  CHECK(check_multiplicativity(HomAlgebra(2, z2.mu, collapse)).holds);

  CHECK(!check_multiplicativity(catalog::negative_controls().multiplicativity_fail).holds);
}

TEST_CASE("hom_associativity") {
  HomBialgebra z2 = z2_group();
  CHECK(check_hom_associativity(z2.algebra_part()).holds);

  // Yau twist mu_alpha = alpha . mu by the collapse endomorphism
  LinearMap collapse = LinearMap::from_rows({{1, 1}, {0, 0}});
  HomAlgebra twisted(2, compose(collapse, z2.mu), collapse);
  CHECK(check_hom_associativity(twisted).holds);
  CHECK(check_multiplicativity(twisted).holds);

  CHECK(!check_hom_associativity(catalog::negative_controls().hom_associativity_fail).holds);
}

TEST_CASE("bialgebra_compat") {
  HomBialgebra z2 = z2_group();
  CHECK(check_bialgebra_compat(z2).holds);

  LinearMap collapse = LinearMap::from_rows({{1, 1}, {0, 0}});
  CHECK(check_bialgebra_compat(yau_twist_bialgebra(z2, collapse)).holds);

  // Delta(g) = g (x) e is an algebra morphism in the counit-free setting, so
  // compatibility HOLDS for it; only a counit axiom would reject it.
  LinearMap lopsided(4, 2);
  lopsided.at(0, 0) = Rational(1);
  lopsided.at(2, 1) = Rational(1);
  CHECK(check_bialgebra_compat(HomBialgebra(2, z2.mu, lopsided, identity(2))).holds);

  // the genuine negative control: Delta(g) = 2 g (x) g fails compatibility
  // and nothing else
  HomBialgebra bad = catalog::negative_controls().bialgebra_compat_fail;
  CHECK(!check_bialgebra_compat(bad).holds);
  CHECK(check_multiplicativity(bad.algebra_part()).holds);
  CHECK(check_hom_associativity(bad.algebra_part()).holds);
  CHECK(check_comultiplicativity(bad.coalgebra_part()).holds);
  CHECK(check_hom_coassociativity(bad.coalgebra_part()).holds);
}

TEST_CASE("comodule checks") {
  Bundle graded = z2_graded();
  const HomCoalgebra host = graded.host.coalgebra_part();

  auto [morphism, axiom] = check_comodule(graded.coaction, host);
  CHECK(morphism.holds);
  CHECK(axiom.holds);

  // trivial coaction delta(c) = e (x) c over the group bialgebra
  Bundle trivial = catalog::trivial_coaction_bundle(graded.coalg, graded.host);
  auto [tm, ta] = check_comodule(trivial.coaction, host);
  CHECK(tm.holds);
  CHECK(ta.holds);

  // delta(x1) = (e + g) (x) x1 breaks the structure axiom but not the
  // morphism condition
  auto [nm, na] = check_comodule(catalog::negative_controls().comodule_axiom_fail, host);
  CHECK(nm.holds);
  CHECK(!na.holds);

  CHECK_THROWS_AS(check_comodule(graded.coaction, catalog::comatrix_coalgebra(2)),
                  DimensionMismatch);
}

TEST_CASE("comodule morphism check") {
  Bundle graded = z2_graded();
  CHECK(check_comodule_morphism(identity(2), graded.coaction, graded.coaction).holds);

  // the sign map is colinear for the graded coaction
  CHECK(check_comodule_morphism(kSign, graded.coaction, graded.coaction).holds);

  // the degree swap is not
  CheckReport swap = check_comodule_morphism(catalog::negative_controls().colinearity_fail,
                                             graded.coaction, graded.coaction);
  CHECK(!swap.holds);

  // a map failing only the underlying Hom-module block
  Comodule target(2, 2, kSign, graded.coaction.delta);
  CheckReport mixed = check_comodule_morphism(identity(2), graded.coaction, target);
  CHECK(!mixed.holds);
}

TEST_CASE("bundle axiom") {
  Bundle graded = z2_graded();
  CHECK(check_bundle_axiom(graded).holds);

  Bundle mutated = catalog::negative_controls().bundle_axiom_fail;
  CHECK(comodule_valid(mutated.coaction, mutated.host.coalgebra_part()));
  CHECK(!check_bundle_axiom(mutated).holds);

  // deformed bundle (alpha_h = id, alpha_c = sign)
  Bundle deformed = deform_bundle(DeformationInput{graded, identity(2), kSign});
  CHECK(check_bundle_axiom(deformed).holds);
}

TEST_CASE("classical reduction of hom_coassociativity") {
  // with alpha = id the check is exactly classical coassociativity
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const int dim = 1 + static_cast<int>(rng() % 3);
    LinearMap delta = testing::random_map(rng, dim * dim, dim, -1, 1);
    HomCoalgebra c(dim, delta, identity(dim));
    const bool classical =
        compose(kron(delta, identity(dim)), delta) == compose(kron(identity(dim), delta), delta);
    CHECK(check_hom_coassociativity(c).holds == classical);
  }
}

TEST_CASE("report soundness on random structures") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 50; ++trial) {
    const int dim = 1 + static_cast<int>(rng() % 3);
    HomCoalgebra c = testing::random_coalgebra(rng, dim);
    for (const CheckReport& r : validate_coalgebra(c)) {
      CHECK(r.holds == r.residual.is_zero());
      CHECK(r.holds == (r.worst_entry == Rational(0)));
      CHECK(r.residual == difference(r.lhs, r.rhs));
    }
  }
}

TEST_CASE("bundle validation is monotone") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const int dh = 1 + static_cast<int>(rng() % 2);
    const int dc = 1 + static_cast<int>(rng() % 2);
    Bundle b = testing::random_bundle(rng, dh, dc);
    const bool parts = bialgebra_valid(b.host) && coalgebra_valid(b.coalg) &&
                       comodule_valid(b.coaction, b.host.coalgebra_part()) &&
                       check_bundle_axiom(b).holds;
    CHECK(bundle_valid(b) == parts);
  }
  CHECK(bundle_valid(z2_graded()));
}

}  // TEST_SUITE
