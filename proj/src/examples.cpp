#include "homtwist/examples.hpp"

#include "homtwist/catalog.hpp"
#include "homtwist/errors.hpp"

namespace homtwist {
namespace io {

namespace {

using catalog::GradedCoalgebraSpec;
using catalog::GroupTable;

Document z2_graded_document() {
  Document doc;
  doc.structures.emplace(
      "z2_graded",
      catalog::graded_coalgebra_bundle(GradedCoalgebraSpec::convolution(GroupTable::cyclic(2))));
  doc.structures.emplace("alpha_h_identity", identity(2));
  // bialgebra endomorphism of F[Z/2] sending g to e
  doc.structures.emplace("alpha_h_collapse", LinearMap::from_rows({{1, 1}, {0, 0}}));
  doc.structures.emplace("alpha_c_sign", LinearMap::from_rows({{1, 0}, {0, -1}}));
  doc.structures.emplace("alpha_c_swap", LinearMap::from_rows({{0, 1}, {1, 0}}));
  doc.structures.emplace("alpha_c_zero", zero(2, 2));
  return doc;
}

Document z3_graded_document() {
  Document doc;
  doc.structures.emplace(
      "z3_graded",
      catalog::graded_coalgebra_bundle(GradedCoalgebraSpec::convolution(GroupTable::cyclic(3))));
  doc.structures.emplace("alpha_h_identity", identity(3));
  doc.structures.emplace("alpha_c_identity", identity(3));
  return doc;
}

Document comatrix2_document() {
  Document doc;
  doc.structures.emplace("comatrix_2", catalog::comatrix_coalgebra(2));
  // e_ij -> e_ji
  LinearMap transpose(4, 4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) transpose.at(j * 2 + i, i * 2 + j) = Rational(1);
  doc.structures.emplace("transpose", std::move(transpose));
  return doc;
}

}  // namespace

std::vector<std::string> example_names() {
  return {"trivial-group-bialgebra",  "z2-group-bialgebra", "z3-group-bialgebra",
          "z2-graded-bundle",         "z3-graded-bundle",   "comatrix-1",
          "comatrix-2",               "trivial-bundle",     "trivial-coaction-bundle",
          "z2-graded-bundle-mutated"};
}

Document example_document(const std::string& name) {
  Document doc;
  if (name == "trivial-group-bialgebra") {
    doc.structures.emplace("trivial_group", catalog::group_bialgebra(GroupTable::trivial()));
  } else if (name == "z2-group-bialgebra") {
    doc.structures.emplace("z2_group", catalog::group_bialgebra(GroupTable::cyclic(2)));
  } else if (name == "z3-group-bialgebra") {
    doc.structures.emplace("z3_group", catalog::group_bialgebra(GroupTable::cyclic(3)));
  } else if (name == "z2-graded-bundle") {
    return z2_graded_document();
  } else if (name == "z3-graded-bundle") {
    return z3_graded_document();
  } else if (name == "comatrix-1") {
    doc.structures.emplace("comatrix_1", catalog::comatrix_coalgebra(1));
  } else if (name == "comatrix-2") {
    return comatrix2_document();
  } else if (name == "trivial-bundle") {
    doc.structures.emplace(
        "trivial_bundle",
        catalog::trivial_coaction_bundle(catalog::comatrix_coalgebra(1),
                                         catalog::group_bialgebra(GroupTable::trivial())));
  } else if (name == "trivial-coaction-bundle") {
    doc.structures.emplace(
        "comatrix2_over_z2",
        catalog::trivial_coaction_bundle(catalog::comatrix_coalgebra(2),
                                         catalog::group_bialgebra(GroupTable::cyclic(2))));
  } else if (name == "z2-graded-bundle-mutated") {
    doc.structures.emplace("z2_graded_mutated", catalog::negative_controls().bundle_axiom_fail);
  } else {
    throw SchemaError("unknown example '" + name + "'");
  }
  return doc;
}

}  // namespace io
}  // namespace homtwist
