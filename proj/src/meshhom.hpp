// Hom dimensions in mesh categories.
//
// Two independent routes are kept deliberately separate:
//
//  - hammock: the knitting recursion on ZDelta for dim Hom(x, -) in the
//    bounded derived category, plus orbit sums over the identification for
//    Hom in the u-cluster category.
//
//  - oracle_*: the definition itself, namely the span of paths modulo the
//    consequences of the mesh relations, evaluated by exact rational linear
//    algebra on the path space graded by length. The mesh ideal is generated
//    in degree 2, so each length contributes independently. Works on windows
//    of ZDelta, on finite mesh-complete quivers, and on deletions of such
//    quivers (where paths through deleted vertices are also divided out).

#pragma once

#include <map>

#include "tquiver.hpp"

namespace arq {

struct Hammock {
  ZVertex base;
  std::map<ZVertex, int> values;  // support only

  int value(ZVertex v) const {
    auto it = values.find(v);
    return it == values.end() ? 0 : it->second;
  }
  int max_column() const;
};

// dim Hom(x, m) for all m, via
//   f(m) = sum_{arrows w -> m} f(w) - f(tau m) + [m = x] + [m = sigma x],
// swept column by column. Values are asserted nonnegative and the support is
// asserted to lie within 2h columns of x.
Hammock hammock(const DynkinDiagram& d, ZVertex x);

// Hom dimension between orbit-quiver vertices as the sum of hammock values
// over the fibre of y. Needs covering data (MissingCoveringData otherwise).
int hom_dim_orbit(const TranslationQuiver& q, int x, int y);

struct HomMatrix {
  std::vector<std::string> keys;
  std::vector<std::vector<int>> dim;
};

// Full matrix over the canonical vertex order, by hammock + orbit sums.
// Diagonal entries are asserted to be 1.
HomMatrix hom_matrix(const TranslationQuiver& q);

// Oracle on ZDelta: dim Hom(x, y) in the mesh category of the full ZDelta.
// Windows are chosen internally; the computation is repeated with doubled
// margins and WindowTooSmall is raised if it refuses to stabilize.
int oracle_zmesh_hom(const DynkinDiagram& d, ZVertex x, ZVertex y);

// All oracle dimensions out of x for targets within `span` columns to the
// right of x. Missing keys mean dimension zero.
std::map<ZVertex, int> oracle_zmesh_dims(const DynkinDiagram& d, ZVertex x,
                                         int span);

// Oracle on a finite quiver. For a mesh-complete quiver this is Hom in its
// mesh category; for a deletion output the computation runs on the
// mesh-complete ancestor with all paths through deleted vertices divided out.
int oracle_mesh_hom(const TranslationQuiver& q, int x, int y);
HomMatrix hom_matrix_oracle(const TranslationQuiver& q);

}  // namespace arq
