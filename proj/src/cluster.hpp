// AR quivers of u-cluster categories: the orbit quiver of ZDelta under
// phi_u = tau^{-1} o sigma^u, together with the expected rectangle shape.

#pragma once

#include "tquiver.hpp"

namespace arq {

enum class Twist { None, Reflect, SwapExceptional };

const char* twist_name(Twist t);

// Shape of the fundamental rectangle. The rectangle length is period/pairing
// as an exact rational; pairing is 2 exactly when the identification carries
// a nontrivial diagram automorphism, and the length can then be a half
// integer (type A with u odd and even rank). Keeping the pair avoids
// half-integers everywhere.
struct ClusterShape {
  Family family;
  int rank = 0;
  int level = 0;
  long period = 0;
  int pairing = 1;
  Twist twist = Twist::None;
};

ClusterShape cluster_shape(Family family, int rank, int u);

TranslationQuiver cluster_quiver(Family family, int rank, int u);

struct ShapeReport {
  int band_width = 0;
  long period = 0;
  int pairing = 1;
  Twist twist = Twist::None;
  std::vector<long> exceptional_orbit_lengths;  // type D only
};

// Reclassifies q from its tau-orbit structure and cross-checks against the
// shape declared by its meta (family, rank, level). Throws ShapeMismatch on
// disagreement.
ShapeReport shape_classify(const TranslationQuiver& q);

}  // namespace arq
