// The stable translation quiver ZDelta for a Dynkin diagram Delta, and the
// affine automorphisms acting on it.
//
// Vertices are pairs (i, j) with i in Z (column) and j a diagram label (row).
// Every edge of Delta is oriented toward the higher label; the arrows of
// ZDelta out of (i, j) are then
//   (i, j)   -> (i, j')   for each edge j - j' with j' > j,
//   (i, j)   -> (i+1, j') for each edge j - j' with j' < j.
// The translation is tau(i, j) = (i-1, j) and the mesh property holds by
// construction.
//
// An affine automorphism is a pair (g, s) of a diagram automorphism g and a
// per-row shift s, acting by (i, j) |-> (i + s(j), g(j)). Construction checks
// that the action preserves the arrow set; commuting with tau is automatic.

#pragma once

#include <compare>
#include <vector>

#include "dynkin.hpp"

namespace arq {

struct ZVertex {
  int i = 0;
  int j = 0;
  auto operator<=>(const ZVertex&) const = default;
};

std::vector<ZVertex> zd_arrows_out(const DynkinDiagram& d, ZVertex v);
std::vector<ZVertex> zd_arrows_in(const DynkinDiagram& d, ZVertex v);

class AffineAut {
public:
  // g and s are 1-based (index 0 ignored). Throws InvalidArgument unless g is
  // a diagram automorphism and (g, s) maps arrows to arrows.
  AffineAut(const DynkinDiagram& d, std::vector<int> g, std::vector<int> s);

  static AffineAut identity(const DynkinDiagram& d);
  static AffineAut translation(const DynkinDiagram& d, int by);  // (i,j) -> (i+by, j)

  const DynkinDiagram& diagram() const { return diagram_; }
  int g(int j) const { return g_[j]; }
  int shift(int j) const { return s_[j]; }
  const std::vector<int>& shifts() const { return s_; }
  bool diagram_part_trivial() const;
  int min_shift() const;
  int max_shift() const;

  ZVertex apply(ZVertex v) const { return {v.i + s_[v.j], g_[v.j]}; }
  ZVertex apply_inverse(ZVertex v) const;
  AffineAut inverse() const;

  // Nonnegative iterate; power(0) is the identity.
  AffineAut power(int k) const;

  bool operator==(const AffineAut& o) const {
    return diagram_ == o.diagram_ && g_ == o.g_ && s_ == o.s_;
  }
  bool operator!=(const AffineAut& o) const { return !(*this == o); }

private:
  DynkinDiagram diagram_;
  std::vector<int> g_, s_;
};

// a after b: (a * b)(v) = a(b(v)).
AffineAut compose(const AffineAut& a, const AffineAut& b);

AffineAut tau(const DynkinDiagram& d);          // shift -1 everywhere
AffineAut tau_inverse(const DynkinDiagram& d);  // shift +1 everywhere

// The suspension of the bounded derived category, realized on ZDelta.
// Geometrically it shifts h/2 columns to the right and applies the flip for
// A_n, for D_n with n odd and for E_6; the per-row integer shifts absorb the
// half-unit row offsets. Satisfies sigma^2 = tau^{-h}.
AffineAut sigma(const DynkinDiagram& d);

// phi_u = tau^{-1} o sigma^u, the identification defining the u-cluster
// category. Requires u >= 1; all its shifts are >= 2.
AffineAut phi(const DynkinDiagram& d, int u);

}  // namespace arq
