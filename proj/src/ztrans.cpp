#include "ztrans.hpp"

#include <algorithm>
#include <numeric>

namespace arq {

std::vector<ZVertex> zd_arrows_out(const DynkinDiagram& d, ZVertex v) {
  std::vector<ZVertex> out;
  for (int j2 : d.neighbors(v.j)) {
    if (j2 > v.j)
      out.push_back({v.i, j2});
    else
      out.push_back({v.i + 1, j2});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ZVertex> zd_arrows_in(const DynkinDiagram& d, ZVertex v) {
  std::vector<ZVertex> in;
  for (int j2 : d.neighbors(v.j)) {
    if (j2 < v.j)
      in.push_back({v.i, j2});
    else
      in.push_back({v.i - 1, j2});
  }
  std::sort(in.begin(), in.end());
  return in;
}

AffineAut::AffineAut(const DynkinDiagram& d, std::vector<int> g,
                     std::vector<int> s)
    : diagram_(d), g_(std::move(g)), s_(std::move(s)) {
  int n = d.rank();
  if ((int)g_.size() != n + 1 || (int)s_.size() != n + 1)
    fail(Errc::InvalidArgument, "automorphism data has wrong length");
  g_[0] = 0;  // slot 0 is unused; pin it so equality compares the action only
  s_[0] = 0;

  std::vector<char> seen(n + 1, 0);
  for (int j = 1; j <= n; ++j) {
    if (g_[j] < 1 || g_[j] > n || seen[g_[j]])
      fail(Errc::InvalidArgument, "diagram part is not a permutation");
    seen[g_[j]] = 1;
  }
  for (auto [a, b] : d.edges())
    if (!d.has_edge(g_[a], g_[b]))
      fail(Errc::InvalidArgument, "diagram part does not preserve edges");

  // Arrow preservation along the edge a - b (a < b): the arrow (i,a) -> (i,b)
  // must land on an arrow again, which pins the shifts down to
  //   s(b) = s(a)     if g keeps the edge ascending,
  //   s(b) = s(a) + 1 if g reverses it.
  // Checking one column suffices; translates follow by tau-periodicity.
  for (auto [a, b] : d.edges()) {
    int want = g_[a] < g_[b] ? s_[a] : s_[a] + 1;
    if (s_[b] != want)
      fail(Errc::InvalidArgument,
           "shifts do not preserve the arrows of ZDelta");
  }
}

AffineAut AffineAut::identity(const DynkinDiagram& d) {
  return translation(d, 0);
}

AffineAut AffineAut::translation(const DynkinDiagram& d, int by) {
  std::vector<int> g(d.rank() + 1), s(d.rank() + 1, by);
  std::iota(g.begin(), g.end(), 0);
  return AffineAut(d, std::move(g), std::move(s));
}

bool AffineAut::diagram_part_trivial() const {
  for (int j = 1; j <= diagram_.rank(); ++j)
    if (g_[j] != j) return false;
  return true;
}

int AffineAut::min_shift() const {
  return *std::min_element(s_.begin() + 1, s_.end());
}

int AffineAut::max_shift() const {
  return *std::max_element(s_.begin() + 1, s_.end());
}

ZVertex AffineAut::apply_inverse(ZVertex v) const {
  for (int j = 1; j <= diagram_.rank(); ++j)
    if (g_[j] == v.j) return {v.i - s_[j], j};
  fail(Errc::Internal, "non-surjective diagram part");
}

AffineAut AffineAut::inverse() const {
  int n = diagram_.rank();
  std::vector<int> g(n + 1, 0), s(n + 1, 0);
  for (int j = 1; j <= n; ++j) {
    g[g_[j]] = j;
    s[g_[j]] = -s_[j];
  }
  return AffineAut(diagram_, std::move(g), std::move(s));
}

AffineAut compose(const AffineAut& a, const AffineAut& b) {
  if (a.diagram() != b.diagram())
    fail(Errc::DiagramMismatch, "automorphisms live on different diagrams");
  int n = a.diagram().rank();
  std::vector<int> g(n + 1, 0), s(n + 1, 0);
  for (int j = 1; j <= n; ++j) {
    g[j] = a.g(b.g(j));
    s[j] = b.shift(j) + a.shift(b.g(j));
  }
  return AffineAut(a.diagram(), std::move(g), std::move(s));
}

AffineAut AffineAut::power(int k) const {
  if (k < 0) fail(Errc::InvalidArgument, "power wants a nonnegative exponent");
  AffineAut acc = identity(diagram_);
  for (int t = 0; t < k; ++t) acc = compose(acc, *this);
  return acc;
}

AffineAut tau(const DynkinDiagram& d) { return AffineAut::translation(d, -1); }

AffineAut tau_inverse(const DynkinDiagram& d) {
  return AffineAut::translation(d, 1);
}

AffineAut sigma(const DynkinDiagram& d) {
  AutKind kind = AutKind::Identity;
  switch (d.family()) {
    case Family::A: kind = AutKind::Flip; break;
    case Family::D: kind = d.rank() % 2 == 1 ? AutKind::Flip : AutKind::Identity; break;
    case Family::E: kind = d.rank() == 6 ? AutKind::Flip : AutKind::Identity; break;
  }
  std::vector<int> g = d.automorphism(kind);
  int h = d.coxeter_number();
  int n = d.rank();
  std::vector<int> s(n + 1, 0);
  for (int j = 1; j <= n; ++j) {
    int num = h + d.depth(j) - d.depth(g[j]);
    require_internal(num % 2 == 0, "suspension shift is not integral");
    s[j] = num / 2;
  }
  return AffineAut(d, std::move(g), std::move(s));
}

AffineAut phi(const DynkinDiagram& d, int u) {
  if (u < 1) fail(Errc::InvalidArgument, "phi wants a level u >= 1");
  return compose(tau_inverse(d), sigma(d).power(u));
}

}  // namespace arq
