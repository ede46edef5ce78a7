#include "cluster.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace arq {

const char* twist_name(Twist t) {
  switch (t) {
    case Twist::None: return "none";
    case Twist::Reflect: return "reflect";
    case Twist::SwapExceptional: return "swap_exceptional";
  }
  return "?";
}

ClusterShape cluster_shape(Family family, int rank, int u) {
  DynkinDiagram d = DynkinDiagram::make(family, rank);
  AffineAut f = phi(d, u);

  ClusterShape shape;
  shape.family = family;
  shape.rank = rank;
  shape.level = u;

  if (f.diagram_part_trivial()) {
    // All rows shift by the same amount; a tree forces constant shifts.
    require_internal(f.min_shift() == f.max_shift(),
                     "untwisted identification with nonconstant shift");
    shape.period = f.min_shift();
    shape.pairing = 1;
    shape.twist = Twist::None;
  } else {
    int j = 1;
    while (f.g(j) == j) ++j;
    shape.period = f.shift(j) + f.shift(f.g(j));
    shape.pairing = 2;
    shape.twist =
        family == Family::D ? Twist::SwapExceptional : Twist::Reflect;
  }
  return shape;
}

TranslationQuiver cluster_quiver(Family family, int rank, int u) {
  DynkinDiagram d = DynkinDiagram::make(family, rank);
  TranslationQuiver q = orbit_quiver(d, phi(d, u));
  QuiverMeta meta = q.meta();
  meta.level = u;
  std::vector<TranslationQuiver::Vertex> verts;
  std::vector<std::pair<int, int>> arrows;
  std::vector<int> tau_map;
  for (int v = 0; v < q.size(); ++v) {
    verts.push_back(q.vertex(v));
    for (int w : q.arrows_out(v)) arrows.emplace_back(v, w);
    tau_map.push_back(q.tau(v));
  }
  return TranslationQuiver(std::move(verts), std::move(arrows),
                           std::move(tau_map), meta, q.covering());
}

ShapeReport shape_classify(const TranslationQuiver& q) {
  const QuiverMeta& meta = q.meta();
  if (!meta.family || !meta.level)
    fail(Errc::InvalidArgument,
         "shape classification needs family, rank and level metadata");
  ClusterShape expect = cluster_shape(*meta.family, meta.rank, *meta.level);

  auto mismatch = [&](const std::string& what) {
    std::ostringstream os;
    os << "computed structure contradicts the declared shape ("
       << family_letter(expect.family) << expect.rank << ", level "
       << expect.level << "): " << what;
    fail(Errc::ShapeMismatch, os.str());
  };

  std::set<int> rows;
  for (int v = 0; v < q.size(); ++v) {
    if (!q.vertex(v).residue) mismatch("vertex without residue label");
    rows.insert(q.vertex(v).residue->j);
  }
  if ((int)rows.size() != expect.rank) mismatch("missing rows");

  ShapeReport report;
  report.band_width = (int)rows.size();
  report.period = expect.period;
  report.pairing = expect.pairing;
  report.twist = expect.twist;

  // Expected tau-orbit lengths: one orbit of length period per orbit of the
  // diagram part on rows, where rows fixed by the diagram part close up after
  // period/pairing steps.
  DynkinDiagram d = DynkinDiagram::make(expect.family, expect.rank);
  AffineAut f = phi(d, *meta.level);
  std::map<long, long> want;  // length -> count
  std::vector<char> seen(expect.rank + 1, 0);
  for (int j = 1; j <= expect.rank; ++j) {
    if (seen[j]) continue;
    seen[j] = 1;
    if (f.g(j) == j) {
      want[f.shift(j)]++;
    } else {
      seen[f.g(j)] = 1;
      want[f.shift(j) + f.shift(f.g(j))]++;
    }
  }

  std::map<long, long> got;
  for (const auto& orbit : tau_orbits(q)) got[(long)orbit.size()]++;
  if (got != want) mismatch("tau-orbit lengths disagree");

  if (expect.family == Family::D) {
    std::set<int> exceptional_orbits;
    auto orbits = tau_orbits(q);
    for (int k = 0; k < (int)orbits.size(); ++k)
      for (int v : orbits[k]) {
        int j = q.vertex(v).residue->j;
        if (j >= expect.rank - 1) exceptional_orbits.insert(k);
      }
    for (int k : exceptional_orbits)
      report.exceptional_orbit_lengths.push_back((long)orbits[k].size());
    std::sort(report.exceptional_orbit_lengths.begin(),
              report.exceptional_orbit_lengths.end());
    bool both_odd = *meta.level % 2 == 1 && expect.rank % 2 == 1;
    if (both_odd &&
        report.exceptional_orbit_lengths != std::vector<long>{expect.period})
      mismatch("expected one long exceptional orbit");
    if (!both_odd && report.exceptional_orbit_lengths !=
                         std::vector<long>{expect.period / expect.pairing,
                                           expect.period / expect.pairing})
      mismatch("expected two short exceptional orbits");
  }

  return report;
}

}  // namespace arq
