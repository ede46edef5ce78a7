#include "meshhom.hpp"

#include <gmpxx.h>

#include <algorithm>

namespace arq {

int Hammock::max_column() const {
  int m = base.i;
  for (const auto& [v, val] : values) m = std::max(m, v.i);
  return m;
}

Hammock hammock(const DynkinDiagram& d, ZVertex x) {
  if (x.j < 1 || x.j > d.rank())
    fail(Errc::InvalidArgument, "hammock base row out of range");

  ZVertex sx = sigma(d).apply(x);
  int h = d.coxeter_number();

  Hammock ham;
  ham.base = x;
  int hard_stop = x.i + 4 * h + 4;
  for (int col = x.i;; ++col) {
    require_internal(col <= hard_stop, "hammock failed to terminate");
    bool all_zero = true;
    for (int j = 1; j <= d.rank(); ++j) {
      ZVertex m{col, j};
      long f = 0;
      for (ZVertex w : zd_arrows_in(d, m)) f += ham.value(w);
      f -= ham.value({col - 1, j});
      if (m == x) f += 1;
      if (m == sx) f += 1;
      require_internal(f >= 0, "negative hammock value");
      if (f > 0) {
        ham.values[m] = (int)f;
        all_zero = false;
      }
    }
    if (all_zero && col > sx.i + h) break;
  }
  require_internal(ham.value(x) == 1, "hammock not 1 at its base");
  require_internal(ham.max_column() <= x.i + 2 * h, "hammock support too wide");
  return ham;
}

namespace {

// Sum of hammock values over the <f>-orbit of z. The orbit meets the support
// columns in a contiguous range of iterates, so walk below the base first and
// then forward across the support.
int orbit_sum(const Hammock& ham, const AffineAut& f, ZVertex z) {
  while (z.i >= ham.base.i) z = f.apply_inverse(z);
  int max_col = ham.max_column();
  int total = 0;
  for (z = f.apply(z); z.i <= max_col; z = f.apply(z)) total += ham.value(z);
  return total;
}

ZVertex residue_of(const TranslationQuiver& q, int v) {
  if (v < 0 || v >= q.size())
    fail(Errc::InvalidArgument, "vertex index out of range");
  if (!q.vertex(v).residue)
    fail(Errc::InvalidArgument, "vertex has no residue label");
  return *q.vertex(v).residue;
}

}  // namespace

int hom_dim_orbit(const TranslationQuiver& q, int x, int y) {
  if (!q.covering())
    fail(Errc::MissingCoveringData,
         "orbit Hom needs covering data; deletions only support the oracle");
  const CoveringData& c = *q.covering();
  Hammock ham = hammock(c.diagram, residue_of(q, x));
  return orbit_sum(ham, c.identification, residue_of(q, y));
}

HomMatrix hom_matrix(const TranslationQuiver& q) {
  if (!q.covering())
    fail(Errc::MissingCoveringData,
         "orbit Hom needs covering data; deletions only support the oracle");
  const CoveringData& c = *q.covering();

  HomMatrix m;
  for (int v = 0; v < q.size(); ++v) m.keys.push_back(q.vertex_name(v));
  m.dim.assign(q.size(), std::vector<int>(q.size(), 0));
  for (int x = 0; x < q.size(); ++x) {
    Hammock ham = hammock(c.diagram, residue_of(q, x));
    for (int y = 0; y < q.size(); ++y)
      m.dim[x][y] = orbit_sum(ham, c.identification, residue_of(q, y));
    require_internal(m.dim[x][x] == 1, "endomorphism dimension is not 1");
  }
  return m;
}

namespace {

// A finite quiver prepared for the path-space computation. tau_inv_at[t] is
// the vertex whose mesh ends one step after t, or -1 where no complete mesh
// is available (window boundaries).
struct OracleGraph {
  int n = 0;
  std::vector<std::vector<int>> out, in;
  std::vector<int> tau_inv_at;
  std::vector<char> masked;
};

using Row = std::map<int, mpq_class>;

// Row-echelon collection over Q; insert returns whether the rank grew.
struct Echelon {
  std::map<int, Row> rows;  // pivot position -> row, pivot coefficient 1

  bool insert(Row r) {
    while (!r.empty()) {
      int p = r.begin()->first;
      auto it = rows.find(p);
      if (it == rows.end()) {
        mpq_class lead = r.begin()->second;
        for (auto& [k, c] : r) c /= lead;
        rows.emplace(p, std::move(r));
        return true;
      }
      mpq_class factor = r.begin()->second;
      for (const auto& [k, c] : it->second) {
        auto [jt, fresh] = r.try_emplace(k, 0);
        jt->second -= factor * c;
        if (jt->second == 0) r.erase(jt);
      }
    }
    return false;
  }

  int rank() const { return (int)rows.size(); }
};

struct PathLevel {
  std::vector<int> endpoint;                  // per path
  std::vector<int> pos;                       // index within endpoint block
  std::vector<std::vector<int>> by_endpoint;  // per vertex: path ids
  std::vector<std::vector<int>> children;     // per path, aligned with the
                                              // unmasked out-arrow list
};

int slot_of(const std::vector<int>& arrows, int target) {
  for (int k = 0; k < (int)arrows.size(); ++k)
    if (arrows[k] == target) return k;
  fail(Errc::Internal, "mesh arrow missing from the quiver");
}

// Hom dimensions from x to every vertex in the mesh category of g, modulo
// paths through masked vertices. The mesh ideal is length-homogeneous, so
// each length is settled by one exact rank computation; lengths are walked up
// until a whole level vanishes, which kills all longer levels too because a
// longer class always factors through the level below it.
std::vector<long> oracle_dims(const OracleGraph& g, int x, int cap) {
  if (x < 0 || x >= g.n) fail(Errc::InvalidArgument, "vertex index out of range");
  if (g.masked[x]) fail(Errc::InvalidArgument, "source vertex was deleted");

  std::vector<std::vector<int>> uout(g.n);
  for (int v = 0; v < g.n; ++v)
    for (int w : g.out[v])
      if (!g.masked[w]) uout[v].push_back(w);

  std::vector<long> dims(g.n, 0);
  PathLevel prev, cur;
  cur.endpoint = {x};
  cur.pos = {0};
  cur.by_endpoint.assign(g.n, {});
  cur.by_endpoint[x] = {0};
  std::vector<Echelon> rel(g.n);

  for (int len = 0;; ++len) {
    long level_total = 0;
    for (int z = 0; z < g.n; ++z) {
      long dz = (long)cur.by_endpoint[z].size() - rel[z].rank();
      require_internal(dz >= 0, "relation rank exceeds the path count");
      dims[z] += dz;
      level_total += dz;
    }
    if (cur.endpoint.empty()) break;
    if (level_total == 0 && len > 0) break;
    if (len >= cap)
      fail(Errc::WindowTooSmall,
           "path length cap reached before the graded pieces vanished");

    PathLevel next;
    next.by_endpoint.assign(g.n, {});
    cur.children.assign(cur.endpoint.size(), {});
    for (int p = 0; p < (int)cur.endpoint.size(); ++p) {
      int z = cur.endpoint[p];
      for (int w : uout[z]) {
        int id = (int)next.endpoint.size();
        next.endpoint.push_back(w);
        next.pos.push_back((int)next.by_endpoint[w].size());
        next.by_endpoint[w].push_back(id);
        cur.children[p].push_back(id);
      }
    }

    std::vector<Echelon> nrel(g.n);
    // Ideal rows extend along arrows.
    for (int z = 0; z < g.n; ++z)
      for (const auto& [pivot, row] : rel[z].rows)
        for (int slot = 0; slot < (int)uout[z].size(); ++slot) {
          Row ext;
          for (const auto& [posi, c] : row) {
            int child = cur.children[cur.by_endpoint[z][posi]][slot];
            ext[next.pos[child]] = c;
          }
          nrel[uout[z][slot]].insert(std::move(ext));
        }
    // Fresh mesh relations appended to a path two levels down: a path q
    // ending at t contributes sum_w q.w.m with m the vertex whose mesh starts
    // at t.
    for (int p = 0; p < (int)prev.endpoint.size(); ++p) {
      int t = prev.endpoint[p];
      int m = g.tau_inv_at[t];
      if (m < 0 || g.masked[m]) continue;
      Row row;
      for (int w : g.in[m]) {
        if (g.masked[w]) continue;
        int c1 = prev.children[p][slot_of(uout[t], w)];
        int c2 = cur.children[c1][slot_of(uout[w], m)];
        row[next.pos[c2]] += 1;
      }
      if (!row.empty()) nrel[m].insert(std::move(row));
    }

    prev = std::move(cur);
    cur = std::move(next);
    rel = std::move(nrel);
  }
  return dims;
}

OracleGraph window_graph(const DynkinDiagram& d, int lo, int hi) {
  int n = d.rank();
  OracleGraph g;
  g.n = (hi - lo + 1) * n;
  auto id = [&](ZVertex v) { return (v.i - lo) * n + (v.j - 1); };
  auto inside = [&](ZVertex v) { return v.i >= lo && v.i <= hi; };
  g.out.assign(g.n, {});
  g.in.assign(g.n, {});
  g.tau_inv_at.assign(g.n, -1);
  g.masked.assign(g.n, 0);
  for (int i = lo; i <= hi; ++i)
    for (int j = 1; j <= n; ++j) {
      ZVertex v{i, j};
      for (ZVertex w : zd_arrows_out(d, v))
        if (inside(w)) {
          g.out[id(v)].push_back(id(w));
          g.in[id(w)].push_back(id(v));
        }
      if (i < hi) g.tau_inv_at[id(v)] = id({i + 1, j});
    }
  for (auto& v : g.out) std::sort(v.begin(), v.end());
  for (auto& v : g.in) std::sort(v.begin(), v.end());
  return g;
}

std::map<ZVertex, int> window_dims(const DynkinDiagram& d, ZVertex x, int span,
                                   int margin) {
  int lo = x.i - margin, hi = x.i + span + margin;
  OracleGraph g = window_graph(d, lo, hi);
  int n = d.rank();
  std::vector<long> dims =
      oracle_dims(g, (x.i - lo) * n + (x.j - 1), g.n + 1);
  std::map<ZVertex, int> out;
  for (int i = x.i; i <= x.i + span; ++i)
    for (int j = 1; j <= n; ++j) {
      long dz = dims[(i - lo) * n + (j - 1)];
      if (dz > 0) out[{i, j}] = (int)dz;
    }
  return out;
}

}  // namespace

std::map<ZVertex, int> oracle_zmesh_dims(const DynkinDiagram& d, ZVertex x,
                                         int span) {
  if (x.j < 1 || x.j > d.rank())
    fail(Errc::InvalidArgument, "oracle base row out of range");
  if (span < 0) fail(Errc::InvalidArgument, "oracle span must be nonnegative");
  int margin = d.rank() + 2;
  auto r1 = window_dims(d, x, span, margin);
  auto r2 = window_dims(d, x, span, 2 * margin);
  if (r1 == r2) return r1;
  auto r3 = window_dims(d, x, span, 4 * margin);
  if (r2 == r3) return r2;
  fail(Errc::WindowTooSmall, "oracle window refused to stabilize");
}

int oracle_zmesh_hom(const DynkinDiagram& d, ZVertex x, ZVertex y) {
  if (y.j < 1 || y.j > d.rank())
    fail(Errc::InvalidArgument, "oracle target row out of range");
  if (y.i < x.i) return 0;  // arrows never decrease the column
  auto dims = oracle_zmesh_dims(d, x, y.i - x.i);
  auto it = dims.find(y);
  return it == dims.end() ? 0 : it->second;
}

namespace {

OracleGraph quiver_graph(const TranslationQuiver& q,
                         const std::vector<char>* mask) {
  OracleGraph g;
  g.n = q.size();
  g.out.assign(g.n, {});
  g.in.assign(g.n, {});
  g.tau_inv_at.assign(g.n, -1);
  g.masked.assign(g.n, 0);
  for (int v = 0; v < g.n; ++v) {
    g.out[v] = q.arrows_out(v);
    g.in[v] = q.arrows_in(v);
    g.tau_inv_at[v] = q.tau_inverse(v);
    if (mask) g.masked[v] = (*mask)[v];
  }
  return g;
}

// Either the quiver itself (mesh-complete) or its ancestor with the deleted
// set masked. Returns the graph, the source translated into graph indices,
// and the map from quiver vertices to graph indices.
std::vector<long> oracle_row(const TranslationQuiver& q, int x,
                             std::vector<int>& index_map) {
  index_map.clear();
  if (q.meta().mesh_checked) {
    for (int v = 0; v < q.size(); ++v) index_map.push_back(v);
    OracleGraph g = quiver_graph(q, nullptr);
    return oracle_dims(g, x, g.n);
  }
  if (q.deletion()) {
    const DeletionContext& ctx = *q.deletion();
    require_internal(ctx.parent->meta().mesh_checked,
                     "deletion ancestor is not mesh-complete");
    index_map = ctx.parent_index;
    OracleGraph g = quiver_graph(*ctx.parent, &ctx.deleted_in_parent);
    return oracle_dims(g, index_map[x], g.n);
  }
  fail(Errc::InvalidArgument,
       "oracle needs a mesh-complete quiver or a deletion of one");
}

}  // namespace

int oracle_mesh_hom(const TranslationQuiver& q, int x, int y) {
  if (x < 0 || x >= q.size() || y < 0 || y >= q.size())
    fail(Errc::InvalidArgument, "vertex index out of range");
  std::vector<int> index_map;
  std::vector<long> dims = oracle_row(q, x, index_map);
  return (int)dims[index_map[y]];
}

HomMatrix hom_matrix_oracle(const TranslationQuiver& q) {
  HomMatrix m;
  for (int v = 0; v < q.size(); ++v) m.keys.push_back(q.vertex_name(v));
  m.dim.assign(q.size(), std::vector<int>(q.size(), 0));
  for (int x = 0; x < q.size(); ++x) {
    std::vector<int> index_map;
    std::vector<long> dims = oracle_row(q, x, index_map);
    for (int y = 0; y < q.size(); ++y) m.dim[x][y] = (int)dims[index_map[y]];
  }
  return m;
}

}  // namespace arq
