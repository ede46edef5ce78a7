#include "tquiver.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace arq {

namespace {

std::string zvertex_str(ZVertex v) {
  std::ostringstream os;
  os << "(" << v.i << "," << v.j << ")";
  return os.str();
}

// Offending vertex of the mesh property, if any: the sources of arrows into m
// must equal the targets of arrows out of tau(m).
std::optional<int> mesh_violation(const std::vector<std::vector<int>>& out,
                                  const std::vector<std::vector<int>>& in,
                                  const std::vector<int>& tau_map) {
  for (int m = 0; m < (int)tau_map.size(); ++m)
    if (in[m] != out[tau_map[m]]) return m;
  return std::nullopt;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Components with arrows and tau both counted as edges, before a quiver
// object exists.
int component_count(int n, const std::vector<std::pair<int, int>>& arrows,
                    const std::vector<int>& tau_map) {
  UnionFind uf(n);
  for (auto [a, b] : arrows) uf.unite(a, b);
  for (int v = 0; v < n; ++v) uf.unite(v, tau_map[v]);
  std::set<int> roots;
  for (int v = 0; v < n; ++v) roots.insert(uf.find(v));
  return (int)roots.size();
}

}  // namespace

TranslationQuiver::TranslationQuiver(
    std::vector<Vertex> vertices, std::vector<std::pair<int, int>> arrows,
    std::vector<int> tau_map, QuiverMeta meta,
    std::shared_ptr<const CoveringData> covering,
    std::shared_ptr<const DeletionContext> deletion)
    : vertices_(std::move(vertices)),
      tau_(std::move(tau_map)),
      meta_(std::move(meta)),
      covering_(std::move(covering)),
      deletion_(std::move(deletion)) {
  int n = (int)vertices_.size();
  if ((int)tau_.size() != n)
    fail(Errc::InvalidArgument, "translation has wrong length");

  tau_inv_.assign(n, -1);
  for (int v = 0; v < n; ++v) {
    if (tau_[v] < 0 || tau_[v] >= n)
      fail(Errc::InvalidArgument, "translation image out of range");
    if (tau_inv_[tau_[v]] != -1)
      fail(Errc::InvalidArgument, "translation is not a bijection");
    tau_inv_[tau_[v]] = v;
  }

  out_.assign(n, {});
  in_.assign(n, {});
  std::sort(arrows.begin(), arrows.end());
  for (size_t k = 0; k < arrows.size(); ++k) {
    auto [a, b] = arrows[k];
    if (a < 0 || a >= n || b < 0 || b >= n)
      fail(Errc::InvalidArgument, "arrow endpoint out of range");
    if (k > 0 && arrows[k] == arrows[k - 1])
      fail(Errc::InvalidArgument, "parallel arrows are not supported");
    out_[a].push_back(b);
    in_[b].push_back(a);
  }
  for (auto& v : in_) std::sort(v.begin(), v.end());

  if (meta_.mesh_checked) {
    if (auto m = mesh_violation(out_, in_, tau_))
      fail(Errc::InvalidArgument,
           "mesh property fails at vertex " + vertex_name(*m));
  }
}

int TranslationQuiver::arrow_count() const {
  int c = 0;
  for (const auto& v : out_) c += (int)v.size();
  return c;
}

bool TranslationQuiver::has_arrow(int a, int b) const {
  return std::binary_search(out_[a].begin(), out_[a].end(), b);
}

std::string TranslationQuiver::vertex_name(int v) const {
  const Vertex& vx = vertices_[v];
  if (vx.residue) return zvertex_str(*vx.residue);
  return vx.tag;
}

TranslationQuiver orbit_quiver(const DynkinDiagram& d, const AffineAut& f) {
  if (f.diagram() != d)
    fail(Errc::DiagramMismatch, "automorphism belongs to another diagram");
  if (f.min_shift() < 1)
    fail(Errc::NotRightward,
         "identification must move every row strictly to the right");

  int n = d.rank();
  int top = f.max_shift();
  int cols = 2 * top + 2;  // materialized columns 0..cols inclusive

  auto cell = [&](ZVertex v) { return v.i * n + (v.j - 1); };
  auto in_window = [&](ZVertex v) {
    return v.i >= 0 && v.i <= cols && v.j >= 1 && v.j <= n;
  };

  UnionFind uf((cols + 1) * n);
  for (int i = 0; i <= cols; ++i)
    for (int j = 1; j <= n; ++j) {
      ZVertex v{i, j}, w = f.apply(v);
      if (in_window(w)) uf.unite(cell(v), cell(w));
    }

  // The orbit of any vertex has strictly increasing column along f, so it has
  // a unique member with column >= 0 whose f-preimage has column < 0.
  auto canonical_rep = [&](ZVertex v) {
    while (true) {
      ZVertex w = f.apply_inverse(v);
      if (w.i < 0) return v;
      v = w;
    }
  };

  std::map<int, ZVertex> rep_of_root;
  for (int i = 0; i <= cols; ++i)
    for (int j = 1; j <= n; ++j) {
      int root = uf.find(cell({i, j}));
      if (!rep_of_root.count(root)) rep_of_root[root] = canonical_rep({i, j});
    }

  std::vector<ZVertex> reps;
  for (auto& [root, rep] : rep_of_root) reps.push_back(rep);
  std::sort(reps.begin(), reps.end());
  require_internal(std::adjacent_find(reps.begin(), reps.end()) == reps.end(),
                   "orbit representatives collide");

  std::map<ZVertex, int> index_of_rep;
  for (int k = 0; k < (int)reps.size(); ++k) index_of_rep[reps[k]] = k;
  auto class_of = [&](ZVertex v) {
    require_internal(in_window(v), "vertex escapes the materialized window");
    return index_of_rep.at(rep_of_root.at(uf.find(cell(v))));
  };

  std::set<std::pair<int, int>> arrow_set;
  for (int i = 0; i < cols; ++i)
    for (int j = 1; j <= n; ++j) {
      ZVertex v{i, j};
      int src = class_of(v);
      std::set<int> targets;
      for (ZVertex w : zd_arrows_out(d, v)) {
        int dst = class_of(w);
        require_internal(targets.insert(dst).second,
                         "orbit quiver would have a multiple arrow");
        arrow_set.insert({src, dst});
      }
    }

  std::vector<int> tau_map(reps.size());
  for (int k = 0; k < (int)reps.size(); ++k) {
    ZVertex t{reps[k].i - 1, reps[k].j};
    if (t.i < 0) t = f.apply(t);
    tau_map[k] = class_of(t);
  }

  std::vector<TranslationQuiver::Vertex> verts(reps.size());
  for (int k = 0; k < (int)reps.size(); ++k) verts[k].residue = reps[k];

  std::vector<std::pair<int, int>> arrows(arrow_set.begin(), arrow_set.end());

  QuiverMeta meta;
  meta.family = d.family();
  meta.rank = d.rank();
  meta.standard = true;
  meta.mesh_checked = true;  // constructor verifies it; a violation is a bug
  meta.connected = component_count((int)reps.size(), arrows, tau_map) <= 1;

  auto covering = std::make_shared<const CoveringData>(CoveringData{d, f});
  try {
    return TranslationQuiver(std::move(verts), std::move(arrows),
                             std::move(tau_map), meta, covering);
  } catch (const Error& e) {
    fail(Errc::Internal, std::string("orbit quiver is malformed: ") + e.what());
  }
}

std::vector<std::vector<int>> tau_orbits(const TranslationQuiver& q) {
  std::vector<std::vector<int>> orbits;
  std::vector<char> seen(q.size(), 0);
  for (int v = 0; v < q.size(); ++v) {
    if (seen[v]) continue;
    std::vector<int> orbit;
    int w = v;
    do {
      seen[w] = 1;
      orbit.push_back(w);
      w = q.tau(w);
    } while (w != v);
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

TranslationQuiver delete_tau_stable(const TranslationQuiver& q,
                                    const std::vector<int>& x) {
  std::vector<char> drop(q.size(), 0);
  for (int v : x) {
    if (v < 0 || v >= q.size())
      fail(Errc::InvalidArgument, "deletion index out of range");
    drop[v] = 1;
  }
  for (int v = 0; v < q.size(); ++v)
    if (drop[v] && !drop[q.tau(v)])
      fail(Errc::NotTauStable,
           "deletion set is not tau-stable: it contains " + q.vertex_name(v) +
               " but not its translate " + q.vertex_name(q.tau(v)));
  if (std::none_of(drop.begin(), drop.end(), [](char c) { return c; })) {
    return q;
  }

  std::vector<int> new_index(q.size(), -1);
  std::vector<TranslationQuiver::Vertex> verts;
  std::vector<int> parent_index;
  for (int v = 0; v < q.size(); ++v)
    if (!drop[v]) {
      new_index[v] = (int)verts.size();
      verts.push_back(q.vertex(v));
      parent_index.push_back(v);
    }

  std::vector<std::pair<int, int>> arrows;
  for (int v = 0; v < q.size(); ++v) {
    if (drop[v]) continue;
    for (int w : q.arrows_out(v))
      if (!drop[w]) arrows.emplace_back(new_index[v], new_index[w]);
  }
  std::vector<int> tau_map(verts.size());
  for (int v = 0; v < q.size(); ++v)
    if (!drop[v]) tau_map[new_index[v]] = new_index[q.tau(v)];

  QuiverMeta meta = q.meta();
  meta.mesh_checked = false;  // meshes through deleted vertices are gone
  meta.connected = component_count((int)verts.size(), arrows, tau_map) <= 1;

  // Deletions compose: keep pointing at the original mesh-complete ancestor.
  std::shared_ptr<const DeletionContext> ctx;
  if (q.deletion()) {
    const DeletionContext& old = *q.deletion();
    auto mask = old.deleted_in_parent;
    std::vector<int> pidx;
    for (int v = 0; v < q.size(); ++v)
      if (drop[v])
        mask[old.parent_index[v]] = 1;
      else
        pidx.push_back(old.parent_index[v]);
    ctx = std::make_shared<const DeletionContext>(
        DeletionContext{old.parent, std::move(mask), std::move(pidx)});
  } else {
    auto parent = std::make_shared<const TranslationQuiver>(q);
    std::vector<char> mask(drop.begin(), drop.end());
    ctx = std::make_shared<const DeletionContext>(
        DeletionContext{parent, std::move(mask), std::move(parent_index)});
  }

  return TranslationQuiver(std::move(verts), std::move(arrows),
                           std::move(tau_map), meta, nullptr, ctx);
}

TranslationQuiver delete_rows(const TranslationQuiver& q,
                              const std::vector<int>& rows) {
  std::set<int> wanted(rows.begin(), rows.end());
  std::set<int> seen;
  std::vector<int> x;
  for (int v = 0; v < q.size(); ++v) {
    if (!q.vertex(v).residue)
      fail(Errc::InvalidArgument,
           "row deletion needs residue labels on every vertex");
    if (wanted.count(q.vertex(v).residue->j)) {
      x.push_back(v);
      seen.insert(q.vertex(v).residue->j);
    }
  }
  for (int j : wanted)
    if (!seen.count(j))
      fail(Errc::InvalidArgument,
           "no vertex lies in row " + std::to_string(j));
  return delete_tau_stable(q, x);
}

TranslationQuiver delete_orbits(const TranslationQuiver& q,
                                const std::vector<int>& orbit_ids) {
  auto orbits = tau_orbits(q);
  std::vector<int> x;
  for (int id : orbit_ids) {
    if (id < 0 || id >= (int)orbits.size())
      fail(Errc::InvalidArgument, "tau-orbit index out of range");
    x.insert(x.end(), orbits[id].begin(), orbits[id].end());
  }
  return delete_tau_stable(q, x);
}

namespace {

std::vector<int> tau_orbit_lengths(const TranslationQuiver& q) {
  std::vector<int> len(q.size(), 0);
  for (const auto& orbit : tau_orbits(q))
    for (int v : orbit) len[v] = (int)orbit.size();
  return len;
}

// Joint colour refinement of two quivers; arrows and tau both feed the
// signature, which makes the partition fine enough that the search below
// rarely branches.
std::pair<std::vector<int>, std::vector<int>> refine_colors(
    const TranslationQuiver& a, const TranslationQuiver& b) {
  int na = a.size(), nb = b.size();
  auto la = tau_orbit_lengths(a), lb = tau_orbit_lengths(b);

  using Sig = std::vector<int>;
  auto initial = [&](const TranslationQuiver& q, const std::vector<int>& len,
                     int v) {
    return Sig{(int)q.arrows_out(v).size(), (int)q.arrows_in(v).size(),
               len[v]};
  };

  std::vector<int> ca(na), cb(nb);
  {
    std::map<Sig, int> table;
    for (int v = 0; v < na; ++v) table.emplace(initial(a, la, v), 0);
    for (int v = 0; v < nb; ++v) table.emplace(initial(b, lb, v), 0);
    int next = 0;
    for (auto& [sig, id] : table) id = next++;
    for (int v = 0; v < na; ++v) ca[v] = table[initial(a, la, v)];
    for (int v = 0; v < nb; ++v) cb[v] = table[initial(b, lb, v)];
  }

  auto signature = [](const TranslationQuiver& q, const std::vector<int>& c,
                      int v) {
    Sig s{c[v], c[q.tau(v)], c[q.tau_inverse(v)], -1};
    std::vector<int> outs, ins;
    for (int w : q.arrows_out(v)) outs.push_back(c[w]);
    for (int w : q.arrows_in(v)) ins.push_back(c[w]);
    std::sort(outs.begin(), outs.end());
    std::sort(ins.begin(), ins.end());
    s.insert(s.end(), outs.begin(), outs.end());
    s.push_back(-2);
    s.insert(s.end(), ins.begin(), ins.end());
    return s;
  };

  int colors = 0;
  while (true) {
    std::map<Sig, int> table;
    for (int v = 0; v < na; ++v) table.emplace(signature(a, ca, v), 0);
    for (int v = 0; v < nb; ++v) table.emplace(signature(b, cb, v), 0);
    int next = 0;
    for (auto& [sig, id] : table) id = next++;
    std::vector<int> ca2(na), cb2(nb);
    for (int v = 0; v < na; ++v) ca2[v] = table[signature(a, ca, v)];
    for (int v = 0; v < nb; ++v) cb2[v] = table[signature(b, cb, v)];
    ca.swap(ca2);
    cb.swap(cb2);
    if (next == colors) break;
    colors = next;
  }
  return {ca, cb};
}

struct IsoSearch {
  const TranslationQuiver& a;
  const TranslationQuiver& b;
  std::vector<int> ca, cb;
  std::vector<std::vector<int>> candidates;  // per colour, vertices of b
  std::vector<int> map_ab, map_ba;

  bool consistent(int v, int w) const {
    if (a.tau(v) != v || b.tau(w) != w) {
      int t = a.tau(v);
      if (map_ab[t] != -1 && map_ab[t] != b.tau(w)) return false;
      int ti = a.tau_inverse(v);
      if (map_ab[ti] != -1 && map_ab[ti] != b.tau_inverse(w)) return false;
      if (map_ba[b.tau(w)] != -1 && map_ba[b.tau(w)] != t) return false;
      if (map_ba[b.tau_inverse(w)] != -1 && map_ba[b.tau_inverse(w)] != ti)
        return false;
    }
    for (int u : a.arrows_out(v))
      if (map_ab[u] != -1 && !b.has_arrow(w, map_ab[u])) return false;
    for (int u : a.arrows_in(v))
      if (map_ab[u] != -1 && !b.has_arrow(map_ab[u], w)) return false;
    for (int u : b.arrows_out(w))
      if (map_ba[u] != -1 && !a.has_arrow(v, map_ba[u])) return false;
    for (int u : b.arrows_in(w))
      if (map_ba[u] != -1 && !a.has_arrow(map_ba[u], v)) return false;
    return true;
  }

  bool search(int v) {
    if (v == a.size()) return true;
    for (int w : candidates[ca[v]]) {
      if (map_ba[w] != -1 || !consistent(v, w)) continue;
      map_ab[v] = w;
      map_ba[w] = v;
      if (search(v + 1)) return true;
      map_ab[v] = -1;
      map_ba[w] = -1;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> is_isomorphic(const TranslationQuiver& a,
                                              const TranslationQuiver& b) {
  if (a.size() != b.size() || a.arrow_count() != b.arrow_count())
    return std::nullopt;
  if (a.size() == 0) return std::vector<int>{};

  auto [ca, cb] = refine_colors(a, b);
  int colors = 0;
  for (int c : ca) colors = std::max(colors, c + 1);
  for (int c : cb) colors = std::max(colors, c + 1);
  std::vector<int> ha(colors, 0), hb(colors, 0);
  for (int c : ca) ha[c]++;
  for (int c : cb) hb[c]++;
  if (ha != hb) return std::nullopt;

  IsoSearch s{a, b, ca, cb, {}, {}, {}};
  s.candidates.assign(colors, {});
  for (int w = 0; w < b.size(); ++w) s.candidates[cb[w]].push_back(w);
  s.map_ab.assign(a.size(), -1);
  s.map_ba.assign(b.size(), -1);
  if (!s.search(0)) return std::nullopt;
  return s.map_ab;
}

std::vector<std::vector<int>> connected_components(const TranslationQuiver& q) {
  std::vector<int> comp(q.size(), -1);
  std::vector<std::vector<int>> components;
  for (int v = 0; v < q.size(); ++v) {
    if (comp[v] != -1) continue;
    std::vector<int> stack{v}, members;
    comp[v] = (int)components.size();
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      members.push_back(u);
      auto visit = [&](int w) {
        if (comp[w] == -1) {
          comp[w] = comp[v];
          stack.push_back(w);
        }
      };
      for (int w : q.arrows_out(u)) visit(w);
      for (int w : q.arrows_in(u)) visit(w);
      visit(q.tau(u));
      visit(q.tau_inverse(u));
    }
    std::sort(members.begin(), members.end());
    components.push_back(std::move(members));
  }
  return components;
}

ValidationReport validate(const TranslationQuiver& q) {
  ValidationReport r;
  r.tau_bijective = true;   // enforced at construction
  r.arrows_simple = true;   // enforced at construction
  r.mesh_applicable = q.meta().mesh_checked;
  std::vector<std::vector<int>> out(q.size()), in(q.size());
  std::vector<int> tau_map(q.size());
  for (int v = 0; v < q.size(); ++v) {
    out[v] = q.arrows_out(v);
    in[v] = q.arrows_in(v);
    tau_map[v] = q.tau(v);
  }
  r.mesh_ok = !mesh_violation(out, in, tau_map).has_value();
  r.components = (int)connected_components(q).size();
  return r;
}

bool same_presentation(const TranslationQuiver& a, const TranslationQuiver& b) {
  if (a.size() != b.size()) return false;
  for (int v = 0; v < a.size(); ++v) {
    if (a.vertex(v).residue != b.vertex(v).residue) return false;
    if (a.vertex(v).tag != b.vertex(v).tag) return false;
    if (a.arrows_out(v) != b.arrows_out(v)) return false;
    if (a.tau(v) != b.tau(v)) return false;
  }
  return true;
}

}  // namespace arq
