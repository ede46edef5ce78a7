// Finite translation quivers: orbit quivers ZDelta / <f>, deletion of
// tau-stable vertex sets, isomorphism testing and structural checks.

#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ztrans.hpp"

namespace arq {

struct QuiverMeta {
  std::optional<Family> family;
  int rank = 0;
  std::optional<int> level;
  bool standard = true;
  bool connected = false;
  bool mesh_checked = false;
};

// Data needed to relate an orbit quiver back to ZDelta: the diagram and the
// identifying automorphism. Vertex residues are the canonical orbit
// representatives. Dropped on deletion.
struct CoveringData {
  DynkinDiagram diagram;
  AffineAut identification;
};

class TranslationQuiver;

// Link from a deleted quiver back to the mesh-complete quiver it came from.
// Kept in memory only; composed deletions point at the original ancestor.
struct DeletionContext {
  std::shared_ptr<const TranslationQuiver> parent;
  std::vector<char> deleted_in_parent;  // mask over parent indices
  std::vector<int> parent_index;        // per surviving vertex
};

class TranslationQuiver {
public:
  struct Vertex {
    std::optional<ZVertex> residue;
    std::string tag;  // display fallback when no residue is known
  };

  // Validating constructor; arrows are (src, dst) pairs. Throws
  // InvalidArgument on structural problems (bad indices, parallel arrows,
  // tau not a bijection) and on a mesh violation when meta.mesh_checked.
  TranslationQuiver(std::vector<Vertex> vertices,
                    std::vector<std::pair<int, int>> arrows,
                    std::vector<int> tau_map, QuiverMeta meta,
                    std::shared_ptr<const CoveringData> covering = nullptr,
                    std::shared_ptr<const DeletionContext> deletion = nullptr);

  int size() const { return (int)vertices_.size(); }
  int arrow_count() const;
  const Vertex& vertex(int v) const { return vertices_[v]; }
  const std::vector<int>& arrows_out(int v) const { return out_[v]; }
  const std::vector<int>& arrows_in(int v) const { return in_[v]; }
  bool has_arrow(int a, int b) const;
  int tau(int v) const { return tau_[v]; }
  int tau_inverse(int v) const { return tau_inv_[v]; }

  const QuiverMeta& meta() const { return meta_; }
  const std::shared_ptr<const CoveringData>& covering() const {
    return covering_;
  }
  const std::shared_ptr<const DeletionContext>& deletion() const {
    return deletion_;
  }

  std::string vertex_name(int v) const;

private:
  std::vector<Vertex> vertices_;
  std::vector<std::vector<int>> out_, in_;
  std::vector<int> tau_, tau_inv_;
  QuiverMeta meta_;
  std::shared_ptr<const CoveringData> covering_;
  std::shared_ptr<const DeletionContext> deletion_;
};

// The quotient of ZDelta by the group generated by f. Requires every shift of
// f to be positive (NotRightward otherwise). Vertices are named by canonical
// orbit representatives, ordered by (i, j); the representative of an orbit is
// its unique member v with v.i >= 0 and f^{-1}(v).i < 0. The mesh property of
// the quotient is verified and arrow multiplicities are asserted to be 1.
TranslationQuiver orbit_quiver(const DynkinDiagram& d, const AffineAut& f);

// Cycles of tau, each starting at its minimal vertex, ordered by that vertex.
std::vector<std::vector<int>> tau_orbits(const TranslationQuiver& q);

// Quotient by deleting the vertices in x (indices). Requires tau(x) = x as a
// set; the witness in the NotTauStable message is the first offender. The
// result keeps labels and the restricted translation, records that its mesh
// property is not checked, and drops covering data.
TranslationQuiver delete_tau_stable(const TranslationQuiver& q,
                                    const std::vector<int>& x);

// Conveniences selecting x by residue row or by tau-orbit index.
TranslationQuiver delete_rows(const TranslationQuiver& q,
                              const std::vector<int>& rows);
TranslationQuiver delete_orbits(const TranslationQuiver& q,
                                const std::vector<int>& orbit_ids);

// Exact isomorphism of translation quivers: a bijection preserving arrows and
// commuting with tau. Returns the lexicographically least witness (image of
// vertex 0 first), or nullopt.
std::optional<std::vector<int>> is_isomorphic(const TranslationQuiver& a,
                                              const TranslationQuiver& b);

// Components of the underlying graph with arrows and tau both counted as
// edges, each sorted, ordered by minimal vertex.
std::vector<std::vector<int>> connected_components(const TranslationQuiver& q);

struct ValidationReport {
  bool tau_bijective = false;
  bool arrows_simple = false;
  bool mesh_applicable = false;
  bool mesh_ok = false;
  int components = 0;
};

ValidationReport validate(const TranslationQuiver& q);

// True when vertices (with labels), arrows and tau agree on the nose.
bool same_presentation(const TranslationQuiver& a, const TranslationQuiver& b);

}  // namespace arq
