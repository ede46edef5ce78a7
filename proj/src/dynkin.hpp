// Simply laced Dynkin diagrams A_n, D_n, E_6/E_7/E_8 with a fixed vertex
// labelling, their graph automorphisms, and Coxeter numbers.
//
// Labelling conventions (1-based):
//   A_n: path 1 - 2 - ... - n
//   D_n: path 1 - ... - (n-2), with n-1 and n both adjacent to n-2 (n >= 4)
//   E_n: path 1 - ... - (n-1), with n adjacent to 3 (n in {6,7,8})

#pragma once

#include <utility>
#include <vector>

#include "errors.hpp"

namespace arq {

enum class Family { A, D, E };

char family_letter(Family f);
Family family_from_letter(char c);

enum class AutKind { Identity, Flip };

class DynkinDiagram {
public:
  static DynkinDiagram make(Family family, int rank);

  Family family() const { return family_; }
  int rank() const { return rank_; }

  // Edges as (a, b) with a < b, sorted.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  // Sorted neighbour labels of vertex j.
  const std::vector<int>& neighbors(int j) const;

  bool has_edge(int a, int b) const;

  int coxeter_number() const;

  // Vertex permutation as a vector p with p[j] = image of j (index 0 unused).
  // Identity always exists; Flip is the unique nontrivial automorphism and is
  // rejected for E_7 and E_8.
  std::vector<int> automorphism(AutKind kind) const;

  // Column offset of row j in half units: 0 at vertex 1, +1 per edge step
  // toward a higher label. Used to turn the geometric half-unit shifts of the
  // suspension into integer coordinates.
  int depth(int j) const { return depth_[j]; }

  bool operator==(const DynkinDiagram& o) const {
    return family_ == o.family_ && rank_ == o.rank_;
  }
  bool operator!=(const DynkinDiagram& o) const { return !(*this == o); }

private:
  DynkinDiagram(Family family, int rank);

  Family family_;
  int rank_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> nbrs_;  // [0] unused
  std::vector<int> depth_;              // [0] unused
};

}  // namespace arq
