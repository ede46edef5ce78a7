#include "dynkin.hpp"

#include <algorithm>
#include <numeric>

namespace arq {

char family_letter(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::D: return 'D';
    case Family::E: return 'E';
  }
  fail(Errc::Internal, "bad family enum");
}

Family family_from_letter(char c) {
  switch (c) {
    case 'A': return Family::A;
    case 'D': return Family::D;
    case 'E': return Family::E;
    default:
      fail(Errc::InvalidArgument,
           std::string("unknown family '") + c + "', expected A, D or E");
  }
}

DynkinDiagram DynkinDiagram::make(Family family, int rank) {
  switch (family) {
    case Family::A:
      if (rank < 1) fail(Errc::InvalidRank, "type A needs rank >= 1");
      break;
    case Family::D:
      if (rank < 4) fail(Errc::InvalidRank, "type D needs rank >= 4");
      break;
    case Family::E:
      if (rank < 6 || rank > 8)
        fail(Errc::InvalidRank, "type E needs rank 6, 7 or 8");
      break;
  }
  return DynkinDiagram(family, rank);
}

DynkinDiagram::DynkinDiagram(Family family, int rank)
    : family_(family), rank_(rank) {
  switch (family_) {
    case Family::A:
      for (int j = 1; j < rank_; ++j) edges_.emplace_back(j, j + 1);
      break;
    case Family::D:
      for (int j = 1; j < rank_ - 2; ++j) edges_.emplace_back(j, j + 1);
      edges_.emplace_back(rank_ - 2, rank_ - 1);
      edges_.emplace_back(rank_ - 2, rank_);
      break;
    case Family::E:
      for (int j = 1; j < rank_ - 1; ++j) edges_.emplace_back(j, j + 1);
      edges_.emplace_back(3, rank_);
      break;
  }
  std::sort(edges_.begin(), edges_.end());

  nbrs_.assign(rank_ + 1, {});
  for (auto [a, b] : edges_) {
    nbrs_[a].push_back(b);
    nbrs_[b].push_back(a);
  }
  for (auto& v : nbrs_) std::sort(v.begin(), v.end());

  // Every label is reachable from vertex 1 along increasing labels, so depth
  // is the plain tree distance from vertex 1.
  depth_.assign(rank_ + 1, 0);
  for (int j = 2; j <= rank_; ++j) {
    int low = nbrs_[j].front();  // unique neighbour below j in a tree rooted at 1
    require_internal(low < j, "labelling not monotone from vertex 1");
    depth_[j] = depth_[low] + 1;
  }
}

const std::vector<int>& DynkinDiagram::neighbors(int j) const {
  if (j < 1 || j > rank_)
    fail(Errc::InvalidArgument, "vertex label out of range");
  return nbrs_[j];
}

bool DynkinDiagram::has_edge(int a, int b) const {
  if (a > b) std::swap(a, b);
  return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(a, b));
}

int DynkinDiagram::coxeter_number() const {
  switch (family_) {
    case Family::A: return rank_ + 1;
    case Family::D: return 2 * rank_ - 2;
    case Family::E: return rank_ == 6 ? 12 : rank_ == 7 ? 18 : 30;
  }
  fail(Errc::Internal, "bad family enum");
}

std::vector<int> DynkinDiagram::automorphism(AutKind kind) const {
  std::vector<int> p(rank_ + 1);
  std::iota(p.begin(), p.end(), 0);
  if (kind == AutKind::Identity) return p;

  switch (family_) {
    case Family::A:
      for (int j = 1; j <= rank_; ++j) p[j] = rank_ + 1 - j;
      break;
    case Family::D:
      std::swap(p[rank_ - 1], p[rank_]);
      break;
    case Family::E:
      if (rank_ != 6)
        fail(Errc::NoSuchAutomorphism,
             "E_7 and E_8 have no nontrivial diagram automorphism");
      p[1] = 5; p[5] = 1;
      p[2] = 4; p[4] = 2;
      break;
  }
  return p;
}

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::InvalidRank: return "InvalidRank";
    case Errc::NoSuchAutomorphism: return "NoSuchAutomorphism";
    case Errc::DiagramMismatch: return "DiagramMismatch";
    case Errc::NotRightward: return "NotRightward";
    case Errc::NotTauStable: return "NotTauStable";
    case Errc::MissingCoveringData: return "MissingCoveringData";
    case Errc::WindowTooSmall: return "WindowTooSmall";
    case Errc::HypothesisViolated: return "HypothesisViolated";
    case Errc::RankTooSmall: return "RankTooSmall";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::ParseError: return "ParseError";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace arq
