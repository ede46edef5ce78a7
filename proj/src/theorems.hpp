#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cluster.hpp"
#include "meshhom.hpp"

namespace arq {

// The five supported quotient constructions: band narrowing within types A
// and D, and the three exceptional-type descents.
enum class QuotientCase { A_chain, D_chain, E7_from_E8, E6_from_E8, E6_from_E7 };

const char* quotient_case_name(QuotientCase c);
std::optional<QuotientCase> quotient_case_from_name(std::string_view s);

struct Hypothesis {
  std::string name;
  bool holds = false;
};

// Outcome of one verification run. The construction deletes a tau-stable
// vertex set from the ambient cluster quiver and compares the result with the
// target cluster quiver. Only combinatorial facts are certified: finiteness,
// connectedness and the quiver isomorphism are checked; standardness and
// algebraic origin of the categories are assumptions, recorded as such.
struct VerificationReport {
  QuotientCase which = QuotientCase::A_chain;
  Family ambient_family = Family::A;
  Family target_family = Family::A;
  int ambient_rank = 0, ambient_level = 0;  // (n, v)
  int target_rank = 0, target_level = 0;    // (m, u)
  std::vector<Hypothesis> hypotheses;
  std::vector<int> deleted_rows;    // set when the deletion is a full row set
  std::vector<int> deleted_orbits;  // tau-orbit indices in the ambient quiver
  bool searched = false;            // deletion set found by subset search
  bool no_witness = false;          // search exhausted without an isomorphism
  bool tau_stable = false;
  int ambient_size = 0, quotient_size = 0, target_size = 0;
  bool isomorphic = false;
  std::vector<int> iso_witness;    // quotient vertex -> target vertex
  std::optional<bool> hom_checked;  // oracle Hom matrices agree under the witness
  std::vector<long> quotient_exceptional, target_exceptional;  // D only
  bool open_question = false;  // hypotheses hold yet the quivers differ
  bool ok = false;
};

struct VerifyOptions {
  bool check_hom = false;
};

// Band narrowing in type A: delete rows from the level-v rank-n cluster
// quiver and compare with the level-u rank-m one. Requires u >= v >= 1,
// u = v (mod 2) and u(m+1) = v(n+1); throws HypothesisViolated otherwise.
VerificationReport verify_quotient_A(int u, int v, int m, int n,
                                     const VerifyOptions& opt = {});

// Band narrowing in type D (m, n >= 4): requires u >= v >= 1 and
// u(m-1) = v(n-1), plus "if u and m are both odd then v and n are both odd".
// Parameter sets can satisfy all of that and still fail the isomorphism test;
// the report then carries the open_question flag instead of an error.
VerificationReport verify_quotient_D(int u, int v, int m, int n,
                                     const VerifyOptions& opt = {});

// Exceptional descents. Arithmetic per case: E7_from_E8 needs 3u = 5v;
// E6_from_E8 needs u even and 2u = 5v; E6_from_E7 needs u even and 2u = 3v.
// The deletion set is found by searching tau-orbit subsets of the right
// cardinality in canonical order; exhaustion is reported via no_witness.
VerificationReport verify_quotient_E(QuotientCase which, int u, int v,
                                     const VerifyOptions& opt = {});

VerificationReport verify_quotient(QuotientCase which, int u, int v, int m,
                                   int n, const VerifyOptions& opt = {});

// Ambient parameters realizing a level-u rank-m cluster quiver as a quotient:
// A: u odd -> (1, u(m+1)-1), u even -> (2, (u/2)(m+1)-1);
// D: u odd -> (1, u(m-1)+1), u even -> (2, (u/2)(m-1)+1), m >= 4.
struct CorollaryParams {
  int v = 0, n = 0;
};
CorollaryParams corollary_params(Family f, int u, int m);

struct DeletionWitness {
  std::vector<int> orbits;  // tau-orbit indices, ascending
  std::vector<int> rows;    // set when the orbit union is a full row set
};

// Exhaustive search over unions of tau-orbits of the source cluster quiver
// whose deletion leaves a quiver isomorphic to the target cluster quiver.
// Witnesses are ordered by size then lexicographically; an empty list is a
// meaningful negative answer.
std::vector<DeletionWitness> search_quotients(Family source_family,
                                              int source_rank, int source_level,
                                              Family target_family,
                                              int target_rank, int target_level);

}  // namespace arq
