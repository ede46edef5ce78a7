#pragma once

#include <string>
#include <vector>

#include "theorems.hpp"

namespace arq {

// Canonical JSON document for a translation quiver: format_version, meta
// (family, rank, level, flags, covering data when present), vertices with
// ids dense from 0, sorted arrow pairs, and the tau permutation. A deleted
// quiver additionally embeds its mesh-complete ancestor and the deleted
// ancestor vertices, so Hom oracles keep working after a round trip.
// Export is byte-deterministic; export -> import -> export is the identity.
std::string quiver_to_json(const TranslationQuiver& q);
TranslationQuiver quiver_from_json(const std::string& text);

// Graphviz output: solid arrows, dashed tau edges labelled "tau".
std::string quiver_to_dot(const TranslationQuiver& q);

std::string quiver_to_text(const TranslationQuiver& q);

std::string report_to_json(const VerificationReport& r);
std::string report_to_text(const VerificationReport& r);

std::string hom_to_json(const HomMatrix& m, const std::string& route);
std::string hom_to_text(const HomMatrix& m);

struct SearchQuery {
  Family source_family = Family::A;
  int source_rank = 0, source_level = 0;
  Family target_family = Family::A;
  int target_rank = 0, target_level = 0;
};

std::string search_to_json(const SearchQuery& query,
                           const std::vector<DeletionWitness>& witnesses);
std::string search_to_text(const SearchQuery& query,
                           const std::vector<DeletionWitness>& witnesses);

}  // namespace arq
