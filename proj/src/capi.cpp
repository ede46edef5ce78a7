#include "arquiver.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "serialize.hpp"

using namespace arq;

struct arq_quiver {
  TranslationQuiver q;
};

namespace {

thread_local std::string g_last_error;

arq_status status_of(Errc c) {
  switch (c) {
    case Errc::InvalidArgument: return ARQ_INVALID_ARGUMENT;
    case Errc::InvalidRank: return ARQ_INVALID_RANK;
    case Errc::NoSuchAutomorphism: return ARQ_NO_SUCH_AUTOMORPHISM;
    case Errc::DiagramMismatch: return ARQ_DIAGRAM_MISMATCH;
    case Errc::NotRightward: return ARQ_NOT_RIGHTWARD;
    case Errc::NotTauStable: return ARQ_NOT_TAU_STABLE;
    case Errc::MissingCoveringData: return ARQ_MISSING_COVERING_DATA;
    case Errc::WindowTooSmall: return ARQ_WINDOW_TOO_SMALL;
    case Errc::HypothesisViolated: return ARQ_HYPOTHESIS_VIOLATED;
    case Errc::RankTooSmall: return ARQ_RANK_TOO_SMALL;
    case Errc::ShapeMismatch: return ARQ_SHAPE_MISMATCH;
    case Errc::ParseError: return ARQ_PARSE_ERROR;
    case Errc::Internal: return ARQ_INTERNAL;
  }
  return ARQ_INTERNAL;
}

template <typename Fn>
arq_status guarded(Fn&& fn) {
  try {
    fn();
    return ARQ_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return ARQ_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = (char*)std::malloc(s.size() + 1);
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

Family family_arg(char c) { return family_from_letter(c); }

const TranslationQuiver& deref(const arq_quiver* q) {
  if (!q) fail(Errc::InvalidArgument, "null quiver handle");
  return q->q;
}

}  // namespace

extern "C" {

const char* arq_status_name(arq_status s) {
  switch (s) {
    case ARQ_OK: return "Ok";
    case ARQ_INVALID_ARGUMENT: return "InvalidArgument";
    case ARQ_INVALID_RANK: return "InvalidRank";
    case ARQ_NO_SUCH_AUTOMORPHISM: return "NoSuchAutomorphism";
    case ARQ_DIAGRAM_MISMATCH: return "DiagramMismatch";
    case ARQ_NOT_RIGHTWARD: return "NotRightward";
    case ARQ_NOT_TAU_STABLE: return "NotTauStable";
    case ARQ_MISSING_COVERING_DATA: return "MissingCoveringData";
    case ARQ_WINDOW_TOO_SMALL: return "WindowTooSmall";
    case ARQ_HYPOTHESIS_VIOLATED: return "HypothesisViolated";
    case ARQ_RANK_TOO_SMALL: return "RankTooSmall";
    case ARQ_SHAPE_MISMATCH: return "ShapeMismatch";
    case ARQ_PARSE_ERROR: return "ParseError";
    case ARQ_INTERNAL: return "Internal";
  }
  return "Unknown";
}

const char* arq_last_error(void) { return g_last_error.c_str(); }

void arq_string_free(char* s) { std::free(s); }
void arq_ints_free(int* xs) { std::free(xs); }
void arq_quiver_free(arq_quiver* q) { delete q; }

arq_status arq_cluster_quiver(char family, int rank, int level,
                              arq_quiver** out) {
  return guarded([&] {
    if (!out) fail(Errc::InvalidArgument, "null output pointer");
    *out = new arq_quiver{cluster_quiver(family_arg(family), rank, level)};
  });
}

arq_status arq_quiver_from_json(const char* text, arq_quiver** out) {
  return guarded([&] {
    if (!text || !out) fail(Errc::InvalidArgument, "null argument");
    *out = new arq_quiver{quiver_from_json(text)};
  });
}

arq_status arq_quiver_to_json(const arq_quiver* q, char** out) {
  return guarded([&] {
    if (!out) fail(Errc::InvalidArgument, "null output pointer");
    *out = dup_string(quiver_to_json(deref(q)));
  });
}

arq_status arq_quiver_to_dot(const arq_quiver* q, char** out) {
  return guarded([&] {
    if (!out) fail(Errc::InvalidArgument, "null output pointer");
    *out = dup_string(quiver_to_dot(deref(q)));
  });
}

arq_status arq_quiver_to_text(const arq_quiver* q, char** out) {
  return guarded([&] {
    if (!out) fail(Errc::InvalidArgument, "null output pointer");
    *out = dup_string(quiver_to_text(deref(q)));
  });
}

int arq_quiver_size(const arq_quiver* q) { return q ? q->q.size() : -1; }

arq_status arq_quiver_vertex_name(const arq_quiver* q, int v, char** out) {
  return guarded([&] {
    if (!out) fail(Errc::InvalidArgument, "null output pointer");
    const TranslationQuiver& t = deref(q);
    if (v < 0 || v >= t.size())
      fail(Errc::InvalidArgument, "vertex index out of range");
    *out = dup_string(t.vertex_name(v));
  });
}

arq_status arq_delete_rows(const arq_quiver* q, const int* rows, int count,
                           arq_quiver** out) {
  return guarded([&] {
    if (!out || (count > 0 && !rows))
      fail(Errc::InvalidArgument, "null argument");
    std::vector<int> xs(rows, rows + count);
    *out = new arq_quiver{delete_rows(deref(q), xs)};
  });
}

arq_status arq_delete_orbits(const arq_quiver* q, const int* orbit_ids,
                             int count, arq_quiver** out) {
  return guarded([&] {
    if (!out || (count > 0 && !orbit_ids))
      fail(Errc::InvalidArgument, "null argument");
    std::vector<int> xs(orbit_ids, orbit_ids + count);
    *out = new arq_quiver{delete_orbits(deref(q), xs)};
  });
}

arq_status arq_isomorphism(const arq_quiver* a, const arq_quiver* b,
                           int* isomorphic, int** witness) {
  return guarded([&] {
    if (!isomorphic) fail(Errc::InvalidArgument, "null output pointer");
    auto w = is_isomorphic(deref(a), deref(b));
    *isomorphic = w ? 1 : 0;
    if (witness) {
      *witness = nullptr;
      if (w) {
        *witness = (int*)std::malloc(sizeof(int) * std::max<size_t>(w->size(), 1));
        std::copy(w->begin(), w->end(), *witness);
      }
    }
  });
}

arq_status arq_hom_dim(const arq_quiver* q, int x, int y, int use_oracle,
                       int* dim) {
  return guarded([&] {
    if (!dim) fail(Errc::InvalidArgument, "null output pointer");
    *dim = use_oracle ? oracle_mesh_hom(deref(q), x, y)
                      : hom_dim_orbit(deref(q), x, y);
  });
}

arq_status arq_hom_matrix_json(const arq_quiver* q, int use_oracle,
                               char** out) {
  return guarded([&] {
    if (!out) fail(Errc::InvalidArgument, "null output pointer");
    HomMatrix m =
        use_oracle ? hom_matrix_oracle(deref(q)) : hom_matrix(deref(q));
    *out = dup_string(hom_to_json(m, use_oracle ? "oracle" : "covering"));
  });
}

arq_status arq_verify(const char* case_name, int u, int v, int m, int n,
                      int check_hom, int text_format, int* ok, char** report) {
  return guarded([&] {
    if (!case_name || !ok) fail(Errc::InvalidArgument, "null argument");
    auto which = quotient_case_from_name(case_name);
    if (!which)
      fail(Errc::InvalidArgument,
           "unknown case (expected A, D, E7_from_E8, E6_from_E8 or "
           "E6_from_E7)");
    VerificationReport rep =
        verify_quotient(*which, u, v, m, n, {check_hom != 0});
    *ok = rep.ok ? 1 : 0;
    if (report)
      *report =
          dup_string(text_format ? report_to_text(rep) : report_to_json(rep));
  });
}

arq_status arq_corollary_params(char family, int u, int m, int* v, int* n) {
  return guarded([&] {
    if (!v || !n) fail(Errc::InvalidArgument, "null output pointer");
    CorollaryParams p = corollary_params(family_arg(family), u, m);
    *v = p.v;
    *n = p.n;
  });
}

arq_status arq_search(char source_family, int source_rank, int source_level,
                      char target_family, int target_rank, int target_level,
                      int text_format, int* count, char** result) {
  return guarded([&] {
    if (!count) fail(Errc::InvalidArgument, "null output pointer");
    SearchQuery query{family_arg(source_family), source_rank, source_level,
                      family_arg(target_family), target_rank, target_level};
    auto ws = search_quotients(query.source_family, query.source_rank,
                               query.source_level, query.target_family,
                               query.target_rank, query.target_level);
    *count = (int)ws.size();
    if (result)
      *result = dup_string(text_format ? search_to_text(query, ws)
                                       : search_to_json(query, ws));
  });
}

}  // extern "C"
