#include "serialize.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace arq {

using ordered_json = nlohmann::ordered_json;

namespace {

std::string letter(Family f) { return std::string(1, family_letter(f)); }

ordered_json quiver_doc(const TranslationQuiver& q) {
  ordered_json meta;
  const QuiverMeta& m = q.meta();
  meta["family"] = m.family ? ordered_json(letter(*m.family)) : ordered_json();
  meta["rank"] = m.rank;
  meta["level"] = m.level ? ordered_json(*m.level) : ordered_json();
  meta["standard"] = m.standard;
  meta["connected"] = m.connected;
  meta["mesh_checked"] = m.mesh_checked;
  if (q.covering()) {
    const CoveringData& c = *q.covering();
    ordered_json cov;
    cov["family"] = letter(c.diagram.family());
    cov["rank"] = c.diagram.rank();
    std::vector<int> perm, shifts;
    for (int j = 1; j <= c.diagram.rank(); ++j) {
      perm.push_back(c.identification.g(j));
      shifts.push_back(c.identification.shift(j));
    }
    cov["permutation"] = perm;
    cov["shifts"] = shifts;
    meta["covering"] = cov;
  }

  ordered_json vertices = ordered_json::array();
  for (int v = 0; v < q.size(); ++v) {
    ordered_json entry;
    entry["id"] = v;
    if (q.vertex(v).residue) {
      entry["label"] = {q.vertex(v).residue->i, q.vertex(v).residue->j};
    } else {
      entry["tag"] = q.vertex(v).tag;
    }
    vertices.push_back(entry);
  }

  ordered_json arrows = ordered_json::array();
  for (int v = 0; v < q.size(); ++v)
    for (int w : q.arrows_out(v)) arrows.push_back({v, w});

  std::vector<int> tau_map;
  for (int v = 0; v < q.size(); ++v) tau_map.push_back(q.tau(v));

  ordered_json doc;
  doc["format_version"] = 1;
  doc["meta"] = meta;
  doc["vertices"] = vertices;
  doc["arrows"] = arrows;
  doc["tau"] = tau_map;
  if (q.deletion()) {
    const DeletionContext& ctx = *q.deletion();
    std::vector<int> deleted;
    for (int v = 0; v < (int)ctx.deleted_in_parent.size(); ++v)
      if (ctx.deleted_in_parent[v]) deleted.push_back(v);
    ordered_json del;
    del["deleted_in_parent"] = deleted;
    del["parent"] = quiver_doc(*ctx.parent);
    doc["deletion"] = del;
  }
  return doc;
}

Family family_from_json(const ordered_json& j) {
  std::string s = j.get<std::string>();
  if (s.size() != 1) fail(Errc::ParseError, "family must be a single letter");
  return family_from_letter(s[0]);
}

TranslationQuiver quiver_from_doc(const ordered_json& doc) {
  if (!doc.is_object()) fail(Errc::ParseError, "quiver document must be an object");
  if (!doc.contains("format_version") || !doc["format_version"].is_number_integer() ||
      doc["format_version"].get<int>() != 1)
    fail(Errc::ParseError, "unsupported or missing format_version");
  for (const char* key : {"meta", "vertices", "arrows", "tau"})
    if (!doc.contains(key))
      fail(Errc::ParseError, std::string("missing field: ") + key);

  const ordered_json& jm = doc["meta"];
  QuiverMeta meta;
  if (jm.contains("family") && !jm["family"].is_null())
    meta.family = family_from_json(jm["family"]);
  meta.rank = jm.value("rank", 0);
  if (jm.contains("level") && !jm["level"].is_null())
    meta.level = jm["level"].get<int>();
  meta.standard = jm.value("standard", true);
  meta.connected = jm.value("connected", false);
  meta.mesh_checked = jm.value("mesh_checked", false);

  std::shared_ptr<const CoveringData> covering;
  if (jm.contains("covering") && !jm["covering"].is_null()) {
    const ordered_json& jc = jm["covering"];
    DynkinDiagram d = DynkinDiagram::make(family_from_json(jc.at("family")),
                                          jc.at("rank").get<int>());
    std::vector<int> g{0}, s{0};
    for (int x : jc.at("permutation").get<std::vector<int>>()) g.push_back(x);
    for (int x : jc.at("shifts").get<std::vector<int>>()) s.push_back(x);
    if ((int)g.size() != d.rank() + 1 || (int)s.size() != d.rank() + 1)
      fail(Errc::ParseError, "covering arrays must have one entry per row");
    covering = std::make_shared<CoveringData>(
        CoveringData{d, AffineAut(d, std::move(g), std::move(s))});
  }

  std::vector<TranslationQuiver::Vertex> vertices;
  const ordered_json& jv = doc["vertices"];
  if (!jv.is_array()) fail(Errc::ParseError, "vertices must be an array");
  for (int v = 0; v < (int)jv.size(); ++v) {
    const ordered_json& e = jv[v];
    if (!e.is_object() || e.value("id", -1) != v)
      fail(Errc::ParseError, "vertex ids must be dense from 0 in order");
    TranslationQuiver::Vertex vx;
    if (e.contains("label")) {
      auto lab = e["label"].get<std::vector<int>>();
      if (lab.size() != 2) fail(Errc::ParseError, "vertex label must be [i, j]");
      vx.residue = ZVertex{lab[0], lab[1]};
    } else if (e.contains("tag")) {
      vx.tag = e["tag"].get<std::string>();
    } else {
      fail(Errc::ParseError, "vertex needs a label or a tag");
    }
    vertices.push_back(std::move(vx));
  }

  std::vector<std::pair<int, int>> arrows;
  if (!doc["arrows"].is_array()) fail(Errc::ParseError, "arrows must be an array");
  for (const ordered_json& a : doc["arrows"]) {
    auto pair = a.get<std::vector<int>>();
    if (pair.size() != 2) fail(Errc::ParseError, "arrow must be [src, dst]");
    arrows.emplace_back(pair[0], pair[1]);
  }

  std::vector<int> tau_map = doc["tau"].get<std::vector<int>>();

  std::shared_ptr<const DeletionContext> deletion;
  if (doc.contains("deletion") && !doc["deletion"].is_null()) {
    const ordered_json& jd = doc["deletion"];
    auto parent = std::make_shared<TranslationQuiver>(
        quiver_from_doc(jd.at("parent")));
    std::vector<char> mask(parent->size(), 0);
    for (int v : jd.at("deleted_in_parent").get<std::vector<int>>()) {
      if (v < 0 || v >= parent->size())
        fail(Errc::ParseError, "deleted vertex out of the parent's range");
      mask[v] = 1;
    }
    std::vector<int> parent_index;
    for (int v = 0; v < parent->size(); ++v)
      if (!mask[v]) parent_index.push_back(v);
    if ((int)parent_index.size() != (int)vertices.size())
      fail(Errc::ParseError, "deletion does not account for every vertex");
    deletion = std::make_shared<DeletionContext>(
        DeletionContext{parent, std::move(mask), std::move(parent_index)});
  }

  return TranslationQuiver(std::move(vertices), std::move(arrows),
                           std::move(tau_map), meta, covering, deletion);
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

ordered_json side_doc(Family f, int rank, int level, int size = -1) {
  ordered_json j;
  j["family"] = letter(f);
  j["rank"] = rank;
  j["level"] = level;
  if (size >= 0) j["size"] = size;
  return j;
}

ordered_json witness_doc(const DeletionWitness& w) {
  ordered_json j;
  j["orbits"] = w.orbits;
  j["rows"] = w.rows;
  return j;
}

std::string join(const std::vector<int>& xs) {
  std::string out;
  for (size_t k = 0; k < xs.size(); ++k)
    out += (k ? " " : "") + std::to_string(xs[k]);
  return out;
}

std::string join(const std::vector<long>& xs) {
  std::string out;
  for (size_t k = 0; k < xs.size(); ++k)
    out += (k ? " " : "") + std::to_string(xs[k]);
  return out;
}

}  // namespace

std::string quiver_to_json(const TranslationQuiver& q) {
  return dump(quiver_doc(q));
}

TranslationQuiver quiver_from_json(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::ParseError, std::string("invalid JSON: ") + e.what());
  }
  try {
    return quiver_from_doc(doc);
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::ParseError, std::string("invalid quiver document: ") + e.what());
  }
}

std::string quiver_to_dot(const TranslationQuiver& q) {
  std::string out = "digraph quiver {\n  rankdir=LR;\n  node [shape=plaintext];\n";
  for (int v = 0; v < q.size(); ++v)
    out += "  v" + std::to_string(v) + " [label=" + quoted(q.vertex_name(v)) +
           "];\n";
  for (int v = 0; v < q.size(); ++v)
    for (int w : q.arrows_out(v))
      out += "  v" + std::to_string(v) + " -> v" + std::to_string(w) + ";\n";
  for (int v = 0; v < q.size(); ++v)
    out += "  v" + std::to_string(v) + " -> v" + std::to_string(q.tau(v)) +
           " [style=dashed, label=\"tau\"];\n";
  return out + "}\n";
}

std::string quiver_to_text(const TranslationQuiver& q) {
  std::ostringstream out;
  out << "quiver:";
  if (q.meta().family) out << " family " << family_letter(*q.meta().family);
  out << " rank " << q.meta().rank;
  if (q.meta().level) out << " level " << *q.meta().level;
  out << (q.meta().connected ? " connected" : " disconnected");
  if (q.meta().mesh_checked) out << " mesh-checked";
  out << "\n";
  out << "vertices: " << q.size() << "\n";
  for (int v = 0; v < q.size(); ++v)
    out << "  " << v << ": " << q.vertex_name(v) << "\n";
  out << "arrows: " << q.arrow_count() << "\n";
  for (int v = 0; v < q.size(); ++v)
    for (int w : q.arrows_out(v)) out << "  " << v << " -> " << w << "\n";
  out << "tau:\n";
  for (int v = 0; v < q.size(); ++v)
    out << "  " << v << " -> " << q.tau(v) << "\n";
  return out.str();
}

std::string report_to_json(const VerificationReport& r) {
  ordered_json doc;
  doc["format_version"] = 1;
  doc["kind"] = "verification_report";
  doc["case"] = quotient_case_name(r.which);
  doc["ambient"] = side_doc(r.ambient_family, r.ambient_rank, r.ambient_level,
                            r.ambient_size);
  doc["target"] =
      side_doc(r.target_family, r.target_rank, r.target_level, r.target_size);
  ordered_json hyps = ordered_json::array();
  for (const auto& h : r.hypotheses) {
    ordered_json jh;
    jh["name"] = h.name;
    jh["holds"] = h.holds;
    hyps.push_back(jh);
  }
  doc["hypotheses"] = hyps;
  ordered_json del;
  del["rows"] = r.deleted_rows;
  del["orbits"] = r.deleted_orbits;
  del["searched"] = r.searched;
  del["no_witness"] = r.no_witness;
  del["tau_stable"] = r.tau_stable;
  doc["deletion"] = del;
  doc["quotient_size"] = r.quotient_size;
  doc["isomorphic"] = r.isomorphic;
  doc["iso_witness"] =
      r.isomorphic ? ordered_json(r.iso_witness) : ordered_json();
  doc["hom_checked"] =
      r.hom_checked ? ordered_json(*r.hom_checked) : ordered_json();
  if (r.which == QuotientCase::D_chain) {
    ordered_json exc;
    exc["quotient"] = r.quotient_exceptional;
    exc["target"] = r.target_exceptional;
    doc["exceptional_orbit_lengths"] = exc;
  }
  doc["open_question"] = r.open_question;
  ordered_json assumptions;
  assumptions["assumed"] =
      ordered_json::array({"standard category", "algebraic origin"});
  assumptions["checked"] =
      ordered_json::array({"finite", "connected", "quiver isomorphism"});
  doc["assumptions"] = assumptions;
  doc["ok"] = r.ok;
  return dump(doc);
}

std::string report_to_text(const VerificationReport& r) {
  std::ostringstream out;
  out << "case " << quotient_case_name(r.which) << ": ("
      << family_letter(r.ambient_family) << ", rank " << r.ambient_rank
      << ", level " << r.ambient_level << ") -> ("
      << family_letter(r.target_family) << ", rank " << r.target_rank
      << ", level " << r.target_level << ")\n";
  out << "hypotheses:\n";
  for (const auto& h : r.hypotheses)
    out << "  [" << (h.holds ? "ok" : "violated") << "] " << h.name << "\n";
  out << "deletion:";
  if (!r.deleted_rows.empty()) out << " rows " << join(r.deleted_rows);
  out << " tau-orbits " << (r.deleted_orbits.empty() && !r.isomorphic && r.searched
                                ? "(none found)"
                                : join(r.deleted_orbits));
  if (r.deleted_rows.empty() && r.deleted_orbits.empty() && !r.no_witness)
    out << " (empty set)";
  if (r.searched) out << " [by search]";
  out << "\n";
  out << "tau-stable: " << (r.tau_stable ? "yes" : "no") << "\n";
  out << "sizes: ambient " << r.ambient_size << ", quotient "
      << r.quotient_size << ", target " << r.target_size << "\n";
  if (r.which == QuotientCase::D_chain)
    out << "exceptional tau-orbit lengths: quotient {"
        << join(r.quotient_exceptional) << "} target {"
        << join(r.target_exceptional) << "}\n";
  if (r.no_witness)
    out << "no deletion witness found by exhaustive search\n";
  out << "isomorphic: " << (r.isomorphic ? "yes" : "no") << "\n";
  if (r.isomorphic) out << "witness: " << join(r.iso_witness) << "\n";
  if (r.hom_checked)
    out << "hom dimensions agree: " << (*r.hom_checked ? "yes" : "no") << "\n";
  if (r.open_question)
    out << "note: the stated hypotheses hold but the quivers differ; this "
           "parameter set is outside what the construction certifies\n";
  out << "checked: finite, connected, quiver isomorphism\n";
  out << "assumed: standard category, algebraic origin\n";
  out << "result: " << (r.ok ? "pass" : "fail") << "\n";
  return out.str();
}

std::string hom_to_json(const HomMatrix& m, const std::string& route) {
  ordered_json doc;
  doc["format_version"] = 1;
  doc["kind"] = "hom_matrix";
  doc["route"] = route;
  doc["keys"] = m.keys;
  doc["dim"] = m.dim;
  return dump(doc);
}

std::string hom_to_text(const HomMatrix& m) {
  std::ostringstream out;
  for (size_t x = 0; x < m.dim.size(); ++x) {
    for (size_t y = 0; y < m.dim[x].size(); ++y)
      out << (y ? " " : "") << m.dim[x][y];
    out << "  # " << m.keys[x] << "\n";
  }
  return out.str();
}

std::string search_to_json(const SearchQuery& query,
                           const std::vector<DeletionWitness>& witnesses) {
  ordered_json doc;
  doc["format_version"] = 1;
  doc["kind"] = "search_result";
  doc["source"] =
      side_doc(query.source_family, query.source_rank, query.source_level);
  doc["target"] =
      side_doc(query.target_family, query.target_rank, query.target_level);
  ordered_json ws = ordered_json::array();
  for (const auto& w : witnesses) ws.push_back(witness_doc(w));
  doc["witnesses"] = ws;
  return dump(doc);
}

std::string search_to_text(const SearchQuery& query,
                           const std::vector<DeletionWitness>& witnesses) {
  std::ostringstream out;
  out << "search: (" << family_letter(query.source_family) << ", rank "
      << query.source_rank << ", level " << query.source_level << ") -> ("
      << family_letter(query.target_family) << ", rank " << query.target_rank
      << ", level " << query.target_level << ")\n";
  out << "witnesses: " << witnesses.size() << "\n";
  for (const auto& w : witnesses) {
    out << "  tau-orbits {" << join(w.orbits) << "}";
    if (!w.rows.empty()) out << " = rows {" << join(w.rows) << "}";
    out << "\n";
  }
  return out.str();
}

}  // namespace arq
