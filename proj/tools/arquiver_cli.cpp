// Command-line front end. Talks to the library exclusively through the C API.
//
// Exit codes: 0 success, 1 failed check (no isomorphism, empty search,
// tau-instability, missing covering data, ...), 2 usage or parse problems.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "arquiver.h"

namespace {

struct QuiverDeleter {
  void operator()(arq_quiver* q) const { arq_quiver_free(q); }
};
using Handle = std::unique_ptr<arq_quiver, QuiverDeleter>;

struct StrDeleter {
  void operator()(char* s) const { arq_string_free(s); }
};
using CStr = std::unique_ptr<char, StrDeleter>;

int exit_code_for(arq_status s) {
  std::cerr << "error: " << arq_status_name(s) << ": " << arq_last_error()
            << "\n";
  switch (s) {
    case ARQ_PARSE_ERROR:
    case ARQ_INVALID_ARGUMENT:
    case ARQ_INVALID_RANK:
    case ARQ_NO_SUCH_AUTOMORPHISM:
      return 2;
    default:
      return 1;
  }
}

int emit(const std::string& out_path, const char* data) {
  if (out_path.empty()) {
    std::cout << data;
    return 0;
  }
  std::ofstream f(out_path, std::ios::binary);
  f << data;
  if (!f) {
    std::cerr << "error: cannot write " << out_path << "\n";
    return 1;
  }
  return 0;
}

int load_quiver(const std::string& path, Handle& q) {
  std::ifstream f(path, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot read " << path << "\n";
    return 2;
  }
  std::ostringstream buf;
  buf << f.rdbuf();
  arq_quiver* raw = nullptr;
  if (arq_status s = arq_quiver_from_json(buf.str().c_str(), &raw))
    return exit_code_for(s);
  q.reset(raw);
  return 0;
}

int render(const arq_quiver* q, const std::string& format,
           const std::string& out_path) {
  char* text = nullptr;
  arq_status s = format == "dot"    ? arq_quiver_to_dot(q, &text)
                 : format == "text" ? arq_quiver_to_text(q, &text)
                                    : arq_quiver_to_json(q, &text);
  if (s) return exit_code_for(s);
  CStr owned(text);
  return emit(out_path, owned.get());
}

bool parse_triple(const std::string& s, char& family, int& rank, int& level) {
  size_t p1 = s.find(','), p2 = s.find(',', p1 + 1);
  if (p1 == std::string::npos || p2 == std::string::npos) return false;
  std::string f = s.substr(0, p1);
  if (f.size() != 1) return false;
  family = f[0];
  try {
    size_t used = 0;
    std::string r = s.substr(p1 + 1, p2 - p1 - 1), l = s.substr(p2 + 1);
    rank = std::stoi(r, &used);
    if (used != r.size()) return false;
    level = std::stoi(l, &used);
    if (used != l.size()) return false;
  } catch (...) {
    return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Auslander-Reiten quivers of u-cluster categories: construction, "
      "tau-stable deletion, isomorphism, Hom dimensions, quotient "
      "verification"};
  app.require_subcommand(1);
  int rc = 0;

  // cluster
  std::string c_family, c_format = "json", c_out;
  int c_rank = 0, c_level = 0;
  auto* cluster = app.add_subcommand(
      "cluster", "Emit the AR quiver of the u-cluster category of a diagram");
  cluster->add_option("--family", c_family, "A, D or E")
      ->required()
      ->check(CLI::IsMember({"A", "D", "E"}));
  cluster->add_option("--rank", c_rank, "diagram rank")->required();
  cluster->add_option("--level", c_level, "cluster parameter u >= 1")
      ->required();
  cluster->add_option("--format", c_format)
      ->check(CLI::IsMember({"json", "dot", "text"}));
  cluster->add_option("--out", c_out, "output path (default stdout)");
  cluster->callback([&] {
    arq_quiver* raw = nullptr;
    if (arq_status s = arq_cluster_quiver(c_family[0], c_rank, c_level, &raw)) {
      rc = exit_code_for(s);
      return;
    }
    Handle q(raw);
    rc = render(q.get(), c_format, c_out);
  });

  // delete
  std::string d_in, d_format = "json", d_out;
  std::vector<int> d_rows, d_orbits;
  auto* del = app.add_subcommand(
      "delete", "Delete a tau-stable vertex set given by rows or tau-orbits");
  del->add_option("--in", d_in, "input quiver (JSON)")->required();
  auto* rows_opt =
      del->add_option("--rows", d_rows, "residue rows, comma separated")
          ->delimiter(',');
  del->add_option("--orbits", d_orbits, "tau-orbit indices, comma separated")
      ->delimiter(',')
      ->excludes(rows_opt);
  del->add_option("--format", d_format)
      ->check(CLI::IsMember({"json", "dot", "text"}));
  del->add_option("--out", d_out);
  del->callback([&] {
    if (d_rows.empty() && d_orbits.empty() && !rows_opt->count() &&
        !del->count("--orbits")) {
      std::cerr << "error: delete needs --rows or --orbits\n";
      rc = 2;
      return;
    }
    Handle q;
    if ((rc = load_quiver(d_in, q))) return;
    arq_quiver* raw = nullptr;
    arq_status s = rows_opt->count()
                       ? arq_delete_rows(q.get(), d_rows.data(),
                                         (int)d_rows.size(), &raw)
                       : arq_delete_orbits(q.get(), d_orbits.data(),
                                           (int)d_orbits.size(), &raw);
    if (s) {
      rc = exit_code_for(s);
      return;
    }
    Handle out(raw);
    rc = render(out.get(), d_format, d_out);
  });

  // iso
  std::string i_a, i_b;
  auto* iso = app.add_subcommand(
      "iso", "Test two quivers for translation-quiver isomorphism");
  iso->add_option("--a", i_a, "first quiver (JSON)")->required();
  iso->add_option("--b", i_b, "second quiver (JSON)")->required();
  iso->callback([&] {
    Handle a, b;
    if ((rc = load_quiver(i_a, a))) return;
    if ((rc = load_quiver(i_b, b))) return;
    int isomorphic = 0;
    int* witness = nullptr;
    if (arq_status s = arq_isomorphism(a.get(), b.get(), &isomorphic, &witness)) {
      rc = exit_code_for(s);
      return;
    }
    if (!isomorphic) {
      std::cout << "isomorphic: no\n";
      rc = 1;
      return;
    }
    std::cout << "isomorphic: yes\nwitness:";
    for (int v = 0; v < arq_quiver_size(a.get()); ++v)
      std::cout << " " << witness[v];
    std::cout << "\n";
    arq_ints_free(witness);
    rc = 0;
  });

  // hom
  std::string h_in, h_out;
  bool h_oracle = false;
  auto* hom = app.add_subcommand(
      "hom", "Hom-dimension matrix of the mesh category (JSON)");
  hom->add_option("--in", h_in, "input quiver (JSON)")->required();
  hom->add_flag("--oracle", h_oracle,
                "use the path-space computation instead of covering data");
  hom->add_option("--out", h_out);
  hom->callback([&] {
    Handle q;
    if ((rc = load_quiver(h_in, q))) return;
    char* text = nullptr;
    if (arq_status s = arq_hom_matrix_json(q.get(), h_oracle ? 1 : 0, &text)) {
      rc = exit_code_for(s);
      return;
    }
    CStr owned(text);
    rc = emit(h_out, owned.get());
  });

  // verify
  std::string v_case, v_format = "text", v_out;
  int v_u = 0, v_v = 0, v_m = 0, v_n = 0;
  bool v_hom = false;
  auto* verify = app.add_subcommand(
      "verify", "Verify one quotient construction between cluster categories");
  verify
      ->add_option("case", v_case,
                   "A, D, E7_from_E8, E6_from_E8 or E6_from_E7")
      ->required();
  verify->add_option("--u", v_u, "target level")->required();
  verify->add_option("--v", v_v, "ambient level")->required();
  verify->add_option("--m", v_m, "target rank (cases A and D)");
  verify->add_option("--n", v_n, "ambient rank (cases A and D)");
  verify->add_flag("--hom", v_hom, "also compare oracle Hom matrices");
  verify->add_option("--format", v_format)
      ->check(CLI::IsMember({"json", "text"}));
  verify->add_option("--out", v_out);
  verify->callback([&] {
    int ok = 0;
    char* text = nullptr;
    arq_status s = arq_verify(v_case.c_str(), v_u, v_v, v_m, v_n,
                              v_hom ? 1 : 0, v_format == "text" ? 1 : 0, &ok,
                              &text);
    if (s) {
      rc = exit_code_for(s);
      return;
    }
    CStr owned(text);
    if ((rc = emit(v_out, owned.get()))) return;
    rc = ok ? 0 : 1;
  });

  // search
  std::string s_source, s_target, s_format = "text", s_out;
  auto* search = app.add_subcommand(
      "search", "Search tau-orbit deletions turning one cluster quiver into "
                "another");
  search->add_option("--source", s_source, "FAMILY,RANK,LEVEL")->required();
  search->add_option("--target", s_target, "FAMILY,RANK,LEVEL")->required();
  search->add_option("--format", s_format)
      ->check(CLI::IsMember({"json", "text"}));
  search->add_option("--out", s_out);
  search->callback([&] {
    char sf = 0, tf = 0;
    int sr = 0, sl = 0, tr = 0, tl = 0;
    if (!parse_triple(s_source, sf, sr, sl) ||
        !parse_triple(s_target, tf, tr, tl)) {
      std::cerr << "error: --source/--target must look like A,5,1\n";
      rc = 2;
      return;
    }
    int count = 0;
    char* text = nullptr;
    arq_status s = arq_search(sf, sr, sl, tf, tr, tl,
                              s_format == "text" ? 1 : 0, &count, &text);
    if (s) {
      rc = exit_code_for(s);
      return;
    }
    CStr owned(text);
    if ((rc = emit(s_out, owned.get()))) return;
    rc = count > 0 ? 0 : 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  return rc;
}
