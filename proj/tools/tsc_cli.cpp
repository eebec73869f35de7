// Copyright (c) 2026 the tsc-graphs authors
// Licensed under the Apache License, Version 2.0.
//
// Command-line driver.  Talks to the library exclusively through the C
// interface; all structured data is JSON.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tsc/tsc_c.h"

namespace {

using Json = nlohmann::json;

constexpr int kExitError = 2;

struct CliError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Takes ownership of a library-allocated string.
std::string take(char* s) {
  std::string out = s ? s : "";
  tsc_string_free(s);
  return out;
}

void check(tsc_status status) {
  if (status != TSC_OK)
    throw CliError(std::string("error: ") + tsc_last_error());
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError("error: cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Emits the JSON result: to --out when given, otherwise to stdout.
void deliver(const std::string& json, const std::string& out_path) {
  if (out_path.empty()) {
    std::printf("%s\n", json.c_str());
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw CliError("error: cannot write " + out_path);
  out << json << "\n";
}

std::vector<long> parse_longs(const std::string& csv) {
  std::vector<long> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stol(item));
  return out;
}

struct GraphHandle {
  tsc_graph* g = nullptr;
  ~GraphHandle() { tsc_graph_free(g); }
};

void load_graph(const std::string& path, GraphHandle& h) {
  check(tsc_graph_from_json(read_file(path).c_str(), &h.g));
}

std::string build_field(long p, int r, const std::string& poly_csv,
                        const std::string& omega_csv) {
  auto csv_json = [](const std::string& csv) -> std::optional<std::string> {
    if (csv.empty()) return std::nullopt;
    return Json(parse_longs(csv)).dump();
  };
  auto poly = csv_json(poly_csv);
  auto omega = csv_json(omega_csv);
  char* out = nullptr;
  check(tsc_field_build(p, r, poly ? poly->c_str() : nullptr,
                        omega ? omega->c_str() : nullptr, &out));
  return take(out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classification toolkit for totally symmetric colored graphs"};
  app.require_subcommand(1);

  int threads = 1;
  std::string cache_dir;
  std::string out_path;
  if (const char* env = std::getenv("TSC_CACHE_DIR")) cache_dir = env;
  app.add_option("--threads", threads, "worker threads for searches");
  app.add_option("--cache-dir", cache_dir,
                 "certificate cache directory (overrides TSC_CACHE_DIR)");
  app.add_option("--out", out_path, "write the JSON result to this file");

  // field build
  long p = 0;
  int r = 0;
  std::string poly_csv, omega_csv;
  auto* field = app.add_subcommand("field", "finite field tables");
  auto* field_build = field->add_subcommand("build", "construct GF(p^r)");
  field_build->add_option("--p", p, "characteristic")->required();
  field_build->add_option("--r", r, "extension degree")->required();
  field_build->add_option("--poly", poly_csv, "modulus c0,c1,...,cr");
  field_build->add_option("--omega", omega_csv, "primitive root a0,...,a_{r-1}");

  // graph build
  std::string family, blocks_json, label, graph_field_file;
  int gk = 0, gd = 0;
  auto* graph = app.add_subcommand("graph", "colored graph construction");
  auto* graph_build = graph->add_subcommand("build", "construct a family member");
  graph_build->add_option("family", family,
                          "gp | paley | peisert | direction | partition")
      ->required();
  graph_build->add_option("--p", p, "base field characteristic");
  graph_build->add_option("--r", r, "base field degree (default 1)");
  graph_build->add_option("--poly", poly_csv, "base field modulus");
  graph_build->add_option("--field", graph_field_file,
                          "base field record file (alternative to --p/--r)");
  graph_build->add_option("--k", gk, "number of colors (gp)");
  graph_build->add_option("--d", gd, "dimension (direction, partition)");
  graph_build->add_option("--blocks", blocks_json,
                          "direction blocks as JSON (partition)");
  graph_build->add_option("--label", label, "graph label (partition)");

  // foulser enumerate
  int fk = 0;
  bool with_overgroups = false;
  auto* foulser = app.add_subcommand("foulser", "zero-stabilizer candidates");
  auto* foulser_enum =
      foulser->add_subcommand("enumerate", "surviving standard-form triples");
  foulser_enum->add_option("--p", p, "characteristic")->required();
  foulser_enum->add_option("--r", r, "extension degree")->required();
  foulser_enum->add_option("--k", fk, "number of colors")->required();
  foulser_enum->add_flag("--overgroups", with_overgroups,
                         "include index-k overgroup analysis");

  // verify tsc
  std::string graph_file, triple_csv, matrices_file, witness_file;
  auto* verify = app.add_subcommand("verify", "symmetry verification");
  auto* verify_tsc = verify->add_subcommand("tsc", "arc + color-group verdict");
  verify_tsc->add_option("--graph", graph_file, "graph record file")->required();
  verify_tsc->add_option("--triple", triple_csv, "stabilizer triple d,e,s");
  verify_tsc->add_option("--matrices", matrices_file,
                         "stabilizer matrix list file");
  verify_tsc->add_option("--witness", witness_file,
                         "witness matrix list file (JSON array)");

  // iso
  std::string graph_a, graph_b;
  bool permute_colors = false;
  auto* iso = app.add_subcommand("iso", "color-preserving isomorphism");
  iso->add_option("--a", graph_a, "first graph record file")->required();
  iso->add_option("--b", graph_b, "second graph record file")->required();
  iso->add_flag("--permute-colors", permute_colors,
                "allow a global color permutation");

  // search
  std::string kind, colors_csv, target_csv;
  bool no_prune = false, fast_gf2 = false, count_all = false, no_pin = false;
  auto* search = app.add_subcommand("search", "exhaustive matrix search");
  search->add_option("kind", kind, "transposition | cyclic")->required();
  search->add_option("--graph", graph_file, "graph record file")->required();
  search->add_option("--colors", colors_csv,
                     "two colors to swap, e.g. \"1,2\" (transposition)");
  search->add_option("--target", target_csv,
                     "explicit color permutation t0,t1,...");
  search->add_flag("--no-prune", no_prune, "disable pair-sum pruning");
  search->add_flag("--fast-gf2", fast_gf2, "byte-coded GF(2^r) path");
  search->add_flag("--count-all", count_all, "count every witness");
  search->add_flag("--no-pin", no_pin, "do not pin the first column");

  // replay
  std::string cases_spec;
  bool include_long = false;
  auto* replay = app.add_subcommand("replay", "full classification pipeline");
  replay->add_option("--cases", cases_spec,
                     "semicolon-separated p,r,k triples (default: full table)");
  replay->add_flag("--include-long", include_long,
                   "include the hours-budget 2^8 case");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (*field_build) {
      deliver(build_field(p, r, poly_csv, omega_csv), out_path);
      return 0;
    }

    if (*graph_build) {
      std::string field_json;
      if (!graph_field_file.empty()) {
        field_json = read_file(graph_field_file);
      } else {
        if (p == 0) throw CliError("error: provide --field or --p");
        field_json = build_field(p, r == 0 ? 1 : r, poly_csv, "");
      }
      Json params = Json::object();
      if (family == "gp") params["k"] = gk;
      if (family == "direction" || family == "partition") params["d"] = gd;
      if (family == "partition") {
        if (blocks_json.empty())
          throw CliError("error: partition requires --blocks");
        params["blocks"] = Json::parse(blocks_json);
        if (!label.empty()) params["label"] = label;
      }
      GraphHandle h;
      check(tsc_graph_build(family.c_str(), field_json.c_str(),
                            params.dump().c_str(), &h.g));
      char* out = nullptr;
      check(tsc_graph_to_json(h.g, &out));
      deliver(take(out), out_path);
      return 0;
    }

    if (*foulser_enum) {
      char* out = nullptr;
      check(tsc_foulser_enumerate(p, r, fk, with_overgroups ? 1 : 0, &out));
      std::string json = take(out);
      Json res = Json::parse(json);
      std::fprintf(stderr, "%zu surviving candidate(s)\n",
                   res.at("candidates").size());
      deliver(json, out_path);
      return 0;
    }

    if (*verify_tsc) {
      GraphHandle h;
      load_graph(graph_file, h);
      Json stab;
      if (!triple_csv.empty()) {
        auto v = parse_longs(triple_csv);
        if (v.size() != 3) throw CliError("error: --triple needs d,e,s");
        stab["triple"] = Json{{"d", v[0]}, {"e", v[1]}, {"s", v[2]}};
      } else if (!matrices_file.empty()) {
        stab["matrices"] = Json::parse(read_file(matrices_file));
      } else {
        throw CliError("error: provide --triple or --matrices");
      }
      std::string witnesses =
          witness_file.empty() ? "[]" : read_file(witness_file);
      char* out = nullptr;
      check(tsc_verify(h.g, stab.dump().c_str(), witnesses.c_str(), &out));
      std::string json = take(out);
      std::fprintf(stderr, "verdict: %s\n",
                   Json::parse(json).at("verdict").get<std::string>().c_str());
      deliver(json, out_path);
      return 0;
    }

    if (*iso) {
      GraphHandle a, b;
      load_graph(graph_a, a);
      load_graph(graph_b, b);
      char* out = nullptr;
      check(tsc_iso(a.g, b.g, permute_colors ? 1 : 0, &out));
      std::string json = take(out);
      std::fprintf(stderr, "isomorphic: %s\n",
                   Json::parse(json).at("isomorphic").get<bool>() ? "yes" : "no");
      deliver(json, out_path);
      return 0;
    }

    if (*search) {
      if (kind != "transposition" && kind != "cyclic")
        throw CliError("error: kind must be transposition or cyclic");
      GraphHandle h;
      load_graph(graph_file, h);
      char* gj = nullptr;
      check(tsc_graph_to_json(h.g, &gj));
      int k = Json::parse(take(gj)).at("k").get<int>();

      std::vector<long> target;
      if (!target_csv.empty()) {
        target = parse_longs(target_csv);
      } else if (kind == "transposition") {
        if (colors_csv.empty())
          throw CliError("error: transposition needs --colors or --target");
        auto pair = parse_longs(colors_csv);
        if (pair.size() != 2) throw CliError("error: --colors needs two values");
        for (int i = 0; i < k; ++i) target.push_back(i);
        std::swap(target[pair[0]], target[pair[1]]);
      } else {  // cyclic: (0 1 ... k-1)
        for (int i = 0; i < k; ++i) target.push_back((i + 1) % k);
      }

      Json cfg{{"target", target},
               {"prune_pair_sums", !no_prune},
               {"thread_count", threads},
               {"count_all", count_all}};
      if (no_pin) cfg["fix_first_column"] = false;
      const char* api_kind =
          fast_gf2 ? "gf2" : (kind == "cyclic" ? "cyclic" : "transposition");
      char* out = nullptr;
      check(tsc_search(h.g, cfg.dump().c_str(), api_kind,
                       cache_dir.empty() ? nullptr : cache_dir.c_str(), &out));
      std::string json = take(out);
      Json cert = Json::parse(json);
      std::fprintf(stderr, "%s (enumerated %llu, pruned %llu)\n",
                   cert.at("outcome").get<std::string>().c_str(),
                   (unsigned long long)cert.at("candidates_enumerated")
                       .get<std::uint64_t>(),
                   (unsigned long long)cert.at("candidates_pruned")
                       .get<std::uint64_t>());
      deliver(json, out_path);
      return 0;
    }

    if (*replay) {
      std::string cases_json;
      if (!cases_spec.empty()) {
        Json arr = Json::array();
        std::stringstream ss(cases_spec);
        std::string one;
        while (std::getline(ss, one, ';')) {
          auto v = parse_longs(one);
          if (v.size() != 3) throw CliError("error: each case is p,r,k");
          arr.push_back(Json{{"p", v[0]}, {"r", v[1]}, {"k", v[2]}});
        }
        cases_json = arr.dump();
      }
      char* out = nullptr;
      check(tsc_replay(cases_json.empty() ? nullptr : cases_json.c_str(),
                       include_long ? 1 : 0, threads,
                       cache_dir.empty() ? nullptr : cache_dir.c_str(), &out));
      std::string json = take(out);
      Json rep = Json::parse(json);
      for (const auto& c : rep.at("cases")) {
        std::string line = "case (" + c.at("p").dump() + "," +
                           c.at("r").dump() + "," + c.at("k").dump() + "): ";
        if (c.at("status") == "error") {
          line += "error " + c.at("error").at("code").get<std::string>();
        } else {
          for (const auto& g : c.at("graphs"))
            line += g.at("label").get<std::string>() + "=" +
                    g.at("verdict").get<std::string>() + " ";
        }
        std::fprintf(stderr, "%s\n", line.c_str());
      }
      deliver(json, out_path);
      return 0;
    }

    throw CliError("error: unknown subcommand");
  } catch (const CliError& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return kExitError;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitError;
  }
}
