// Copyright (c) 2026 the tsc-graphs authors
// Licensed under the Apache License, Version 2.0.

#include "tsc/json_io.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include "tsc/sha256.hpp"

namespace tsc {

namespace {

// Wraps json access so malformed documents surface as ParseError.
template <typename F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

std::string iso_timestamp() {
  auto now = std::chrono::system_clock::now();
  std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

Json field_to_json(const FieldTable& f) {
  return Json{{"p", f.p()},
              {"r", f.r()},
              {"poly", f.poly()},
              {"omega", f.omega_coeffs()}};
}

FieldRef field_from_json(const Json& j) {
  return guarded([&] {
    long p = j.at("p").get<long>();
    int r = j.at("r").get<int>();
    Coeffs poly = j.at("poly").get<Coeffs>();
    Coeffs omega = j.at("omega").get<Coeffs>();
    return FieldTable::build(p, r, poly, omega);
  });
}

Json graph_to_json(const ColoredCayleyGraph& g) {
  return Json{{"label", g.label()},
              {"p", g.field().p()},
              {"r", g.field().r()},
              {"k", g.k()},
              {"colors", g.color_of_exp()},
              {"field", field_to_json(g.field())}};
}

ColoredCayleyGraph graph_from_json(const Json& j) {
  return guarded([&] {
    FieldRef f = field_from_json(j.at("field"));
    if (j.at("p").get<long>() != f->p() || j.at("r").get<int>() != f->r())
      throw Error(ErrorCode::ParseError, "graph p/r disagree with field record");
    return ColoredCayleyGraph(f, j.at("k").get<int>(),
                              j.at("colors").get<std::vector<int>>(),
                              j.at("label").get<std::string>());
  });
}

Json linear_map_to_json(const LinearMap& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.r; ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.r; ++j) row.push_back(m.at(i, j));
    rows.push_back(std::move(row));
  }
  return Json{{"p", m.p}, {"r", m.r}, {"rows", rows}};
}

LinearMap linear_map_from_json(const Json& j) {
  return guarded([&] {
    long p = j.at("p").get<long>();
    int r = j.at("r").get<int>();
    std::vector<long> entries;
    const Json& rows = j.at("rows");
    if (static_cast<int>(rows.size()) != r)
      throw Error(ErrorCode::ParseError, "matrix row count mismatch");
    for (const auto& row : rows) {
      if (static_cast<int>(row.size()) != r)
        throw Error(ErrorCode::ParseError, "matrix column count mismatch");
      for (const auto& v : row) entries.push_back(v.get<long>());
    }
    return LinearMap(p, r, std::move(entries));
  });
}

Json certificate_to_json(const SearchCertificate& cert) {
  Json j{{"outcome", cert.outcome == SearchCertificate::Outcome::WitnessFound
                         ? "WitnessFound"
                         : "Exhausted"},
         {"candidates_enumerated", cert.candidates_enumerated},
         {"candidates_pruned", cert.candidates_pruned},
         {"search_space", cert.search_space},
         {"witness_count", cert.witness_count},
         {"wall_time_s", cert.wall_time_s},
         {"fast_path", cert.fast_path},
         {"config",
          {{"target", cert.config.target},
           {"fix_first_column", cert.config.fix_first_column},
           {"prune_pair_sums", cert.config.prune_pair_sums},
           {"thread_count", cert.config.thread_count},
           {"count_all", cert.config.count_all}}}};
  if (cert.witness) j["witness"] = linear_map_to_json(*cert.witness);
  return j;
}

SearchCertificate certificate_from_json(const Json& j) {
  return guarded([&] {
    SearchCertificate cert;
    std::string outcome = j.at("outcome").get<std::string>();
    if (outcome == "WitnessFound")
      cert.outcome = SearchCertificate::Outcome::WitnessFound;
    else if (outcome == "Exhausted")
      cert.outcome = SearchCertificate::Outcome::Exhausted;
    else
      throw Error(ErrorCode::ParseError, "unknown outcome: " + outcome);
    cert.candidates_enumerated = j.at("candidates_enumerated").get<std::uint64_t>();
    cert.candidates_pruned = j.at("candidates_pruned").get<std::uint64_t>();
    cert.search_space = j.at("search_space").get<std::uint64_t>();
    cert.witness_count = j.at("witness_count").get<std::uint64_t>();
    cert.wall_time_s = j.at("wall_time_s").get<double>();
    cert.fast_path = j.at("fast_path").get<bool>();
    const Json& cfg = j.at("config");
    cert.config.target = cfg.at("target").get<ColorPermutation>();
    cert.config.fix_first_column = cfg.at("fix_first_column").get<bool>();
    cert.config.prune_pair_sums = cfg.at("prune_pair_sums").get<bool>();
    cert.config.thread_count = cfg.at("thread_count").get<int>();
    cert.config.count_all = cfg.at("count_all").get<bool>();
    if (j.contains("witness")) cert.witness = linear_map_from_json(j.at("witness"));
    return cert;
  });
}

Json parse_json(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw Error(ErrorCode::ParseError, "malformed JSON");
  return j;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path);
  out << contents;
}

Json run_manifest(const std::string& command_line,
                  const std::vector<std::pair<std::string, std::string>>& inputs,
                  const std::vector<std::string>& outputs) {
  Json in = Json::array();
  for (const auto& [name, bytes] : inputs)
    in.push_back(Json{{"name", name}, {"sha256", sha256_hex(bytes)}});
  return Json{{"command_line", command_line},
              {"tool_version", kToolVersion},
              {"inputs", in},
              {"outputs", outputs},
              {"timestamp", iso_timestamp()}};
}

}  // namespace tsc
