// Copyright (c) 2026 the tsc-graphs authors
// Licensed under the Apache License, Version 2.0.

#include "tsc/tsc_c.h"

#include <cstring>
#include <new>
#include <string>

#include "tsc/replay.hpp"
#include "tsc/symmetry.hpp"

struct tsc_graph {
  tsc::ColoredCayleyGraph g;
};

namespace {

thread_local std::string g_last_error;

tsc_status status_of(tsc::ErrorCode c) {
  // ErrorCode and tsc_status enumerate the same conditions in the same order,
  // offset by TSC_OK.
  return static_cast<tsc_status>(static_cast<int>(c) + 1);
}

char* dup_string(const std::string& s) {
  char* out = new (std::nothrow) char[s.size() + 1];
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Runs f, translating exceptions into status codes + tsc_last_error.
template <typename F>
tsc_status wrap(F&& f) {
  try {
    g_last_error.clear();
    return f();
  } catch (const tsc::Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const tsc::Json::exception& e) {
    g_last_error = e.what();
    return TSC_E_PARSE_ERROR;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return TSC_E_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return TSC_E_INTERNAL;
  }
}

tsc_status emit(const tsc::Json& j, char** out_json) {
  if (!out_json) {
    g_last_error = "out_json is null";
    return TSC_E_INVALID_ARGUMENT;
  }
  *out_json = dup_string(j.dump(2));
  if (!*out_json) {
    g_last_error = "allocation failed";
    return TSC_E_INTERNAL;
  }
  return TSC_OK;
}

tsc::Json parse_or_default(const char* json, tsc::Json fallback) {
  if (!json) return fallback;
  return tsc::parse_json(json);
}

void require(bool cond, const char* message) {
  if (!cond) throw tsc::Error(tsc::ErrorCode::InvalidArgument, message);
}

tsc::Stabilizer stabilizer_from_json(const tsc::Json& j) {
  if (j.contains("triple")) {
    const tsc::Json& t = j.at("triple");
    return tsc::FoulserTriple{t.at("d").get<long>(), t.at("e").get<long>(),
                              t.at("s").get<int>()};
  }
  if (j.contains("matrices")) {
    std::vector<tsc::LinearMap> ms;
    for (const auto& m : j.at("matrices"))
      ms.push_back(tsc::linear_map_from_json(m));
    return ms;
  }
  throw tsc::Error(tsc::ErrorCode::ParseError,
                   "stabilizer must have \"triple\" or \"matrices\"");
}

}  // namespace

extern "C" {

const char* tsc_version(void) { return tsc::kToolVersion; }

const char* tsc_last_error(void) { return g_last_error.c_str(); }

void tsc_string_free(char* s) { delete[] s; }

tsc_status tsc_field_build(long p, int r, const char* poly_json,
                           const char* omega_json, char** out_json) {
  return wrap([&] {
    std::optional<tsc::Coeffs> poly, omega;
    if (poly_json) poly = tsc::parse_json(poly_json).get<tsc::Coeffs>();
    if (omega_json) omega = tsc::parse_json(omega_json).get<tsc::Coeffs>();
    auto f = tsc::FieldTable::build(p, r, poly, omega);
    return emit(tsc::field_to_json(*f), out_json);
  });
}

tsc_status tsc_graph_build(const char* family, const char* field_json,
                           const char* params_json, tsc_graph** out) {
  return wrap([&] {
    require(family && field_json && out, "family, field, and out are required");
    tsc::FieldRef f = tsc::field_from_json(tsc::parse_json(field_json));
    tsc::Json params = parse_or_default(params_json, tsc::Json::object());
    std::string fam = family;
    std::optional<tsc::ColoredCayleyGraph> g;
    if (fam == "gp") {
      g = tsc::gp_k(f, params.at("k").get<int>());
    } else if (fam == "paley") {
      g = tsc::paley(f);
    } else if (fam == "peisert") {
      g = tsc::peisert(f);
    } else if (fam == "direction") {
      g = tsc::direction_graph(f, params.at("d").get<int>());
    } else if (fam == "partition") {
      tsc::DirectionPartition part;
      part.d = params.at("d").get<int>();
      part.blocks = params.at("blocks")
                        .get<std::vector<std::vector<std::vector<long>>>>();
      g = tsc::partition_direction_graph(f, part.d, part,
                                         params.value("label", ""));
    } else {
      require(false, "unknown family (expected gp, paley, peisert, "
                     "direction, or partition)");
    }
    *out = new tsc_graph{std::move(*g)};
    return TSC_OK;
  });
}

tsc_status tsc_graph_from_json(const char* json, tsc_graph** out) {
  return wrap([&] {
    require(json && out, "json and out are required");
    *out = new tsc_graph{tsc::graph_from_json(tsc::parse_json(json))};
    return TSC_OK;
  });
}

tsc_status tsc_graph_to_json(const tsc_graph* g, char** out_json) {
  return wrap([&] {
    require(g != nullptr, "graph handle is null");
    return emit(tsc::graph_to_json(g->g), out_json);
  });
}

void tsc_graph_free(tsc_graph* g) { delete g; }

tsc_status tsc_foulser_enumerate(long p, int r, int k, int with_overgroups,
                                 char** out_json) {
  return wrap([&] {
    auto f = tsc::FieldTable::build(p, r);
    tsc::Json cands = tsc::Json::array();
    tsc::Json overgroups = tsc::Json::array();
    for (const auto& t : tsc::enumerate_k_equal_orbit_subgroups(*f, k)) {
      cands.push_back(tsc::Json{{"d", t.d},
                                {"e", t.e},
                                {"s", t.s},
                                {"order", tsc::subgroup_order(t, *f)}});
      if (with_overgroups) {
        tsc::Json per = tsc::Json::array();
        for (const auto& o :
             tsc::enumerate_color_transitive_overgroups(t, *f, k))
          per.push_back(tsc::Json{
              {"overgroup",
               tsc::Json{{"d", o.overgroup.d},
                         {"e", o.overgroup.e},
                         {"s", o.overgroup.s},
                         {"order", tsc::subgroup_order(o.overgroup, *f)}}},
              {"group_order", o.group_order},
              {"transitive", o.transitive},
              {"cyclic", o.cyclic},
              {"symmetric", o.symmetric}});
        overgroups.push_back(std::move(per));
      }
    }
    tsc::Json result{{"candidates", std::move(cands)}};
    if (with_overgroups) result["overgroups"] = std::move(overgroups);
    return emit(result, out_json);
  });
}

tsc_status tsc_verify(const tsc_graph* g, const char* stabilizer_json,
                      const char* witnesses_json, char** out_json) {
  return wrap([&] {
    require(g && stabilizer_json, "graph and stabilizer are required");
    tsc::Stabilizer stab =
        stabilizer_from_json(tsc::parse_json(stabilizer_json));
    std::vector<tsc::LinearMap> witnesses;
    if (witnesses_json)
      for (const auto& w : tsc::parse_json(witnesses_json))
        witnesses.push_back(tsc::linear_map_from_json(w));
    tsc::TscReport rep = tsc::verify_tsc(g->g, stab, witnesses);
    return emit(tsc::Json{{"arc_transitive", rep.arc.arc_transitive},
                          {"stabilizer_orbits", rep.arc.stabilizer_orbits},
                          {"color_group_order", rep.colors.order},
                          {"is_symmetric", rep.colors.is_symmetric},
                          {"verdict", rep.verdict}},
                out_json);
  });
}

tsc_status tsc_iso(const tsc_graph* a, const tsc_graph* b, int permute_colors,
                   char** out_json) {
  return wrap([&] {
    require(a && b, "both graph handles are required");
    tsc::IsoOptions opts;
    opts.permute_colors = permute_colors != 0;
    auto map = tsc::iso_colored(a->g, b->g, opts);
    tsc::Json result{{"isomorphic", map.has_value()}};
    if (map) result["map"] = *map;
    return emit(result, out_json);
  });
}

tsc_status tsc_search(const tsc_graph* g, const char* config_json,
                      const char* kind, const char* cache_dir,
                      char** out_json) {
  return wrap([&] {
    require(g && config_json && kind, "graph, config, and kind are required");
    tsc::Json cj = tsc::parse_json(config_json);
    tsc::SearchConfig cfg;
    cfg.target = cj.at("target").get<tsc::ColorPermutation>();
    cfg.fix_first_column = cj.value("fix_first_column", true);
    cfg.prune_pair_sums = cj.value("prune_pair_sums", true);
    cfg.thread_count = cj.value("thread_count", 1);
    cfg.count_all = cj.value("count_all", false);
    cfg.progress_interval = std::uint64_t{1} << 62;
    std::string k = kind;
    require(k == "transposition" || k == "cyclic" || k == "gf2",
            "kind must be transposition, cyclic, or gf2");
    tsc::Json cert =
        tsc::cached_search(g->g, cfg, k, cache_dir ? cache_dir : "");
    return emit(cert, out_json);
  });
}

tsc_status tsc_replay(const char* cases_json, int include_long, int threads,
                      const char* cache_dir, char** out_json) {
  return wrap([&] {
    std::vector<tsc::CaseKey> cases;
    if (cases_json) {
      for (const auto& c : tsc::parse_json(cases_json))
        cases.push_back(tsc::CaseKey{c.at("p").get<long>(),
                                     c.at("r").get<int>(),
                                     c.at("k").get<int>()});
    } else {
      cases = tsc::default_replay_cases(include_long != 0);
    }
    tsc::ReplayOptions opt;
    opt.include_long = include_long != 0;
    opt.threads = threads > 0 ? threads : 1;
    opt.cache_dir = cache_dir ? cache_dir : "";
    return emit(tsc::replay_classification(cases, opt), out_json);
  });
}

}  // extern "C"
