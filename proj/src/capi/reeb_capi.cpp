#include "reeb.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include <json.hpp>

#include "core/bottleneck.hpp"
#include "core/distortion.hpp"
#include "core/error.hpp"
#include "core/experiments.hpp"
#include "core/graph_io.hpp"
#include "core/isomorphism.hpp"
#include "core/operators.hpp"
#include "core/paths.hpp"
#include "core/persistence.hpp"
#include "core/generators.hpp"

struct reeb_graph {
  reeb::ReebGraph g;
};

struct reeb_diagram {
  reeb::Diagram d;
};

namespace {

using Json = nlohmann::ordered_json;

thread_local std::string last_error;

reeb_status to_status(reeb::ErrorCode code) {
  switch (code) {
    case reeb::ErrorCode::Parse: return REEB_ERR_PARSE;
    case reeb::ErrorCode::InvalidGraph: return REEB_ERR_INVALID_GRAPH;
    case reeb::ErrorCode::InvalidArgument: return REEB_ERR_INVALID_ARGUMENT;
    case reeb::ErrorCode::Precondition: return REEB_ERR_PRECONDITION;
    case reeb::ErrorCode::Io: return REEB_ERR_IO;
    case reeb::ErrorCode::Internal: return REEB_ERR_INTERNAL;
  }
  return REEB_ERR_INTERNAL;
}

template <class F>
reeb_status guard(F&& body) {
  try {
    last_error.clear();
    body();
    return REEB_OK;
  } catch (const reeb::Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return REEB_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return REEB_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (!p) throw reeb::InvalidArgument(std::string(what) + " is null");
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void put(char** out, const std::string& s) {
  if (out) *out = dup(s);
}

reeb::Rational arg(const char* text, const char* what) {
  require(text, what);
  try {
    return reeb::parse_rational(text);
  } catch (const reeb::ParseError& e) {
    throw reeb::InvalidArgument(std::string(what) + ": " + e.what());
  }
}

std::string str(const reeb::Rational& r) { return reeb::format_rational(r); }

Json fd_report(const reeb::ReebGraph& a, const reeb::ReebGraph& b, std::string witness, const char* text) {
  using namespace reeb;
  Json r;
  Rational db = graph_bottleneck(a, b);
  r["d_B"] = str(db);
  r["lower"] = str(db / 2);
  r["lower_source"] = "bottleneck";
  if (witness == "auto") {
    witness = "certify";
    Rational h = default_resolution(a, b);
    for (const char* kind : {"natural", "collapse"}) {
      try {
        std::string k = kind;
        if (k == "natural") natural_correspondence(a, b, h);
        else collapse_correspondence(a, b, h);
        witness = k;
        break;
      } catch (const PreconditionFailed&) {
      }
    }
  }
  r["witness"] = witness;
  if (witness == "certify") {
    IntrinsicBound bound = intrinsic_upper(a, b);
    r["upper"] = str(bound.value);
    r["route"] = bound.route;
    return r;
  }
  Correspondence c;
  if (witness == "natural") {
    c = natural_correspondence(a, b, default_resolution(a, b));
  } else if (witness == "collapse") {
    c = collapse_correspondence(a, b, default_resolution(a, b));
  } else if (witness == "file") {
    require(text, "witness text");
    c = parse_correspondence(a, b, text);
  } else {
    throw InvalidArgument("unknown witness kind '" + witness + "'");
  }
  DistortionReport d = evaluate(a, b, c);
  r["samples"] = c.samples1.size() + c.samples2.size();
  r["distortion"] = str(d.distortion);
  r["defect_phi"] = str(d.defect_phi);
  r["defect_psi"] = str(d.defect_psi);
  r["sampled"] = str(d.sampled);
  r["resolution"] = str(d.resolution);
  r["remainder"] = str(d.remainder);
  r["upper"] = str(d.upper);
  r["worst_pair"] = d.worst_pair;
  return r;
}

}  // namespace

extern "C" {

const char* reeb_last_error(void) { return last_error.c_str(); }

const char* reeb_status_name(reeb_status status) {
  switch (status) {
    case REEB_OK: return "ok";
    case REEB_ERR_PARSE: return "parse error";
    case REEB_ERR_INVALID_GRAPH: return "invalid graph";
    case REEB_ERR_INVALID_ARGUMENT: return "invalid argument";
    case REEB_ERR_PRECONDITION: return "precondition failed";
    case REEB_ERR_IO: return "i/o error";
    case REEB_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void reeb_string_free(char* s) { std::free(s); }

reeb_status reeb_graph_parse(const char* text, reeb_graph** out) {
  return guard([&] {
    require(text, "text");
    require(out, "out");
    *out = new reeb_graph{reeb::parse_graph(text)};
  });
}

reeb_status reeb_graph_load(const char* path, reeb_graph** out) {
  return guard([&] {
    require(path, "path");
    require(out, "out");
    *out = new reeb_graph{reeb::load_graph(path)};
  });
}

reeb_status reeb_graph_generate(const char* spec, reeb_graph** out) {
  return guard([&] {
    require(spec, "spec");
    require(out, "out");
    *out = new reeb_graph{reeb::generate(spec)};
  });
}

void reeb_graph_free(reeb_graph* g) { delete g; }

size_t reeb_graph_vertex_count(const reeb_graph* g) { return g ? g->g.vertex_count() : 0; }

size_t reeb_graph_edge_count(const reeb_graph* g) { return g ? g->g.edge_count() : 0; }

reeb_status reeb_graph_print(const reeb_graph* g, int as_json, char** out) {
  return guard([&] {
    require(g, "graph");
    require(out, "out");
    *out = dup(as_json ? reeb::format_graph_json(g->g) : reeb::format_graph_text(g->g));
  });
}

reeb_status reeb_graph_validate(const reeb_graph* g, int* ok, char** report) {
  return guard([&] {
    require(g, "graph");
    reeb::ValidationReport r = reeb::validate(g->g);
    std::string text;
    for (const reeb::Violation& v : r.violations) text += v.message() + "\n";
    if (ok) *ok = r.ok() ? 1 : 0;
    put(report, text);
  });
}

reeb_status reeb_graph_canonicalize(const reeb_graph* g, reeb_graph** out) {
  return guard([&] {
    require(g, "graph");
    require(out, "out");
    *out = new reeb_graph{reeb::canonicalize(g->g)};
  });
}

reeb_status reeb_graph_component_count(const reeb_graph* g, size_t* out) {
  return guard([&] {
    require(g, "graph");
    require(out, "out");
    *out = reeb::split_components(g->g).size();
  });
}

reeb_status reeb_graph_component(const reeb_graph* g, size_t index, reeb_graph** out) {
  return guard([&] {
    require(g, "graph");
    require(out, "out");
    std::vector<reeb::ReebGraph> parts = reeb::split_components(g->g);
    if (index >= parts.size()) throw reeb::InvalidArgument("component index out of range");
    *out = new reeb_graph{std::move(parts[index])};
  });
}

reeb_status reeb_graph_stats(const reeb_graph* g, char** json) {
  return guard([&] {
    require(g, "graph");
    require(json, "out");
    const reeb::ReebGraph& graph = g->g;
    Json r;
    r["vertices"] = graph.vertex_count();
    r["edges"] = graph.edge_count();
    r["components"] = reeb::split_components(graph).size();
    r["b1"] = reeb::first_betti_number(graph);
    Json crit = Json::array();
    std::vector<reeb::Rational> values = reeb::critical_values(graph);
    for (const reeb::Rational& v : values) crit.push_back(str(v));
    r["critical_values"] = crit;
    r["a_f"] = values.size() >= 2 ? Json(str(reeb::min_critical_gap(graph))) : Json(nullptr);
    *json = dup(r.dump());
  });
}

reeb_status reeb_diagram_compute(const reeb_graph* g, reeb_diagram** out) {
  return guard([&] {
    require(g, "graph");
    require(out, "out");
    *out = new reeb_diagram{reeb::extended_diagram(g->g)};
  });
}

reeb_status reeb_diagram_parse(const char* text, reeb_diagram** out) {
  return guard([&] {
    require(text, "text");
    require(out, "out");
    *out = new reeb_diagram{reeb::parse_diagram(text)};
  });
}

reeb_status reeb_diagram_load(const char* path, reeb_diagram** out) {
  return guard([&] {
    require(path, "path");
    require(out, "out");
    std::string text = reeb::read_file(path);
    if (reeb::looks_like_diagram(text))
      *out = new reeb_diagram{reeb::parse_diagram(text)};
    else
      *out = new reeb_diagram{reeb::extended_diagram(reeb::parse_graph(text))};
  });
}

void reeb_diagram_free(reeb_diagram* d) { delete d; }

size_t reeb_diagram_size(const reeb_diagram* d) { return d ? d->d.size() : 0; }

int reeb_diagram_equal(const reeb_diagram* a, const reeb_diagram* b) {
  return a && b && reeb::diagram_equal(a->d, b->d) ? 1 : 0;
}

reeb_status reeb_diagram_print(const reeb_diagram* d, char** out) {
  return guard([&] {
    require(d, "diagram");
    require(out, "out");
    *out = dup(reeb::format_diagram(d->d));
  });
}

reeb_status reeb_diagram_snap(const reeb_diagram* d, const char* a, const char* b, reeb_diagram** out) {
  return guard([&] {
    require(d, "diagram");
    require(out, "out");
    *out = new reeb_diagram{reeb::snap_diagram(d->d, arg(a, "a"), arg(b, "b"))};
  });
}

reeb_status reeb_bottleneck(const reeb_diagram* a, const reeb_diagram* b, char** value, char** witness) {
  return guard([&] {
    require(a, "first diagram");
    require(b, "second diagram");
    reeb::BottleneckResult r = reeb::bottleneck(a->d, b->d);
    std::string value_text = str(r.value);
    std::string lines;
    auto point = [](const reeb::DiagramPoint& p) {
      return std::string(reeb::kind_name(p.kind)) + " (" + str(p.birth) + ", " + str(p.death) + ")";
    };
    for (const auto& [i, j] : r.witness.pairs)
      lines += point(a->d.points()[i]) + " <-> " + point(b->d.points()[j]) + "\n";
    for (std::size_t i : r.witness.unmatched_left) lines += point(a->d.points()[i]) + " <-> diagonal\n";
    for (std::size_t j : r.witness.unmatched_right) lines += "diagonal <-> " + point(b->d.points()[j]) + "\n";
    char* v = value ? dup(value_text) : nullptr;
    try {
      put(witness, lines);
    } catch (...) {
      std::free(v);
      throw;
    }
    if (value) *value = v;
  });
}

reeb_status reeb_merge(const reeb_graph* g, const char* a, const char* b, reeb_graph** out) {
  return guard([&] {
    require(g, "graph");
    require(out, "out");
    *out = new reeb_graph{reeb::merge(g->g, arg(a, "a"), arg(b, "b"))};
  });
}

reeb_status reeb_simplify(const reeb_graph* g, const char* alpha, reeb_graph** out, char** certificate) {
  return guard([&] {
    require(g, "graph");
    require(out, "out");
    reeb::SimplifyResult r = reeb::simplify_tracked(g->g, arg(alpha, "alpha"));
    put(certificate, str(r.certificate));
    *out = new reeb_graph{std::move(r.graph)};
  });
}

reeb_status reeb_transform(const reeb_graph* g, const reeb_graph* anchor_graph, const char* alpha, reeb_graph** out,
                           char** report) {
  return guard([&] {
    require(g, "graph");
    require(anchor_graph, "anchor graph");
    require(out, "out");
    reeb::TransformResult r = reeb::full_transform(g->g, arg(alpha, "alpha"), reeb::critical_values(anchor_graph->g));
    Json j;
    j["certificate"] = str(r.certificate);
    j["simplify_certificate"] = str(r.simplify_certificate);
    j["warnings"] = r.warnings;
    put(report, j.dump());
    *out = new reeb_graph{std::move(r.graph)};
  });
}

reeb_status reeb_level_isomorphic(const reeb_graph* a, const reeb_graph* b, int* result, char** witness) {
  return guard([&] {
    require(a, "first graph");
    require(b, "second graph");
    require(result, "result");
    auto map = reeb::level_isomorphism(a->g, b->g);
    std::string lines;
    if (map)
      for (std::size_t v = 0; v < map->size(); ++v)
        lines += a->g.vertex(v).id + " -> " + b->g.vertex((*map)[v]).id + "\n";
    put(witness, lines);
    *result = map ? 1 : 0;
  });
}

reeb_status reeb_fd_bound(const reeb_graph* a, const reeb_graph* b, const char* witness, const char* witness_text,
                          char** report) {
  return guard([&] {
    require(a, "first graph");
    require(b, "second graph");
    require(report, "report");
    *report = dup(fd_report(a->g, b->g, witness ? witness : "auto", witness_text).dump());
  });
}

reeb_status reeb_path_length(const char* manifest_path, reeb_path_metric metric, char** report) {
  return guard([&] {
    require(manifest_path, "manifest path");
    require(report, "report");
    std::string path = manifest_path;
    std::size_t slash = path.find_last_of('/');
    std::string dir = slash == std::string::npos ? "." : path.substr(0, slash);
    reeb::GraphPath p = reeb::load_path_manifest(reeb::read_file(path), dir);
    reeb::PathLength len =
        reeb::path_length(p, metric == REEB_METRIC_FD ? reeb::PathMetric::FdUpper : reeb::PathMetric::Bottleneck);
    reeb::EquivalenceReport eq = reeb::check_strong_equivalence(p);
    Json j;
    j["metric"] = metric == REEB_METRIC_FD ? "fd" : "db";
    j["total"] = str(len.total);
    Json steps = Json::array();
    for (std::size_t i = 0; i < len.steps.size(); ++i) {
      steps.push_back({{"from", str(p.times[i])},
                       {"to", str(p.times[i + 1])},
                       {"length", str(len.steps[i])},
                       {"d_B", str(eq.segments[i].bottleneck)},
                       {"fd_certificate", str(eq.segments[i].certificate)},
                       {"ok", eq.segments[i].ok}});
    }
    j["steps"] = steps;
    j["equivalence_ok"] = eq.ok;
    *report = dup(j.dump());
  });
}

reeb_status reeb_intrinsic_upper(const reeb_graph* a, const reeb_graph* b, char** report) {
  return guard([&] {
    require(a, "first graph");
    require(b, "second graph");
    require(report, "report");
    reeb::IntrinsicBound bound = reeb::intrinsic_upper(a->g, b->g);
    Json j;
    j["upper"] = str(bound.value);
    j["route"] = bound.route;
    j["d_B"] = str(reeb::graph_bottleneck(a->g, b->g));
    *report = dup(j.dump());
  });
}

const char* reeb_experiment_names(void) {
  static const std::string names = [] {
    std::string s;
    for (const std::string& n : reeb::experiment_names()) s += (s.empty() ? "" : ",") + n;
    return s;
  }();
  return names.c_str();
}

reeb_status reeb_experiment(const char* name, const reeb_experiment_config* config, int records, char** out,
                            int* passed) {
  return guard([&] {
    require(name, "name");
    require(out, "out");
    reeb::ExperimentConfig c;
    if (config) {
      c.seed = config->seed;
      c.trials = config->trials;
      if (config->K) c.K = arg(config->K, "K");
      if (config->eps_frac) c.epsilon_fraction = arg(config->eps_frac, "eps-frac");
    }
    reeb::ExperimentReport r = reeb::run_experiment(name, c);
    *out = dup(records ? reeb::format_report_records(r) : reeb::format_report_text(r));
    if (passed) *passed = r.ok() ? 1 : 0;
  });
}

}  // extern "C"
