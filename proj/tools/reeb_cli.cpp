// Command-line front end. Talks to the library only through reeb.h.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "reeb.h"

namespace {

using Json = nlohmann::ordered_json;

struct Failure {
  reeb_status status;
  std::string message;
};

void check(reeb_status s) {
  if (s != REEB_OK) throw Failure{s, reeb_last_error()};
}

struct GraphDeleter {
  void operator()(reeb_graph* g) const { reeb_graph_free(g); }
};
struct DiagramDeleter {
  void operator()(reeb_diagram* d) const { reeb_diagram_free(d); }
};
using Graph = std::unique_ptr<reeb_graph, GraphDeleter>;
using Diagram = std::unique_ptr<reeb_diagram, DiagramDeleter>;

// Takes ownership of a library string.
std::string take(char* s) {
  std::string out = s ? s : "";
  reeb_string_free(s);
  return out;
}

Graph load(const std::string& path) {
  reeb_graph* g = nullptr;
  check(reeb_graph_load(path.c_str(), &g));
  return Graph(g);
}

Diagram diagram_of(const reeb_graph* g) {
  reeb_diagram* d = nullptr;
  check(reeb_diagram_compute(g, &d));
  return Diagram(d);
}

std::string print_graph(const reeb_graph* g, bool json) {
  char* s = nullptr;
  check(reeb_graph_print(g, json ? 1 : 0, &s));
  return take(s);
}

std::string print_diagram(const reeb_diagram* d) {
  char* s = nullptr;
  check(reeb_diagram_print(d, &s));
  return take(s);
}

std::string commented(const std::string& title, const std::string& body) {
  std::string out = "# " + title + "\n";
  std::istringstream in(body);
  std::string line;
  while (std::getline(in, line)) out += "#   " + line + "\n";
  return out;
}

void emit(const std::string& text, const std::string& output) {
  if (output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output);
  if (!out) throw Failure{REEB_ERR_IO, "cannot write '" + output + "'"};
  out << text;
}

// Output graph followed by a before/after diagram report in comment lines.
std::string with_delta(const reeb_graph* before, const reeb_graph* after, bool json, const std::string& extra) {
  std::string text = print_graph(after, json);
  if (json) return text;
  Diagram d0 = diagram_of(before), d1 = diagram_of(after);
  text += commented("diagram before", print_diagram(d0.get()));
  text += commented("diagram after", print_diagram(d1.get()));
  char* value = nullptr;
  check(reeb_bottleneck(d0.get(), d1.get(), &value, nullptr));
  text += "# d_B(before, after) = " + take(value) + "\n";
  if (!extra.empty()) text += extra;
  return text;
}

void print_json_report(const std::string& json_text) {
  Json j = Json::parse(json_text);
  for (const auto& [key, value] : j.items()) {
    if (value.is_array() && !value.empty() && value.front().is_object()) {
      std::cout << key << ":\n";
      for (const auto& row : value) {
        std::cout << " ";
        for (const auto& [k, v] : row.items()) std::cout << ' ' << k << '=' << (v.is_string() ? v.get<std::string>() : v.dump());
        std::cout << '\n';
      }
    } else {
      std::cout << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reeb graphs, extended persistence and distances between Reeb graphs"};
  app.require_subcommand(1);
  int exit_code = 0;

  std::string file_a, file_b, output, value_a, value_b, alpha, anchors, witness = "auto", witness_file, metric = "db";
  std::string spec, name, format = "text", k_text, eps_text;
  bool json = false, show_witness = false, split = false;
  std::uint64_t seed = 1;
  unsigned trials = 0;

  auto* cmd_diagram = app.add_subcommand("diagram", "Extended persistence diagram of a graph");
  cmd_diagram->add_option("file", file_a, "Graph file")->required();
  cmd_diagram->add_flag("--split", split, "Accept disconnected input and report each component");

  auto* cmd_bottleneck = app.add_subcommand("bottleneck", "Bottleneck distance between two graph or diagram files");
  cmd_bottleneck->add_option("a", file_a)->required();
  cmd_bottleneck->add_option("b", file_b)->required();
  cmd_bottleneck->add_flag("--witness", show_witness, "Print an optimal matching");

  auto* cmd_merge = app.add_subcommand("merge", "Contract the components of f^-1([a, b])");
  cmd_merge->add_option("file", file_a)->required();
  cmd_merge->add_option("a", value_a)->required();
  cmd_merge->add_option("b", value_b)->required();

  auto* cmd_simplify = app.add_subcommand("simplify", "Remove features of persistence at most alpha");
  cmd_simplify->add_option("file", file_a)->required();
  cmd_simplify->add_option("alpha", alpha)->required();

  auto* cmd_transform = app.add_subcommand("transform", "Simplify by 2 alpha, then merge 9 alpha bands at anchors");
  cmd_transform->add_option("file", file_a)->required();
  cmd_transform->add_option("--anchors", anchors, "Graph whose critical values are the anchors")->required();
  cmd_transform->add_option("--alpha", alpha)->required();

  for (CLI::App* c : {cmd_merge, cmd_simplify, cmd_transform}) {
    c->add_flag("--json", json, "Write the graph as JSON");
    c->add_option("-o,--output", output, "Write the graph to a file");
  }

  auto* cmd_iso = app.add_subcommand("iso", "Level-preserving isomorphism test");
  cmd_iso->add_option("a", file_a)->required();
  cmd_iso->add_option("b", file_b)->required();

  auto* cmd_fd = app.add_subcommand("fdbound", "Certified bounds on the functional distortion distance");
  cmd_fd->add_option("a", file_a)->required();
  cmd_fd->add_option("b", file_b)->required();
  cmd_fd->add_option("--witness", witness, "natural, collapse, file or auto")
      ->check(CLI::IsMember({"natural", "collapse", "file", "auto"}));
  cmd_fd->add_option("--witness-file", witness_file, "Correspondence file for --witness file");

  auto* cmd_path = app.add_subcommand("pathlen", "Length of a discretised path of graphs");
  cmd_path->add_option("manifest", file_a, "Lines of '<t> <graph-file>'")->required();
  cmd_path->add_option("--metric", metric)->check(CLI::IsMember({"db", "fd"}));

  auto* cmd_intrinsic = app.add_subcommand("intrinsic", "Upper bound on the intrinsic distance");
  cmd_intrinsic->add_option("a", file_a)->required();
  cmd_intrinsic->add_option("b", file_b)->required();

  auto* cmd_gen = app.add_subcommand("gen", "Built-in graphs");
  cmd_gen->add_option("spec", spec, "segment, cycle, Y, figure1_left, figure1_right, figure5:<n>, random:<seed>:<k>:<lo>:<hi>")
      ->required();
  cmd_gen->add_flag("--json", json);
  cmd_gen->add_option("-o,--output", output);

  auto* cmd_exp = app.add_subcommand("experiment", "Run a named experiment (or 'all')");
  cmd_exp->add_option("name", name)->required();
  cmd_exp->add_option("--seed", seed);
  cmd_exp->add_option("--trials", trials);
  cmd_exp->add_option("--K", k_text, "K in (0, 1/22]");
  cmd_exp->add_option("--eps-frac", eps_text, "epsilon as a fraction of a_f / (8 (1 + 22 K))");
  cmd_exp->add_option("--format", format)->check(CLI::IsMember({"text", "records"}));

  auto* cmd_validate = app.add_subcommand("validate", "Check the graph invariants");
  cmd_validate->add_option("file", file_a)->required();
  auto* cmd_canon = app.add_subcommand("canonicalize", "Remove pass-through vertices");
  cmd_canon->add_option("file", file_a)->required();
  cmd_canon->add_flag("--json", json);
  auto* cmd_stats = app.add_subcommand("stats", "Vertex, edge and Betti counts, critical values, a_f");
  cmd_stats->add_option("file", file_a)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_diagram->parsed()) {
      Graph g = load(file_a);
      std::size_t parts = 1;
      if (split) check(reeb_graph_component_count(g.get(), &parts));
      if (parts <= 1) {
        std::cout << print_diagram(diagram_of(g.get()).get());
      } else {
        for (std::size_t i = 0; i < parts; ++i) {
          reeb_graph* c = nullptr;
          check(reeb_graph_component(g.get(), i, &c));
          Graph part(c);
          std::cout << "# component " << i << "\n" << print_diagram(diagram_of(part.get()).get());
        }
      }
    } else if (cmd_bottleneck->parsed()) {
      reeb_diagram *da = nullptr, *db = nullptr;
      check(reeb_diagram_load(file_a.c_str(), &da));
      Diagram a(da);
      check(reeb_diagram_load(file_b.c_str(), &db));
      Diagram b(db);
      char *value = nullptr, *lines = nullptr;
      check(reeb_bottleneck(a.get(), b.get(), &value, &lines));
      std::cout << take(value) << "\n";
      std::string w = take(lines);
      if (show_witness) std::cout << w;
    } else if (cmd_merge->parsed()) {
      Graph g = load(file_a);
      reeb_graph* out = nullptr;
      check(reeb_merge(g.get(), value_a.c_str(), value_b.c_str(), &out));
      Graph m(out);
      emit(with_delta(g.get(), m.get(), json, ""), output);
    } else if (cmd_simplify->parsed()) {
      Graph g = load(file_a);
      reeb_graph* out = nullptr;
      char* cert = nullptr;
      check(reeb_simplify(g.get(), alpha.c_str(), &out, &cert));
      Graph s(out);
      emit(with_delta(g.get(), s.get(), json, "# d_FD certificate = " + take(cert) + "\n"), output);
    } else if (cmd_transform->parsed()) {
      Graph g = load(file_a), f = load(anchors);
      reeb_graph* out = nullptr;
      char* report = nullptr;
      check(reeb_transform(g.get(), f.get(), alpha.c_str(), &out, &report));
      Graph t(out);
      Json r = Json::parse(take(report));
      std::string extra = "# d_FD certificate = " + r["certificate"].get<std::string>() + "\n";
      for (const auto& w : r["warnings"]) {
        std::cerr << "warning: " << w.get<std::string>() << "\n";
        extra += "# warning: " + w.get<std::string>() + "\n";
      }
      emit(with_delta(g.get(), t.get(), json, extra), output);
    } else if (cmd_iso->parsed()) {
      Graph a = load(file_a), b = load(file_b);
      int result = 0;
      char* map = nullptr;
      check(reeb_level_isomorphic(a.get(), b.get(), &result, &map));
      std::cout << (result ? "isomorphic" : "not isomorphic") << "\n" << take(map);
    } else if (cmd_fd->parsed()) {
      Graph a = load(file_a), b = load(file_b);
      std::string text;
      if (witness == "file") {
        if (witness_file.empty()) throw Failure{REEB_ERR_INVALID_ARGUMENT, "--witness file needs --witness-file"};
        std::ifstream in(witness_file);
        if (!in) throw Failure{REEB_ERR_IO, "cannot open '" + witness_file + "'"};
        std::stringstream buf;
        buf << in.rdbuf();
        text = buf.str();
      }
      char* report = nullptr;
      check(reeb_fd_bound(a.get(), b.get(), witness.c_str(), witness == "file" ? text.c_str() : nullptr, &report));
      print_json_report(take(report));
    } else if (cmd_path->parsed()) {
      char* report = nullptr;
      check(reeb_path_length(file_a.c_str(), metric == "fd" ? REEB_METRIC_FD : REEB_METRIC_BOTTLENECK, &report));
      std::string text = take(report);
      print_json_report(text);
      if (!Json::parse(text)["equivalence_ok"].get<bool>()) exit_code = 1;
    } else if (cmd_intrinsic->parsed()) {
      Graph a = load(file_a), b = load(file_b);
      char* report = nullptr;
      check(reeb_intrinsic_upper(a.get(), b.get(), &report));
      print_json_report(take(report));
    } else if (cmd_gen->parsed()) {
      reeb_graph* g = nullptr;
      check(reeb_graph_generate(spec.c_str(), &g));
      Graph owned(g);
      emit(print_graph(owned.get(), json), output);
    } else if (cmd_exp->parsed()) {
      reeb_experiment_config config{seed, trials, k_text.empty() ? nullptr : k_text.c_str(),
                                    eps_text.empty() ? nullptr : eps_text.c_str()};
      std::vector<std::string> names;
      if (name == "all") {
        std::stringstream list(reeb_experiment_names());
        for (std::string n; std::getline(list, n, ',');) names.push_back(n);
      } else {
        names.push_back(name);
      }
      for (const std::string& n : names) {
        char* out = nullptr;
        int passed = 0;
        check(reeb_experiment(n.c_str(), &config, format == "records" ? 1 : 0, &out, &passed));
        std::cout << take(out) << std::flush;
        if (!passed) exit_code = 1;
      }
    } else if (cmd_validate->parsed()) {
      Graph g = load(file_a);
      int ok = 0;
      char* report = nullptr;
      check(reeb_graph_validate(g.get(), &ok, &report));
      std::string text = take(report);
      std::cout << (ok ? "valid\n" : text);
      if (!ok) exit_code = 1;
    } else if (cmd_canon->parsed()) {
      Graph g = load(file_a);
      reeb_graph* out = nullptr;
      check(reeb_graph_canonicalize(g.get(), &out));
      Graph c(out);
      std::cout << print_graph(c.get(), json);
    } else if (cmd_stats->parsed()) {
      Graph g = load(file_a);
      char* s = nullptr;
      check(reeb_graph_stats(g.get(), &s));
      print_json_report(take(s));
    }
  } catch (const Failure& f) {
    std::cerr << "error (" << reeb_status_name(f.status) << "): " << f.message << "\n";
    return 2;
  }
  return exit_code;
}
