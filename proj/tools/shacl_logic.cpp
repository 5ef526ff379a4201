#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "shl/engine.hpp"
#include "shl/filter_axioms.hpp"
#include "shl/rewriter.hpp"
#include "shl/translator.hpp"

using namespace shl;
using json = nlohmann::json;

namespace {

enum Exit { kOk = 0, kNegative = 1, kAborted = 2, kUsage = 64, kData = 65, kInternal = 70 };

// Input errors carrying a printable location.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::size_t max_domain = 4;
  std::size_t budget_seconds = 10;
  std::size_t axiom_cap = 4096;
  std::string rdf_mode = "generalized";
  std::string output = "json";
  unsigned threads = 0;
};

std::string read_input(const std::string& path) {
  std::stringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read " + path);
    buffer << in.rdbuf();
  }
  return buffer.str();
}

bool looks_like_scl(const std::string& path, const std::string& text) {
  if (path.size() > 4 && path.compare(path.size() - 4, 4, ".scl") == 0) return true;
  if (path.size() > 4 && path.compare(path.size() - 4, 4, ".ttl") == 0) return false;
  auto first = text.find_first_not_of(" \t\r\n");
  return first != std::string::npos && text[first] == '(';
}

rdf::TripleGraph load_graph(const std::string& path, const Config& cfg) {
  const std::string text = read_input(path);
  try {
    return rdf::parse_turtle(text, cfg.rdf_mode == "strict" ? rdf::GraphMode::Strict : rdf::GraphMode::Generalized);
  } catch (const rdf::ParseError& e) {
    throw InputError(path + ": " + e.what());
  } catch (const rdf::GraphError& e) {
    throw InputError(path + ": " + e.what());
  }
}

shacl::Document load_document(const std::string& path, const Config& cfg) {
  try {
    return shacl::extract_document(load_graph(path, cfg));
  } catch (const shacl::ShapeError& e) {
    throw InputError(path + ": " + e.what());
  }
}

scl::Sentence parse_scl(const std::string& path, const std::string& text) {
  try {
    return scl::parse_sentence(text);
  } catch (const scl::SyntaxError& e) {
    throw InputError(path + ": " + e.what());
  }
}

// A sentence from SCL text, or the translation of a SHACL document.
scl::Sentence load_sentence(const std::string& path, const Config& cfg) {
  const std::string text = read_input(path);
  if (looks_like_scl(path, text)) return parse_scl(path, text);
  try {
    auto graph =
        rdf::parse_turtle(text, cfg.rdf_mode == "strict" ? rdf::GraphMode::Strict : rdf::GraphMode::Generalized);
    return translate::translate(shacl::extract_document(graph));
  } catch (const rdf::ParseError& e) {
    throw InputError(path + ": " + e.what());
  } catch (const rdf::GraphError& e) {
    throw InputError(path + ": " + e.what());
  } catch (const shacl::ShapeError& e) {
    throw InputError(path + ": " + e.what());
  }
}

void require_well_formed(const scl::Sentence& s) {
  auto defects = scl::check_well_formed(s);
  if (defects.empty()) return;
  std::string msg;
  for (const auto& d : defects) msg += (msg.empty() ? "" : "; ") + d.message();
  throw InputError(msg);
}

json features_json(const scl::FeatureSet& f) { return f.names(); }

json model_json(const engine::FiniteStructure& m) {
  json out;
  out["domain"] = json::array();
  for (const auto& t : m.domain) out["domain"].push_back(rdf::to_string(t));
  out["relations"] = json::object();
  for (const auto& [r, pairs] : m.relations) {
    json list = json::array();
    for (const auto& [a, b] : pairs) list.push_back({rdf::to_string(a), rdf::to_string(b)});
    out["relations"][rdf::to_string(r)] = list;
  }
  if (!m.has_shape.empty()) {
    json shapes = json::array();
    for (const auto& [t, s] : m.has_shape) shapes.push_back({rdf::to_string(t), rdf::to_string(s.term)});
    out["hasShape"] = shapes;
  }
  return out;
}

engine::SearchOptions search_options(const Config& cfg) {
  engine::SearchOptions o;
  o.max_domain = cfg.max_domain;
  o.budget = std::chrono::seconds(cfg.budget_seconds);
  o.threads = cfg.threads;
  return o;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_translate(const std::string& path, const Config& cfg) {
  std::cout << scl::print(load_sentence(path, cfg)) << "\n";
  return kOk;
}

int cmd_back_translate(const std::string& path) {
  const scl::Sentence s = parse_scl(path, read_input(path));
  try {
    std::cout << rdf::serialize_turtle(shacl::document_to_graph(translate::back_translate(s)));
  } catch (const translate::NotShaclExpressible& e) {
    throw InputError(path + ": " + e.what());
  }
  return kOk;
}

int cmd_validate(const std::string& data, const std::string& shapes, bool direct, const Config& cfg) {
  const auto graph = load_graph(data, cfg);
  const auto doc = load_document(shapes, cfg);
  const auto report = direct ? shacl::validate_direct(graph, doc) : engine::validate(graph, doc);
  std::cout << shacl::report_json(report) << "\n";
  return report.conforms ? kOk : kNegative;
}

int cmd_classify(const std::string& path, const Config& cfg) {
  const auto r = engine::classify(load_sentence(path, cfg));
  json j{{"rawFeatures", features_json(r.raw_features)},
         {"normalizedFeatures", features_json(r.normalized_features)},
         {"status", r.status_name()},
         {"fmp", r.fmp_name()},
         {"generalizedRdfOnly", r.generalized_rdf_only},
         {"witness", r.witness}};
  if (!r.complexity.empty()) j["complexity"] = r.complexity;
  emit(j);
  return kOk;
}

int report_verdict(const engine::SatVerdict& v, const Config& cfg) {
  if (cfg.output == "text") {
    std::cout << v.outcome_name() << " " << v.bound << (v.reason.empty() ? "" : " (" + v.reason + ")") << "\n";
  } else {
    json j{{"outcome", v.outcome_name()}, {"bound", v.bound}};
    if (v.model) j["model"] = model_json(*v.model);
    if (!v.reason.empty()) j["reason"] = v.reason;
    emit(j);
  }
  switch (v.outcome) {
    case engine::SatVerdict::Outcome::Sat: return kOk;
    case engine::SatVerdict::Outcome::UnsatUpTo: return kNegative;
    case engine::SatVerdict::Outcome::Aborted: return kAborted;
  }
  return kAborted;
}

int cmd_sat(const std::string& path, bool axiomatize, bool uninterpreted, bool unique_names, const Config& cfg) {
  scl::Sentence s = load_sentence(path, cfg);
  require_well_formed(s);
  auto o = search_options(cfg);
  o.canonical_filters = !(axiomatize || uninterpreted);
  o.unique_names = unique_names;
  if (axiomatize) s = scl::Sentence::conjunction(s, filters::axiomatize(s, cfg.axiom_cap).axioms);
  return report_verdict(engine::bounded_sat(s, o), cfg);
}

int cmd_contains(const std::string& first, const std::string& second, const Config& cfg) {
  const auto r = engine::check_containment(load_document(first, cfg), load_document(second, cfg), search_options(cfg));
  if (cfg.output == "text") {
    std::cout << r.outcome_name() << " " << r.bound << "\n";
    if (r.counterexample) std::cout << rdf::serialize_turtle(*r.counterexample);
  } else {
    json j{{"outcome", r.outcome_name()}, {"bound", r.bound}};
    if (r.counterexample) {
      j["confirmed"] = r.confirmed;
      j["counterexample"] = rdf::serialize_turtle(*r.counterexample);
    }
    if (!r.reason.empty()) j["reason"] = r.reason;
    emit(j);
  }
  switch (r.outcome) {
    case engine::ContainmentResult::Outcome::NoCounterexampleUpTo: return kOk;
    case engine::ContainmentResult::Outcome::NotContained: return kNegative;
    case engine::ContainmentResult::Outcome::Aborted: return kAborted;
  }
  return kAborted;
}

int cmd_axiomatize(const std::string& path, const Config& cfg) {
  const auto a = filters::axiomatize(load_sentence(path, cfg), cfg.axiom_cap);
  if (cfg.output == "json") {
    emit({{"combinations", a.combinations}, {"patternIncomplete", a.pattern_incomplete}, {"axioms", scl::print(a.axioms)}});
  } else {
    std::cout << scl::print(a.axioms) << "\n";
    if (a.pattern_incomplete) std::cerr << "note: pattern filters are treated as opaque\n";
  }
  return kOk;
}

int cmd_rewrite(const std::string& path, const std::string& eliminate, bool name, const Config& cfg) {
  scl::Sentence s = load_sentence(path, cfg);
  if (!eliminate.empty()) {
    scl::FeatureSet which;
    for (char c : eliminate) {
      if (c == 'S') which.insert(scl::Feature::S);
      else if (c == 'Z') which.insert(scl::Feature::Z);
      else if (c == 'A') which.insert(scl::Feature::A);
      else throw CLI::ValidationError("--eliminate", "expected letters among S, Z, A");
    }
    auto r = rewrite::eliminate(s, which);
    for (const auto& d : r.defects) std::cerr << "not eliminated: " << d << "\n";
    s = r.value;
  }
  if (name) s = rewrite::name_subformulas(s);
  std::cout << scl::print(s) << "\n";
  return kOk;
}

engine::TilingSystem load_tiling(const std::string& path) {
  engine::TilingSystem t;
  try {
    const json j = json::parse(read_input(path));
    t.tiles = j.at("tiles").get<std::vector<std::string>>();
    for (const auto& [key, rel] : {std::pair{"horizontal", &t.horizontal}, std::pair{"vertical", &t.vertical}})
      if (j.contains(key))
        for (const auto& p : j.at(key)) rel->insert({p.at(0).get<std::string>(), p.at(1).get<std::string>()});
    t.check();
  } catch (const json::exception& e) {
    throw InputError(path + ": " + e.what());
  } catch (const engine::EngineError& e) {
    throw InputError(path + ": " + e.what());
  }
  return t;
}

int cmd_gadget(const std::vector<std::string>& args) {
  if (args.size() == 2 && args[0] == "infinity") {
    auto kind = engine::infinity_kind(args[1]);
    if (!kind) throw CLI::ValidationError("gadget", "unknown infinity kind " + args[1] + " (C, STD, O, EOprime)");
    std::cout << scl::print(engine::gadget_infinity(*kind)) << "\n";
    return kOk;
  }
  if (args.size() == 3 && args[0] == "domino") {
    auto variant = engine::domino_variant(args[1]);
    if (!variant) throw CLI::ValidationError("gadget", "unknown variant " + args[1] + " (SO, SAC, SEC, SEOprime, SZAE)");
    std::cout << scl::print(engine::gadget_domino(*variant, load_tiling(args[2]))) << "\n";
    return kOk;
  }
  throw CLI::ValidationError("gadget", "expected `infinity <kind>` or `domino <variant> <tiling.json>`");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Translate, validate and reason about SHACL documents through SCL sentences."};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  app.add_option("--rdf-mode", cfg.rdf_mode, "Triple checks when reading Turtle")
      ->check(CLI::IsMember({"strict", "generalized"}));
  auto* format_opt = app.add_option("--format", cfg.output, "Report format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--threads", cfg.threads, "Worker cap (default: SHACL_LOGIC_THREADS or hardware)");

  std::string input, second;
  std::function<int()> run;
  auto search_flags = [&](CLI::App* sub) {
    sub->add_option("--max-domain", cfg.max_domain, "Largest domain size searched")->check(CLI::PositiveNumber);
    sub->add_option("--budget", cfg.budget_seconds, "Time budget in seconds")->check(CLI::PositiveNumber);
  };

  auto* translate_cmd = app.add_subcommand("translate", "Print the SCL sentence of a SHACL document");
  translate_cmd->add_option("shapes", input, "Turtle file or -")->required();
  translate_cmd->callback([&] { run = [&] { return cmd_translate(input, cfg); }; });

  auto* back_cmd = app.add_subcommand("back-translate", "Print a SHACL document for an SCL sentence");
  back_cmd->add_option("sentence", input, "SCL file or -")->required();
  back_cmd->callback([&] { run = [&] { return cmd_back_translate(input); }; });

  bool direct = false;
  auto* validate_cmd = app.add_subcommand("validate", "Validate a data graph (exit 1 on violations)");
  validate_cmd->add_option("data", input, "Data graph")->required();
  validate_cmd->add_option("shapes", second, "Shapes graph")->required();
  validate_cmd->add_flag("--direct", direct, "Use the reference validator instead of the translation");
  validate_cmd->callback([&] { run = [&] { return cmd_validate(input, second, direct, cfg); }; });

  auto* classify_cmd = app.add_subcommand("classify", "Report the fragment and its decidability status");
  classify_cmd->add_option("input", input, "Turtle or SCL file")->required();
  classify_cmd->callback([&] { run = [&] { return cmd_classify(input, cfg); }; });

  bool axiomatize = false, uninterpreted = false, identify = false;
  auto* sat_cmd = app.add_subcommand("sat", "Bounded satisfiability (exit 0 Sat, 1 UnsatUpTo, 2 Aborted)");
  sat_cmd->add_option("input", input, "Turtle or SCL file")->required();
  search_flags(sat_cmd);
  sat_cmd->add_flag("--axiomatize", axiomatize, "Conjoin the filter axioms and treat filters as free relations");
  sat_cmd->add_option("--cap", cfg.axiom_cap, "Combination cap for --axiomatize")->check(CLI::PositiveNumber);
  sat_cmd->add_flag("--uninterpreted", uninterpreted, "Treat filters and orders as free relations");
  sat_cmd->add_flag("--identify-constants", identify, "Let distinct constants denote one element");
  sat_cmd->callback([&] {
    if (identify && !(axiomatize || uninterpreted))
      throw CLI::ValidationError("--identify-constants", "requires --uninterpreted or --axiomatize");
    run = [&] { return cmd_sat(input, axiomatize, uninterpreted, !identify, cfg); };
  });

  auto* contains_cmd = app.add_subcommand("contains", "Search a graph valid for the first document but not the second");
  contains_cmd->add_option("first", input, "Shapes graph")->required();
  contains_cmd->add_option("second", second, "Shapes graph")->required();
  search_flags(contains_cmd);
  contains_cmd->callback([&] { run = [&] { return cmd_contains(input, second, cfg); }; });

  auto* axiom_cmd = app.add_subcommand("axiomatize", "Print the filter axioms of a sentence");
  axiom_cmd->add_option("input", input, "SCL or Turtle file")->required();
  axiom_cmd->add_option("--cap", cfg.axiom_cap, "Combination cap")->check(CLI::PositiveNumber);
  axiom_cmd->callback([&] {
    if (format_opt->count() == 0) cfg.output = "text";
    run = [&] { return cmd_axiomatize(input, cfg); };
  });

  std::string eliminate;
  bool name = false;
  auto* rewrite_cmd = app.add_subcommand("rewrite", "Eliminate path features or name subformulas");
  rewrite_cmd->add_option("input", input, "SCL or Turtle file")->required();
  auto* elim_opt = rewrite_cmd->add_option("--eliminate", eliminate, "Features to remove: S, Z, A or SZA");
  rewrite_cmd->add_flag("--name-subformulas", name, "Introduce shape names for quantifier bodies")->excludes(elim_opt);
  rewrite_cmd->callback([&] {
    if (eliminate.empty() && !name) throw CLI::ValidationError("rewrite", "give --eliminate or --name-subformulas");
    run = [&] { return cmd_rewrite(input, eliminate, name, cfg); };
  });

  std::vector<std::string> gadget_args;
  auto* gadget_cmd = app.add_subcommand("gadget", "Print an infinity axiom or a tiling reduction");
  gadget_cmd->add_option("args", gadget_args, "infinity <kind> | domino <variant> <tiling.json>")->required();
  gadget_cmd->callback([&] { run = [&] { return cmd_gadget(gadget_args); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  try {
    return run();
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kData;
  } catch (const filters::CapExceeded& e) {
    std::cerr << "aborted: " << e.what() << "\n";
    return kAborted;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}
