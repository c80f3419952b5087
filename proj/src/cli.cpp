#include "hydra/cli.hpp"

#include "hydra/parallel.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace hydra {

namespace {

using nlohmann::json;

constexpr std::array<std::pair<Command, const char*>, 8> kCommands = {{
    {Command::Funs, "funs"},
    {Command::Auts, "auts"},
    {Command::U25, "u25"},
    {Command::LiftCheck, "lift-check"},
    {Command::Bounds, "bounds"},
    {Command::Report, "report"},
    {Command::Genesis, "genesis"},
    {Command::VerifyAll, "verify-all"},
}};

std::vector<std::string> stages_for(Command c) {
  switch (c) {
    case Command::Funs:
      return {"fundamentals", "asc_idempotence", "exponent_bounds", "bound_validity", "sieve",
              "survivor_verification"};
    case Command::Bounds:
      return {"exponent_bounds"};
    case Command::Auts:
      return {"fundamentals", "automorphisms"};
    case Command::U25:
      return {"fundamentals", "u25_pairs", "u25_tuples", "inequivalence"};
    case Command::LiftCheck:
      return {"fundamentals", "u25_tuples", "domain", "lifting_function", "local_lift", "lift_bijection"};
    default:
      return {};
  }
}

std::vector<const PartialFieldSpec*> select_fields(const RunConfig& config) {
  std::vector<const PartialFieldSpec*> all;
  for (const auto& name : builtin_field_names()) {
    auto it = std::find_if(config.specs.begin(), config.specs.end(), [&](const auto& s) { return s.name == name; });
    all.push_back(it != config.specs.end() ? &*it : &builtin_spec(name));
  }
  auto names = builtin_field_names();
  for (const auto& s : config.specs) {
    if (std::find(names.begin(), names.end(), s.name) == names.end()) all.push_back(&s);
  }
  if (config.field == "all") return all;
  for (const auto* s : all) {
    if (s->name == config.field) return {s};
  }
  std::string known;
  for (const auto* s : all) known += (known.empty() ? "" : "|") + s->name;
  throw UsageError("unknown field '" + config.field + "' (expected " + known + "|all)");
}

std::string factored_string(const PartialFieldSpec& spec, const FactoredElement& f) {
  if (f.is_zero()) return "0";
  std::string s = f.sign < 0 ? "-" : "";
  bool first = true;
  for (std::size_t g = 0; g < f.exps.size(); ++g) {
    if (g == spec.minus_one_index || f.exps[g] == 0) continue;
    if (!first) s += "*";
    first = false;
    const std::string& gen = spec.generator_text[g];
    bool atom = gen.find_first_of("+-*/^ ") == std::string::npos || gen[0] == '-';
    s += atom && gen[0] != '-' ? gen : "(" + gen + ")";
    if (f.exps[g] != 1) s += "^" + std::to_string(f.exps[g]);
  }
  if (first) s += "1";
  return s;
}

std::string slot_name(const PartialFieldSpec& spec, std::size_t g) {
  return g == spec.minus_one_index ? "sign" : spec.generator_text[g];
}

std::string interval_string(const Interval& iv) {
  return "[" + (iv.lo ? iv.lo->get_str() : std::string("-inf")) + ", " + (iv.hi ? iv.hi->get_str() : "inf") + "]";
}

std::string perm_string(const Permutation& p) {
  std::string s = "[";
  for (std::size_t c = 0; c < p.size(); ++c) s += (c ? " " : "") + std::to_string(p[c] + 1);
  return s + "]";
}

json table_json(const PartialFieldSpec& spec, const FundamentalTable& table) {
  json rows = json::array();
  for (const auto& e : table.entries()) {
    rows.push_back(json{{"value", spec.format(e.value)},
                        {"factored", factored_string(spec, e.factored)},
                        {"fingerprint", e.fingerprint},
                        {"image", e.image.to_string()}});
  }
  return rows;
}

void table_text(std::ostream& os, const PartialFieldSpec& spec, const FundamentalTable& table) {
  os << spec.name << " fundamental elements (" << table.size() << ", fingerprints mod " << table.prime() << ")\n";
  for (std::size_t i = 0; i < table.size(); ++i) {
    const auto& e = table[i];
    os << "  " << std::setw(3) << i + 1 << "  " << spec.format(e.value) << "  = " << factored_string(spec, e.factored)
       << "  fp " << e.fingerprint << "  image " << e.image.to_string() << "\n";
  }
}

json bounds_json(const PartialFieldSpec& spec, const FieldArtifacts& art) {
  json slots = json::array();
  json real = json::array();
  json box = json::array();
  for (std::size_t g = 0; g < spec.generator_count(); ++g) {
    slots.push_back(slot_name(spec, g));
    if (g < art.bounds.real.size()) {
      const auto& iv = art.bounds.real[g];
      real.push_back(json::array({iv.lo ? json(iv.lo->get_str()) : json(nullptr),
                                  iv.hi ? json(iv.hi->get_str()) : json(nullptr)}));
    }
    if (g < art.bounds.box.lo.size()) box.push_back(json::array({art.bounds.box.lo[g], art.bounds.box.hi[g]}));
  }
  json rows = json::array();
  for (const auto& row : art.rows) {
    json r = json::array();
    for (const auto& c : row.coeffs) r.push_back(c.get_str());
    rows.push_back(r);
  }
  return json{{"slots", slots},
              {"rows", rows},
              {"lp", spec.lp_mode == LpMode::Integers ? "integers" : "reals"},
              {"real_bounds", real},
              {"box", box},
              {"candidates", art.bounds.box.count()}};
}

void bounds_text(std::ostream& os, const PartialFieldSpec& spec, const FieldArtifacts& art) {
  os << spec.name << " norm constraints (-1 <= row . e <= 1), " << art.rows.size() << " rows\n";
  for (std::size_t k = 0; k < art.rows.size(); ++k) {
    os << "  row " << std::setw(2) << k + 1 << ":";
    for (std::size_t g = 0; g < art.rows[k].coeffs.size(); ++g) {
      const auto& c = art.rows[k].coeffs[g];
      if (c != 0) os << " " << (c > 0 ? "+" : "") << c.get_str() << "*[" << slot_name(spec, g) << "]";
    }
    os << "\n";
  }
  os << "  exponent ranges (" << (spec.lp_mode == LpMode::Integers ? "integer points" : "real relaxation") << "):\n";
  for (std::size_t g = 0; g < art.bounds.box.lo.size(); ++g) {
    os << "    " << slot_name(spec, g) << ": ";
    if (g < art.bounds.real.size() && g != spec.minus_one_index) os << interval_string(art.bounds.real[g]) << " -> ";
    os << "[" << art.bounds.box.lo[g] << ", " << art.bounds.box.hi[g] << "]\n";
  }
  os << "  candidates: " << art.bounds.box.count() << "\n";
}

json auts_json(const PartialFieldSpec& spec, const FieldArtifacts& art) {
  json members = json::array();
  for (const auto& a : art.group.members) {
    json images = json::object();
    for (std::size_t v = 0; v < a.images.size(); ++v) images[spec.variables[v]] = spec.format(art.table[a.images[v]].value);
    json perm = json::array();
    for (auto c : a.perm) perm.push_back(c + 1);
    members.push_back(json{{"images", images}, {"permutation", perm}});
  }
  return json{{"order", art.group.members.size()},
              {"candidates", art.group.candidates},
              {"prefilter_passed", art.group.prefilter_passed},
              {"members", members}};
}

void auts_text(std::ostream& os, const PartialFieldSpec& spec, const FieldArtifacts& art) {
  os << spec.name << " automorphism group of order " << art.group.members.size() << "\n";
  for (std::size_t k = 0; k < art.group.members.size(); ++k) {
    const auto& a = art.group.members[k];
    os << "  " << std::setw(3) << k + 1 << "  perm " << perm_string(a.perm) << " ";
    for (std::size_t v = 0; v < a.images.size(); ++v) {
      os << " " << spec.variables[v] << " -> " << spec.format(art.table[a.images[v]].value)
         << (v + 1 < a.images.size() ? "," : "");
    }
    os << "\n";
  }
}

json pairs_json(const PartialFieldSpec& spec, const FieldArtifacts& art) {
  json pairs = json::array();
  for (const auto& pq : art.pairs) {
    pairs.push_back(json::array({spec.format(art.table[pq.p].value), spec.format(art.table[pq.q].value)}));
  }
  return pairs;
}

void pairs_text(std::ostream& os, const PartialFieldSpec& spec, const FieldArtifacts& art) {
  os << spec.name << " U25 pairs (p, q) with p, q, p/q fundamental: " << art.pairs.size() << "\n";
  for (const auto& pq : art.pairs) {
    os << "  (" << spec.format(art.table[pq.p].value) << ", " << spec.format(art.table[pq.q].value) << ")  images "
       << art.table[pq.p].image.to_string() << " " << art.table[pq.q].image.to_string() << "\n";
  }
}

constexpr const char* kScopeNote = "Hydra-1 and Hydra-6 are out of scope; verify-all covers H2 to H5";

}  // namespace

std::optional<Command> parse_command(std::string_view name) {
  for (const auto& [c, n] : kCommands) {
    if (name == n) return c;
  }
  return std::nullopt;
}

std::string command_name(Command c) {
  for (const auto& [k, n] : kCommands) {
    if (k == c) return n;
  }
  return "?";
}

int run(const RunConfig& config, std::ostream& out, std::ostream& status) {
  if (config.workers < 1) throw UsageError("worker count must be at least 1");
  json doc{{"command", command_name(config.command)}};
  bool pass = true;
  std::ostringstream text;

  if (config.command != Command::Genesis) {
    ReportOptions options;
    options.workers = config.workers;
    options.prime_start = config.prime_start;
    options.corrupt_sieve = config.corrupt_sieve;
    options.stages = stages_for(config.command);
    options.status = [&](const std::string& line) { status << "[hydra] " << line << std::endl; };
    json reports = json::array();
    std::vector<std::pair<std::string, bool>> verdicts;
    for (const PartialFieldSpec* spec : select_fields(config)) {
      FieldReport r = field_report(*spec, options);
      json j = to_json(r);
      const FieldArtifacts& art = r.artifacts;
      switch (config.command) {
        case Command::Funs:
          if (art.table.size()) {
            j["table"] = table_json(*spec, art.table);
            table_text(text, *spec, art.table);
          }
          break;
        case Command::Bounds:
          if (!art.bounds.box.lo.empty()) {
            j["bounds"] = bounds_json(*spec, art);
            bounds_text(text, *spec, art);
          }
          break;
        case Command::Auts:
          j["group"] = auts_json(*spec, art);
          auts_text(text, *spec, art);
          break;
        case Command::U25:
          j["pairs"] = pairs_json(*spec, art);
          pairs_text(text, *spec, art);
          break;
        default:
          break;
      }
      text << to_text(r) << "\n";
      reports.push_back(std::move(j));
      verdicts.emplace_back(r.field, r.pass);
      pass = pass && r.pass;
    }
    doc["reports"] = std::move(reports);
    if (config.command == Command::VerifyAll) {
      status << "[hydra] genesis" << std::endl;
      GenesisSummary g = genesis_summary();
      doc["genesis"] = to_json(g);
      doc["scope"] = kScopeNote;
      text << to_text(g) << "\n";
      verdicts.emplace_back("genesis", g.pass);
      pass = pass && g.pass;
      text << "summary\n";
      for (const auto& [name, ok] : verdicts) text << "  " << name << ": " << (ok ? "PASS" : "FAIL") << "\n";
      text << "  note: " << kScopeNote << "\n";
    }
  } else {
    GenesisSummary g = genesis_summary();
    doc["genesis"] = to_json(g);
    text << to_text(g);
    pass = g.pass;
  }

  doc["verdict"] = pass ? "PASS" : "FAIL";
  if (config.format == Format::Json) {
    out << doc.dump(2) << "\n";
  } else {
    out << text.str() << "overall: " << (pass ? "PASS" : "FAIL") << "\n";
  }
  return pass ? 0 : 1;
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Verification of the Hydra-k partial fields H2 to H5", "hydra"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string field;
  std::string format = "text";
  unsigned workers = default_workers();
  std::uint64_t prime_start = 0;
  std::vector<std::string> spec_paths;
  app.add_option("--field", field, "H2|H3|H4|H5|all (default all)")->envname("HYDRA_FIELD");
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->envname("HYDRA_FORMAT");
  app.add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber)->envname("HYDRA_WORKERS");
  app.add_option("--prime-start", prime_start, "First sieve prime, replacing the spec's prime")
      ->envname("HYDRA_PRIME_START");
  app.add_option("--spec", spec_paths, "Spec file replacing or adding a field")->envname("HYDRA_SPEC");

  static const std::map<Command, std::string> kHelp = {
      {Command::Funs, "Fundamental elements by closure and by sieve"},
      {Command::Auts, "Automorphism group and induced coordinate permutations"},
      {Command::U25, "U_{2,5} pairs and their GF(5) images"},
      {Command::LiftCheck, "Lifting function and local lifts"},
      {Command::Bounds, "Norm constraints and exponent box"},
      {Command::Report, "Every stage for the selected fields"},
      {Command::Genesis, "Relation system and solution for H3"},
      {Command::VerifyAll, "Every stage for H2 to H5 plus genesis"},
  };
  std::string positional;
  std::map<CLI::App*, Command> subs;
  for (const auto& [c, name] : kCommands) {
    CLI::App* sub = app.add_subcommand(name, kHelp.at(c));
    if (c != Command::Genesis) sub->add_option("field", positional, "H2|H3|H4|H5|all");
    subs[sub] = c;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  RunConfig config;
  for (const auto& [sub, c] : subs) {
    if (sub->parsed()) config.command = c;
  }
  config.field = !positional.empty() ? positional : !field.empty() ? field : "all";
  config.format = format == "json" ? Format::Json : Format::Text;
  config.workers = workers;
  if (prime_start != 0) config.prime_start = prime_start;
  try {
    for (const auto& path : spec_paths) {
      std::ifstream in(path);
      if (!in) throw UsageError("cannot read spec file " + path);
      std::stringstream buf;
      buf << in.rdbuf();
      config.specs.push_back(parse_spec(buf.str()));
    }
    return run(config, out, err);
  } catch (const UsageError& e) {
    err << "hydra: " << e.what() << "\n" << "Run with --help for more information.\n";
    return 2;
  } catch (const SpecError& e) {
    err << "hydra: invalid spec: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "hydra: invalid spec: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace hydra
