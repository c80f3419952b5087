#include "hydra/report.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace hydra {

namespace {

constexpr std::size_t kMaxDetails = 10;

class StageRunner {
 public:
  StageRunner(FieldReport& report, const ReportOptions& options) : report_(report), options_(options) {}

  bool selected(const std::string& name) const {
    return options_.stages.empty() ||
           std::find(options_.stages.begin(), options_.stages.end(), name) != options_.stages.end();
  }

  bool any_selected(std::initializer_list<const char*> names) const {
    for (const char* n : names) {
      if (selected(n)) return true;
    }
    return false;
  }

  // Runs `body` when the stage is selected or `needed` by a later one and
  // returns true when it completed; an exception fails the stage. Only
  // selected stages are recorded.
  template <class F>
  bool run(const std::string& name, bool needed, F&& body) {
    bool record = selected(name);
    if (!record && !needed) return false;
    if (options_.status) options_.status(report_.field + ": " + name);
    Stage stage;
    stage.name = name;
    bool completed = true;
    try {
      body(stage);
    } catch (const std::exception& e) {
      completed = false;
      stage.pass = false;
      stage.actual = "error";
      stage.details.insert(stage.details.begin(), std::string("error: ") + e.what());
    }
    if (!record) return completed;
    if (stage.details.size() > kMaxDetails) {
      std::size_t extra = stage.details.size() - kMaxDetails;
      stage.details.resize(kMaxDetails);
      stage.details.push_back("... and " + std::to_string(extra) + " more");
    }
    if (!stage.pass) {
      for (const auto& d : stage.details) report_.violations.push_back(name + ": " + d);
      if (stage.details.empty()) {
        report_.violations.push_back(name + ": expected " + stage.expected + ", got " + stage.actual);
      }
    }
    report_.stages.push_back(std::move(stage));
    return completed;
  }

  void skip(const std::string& name, const std::string& reason) {
    if (!selected(name)) return;
    Stage stage;
    stage.name = name;
    stage.actual = "skipped";
    stage.details.push_back("skipped: " + reason);
    report_.violations.push_back(name + ": skipped: " + reason);
    report_.stages.push_back(std::move(stage));
  }

 private:
  FieldReport& report_;
  const ReportOptions& options_;
};

std::string str(std::size_t n) { return std::to_string(n); }

std::string box_string(const PartialFieldSpec& spec, const CandidateBox& box) {
  std::string s;
  for (std::size_t g = 0; g < box.lo.size(); ++g) {
    if (g) s += ", ";
    std::string slot = g == spec.minus_one_index ? "sign" : spec.generator_text[g];
    s += slot + " in [" + std::to_string(box.lo[g]) + "," + std::to_string(box.hi[g]) + "]";
  }
  return s;
}

}  // namespace

const std::vector<std::string>& report_stage_names() {
  static const std::vector<std::string> kNames = {
      "fundamentals", "asc_idempotence", "exponent_bounds", "bound_validity", "sieve",
      "survivor_verification", "automorphisms", "u25_pairs", "u25_tuples", "inequivalence",
      "domain", "lifting_function", "local_lift", "lift_bijection"};
  return kNames;
}

FieldReport field_report(const PartialFieldSpec& spec, const ReportOptions& options) {
  FieldReport r;
  r.field = spec.name;
  r.spec_fingerprint = spec.fingerprint_hex();
  r.expected = {spec.expect.fundamentals, spec.expect.automorphisms, spec.expect.u25_pairs, spec.expect.domain};
  StageRunner runner(r, options);
  FieldArtifacts& art = r.artifacts;
  const FundamentalTable& table = art.table;
  const std::string phi = "phi (width " + str(spec.gf5_width()) + ")";
  const std::string lift_hom =
      spec.lift_width < spec.gf5_width() ? "psi (first " + str(spec.lift_width) + " coordinates of phi)" : phi;

  bool need_table = runner.any_selected({"asc_idempotence", "bound_validity", "survivor_verification",
                                         "automorphisms", "u25_pairs", "inequivalence", "lifting_function",
                                         "local_lift", "lift_bijection"});
  bool have_table = runner.run("fundamentals", need_table, [&](Stage& s) {
    s.expected = str(spec.expect.fundamentals);
    art.table = build_fundamental_table(spec);
    r.counts.fundamentals = table.size();
    s.actual = str(table.size());
    s.hom = phi;
    s.pass = table.size() == spec.expect.fundamentals;
    if (!table.fingerprints_distinct()) {
      s.pass = false;
      s.details.push_back("fingerprints of the fundamental table are not pairwise distinct");
    }
    if (!table.images_distinct()) {
      s.pass = false;
      for (std::size_t i = 0; i < table.size(); ++i) {
        for (std::size_t j = i + 1; j < table.size(); ++j) {
          if (table[i].image == table[j].image) {
            s.details.push_back(spec.format(table[i].value) + " and " + spec.format(table[j].value) +
                                " share the image " + table[i].image.to_string());
          }
        }
      }
    }
  });
  if (have_table) {
    runner.run("asc_idempotence", false, [&](Stage& s) {
      std::size_t checked = 0;
      for (const auto& e : table.entries()) {
        for (const auto& a : associates(e.value)) {
          ++checked;
          if (!is_fundamental_exact(spec, table, a)) {
            s.details.push_back("associate " + spec.format(a) + " of " + spec.format(e.value) + " is not in the table");
          }
        }
      }
      s.expected = "associates of every entry stay in the table";
      s.actual = str(checked - s.details.size()) + "/" + str(checked) + " associates found";
      s.pass = s.details.empty();
    });
  } else {
    runner.skip("asc_idempotence", "no fundamental table");
  }

  std::vector<std::vector<int>> candidates;
  bool need_box = runner.any_selected({"bound_validity", "sieve", "survivor_verification"});
  bool have_box = runner.run("exponent_bounds", need_box, [&](Stage& s) {
    art.rows = lognorm_rows(spec);
    art.bounds = bound_exponents(art.rows, spec.extra_bounds, spec.minus_one_index, spec.lp_mode);
    candidates = enumerate_candidates(art.bounds.box);
    s.expected = str(spec.expect.candidates) + " candidates";
    s.actual = str(candidates.size()) + " candidates; " + box_string(spec, art.bounds.box);
    s.pass = spec.expect.candidates == 0 || candidates.size() == spec.expect.candidates;
  });

  if (have_table && have_box) {
    runner.run("bound_validity", false, [&](Stage& s) {
      const auto& box = art.bounds.box;
      for (const auto& e : table.entries()) {
        if (e.factored.is_zero()) continue;
        for (std::size_t g = 0; g < e.factored.exps.size(); ++g) {
          if (g == spec.minus_one_index) continue;
          int x = e.factored.exps[g];
          if (x < box.lo[g] || x > box.hi[g]) {
            s.details.push_back(spec.format(e.value) + " has exponent " + std::to_string(x) + " on " +
                                spec.generator_text[g] + " outside the box");
          }
        }
        for (std::size_t k = 0; k < art.rows.size(); ++k) {
          mpq_class v = 0;
          for (std::size_t g = 0; g < art.rows[k].coeffs.size(); ++g) v += art.rows[k].coeffs[g] * e.factored.exps[g];
          if (v < -1 || v > 1) {
            s.details.push_back(spec.format(e.value) + " violates norm row " + str(k + 1) + " with value " + v.get_str());
          }
        }
      }
      s.expected = "every fundamental lies in the box and satisfies every norm row";
      s.actual = s.details.empty() ? "all " + str(table.size()) + " satisfy" : str(s.details.size()) + " violations";
      s.pass = s.details.empty();
    });
  } else {
    runner.skip("bound_validity", "no table or box");
  }

  bool have_sieve = false;
  if (have_box) {
    have_sieve = runner.run("sieve", runner.selected("survivor_verification"), [&](Stage& s) {
      art.sieve = fingerprint_sieve(spec, candidates, options.prime_start);
      SieveResult& sieve = *art.sieve;
      if (options.corrupt_sieve) options.corrupt_sieve(sieve);
      s.expected = str(spec.expect.fundamentals) + " survivors";
      if (!sieve.exact && spec.expect.distinct_residues != 0) {
        s.expected += ", " + str(spec.expect.distinct_residues) + " distinct residues";
      }
      s.actual = str(sieve.survivors.size()) + " survivors, " + str(sieve.distinct_values) + " distinct " +
                 (sieve.exact ? "values (exact)" : "residues mod " + std::to_string(sieve.prime));
      s.pass = sieve.survivors.size() == spec.expect.fundamentals;
      if (!sieve.exact && spec.expect.distinct_residues != 0 && sieve.distinct_values != spec.expect.distinct_residues) {
        s.pass = false;
      }
      for (auto p : sieve.rejected_primes) s.details.push_back("prime " + std::to_string(p) + " rejected (not injective)");
    });
  } else {
    runner.skip("sieve", "no candidate box");
  }

  if (have_sieve && have_table) {
    runner.run("survivor_verification", false, [&](Stage& s) {
      SurvivorCheck check = verify_survivors(spec, candidates, *art.sieve, table);
      s.expected = "survivors agree with the fundamental table elementwise";
      s.actual = str(check.exact_checks) + " exact checks, " + str(check.failures.size()) + " failures";
      s.details = check.failures;
      s.pass = check.ok;
    });
  } else {
    runner.skip("survivor_verification", "no sieve output or table");
  }

  if (have_table) {
    runner.run("automorphisms", false, [&](Stage& s) {
      ProgressFn progress;
      if (options.status) {
        progress = [&](std::size_t done, std::size_t total) {
          if (total >= 20 && (done % (total / 10) == 0 || done == total)) {
            options.status(spec.name + ": automorphism prefilter " + str(done) + "/" + str(total));
          }
        };
      }
      art.group = compute_automorphisms(spec, table, options.workers, progress);
      const AutGroup& group = art.group;
      r.counts.automorphisms = group.members.size();
      GroupCheck check = check_group(spec, table, group);
      s.expected = "order " + str(spec.expect.automorphisms) + ", closed, inducing all of S_" + str(spec.gf5_width());
      s.actual = "order " + str(group.members.size()) + " (" + str(group.prefilter_passed) + " of " +
                 str(group.candidates) + " candidates passed the prefilter); " + str(check.pairs_checked) +
                 (check.exhaustive ? " compositions checked exhaustively" : " random compositions checked") +
                 (check.full_symmetric_group ? "; permutations form S_" + str(spec.gf5_width()) : "");
      s.hom = phi;
      s.details = check.failures;
      s.pass = group.members.size() == spec.expect.automorphisms && check.ok && check.full_symmetric_group;
    });
  } else {
    runner.skip("automorphisms", "no fundamental table");
  }

  bool have_pairs = false;
  if (have_table) {
    have_pairs = runner.run("u25_pairs", runner.any_selected({"inequivalence", "lift_bijection"}), [&](Stage& s) {
      art.pairs = enumerate_u25(spec, table);
      const auto& pairs = art.pairs;
      r.counts.u25_pairs = pairs.size();
      std::set<U25Pair> all(pairs.begin(), pairs.end());
      for (const auto& pq : pairs) {
        if (!all.count({pq.q, pq.p})) {
          s.details.push_back("(" + spec.format(table[pq.p].value) + ", " + spec.format(table[pq.q].value) +
                              ") is a pair but its swap is not");
        }
      }
      s.expected = str(spec.expect.u25_pairs);
      s.actual = str(pairs.size());
      s.pass = pairs.size() == spec.expect.u25_pairs && s.details.empty();
    });
  } else {
    runner.skip("u25_pairs", "no fundamental table");
  }

  std::vector<GFPair> tuples;
  bool have_tuples = runner.run("u25_tuples", runner.any_selected({"local_lift", "lift_bijection"}), [&](Stage& s) {
    tuples = gf5_u25_tuples(spec.lift_width);
    s.expected = str(spec.expect.u25_pairs);
    s.actual = str(tuples.size());
    s.hom = lift_hom;
    s.pass = tuples.size() == spec.expect.u25_pairs;
  });

  if (have_pairs) {
    runner.run("inequivalence", false, [&](Stage& s) {
      const auto& pairs = art.pairs;
      std::vector<GFPair> images;
      for (const auto& pq : pairs) images.push_back({table[pq.p].image, table[pq.q].image});
      auto violations = check_inequivalence(images);
      for (const auto& v : violations) {
        s.details.push_back("pair (" + spec.format(table[pairs[v.pair].p].value) + ", " +
                            spec.format(table[pairs[v.pair].q].value) + ") has equal projections " + str(v.i + 1) +
                            " and " + str(v.j + 1));
      }
      s.expected = "0 violations";
      s.actual = str(violations.size()) + " violations over " + str(images.size()) + " pairs";
      s.hom = phi;
      s.pass = violations.empty();
    });
  } else {
    runner.skip("inequivalence", "no U25 pairs");
  }

  CrossRatioDomain domain;
  bool need_domain = runner.any_selected({"lifting_function", "local_lift", "lift_bijection"});
  bool have_domain = runner.run("domain", need_domain, [&](Stage& s) {
    domain = build_domain(spec.lift_width);
    r.counts.domain = domain.members.size();
    s.expected = str(spec.expect.domain);
    s.actual = str(domain.members.size());
    s.hom = lift_hom;
    s.pass = domain.members.size() == spec.expect.domain;
  });

  LiftingBuild lifting;
  bool have_lift = false;
  if (have_table && have_domain) {
    have_lift = runner.run("lifting_function", runner.any_selected({"local_lift", "lift_bijection"}), [&](Stage& s) {
      lifting = build_lifting_fn(spec, table, domain);
      s.details = lifting.failures;
      std::size_t round_trip = 0;
      for (std::size_t i = 0; i < table.size(); ++i) {
        auto back = lifting.fn.lift(table[i].image.truncated(spec.lift_width));
        if (back && table[*back].value == table[i].value) {
          ++round_trip;
        } else {
          s.details.push_back("round trip fails for " + spec.format(table[i].value));
        }
      }
      s.expected = "bijection onto the domain; round trip on all " + str(table.size()) + " fundamentals";
      s.actual = str(lifting.fn.size()) + " images, " + str(round_trip) + " round trips";
      s.hom = lift_hom;
      s.pass = lifting.bijective && round_trip == table.size();
    });
  } else {
    runner.skip("lifting_function", "no fundamental table or domain");
  }

  if (have_lift && have_tuples) {
    LocalLiftResult lifted;
    bool have_lifted = runner.run("local_lift", runner.selected("lift_bijection"), [&](Stage& s) {
      lifted = local_lift_check(spec, table, lifting.fn, domain, tuples);
      s.details = lifted.domain_violations;
      s.details.insert(s.details.end(), lifted.lift_violations.begin(), lifted.lift_violations.end());
      s.expected = "0 domain violations, 0 lift violations";
      s.actual = str(lifted.domain_violations.size()) + " domain violations, " + str(lifted.lift_violations.size()) +
                 " lift violations over " + str(tuples.size()) + " tuple pairs";
      s.hom = lift_hom;
      s.pass = lifted.ok();
    });
    if (have_pairs && have_lifted) {
      runner.run("lift_bijection", false, [&](Stage& s) {
        std::set<U25Pair> hydra(art.pairs.begin(), art.pairs.end());
        for (const auto& pq : hydra) {
          if (!lifted.lifted.count(pq)) {
            s.details.push_back("(" + spec.format(table[pq.p].value) + ", " + spec.format(table[pq.q].value) +
                                ") is not the lift of a GF(5) tuple pair");
          }
        }
        for (const auto& pq : lifted.lifted) {
          if (!hydra.count(pq)) {
            s.details.push_back("lift (" + spec.format(table[pq.p].value) + ", " + spec.format(table[pq.q].value) +
                                ") is not a U25 pair");
          }
        }
        s.expected = "lifted tuple pairs equal the U25 pairs";
        s.actual = str(lifted.lifted.size()) + " lifted, " + str(hydra.size()) + " U25 pairs";
        s.hom = lift_hom;
        s.pass = s.details.empty() && lifted.lifted.size() == tuples.size();
      });
    } else {
      runner.skip("lift_bijection", "no U25 pairs or lifts");
    }
  } else {
    runner.skip("local_lift", "no lifting function or tuple pairs");
    runner.skip("lift_bijection", "no lifting function or tuple pairs");
  }

  r.pass = r.violations.empty() && !r.stages.empty();
  for (const auto& s : r.stages) r.pass = r.pass && s.pass;
  return r;
}

GenesisSummary genesis_summary() {
  GenesisSummary g;
  g.report = run_genesis();
  auto sys = h3_relation_system(g.report.chosen_reading < 0 ? 0 : g.report.chosen_reading);
  auto ones = relation_residuals(sys, std::vector<std::string>(sys.symbols.size(), "1"));
  g.negative_control_ok = ones[0] != "0";
  g.pass = g.report.ok() && g.negative_control_ok;
  return g;
}

nlohmann::json to_json(const FieldReport& r) {
  using nlohmann::json;
  auto count = [](const std::optional<std::size_t>& n) { return n ? json(*n) : json(nullptr); };
  auto counts = [&](const FieldCounts& c) {
    return json{{"fundamentals", count(c.fundamentals)},
                {"automorphisms", count(c.automorphisms)},
                {"u25_pairs", count(c.u25_pairs)},
                {"domain", count(c.domain)}};
  };
  json stages = json::array();
  for (const auto& s : r.stages) {
    json j{{"name", s.name}, {"pass", s.pass}, {"expected", s.expected}, {"actual", s.actual}, {"details", s.details}};
    if (!s.hom.empty()) j["hom"] = s.hom;
    stages.push_back(std::move(j));
  }
  json out{{"field", r.field},
           {"spec_fingerprint", r.spec_fingerprint},
           {"counts", counts(r.counts)},
           {"expected", counts(r.expected)},
           {"stages", stages},
           {"violations", r.violations},
           {"verdict", r.pass ? "PASS" : "FAIL"}};
  if (!r.violations.empty()) out["first_counterexample"] = r.violations.front();
  return out;
}

nlohmann::json to_json(const GenesisSummary& g) {
  using nlohmann::json;
  const auto& rep = g.report;
  json triples = json::array();
  for (std::size_t t = 0; t < rep.triples.values.size(); ++t) {
    json vals = json::array();
    for (const auto& v : rep.triples.values[t]) vals.push_back(v.to_string());
    triples.push_back(json{{"values", vals}, {"product", rep.triples.products[t].to_string()}});
  }
  json images = json::array();
  for (const auto& im : rep.solution.images) images.push_back(im.to_string());
  return json{{"field", "H3"},
              {"triples", triples},
              {"relation_residuals", rep.solution.residuals},
              {"basis_residuals", rep.solution.basis_residuals},
              {"solved_fundamental", rep.solution.fundamental},
              {"solved_images", images},
              {"s223_reading", rep.chosen_reading},
              {"s223_readings_passing", rep.reading_passes},
              {"negative_control", g.negative_control_ok},
              {"verdict", g.pass ? "PASS" : "FAIL"}};
}

std::string to_text(const FieldReport& r) {
  std::ostringstream os;
  os << r.field << " (spec " << r.spec_fingerprint << ")\n";
  for (const auto& s : r.stages) {
    os << "  [" << (s.pass ? "PASS" : "FAIL") << "] " << s.name << ": " << s.actual;
    if (!s.pass && !s.expected.empty()) os << " (expected " << s.expected << ")";
    if (!s.hom.empty()) os << " via " << s.hom;
    os << "\n";
    if (!s.pass) {
      for (const auto& d : s.details) os << "         " << d << "\n";
    }
  }
  auto count = [](const std::optional<std::size_t>& n) { return n ? std::to_string(*n) : std::string("-"); };
  os << "  counts:";
  os << " fundamentals=" << count(r.counts.fundamentals) << "/" << count(r.expected.fundamentals);
  os << " automorphisms=" << count(r.counts.automorphisms) << "/" << count(r.expected.automorphisms);
  os << " u25_pairs=" << count(r.counts.u25_pairs) << "/" << count(r.expected.u25_pairs);
  os << " domain=" << count(r.counts.domain) << "/" << count(r.expected.domain) << " (actual/expected)\n";
  os << "  verdict: " << (r.pass ? "PASS" : "FAIL") << "\n";
  if (!r.pass && !r.violations.empty()) os << "  first counterexample: " << r.violations.front() << "\n";
  return os.str();
}

std::string to_text(const GenesisSummary& g) {
  std::ostringstream os;
  const auto& rep = g.report;
  os << "genesis of H3\n";
  for (std::size_t t = 0; t < rep.triples.values.size(); ++t) {
    os << "  triple " << t + 1 << ":";
    for (const auto& v : rep.triples.values[t]) os << " " << v.to_string();
    os << " -> product " << rep.triples.products[t].to_string() << "\n";
  }
  for (std::size_t i = 0; i < rep.solution.residuals.size(); ++i) {
    os << "  relation " << i + 1 << " residual: " << rep.solution.residuals[i] << "\n";
  }
  for (std::size_t i = 0; i < rep.solution.basis_residuals.size(); ++i) {
    os << "  basis element " << i + 1 << " residual: " << rep.solution.basis_residuals[i] << "\n";
  }
  static const char* kSymbols[] = {"s223", "s232", "s233", "s234"};
  for (std::size_t i = 0; i < rep.solution.images.size() && i < 4; ++i) {
    os << "  " << kSymbols[i] << ": " << (rep.solution.fundamental[i] ? "fundamental" : "NOT fundamental")
       << ", image " << rep.solution.images[i].to_string() << (rep.solution.image_matches[i] ? "" : " (mismatch)")
       << "\n";
  }
  os << "  s223 reading: "
     << (rep.chosen_reading == 0   ? "1 - alpha/(1 - alpha + alpha^2)"
         : rep.chosen_reading == 1 ? "(1 - alpha)/(1 - alpha + alpha^2)"
                                   : "none passes")
     << "\n";
  os << "  all-ones assignment rejected: " << (g.negative_control_ok ? "yes" : "no") << "\n";
  os << "  verdict: " << (g.pass ? "PASS" : "FAIL") << "\n";
  return os.str();
}

}  // namespace hydra
