#pragma once

#include "hydra/genesis.hpp"
#include "hydra/lift.hpp"
#include "hydra/sieve.hpp"
#include "hydra/symmetry.hpp"

#include <json.hpp>

#include <functional>

namespace hydra {

struct Stage {
  std::string name;
  bool pass = false;
  std::string expected;
  std::string actual;
  std::string hom;                   // homomorphism used, when relevant
  std::vector<std::string> details;  // counterexamples, capped
};

struct FieldCounts {
  std::optional<std::size_t> fundamentals;
  std::optional<std::size_t> automorphisms;
  std::optional<std::size_t> u25_pairs;
  std::optional<std::size_t> domain;
};

// Intermediate results, kept for commands that print them.
struct FieldArtifacts {
  FundamentalTable table;
  std::vector<ConstraintRow> rows;
  ExponentBounds bounds;
  std::optional<SieveResult> sieve;
  AutGroup group;
  std::vector<U25Pair> pairs;
};

struct FieldReport {
  std::string field;
  std::string spec_fingerprint;
  FieldCounts counts;
  FieldCounts expected;
  std::vector<Stage> stages;
  std::vector<std::string> violations;
  bool pass = false;
  FieldArtifacts artifacts;
};

struct ReportOptions {
  unsigned workers = 1;
  std::optional<std::uint64_t> prime_start;
  // Status lines for long stages; not part of the report.
  std::function<void(const std::string&)> status;
  // Test hook applied to the sieve output before it is verified.
  std::function<void(SieveResult&)> corrupt_sieve;
  // Stages to report; empty means all. Prerequisites run unreported.
  std::vector<std::string> stages;
};

// Stage names in execution order.
const std::vector<std::string>& report_stage_names();

// Runs every stage for one field: fundamentals both ways, bounds, sieve,
// automorphisms, U_{2,5} pairs, inequivalence, domain, lifting and local lifts.
FieldReport field_report(const PartialFieldSpec& spec, const ReportOptions& options = {});

struct GenesisSummary {
  GenesisReport report;
  bool negative_control_ok = false;  // the all-ones assignment violates a relation
  bool pass = false;
};

GenesisSummary genesis_summary();

nlohmann::json to_json(const FieldReport& r);
nlohmann::json to_json(const GenesisSummary& g);
std::string to_text(const FieldReport& r);
std::string to_text(const GenesisSummary& g);

}  // namespace hydra
