#pragma once

#include "hydra/pfield.hpp"

#include <array>

namespace hydra {

// Relations defining H3 as the lift partial field of GF(5)^3, over symbols
// s223, s232, s233, s234 named after the cross ratios they lift.
struct RelationSystem {
  std::vector<std::string> symbols;
  std::vector<GFTuple> cross_ratios;                 // one per symbol
  std::vector<std::array<std::string, 3>> triples;   // p, q, r with pqr = 1
  std::vector<std::string> relations;                // cleared 1 - pqr
  std::vector<std::string> basis;                    // reference Groebner basis
  std::vector<std::string> solution;                 // one expression in alpha per symbol
};

// s223 has two readings of its reference form; `s223_reading` is 0 for
// 1 - alpha/(1-alpha+alpha^2) and 1 for (1-alpha)/(1-alpha+alpha^2).
RelationSystem h3_relation_system(int s223_reading = 0);

struct TripleCheck {
  bool ok = true;
  std::vector<std::array<GFTuple, 3>> values;
  std::vector<GFTuple> products;
};

TripleCheck check_triples(const RelationSystem& sys);

struct SolutionCheck {
  bool ok = true;
  std::vector<std::string> residuals;        // per relation, "0" when satisfied
  std::vector<std::string> basis_residuals;  // per basis element
  std::vector<bool> fundamental;             // per symbol, in H3
  std::vector<GFTuple> images;               // per symbol, under H3's gf5 hom
  std::vector<bool> image_matches;
};

// Substitutes the solution into the relations and basis and clears
// denominators; also checks the solved values against H3.
SolutionCheck verify_solution(const RelationSystem& sys);

// Residual numerator of each relation with every symbol set to `values`.
std::vector<std::string> relation_residuals(const RelationSystem& sys, const std::vector<std::string>& values);

struct GenesisReport {
  TripleCheck triples;
  SolutionCheck solution;
  int chosen_reading = -1;  // -1 when no reading passes
  std::vector<bool> reading_passes;
  bool ok() const { return triples.ok && solution.ok && chosen_reading >= 0; }
};

GenesisReport run_genesis();

}  // namespace hydra
