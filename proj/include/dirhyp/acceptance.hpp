#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <dirhyp/core.hpp>

namespace dirhyp {

struct CriterionResult {
  std::string id;  // "AC1" ... "AC13"
  bool passed = false;
  std::string detail;
};

struct AcceptanceOptions {
  std::uint64_t seed = 20240521;
  std::vector<std::string> only;  // empty: all criteria
  unsigned workers = 1;
};

std::vector<std::string> criterion_ids();

// Throws std::invalid_argument for an unknown id in `only`.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt);

// Seeded random digraph on 1..max_n vertices; loops possible, no parallel edges.
Digraph random_digraph(std::mt19937_64& rng, std::size_t max_n);

// Every loop-allowing simple digraph on 1..max_n vertices (max_n <= 3).
std::vector<Digraph> all_small_digraphs(std::size_t max_n);

}  // namespace dirhyp
