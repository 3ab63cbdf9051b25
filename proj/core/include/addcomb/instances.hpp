#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "addcomb/gset.hpp"

namespace addcomb {

struct Instance {
  std::string id;      // stable, sortable
  std::string family;  // "subset", "random", "progression", "union", "subspace", ...
  GSet set;
};

enum class GeneratorKind { kExhaustive, kRandom, kStructured };

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::kExhaustive;
  GroupSpec group = GroupSpec::cyclic(11);
  int max_size = 3;                // exhaustive: all nonempty subsets with |A| <= max_size
  int size = 8;                    // random: |A|
  int count = 100;                 // random: number of sets
  std::uint64_t seed = 0;
  std::vector<int> lengths{5};     // structured: progression lengths
  // Exhaustive, cyclic only: keep one set per orbit under x -> lambda x + c
  // (the lexicographically smallest code vector).
  bool normalize = false;
  std::uint64_t budget = 5'000'000;  // max instances
};

// Deterministic for a fixed spec. Throws BudgetExceeded past spec.budget.
std::vector<Instance> enumerate_instances(const GeneratorSpec& spec);

// Canonical representative of A under translation and unit dilation (Z/N).
GSet affine_normal_form(const GSet& a);

}  // namespace addcomb
