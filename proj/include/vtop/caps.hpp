#pragma once

#include <cstddef>

namespace vtop {

/// Size limits for the brute-force paths. Exceeding one raises
/// SizeLimitExceeded; nothing silently degrades.
struct Caps {
  std::size_t totally_below_elements = 16;  // 2^|L| subsets
  std::size_t enumerate_elements = 5;       // quantale enumeration
  std::size_t core_points = 4;              // cover enumeration in core()
  std::size_t oracle_points = 2;            // full structure-space oracles
  std::size_t exhaustive_values = 8;        // |V| for exhaustive structure suites
  std::size_t power_objects = 4096;         // |V|^n in power_category
  std::size_t pset_points = 6;              // pset_category
};

}  // namespace vtop
