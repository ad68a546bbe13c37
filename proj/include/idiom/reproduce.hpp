#pragma once

#include <string>
#include <vector>

#include "idiom/io.hpp"

namespace idiom {

struct ReproduceResult {
  Report report;
  bool ok = false;
  std::vector<std::string> warnings;
};

/// Diffs the computed division/free sets and nucleus identities of a named
/// reference example (exa1, ex2, diamond) against embedded expected listings.
ReproduceResult reproduce(const std::string& name);

}  // namespace idiom
