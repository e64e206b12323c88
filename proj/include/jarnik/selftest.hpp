#pragma once

#include <functional>
#include <string>
#include <vector>

#include "jarnik/curvature.hpp"

namespace jarnik {

struct SelftestItem {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SelftestReport {
  std::vector<SelftestItem> items;

  bool all_passed() const;
  // One "PASS name" / "FAIL name: detail" line per item, then a summary line.
  std::string text() const;
};

// Replaceable pieces, so tests can confirm the checks notice a broken formula.
struct SelftestHooks {
  std::function<BigRational(LatticePoint, LatticePoint, LatticePoint)> circumradius = circumradius_squared;
};

/// Checks the small exact values every build must reproduce: the order-4
/// polygon, Farey data, continued fractions and radii of curvature.
SelftestReport run_selftest(const SelftestHooks& hooks = {});

}  // namespace jarnik
