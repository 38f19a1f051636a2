#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "wpec/circuit.hpp"

namespace wpec {

/// Fault counts per type. The lookup-table enumeration uses g1a as the total
/// G1 count and leaves g1b and s at zero.
struct FaultNumberCombination {
  int g1a = 0;
  int g1b = 0;
  int g2 = 0;
  int w = 0;
  int f = 0;
  int s = 0;

  int total() const { return g1a + g1b + g2 + w + f + s; }
  std::string str() const;
  auto operator<=>(const FaultNumberCombination&) const = default;
};

enum class EnumerationMode { LookupTable, Relaxed };

std::vector<FaultNumberCombination> fault_number_combinations(int max_faults, EnumerationMode mode);

struct FaultSetRef {
  FaultType type = FaultType::W;
  int circuit = -1;
  int count = 0;
  bool late = false;  // G1 faults at or after the final round's X-generator block
  auto operator<=>(const FaultSetRef&) const = default;
};

/// Up to three fault sets; a fault combination picks one effect from each.
struct FaultSetCombination {
  FaultNumberCombination counts;
  std::vector<FaultSetRef> sets;

  std::string str() const;
};

/// All ways to spread `v` faults over circuits 0..num_circuits-1: one set with
/// count v, or several sets on distinct circuits whose counts sum to v.
std::vector<std::vector<FaultSetRef>> split_over_circuits(FaultType type, int num_circuits, int v,
                                                          bool late);

/// In Relaxed mode only G1 (early and late) and G2 faults are enumerated;
/// W, F and S are accounted for by their counts alone.
std::vector<FaultSetCombination> fault_set_combinations(const FaultNumberCombination& counts,
                                                        EnumerationMode mode);

const std::vector<Effect>& effects_of(const FaultSets& sets, const FaultSetRef& ref);

/// Number of fault combinations (product of set sizes).
uint64_t combination_count(const FaultSets& sets, const FaultSetCombination& combo);

}  // namespace wpec
