#include "wpec/enumeration.hpp"

#include <functional>
#include <stdexcept>

namespace wpec {

std::string FaultNumberCombination::str() const {
  return "(G1a=" + std::to_string(g1a) + ",G1b=" + std::to_string(g1b) +
         ",G2=" + std::to_string(g2) + ",W=" + std::to_string(w) + ",F=" + std::to_string(f) +
         ",S=" + std::to_string(s) + ")";
}

std::vector<FaultNumberCombination> fault_number_combinations(int max_faults, EnumerationMode mode) {
  if (max_faults < 0 || max_faults > 3) throw std::invalid_argument("max_faults must be 0..3");
  const bool relaxed = mode == EnumerationMode::Relaxed;
  const int b_max = relaxed ? max_faults : 0;
  std::vector<FaultNumberCombination> out;
  for (int a = 0; a <= max_faults; ++a)
    for (int b = 0; b <= b_max; ++b)
      for (int g2 = 0; g2 <= max_faults; ++g2)
        for (int w = 0; w <= max_faults; ++w)
          for (int f = 0; f <= max_faults; ++f)
            for (int s = 0; s <= b_max; ++s) {
              FaultNumberCombination c{a, b, g2, w, f, s};
              if (c.total() <= max_faults) out.push_back(c);
            }
  return out;
}

std::string FaultSetCombination::str() const {
  std::string s = counts.str() + " {";
  for (size_t i = 0; i < sets.size(); ++i) {
    const FaultSetRef& r = sets[i];
    if (i) s += ", ";
    s += std::string("F^") + to_string(r.type) + "_" + std::to_string(r.count);
    if (r.circuit >= 0) s += "," + std::to_string(r.circuit + 1);
    if (r.type == FaultType::G1 || r.type == FaultType::G2) s += r.late ? "[b]" : "[a]";
  }
  return s + "}";
}

std::vector<std::vector<FaultSetRef>> split_over_circuits(FaultType type, int num_circuits, int v,
                                                          bool late) {
  std::vector<std::vector<FaultSetRef>> out;
  if (v == 0) {
    out.push_back({});
    return out;
  }
  auto ref = [&](int j, int count) { return FaultSetRef{type, j, count, late}; };
  for (int j = 0; j < num_circuits; ++j) out.push_back({ref(j, v)});
  if (v == 2 || v == 3) {
    for (int j = 0; j < num_circuits; ++j)
      for (int k = j + 1; k < num_circuits; ++k) {
        if (v == 2) {
          out.push_back({ref(j, 1), ref(k, 1)});
        } else {
          out.push_back({ref(j, 2), ref(k, 1)});
          out.push_back({ref(j, 1), ref(k, 2)});
        }
      }
  }
  if (v == 3) {
    for (int j = 0; j < num_circuits; ++j)
      for (int k = j + 1; k < num_circuits; ++k)
        for (int l = k + 1; l < num_circuits; ++l) out.push_back({ref(j, 1), ref(k, 1), ref(l, 1)});
  }
  return out;
}

std::vector<FaultSetCombination> fault_set_combinations(const FaultNumberCombination& counts,
                                                        EnumerationMode mode) {
  std::vector<std::vector<std::vector<FaultSetRef>>> parts;
  parts.push_back(split_over_circuits(FaultType::G1, 21, counts.g1a, false));
  if (mode == EnumerationMode::Relaxed) {
    parts.push_back(split_over_circuits(FaultType::G1, 21, counts.g1b, true));
  }
  parts.push_back(split_over_circuits(FaultType::G2, 3, counts.g2, false));
  if (mode == EnumerationMode::LookupTable) {
    if (counts.w) parts.push_back({{FaultSetRef{FaultType::W, -1, counts.w}}});
    if (counts.f) parts.push_back({{FaultSetRef{FaultType::F, -1, counts.f}}});
  }

  std::vector<FaultSetCombination> out;
  std::vector<FaultSetRef> cur;
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == parts.size()) {
      out.push_back({counts, cur});
      return;
    }
    for (const auto& choice : parts[i]) {
      cur.insert(cur.end(), choice.begin(), choice.end());
      rec(i + 1);
      cur.resize(cur.size() - choice.size());
    }
  };
  rec(0);
  return out;
}

const std::vector<Effect>& effects_of(const FaultSets& sets, const FaultSetRef& ref) {
  switch (ref.type) {
    case FaultType::G1: return sets.g1.at(static_cast<size_t>(ref.circuit)).at(static_cast<size_t>(ref.count)).effects;
    case FaultType::G2: return sets.g2.at(static_cast<size_t>(ref.circuit)).at(static_cast<size_t>(ref.count)).effects;
    case FaultType::W: return sets.w.at(static_cast<size_t>(ref.count)).effects;
    case FaultType::F: return sets.f.at(static_cast<size_t>(ref.count)).effects;
    case FaultType::S: break;
  }
  throw std::invalid_argument("no fault set for type S");
}

uint64_t combination_count(const FaultSets& sets, const FaultSetCombination& combo) {
  uint64_t n = 1;
  for (const FaultSetRef& r : combo.sets) n *= effects_of(sets, r).size();
  return n;
}

}  // namespace wpec
