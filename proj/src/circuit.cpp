#include "wpec/circuit.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "wpec/codes.hpp"

namespace wpec {

namespace {

using Kind = CircuitOp::Kind;

PauliOp generator_op(PauliType type, uint64_t support) {
  return type == PauliType::Z ? PauliOp::z_type(kConcatQubits, support)
                              : PauliOp::x_type(kConcatQubits, support);
}

char type_char(PauliType t) { return t == PauliType::Z ? 'z' : 'x'; }

void sort_unique(std::vector<Effect>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

ExtractionCircuit build_level2_circuit(int generator, PauliType type, Ordering ordering) {
  if (generator < 0 || generator > 2) throw std::out_of_range("second-level generator index");
  const uint8_t pattern = packed::kOuterRows[static_cast<size_t>(generator)];
  std::vector<int> blocks;
  for (int b = 0; b < kNumBlocks; ++b) {
    if ((pattern >> b) & 1) blocks.push_back(b);
  }

  ExtractionCircuit c;
  c.label = std::string("g~") + type_char(type) + "_" + std::to_string(generator + 1);
  c.type = type;
  c.second_level = true;
  c.generator = generator;
  c.target_generator = generator_op(type, packed::expand_block_pattern(pattern));
  if (ordering == Ordering::Normal) {
    for (int b : blocks) {
      for (int q = 0; q < kBlockSize; ++q) c.cnot_order.push_back(kBlockSize * b + q);
    }
  } else {
    // First qubit of every support block, then the second of each, and so on.
    for (int q = 0; q < kBlockSize; ++q) {
      for (int b : blocks) c.cnot_order.push_back(kBlockSize * b + q);
    }
  }
  c.ancilla_count = 1;
  c.ops.push_back({Kind::PrepAncilla});
  for (int q : c.cnot_order) c.ops.push_back({Kind::DataCnot, q});
  c.ops.push_back({Kind::MeasureAncilla});
  return c;
}

ExtractionCircuit build_level1_circuit(int block, int generator, PauliType type, bool with_flag) {
  if (generator < 0 || generator > 2) throw std::out_of_range("first-level generator index");
  const BlockIndex b(block);
  const uint64_t local = packed::kSteaneRows[static_cast<size_t>(generator)];

  ExtractionCircuit c;
  c.label = std::string("g") + type_char(type) + "_" + std::to_string(generator + 1) + "@block" +
            std::to_string(block + 1);
  c.type = type;
  c.generator = generator;
  c.block = block;
  c.target_generator = generator_op(type, local << b.first_qubit());
  for (int q = 0; q < kBlockSize; ++q) {
    if ((local >> q) & 1) c.cnot_order.push_back(b.first_qubit() + q);
  }
  const int last = static_cast<int>(c.cnot_order.size()) - 1;
  c.ops.push_back({Kind::PrepAncilla});
  if (with_flag) {
    c.flag_cnot_positions = std::make_pair(0, last);
    c.flag_bit = flag_index(block, generator);
    c.ancilla_count = 2;
    c.ops.push_back({Kind::PrepFlag});
  }
  for (int i = 0; i <= last; ++i) {
    if (with_flag && i == last) c.ops.push_back({Kind::FlagCnot});
    c.ops.push_back({Kind::DataCnot, c.cnot_order[static_cast<size_t>(i)]});
    if (with_flag && i == 0) c.ops.push_back({Kind::FlagCnot});
  }
  c.ops.push_back({Kind::MeasureAncilla});
  if (with_flag) c.ops.push_back({Kind::MeasureFlag});
  return c;
}

std::vector<LocalError> local_errors_at(const CircuitOp& op) {
  switch (op.kind) {
    case Kind::DataCnot:
    case Kind::FlagCnot:
      return {LocalError::Primary, LocalError::Ancilla, LocalError::Both};
    case Kind::PrepAncilla:
    case Kind::MeasureAncilla:
      return {LocalError::Ancilla};
    case Kind::PrepFlag:
    case Kind::MeasureFlag:
      return {LocalError::Primary};
  }
  return {};
}

PropagatedFault propagate(const ExtractionCircuit& c, int position, LocalError local) {
  if (position < 0 || position >= c.num_locations()) {
    throw std::out_of_range("fault position " + std::to_string(position) + " outside circuit " +
                            c.label);
  }
  const CircuitOp& at = c.ops[static_cast<size_t>(position)];
  const auto allowed = local_errors_at(at);
  if (std::find(allowed.begin(), allowed.end(), local) == allowed.end()) {
    throw std::invalid_argument("local error not supported at this location of " + c.label);
  }
  const bool on_primary = static_cast<uint8_t>(local) & static_cast<uint8_t>(LocalError::Primary);
  const bool on_ancilla = static_cast<uint8_t>(local) & static_cast<uint8_t>(LocalError::Ancilla);

  PropagatedFault out;
  switch (at.kind) {
    case Kind::MeasureAncilla:
      out.syndrome_flip = true;
      return out;
    case Kind::MeasureFlag:
    case Kind::PrepFlag:
      out.flag = true;
      return out;
    case Kind::DataCnot:
      if (on_primary) out.data_error ^= uint64_t{1} << at.qubit;
      break;
    case Kind::FlagCnot:
      if (on_primary) out.flag = !out.flag;
      break;
    case Kind::PrepAncilla:
      break;
  }
  if (on_ancilla) {
    for (size_t k = static_cast<size_t>(position) + 1; k < c.ops.size(); ++k) {
      const CircuitOp& op = c.ops[k];
      if (op.kind == Kind::DataCnot) {
        out.data_error ^= uint64_t{1} << op.qubit;
      } else if (op.kind == Kind::FlagCnot) {
        out.flag = !out.flag;
      }
    }
  }
  return out;
}

std::string dump_circuit(const ExtractionCircuit& c) {
  std::ostringstream out;
  out << "# " << c.label << " " << c.target_generator.str() << "\n";
  for (const CircuitOp& op : c.ops) {
    switch (op.kind) {
      case Kind::PrepAncilla: out << "prep ancilla\n"; break;
      case Kind::PrepFlag: out << "prep flag\n"; break;
      case Kind::DataCnot: out << "cnot " << (op.qubit + 1) << " ancilla\n"; break;
      case Kind::FlagCnot: out << "cnot flag ancilla\n"; break;
      case Kind::MeasureAncilla: out << "measure ancilla\n"; break;
      case Kind::MeasureFlag: out << "measure flag\n"; break;
    }
  }
  return out.str();
}

CircuitFamily CircuitFamily::build(Ordering ordering, bool flags) {
  CircuitFamily f;
  f.ordering = ordering;
  f.flags = flags;
  for (PauliType t : {PauliType::Z, PauliType::X}) {
    const int ti = static_cast<int>(t);
    for (int j = 0; j < 3; ++j) f.level2[ti][j] = build_level2_circuit(j, t, ordering);
    for (int j = 0; j < 21; ++j) f.level1[ti][j] = build_level1_circuit(j / 3, j % 3, t, flags);
  }
  return f;
}

const char* to_string(FaultType t) {
  switch (t) {
    case FaultType::W: return "W";
    case FaultType::G1: return "G1";
    case FaultType::G2: return "G2";
    case FaultType::F: return "F";
    case FaultType::S: return "S";
  }
  return "?";
}

std::string FaultSet::label() const {
  std::string s = std::string("F^") + to_string(type) + "_" + std::to_string(count);
  if (circuit >= 0) s += "," + std::to_string(circuit + 1);
  return s;
}

std::vector<Effect> single_gate_effects(const ExtractionCircuit& c) {
  std::vector<Effect> out;
  for (int pos = 0; pos < c.num_locations(); ++pos) {
    const CircuitOp& op = c.ops[static_cast<size_t>(pos)];
    if (op.kind == Kind::MeasureAncilla || op.kind == Kind::MeasureFlag) continue;
    for (LocalError le : local_errors_at(op)) {
      const PropagatedFault p = propagate(c, pos, le);
      Effect e{p.data_error, 0};
      if (p.flag) e.flags = uint32_t{1} << c.flag_bit;
      out.push_back(e);
    }
  }
  sort_unique(out);
  return out;
}

std::vector<Effect> sumset(const std::vector<Effect>& singles, int count) {
  std::vector<Effect> cur{Effect{}};
  for (int i = 0; i < count; ++i) {
    std::vector<Effect> next;
    next.reserve(cur.size() * singles.size());
    for (const Effect& a : cur) {
      for (const Effect& s : singles) next.push_back({a.error ^ s.error, a.flags ^ s.flags});
    }
    sort_unique(next);
    cur = std::move(next);
  }
  return cur;
}

FaultSets enumerate_fault_sets(const CircuitFamily& circuits, int max_faults) {
  if (max_faults < 0 || max_faults > 3) throw std::invalid_argument("max_faults must be 0..3");
  FaultSets fs;
  fs.max_faults = max_faults;
  auto chain = [max_faults](FaultType type, int circuit, const std::vector<Effect>& singles) {
    std::vector<FaultSet> sets;
    for (int i = 0; i <= max_faults; ++i) sets.push_back({type, circuit, i, sumset(singles, i)});
    return sets;
  };
  for (int j = 0; j < 21; ++j) {
    fs.g1.push_back(chain(FaultType::G1, j, single_gate_effects(circuits.l1(PauliType::Z, j))));
  }
  for (int j = 0; j < 3; ++j) {
    fs.g2.push_back(chain(FaultType::G2, j, single_gate_effects(circuits.l2(PauliType::Z, j))));
  }
  std::vector<Effect> w1;
  for (int q = 0; q < kConcatQubits; ++q) w1.push_back({uint64_t{1} << q, 0});
  fs.w = chain(FaultType::W, -1, w1);
  std::vector<Effect> f1;
  if (circuits.flags) {
    for (int b = 0; b < 21; ++b) f1.push_back({0, uint32_t{1} << b});
  }
  // Flagless circuits leave only the empty F combination.
  fs.f = chain(FaultType::F, -1, f1);
  return fs;
}

}  // namespace wpec
