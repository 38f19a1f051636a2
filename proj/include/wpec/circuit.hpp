#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wpec/bits.hpp"
#include "wpec/pauli.hpp"

namespace wpec {

/// Which generator family a circuit measures. Faults in a Z-generator circuit
/// spread Z errors onto the data (and raise f_x flags); the X family is the
/// CSS dual with X errors and f_z flags.
enum class PauliType : uint8_t { Z, X };

enum class Ordering : uint8_t { Permuted, Normal };

struct CircuitOp {
  enum class Kind : uint8_t { PrepAncilla, PrepFlag, DataCnot, FlagCnot, MeasureAncilla, MeasureFlag };
  Kind kind;
  int qubit = -1;  // data qubit for DataCnot
};

/// Non-ancilla line of a two-qubit gate is the data (or flag) qubit.
enum class LocalError : uint8_t { Primary = 1, Ancilla = 2, Both = 3 };

struct ExtractionCircuit {
  std::string label;
  PauliType type = PauliType::Z;
  bool second_level = false;
  int generator = 0;  // 0..2 within its family
  int block = -1;     // 0..6 for first-level circuits
  PauliOp target_generator;
  std::vector<int> cnot_order;  // 0-based data qubits
  /// Flag CNOTs sit after data CNOT `first` and before data CNOT `second`.
  std::optional<std::pair<int, int>> flag_cnot_positions;
  int flag_bit = -1;  // index into the 21-bit flag vector
  int ancilla_count = 1;
  std::vector<CircuitOp> ops;

  int num_locations() const { return static_cast<int>(ops.size()); }
};

/// The first-level flag-vector index of generator g (0..2) on block b (0..6).
inline int flag_index(int block, int generator) { return 3 * block + generator; }

ExtractionCircuit build_level2_circuit(int generator, PauliType type, Ordering ordering);
ExtractionCircuit build_level1_circuit(int block, int generator, PauliType type, bool with_flag);

struct PropagatedFault {
  uint64_t data_error = 0;  // support on 49 qubits, of the circuit's Pauli type
  bool flag = false;
  bool syndrome_flip = false;
  auto operator<=>(const PropagatedFault&) const = default;
};

/// Pushes a fault injected right after ops[position] through the rest of the
/// circuit. An ancilla error copies onto every later data CNOT's qubit and
/// toggles the flag at every later flag CNOT. Throws std::out_of_range for a
/// bad position and std::invalid_argument for an error the op cannot carry.
PropagatedFault propagate(const ExtractionCircuit& c, int position, LocalError local);

/// Local errors meaningful at an op: three for two-qubit gates, one otherwise.
std::vector<LocalError> local_errors_at(const CircuitOp& op);

/// One row of the ordered CNOT dump, "cnot <data> <ancilla>" / "flag-cnot".
std::string dump_circuit(const ExtractionCircuit& c);

/// All 48 measurement circuits of one full round.
struct CircuitFamily {
  Ordering ordering = Ordering::Permuted;
  bool flags = true;
  std::array<std::array<ExtractionCircuit, 3>, 2> level2;   // [type][generator]
  std::array<std::array<ExtractionCircuit, 21>, 2> level1;  // [type][3*block+generator]

  static CircuitFamily build(Ordering ordering, bool flags);
  const ExtractionCircuit& l2(PauliType t, int j) const { return level2[static_cast<int>(t)][j]; }
  const ExtractionCircuit& l1(PauliType t, int j) const { return level1[static_cast<int>(t)][j]; }
};

// ---------------------------------------------------------------------------
// Fault sets for the exhaustive enumeration (Z-type analysis).

enum class FaultType : uint8_t { W, G1, G2, F, S };

const char* to_string(FaultType t);

/// Net effect of one or more faults: data error support and flag vector.
struct Effect {
  uint64_t error = 0;
  uint32_t flags = 0;
  auto operator<=>(const Effect&) const = default;
};

/// All distinct effects of exactly `count` faults of one type (for G1/G2, in
/// one circuit). Faults may repeat a location since rounds repeat.
struct FaultSet {
  FaultType type = FaultType::W;
  int circuit = -1;  // j for G1 (0..20) or G2 (0..2)
  int count = 0;
  std::vector<Effect> effects;  // sorted, unique

  std::string label() const;
};

/// Distinct single-fault effects of a Z-generator circuit, excluding the
/// ancilla measurement (a syndrome fault) and the flag measurement (an F
/// fault).
std::vector<Effect> single_gate_effects(const ExtractionCircuit& c);

/// fault sets[type][circuit][count] for count in 0..max_faults.
struct FaultSets {
  int max_faults = 3;
  std::vector<std::vector<FaultSet>> g1;  // [21][count]
  std::vector<std::vector<FaultSet>> g2;  // [3][count]
  std::vector<FaultSet> w;                // [count]
  std::vector<FaultSet> f;                // [count]; only the empty effect if flagless
};

FaultSets enumerate_fault_sets(const CircuitFamily& circuits, int max_faults);

/// Closure of `singles` under `count`-fold XOR (multisets), sorted and unique.
std::vector<Effect> sumset(const std::vector<Effect>& singles, int count);

}  // namespace wpec
