#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "wpec/bits.hpp"
#include "wpec/circuit.hpp"
#include "wpec/decoder.hpp"
#include "wpec/pauli.hpp"
#include "wpec/verifier.hpp"

namespace wpec {

/// Syndromes, block trivialities and cumulative flags from one full round.
/// The _x fields come from the X-generator circuits and see Z errors; f_x
/// collects flags raised in the first-level Z-generator circuits.
struct OutcomeBundle {
  Syndrome s_x{0, 21};
  Syndrome s_z{0, 21};
  uint8_t s2_x = 0;
  uint8_t s2_z = 0;
  BlockTriviality tau_x;
  BlockTriviality tau_z;
  FlagVector f_x;
  FlagVector f_z;

  bool operator==(const OutcomeBundle&) const = default;

  /// Five labeled lines: s (42 bits), s_tilde (6), tau (14), f (42), each _x then _z.
  std::string str() const;
  /// Throws std::runtime_error on a malformed bundle.
  static OutcomeBundle parse(std::istream& in);
};

/// Measurement blocks of a round, in execution order.
enum class Stage : uint8_t { Level2Z, Level2X, Level1Z, Level1X };

const char* to_string(Stage s);

struct Fault {
  enum class Kind : uint8_t { Wait, Gate, Flag, Syndrome };
  Kind kind = Kind::Wait;
  int round = 1;                 // 1-based
  Stage stage = Stage::Level2Z;  // circuit's block; for Wait, the block it precedes
  int circuit = 0;               // index within the stage
  int position = 0;              // Gate: op index in the circuit
  LocalError local = LocalError::Both;
  int qubit = 0;    // Wait: 0-based data qubit
  char pauli = 'Z';  // Wait: X, Y or Z

  std::string str() const;
  bool operator==(const Fault&) const = default;
};

/// A replayable trial: an input error and the faults injected per round.
struct Schedule {
  uint64_t input_x = 0;
  uint64_t input_z = 0;
  std::vector<Fault> faults;

  int input_weight() const { return popcount(input_x | input_z); }
  std::string str() const;
  /// Throws std::runtime_error on malformed text.
  static Schedule parse(std::istream& in);
};

inline constexpr const char* kScheduleHeader = "# wpec-schedule v1";

struct ProtocolState {
  const CircuitFamily* circuits = nullptr;
  Schedule schedule;
  PauliOp data_error = PauliOp::identity(kConcatQubits);
  FlagVector f_x;
  FlagVector f_z;
  std::vector<OutcomeBundle> round_log;
  int faults_applied = 0;

  ProtocolState(const CircuitFamily& family, Schedule s);
};

/// Simulates the next round: measure g~^z, g~^x, g^z, g^x in that order,
/// applying this round's scheduled faults.
OutcomeBundle run_round(ProtocolState& state);

inline constexpr int kMaxRounds = 16;

struct StableOutcome {
  OutcomeBundle bundle;
  int rounds = 0;
};

/// Runs rounds until the last four bundles agree. Throws std::logic_error if
/// that takes more than kMaxRounds rounds.
StableOutcome run_until_stable(ProtocolState& state);

struct Decoded {
  PauliOp correction = PauliOp::identity(kConcatQubits);
  bool fallback_z = false;  // Z-side key missing or unmatched
  bool fallback_x = false;
};

/// WPEC decoding of a stable bundle, Z side from (s_x, s~_x, tau_x, f_x) and X
/// side mirrored with the same table.
Decoded decode_bundle(const OutcomeBundle& b, const LookupTable& table, const CorrectionTable& steane);
Decoded decode_bundle(const OutcomeBundle& b, const LookupTable& table);

/// True when ideal decoding maps the residual to the identity rather than a
/// logical, with the X and Z components decoded separately.
bool ideal_decoding_is_identity(const PauliOp& residual);
/// Weight of the residual after multiplying by the best stabilizer and
/// logical on each component.
int distance_to_codespace(const PauliOp& residual);

struct TrialResult {
  Schedule schedule;
  int input_weight = 0;
  int faults = 0;  // faults that actually happened before the protocol stopped
  int rounds = 0;
  bool fallback = false;
  int residual_weight = 0;
  bool condition1_checked = false;
  bool condition1 = true;
  bool condition2_checked = false;
  bool condition2 = true;

  bool ok() const { return condition1 && condition2; }
  std::string str() const;
};

TrialResult run_trial(const Schedule& schedule, const CircuitFamily& circuits, const LookupTable& table,
                      int t);

struct FtecReport {
  uint64_t trials = 0;
  uint64_t condition1_checked = 0;
  uint64_t condition1_failures = 0;
  uint64_t condition2_checked = 0;
  uint64_t condition2_failures = 0;
  uint64_t fallbacks = 0;
  int max_rounds = 0;
  std::vector<TrialResult> failures;

  bool ok() const { return condition1_failures == 0 && condition2_failures == 0; }
  std::string str() const;
};

/// Trials run concurrently; the report does not depend on worker count.
FtecReport check_ftec_conditions(const std::vector<Schedule>& trials, const CircuitFamily& circuits,
                                 const LookupTable& table, int t, int workers);

/// Draws random schedules: an input Z/X/Y error of the given weight and
/// `faults` faults spread over rounds 1..max_round.
class ScheduleSampler {
 public:
  ScheduleSampler(const CircuitFamily& circuits, uint64_t seed) : circuits_(&circuits), rng_(seed) {}
  Schedule draw(int input_weight, int faults, int max_round);
  Fault draw_fault(int max_round);

 private:
  const CircuitFamily* circuits_;
  std::mt19937_64 rng_;
  int uniform(int lo, int hi);
};

}  // namespace wpec
