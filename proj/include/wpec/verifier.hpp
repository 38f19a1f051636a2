#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "wpec/bits.hpp"
#include "wpec/circuit.hpp"
#include "wpec/enumeration.hpp"

namespace wpec {

/// Everything a fault combination index refers back to.
struct EnumerationContext {
  CircuitFamily circuits;
  FaultSets sets;
  EnumerationMode mode = EnumerationMode::LookupTable;
  std::vector<FaultSetCombination> combos;

  static std::shared_ptr<const EnumerationContext> make(Ordering ordering, bool flags,
                                                        int max_faults, EnumerationMode mode);
};

/// Identifies one fault combination: a fault set combination and the chosen
/// effect index within each of its sets. Ordering picks the witness kept for
/// a record, so it is independent of how work was split across threads.
struct Witness {
  uint32_t combo = 0;
  std::array<uint32_t, 3> pick{};
  auto operator<=>(const Witness&) const = default;
};

Effect witness_effect(const EnumerationContext& ctx, const Witness& w);
std::string describe_witness(const EnumerationContext& ctx, const Witness& w);

// Record key layout: s_x bits 0-20, s~_x bits 21-23, f_x bits 24-44, p_x bits 45-51.
// tau_x is a function of s_x and is not stored.
namespace record_key {
inline constexpr int kSyndrome2Shift = 21;
inline constexpr int kFlagShift = 24;
inline constexpr int kParityShift = 45;

uint64_t pack(uint64_t error49, uint32_t flags);
inline uint32_t s_x(uint64_t k) { return static_cast<uint32_t>(k & low_mask(21)); }
inline uint8_t s2(uint64_t k) { return static_cast<uint8_t>((k >> kSyndrome2Shift) & 7); }
inline uint32_t flags(uint64_t k) { return static_cast<uint32_t>((k >> kFlagShift) & low_mask(21)); }
inline uint8_t parity(uint64_t k) { return static_cast<uint8_t>((k >> kParityShift) & 0x7f); }
}  // namespace record_key

struct RecordEntry {
  uint64_t key = 0;
  Witness witness;
};

/// Sorted by key, one entry per key, smallest witness.
using RecordList = std::vector<RecordEntry>;

/// OpenMP enumeration over fault set combinations with per-thread buffers.
RecordList collect_records(const EnumerationContext& ctx, int workers);
/// Single-threaded reference that recomputes every field through the
/// StabilizerCode API instead of the packed tables.
RecordList collect_records_reference(const EnumerationContext& ctx);

enum class ConditionTag { Condition1, Condition2, Violation };
const char* to_string(ConditionTag t);

struct TableRecord {
  Syndrome s_x{0, 21};
  uint8_t s2 = 0;
  BlockTriviality tau;
  FlagVector flags;
  BlockParity parity;
  ConditionTag tag = ConditionTag::Condition1;
  Witness witness;

  std::string line() const;
};

struct Partition {
  uint8_t s2 = 0;
  BlockTriviality tau;
  ConditionTag tag = ConditionTag::Condition1;
  std::vector<uint32_t> members;  // indices into LookupTable::records()
  BlockParity canonical;          // Condition1 only
};

struct Claim2Violation {
  uint32_t first = 0;  // record indices, inequivalent parities, same (s~, tau, s_x, f)
  uint32_t second = 0;
};

class LookupTable {
 public:
  static LookupTable build(std::shared_ptr<const EnumerationContext> ctx, int workers);
  static LookupTable from_records(std::shared_ptr<const EnumerationContext> ctx, RecordList list);

  const std::vector<TableRecord>& records() const { return records_; }
  const std::vector<Partition>& partitions() const { return partitions_; }
  const std::vector<Claim2Violation>& violations() const { return violations_; }
  const EnumerationContext& context() const { return *ctx_; }

  const Partition* find(uint8_t s2, BlockTriviality tau) const;

  /// Canonical block parity for an outcome, or nullopt when the key is missing
  /// or a Condition2 partition has no record with this (s_x, f_x).
  std::optional<BlockParity> lookup_parity(Syndrome s_x, uint8_t s2, FlagVector f) const;

  /// Canonically sorted table file (header plus one record per line).
  void write(std::ostream& out) const;
  void write_json_lines(std::ostream& out) const;

 private:
  std::shared_ptr<const EnumerationContext> ctx_;
  std::vector<TableRecord> records_;
  std::vector<Partition> partitions_;
  std::unordered_map<uint32_t, uint32_t> partition_index_;  // (s2 << 7 | tau) -> partition
  std::unordered_map<uint64_t, uint8_t> condition2_parity_;  // (s2, s_x, f) -> canonical p
  std::vector<Claim2Violation> violations_;
};

inline constexpr const char* kLookupTableHeader = "# wpec-lookup-table v1";

struct Claim2Report {
  size_t records = 0;
  size_t partitions = 0;
  size_t condition1 = 0;
  size_t condition2 = 0;
  size_t violating_partitions = 0;
  std::vector<std::pair<FaultNumberCombination, uint64_t>> combinations;  // fault combinations enumerated
  std::vector<std::string> witnesses;  // one entry per violating (s~, tau, s_x, f) group

  bool ok() const { return violating_partitions == 0; }
  std::string str() const;
};

Claim2Report verify_claim2(const LookupTable& table);

// ---------------------------------------------------------------------------
// Single-fault table for the normal-ordered g~^z_1 circuit.

struct Table1Row {
  std::string form;     // e.g. "PIZZZII", or "IIIIIII" for the fault-free row
  std::string m_class;  // "7", "2,4,6", "1,3,5" or "-"
  uint8_t s2 = 0;
  BlockTriviality tau;
  BlockParity parity;

  std::string line() const;
  bool operator==(const Table1Row&) const = default;
};

/// Propagates every ancilla fault of the normal-ordered g~^z_1 circuit and
/// groups the resulting data errors by form. Throws std::logic_error if two
/// errors of the same form and class disagree.
std::vector<Table1Row> reproduce_table1();
const std::vector<Table1Row>& table1_reference();

// ---------------------------------------------------------------------------
// Relaxed-condition marking for faults in the final rounds.

/// Sum of the 7 - v_W smallest per-block Hamming weights of s_x(e_a).
int sigma(uint64_t e_a, int v_w);

struct RelaxedCandidate {
  FaultNumberCombination counts;
  uint64_t e_a = 0;     // early G1 and G2 faults
  uint64_t e_total = 0;  // e_a times the late G1 faults
  uint32_t flags = 0;
  auto operator<=>(const RelaxedCandidate&) const = default;
};

bool relaxed_mark(const RelaxedCandidate& c, int max_faults);

struct MarkedCombination {
  RelaxedCandidate candidate;
  Witness witness;
  /// Largest output weight (modulo stabilizers) over W placements that keep
  /// the final s_x within reach of the S faults.
  int worst_output_weight = 0;
  bool harmful = false;
};

struct AppendixBReport {
  int max_faults = 3;
  uint64_t combinations = 0;
  std::vector<MarkedCombination> marked;

  size_t harmful() const;
  bool ok() const { return harmful() == 0; }
  std::string str(const EnumerationContext& ctx) const;
};

/// Worst output weight for one marked candidate, splitting its W faults into
/// those before the final X-generator block and those after.
int post_analyze(const RelaxedCandidate& c);

/// Enumerates a Relaxed-mode context up to its max_faults.
AppendixBReport run_appendix_b(const EnumerationContext& ctx, int workers);

}  // namespace wpec
