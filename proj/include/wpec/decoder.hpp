#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "wpec/bits.hpp"
#include "wpec/codes.hpp"
#include "wpec/pauli.hpp"

namespace wpec {

enum class LogicalClass { LogicalI, LogicalZ };

/// Classifies a Z-type 7-qubit operator in the centralizer of the Steane X
/// generators by its weight parity. Throws if the s_x syndrome is nontrivial.
LogicalClass classify_logical(const PauliOp& m);

/// True iff two equal-syndrome Z-type Steane errors differ by a stabilizer.
/// Throws if the syndromes differ.
bool equivalent_steane(const PauliOp& e1, const PauliOp& e2);

/// Corrections keyed by syndrome word.
///
/// wt1/wt2 are indexed by the 3-bit Steane s_x (entry 0 unused, identity);
/// golay_min is indexed by the 11-bit Golay s_x.
struct CorrectionTable {
  std::array<PauliOp, 8> wt1;
  std::array<PauliOp, 8> wt2;
  std::vector<PauliOp> golay_min;
};

/// Throws std::logic_error if two errors of equal weight share a syndrome.
CorrectionTable build_correction_table();

/// Logical-Z representative applied when s_x is trivial and the parity is odd.
inline const PauliOp kSteaneLogicalZRep = PauliOp::parse("ZZIZIII");

PauliOp wpec_steane(const Syndrome& s_x, WeightParity w, const CorrectionTable& table);
PauliOp wpec_golay(const Syndrome& s_x, WeightParity w, const CorrectionTable& table);

/// Parities are equivalent iff they differ by the block pattern of a
/// second-level Z stabilizer.
bool block_parity_equivalent(BlockParity p1, BlockParity p2);

/// The lowest-weight member of p's equivalence class (ties: smallest word).
BlockParity canonical_block_parity(BlockParity p);

/// Versioned text serialization: one line per syndrome.
void write_correction_table(std::ostream& out, const CorrectionTable& table,
                            const std::string& code_name);
CorrectionTable read_correction_table(std::istream& in);

inline constexpr const char* kCorrectionTableHeader = "# wpec-correction-table v1";

/// Outcome of one exhaustive (or sampled) check.
struct ClaimCheck {
  std::string name;
  uint64_t cases = 0;
  uint64_t failures = 0;
  std::string witness;  // first failure, if any

  bool ok() const { return failures == 0; }
};

std::string format_checks(const std::vector<ClaimCheck>& checks);

/// Centralizer split, the equal-syndrome equivalence criterion and WPEC
/// soundness over all 128 Z-type 7-qubit operators.
std::vector<ClaimCheck> verify_steane_claims(const CorrectionTable& table);

/// Stabilizer/logical weight parities and WPEC soundness over all 2^23 errors.
std::vector<ClaimCheck> verify_golay_claims(const CorrectionTable& table, int workers);

/// Blockwise WPEC with the true block parities on pseudo-random 49-qubit errors.
std::vector<ClaimCheck> verify_concat_claims(const CorrectionTable& table, uint64_t samples,
                                             uint64_t seed);

struct GolaySweep {
  uint64_t checked = 0;
  uint64_t failures = 0;
  uint32_t first_failure = 0;
  bool operator==(const GolaySweep&) const = default;
};

/// e * wpec_golay(s(e), parity(e)) must be a Z stabilizer for every e.
/// OpenMP over error words against the packed syndrome table.
GolaySweep golay_wpec_sweep(const CorrectionTable& table, int workers);
/// The same through PauliOp and the StabilizerCode API, single-threaded.
/// `limit` caps the number of error words (all 2^23 by default).
GolaySweep golay_wpec_sweep_reference(const CorrectionTable& table, uint64_t limit = uint64_t{1} << 23);

/// Z-type correction for a 49-qubit block-wise WPEC: per block, the Steane
/// WPEC correction for that block's syndrome and parity bit.
uint64_t blockwise_wpec(uint32_t first_level, uint8_t parity7, const CorrectionTable& table);

}  // namespace wpec
