#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wpec/bits.hpp"
#include "wpec/pauli.hpp"

namespace wpec {

struct BlockStructure {
  int inner_n = 7;
  int outer_n = 7;
};

/// A CSS stabilizer code given by explicit generator lists.
///
/// For the concatenated code the generator order is: 21 first-level
/// generators (entry j covers generator (j mod 3)+1 of the cyclic Steane code
/// on subblock j/3, 0-based), then the 3 second-level generators.
struct StabilizerCode {
  std::string name;
  int n = 0;
  int k = 0;
  int d = 0;
  std::vector<PauliOp> x_gens;
  std::vector<PauliOp> z_gens;
  PauliOp logical_x;
  PauliOp logical_z;
  std::optional<BlockStructure> blocks;

  int num_generators() const { return static_cast<int>(x_gens.size() + z_gens.size()); }
};

StabilizerCode steane_code();
StabilizerCode concatenated_49();
/// Throws std::logic_error if the rows generated from the check polynomial do
/// not reproduce the reference cyclic parity-check matrix.
StabilizerCode golay_code();

/// Syndrome against one generator family: a Z-type error is tested against
/// the X generators (s_x), an X-type error against the Z generators (s_z).
/// Mixed operators are rejected.
Syndrome syndrome(const StabilizerCode& code, const PauliOp& e);

struct LevelSyndromes {
  Syndrome first_level;   // 21 bits
  Syndrome second_level;  // 3 bits
  auto operator<=>(const LevelSyndromes&) const = default;
};

LevelSyndromes concat_syndrome(const StabilizerCode& code49, const PauliOp& e);

BlockTriviality block_triviality(const StabilizerCode& code49, const PauliOp& e);

/// e times the lowest-weight same-type stabilizer of the 49-qubit code.
PauliOp min_weight_coset_rep(const StabilizerCode& code49, const PauliOp& e);

/// Text table of generator strings, one "label: PAULI" line each.
std::string describe(const StabilizerCode& code);

// ---------------------------------------------------------------------------
// Packed kernels over 7- and 49-bit supports. These do the work for the
// exhaustive enumerations; the StabilizerCode API above is the reference path.

namespace packed {

/// Support words of the cyclic Steane generators g_1, g_2, g_3.
inline constexpr std::array<uint8_t, 3> kSteaneRows = {0b0011101, 0b0111010, 0b1110100};

/// Second-level patterns over the 7 subblocks (same cyclic form).
inline constexpr std::array<uint8_t, 3> kOuterRows = kSteaneRows;

/// Reference 11x23 cyclic Golay parity-check matrix, row-major strings.
extern const std::array<const char*, 11> kGolayCheckRows;

/// Golay check polynomial coefficients, lowest degree first.
inline constexpr std::array<int, 8> kGolayCheckPolyDegrees = {0, 1, 2, 3, 4, 7, 10, 12};

uint8_t steane_syndrome(uint8_t block_support);

/// Lowest weight over the 8 cosets members support ^ S, S a Steane stabilizer.
int steane_min_weight(uint8_t block_support);

/// 21-bit first-level syndrome of a Z support on 49 qubits (3 bits per block).
uint32_t first_level_syndrome(uint64_t support49);

/// Per-block weight parities.
uint8_t block_parity(uint64_t support49);

/// 3-bit second-level syndrome from a block parity word.
uint8_t second_level_from_parity(uint8_t parity7);

uint8_t triviality_from_syndrome(uint32_t first_level);

/// Z^{x7} on every block of `pattern`.
uint64_t expand_block_pattern(uint8_t pattern);

/// Elements of the span of kOuterRows (8 patterns, index = subset mask).
const std::array<uint8_t, 8>& outer_span();

/// Minimal weight of support49 * S over all same-type stabilizers S.
int min_coset_weight(uint64_t support49);
/// The same, also allowing multiplication by the logical operator.
int min_distance_to_codeword(uint64_t support49);
uint64_t min_coset_rep(uint64_t support49);

const std::array<uint32_t, 11>& golay_rows();
/// 11-bit syndrome of a Z support on 23 qubits.
uint32_t golay_syndrome(uint32_t support23);

}  // namespace packed

}  // namespace wpec
