#include "wpec/codes.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace wpec {

namespace packed {

const std::array<const char*, 11> kGolayCheckRows = {
    "11111001001010000000000", "01111100100101000000000", "00111110010010100000000",
    "00011111001001010000000", "00001111100100101000000", "00000111110010010100000",
    "00000011111001001010000", "00000001111100100101000", "00000000111110010010100",
    "00000000011111001001010", "00000000001111100100101",
};

namespace {

struct SteaneTables {
  std::array<uint8_t, 128> syndrome{};
  std::array<uint8_t, 128> min_weight{};
  std::array<uint8_t, 128> min_rep{};
  std::array<uint8_t, 8> stabilizers{};
};

const SteaneTables& steane_tables() {
  static const SteaneTables t = [] {
    SteaneTables s;
    for (int mask = 0; mask < 8; ++mask) {
      uint8_t g = 0;
      for (int i = 0; i < 3; ++i) {
        if ((mask >> i) & 1) g ^= kSteaneRows[static_cast<size_t>(i)];
      }
      s.stabilizers[static_cast<size_t>(mask)] = g;
    }
    for (int e = 0; e < 128; ++e) {
      uint8_t syn = 0;
      for (int i = 0; i < 3; ++i) {
        if (parity(static_cast<uint64_t>(e & kSteaneRows[static_cast<size_t>(i)]))) {
          syn |= static_cast<uint8_t>(1u << i);
        }
      }
      s.syndrome[static_cast<size_t>(e)] = syn;
      int best = 8;
      uint8_t rep = 0;
      for (uint8_t g : s.stabilizers) {
        const auto cand = static_cast<uint8_t>(e ^ g);
        if (popcount(cand) < best) {
          best = popcount(cand);
          rep = cand;
        }
      }
      s.min_weight[static_cast<size_t>(e)] = static_cast<uint8_t>(best);
      s.min_rep[static_cast<size_t>(e)] = rep;
    }
    return s;
  }();
  return t;
}

}  // namespace

uint8_t steane_syndrome(uint8_t block_support) {
  return steane_tables().syndrome[block_support & 0x7f];
}

int steane_min_weight(uint8_t block_support) {
  return steane_tables().min_weight[block_support & 0x7f];
}

uint32_t first_level_syndrome(uint64_t support49) {
  const auto& t = steane_tables();
  uint32_t s = 0;
  for (int b = 0; b < kNumBlocks; ++b) {
    s |= static_cast<uint32_t>(t.syndrome[block_bits(support49, b)]) << (3 * b);
  }
  return s;
}

uint8_t block_parity(uint64_t support49) {
  uint8_t p = 0;
  for (int b = 0; b < kNumBlocks; ++b) {
    p |= static_cast<uint8_t>(parity(block_bits(support49, b)) << b);
  }
  return p;
}

uint8_t second_level_from_parity(uint8_t parity7) {
  uint8_t s = 0;
  for (int i = 0; i < 3; ++i) {
    if (parity(static_cast<uint64_t>(parity7 & kOuterRows[static_cast<size_t>(i)]))) {
      s |= static_cast<uint8_t>(1u << i);
    }
  }
  return s;
}

uint8_t triviality_from_syndrome(uint32_t first_level) {
  uint8_t t = 0;
  for (int b = 0; b < kNumBlocks; ++b) {
    if ((first_level >> (3 * b)) & 7u) t |= static_cast<uint8_t>(1u << b);
  }
  return t;
}

uint64_t expand_block_pattern(uint8_t pattern) {
  uint64_t w = 0;
  for (int b = 0; b < kNumBlocks; ++b) {
    if ((pattern >> b) & 1) w |= low_mask(kBlockSize) << (kBlockSize * b);
  }
  return w;
}

const std::array<uint8_t, 8>& outer_span() { return steane_tables().stabilizers; }

namespace {

// For a fixed second-level choice the group factors blockwise, so each block
// is minimized independently over its 8 first-level stabilizers.
int blockwise_min_weight(uint64_t support49) {
  const auto& t = steane_tables();
  int w = 0;
  for (int b = 0; b < kNumBlocks; ++b) w += t.min_weight[block_bits(support49, b)];
  return w;
}

}  // namespace

int min_coset_weight(uint64_t support49) {
  int best = kConcatQubits + 1;
  for (uint8_t pattern : outer_span()) {
    best = std::min(best, blockwise_min_weight(support49 ^ expand_block_pattern(pattern)));
  }
  return best;
}

int min_distance_to_codeword(uint64_t support49) {
  const uint64_t all = low_mask(kConcatQubits);
  return std::min(min_coset_weight(support49), min_coset_weight(support49 ^ all));
}

uint64_t min_coset_rep(uint64_t support49) {
  const auto& t = steane_tables();
  int best = kConcatQubits + 1;
  uint64_t best_rep = support49;
  for (uint8_t pattern : outer_span()) {
    const uint64_t shifted = support49 ^ expand_block_pattern(pattern);
    uint64_t rep = 0;
    for (int b = 0; b < kNumBlocks; ++b) {
      rep |= static_cast<uint64_t>(t.min_rep[block_bits(shifted, b)]) << (kBlockSize * b);
    }
    if (popcount(rep) < best) {
      best = popcount(rep);
      best_rep = rep;
    }
  }
  return best_rep;
}

const std::array<uint32_t, 11>& golay_rows() {
  static const std::array<uint32_t, 11> rows = [] {
    std::array<uint32_t, 11> r{};
    for (size_t i = 0; i < r.size(); ++i) {
      r[i] = static_cast<uint32_t>(bits_from_string(kGolayCheckRows[i], 23));
    }
    return r;
  }();
  return rows;
}

uint32_t golay_syndrome(uint32_t support23) {
  uint32_t s = 0;
  const auto& rows = golay_rows();
  for (size_t i = 0; i < rows.size(); ++i) {
    s |= static_cast<uint32_t>(parity(support23 & rows[i])) << i;
  }
  return s;
}

}  // namespace packed

namespace {

PauliOp steane_row(int i, bool x_type) {
  const uint64_t s = packed::kSteaneRows[static_cast<size_t>(i)];
  return x_type ? PauliOp::x_type(7, s) : PauliOp::z_type(7, s);
}

uint64_t golay_row_from_polynomial(int shift) {
  uint64_t row = 0;
  for (int deg : packed::kGolayCheckPolyDegrees) row |= uint64_t{1} << (deg + shift);
  return row;
}

}  // namespace

StabilizerCode steane_code() {
  StabilizerCode c;
  c.name = "steane";
  c.n = 7;
  c.k = 1;
  c.d = 3;
  for (int i = 0; i < 3; ++i) {
    c.x_gens.push_back(steane_row(i, true));
    c.z_gens.push_back(steane_row(i, false));
  }
  c.logical_x = PauliOp::x_type(7, low_mask(7));
  c.logical_z = PauliOp::z_type(7, low_mask(7));
  return c;
}

StabilizerCode concatenated_49() {
  StabilizerCode c;
  c.name = "concat49";
  c.n = kConcatQubits;
  c.k = 1;
  c.d = 9;
  c.blocks = BlockStructure{};
  for (int b = 0; b < kNumBlocks; ++b) {
    for (int i = 0; i < 3; ++i) {
      c.x_gens.push_back(embed_in_block(steane_row(i, true), BlockIndex(b)));
      c.z_gens.push_back(embed_in_block(steane_row(i, false), BlockIndex(b)));
    }
  }
  for (int i = 0; i < 3; ++i) {
    const uint64_t s = packed::expand_block_pattern(packed::kOuterRows[static_cast<size_t>(i)]);
    c.x_gens.push_back(PauliOp::x_type(kConcatQubits, s));
    c.z_gens.push_back(PauliOp::z_type(kConcatQubits, s));
  }
  c.logical_x = PauliOp::x_type(kConcatQubits, low_mask(kConcatQubits));
  c.logical_z = PauliOp::z_type(kConcatQubits, low_mask(kConcatQubits));
  return c;
}

StabilizerCode golay_code() {
  StabilizerCode c;
  c.name = "golay";
  c.n = 23;
  c.k = 1;
  c.d = 7;
  for (int i = 0; i < 11; ++i) {
    const uint64_t row = golay_row_from_polynomial(i);
    const uint64_t expected = bits_from_string(packed::kGolayCheckRows[static_cast<size_t>(i)], 23);
    if (row != expected) {
      throw std::logic_error("Golay row " + std::to_string(i + 1) +
                             " from check polynomial does not match the reference matrix: " +
                             bits_to_string(row, 23) + " vs " + bits_to_string(expected, 23));
    }
    c.x_gens.push_back(PauliOp::x_type(23, row));
    c.z_gens.push_back(PauliOp::z_type(23, row));
  }
  c.logical_x = PauliOp::x_type(23, low_mask(23));
  c.logical_z = PauliOp::z_type(23, low_mask(23));
  return c;
}

Syndrome syndrome(const StabilizerCode& code, const PauliOp& e) {
  if (e.num_qubits() != code.n) {
    throw std::invalid_argument("error length does not match code length");
  }
  if (!e.is_z_type() && !e.is_x_type()) {
    throw std::invalid_argument("syndrome expects a Z-type or X-type operator");
  }
  const auto& gens = e.is_z_type() ? code.x_gens : code.z_gens;
  Syndrome s{0, static_cast<int>(gens.size())};
  for (size_t i = 0; i < gens.size(); ++i) {
    if (!commutes(gens[i], e)) s.word |= uint64_t{1} << i;
  }
  return s;
}

LevelSyndromes concat_syndrome(const StabilizerCode& code49, const PauliOp& e) {
  if (!code49.blocks) throw std::invalid_argument("concat_syndrome needs the concatenated code");
  const Syndrome full = syndrome(code49, e);
  return {Syndrome{full.word & low_mask(21), 21}, Syndrome{full.word >> 21, 3}};
}

BlockTriviality block_triviality(const StabilizerCode& code49, const PauliOp& e) {
  const LevelSyndromes s = concat_syndrome(code49, e);
  return BlockTriviality(packed::triviality_from_syndrome(static_cast<uint32_t>(s.first_level.word)));
}

PauliOp min_weight_coset_rep(const StabilizerCode& code49, const PauliOp& e) {
  if (!code49.blocks || e.num_qubits() != kConcatQubits) {
    throw std::invalid_argument("min_weight_coset_rep needs a 49-qubit operator");
  }
  if (e.is_z_type()) return PauliOp::z_type(kConcatQubits, packed::min_coset_rep(e.z_bits()));
  if (e.is_x_type()) return PauliOp::x_type(kConcatQubits, packed::min_coset_rep(e.x_bits()));
  throw std::invalid_argument("min_weight_coset_rep expects a Z-type or X-type operator");
}

std::string describe(const StabilizerCode& code) {
  std::ostringstream out;
  out << "# " << code.name << " [[" << code.n << "," << code.k << "," << code.d << "]]\n";
  const bool concat = code.blocks.has_value();
  auto label = [&](char type, size_t i) {
    std::ostringstream l;
    if (concat && i >= 21) {
      l << "g~" << type << "_" << (i - 21 + 1);
    } else if (concat) {
      l << "g" << type << "_" << (i % 3 + 1) << "@block" << (i / 3 + 1);
    } else {
      l << "g" << type << "_" << (i + 1);
    }
    return l.str();
  };
  for (size_t i = 0; i < code.x_gens.size(); ++i) {
    out << label('x', i) << ": " << code.x_gens[i].str() << "\n";
  }
  for (size_t i = 0; i < code.z_gens.size(); ++i) {
    out << label('z', i) << ": " << code.z_gens[i].str() << "\n";
  }
  out << "logical_x: " << code.logical_x.str() << "\n";
  out << "logical_z: " << code.logical_z.str() << "\n";
  return out.str();
}

}  // namespace wpec
