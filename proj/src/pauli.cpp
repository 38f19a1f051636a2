#include "wpec/pauli.hpp"

#include <stdexcept>

namespace wpec {

namespace {

void require_same_length(const PauliOp& p, const PauliOp& q) {
  if (p.num_qubits() != q.num_qubits()) {
    throw std::invalid_argument("Pauli length mismatch: " + std::to_string(p.num_qubits()) +
                                " vs " + std::to_string(q.num_qubits()));
  }
}

}  // namespace

PauliOp::PauliOp(int n) : PauliOp(n, 0, 0) {}

PauliOp::PauliOp(int n, uint64_t x_bits, uint64_t z_bits) : n_(n), x_(x_bits), z_(z_bits) {
  if (n < 0 || n > kMaxQubits) {
    throw std::invalid_argument("PauliOp supports 0..64 qubits, got " + std::to_string(n));
  }
  if (((x_bits | z_bits) & ~low_mask(n)) != 0) {
    throw std::invalid_argument("PauliOp bits set beyond qubit count");
  }
}

PauliOp PauliOp::parse(std::string_view text) {
  const int n = static_cast<int>(text.size());
  if (n > kMaxQubits) throw std::invalid_argument("Pauli string longer than 64 qubits");
  uint64_t x = 0;
  uint64_t z = 0;
  for (int i = 0; i < n; ++i) {
    const uint64_t bit = uint64_t{1} << i;
    switch (text[static_cast<size_t>(i)]) {
      case 'I':
      case '_':
        break;
      case 'X':
        x |= bit;
        break;
      case 'Z':
        z |= bit;
        break;
      case 'Y':
        x |= bit;
        z |= bit;
        break;
      default:
        throw std::invalid_argument("invalid Pauli character in '" + std::string(text) + "'");
    }
  }
  return PauliOp(n, x, z);
}

std::string PauliOp::str() const {
  std::string s(static_cast<size_t>(n_), 'I');
  for (int i = 0; i < n_; ++i) {
    const bool x = (x_ >> i) & 1;
    const bool z = (z_ >> i) & 1;
    if (x && z) {
      s[static_cast<size_t>(i)] = 'Y';
    } else if (x) {
      s[static_cast<size_t>(i)] = 'X';
    } else if (z) {
      s[static_cast<size_t>(i)] = 'Z';
    }
  }
  return s;
}

BlockIndex::BlockIndex(int i) : index(i) {
  if (i < 0 || i >= kNumBlocks) {
    throw std::out_of_range("block index must be in [0,6], got " + std::to_string(i));
  }
}

int weight(const PauliOp& p) { return popcount(p.support()); }

bool commutes(const PauliOp& p, const PauliOp& q) {
  require_same_length(p, q);
  return parity((p.x_bits() & q.z_bits()) ^ (p.z_bits() & q.x_bits())) == 0;
}

PauliOp multiply(const PauliOp& p, const PauliOp& q) {
  require_same_length(p, q);
  return PauliOp(p.num_qubits(), p.x_bits() ^ q.x_bits(), p.z_bits() ^ q.z_bits());
}

PauliOp restrict_to_block(const PauliOp& p, BlockIndex b) {
  if (p.num_qubits() != kConcatQubits) {
    throw std::invalid_argument("restrict_to_block expects a 49-qubit operator");
  }
  return PauliOp(kBlockSize, block_bits(p.x_bits(), b.index), block_bits(p.z_bits(), b.index));
}

PauliOp embed_in_block(const PauliOp& p, BlockIndex b) {
  if (p.num_qubits() != kBlockSize) {
    throw std::invalid_argument("embed_in_block expects a 7-qubit operator");
  }
  const int shift = b.first_qubit();
  return PauliOp(kConcatQubits, p.x_bits() << shift, p.z_bits() << shift);
}

}  // namespace wpec
