#include <random>

#include <gtest/gtest.h>

#include "wpec/pauli.hpp"

using namespace wpec;

namespace {

// Per-qubit anticommutation count, independent of the symplectic form.
bool commutes_by_letters(const std::string& a, const std::string& b) {
  int anti = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 'I' && b[i] != 'I' && a[i] != b[i]) ++anti;
  }
  return anti % 2 == 0;
}

char letter_product(char a, char b) {
  if (a == 'I') return b;
  if (b == 'I') return a;
  if (a == b) return 'I';
  for (char c : std::string("XYZ")) {
    if (c != a && c != b) return c;
  }
  return '?';
}

std::string random_pauli(std::mt19937_64& rng, int n) {
  std::string s;
  for (int i = 0; i < n; ++i) s += "IXYZ"[rng() % 4];
  return s;
}

}  // namespace

TEST(Pauli, ParseAndPrintRoundTrip) {
  for (const char* s : {"IXYZ", "ZIZZZII", "_X__"}) {
    const PauliOp p = PauliOp::parse(s);
    std::string expected = s;
    for (char& c : expected) c = c == '_' ? 'I' : c;
    EXPECT_EQ(p.str(), expected);
  }
  EXPECT_THROW(PauliOp::parse("IXQ"), std::invalid_argument);
}

TEST(Pauli, QubitOneIsBitZero) {
  const PauliOp p = PauliOp::parse("ZIIIIII");
  EXPECT_EQ(p.z_bits(), 1u);
  EXPECT_EQ(PauliOp::parse("IIIIIIX").x_bits(), 1u << 6);
  EXPECT_EQ(PauliOp::parse("Y").x_bits(), 1u);
  EXPECT_EQ(PauliOp::parse("Y").z_bits(), 1u);
}

TEST(Pauli, WeightCountsSupport) {
  EXPECT_EQ(weight(PauliOp::parse("IXYZI")), 3);
  EXPECT_EQ(weight(PauliOp::identity(49)), 0);
}

TEST(Pauli, CommutationAndProductMatchLetterRules) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::string a = random_pauli(rng, 9);
    const std::string b = random_pauli(rng, 9);
    const PauliOp p = PauliOp::parse(a);
    const PauliOp q = PauliOp::parse(b);
    EXPECT_EQ(commutes(p, q), commutes_by_letters(a, b)) << a << " " << b;
    std::string prod;
    for (size_t i = 0; i < a.size(); ++i) prod += letter_product(a[i], b[i]);
    EXPECT_EQ((p * q).str(), prod);
  }
}

TEST(Pauli, LengthMismatchThrows) {
  EXPECT_THROW(multiply(PauliOp::identity(7), PauliOp::identity(8)), std::invalid_argument);
  EXPECT_THROW(commutes(PauliOp::identity(7), PauliOp::identity(8)), std::invalid_argument);
}

TEST(Pauli, BlockEmbedding) {
  const PauliOp local = PauliOp::parse("ZIZZZII");
  const PauliOp big = embed_in_block(local, BlockIndex(2));
  EXPECT_EQ(big.num_qubits(), 49);
  EXPECT_EQ(big.str(), std::string(14, 'I') + "ZIZZZII" + std::string(28, 'I'));
  EXPECT_EQ(restrict_to_block(big, BlockIndex(2)), local);
  EXPECT_TRUE(restrict_to_block(big, BlockIndex(3)).is_identity());
  EXPECT_EQ(block_bits(big.z_bits(), 2), local.z_bits());
  EXPECT_THROW(BlockIndex(7), std::out_of_range);
  EXPECT_THROW(BlockIndex(-1), std::out_of_range);
}
