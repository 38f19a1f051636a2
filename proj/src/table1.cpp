#include <map>
#include <stdexcept>

#include "wpec/codes.hpp"
#include "wpec/verifier.hpp"

namespace wpec {

namespace {

std::string m_class_of(int m) {
  if (m == 7) return "7";
  return m % 2 == 0 ? "2,4,6" : "1,3,5";
}

int class_rank(const std::string& c) {
  if (c == "7") return 0;
  if (c == "2,4,6") return 1;
  return 2;
}

Table1Row row(const char* form, const char* m, const char* s2, const char* tau, const char* p) {
  return {form, m, static_cast<uint8_t>(bits_from_string(s2, 3)), BlockTriviality::parse(tau),
          BlockParity::parse(p)};
}

}  // namespace

std::string Table1Row::line() const {
  return form + " " + m_class + " " + bits_to_string(s2, 3) + " " + tau.str() + " " + parity.str();
}

std::vector<Table1Row> reproduce_table1() {
  const ExtractionCircuit c = build_level2_circuit(0, PauliType::Z, Ordering::Normal);
  const uint8_t pattern = packed::kOuterRows[0];
  std::vector<int> support_blocks;
  for (int b = 0; b < kNumBlocks; ++b) {
    if ((pattern >> b) & 1) support_blocks.push_back(b);
  }

  // (column of P, class rank) -> row; column 4 is the fault-free form.
  std::map<std::pair<int, int>, Table1Row> rows;
  for (int pos = 0; pos < c.num_locations(); ++pos) {
    for (LocalError le : local_errors_at(c.ops[static_cast<size_t>(pos)])) {
      if (!(static_cast<uint8_t>(le) & static_cast<uint8_t>(LocalError::Ancilla))) continue;
      if (c.ops[static_cast<size_t>(pos)].kind == CircuitOp::Kind::MeasureAncilla) continue;
      const uint64_t e = propagate(c, pos, le).data_error;

      Table1Row r;
      int column = 4;
      int m = 0;
      r.form = "IIIIIII";
      r.m_class = "-";
      for (size_t k = 0; k < support_blocks.size(); ++k) {
        const auto bits = static_cast<uint8_t>(block_bits(e, support_blocks[k]));
        if (bits == 0) continue;
        column = static_cast<int>(k);
        m = popcount(bits);
        if (bits != static_cast<uint8_t>(low_mask(7) & ~low_mask(7 - m))) {
          throw std::logic_error("single fault left a non-suffix error on block " +
                                 std::to_string(support_blocks[k] + 1));
        }
        for (size_t later = k; later < support_blocks.size(); ++later) {
          r.form[static_cast<size_t>(support_blocks[later])] = later == k ? 'P' : 'Z';
          if (later > k && block_bits(e, support_blocks[later]) != low_mask(7)) {
            throw std::logic_error("single fault left a partial block after the first");
          }
        }
        r.m_class = m_class_of(m);
        break;
      }
      r.parity = BlockParity(packed::block_parity(e));
      r.s2 = packed::second_level_from_parity(static_cast<uint8_t>(r.parity.word));
      r.tau = BlockTriviality(packed::triviality_from_syndrome(packed::first_level_syndrome(e)));

      const auto key = std::make_pair(column, column == 4 ? 0 : class_rank(r.m_class));
      auto [it, inserted] = rows.emplace(key, r);
      if (!inserted && !(it->second == r)) {
        throw std::logic_error("errors of form " + r.form + " m=" + std::to_string(m) +
                               " disagree: " + it->second.line() + " vs " + r.line());
      }
    }
  }
  std::vector<Table1Row> out;
  for (auto& [k, r] : rows) out.push_back(r);
  return out;
}

const std::vector<Table1Row>& table1_reference() {
  static const std::vector<Table1Row> rows = {
      row("PIZZZII", "7", "000", "0000000", "1011100"),
      row("PIZZZII", "2,4,6", "100", "1000000", "0011100"),
      row("PIZZZII", "1,3,5", "000", "1000000", "1011100"),
      row("IIPZZII", "7", "100", "0000000", "0011100"),
      row("IIPZZII", "2,4,6", "001", "0010000", "0001100"),
      row("IIPZZII", "1,3,5", "100", "0010000", "0011100"),
      row("IIIPZII", "7", "001", "0000000", "0001100"),
      row("IIIPZII", "2,4,6", "111", "0001000", "0000100"),
      row("IIIPZII", "1,3,5", "001", "0001000", "0001100"),
      row("IIIIPII", "7", "111", "0000000", "0000100"),
      row("IIIIPII", "2,4,6", "000", "0000100", "0000000"),
      row("IIIIPII", "1,3,5", "111", "0000100", "0000100"),
      row("IIIIIII", "-", "000", "0000000", "0000000"),
  };
  return rows;
}

}  // namespace wpec
