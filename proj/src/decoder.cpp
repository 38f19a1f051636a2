#include "wpec/decoder.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace wpec {

namespace {

const StabilizerCode& steane() {
  static const StabilizerCode c = steane_code();
  return c;
}

void require_steane_z(const PauliOp& e) {
  if (e.num_qubits() != 7 || !e.is_z_type()) {
    throw std::invalid_argument("expected a Z-type 7-qubit operator, got " + e.str());
  }
}

}  // namespace

LogicalClass classify_logical(const PauliOp& m) {
  require_steane_z(m);
  if (!syndrome(steane(), m).trivial()) {
    throw std::invalid_argument(m.str() + " is not in the centralizer of the X generators");
  }
  return weight(m) % 2 == 0 ? LogicalClass::LogicalI : LogicalClass::LogicalZ;
}

bool equivalent_steane(const PauliOp& e1, const PauliOp& e2) {
  require_steane_z(e1);
  require_steane_z(e2);
  if (syndrome(steane(), e1) != syndrome(steane(), e2)) {
    throw std::invalid_argument("equivalent_steane requires equal syndromes");
  }
  return weight(e1) % 2 == weight(e2) % 2;
}

CorrectionTable build_correction_table() {
  CorrectionTable t;
  std::array<bool, 8> have1{};
  std::array<bool, 8> have2{};
  have1[0] = have2[0] = true;
  t.wt1[0] = t.wt2[0] = PauliOp::identity(7);
  for (int a = 0; a < 7; ++a) {
    const uint8_t s = packed::steane_syndrome(static_cast<uint8_t>(1u << a));
    if (have1[s]) throw std::logic_error("two weight-1 errors share a Steane syndrome");
    have1[s] = true;
    t.wt1[s] = PauliOp::z_type(7, uint64_t{1} << a);
  }
  // Pairs in ascending (a, b) order; the first hit per syndrome is kept.
  for (int a = 0; a < 7; ++a) {
    for (int b = a + 1; b < 7; ++b) {
      const uint64_t e = (uint64_t{1} << a) | (uint64_t{1} << b);
      const uint8_t s = packed::steane_syndrome(static_cast<uint8_t>(e));
      if (!have2[s]) {
        have2[s] = true;
        t.wt2[s] = PauliOp::z_type(7, e);
      }
    }
  }
  for (int s = 1; s < 8; ++s) {
    if (!have1[s] || !have2[s]) throw std::logic_error("Steane correction table incomplete");
  }

  t.golay_min.assign(2048, PauliOp());
  std::vector<bool> seen(2048, false);
  auto add = [&](uint32_t e) {
    const uint32_t s = packed::golay_syndrome(e);
    if (seen[s]) {
      throw std::logic_error("Golay syndrome " + bits_to_string(s, 11) +
                             " reached by two errors of weight <= 3");
    }
    seen[s] = true;
    t.golay_min[s] = PauliOp::z_type(23, e);
  };
  add(0);
  for (int a = 0; a < 23; ++a) {
    add(1u << a);
    for (int b = a + 1; b < 23; ++b) {
      add((1u << a) | (1u << b));
      for (int c = b + 1; c < 23; ++c) add((1u << a) | (1u << b) | (1u << c));
    }
  }
  return t;
}

PauliOp wpec_steane(const Syndrome& s_x, WeightParity w, const CorrectionTable& table) {
  if (s_x.size != 3 || s_x.word >= 8) throw std::invalid_argument("Steane s_x must have 3 bits");
  if (s_x.trivial()) {
    return w == WeightParity::Odd ? kSteaneLogicalZRep : PauliOp::identity(7);
  }
  return w == WeightParity::Odd ? table.wt1[s_x.word] : table.wt2[s_x.word];
}

PauliOp wpec_golay(const Syndrome& s_x, WeightParity w, const CorrectionTable& table) {
  if (s_x.size != 11 || s_x.word >= 2048) {
    throw std::invalid_argument("Golay s_x must have 11 bits");
  }
  const PauliOp& base = table.golay_min.at(s_x.word);
  if (parity_of(base.z_bits()) == w) return base;
  return multiply(base, PauliOp::z_type(23, low_mask(23)));
}

bool block_parity_equivalent(BlockParity p1, BlockParity p2) {
  const auto diff = static_cast<uint8_t>((p1 ^ p2).word);
  for (uint8_t g : packed::outer_span()) {
    if (g == diff) return true;
  }
  return false;
}

BlockParity canonical_block_parity(BlockParity p) {
  uint8_t best = static_cast<uint8_t>(p.word);
  for (uint8_t g : packed::outer_span()) {
    const auto cand = static_cast<uint8_t>(p.word ^ g);
    const int cw = popcount(cand);
    const int bw = popcount(best);
    if (cw < bw || (cw == bw && cand < best)) best = cand;
  }
  return BlockParity(best);
}

void write_correction_table(std::ostream& out, const CorrectionTable& table,
                            const std::string& code_name) {
  out << kCorrectionTableHeader << " code=" << code_name << "\n";
  if (code_name == "steane") {
    for (uint64_t s = 1; s < 8; ++s) out << "wt1 " << bits_to_string(s, 3) << " " << table.wt1[s].str() << "\n";
    for (uint64_t s = 1; s < 8; ++s) out << "wt2 " << bits_to_string(s, 3) << " " << table.wt2[s].str() << "\n";
  } else if (code_name == "golay") {
    for (uint64_t s = 0; s < table.golay_min.size(); ++s) {
      out << "min " << bits_to_string(s, 11) << " " << table.golay_min[s].str() << "\n";
    }
  } else {
    throw std::invalid_argument("no correction table for code '" + code_name + "'");
  }
}

CorrectionTable read_correction_table(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line.rfind(kCorrectionTableHeader, 0) != 0) {
    throw std::runtime_error("missing correction-table header");
  }
  CorrectionTable t;
  t.wt1[0] = t.wt2[0] = PauliOp::identity(7);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string kind, syn, op;
    if (!(fields >> kind >> syn >> op)) throw std::runtime_error("malformed line: " + line);
    const Syndrome s = Syndrome::parse(syn);
    const PauliOp p = PauliOp::parse(op);
    if (kind == "wt1" && s.size == 3) {
      t.wt1[s.word] = p;
    } else if (kind == "wt2" && s.size == 3) {
      t.wt2[s.word] = p;
    } else if (kind == "min" && s.size == 11) {
      if (t.golay_min.empty()) t.golay_min.assign(2048, PauliOp());
      t.golay_min[s.word] = p;
    } else {
      throw std::runtime_error("malformed line: " + line);
    }
  }
  return t;
}

}  // namespace wpec
