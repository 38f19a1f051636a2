// Text form of trial schedules, one fault per line:
//
//   # wpec-schedule v1
//   input <49-qubit Pauli string>
//   fault <round> wait <stage> <qubit> <X|Y|Z>
//   fault <round> gate <stage> <circuit> <position> <primary|ancilla|both>
//   fault <round> flag <stage> <circuit>
//   fault <round> syndrome <stage> <circuit>
//
// Stages are g~z, g~x, gz, gx. Qubits, circuits and positions are 1-based.

#include <sstream>
#include <stdexcept>

#include "wpec/protocol.hpp"

namespace wpec {

namespace {

const char* local_name(LocalError l) {
  switch (l) {
    case LocalError::Primary: return "primary";
    case LocalError::Ancilla: return "ancilla";
    case LocalError::Both: return "both";
  }
  return "?";
}

Stage parse_stage(const std::string& s) {
  for (Stage st : {Stage::Level2Z, Stage::Level2X, Stage::Level1Z, Stage::Level1X}) {
    if (s == to_string(st)) return st;
  }
  throw std::runtime_error("schedule: unknown stage '" + s + "'");
}

LocalError parse_local(const std::string& s) {
  if (s == "primary") return LocalError::Primary;
  if (s == "ancilla") return LocalError::Ancilla;
  if (s == "both") return LocalError::Both;
  throw std::runtime_error("schedule: unknown local error '" + s + "'");
}

int read_int(std::istream& in, const char* what) {
  int v = 0;
  if (!(in >> v)) throw std::runtime_error(std::string("schedule: missing ") + what);
  return v;
}

}  // namespace

std::string Fault::str() const {
  std::ostringstream out;
  out << "fault " << round << " ";
  switch (kind) {
    case Kind::Wait: out << "wait " << to_string(stage) << " " << (qubit + 1) << " " << pauli; break;
    case Kind::Gate:
      out << "gate " << to_string(stage) << " " << (circuit + 1) << " " << (position + 1) << " "
          << local_name(local);
      break;
    case Kind::Flag: out << "flag " << to_string(stage) << " " << (circuit + 1); break;
    case Kind::Syndrome: out << "syndrome " << to_string(stage) << " " << (circuit + 1); break;
  }
  return out.str();
}

std::string Schedule::str() const {
  std::ostringstream out;
  out << kScheduleHeader << "\n";
  out << "input " << PauliOp(kConcatQubits, input_x, input_z).str() << "\n";
  for (const Fault& f : faults) out << f.str() << "\n";
  return out.str();
}

Schedule Schedule::parse(std::istream& in) {
  Schedule s;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string word;
    fields >> word;
    if (word == "input") {
      std::string text;
      fields >> text;
      PauliOp p;
      try {
        p = PauliOp::parse(text);
      } catch (const std::exception& e) {
        throw std::runtime_error(std::string("schedule: ") + e.what());
      }
      if (p.num_qubits() != kConcatQubits) throw std::runtime_error("schedule: input needs 49 qubits");
      s.input_x = p.x_bits();
      s.input_z = p.z_bits();
      continue;
    }
    if (word != "fault") throw std::runtime_error("schedule: unexpected line '" + line + "'");
    Fault f;
    f.round = read_int(fields, "round");
    std::string kind, stage;
    fields >> kind >> stage;
    f.stage = parse_stage(stage);
    if (kind == "wait") {
      f.kind = Fault::Kind::Wait;
      f.qubit = read_int(fields, "qubit") - 1;
      std::string p;
      fields >> p;
      if (p.size() != 1 || std::string("XYZ").find(p[0]) == std::string::npos) {
        throw std::runtime_error("schedule: wait fault needs X, Y or Z");
      }
      f.pauli = p[0];
      if (f.qubit < 0 || f.qubit >= kConcatQubits) throw std::runtime_error("schedule: qubit out of range");
    } else {
      f.circuit = read_int(fields, "circuit") - 1;
      if (kind == "gate") {
        f.kind = Fault::Kind::Gate;
        f.position = read_int(fields, "position") - 1;
        std::string local;
        fields >> local;
        f.local = parse_local(local);
      } else if (kind == "flag") {
        f.kind = Fault::Kind::Flag;
      } else if (kind == "syndrome") {
        f.kind = Fault::Kind::Syndrome;
      } else {
        throw std::runtime_error("schedule: unknown fault kind '" + kind + "'");
      }
    }
    if (f.round < 1) throw std::runtime_error("schedule: rounds start at 1");
    s.faults.push_back(f);
  }
  return s;
}

}  // namespace wpec
