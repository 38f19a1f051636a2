#include "wpec/protocol.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <omp.h>

#include "wpec/codes.hpp"

namespace wpec {

namespace {

constexpr std::array<Stage, 4> kStages = {Stage::Level2Z, Stage::Level2X, Stage::Level1Z, Stage::Level1X};

int stage_size(Stage s) { return s == Stage::Level2Z || s == Stage::Level2X ? 3 : 21; }

const ExtractionCircuit& circuit_at(const CircuitFamily& f, Stage s, int j) {
  if (j < 0 || j >= stage_size(s)) throw std::out_of_range("circuit index outside stage");
  switch (s) {
    case Stage::Level2Z: return f.l2(PauliType::Z, j);
    case Stage::Level2X: return f.l2(PauliType::X, j);
    case Stage::Level1Z: return f.l1(PauliType::Z, j);
    case Stage::Level1X: return f.l1(PauliType::X, j);
  }
  throw std::logic_error("unknown stage");
}

PauliOp single_qubit(int q, char p) {
  const uint64_t bit = uint64_t{1} << q;
  switch (p) {
    case 'X': return PauliOp(kConcatQubits, bit, 0);
    case 'Y': return PauliOp(kConcatQubits, bit, bit);
    case 'Z': return PauliOp(kConcatQubits, 0, bit);
  }
  throw std::invalid_argument(std::string("bad Pauli '") + p + "'");
}

const CorrectionTable& steane_table() {
  static const CorrectionTable t = build_correction_table();
  return t;
}

// Lower-weight of the two stabilizer-coset minima, with and without the logical.
uint64_t best_rep(uint64_t w) {
  const uint64_t a = packed::min_coset_rep(w);
  const uint64_t b = packed::min_coset_rep(w ^ low_mask(kConcatQubits));
  return popcount(b) < popcount(a) ? b : a;
}

// One side of the decoder: block parity from the table (all ones when the
// outcome is not covered), blockwise WPEC, then a block logical matching s~.
uint64_t decode_side(Syndrome s, uint8_t s2, FlagVector f, const LookupTable& table,
                     const CorrectionTable& steane, bool& fallback) {
  const auto p = table.lookup_parity(s, s2, f);
  fallback = !p.has_value();
  const auto parity7 = static_cast<uint8_t>(p ? p->word : low_mask(kNumBlocks));
  uint64_t c = blockwise_wpec(static_cast<uint32_t>(s.word), parity7, steane);
  if (fallback && s2 != 0) {
    for (int b = 0; b < kNumBlocks; ++b) {
      if (packed::second_level_from_parity(static_cast<uint8_t>(1u << b)) == s2) {
        c ^= kSteaneLogicalZRep.z_bits() << (kBlockSize * b);
        break;
      }
    }
  }
  return c;
}

std::string bits_field(std::istream& in, const std::string& label, int n) {
  std::string got, value;
  if (!(in >> got >> value) || got != label) {
    throw std::runtime_error("bundle: expected '" + label + "' line");
  }
  if (static_cast<int>(value.size()) != n || value.find_first_not_of("01") != std::string::npos) {
    throw std::runtime_error("bundle: '" + label + "' needs " + std::to_string(n) + " bits");
  }
  return value;
}

}  // namespace

const char* to_string(Stage s) {
  switch (s) {
    case Stage::Level2Z: return "g~z";
    case Stage::Level2X: return "g~x";
    case Stage::Level1Z: return "gz";
    case Stage::Level1X: return "gx";
  }
  return "?";
}

std::string OutcomeBundle::str() const {
  std::ostringstream out;
  out << "s_x " << s_x.str() << "\n";
  out << "s_z " << s_z.str() << "\n";
  out << "s_tilde " << bits_to_string(s2_x, 3) << bits_to_string(s2_z, 3) << "\n";
  out << "tau " << tau_x.str() << tau_z.str() << "\n";
  out << "f " << f_x.str() << f_z.str() << "\n";
  return out.str();
}

OutcomeBundle OutcomeBundle::parse(std::istream& in) {
  std::stringstream body;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    body << line << "\n";
  }
  OutcomeBundle b;
  b.s_x = Syndrome{bits_from_string(bits_field(body, "s_x", 21), 21), 21};
  b.s_z = Syndrome{bits_from_string(bits_field(body, "s_z", 21), 21), 21};
  const std::string s2 = bits_field(body, "s_tilde", 6);
  b.s2_x = static_cast<uint8_t>(bits_from_string(s2.substr(0, 3), 3));
  b.s2_z = static_cast<uint8_t>(bits_from_string(s2.substr(3), 3));
  const std::string tau = bits_field(body, "tau", 14);
  b.tau_x = BlockTriviality::parse(tau.substr(0, 7));
  b.tau_z = BlockTriviality::parse(tau.substr(7));
  const std::string f = bits_field(body, "f", 42);
  b.f_x = FlagVector::parse(f.substr(0, 21));
  b.f_z = FlagVector::parse(f.substr(21));
  std::string extra;
  if (body >> extra) throw std::runtime_error("bundle: unexpected '" + extra + "'");
  if (b.tau_x.word != packed::triviality_from_syndrome(static_cast<uint32_t>(b.s_x.word)) ||
      b.tau_z.word != packed::triviality_from_syndrome(static_cast<uint32_t>(b.s_z.word))) {
    throw std::runtime_error("bundle: tau does not match s");
  }
  return b;
}

ProtocolState::ProtocolState(const CircuitFamily& family, Schedule s)
    : circuits(&family), schedule(std::move(s)) {
  data_error = PauliOp(kConcatQubits, schedule.input_x, schedule.input_z);
}

OutcomeBundle run_round(ProtocolState& state) {
  const int round = static_cast<int>(state.round_log.size()) + 1;
  std::vector<const Fault*> now;
  for (const Fault& f : state.schedule.faults) {
    if (f.round == round) now.push_back(&f);
  }

  OutcomeBundle b;
  uint64_t s_x = 0, s_z = 0;
  for (Stage stage : kStages) {
    for (const Fault* f : now) {
      if (f->kind == Fault::Kind::Wait && f->stage == stage) {
        state.data_error = state.data_error * single_qubit(f->qubit, f->pauli);
        ++state.faults_applied;
      }
    }
    for (int j = 0; j < stage_size(stage); ++j) {
      const ExtractionCircuit& c = circuit_at(*state.circuits, stage, j);
      const bool z_circuit = c.type == PauliType::Z;
      // A Z-generator circuit sees X errors and spreads Z errors, and vice versa.
      bool bit = z_circuit ? parity(state.data_error.x_bits() & c.target_generator.z_bits())
                           : parity(state.data_error.z_bits() & c.target_generator.x_bits());
      bool flag = false;
      uint64_t spread = 0;
      for (const Fault* f : now) {
        if (f->kind == Fault::Kind::Wait || f->stage != stage || f->circuit != j) continue;
        ++state.faults_applied;
        if (f->kind == Fault::Kind::Gate) {
          const PropagatedFault pf = propagate(c, f->position, f->local);
          spread ^= pf.data_error;
          flag ^= pf.flag;
          bit ^= pf.syndrome_flip;
        } else if (f->kind == Fault::Kind::Flag) {
          if (c.flag_bit < 0) throw std::invalid_argument("flag fault on unflagged circuit " + c.label);
          flag = !flag;
        } else {
          bit = !bit;
        }
      }
      state.data_error = state.data_error * (z_circuit ? PauliOp::z_type(kConcatQubits, spread)
                                                       : PauliOp::x_type(kConcatQubits, spread));
      FlagVector& flags = z_circuit ? state.f_x : state.f_z;
      if (flag) flags.set(c.flag_bit, !flags[c.flag_bit]);
      const uint64_t m = uint64_t{bit} << j;
      switch (stage) {
        case Stage::Level2Z: b.s2_z |= static_cast<uint8_t>(m); break;
        case Stage::Level2X: b.s2_x |= static_cast<uint8_t>(m); break;
        case Stage::Level1Z: s_z |= m; break;
        case Stage::Level1X: s_x |= m; break;
      }
    }
  }
  b.s_x = Syndrome{s_x, 21};
  b.s_z = Syndrome{s_z, 21};
  b.tau_x = BlockTriviality(packed::triviality_from_syndrome(static_cast<uint32_t>(s_x)));
  b.tau_z = BlockTriviality(packed::triviality_from_syndrome(static_cast<uint32_t>(s_z)));
  b.f_x = state.f_x;
  b.f_z = state.f_z;
  state.round_log.push_back(b);
  return b;
}

StableOutcome run_until_stable(ProtocolState& state) {
  while (true) {
    run_round(state);
    const auto& log = state.round_log;
    const size_t n = log.size();
    if (n >= 4 && log[n - 1] == log[n - 2] && log[n - 2] == log[n - 3] && log[n - 3] == log[n - 4]) {
      return {log.back(), static_cast<int>(n)};
    }
    if (static_cast<int>(n) >= kMaxRounds) {
      throw std::logic_error("outcome bundles did not repeat 4 times within " +
                             std::to_string(kMaxRounds) + " rounds");
    }
  }
}

Decoded decode_bundle(const OutcomeBundle& b, const LookupTable& table, const CorrectionTable& steane) {
  Decoded d;
  const uint64_t z = decode_side(b.s_x, b.s2_x, b.f_x, table, steane, d.fallback_z);
  const uint64_t x = decode_side(b.s_z, b.s2_z, b.f_z, table, steane, d.fallback_x);
  d.correction = PauliOp(kConcatQubits, x, z);
  return d;
}

Decoded decode_bundle(const OutcomeBundle& b, const LookupTable& table) {
  return decode_bundle(b, table, steane_table());
}

bool ideal_decoding_is_identity(const PauliOp& residual) {
  const uint64_t all = low_mask(kConcatQubits);
  for (uint64_t w : {residual.z_bits(), residual.x_bits()}) {
    if (packed::min_coset_weight(w) > packed::min_coset_weight(w ^ all)) return false;
  }
  return true;
}

int distance_to_codespace(const PauliOp& residual) {
  return popcount(best_rep(residual.z_bits()) | best_rep(residual.x_bits()));
}

std::string TrialResult::str() const {
  std::ostringstream out;
  out << "input_weight " << input_weight << " faults " << faults << " rounds " << rounds
      << " fallback " << (fallback ? 1 : 0) << " residual_weight " << residual_weight
      << " condition1 " << (!condition1_checked ? "skip" : condition1 ? "ok" : "FAIL")
      << " condition2 " << (!condition2_checked ? "skip" : condition2 ? "ok" : "FAIL");
  return out.str();
}

TrialResult run_trial(const Schedule& schedule, const CircuitFamily& circuits, const LookupTable& table,
                      int t) {
  TrialResult r;
  r.schedule = schedule;
  r.input_weight = schedule.input_weight();
  ProtocolState state(circuits, schedule);
  const StableOutcome stable = run_until_stable(state);
  const Decoded d = decode_bundle(stable.bundle, table);
  const PauliOp residual = state.data_error * d.correction;
  r.faults = state.faults_applied;
  r.rounds = stable.rounds;
  r.fallback = d.fallback_x || d.fallback_z;
  r.residual_weight = distance_to_codespace(residual);
  r.condition1_checked = r.input_weight + r.faults <= t;
  if (r.condition1_checked) r.condition1 = ideal_decoding_is_identity(residual);
  r.condition2_checked = r.faults <= t;
  if (r.condition2_checked) r.condition2 = r.residual_weight <= r.faults;
  return r;
}

FtecReport check_ftec_conditions(const std::vector<Schedule>& trials, const CircuitFamily& circuits,
                                 const LookupTable& table, int t, int workers) {
  std::vector<TrialResult> results(trials.size());
  std::vector<std::string> errors(trials.size());
  if (workers < 1) workers = 1;
#pragma omp parallel for num_threads(workers) schedule(dynamic, 16)
  for (int64_t i = 0; i < static_cast<int64_t>(trials.size()); ++i) {
    const auto k = static_cast<size_t>(i);
    try {
      results[k] = run_trial(trials[k], circuits, table, t);
    } catch (const std::exception& e) {
      errors[k] = e.what();
    }
  }
  for (size_t k = 0; k < errors.size(); ++k) {
    if (!errors[k].empty()) throw std::logic_error("trial " + std::to_string(k) + ": " + errors[k] + "\n" + trials[k].str());
  }

  FtecReport rep;
  for (const TrialResult& r : results) {
    ++rep.trials;
    rep.condition1_checked += r.condition1_checked;
    rep.condition2_checked += r.condition2_checked;
    rep.condition1_failures += !r.condition1;
    rep.condition2_failures += !r.condition2;
    rep.fallbacks += r.fallback;
    rep.max_rounds = std::max(rep.max_rounds, r.rounds);
    if (!r.ok()) rep.failures.push_back(r);
  }
  return rep;
}

std::string FtecReport::str() const {
  std::ostringstream out;
  out << "trials " << trials << " max_rounds " << max_rounds << " fallbacks " << fallbacks << "\n";
  out << "condition1 checked " << condition1_checked << " failures " << condition1_failures << "\n";
  out << "condition2 checked " << condition2_checked << " failures " << condition2_failures << "\n";
  for (const TrialResult& r : failures) out << "failure " << r.str() << "\n" << r.schedule.str();
  return out.str();
}

int ScheduleSampler::uniform(int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng_);
}

Fault ScheduleSampler::draw_fault(int max_round) {
  Fault f;
  f.round = uniform(1, max_round);
  f.stage = kStages[static_cast<size_t>(uniform(0, 3))];
  f.circuit = uniform(0, stage_size(f.stage) - 1);
  const int roll = uniform(0, 7);
  if (roll < 2) {
    f.kind = Fault::Kind::Wait;
    f.circuit = 0;
    f.qubit = uniform(0, kConcatQubits - 1);
    f.pauli = "XYZ"[uniform(0, 2)];
  } else if (roll < 6) {
    f.kind = Fault::Kind::Gate;
    const ExtractionCircuit& c = circuit_at(*circuits_, f.stage, f.circuit);
    f.position = uniform(0, c.num_locations() - 1);
    const auto locals = local_errors_at(c.ops[static_cast<size_t>(f.position)]);
    f.local = locals[static_cast<size_t>(uniform(0, static_cast<int>(locals.size()) - 1))];
  } else if (roll == 6 && circuit_at(*circuits_, f.stage, f.circuit).flag_bit >= 0) {
    f.kind = Fault::Kind::Flag;
  } else {
    f.kind = Fault::Kind::Syndrome;
  }
  return f;
}

Schedule ScheduleSampler::draw(int input_weight, int faults, int max_round) {
  Schedule s;
  std::vector<int> qubits(kConcatQubits);
  for (int q = 0; q < kConcatQubits; ++q) qubits[static_cast<size_t>(q)] = q;
  for (int i = 0; i < input_weight; ++i) {
    std::swap(qubits[static_cast<size_t>(i)], qubits[static_cast<size_t>(uniform(i, kConcatQubits - 1))]);
    const PauliOp p = single_qubit(qubits[static_cast<size_t>(i)], "XYZ"[uniform(0, 2)]);
    s.input_x |= p.x_bits();
    s.input_z |= p.z_bits();
  }
  for (int i = 0; i < faults; ++i) s.faults.push_back(draw_fault(max_round));
  return s;
}

}  // namespace wpec
