#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "wpec/codes.hpp"
#include "wpec/protocol.hpp"

using namespace wpec;

namespace {

const CircuitFamily& family() {
  static const CircuitFamily f = CircuitFamily::build(Ordering::Permuted, true);
  return f;
}

const LookupTable& table() {
  static const LookupTable t = LookupTable::build(
      EnumerationContext::make(Ordering::Permuted, true, 3, EnumerationMode::LookupTable), 2);
  return t;
}

Schedule input_z(uint64_t support) {
  Schedule s;
  s.input_z = support;
  return s;
}

StableOutcome run(const Schedule& s) {
  ProtocolState st(family(), s);
  return run_until_stable(st);
}

Fault syndrome_fault(int round) {
  Fault f;
  f.kind = Fault::Kind::Syndrome;
  f.round = round;
  f.stage = Stage::Level1X;
  f.circuit = 4;
  return f;
}

// Syndrome oracle for the residual: every generator of the 49-qubit code commutes.
bool in_codespace(const PauliOp& residual) {
  static const StabilizerCode code = concatenated_49();
  for (const PauliOp& g : code.x_gens) {
    if (!commutes(g, residual)) return false;
  }
  for (const PauliOp& g : code.z_gens) {
    if (!commutes(g, residual)) return false;
  }
  return true;
}

}  // namespace

TEST(Protocol, ZeroFaultsStopAfterFourRounds) {
  const StableOutcome out = run(Schedule{});
  EXPECT_EQ(out.rounds, 4);
  EXPECT_EQ(out.bundle, OutcomeBundle{});
}

TEST(Protocol, FullBlockErrorGivesSecondLevelSyndrome) {
  const uint64_t e = low_mask(7);
  const StableOutcome out = run(input_z(e));
  const LevelSyndromes oracle = concat_syndrome(concatenated_49(), PauliOp::z_type(49, e));
  EXPECT_EQ(bits_to_string(out.bundle.s2_x, 3), "100");
  EXPECT_EQ(out.bundle.s2_x, oracle.second_level.word);
  EXPECT_TRUE(out.bundle.tau_x.none());
  EXPECT_TRUE(out.bundle.s_x.trivial());
}

TEST(Protocol, FlagFaultOnlyChangesFlags) {
  Schedule s;
  Fault f;
  f.kind = Fault::Kind::Flag;
  f.round = 2;
  f.stage = Stage::Level1Z;
  f.circuit = 5;
  s.faults.push_back(f);
  ProtocolState st(family(), s);
  const StableOutcome out = run_until_stable(st);
  const auto& log = st.round_log;
  OutcomeBundle b1 = log[0];
  b1.f_x = log[1].f_x;
  EXPECT_NE(log[0], log[1]);
  EXPECT_EQ(b1, log[1]);
  EXPECT_EQ(log[1], log[2]);
  EXPECT_TRUE(log[1].f_x[5]);
  EXPECT_EQ(out.rounds, 5);
}

TEST(Protocol, OneSyndromeFaultInRoundTwo) {
  Schedule s;
  s.faults.push_back(syndrome_fault(2));
  EXPECT_EQ(run(s).rounds, 6);
}

TEST(Protocol, SpacedFaultsStillStopBySixteen) {
  Schedule s;
  for (int r : {4, 8, 12}) s.faults.push_back(syndrome_fault(r));
  const StableOutcome out = run(s);
  EXPECT_EQ(out.rounds, 16);
  EXPECT_EQ(out.bundle, OutcomeBundle{});
}

TEST(Protocol, FourSpacedFaultsExceedTheLimit) {
  Schedule s;
  for (int r : {4, 8, 12, 16}) s.faults.push_back(syndrome_fault(r));
  ProtocolState st(family(), s);
  EXPECT_THROW(run_until_stable(st), std::logic_error);
}

TEST(Decode, ZeroBundleIsIdentity) {
  const Decoded d = decode_bundle(OutcomeBundle{}, table());
  EXPECT_TRUE(d.correction.is_identity());
  EXPECT_FALSE(d.fallback_z || d.fallback_x);
}

TEST(Decode, SingleZOnQubit15) {
  const uint64_t e = uint64_t{1} << 14;
  const StableOutcome out = run(input_z(e));
  EXPECT_EQ(bits_to_string((out.bundle.s_x.word >> 6) & 7, 3), "100");
  EXPECT_EQ(decode_bundle(out.bundle, table()).correction, PauliOp::z_type(49, e));
}

TEST(Decode, TableOneRowOnBlockFive) {
  // IIIIPII with m = 2: Z on the last two qubits of block 5.
  const uint64_t e = (uint64_t{0b1100000}) << 28;
  const StableOutcome out = run(input_z(e));
  EXPECT_EQ(out.bundle.s2_x, 0);
  EXPECT_EQ(out.bundle.tau_x.str(), "0000100");
  const Decoded d = decode_bundle(out.bundle, table());
  EXPECT_FALSE(d.fallback_z);
  const uint64_t c = d.correction.z_bits();
  EXPECT_EQ(c & ~(low_mask(7) << 28), 0u);
  EXPECT_EQ(popcount(c), 2);
  EXPECT_EQ(packed::min_coset_weight(e ^ c), 0);
}

TEST(Decode, OutOfTableErrorsReturnToCodespace) {
  std::mt19937_64 rng(9);
  int fallbacks = 0;
  std::vector<uint64_t> errors;
  // Weight-28 g~z_1 support times a Z on one extra block.
  errors.push_back(packed::expand_block_pattern(0b0011101) ^ low_mask(7) << 7);
  for (int i = 0; i < 300; ++i) errors.push_back(rng() & rng() & low_mask(49));
  for (uint64_t e : errors) {
    Schedule s = input_z(e);
    s.input_x = rng() & rng() & low_mask(49);
    ProtocolState st(family(), s);
    const StableOutcome out = run_until_stable(st);
    const Decoded d = decode_bundle(out.bundle, table());
    fallbacks += d.fallback_z;
    EXPECT_TRUE(in_codespace(st.data_error * d.correction)) << PauliOp::z_type(49, e).str();
  }
  EXPECT_GT(fallbacks, 0);
}

TEST(Ftec, ExhaustiveLowWeightInputsWithoutFaults) {
  std::vector<Schedule> trials{Schedule{}};
  for (int a = 0; a < 49; ++a) {
    trials.push_back(input_z(uint64_t{1} << a));
    for (int b = a + 1; b < 49; ++b) {
      trials.push_back(input_z(uint64_t{1} << a | uint64_t{1} << b));
      for (int c = b + 1; c < 49; ++c) trials.push_back(input_z(uint64_t{1} << a | uint64_t{1} << b | uint64_t{1} << c));
    }
  }
  ASSERT_EQ(trials.size(), 1u + 49u + 1176u + 18424u);
  const FtecReport r = check_ftec_conditions(trials, family(), table(), 3, 2);
  EXPECT_TRUE(r.ok()) << r.str();
  EXPECT_EQ(r.condition1_checked, r.trials);
  EXPECT_EQ(r.max_rounds, 4);
}

TEST(Ftec, SampledSchedules) {
  ScheduleSampler sampler(family(), 17);
  std::vector<Schedule> trials;
  for (int i = 0; i < 1500; ++i) {
    const int faults = 1 + i % 3;
    trials.push_back(sampler.draw(i % (4 - faults), faults, 8));
  }
  for (int i = 0; i < 200; ++i) trials.push_back(sampler.draw(10, 1 + i % 3, 8));
  const FtecReport r = check_ftec_conditions(trials, family(), table(), 3, 2);
  EXPECT_TRUE(r.ok()) << r.str();
  EXPECT_LE(r.max_rounds, kMaxRounds);
  EXPECT_EQ(r.str(), check_ftec_conditions(trials, family(), table(), 3, 1).str());
}

TEST(Schedule, TextRoundTrip) {
  ScheduleSampler sampler(family(), 3);
  for (int i = 0; i < 50; ++i) {
    const Schedule s = sampler.draw(i % 5, 3, 6);
    std::istringstream in(s.str());
    const Schedule back = Schedule::parse(in);
    EXPECT_EQ(back.input_x, s.input_x);
    EXPECT_EQ(back.input_z, s.input_z);
    EXPECT_EQ(back.faults, s.faults);
  }
  std::istringstream bad("# wpec-schedule v1\nfault 0 syndrome gx 1\n");
  EXPECT_THROW(Schedule::parse(bad), std::runtime_error);
}

TEST(Bundle, TextRoundTripAndValidation) {
  const StableOutcome out = run(input_z(uint64_t{1} << 20 | uint64_t{1} << 40));
  std::istringstream in(out.bundle.str());
  EXPECT_EQ(OutcomeBundle::parse(in), out.bundle);
  std::string text = out.bundle.str();
  text.replace(text.find("tau ") + 4, 1, text.substr(text.find("tau ") + 4, 1) == "0" ? "1" : "0");
  std::istringstream inconsistent(text);
  EXPECT_THROW(OutcomeBundle::parse(inconsistent), std::runtime_error);
  std::istringstream truncated("s_x 000\n");
  EXPECT_THROW(OutcomeBundle::parse(truncated), std::runtime_error);
}
