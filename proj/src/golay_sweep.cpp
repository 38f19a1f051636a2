// Exhaustive decoder checks, including the 2^23 Golay sweep kernel.

#include <algorithm>
#include <random>
#include <sstream>

#include <omp.h>

#include "wpec/codes.hpp"
#include "wpec/decoder.hpp"

namespace wpec {

namespace {

std::vector<uint64_t> z_span(const StabilizerCode& code) {
  std::vector<uint64_t> span{0};
  for (const PauliOp& g : code.z_gens) {
    const size_t n = span.size();
    for (size_t i = 0; i < n; ++i) span.push_back(span[i] ^ g.z_bits());
  }
  std::sort(span.begin(), span.end());
  return span;
}

bool in_span(const std::vector<uint64_t>& span, uint64_t w) {
  return std::binary_search(span.begin(), span.end(), w);
}

ClaimCheck named(std::string name) {
  ClaimCheck c;
  c.name = std::move(name);
  return c;
}

void fail(ClaimCheck& c, const std::string& what) {
  if (c.failures++ == 0) c.witness = what;
}

}  // namespace

std::string format_checks(const std::vector<ClaimCheck>& checks) {
  std::ostringstream out;
  for (const ClaimCheck& c : checks) {
    out << c.name << " cases " << c.cases << " failures " << c.failures;
    if (!c.ok()) out << " first " << c.witness;
    out << "\n";
  }
  return out.str();
}

std::vector<ClaimCheck> verify_steane_claims(const CorrectionTable& table) {
  const StabilizerCode code = steane_code();
  const auto stabilizers = z_span(code);

  ClaimCheck centralizer = named("steane centralizer split");
  ClaimCheck equivalence = named("steane equal-syndrome equivalence");
  ClaimCheck soundness = named("steane wpec soundness");
  int even = 0;
  int odd = 0;
  for (uint64_t e = 0; e < 128; ++e) {
    const PauliOp m = PauliOp::z_type(7, e);
    const Syndrome s = syndrome(code, m);
    ++centralizer.cases;
    if (s.trivial()) {
      const LogicalClass cls = classify_logical(m);
      const bool stabilizer = in_span(stabilizers, e);
      (stabilizer ? even : odd)++;
      if ((cls == LogicalClass::LogicalI) != stabilizer) fail(centralizer, m.str());
    }
    for (uint64_t f = 0; f < 128; ++f) {
      const PauliOp m2 = PauliOp::z_type(7, f);
      if (syndrome(code, m2) != s) continue;
      ++equivalence.cases;
      if (equivalent_steane(m, m2) != in_span(stabilizers, e ^ f)) fail(equivalence, m.str() + " " + m2.str());
    }
    ++soundness.cases;
    const PauliOp c = wpec_steane(s, parity_of(e), table);
    if (!in_span(stabilizers, e ^ c.z_bits())) fail(soundness, m.str());
  }
  if (even != 8 || odd != 8) {
    fail(centralizer, "split " + std::to_string(even) + "/" + std::to_string(odd));
  }
  return {centralizer, equivalence, soundness};
}

GolaySweep golay_wpec_sweep(const CorrectionTable& table, int workers) {
  std::vector<uint32_t> correction(2048);
  for (size_t s = 0; s < 2048; ++s) correction[s] = static_cast<uint32_t>(table.golay_min.at(s).z_bits());
  const uint32_t all = static_cast<uint32_t>(low_mask(23));
  std::vector<uint8_t> stabilizer(size_t{1} << 23, 0);
  for (uint64_t w : z_span(golay_code())) stabilizer[w] = 1;

  const int64_t n = int64_t{1} << 23;
  uint64_t failures = 0;
  int64_t first = n;
  if (workers < 1) workers = 1;
#pragma omp parallel for num_threads(workers) schedule(static) reduction(+ : failures) reduction(min : first)
  for (int64_t i = 0; i < n; ++i) {
    const auto e = static_cast<uint32_t>(i);
    uint32_t c = correction[packed::golay_syndrome(e)];
    if (parity(c) != parity(e)) c ^= all;
    if (!stabilizer[e ^ c]) {
      ++failures;
      first = std::min(first, i);
    }
  }
  GolaySweep r;
  r.checked = static_cast<uint64_t>(n);
  r.failures = failures;
  r.first_failure = failures ? static_cast<uint32_t>(first) : 0;
  return r;
}

GolaySweep golay_wpec_sweep_reference(const CorrectionTable& table, uint64_t limit) {
  const StabilizerCode code = golay_code();
  const auto stabilizers = z_span(code);
  GolaySweep r;
  for (uint64_t e = 0; e < std::min<uint64_t>(limit, uint64_t{1} << 23); ++e) {
    const PauliOp err = PauliOp::z_type(23, e);
    const PauliOp c = wpec_golay(syndrome(code, err), parity_of(e), table);
    ++r.checked;
    if (!in_span(stabilizers, (err * c).z_bits())) {
      if (r.failures++ == 0) r.first_failure = static_cast<uint32_t>(e);
    }
  }
  return r;
}

std::vector<ClaimCheck> verify_golay_claims(const CorrectionTable& table, int workers) {
  const StabilizerCode code = golay_code();
  const auto stabilizers = z_span(code);
  const uint64_t all = low_mask(23);

  ClaimCheck stab = named("golay stabilizers even");
  ClaimCheck logical = named("golay logical coset odd");
  for (uint64_t s : stabilizers) {
    ++stab.cases;
    if (parity(s)) fail(stab, PauliOp::z_type(23, s).str());
    ++logical.cases;
    if (!parity(s ^ all)) fail(logical, PauliOp::z_type(23, s ^ all).str());
  }
  const GolaySweep sweep = golay_wpec_sweep(table, workers);
  ClaimCheck soundness = named("golay wpec soundness");
  soundness.cases = sweep.checked;
  soundness.failures = sweep.failures;
  if (sweep.failures) soundness.witness = PauliOp::z_type(23, sweep.first_failure).str();
  return {stab, logical, soundness};
}

uint64_t blockwise_wpec(uint32_t first_level, uint8_t parity7, const CorrectionTable& table) {
  uint64_t c = 0;
  for (int b = 0; b < kNumBlocks; ++b) {
    const Syndrome s{(first_level >> (3 * b)) & 7, 3};
    const WeightParity w = (parity7 >> b) & 1 ? WeightParity::Odd : WeightParity::Even;
    c |= wpec_steane(s, w, table).z_bits() << (kBlockSize * b);
  }
  return c;
}

std::vector<ClaimCheck> verify_concat_claims(const CorrectionTable& table, uint64_t samples,
                                             uint64_t seed) {
  const StabilizerCode code = concatenated_49();
  std::mt19937_64 rng(seed);
  ClaimCheck c = named("concat49 blockwise wpec");
  for (uint64_t i = 0; i < samples; ++i) {
    const uint64_t e = rng() & low_mask(kConcatQubits);
    const uint64_t corr = blockwise_wpec(packed::first_level_syndrome(e), packed::block_parity(e), table);
    const PauliOp residual = PauliOp::z_type(kConcatQubits, e ^ corr);
    ++c.cases;
    const LevelSyndromes syn = concat_syndrome(code, residual);
    if (!syn.first_level.trivial() || !syn.second_level.trivial() ||
        packed::min_coset_weight(residual.z_bits()) != 0) {
      fail(c, PauliOp::z_type(kConcatQubits, e).str());
    }
  }
  return {c};
}

}  // namespace wpec
