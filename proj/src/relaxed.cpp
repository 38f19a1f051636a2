// Relaxed-condition marking for fault combinations after the last correct
// round, and the post-analysis of whatever gets marked.

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <omp.h>

#include "wpec/codes.hpp"
#include "wpec/verifier.hpp"

namespace wpec {

namespace {

const std::vector<Effect>& empty_pick() {
  static const std::vector<Effect> one{Effect{}};
  return one;
}

const std::vector<Effect>& single_qubit_sumset(int k) {
  static const std::array<std::vector<Effect>, 4> sets = [] {
    std::vector<Effect> singles;
    for (int q = 0; q < kConcatQubits; ++q) singles.push_back({uint64_t{1} << q, 0});
    std::array<std::vector<Effect>, 4> out;
    for (int i = 0; i < 4; ++i) out[static_cast<size_t>(i)] = sumset(singles, i);
    return out;
  }();
  return sets.at(static_cast<size_t>(k));
}

bool by_candidate(const MarkedCombination& a, const MarkedCombination& b) {
  return a.candidate != b.candidate ? a.candidate < b.candidate : a.witness < b.witness;
}

}  // namespace

int sigma(uint64_t e_a, int v_w) {
  if (v_w < 0 || v_w > 7) throw std::invalid_argument("v_W out of range");
  const uint32_t s = packed::first_level_syndrome(e_a);
  std::array<int, 7> w{};
  for (int b = 0; b < kNumBlocks; ++b) w[static_cast<size_t>(b)] = popcount((s >> (3 * b)) & 7);
  std::sort(w.begin(), w.end());
  int total = 0;
  for (int i = 0; i < kNumBlocks - v_w; ++i) total += w[static_cast<size_t>(i)];
  return total;
}

bool relaxed_mark(const RelaxedCandidate& c, int max_faults) {
  return sigma(c.e_a, c.counts.w) <= c.counts.s && popcount(c.flags) <= c.counts.f &&
         packed::min_coset_weight(c.e_total) + c.counts.w > max_faults;
}

int post_analyze(const RelaxedCandidate& c) {
  int worst = 0;
  for (int before = 0; before <= c.counts.w; ++before) {
    for (const Effect& w : single_qubit_sumset(before)) {
      if (popcount(packed::first_level_syndrome(c.e_a ^ w.error)) > c.counts.s) continue;
      worst = std::max(worst, packed::min_coset_weight(c.e_total ^ w.error) + c.counts.w - before);
    }
  }
  return worst;
}

size_t AppendixBReport::harmful() const {
  return static_cast<size_t>(
      std::count_if(marked.begin(), marked.end(), [](const auto& m) { return m.harmful; }));
}

AppendixBReport run_appendix_b(const EnumerationContext& ctx, int workers) {
  if (ctx.mode != EnumerationMode::Relaxed) {
    throw std::invalid_argument("run_appendix_b needs a Relaxed enumeration context");
  }
  AppendixBReport rep;
  rep.max_faults = ctx.sets.max_faults;
  for (const auto& c : ctx.combos) rep.combinations += combination_count(ctx.sets, c);

  const auto n = static_cast<int64_t>(ctx.combos.size());
  std::vector<MarkedCombination> all;
  if (workers < 1) workers = 1;
#pragma omp parallel num_threads(workers)
  {
    std::vector<MarkedCombination> local;
#pragma omp for schedule(dynamic, 1)
    for (int64_t ci = 0; ci < n; ++ci) {
      const FaultSetCombination& combo = ctx.combos[static_cast<size_t>(ci)];
      std::array<const std::vector<Effect>*, 3> sets{&empty_pick(), &empty_pick(), &empty_pick()};
      std::array<uint64_t, 3> early_mask{~uint64_t{0}, ~uint64_t{0}, ~uint64_t{0}};
      for (size_t i = 0; i < combo.sets.size(); ++i) {
        sets[i] = &effects_of(ctx.sets, combo.sets[i]);
        if (combo.sets[i].late) early_mask[i] = 0;
      }
      RelaxedCandidate cand;
      cand.counts = combo.counts;
      for (uint32_t a = 0; a < sets[0]->size(); ++a)
        for (uint32_t b = 0; b < sets[1]->size(); ++b)
          for (uint32_t c = 0; c < sets[2]->size(); ++c) {
            const Effect& x = (*sets[0])[a];
            const Effect& y = (*sets[1])[b];
            const Effect& z = (*sets[2])[c];
            cand.e_a = (x.error & early_mask[0]) ^ (y.error & early_mask[1]) ^ (z.error & early_mask[2]);
            cand.e_total = x.error ^ y.error ^ z.error;
            cand.flags = x.flags ^ y.flags ^ z.flags;
            if (relaxed_mark(cand, rep.max_faults)) {
              local.push_back({cand, Witness{static_cast<uint32_t>(ci), {a, b, c}}});
            }
          }
    }
#pragma omp critical
    all.insert(all.end(), local.begin(), local.end());
  }

  std::sort(all.begin(), all.end(), by_candidate);
  all.erase(std::unique(all.begin(), all.end(),
                        [](const auto& a, const auto& b) { return a.candidate == b.candidate; }),
            all.end());
  for (MarkedCombination& m : all) {
    m.worst_output_weight = post_analyze(m.candidate);
    m.harmful = m.worst_output_weight > rep.max_faults;
  }
  rep.marked = std::move(all);
  return rep;
}

std::string AppendixBReport::str(const EnumerationContext& ctx) const {
  std::ostringstream out;
  out << "max_faults " << max_faults << "\n";
  out << "fault combinations " << combinations << "\n";
  for (const MarkedCombination& m : marked) {
    const uint64_t rep = packed::min_coset_rep(m.candidate.e_total);
    out << "marked " << m.candidate.counts.str() << " E=" << PauliOp::z_type(kConcatQubits, rep).str()
        << " f=" << bits_to_string(m.candidate.flags, 21) << " worst_output_weight "
        << m.worst_output_weight << (m.harmful ? " harmful" : " certified") << "\n";
    out << "    from " << describe_witness(ctx, m.witness) << "\n";
  }
  out << marked.size() << " marked, " << harmful() << " harmful\n";
  return out.str();
}

}  // namespace wpec
