// Fault record enumeration: the OpenMP kernel and its serial
// reference.

#include <algorithm>
#include <map>

#include <omp.h>

#include "wpec/codes.hpp"
#include "wpec/verifier.hpp"

namespace wpec {

namespace {

const std::vector<Effect>& empty_pick() {
  static const std::vector<Effect> one{Effect{}};
  return one;
}

std::array<const std::vector<Effect>*, 3> sets_of(const EnumerationContext& ctx,
                                                  const FaultSetCombination& combo) {
  std::array<const std::vector<Effect>*, 3> out{&empty_pick(), &empty_pick(), &empty_pick()};
  for (size_t i = 0; i < combo.sets.size(); ++i) out[i] = &effects_of(ctx.sets, combo.sets[i]);
  return out;
}

// Sort by (key, witness) and keep the first entry per key.
void compact(RecordList& v) {
  std::sort(v.begin(), v.end(), [](const RecordEntry& a, const RecordEntry& b) {
    return a.key != b.key ? a.key < b.key : a.witness < b.witness;
  });
  v.erase(std::unique(v.begin(), v.end(),
                      [](const RecordEntry& a, const RecordEntry& b) { return a.key == b.key; }),
          v.end());
}

}  // namespace

std::shared_ptr<const EnumerationContext> EnumerationContext::make(Ordering ordering, bool flags,
                                                                   int max_faults,
                                                                   EnumerationMode mode) {
  auto ctx = std::make_shared<EnumerationContext>();
  ctx->circuits = CircuitFamily::build(ordering, flags);
  ctx->sets = enumerate_fault_sets(ctx->circuits, max_faults);
  ctx->mode = mode;
  for (const auto& counts : fault_number_combinations(max_faults, mode)) {
    for (auto& c : fault_set_combinations(counts, mode)) ctx->combos.push_back(std::move(c));
  }
  return ctx;
}

Effect witness_effect(const EnumerationContext& ctx, const Witness& w) {
  const auto sets = sets_of(ctx, ctx.combos.at(w.combo));
  Effect e;
  for (size_t i = 0; i < 3; ++i) {
    const Effect& x = sets[i]->at(w.pick[i]);
    e.error ^= x.error;
    e.flags ^= x.flags;
  }
  return e;
}

std::string describe_witness(const EnumerationContext& ctx, const Witness& w) {
  const FaultSetCombination& combo = ctx.combos.at(w.combo);
  std::string s = combo.str() + " picks";
  for (size_t i = 0; i < combo.sets.size(); ++i) s += " " + std::to_string(w.pick[i]);
  const Effect e = witness_effect(ctx, w);
  s += " E=" + PauliOp::z_type(kConcatQubits, e.error).str() + " f=" + bits_to_string(e.flags, 21);
  return s;
}

uint64_t record_key::pack(uint64_t error49, uint32_t flags) {
  const uint8_t p = packed::block_parity(error49);
  return uint64_t{packed::first_level_syndrome(error49)} |
         uint64_t{packed::second_level_from_parity(p)} << kSyndrome2Shift |
         uint64_t{flags} << kFlagShift | uint64_t{p} << kParityShift;
}

RecordList collect_records(const EnumerationContext& ctx, int workers) {
  const auto n = static_cast<int64_t>(ctx.combos.size());
  std::vector<RecordList> partial;
  if (workers < 1) workers = 1;

#pragma omp parallel num_threads(workers)
  {
    RecordList local;
    size_t compact_at = size_t{1} << 20;
#pragma omp for schedule(dynamic, 1)
    for (int64_t ci = 0; ci < n; ++ci) {
      const auto sets = sets_of(ctx, ctx.combos[static_cast<size_t>(ci)]);
      const auto& s0 = *sets[0];
      const auto& s1 = *sets[1];
      const auto& s2 = *sets[2];
      for (uint32_t a = 0; a < s0.size(); ++a) {
        for (uint32_t b = 0; b < s1.size(); ++b) {
          const uint64_t eab = s0[a].error ^ s1[b].error;
          const uint32_t fab = s0[a].flags ^ s1[b].flags;
          for (uint32_t c = 0; c < s2.size(); ++c) {
            local.push_back({record_key::pack(eab ^ s2[c].error, fab ^ s2[c].flags),
                             Witness{static_cast<uint32_t>(ci), {a, b, c}}});
          }
          if (local.size() >= compact_at) {
            compact(local);
            compact_at = std::max(compact_at, 2 * local.size());
          }
        }
      }
    }
    compact(local);
#pragma omp critical
    partial.push_back(std::move(local));
  }

  RecordList merged;
  size_t total = 0;
  for (const auto& p : partial) total += p.size();
  merged.reserve(total);
  for (auto& p : partial) {
    merged.insert(merged.end(), p.begin(), p.end());
    RecordList().swap(p);
  }
  compact(merged);
  return merged;
}

RecordList collect_records_reference(const EnumerationContext& ctx) {
  const StabilizerCode code = concatenated_49();
  std::map<uint64_t, Witness> seen;
  for (uint32_t ci = 0; ci < ctx.combos.size(); ++ci) {
    const auto sets = sets_of(ctx, ctx.combos[ci]);
    for (uint32_t a = 0; a < sets[0]->size(); ++a)
      for (uint32_t b = 0; b < sets[1]->size(); ++b)
        for (uint32_t c = 0; c < sets[2]->size(); ++c) {
          const Effect& x = (*sets[0])[a];
          const Effect& y = (*sets[1])[b];
          const Effect& z = (*sets[2])[c];
          const PauliOp e = PauliOp::z_type(kConcatQubits, x.error) *
                            PauliOp::z_type(kConcatQubits, y.error) *
                            PauliOp::z_type(kConcatQubits, z.error);
          const LevelSyndromes syn = concat_syndrome(code, e);
          uint64_t parity_word = 0;
          for (int blk = 0; blk < kNumBlocks; ++blk) {
            if (weight(restrict_to_block(e, BlockIndex(blk))) % 2) parity_word |= uint64_t{1} << blk;
          }
          const uint64_t key = syn.first_level.word |
                               syn.second_level.word << record_key::kSyndrome2Shift |
                               uint64_t{x.flags ^ y.flags ^ z.flags} << record_key::kFlagShift |
                               parity_word << record_key::kParityShift;
          const Witness w{ci, {a, b, c}};
          auto [it, inserted] = seen.emplace(key, w);
          if (!inserted && w < it->second) it->second = w;
        }
  }
  RecordList out;
  out.reserve(seen.size());
  for (const auto& [k, w] : seen) out.push_back({k, w});
  return out;
}

}  // namespace wpec
