#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "wpec/codes.hpp"
#include "wpec/decoder.hpp"
#include "wpec/verifier.hpp"

namespace wpec {

namespace {

uint64_t reverse_bits(uint64_t w, int n) {
  uint64_t r = 0;
  for (int i = 0; i < n; ++i) r |= ((w >> i) & 1) << (n - 1 - i);
  return r;
}

// Numeric order of this key is the lexicographic order of the rendered line.
uint64_t line_order(uint64_t key) {
  return reverse_bits(record_key::s_x(key), 21) << 31 | reverse_bits(record_key::s2(key), 3) << 28 |
         reverse_bits(record_key::flags(key), 21) << 7 | reverse_bits(record_key::parity(key), 7);
}

uint32_t partition_key(uint8_t s2, BlockTriviality tau) {
  return static_cast<uint32_t>(s2) << 7 | static_cast<uint32_t>(tau.word);
}

uint64_t condition2_key(uint8_t s2, uint64_t s_x, uint64_t f) {
  return uint64_t{s2} << 42 | s_x << 21 | f;
}

std::string config_string(const EnumerationContext& ctx) {
  return std::string("ordering=") +
         (ctx.circuits.ordering == Ordering::Permuted ? "permuted" : "normal") +
         " flags=" + (ctx.circuits.flags ? "on" : "off") +
         " max_faults=" + std::to_string(ctx.sets.max_faults);
}

}  // namespace

const char* to_string(ConditionTag t) {
  switch (t) {
    case ConditionTag::Condition1: return "Condition1";
    case ConditionTag::Condition2: return "Condition2";
    case ConditionTag::Violation: return "Violation";
  }
  return "?";
}

std::string TableRecord::line() const {
  return s_x.str() + " " + bits_to_string(s2, 3) + " " + tau.str() + " " + flags.str() + " " +
         parity.str() + " " + to_string(tag);
}

LookupTable LookupTable::build(std::shared_ptr<const EnumerationContext> ctx, int workers) {
  RecordList list = collect_records(*ctx, workers);
  return from_records(std::move(ctx), std::move(list));
}

LookupTable LookupTable::from_records(std::shared_ptr<const EnumerationContext> ctx,
                                      RecordList list) {
  std::sort(list.begin(), list.end(), [](const RecordEntry& a, const RecordEntry& b) {
    return line_order(a.key) < line_order(b.key);
  });

  LookupTable t;
  t.ctx_ = std::move(ctx);
  t.records_.reserve(list.size());
  for (const RecordEntry& r : list) {
    TableRecord rec;
    rec.s_x = Syndrome{record_key::s_x(r.key), 21};
    rec.s2 = record_key::s2(r.key);
    rec.tau = BlockTriviality(packed::triviality_from_syndrome(record_key::s_x(r.key)));
    rec.flags = FlagVector(record_key::flags(r.key));
    rec.parity = BlockParity(record_key::parity(r.key));
    rec.witness = r.witness;
    t.records_.push_back(rec);
  }
  RecordList().swap(list);

  for (uint32_t i = 0; i < t.records_.size(); ++i) {
    const TableRecord& r = t.records_[i];
    const uint32_t pk = partition_key(r.s2, r.tau);
    auto [it, inserted] = t.partition_index_.emplace(pk, static_cast<uint32_t>(t.partitions_.size()));
    if (inserted) {
      Partition p;
      p.s2 = r.s2;
      p.tau = r.tau;
      t.partitions_.push_back(p);
    }
    t.partitions_[it->second].members.push_back(i);
  }
  std::vector<uint32_t> order(t.partitions_.size());
  for (uint32_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](uint32_t a, uint32_t b) {
    const Partition& pa = t.partitions_[a];
    const Partition& pb = t.partitions_[b];
    return std::pair(reverse_bits(pa.s2, 3), reverse_bits(pa.tau.word, 7)) <
           std::pair(reverse_bits(pb.s2, 3), reverse_bits(pb.tau.word, 7));
  });
  std::vector<Partition> sorted;
  sorted.reserve(order.size());
  for (uint32_t i : order) sorted.push_back(std::move(t.partitions_[i]));
  t.partitions_ = std::move(sorted);
  t.partition_index_.clear();

  for (uint32_t pi = 0; pi < t.partitions_.size(); ++pi) {
    Partition& p = t.partitions_[pi];
    t.partition_index_[partition_key(p.s2, p.tau)] = pi;
    const BlockParity first = canonical_block_parity(t.records_[p.members.front()].parity);
    const bool uniform = std::all_of(p.members.begin(), p.members.end(), [&](uint32_t m) {
      return canonical_block_parity(t.records_[m].parity) == first;
    });
    if (uniform) {
      p.tag = ConditionTag::Condition1;
      p.canonical = first;
    } else {
      // Members are in line order, so equal (s_x, f) groups are contiguous
      // only per s_x; collect them explicitly.
      p.tag = ConditionTag::Condition2;
      std::map<uint64_t, uint32_t> first_of_group;
      for (uint32_t m : p.members) {
        const TableRecord& r = t.records_[m];
        const uint64_t key = condition2_key(r.s2, r.s_x.word, r.flags.word);
        auto [it, inserted] = first_of_group.emplace(key, m);
        if (inserted) {
          t.condition2_parity_[key] = static_cast<uint8_t>(canonical_block_parity(r.parity).word);
          continue;
        }
        const TableRecord& head = t.records_[it->second];
        if (canonical_block_parity(r.parity) != canonical_block_parity(head.parity)) {
          p.tag = ConditionTag::Violation;
          const bool new_group = t.violations_.empty() || t.violations_.back().first != it->second;
          if (new_group) t.violations_.push_back({it->second, m});
        }
      }
    }
    for (uint32_t m : p.members) t.records_[m].tag = p.tag;
  }
  return t;
}

const Partition* LookupTable::find(uint8_t s2, BlockTriviality tau) const {
  auto it = partition_index_.find(partition_key(s2, tau));
  return it == partition_index_.end() ? nullptr : &partitions_[it->second];
}

std::optional<BlockParity> LookupTable::lookup_parity(Syndrome s_x, uint8_t s2, FlagVector f) const {
  const BlockTriviality tau(packed::triviality_from_syndrome(static_cast<uint32_t>(s_x.word)));
  const Partition* p = find(s2, tau);
  if (!p) return std::nullopt;
  if (p->tag == ConditionTag::Condition1) return p->canonical;
  auto it = condition2_parity_.find(condition2_key(s2, s_x.word, f.word));
  if (it == condition2_parity_.end()) return std::nullopt;
  return BlockParity(it->second);
}

void LookupTable::write(std::ostream& out) const {
  out << kLookupTableHeader << " " << config_string(*ctx_) << " records=" << records_.size()
      << "\n";
  out << "# s_x s~_x tau_x f_x p_x condition\n";
  for (const TableRecord& r : records_) out << r.line() << "\n";
}

void LookupTable::write_json_lines(std::ostream& out) const {
  for (const TableRecord& r : records_) {
    nlohmann::ordered_json j;
    j["s_x"] = r.s_x.str();
    j["s2_x"] = bits_to_string(r.s2, 3);
    j["tau_x"] = r.tau.str();
    j["f_x"] = r.flags.str();
    j["p_x"] = r.parity.str();
    j["condition"] = to_string(r.tag);
    out << j.dump() << "\n";
  }
}

Claim2Report verify_claim2(const LookupTable& table) {
  Claim2Report rep;
  rep.records = table.records().size();
  rep.partitions = table.partitions().size();
  for (const Partition& p : table.partitions()) {
    switch (p.tag) {
      case ConditionTag::Condition1: ++rep.condition1; break;
      case ConditionTag::Condition2: ++rep.condition2; break;
      case ConditionTag::Violation: ++rep.violating_partitions; break;
    }
  }
  const EnumerationContext& ctx = table.context();
  std::map<FaultNumberCombination, uint64_t> counts;
  for (const auto& c : ctx.combos) counts[c.counts] += combination_count(ctx.sets, c);
  rep.combinations.assign(counts.begin(), counts.end());

  for (const Claim2Violation& v : table.violations()) {
    const TableRecord& a = table.records()[v.first];
    const TableRecord& b = table.records()[v.second];
    std::ostringstream s;
    s << "s~_x=" << bits_to_string(a.s2, 3) << " tau_x=" << a.tau.str() << " s_x=" << a.s_x.str()
      << " f_x=" << a.flags.str() << "\n"
      << "    p_x=" << a.parity.str() << " from " << describe_witness(ctx, a.witness) << "\n"
      << "    p_x=" << b.parity.str() << " from " << describe_witness(ctx, b.witness);
    rep.witnesses.push_back(s.str());
  }
  return rep;
}

std::string Claim2Report::str() const {
  std::ostringstream out;
  for (const auto& [c, n] : combinations) out << "combinations " << c.str() << " " << n << "\n";
  out << "records " << records << "\n";
  out << "partitions " << partitions << " condition1 " << condition1 << " condition2 " << condition2
      << " violating " << violating_partitions << "\n";
  for (const auto& w : witnesses) out << "violation " << w << "\n";
  out << (ok() ? "claim2 holds" : "claim2 violated") << "\n";
  return out.str();
}

}  // namespace wpec
