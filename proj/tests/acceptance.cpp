// Acceptance gate: one PASS/FAIL line per criterion, non-zero exit if any fail.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <regex>
#include <sstream>

#include "wpec/codes.hpp"
#include "wpec/decoder.hpp"
#include "wpec/protocol.hpp"
#include "wpec/verifier.hpp"

using namespace wpec;

namespace {

namespace fs = std::filesystem;

struct Run {
  int code = -1;
  std::string out;
  double seconds = 0;
};

Run cli(const std::string& args) {
  const std::string cmd = std::string(WPEC_CLI_PATH) + " " + args + " 2>&1";
  Run r;
  const auto t0 = std::chrono::steady_clock::now();
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

// Outputs kept for the determinism criterion.
std::map<std::string, std::string> outputs;

const char* kTable1[] = {
    "PIZZZII 7 000 0000000 1011100",     "PIZZZII 2,4,6 100 1000000 0011100",
    "PIZZZII 1,3,5 000 1000000 1011100", "IIPZZII 7 100 0000000 0011100",
    "IIPZZII 2,4,6 001 0010000 0001100", "IIPZZII 1,3,5 100 0010000 0011100",
    "IIIPZII 7 001 0000000 0001100",     "IIIPZII 2,4,6 111 0001000 0000100",
    "IIIPZII 1,3,5 001 0001000 0001100", "IIIIPII 7 111 0000000 0000100",
    "IIIIPII 2,4,6 000 0000100 0000000", "IIIIPII 1,3,5 111 0000100 0000100",
    "IIIIIII - 000 0000000 0000000",
};

const char* kSteaneRows[3] = {"1011100", "0101110", "0010111"};
const char* kGolayRow1 = "11111001001010000000000";

uint64_t word(const std::string& bits) {
  uint64_t w = 0;
  for (size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') w |= uint64_t{1} << i;
  }
  return w;
}

std::vector<uint64_t> span_of(const std::vector<uint64_t>& rows) {
  std::vector<uint64_t> out{0};
  for (uint64_t r : rows) {
    const size_t n = out.size();
    for (size_t i = 0; i < n; ++i) out.push_back(out[i] ^ r);
  }
  return out;
}

std::vector<uint64_t> golay_rows() {
  std::vector<uint64_t> rows;
  std::string r = kGolayRow1;
  for (int i = 0; i < 11; ++i) {
    rows.push_back(word(r));
    r = "0" + r.substr(0, 22);
  }
  return rows;
}

uint64_t syndrome_of(uint64_t e, const std::vector<uint64_t>& rows) {
  uint64_t s = 0;
  for (size_t i = 0; i < rows.size(); ++i) s |= uint64_t(parity(e & rows[i])) << i;
  return s;
}

// --- criteria --------------------------------------------------------------

std::string c1() {
  const Run a = cli("--workers 1 reproduce-table1");
  outputs["table1"] = a.out;
  std::string expected = "# form m s~_x tau_x p_x\n";
  for (const char* l : kTable1) expected += std::string(l) + "\n";
  if (a.code != 0) return "exit " + std::to_string(a.code);
  if (a.out != expected) return "output differs from the reference table";
  const auto t0 = std::chrono::steady_clock::now();
  reproduce_table1();
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (s >= 1.0) return "took " + std::to_string(s) + " s";
  return "";
}

std::string c2() {
  std::vector<uint64_t> rows;
  for (const char* r : kSteaneRows) rows.push_back(word(r));
  const auto stab = span_of(rows);
  auto is_stab = [&](uint64_t w) { return std::find(stab.begin(), stab.end(), w) != stab.end(); };
  int even = 0, odd = 0;
  for (uint64_t e = 0; e < 128; ++e) {
    if (syndrome_of(e, rows) != 0) continue;
    const bool logical_i = is_stab(e);
    (logical_i ? even : odd)++;
    if (parity(e) == logical_i) return "parity does not match class for " + bits_to_string(e, 7);
    const LogicalClass cls = classify_logical(PauliOp::z_type(7, e));
    if ((cls == LogicalClass::LogicalI) != logical_i) return "classify_logical wrong on " + bits_to_string(e, 7);
  }
  if (even != 8 || odd != 8) return "centralizer split " + std::to_string(even) + "/" + std::to_string(odd);
  uint64_t pairs = 0;
  for (uint64_t a = 0; a < 128; ++a)
    for (uint64_t b = 0; b < 128; ++b) {
      if (syndrome_of(a, rows) != syndrome_of(b, rows)) continue;
      ++pairs;
      const bool oracle = is_stab(a ^ b);
      if (oracle != (parity(a) == parity(b))) return "biconditional fails on oracle side";
      if (equivalent_steane(PauliOp::z_type(7, a), PauliOp::z_type(7, b)) != oracle) return "equivalent_steane wrong";
    }
  if (pairs != 128 * 16) return "unexpected pair count";
  return "";
}

std::string c3() {
  const CorrectionTable t = build_correction_table();
  std::vector<uint64_t> srows;
  for (const char* r : kSteaneRows) srows.push_back(word(r));
  const auto sstab = span_of(srows);
  for (uint64_t e = 0; e < 128; ++e) {
    const Syndrome s{syndrome_of(e, srows), 3};
    const uint64_t c = wpec_steane(s, parity_of(e), t).z_bits();
    if (std::find(sstab.begin(), sstab.end(), e ^ c) == sstab.end()) return "steane fails on " + bits_to_string(e, 7);
  }
  const auto grows = golay_rows();
  std::vector<uint8_t> gstab(size_t{1} << 23, 0);
  for (uint64_t w : span_of(grows)) gstab[w] = 1;
  // Syndrome by linearity from the per-qubit columns.
  std::array<uint64_t, 23> column{};
  for (int q = 0; q < 23; ++q) column[static_cast<size_t>(q)] = syndrome_of(uint64_t{1} << q, grows);
  uint64_t s = 0;
  for (uint64_t i = 0; i < (uint64_t{1} << 23); ++i) {
    const uint64_t e = i ^ (i >> 1);  // Gray code
    if (i) s ^= column[static_cast<size_t>(std::countr_zero(i))];
    const uint64_t c = wpec_golay(Syndrome{s, 11}, parity_of(e), t).z_bits();
    if (!gstab[e ^ c]) return "golay fails on " + bits_to_string(e, 23);
  }
  const GolaySweep sweep = golay_wpec_sweep(t, 2);
  if (sweep.failures || sweep.checked != (uint64_t{1} << 23)) return "parallel sweep disagrees";
  return "";
}

std::string c4() {
  const auto stab = span_of(golay_rows());
  if (stab.size() != 2048) return "span size";
  const uint64_t all = low_mask(23);
  for (uint64_t w : stab) {
    if (parity(w)) return "odd stabilizer " + bits_to_string(w, 23);
    if (!parity(w ^ all)) return "even logical " + bits_to_string(w ^ all, 23);
  }
  return "";
}

std::string c5() {
  for (int v : {1, 2, 3}) {
    const Run r = cli("--workers 1 --max-faults " + std::to_string(v) + " verify-appendix-a");
    if (v == 3) outputs["appendix-a"] = r.out;
    std::cout << "    max_faults " << v << ": exit " << r.code << ", " << r.seconds << " s\n";
    if (r.code != 0 || r.out.find("violating 0\n") == std::string::npos) return "violations at max_faults " + std::to_string(v);
  }
  return "";
}

std::string c6() {
  const Run r = cli("--workers 1 --max-faults 3 verify-appendix-b");
  outputs["appendix-b"] = r.out;
  if (r.code != 0) return "exit " + std::to_string(r.code);
  if (r.out.find("\n6 marked, 0 harmful\n") == std::string::npos) return "summary line missing";
  const std::regex line(R"(marked (\S+) E=([IZ]{49}) f=0{21} worst_output_weight (\d+) certified)");
  int marked = 0;
  for (auto it = std::sregex_iterator(r.out.begin(), r.out.end(), line); it != std::sregex_iterator(); ++it) {
    ++marked;
    if ((*it)[1] != "(G1a=0,G1b=0,G2=1,W=2,F=0,S=0)") return "counts " + (*it)[1].str();
    const std::string e = (*it)[2];
    int nontrivial = 0;
    for (int b = 0; b < 7; ++b) {
      const std::string blk = e.substr(static_cast<size_t>(7 * b), 7);
      if (blk == "IIIIIII") continue;
      ++nontrivial;
      if (blk != "ZIIIIII" && blk != "IIIIIIZ") return "block pattern " + blk;
    }
    if (nontrivial != 2) return "pattern touches " + std::to_string(nontrivial) + " blocks";
    if (std::stoi((*it)[3]) > 3) return "output weight above 3";
  }
  if (marked != 6) return std::to_string(marked) + " marked lines";
  for (int v : {1, 2}) {
    const auto ctx = EnumerationContext::make(Ordering::Permuted, true, v, EnumerationMode::Relaxed);
    const AppendixBReport rep = run_appendix_b(*ctx, 2);
    for (const MarkedCombination& m : rep.marked) {
      if (m.worst_output_weight > v) return "v=" + std::to_string(v) + " not certified";
    }
    if (cli("--max-faults " + std::to_string(v) + " verify-appendix-b").code != 0) return "cli exit at v=" + std::to_string(v);
  }
  return "";
}

std::string c7() {
  const Run r = cli("--ordering normal --no-flags --max-faults 3 verify-appendix-a");
  if (r.code != 1) return "exit " + std::to_string(r.code);
  const std::smatch m = [&] {
    std::smatch out;
    std::regex_search(r.out, out, std::regex(R"(violating (\d+))"));
    return out;
  }();
  if (m.empty() || std::stoi(m[1]) < 1) return "no violations reported";
  std::cout << "    violating partitions: " << m[1] << "\n";
  return "";
}

std::string c8() {
  const CircuitFamily family = CircuitFamily::build(Ordering::Permuted, true);
  const LookupTable table = LookupTable::build(
      EnumerationContext::make(Ordering::Permuted, true, 3, EnumerationMode::LookupTable), 2);
  std::vector<Schedule> exhaustive{Schedule{}};
  for (int a = 0; a < 49; ++a) {
    exhaustive.push_back({0, uint64_t{1} << a, {}});
    for (int b = a + 1; b < 49; ++b) {
      exhaustive.push_back({0, uint64_t{1} << a | uint64_t{1} << b, {}});
      for (int c = b + 1; c < 49; ++c) exhaustive.push_back({0, uint64_t{1} << a | uint64_t{1} << b | uint64_t{1} << c, {}});
    }
  }
  const FtecReport ex = check_ftec_conditions(exhaustive, family, table, 3, 2);
  std::cout << "    exhaustive inputs: " << ex.trials << " trials, condition1 failures " << ex.condition1_failures << "\n";
  if (!ex.ok()) return "zero-fault input check fails\n" + ex.str();

  ScheduleSampler sampler(family, 2024);
  std::vector<Schedule> sampled;
  for (int i = 0; i < 10000; ++i) {
    const int faults = 1 + i % 3;
    sampled.push_back(sampler.draw(i % (4 - faults), faults, 10));
  }
  for (int i = 0; i < 1000; ++i) sampled.push_back(sampler.draw(4 + i % 9, 1 + i % 3, 10));
  const FtecReport rep = check_ftec_conditions(sampled, family, table, 3, 2);
  std::cout << "    sampled: " << rep.str().substr(0, rep.str().find('\n', rep.str().find("condition2")));
  std::cout << "\n";
  if (!rep.ok()) return "sampled schedules fail\n" + rep.str();
  if (rep.max_rounds > kMaxRounds || ex.max_rounds > kMaxRounds) return "round limit exceeded";
  return "";
}

std::string c9() {
  const std::pair<const char*, const char*> runs[] = {
      {"table1", "reproduce-table1"},
      {"appendix-a", "--max-faults 3 verify-appendix-a"},
      {"appendix-b", "--max-faults 3 verify-appendix-b"},
  };
  for (const auto& [key, args] : runs) {
    const Run r = cli(std::string("--workers 3 ") + args);
    if (outputs[key].empty()) return std::string(key) + " missing from the first run";
    if (r.out != outputs[key]) return std::string(key) + " output differs between worker counts";
  }
  return "";
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<std::string()>> criteria[] = {
      {"single-fault table reproduction", c1},
      {"steane centralizer split and equal-syndrome equivalence", c2},
      {"wpec soundness, steane 2^7 and golay 2^23", c3},
      {"golay stabilizer and logical weight parities", c4},
      {"fault lookup table distinguishability, permuted and flagged", c5},
      {"relaxed-condition marking, 6 marked and certified", c6},
      {"negative control, normal order without flags", c7},
      {"protocol fault-tolerance suite", c8},
      {"output determinism across worker counts", c9},
  };
  int failed = 0;
  int n = 0;
  for (const auto& [name, fn] : criteria) {
    ++n;
    const auto t0 = std::chrono::steady_clock::now();
    std::string why;
    try {
      why = fn();
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream line;
    line.precision(2);
    line << std::fixed << (why.empty() ? "PASS" : "FAIL") << " criterion " << n << ": " << name << " (" << s << " s)";
    if (!why.empty()) line << ": " << why;
    std::cout << line.str() << std::endl;
    failed += !why.empty();
  }
  std::cout << (n - failed) << "/" << n << " criteria pass\n";
  return failed ? 1 : 0;
}
