#ifndef SYLSPLIT_REPORT_HPP
#define SYLSPLIT_REPORT_HPP

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "catalog.hpp"
#include "fusion.hpp"

namespace sylsplit {

enum class ScanMode { wgs, zf, all };

inline ScanMode scan_mode_from_string(std::string_view s) {
  if (s == "wgs")
    return ScanMode::wgs;
  if (s == "zf")
    return ScanMode::zf;
  if (s == "all")
    return ScanMode::all;
  throw std::invalid_argument("unknown mode '" + std::string(s) + "'");
}

/// One (group, prime, mode) outcome.
struct ReportRecord {
  std::string group;
  std::uint64_t prime = 0;
  std::string mode = "wgs"; // "wgs" or "zf"
  std::string case_tag = "none";
  Verdict verdict = Verdict::error;
  std::vector<std::uint64_t> zs_factors;
  std::vector<std::uint64_t> w_factors;
  std::vector<std::uint64_t> kernel_factors;
  std::map<std::string, CheckOutcome> cross_checks;
  std::string message;
  std::optional<double> timing_ms;

  friend bool operator==(const ReportRecord&, const ReportRecord&) = default;
};

inline nlohmann::ordered_json to_json(const ReportRecord& r, bool with_timing = false) {
  nlohmann::ordered_json checks = nlohmann::ordered_json::object();
  for (const auto& [name, outcome] : r.cross_checks)
    checks[name] = std::string(to_string(outcome));
  nlohmann::ordered_json j;
  j["group"] = r.group;
  j["prime"] = r.prime;
  j["mode"] = r.mode;
  j["case"] = r.case_tag;
  j["verdict"] = std::string(to_string(r.verdict));
  j["zs_factors"] = r.zs_factors;
  j["w_factors"] = r.w_factors;
  j["kernel_factors"] = r.kernel_factors;
  j["cross_checks"] = checks;
  j["message"] = r.message;
  if (with_timing && r.timing_ms)
    j["timing_ms"] = *r.timing_ms;
  return j;
}

inline ReportRecord record_from_json(const nlohmann::ordered_json& j) {
  ReportRecord r;
  r.group = j.at("group").get<std::string>();
  r.prime = j.at("prime").get<std::uint64_t>();
  r.mode = j.at("mode").get<std::string>();
  r.case_tag = std::string(to_string(case_tag_from_string(j.at("case").get<std::string>())));
  r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
  r.zs_factors = j.at("zs_factors").get<std::vector<std::uint64_t>>();
  r.w_factors = j.at("w_factors").get<std::vector<std::uint64_t>>();
  r.kernel_factors = j.at("kernel_factors").get<std::vector<std::uint64_t>>();
  for (const auto& [name, value] : j.at("cross_checks").items())
    r.cross_checks[name] = check_outcome_from_string(value.get<std::string>());
  r.message = j.at("message").get<std::string>();
  if (j.contains("timing_ms"))
    r.timing_ms = j.at("timing_ms").get<double>();
  return r;
}

namespace detail {

inline std::string factors_text(const std::vector<std::uint64_t>& f) {
  std::string s = "[";
  for (std::size_t i = 0; i < f.size(); ++i)
    s += (i ? "," : "") + std::to_string(f[i]);
  return s + "]";
}

} // namespace detail

struct VerdictCounts {
  std::size_t verified = 0;
  std::size_t counterexample = 0;
  std::size_t hypothesis_not_satisfied = 0;
  std::size_t error = 0;
};

inline VerdictCounts count_verdicts(const std::vector<ReportRecord>& records) {
  VerdictCounts c;
  for (const auto& r : records)
    switch (r.verdict) {
    case Verdict::verified: ++c.verified; break;
    case Verdict::counterexample: ++c.counterexample; break;
    case Verdict::hypothesis_not_satisfied: ++c.hypothesis_not_satisfied; break;
    case Verdict::error: ++c.error; break;
    }
  return c;
}

enum class ReportFormat { json, markdown };

/// Deterministic serialization. Timing is included only on request.
inline std::string emit_report(const std::vector<ReportRecord>& records, ReportFormat format, bool with_timing = false) {
  if (format == ReportFormat::json) {
    VerdictCounts c = count_verdicts(records);
    nlohmann::ordered_json j;
    j["records"] = nlohmann::ordered_json::array();
    for (const auto& r : records)
      j["records"].push_back(to_json(r, with_timing));
    j["summary"] = {{"verified", c.verified},
                    {"counterexample", c.counterexample},
                    {"hypothesis_not_satisfied", c.hypothesis_not_satisfied},
                    {"error", c.error}};
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "| group | p | mode | case | verdict | Z(S) | W |\n";
  out << "|---|---|---|---|---|---|---|\n";
  for (const auto& r : records)
    out << "| " << r.group << " | " << r.prime << " | " << r.mode << " | " << r.case_tag << " | "
        << to_string(r.verdict) << " | " << detail::factors_text(r.zs_factors) << " | "
        << detail::factors_text(r.w_factors) << " |\n";
  return out.str();
}

inline std::vector<ReportRecord> parse_report(const std::string& json_text) {
  auto j = nlohmann::ordered_json::parse(json_text);
  std::vector<ReportRecord> out;
  for (const auto& r : j.at("records"))
    out.push_back(record_from_json(r));
  return out;
}

inline ReportRecord make_record(const std::string& group, std::uint64_t p, const std::string& mode,
                                const SplitReport& rep) {
  ReportRecord r;
  r.group = group;
  r.prime = p;
  r.mode = mode;
  r.case_tag = std::string(to_string(rep.case_tag));
  r.verdict = rep.verdict;
  r.zs_factors = rep.zs_type.invariant_factors;
  r.w_factors = rep.w_type.invariant_factors;
  r.kernel_factors = rep.kernel_type.invariant_factors;
  if (rep.verdict == Verdict::counterexample)
    r.message = "no complement to W in Z(S): " + std::to_string(rep.refutation_subgroups_scanned) +
                " subgroups meeting W trivially scanned";
  return r;
}

/// Runs one (group, prime) entry in one mode. Exceptions become error records.
inline ReportRecord analyze_entry(const std::string& name, const PermGroup& G, std::uint64_t p, ScanMode mode,
                                  const Caps& caps = default_caps()) {
  const std::string mode_name = mode == ScanMode::zf ? "zf" : "wgs";
  auto start = std::chrono::steady_clock::now();
  ReportRecord r;
  try {
    Setting st = make_setting(G, p);
    if (mode == ScanMode::zf) {
      r = make_record(name, p, mode_name, verify_zf(FusionContext::from(st), true, caps));
    } else {
      r = make_record(name, p, mode_name, verify_wgs(st, true, caps));
      CrossCheckReport cc = cross_checks(st, caps);
      r.cross_checks["zp_star"] = cc.zp_star.outcome;
      r.cross_checks["weak_closure_control"] = cc.weak_closure_control.outcome;
      r.cross_checks["quotient_naturality"] = cc.quotient_naturality.outcome;
      if (is_normal(st.S, st.G))
        r.cross_checks["normal_sylow"] = verify_normal_sylow(st).holds() ? CheckOutcome::pass : CheckOutcome::fail;
      else
        r.cross_checks["normal_sylow"] = CheckOutcome::not_applicable;
      for (const auto& [check, outcome] : r.cross_checks)
        if (outcome == CheckOutcome::fail) {
          r.verdict = Verdict::error;
          r.message = "cross-check failed: " + check;
        }
    }
  } catch (const std::exception& e) {
    r = ReportRecord{};
    r.group = name;
    r.prime = p;
    r.mode = mode_name;
    r.verdict = Verdict::error;
    r.message = e.what();
  }
  r.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

/// Primes to scan: "all" or an explicit list.
struct PrimeSelection {
  bool all = true;
  std::vector<std::uint64_t> primes;

  static PrimeSelection parse(const std::string& text) {
    if (text == "all")
      return {};
    PrimeSelection sel;
    sel.all = false;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
      if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("bad prime '" + item + "'");
      std::uint64_t p = std::stoull(item);
      if (!is_prime(p))
        throw std::invalid_argument(item + " is not prime");
      sel.primes.push_back(p);
    }
    std::sort(sel.primes.begin(), sel.primes.end());
    sel.primes.erase(std::unique(sel.primes.begin(), sel.primes.end()), sel.primes.end());
    return sel;
  }
};

/// Every (file, p, mode) with p dividing |G|, in (name, p, mode) order,
/// regardless of `jobs`.
inline std::vector<ReportRecord> scan_catalog(const std::vector<GroupFile>& catalog, const PrimeSelection& primes,
                                              ScanMode mode, unsigned jobs = 1, const Caps& caps = default_caps()) {
  struct Task {
    const GroupFile* file;
    std::size_t group_slot;
    std::uint64_t p;
    ScanMode mode;
  };
  std::vector<std::optional<PermGroup>> groups(catalog.size());
  std::vector<Task> tasks;
  std::vector<ReportRecord> records;
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    try {
      groups[i] = catalog[i].group();
    } catch (const std::exception& e) {
      ReportRecord r;
      r.group = catalog[i].name;
      r.message = e.what();
      records.push_back(r);
      continue;
    }
    for (std::uint64_t p : prime_divisors(groups[i]->order())) {
      if (!primes.all && !std::binary_search(primes.primes.begin(), primes.primes.end(), p))
        continue;
      if (mode == ScanMode::wgs || mode == ScanMode::all)
        tasks.push_back({&catalog[i], i, p, ScanMode::wgs});
      if (mode == ScanMode::zf || mode == ScanMode::all)
        tasks.push_back({&catalog[i], i, p, ScanMode::zf});
    }
  }

  std::vector<ReportRecord> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < tasks.size(); k = next++)
      results[k] = analyze_entry(tasks[k].file->name, *groups[tasks[k].group_slot], tasks[k].p, tasks[k].mode, caps);
  };
  unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(tasks.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t)
    pool.emplace_back(worker);
  worker();
  for (auto& t : pool)
    t.join();

  records.insert(records.end(), results.begin(), results.end());
  std::stable_sort(records.begin(), records.end(), [](const ReportRecord& a, const ReportRecord& b) {
    return std::tie(a.group, a.prime, a.mode) < std::tie(b.group, b.prime, b.mode);
  });
  return records;
}

/// 1 on any error, else 3 on any counterexample, else 2 on any unsatisfied
/// hypothesis, else 0.
inline int exit_code_for(const std::vector<ReportRecord>& records) {
  VerdictCounts c = count_verdicts(records);
  if (c.error)
    return 1;
  if (c.counterexample)
    return 3;
  if (c.hypothesis_not_satisfied)
    return 2;
  return 0;
}

} // namespace sylsplit

#endif // SYLSPLIT_REPORT_HPP
