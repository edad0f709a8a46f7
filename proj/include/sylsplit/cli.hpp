#ifndef SYLSPLIT_CLI_HPP
#define SYLSPLIT_CLI_HPP

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "report.hpp"

namespace sylsplit {

namespace detail {

inline ReportFormat format_from_string(const std::string& s) {
  return s == "md" ? ReportFormat::markdown : ReportFormat::json;
}

inline std::vector<ReportRecord> example_records(const Caps& caps) {
  A6Example ex = build_a6_example(caps);
  std::vector<ReportRecord> out;
  out.push_back(make_record(ex.report.group_name, 2, "wgs", ex.report));
  SplitReport zf = verify_zf(FusionContext::from(make_setting(ex.G, 2, ex.S)), true, caps);
  out.push_back(make_record(ex.report.group_name, 2, "zf", zf));
  return out;
}

} // namespace detail

/// Command-line entry point. Returns the process exit code.
inline int run_cli(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Splitting of Z(S) over weakly closed elements for permutation groups", "sylsplit"};
  app.require_subcommand(1);

  std::string format = "json";
  std::string mode = "wgs";
  bool timing = false;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--mode", mode, "wgs, zf or all")->check(CLI::IsMember({"wgs", "zf", "all"}));
    sub->add_option("--format", format, "json or md")->check(CLI::IsMember({"json", "md"}));
    sub->add_flag("--timing", timing, "include per-record timing in JSON output");
  };

  std::string file;
  std::uint64_t prime = 0;
  auto* analyze = app.add_subcommand("analyze", "analyze one group file at one prime");
  analyze->add_option("FILE", file, "group file")->required();
  analyze->add_option("--prime", prime, "prime p")->required();
  add_common(analyze);

  std::string path;
  std::string primes = "all";
  unsigned jobs = 1;
  auto* verify = app.add_subcommand("verify-catalog", "scan every group file under PATH");
  verify->add_option("PATH", path, "catalog file or directory")->required();
  verify->add_option("--primes", primes, "all or a comma-separated list of primes");
  verify->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  add_common(verify);

  std::string example_name;
  auto* example = app.add_subcommand("example", "run a built-in example");
  example->add_option("NAME", example_name, "example name")->required()->check(CLI::IsMember({"a6"}));
  example->add_option("--format", format, "json or md")->check(CLI::IsMember({"json", "md"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 1;
  }

  try {
    const Caps caps = Caps::from_environment();
    std::vector<ReportRecord> records;
    if (analyze->parsed()) {
      if (!is_prime(prime))
        throw std::invalid_argument(std::to_string(prime) + " is not prime");
      GroupFile gf = load_group_file(file);
      PermGroup G = gf.group();
      ScanMode m = scan_mode_from_string(mode);
      if (m != ScanMode::zf)
        records.push_back(analyze_entry(gf.name, G, prime, ScanMode::wgs, caps));
      if (m != ScanMode::wgs)
        records.push_back(analyze_entry(gf.name, G, prime, ScanMode::zf, caps));
    } else if (verify->parsed()) {
      records = scan_catalog(load_catalog(path), PrimeSelection::parse(primes), scan_mode_from_string(mode), jobs,
                             caps);
    } else {
      records = detail::example_records(caps);
    }
    out << emit_report(records, detail::format_from_string(format), timing);
    for (const auto& r : records)
      if (r.verdict == Verdict::error)
        err << r.group << " p=" << r.prime << " " << r.mode << ": " << r.message << "\n";
    return exit_code_for(records);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

} // namespace sylsplit

#endif // SYLSPLIT_CLI_HPP
