#pragma once
// Command-line front end: spectrum / compare / strata / heat table emission,
// Krawtchouk tables and the odd-dimension zero scan, and the verify-paper
// subcommand running the built-in verification suite.  Exit codes: 0 success
// or equality, 1 verification criteria failed, 2 input error, 3 spectral
// divergence found.

#include <orbispec/acceptance.hpp>
#include <orbispec/io.hpp>

#include <CLI11.hpp>

#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace orbispec {

namespace cli_detail {

inline int cmd_krawtchouk(long d, long p, bool have_p, bool zeros, long scan_max,
                          bool have_scan, std::ostream& out) {
  if (have_scan) {
    for (const auto& row : odd_dimension_zero_scan(scan_max)) {
      out << row.d << ':';
      if (row.zeros.empty()) {
        out << " none";
      } else {
        for (const auto& [zp, zk] : row.zeros) out << " (" << zp << ',' << zk << ')';
      }
      out << '\n';
    }
    return 0;
  }
  if (d < 1) throw std::invalid_argument("krawtchouk: --d is required (or use --scan-odd-dims)");
  if (zeros) {
    if (!have_p) throw std::invalid_argument("krawtchouk: --zeros requires --p");
    bool first = true;
    for (long k : krawtchouk_zeros(d, p)) {
      if (!first) out << ' ';
      out << k;
      first = false;
    }
    out << '\n';
    return 0;
  }
  if (have_p) {
    out << "x\tvalue\n";
    for (long x = 0; x <= d; ++x)
      out << x << '\t' << krawtchouk(d, p, x).get_str() << '\n';
  } else {
    out << "p\tx\tvalue\n";
    for (long q = 0; q <= d; ++q)
      for (long x = 0; x <= d; ++x)
        out << q << '\t' << x << '\t' << krawtchouk(d, q, x).get_str() << '\n';
  }
  return 0;
}

inline int cmd_spectrum(const std::string& ref, long p, const std::string& cutoff,
                        const std::string& format, std::ostream& out) {
  SpectrumTable t = p_spectrum(load_spec(ref), p, parse_rat(cutoff));
  if (format == "json")
    out << spectrum_json(t).dump(2) << '\n';
  else
    out << spectrum_tsv(t);
  return 0;
}

inline int cmd_compare(const std::string& ref_a, const std::string& ref_b, long p,
                       const std::string& cutoff, std::ostream& out) {
  Rat Q = parse_rat(cutoff);
  SpectrumTable a = p_spectrum(load_spec(ref_a), p, Q);
  SpectrumTable b = p_spectrum(load_spec(ref_b), p, Q);
  SpectrumComparison cmp = compare_spectra(a, b);
  if (cmp.equal) {
    out << "EQUAL\n";
    return 0;
  }
  out << "DIVERGES at q=" << rat_string(cmp.q) << ": " << cmp.mult_a << " vs "
      << cmp.mult_b << '\n';
  return 3;
}

inline int cmd_strata(const std::string& ref, const std::string& format,
                      std::ostream& out) {
  FlatOrbifoldSpec spec = load_spec(ref);
  auto census = singular_strata(spec);
  if (format == "json")
    out << strata_json(spec, census).dump(2) << '\n';
  else
    out << strata_tsv(spec, census);
  return 0;
}

inline int cmd_heat(const std::string& ref, long p, const std::string& cutoff,
                    const std::vector<double>& ts, const std::string& format,
                    std::ostream& out) {
  FlatOrbifoldSpec spec = load_spec(ref);
  HeatReport report = heat_report(spec, p);
  if (ts.empty()) {
    if (format == "json")
      out << heat_json(report).dump(2) << '\n';
    else
      out << heat_tsv(report);
    return 0;
  }
  HeatTraceCheck check = heat_trace_check(spec, p, parse_rat(cutoff), ts);
  if (format == "json")
    out << heat_json(report, &check).dump(2) << '\n';
  else
    out << heat_tsv(report, &check);
  return 0;
}

inline int cmd_verify(bool as_json, std::ostream& out) {
  std::vector<CriterionResult> results = run_acceptance();
  bool all_pass = true;
  if (as_json) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : results) {
      j.push_back({{"index", r.index},
                   {"name", r.name},
                   {"pass", r.pass},
                   {"detail", r.detail},
                   {"seconds", r.seconds}});
      all_pass = all_pass && r.pass;
    }
    out << j.dump(2) << '\n';
  } else {
    for (const auto& r : results) {
      out << format_result_line(r) << '\n';
      all_pass = all_pass && r.pass;
    }
  }
  return all_pass ? 0 : 1;
}

}  // namespace cli_detail

// Parses and runs one command; writes tables to `out` and diagnostics to `err`.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err) {
  CLI::App app{"Exact spectra, singular strata, and heat invariants of flat orbifolds"};
  app.require_subcommand(1);

  long kr_d = 0, kr_p = 0, kr_scan = 0;
  bool kr_zeros = false;
  auto* kr = app.add_subcommand("krawtchouk", "Krawtchouk values, zero sets, and the odd-dimension zero scan");
  kr->add_option("--d", kr_d, "dimension parameter");
  auto* kr_p_opt = kr->add_option("--p", kr_p, "degree");
  kr->add_flag("--zeros", kr_zeros, "print the integral zeros of K_p^d");
  auto* kr_scan_opt = kr->add_option("--scan-odd-dims", kr_scan,
                                     "scan odd dimensions 3..MAX for interior integral zeros");

  std::string ref, ref_a, ref_b, cutoff, format = "tsv";
  long p = 0;
  std::vector<double> ts;

  auto add_format = [&format](CLI::App* sub) {
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"tsv", "json"}));
  };

  auto* sp = app.add_subcommand("spectrum", "Hodge p-spectrum table up to a rational cutoff");
  sp->add_option("--spec", ref, "spec file path or builtin:<name>")->required();
  sp->add_option("--p", p, "form degree")->required();
  sp->add_option("--cutoff", cutoff, "rational eigenvalue-parameter bound Q")->required();
  add_format(sp);

  auto* cp = app.add_subcommand("compare", "compare two p-spectra and report the first divergence");
  cp->add_option("--spec-a", ref_a, "first spec")->required();
  cp->add_option("--spec-b", ref_b, "second spec")->required();
  cp->add_option("--p", p, "form degree")->required();
  cp->add_option("--cutoff", cutoff, "rational eigenvalue-parameter bound Q")->required();

  auto* st = app.add_subcommand("strata", "singular strata census with volumes and isotropy");
  st->add_option("--spec", ref, "spec file path or builtin:<name>")->required();
  add_format(st);

  auto* ht = app.add_subcommand("heat", "leading heat-trace invariants, optionally with numeric trace checks");
  ht->add_option("--spec", ref, "spec file path or builtin:<name>")->required();
  ht->add_option("--p", p, "form degree")->required();
  ht->add_option("--cutoff", cutoff, "rational cutoff for the truncated trace")
      ->default_val("100");
  ht->add_option("--t", ts, "heat-trace evaluation time (repeatable)");
  add_format(ht);

  bool as_json = false;
  auto* vp = app.add_subcommand("verify-paper", "run the built-in verification suite");
  vp->add_flag("--json", as_json, "machine-readable report");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("orbispec");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (kr->parsed())
      return cli_detail::cmd_krawtchouk(kr_d, kr_p, kr_p_opt->count() > 0, kr_zeros,
                                        kr_scan, kr_scan_opt->count() > 0, out);
    if (sp->parsed()) return cli_detail::cmd_spectrum(ref, p, cutoff, format, out);
    if (cp->parsed()) return cli_detail::cmd_compare(ref_a, ref_b, p, cutoff, out);
    if (st->parsed()) return cli_detail::cmd_strata(ref, format, out);
    if (ht->parsed()) return cli_detail::cmd_heat(ref, p, cutoff, ts, format, out);
    if (vp->parsed()) return cli_detail::cmd_verify(as_json, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  err << "error: no command\n";
  return 2;
}

}  // namespace orbispec
