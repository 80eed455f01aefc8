// Copyright 2026 The phasepovm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// phasepovm command-line front end.
//
// Exit codes: 0 success (all residuals within tolerance), 1 usage or input
// error, 2 verification failure.

#pragma once

#include <cstdint>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "phasepovm/phasepovm.hpp"

namespace phasepovm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerification = 2;

struct RunConfig {
  std::string command;
  std::size_t M = 0;
  std::optional<double> phi;
  std::string state_file;
  std::string netlist_file;
  std::string out;
  std::string format = "json";
  std::string scheme = "direct";
  std::string method = "closed";
  double tolerance = tolerance::kCompare;
  std::uint64_t seed = kDefaultSeed;
  long long steps = 360;
  std::size_t samples = 100;
  bool verify = false;
};

/// Usage problems detected after parsing (bad M, missing file, ...).
class UsageError : public Error {
 public:
  using Error::Error;
};

namespace detail {

inline std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

inline std::string fixed(double x, int digits = 6) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

/// Summary-line value: 12 significant digits, so 2/M prints as 0.25.
inline std::string general(double x) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

inline std::string complex_str(Complex z) {
  // Round first so tiny negatives do not print as "-0.000000".
  auto clean = [](double x) { return std::round(x * 1e6) / 1e6 + 0.0; };
  char buf[64];
  std::snprintf(buf, sizeof buf, "%+.6f%+.6fi", clean(z.real()), clean(z.imag()));
  return buf;
}

class Session {
 public:
  Session(const RunConfig& cfg, std::ostream& out) : cfg_(cfg), out_(out) {}

  /// Data goes to --out when given, otherwise to stdout after the summary.
  void emit(const std::string& contents) {
    if (cfg_.out.empty())
      out_ << contents;
    else {
      io::write_file(cfg_.out, contents);
      out_ << "wrote " << cfg_.out << '\n';
    }
  }

  void emit_to(const std::string& path, const std::string& contents) {
    io::write_file(path, contents);
    out_ << "wrote " << path << '\n';
  }

  bool json() const { return cfg_.format == "json"; }

  QubitState state() const {
    if (!cfg_.state_file.empty()) {
      if (cfg_.phi) throw UsageError("--phi and --state-file are mutually exclusive");
      return io::state_from_json(io::read_json_file(cfg_.state_file));
    }
    return QubitState::from_phase(cfg_.phi.value_or(0.0));
  }

  std::string state_label() const {
    if (!cfg_.state_file.empty()) return "state-file " + cfg_.state_file;
    return "phi=" + io::format_double(cfg_.phi.value_or(0.0));
  }

  const RunConfig& cfg() const { return cfg_; }
  std::ostream& out() { return out_; }

 private:
  const RunConfig& cfg_;
  std::ostream& out_;
};

inline nlohmann::json report_json(const NaimarkReport& r) {
  return {{"max_orthogonality_residual", r.max_orthogonality_residual},
          {"max_norm_residual", r.max_norm_residual},
          {"max_povm_block_residual", r.max_povm_block_residual},
          {"unitarity_residual", r.unitarity_residual},
          {"max_statistics_residual", r.max_statistics_residual},
          {"random_states", r.random_states},
          {"passed", r.passed()}};
}

inline void print_report(std::ostream& out, const std::string& label, const NaimarkReport& r) {
  out << label << ":\n"
      << "  orthogonality residual  " << sci(r.max_orthogonality_residual) << '\n'
      << "  norm residual           " << sci(r.max_norm_residual) << '\n'
      << "  POVM block residual     " << sci(r.max_povm_block_residual) << '\n'
      << "  unitarity residual      " << sci(r.unitarity_residual) << '\n'
      << "  statistics residual     " << sci(r.max_statistics_residual) << " (" << r.random_states
      << " random states)\n";
}

inline const char* verdict(bool ok) { return ok ? "PASS" : "FAIL"; }

}  // namespace detail

// Commands ------------------------------------------------------------------

inline int cmd_povm(detail::Session& s) {
  const auto& cfg = s.cfg();
  const PhasePovm povm(cfg.M);
  auto& out = s.out();
  out << "phase POVM, M=" << cfg.M << '\n';
  out << "k  Pi_k = [[a, b], [conj(b), d]]\n";
  for (std::size_t k = 0; k < cfg.M; ++k) {
    const auto& e = povm.element(k);
    out << k << "  a=" << detail::fixed(e(0, 0).real()) << "  b=" << detail::complex_str(e(0, 1))
        << "  d=" << detail::fixed(e(1, 1).real()) << '\n';
  }
  out << "completeness residual " << detail::sci(identity_residual(povm.sum())) << '\n';

  nlohmann::json doc{{"M", cfg.M}};
  nlohmann::json elements = nlohmann::json::array();
  for (const auto& e : povm.elements()) elements.push_back(io::matrix_to_json(e));
  doc["elements"] = std::move(elements);

  if (cfg.phi) {
    const auto dist = analytic_phase_distribution(cfg.M, *cfg.phi);
    out << "distribution for phi=" << io::format_double(*cfg.phi) << '\n';
    for (std::size_t k = 0; k < cfg.M; ++k)
      out << "P(" << k << ") = " << io::format_double(dist.probabilities[k]) << '\n';
    doc["phi"] = *cfg.phi;
    doc["probabilities"] = dist.probabilities;
    if (!cfg.out.empty()) s.emit(s.json() ? io::dump(doc) : io::distribution_to_csv(dist));
  } else if (!cfg.out.empty()) {
    if (!s.json()) throw UsageError("povm: CSV output needs --phi (it holds the distribution)");
    s.emit(io::dump(doc));
  }
  return kExitOk;
}

inline int cmd_extend(detail::Session& s) {
  const auto& cfg = s.cfg();
  auto& out = s.out();
  const auto closed = build_extension_closed(cfg.M);
  const auto recursive = build_extension_recursive(cfg.M);
  const auto rc = verify_naimark(closed, cfg.tolerance, cfg.seed);
  const auto rr = verify_naimark(recursive, cfg.tolerance, cfg.seed);
  const double diff = max_abs_diff(closed.matrix(), recursive.matrix());

  out << "Naimark extension, M=" << cfg.M << " (seed " << cfg.seed << ")\n";
  detail::print_report(out, "closed form", rc);
  detail::print_report(out, "recursive", rr);
  out << "max |closed - recursive| " << detail::sci(diff) << '\n';
  const bool ok = rc.passed() && rr.passed() && diff <= cfg.tolerance;
  out << detail::verdict(ok) << " (tolerance " << detail::sci(cfg.tolerance) << ")\n";

  if (s.json()) {
    nlohmann::json doc{{"M", cfg.M},
                       {"seed", cfg.seed},
                       {"tolerance", cfg.tolerance},
                       {"column_order", closed.column_order()},
                       {"closed_form", io::matrix_to_json(closed.matrix())},
                       {"recursive", io::matrix_to_json(recursive.matrix())},
                       {"report",
                        {{"closed_form", detail::report_json(rc)},
                         {"recursive", detail::report_json(rr)},
                         {"max_difference", diff}}}};
    s.emit(io::dump(doc));
  } else if (cfg.out.empty()) {
    out << "# closed_form\n" << io::matrix_to_csv(closed.matrix());
    out << "# recursive\n" << io::matrix_to_csv(recursive.matrix());
  } else {
    std::filesystem::path base(cfg.out);
    s.emit_to(std::filesystem::path(base).replace_extension(".closed.csv").string(),
              io::matrix_to_csv(closed.matrix()));
    s.emit_to(std::filesystem::path(base).replace_extension(".recursive.csv").string(),
              io::matrix_to_csv(recursive.matrix()));
  }
  return ok ? kExitOk : kExitVerification;
}

inline int cmd_compile(detail::Session& s) {
  const auto& cfg = s.cfg();
  auto& out = s.out();
  const auto ext = build_extension_closed(cfg.M);
  Netlist n;
  if (cfg.method == "closed")
    n = decompose_closed(cfg.M);
  else
    n = decompose_by_elimination(ext);

  out << "netlist for Z^dagger, M=" << cfg.M << ", method " << cfg.method << ": " << n.elements.size()
      << " elements\n";
  bool ok = true;
  nlohmann::json doc = io::netlist_to_json(n);
  if (cfg.verify) {
    const double residual = round_trip_residual(n, ext.matrix());
    ok = residual <= cfg.tolerance;
    out << "round trip |N Z - I| " << detail::sci(residual) << "  " << detail::verdict(ok) << '\n';
  }
  s.emit(s.json() ? io::dump(doc) : io::netlist_to_csv(n));
  return ok ? kExitOk : kExitVerification;
}

inline int cmd_simulate(detail::Session& s) {
  const auto& cfg = s.cfg();
  auto& out = s.out();
  const auto rho = s.state();
  const PhasePovm povm(cfg.M);
  const auto analytic = povm_distribution(povm, rho);

  if (!cfg.netlist_file.empty()) {
    const auto n = io::netlist_from_json(io::read_json_file(cfg.netlist_file));
    if (n.M != cfg.M) throw UsageError("netlist M does not match --M");
    const auto dist = simulate_netlist(n, rho);
    const double dev = max_abs_diff(dist, analytic);
    out << "netlist " << cfg.netlist_file << ", M=" << cfg.M << ", " << s.state_label() << '\n';
    out << "max |netlist - POVM| " << detail::sci(dev) << '\n';
    s.emit(s.json() ? io::dump(io::distribution_to_json(dist)) : io::distribution_to_csv(dist));
    return kExitOk;
  }

  if (cfg.scheme == "direct") {
    const auto dist = simulate_direct(build_direct_scheme(cfg.M), rho);
    out << "direct scheme, M=" << cfg.M << ", " << s.state_label() << '\n';
    out << "max |direct - POVM| " << detail::sci(max_abs_diff(dist, analytic)) << '\n';
    s.emit(s.json() ? io::dump(io::distribution_to_json(dist)) : io::distribution_to_csv(dist));
    return kExitOk;
  }
  if (cfg.scheme == "folded") {
    const auto slots = simulate_folded(cfg.M, rho);
    out << "folded scheme, M=" << cfg.M << ", " << s.state_label() << ", " << slots.slots.size()
        << " time slots\n";
    out << "max |folded - POVM| " << detail::sci(max_abs_diff(slots.flatten(), analytic)) << '\n';
    s.emit(s.json() ? io::dump(io::slots_to_json(slots)) : io::slots_to_csv(slots));
    return kExitOk;
  }

  // both
  const auto direct = simulate_direct(build_direct_scheme(cfg.M), rho);
  const auto folded = simulate_folded(cfg.M, rho);
  const auto flat = folded.flatten();
  const double discrepancy = max_abs_diff(direct, flat);
  const bool ok = discrepancy <= cfg.tolerance;
  out << "direct and folded schemes, M=" << cfg.M << ", " << s.state_label() << '\n';
  out << "max |direct - POVM| " << detail::sci(max_abs_diff(direct, analytic)) << '\n';
  out << "max discrepancy |direct - folded| " << detail::sci(discrepancy) << "  " << detail::verdict(ok)
      << '\n';
  if (s.json()) {
    nlohmann::json doc{{"M", cfg.M},
                       {"direct", io::distribution_to_json(direct)},
                       {"folded", io::slots_to_json(folded)},
                       {"max_discrepancy", discrepancy}};
    s.emit(io::dump(doc));
  } else {
    std::string csv = "k,direct,folded\n";
    for (std::size_t k = 0; k < cfg.M; ++k)
      csv += std::to_string(k) + ',' + io::format_double(direct.probabilities[k]) + ',' +
             io::format_double(flat.probabilities[k]) + '\n';
    s.emit(csv);
  }
  return ok ? kExitOk : kExitVerification;
}

inline int cmd_sweep(detail::Session& s) {
  const auto& cfg = s.cfg();
  auto& out = s.out();
  if (cfg.steps <= 0) throw UsageError("--steps must be a positive integer");
  const auto steps = static_cast<std::size_t>(cfg.steps);
  const auto scheme = build_direct_scheme(cfg.M);

  std::vector<double> phis(steps);
  std::vector<OutcomeDistribution> rows(steps);
  double max_dev = 0;
  double max_row_error = 0;
  for (std::size_t i = 0; i < steps; ++i) {
    phis[i] = 2 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(steps);
    rows[i] = simulate_direct(scheme, QubitState::from_phase(phis[i]));
    max_dev = std::max(max_dev, max_abs_diff(rows[i], analytic_phase_distribution(cfg.M, phis[i])));
    max_row_error = std::max(max_row_error, std::abs(rows[i].total() - 1));
  }
  const double pg = guessing_probability(cfg.M);
  const bool ok = max_dev <= cfg.tolerance && max_row_error <= cfg.tolerance;

  out << "phi sweep, M=" << cfg.M << ", " << steps << " points over [0, 2pi), direct scheme\n";
  out << "max |simulated - analytic| " << detail::sci(max_dev) << "  max |row sum - 1| "
      << detail::sci(max_row_error) << "  " << detail::verdict(ok) << '\n';
  out << "guessing probability (uniform prior 1/M) = " << detail::general(pg) << '\n';

  if (s.json()) {
    nlohmann::json probs = nlohmann::json::array();
    for (const auto& r : rows) probs.push_back(r.probabilities);
    s.emit(io::dump({{"M", cfg.M},
                     {"phi", phis},
                     {"probabilities", std::move(probs)},
                     {"guessing_probability", pg}}));
  } else {
    std::string csv = "phi";
    for (std::size_t k = 0; k < cfg.M; ++k) csv += ",p_" + std::to_string(k);
    csv += '\n';
    for (std::size_t i = 0; i < steps; ++i) {
      csv += io::format_double(phis[i]);
      for (double p : rows[i].probabilities) csv += ',' + io::format_double(p);
      csv += '\n';
    }
    s.emit(csv);
  }
  return ok ? kExitOk : kExitVerification;
}

inline int cmd_compare(detail::Session& s) {
  const auto& cfg = s.cfg();
  auto& out = s.out();
  const auto rho = s.state();
  const PhasePovm povm(cfg.M);
  const auto ext = build_extension_closed(cfg.M);

  const auto analytic = povm_distribution(povm, rho);
  OutcomeDistribution naimark{cfg.M, std::vector<double>(cfg.M)};
  for (std::size_t k = 0; k < cfg.M; ++k) naimark.probabilities[k] = extended_outcome_probability(ext, k, rho);
  const auto netlist = simulate_netlist(decompose_closed(cfg.M), rho);
  const auto direct = simulate_direct(build_direct_scheme(cfg.M), rho);
  const auto folded = simulate_folded(cfg.M, rho).flatten();

  double worst = std::max({max_abs_diff(naimark, analytic), max_abs_diff(netlist, analytic),
                           max_abs_diff(direct, analytic)});
  worst = std::max(worst, max_abs_diff(folded, analytic));
  const bool ok = worst <= cfg.tolerance;

  out << "outcome statistics, M=" << cfg.M << ", " << s.state_label() << '\n';
  out << "k  povm  naimark  netlist  direct  folded\n";
  for (std::size_t k = 0; k < cfg.M; ++k) {
    out << k << "  " << detail::fixed(analytic.probabilities[k], 12) << "  "
        << detail::fixed(naimark.probabilities[k], 12) << "  " << detail::fixed(netlist.probabilities[k], 12)
        << "  " << detail::fixed(direct.probabilities[k], 12) << "  "
        << detail::fixed(folded.probabilities[k], 12) << '\n';
  }
  out << "max discrepancy " << detail::sci(worst) << "  " << detail::verdict(ok) << '\n';

  if (!cfg.out.empty()) {
    if (s.json()) {
      nlohmann::json doc{{"M", cfg.M},
                         {"povm", analytic.probabilities},
                         {"naimark", naimark.probabilities},
                         {"netlist", netlist.probabilities},
                         {"direct", direct.probabilities},
                         {"max_discrepancy", worst}};
      doc["folded"] = folded.probabilities;
      s.emit(io::dump(doc));
    } else {
      std::string csv = std::string("k,povm,naimark,netlist,direct,folded\n");
      for (std::size_t k = 0; k < cfg.M; ++k) {
        csv += std::to_string(k) + ',' + io::format_double(analytic.probabilities[k]) + ',' +
               io::format_double(naimark.probabilities[k]) + ',' + io::format_double(netlist.probabilities[k]) +
               ',' + io::format_double(direct.probabilities[k]) + ',' + io::format_double(folded.probabilities[k]) +
               '\n';
      }
      s.emit(csv);
    }
  }
  return ok ? kExitOk : kExitVerification;
}

/// End-to-end check of every pipeline stage for one M with seeded random states.
inline int cmd_verify(detail::Session& s) {
  const auto& cfg = s.cfg();
  auto& out = s.out();
  const std::size_t m = cfg.M;
  nlohmann::json checks = nlohmann::json::array();
  bool all_ok = true;
  auto record = [&](const std::string& name, double value, double tol) {
    const bool ok = value <= tol;
    all_ok = all_ok && ok;
    out << detail::verdict(ok) << "  " << name << "  " << detail::sci(value) << " (tol " << detail::sci(tol)
        << ")\n";
    checks.push_back({{"check", name}, {"value", value}, {"tolerance", tol}, {"passed", ok}});
  };

  out << "pipeline verification, M=" << m << ", seed " << cfg.seed << ", " << cfg.samples
      << " random states\n";
  const auto closed = build_extension_closed(m);
  const auto recursive = build_extension_recursive(m);
  record("naimark closed-form residuals", verify_naimark(closed, cfg.tolerance, cfg.seed).worst(), cfg.tolerance);
  record("naimark recursive residuals", verify_naimark(recursive, cfg.tolerance, cfg.seed).worst(),
         cfg.tolerance);
  record("recursive vs closed form", max_abs_diff(closed.matrix(), recursive.matrix()), cfg.tolerance);

  const auto netlist = decompose_closed(m);
  record("netlist round trip |N Z - I|", round_trip_residual(netlist, closed.matrix()), std::max(cfg.tolerance, 1e-9));
  const auto eliminated = decompose_by_elimination(closed);
  record("elimination vs closed netlist", netlists_equal(netlist, eliminated, cfg.tolerance) ? 0.0 : 1.0,
         cfg.tolerance);

  const auto scheme = build_direct_scheme(m);
  record("interferometer vs netlist", max_abs_diff(interferometer_matrix(scheme), evaluate_netlist(netlist)),
         cfg.tolerance);

  const PhasePovm povm(m);
  Rng rng(cfg.seed);
  double direct_dev = 0;
  double folded_dev = 0;
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    const auto rho = i % 2 == 0 ? random_pure_state(rng) : random_mixed_state(rng);
    const auto analytic = povm_distribution(povm, rho);
    const auto direct = simulate_direct(scheme, rho);
    direct_dev = std::max(direct_dev, max_abs_diff(direct, analytic));
    folded_dev = std::max(folded_dev, max_abs_diff(simulate_folded(m, rho).flatten(), direct));
  }
  record("direct scheme vs POVM", direct_dev, cfg.tolerance);
  record("folded vs direct", folded_dev, cfg.tolerance);
  out << (all_ok ? "all checks passed" : "verification FAILED") << '\n';

  if (!cfg.out.empty()) {
    nlohmann::json doc{{"M", m},
                       {"seed", cfg.seed},
                       {"samples", cfg.samples},
                       {"tolerance", cfg.tolerance},
                       {"checks", std::move(checks)},
                       {"passed", all_ok}};
    s.emit(io::dump(doc));
  }
  return all_ok ? kExitOk : kExitVerification;
}

// Entry point -----------------------------------------------------------------

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Phase POVM, Naimark extension, Givens compiler and single-photon scheme simulator",
               "phasepovm"};
  app.require_subcommand(1);

  struct CommandInfo {
    const char* name;
    const char* help;
  };
  const std::vector<CommandInfo> commands{
      {"povm", "print the POVM elements and, with --phi, the analytic distribution"},
      {"extend", "build the Naimark extension (closed form and recursive) and check it"},
      {"verify", "run every pipeline check with seeded random states"},
      {"compile", "factorise Z^dagger into a Givens/phase netlist"},
      {"simulate", "simulate the direct and/or folded detection scheme"},
      {"sweep", "tabulate P(k|phi) over a phase grid"},
      {"compare", "compare POVM, extension, netlist and scheme statistics for one state"},
  };

  auto check_power_of_two = CLI::Validator(
      [](std::string& v) -> std::string {
        try {
          std::size_t pos = 0;
          const auto m = std::stoull(v, &pos);
          if (pos != v.size()) return "M must be a power of 2";
          require_outcome_count(static_cast<std::size_t>(m));
        } catch (const DomainError& e) {
          return e.what();
        } catch (const std::exception&) {
          return "M must be a power of 2";
        }
        return {};
      },
      "POWER_OF_TWO");

  for (const auto& info : commands) {
    auto* sub = app.add_subcommand(info.name, info.help);
    sub->callback([&cfg, name = std::string(info.name)] { cfg.command = name; });
    sub->add_option("--M", cfg.M, "number of outcomes (power of 2)")->required()->check(check_power_of_two);
    sub->add_option("--phi", cfg.phi, "phase of (|0> + e^{i phi}|1>)/sqrt2, radians");
    sub->add_option("--state-file", cfg.state_file, "JSON 2x2 density matrix [[[re,im],...],...]");
    sub->add_option("--out", cfg.out, "output file (default: stdout)");
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--tolerance", cfg.tolerance, "verification tolerance")
        ->check(CLI::PositiveNumber);
    sub->add_option("--seed", cfg.seed, "seed for randomized verification");
    if (std::string(info.name) == "simulate") {
      sub->add_option("--scheme", cfg.scheme, "detection scheme")
          ->check(CLI::IsMember({"direct", "folded", "both"}));
      sub->add_option("--netlist", cfg.netlist_file, "simulate a netlist JSON file instead of a scheme");
    }
    if (std::string(info.name) == "sweep") sub->add_option("--steps", cfg.steps, "grid points over [0, 2pi)");
    if (std::string(info.name) == "compile") {
      sub->add_flag("--verify", cfg.verify, "multiply the netlist by Z and report the residual");
      sub->add_option("--method", cfg.method, "factorisation route")
          ->check(CLI::IsMember({"closed", "elimination"}));
    }
    if (std::string(info.name) == "verify")
      sub->add_option("--samples", cfg.samples, "number of random states")->check(CLI::PositiveNumber);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    detail::Session session(cfg, out);
    if (cfg.command == "povm") return cmd_povm(session);
    if (cfg.command == "extend") return cmd_extend(session);
    if (cfg.command == "verify") return cmd_verify(session);
    if (cfg.command == "compile") return cmd_compile(session);
    if (cfg.command == "simulate") return cmd_simulate(session);
    if (cfg.command == "sweep") return cmd_sweep(session);
    if (cfg.command == "compare") return cmd_compare(session);
    err << "error: unknown command\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "verification failure: " << e.what() << '\n';
    return kExitVerification;
  }
}

}  // namespace phasepovm::cli
