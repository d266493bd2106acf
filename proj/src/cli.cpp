// Copyright 2026 The picode Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "picode/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "picode/checks.hpp"
#include "picode/code_builder.hpp"
#include "picode/fidelity_bound.hpp"
#include "picode/number_theory.hpp"
#include "picode/oracle_suite.hpp"
#include "picode/reports.hpp"

namespace picode::cli {

namespace {

struct Failure {
  int code;
  std::string reason;
};

std::string one_line(std::string s) {
  for (auto& c : s)
    if (c == '\n' || c == '\r') c = ' ';
  return s;
}

struct CodeSource {
  std::string path;
  std::vector<std::uint64_t> n;
  unsigned q = 3;
  bool legacy = false;
  bool allow_odd = false;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--code", path, "Code descriptor written by `build`");
    cmd->add_option("--n", n, "Comma-separated n_1,...,n_D")->delimiter(',');
    cmd->add_option("--q", q, "Length exponent, m = N^q");
    cmd->add_flag("--legacy", legacy, "Accept D < 3 and small parameters");
    cmd->add_flag("--allow-odd-N", allow_odd, "Accept an odd product N");
  }

  CodeParameters load() const {
    if (!path.empty()) {
      std::ifstream in(path);
      if (!in) throw Failure{kIoFailure, "IOError: cannot read " + path};
      Json doc;
      try {
        doc = Json::parse(in);
      } catch (const nlohmann::json::exception& e) {
        throw DescriptorError(std::string("DescriptorError: ") + e.what());
      }
      return parse_code_descriptor(doc);
    }
    if (n.empty()) throw Failure{kValidationFailure, "UsageError: need --code or --n/--q"};
    return validate(n, q, ValidateOptions{allow_odd, legacy});
  }
};

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file || !(file << text) || !file.flush()) throw Failure{kIoFailure, "IOError: cannot write " + path};
}

std::string join_failures(const std::vector<std::string>& failures) {
  std::string s;
  for (std::size_t i = 0; i < failures.size(); ++i) s += (i ? "; " : "") + failures[i];
  return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Permutation-invariant multi-qubit codes under amplitude damping"};
  app.require_subcommand(1);

  // build
  auto* build = app.add_subcommand("build", "Construct a code and write its descriptor");
  std::vector<std::uint64_t> build_n;
  std::uint64_t primes_from = 0;
  unsigned build_D = 3;
  unsigned build_q = 3;
  std::string build_out;
  bool build_legacy = false;
  bool build_odd = false;
  build->add_option("--n", build_n, "Comma-separated n_1,...,n_D")->delimiter(',');
  build->add_option("--primes-from", primes_from, "Use p_k, p_k+1, p_{k+1}, ... starting at this prime");
  build->add_option("--D", build_D, "Number of logical states with --primes-from");
  build->add_option("--q", build_q, "Length exponent, m = N^q");
  build->add_option("--out", build_out, "Descriptor path (stdout when omitted)");
  build->add_flag("--legacy", build_legacy, "Accept D < 3 and small parameters");
  build->add_flag("--allow-odd-N", build_odd, "Accept an odd product N");

  // fidelity
  auto* fidelity = app.add_subcommand("fidelity", "Tabulate the fidelity lower bound on a gamma grid");
  CodeSource fid_code;
  fid_code.add_to(fidelity);
  double gmin = 1e-4, gmax = 1e-2;
  std::size_t gcount = 20;
  std::string spacing = "log";
  std::vector<std::string> gamma_points;
  bool discounted = false;
  std::string fid_out;
  fidelity->add_option("--gamma-min", gmin, "Smallest gamma (inclusive)");
  fidelity->add_option("--gamma-max", gmax, "Largest gamma (inclusive)");
  fidelity->add_option("--count", gcount, "Number of grid points");
  fidelity->add_option("--spacing", spacing, "log or linear")->check(CLI::IsMember({"log", "linear"}));
  fidelity->add_option("--gamma", gamma_points, "Explicit gamma values instead of a grid")->delimiter(',');
  fidelity->add_flag("--discounted", discounted, "Add the Gram-corrected bound column");
  fidelity->add_option("--out", fid_out, "CSV path (stdout when omitted)");

  auto* taylor = app.add_subcommand("taylor", "Compare extracted Taylor coefficients with the closed forms");
  CodeSource taylor_code;
  taylor_code.add_to(taylor);
  std::string taylor_out;
  taylor->add_option("--out", taylor_out, "Report path (stdout when omitted)");

  auto* check = app.add_subcommand("check", "Orthogonality and Diophantine analysis");
  CodeSource check_code_src;
  check_code_src.add_to(check);
  std::string check_out;
  check->add_option("--out", check_out, "Report path (stdout when omitted)");

  auto* oracle_cmd = app.add_subcommand("oracle", "Dense state-vector validation at small m");
  unsigned oracle_m = 8;
  double oracle_gamma = 0.1;
  std::uint64_t oracle_seed = 0;
  std::string oracle_out;
  oracle_cmd->add_option("--m", oracle_m, "Qubit count (<= 14)");
  oracle_cmd->add_option("--gamma", oracle_gamma, "Damping rate in (0, 1)");
  oracle_cmd->add_option("--seed", oracle_seed, "Seed for random states and permutations")->required();
  oracle_cmd->add_option("--out", oracle_out, "Report path (stdout when omitted)");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
      out << app.help();
      return kSuccess;
    } catch (const CLI::ParseError& e) {
      throw Failure{kValidationFailure, "UsageError: " + std::string(e.what())};
    }

    if (*build) {
      CodeParameters params;
      if (primes_from != 0) {
        if (!build_n.empty()) throw Failure{kValidationFailure, "UsageError: --n and --primes-from are exclusive"};
        const auto seq = build_coprime_sequence(prime_index(primes_from), build_D);
        params = validate(seq.values, build_q, ValidateOptions{build_odd, build_legacy || build_D < 3});
      } else {
        if (build_n.empty()) throw Failure{kValidationFailure, "UsageError: need --n or --primes-from"};
        params = validate(build_n, build_q, ValidateOptions{build_odd, build_legacy});
      }
      const std::string descriptor = code_descriptor(params).dump(2) + "\n";
      if (build_out.empty()) {
        out << descriptor;
      } else {
        emit(descriptor, build_out, out);
        const GramMatrix gram = gram_matrix(params);
        out << "N=" << params.N << "\n";
        out << "g=";
        for (std::size_t i = 0; i < params.g.size(); ++i) out << (i ? "," : "") << params.g[i];
        out << "\nm=" << params.m << "\n";
        out << "gram_max_off_diagonal=" << gram.max_off_diagonal.to_string() << "\n";
        for (std::size_t i = 0; i < params.D(); ++i)
          for (std::size_t j = i + 1; j < params.D(); ++j)
            out << "gram(" << i + 1 << "," << j + 1 << ")=" << gram.entries[i][j].to_string() << "\n";
      }
      return kSuccess;
    }

    if (*fidelity) {
      const CodeParameters params = fid_code.load();
      std::vector<BigRational> grid;
      if (!gamma_points.empty()) {
        for (const auto& g : gamma_points) grid.push_back(parse_rational(g));
      } else {
        grid = gamma_grid(gmin, gmax, gcount, spacing == "log");
      }
      const FidelityReport report = fidelity_lower_bound(params, grid);
      emit(fidelity_csv(report, discounted), fid_out, out);
      return kSuccess;
    }

    if (*taylor) {
      const TaylorReport report = taylor_report(taylor_code.load());
      emit(taylor_json(report).dump(2) + "\n", taylor_out, out);
      if (!report.passed()) throw Failure{kCheckFailure, "CheckFailed: " + join_failures(report.failures)};
      return kSuccess;
    }

    if (*check) {
      const CodeCheckReport report = check_code(check_code_src.load());
      emit(check_json(report).dump(2) + "\n", check_out, out);
      if (!report.passed()) throw Failure{kCheckFailure, "CheckFailed: " + join_failures(report.failures)};
      return kSuccess;
    }

    if (*oracle_cmd) {
      const oracle::OracleReport report = oracle::run_oracle_suite(oracle_m, oracle_gamma, oracle_seed);
      emit(oracle_json(report).dump(2) + "\n", oracle_out, out);
      if (!report.all_passed()) {
        std::vector<std::string> names;
        for (const auto& c : report.checks)
          if (!c.passed()) names.push_back(c.name);
        throw Failure{kCheckFailure, "CheckFailed: " + join_failures(names)};
      }
      return kSuccess;
    }
    throw Failure{kValidationFailure, "UsageError: no command"};
  } catch (const Failure& f) {
    err << "error: " << one_line(f.reason) << "\n";
    return f.code;
  } catch (const ValidationError& e) {
    err << "error: " << one_line(e.what()) << "\n";
    return kValidationFailure;
  } catch (const std::invalid_argument& e) {
    // GridOutOfRange, DescriptorError, TooLarge, malformed numbers.
    const std::string what = e.what();
    err << "error: " << one_line(what.find(':') == std::string::npos ? "InvalidArgument: " + what : what) << "\n";
    return kValidationFailure;
  } catch (const std::domain_error& e) {
    err << "error: DomainError: " << one_line(e.what()) << "\n";
    return kValidationFailure;
  } catch (const std::exception& e) {
    err << "error: Unexpected: " << one_line(e.what()) << "\n";
    return kUnexpected;
  }
}

}  // namespace picode::cli
