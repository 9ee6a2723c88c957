// Copyright 2026 The focknc Authors
// SPDX-License-Identifier: Apache-2.0
//
// focknc command-line front end.
//
// Exit codes: 0 success, 2 usage error, 3 numeric failure, 4 I/O failure,
// 5 reference-table mismatch.

#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"
#include "errors.hpp"
#include "presets.hpp"

namespace {

using namespace focknc;
using namespace focknc::cli;

const std::map<std::string, ShmNormalization> kNormNames = {
    {"gaussian", ShmNormalization::gaussian},
    {"variance-power", ShmNormalization::variance_power},
};

void add_state_flag(CLI::App* cmd, std::string& state, bool required) {
  auto* o = cmd->add_option(
      "--state", state,
      "state as family:key=value,... (families: gbs, nbs, pacs, hs, "
      "coherent, fock, binomial)");
  if (required) o->required();
}

void add_eps_flag(CLI::App* cmd, double& eps) {
  cmd->add_option("--trunc-eps", eps,
                  "tail probability mass dropped when truncating "
                  "infinite-support states")
      ->capture_default_str();
}

void add_witness_flags(CLI::App* cmd, std::vector<std::uint32_t>& hoa,
                       std::vector<std::uint32_t>& hosps,
                       std::vector<std::uint32_t>* hos) {
  cmd->add_option("--hoa", hoa, "antibunching order l for d(l) (repeatable)");
  cmd->add_option("--hosps", hosps,
                  "sub-Poissonian order l for d_h(l) (repeatable)");
  if (hos)
    cmd->add_option("--hos", *hos,
                    "squeezing moment order n for S(n), even (repeatable)");
}

void add_norm_flag(CLI::App* cmd, ShmNormalization& norm) {
  cmd->add_option("--shm-norm", norm,
                  "squeezing boundary moment: gaussian = (n-1)!!(1/2)^(n/2), "
                  "variance-power = (1/2)^(n/2)")
      ->transform(CLI::CheckedTransformer(kNormNames, CLI::ignore_case))
      ->default_str("gaussian");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "higher-order nonclassicality witnesses (antibunching, sub-Poissonian "
      "statistics, Hong-Mandel squeezing) for single-mode Fock-space states"};
  app.set_version_flag("--version", "focknc 1.0.0");
  app.require_subcommand(1);
  app.footer(
      "examples:\n"
      "  focknc witness --state gbs:alpha=5,beta=5,N=5 --hoa 3 --hosps 3 --hos 4\n"
      "  focknc sweep --preset fig1 --out fig1.csv\n"
      "  focknc sweep --state nbs:eta=0.3,M=20 --vary eta --from 0.05 --to 0.95 \\\n"
      "               --steps 181 --hos 4 --out nbs.csv\n"
      "  focknc table1\n"
      "  focknc mc --state gbs:alpha=5,beta=5,N=5 --hoa 3 --shots 1000000 --seed 7\n"
      "  focknc dump-state --state pacs:alpha=0.4,m=3");

  WitnessOptions wopt;
  auto* witness = app.add_subcommand(
      "witness", "compute witness values for one state (CSV to stdout)");
  add_state_flag(witness, wopt.state, /*required=*/true);
  add_witness_flags(witness, wopt.hoa, wopt.hosps, &wopt.hos);
  add_eps_flag(witness, wopt.trunc_eps);
  witness->add_option("--max-order", wopt.max_order,
                      "largest normally-ordered moment order allowed")
      ->capture_default_str();
  add_norm_flag(witness, wopt.norm);
  witness->add_option("--out", wopt.out, "write CSV here instead of stdout");

  SweepOptions sopt;
  std::string preset_name;
  std::string presets_file = "presets/figures.cfg";
  auto* sweep = app.add_subcommand(
      "sweep",
      "sweep one state parameter and tabulate witnesses (zero crossings are "
      "reported on stderr)");
  add_state_flag(sweep, sopt.state, /*required=*/false);
  sweep->add_option("--vary", sopt.vary, "parameter to sweep");
  sweep->add_option("--from", sopt.from, "sweep start");
  sweep->add_option("--to", sopt.to, "sweep end");
  sweep->add_option("--steps", sopt.steps,
                    "grid points (integer parameters sweep every integer in "
                    "range instead)")
      ->capture_default_str();
  add_witness_flags(sweep, sopt.hoa, sopt.hosps, &sopt.hos);
  add_eps_flag(sweep, sopt.trunc_eps);
  sweep->add_option("--max-order", sopt.max_order)->capture_default_str();
  add_norm_flag(sweep, sopt.norm);
  sweep->add_option("--out", sopt.out, "write CSV here instead of stdout");
  sweep->add_option("--preset", preset_name,
                    "take sweep settings from a named preset section; "
                    "explicit flags override preset values");
  sweep->add_option("--presets-file", presets_file, "preset file location")
      ->capture_default_str();

  Table1Options topt;
  auto* table1 = app.add_subcommand(
      "table1",
      "recompute the built-in reference table of witness values and compare "
      "(exit 5 on mismatch)");
  add_eps_flag(table1, topt.trunc_eps);
  table1->add_option("--strict", topt.strict,
                     "pass entries only when the relative deviation is below "
                     "this, ignoring the printed-digits rules");
  table1->add_option("--out", topt.out, "also write the comparison as CSV");

  McOptions mopt;
  auto* mc = app.add_subcommand(
      "mc",
      "Monte-Carlo photon-counting estimates of the number-basis witnesses");
  add_state_flag(mc, mopt.state, /*required=*/true);
  add_witness_flags(mc, mopt.hoa, mopt.hosps, nullptr);
  mc->add_option("--shots", mopt.shots, "photon-number samples to draw")
      ->capture_default_str();
  mc->add_option("--seed", mopt.seed, "generator seed (mt19937_64)")->required();
  mc->add_option("--resamples", mopt.resamples,
                 "bootstrap resamples for the standard error")
      ->capture_default_str();
  add_eps_flag(mc, mopt.trunc_eps);
  mc->add_option("--out", mopt.out, "write CSV here instead of stdout");

  DumpStateOptions dopt;
  auto* dump = app.add_subcommand(
      "dump-state", "print the truncated amplitude vector as CSV");
  add_state_flag(dump, dopt.state, /*required=*/true);
  add_eps_flag(dump, dopt.trunc_eps);
  dump->add_option("--out", dopt.out, "write CSV here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (witness->parsed()) return run_witness(wopt);
    if (sweep->parsed()) {
      if (sweep->count("--preset") > 0) {
        const auto presets = load_presets(presets_file);
        const auto it = presets.find(preset_name);
        if (it == presets.end()) {
          std::string known;
          for (const auto& [name, unused] : presets)
            known += (known.empty() ? "" : ", ") + name;
          throw std::invalid_argument("unknown preset '" + preset_name +
                                      "' (available: " + known + ")");
        }
        const Preset& p = it->second;
        if (sweep->count("--state") == 0) sopt.state = p.state;
        if (sweep->count("--vary") == 0) sopt.vary = p.vary;
        if (sweep->count("--from") == 0) sopt.from = p.from;
        if (sweep->count("--to") == 0) sopt.to = p.to;
        if (sweep->count("--steps") == 0 && p.steps != 0) sopt.steps = p.steps;
        if (sopt.hoa.empty() && sopt.hosps.empty() && sopt.hos.empty())
          apply_witness_tokens(p.witnesses, sopt.hoa, sopt.hosps, sopt.hos);
      }
      return run_sweep(sopt);
    }
    if (table1->parsed()) {
      topt.strict_given = table1->count("--strict") > 0;
      return run_table1(topt);
    }
    if (mc->parsed()) return run_mc(mopt);
    if (dump->parsed()) return run_dump_state(dopt);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  } catch (const MismatchError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 5;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
