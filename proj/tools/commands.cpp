// Copyright 2026 The focknc Authors
// SPDX-License-Identifier: Apache-2.0

#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "csv.hpp"
#include "errors.hpp"
#include "reference_table.hpp"
#include "state_text.hpp"

namespace focknc::cli {

namespace {

// Writes either to --out or to standard output; open/write failures map to
// exit code 4 via IoError.
class OutputTarget {
 public:
  explicit OutputTarget(const std::string& path) {
    if (path.empty()) {
      os_ = &std::cout;
      return;
    }
    file_.open(path, std::ios::binary);
    if (!file_) throw IoError("cannot open output file: " + path);
    os_ = &file_;
    path_ = path;
  }

  std::ostream& stream() { return *os_; }

  void finish() {
    os_->flush();
    if (!*os_ && os_ == &file_)
      throw IoError("write failure on output file: " + path_);
  }

 private:
  std::ofstream file_;
  std::ostream* os_ = nullptr;
  std::string path_;
};

void check_trunc_eps(double eps) {
  if (!(eps > 0.0) || eps >= 1.0)
    throw std::invalid_argument("--trunc-eps must lie in (0, 1)");
}

double checked(double v, const std::string& what) {
  if (!std::isfinite(v))
    throw std::runtime_error("non-finite result evaluating " + what);
  return v;
}

StateSpec resolve_state(const std::string& text, double trunc_eps) {
  if (text.empty()) throw std::invalid_argument("--state is required");
  check_trunc_eps(trunc_eps);
  StateSpec spec = parse_state_spec(text);
  spec.truncation_epsilon = trunc_eps;
  return spec;
}

const char* kind_name(WitnessSelector::Kind kind) {
  switch (kind) {
    case WitnessSelector::Kind::hoa: return "hoa";
    case WitnessSelector::Kind::hosps: return "hosps";
    case WitnessSelector::Kind::hos: return "hos";
  }
  return "?";
}

WitnessSelector::Kind kind_from(std::string_view name) {
  if (name == "hoa") return WitnessSelector::Kind::hoa;
  if (name == "hosps") return WitnessSelector::Kind::hosps;
  if (name == "hos") return WitnessSelector::Kind::hos;
  throw std::logic_error("unknown witness kind");
}

struct NamedSelector {
  std::string column;  // e.g. "hoa_5"
  WitnessSelector sel;
};

// Column order is fixed (hoa, hosps, hos; ascending order within each) so
// identical invocations emit identical files.
std::vector<NamedSelector> build_selectors(std::vector<std::uint32_t> hoa,
                                           std::vector<std::uint32_t> hosps,
                                           std::vector<std::uint32_t> hos) {
  std::vector<NamedSelector> out;
  auto add = [&out](std::vector<std::uint32_t>& orders, WitnessSelector::Kind kind) {
    std::sort(orders.begin(), orders.end());
    orders.erase(std::unique(orders.begin(), orders.end()), orders.end());
    for (auto o : orders)
      out.push_back({std::string(kind_name(kind)) + "_" + std::to_string(o),
                     WitnessSelector{kind, o}});
  };
  add(hoa, WitnessSelector::Kind::hoa);
  add(hosps, WitnessSelector::Kind::hosps);
  add(hos, WitnessSelector::Kind::hos);
  if (out.empty())
    throw std::invalid_argument(
        "no witnesses requested; pass --hoa, --hosps and/or --hos");
  return out;
}

}  // namespace

int run_witness(const WitnessOptions& opt) {
  const StateSpec spec = resolve_state(opt.state, opt.trunc_eps);
  const FockState state = make_state(spec);
  const auto selectors = build_selectors(opt.hoa, opt.hosps, opt.hos);

  OutputTarget out(opt.out);
  out.stream() << "state,witness,order,value\n";
  const std::string label = csv_field(spec.label());
  for (const auto& [column, sel] : selectors) {
    const double v = checked(
        evaluate_witness(state, sel, opt.norm, opt.max_order), column);
    out.stream() << label << ',' << kind_name(sel.kind) << ',' << sel.order
                 << ',' << csv_number(v) << '\n';
  }
  out.finish();
  return 0;
}

int run_sweep(const SweepOptions& opt) {
  const StateSpec base = resolve_state(opt.state, opt.trunc_eps);
  if (opt.vary.empty()) throw std::invalid_argument("--vary is required");
  {
    const auto names = parameter_names(base);
    if (std::find(names.begin(), names.end(), opt.vary) == names.end()) {
      std::string known;
      for (const auto& n : names) known += (known.empty() ? "" : ", ") + n;
      throw std::invalid_argument("state family '" + std::string(base.family()) +
                                  "' has no parameter '" + opt.vary +
                                  "' (parameters: " + known + ")");
    }
  }
  if (!(opt.from < opt.to))
    throw std::invalid_argument("--from must be less than --to");
  const auto selectors = build_selectors(opt.hoa, opt.hosps, opt.hos);

  // Integer parameters without a continuous extension sweep the integer grid
  // inside [from, to]; --steps applies to everything else.
  std::vector<double> grid;
  const bool integer_param = parameter_is_integer(base, opt.vary);
  if (integer_param && !parameter_supports_continuation(base, opt.vary)) {
    for (double v = std::ceil(opt.from); v <= std::floor(opt.to) + 0.5; v += 1.0)
      grid.push_back(v);
    if (grid.empty())
      throw std::invalid_argument("no integer grid points in [--from, --to]");
  } else {
    if (opt.steps < 2) throw std::invalid_argument("--steps must be at least 2");
    for (std::uint32_t i = 0; i < opt.steps; ++i)
      grid.push_back(i + 1 == opt.steps
                         ? opt.to
                         : opt.from + (opt.to - opt.from) * i / (opt.steps - 1));
  }

  OutputTarget out(opt.out);
  out.stream() << opt.vary;
  for (const auto& s : selectors) out.stream() << ',' << s.column;
  out.stream() << '\n';
  for (double x : grid) {
    const FockState state = make_state(with_parameter(base, opt.vary, x));
    out.stream() << csv_number(x);
    for (const auto& s : selectors)
      out.stream() << ','
                   << csv_number(checked(
                          evaluate_witness(state, s.sel, opt.norm, opt.max_order),
                          s.column));
    out.stream() << '\n';
  }

  // Zero crossings go to standard error as informational lines so they never
  // disturb the CSV stream.
  CrossingOptions copt;
  copt.grid_points = std::max<std::uint32_t>(opt.steps, 3);
  copt.norm = opt.norm;
  copt.max_order = opt.max_order;
  for (const auto& s : selectors) {
    for (const auto& c :
         find_zero_crossings(base, opt.vary, opt.from, opt.to, s.sel, copt)) {
      std::cerr << "# crossing witness=" << s.column << " param=" << opt.vary
                << " position=" << csv_number(c.position) << " bracket=["
                << csv_number(c.bracket_lo) << ',' << csv_number(c.bracket_hi)
                << "] refined=" << (c.refined ? "yes" : "no") << '\n';
    }
  }
  if (integer_param && parameter_supports_continuation(base, opt.vary)) {
    // The parameter is physically integer; also report where the sign flips
    // between consecutive integers, independent of the continuous refinement.
    CrossingOptions icopt = copt;
    icopt.force_integer_grid = true;
    for (const auto& s : selectors) {
      for (const auto& c :
           find_zero_crossings(base, opt.vary, opt.from, opt.to, s.sel, icopt)) {
        std::cerr << "# integer-bracket witness=" << s.column
                  << " param=" << opt.vary << " bracket=["
                  << csv_number(c.bracket_lo) << ','
                  << csv_number(c.bracket_hi) << "]\n";
      }
    }
  }

  out.finish();
  return 0;
}

int run_table1(const Table1Options& opt) {
  check_trunc_eps(opt.trunc_eps);

  struct Line {
    std::string state;
    const ReferenceEntry* entry;
    ReferenceComparison cmp;
  };
  std::vector<Line> lines;
  for (const auto& row : reference_rows()) {
    StateSpec spec;
    spec.params = row.params;
    spec.truncation_epsilon = opt.trunc_eps;
    const FockState state = make_state(spec);
    for (const auto& entry : row.entries) {
      const WitnessSelector sel{kind_from(entry.witness), entry.order};
      const double v = checked(evaluate_witness(state, sel),
                               std::string(entry.witness) + " order " +
                                   std::to_string(entry.order));
      ReferenceComparison cmp = compare_reference(v, entry);
      if (opt.strict_given) cmp.pass = cmp.rel_deviation <= opt.strict;
      lines.push_back({spec.label(), &entry, cmp});
    }
  }

  std::size_t failures = 0;
  std::ostream& os = std::cout;
  os << std::left << std::setw(27) << "state" << std::setw(8) << "witness"
     << std::right << std::setw(5) << "order" << std::setw(16) << "computed"
     << std::setw(12) << "reference" << std::setw(11) << "rel.dev" << "  match\n";
  for (const auto& line : lines) {
    const char* match = !line.cmp.pass              ? "FAIL"
                        : opt.strict_given          ? "strict"
                        : line.cmp.within_tolerance ? "tolerance"
                                                    : "truncation";
    if (!line.cmp.pass) ++failures;
    std::ostringstream dev;
    dev << std::scientific << std::setprecision(1) << line.cmp.rel_deviation;
    os << std::left << std::setw(27) << line.state << std::setw(8)
       << line.entry->witness << std::right << std::setw(5) << line.entry->order
       << std::setw(16) << csv_number(line.cmp.computed) << std::setw(12)
       << csv_number(line.entry->printed) << std::setw(11) << dev.str() << "  "
       << match;
    if (line.entry->typo)
      os << "  [typo: reference printed as \"" << line.entry->typo << "\"]";
    os << '\n';
  }
  if (opt.strict_given)
    os << lines.size() - failures << "/" << lines.size()
       << " entries within the requested relative deviation " << opt.strict
       << "\n";
  else
    os << lines.size() - failures << "/" << lines.size()
       << " entries match (tolerance scaled to the reference's printed "
          "significant digits; exact digit truncation also accepted)\n";

  if (!opt.out.empty()) {
    OutputTarget out(opt.out);
    out.stream() << "state,witness,order,computed,reference,sig_digits,"
                    "rel_deviation,within_tolerance,truncation_match,pass,note\n";
    for (const auto& line : lines) {
      std::string note;
      if (line.entry->typo)
        note = std::string("reference printed as ") + line.entry->typo;
      out.stream() << csv_field(line.state) << ',' << line.entry->witness << ','
                   << line.entry->order << ',' << csv_number(line.cmp.computed)
                   << ',' << csv_number(line.entry->printed) << ','
                   << line.entry->sig_digits << ','
                   << csv_number(line.cmp.rel_deviation) << ','
                   << (line.cmp.within_tolerance ? 1 : 0) << ','
                   << (line.cmp.truncation_match ? 1 : 0) << ','
                   << (line.cmp.pass ? 1 : 0) << ',' << csv_field(note) << '\n';
    }
    out.finish();
  }

  if (failures > 0)
    throw MismatchError(std::to_string(failures) + " of " +
                        std::to_string(lines.size()) +
                        " reference entries deviate beyond tolerance");
  return 0;
}

int run_mc(const McOptions& opt) {
  const StateSpec spec = resolve_state(opt.state, opt.trunc_eps);
  const FockState state = make_state(spec);
  auto selectors = build_selectors(opt.hoa, opt.hosps, {});

  OutputTarget out(opt.out);
  out.stream() << "witness,order,value,std_error,shots,seed\n";
  // Every row reuses the same seed, i.e. all witnesses are estimated from one
  // and the same simulated counting record, the way a single experimental run
  // would be post-processed.
  for (const auto& [column, sel] : selectors) {
    const McEstimate est =
        sel.kind == WitnessSelector::Kind::hoa
            ? estimate_hoa(state, sel.order, opt.shots, opt.seed, opt.resamples)
            : estimate_hosps(state, sel.order, opt.shots, opt.seed,
                             opt.resamples);
    checked(est.value, column);
    out.stream() << kind_name(sel.kind) << ',' << sel.order << ','
                 << csv_number(est.value) << ',' << csv_number(est.std_error)
                 << ',' << est.shots << ',' << est.seed << '\n';
  }
  out.finish();
  return 0;
}

int run_dump_state(const DumpStateOptions& opt) {
  const StateSpec spec = resolve_state(opt.state, opt.trunc_eps);
  const FockState state = make_state(spec);

  OutputTarget out(opt.out);
  out.stream() << "n,re,im\n";
  for (std::size_t n = 0; n < state.dimension(); ++n) {
    const auto a = state.amplitude(n);
    out.stream() << n << ',' << csv_number(a.real()) << ','
                 << csv_number(a.imag()) << '\n';
  }
  out.finish();
  return 0;
}

}  // namespace focknc::cli
