// Copyright 2026 The cegame Authors.
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

// The `cegame` command line: solve, allocate, compare, gen and validate.
// Every command writes to caller-supplied streams so it can be driven
// in-process; run_cli() maps errors onto the documented exit codes.

#ifndef CEGAME_CLI_HPP_
#define CEGAME_CLI_HPP_

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "cegame/allocation.hpp"
#include "cegame/coalition.hpp"
#include "cegame/coalition_mask.hpp"
#include "cegame/error.hpp"
#include "cegame/game.hpp"
#include "cegame/generate.hpp"
#include "cegame/instance.hpp"
#include "cegame/nucleolus.hpp"
#include "cegame/rational.hpp"

namespace cegame::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 2;
inline constexpr int kExitDomain = 3;
inline constexpr int kExitInvariant = 4;

enum class Format { kTable, kCsv };

struct Options {
  int digits = 4;
  Format format = Format::kTable;
  bool quiet = false;
};

// Rows of cells rendered either as space-aligned text or as CSV. In text
// form the first `left_columns` columns are left-aligned, the rest
// right-aligned.
class Report {
 public:
  explicit Report(std::vector<std::string> header, std::size_t left_columns = 1)
      : header_(std::move(header)), left_columns_(left_columns) {}

  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  void write(std::ostream& out, Format format) const {
    if (format == Format::kCsv) {
      write_csv_row(out, header_);
      for (const auto& row : rows_) write_csv_row(out, row);
      return;
    }
    std::vector<std::size_t> width(header_.size(), 0);
    auto widen = [&](const std::vector<std::string>& row) {
      for (std::size_t c = 0; c < row.size() && c < width.size(); ++c) {
        width[c] = std::max(width[c], row[c].size());
      }
    };
    widen(header_);
    for (const auto& row : rows_) widen(row);
    auto emit = [&](const std::vector<std::string>& row) {
      std::string line;
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (c > 0) line += "  ";
        const std::size_t pad = width[c] - row[c].size();
        if (c < left_columns_) {
          line += row[c];
          if (c + 1 < row.size()) line.append(pad, ' ');
        } else {
          line.append(pad, ' ');
          line += row[c];
        }
      }
      out << line << '\n';
    };
    emit(header_);
    for (const auto& row : rows_) emit(row);
  }

 private:
  static void write_csv_row(std::ostream& out, const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out << ',';
      const std::string& cell = row[c];
      if (cell.find_first_of(",\"\n") == std::string::npos) {
        out << cell;
        continue;
      }
      out << '"';
      for (char ch : cell) {
        if (ch == '"') out << '"';
        out << ch;
      }
      out << '"';
    }
    out << '\n';
  }

  std::vector<std::string> header_;
  std::size_t left_columns_;
  std::vector<std::vector<std::string>> rows_;
};

namespace internal {

inline void warn(const Options& opt, std::ostream& err, const std::string& msg) {
  if (!opt.quiet) err << "warning: " << msg << '\n';
}

inline void warn_all(const Options& opt, std::ostream& err,
                     const std::vector<std::string>& msgs) {
  for (const auto& m : msgs) warn(opt, err, m);
}

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

inline std::string verdict_text(const CoreCheck& check, const Options& opt) {
  if (check.in_core) return "yes";
  std::string text = "no (";
  if (!check.efficient) text += "not efficient; ";
  text += "worst coalition " + coalition_label(check.worst) + ", excess " +
          to_decimal_string(check.worst_excess, opt.digits) + ")";
  return text;
}

struct RuleRequest {
  Rule rule;
  std::optional<Rational> rho;  // nullopt means "auto"
};

inline Rule parse_rule(const std::string& name) {
  if (name == "nea") return Rule::kNea;
  if (name == "delta") return Rule::kDeltaProportional;
  if (name == "egal") return Rule::kEgalitarianRate;
  if (name == "prop") return Rule::kProportionalRate;
  if (name == "nucleolus") return Rule::kNucleolus;
  throw ParseError("unknown rule '" + name + "'");
}

// Computes one allocation; rate rules resolve "auto" to the maximal stable
// rate and warn when an explicit rate exceeds the stability bound.
inline Allocation compute(const CEGame& game, const Instance& inst,
                          const RuleRequest& req, const Options& opt,
                          std::ostream& err) {
  switch (req.rule) {
    case Rule::kNea:
      return nea(game);
    case Rule::kDeltaProportional:
      return delta_proportional(game);
    case Rule::kNucleolus:
      return nucleolus(game);
    case Rule::kEgalitarianRate: {
      Rational rho;
      if (req.rho) {
        rho = *req.rho;
        const Rational bound = egalitarian_stability_bound(game);
        if (rho > bound) {
          warn(opt, err, "rho " + to_decimal_string(rho, opt.digits) +
                             " exceeds the stability bound " +
                             to_decimal_string(bound, opt.digits) +
                             "; core membership is not guaranteed");
        }
      } else {
        rho = rho_egalitarian(game);
      }
      return egalitarian_rate(game, rho, inst.weight_vector());
    }
    case Rule::kProportionalRate: {
      Rational rho;
      if (req.rho) {
        rho = *req.rho;
        const Rational bound = proportional_stability_bound(game);
        if (rho > bound) {
          warn(opt, err, "rho " + to_decimal_string(rho, opt.digits) +
                             " exceeds the stability bound " +
                             to_decimal_string(bound, opt.digits) +
                             "; core membership is not guaranteed");
        }
      } else {
        rho = rho_proportional(game);
      }
      return proportional_rate(game, rho, inst.weight_vector());
    }
    case Rule::kCustom:
      break;
  }
  throw ParseError("rule cannot be computed from the command line");
}

}  // namespace internal

// Coalition table: S, R^S | S \ R^S, m^S and v(S). An empty filter prints
// every non-empty coalition in increasing mask order.
inline int cmd_solve(const Instance& inst, const std::vector<Coalition>& filter,
                     const Options& opt, std::ostream& out, std::ostream& err) {
  const CESituation& sit = inst.situation;
  internal::warn_all(opt, err, sit.warnings());
  require_smes(sit, sit.grand());
  std::vector<Coalition> targets = filter;
  if (targets.empty()) {
    for (Coalition s = 1; s <= sit.grand(); ++s) targets.push_back(s);
  }
  Report report(opt.format == Format::kCsv
                    ? std::vector<std::string>{"coalition", "exporters",
                                               "non_exporters", "commitment",
                                               "value"}
                    : std::vector<std::string>{"S", "R^S | S\\R^S", "m^S", "v(S)"},
                2);
  for (Coalition s : targets) {
    const CoalitionSolution sol = solve_coalition(sit, s);
    const std::string exporters = coalition_label(sol.exporters);
    const std::string idle = coalition_label(s & ~sol.exporters);
    const std::string m = to_decimal_string(sol.commitment, opt.digits);
    const std::string v = to_decimal_string(sol.value, opt.digits);
    if (opt.format == Format::kCsv) {
      report.add({coalition_label(s), exporters, idle, m, v});
    } else {
      report.add({coalition_label(s), exporters + " | " + idle, m, v});
    }
  }
  report.write(out, opt.format);
  return kExitOk;
}

inline int cmd_allocate(const Instance& inst, const std::string& rule_name,
                        const std::string& rho_text, const Options& opt,
                        std::ostream& out, std::ostream& err) {
  internal::RuleRequest req{internal::parse_rule(rule_name), std::nullopt};
  const bool rate_rule = req.rule == Rule::kEgalitarianRate ||
                         req.rule == Rule::kProportionalRate;
  if (rho_text != "auto") {
    if (!rate_rule) {
      internal::warn(opt, err, "--rho is ignored by rule '" + rule_name + "'");
    } else {
      req.rho = parse_rational(rho_text);
    }
  }
  internal::warn_all(opt, err, inst.situation.warnings());
  const CEGame game = build_game(inst.situation);
  const Allocation a = internal::compute(game, inst, req, opt, err);
  internal::warn_all(opt, err, a.warnings);
  const CoreCheck check = in_core(game.tu(), a.payoffs);
  const Rational total = coalition_payoff(a.payoffs, game.grand());
  const std::string tag = to_string(a.rule);

  if (opt.format == Format::kCsv) {
    Report report({"player", "rule", "payoff"});
    for (int i = 0; i < game.player_count(); ++i) {
      report.add({inst.situation.player(i).id, tag,
                  to_decimal_string(a[i], opt.digits)});
    }
    report.write(out, opt.format);
    return kExitOk;
  }
  out << "rule: " << tag;
  if (a.rho) {
    out << " (rho = " << to_decimal_string(*a.rho, opt.digits)
        << (req.rho ? "" : ", auto") << ")";
  }
  out << '\n';
  Report report({"player", "payoff"});
  for (int i = 0; i < game.player_count(); ++i) {
    report.add({inst.situation.player(i).id, to_decimal_string(a[i], opt.digits)});
  }
  report.write(out, opt.format);
  out << "sum: " << to_decimal_string(total, opt.digits)
      << "  v(N): " << to_decimal_string(game.value(game.grand()), opt.digits)
      << "  efficient: " << internal::yes_no(check.efficient) << '\n';
  out << "in core: " << internal::verdict_text(check, opt) << '\n';
  return kExitOk;
}

// Side-by-side comparison of every rule. Rate rules are computed at their
// maximal stable rates and omitted when the grand coalition has no
// complementary exporters.
inline int cmd_compare(const Instance& inst, const Options& opt,
                       std::ostream& out, std::ostream& err) {
  internal::warn_all(opt, err, inst.situation.warnings());
  const CEGame game = build_game(inst.situation);
  const bool rates = game.grand_complementary_exporters() != 0;
  std::vector<Allocation> columns;
  columns.push_back(nea(game));
  columns.push_back(delta_proportional(game));
  std::optional<Rational> rho_e;
  std::optional<Rational> rho_p;
  if (rates) {
    rho_e = rho_egalitarian(game);
    rho_p = rho_proportional(game);
    columns.push_back(egalitarian_rate(game, *rho_e, inst.weight_vector()));
    columns.push_back(proportional_rate(game, *rho_p, inst.weight_vector()));
  }
  columns.push_back(nucleolus(game));
  for (const Allocation& a : columns) internal::warn_all(opt, err, a.warnings);

  std::vector<CoreCheck> checks;
  for (const Allocation& a : columns) checks.push_back(in_core(game.tu(), a.payoffs));
  const std::string note =
      "rate rules omitted: the grand coalition has no complementary exporters";

  if (opt.format == Format::kCsv) {
    Report report({"player", "rule", "payoff"});
    for (const Allocation& a : columns) {
      for (int i = 0; i < game.player_count(); ++i) {
        report.add({inst.situation.player(i).id, to_string(a.rule),
                    to_decimal_string(a[i], opt.digits)});
      }
    }
    report.write(out, opt.format);
    if (!rates) internal::warn(opt, err, note);
    return kExitOk;
  }

  std::vector<std::string> header{"player"};
  for (const Allocation& a : columns) header.push_back(to_string(a.rule));
  Report report(header);
  for (int i = 0; i < game.player_count(); ++i) {
    std::vector<std::string> row{inst.situation.player(i).id};
    for (const Allocation& a : columns) row.push_back(to_decimal_string(a[i], opt.digits));
    report.add(std::move(row));
  }
  std::vector<std::string> sums{"sum"};
  std::vector<std::string> core{"in core"};
  for (std::size_t k = 0; k < columns.size(); ++k) {
    sums.push_back(to_decimal_string(
        coalition_payoff(columns[k].payoffs, game.grand()), opt.digits));
    core.push_back(internal::yes_no(checks[k].in_core));
  }
  report.add(std::move(sums));
  report.add(std::move(core));
  report.write(out, opt.format);
  if (rates) {
    out << "rho^E = " << to_decimal_string(*rho_e, opt.digits)
        << "  rho^P = " << to_decimal_string(*rho_p, opt.digits) << '\n';
  } else {
    out << "note: " << note << '\n';
  }
  for (std::size_t k = 0; k < columns.size(); ++k) {
    if (!checks[k].in_core) {
      out << to_string(columns[k].rule)
          << " in core: " << internal::verdict_text(checks[k], opt) << '\n';
    }
  }
  return kExitOk;
}

inline int cmd_gen(int n, std::uint64_t seed, const std::string& profile,
                   std::ostream& out) {
  Instance inst{generate_situation(n, seed, parse_profile(profile)), {}};
  out << serialize_instance(inst);
  return kExitOk;
}

inline constexpr int kValidateOracleLimit = 8;

// Structural checks on the game; returns kExitInvariant on any failure.
inline int cmd_validate(const Instance& inst, const Options& opt,
                        std::ostream& out, std::ostream& err) {
  const CESituation& sit = inst.situation;
  internal::warn_all(opt, err, sit.warnings());
  const CEGame game = build_game(sit);
  bool ok = true;
  auto report = [&](const std::string& name, bool pass, const std::string& detail) {
    out << name << ": " << (pass ? "ok" : "FAILED");
    if (!detail.empty()) out << " (" << detail << ")";
    out << '\n';
    ok = ok && pass;
  };
  auto pair_detail = [](const PairCheck& c) {
    if (c.holds || !c.violation) return std::string();
    return coalition_label(c.violation->first) + ", " +
           coalition_label(c.violation->second);
  };

  const PairCheck super = check_superadditive(game.tu());
  report("superadditive", super.holds, pair_detail(super));
  const PairCheck mono = check_monotone(game.tu());
  report("monotone", mono.holds, pair_detail(mono));
  const auto valuable = find_valuable_inessential_coalition(game);
  report("zero value without essential players", !valuable,
         valuable ? coalition_label(*valuable) : "");
  const auto influence = find_nonpotential_influence(game);
  report("non-potential players are dummies", !influence,
         influence ? coalition_label(influence->first) + " minus " +
                         coalition_label(influence->second)
                   : "");
  const CoreCheck core = in_core(game.tu(), nea(game).payoffs);
  report("nea in core", core.in_core,
         core.in_core ? "" : internal::verdict_text(core, opt));

  if (sit.player_count() <= kValidateOracleLimit) {
    Coalition mismatch = 0;
    for (Coalition s = 1; s <= game.grand() && mismatch == 0; ++s) {
      if (brute_force_coalition(sit, s) != game.solution(s)) mismatch = s;
    }
    report("solver matches enumeration", mismatch == 0,
           mismatch == 0 ? std::to_string(game.grand()) + " coalitions"
                         : "first mismatch " + coalition_label(mismatch));
  } else {
    out << "solver matches enumeration: skipped (more than "
        << kValidateOracleLimit << " players)\n";
  }
  return ok ? kExitOk : kExitInvariant;
}

// Parses argv and dispatches. Never throws.
inline int run_cli(int argc, const char* const* argv, std::ostream& out,
                   std::ostream& err) {
  CLI::App app{"Exact cooperative export games under minimum quantity commitments",
               "cegame"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  std::string format = "table";
  app.add_option("--digits", opt.digits, "decimal places in printed values")
      ->check(CLI::Range(0, 60));
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"table", "csv"}));
  app.add_flag("--quiet", opt.quiet, "suppress warnings");

  std::string path;
  std::vector<std::string> coalitions;
  CLI::App* solve = app.add_subcommand("solve", "optimal strategy of every coalition");
  solve->add_option("instance", path, "instance file")->required();
  solve->add_option("--coalition", coalitions,
                    "only these coalitions, e.g. 3,4 (repeatable)");

  std::string rule;
  std::string rho = "auto";
  CLI::App* allocate = app.add_subcommand("allocate", "one allocation rule");
  allocate->add_option("instance", path, "instance file")->required();
  allocate->add_option("--rule", rule, "nea, delta, egal, prop or nucleolus")
      ->required();
  allocate->add_option("--rho", rho, "tax rate for egal/prop, or auto");

  CLI::App* compare = app.add_subcommand("compare", "all allocation rules side by side");
  compare->add_option("instance", path, "instance file")->required();

  int n = 0;
  std::uint64_t seed = 0;
  std::string profile = "mixed";
  CLI::App* gen = app.add_subcommand("gen", "random SME instance");
  gen->add_option("--n", n, "number of players")->required()->check(CLI::Range(1, 64));
  gen->add_option("--seed", seed, "random seed");
  gen->add_option("--profile", profile, "mixed, essential-heavy or complementary-heavy")
      ->check(CLI::IsMember({"mixed", "essential-heavy", "complementary-heavy"}));

  CLI::App* validate = app.add_subcommand("validate", "structural self-checks");
  validate->add_option("instance", path, "instance file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParse;
  }
  opt.format = format == "csv" ? Format::kCsv : Format::kTable;

  try {
    if (*gen) return cmd_gen(n, seed, profile, out);
    const Instance inst = load_instance(path);
    if (*solve) {
      std::vector<Coalition> filter;
      for (const auto& text : coalitions) {
        filter.push_back(parse_coalition(text, inst.situation.player_count()));
      }
      return cmd_solve(inst, filter, opt, out, err);
    }
    if (*allocate) return cmd_allocate(inst, rule, rho, opt, out, err);
    if (*compare) return cmd_compare(inst, opt, out, err);
    if (*validate) return cmd_validate(inst, opt, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInvariant;
  }
  return kExitParse;
}

}  // namespace cegame::cli

#endif  // CEGAME_CLI_HPP_
