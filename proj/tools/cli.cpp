// Copyright 2026 The Plinth Authors
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

#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "plinth/bijection.hpp"
#include "plinth/error.hpp"
#include "plinth/jdt.hpp"
#include "plinth/plinths.hpp"
#include "plinth/qseries.hpp"
#include "plinth/schutzenberger.hpp"
#include "plinth/verify.hpp"

namespace tableaux {
namespace {

using nlohmann::json;
using namespace plinth;

// `@path` reads the argument from a file.
std::string resolve(const std::string& value) {
  if (value.empty() || value.front() != '@') return value;
  std::ifstream in(value.substr(1));
  if (!in) throw DomainError("cannot read " + value.substr(1));
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) {
    text.pop_back();
  }
  return text;
}

struct Inputs {
  std::string shape;
  std::string syt;
  std::string ssyt;
  bool json = false;

  std::optional<SkewShape> shape_opt() const {
    if (shape.empty()) return std::nullopt;
    return parse_shape(resolve(shape));
  }
  StandardTableau standard() const {
    if (syt.empty()) throw DomainError("--syt is required");
    return parse_syt(resolve(syt), shape_opt());
  }
  Tableau semistandard() const {
    if (ssyt.empty()) throw DomainError("--ssyt is required");
    return parse_tableau(resolve(ssyt), shape_opt());
  }
  SkewShape required_shape() const {
    if (shape.empty()) throw DomainError("--shape is required");
    return parse_shape(resolve(shape));
  }
};

json rows_json(const Tableau& t) {
  json rows = json::array();
  const SkewShape& s = t.shape();
  for (int r = 1; r <= s.rows(); ++r) {
    json row = json::array();
    for (int c = 1; c <= s.row_end(r); ++c) {
      if (c < s.row_begin(r)) {
        row.push_back(nullptr);
      } else {
        row.push_back(t.at({r, c}));
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

json tableau_json(const Tableau& t, json meta = json::object()) {
  return {{"shape", t.shape().to_string()}, {"rows", rows_json(t)}, {"meta", std::move(meta)}};
}

std::string join(std::span<const int> values) {
  std::string out = "{";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(values[i]);
  }
  return out + "}";
}

std::string cell_text(Cell c) {
  return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

json series_json(const QSeries& s) { return json::parse(s.to_json()); }

json report_json(const VerificationReport& r) {
  json failures = json::array();
  for (const Failure& f : r.failures) {
    failures.push_back({{"input", f.input}, {"expected", f.expected}, {"actual", f.actual}});
  }
  return {{"check", r.check},
          {"universe", r.universe},
          {"cases", r.cases},
          {"failure_count", r.failure_count},
          {"passed", r.passed()},
          {"sampled", r.sampled},
          {"failures", std::move(failures)}};
}

class Runner {
 public:
  Runner(std::ostream& out) : out_(out) {}

  void shapes(int max_cells, int max_rows, int max_cols, bool as_json) {
    const auto all = enumerate_skew_shapes(max_cells, max_rows, max_cols);
    if (as_json) {
      json rows = json::array();
      for (const SkewShape& s : all) rows.push_back(s.to_string());
      emit({{"shape", nullptr},
            {"rows", std::move(rows)},
            {"meta", {{"count", all.size()},
                      {"max_cells", max_cells},
                      {"max_rows", max_rows},
                      {"max_cols", max_cols}}}});
      return;
    }
    for (const SkewShape& s : all) out_ << s.to_string() << '\n';
    out_ << "count: " << all.size() << '\n';
  }

  void enumerate(const Inputs& in) {
    const SkewShape shape = in.required_shape();
    const auto all = enumerate_syt(shape);
    if (in.json) {
      json rows = json::array();
      for (const StandardTableau& q : all) rows.push_back(rows_json(q.tableau()));
      emit({{"shape", shape.to_string()}, {"rows", std::move(rows)}, {"meta", {{"count", all.size()}}}});
      return;
    }
    for (const StandardTableau& q : all) out_ << format_tableau_inline(q.tableau()) << '\n';
    out_ << "count: " << all.size() << '\n';
  }

  void plinth(const Inputs& in) {
    if (!in.syt.empty()) {
      const StandardTableau q = in.standard();
      const Tableau p = plinth_of(q);
      if (in.json) {
        emit(tableau_json(p, {{"volume", p.volume()}, {"witness", rows_json(q.tableau())}}));
        return;
      }
      out_ << format_tableau_inline(p) << '\n' << "volume: " << p.volume() << '\n';
      return;
    }
    if (!in.ssyt.empty()) {
      const Tableau t = in.semistandard();
      const StandardTableau q = order_of(t);
      const Tableau p = plinth_of(q);
      if (in.json) {
        emit(tableau_json(p, {{"volume", p.volume()}, {"order", rows_json(q.tableau())}}));
        return;
      }
      out_ << "order: " << format_tableau_inline(q.tableau()) << '\n'
           << "plinth: " << format_tableau_inline(p) << '\n'
           << "volume: " << p.volume() << '\n';
      return;
    }
    const SkewShape shape = in.required_shape();
    const auto set = plinth_set(shape);
    const QSeries poly = plinth_polynomial(shape);
    if (in.json) {
      json rows = json::array();
      for (const PlinthTable& p : set) {
        rows.push_back({{"witness", rows_json(p.witness.tableau())},
                        {"plinth", rows_json(p.base)},
                        {"volume", p.base.volume()}});
      }
      emit({{"shape", shape.to_string()},
            {"rows", std::move(rows)},
            {"meta", {{"polynomial", poly.to_string()}}}});
      return;
    }
    for (const PlinthTable& p : set) {
      out_ << format_tableau_inline(p.witness.tableau()) << " -> " << format_tableau_inline(p.base)
           << " (volume " << p.base.volume() << ")\n";
    }
    out_ << "polynomial: " << poly.to_string() << '\n';
  }

  void major(const Inputs& in) {
    const StandardTableau q = in.standard();
    const auto des = descent_set(q);
    if (in.json) {
      emit(tableau_json(q.tableau(), {{"descents", des}, {"maj", maj(q)}}));
      return;
    }
    out_ << "descents: " << join(des) << '\n' << "maj: " << maj(q) << '\n';
  }

  void decompose_cmd(const Inputs& in) {
    const Tableau t = in.semistandard();
    const SsytDecomposition d = decompose(t);
    const StandardTableau q = order_of(t);
    if (in.json) {
      emit(tableau_json(d.plinth, {{"diagram", d.diagram.values()},
                                   {"order", rows_json(q.tableau())},
                                   {"volume", t.volume()}}));
      return;
    }
    out_ << "plinth: " << format_tableau_inline(d.plinth) << '\n'
         << "diagram: " << d.diagram.to_string() << '\n'
         << "order: " << format_tableau_inline(q.tableau()) << '\n'
         << "volume: " << t.volume() << " = " << d.plinth.volume() << " + " << d.diagram.sum()
         << '\n';
  }

  void recompose_cmd(const Inputs& in, const std::string& diagram) {
    const StandardTableau q = !in.syt.empty() ? in.standard() : order_of(in.semistandard());
    const Tableau t = recompose(q, parse_reading_partition(resolve(diagram)));
    if (in.json) {
      emit(tableau_json(t, {{"volume", t.volume()}}));
      return;
    }
    out_ << format_tableau_inline(t) << '\n' << "volume: " << t.volume() << '\n';
  }

  void rectify_cmd(const Inputs& in, bool trace, bool random, std::uint64_t seed) {
    const StandardTableau q = in.standard();
    if (trace && random) throw CLI::ValidationError("--trace follows the deterministic order; drop --random");
    StandardTableau result;
    if (random) {
      std::mt19937_64 rng(seed);
      result = rectify(q, rng);
    } else {
      result = rectify(q);
    }
    if (in.json) {
      json meta = {{"order", random ? "random" : "topmost"}};
      if (random) meta["seed"] = seed;
      if (trace) {
        json steps = json::array();
        for (const RectificationStep& s : rectification_trace(q)) {
          json frames = json::array();
          for (const HoledTableau& f : s.frames) frames.push_back(format_holed(f));
          steps.push_back({{"cell", {s.cell.row, s.cell.col}}, {"frames", std::move(frames)}});
        }
        meta["trace"] = std::move(steps);
      }
      emit(tableau_json(result.tableau(), std::move(meta)));
      return;
    }
    if (trace) {
      for (const RectificationStep& s : rectification_trace(q)) {
        out_ << "slide into " << cell_text(s.cell) << '\n';
        for (std::size_t i = 0; i < s.frames.size(); ++i) {
          if (i > 0) out_ << "->\n";
          out_ << format_holed(s.frames[i]) << '\n';
        }
        out_ << '\n';
      }
    }
    out_ << format_tableau_inline(result.tableau()) << '\n';
  }

  void evacuate_cmd(const Inputs& in, bool trace) {
    const StandardTableau q = in.standard();
    const StandardTableau result = evacuate(q);
    if (in.json) {
      json meta = json::object();
      if (trace) {
        json stages = json::array();
        for (const EvacuationStage& s : evacuation_trace(q)) stages.push_back(format_stage(s));
        meta["trace"] = std::move(stages);
      }
      emit(tableau_json(result.tableau(), std::move(meta)));
      return;
    }
    if (trace) {
      const auto stages = evacuation_trace(q);
      for (std::size_t m = 0; m < stages.size(); ++m) {
        out_ << "Q" << m + 1 << ":\n" << format_stage(stages[m]) << "\n\n";
      }
    }
    out_ << format_tableau_inline(result.tableau()) << '\n';
  }

  void skew_evacuate_cmd(const Inputs& in) {
    const StandardTableau q = in.standard();
    const StandardTableau result = skew_evacuate(q);
    if (in.json) {
      emit(tableau_json(result.tableau(),
                        {{"maj", maj(result)}, {"plinth_volume", plinth_volume(q)}}));
      return;
    }
    out_ << format_tableau_inline(result.tableau()) << '\n';
  }

  void genfun(const Inputs& in, const std::string& method, int trunc) {
    const SkewShape shape = in.required_shape();
    std::vector<std::pair<std::string, QSeries>> rows;
    const bool all = method == "all";
    if (all || method == "plinth") rows.emplace_back("plinth", genfun_plinth(shape, trunc));
    if (all || method == "stanley") rows.emplace_back("stanley", genfun_stanley(shape, trunc));
    if (all || method == "bruteforce") {
      rows.emplace_back("bruteforce", genfun_bruteforce(shape, trunc));
    }
    if (in.json) {
      json series = json::object();
      for (const auto& [name, s] : rows) series[name] = series_json(s);
      emit({{"shape", shape.to_string()},
            {"rows", all ? series : series[method]},
            {"meta", {{"method", method}, {"truncate", trunc}}}});
      return;
    }
    for (const auto& [name, s] : rows) {
      if (all) out_ << name << ": ";
      out_ << s.to_string() << '\n';
    }
  }

  int verify(const std::string& check, const VerifyOptions& opts, bool as_json) {
    std::vector<VerificationReport> reports;
    if (check == "all") {
      reports = run_all(opts);
    } else {
      reports.push_back(run_check(check, opts));
    }
    std::size_t failed = 0;
    for (const VerificationReport& r : reports) failed += r.passed() ? 0 : 1;
    if (as_json) {
      json rows = json::array();
      for (const VerificationReport& r : reports) rows.push_back(report_json(r));
      emit({{"shape", nullptr},
            {"rows", std::move(rows)},
            {"meta", {{"max_cells", opts.max_cells},
                      {"truncate", opts.trunc},
                      {"seed", opts.seed},
                      {"enumeration_limit", enumeration_cell_limit()},
                      {"passed", failed == 0}}}});
    } else {
      for (const VerificationReport& r : reports) out_ << r.render() << '\n';
      if (failed == 0) {
        out_ << "all " << reports.size() << " checks passed\n";
      } else {
        out_ << failed << " of " << reports.size() << " checks failed\n";
      }
    }
    return failed == 0 ? kOk : kCheckFailed;
  }

 private:
  void emit(const json& j) { out_ << j.dump(2) << '\n'; }

  std::ostream& out_;
};

void add_tableau_inputs(CLI::App* cmd, Inputs& in, bool syt, bool ssyt) {
  cmd->add_option("--shape", in.shape, "Skew shape, e.g. 4,4,4,3/2,1,1 (or @file)");
  if (syt) cmd->add_option("--syt", in.syt, "Standard tableau, rows split by '/' (or @file)");
  if (ssyt) {
    cmd->add_option("--ssyt", in.ssyt, "Semistandard tableau, rows split by '/' (or @file)");
  }
  cmd->add_flag("--json", in.json, "Machine-readable output");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Plinths, jeu de taquin and evacuation for Young tableaux", "tableaux"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every command");

  Runner runner(out);
  Inputs in;
  std::function<int()> action;
  const auto bind = [&](CLI::App* cmd, std::function<void()> fn) {
    cmd->callback([&action, fn] {
      action = [fn] {
        fn();
        return int{kOk};
      };
    });
  };

  int max_cells = 0;
  int max_rows = 5;
  int max_cols = 5;
  auto* shapes = app.add_subcommand("shapes", "List skew shapes fitting in a box");
  shapes->add_option("--max-cells", max_cells, "Largest number of cells")->required();
  shapes->add_option("--max-rows", max_rows, "Box height")->capture_default_str();
  shapes->add_option("--max-cols", max_cols, "Box width")->capture_default_str();
  shapes->add_flag("--json", in.json, "Machine-readable output");
  bind(shapes, [&] { runner.shapes(max_cells, max_rows, max_cols, in.json); });

  auto* enumerate = app.add_subcommand("enumerate-syt", "List the standard fillings of a shape");
  add_tableau_inputs(enumerate, in, false, false);
  bind(enumerate, [&] { runner.enumerate(in); });

  auto* plinth_cmd = app.add_subcommand(
      "plinth", "Plinth of a standard tableau, of the order of a semistandard one, or of a shape");
  add_tableau_inputs(plinth_cmd, in, true, true);
  bind(plinth_cmd, [&] { runner.plinth(in); });

  auto* maj_cmd = app.add_subcommand("maj", "Descent set and major index");
  add_tableau_inputs(maj_cmd, in, true, false);
  bind(maj_cmd, [&] { runner.major(in); });

  auto* decompose_cmd = app.add_subcommand("decompose", "Split a semistandard tableau");
  add_tableau_inputs(decompose_cmd, in, false, true);
  bind(decompose_cmd, [&] { runner.decompose_cmd(in); });

  std::string diagram;
  auto* recompose_cmd =
      app.add_subcommand("recompose", "Rebuild a semistandard tableau from a plinth and a diagram");
  add_tableau_inputs(recompose_cmd, in, true, true);
  recompose_cmd->add_option("--diagram", diagram, "Weakly increasing parts, e.g. 0,1,1,2")
      ->required();
  bind(recompose_cmd, [&] { runner.recompose_cmd(in, diagram); });

  bool trace = false;
  bool random = false;
  std::uint64_t seed = 1;
  auto* rectify_cmd = app.add_subcommand("rectify", "Slide a skew tableau to straight shape");
  add_tableau_inputs(rectify_cmd, in, true, false);
  rectify_cmd->add_flag("--trace", trace, "Print every slide");
  rectify_cmd->add_flag("--random", random, "Pick inner corners at random");
  rectify_cmd->add_option("--seed", seed, "Random seed")->capture_default_str();
  bind(rectify_cmd, [&] { runner.rectify_cmd(in, trace, random, seed); });

  auto* evacuate_cmd = app.add_subcommand("evacuate", "Evacuation of a straight tableau");
  add_tableau_inputs(evacuate_cmd, in, true, false);
  evacuate_cmd->add_flag("--trace", trace, "Print the intermediate tableaux");
  bind(evacuate_cmd, [&] { runner.evacuate_cmd(in, trace); });

  auto* skew_cmd = app.add_subcommand("skew-evacuate", "Evacuation of a skew tableau");
  add_tableau_inputs(skew_cmd, in, true, false);
  bind(skew_cmd, [&] { runner.skew_evacuate_cmd(in); });

  std::string method = "plinth";
  int trunc = 12;
  auto* genfun_cmd = app.add_subcommand("genfun", "Volume generating function of a shape");
  add_tableau_inputs(genfun_cmd, in, false, false);
  genfun_cmd->add_option("--method", method, "plinth, stanley, bruteforce or all")
      ->check(CLI::IsMember({"plinth", "stanley", "bruteforce", "all"}))
      ->capture_default_str();
  genfun_cmd->add_option("--truncate", trunc, "Highest power of q")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  bind(genfun_cmd, [&] { runner.genfun(in, method, trunc); });

  std::string check = "all";
  VerifyOptions opts;
  std::vector<std::string> names{"all"};
  for (const char* n : kCheckNames) names.emplace_back(n);
  auto* verify_cmd = app.add_subcommand("verify", "Run the identity checks");
  verify_cmd->add_option("check", check, "Check to run")
      ->check(CLI::IsMember(names))
      ->capture_default_str();
  verify_cmd->add_option("--max-cells", opts.max_cells, "Largest shape size")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify_cmd->add_option("--truncate", opts.trunc, "Highest power of q for genfun")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  verify_cmd->add_option("--seed", opts.seed, "Random seed")->capture_default_str();
  verify_cmd->add_flag("--json", in.json, "Machine-readable output");
  verify_cmd->callback([&] { action = [&] { return runner.verify(check, opts, in.json); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  try {
    return action ? action() : int{kUsageError};
  } catch (const CLI::Error& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const LimitExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
}

}  // namespace tableaux
