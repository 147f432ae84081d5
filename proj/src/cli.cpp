/* Copyright 2026 The ipc1 Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/


#include "ipc1/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "ipc1/error.hpp"
#include "ipc1/formula.hpp"
#include "ipc1/kripke.hpp"
#include "ipc1/lattice.hpp"
#include "ipc1/model_io.hpp"
#include "ipc1/reduction.hpp"
#include "ipc1/superint.hpp"

namespace ipc1::cli {
namespace {

enum class Engine { Fast, Brute, Both };
enum class Format { Json, Dot, Text };

struct Options {
  std::string formula;
  std::string model;
  std::string state;
  std::string graph;
  std::string dag;
  std::string logic = "ipc";
  Engine engine = Engine::Fast;
  Format format = Format::Text;
  std::uint64_t seed = 0;
  std::uint32_t slices = 2;
  std::uint32_t width = 2;
  double density = 0.5;
  std::uint32_t trials = 10;
  std::uint32_t rank_cap = kDefaultRankCap;
  std::uint32_t n = 0;
  std::vector<std::string> nodes;
};

int answer(std::ostream& out, bool value) {
  out << (value ? "true" : "false") << "\n";
  return value ? kAnswer : kFalse;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

StateId state_of(const KripkeModel& m, const Options& o) {
  if (o.state.empty()) throw BadParameters("--state is required");
  return m.id_of(o.state);
}

int do_normalize(const Options& o, std::ostream& out) {
  if (!o.dag.empty()) {
    out << to_string(rn_index_dag(read_dag(read_file(o.dag)))) << "\n";
  } else {
    out << to_string(rn_index(parse(o.formula))) << "\n";
  }
  return kAnswer;
}

int do_valid(const Options& o, std::ostream& out) {
  return answer(out, is_valid_in(Logic::parse(o.logic), parse(o.formula)));
}

int do_check(const Options& o, std::ostream& out, std::ostream& err) {
  const Formula f = parse(o.formula);
  const KripkeModel m = load_model_file(o.model);
  const StateId s = state_of(m, o);
  const Logic logic = Logic::parse(o.logic);
  if (logic.axiom() && !admissible(logic, m)) {
    throw InadmissibleModel("model is not admissible for " + logic.name());
  }
  switch (o.engine) {
    case Engine::Fast: return answer(out, check_fast(m, s, f));
    case Engine::Brute: return answer(out, check_brute(m, s, f));
    case Engine::Both: {
      const bool fast = check_fast(m, s, f);
      const bool brute = check_brute(m, s, f);
      if (fast != brute) {
        err << "engines disagree: fast " << fast << ", brute " << brute << "\n";
        return kInputError;
      }
      return answer(out, fast);
    }
  }
  return kInputError;
}

int do_canonical(const Options& o, std::ostream& out) {
  if (o.n < 1) throw BadParameters("canonical model size must be at least 1");
  const KripkeModel m = canonical(o.n);
  switch (o.format) {
    case Format::Json: out << model_to_json(m); break;
    case Format::Dot: {
      DotOptions dot;
      dot.labels = model_indices(m);
      dot.graph_name = "canonical_" + std::to_string(o.n);
      out << model_to_dot(m, dot);
      break;
    }
    case Format::Text: out << model_to_text(m); break;
  }
  return kAnswer;
}

int do_model_index(const Options& o, std::ostream& out) {
  const KripkeModel m = load_model_file(o.model);
  if (!o.state.empty()) {
    out << model_index(m, o.state) << "\n";
    return kAnswer;
  }
  const auto h = model_indices(m);
  for (StateId s = 0; s < m.size(); ++s) out << m.name(s) << " " << h[s] << "\n";
  return kAnswer;
}

SliceGraph graph_of(const Options& o) {
  if (o.graph.empty()) throw BadParameters("--graph is required");
  return load_slice_graph_file(o.graph);
}

int do_reduce(const Options& o, std::ostream& out) {
  const SliceGraph g = graph_of(o);
  switch (o.format) {
    case Format::Json: out << model_to_json(reduce_to_model(g).model); break;
    case Format::Dot: out << reduction_to_dot(g); break;
    case Format::Text: {
      const ReductionReport report = verify_reduction(g, o.rank_cap);
      const McInstance inst = mc_instance(g, o.rank_cap);
      out << "states " << report.states << ", depth " << report.depth << "\n";
      out << "start " << inst.state << ", index " << report.start_index << "\n";
      out << "formula " << to_string(inst.index) << " (length " << inst.formula.length() << ")\n";
      out << report.to_string();
      break;
    }
  }
  return kAnswer;
}

int do_apath(const Options& o, std::ostream& out) {
  const SliceGraph g = graph_of(o);
  if (!o.nodes.empty() && o.nodes.size() != 2) {
    throw BadParameters("apath takes either no nodes or two nodes");
  }
  const std::string& x = o.nodes.empty() ? g.s : o.nodes[0];
  const std::string& y = o.nodes.empty() ? g.t : o.nodes[1];
  return answer(out, apath(g, x, y));
}

int do_gen(const Options& o, std::ostream& out) {
  const SliceGraph g = gen_slice_graph(o.slices, o.width, o.density, o.seed);
  out << (o.format == Format::Dot ? slice_graph_to_dot(g) : slice_graph_to_json(g));
  return kAnswer;
}

int do_bench(const Options& o, std::ostream& out) {
  using Clock = std::chrono::steady_clock;
  auto micros = [](Clock::duration d) {
    return std::chrono::duration<double, std::micro>(d).count();
  };
  out << std::left << std::setw(7) << "trial" << std::setw(8) << "states" << std::setw(7)
      << "apath" << std::setw(12) << "fast_us" << std::setw(12) << "brute_us" << std::setw(14)
      << "fast_visits" << std::setw(14) << "brute_visits" << "agree\n";
  std::uint32_t agree = 0;
  double fast_total = 0, brute_total = 0;
  for (std::uint32_t i = 0; i < o.trials; ++i) {
    const SliceGraph g = gen_slice_graph(o.slices, o.width, o.density, o.seed + i);
    const bool expected = apath(g, g.s, g.t);
    const McInstance inst = mc_instance(g, o.rank_cap);
    const StateId s = inst.model.id_of(inst.state);

    CheckStats fs, bs;
    auto t0 = Clock::now();
    const bool fast = check_fast(inst.model, s, inst.formula, &fs);
    auto t1 = Clock::now();
    const bool brute = check_brute(inst.model, s, inst.formula, &bs);
    auto t2 = Clock::now();

    const bool ok = fast == brute && fast == expected;
    agree += ok;
    fast_total += micros(t1 - t0);
    brute_total += micros(t2 - t1);
    out << std::setw(7) << i << std::setw(8) << inst.model.size() << std::setw(7)
        << (expected ? "true" : "false") << std::setw(12) << std::fixed << std::setprecision(1)
        << micros(t1 - t0) << std::setw(12) << micros(t2 - t1) << std::setw(14)
        << fs.state_visits << std::setw(14) << bs.state_visits << (ok ? "yes" : "NO") << "\n";
  }
  out << "total fast " << std::fixed << std::setprecision(1) << fast_total << " us, brute "
      << brute_total << " us\n";
  out << "agreement " << agree << "/" << o.trials << "\n";
  return agree == o.trials ? kAnswer : kFalse;
}

int do_classes(const Options& o, std::ostream& out) {
  const Logic logic = Logic::parse(o.logic);
  out << classes_table(logic, classes(logic));
  return kAnswer;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"One-variable intuitionistic logic: normalization and model checking", "ipc1"};
  app.require_subcommand(1);
  Options o;

  const std::map<std::string, Engine> engines{
      {"fast", Engine::Fast}, {"brute", Engine::Brute}, {"both", Engine::Both}};
  const std::map<std::string, Format> formats{
      {"json", Format::Json}, {"dot", Format::Dot}, {"text", Format::Text}};
  auto rank_cap = [&o](CLI::App* c) {
    c->add_option("--rank-cap", o.rank_cap, "largest formula rank to build")
        ->capture_default_str();
  };
  auto format = [&](CLI::App* c) {
    c->add_option("--format", o.format, "json, dot or text")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  };

  auto* normalize = app.add_subcommand("normalize", "print the lattice index of a formula");
  normalize->add_option("formula", o.formula);
  normalize->add_option("--dag", o.dag, "read a formula DAG from a file");

  auto* valid = app.add_subcommand("valid", "decide validity in a logic");
  valid->add_option("formula", o.formula)->required();
  valid->add_option("--logic", o.logic, "ipc, kc, psi:<k> or phi:<k>");

  auto* check = app.add_subcommand("check", "model-check a formula at a state");
  check->add_option("formula", o.formula)->required();
  check->add_option("--model", o.model)->required();
  check->add_option("--state", o.state)->required();
  check->add_option("--engine", o.engine, "fast, brute or both")
      ->transform(CLI::CheckedTransformer(engines, CLI::ignore_case));
  check->add_option("--logic", o.logic, "require the model to be admissible for this logic");

  auto* canon = app.add_subcommand("canonical", "emit the canonical model with n states");
  canon->add_option("n", o.n)->required();
  format(canon);

  auto* mindex = app.add_subcommand("model-index", "print model indices");
  mindex->add_option("--model", o.model)->required();
  mindex->add_option("--state", o.state, "only this state");

  auto* reduce = app.add_subcommand("reduce", "build the model for a slice graph");
  reduce->add_option("--graph", o.graph)->required();
  format(reduce);
  rank_cap(reduce);

  auto* ap = app.add_subcommand("apath", "decide alternating reachability");
  ap->add_option("--graph", o.graph)->required();
  ap->add_option("nodes", o.nodes, "source and target (default: s and t)");

  auto* gen = app.add_subcommand("gen-slice-graph", "generate a random slice graph");
  gen->add_option("--slices", o.slices)->capture_default_str();
  gen->add_option("--width", o.width)->capture_default_str();
  gen->add_option("--density", o.density)->capture_default_str();
  gen->add_option("--seed", o.seed)->capture_default_str();
  format(gen);

  auto* bench = app.add_subcommand("bench", "time both engines on reduction instances");
  bench->add_option("--slices", o.slices)->capture_default_str();
  bench->add_option("--width", o.width)->capture_default_str();
  bench->add_option("--density", o.density)->capture_default_str();
  bench->add_option("--seed", o.seed)->capture_default_str();
  bench->add_option("--trials", o.trials)->capture_default_str();
  rank_cap(bench);

  auto* cls = app.add_subcommand("classes", "list the equivalence classes of a logic");
  cls->add_option("--logic", o.logic, "ipc, kc, psi:<k> or phi:<k>");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    app.exit(e, out, err);
    return kAnswer;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }

  try {
    if (normalize->parsed()) {
      if (o.formula.empty() == o.dag.empty()) {
        throw BadParameters("normalize takes a formula or --dag, not both");
      }
      return do_normalize(o, out);
    }
    if (valid->parsed()) return do_valid(o, out);
    if (check->parsed()) return do_check(o, out, err);
    if (canon->parsed()) return do_canonical(o, out);
    if (mindex->parsed()) return do_model_index(o, out);
    if (reduce->parsed()) return do_reduce(o, out);
    if (ap->parsed()) return do_apath(o, out);
    if (gen->parsed()) return do_gen(o, out);
    if (bench->parsed()) return do_bench(o, out);
    if (cls->parsed()) return do_classes(o, out);
  } catch (const SyntaxError& e) {
    err << "error: " << e.what() << " at position " << e.position() << "\n";
    return kInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace ipc1::cli
