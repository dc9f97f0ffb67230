#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <sstream>
#include <string>

#include "pkaeq/decide.hpp"
#include "pkaeq/errors.hpp"
#include "pkaeq/oracle.hpp"
#include "pkaeq/problem.hpp"

namespace pkaeq::cli {

namespace {

using nlohmann::json;

std::string state_names(const Automaton& aut, const Polynomial& p) {
  return to_string<VarId>(p, [&](const VarId& v) { return aut.states().at(v.index); });
}

json profile_json(const Automaton& aut, const Profile& profile) {
  json out = json::object();
  for (const auto& [w, k] : profile) out[word_to_string(w, aut.alphabet())] = k;
  return out;
}

std::string profile_text(const Automaton& aut, const Profile& profile) {
  if (profile.empty()) return "(none)";
  std::string out = "(";
  bool first = true;
  for (const auto& [w, k] : profile) {
    if (!first) out += ", ";
    first = false;
    out += (w.empty() ? std::string("eps") : word_to_string(w, aut.alphabet())) + ":" +
           std::to_string(k);
  }
  return out + ")";
}

json witness_json(const Automaton& aut, const std::optional<Witness>& w) {
  if (!w) return nullptr;
  return {{"depth", w->depth},
          {"profile", profile_json(aut, w->profile)},
          {"left", to_string(w->left)},
          {"right", to_string(w->right)}};
}

void print_witness(std::ostream& out, const Automaton& aut, const Witness& w) {
  out << "witness: depth " << w.depth << ", profile " << profile_text(aut, w.profile)
      << ", left " << to_string(w.left) << ", right " << to_string(w.right) << "\n";
}

struct Inputs {
  Problem problem;
  Polynomial left;
  Polynomial right;
};

Inputs load(const std::string& path, bool relaxed) {
  Inputs in{load_problem(path), {}, {}};
  const Automaton& aut = in.problem.automaton;
  require_valid(aut, !relaxed);
  for (const auto* side : {&in.problem.left, &in.problem.right}) {
    auto diags = validate(*side, aut.num_states(), !relaxed);
    if (!diags.empty()) throw InputError(diags.front().message);
  }
  in.left = seed_polynomial(in.problem.left, aut.num_states());
  in.right = seed_polynomial(in.problem.right, aut.num_states());
  return in;
}

struct CheckOptions {
  std::string file;
  bool json = false;
  bool relaxed = false;
  bool no_witness = false;
  std::size_t witness_cap = 8;
  std::size_t max_stages = 10'000;
  bool trace = false;
};

int check(const CheckOptions& opt, std::ostream& out, std::ostream& err) {
  const Inputs in = load(opt.file, opt.relaxed);
  const Automaton& aut = in.problem.automaton;

  DecideConfig cfg;
  cfg.strict_validation = !opt.relaxed;
  cfg.max_stages = opt.max_stages;
  cfg.witness_depth_cap = opt.witness_cap;
  cfg.find_witness = !opt.no_witness;
  if (opt.trace) {
    cfg.on_stage = [&err](const StageTrace& t) {
      err << "stage " << t.stage << ": expanded " << t.expanded << ", derivatives "
          << t.derivatives << ", adopted " << t.adopted << ", basis size " << t.basis_size
          << "\n";
    };
  }
  const Verdict verdict = decide(aut, in.left, in.right, cfg);

  if (const auto* eq = std::get_if<Equivalent>(&verdict)) {
    if (opt.json) {
      out << json{{"verdict", "equivalent"},
                  {"stages", eq->stages},
                  {"generators", eq->generators},
                  {"basis_size", eq->basis_size},
                  {"witness", nullptr}}
                 .dump()
          << "\n";
    } else {
      out << "equivalent\nstages: " << eq->stages << "\ngenerators: " << eq->generators
          << "\nbasis size: " << eq->basis_size << "\n";
      for (const auto& b : eq->basis.elements()) out << "  " << state_names(aut, b) << "\n";
    }
    return kEquivalent;
  }

  const auto& ne = std::get<NotEquivalent>(verdict);
  if (opt.json) {
    out << json{{"verdict", "not_equivalent"},
                {"stages", ne.stages},
                {"generators", ne.generators},
                {"basis_size", ne.basis_size},
                {"witness", witness_json(aut, ne.witness)}}
               .dump()
        << "\n";
  } else {
    out << "not equivalent\nstages: " << ne.stages << "\nfailing polynomial: "
        << state_names(aut, ne.failing_polynomial) << "\nderivation:";
    if (ne.derivation_path.empty()) out << " (seed)";
    for (const auto& step : ne.derivation_path) {
      out << " " << aut.alphabet().at(step.letter) << "^" << step.degree;
    }
    out << "\n";
    if (ne.witness) {
      print_witness(out, aut, *ne.witness);
    } else if (!opt.no_witness) {
      out << "witness: none within depth " << opt.witness_cap << "\n";
    }
  }
  return kNotEquivalent;
}

int semantics(const std::string& file, const std::string& side, std::size_t depth, bool as_json,
              bool relaxed, std::ostream& out) {
  const Inputs in = load(file, relaxed);
  const Automaton& aut = in.problem.automaton;
  const TruncatedSemantics sem =
      truncated_semantics(aut, side == "left" ? in.left : in.right, depth);
  if (as_json) {
    json rows = json::array();
    for (const auto& [profile, value] : sem.values) {
      rows.push_back({{"profile", profile_json(aut, profile)}, {"probability", to_string(value)}});
    }
    out << json{{"depth", depth}, {"side", side}, {"profiles", rows}}.dump() << "\n";
  } else {
    out << "depth " << depth << " (" << side << ")\n";
    for (const auto& [profile, value] : sem.values) {
      out << profile_text(aut, profile) << " = " << to_string(value) << "\n";
    }
  }
  return 0;
}

int witness(const std::string& file, std::size_t cap, bool as_json, bool relaxed,
            std::ostream& out) {
  const Inputs in = load(file, relaxed);
  const Automaton& aut = in.problem.automaton;
  const auto w = find_witness(aut, in.left, in.right, cap);
  if (as_json) {
    out << witness_json(aut, w).dump() << "\n";
  } else if (w) {
    print_witness(out, aut, *w);
  } else {
    out << "no witness within depth " << cap << "\n";
  }
  return w ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Equivalence checking for probabilistic automata with angelic nondeterminism",
               "pkaeq"};
  app.require_subcommand(1);

  CheckOptions check_opt;
  auto* check_cmd = app.add_subcommand("check", "Decide behavioral equivalence of left and right");
  check_cmd->add_option("file", check_opt.file, "Problem file")->required();
  check_cmd->add_flag("--json", check_opt.json, "Machine-readable output");
  check_cmd->add_flag("--relaxed", check_opt.relaxed, "Allow signed weights");
  check_cmd->add_flag("--no-witness", check_opt.no_witness, "Skip the counterexample search");
  check_cmd->add_option("--witness-cap", check_opt.witness_cap, "Witness search depth")
      ->check(CLI::PositiveNumber);
  check_cmd->add_option("--max-stages", check_opt.max_stages, "Stage limit")
      ->check(CLI::PositiveNumber);
  check_cmd->add_flag("--trace", check_opt.trace, "Per-stage progress on stderr");

  std::string sem_file;
  std::string side;
  std::size_t depth = 0;
  bool sem_json = false;
  bool sem_relaxed = false;
  auto* sem_cmd = app.add_subcommand("semantics", "Print truncated profile probabilities");
  sem_cmd->add_option("file", sem_file, "Problem file")->required();
  sem_cmd->add_option("--side", side, "left or right")
      ->required()
      ->check(CLI::IsMember({"left", "right"}));
  sem_cmd->add_option("--depth", depth, "Words shorter than this")->required();
  sem_cmd->add_flag("--json", sem_json, "Machine-readable output");
  sem_cmd->add_flag("--relaxed", sem_relaxed, "Allow signed weights");

  std::string wit_file;
  std::size_t cap = 0;
  bool wit_json = false;
  bool wit_relaxed = false;
  auto* wit_cmd = app.add_subcommand("witness", "Search for a distinguishing profile");
  wit_cmd->add_option("file", wit_file, "Problem file")->required();
  wit_cmd->add_option("--cap", cap, "Maximum depth")->required()->check(CLI::PositiveNumber);
  wit_cmd->add_flag("--json", wit_json, "Machine-readable output");
  wit_cmd->add_flag("--relaxed", wit_relaxed, "Allow signed weights");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (*check_cmd) return check(check_opt, out, err);
    if (*sem_cmd) return semantics(sem_file, side, depth, sem_json, sem_relaxed, out);
    return witness(wit_file, cap, wit_json, wit_relaxed, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return kResourceError;
  }
}

}  // namespace pkaeq::cli
