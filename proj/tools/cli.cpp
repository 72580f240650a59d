#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "nmp/belief.hpp"
#include "nmp/error.hpp"
#include "nmp/kb_format.hpp"
#include "nmp/mass_file.hpp"
#include "nmp/network.hpp"
#include "nmp/report.hpp"
#include "nmp/revision.hpp"

namespace nmp::cli {
namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

KnowledgeBase load_kb(const std::string& path) {
  try {
    return parse_kb(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(e.line(), path + ": " + e.what());
  }
}

int check(const std::string& path, std::ostream& out) {
  const KnowledgeBase kb = load_kb(path);
  const Network net = Network::build(kb);
  out << "ok: " << net.statements().size() << " statements, "
      << net.rules().size() << " rules, " << net.pairs().size()
      << " support pairs\n";
  return kExitOk;
}

int infer(const std::string& path, bool json, std::ostream& out) {
  const KnowledgeBase kb = load_kb(path);
  const Network net = Network::build(kb);
  const Report report = make_report(net, propagate(net));
  json ? write_json(out, report) : write_text(out, report);
  return kExitOk;
}

struct ResolveFlags {
  std::optional<double> gamma;
  std::optional<double> delta;
  std::optional<int> max_iter;
  bool trace = false;
  bool json = false;
};

int resolve(const std::string& path, const ResolveFlags& flags,
            std::ostream& out, std::ostream& err) {
  const KnowledgeBase kb = load_kb(path);
  EngineParams params = params_for(kb);
  if (flags.gamma) params.gamma = *flags.gamma;
  if (flags.delta) params.delta = *flags.delta;
  if (flags.max_iter) params.max_iter = *flags.max_iter;
  const ResolveResult result = resolve_loop(kb, params);

  if (flags.trace) {
    flags.json ? write_trace_json(out, result.trace)
               : write_trace_text(out, result.trace);
  }
  if (!result.beliefs.empty()) {
    const Report report = make_report(result.network, result.beliefs);
    flags.json ? write_json(out, report) : write_text(out, report);
  }
  flags.json ? write_summary_json(out, result) : write_summary_text(out, result);
  if (result.stop == StopReason::TotalConflict) {
    err << "nmp: " << result.error << '\n';
    return kExitTotalConflict;
  }
  return kExitOk;
}

int combine(const std::vector<std::string>& paths, bool json, std::ostream& out) {
  std::vector<MassFunction> masses;
  for (const auto& p : paths) {
    try {
      masses.push_back(parse_mass_file(read_file(p)).effective());
    } catch (const ParseError& e) {
      throw ParseError(e.line(), p + ": " + e.what());
    }
  }
  const MassFunction combined = combine_all(masses);
  json ? write_combination_json(out, combined)
       : write_combination_text(out, combined);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Non-monotonic belief-function inference engine", "nmp"};
  app.require_subcommand(1);

  std::string kb_path;
  bool json = false;

  auto* check_cmd = app.add_subcommand("check", "Validate a knowledge base");
  check_cmd->add_option("file", kb_path, "Knowledge-base file")->required();

  auto* infer_cmd = app.add_subcommand("infer", "Propagate beliefs once");
  infer_cmd->add_option("file", kb_path, "Knowledge-base file")->required();
  infer_cmd->add_flag("--json", json, "Line-delimited JSON output");

  ResolveFlags flags;
  auto* resolve_cmd =
      app.add_subcommand("resolve", "Run conflict-driven revision");
  resolve_cmd->add_option("file", kb_path, "Knowledge-base file")->required();
  resolve_cmd->add_option("--gamma", flags.gamma, "Significance exponent (> 0)");
  resolve_cmd->add_option("--delta", flags.delta, "Revision step in (0, 1]");
  resolve_cmd->add_option("--max-iter", flags.max_iter, "Iteration bound");
  resolve_cmd->add_flag("--trace", flags.trace, "Print the revision trace");
  resolve_cmd->add_flag("--json", flags.json, "Line-delimited JSON output");

  std::vector<std::string> mass_paths;
  auto* combine_cmd =
      app.add_subcommand("combine", "Combine mass files by Dempster's rule");
  combine_cmd->add_option("files", mass_paths, "Mass files")->required();
  combine_cmd->add_flag("--json", json, "Line-delimited JSON output");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (*check_cmd) return check(kb_path, out);
    if (*infer_cmd) return infer(kb_path, json, out);
    if (*resolve_cmd) return resolve(kb_path, flags, out, err);
    if (*combine_cmd) return combine(mass_paths, json, out);
  } catch (const TotalConflict& e) {
    err << "nmp: " << e.what() << '\n';
    return kExitTotalConflict;
  } catch (const Error& e) {
    err << "nmp: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitInvalid;
}

}  // namespace nmp::cli
