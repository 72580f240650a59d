#pragma once

// Human-readable (4 decimals) and line-delimited JSON (full precision)
// renderings of beliefs, revision traces and mass combinations.

#include <iosfwd>
#include <string>
#include <vector>

#include "nmp/belief.hpp"
#include "nmp/network.hpp"
#include "nmp/revision.hpp"

namespace nmp {

struct StatementRow {
  std::string id;
  double bel = 0.0;      // Bel(S)
  double bel_not = 0.0;  // Bel(~S)
  double pl = 0.0;       // Pl(S)
  double unknown = 0.0;  // m(S, ~S)
  bool monitored = false;
  double conflict = 0.0;
};

struct Report {
  std::vector<StatementRow> statements;
};

Report make_report(const Network& net, const Beliefs& beliefs);

void write_text(std::ostream& out, const Report& report);
void write_json(std::ostream& out, const Report& report);

void write_trace_text(std::ostream& out, const RevisionTrace& trace);
void write_trace_json(std::ostream& out, const RevisionTrace& trace);

void write_summary_text(std::ostream& out, const ResolveResult& result);
void write_summary_json(std::ostream& out, const ResolveResult& result);

/// Combined masses, Bel/Pl of every subset (singletons and focal elements for
/// frames over 3 labels), and the conflict of every binary partition when
/// the frame has at most 3 labels.
void write_combination_text(std::ostream& out, const MassFunction& m);
void write_combination_json(std::ostream& out, const MassFunction& m);

}  // namespace nmp
