#include "nmp/report.hpp"

#include <cstdio>
#include <ostream>
#include <set>

#include "json.hpp"
#include "nmp/fuzzy.hpp"

namespace nmp {
namespace {

using Json = nlohmann::ordered_json;

std::string fixed4(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

std::vector<Subset> table_subsets(const MassFunction& m) {
  const Frame& f = m.frame();
  std::set<Subset> out;
  if (f.size() <= 3) {
    for (std::uint32_t bits = 1; bits <= f.theta().bits(); ++bits) {
      out.insert(Subset(bits));
    }
  } else {
    for (std::size_t i = 0; i < f.size(); ++i) {
      out.insert(Subset(std::uint32_t{1} << i));
    }
    for (const auto& [s, v] : m.focal()) out.insert(s);
  }
  return {out.begin(), out.end()};
}

/// Each unordered partition {S, ~S} once: S is the side holding label 0.
std::vector<Subset> partitions(const Frame& f) {
  std::vector<Subset> out;
  if (f.size() < 2 || f.size() > 3) return out;
  for (std::uint32_t bits = 1; bits < f.theta().bits(); ++bits) {
    if (bits & 1u) out.push_back(Subset(bits));
  }
  return out;
}

}  // namespace

Report make_report(const Network& net, const Beliefs& beliefs) {
  Report r;
  std::set<std::size_t> monitored(net.monitored().begin(), net.monitored().end());
  for (std::size_t i = 0; i < net.statements().size(); ++i) {
    const MassFunction& m = beliefs.at(i);
    StatementRow row;
    row.id = net.statements()[i].id;
    row.bel = belief(m, kYes);
    row.bel_not = belief(m, kNo);
    row.pl = plausibility(m, kYes);
    row.unknown = m.theta_mass();
    row.monitored = monitored.count(i) > 0;
    row.conflict = conflict(row.bel, row.bel_not);
    r.statements.push_back(row);
  }
  return r;
}

void write_text(std::ostream& out, const Report& report) {
  std::size_t width = 9;
  for (const auto& s : report.statements) width = std::max(width, s.id.size());
  auto pad = [&](const std::string& s) {
    return s + std::string(width - s.size() + 2, ' ');
  };
  out << pad("statement") << "bel     bel_not pl      unknown conflict\n";
  for (const auto& s : report.statements) {
    out << pad(s.id) << fixed4(s.bel) << "  " << fixed4(s.bel_not) << "  "
        << fixed4(s.pl) << "  " << fixed4(s.unknown) << "  "
        << (s.monitored ? fixed4(s.conflict) : std::string("-")) << '\n';
  }
}

void write_json(std::ostream& out, const Report& report) {
  for (const auto& s : report.statements) {
    Json j;
    j["type"] = "statement";
    j["id"] = s.id;
    j["bel"] = s.bel;
    j["bel_not"] = s.bel_not;
    j["pl"] = s.pl;
    j["unknown"] = s.unknown;
    j["monitored"] = s.monitored;
    if (s.monitored) j["conflict"] = s.conflict;
    out << j.dump() << '\n';
  }
}

void write_trace_text(std::ostream& out, const RevisionTrace& trace) {
  for (const auto& e : trace) {
    out << "iter=" << e.iteration << " statement=" << e.statement
        << " conflict=" << fixed4(e.conflict)
        << " signif=" << fixed4(e.significance)
        << " culprit=" << (e.culprit.empty() ? "-" : e.culprit)
        << " supposition=" << fixed4(e.supposition)
        << " pair=" << (e.pair.empty() ? "-" : e.pair)
        << " out=" << fixed4(e.mu_out) << " in=" << fixed4(e.mu_in)
        << " gate=" << (e.gate_passed ? "open" : "closed")
        << " applied=" << (e.applied ? "yes" : "no")
        << " revised=" << (e.revised.empty() ? "-" : e.revised)
        << " theta=" << fixed4(e.theta_before) << "->" << fixed4(e.theta_after)
        << '\n';
  }
}

void write_trace_json(std::ostream& out, const RevisionTrace& trace) {
  for (const auto& e : trace) {
    Json j;
    j["type"] = "trace";
    j["iteration"] = e.iteration;
    j["statement"] = e.statement;
    j["conflict"] = e.conflict;
    j["significance"] = e.significance;
    j["culprit"] = e.culprit;
    j["supposition"] = e.supposition;
    j["pair"] = e.pair;
    j["mu_out"] = e.mu_out;
    j["mu_in"] = e.mu_in;
    j["gate_passed"] = e.gate_passed;
    j["applied"] = e.applied;
    j["revised"] = e.revised;
    j["theta_before"] = e.theta_before;
    j["theta_after"] = e.theta_after;
    out << j.dump() << '\n';
  }
}

void write_summary_text(std::ostream& out, const ResolveResult& result) {
  out << "stop=" << to_string(result.stop)
      << " revisions=" << result.revisions()
      << " initial_conflict=" << fixed4(result.initial_conflict)
      << " final_conflict=" << fixed4(result.final_conflict) << '\n';
}

void write_summary_json(std::ostream& out, const ResolveResult& result) {
  Json j;
  j["type"] = "summary";
  j["stop"] = std::string(to_string(result.stop));
  j["revisions"] = result.revisions();
  j["initial_conflict"] = result.initial_conflict;
  j["final_conflict"] = result.final_conflict;
  out << j.dump() << '\n';
}

void write_combination_text(std::ostream& out, const MassFunction& m) {
  const Frame& f = m.frame();
  out << "frame";
  for (const auto& l : f.labels()) out << ' ' << l;
  out << '\n';
  for (const auto& [s, v] : m.focal()) {
    out << "m(" << f.format(s) << ") = " << fixed4(v) << '\n';
  }
  for (Subset s : table_subsets(m)) {
    out << "Bel(" << f.format(s) << ") = " << fixed4(belief(m, s))
        << "  Pl(" << f.format(s) << ") = " << fixed4(plausibility(m, s)) << '\n';
  }
  for (Subset s : partitions(f)) {
    out << "conflict(" << f.format(s) << " | " << f.format(f.complement(s))
        << ") = " << fixed4(conflict(m, s)) << '\n';
  }
}

void write_combination_json(std::ostream& out, const MassFunction& m) {
  const Frame& f = m.frame();
  out << Json{{"type", "frame"}, {"labels", f.labels()}}.dump() << '\n';
  for (const auto& [s, v] : m.focal()) {
    out << Json{{"type", "mass"}, {"subset", f.labels_of(s)}, {"mass", v}}.dump()
        << '\n';
  }
  for (Subset s : table_subsets(m)) {
    out << Json{{"type", "belief"},
                {"subset", f.labels_of(s)},
                {"bel", belief(m, s)},
                {"pl", plausibility(m, s)}}
               .dump()
        << '\n';
  }
  for (Subset s : partitions(f)) {
    out << Json{{"type", "conflict"},
                {"subset", f.labels_of(s)},
                {"complement", f.labels_of(f.complement(s))},
                {"conflict", conflict(m, s)}}
               .dump()
        << '\n';
  }
}

}  // namespace nmp
