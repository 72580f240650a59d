#pragma once

// Foundations, suppositions, culprit selection and the conflict-driven
// revision loop.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nmp/knowledge_base.hpp"
#include "nmp/network.hpp"

namespace nmp {

struct EngineParams {
  double gamma = 1.0;   // significance exponent, > 0
  double delta = 0.25;  // revision step, (0, 1]
  int max_iter = 100;

  /// Throws InvalidArgument when a field is out of range.
  void validate() const;
};

/// Defaults, then the knowledge base's `param` overrides.
EngineParams params_for(const KnowledgeBase& kb, EngineParams defaults = {});

/// Degree to which each pair and each element is part of a target's
/// foundations. Unreachable entries are empty.
struct FoundationsMap {
  std::vector<std::optional<double>> pair;       // indexed like Network::pairs()
  std::vector<std::optional<double>> statement;  // indexed like statements()
  std::vector<std::optional<double>> rule;       // indexed like rules()

  std::optional<double> element(ElementRef e) const {
    return e.is_statement() ? statement.at(e.index) : rule.at(e.index);
  }
  bool empty() const;
};

/// Max over reason chains from `target` of the min in-membership along the
/// chain, computed by max-min propagation in reverse dependency order.
/// Element degrees are the sup over the pairs containing the element.
FoundationsMap foundations(const Network& net, const Beliefs& beliefs,
                           ElementRef target);

struct Supposition {
  ElementRef element;
  double degree;
};

/// min(foundations, assumption) for every element in the target's
/// foundations, in declaration order.
std::vector<Supposition> supposition(const Network& net, const Beliefs& beliefs,
                                     ElementRef target);

/// Element with the largest supposition; ties go to the first declared.
/// Throws InvalidArgument when the target has empty foundations.
Supposition select_culprit(const Network& net, const Beliefs& beliefs,
                           ElementRef target);

struct RevisionTarget {
  /// Pair of the culprit's support list with the largest out-membership;
  /// empty when the culprit has no reasons, in which case the culprit itself
  /// is revised and its own Theta-mass stands in for the pair's.
  std::optional<std::size_t> pair;
  ElementRef element;
  double mu_out;
  double mu_in;
};

RevisionTarget select_revision_target(const Network& net,
                                      const Beliefs& beliefs,
                                      ElementRef culprit);

/// Raises the discount of the named statement or rule: r <- r + delta (1 - r).
/// Throws InvalidArgument for an unknown id, delta outside [0, 1], or an
/// element already fully discounted (r >= 1 - 1e-8).
KnowledgeBase apply_revision(const KnowledgeBase& kb, std::string_view element,
                             double delta);

struct TraceEntry {
  int iteration = 0;
  std::string statement;
  double conflict = 0.0;
  double significance = 0.0;
  std::string culprit;
  double supposition = 0.0;
  std::string pair;
  double mu_out = 0.0;
  double mu_in = 0.0;
  bool gate_passed = false;
  bool applied = false;
  std::string revised;
  double theta_before = 0.0;
  double theta_after = 0.0;
};

using RevisionTrace = std::vector<TraceEntry>;

enum class StopReason {
  NothingMonitored,  // no statements
  GateClosed,        // significance below the candidate's resistance
  NoFoundations,     // monitored statement has no reasons to revise
  Exhausted,         // the chosen element cannot take more discount
  MaxIterations,
  TotalConflict,     // propagation failed; trace is partial
};

std::string_view to_string(StopReason r);

struct ResolveResult {
  KnowledgeBase kb;  // with the applied revisions
  Network network;
  Beliefs beliefs;   // empty if the first propagation failed
  RevisionTrace trace;
  StopReason stop = StopReason::NothingMonitored;
  std::string error;
  double initial_conflict = 0.0;
  double final_conflict = 0.0;

  int revisions() const;
};

/// Max conflict over the monitored statements.
double max_monitored_conflict(const Network& net, const Beliefs& beliefs);

/// Repeatedly propagates, takes the monitored statement with the most
/// significant conflict, selects culprit and revision target, and applies one
/// revision while significance >= the target's in-membership. At most
/// `params.max_iter` iterations; every iteration appends one trace entry.
/// Throws NetworkError for a malformed knowledge base.
ResolveResult resolve_loop(KnowledgeBase kb, const EngineParams& params);

}  // namespace nmp
