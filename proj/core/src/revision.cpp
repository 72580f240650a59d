#include "nmp/revision.hpp"

#include <algorithm>
#include <sstream>

#include "nmp/error.hpp"
#include "nmp/fuzzy.hpp"

namespace nmp {
namespace {

constexpr double kFullyDiscounted = 1e-8;

void raise(std::optional<double>& slot, double value) {
  if (!slot || *slot < value) slot = value;
}

double element_discount(const Network& net, ElementRef e) {
  return e.is_statement() ? net.statements()[e.index].discount
                          : net.rules()[e.index].discount;
}

}  // namespace

void EngineParams::validate() const {
  std::ostringstream msg;
  if (!(gamma > 0.0)) {
    msg << "gamma must be positive (got " << gamma << ")";
  } else if (!(delta > 0.0 && delta <= 1.0)) {
    msg << "delta must lie in (0, 1] (got " << delta << ")";
  } else if (max_iter < 1) {
    msg << "maxiter must be a positive integer (got " << max_iter << ")";
  } else {
    return;
  }
  throw InvalidArgument(msg.str());
}

EngineParams params_for(const KnowledgeBase& kb, EngineParams defaults) {
  const auto& o = kb.params();
  if (o.gamma) defaults.gamma = *o.gamma;
  if (o.delta) defaults.delta = *o.delta;
  if (o.max_iter) defaults.max_iter = *o.max_iter;
  return defaults;
}

bool FoundationsMap::empty() const {
  return std::none_of(pair.begin(), pair.end(),
                      [](const auto& d) { return d.has_value(); });
}

FoundationsMap foundations(const Network& net, const Beliefs& beliefs,
                           ElementRef target) {
  FoundationsMap f;
  f.pair.resize(net.pairs().size());
  f.statement.resize(net.statements().size());
  f.rule.resize(net.rules().size());

  // Every pair containing X sits in the list of an element that depends on
  // X, so walking the dependency order backwards settles X's degree before
  // X's own list is expanded.
  const auto& order = net.order();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const ElementRef x = *it;
    double reach;
    if (x == target) {
      reach = 1.0;
    } else if (auto d = f.element(x)) {
      reach = *d;
    } else {
      continue;
    }
    for (std::size_t p : net.support_list(x)) {
      const SupportPair& pair = net.pairs()[p];
      const double d = std::min(reach, mu_in(net, pair, beliefs));
      raise(f.pair[p], d);
      if (pair.statement) raise(f.statement[*pair.statement], d);
      if (pair.rule) raise(f.rule[*pair.rule], d);
    }
  }
  return f;
}

std::vector<Supposition> supposition(const Network& net, const Beliefs& beliefs,
                                     ElementRef target) {
  const FoundationsMap f = foundations(net, beliefs, target);
  std::vector<Supposition> out;
  auto consider = [&](ElementRef e) {
    if (auto d = f.element(e)) {
      out.push_back({e, std::min(*d, mu_assumption(net, e, beliefs))});
    }
  };
  for (std::size_t i = 0; i < net.statements().size(); ++i) {
    consider(ElementRef::statement(i));
  }
  for (std::size_t i = 0; i < net.rules().size(); ++i) {
    consider(ElementRef::rule(i));
  }
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    return net.declaration_rank(a.element) < net.declaration_rank(b.element);
  });
  return out;
}

Supposition select_culprit(const Network& net, const Beliefs& beliefs,
                           ElementRef target) {
  const auto sups = supposition(net, beliefs, target);
  if (sups.empty()) {
    throw InvalidArgument("'" + net.name(target) + "' has empty foundations");
  }
  // max_element keeps the first of equal maxima; sups is in declaration order.
  return *std::max_element(sups.begin(), sups.end(),
                           [](const auto& a, const auto& b) {
                             return a.degree < b.degree;
                           });
}

RevisionTarget select_revision_target(const Network& net,
                                      const Beliefs& beliefs,
                                      ElementRef culprit) {
  const auto list = net.support_list(culprit);
  if (list.empty()) {
    const double out = theta_mass(net, culprit, beliefs);
    return {std::nullopt, culprit, out, 1.0 - out};
  }
  std::size_t best = list.front();
  double best_out = mu_out(net, net.pairs()[best], beliefs);
  for (std::size_t p : list.subspan(1)) {
    const double out = mu_out(net, net.pairs()[p], beliefs);
    if (out > best_out) {
      best = p;
      best_out = out;
    }
  }
  const SupportPair& pair = net.pairs()[best];
  ElementRef element;
  if (pair.statement && pair.rule) {
    const double s_theta = beliefs.at(*pair.statement).theta_mass();
    const double r_theta = net.rule_theta(*pair.rule);
    element = s_theta >= r_theta ? ElementRef::statement(*pair.statement)
                                 : ElementRef::rule(*pair.rule);
  } else if (pair.statement) {
    element = ElementRef::statement(*pair.statement);
  } else {
    element = ElementRef::rule(*pair.rule);
  }
  return {best, element, best_out, 1.0 - best_out};
}

KnowledgeBase apply_revision(const KnowledgeBase& kb, std::string_view element,
                             double delta) {
  if (!(delta >= 0.0 && delta <= 1.0)) {
    throw InvalidArgument("revision step outside [0, 1]");
  }
  KnowledgeBase out = kb;
  double* rate = nullptr;
  if (auto* s = out.find_statement(element)) {
    rate = &s->discount;
  } else if (auto* r = out.find_rule(element)) {
    rate = &r->discount;
  } else {
    throw InvalidArgument("cannot revise unknown element '" +
                          std::string(element) + "'");
  }
  if (*rate >= 1.0 - kFullyDiscounted) {
    throw InvalidArgument("'" + std::string(element) +
                          "' is already fully discounted");
  }
  *rate = std::min(1.0, *rate + delta * (1.0 - *rate));
  return out;
}

std::string_view to_string(StopReason r) {
  switch (r) {
    case StopReason::NothingMonitored: return "nothing-monitored";
    case StopReason::GateClosed: return "gate-closed";
    case StopReason::NoFoundations: return "no-foundations";
    case StopReason::Exhausted: return "exhausted";
    case StopReason::MaxIterations: return "max-iterations";
    case StopReason::TotalConflict: return "total-conflict";
  }
  return "unknown";
}

int ResolveResult::revisions() const {
  return static_cast<int>(std::count_if(
      trace.begin(), trace.end(), [](const auto& e) { return e.applied; }));
}

double max_monitored_conflict(const Network& net, const Beliefs& beliefs) {
  double worst = 0.0;
  for (std::size_t s : net.monitored()) {
    worst = std::max(worst, conflict(beliefs.at(s), kYes));
  }
  return worst;
}

ResolveResult resolve_loop(KnowledgeBase kb, const EngineParams& params) {
  params.validate();
  ResolveResult res{kb, Network::build(kb), {}, {}, StopReason::NothingMonitored,
                    {}, 0.0, 0.0};
  try {
    res.beliefs = propagate(res.network);
  } catch (const TotalConflict& e) {
    res.stop = StopReason::TotalConflict;
    res.error = e.what();
    return res;
  }
  res.initial_conflict = max_monitored_conflict(res.network, res.beliefs);
  res.final_conflict = res.initial_conflict;
  if (res.network.monitored().empty()) return res;

  for (int iter = 1; iter <= params.max_iter; ++iter) {
    const Network& net = res.network;
    const Beliefs& beliefs = res.beliefs;

    std::size_t driver = net.monitored().front();
    double best_conflict = -1.0;
    double best_signif = -1.0;
    for (std::size_t s : net.monitored()) {
      const double c = conflict(beliefs[s], kYes);
      const double sig = significance(c, params.gamma);
      if (sig > best_signif) {
        driver = s;
        best_conflict = c;
        best_signif = sig;
      }
    }

    TraceEntry entry;
    entry.iteration = iter;
    entry.statement = net.statements()[driver].id;
    entry.conflict = best_conflict;
    entry.significance = best_signif;

    const ElementRef target = ElementRef::statement(driver);
    if (foundations(net, beliefs, target).empty()) {
      res.trace.push_back(entry);
      res.stop = StopReason::NoFoundations;
      break;
    }
    const Supposition culprit = select_culprit(net, beliefs, target);
    const RevisionTarget rt = select_revision_target(net, beliefs, culprit.element);
    entry.culprit = net.name(culprit.element);
    entry.supposition = culprit.degree;
    if (rt.pair) {
      entry.pair = net.describe(net.pairs()[*rt.pair]);
    } else {
      entry.pair = culprit.element.is_rule() ? "(-," + entry.culprit + ")"
                                             : "(" + entry.culprit + ",-)";
    }
    entry.mu_out = rt.mu_out;
    entry.mu_in = rt.mu_in;
    // A conflict of zero is nothing to resolve, even against zero resistance.
    entry.gate_passed = best_signif > 0.0 && best_signif >= rt.mu_in;
    if (!entry.gate_passed) {
      res.trace.push_back(entry);
      res.stop = StopReason::GateClosed;
      break;
    }

    entry.revised = net.name(rt.element);
    entry.theta_before = theta_mass(net, rt.element, beliefs);
    entry.theta_after = entry.theta_before;
    if (element_discount(net, rt.element) >= 1.0 - kFullyDiscounted ||
        entry.theta_before >= 1.0 - 1e-12) {
      res.trace.push_back(entry);
      res.stop = StopReason::Exhausted;
      break;
    }

    res.kb = apply_revision(res.kb, entry.revised, params.delta);
    res.network = Network::build(res.kb);
    try {
      res.beliefs = propagate(res.network);
    } catch (const TotalConflict& e) {
      entry.applied = true;
      if (rt.element.is_rule()) {
        entry.theta_after = res.network.rule_theta(rt.element.index);
      }
      res.trace.push_back(entry);
      res.stop = StopReason::TotalConflict;
      res.error = e.what();
      res.final_conflict = max_monitored_conflict(res.network, res.beliefs);
      return res;
    }
    entry.applied = true;
    entry.theta_after = theta_mass(res.network, rt.element, res.beliefs);
    res.trace.push_back(entry);
    if (iter == params.max_iter) res.stop = StopReason::MaxIterations;
  }
  res.final_conflict = max_monitored_conflict(res.network, res.beliefs);
  return res;
}

}  // namespace nmp
