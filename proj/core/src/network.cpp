#include "nmp/network.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "nmp/error.hpp"

namespace nmp {

const Frame& binary_frame() {
  static const Frame frame({"yes", "no"});
  return frame;
}

namespace {

MassFunction base_mass(const RuleDecl& r) {
  const double sum = r.yes + r.no + r.unknown;
  return MassFunction::from_assignments(
      binary_frame(),
      {{kYes, r.yes / sum}, {kNo, r.no / sum}, {kEither, r.unknown / sum}});
}

}  // namespace

Network Network::build(const KnowledgeBase& kb) {
  Network net;
  std::map<std::string, ElementRef, std::less<>> ids;

  for (const auto& s : kb.statements()) {
    ids.emplace(s.id, ElementRef::statement(net.statements_.size()));
    net.statements_.push_back({s.id, s.discount, {}});
  }
  for (const auto& r : kb.rules()) {
    ids.emplace(r.id, ElementRef::rule(net.rules_.size()));
    net.rules_.push_back({r.id, {}, 0, base_mass(r), r.discount, r.evidence});
  }

  auto statement_index = [&](const std::string& id,
                             const std::string& context) -> std::size_t {
    auto it = ids.find(id);
    if (it == ids.end()) {
      throw NetworkError(context + ": unknown statement '" + id + "'");
    }
    if (!it->second.is_statement()) {
      throw NetworkError(context + ": '" + id + "' is a rule, not a statement");
    }
    return it->second.index;
  };

  for (std::size_t i = 0; i < kb.rules().size(); ++i) {
    const auto& r = kb.rules()[i];
    auto& node = net.rules_[i];
    node.consequent = statement_index(r.consequent, "rule '" + r.id + "'");
    for (const auto& a : r.antecedents) {
      node.antecedents.push_back(statement_index(a, "rule '" + r.id + "'"));
    }
    net.statements_[node.consequent].incoming.push_back(i);
  }

  net.statement_rank_.assign(net.statements_.size(), 0);
  net.rule_rank_.assign(net.rules_.size(), 0);
  for (std::size_t rank = 0; rank < kb.declaration_order().size(); ++rank) {
    const auto& d = kb.declaration_order()[rank];
    (d.kind == DeclKind::Statement ? net.statement_rank_
                                   : net.rule_rank_)[d.index] = rank;
  }

  // Support lists. A statement's list holds (antecedent, rule) for each rule
  // concluding it, (-, rule) for evidence sources, then declared reasons.
  net.statement_lists_.resize(net.statements_.size());
  net.rule_lists_.resize(net.rules_.size());
  auto add_pair = [&](SupportPair p) {
    auto& list = p.target.is_statement() ? net.statement_lists_[p.target.index]
                                         : net.rule_lists_[p.target.index];
    for (std::size_t existing : list) {
      if (net.pairs_[existing] == p) return;
    }
    list.push_back(net.pairs_.size());
    net.pairs_.push_back(p);
  };
  for (std::size_t s = 0; s < net.statements_.size(); ++s) {
    for (std::size_t r : net.statements_[s].incoming) {
      const auto& rule = net.rules_[r];
      if (rule.antecedents.empty()) {
        add_pair({std::nullopt, r, ElementRef::statement(s)});
      }
      for (std::size_t a : rule.antecedents) {
        add_pair({a, r, ElementRef::statement(s)});
      }
    }
  }

  // Dependency edges: antecedent -> rule -> consequent, reason -> target.
  const std::size_t ns = net.statements_.size();
  const std::size_t n = ns + net.rules_.size();
  auto node_of = [ns](ElementRef e) {
    return e.is_statement() ? e.index : ns + e.index;
  };
  std::vector<std::vector<std::size_t>> edges(n);
  for (std::size_t r = 0; r < net.rules_.size(); ++r) {
    for (std::size_t a : net.rules_[r].antecedents) edges[a].push_back(ns + r);
    edges[ns + r].push_back(net.rules_[r].consequent);
  }
  for (const auto& reason : kb.reasons()) {
    auto it = ids.find(reason.target);
    if (it == ids.end()) {
      throw NetworkError("reason: unknown target '" + reason.target + "'");
    }
    const std::size_t s =
        statement_index(reason.statement, "reason for '" + reason.target + "'");
    add_pair({s, std::nullopt, it->second});
    edges[s].push_back(node_of(it->second));
  }

  // Kahn's algorithm; ready nodes are released in declaration order.
  std::vector<std::size_t> indegree(n, 0);
  for (const auto& out : edges) {
    for (std::size_t v : out) ++indegree[v];
  }
  auto ref_of = [ns](std::size_t v) {
    return v < ns ? ElementRef::statement(v) : ElementRef::rule(v - ns);
  };
  auto rank_of = [&](std::size_t v) { return net.declaration_rank(ref_of(v)); };
  auto later = [&](std::size_t a, std::size_t b) { return rank_of(a) > rank_of(b); };
  std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(later)>
      ready(later);
  for (std::size_t v = 0; v < n; ++v) {
    if (indegree[v] == 0) ready.push(v);
  }
  while (!ready.empty()) {
    const std::size_t v = ready.top();
    ready.pop();
    net.order_.push_back(ref_of(v));
    for (std::size_t w : edges[v]) {
      if (--indegree[w] == 0) ready.push(w);
    }
  }
  if (net.order_.size() != n) {
    std::string members;
    for (std::size_t v = 0; v < n; ++v) {
      if (indegree[v] > 0) {
        if (!members.empty()) members += ", ";
        members += net.name(ref_of(v));
      }
    }
    throw NetworkError("cycle detected involving: " + members);
  }

  for (const auto& q : kb.queries()) {
    net.monitored_.push_back(statement_index(q, "query"));
  }
  if (net.monitored_.empty()) {
    for (std::size_t s = 0; s < ns; ++s) net.monitored_.push_back(s);
  }
  return net;
}

std::span<const std::size_t> Network::support_list(ElementRef target) const {
  return target.is_statement() ? statement_lists_.at(target.index)
                               : rule_lists_.at(target.index);
}

std::size_t Network::declaration_rank(ElementRef e) const {
  return e.is_statement() ? statement_rank_.at(e.index) : rule_rank_.at(e.index);
}

std::optional<ElementRef> Network::find(std::string_view id) const {
  for (std::size_t i = 0; i < statements_.size(); ++i) {
    if (statements_[i].id == id) return ElementRef::statement(i);
  }
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    if (rules_[i].id == id) return ElementRef::rule(i);
  }
  return std::nullopt;
}

const std::string& Network::name(ElementRef e) const {
  return e.is_statement() ? statements_.at(e.index).id : rules_.at(e.index).id;
}

std::string Network::describe(const SupportPair& p) const {
  std::string out = "(";
  out += p.statement ? statements_[*p.statement].id : "-";
  out += ',';
  out += p.rule ? rules_[*p.rule].id : "-";
  return out + ")";
}

double Network::rule_theta(std::size_t rule) const {
  const auto& r = rules_.at(rule);
  return discount(r.base, r.discount).theta_mass();
}

Network Network::with_order(std::vector<ElementRef> order) const {
  Network copy = *this;
  copy.order_ = std::move(order);
  return copy;
}

double activation(const Network& net, std::size_t rule, const Beliefs& beliefs) {
  double act = 1.0;
  for (std::size_t a : net.rules().at(rule).antecedents) {
    act = std::min(act, belief(beliefs.at(a), kYes));
  }
  return act;
}

MassFunction effective_rule_mass(const MassFunction& base, double base_discount,
                                 double activation) {
  if (!(activation >= 0.0 && activation <= 1.0)) {
    throw InvalidArgument("activation outside [0, 1]");
  }
  return discount(base, 1.0 - (1.0 - base_discount) * activation);
}

MassFunction effective_rule_mass(const Network& net, std::size_t rule,
                                 const Beliefs& beliefs) {
  const auto& r = net.rules().at(rule);
  return effective_rule_mass(r.base, r.discount,
                             activation(net, rule, beliefs));
}

Beliefs propagate(const Network& net) {
  Beliefs beliefs(net.statements().size(),
                  MassFunction::vacuous(binary_frame()));
  std::vector<MassFunction> contributions;
  for (const ElementRef e : net.order()) {
    if (!e.is_statement()) continue;
    const auto& s = net.statements()[e.index];
    if (s.incoming.empty()) continue;
    contributions.clear();
    for (std::size_t r : s.incoming) {
      contributions.push_back(effective_rule_mass(net, r, beliefs));
    }
    try {
      beliefs[e.index] = discount(combine_all(contributions), s.discount);
    } catch (const TotalConflict& ex) {
      throw TotalConflict("statement '" + s.id + "': " + ex.what(),
                          ex.conflict());
    }
  }
  return beliefs;
}

double theta_mass(const Network& net, ElementRef e, const Beliefs& beliefs) {
  return e.is_statement() ? beliefs.at(e.index).theta_mass()
                          : net.rule_theta(e.index);
}

double mu_out(const Network& net, const SupportPair& pair,
              const Beliefs& beliefs) {
  double out = 1.0;
  if (pair.statement) out = std::min(out, beliefs.at(*pair.statement).theta_mass());
  if (pair.rule) out = std::min(out, net.rule_theta(*pair.rule));
  return out;
}

double mu_assumption(const Network& net, ElementRef target,
                     const Beliefs& beliefs) {
  const auto list = net.support_list(target);
  if (list.empty()) return 1.0;
  double total = 0.0;
  for (std::size_t p : list) total += mu_out(net, net.pairs()[p], beliefs);
  return std::clamp(total / static_cast<double>(list.size()), 0.0, 1.0);
}

}  // namespace nmp
