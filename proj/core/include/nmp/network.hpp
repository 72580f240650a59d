#pragma once

// Rule network compiled from a knowledge base: statements over the binary
// frame {yes, no}, rules with base masses, derived support lists, belief
// propagation, and the in/out membership measures over support pairs.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nmp/belief.hpp"
#include "nmp/knowledge_base.hpp"

namespace nmp {

/// The frame every statement lives on: {yes, no}. yes = S, no = ~S.
const Frame& binary_frame();
inline constexpr Subset kYes{0b01};
inline constexpr Subset kNo{0b10};
inline constexpr Subset kEither{0b11};

enum class ElementKind { Statement, Rule };

struct ElementRef {
  ElementKind kind;
  std::size_t index;

  static ElementRef statement(std::size_t i) { return {ElementKind::Statement, i}; }
  static ElementRef rule(std::size_t i) { return {ElementKind::Rule, i}; }

  bool is_statement() const { return kind == ElementKind::Statement; }
  bool is_rule() const { return kind == ElementKind::Rule; }

  auto operator<=>(const ElementRef&) const = default;
};

/// One reason in a target's support list. An evidence source contributes a
/// pair with no statement; a declared reason contributes a pair with no rule.
struct SupportPair {
  std::optional<std::size_t> statement;
  std::optional<std::size_t> rule;
  ElementRef target;

  bool operator==(const SupportPair&) const = default;
};

struct StatementNode {
  std::string id;
  double discount = 0.0;
  /// Rules concluding this statement, in declaration order.
  std::vector<std::size_t> incoming;
};

struct RuleNode {
  std::string id;
  std::vector<std::size_t> antecedents;
  std::size_t consequent = 0;
  MassFunction base;
  double discount = 0.0;
  bool evidence = false;
};

/// Mass per statement, indexed like Network::statements().
using Beliefs = std::vector<MassFunction>;

class Network {
 public:
  /// Throws NetworkError on a dangling id or a cycle through antecedents,
  /// consequents and declared reasons.
  static Network build(const KnowledgeBase& kb);

  const std::vector<StatementNode>& statements() const { return statements_; }
  const std::vector<RuleNode>& rules() const { return rules_; }
  const std::vector<SupportPair>& pairs() const { return pairs_; }

  /// Indices into pairs() forming the support list of `target`.
  std::span<const std::size_t> support_list(ElementRef target) const;

  /// Statements and rules, every element after everything it depends on.
  const std::vector<ElementRef>& order() const { return order_; }
  /// Position of the element in the knowledge base's declaration order.
  std::size_t declaration_rank(ElementRef e) const;

  /// Monitored statements: the declared queries, else every statement.
  const std::vector<std::size_t>& monitored() const { return monitored_; }

  std::optional<ElementRef> find(std::string_view id) const;
  const std::string& name(ElementRef e) const;
  /// "(a,r1)", "(-,e1)" for an evidence source, "(s,-)" for a declared reason.
  std::string describe(const SupportPair& p) const;

  /// Theta-mass of the rule's discounted base mass, m_R(S, ~S).
  double rule_theta(std::size_t rule) const;

  /// Same network with elements visited in a different valid order; used to
  /// check that propagation does not depend on the choice.
  Network with_order(std::vector<ElementRef> order) const;

 private:
  std::vector<StatementNode> statements_;
  std::vector<RuleNode> rules_;
  std::vector<SupportPair> pairs_;
  std::vector<std::vector<std::size_t>> statement_lists_;
  std::vector<std::vector<std::size_t>> rule_lists_;
  std::vector<ElementRef> order_;
  std::vector<std::size_t> statement_rank_;
  std::vector<std::size_t> rule_rank_;
  std::vector<std::size_t> monitored_;
};

/// Weakest-link activation of a rule: min over antecedents of Bel(S_i);
/// 1 for an evidence source.
double activation(const Network& net, std::size_t rule, const Beliefs& beliefs);

/// The rule's base mass discounted at 1 - (1 - base_discount) * activation.
MassFunction effective_rule_mass(const MassFunction& base, double base_discount,
                                 double activation);
MassFunction effective_rule_mass(const Network& net, std::size_t rule,
                                 const Beliefs& beliefs);

/// Visits statements in order(); each statement's mass is the Dempster
/// combination of its incoming effective rule masses (vacuous when there are
/// none), then discounted by the statement's own discount. Throws
/// TotalConflict naming the statement.
Beliefs propagate(const Network& net);

/// Theta-mass of a statement (current belief) or a rule (rule_theta).
double theta_mass(const Network& net, ElementRef e, const Beliefs& beliefs);

/// Out-membership of a pair: min of the statement's Theta-mass and the rule's
/// Theta-mass, over whichever of the two the pair has.
double mu_out(const Network& net, const SupportPair& pair,
              const Beliefs& beliefs);
inline double mu_in(const Network& net, const SupportPair& pair,
                    const Beliefs& beliefs) {
  return 1.0 - mu_out(net, pair, beliefs);
}

/// Mean out-membership over the target's support list; 1 for an empty list.
double mu_assumption(const Network& net, ElementRef target,
                     const Beliefs& beliefs);

}  // namespace nmp
