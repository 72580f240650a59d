#pragma once

// In-memory knowledge base: statements, evidence sources and rules, declared
// reasons, queries and engine parameter overrides.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nmp {

struct StatementDecl {
  std::string id;
  /// Discount applied to the statement's combined mass. Raised when the
  /// statement itself is revised.
  double discount = 0.0;

  bool operator==(const StatementDecl&) const = default;
};

/// A rule with no antecedents is an evidence source.
struct RuleDecl {
  std::string id;
  std::vector<std::string> antecedents;
  std::string consequent;
  double yes = 0.0;
  double no = 0.0;
  double unknown = 1.0;
  double discount = 0.0;
  /// Declared with the `evidence` keyword. Only affects serialization.
  bool evidence = false;

  bool operator==(const RuleDecl&) const = default;
};

/// `reason <target> includes <statement>`: statement is a possible reason for
/// a statement or rule target.
struct ReasonDecl {
  std::string target;
  std::string statement;

  bool operator==(const ReasonDecl&) const = default;
};

struct ParamOverrides {
  std::optional<double> gamma;
  std::optional<double> delta;
  std::optional<int> max_iter;

  bool operator==(const ParamOverrides&) const = default;
};

enum class DeclKind { Statement, Rule };

struct DeclRef {
  DeclKind kind;
  std::size_t index;

  bool operator==(const DeclRef&) const = default;
};

class KnowledgeBase {
 public:
  /// The add_* members validate locally (unique ids, mass sums, rates) and
  /// throw InvalidArgument. Cross references are checked when a Network is
  /// built.
  void add_statement(StatementDecl s);
  void add_rule(RuleDecl r);
  void add_reason(ReasonDecl r);
  /// Repeated queries are ignored.
  void add_query(std::string statement);

  const std::vector<StatementDecl>& statements() const { return statements_; }
  const std::vector<RuleDecl>& rules() const { return rules_; }
  const std::vector<ReasonDecl>& reasons() const { return reasons_; }
  const std::vector<std::string>& queries() const { return queries_; }
  /// Statements and rules interleaved in declaration order.
  const std::vector<DeclRef>& declaration_order() const { return order_; }

  ParamOverrides& params() { return params_; }
  const ParamOverrides& params() const { return params_; }

  const StatementDecl* find_statement(std::string_view id) const;
  const RuleDecl* find_rule(std::string_view id) const;
  StatementDecl* find_statement(std::string_view id);
  RuleDecl* find_rule(std::string_view id);
  bool has_id(std::string_view id) const;

  bool empty() const { return order_.empty(); }

  bool operator==(const KnowledgeBase&) const = default;

 private:
  std::vector<StatementDecl> statements_;
  std::vector<RuleDecl> rules_;
  std::vector<ReasonDecl> reasons_;
  std::vector<std::string> queries_;
  std::vector<DeclRef> order_;
  ParamOverrides params_;
};

/// Fills `unknown` as 1 - yes - no and validates the three masses.
/// Throws InvalidArgument when a mass is negative or they do not sum to 1
/// within 1e-6.
void check_rule_masses(const RuleDecl& r);

}  // namespace nmp
