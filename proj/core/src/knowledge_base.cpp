#include "nmp/knowledge_base.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "nmp/error.hpp"

namespace nmp {
namespace {

bool valid_rate(double r) { return r >= 0.0 && r <= 1.0; }

void check_id(std::string_view id) {
  if (id.empty()) throw InvalidArgument("empty identifier");
}

}  // namespace

void check_rule_masses(const RuleDecl& r) {
  for (double v : {r.yes, r.no, r.unknown}) {
    if (!std::isfinite(v) || v < 0.0) {
      std::ostringstream msg;
      msg << "'" << r.id << "': masses must be non-negative (yes=" << r.yes
          << " no=" << r.no << " unknown=" << r.unknown << ")";
      throw InvalidArgument(msg.str());
    }
  }
  const double sum = r.yes + r.no + r.unknown;
  if (std::abs(sum - 1.0) > 1e-6) {
    std::ostringstream msg;
    msg << "'" << r.id << "': yes+no+unknown = " << sum << ", expected 1";
    throw InvalidArgument(msg.str());
  }
}

void KnowledgeBase::add_statement(StatementDecl s) {
  check_id(s.id);
  if (has_id(s.id)) throw InvalidArgument("duplicate id '" + s.id + "'");
  if (!valid_rate(s.discount)) {
    throw InvalidArgument("'" + s.id + "': discount outside [0, 1]");
  }
  order_.push_back({DeclKind::Statement, statements_.size()});
  statements_.push_back(std::move(s));
}

void KnowledgeBase::add_rule(RuleDecl r) {
  check_id(r.id);
  check_id(r.consequent);
  if (has_id(r.id)) throw InvalidArgument("duplicate id '" + r.id + "'");
  check_rule_masses(r);
  if (!valid_rate(r.discount)) {
    throw InvalidArgument("'" + r.id + "': discount outside [0, 1]");
  }
  for (std::size_t i = 0; i < r.antecedents.size(); ++i) {
    check_id(r.antecedents[i]);
    if (r.antecedents[i] == r.consequent) {
      throw InvalidArgument("'" + r.id + "': consequent '" + r.consequent +
                            "' is also an antecedent");
    }
    if (std::find(r.antecedents.begin(), r.antecedents.begin() + i,
                  r.antecedents[i]) != r.antecedents.begin() + i) {
      throw InvalidArgument("'" + r.id + "': antecedent '" + r.antecedents[i] +
                            "' listed twice");
    }
  }
  order_.push_back({DeclKind::Rule, rules_.size()});
  rules_.push_back(std::move(r));
}

void KnowledgeBase::add_reason(ReasonDecl r) {
  check_id(r.target);
  check_id(r.statement);
  if (std::find(reasons_.begin(), reasons_.end(), r) != reasons_.end()) {
    throw InvalidArgument("duplicate reason '" + r.statement + "' for '" +
                          r.target + "'");
  }
  reasons_.push_back(std::move(r));
}

void KnowledgeBase::add_query(std::string statement) {
  check_id(statement);
  if (std::find(queries_.begin(), queries_.end(), statement) == queries_.end()) {
    queries_.push_back(std::move(statement));
  }
}

const StatementDecl* KnowledgeBase::find_statement(std::string_view id) const {
  auto it = std::find_if(statements_.begin(), statements_.end(),
                         [&](const auto& s) { return s.id == id; });
  return it == statements_.end() ? nullptr : &*it;
}

const RuleDecl* KnowledgeBase::find_rule(std::string_view id) const {
  auto it = std::find_if(rules_.begin(), rules_.end(),
                         [&](const auto& r) { return r.id == id; });
  return it == rules_.end() ? nullptr : &*it;
}

StatementDecl* KnowledgeBase::find_statement(std::string_view id) {
  return const_cast<StatementDecl*>(std::as_const(*this).find_statement(id));
}

RuleDecl* KnowledgeBase::find_rule(std::string_view id) {
  return const_cast<RuleDecl*>(std::as_const(*this).find_rule(id));
}

bool KnowledgeBase::has_id(std::string_view id) const {
  return find_statement(id) != nullptr || find_rule(id) != nullptr;
}

}  // namespace nmp
