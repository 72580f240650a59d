#include "nmp/kb_format.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <span>
#include <map>
#include <sstream>

#include "nmp/error.hpp"
#include "text_util.hpp"

namespace nmp {
namespace {

using detail::parse_number;
using detail::split_words;

bool valid_id(std::string_view id) {
  if (id.empty()) return false;
  return std::all_of(id.begin(), id.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
           c == '-' || c == '.' || c == ':' ||
           static_cast<unsigned char>(c) >= 0x80;
  });
}

struct Reference {
  int line;
  std::string id;
  bool statement_only;
  std::string context;
};

class Parser {
 public:
  KnowledgeBase run(std::string_view text) {
    int line_no = 0;
    for (auto raw : detail::split_lines(text)) {
      ++line_no;
      line_ = line_no;
      auto words = split_words(detail::strip_comment(raw));
      if (words.empty()) continue;
      try {
        dispatch(words);
      } catch (const InvalidArgument& e) {
        throw ParseError(line_, e.what());
      }
    }
    check_references();
    return std::move(kb_);
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(line_, msg);
  }

  std::string take_id(std::string_view word, const char* what) const {
    if (!valid_id(word)) {
      fail(std::string("invalid ") + what + " '" + std::string(word) + "'");
    }
    return std::string(word);
  }

  void refer(const std::string& id, bool statement_only, std::string context) {
    refs_.push_back({line_, id, statement_only, std::move(context)});
  }

  void dispatch(const std::vector<std::string_view>& w) {
    const auto kw = w[0];
    if (kw == "statement") return statement(w);
    if (kw == "evidence") return evidence(w);
    if (kw == "rule") return rule(w);
    if (kw == "reason") return reason(w);
    if (kw == "query") return query(w);
    if (kw == "param") return param(w);
    fail("unknown directive '" + std::string(kw) + "'");
  }

  std::map<std::string, double> key_values(
      std::span<const std::string_view> words,
      std::initializer_list<std::string_view> allowed) const {
    std::map<std::string, double> out;
    for (auto word : words) {
      auto eq = word.find('=');
      if (eq == std::string_view::npos) {
        fail("expected key=value, got '" + std::string(word) + "'");
      }
      std::string key(word.substr(0, eq));
      if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
        fail("unexpected key '" + key + "'");
      }
      auto v = parse_number(word.substr(eq + 1));
      if (!v) fail("bad number in '" + std::string(word) + "'");
      if (!out.emplace(key, *v).second) fail("key '" + key + "' given twice");
    }
    return out;
  }

  void statement(const std::vector<std::string_view>& w) {
    if (w.size() < 2 || w.size() > 3) {
      fail("expected: statement <id> [discount=<f>]");
    }
    StatementDecl s{take_id(w[1], "statement id"), 0.0};
    auto kv = key_values(std::span(w).subspan(2), {"discount"});
    if (kv.count("discount")) s.discount = kv["discount"];
    kb_.add_statement(std::move(s));
  }

  void fill_masses(RuleDecl& r, std::span<const std::string_view> words) {
    auto kv = key_values(words, {"yes", "no", "unknown", "discount"});
    if (!kv.count("yes") || !kv.count("no")) fail("yes= and no= are required");
    r.yes = kv["yes"];
    r.no = kv["no"];
    r.unknown = kv.count("unknown") ? kv["unknown"] : 1.0 - r.yes - r.no;
    if (kv.count("discount")) r.discount = kv["discount"];
    if (!kv.count("unknown") && r.unknown < -1e-6) {
      std::ostringstream msg;
      msg << "'" << r.id << "': yes+no = " << r.yes + r.no << " exceeds 1";
      fail(msg.str());
    }
    // 1 - .99 - .01 leaves 8.7e-18; don't carry that residue around.
    if (std::abs(r.unknown) < 1e-12) r.unknown = 0.0;
    r.unknown = std::max(r.unknown, 0.0);
  }

  void evidence(const std::vector<std::string_view>& w) {
    if (w.size() < 4 || w[2] != "for") {
      fail("expected: evidence <id> for <stmt> yes=<f> no=<f> ...");
    }
    RuleDecl r;
    r.id = take_id(w[1], "evidence id");
    r.consequent = take_id(w[3], "statement id");
    r.evidence = true;
    fill_masses(r, std::span(w).subspan(4));
    refer(r.consequent, true, "evidence '" + r.id + "'");
    kb_.add_rule(std::move(r));
  }

  void rule(const std::vector<std::string_view>& w) {
    auto then = std::find(w.begin(), w.end(), std::string_view("then"));
    if (w.size() < 6 || w[2] != "if" || then == w.end() || then + 1 == w.end() ||
        then == w.begin() + 3) {
      fail("expected: rule <id> if <stmt>[,<stmt>]* then <stmt> yes=<f> no=<f> ...");
    }
    RuleDecl r;
    r.id = take_id(w[1], "rule id");
    std::string joined;
    for (auto it = w.begin() + 3; it != then; ++it) joined += *it;
    std::size_t start = 0;
    while (true) {
      auto comma = joined.find(',', start);
      auto name = std::string_view(joined).substr(
          start, comma == std::string::npos ? std::string::npos : comma - start);
      r.antecedents.push_back(take_id(name, "antecedent"));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    r.consequent = take_id(*(then + 1), "consequent");
    fill_masses(r, std::span(then + 2, w.end()));
    for (const auto& a : r.antecedents) refer(a, true, "rule '" + r.id + "'");
    refer(r.consequent, true, "rule '" + r.id + "'");
    kb_.add_rule(std::move(r));
  }

  void reason(const std::vector<std::string_view>& w) {
    if (w.size() != 4 || w[2] != "includes") {
      fail("expected: reason <target-id> includes <stmt-id>");
    }
    ReasonDecl r{take_id(w[1], "reason target"), take_id(w[3], "statement id")};
    refer(r.target, false, "reason");
    refer(r.statement, true, "reason for '" + r.target + "'");
    kb_.add_reason(std::move(r));
  }

  void query(const std::vector<std::string_view>& w) {
    if (w.size() != 2) fail("expected: query <stmt-id>");
    auto id = take_id(w[1], "statement id");
    refer(id, true, "query");
    kb_.add_query(std::move(id));
  }

  void param(const std::vector<std::string_view>& w) {
    if (w.size() < 2) fail("expected: param gamma=<f> | delta=<f> | maxiter=<int>");
    for (auto word : std::span(w).subspan(1)) {
      auto eq = word.find('=');
      if (eq == std::string_view::npos) fail("expected key=value in param");
      auto key = word.substr(0, eq);
      auto value = word.substr(eq + 1);
      if (key == "maxiter") {
        auto v = detail::parse_int(value);
        if (!v || *v < 1) fail("maxiter must be a positive integer");
        kb_.params().max_iter = *v;
        continue;
      }
      auto v = parse_number(value);
      if (!v) fail("bad number in '" + std::string(word) + "'");
      if (key == "gamma") {
        if (!(*v > 0.0)) fail("gamma must be positive");
        kb_.params().gamma = *v;
      } else if (key == "delta") {
        if (!(*v > 0.0 && *v <= 1.0)) fail("delta must lie in (0, 1]");
        kb_.params().delta = *v;
      } else {
        fail("unknown param '" + std::string(key) + "'");
      }
    }
  }

  void check_references() const {
    for (const auto& ref : refs_) {
      const bool is_statement = kb_.find_statement(ref.id) != nullptr;
      const bool is_rule = kb_.find_rule(ref.id) != nullptr;
      if (!is_statement && !is_rule) {
        throw ParseError(ref.line, ref.context + ": unknown id '" + ref.id + "'");
      }
      if (ref.statement_only && !is_statement) {
        throw ParseError(ref.line, ref.context + ": '" + ref.id +
                                       "' is not a statement");
      }
    }
  }

  KnowledgeBase kb_;
  std::vector<Reference> refs_;
  int line_ = 0;
};

}  // namespace

KnowledgeBase parse_kb(std::string_view text) { return Parser().run(text); }

std::string serialize_kb(const KnowledgeBase& kb) {
  using detail::format_number;
  std::ostringstream out;
  for (const auto& d : kb.declaration_order()) {
    if (d.kind == DeclKind::Statement) {
      const auto& s = kb.statements()[d.index];
      out << "statement " << s.id;
      if (s.discount != 0.0) out << " discount=" << format_number(s.discount);
      out << '\n';
      continue;
    }
    const auto& r = kb.rules()[d.index];
    if (r.evidence) {
      out << "evidence " << r.id << " for " << r.consequent;
    } else {
      out << "rule " << r.id << " if ";
      for (std::size_t i = 0; i < r.antecedents.size(); ++i) {
        out << (i ? "," : "") << r.antecedents[i];
      }
      out << " then " << r.consequent;
    }
    out << " yes=" << format_number(r.yes) << " no=" << format_number(r.no)
        << " unknown=" << format_number(r.unknown);
    if (r.discount != 0.0) out << " discount=" << format_number(r.discount);
    out << '\n';
  }
  for (const auto& r : kb.reasons()) {
    out << "reason " << r.target << " includes " << r.statement << '\n';
  }
  for (const auto& q : kb.queries()) out << "query " << q << '\n';
  const auto& p = kb.params();
  if (p.gamma) out << "param gamma=" << format_number(*p.gamma) << '\n';
  if (p.delta) out << "param delta=" << format_number(*p.delta) << '\n';
  if (p.max_iter) out << "param maxiter=" << *p.max_iter << '\n';
  return out.str();
}

}  // namespace nmp
