#pragma once

// Line-oriented knowledge-base text format. `#` starts a comment.
//
//   statement <id> [discount=<f>]
//   evidence <id> for <stmt> yes=<f> no=<f> [unknown=<f>] [discount=<f>]
//   rule <id> if <stmt>[,<stmt>]* then <stmt> yes=<f> no=<f> [unknown=<f>] [discount=<f>]
//   reason <target-id> includes <stmt-id>
//   query <stmt-id>
//   param gamma=<f> | delta=<f> | maxiter=<int>
//
// `unknown` defaults to 1 - yes - no.

#include <string>
#include <string_view>

#include "nmp/knowledge_base.hpp"

namespace nmp {

/// Throws ParseError (with the offending line) for syntax errors, unknown
/// ids, mass-sum violations and duplicate ids.
KnowledgeBase parse_kb(std::string_view text);

/// Inverse of parse_kb; numbers are written in shortest round-trip form.
std::string serialize_kb(const KnowledgeBase& kb);

}  // namespace nmp
