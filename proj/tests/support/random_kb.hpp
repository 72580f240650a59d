#pragma once

// Seeded generators for property tests.

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "nmp/belief.hpp"
#include "nmp/knowledge_base.hpp"

namespace nmp::testing {

inline Frame random_frame(std::mt19937_64& rng, int max_labels = 4) {
  std::uniform_int_distribution<int> n(1, max_labels);
  std::vector<std::string> labels;
  const int count = n(rng);
  for (int i = 0; i < count; ++i) labels.push_back("h" + std::to_string(i));
  return Frame(labels);
}

/// Random mass with 1..max_focal focal elements. With `with_theta` the
/// universal set always keeps some mass, which rules out total conflict.
inline MassFunction random_mass(std::mt19937_64& rng, const Frame& frame,
                                bool with_theta = true, int max_focal = 5) {
  std::uniform_int_distribution<std::uint32_t> subset(1, frame.theta().bits());
  std::uniform_int_distribution<int> count(1, max_focal);
  std::uniform_real_distribution<double> weight(0.05, 1.0);
  std::vector<std::pair<Subset, double>> entries;
  double total = 0.0;
  const int k = count(rng);
  for (int i = 0; i < k; ++i) {
    const double w = weight(rng);
    entries.emplace_back(Subset(subset(rng)), w);
    total += w;
  }
  if (with_theta) {
    const double w = weight(rng) * 0.3;
    entries.emplace_back(frame.theta(), w);
    total += w;
  }
  for (auto& e : entries) e.second /= total;
  return MassFunction::from_assignments(frame, entries);
}

/// Random acyclic knowledge base with exactly `nodes` statements and rules.
/// Statements s0..sk are declared in dependency order; every rule only reads
/// earlier statements and declared reasons only point forward.
inline KnowledgeBase random_kb(std::mt19937_64& rng, int nodes,
                               bool categorical = false) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  KnowledgeBase kb;
  const int statements = std::max(1, nodes / 2);
  const int rules = nodes - statements;
  for (int i = 0; i < statements; ++i) {
    kb.add_statement({"s" + std::to_string(i), 0.0});
  }
  auto masses = [&](RuleDecl& r) {
    if (categorical) {
      const bool yes = unit(rng) < 0.5;
      r.yes = yes ? 1.0 : 0.0;
      r.no = yes ? 0.0 : 1.0;
      r.unknown = 0.0;
      r.discount = 0.0;
      return;
    }
    const double a = unit(rng);
    const double b = unit(rng) * (1.0 - a);
    r.yes = a;
    r.no = b;
    r.unknown = 1.0 - a - b;
    r.discount = unit(rng) < 0.5 ? 0.0 : unit(rng) * 0.5;
  };
  std::uniform_int_distribution<int> pick_statement(0, statements - 1);
  for (int i = 0; i < rules; ++i) {
    RuleDecl r;
    r.id = "r" + std::to_string(i);
    const int consequent = pick_statement(rng);
    r.consequent = "s" + std::to_string(consequent);
    if (consequent > 0 && unit(rng) < 0.6) {
      std::uniform_int_distribution<int> earlier(0, consequent - 1);
      const int n_ante = 1 + static_cast<int>(unit(rng) * 2.0);
      for (int k = 0; k < n_ante; ++k) {
        auto a = "s" + std::to_string(earlier(rng));
        if (std::find(r.antecedents.begin(), r.antecedents.end(), a) ==
            r.antecedents.end()) {
          r.antecedents.push_back(a);
        }
      }
    }
    r.evidence = r.antecedents.empty();
    masses(r);
    kb.add_rule(std::move(r));
  }
  // Reasons from an earlier statement to a later statement, or to a rule
  // whose antecedents and consequent all come after the reason.
  for (int i = 0; i < rules; ++i) {
    if (unit(rng) > 0.3) continue;
    const auto& r = kb.rules()[static_cast<std::size_t>(i)];
    int lowest = std::stoi(r.consequent.substr(1));
    for (const auto& a : r.antecedents) lowest = std::min(lowest, std::stoi(a.substr(1)));
    if (lowest == 0) continue;
    std::uniform_int_distribution<int> earlier(0, lowest - 1);
    try {
      kb.add_reason({r.id, "s" + std::to_string(earlier(rng))});
    } catch (const std::exception&) {
    }
  }
  for (int s = 1; s < statements; ++s) {
    if (unit(rng) > 0.25) continue;
    std::uniform_int_distribution<int> earlier(0, s - 1);
    try {
      kb.add_reason({"s" + std::to_string(s), "s" + std::to_string(earlier(rng))});
    } catch (const std::exception&) {
    }
  }
  return kb;
}

}  // namespace nmp::testing
