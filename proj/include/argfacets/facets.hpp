#pragma once

// Facets are arguments accepted credulously but not skeptically. This header
// covers facet sets, the facet decision problems, and significance scores:
//
//   S[F, l] = (|Facets(F)| - |Facets^l(F)|) / |Facets(F)|
//
// where Facets^l restricts the extension space to sets containing (l = a) or
// excluding (l = ~a) the argument a.

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "argfacets/argument_set.hpp"
#include "argfacets/error.hpp"
#include "argfacets/framework.hpp"
#include "argfacets/rational.hpp"
#include "argfacets/search.hpp"

namespace argfacets {

struct FacetReport {
  Semantics semantics;
  Constraints constraints;
  ArgumentSet cred;
  ArgumentSet skep;
  ArgumentSet facets;     // cred \ skep
  bool complete = true;   // false if a deadline cut the narrowing short
};

enum class Polarity { approve, disapprove };

struct Literal {
  ArgumentIndex argument;
  Polarity polarity;

  static Literal approve(ArgumentIndex a) { return {a, Polarity::approve}; }
  static Literal disapprove(ArgumentIndex a) { return {a, Polarity::disapprove}; }
  bool operator==(const Literal&) const = default;
};

inline std::string to_string(const ArgumentationFramework& af, const Literal& l) {
  return (l.polarity == Polarity::approve ? "" : "-") + af.name(l.argument);
}

inline Constraints with_literal(Constraints c, const Literal& l) {
  if (l.polarity == Polarity::approve) {
    c.require_in.insert(l.argument);
  } else {
    c.require_out.insert(l.argument);
  }
  return c;
}

struct SignificanceEntry {
  Literal literal;
  std::size_t remaining_facets;
  Rational score;
};

/// Closed-form facet sets for the unconstrained conflict-free and naive
/// cases. cnf: every argument that does not attack itself. nai: those that
/// are additionally in conflict with another non-self-attacking argument
/// (anything else sits in every naive extension).
inline ArgumentSet closed_form_facets(const ArgumentationFramework& af, Semantics semantics) {
  ArgumentSet out(af.size());
  for (ArgumentIndex a = 0; a < af.size(); ++a) {
    if (af.self_attacking(a)) continue;
    if (semantics == Semantics::cnf) {
      out.insert(a);
      continue;
    }
    auto partner = [&](ArgumentIndex b) { return b != a && !af.self_attacking(b); };
    if (std::any_of(af.attacked_by(a).begin(), af.attacked_by(a).end(), partner) ||
        std::any_of(af.attackers_of(a).begin(), af.attackers_of(a).end(), partner))
      out.insert(a);
  }
  return out;
}

/// Facet report by narrowing, without closed-form shortcuts.
inline FacetReport narrowing_facet_report(Reasoner& reasoner, const Constraints& c) {
  auto cred = reasoner.credulous(c);
  FacetReport r{reasoner.semantics(), c, cred.set, reasoner.framework().all_arguments(),
                reasoner.framework().empty_set(), cred.complete};
  if (!cred.complete) return r;
  auto skep = reasoner.skeptical(c);
  r.skep = skep.set;
  r.complete = skep.complete;
  r.facets = r.cred - r.skep;
  return r;
}

inline FacetReport facet_report(Reasoner& reasoner, const Constraints& c) {
  const auto& af = reasoner.framework();
  const auto sem = reasoner.semantics();
  if (c.empty() && (sem == Semantics::cnf || sem == Semantics::nai)) {
    c.validate(af);
    auto facets = closed_form_facets(af, sem);
    ArgumentSet cred(af.size());
    for (ArgumentIndex a = 0; a < af.size(); ++a)
      if (!af.self_attacking(a)) cred.insert(a);
    // cnf: the empty set is an extension, so nothing is skeptical.
    auto skep = sem == Semantics::cnf ? af.empty_set() : cred - facets;
    return {sem, c, cred, skep, facets, true};
  }
  return narrowing_facet_report(reasoner, c);
}

inline FacetReport facet_report(const ArgumentationFramework& af, Semantics semantics,
                                const Constraints& c) {
  Reasoner reasoner(af, semantics);
  return facet_report(reasoner, c);
}

inline FacetReport facet_report(const ArgumentationFramework& af, Semantics semantics) {
  return facet_report(af, semantics, Constraints::none(af));
}

/// Two early-exit existence queries: one witness with a, one without.
inline bool is_facet(const ArgumentationFramework& af, Semantics semantics, ArgumentIndex a,
                     const Constraints& c) {
  c.validate(af);
  if (c.require_in.contains(a) || c.require_out.contains(a) || af.self_attacking(a)) return false;
  Reasoner reasoner(af, semantics);
  return reasoner.find_extension(with_literal(c, Literal::approve(a))).has_value() &&
         reasoner.find_extension(with_literal(c, Literal::disapprove(a))).has_value();
}

inline bool is_facet(const ArgumentationFramework& af, Semantics semantics, ArgumentIndex a) {
  return is_facet(af, semantics, a, Constraints::none(af));
}

inline std::size_t count_facets(const ArgumentationFramework& af, Semantics semantics) {
  if (semantics == Semantics::cnf || semantics == Semantics::nai)
    return closed_form_facets(af, semantics).size();
  return facet_report(af, semantics).facets.size();
}

/// Stops after the credulous pass when it already rules out k facets.
inline bool has_at_least(const ArgumentationFramework& af, Semantics semantics, std::size_t k) {
  if (k == 0) return true;
  if (semantics == Semantics::cnf || semantics == Semantics::nai)
    return closed_form_facets(af, semantics).size() >= k;
  Reasoner reasoner(af, semantics);
  const auto c = Constraints::none(af);
  auto cred = reasoner.credulous(c).set;
  if (cred.size() < k) return false;
  return (cred - reasoner.skeptical(c).set).size() >= k;
}

inline bool has_at_most(const ArgumentationFramework& af, Semantics semantics, std::size_t k) {
  return !has_at_least(af, semantics, k + 1);
}

inline bool has_exactly(const ArgumentationFramework& af, Semantics semantics, std::size_t k) {
  return count_facets(af, semantics) == k;
}

/// Significance of l relative to the space restricted by `base`, whose facet
/// report is `base_report`. Throws NotAFacet.
inline SignificanceEntry significance(Reasoner& reasoner, const FacetReport& base_report,
                                      const Literal& l) {
  if (!base_report.facets.contains(l.argument))
    throw NotAFacet(reasoner.framework().name(l.argument));
  const auto total = base_report.facets.size();
  const auto remaining =
      facet_report(reasoner, with_literal(base_report.constraints, l)).facets.size();
  return {l, remaining,
          Rational(static_cast<std::int64_t>(total - remaining), static_cast<std::int64_t>(total))};
}

inline SignificanceEntry significance(const ArgumentationFramework& af, Semantics semantics,
                                      const Literal& l) {
  Reasoner reasoner(af, semantics);
  return significance(reasoner, facet_report(reasoner, Constraints::none(af)), l);
}

/// Both polarities of every facet, by descending score, then argument index,
/// approval first.
inline std::vector<SignificanceEntry> significance_table(Reasoner& reasoner,
                                                         const FacetReport& base_report) {
  std::vector<SignificanceEntry> out;
  for (auto a : base_report.facets) {
    out.push_back(significance(reasoner, base_report, Literal::approve(a)));
    out.push_back(significance(reasoner, base_report, Literal::disapprove(a)));
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.score != y.score) return x.score > y.score;
    if (x.literal.argument != y.literal.argument) return x.literal.argument < y.literal.argument;
    return x.literal.polarity == Polarity::approve && y.literal.polarity == Polarity::disapprove;
  });
  return out;
}

inline std::vector<SignificanceEntry> significance_table(const ArgumentationFramework& af,
                                                         Semantics semantics,
                                                         const Constraints& c) {
  Reasoner reasoner(af, semantics);
  return significance_table(reasoner, facet_report(reasoner, c));
}

inline std::vector<SignificanceEntry> significance_table(const ArgumentationFramework& af,
                                                         Semantics semantics) {
  return significance_table(af, semantics, Constraints::none(af));
}

}  // namespace argfacets
