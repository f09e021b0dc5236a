#pragma once

// Pointwise semantics predicates: each one only looks at the candidate set.
// The maximality-based semantics (nai, pref, semi, stag) also quantify over
// other sets; `satisfies` in search.hpp handles those.

#include "argfacets/argument_set.hpp"
#include "argfacets/framework.hpp"

namespace argfacets {

/// Arguments attacked by at least one member of E.
inline ArgumentSet attacked_by_set(const ArgumentationFramework& af, const ArgumentSet& e) {
  ArgumentSet out(af.size());
  for (auto a : e)
    for (auto t : af.attacked_by(a)) out.insert(t);
  return out;
}

/// E together with every argument E attacks.
inline ArgumentSet range(const ArgumentationFramework& af, const ArgumentSet& e) {
  return e | attacked_by_set(af, e);
}

/// Every argument whose attackers are all attacked by some member of E.
inline ArgumentSet defended(const ArgumentationFramework& af, const ArgumentSet& e) {
  const auto hit = attacked_by_set(af, e);
  ArgumentSet out(af.size());
  for (ArgumentIndex a = 0; a < af.size(); ++a) {
    bool ok = true;
    for (auto attacker : af.attackers_of(a))
      if (!hit.contains(attacker)) {
        ok = false;
        break;
      }
    if (ok) out.insert(a);
  }
  return out;
}

inline bool conflict_free(const ArgumentationFramework& af, const ArgumentSet& e) {
  for (auto a : e)
    for (auto t : af.attacked_by(a))
      if (e.contains(t)) return false;
  return true;
}

inline bool admissible(const ArgumentationFramework& af, const ArgumentSet& e) {
  return conflict_free(af, e) && e.is_subset_of(defended(af, e));
}

inline bool complete(const ArgumentationFramework& af, const ArgumentSet& e) {
  return conflict_free(af, e) && defended(af, e) == e;
}

inline bool stable(const ArgumentationFramework& af, const ArgumentSet& e) {
  return conflict_free(af, e) && range(af, e).size() == af.size();
}

// Conflict-freeness is closed under subsets, so a conflict-free set is naive
// iff no single outside argument can be added.
inline bool naive(const ArgumentationFramework& af, const ArgumentSet& e) {
  if (!conflict_free(af, e)) return false;
  for (ArgumentIndex a = 0; a < af.size(); ++a) {
    if (e.contains(a) || af.self_attacking(a)) continue;
    bool clash = false;
    for (auto t : af.attacked_by(a)) clash = clash || e.contains(t);
    for (auto s : af.attackers_of(a)) clash = clash || e.contains(s);
    if (!clash) return false;
  }
  return true;
}

}  // namespace argfacets
