#pragma once

// Proof constructions from the facet complexity results, as instance
// generators, plus DIMACS / restricted QDIMACS input and random fixtures.

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "argfacets/error.hpp"
#include "argfacets/framework.hpp"
#include "argfacets/io.hpp"

namespace argfacets {

/// CNF over variables 1..num_vars; literals are signed variable indices.
struct CnfFormula {
  int num_vars = 0;
  std::vector<std::vector<int>> clauses;

  // No empty clause, no clause with both x and -x, literals in range.
  void validate() const {
    if (num_vars < 0) throw Error("negative variable count");
    for (std::size_t i = 0; i < clauses.size(); ++i) {
      const auto& c = clauses[i];
      if (c.empty()) throw Error("clause " + std::to_string(i + 1) + " is empty");
      for (int lit : c) {
        if (lit == 0 || std::abs(lit) > num_vars)
          throw Error("literal " + std::to_string(lit) + " out of range");
        if (std::find(c.begin(), c.end(), -lit) != c.end())
          throw Error("clause " + std::to_string(i + 1) + " is tautological");
      }
    }
  }

  bool operator==(const CnfFormula&) const = default;
};

/// forall universals exists existentials . matrix
struct QbfForallExists {
  std::vector<int> universals;
  std::vector<int> existentials;
  CnfFormula matrix;

  void validate() const {
    matrix.validate();
    std::set<int> seen;
    for (int v : universals)
      if (v <= 0 || v > matrix.num_vars || !seen.insert(v).second)
        throw Error("bad universal variable " + std::to_string(v));
    for (int v : existentials)
      if (v <= 0 || v > matrix.num_vars || !seen.insert(v).second)
        throw Error("bad existential variable " + std::to_string(v));
    for (const auto& c : matrix.clauses)
      for (int lit : c)
        if (!seen.contains(std::abs(lit)))
          throw Error("variable " + std::to_string(std::abs(lit)) + " is not quantified");
  }
};

namespace detail {

struct DimacsReader {
  CnfFormula formula;
  std::vector<int> universals, existentials;

  void read(std::string_view text, bool quantified) {
    bool header = false;
    std::size_t declared = 0;
    int prefix_stage = 0;  // 0: none yet, 1: after 'a', 2: after 'e'
    std::vector<int> current;
    std::size_t lineno = 0;
    for (auto line : lines_of(text)) {
      ++lineno;
      auto tokens = split_ws(line);
      if (tokens.empty() || tokens[0] == "c") continue;
      if (tokens[0] == "%") break;
      if (!header) {
        if (tokens.size() != 4 || tokens[0] != "p" || tokens[1] != "cnf")
          throw ParseError(lineno, "malformed header, expected 'p cnf <vars> <clauses>'");
        formula.num_vars = static_cast<int>(parse_positive(tokens[2], lineno));
        declared = parse_positive(tokens[3], lineno);
        header = true;
        continue;
      }
      if (tokens[0] == "a" || tokens[0] == "e") {
        const bool is_a = tokens[0] == "a";
        if (!quantified || !current.empty() || !formula.clauses.empty() ||
            prefix_stage != (is_a ? 0 : 1))
          throw ParseError(lineno, "unsupported quantifier prefix (expected one 'a' line then one 'e' line)");
        auto& block = is_a ? universals : existentials;
        if (tokens.back() != "0") throw ParseError(lineno, "quantifier line must end with 0");
        for (std::size_t i = 1; i + 1 < tokens.size(); ++i) {
          int v = parse_int(tokens[i], lineno);
          if (v <= 0 || v > formula.num_vars) throw ParseError(lineno, "variable out of range");
          block.push_back(v);
        }
        prefix_stage = is_a ? 1 : 2;
        continue;
      }
      if (quantified && prefix_stage != 2)
        throw ParseError(lineno, "unsupported quantifier prefix (expected one 'a' line then one 'e' line)");
      for (auto tok : tokens) {
        int lit = parse_int(tok, lineno);
        if (lit == 0) {
          if (current.empty()) throw ParseError(lineno, "empty clause");
          formula.clauses.push_back(std::move(current));
          current.clear();
        } else {
          if (std::abs(lit) > formula.num_vars)
            throw ParseError(lineno, "literal " + std::to_string(lit) + " out of range");
          current.push_back(lit);
        }
      }
    }
    if (!header) throw ParseError(0, "missing 'p cnf' header");
    if (!current.empty()) throw ParseError(lineno, "last clause is not terminated by 0");
    if (formula.clauses.size() != declared)
      throw ParseError(0, "header declares " + std::to_string(declared) + " clauses, found " +
                              std::to_string(formula.clauses.size()));
    if (quantified && prefix_stage != 2)
      throw ParseError(0, "unsupported quantifier prefix (expected one 'a' line then one 'e' line)");
  }

  static int parse_int(std::string_view tok, std::size_t line) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      throw ParseError(line, "expected an integer, found '" + std::string(tok) + "'");
    return v;
  }
};

inline std::string var_name(std::string_view prefix, int v) {
  return std::string(prefix) + "x" + std::to_string(v);
}
inline std::string neg_var_name(std::string_view prefix, int v) {
  return std::string(prefix) + "neg_x" + std::to_string(v);
}
inline std::string literal_name(std::string_view prefix, int lit) {
  return lit > 0 ? var_name(prefix, lit) : neg_var_name(prefix, -lit);
}
inline std::string clause_name(std::string_view prefix, std::size_t i) {
  return std::string(prefix) + "c" + std::to_string(i + 1);
}

// Adds the standard translation of f to b, with every name prefixed.
inline void add_standard_translation(FrameworkBuilder& b, const CnfFormula& f,
                                     std::string_view prefix) {
  const auto phi = std::string(prefix) + "phi";
  b.add_argument(phi);
  for (std::size_t i = 0; i < f.clauses.size(); ++i) b.add_argument(clause_name(prefix, i));
  for (int v = 1; v <= f.num_vars; ++v) {
    b.add_argument(var_name(prefix, v));
    b.add_argument(neg_var_name(prefix, v));
    b.add_attack(var_name(prefix, v), neg_var_name(prefix, v));
    b.add_attack(neg_var_name(prefix, v), var_name(prefix, v));
  }
  for (std::size_t i = 0; i < f.clauses.size(); ++i) {
    b.add_attack(clause_name(prefix, i), phi);
    for (int lit : f.clauses[i]) b.add_attack(literal_name(prefix, lit), clause_name(prefix, i));
  }
}

inline std::string fresh_name(const ArgumentationFramework& af, std::string base) {
  while (af.find(base)) base += "'";
  return base;
}

// Builder pre-loaded with a copy of af.
inline FrameworkBuilder builder_from(const ArgumentationFramework& af) {
  FrameworkBuilder b;
  for (const auto& n : af.names()) b.add_argument(n);
  for (auto [x, y] : af.attacks()) b.add_attack(x, y);
  return b;
}

}  // namespace detail

inline CnfFormula parse_dimacs(std::string_view text) {
  detail::DimacsReader r;
  r.read(text, false);
  r.formula.validate();
  return r.formula;
}

inline QbfForallExists parse_qdimacs_ae(std::string_view text) {
  detail::DimacsReader r;
  r.read(text, true);
  QbfForallExists q{r.universals, r.existentials, r.formula};
  q.validate();
  return q;
}

inline std::string render_dimacs(const CnfFormula& f) {
  std::ostringstream out;
  out << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
  for (const auto& c : f.clauses) {
    for (int lit : c) out << lit << ' ';
    out << "0\n";
  }
  return out.str();
}

inline constexpr int kSweepLimit = 24;

/// Exhaustive assignment sweep; nullopt above kSweepLimit variables.
inline std::optional<bool> satisfiable_by_sweep(const CnfFormula& f) {
  if (f.num_vars > kSweepLimit) return std::nullopt;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << f.num_vars); ++bits) {
    bool all = std::all_of(f.clauses.begin(), f.clauses.end(), [&](const auto& c) {
      return std::any_of(c.begin(), c.end(), [&](int lit) {
        return ((bits >> (std::abs(lit) - 1)) & 1U) == (lit > 0 ? 1U : 0U);
      });
    });
    if (all) return true;
  }
  return false;
}

/// Truth value of forall X exists Y . matrix by sweeping all assignments.
inline std::optional<bool> qbf_true_by_sweep(const QbfForallExists& q) {
  if (q.universals.size() + q.existentials.size() > static_cast<std::size_t>(kSweepLimit)) return std::nullopt;
  std::vector<int> value(static_cast<std::size_t>(q.matrix.num_vars) + 1, 0);
  auto holds = [&] {
    return std::all_of(q.matrix.clauses.begin(), q.matrix.clauses.end(), [&](const auto& c) {
      return std::any_of(c.begin(), c.end(),
                         [&](int lit) { return value[std::abs(lit)] == (lit > 0 ? 1 : 0); });
    });
  };
  for (std::uint64_t u = 0; u < (std::uint64_t{1} << q.universals.size()); ++u) {
    for (std::size_t i = 0; i < q.universals.size(); ++i) value[q.universals[i]] = (u >> i) & 1U;
    bool witness = false;
    for (std::uint64_t e = 0; e < (std::uint64_t{1} << q.existentials.size()) && !witness; ++e) {
      for (std::size_t i = 0; i < q.existentials.size(); ++i)
        value[q.existentials[i]] = (e >> i) & 1U;
      witness = holds();
    }
    if (!witness) return false;
  }
  return true;
}

/// Arguments phi, c1..cm, x1, neg_x1, ...; clauses attack phi, literals attack
/// the clauses containing them, complementary literals attack each other.
inline ArgumentationFramework standard_translation(const CnfFormula& f) {
  f.validate();
  FrameworkBuilder b;
  detail::add_standard_translation(b, f, "");
  return std::move(b).build();
}

/// Facet count of the standard translation under adm/comp/stab:
/// 2n+m+1 when f is satisfiable, 2n+m otherwise. nullopt if too large to sweep.
inline std::optional<std::size_t> standard_translation_facets(const CnfFormula& f) {
  auto sat = satisfiable_by_sweep(f);
  if (!sat) return std::nullopt;
  return 2 * static_cast<std::size_t>(f.num_vars) + f.clauses.size() + (*sat ? 1 : 0);
}

/// Adds a fresh twin a' of a: a and a' attack each other, and a' copies every
/// attack into and out of a. A self-attack on a gives a' one as well.
/// a is credulous in F iff a is a facet of the result (any semantics).
inline ArgumentationFramework duplicate_argument(const ArgumentationFramework& af, ArgumentIndex a) {
  if (a >= af.size()) throw Error("argument index out of range");
  auto b = detail::builder_from(af);
  const auto twin = b.add_argument(detail::fresh_name(af, af.name(a) + "_dup"));
  b.add_attack(a, twin);
  b.add_attack(twin, a);
  for (auto t : af.attacked_by(a)) b.add_attack(twin, t == a ? twin : t);
  for (auto s : af.attackers_of(a)) b.add_attack(s == a ? twin : s, twin);
  return std::move(b).build();
}

/// How copy_gadget treats a self-attack (a,a).
///   self_loop: each copy gets (a_i,a_i) only; copies never touch a.
///   literal:   the mirroring rules applied verbatim, giving (a_i,a) and
///              (a,a_i) but no loop on a_i. This breaks the copy claim for
///              pref/semi/stag and is kept for exhibiting the adm failure.
enum class CopyMirroring { self_loop, literal };

/// n-1 fresh copies of a that copy a's attacks but never attack each other.
/// With self_loop mirroring, for pref/semi/stag: a is a facet of F iff every
/// copy is a facet of the result.
inline ArgumentationFramework copy_gadget(const ArgumentationFramework& af, ArgumentIndex a,
                                          std::size_t n,
                                          CopyMirroring mirroring = CopyMirroring::self_loop) {
  if (a >= af.size()) throw Error("argument index out of range");
  if (n == 0) throw Error("copy count must be at least 1");
  auto b = detail::builder_from(af);
  for (std::size_t i = 2; i <= n; ++i) {
    std::string base = af.name(a) + "_" + std::to_string(i);
    while (b.has_argument(base)) base += "'";
    const auto copy = b.add_argument(base);
    for (auto t : af.attacked_by(a))
      if (t != a || mirroring == CopyMirroring::literal) b.add_attack(copy, t);
    for (auto s : af.attackers_of(a))
      if (s != a || mirroring == CopyMirroring::literal) b.add_attack(s, copy);
    if (af.self_attacking(a) && mirroring == CopyMirroring::self_loop) b.add_attack(copy, copy);
  }
  return std::move(b).build();
}

struct SatUnsatInstance {
  ArgumentationFramework framework;
  // Facet count (adm/comp/stab) exactly when phi is satisfiable and psi is not.
  std::size_t target_facets;
};

/// Disjoint union of the standard translations of phi (names prefixed l_,
/// with phi duplicated into l_phi_dup) and psi (prefixed r_).
inline SatUnsatInstance satunsat_instance(const CnfFormula& phi, const CnfFormula& psi) {
  phi.validate();
  psi.validate();
  FrameworkBuilder b;
  detail::add_standard_translation(b, phi, "l_");
  b.add_argument("l_phi_dup");
  b.add_attack("l_phi", "l_phi_dup");
  b.add_attack("l_phi_dup", "l_phi");
  for (std::size_t i = 0; i < phi.clauses.size(); ++i)
    b.add_attack(detail::clause_name("l_", i), "l_phi_dup");
  detail::add_standard_translation(b, psi, "r_");
  const auto left = 2 * static_cast<std::size_t>(phi.num_vars) + phi.clauses.size() + 2;
  const auto right = 2 * static_cast<std::size_t>(psi.num_vars) + psi.clauses.size() + 1;
  // Every left argument is a facet when phi is satisfiable; psi's formula
  // argument is not when psi is unsatisfiable.
  return {std::move(b).build(), left + right - 1};
}

/// Adds a fresh universal z and weakens every clause C to (-z or C), so the
/// matrix becomes satisfiable without changing the truth value.
inline QbfForallExists guard_satisfiable(const QbfForallExists& q) {
  q.validate();
  QbfForallExists out = q;
  const int z = ++out.matrix.num_vars;
  out.universals.push_back(z);
  for (auto& c : out.matrix.clauses) c.push_back(-z);
  return out;
}

/// Arguments phi, phi_bar, c1..cm and both literals of every quantified
/// variable. Attacks: clauses -> phi, literals -> their clauses, x <-> neg_x,
/// phi <-> phi_bar, phi_bar -> both literals of each existential, and the
/// self-attack phi_bar -> phi_bar. With a satisfiable matrix, phi is a
/// pref-facet iff the formula is false.
inline ArgumentationFramework qbf_reduction(const QbfForallExists& q) {
  q.validate();
  FrameworkBuilder b;
  b.add_argument("phi");
  b.add_argument("phi_bar");
  const auto& clauses = q.matrix.clauses;
  for (std::size_t i = 0; i < clauses.size(); ++i) b.add_argument(detail::clause_name("", i));
  std::vector<int> vars = q.universals;
  vars.insert(vars.end(), q.existentials.begin(), q.existentials.end());
  std::sort(vars.begin(), vars.end());
  for (int v : vars) {
    b.add_argument(detail::var_name("", v));
    b.add_argument(detail::neg_var_name("", v));
    b.add_attack(detail::var_name("", v), detail::neg_var_name("", v));
    b.add_attack(detail::neg_var_name("", v), detail::var_name("", v));
  }
  for (std::size_t i = 0; i < clauses.size(); ++i) {
    b.add_attack(detail::clause_name("", i), "phi");
    for (int lit : clauses[i]) b.add_attack(detail::literal_name("", lit), detail::clause_name("", i));
  }
  b.add_attack("phi", "phi_bar");
  b.add_attack("phi_bar", "phi");
  b.add_attack("phi_bar", "phi_bar");
  for (int z : q.existentials) {
    b.add_attack("phi_bar", detail::var_name("", z));
    b.add_attack("phi_bar", detail::neg_var_name("", z));
  }
  return std::move(b).build();
}

namespace detail {
// Uniform double in [0,1) from the top 53 bits; portable across standard libraries.
inline double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }
}  // namespace detail

/// Arguments a1..an; each ordered pair (self-attacks included) is an attack
/// with the given probability. Deterministic for a seed.
inline ArgumentationFramework random_af(std::size_t n, double attack_probability,
                                        std::uint64_t seed) {
  if (n == 0) throw Error("random framework needs at least one argument");
  if (!(attack_probability >= 0.0 && attack_probability <= 1.0))
    throw Error("attack probability must lie in [0,1]");
  std::mt19937_64 rng(seed);
  FrameworkBuilder b;
  for (std::size_t i = 1; i <= n; ++i) b.add_argument("a" + std::to_string(i));
  for (ArgumentIndex i = 0; i < n; ++i)
    for (ArgumentIndex j = 0; j < n; ++j)
      if (detail::unit(rng) < attack_probability) b.add_attack(i, j);
  return std::move(b).build();
}

/// m clauses over n variables, widths uniform in 1..min(max_width, n), each
/// clause on distinct variables (so never tautological).
inline CnfFormula random_cnf(int n, std::size_t m, int max_width, std::uint64_t seed) {
  if (n < 1 || max_width < 1) throw Error("random CNF needs n >= 1 and max_width >= 1");
  std::mt19937_64 rng(seed);
  CnfFormula f{n, {}};
  std::vector<int> vars(static_cast<std::size_t>(n));
  std::iota(vars.begin(), vars.end(), 1);
  const auto widest = static_cast<std::uint64_t>(std::min(max_width, n));
  for (std::size_t i = 0; i < m; ++i) {
    const auto width = static_cast<std::size_t>(1 + rng() % widest);
    for (std::size_t k = 0; k < width; ++k)
      std::swap(vars[k], vars[k + rng() % (vars.size() - k)]);
    std::vector<int> clause(vars.begin(), vars.begin() + static_cast<std::ptrdiff_t>(width));
    for (auto& v : clause)
      if (rng() & 1U) v = -v;
    f.clauses.push_back(std::move(clause));
  }
  return f;
}

}  // namespace argfacets
