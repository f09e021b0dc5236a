#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "argfacets/argument_set.hpp"
#include "argfacets/error.hpp"
#include "argfacets/framework.hpp"
#include "argfacets/semantics.hpp"

namespace argfacets {

using Clock = std::chrono::steady_clock;
using Deadline = std::optional<Clock::time_point>;

/// Restricts the extension space to sets containing every argument of
/// require_in and none of require_out.
struct Constraints {
  ArgumentSet require_in;
  ArgumentSet require_out;

  static Constraints none(const ArgumentationFramework& af) {
    return {af.empty_set(), af.empty_set()};
  }

  bool empty() const { return require_in.empty() && require_out.empty(); }

  void validate(const ArgumentationFramework& af) const {
    if (require_in.universe() != af.size() || require_out.universe() != af.size())
      throw InvalidConstraints("constraint sets do not match the framework");
    if (require_in.intersects(require_out))
      throw InvalidConstraints("an argument is both required in and required out");
  }

  bool admits(const ArgumentSet& e) const {
    return require_in.is_subset_of(e) && !require_out.intersects(e);
  }

  bool operator==(const Constraints&) const = default;
};

struct Budget {
  std::optional<std::size_t> max_models;  // >= 1 when set
  std::optional<Clock::duration> timeout;

  Deadline deadline() const {
    if (!timeout) return std::nullopt;
    return Clock::now() + *timeout;
  }
};

struct EnumerationResult {
  std::vector<ArgumentSet> extensions;
  bool exhausted = true;   // false only if a budget bound was hit
  bool timed_out = false;  // the bound hit was the deadline
};

namespace detail {

enum class Base { conflict_free, admissible, complete };

/// Everything a single labelling search can be asked to respect. The optional
/// sets are disjunctive clauses: at least one member in E / out of E / in range(E).
struct Query {
  ArgumentSet require_in;
  ArgumentSet require_out;
  ArgumentSet must_cover;  // each member is in E or attacked by E
  std::optional<ArgumentSet> some_in;
  std::optional<ArgumentSet> some_out;
  std::optional<ArgumentSet> some_cover;

  static Query of(const ArgumentationFramework& af, const Constraints& c) {
    return {c.require_in, c.require_out, af.empty_set(), {}, {}, {}};
  }
};

/// Backtracking search over in/out labellings of the arguments. Propagation
/// keeps, per argument, the number of attackers labelled in, the number of
/// attackers still undecided, the number of targets labelled in, and (for
/// complete sets) the number of attackers not yet attacked by the in-set.
/// Branching: lowest undecided index, in before out.
class LabellingSearch {
 public:
  enum class Outcome { exhausted, stopped };

  LabellingSearch(const ArgumentationFramework& af, Base base, Query query, Deadline deadline)
      : af_(af), base_(base), q_(std::move(query)), deadline_(deadline), n_(af.size()) {
    label_.assign(n_, kUndec);
    in_att_.assign(n_, 0);
    in_tgt_.assign(n_, 0);
    open_att_.resize(n_);
    uncov_att_.resize(n_);
    cover_.assign(n_, false);
    for (ArgumentIndex a = 0; a < n_; ++a) {
      open_att_[a] = static_cast<std::uint32_t>(af.attackers_of(a).size());
      uncov_att_[a] = open_att_[a];
    }
    for (auto a : q_.must_cover) cover_[a] = true;
    if (q_.some_in) some_in_.possible = static_cast<std::uint32_t>(q_.some_in->size());
    if (q_.some_out) some_out_.possible = static_cast<std::uint32_t>(q_.some_out->size());

    for (ArgumentIndex a = 0; a < n_; ++a)
      if (af.self_attacking(a)) push(a, kOut);
    for (auto a : q_.require_out) push(a, kOut);
    for (auto a : q_.require_in) push(a, kIn);
    for (ArgumentIndex a = 0; a < n_; ++a) {
      check_cover(a);
      check_complete(a);
    }
    check_clauses();
    root_ok_ = propagate();
  }

  template <class OnModel>
  Outcome run(OnModel&& on_model) {
    if (!root_ok_) return Outcome::exhausted;
    return dfs(0, on_model);
  }

  std::size_t nodes() const noexcept { return nodes_; }

 private:
  enum Label : std::uint8_t { kUndec, kIn, kOut };

  struct ClauseState {
    std::uint32_t satisfied = 0;
    std::uint32_t possible = 0;
  };

  template <class OnModel>
  Outcome dfs(std::size_t from, OnModel& on_model) {
    tick();
    if (q_.some_cover && !cover_possible()) return Outcome::exhausted;
    while (from < n_ && label_[from] != kUndec) ++from;
    if (from == n_) {
      ArgumentSet e(n_);
      for (ArgumentIndex a = 0; a < n_; ++a)
        if (label_[a] == kIn) e.insert(a);
      return on_model(std::as_const(e)) ? Outcome::exhausted : Outcome::stopped;
    }
    for (Label v : {kIn, kOut}) {
      const auto mark = trail_.size();
      push(static_cast<ArgumentIndex>(from), v);
      if (propagate()) {
        if (dfs(from + 1, on_model) == Outcome::stopped) {
          undo_to(mark);
          return Outcome::stopped;
        }
      }
      undo_to(mark);
    }
    return Outcome::exhausted;
  }

  void tick() {
    if (++nodes_ % 512 == 0 && deadline_ && Clock::now() > *deadline_) throw DeadlineExceeded();
  }

  void push(ArgumentIndex a, Label v) { pending_.emplace_back(a, v); }

  bool propagate() {
    for (std::size_t head = 0; !conflict_ && head < pending_.size(); ++head) {
      auto [a, v] = pending_[head];
      if (label_[a] == v) continue;
      if (label_[a] != kUndec || (v == kIn && af_.self_attacking(a))) {
        conflict_ = true;
        break;
      }
      apply(a, v);
    }
    pending_.clear();
    const bool ok = !conflict_;
    conflict_ = false;
    return ok;
  }

  void apply(ArgumentIndex a, Label v) {
    label_[a] = v;
    trail_.push_back(a);
    if (v == kIn) {
      for (auto t : af_.attacked_by(a)) {
        --open_att_[t];
        if (++in_att_[t] == 1)
          for (auto z : af_.attacked_by(t)) {
            --uncov_att_[z];
            check_complete(z);
          }
        if (label_[t] == kIn) conflict_ = true;
        push(t, kOut);
      }
      for (auto s : af_.attackers_of(a)) {
        ++in_tgt_[s];
        if (label_[s] == kIn) conflict_ = true;
        push(s, kOut);
        check_admissible(s);
      }
      if (q_.some_in && q_.some_in->contains(a)) ++some_in_.satisfied;
      if (q_.some_out && q_.some_out->contains(a)) --some_out_.possible;
    } else {
      for (auto t : af_.attacked_by(a)) {
        --open_att_[t];
        check_admissible(t);
        check_cover(t);
      }
      check_cover(a);
      check_complete(a);
      if (q_.some_in && q_.some_in->contains(a)) --some_in_.possible;
      if (q_.some_out && q_.some_out->contains(a)) ++some_out_.satisfied;
    }
    check_clauses();
  }

  void undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
      const auto a = trail_.back();
      trail_.pop_back();
      if (label_[a] == kIn) {
        for (auto t : af_.attacked_by(a)) {
          ++open_att_[t];
          if (--in_att_[t] == 0)
            for (auto z : af_.attacked_by(t)) ++uncov_att_[z];
        }
        for (auto s : af_.attackers_of(a)) --in_tgt_[s];
        if (q_.some_in && q_.some_in->contains(a)) --some_in_.satisfied;
        if (q_.some_out && q_.some_out->contains(a)) ++some_out_.possible;
      } else {
        for (auto t : af_.attacked_by(a)) ++open_att_[t];
        if (q_.some_in && q_.some_in->contains(a)) ++some_in_.possible;
        if (q_.some_out && q_.some_out->contains(a)) --some_out_.satisfied;
      }
      label_[a] = kUndec;
    }
  }

  std::optional<ArgumentIndex> undecided_attacker(ArgumentIndex a) const {
    for (auto s : af_.attackers_of(a))
      if (label_[s] == kUndec) return s;
    return std::nullopt;
  }

  // An argument attacking the in-set must itself be attacked by the in-set.
  void check_admissible(ArgumentIndex a) {
    if (base_ == Base::conflict_free || in_tgt_[a] == 0 || in_att_[a] > 0) return;
    if (open_att_[a] == 0) {
      conflict_ = true;
    } else if (open_att_[a] == 1) {
      push(*undecided_attacker(a), kIn);
    }
  }

  // Arguments in must_cover end up in E or attacked by E.
  void check_cover(ArgumentIndex a) {
    if (!cover_[a] || label_[a] == kIn || in_att_[a] > 0) return;
    if (label_[a] == kOut) {
      if (open_att_[a] == 0) {
        conflict_ = true;
      } else if (open_att_[a] == 1) {
        push(*undecided_attacker(a), kIn);
      }
    } else if (open_att_[a] == 0) {
      push(a, kIn);
    }
  }

  // Complete sets contain every argument they defend.
  void check_complete(ArgumentIndex a) {
    if (base_ != Base::complete || uncov_att_[a] != 0 || label_[a] == kIn) return;
    if (label_[a] == kOut) {
      conflict_ = true;
    } else {
      push(a, kIn);
    }
  }

  void check_clauses() {
    if (q_.some_in && some_in_.satisfied == 0) {
      if (some_in_.possible == 0) {
        conflict_ = true;
      } else if (some_in_.possible == 1) {
        for (auto a : *q_.some_in)
          if (label_[a] == kUndec) push(a, kIn);
      }
    }
    if (q_.some_out && some_out_.satisfied == 0) {
      if (some_out_.possible == 0) {
        conflict_ = true;
      } else if (some_out_.possible == 1) {
        for (auto a : *q_.some_out)
          if (label_[a] == kUndec) push(a, kOut);
      }
    }
  }

  // Whether some member of some_cover is, or can still become, in range.
  bool cover_possible() const {
    for (auto a : *q_.some_cover)
      if (label_[a] != kOut || in_att_[a] > 0 || open_att_[a] > 0) return true;
    return false;
  }

  const ArgumentationFramework& af_;
  Base base_;
  Query q_;
  Deadline deadline_;
  std::size_t n_;

  std::vector<Label> label_;
  std::vector<std::uint32_t> in_att_, open_att_, in_tgt_, uncov_att_;
  std::vector<bool> cover_;
  ClauseState some_in_, some_out_;

  std::vector<ArgumentIndex> trail_;
  std::vector<std::pair<ArgumentIndex, Label>> pending_;
  bool conflict_ = false;
  bool root_ok_ = true;
  std::size_t nodes_ = 0;
};

// The leaf labelling of a covering query still has to hit some_cover exactly.
inline bool covers_some(const ArgumentationFramework& af, const Query& q, const ArgumentSet& e) {
  return !q.some_cover || range(af, e).intersects(*q.some_cover);
}

}  // namespace detail

/// Extension search for one semantics over one framework. Base-property
/// candidates come from a labelling search; nai/pref/semi/stag candidates are
/// kept only if a nested query finds no strictly better witness.
class Solver {
 public:
  Solver(const ArgumentationFramework& af, Semantics semantics, Deadline deadline = std::nullopt)
      : af_(af), semantics_(semantics), deadline_(deadline) {}

  const ArgumentationFramework& framework() const noexcept { return af_; }
  Semantics semantics() const noexcept { return semantics_; }
  void set_deadline(Deadline deadline) noexcept { deadline_ = deadline; }

  /// Calls visit(extension) for every extension matching q until visit
  /// returns false. Returns true iff the space was exhausted.
  /// Throws DeadlineExceeded.
  template <class Visit>
  bool for_each(detail::Query q, Visit&& visit) {
    using detail::Base;
    Base base = Base::conflict_free;
    switch (semantics_) {
      case Semantics::cnf:
      case Semantics::nai:
      case Semantics::stag: base = Base::conflict_free; break;
      case Semantics::stab:
        base = Base::conflict_free;
        q.must_cover = af_.all_arguments();
        break;
      case Semantics::adm: base = Base::admissible; break;
      case Semantics::comp:
      case Semantics::pref:
      case Semantics::semi: base = Base::complete; break;
    }
    detail::LabellingSearch search(af_, base, q, deadline_);
    auto outcome = search.run([&](const ArgumentSet& e) {
      if (!detail::covers_some(af_, q, e)) return true;
      if (!maximal(e)) return true;
      return static_cast<bool>(visit(e));
    });
    return outcome == detail::LabellingSearch::Outcome::exhausted;
  }

  std::optional<ArgumentSet> find(const detail::Query& q) {
    std::optional<ArgumentSet> witness;
    for_each(q, [&](const ArgumentSet& e) {
      witness = e;
      return false;
    });
    return witness;
  }

  /// Maximality part of the semantics for a candidate that already has the
  /// base property (conflict-free for nai/stag, complete for pref/semi).
  bool maximal(const ArgumentSet& e) {
    using detail::Base;
    switch (semantics_) {
      case Semantics::cnf:
      case Semantics::adm:
      case Semantics::comp:
      case Semantics::stab: return true;
      case Semantics::nai: return naive(af_, e);
      case Semantics::pref: {
        if (e.size() == af_.size()) return true;
        detail::Query q{e, af_.empty_set(), af_.empty_set(), e.complement(), {}, {}};
        return !exists(Base::complete, q);
      }
      case Semantics::semi:
      case Semantics::stag: {
        auto r = range(af_, e);
        if (r.size() == af_.size()) return true;
        detail::Query q{af_.empty_set(), af_.empty_set(), r, {}, {}, r.complement()};
        return !exists(semantics_ == Semantics::semi ? Base::complete : Base::conflict_free, q);
      }
    }
    return true;
  }

 private:
  bool exists(detail::Base base, const detail::Query& q) {
    detail::LabellingSearch search(af_, base, q, deadline_);
    bool found = false;
    search.run([&](const ArgumentSet& e) {
      if (!detail::covers_some(af_, q, e)) return true;
      found = true;
      return false;
    });
    return found;
  }

  const ArgumentationFramework& af_;
  Semantics semantics_;
  Deadline deadline_;
};

/// Enumerates the constrained σ-extensions, in labelling order.
inline EnumerationResult enumerate(const ArgumentationFramework& af, Semantics semantics,
                                   const Constraints& c, const Budget& budget = {}) {
  c.validate(af);
  EnumerationResult result;
  Solver solver(af, semantics, budget.deadline());
  try {
    result.exhausted = solver.for_each(detail::Query::of(af, c), [&](const ArgumentSet& e) {
      result.extensions.push_back(e);
      return !budget.max_models || result.extensions.size() < *budget.max_models;
    });
  } catch (const DeadlineExceeded&) {
    result.exhausted = false;
    result.timed_out = true;
  }
  return result;
}

inline EnumerationResult enumerate(const ArgumentationFramework& af, Semantics semantics) {
  return enumerate(af, semantics, Constraints::none(af));
}

/// First-witness existence query.
inline bool exists_extension(const ArgumentationFramework& af, Semantics semantics,
                             const Constraints& c) {
  c.validate(af);
  return Solver(af, semantics).find(detail::Query::of(af, c)).has_value();
}

/// Whether E is a σ-extension. Maximality semantics run a nested query.
inline bool satisfies(const ArgumentationFramework& af, const ArgumentSet& e, Semantics semantics) {
  switch (semantics) {
    case Semantics::cnf: return conflict_free(af, e);
    case Semantics::nai: return naive(af, e);
    case Semantics::adm: return admissible(af, e);
    case Semantics::comp: return complete(af, e);
    case Semantics::stab: return stable(af, e);
    case Semantics::pref:
    case Semantics::semi: return admissible(af, e) && Solver(af, semantics).maximal(e);
    case Semantics::stag: return conflict_free(af, e) && Solver(af, semantics).maximal(e);
  }
  return false;
}

/// Result of a narrowing loop. When complete is false the deadline struck:
/// for a credulous run `set` is a lower bound, for a skeptical run an upper bound.
struct Narrowing {
  ArgumentSet set;
  bool complete = true;
  std::size_t queries = 0;
};

/// Credulous/skeptical consequences by repeated witness queries. Each query
/// either strictly grows (shrinks) the candidate set or ends the loop, so a
/// run issues at most |A|+1 existence queries.
class Reasoner {
 public:
  Reasoner(const ArgumentationFramework& af, Semantics semantics, Deadline deadline = std::nullopt)
      : af_(af), solver_(af, semantics, deadline) {}

  const ArgumentationFramework& framework() const noexcept { return af_; }
  Semantics semantics() const noexcept { return solver_.semantics(); }
  std::size_t queries() const noexcept { return queries_; }
  // Applies to later queries; also clears the timed-out flag.
  void set_deadline(Deadline deadline) noexcept {
    solver_.set_deadline(deadline);
    timed_out_ = false;
  }
  // Whether a narrowing loop was cut short since the last set_deadline.
  bool timed_out() const noexcept { return timed_out_; }

  std::optional<ArgumentSet> find_extension(const detail::Query& q) {
    ++queries_;
    return solver_.find(q);
  }

  std::optional<ArgumentSet> find_extension(const Constraints& c) {
    c.validate(af_);
    return find_extension(detail::Query::of(af_, c));
  }

  Narrowing credulous(const Constraints& c) {
    c.validate(af_);
    Narrowing out{af_.empty_set(), true, 0};
    const auto before = queries_;
    // Arguments that can never be in a matching extension.
    auto impossible = c.require_out;
    for (ArgumentIndex a = 0; a < af_.size(); ++a)
      if (af_.self_attacking(a)) impossible.insert(a);
    try {
      while (true) {
        auto open = af_.all_arguments() - out.set - impossible;
        if (open.empty()) break;
        auto q = detail::Query::of(af_, c);
        q.some_in = std::move(open);
        auto e = find_extension(q);
        if (!e) break;
        out.set |= *e;
      }
    } catch (const DeadlineExceeded&) {
      out.complete = false;
      timed_out_ = true;
    }
    out.queries = queries_ - before;
    return out;
  }

  // With no matching extension the result is A (vacuous intersection).
  Narrowing skeptical(const Constraints& c) {
    c.validate(af_);
    Narrowing out{af_.all_arguments(), true, 0};
    const auto before = queries_;
    try {
      auto first = find_extension(c);
      if (first) {
        out.set = *first;
        while (!(out.set - c.require_in).empty()) {
          auto q = detail::Query::of(af_, c);
          q.some_out = out.set - c.require_in;
          auto e = find_extension(q);
          if (!e) break;
          out.set &= *e;
        }
      }
    } catch (const DeadlineExceeded&) {
      out.complete = false;
      timed_out_ = true;
    }
    out.queries = queries_ - before;
    return out;
  }

 private:
  const ArgumentationFramework& af_;
  Solver solver_;
  std::size_t queries_ = 0;
  bool timed_out_ = false;
};

/// Union of all constrained σ-extensions.
inline ArgumentSet credulous_set(const ArgumentationFramework& af, Semantics semantics,
                                 const Constraints& c) {
  return Reasoner(af, semantics).credulous(c).set;
}

/// Intersection of all constrained σ-extensions; A when there are none.
inline ArgumentSet skeptical_set(const ArgumentationFramework& af, Semantics semantics,
                                 const Constraints& c) {
  return Reasoner(af, semantics).skeptical(c).set;
}

}  // namespace argfacets
