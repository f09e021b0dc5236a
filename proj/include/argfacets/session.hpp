#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "argfacets/error.hpp"
#include "argfacets/facets.hpp"
#include "argfacets/framework.hpp"
#include "argfacets/search.hpp"

namespace argfacets {

// A session step ran out of time; nothing was changed. Carries what the
// narrowing had established when the deadline struck.
class BudgetExceeded : public DeadlineExceeded {
 public:
  explicit BudgetExceeded(FacetReport partial) : partial_(std::move(partial)) {}
  const FacetReport& partial() const noexcept { return partial_; }

 private:
  FacetReport partial_;
};

struct SessionState {
  std::vector<Literal> history;
  FacetReport report;
  std::vector<SignificanceEntry> significance;  // relative to the current space
  std::optional<ArgumentSet> sample_extension;
};

/// Step-wise navigation: each approved literal narrows the extension space.
/// Only current facets may be approved, so the space never becomes empty.
/// Significance is re-based on the current space after every step.
/// Single owner; callers serialize access. With a deadline set, steps that
/// run out of time throw BudgetExceeded and leave the session unchanged.
class NavigationSession {
 public:
  NavigationSession(std::shared_ptr<const ArgumentationFramework> af, Semantics semantics,
                    Deadline deadline = std::nullopt)
      : af_(std::move(af)), semantics_(semantics), reasoner_(*af_, semantics, deadline) {
    auto first = facet_report(reasoner_, Constraints::none(*af_));
    if (!first.complete) throw BudgetExceeded(std::move(first));
    reports_.push_back(std::move(first));
    reasoner_.set_deadline(std::nullopt);
  }

  // Applies to every later step until changed.
  void set_deadline(Deadline deadline) { reasoner_.set_deadline(deadline); }

  const ArgumentationFramework& framework() const noexcept { return *af_; }
  std::shared_ptr<const ArgumentationFramework> framework_ptr() const noexcept { return af_; }
  Semantics semantics() const noexcept { return semantics_; }
  const std::vector<Literal>& history() const noexcept { return history_; }
  const FacetReport& report() const noexcept { return reports_.back(); }
  const Constraints& constraints() const noexcept { return report().constraints; }

  // Throws NotAFacet when l's argument is not a facet of the current space.
  void approve(const Literal& l) {
    if (l.argument >= af_->size() || !report().facets.contains(l.argument))
      throw NotAFacet(l.argument < af_->size() ? af_->name(l.argument) : "?");
    auto next = facet_report(reasoner_, with_literal(constraints(), l));
    if (!next.complete) throw BudgetExceeded(std::move(next));
    history_.push_back(l);
    reports_.push_back(std::move(next));
    table_.reset();
  }

  void undo() {
    if (history_.empty()) throw EmptyHistory();
    history_.pop_back();
    reports_.pop_back();
    table_.reset();
  }

  const std::vector<SignificanceEntry>& significance() {
    if (!table_) {
      auto table = significance_table(reasoner_, report());
      if (reasoner_.timed_out()) throw BudgetExceeded(report());
      table_ = std::move(table);
    }
    return *table_;
  }

  // Throws DeadlineExceeded.
  std::optional<ArgumentSet> sample_extension() { return reasoner_.find_extension(constraints()); }

  SessionState state() {
    return {history_, report(), significance(), sample_extension()};
  }

 private:
  std::shared_ptr<const ArgumentationFramework> af_;
  Semantics semantics_;
  Reasoner reasoner_;
  std::vector<Literal> history_;
  std::vector<FacetReport> reports_;  // reports_[i] holds the space after i approvals
  std::optional<std::vector<SignificanceEntry>> table_;
};

}  // namespace argfacets
