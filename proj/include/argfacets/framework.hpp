#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "argfacets/argument_set.hpp"
#include "argfacets/error.hpp"

namespace argfacets {

enum class Semantics { cnf, nai, adm, comp, stab, pref, semi, stag };

inline constexpr std::array<Semantics, 8> kAllSemantics = {
    Semantics::cnf,  Semantics::nai,  Semantics::adm,  Semantics::comp,
    Semantics::stab, Semantics::pref, Semantics::semi, Semantics::stag};

inline std::string_view to_string(Semantics s) {
  switch (s) {
    case Semantics::cnf: return "cnf";
    case Semantics::nai: return "nai";
    case Semantics::adm: return "adm";
    case Semantics::comp: return "comp";
    case Semantics::stab: return "stab";
    case Semantics::pref: return "pref";
    case Semantics::semi: return "semi";
    case Semantics::stag: return "stag";
  }
  return "?";
}

inline std::optional<Semantics> parse_semantics(std::string_view text) {
  for (auto s : kAllSemantics)
    if (to_string(s) == text) return s;
  return std::nullopt;
}

using Attack = std::pair<ArgumentIndex, ArgumentIndex>;

/// Immutable attack graph over interned argument names.
class ArgumentationFramework {
 public:
  std::size_t size() const noexcept { return names_.size(); }
  std::size_t attack_count() const noexcept { return attacks_.size(); }

  const std::string& name(ArgumentIndex a) const { return names_.at(a); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<ArgumentIndex> find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  // Sorted, duplicate free.
  const std::vector<Attack>& attacks() const noexcept { return attacks_; }
  bool attacks(ArgumentIndex from, ArgumentIndex to) const {
    return std::binary_search(attacks_.begin(), attacks_.end(), Attack{from, to});
  }
  const std::vector<ArgumentIndex>& attackers_of(ArgumentIndex a) const { return attackers_[a]; }
  const std::vector<ArgumentIndex>& attacked_by(ArgumentIndex a) const { return targets_[a]; }
  bool self_attacking(ArgumentIndex a) const { return self_attack_[a]; }

  ArgumentSet empty_set() const { return ArgumentSet(size()); }
  ArgumentSet all_arguments() const { return ArgumentSet::full(size()); }

  // Set of the named arguments; throws UnknownArgument.
  ArgumentSet set_of(std::initializer_list<std::string_view> names) const {
    ArgumentSet s(size());
    for (auto n : names) {
      auto i = find(n);
      if (!i) throw UnknownArgument(0, std::string(n));
      s.insert(*i);
    }
    return s;
  }

  std::vector<std::string> names_of(const ArgumentSet& s) const {
    std::vector<std::string> out;
    for (auto a : s) out.push_back(names_[a]);
    return out;
  }

 private:
  friend class FrameworkBuilder;

  std::vector<std::string> names_;
  std::unordered_map<std::string, ArgumentIndex> index_;
  std::vector<Attack> attacks_;
  std::vector<std::vector<ArgumentIndex>> attackers_;
  std::vector<std::vector<ArgumentIndex>> targets_;
  std::vector<bool> self_attack_;
};

inline bool valid_argument_name(std::string_view name) {
  if (name.empty()) return false;
  return std::none_of(name.begin(), name.end(), [](char c) {
    return c == '(' || c == ')' || c == ',' || c == ' ' || c == '\t' || c == '\n' ||
           c == '\r' || c == '\v' || c == '\f';
  });
}

class FrameworkBuilder {
 public:
  // Returns the new argument's index. Throws DuplicateArgument / ParseError.
  ArgumentIndex add_argument(std::string name, std::size_t line = 0) {
    if (!valid_argument_name(name)) throw ParseError(line, "invalid argument name '" + name + "'");
    auto idx = static_cast<ArgumentIndex>(names_.size());
    if (!index_.emplace(name, idx).second) throw DuplicateArgument(line, name);
    names_.push_back(std::move(name));
    return idx;
  }

  bool has_argument(std::string_view name) const { return index_.contains(std::string(name)); }
  std::size_t size() const noexcept { return names_.size(); }

  void add_attack(ArgumentIndex from, ArgumentIndex to) {
    if (from >= names_.size() || to >= names_.size())
      throw Error("attack endpoint out of range");
    attacks_.emplace_back(from, to);
  }

  void add_attack(std::string_view from, std::string_view to, std::size_t line = 0) {
    add_attack(lookup(from, line), lookup(to, line));
  }

  ArgumentIndex lookup(std::string_view name, std::size_t line = 0) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) throw UnknownArgument(line, std::string(name));
    return it->second;
  }

  ArgumentationFramework build() && {
    if (names_.empty()) throw ParseError(0, "framework has no arguments");
    ArgumentationFramework af;
    const auto n = names_.size();
    std::sort(attacks_.begin(), attacks_.end());
    attacks_.erase(std::unique(attacks_.begin(), attacks_.end()), attacks_.end());
    af.attackers_.resize(n);
    af.targets_.resize(n);
    af.self_attack_.assign(n, false);
    for (auto [from, to] : attacks_) {
      af.targets_[from].push_back(to);
      af.attackers_[to].push_back(from);
      if (from == to) af.self_attack_[from] = true;
    }
    af.names_ = std::move(names_);
    af.index_ = std::move(index_);
    af.attacks_ = std::move(attacks_);
    return af;
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, ArgumentIndex> index_;
  std::vector<Attack> attacks_;
};

}  // namespace argfacets
