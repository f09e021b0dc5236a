#pragma once

// Reference enumeration by sweeping every subset of A. Independent of the
// labelling search and of semantics.hpp: definitions are re-evaluated on
// plain bit masks.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "argfacets/argument_set.hpp"
#include "argfacets/error.hpp"
#include "argfacets/framework.hpp"
#include "argfacets/search.hpp"

namespace argfacets {

inline constexpr std::size_t kOracleLimit = 20;

namespace detail {

class MaskOracle {
 public:
  using Mask = std::uint32_t;

  explicit MaskOracle(const ArgumentationFramework& af) : n_(af.size()) {
    out_.assign(n_, 0);
    in_.assign(n_, 0);
    for (auto [a, b] : af.attacks()) {
      out_[a] |= Mask{1} << b;
      in_[b] |= Mask{1} << a;
    }
  }

  Mask all() const { return n_ == 32 ? ~Mask{0} : (Mask{1} << n_) - 1; }

  Mask attacked(Mask e) const {
    Mask r = 0;
    for (std::size_t a = 0; a < n_; ++a)
      if (e >> a & 1U) r |= out_[a];
    return r;
  }
  Mask range(Mask e) const { return e | attacked(e); }
  bool conflict_free(Mask e) const { return (attacked(e) & e) == 0; }
  Mask defended(Mask e) const {
    const Mask hit = attacked(e);
    Mask d = 0;
    for (std::size_t a = 0; a < n_; ++a)
      if ((in_[a] & ~hit) == 0) d |= Mask{1} << a;
    return d;
  }
  bool admissible(Mask e) const { return conflict_free(e) && (e & ~defended(e)) == 0; }

  std::vector<Mask> extensions(Semantics s) const {
    std::vector<Mask> cf, adm;
    for (std::uint64_t e = 0; e <= all(); ++e) {
      auto m = static_cast<Mask>(e);
      if (!conflict_free(m)) continue;
      cf.push_back(m);
      if (admissible(m)) adm.push_back(m);
    }
    std::vector<Mask> out;
    switch (s) {
      case Semantics::cnf: return cf;
      case Semantics::adm: return adm;
      case Semantics::comp:
        for (auto e : adm)
          if (defended(e) == e) out.push_back(e);
        return out;
      case Semantics::stab:
        for (auto e : cf)
          if (range(e) == all()) out.push_back(e);
        return out;
      case Semantics::nai: return subset_maximal(cf, [](Mask e) { return e; });
      case Semantics::pref: return subset_maximal(adm, [](Mask e) { return e; });
      case Semantics::semi: return subset_maximal(adm, [this](Mask e) { return range(e); });
      case Semantics::stag: return subset_maximal(cf, [this](Mask e) { return range(e); });
    }
    return out;
  }

 private:
  // Members whose key is not strictly contained in another member's key.
  template <class Key>
  static std::vector<Mask> subset_maximal(const std::vector<Mask>& family, Key key) {
    std::vector<Mask> order = family;
    std::stable_sort(order.begin(), order.end(), [&](Mask a, Mask b) {
      return std::popcount(key(a)) > std::popcount(key(b));
    });
    std::vector<Mask> tops, out;
    for (auto e : order) {
      const Mask k = key(e);
      bool dominated = std::any_of(tops.begin(), tops.end(),
                                   [&](Mask t) { return t != k && (k & ~t) == 0; });
      if (dominated) continue;
      tops.push_back(k);
      out.push_back(e);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::size_t n_;
  std::vector<Mask> out_, in_;
};

}  // namespace detail

/// All constrained σ-extensions by a direct sweep over 2^|A| subsets,
/// sorted in the canonical ArgumentSet order. Throws FrameworkTooLarge.
inline std::vector<ArgumentSet> brute_force(const ArgumentationFramework& af, Semantics semantics,
                                            const Constraints& c, std::size_t limit = kOracleLimit) {
  if (af.size() > std::min<std::size_t>(limit, 31)) throw FrameworkTooLarge(af.size(), limit);
  c.validate(af);
  detail::MaskOracle oracle(af);
  std::vector<ArgumentSet> out;
  for (auto m : oracle.extensions(semantics)) {
    ArgumentSet e(af.size());
    for (ArgumentIndex a = 0; a < af.size(); ++a)
      if (m >> a & 1U) e.insert(a);
    if (c.admits(e)) out.push_back(std::move(e));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<ArgumentSet> brute_force(const ArgumentationFramework& af, Semantics semantics) {
  return brute_force(af, semantics, Constraints::none(af));
}

}  // namespace argfacets
