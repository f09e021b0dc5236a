#pragma once

#include <set>
#include <string>
#include <vector>

#include "argfacets/framework.hpp"
#include "argfacets/io.hpp"
#include "argfacets/reductions.hpp"

namespace argfacets::testing {

inline constexpr const char* kEx1Apx =
    "arg(w). arg(s). arg(b). arg(m). arg(t). arg(e). arg(p).\n"
    "att(w,s). att(s,w). att(s,m). att(w,b). att(m,t).\n"
    "att(t,e). att(p,t). att(t,p). att(p,e). att(e,b).\n";

inline ArgumentationFramework ex1() { return parse_framework(kEx1Apx, Format::apx); }
inline ArgumentationFramework fx() { return standard_translation(CnfFormula{1, {{1}}}); }
inline ArgumentationFramework fxx() { return standard_translation(CnfFormula{1, {{1}, {-1}}}); }

// k independent mutual-attack pairs u_i <-> v_i.
inline ArgumentationFramework pairs(std::size_t k) {
  FrameworkBuilder b;
  for (std::size_t i = 1; i <= k; ++i) {
    auto u = b.add_argument("u" + std::to_string(i));
    auto v = b.add_argument("v" + std::to_string(i));
    b.add_attack(u, v);
    b.add_attack(v, u);
  }
  return std::move(b).build();
}

using NameSet = std::set<std::string>;

inline NameSet names(const ArgumentationFramework& af, const ArgumentSet& s) {
  auto v = af.names_of(s);
  return {v.begin(), v.end()};
}

inline std::set<NameSet> name_family(const ArgumentationFramework& af,
                                     const std::vector<ArgumentSet>& family) {
  std::set<NameSet> out;
  for (const auto& e : family) out.insert(names(af, e));
  return out;
}

}  // namespace argfacets::testing
