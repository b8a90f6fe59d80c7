#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "glb/value.hpp"

namespace glb {

// A finite category given by explicit tables. Arrows carry their endpoints;
// the composition table is total on composable pairs and is validated for
// unitality and associativity on construction via `validate`.
struct FiniteCategory {
  std::string name;
  std::vector<std::string> objects;
  struct Arrow {
    std::string id, src, tgt;
  };
  std::vector<Arrow> arrows;                       // includes identities
  std::map<std::string, std::string> identity;     // object -> arrow id
  // (g, f) -> g.f for tgt(f) = src(g)
  std::map<std::pair<std::string, std::string>, std::string> comp;

  std::optional<std::size_t> arrow_index(const std::string& id) const;
  const Arrow& arrow(const std::string& id) const;
  std::string compose(const std::string& g, const std::string& f) const;
  void validate() const;  // throws on a broken table

  // Underlying graph as a level-1 value: objects are atoms, hom(a, b) the set
  // of arrows a -> b (identities included).
  ValPtr underlying_graph() const;
};

// Functor between finite categories as explicit tables.
struct CatFunctor {
  const FiniteCategory* dom = nullptr;
  const FiniteCategory* cod = nullptr;
  std::map<std::string, std::string> on_objects;
  std::map<std::string, std::string> on_arrows;
  void validate() const;
};

// Product of finite categories.
FiniteCategory product_category(const FiniteCategory& a,
                                const FiniteCategory& b);

// Isomorphism search between finite categories (backtracking over object and
// arrow assignments respecting sources, targets, identities, composition).
bool categories_isomorphic(const FiniteCategory& a, const FiniteCategory& b);

// The plus construction: adjoin an object 0 with parallel maps s_C, t_C into
// every old object, images f+ of old arrows, and the equations
// f+ . s_C = s_D, f+ . t_C = t_D baked into the composition table.
FiniteCategory plus_construction(const FiniteCategory& c);

// Iterating plus from the empty category yields the categories whose
// presheaves are globular sets; this returns the (n+1)-fold iterate.
FiniteCategory globe_category(int n);

}  // namespace glb
