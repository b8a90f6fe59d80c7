#pragma once

#include <map>
#include <string>
#include <vector>

#include "glb/fincat.hpp"
#include "glb/value.hpp"

namespace glb {

// A finite presheaf on a finite category: a fibre per object and a
// contravariant action per arrow. `validate` checks functoriality.
struct FinitePresheaf {
  const FiniteCategory* base = nullptr;
  std::map<std::string, std::vector<std::string>> fibre;  // object -> elements
  // arrow id -> (element of fibre(tgt) -> element of fibre(src))... stored
  // covariantly on names: action[f][x] with x in fibre(cod f).
  std::map<std::string, std::map<std::string, std::string>> action;

  void validate() const;
};

// A globular set of dimension n, presented either as a presheaf on the globe
// category or as an iterated graph (a level-n value). The two forms convert
// losslessly up to the canonical cell naming.
struct GlobularSet {
  int dim = 0;
  // Cells per dimension plus source/target of each positive-dimensional cell.
  std::vector<std::vector<std::string>> cells;       // cells[k]
  std::map<std::string, std::string> src, tgt;       // for cells of dim >= 1
  void validate() const;                             // globular identities

  ValPtr to_value() const;                           // level-dim value
  static GlobularSet from_value(const ValPtr& v);    // canonical renaming
  FinitePresheaf to_presheaf(const FiniteCategory& globe) const;
  static GlobularSet from_presheaf(const FinitePresheaf& p, int dim);
};

}  // namespace glb
