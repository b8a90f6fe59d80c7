#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "glb/cell.hpp"

namespace glb {

class Val;
using ValPtr = std::shared_ptr<const Val>;

// A value of the base tower. Level 0 values are finite sets of cells; a level
// k > 0 value is a graph whose objects are cells and whose homs are level k-1
// values. Iterating from sets this gives n-globular structures for every n.
//
// `complete` records whether the enumeration is exhaustive: free constructions
// are graded and get truncated at a rank bound, and every operation propagates
// the flag so a truncated answer is never mistaken for a total one.
class Val {
 public:
  int level = 0;
  bool complete = true;

  // level == 0: sorted, duplicate-free cells.
  std::vector<CellPtr> cells;

  // level > 0: parallel arrays; homs indexed by i * objects.size() + j.
  std::vector<CellPtr> objects;
  std::vector<ValPtr> homs;

  bool is_set() const { return level == 0; }
  std::size_t obj_count() const { return objects.size(); }
  const ValPtr& hom(std::size_t i, std::size_t j) const {
    return homs[i * objects.size() + j];
  }
  std::optional<std::size_t> obj_index(const CellPtr& o) const;

  static ValPtr set(std::vector<CellPtr> cells, bool complete = true);
  static ValPtr graph(int level, std::vector<CellPtr> objects,
                      std::vector<ValPtr> homs);
};

// Morphism of values: a cell map at level 0, an object map plus hom maps at
// higher levels. Maps are total on their (enumerated) domain.
class VMap {
 public:
  ValPtr dom, cod;
  std::map<CellPtr, CellPtr, CellLess> cell_map;  // level 0
  std::vector<std::size_t> obj_map;               // level > 0
  std::vector<VMap> hom_maps;                     // level > 0, dom-pair indexed

  const VMap& hom(std::size_t i, std::size_t j) const {
    return hom_maps[i * dom->obj_count() + j];
  }
  CellPtr apply_cell(const CellPtr& c) const;          // level 0
  CellPtr apply_obj(const CellPtr& o) const;           // level > 0
  static VMap identity(const ValPtr& x);
};

// -- structural operations ----------------------------------------------

ValPtr initial_val(int level);
ValPtr terminal_val(int level);
bool is_initial(const Val& v);
bool val_eq(const ValPtr& a, const ValPtr& b);

// Coproduct. Level-0 cells of summand i are wrapped as in(i, c); objects of
// higher-level summands likewise. Injections returned on request.
ValPtr coproduct(const std::vector<ValPtr>& xs, std::vector<VMap>* inj = nullptr);

// Finite product. Cells / objects become tuple nodes. Projections on request.
ValPtr product(const std::vector<ValPtr>& xs, std::vector<VMap>* proj = nullptr);

// Pullback of f : A -> B <- C : g over a common codomain.
ValPtr pullback(const VMap& f, const VMap& g, VMap* p1 = nullptr,
                VMap* p2 = nullptr);

// Product of maps: given f_i : A_i -> B_i, the map prod A -> prod B acting
// componentwise on tuples. Domain/codomain are the tuple-cell products.
VMap product_map(const std::vector<VMap>& fs);

// Pairing: given g_i : D -> C_i with common domain, the map D -> prod C.
VMap pair_map(const std::vector<VMap>& gs);

// Composition / comparison of maps.
VMap compose(const VMap& g, const VMap& f);
bool vmap_eq(const VMap& f, const VMap& g);
// Agreement of two maps out of the same domain, ignoring codomain identity:
// every domain cell/object goes to the same place.
bool maps_agree(const VMap& f, const VMap& g);
bool is_bijective(const VMap& f);
std::optional<VMap> invert(const VMap& f);

// Isomorphism search by backtracking over object bijections. Level-0 values
// are isomorphic iff they have the same cardinality.
std::optional<VMap> find_iso(const ValPtr& a, const ValPtr& b);

// Given injections inj_i : V_i -> H realizing H as a tagged disjoint union
// and maps g_i : V_i -> C into a common codomain, the unique map H -> C
// restricting to g_i along each injection.
VMap assemble_from_summands(const ValPtr& h, const std::vector<VMap>& injs,
                            const std::vector<VMap>& gs, const ValPtr& cod);

// Fibre decomposition: a value flattens into its set-level fibres, addressed
// by the nested object pairs leading to them. Maps that are identities on
// objects decompose the same way; this is how hom-wise computations are run
// uniformly at every level.
struct Fibre {
  std::vector<std::pair<CellPtr, CellPtr>> address;
  ValPtr set;  // level 0
};
std::vector<Fibre> fibres(const ValPtr& v);

// Rebuild a value with the same shape as `v` but fibre contents replaced.
// `repl[i]` replaces fibres(v)[i].
ValPtr replace_fibres(const ValPtr& v, const std::vector<ValPtr>& repl);

// All cells of every fibre, tagged with rank. Used for counting and dumping.
std::vector<CellPtr> all_cells(const ValPtr& v);

std::string to_string(const ValPtr& v);

}  // namespace glb
