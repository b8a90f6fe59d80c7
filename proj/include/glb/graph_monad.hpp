#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "glb/graph_ops.hpp"
#include "glb/multitensor.hpp"
#include "glb/value.hpp"

namespace glb {

// A monad on enriched graphs that never changes object sets, presented as a
// graded enumerator: `apply` lists the hom cells of TX up to the rank bound
// and flags truncation through the value's completeness bit.
struct GraphMonad {
  std::string name;
  int level = 0;  // hom level; the monad acts on graphs at level + 1
  bool distributive = true;

  std::function<ValPtr(const ValPtr&, const Budget&)> apply;
  std::function<VMap(const VMap&, const Budget&)> map;
  std::function<VMap(const ValPtr&, const Budget&)> unit;  // X -> TX
  // mu_X : T(TX) -> TX, with T(TX) enumerated at the same bound. Images may
  // exceed the bound; they are concrete cells either way.
  std::function<VMap(const ValPtr&, const Budget&)> mult;
};

// The identity monad on graphs with homs at the given level.
GraphMonad identity_monad(int level);

// View a graph monad as a monad on the values it acts on (graphs at
// level + 1), forgetting the over-Set structure.
BaseMonad base_of(const GraphMonad& t);

// Homwise application: the monad G(T) on graphs whose homs T acts on. A
// T-algebra structure on the homs of a graph is exactly a G(T)-algebra
// structure, which is what makes the tower tick.
GraphMonad g_of(const BaseMonad& t);

// The monad associated to a distributive multitensor: hom cells are sums over
// object sequences of E applied to the consecutive homs, each summand tagged
// with its sequence. Unit is tag-at-singleton-sequence after E's unit;
// multiplication concatenates sequences through the coproduct comparison and
// then substitutes.
GraphMonad gamma(const Multitensor& e);

// Per-sequence summands of a gamma hom, with their injections.
struct GammaSummand {
  std::vector<std::size_t> seq;  // object indices, length n+1
  ValPtr value;                  // E of the consecutive homs
  VMap inj;                      // value -> hom of gamma(E)X at (seq.front, seq.back)
};
std::vector<GammaSummand> gamma_hom_summands(const Multitensor& e,
                                             const ValPtr& x, std::size_t a,
                                             std::size_t b, const Budget& bud);

// The multitensor of a monad over Set: evaluate on sequence graphs between the
// endpoints. Unit/substitution come from the monad's unit and multiplication
// through the subsequence inclusions.
Multitensor bar(const GraphMonad& t);

// The multitensor T^x : (X_1,...,X_n) |-> prod_i T(X_i) on the values T acts
// on.
Multitensor tx_multitensor(const BaseMonad& t);

// The tower: ncat_monad(1) is gamma(prod) on graphs; ncat_monad(n+1) is
// gamma(tx(ncat_monad(n))) on (n+1)-globular values.
GraphMonad ncat_monad(int n);

// Path-likeness: the maps T(xbar) over all object sequences jointly hit every
// enumerated hom cell exactly once. The report localizes any failure.
struct PathlikeReport {
  bool pathlike = true;
  bool complete = true;  // whether the enumeration covered everything
  std::vector<std::string> failures;
};
PathlikeReport check_pathlike(const GraphMonad& t, const ValPtr& x,
                              const Budget& b);

// The canonical comparison gamma(bar(T))X -> TX assembled from the hom maps
// of T(xbar). T is in the image of gamma exactly when this is invertible.
struct CounitResult {
  VMap component;   // at each hom: sum over sequences -> TX(a,b)
  bool invertible = true;
  std::vector<std::string> failures;
};
CounitResult counit_eps(const GraphMonad& t, const ValPtr& x, const Budget& b);

// Monad law checking on enumerated cells.
CheckReport check_monad_laws(const GraphMonad& t, const ValPtr& x,
                             const Budget& b);

// A T-algebra on a graph: structure map identity on objects.
struct GraphAlgebra {
  ValPtr carrier;                                      // graph, level t.level+1
  std::function<VMap(const Budget&)> action;           // TX -> X
};

// Algebras of a path-like monad against categories enriched in bar(T).
ECategory algebra_to_ecat(const GraphMonad& t, const GraphAlgebra& alg);
GraphAlgebra ecat_to_algebra(const GraphMonad& t, const ECategory& ecat);

// The monad-functor coherence obtained by applying the graph construction to
// a lax monoidal functor: components gamma(F)(GH X) -> GH(gamma(E) X).
struct GammaLaxResult {
  VMap component;
  CheckReport axioms;
};
GammaLaxResult gamma_lax_functor(const LaxMonoidalFunctor& f, const ValPtr& x,
                                 const Budget& b);

// A distributive law lambda : T S => S T between graph monads, with the
// composite monad S T.
struct DistributiveLaw {
  GraphMonad t, s;  // lambda : T S -> S T
  std::function<VMap(const ValPtr&, const Budget&)> lambda;
  GraphMonad composite() const;  // S T with multiplication through lambda
};

// Law from an opmonoidal structure tau : T'(E X_i) -> E(T' X_i) on a
// coproduct-preserving monad T' on the base of E: the law
// G(T') gamma(E) -> gamma(E) G(T'). Its composite is gamma of the multitensor
// E T'.
DistributiveLaw law_from_opmonoidal(
    const Multitensor& e, const BaseMonad& t,
    std::function<VMap(const std::vector<ValPtr>&, const Budget&)> tau);

// A finite category as a category enriched in finite products.
ECategory ecategory_of_category(const struct FiniteCategory& c);

// The four distributive-law squares on the cells of sampled graphs.
CheckReport check_distributive_law(const DistributiveLaw& law, const ValPtr& x,
                                   const Budget& b);

// Enumeration dump of free cells with ranks, for the CLI.
struct CellRecord {
  std::vector<std::string> address;  // nested object pair path
  CellPtr cell;
};
std::vector<CellRecord> enumerate_cells(const ValPtr& v);

}  // namespace glb
