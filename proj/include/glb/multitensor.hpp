#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "glb/value.hpp"

namespace glb {

// Rank bound for graded enumeration. Free constructions enumerate all cells of
// rank <= bound and flag the result incomplete if anything lies beyond.
struct Budget {
  int bound = 4;
};

// An executable multitensor on the level-`level` base: an n-ary operation on
// values for every n >= 0, functorial on maps, with unit and substitution.
// Axioms are checked by sampling (`check_multitensor_axioms`), since they
// quantify over all values.
struct Multitensor {
  std::string name;
  int level = 0;
  bool distributive = true;

  std::function<ValPtr(const std::vector<ValPtr>&, const Budget&)> apply;
  std::function<VMap(const std::vector<VMap>&, const Budget&)> apply_map;
  // u_Z : Z -> E(Z)
  std::function<VMap(const ValPtr&, const Budget&)> unit;
  // sigma at a doubly nested tuple: E_i E_j X_ij -> E_ij X_ij
  std::function<VMap(const std::vector<std::vector<ValPtr>>&, const Budget&)>
      subst;

  // Unary part as a monad on the base.
  ValPtr e1(const ValPtr& x, const Budget& b) const { return apply({x}, b); }
};

// Finite products as a multitensor.
Multitensor prod_multitensor(int level);

// A non-symmetric operad in Set by explicit tables.
struct SetOperad {
  std::string name;
  std::map<int, std::vector<std::string>> ops;  // arity -> operation names
  std::string unit;                             // an arity-1 operation
  // (top op, tuple of ops) -> composite op
  std::map<std::pair<std::string, std::vector<std::string>>, std::string> subst;
  int arity_of(const std::string& op) const;
  void validate() const;
};

// The multitensor (X_1,...,X_n) |-> O_n x X_1 x ... x X_n on Set.
Multitensor operad_multitensor(const SetOperad& o);

// Monoidal-monad composites: given a multitensor E and a monad T on the same
// base with coherence tau, the multitensors TE (objects T E_i X_i) and ET
// (objects E_i T X_i). The monad is given operationally.
struct BaseMonad {
  std::string name;
  int level = 0;
  std::function<ValPtr(const ValPtr&, const Budget&)> apply;
  std::function<VMap(const VMap&, const Budget&)> map;
  std::function<VMap(const ValPtr&, const Budget&)> unit;   // X -> TX
  std::function<VMap(const ValPtr&, const Budget&)> mult;   // TTX -> TX
};
// tau components: E_i T X_i -> T E_i X_i (monoidal direction)
Multitensor te_multitensor(
    const Multitensor& e, const BaseMonad& t,
    std::function<VMap(const std::vector<ValPtr>&, const Budget&)> tau);
// tau components: T E_i X_i -> E_i T X_i (opmonoidal direction)
Multitensor et_multitensor(
    const Multitensor& e, const BaseMonad& t,
    std::function<VMap(const std::vector<ValPtr>&, const Budget&)> tau);

// Composite of two one-cells in the bicategory of distributive multitensors:
// (E o F)(X_1..X_n) = coproduct over partitions n_1+...+n_k = n of
// E_i F_j X_ij, with tagged injections. Partition count is truncated by the
// budget (parts may be empty, so k is unbounded in general).
struct ComposedApplication {
  ValPtr value;
  std::vector<std::pair<std::vector<int>, VMap>> injections;  // partition, inj
};
ComposedApplication compose_multitensors(const Multitensor& e,
                                         const Multitensor& f,
                                         const std::vector<ValPtr>& xs,
                                         const Budget& b);

// A category enriched in E: an underlying graph together with composition
// maps indexed by object sequences.
struct ECategory {
  Multitensor tensor;
  ValPtr graph;  // level tensor.level + 1
  // kappa at an object sequence (indices into graph objects):
  //   E_i X(x_{i-1}, x_i) -> X(x_0, x_n)
  std::function<VMap(const std::vector<std::size_t>&, const Budget&)> kappa;
};

// A lax monoidal functor between multitensor bases.
struct BaseFunctor {
  std::string name;
  int dom_level = 0, cod_level = 0;
  std::function<ValPtr(const ValPtr&, const Budget&)> apply;
  std::function<VMap(const VMap&, const Budget&)> map;
};
struct LaxMonoidalFunctor {
  Multitensor dom;  // E on V
  Multitensor cod;  // F on W
  BaseFunctor h;
  // psi components: F_i H X_i -> H E_i X_i
  std::function<VMap(const std::vector<ValPtr>&, const Budget&)> psi;
};

// Sampled axiom checking. Failures carry a description of the offending
// instance; an empty failure list means every sampled instance passed.
struct CheckReport {
  bool ok = true;
  std::vector<std::string> failures;
  void fail(const std::string& what) {
    ok = false;
    failures.push_back(what);
  }
};

// Multitensor axioms (unit triangles and substitution associativity) on all
// nestings drawn from `samples` with outer arity <= max_arity.
CheckReport check_multitensor_axioms(const Multitensor& e,
                                     const std::vector<ValPtr>& samples,
                                     int max_arity, const Budget& b);

// Distributivity: the canonical comparison from the coproduct of summand
// applications to the application of a coproduct is bijective, in each
// variable, over the sampled values.
CheckReport check_distributivity(const Multitensor& e,
                                 const std::vector<ValPtr>& samples,
                                 int max_arity, const Budget& b);

// E-category axioms (unit and substitution squares) over all object sequences
// of the underlying graph up to the given length.
CheckReport check_ecategory_axioms(const ECategory& x, int max_len,
                                   const Budget& b);

// Lax monoidal functor coherence axioms on sampled tuples.
CheckReport check_lax_monoidal_axioms(const LaxMonoidalFunctor& f,
                                      const std::vector<ValPtr>& samples,
                                      int max_arity, const Budget& b);

}  // namespace glb
