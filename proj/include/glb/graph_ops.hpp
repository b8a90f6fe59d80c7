#pragma once

#include <string>
#include <vector>

#include "glb/value.hpp"

namespace glb {

// A graph with two chosen basepoints.
struct Bipointed {
  ValPtr graph;
  CellPtr a, b;
};

// The one-object graph whose only hom is initial: the representing object of
// the underlying-set functor at the given hom level.
ValPtr point_graph(int hom_level);

// The sequence graph of a tuple of values: objects 0..n, hom(i-1, i) = Z_i,
// all other homs initial. Bipointed at (0, n).
Bipointed sequence_graph(const std::vector<ValPtr>& zs);

// Join of bipointed graphs: glue b_i to a_{i+1} by iterated pushout under the
// point. The glued object carries the coproduct of the two boundary self-homs;
// when those are initial the pushout is plain gluing.
Bipointed join(const std::vector<Bipointed>& ps);

// Restriction of X along an object sequence: the sequence graph of the
// consecutive homs, together with the evident map back into X (object map
// i |-> xs[i], identity hom maps).
struct FiberMap {
  Bipointed seq;
  VMap into;  // seq.graph -> X
};
FiberMap fiber_map(const ValPtr& x, const std::vector<CellPtr>& xs);

// Subsequence inclusion (Z_a,...,Z_b) -> (Z_1,...,Z_n), 1-based indices, as a
// map of sequence graphs: objects shift by a-1, hom maps are identities.
VMap subsequence_inclusion(const std::vector<ValPtr>& zs, std::size_t a,
                           std::size_t b);

// Connected components: finest partition merging a and b whenever X(a, b) is
// non-initial. Returns blocks of object cells, each block sorted, blocks
// ordered by their least element.
std::vector<std::vector<CellPtr>> connected_components(const ValPtr& x);

}  // namespace glb
