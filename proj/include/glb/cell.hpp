#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace glb {

class Cell;
using CellPtr = std::shared_ptr<const Cell>;

// Immutable term tree. Every set-level value is a finite collection of cells.
//
// A cell with a nonempty `objects` field is a sequence node: it records the
// object sequence it was tagged with when a hom was decomposed as a sum over
// sequences. Its rank follows the rule
//
//     rank = max(sequence length, 1 + max rank of children)
//
// so that graded enumeration is deterministic and reproducible. Plain nodes
// default to the max of their children's ranks (containers are transparent),
// and constructors may override the rank when a different grading is wanted
// (free-monoid words are graded by length, for instance).
class Cell {
 public:
  std::string label;
  std::vector<std::string> objects;
  std::vector<CellPtr> children;
  int rank = 0;
  std::size_t hash = 0;

  static CellPtr atom(const std::string& name);
  static CellPtr node(const std::string& label, std::vector<CellPtr> children,
                      int explicit_rank = -1);
  static CellPtr seq(std::vector<std::string> objs,
                     std::vector<CellPtr> children);

  bool is_atom() const { return objects.empty() && children.empty(); }
  bool is_seq() const { return !objects.empty(); }
  // Number of edges in the object sequence (objects.size() - 1).
  int seq_len() const {
    return objects.empty() ? 0 : static_cast<int>(objects.size()) - 1;
  }
};

// Structural equality / total order. The order is independent of memory
// layout so enumerations are stable across runs.
bool cell_eq(const CellPtr& a, const CellPtr& b);
int cell_cmp(const CellPtr& a, const CellPtr& b);

struct CellLess {
  bool operator()(const CellPtr& a, const CellPtr& b) const {
    return cell_cmp(a, b) < 0;
  }
};

std::string to_string(const CellPtr& c);

}  // namespace glb
