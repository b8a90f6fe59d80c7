#include "glb/cell.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace glb {

namespace {

std::size_t mix(std::size_t h, std::size_t k) {
  h ^= k + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::size_t compute_hash(const Cell& c) {
  std::size_t h = std::hash<std::string>{}(c.label);
  for (const auto& o : c.objects) h = mix(h, std::hash<std::string>{}(o));
  h = mix(h, 0x5151u);
  for (const auto& ch : c.children) h = mix(h, ch->hash);
  return h;
}

int default_rank(const Cell& c) {
  int child_max = 0;
  for (const auto& ch : c.children) child_max = std::max(child_max, ch->rank);
  if (!c.objects.empty()) {
    int n = static_cast<int>(c.objects.size()) - 1;
    int lifted = c.children.empty() ? 1 : 1 + child_max;
    return std::max(n, lifted);
  }
  return child_max;
}

CellPtr finish(Cell c, int explicit_rank) {
  c.rank = explicit_rank >= 0 ? explicit_rank : default_rank(c);
  c.hash = compute_hash(c);
  return std::make_shared<const Cell>(std::move(c));
}

}  // namespace

CellPtr Cell::atom(const std::string& name) {
  Cell c;
  c.label = name;
  return finish(std::move(c), -1);
}

CellPtr Cell::node(const std::string& label, std::vector<CellPtr> children,
                   int explicit_rank) {
  Cell c;
  c.label = label;
  c.children = std::move(children);
  return finish(std::move(c), explicit_rank);
}

CellPtr Cell::seq(std::vector<std::string> objs, std::vector<CellPtr> children) {
  Cell c;
  c.label = "g";
  c.objects = std::move(objs);
  c.children = std::move(children);
  return finish(std::move(c), -1);
}

bool cell_eq(const CellPtr& a, const CellPtr& b) { return cell_cmp(a, b) == 0; }

int cell_cmp(const CellPtr& a, const CellPtr& b) {
  if (a.get() == b.get()) return 0;
  if (a->rank != b->rank) return a->rank < b->rank ? -1 : 1;
  if (a->objects.size() != b->objects.size())
    return a->objects.size() < b->objects.size() ? -1 : 1;
  for (std::size_t i = 0; i < a->objects.size(); ++i) {
    int c = a->objects[i].compare(b->objects[i]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  {
    int c = a->label.compare(b->label);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  if (a->children.size() != b->children.size())
    return a->children.size() < b->children.size() ? -1 : 1;
  for (std::size_t i = 0; i < a->children.size(); ++i) {
    int c = cell_cmp(a->children[i], b->children[i]);
    if (c != 0) return c;
  }
  return 0;
}

std::string to_string(const CellPtr& c) {
  std::ostringstream out;
  out << c->label;
  if (!c->objects.empty()) {
    out << '[';
    for (std::size_t i = 0; i < c->objects.size(); ++i) {
      if (i) out << ',';
      out << c->objects[i];
    }
    out << ']';
  }
  if (!c->children.empty() || !c->objects.empty()) {
    out << '(';
    for (std::size_t i = 0; i < c->children.size(); ++i) {
      if (i) out << ',';
      out << to_string(c->children[i]);
    }
    out << ')';
  }
  return out.str();
}

}  // namespace glb
