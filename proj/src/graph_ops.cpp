#include "glb/graph_ops.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace glb {

ValPtr point_graph(int hom_level) {
  return Val::graph(hom_level + 1, {Cell::atom("0")},
                    {initial_val(hom_level)});
}

Bipointed sequence_graph(const std::vector<ValPtr>& zs) {
  int hom_level = zs.empty() ? 0 : zs[0]->level;
  for (const auto& z : zs)
    if (z->level != hom_level)
      throw std::runtime_error("sequence_graph: level mismatch");
  std::size_t n = zs.size();
  std::vector<CellPtr> objects;
  for (std::size_t i = 0; i <= n; ++i)
    objects.push_back(Cell::atom(std::to_string(i)));
  std::vector<ValPtr> homs((n + 1) * (n + 1), initial_val(hom_level));
  for (std::size_t i = 0; i < n; ++i) homs[i * (n + 1) + (i + 1)] = zs[i];
  auto g = Val::graph(hom_level + 1, objects, std::move(homs));
  return {g, g->objects.front(), g->objects.back()};
}

namespace {

Bipointed join2(const Bipointed& x, const Bipointed& y) {
  const auto& X = x.graph;
  const auto& Y = y.graph;
  int level = X->level;
  std::size_t bx = *X->obj_index(x.b);
  std::size_t ay = *Y->obj_index(y.a);

  // Objects: X's objects, then Y's objects except the glued one. The glued
  // object keeps X's cell identity.
  std::vector<CellPtr> objects = X->objects;
  std::vector<std::size_t> ymap(Y->obj_count());
  for (std::size_t j = 0; j < Y->obj_count(); ++j) {
    if (j == ay) {
      ymap[j] = bx;
    } else {
      ymap[j] = objects.size();
      objects.push_back(Y->objects[j]);
    }
  }
  std::size_t n = objects.size();
  std::vector<ValPtr> homs(n * n, initial_val(level - 1));
  for (std::size_t i = 0; i < X->obj_count(); ++i)
    for (std::size_t j = 0; j < X->obj_count(); ++j)
      homs[i * n + j] = X->hom(i, j);
  for (std::size_t i = 0; i < Y->obj_count(); ++i)
    for (std::size_t j = 0; j < Y->obj_count(); ++j) {
      if (i == ay && j == ay) continue;  // handled below
      homs[ymap[i] * n + ymap[j]] = Y->hom(i, j);
    }
  // The glued self-hom is X(b,b) + Y(a,a).
  homs[bx * n + bx] = coproduct({X->hom(bx, bx), Y->hom(ay, ay)});
  auto g = Val::graph(level, std::move(objects), std::move(homs));
  return {g, x.a, g->objects[ymap[*Y->obj_index(y.b)]]};
}

}  // namespace

Bipointed join(const std::vector<Bipointed>& ps) {
  if (ps.empty()) {
    auto p = point_graph(0);
    return {p, p->objects[0], p->objects[0]};
  }
  Bipointed acc = ps[0];
  for (std::size_t i = 1; i < ps.size(); ++i) acc = join2(acc, ps[i]);
  return acc;
}

FiberMap fiber_map(const ValPtr& x, const std::vector<CellPtr>& xs) {
  if (x->is_set()) throw std::runtime_error("fiber_map: expected a graph");
  std::vector<std::size_t> idx;
  for (const auto& o : xs) {
    auto i = x->obj_index(o);
    if (!i) throw std::runtime_error("fiber_map: sequence element not an object");
    idx.push_back(*i);
  }
  if (idx.empty()) throw std::runtime_error("fiber_map: empty sequence");
  std::vector<ValPtr> homs;
  for (std::size_t k = 0; k + 1 < idx.size(); ++k)
    homs.push_back(x->hom(idx[k], idx[k + 1]));
  auto seq = sequence_graph(homs);
  VMap m;
  m.dom = seq.graph;
  m.cod = x;
  m.obj_map = idx;
  std::size_t n = seq.graph->obj_count();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i + 1) {
        m.hom_maps.push_back(VMap::identity(seq.graph->hom(i, j)));
        m.hom_maps.back().cod = x->hom(idx[i], idx[j]);
      } else {
        VMap e;
        e.dom = seq.graph->hom(i, j);
        e.cod = x->hom(idx[i], idx[j]);
        if (!e.dom->is_set()) {
          // initial graph: empty object map
        }
        m.hom_maps.push_back(std::move(e));
      }
    }
  return {seq, std::move(m)};
}

VMap subsequence_inclusion(const std::vector<ValPtr>& zs, std::size_t a,
                           std::size_t b) {
  if (a < 1 || b < a || b > zs.size())
    throw std::runtime_error("subsequence_inclusion: bad indices");
  std::vector<ValPtr> sub(zs.begin() + (a - 1), zs.begin() + b);
  auto s = sequence_graph(sub);
  auto t = sequence_graph(zs);
  VMap m;
  m.dom = s.graph;
  m.cod = t.graph;
  std::size_t n = s.graph->obj_count();
  for (std::size_t i = 0; i < n; ++i) m.obj_map.push_back(a - 1 + i);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i + 1) {
        auto id = VMap::identity(s.graph->hom(i, j));
        id.cod = t.graph->hom(a - 1 + i, a - 1 + j);
        m.hom_maps.push_back(std::move(id));
      } else {
        VMap e;
        e.dom = s.graph->hom(i, j);
        e.cod = t.graph->hom(a - 1 + i, a - 1 + j);
        m.hom_maps.push_back(std::move(e));
      }
    }
  return m;
}

std::vector<std::vector<CellPtr>> connected_components(const ValPtr& x) {
  std::size_t n = x->obj_count();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  std::function<std::size_t(std::size_t)> find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!is_initial(*x->hom(i, j))) parent[find(i)] = find(j);
  std::map<std::size_t, std::vector<CellPtr>> blocks;
  for (std::size_t i = 0; i < n; ++i) blocks[find(i)].push_back(x->objects[i]);
  std::vector<std::vector<CellPtr>> out;
  for (auto& [root, blk] : blocks) {
    std::sort(blk.begin(), blk.end(), CellLess{});
    out.push_back(std::move(blk));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& p, const auto& q) { return CellLess{}(p[0], q[0]); });
  return out;
}

}  // namespace glb
