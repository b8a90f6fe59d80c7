#include "glb/value.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace glb {

namespace {

void sort_unique(std::vector<CellPtr>& cs) {
  std::sort(cs.begin(), cs.end(),
            [](const CellPtr& a, const CellPtr& b) { return cell_cmp(a, b) < 0; });
  cs.erase(std::unique(cs.begin(), cs.end(),
                       [](const CellPtr& a, const CellPtr& b) {
                         return cell_cmp(a, b) == 0;
                       }),
           cs.end());
}

}  // namespace

std::optional<std::size_t> Val::obj_index(const CellPtr& o) const {
  for (std::size_t i = 0; i < objects.size(); ++i)
    if (cell_eq(objects[i], o)) return i;
  return std::nullopt;
}

ValPtr Val::set(std::vector<CellPtr> cells, bool complete) {
  auto v = std::make_shared<Val>();
  v->level = 0;
  sort_unique(cells);
  v->cells = std::move(cells);
  v->complete = complete;
  return v;
}

ValPtr Val::graph(int level, std::vector<CellPtr> objects,
                  std::vector<ValPtr> homs) {
  assert(level > 0);
  assert(homs.size() == objects.size() * objects.size());
  auto v = std::make_shared<Val>();
  v->level = level;
  v->objects = std::move(objects);
  v->homs = std::move(homs);
  v->complete = true;
  for (const auto& h : v->homs) {
    assert(h->level == level - 1);
    if (!h->complete) v->complete = false;
  }
  return v;
}

CellPtr VMap::apply_cell(const CellPtr& c) const {
  auto it = cell_map.find(c);
  if (it == cell_map.end())
    throw std::runtime_error("VMap: cell not in domain: " + to_string(c));
  return it->second;
}

CellPtr VMap::apply_obj(const CellPtr& o) const {
  auto idx = dom->obj_index(o);
  if (!idx) throw std::runtime_error("VMap: object not in domain");
  return cod->objects[obj_map[*idx]];
}

VMap VMap::identity(const ValPtr& x) {
  VMap m;
  m.dom = m.cod = x;
  if (x->is_set()) {
    for (const auto& c : x->cells) m.cell_map.emplace(c, c);
  } else {
    m.obj_map.resize(x->obj_count());
    std::iota(m.obj_map.begin(), m.obj_map.end(), std::size_t{0});
    for (std::size_t i = 0; i < x->obj_count(); ++i)
      for (std::size_t j = 0; j < x->obj_count(); ++j)
        m.hom_maps.push_back(identity(x->hom(i, j)));
  }
  return m;
}

ValPtr initial_val(int level) {
  if (level == 0) return Val::set({});
  return Val::graph(level, {}, {});
}

ValPtr terminal_val(int level) {
  if (level == 0) return Val::set({Cell::atom("*")});
  return Val::graph(level, {Cell::atom("*")}, {terminal_val(level - 1)});
}

bool is_initial(const Val& v) {
  if (v.is_set()) return v.cells.empty();
  return v.objects.empty();
}

bool val_eq(const ValPtr& a, const ValPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->level != b->level || a->complete != b->complete) return false;
  if (a->is_set()) {
    if (a->cells.size() != b->cells.size()) return false;
    for (std::size_t i = 0; i < a->cells.size(); ++i)
      if (!cell_eq(a->cells[i], b->cells[i])) return false;
    return true;
  }
  if (a->obj_count() != b->obj_count()) return false;
  for (std::size_t i = 0; i < a->obj_count(); ++i)
    if (!cell_eq(a->objects[i], b->objects[i])) return false;
  for (std::size_t i = 0; i < a->homs.size(); ++i)
    if (!val_eq(a->homs[i], b->homs[i])) return false;
  return true;
}

namespace {

CellPtr tag_in(std::size_t i, const CellPtr& c) {
  return Cell::node("in" + std::to_string(i), {c});
}

}  // namespace

ValPtr coproduct(const std::vector<ValPtr>& xs, std::vector<VMap>* inj) {
  int level = xs.empty() ? 0 : xs[0]->level;
  for (const auto& x : xs)
    if (x->level != level) throw std::runtime_error("coproduct: level mismatch");
  if (inj) inj->clear();

  if (level == 0) {
    std::vector<CellPtr> cells;
    bool complete = true;
    std::vector<VMap> maps(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
      maps[i].dom = xs[i];
      for (const auto& c : xs[i]->cells) {
        auto t = tag_in(i, c);
        cells.push_back(t);
        maps[i].cell_map.emplace(c, t);
      }
      complete = complete && xs[i]->complete;
    }
    auto v = Val::set(std::move(cells), complete);
    if (inj) {
      for (auto& m : maps) m.cod = v;
      *inj = std::move(maps);
    }
    return v;
  }

  std::vector<CellPtr> objects;
  std::vector<std::vector<std::size_t>> obj_of(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (const auto& o : xs[i]->objects) {
      obj_of[i].push_back(objects.size());
      objects.push_back(tag_in(i, o));
    }
  std::size_t n = objects.size();
  std::vector<ValPtr> homs(n * n, initial_val(level - 1));
  for (std::size_t i = 0; i < xs.size(); ++i) {
    std::size_t k = xs[i]->obj_count();
    for (std::size_t p = 0; p < k; ++p)
      for (std::size_t q = 0; q < k; ++q)
        homs[obj_of[i][p] * n + obj_of[i][q]] = xs[i]->hom(p, q);
  }
  auto v = Val::graph(level, std::move(objects), std::move(homs));
  if (inj) {
    for (std::size_t i = 0; i < xs.size(); ++i) {
      VMap m;
      m.dom = xs[i];
      m.cod = v;
      m.obj_map = obj_of[i];
      std::size_t k = xs[i]->obj_count();
      for (std::size_t p = 0; p < k; ++p)
        for (std::size_t q = 0; q < k; ++q)
          m.hom_maps.push_back(VMap::identity(xs[i]->hom(p, q)));
      inj->push_back(std::move(m));
    }
  }
  return v;
}

namespace {

// Enumerate tuples over index ranges; f receives the current index tuple.
void for_tuples(const std::vector<std::size_t>& sizes,
                const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(sizes.size(), 0);
  for (const auto s : sizes)
    if (s == 0) return;
  while (true) {
    f(idx);
    std::size_t k = sizes.size();
    while (k > 0) {
      --k;
      if (++idx[k] < sizes[k]) break;
      idx[k] = 0;
      if (k == 0) return;
    }
    if (sizes.empty()) return;
  }
}

}  // namespace

ValPtr product(const std::vector<ValPtr>& xs, std::vector<VMap>* proj) {
  int level = xs.empty() ? 0 : xs[0]->level;
  for (const auto& x : xs)
    if (x->level != level) throw std::runtime_error("product: level mismatch");
  if (proj) proj->clear();

  if (xs.empty()) {
    // Empty product at level 0: the one-point set {t()}.
    auto v = Val::set({Cell::node("t", {})});
    return v;
  }

  if (level == 0) {
    std::vector<CellPtr> cells;
    bool complete = true;
    std::vector<std::size_t> sizes;
    for (const auto& x : xs) {
      sizes.push_back(x->cells.size());
      complete = complete && x->complete;
    }
    std::vector<VMap> maps(xs.size());
    for_tuples(sizes, [&](const std::vector<std::size_t>& idx) {
      std::vector<CellPtr> parts;
      for (std::size_t i = 0; i < xs.size(); ++i)
        parts.push_back(xs[i]->cells[idx[i]]);
      auto t = Cell::node("t", parts);
      cells.push_back(t);
      for (std::size_t i = 0; i < xs.size(); ++i)
        maps[i].cell_map.emplace(t, parts[i]);
    });
    auto v = Val::set(std::move(cells), complete);
    if (proj) {
      for (std::size_t i = 0; i < xs.size(); ++i) {
        maps[i].dom = v;
        maps[i].cod = xs[i];
      }
      *proj = std::move(maps);
    }
    return v;
  }

  std::vector<std::size_t> sizes;
  for (const auto& x : xs) sizes.push_back(x->obj_count());
  std::vector<CellPtr> objects;
  std::vector<std::vector<std::size_t>> tuples;
  for_tuples(sizes, [&](const std::vector<std::size_t>& idx) {
    std::vector<CellPtr> parts;
    for (std::size_t i = 0; i < xs.size(); ++i)
      parts.push_back(xs[i]->objects[idx[i]]);
    objects.push_back(Cell::node("t", parts));
    tuples.push_back(idx);
  });
  std::size_t n = objects.size();
  std::vector<ValPtr> homs;
  std::vector<std::vector<VMap>> hom_projs(n * n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      std::vector<ValPtr> hs;
      for (std::size_t i = 0; i < xs.size(); ++i)
        hs.push_back(xs[i]->hom(tuples[p][i], tuples[q][i]));
      std::vector<VMap> pr;
      homs.push_back(product(hs, proj ? &pr : nullptr));
      hom_projs[p * n + q] = std::move(pr);
    }
  auto v = Val::graph(level, std::move(objects), std::move(homs));
  if (proj) {
    for (std::size_t i = 0; i < xs.size(); ++i) {
      VMap m;
      m.dom = v;
      m.cod = xs[i];
      for (std::size_t p = 0; p < n; ++p) m.obj_map.push_back(tuples[p][i]);
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q)
          m.hom_maps.push_back(hom_projs[p * n + q][i]);
      proj->push_back(std::move(m));
    }
  }
  return v;
}

ValPtr pullback(const VMap& f, const VMap& g, VMap* p1, VMap* p2) {
  if (f.cod.get() != g.cod.get() && !val_eq(f.cod, g.cod))
    throw std::runtime_error("pullback: codomain mismatch");
  const ValPtr& a = f.dom;
  const ValPtr& c = g.dom;
  if (a->is_set()) {
    std::vector<CellPtr> cells;
    VMap m1, m2;
    for (const auto& x : a->cells)
      for (const auto& y : c->cells)
        if (cell_eq(f.cell_map.at(x), g.cell_map.at(y))) {
          auto t = Cell::node("t", {x, y});
          cells.push_back(t);
          m1.cell_map.emplace(t, x);
          m2.cell_map.emplace(t, y);
        }
    auto v = Val::set(std::move(cells), a->complete && c->complete);
    if (p1) {
      m1.dom = v;
      m1.cod = a;
      *p1 = std::move(m1);
    }
    if (p2) {
      m2.dom = v;
      m2.cod = c;
      *p2 = std::move(m2);
    }
    return v;
  }
  std::vector<CellPtr> objects;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < a->obj_count(); ++i)
    for (std::size_t j = 0; j < c->obj_count(); ++j)
      if (f.obj_map[i] == g.obj_map[j]) {
        objects.push_back(Cell::node("t", {a->objects[i], c->objects[j]}));
        pairs.emplace_back(i, j);
      }
  std::size_t n = objects.size();
  std::vector<ValPtr> homs;
  std::vector<VMap> hp1, hp2;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      VMap u, w;
      auto h = pullback(f.hom(pairs[p].first, pairs[q].first),
                        g.hom(pairs[p].second, pairs[q].second), &u, &w);
      homs.push_back(h);
      hp1.push_back(std::move(u));
      hp2.push_back(std::move(w));
    }
  auto v = Val::graph(a->level, std::move(objects), std::move(homs));
  auto mk = [&](const ValPtr& cod, bool first, std::vector<VMap>& hs) {
    VMap m;
    m.dom = v;
    m.cod = cod;
    for (const auto& pq : pairs) m.obj_map.push_back(first ? pq.first : pq.second);
    m.hom_maps = std::move(hs);
    return m;
  };
  if (p1) *p1 = mk(a, true, hp1);
  if (p2) *p2 = mk(c, false, hp2);
  return v;
}

VMap product_map(const std::vector<VMap>& fs) {
  std::vector<ValPtr> doms, cods;
  for (const auto& f : fs) {
    doms.push_back(f.dom);
    cods.push_back(f.cod);
  }
  VMap m;
  m.dom = product(doms);
  m.cod = product(cods);
  if (m.dom->is_set()) {
    for (const auto& t : m.dom->cells) {
      std::vector<CellPtr> parts;
      for (std::size_t i = 0; i < fs.size(); ++i)
        parts.push_back(fs[i].apply_cell(t->children[i]));
      m.cell_map.emplace(t, Cell::node("t", std::move(parts)));
    }
    return m;
  }
  for (const auto& o : m.dom->objects) {
    std::vector<CellPtr> parts;
    for (std::size_t i = 0; i < fs.size(); ++i)
      parts.push_back(fs[i].apply_obj(o->children[i]));
    auto img = Cell::node("t", std::move(parts));
    auto idx = m.cod->obj_index(img);
    if (!idx) throw std::runtime_error("product_map: image object missing");
    m.obj_map.push_back(*idx);
  }
  std::size_t n = m.dom->obj_count();
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      std::vector<VMap> comps;
      for (std::size_t i = 0; i < fs.size(); ++i) {
        const auto& oP = m.dom->objects[p]->children[i];
        const auto& oQ = m.dom->objects[q]->children[i];
        comps.push_back(fs[i].hom(*fs[i].dom->obj_index(oP),
                                  *fs[i].dom->obj_index(oQ)));
      }
      m.hom_maps.push_back(product_map(comps));
    }
  return m;
}

VMap pair_map(const std::vector<VMap>& gs) {
  if (gs.empty()) throw std::runtime_error("pair_map: empty family");
  std::vector<ValPtr> cods;
  for (const auto& g : gs) cods.push_back(g.cod);
  VMap m;
  m.dom = gs[0].dom;
  m.cod = product(cods);
  if (m.dom->is_set()) {
    for (const auto& c : m.dom->cells) {
      std::vector<CellPtr> parts;
      for (const auto& g : gs) parts.push_back(g.apply_cell(c));
      m.cell_map.emplace(c, Cell::node("t", std::move(parts)));
    }
    return m;
  }
  for (std::size_t i = 0; i < m.dom->obj_count(); ++i) {
    std::vector<CellPtr> parts;
    for (const auto& g : gs) parts.push_back(g.cod->objects[g.obj_map[i]]);
    auto idx = m.cod->obj_index(Cell::node("t", std::move(parts)));
    if (!idx) throw std::runtime_error("pair_map: image object missing");
    m.obj_map.push_back(*idx);
  }
  std::size_t n = m.dom->obj_count();
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      std::vector<VMap> comps;
      for (const auto& g : gs) comps.push_back(g.hom(p, q));
      m.hom_maps.push_back(pair_map(comps));
    }
  return m;
}

VMap compose(const VMap& g, const VMap& f) {
  VMap m;
  m.dom = f.dom;
  m.cod = g.cod;
  if (f.dom->is_set()) {
    for (const auto& [x, y] : f.cell_map) m.cell_map.emplace(x, g.apply_cell(y));
    return m;
  }
  for (std::size_t i = 0; i < f.dom->obj_count(); ++i)
    m.obj_map.push_back(g.obj_map[f.obj_map[i]]);
  std::size_t n = f.dom->obj_count();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m.hom_maps.push_back(
          compose(g.hom(f.obj_map[i], f.obj_map[j]), f.hom(i, j)));
  return m;
}

bool vmap_eq(const VMap& f, const VMap& g) {
  if (!val_eq(f.dom, g.dom) || !val_eq(f.cod, g.cod)) return false;
  if (f.dom->is_set()) {
    for (const auto& [x, y] : f.cell_map) {
      auto it = g.cell_map.find(x);
      if (it == g.cell_map.end() || !cell_eq(y, it->second)) return false;
    }
    return f.cell_map.size() == g.cell_map.size();
  }
  if (f.obj_map != g.obj_map) return false;
  for (std::size_t i = 0; i < f.hom_maps.size(); ++i)
    if (!vmap_eq(f.hom_maps[i], g.hom_maps[i])) return false;
  return true;
}

bool maps_agree(const VMap& f, const VMap& g) {
  if (f.dom->is_set() != g.dom->is_set()) return false;
  if (f.dom->is_set()) {
    if (f.cell_map.size() != g.cell_map.size()) return false;
    for (const auto& [x, y] : f.cell_map) {
      auto it = g.cell_map.find(x);
      if (it == g.cell_map.end() || !cell_eq(y, it->second)) return false;
    }
    return true;
  }
  if (f.obj_map.size() != g.obj_map.size()) return false;
  for (std::size_t i = 0; i < f.obj_map.size(); ++i)
    if (!cell_eq(f.cod->objects[f.obj_map[i]], g.cod->objects[g.obj_map[i]]))
      return false;
  if (f.hom_maps.size() != g.hom_maps.size()) return false;
  for (std::size_t i = 0; i < f.hom_maps.size(); ++i)
    if (!maps_agree(f.hom_maps[i], g.hom_maps[i])) return false;
  return true;
}

bool is_bijective(const VMap& f) {
  if (f.dom->is_set()) {
    if (f.cell_map.size() != f.dom->cells.size()) return false;
    std::set<CellPtr, CellLess> image;
    for (const auto& [x, y] : f.cell_map) image.insert(y);
    return image.size() == f.cod->cells.size() &&
           f.cell_map.size() == f.cod->cells.size();
  }
  std::set<std::size_t> img(f.obj_map.begin(), f.obj_map.end());
  if (img.size() != f.dom->obj_count() || img.size() != f.cod->obj_count())
    return false;
  for (const auto& h : f.hom_maps)
    if (!is_bijective(h)) return false;
  return true;
}

std::optional<VMap> invert(const VMap& f) {
  if (!is_bijective(f)) return std::nullopt;
  VMap m;
  m.dom = f.cod;
  m.cod = f.dom;
  if (f.dom->is_set()) {
    for (const auto& [x, y] : f.cell_map) m.cell_map.emplace(y, x);
    return m;
  }
  m.obj_map.resize(f.cod->obj_count());
  for (std::size_t i = 0; i < f.obj_map.size(); ++i) m.obj_map[f.obj_map[i]] = i;
  std::size_t n = f.cod->obj_count();
  m.hom_maps.resize(n * n);
  for (std::size_t i = 0; i < f.dom->obj_count(); ++i)
    for (std::size_t j = 0; j < f.dom->obj_count(); ++j) {
      auto inv = invert(f.hom(i, j));
      if (!inv) return std::nullopt;
      m.hom_maps[f.obj_map[i] * n + f.obj_map[j]] = std::move(*inv);
    }
  return m;
}

namespace {

bool iso_backtrack(const ValPtr& a, const ValPtr& b,
                   std::vector<std::size_t>& assign, std::vector<bool>& used,
                   std::size_t next);

std::optional<VMap> iso_of_assignment(const ValPtr& a, const ValPtr& b,
                                      const std::vector<std::size_t>& assign) {
  VMap m;
  m.dom = a;
  m.cod = b;
  m.obj_map = assign;
  std::size_t n = a->obj_count();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto h = find_iso(a->hom(i, j), b->hom(assign[i], assign[j]));
      if (!h) return std::nullopt;
      m.hom_maps.push_back(std::move(*h));
    }
  return m;
}

bool iso_backtrack(const ValPtr& a, const ValPtr& b,
                   std::vector<std::size_t>& assign, std::vector<bool>& used,
                   std::size_t next) {
  std::size_t n = a->obj_count();
  if (next == n) return true;
  for (std::size_t cand = 0; cand < n; ++cand) {
    if (used[cand]) continue;
    bool ok = true;
    // Check hom compatibility against already assigned objects (and self).
    for (std::size_t k = 0; k <= next && ok; ++k) {
      std::size_t ak = (k == next) ? next : k;
      std::size_t bk = (k == next) ? cand : assign[k];
      if (!find_iso(a->hom(next, ak), b->hom(cand, bk)) ||
          !find_iso(a->hom(ak, next), b->hom(bk, cand)))
        ok = false;
    }
    if (!ok) continue;
    assign[next] = cand;
    used[cand] = true;
    if (iso_backtrack(a, b, assign, used, next + 1)) return true;
    used[cand] = false;
  }
  return false;
}

}  // namespace

std::optional<VMap> find_iso(const ValPtr& a, const ValPtr& b) {
  if (a->level != b->level) return std::nullopt;
  if (a->is_set()) {
    if (a->cells.size() != b->cells.size()) return std::nullopt;
    VMap m;
    m.dom = a;
    m.cod = b;
    for (std::size_t i = 0; i < a->cells.size(); ++i)
      m.cell_map.emplace(a->cells[i], b->cells[i]);
    return m;
  }
  if (a->obj_count() != b->obj_count()) return std::nullopt;
  std::vector<std::size_t> assign(a->obj_count());
  std::vector<bool> used(a->obj_count(), false);
  if (!iso_backtrack(a, b, assign, used, 0)) return std::nullopt;
  return iso_of_assignment(a, b, assign);
}

namespace {

void collect_fibres(const ValPtr& v,
                    std::vector<std::pair<CellPtr, CellPtr>>& addr,
                    std::vector<Fibre>& out) {
  if (v->is_set()) {
    out.push_back({addr, v});
    return;
  }
  for (std::size_t i = 0; i < v->obj_count(); ++i)
    for (std::size_t j = 0; j < v->obj_count(); ++j) {
      addr.emplace_back(v->objects[i], v->objects[j]);
      collect_fibres(v->hom(i, j), addr, out);
      addr.pop_back();
    }
}

}  // namespace

std::vector<Fibre> fibres(const ValPtr& v) {
  std::vector<Fibre> out;
  std::vector<std::pair<CellPtr, CellPtr>> addr;
  collect_fibres(v, addr, out);
  return out;
}

namespace {

ValPtr replace_rec(const ValPtr& v, const std::vector<ValPtr>& repl,
                   std::size_t& next) {
  if (v->is_set()) return repl[next++];
  std::vector<ValPtr> homs;
  for (std::size_t i = 0; i < v->homs.size(); ++i)
    homs.push_back(replace_rec(v->homs[i], repl, next));
  return Val::graph(v->level, v->objects, std::move(homs));
}

}  // namespace

ValPtr replace_fibres(const ValPtr& v, const std::vector<ValPtr>& repl) {
  std::size_t next = 0;
  auto out = replace_rec(v, repl, next);
  if (next != repl.size())
    throw std::runtime_error("replace_fibres: fibre count mismatch");
  return out;
}

std::vector<CellPtr> all_cells(const ValPtr& v) {
  std::vector<CellPtr> out;
  if (v->is_set()) {
    out = v->cells;
    return out;
  }
  for (const auto& o : v->objects) out.push_back(o);
  for (const auto& h : v->homs) {
    auto sub = all_cells(h);
    out.insert(out.end(), sub.begin(), sub.end());
  }
  return out;
}

std::string to_string(const ValPtr& v) {
  std::ostringstream out;
  if (v->is_set()) {
    out << '{';
    for (std::size_t i = 0; i < v->cells.size(); ++i) {
      if (i) out << ", ";
      out << to_string(v->cells[i]);
    }
    out << '}';
    if (!v->complete) out << "...";
    return out.str();
  }
  out << "graph(";
  for (std::size_t i = 0; i < v->obj_count(); ++i) {
    if (i) out << ' ';
    out << to_string(v->objects[i]);
  }
  out << "){";
  bool first = true;
  for (std::size_t i = 0; i < v->obj_count(); ++i)
    for (std::size_t j = 0; j < v->obj_count(); ++j) {
      if (is_initial(*v->hom(i, j))) continue;
      if (!first) out << "; ";
      first = false;
      out << to_string(v->objects[i]) << "->" << to_string(v->objects[j]) << ": "
          << to_string(v->hom(i, j));
    }
  out << '}';
  return out.str();
}

}  // namespace glb
