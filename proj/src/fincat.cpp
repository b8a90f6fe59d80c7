#include "glb/fincat.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace glb {

std::optional<std::size_t> FiniteCategory::arrow_index(
    const std::string& id) const {
  for (std::size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].id == id) return i;
  return std::nullopt;
}

const FiniteCategory::Arrow& FiniteCategory::arrow(const std::string& id) const {
  auto i = arrow_index(id);
  if (!i) throw std::runtime_error("unknown arrow: " + id);
  return arrows[*i];
}

std::string FiniteCategory::compose(const std::string& g,
                                    const std::string& f) const {
  auto it = comp.find({g, f});
  if (it == comp.end())
    throw std::runtime_error("composite not in table: " + g + " . " + f);
  return it->second;
}

void FiniteCategory::validate() const {
  for (const auto& o : objects) {
    auto it = identity.find(o);
    if (it == identity.end())
      throw std::runtime_error("missing identity on object " + o);
    const auto& a = arrow(it->second);
    if (a.src != o || a.tgt != o)
      throw std::runtime_error("identity of " + o + " is not an endo-arrow");
  }
  for (const auto& f : arrows) {
    if (std::find(objects.begin(), objects.end(), f.src) == objects.end() ||
        std::find(objects.begin(), objects.end(), f.tgt) == objects.end())
      throw std::runtime_error("arrow " + f.id + " has unknown endpoint");
  }
  for (const auto& g : arrows)
    for (const auto& f : arrows) {
      if (f.tgt != g.src) continue;
      auto it = comp.find({g.id, f.id});
      if (it == comp.end())
        throw std::runtime_error("composition table not total at " + g.id +
                                 " . " + f.id);
      const auto& gf = arrow(it->second);
      if (gf.src != f.src || gf.tgt != g.tgt)
        throw std::runtime_error("composite " + g.id + " . " + f.id +
                                 " has wrong endpoints");
    }
  for (const auto& f : arrows) {
    if (compose(f.id, identity.at(f.src)) != f.id ||
        compose(identity.at(f.tgt), f.id) != f.id)
      throw std::runtime_error("unit law fails at " + f.id);
  }
  for (const auto& h : arrows)
    for (const auto& g : arrows) {
      if (g.tgt != h.src) continue;
      for (const auto& f : arrows) {
        if (f.tgt != g.src) continue;
        if (compose(h.id, compose(g.id, f.id)) !=
            compose(compose(h.id, g.id), f.id))
          throw std::runtime_error("associativity fails at " + h.id + "," +
                                   g.id + "," + f.id);
      }
    }
}

ValPtr FiniteCategory::underlying_graph() const {
  std::vector<CellPtr> objs;
  for (const auto& o : objects) objs.push_back(Cell::atom(o));
  std::size_t n = objects.size();
  std::vector<ValPtr> homs(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<CellPtr> cs;
      for (const auto& a : arrows)
        if (a.src == objects[i] && a.tgt == objects[j])
          cs.push_back(Cell::atom(a.id));
      homs[i * n + j] = Val::set(std::move(cs));
    }
  return Val::graph(1, std::move(objs), std::move(homs));
}

void CatFunctor::validate() const {
  for (const auto& o : dom->objects)
    if (!on_objects.count(o)) throw std::runtime_error("functor: missing object");
  for (const auto& a : dom->arrows) {
    auto it = on_arrows.find(a.id);
    if (it == on_arrows.end()) throw std::runtime_error("functor: missing arrow");
    const auto& fa = cod->arrow(it->second);
    if (fa.src != on_objects.at(a.src) || fa.tgt != on_objects.at(a.tgt))
      throw std::runtime_error("functor: endpoints not respected at " + a.id);
  }
  for (const auto& o : dom->objects)
    if (on_arrows.at(dom->identity.at(o)) != cod->identity.at(on_objects.at(o)))
      throw std::runtime_error("functor: identities not preserved");
  for (const auto& g : dom->arrows)
    for (const auto& f : dom->arrows) {
      if (f.tgt != g.src) continue;
      if (on_arrows.at(dom->compose(g.id, f.id)) !=
          cod->compose(on_arrows.at(g.id), on_arrows.at(f.id)))
        throw std::runtime_error("functor: composition not preserved");
    }
}

FiniteCategory product_category(const FiniteCategory& a,
                                const FiniteCategory& b) {
  FiniteCategory p;
  p.name = "(" + a.name + "x" + b.name + ")";
  auto po = [](const std::string& x, const std::string& y) {
    return "(" + x + "," + y + ")";
  };
  for (const auto& x : a.objects)
    for (const auto& y : b.objects) p.objects.push_back(po(x, y));
  for (const auto& f : a.arrows)
    for (const auto& g : b.arrows)
      p.arrows.push_back({po(f.id, g.id), po(f.src, g.src), po(f.tgt, g.tgt)});
  for (const auto& x : a.objects)
    for (const auto& y : b.objects)
      p.identity[po(x, y)] = po(a.identity.at(x), b.identity.at(y));
  for (const auto& f2 : a.arrows)
    for (const auto& g2 : b.arrows)
      for (const auto& f1 : a.arrows) {
        if (f1.tgt != f2.src) continue;
        for (const auto& g1 : b.arrows) {
          if (g1.tgt != g2.src) continue;
          p.comp[{po(f2.id, g2.id), po(f1.id, g1.id)}] =
              po(a.compose(f2.id, f1.id), b.compose(g2.id, g1.id));
        }
      }
  p.validate();
  return p;
}

namespace {

bool cat_iso_backtrack(const FiniteCategory& a, const FiniteCategory& b,
                       std::map<std::string, std::string>& objm,
                       std::map<std::string, std::string>& arrm,
                       std::size_t next_arrow) {
  if (next_arrow == a.arrows.size()) {
    // All arrows assigned; verify composition and identities.
    for (const auto& o : a.objects)
      if (arrm.at(a.identity.at(o)) != b.identity.at(objm.at(o))) return false;
    for (const auto& g : a.arrows)
      for (const auto& f : a.arrows) {
        if (f.tgt != g.src) continue;
        if (arrm.at(a.compose(g.id, f.id)) !=
            b.compose(arrm.at(g.id), arrm.at(f.id)))
          return false;
      }
    return true;
  }
  const auto& f = a.arrows[next_arrow];
  for (const auto& bf : b.arrows) {
    if (bf.src != objm.at(f.src) || bf.tgt != objm.at(f.tgt)) continue;
    bool taken = false;
    for (const auto& [k, v] : arrm)
      if (v == bf.id) taken = true;
    if (taken) continue;
    arrm[f.id] = bf.id;
    if (cat_iso_backtrack(a, b, objm, arrm, next_arrow + 1)) return true;
    arrm.erase(f.id);
  }
  return false;
}

bool cat_iso_objects(const FiniteCategory& a, const FiniteCategory& b,
                     std::map<std::string, std::string>& objm,
                     std::vector<bool>& used, std::size_t next) {
  if (next == a.objects.size()) {
    std::map<std::string, std::string> arrm;
    return cat_iso_backtrack(a, b, objm, arrm, 0);
  }
  for (std::size_t i = 0; i < b.objects.size(); ++i) {
    if (used[i]) continue;
    objm[a.objects[next]] = b.objects[i];
    used[i] = true;
    if (cat_iso_objects(a, b, objm, used, next + 1)) return true;
    used[i] = false;
    objm.erase(a.objects[next]);
  }
  return false;
}

}  // namespace

bool categories_isomorphic(const FiniteCategory& a, const FiniteCategory& b) {
  if (a.objects.size() != b.objects.size() || a.arrows.size() != b.arrows.size())
    return false;
  std::map<std::string, std::string> objm;
  std::vector<bool> used(b.objects.size(), false);
  return cat_iso_objects(a, b, objm, used, 0);
}

FiniteCategory plus_construction(const FiniteCategory& c) {
  FiniteCategory p;
  p.name = c.name + "+";
  p.objects.push_back("0");
  auto plus = [](const std::string& x) { return x + "+"; };
  // Arrow images are wrapped so they cannot collide with the new s_/t_ names.
  auto plus_arr = [](const std::string& x) { return "(" + x + ")+"; };
  for (const auto& o : c.objects) p.objects.push_back(plus(o));

  p.arrows.push_back({"id_0", "0", "0"});
  p.identity["0"] = "id_0";
  for (const auto& o : c.objects) {
    p.arrows.push_back({"s_" + o, "0", plus(o)});
    p.arrows.push_back({"t_" + o, "0", plus(o)});
  }
  for (const auto& f : c.arrows)
    p.arrows.push_back({plus_arr(f.id), plus(f.src), plus(f.tgt)});
  for (const auto& o : c.objects)
    p.identity[plus(o)] = plus_arr(c.identity.at(o));

  // Composition: old composites, the absorbing equations on s/t, and units.
  for (const auto& g : c.arrows)
    for (const auto& f : c.arrows)
      if (f.tgt == g.src)
        p.comp[{plus_arr(g.id), plus_arr(f.id)}] = plus_arr(c.compose(g.id, f.id));
  for (const auto& f : c.arrows) {
    p.comp[{plus_arr(f.id), "s_" + f.src}] = "s_" + f.tgt;
    p.comp[{plus_arr(f.id), "t_" + f.src}] = "t_" + f.tgt;
  }
  for (const auto& o : c.objects) {
    p.comp[{"s_" + o, "id_0"}] = "s_" + o;
    p.comp[{"t_" + o, "id_0"}] = "t_" + o;
  }
  p.comp[{"id_0", "id_0"}] = "id_0";
  p.validate();
  return p;
}

FiniteCategory globe_category(int n) {
  FiniteCategory c;
  c.name = "G<=-1";
  for (int k = 0; k <= n; ++k) {
    c = plus_construction(c);
    c.name = "G<=" + std::to_string(k);
  }
  return c;
}

}  // namespace glb
