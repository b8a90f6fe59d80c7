#include "glb/presheaf.hpp"

#include <algorithm>
#include <stdexcept>

namespace glb {

void FinitePresheaf::validate() const {
  for (const auto& o : base->objects)
    if (!fibre.count(o)) throw std::runtime_error("presheaf: missing fibre " + o);
  for (const auto& f : base->arrows) {
    auto it = action.find(f.id);
    if (it == action.end())
      throw std::runtime_error("presheaf: missing action of " + f.id);
    const auto& tgt_fib = fibre.at(f.tgt);
    const auto& src_fib = fibre.at(f.src);
    if (it->second.size() != tgt_fib.size())
      throw std::runtime_error("presheaf: action of " + f.id + " not total");
    for (const auto& [x, y] : it->second) {
      if (std::find(tgt_fib.begin(), tgt_fib.end(), x) == tgt_fib.end())
        throw std::runtime_error("presheaf: action of " + f.id +
                                 " on unknown element " + x);
      if (std::find(src_fib.begin(), src_fib.end(), y) == src_fib.end())
        throw std::runtime_error("presheaf: action of " + f.id +
                                 " lands outside fibre: " + y);
    }
  }
  for (const auto& o : base->objects) {
    const auto& a = action.at(base->identity.at(o));
    for (const auto& x : fibre.at(o))
      if (a.at(x) != x)
        throw std::runtime_error("presheaf: identity action not identity at " + o);
  }
  for (const auto& g : base->arrows)
    for (const auto& f : base->arrows) {
      if (f.tgt != g.src) continue;
      const auto& gf = base->compose(g.id, f.id);
      for (const auto& x : fibre.at(g.tgt))
        if (action.at(gf).at(x) != action.at(f.id).at(action.at(g.id).at(x)))
          throw std::runtime_error("presheaf: functoriality fails at " + g.id +
                                   " . " + f.id);
    }
}

void GlobularSet::validate() const {
  if (static_cast<int>(cells.size()) != dim + 1)
    throw std::runtime_error("globular set: cell table has wrong dimension");
  for (int k = 1; k <= dim; ++k)
    for (const auto& x : cells[k]) {
      if (!src.count(x) || !tgt.count(x))
        throw std::runtime_error("globular set: missing boundary of " + x);
      const auto& lower = cells[k - 1];
      if (std::find(lower.begin(), lower.end(), src.at(x)) == lower.end() ||
          std::find(lower.begin(), lower.end(), tgt.at(x)) == lower.end())
        throw std::runtime_error("globular set: boundary of " + x +
                                 " has wrong dimension");
      if (k >= 2) {
        if (src.at(src.at(x)) != src.at(tgt.at(x)))
          throw std::runtime_error("globular identity ss=st fails at " + x);
        if (tgt.at(src.at(x)) != tgt.at(tgt.at(x)))
          throw std::runtime_error("globular identity ts=tt fails at " + x);
      }
    }
}

namespace {

// Iterated boundary down to a given dimension.
std::string boundary(const GlobularSet& g, const std::string& cell, int from_dim,
                     int to_dim, bool source) {
  std::string c = cell;
  for (int k = from_dim; k > to_dim; --k)
    c = source ? g.src.at(c) : g.tgt.at(c);
  return c;
}

ValPtr glob_to_value(const GlobularSet& g, int k_lo,
                     const std::vector<std::vector<std::string>>& cs,
                     const GlobularSet& root);

// Build the level-(dim - k_lo) value of the cells listed in `cs` (indexed from
// dimension k_lo upward), using root for boundaries.
ValPtr glob_to_value(const GlobularSet& root, int k_lo,
                     const std::vector<std::vector<std::string>>& cs) {
  int levels = static_cast<int>(cs.size()) - 1;
  if (levels == 0) {
    std::vector<CellPtr> atoms;
    for (const auto& c : cs[0]) atoms.push_back(Cell::atom(c));
    return Val::set(std::move(atoms));
  }
  std::vector<CellPtr> objects;
  for (const auto& c : cs[0]) objects.push_back(Cell::atom(c));
  std::size_t n = objects.size();
  std::vector<ValPtr> homs;
  homs.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::vector<std::string>> sub(cs.size() - 1);
      for (int k = 1; k < static_cast<int>(cs.size()); ++k)
        for (const auto& x : cs[k])
          if (boundary(root, x, k_lo + k, k_lo, true) == cs[0][i] &&
              boundary(root, x, k_lo + k, k_lo, false) == cs[0][j])
            sub[k - 1].push_back(x);
      homs.push_back(glob_to_value(root, k_lo + 1, sub));
    }
  return Val::graph(levels, std::move(objects), std::move(homs));
}

void value_to_glob(const ValPtr& v, int dim_offset, GlobularSet& out,
                   std::map<const Val*, std::vector<std::string>>& names,
                   int& counter,
                   const std::string& lo_src, const std::string& lo_tgt);

std::string fresh_name(int dim, int& counter) {
  return "c" + std::to_string(dim) + "_" + std::to_string(counter++);
}

void value_to_glob(const ValPtr& v, int dim_offset, GlobularSet& out,
                   int& counter, const std::string& lo_src,
                   const std::string& lo_tgt) {
  if (v->is_set()) {
    for (const auto& c : v->cells) {
      auto nm = fresh_name(dim_offset, counter);
      out.cells[dim_offset].push_back(nm);
      if (dim_offset > 0) {
        out.src[nm] = lo_src;
        out.tgt[nm] = lo_tgt;
      }
    }
    return;
  }
  std::vector<std::string> obj_names;
  for (std::size_t i = 0; i < v->obj_count(); ++i) {
    auto nm = fresh_name(dim_offset, counter);
    out.cells[dim_offset].push_back(nm);
    if (dim_offset > 0) {
      out.src[nm] = lo_src;
      out.tgt[nm] = lo_tgt;
    }
    obj_names.push_back(nm);
  }
  for (std::size_t i = 0; i < v->obj_count(); ++i)
    for (std::size_t j = 0; j < v->obj_count(); ++j)
      value_to_glob(v->hom(i, j), dim_offset + 1, out, counter, obj_names[i],
                    obj_names[j]);
}

}  // namespace

ValPtr GlobularSet::to_value() const {
  validate();
  return glob_to_value(*this, 0, cells);
}

GlobularSet GlobularSet::from_value(const ValPtr& v) {
  GlobularSet g;
  g.dim = v->level;
  g.cells.resize(g.dim + 1);
  int counter = 0;
  value_to_glob(v, 0, g, counter, "", "");
  g.validate();
  return g;
}

FinitePresheaf GlobularSet::to_presheaf(const FiniteCategory& globe) const {
  validate();
  FinitePresheaf p;
  p.base = &globe;
  auto dim_of = [&](const std::string& obj) {
    return static_cast<int>(obj.size()) - 1;  // "0" plus k pluses
  };
  for (const auto& o : globe.objects) {
    int k = dim_of(o);
    if (k > dim) throw std::runtime_error("globe category too large");
    p.fibre[o] = cells[k];
  }
  for (const auto& a : globe.arrows) {
    int j = dim_of(a.src), k = dim_of(a.tgt);
    std::map<std::string, std::string> act;
    if (j == k) {
      for (const auto& x : cells[k]) act[x] = x;  // identities only
    } else {
      // The two arrows j -> k are the iterated-image source/target inclusions;
      // source names start with 's', target names with 't' (under the image
      // wrappers).
      std::string core = a.id;
      while (core.size() > 3 && core.front() == '(')
        core = core.substr(1, core.find_last_of(')') - 1);
      bool is_src = core[0] == 's';
      for (const auto& x : cells[k]) act[x] = boundary(*this, x, k, j, is_src);
    }
    p.action[a.id] = std::move(act);
  }
  p.validate();
  return p;
}

GlobularSet GlobularSet::from_presheaf(const FinitePresheaf& p, int dim) {
  GlobularSet g;
  g.dim = dim;
  g.cells.resize(dim + 1);
  auto obj_name = [&](int k) {
    std::string s = "0";
    for (int i = 0; i < k; ++i) s += "+";
    return s;
  };
  for (int k = 0; k <= dim; ++k) g.cells[k] = p.fibre.at(obj_name(k));
  for (int k = 1; k <= dim; ++k) {
    // Source / target arrow from dimension k-1 into dimension k: the
    // (k-1)-fold image of s_/t_ on the object then at the bottom.
    std::string s_name = "s_" + obj_name(0), t_name = "t_" + obj_name(0);
    // At the iteration adjoining dimension k, the old top object had k-1
    // pluses relative to its own bottom; reconstruct the names used by
    // plus_construction.
    std::string base = obj_name(0);
    s_name = "s_" + base;
    t_name = "t_" + base;
    for (int w = 1; w < k; ++w) {
      s_name = "(" + s_name + ")+";
      t_name = "(" + t_name + ")+";
    }
    for (const auto& x : g.cells[k]) {
      g.src[x] = p.action.at(s_name).at(x);
      g.tgt[x] = p.action.at(t_name).at(x);
    }
  }
  g.validate();
  return g;
}

}  // namespace glb
