#include "glb/multitensor.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "glb/graph_ops.hpp"

namespace glb {

namespace {

// Flatten map for the product multitensor: prod_i prod_j X_ij -> prod_ij X_ij.
VMap prod_flatten(const std::vector<std::vector<ValPtr>>& rows) {
  std::vector<ValPtr> outer, flat;
  for (const auto& row : rows) {
    outer.push_back(product(row));
    flat.insert(flat.end(), row.begin(), row.end());
  }
  VMap m;
  m.dom = product(outer);
  m.cod = product(flat);
  auto flatten_cell = [](const CellPtr& c) {
    std::vector<CellPtr> parts;
    for (const auto& row : c->children)
      for (const auto& x : row->children) parts.push_back(x);
    return Cell::node("t", std::move(parts));
  };
  if (m.dom->is_set()) {
    for (const auto& c : m.dom->cells) m.cell_map.emplace(c, flatten_cell(c));
    return m;
  }
  for (const auto& o : m.dom->objects) {
    auto idx = m.cod->obj_index(flatten_cell(o));
    if (!idx) throw std::runtime_error("prod_flatten: missing image object");
    m.obj_map.push_back(*idx);
  }
  std::size_t n = m.dom->obj_count();
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      // Hom rows mirror the object tuple structure.
      std::vector<std::vector<ValPtr>> hom_rows;
      const auto& oP = m.dom->objects[p];
      const auto& oQ = m.dom->objects[q];
      for (std::size_t i = 0; i < rows.size(); ++i) {
        std::vector<ValPtr> hr;
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
          const auto& x = rows[i][j];
          auto pi = x->obj_index(oP->children[i]->children[j]);
          auto qi = x->obj_index(oQ->children[i]->children[j]);
          hr.push_back(x->hom(*pi, *qi));
        }
        hom_rows.push_back(std::move(hr));
      }
      m.hom_maps.push_back(prod_flatten(hom_rows));
    }
  return m;
}

}  // namespace

Multitensor prod_multitensor(int level) {
  Multitensor e;
  e.name = "prod";
  e.level = level;
  e.distributive = true;
  e.apply = [](const std::vector<ValPtr>& xs, const Budget&) {
    return product(xs);
  };
  e.apply_map = [](const std::vector<VMap>& fs, const Budget&) {
    return product_map(fs);
  };
  e.unit = [](const ValPtr& z, const Budget&) {
    VMap u;
    u.dom = z;
    u.cod = product({z});
    if (z->is_set()) {
      for (const auto& c : z->cells) u.cell_map.emplace(c, Cell::node("t", {c}));
      return u;
    }
    for (std::size_t i = 0; i < z->obj_count(); ++i) {
      auto idx = u.cod->obj_index(Cell::node("t", {z->objects[i]}));
      u.obj_map.push_back(*idx);
    }
    std::vector<VMap> homs;
    for (std::size_t p = 0; p < z->obj_count(); ++p)
      for (std::size_t q = 0; q < z->obj_count(); ++q) {
        Budget b;
        homs.push_back(prod_multitensor(z->level - 1).unit(z->hom(p, q), b));
      }
    u.hom_maps = std::move(homs);
    return u;
  };
  e.subst = [](const std::vector<std::vector<ValPtr>>& rows, const Budget&) {
    return prod_flatten(rows);
  };
  return e;
}

int SetOperad::arity_of(const std::string& op) const {
  for (const auto& [n, names] : ops)
    if (std::find(names.begin(), names.end(), op) != names.end()) return n;
  throw std::runtime_error("operad: unknown operation " + op);
}

void SetOperad::validate() const {
  if (arity_of(unit) != 1) throw std::runtime_error("operad: unit is not unary");
  for (const auto& [key, result] : subst) {
    const auto& [top, kids] = key;
    int k = arity_of(top);
    if (static_cast<int>(kids.size()) != k)
      throw std::runtime_error("operad: substitution shape mismatch at " + top);
    int total = 0;
    for (const auto& f : kids) total += arity_of(f);
    if (arity_of(result) != total)
      throw std::runtime_error("operad: substitution arity mismatch at " + top);
  }
  // Unit laws of the substitution table.
  for (const auto& [k, tops] : ops)
    for (const auto& top : tops) {
      std::vector<std::string> units(k, unit);
      if (k >= 0 && !subst.count({top, units}))
        throw std::runtime_error("operad: missing unit substitution at " + top);
      if (subst.at({top, units}) != top)
        throw std::runtime_error("operad: unit law fails at " + top);
      if (!subst.count({unit, {top}}) || subst.at({unit, {top}}) != top)
        throw std::runtime_error("operad: left unit law fails at " + top);
    }
}

Multitensor operad_multitensor(const SetOperad& o) {
  auto op = std::make_shared<SetOperad>(o);
  Multitensor e;
  e.name = "operad:" + o.name;
  e.level = 0;
  e.distributive = true;
  e.apply = [op](const std::vector<ValPtr>& xs, const Budget&) {
    for (const auto& x : xs)
      if (!x->is_set()) throw std::runtime_error("operad multitensor: level 0 only");
    auto it = op->ops.find(static_cast<int>(xs.size()));
    std::vector<CellPtr> cells;
    bool complete = true;
    if (it != op->ops.end()) {
      std::vector<std::size_t> sizes;
      for (const auto& x : xs) {
        sizes.push_back(x->cells.size());
        complete = complete && x->complete;
      }
      for (const auto& name : it->second) {
        std::vector<std::size_t> idx(xs.size(), 0);
        bool nonempty = true;
        for (auto s : sizes)
          if (s == 0) nonempty = false;
        if (!nonempty) continue;
        while (true) {
          std::vector<CellPtr> kids;
          for (std::size_t i = 0; i < xs.size(); ++i)
            kids.push_back(xs[i]->cells[idx[i]]);
          cells.push_back(Cell::node(name, std::move(kids)));
          std::size_t k = xs.size();
          bool done = k == 0;
          while (k > 0) {
            --k;
            if (++idx[k] < sizes[k]) break;
            idx[k] = 0;
            if (k == 0) done = true;
          }
          if (done) break;
        }
      }
    }
    return Val::set(std::move(cells), complete);
  };
  e.apply_map = [op, e](const std::vector<VMap>& fs, const Budget& b) {
    std::vector<ValPtr> doms, cods;
    for (const auto& f : fs) {
      doms.push_back(f.dom);
      cods.push_back(f.cod);
    }
    VMap m;
    m.dom = e.apply(doms, b);
    m.cod = e.apply(cods, b);
    for (const auto& c : m.dom->cells) {
      std::vector<CellPtr> kids;
      for (std::size_t i = 0; i < fs.size(); ++i)
        kids.push_back(fs[i].apply_cell(c->children[i]));
      m.cell_map.emplace(c, Cell::node(c->label, std::move(kids)));
    }
    return m;
  };
  e.unit = [op, e](const ValPtr& z, const Budget& b) {
    VMap u;
    u.dom = z;
    u.cod = e.apply({z}, b);
    for (const auto& c : z->cells)
      u.cell_map.emplace(c, Cell::node(op->unit, {c}));
    return u;
  };
  e.subst = [op, e](const std::vector<std::vector<ValPtr>>& rows,
                    const Budget& b) {
    std::vector<ValPtr> outer, flat;
    for (const auto& row : rows) {
      outer.push_back(e.apply(row, b));
      flat.insert(flat.end(), row.begin(), row.end());
    }
    VMap m;
    m.dom = e.apply(outer, b);
    m.cod = e.apply(flat, b);
    for (const auto& c : m.dom->cells) {
      std::vector<std::string> kid_ops;
      std::vector<CellPtr> leaves;
      for (const auto& kid : c->children) {
        kid_ops.push_back(kid->label);
        for (const auto& leaf : kid->children) leaves.push_back(leaf);
      }
      auto it = op->subst.find({c->label, kid_ops});
      if (it == op->subst.end())
        throw std::runtime_error("operad: substitution table not total at " +
                                 c->label);
      m.cell_map.emplace(c, Cell::node(it->second, std::move(leaves)));
    }
    return m;
  };
  return e;
}

Multitensor te_multitensor(
    const Multitensor& e, const BaseMonad& t,
    std::function<VMap(const std::vector<ValPtr>&, const Budget&)> tau) {
  Multitensor te;
  te.name = "T" + e.name;
  te.level = e.level;
  te.distributive = e.distributive;
  te.apply = [e, t](const std::vector<ValPtr>& xs, const Budget& b) {
    return t.apply(e.apply(xs, b), b);
  };
  te.apply_map = [e, t](const std::vector<VMap>& fs, const Budget& b) {
    return t.map(e.apply_map(fs, b), b);
  };
  te.unit = [e, t](const ValPtr& z, const Budget& b) {
    // eta then T(u)
    auto eta = t.unit(z, b);
    auto tu = t.map(e.unit(z, b), b);
    return compose(tu, eta);
  };
  te.subst = [e, t, tau](const std::vector<std::vector<ValPtr>>& rows,
                         const Budget& b) {
    // T E_i (T E_j X_ij) --T tau--> T T E_i E_j X --mu--> T E_i E_j --T sigma-->
    std::vector<ValPtr> inner;  // E_j applied per row, then T
    std::vector<ValPtr> te_rows;
    for (const auto& row : rows) {
      inner.push_back(e.apply(row, b));
      te_rows.push_back(t.apply(e.apply(row, b), b));
    }
    auto tau_c = tau(inner, b);  // E_i T(E_j X) -> T E_i E_j X
    auto t_tau = t.map(tau_c, b);
    auto mu = t.mult(e.apply(inner, b), b);
    auto t_sigma = t.map(e.subst(rows, b), b);
    return compose(t_sigma, compose(mu, t_tau));
  };
  return te;
}

Multitensor et_multitensor(
    const Multitensor& e, const BaseMonad& t,
    std::function<VMap(const std::vector<ValPtr>&, const Budget&)> tau) {
  Multitensor et;
  et.name = e.name + "T";
  et.level = e.level;
  et.distributive = e.distributive;
  et.apply = [e, t](const std::vector<ValPtr>& xs, const Budget& b) {
    std::vector<ValPtr> txs;
    for (const auto& x : xs) txs.push_back(t.apply(x, b));
    return e.apply(txs, b);
  };
  et.apply_map = [e, t](const std::vector<VMap>& fs, const Budget& b) {
    std::vector<VMap> tfs;
    for (const auto& f : fs) tfs.push_back(t.map(f, b));
    return e.apply_map(tfs, b);
  };
  et.unit = [e, t](const ValPtr& z, const Budget& b) {
    auto eta = t.unit(z, b);
    auto u = e.unit(t.apply(z, b), b);
    return compose(u, eta);
  };
  et.subst = [e, t, tau](const std::vector<std::vector<ValPtr>>& rows,
                         const Budget& b) {
    // E_i T (E_j T X) --E tau--> E_i E_j T T X --E E mu--> E_i E_j T X --sigma-->
    std::vector<std::vector<ValPtr>> t_rows;    // T X_ij per row
    std::vector<std::vector<ValPtr>> tt_rows;   // T T X_ij per row
    for (const auto& row : rows) {
      std::vector<ValPtr> tr, ttr;
      for (const auto& x : row) {
        tr.push_back(t.apply(x, b));
        ttr.push_back(t.apply(t.apply(x, b), b));
      }
      t_rows.push_back(std::move(tr));
      tt_rows.push_back(std::move(ttr));
    }
    std::vector<VMap> outer_slots;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      // T(E_j T X_ij) --tau--> E_j (T T X_ij) --E_j mu--> E_j T X_ij
      auto tau_c = tau(t_rows[i], b);
      std::vector<VMap> mus;
      for (const auto& x : rows[i]) mus.push_back(t.mult(x, b));
      auto emu = e.apply_map(mus, b);
      outer_slots.push_back(compose(emu, tau_c));
    }
    auto e_outer = e.apply_map(outer_slots, b);
    auto sigma = e.subst(t_rows, b);
    return compose(sigma, e_outer);
  };
  return et;
}

ComposedApplication compose_multitensors(const Multitensor& e,
                                         const Multitensor& f,
                                         const std::vector<ValPtr>& xs,
                                         const Budget& b) {
  int n = static_cast<int>(xs.size());
  // Enumerate partitions (n_1 .. n_k), parts >= 0, sum n, k <= bound,
  // ordered by (k, lex).
  std::vector<std::vector<int>> parts;
  for (int k = 0; k <= b.bound; ++k) {
    std::vector<int> cur(k, 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
      if (pos == k) {
        if (left == 0) parts.push_back(cur);
        return;
      }
      for (int v = 0; v <= left; ++v) {
        cur[pos] = v;
        rec(pos + 1, left - v);
      }
    };
    if (k == 0) {
      if (n == 0) parts.push_back({});
    } else {
      rec(0, n);
    }
  }
  std::vector<ValPtr> summands;
  for (const auto& p : parts) {
    std::vector<ValPtr> fvals;
    int at = 0;
    for (int ni : p) {
      std::vector<ValPtr> slice(xs.begin() + at, xs.begin() + at + ni);
      at += ni;
      fvals.push_back(f.apply(slice, b));
    }
    summands.push_back(e.apply(fvals, b));
  }
  std::vector<VMap> inj;
  ComposedApplication out;
  out.value = coproduct(summands, &inj);
  for (std::size_t i = 0; i < parts.size(); ++i)
    out.injections.emplace_back(parts[i], inj[i]);
  // The tail of partitions with empty parts is infinite; record truncation
  // honestly unless the nullary summands vanish.
  bool nullary_trivial = is_initial(*f.apply({}, b));
  if (!nullary_trivial) {
    auto v = std::make_shared<Val>(*out.value);
    v->complete = false;
    out.value = v;
  }
  return out;
}

namespace {

bool identity_on(const VMap& m, const ValPtr& x) {
  return maps_agree(m, VMap::identity(x));
}

std::string describe_tuple(const std::vector<ValPtr>& xs) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out << ", ";
    out << to_string(xs[i]);
  }
  out << ")";
  return out.str();
}

// All tuples of length n over the samples (with repetition).
void each_tuple(const std::vector<ValPtr>& samples, int n,
                const std::function<void(const std::vector<ValPtr>&)>& fn) {
  std::vector<ValPtr> cur;
  std::function<void()> rec = [&]() {
    if (static_cast<int>(cur.size()) == n) {
      fn(cur);
      return;
    }
    for (const auto& s : samples) {
      cur.push_back(s);
      rec();
      cur.pop_back();
    }
  };
  rec();
}

}  // namespace

CheckReport check_multitensor_axioms(const Multitensor& e,
                                     const std::vector<ValPtr>& samples,
                                     int max_arity, const Budget& b) {
  CheckReport r;
  for (int n = 0; n <= max_arity; ++n) {
    each_tuple(samples, n, [&](const std::vector<ValPtr>& zs) {
      auto ez = e.apply(zs, b);
      // sigma . u_{E Z} = id
      {
        auto u = e.unit(ez, b);
        auto sigma = e.subst({zs}, b);
        if (!identity_on(compose(sigma, u), ez))
          r.fail("unit/subst triangle (outer) fails at " + describe_tuple(zs));
      }
      // sigma . E(u_i) = id
      {
        std::vector<VMap> us;
        for (const auto& z : zs) us.push_back(e.unit(z, b));
        std::vector<std::vector<ValPtr>> rows;
        for (const auto& z : zs) rows.push_back({z});
        auto eu = e.apply_map(us, b);
        auto sigma = e.subst(rows, b);
        if (!identity_on(compose(sigma, eu), ez))
          r.fail("unit/subst triangle (inner) fails at " + describe_tuple(zs));
      }
    });
  }
  // Associativity over small triple nestings drawn from the samples.
  std::vector<std::vector<std::vector<std::vector<ValPtr>>>> shapes;
  // Build nestings with outer arity <= 2, middle arities <= 2, inner <= 2.
  for (int outer = 0; outer <= std::min(2, max_arity); ++outer) {
    // a nesting is: outer-many rows; each row: middle-many cells; each cell:
    // inner-many sample values. Use the first sample cyclically to bound the
    // search space.
    std::function<void(std::vector<std::vector<std::vector<ValPtr>>>&, int)>
        rec = [&](std::vector<std::vector<std::vector<ValPtr>>>& acc, int row) {
          if (row == outer) {
            shapes.push_back(acc);
            return;
          }
          for (int mid = 0; mid <= 2; ++mid) {
            std::vector<std::vector<ValPtr>> rowv;
            for (int j = 0; j < mid; ++j) {
              std::vector<ValPtr> cell;
              int inner = 1 + ((row + j) % 2);
              for (int k = 0; k < inner; ++k)
                cell.push_back(samples[(row + j + k) % samples.size()]);
              rowv.push_back(std::move(cell));
            }
            acc.push_back(rowv);
            rec(acc, row + 1);
            acc.pop_back();
          }
        };
    std::vector<std::vector<std::vector<ValPtr>>> acc;
    if (!samples.empty()) rec(acc, 0);
  }
  for (const auto& nest : shapes) {
    // Route A: E_i sigma (inner+middle per row), then sigma.
    std::vector<VMap> inner_sigmas;
    std::vector<std::vector<ValPtr>> flat_rows;  // per outer row: concat inner
    std::vector<std::vector<ValPtr>> mid_values; // per outer row: E_k values
    for (const auto& row : nest) {
      inner_sigmas.push_back(e.subst(row, b));
      std::vector<ValPtr> flat;
      std::vector<ValPtr> mids;
      for (const auto& cell : row) {
        flat.insert(flat.end(), cell.begin(), cell.end());
        mids.push_back(e.apply(cell, b));
      }
      flat_rows.push_back(std::move(flat));
      mid_values.push_back(std::move(mids));
    }
    auto routeA = compose(e.subst(flat_rows, b), e.apply_map(inner_sigmas, b));
    // Route B: sigma on outer two layers (leaves = inner values), then sigma.
    std::vector<std::vector<ValPtr>> all_rows;  // concat of rows of mid values
    std::vector<ValPtr> mid_flat;
    for (const auto& mids : mid_values)
      mid_flat.insert(mid_flat.end(), mids.begin(), mids.end());
    std::vector<std::vector<ValPtr>> leaf_rows;
    for (const auto& row : nest)
      for (const auto& cell : row) leaf_rows.push_back(cell);
    auto routeB = compose(e.subst(leaf_rows, b), e.subst(mid_values, b));
    if (!maps_agree(routeA, routeB)) {
      std::ostringstream what;
      what << "substitution associativity fails at nesting of depth 3 (outer "
           << nest.size() << ")";
      r.fail(what.str());
    }
  }
  return r;
}

CheckReport check_distributivity(const Multitensor& e,
                                 const std::vector<ValPtr>& samples,
                                 int max_arity, const Budget& b) {
  CheckReport r;
  if (samples.size() < 2) return r;
  for (int n = 1; n <= max_arity; ++n) {
    for (int slot = 0; slot < n; ++slot) {
      std::vector<ValPtr> tuple;
      for (int i = 0; i < n; ++i) tuple.push_back(samples[i % samples.size()]);
      const ValPtr a = samples[0];
      const ValPtr c = samples[1 % samples.size()];
      std::vector<VMap> inj;
      auto sum = coproduct({a, c}, &inj);
      // Comparison: E(..,A,..) + E(..,C,..) -> E(.., A+C, ..)
      auto with = [&](const VMap& in) {
        std::vector<VMap> fs;
        for (int i = 0; i < n; ++i) {
          if (i == slot) {
            fs.push_back(in);
          } else {
            fs.push_back(VMap::identity(tuple[i]));
          }
        }
        return e.apply_map(fs, b);
      };
      auto m1 = with(inj[0]);
      auto m2 = with(inj[1]);
      // Joint bijectivity of the two injections onto the coproduct value.
      auto tup_sum = tuple;
      tup_sum[slot] = sum;
      auto target = e.apply(tup_sum, b);
      std::size_t total = 0, expect = 0;
      std::set<std::string> seen;
      auto count_map = [&](const VMap& m) {
        total += all_cells(m.dom).size();
        std::function<void(const VMap&)> collect = [&](const VMap& mm) {
          if (mm.dom->is_set()) {
            for (const auto& [x, y] : mm.cell_map) seen.insert(to_string(y));
            return;
          }
          for (std::size_t i = 0; i < mm.dom->obj_count(); ++i)
            seen.insert(to_string(mm.cod->objects[mm.obj_map[i]]));
          for (const auto& h : mm.hom_maps) collect(h);
        };
        collect(m);
      };
      count_map(m1);
      count_map(m2);
      expect = all_cells(target).size();
      if (seen.size() != expect || total != expect)
        r.fail("distributivity comparison not bijective at arity " +
               std::to_string(n) + " slot " + std::to_string(slot));
    }
  }
  return r;
}

CheckReport check_ecategory_axioms(const ECategory& x, int max_len,
                                   const Budget& b) {
  CheckReport r;
  const auto& g = x.graph;
  std::size_t nobj = g->obj_count();
  // Unit triangles at singleton sequences.
  for (std::size_t i = 0; i < nobj; ++i)
    for (std::size_t j = 0; j < nobj; ++j) {
      auto hom = g->hom(i, j);
      if (is_initial(*hom)) continue;
      auto u = x.tensor.unit(hom, b);
      auto k = x.kappa({i, j}, b);
      if (!identity_on(compose(k, u), hom))
        r.fail("enriched unit law fails at hom (" + std::to_string(i) + "," +
               std::to_string(j) + ")");
    }
  // Substitution squares: outer sequences with a partition into consecutive
  // blocks, total length <= max_len.
  std::vector<std::vector<std::size_t>> seqs;
  std::function<void(std::vector<std::size_t>&)> grow =
      [&](std::vector<std::size_t>& cur) {
        if (cur.size() >= 2) seqs.push_back(cur);
        if (static_cast<int>(cur.size()) > max_len) return;
        for (std::size_t next = 0; next < nobj; ++next) {
          if (!cur.empty() && is_initial(*g->hom(cur.back(), next))) continue;
          cur.push_back(next);
          if (static_cast<int>(cur.size()) <= max_len + 1) grow(cur);
          cur.pop_back();
        }
      };
  for (std::size_t start = 0; start < nobj; ++start) {
    std::vector<std::size_t> cur{start};
    grow(cur);
  }
  for (const auto& seq : seqs) {
    std::size_t edges = seq.size() - 1;
    // partitions of the edge list into consecutive nonempty blocks
    std::vector<std::vector<std::size_t>> blocks;  // block sizes
    std::function<void(std::size_t, std::vector<std::size_t>&)> part =
        [&](std::size_t left, std::vector<std::size_t>& acc) {
          if (left == 0) {
            blocks.push_back(acc);
            return;
          }
          for (std::size_t take = 1; take <= left; ++take) {
            acc.push_back(take);
            part(left - take, acc);
            acc.pop_back();
          }
        };
    std::vector<std::size_t> acc;
    part(edges, acc);
    for (const auto& bs : blocks) {
      if (bs.size() == edges) continue;  // all-singleton partition is trivial
      // rows of hom values per block
      std::vector<std::vector<ValPtr>> rows;
      std::vector<std::vector<std::size_t>> row_seqs;
      std::size_t at = 0;
      for (auto take : bs) {
        std::vector<ValPtr> row;
        std::vector<std::size_t> rs;
        rs.push_back(seq[at]);
        for (std::size_t e2 = 0; e2 < take; ++e2) {
          row.push_back(g->hom(seq[at + e2], seq[at + e2 + 1]));
          rs.push_back(seq[at + e2 + 1]);
        }
        at += take;
        rows.push_back(std::move(row));
        row_seqs.push_back(std::move(rs));
      }
      // Route 1: sigma then kappa at the full sequence.
      auto route1 = compose(x.kappa(seq, b), x.tensor.subst(rows, b));
      // Route 2: E_i kappa_rows then kappa at the endpoints sequence.
      std::vector<VMap> ks;
      for (const auto& rs : row_seqs) ks.push_back(x.kappa(rs, b));
      std::vector<std::size_t> outer_seq;
      outer_seq.push_back(seq.front());
      for (const auto& rs : row_seqs) outer_seq.push_back(rs.back());
      auto route2 =
          compose(x.kappa(outer_seq, b), x.tensor.apply_map(ks, b));
      if (!maps_agree(route1, route2))
        r.fail("enriched substitution square fails on a sequence of length " +
               std::to_string(edges));
    }
  }
  return r;
}

CheckReport check_lax_monoidal_axioms(const LaxMonoidalFunctor& f,
                                      const std::vector<ValPtr>& samples,
                                      int max_arity, const Budget& b) {
  CheckReport r;
  for (const auto& z : samples) {
    // unit coherence: psi_Z . u^F_{HZ} = H(u^E_Z)
    auto hz = f.h.apply(z, b);
    auto lhs = compose(f.psi({z}, b), f.cod.unit(hz, b));
    auto rhs = f.h.map(f.dom.unit(z, b), b);
    if (!maps_agree(lhs, rhs)) r.fail("lax unit coherence fails at " + to_string(z));
  }
  // substitution coherence on doubly nested tuples
  std::vector<std::vector<std::vector<ValPtr>>> nests;
  for (int outer = 1; outer <= std::min(2, max_arity); ++outer) {
    std::vector<std::vector<ValPtr>> nest;
    for (int i = 0; i < outer; ++i) {
      std::vector<ValPtr> row;
      for (int j = 0; j <= i && j < static_cast<int>(samples.size()); ++j)
        row.push_back(samples[j]);
      nest.push_back(row);
    }
    nests.push_back(nest);
  }
  for (const auto& nest : nests) {
    std::vector<ValPtr> flat;
    std::vector<std::vector<ValPtr>> h_nest;
    for (const auto& row : nest) {
      flat.insert(flat.end(), row.begin(), row.end());
      std::vector<ValPtr> hrow;
      for (const auto& zz : row) hrow.push_back(f.h.apply(zz, b));
      h_nest.push_back(hrow);
    }
    // Route 1: F_i psi_row then psi at E-values then H sigma.
    std::vector<VMap> inner;
    std::vector<ValPtr> e_rows;
    for (const auto& row : nest) {
      inner.push_back(f.psi(row, b));
      e_rows.push_back(f.dom.apply(row, b));
    }
    auto route1 = compose(f.h.map(f.dom.subst(nest, b), b),
                          compose(f.psi(e_rows, b), f.cod.apply_map(inner, b)));
    // Route 2: sigma^F at H-values then psi at the flat tuple.
    auto route2 = compose(f.psi(flat, b), f.cod.subst(h_nest, b));
    if (!maps_agree(route1, route2))
      r.fail("lax substitution coherence fails on a nesting");
  }
  return r;
}

}  // namespace glb
