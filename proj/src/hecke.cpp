#include "qhecke/hecke.hpp"

#include <algorithm>
#include <sstream>

#include "qhecke/errors.hpp"

namespace qhecke {

std::optional<int> CombModule::apply(int i, int b) const {
  const Outcome& o = out(i, b);
  switch (o.kind) {
    case Kind::Fix: return b;
    case Kind::Kill: return std::nullopt;
    case Kind::Move: return o.target;
  }
  return std::nullopt;
}

std::optional<int> CombModule::apply_word(const std::vector<int>& gens, int b) const {
  std::optional<int> cur = b;
  for (auto it = gens.rbegin(); it != gens.rend(); ++it) {
    if (!cur) return std::nullopt;
    cur = apply(*it, *cur);
  }
  return cur;
}

int CombModule::index_of(const std::string& label) const {
  auto it = index.find(label);
  if (it == index.end())
    throw domain_error("CombModule: unknown basis label '" + label + "'");
  return it->second;
}

CombModule make_module(int n, std::vector<std::string> basis_labels) {
  CombModule m;
  m.n = n;
  m.basis = std::move(basis_labels);
  m.action.assign(std::max(0, n - 1),
                  std::vector<CombModule::Outcome>(m.basis.size()));
  for (std::size_t i = 0; i < m.basis.size(); ++i)
    if (!m.index.emplace(m.basis[i], static_cast<int>(i)).second)
      throw domain_error("make_module: duplicate basis label " + m.basis[i]);
  return m;
}

std::string perm_label(const Perm& s) { return to_digits(s); }
std::string filling_label(const Filling& t) { return to_string(t); }

CombModule interval_module(const Perm& lo, const Perm& hi) {
  WeakInterval iv = interval(lo, hi);
  std::vector<std::string> labels;
  for (const Perm& g : iv.elements) labels.push_back(perm_label(g));
  CombModule m = make_module(lo.n(), std::move(labels));
  for (std::size_t b = 0; b < iv.elements.size(); ++b) {
    const Perm& g = iv.elements[b];
    std::set<int> des = des_L(g);
    for (int i = 1; i <= m.n - 1; ++i) {
      if (des.count(i)) {
        m.action[i - 1][b] = {CombModule::Kind::Fix, -1};
        continue;
      }
      Perm up = left_s(i, g);
      auto it = m.index.find(perm_label(up));
      if (it != m.index.end() && iv.contains(up))
        m.action[i - 1][b] = {CombModule::Kind::Move, it->second};
      else
        m.action[i - 1][b] = {CombModule::Kind::Kill, -1};
    }
  }
  return m;
}

namespace {

Filling swap_entries(const Filling& t, int i) {
  Filling r = t;
  for (auto& row : r.rows)
    for (int& v : row) {
      if (v == i)
        v = i + 1;
      else if (v == i + 1)
        v = i;
    }
  return r;
}

}  // namespace

CombModule module_V(const Composition& a) {
  std::vector<Filling> basis = enumerate(Family::SIT, a);
  std::vector<std::string> labels;
  for (const Filling& t : basis) labels.push_back(filling_label(t));
  CombModule m = make_module(a.size(), std::move(labels));
  for (std::size_t b = 0; b < basis.size(); ++b) {
    const Filling& t = basis[b];
    for (int i = 1; i <= m.n - 1; ++i) {
      Cell ci = t.find_entry(i), cj = t.find_entry(i + 1);
      if (ci.row >= cj.row) {
        m.action[i - 1][b] = {CombModule::Kind::Fix, -1};
      } else if (ci.col == 1 && cj.col == 1) {
        m.action[i - 1][b] = {CombModule::Kind::Kill, -1};
      } else {
        m.action[i - 1][b] = {CombModule::Kind::Move,
                              m.index_of(filling_label(swap_entries(t, i)))};
      }
    }
  }
  return m;
}

CombModule module_X(const Composition& a) {
  std::vector<Filling> basis = enumerate(Family::SET, a);
  std::vector<std::string> labels;
  for (const Filling& t : basis) labels.push_back(filling_label(t));
  CombModule m = make_module(a.size(), std::move(labels));
  for (std::size_t b = 0; b < basis.size(); ++b) {
    const Filling& t = basis[b];
    for (int i = 1; i <= m.n - 1; ++i) {
      Cell ci = t.find_entry(i), cj = t.find_entry(i + 1);
      if (ci.col < cj.col) {
        m.action[i - 1][b] = {CombModule::Kind::Fix, -1};
      } else if (ci.col == cj.col) {
        m.action[i - 1][b] = {CombModule::Kind::Kill, -1};
      } else {
        m.action[i - 1][b] = {CombModule::Kind::Move,
                              m.index_of(filling_label(swap_entries(t, i)))};
      }
    }
  }
  return m;
}

bool verify_relations(const CombModule& m) {
  for (int b = 0; b < m.dim(); ++b) {
    for (int i = 1; i <= m.n - 1; ++i) {
      if (m.apply_word({i, i}, b) != m.apply_word({i}, b)) return false;
      if (i + 1 <= m.n - 1 &&
          m.apply_word({i, i + 1, i}, b) != m.apply_word({i + 1, i, i + 1}, b))
        return false;
      for (int j = i + 2; j <= m.n - 1; ++j)
        if (m.apply_word({i, j}, b) != m.apply_word({j, i}, b)) return false;
    }
  }
  return true;
}

bool is_basis_submodule(const CombModule& m, const std::vector<int>& s) {
  std::vector<bool> in(m.dim(), false);
  for (int b : s) in[b] = true;
  for (int b : s)
    for (int i = 1; i <= m.n - 1; ++i) {
      std::optional<int> img = m.apply(i, b);
      if (img && !in[*img]) return false;
    }
  return true;
}

CombModule quotient(const CombModule& m, const std::vector<int>& s) {
  std::vector<bool> killed(m.dim(), false);
  for (int b : s) killed[b] = true;
  std::vector<std::string> labels;
  std::vector<int> old_of_new;
  for (int b = 0; b < m.dim(); ++b)
    if (!killed[b]) {
      labels.push_back(m.basis[b]);
      old_of_new.push_back(b);
    }
  std::vector<int> new_of_old(m.dim(), -1);
  for (std::size_t i = 0; i < old_of_new.size(); ++i)
    new_of_old[old_of_new[i]] = static_cast<int>(i);

  CombModule q = make_module(m.n, std::move(labels));
  for (std::size_t nb = 0; nb < old_of_new.size(); ++nb) {
    int b = old_of_new[nb];
    for (int i = 1; i <= m.n - 1; ++i) {
      const CombModule::Outcome& o = m.out(i, b);
      if (o.kind == CombModule::Kind::Move) {
        if (killed[o.target])
          q.action[i - 1][nb] = {CombModule::Kind::Kill, -1};
        else
          q.action[i - 1][nb] = {CombModule::Kind::Move, new_of_old[o.target]};
      } else {
        q.action[i - 1][nb] = o;
      }
    }
  }
  return q;
}

QSymElem characteristic(const CombModule& m, const std::vector<int>& s,
                        const std::vector<int>& s_prime) {
  if (!is_basis_submodule(m, s) || !is_basis_submodule(m, s_prime))
    throw domain_error("characteristic: subsets must be action-closed");
  std::vector<bool> upper(m.dim(), false);
  for (int b : s) upper[b] = true;
  for (int b : s_prime)
    if (!upper[b])
      throw domain_error("characteristic: lower subset not contained in the upper one");
  std::vector<bool> lower(m.dim(), false);
  for (int b : s_prime) lower[b] = true;
  QSymElem x = zero_elem(m.n);
  for (int b : s) {
    if (lower[b]) continue;
    std::set<int> des;
    for (int i = 1; i <= m.n - 1; ++i)
      if (m.out(i, b).kind == CombModule::Kind::Fix) des.insert(i);
    x = add(x, f_elem(complement(comp_of(std::vector<int>(des.begin(), des.end()), m.n))));
  }
  return x;
}

QSymElem characteristic(const CombModule& m) {
  std::vector<int> all(m.dim());
  for (int b = 0; b < m.dim(); ++b) all[b] = b;
  return characteristic(m, all, {});
}

bool hom_check(const ModuleMap& f) {
  const CombModule& s = *f.src;
  const CombModule& d = *f.dst;
  if (s.n != d.n) return false;
  for (int b = 0; b < s.dim(); ++b)
    for (int i = 1; i <= s.n - 1; ++i) {
      std::optional<int> lhs = s.apply(i, b);
      std::optional<int> flhs = lhs ? f.map(*lhs) : std::nullopt;
      std::optional<int> fb = f.map(b);
      std::optional<int> rhs = fb ? d.apply(i, *fb) : std::nullopt;
      if (flhs != rhs) return false;
    }
  return true;
}

bool iso_check(const ModuleMap& f) {
  if (!hom_check(f)) return false;
  if (f.src->dim() != f.dst->dim()) return false;
  std::vector<bool> hit(f.dst->dim(), false);
  for (int b = 0; b < f.src->dim(); ++b) {
    if (f.assign[b] < 0) return false;
    if (hit[f.assign[b]]) return false;
    hit[f.assign[b]] = true;
  }
  return true;
}

bool is_surjective(const ModuleMap& f) {
  std::vector<bool> hit(f.dst->dim(), false);
  for (int b = 0; b < f.src->dim(); ++b)
    if (f.assign[b] >= 0) hit[f.assign[b]] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool v) { return v; });
}

ModuleMap compose(const ModuleMap& first, const ModuleMap& second) {
  if (first.dst != second.src)
    throw domain_error("compose: middle modules differ");
  ModuleMap out;
  out.src = first.src;
  out.dst = second.dst;
  out.assign.assign(first.src->dim(), -1);
  for (int b = 0; b < first.src->dim(); ++b)
    if (first.assign[b] >= 0) out.assign[b] = second.assign[first.assign[b]];
  return out;
}

namespace {

ModuleMap row_word_map(const CombModule& tab_module, const CombModule& target) {
  ModuleMap f;
  f.src = &tab_module;
  f.dst = &target;
  f.assign.assign(tab_module.dim(), -1);
  for (int b = 0; b < tab_module.dim(); ++b) {
    Filling t = parse_filling_compact(tab_module.basis[b]);
    f.assign[b] = target.index_of(perm_label(perm_from_word(row_word(t))));
  }
  return f;
}

}  // namespace

ModuleMap theta_V(const CombModule& v, const CombModule& target) {
  ModuleMap f = row_word_map(v, target);
  if (!iso_check(f)) throw certificate_error("theta_V: row-word map is not an isomorphism");
  return f;
}

ModuleMap theta_X(const CombModule& x, const CombModule& target) {
  ModuleMap f = row_word_map(x, target);
  if (!iso_check(f)) throw certificate_error("theta_X: row-word map is not an isomorphism");
  return f;
}

ModuleMap gamma_map(const CombModule& v, const CombModule& x) {
  ModuleMap f;
  f.src = &v;
  f.dst = &x;
  f.assign.assign(v.dim(), -1);
  for (int b = 0; b < v.dim(); ++b) {
    auto it = x.index.find(v.basis[b]);
    if (it != x.index.end()) f.assign[b] = it->second;
  }
  if (!hom_check(f))
    throw certificate_error("gamma_map: identity-or-zero map is not a homomorphism");
  return f;
}

ModuleMap eta_map(const CombModule& x, const CombModule& q) {
  ModuleMap f;
  f.src = &x;
  f.dst = &q;
  f.assign.assign(x.dim(), -1);
  for (int b = 0; b < x.dim(); ++b) {
    auto it = q.index.find(x.basis[b]);
    if (it != q.index.end()) f.assign[b] = it->second;
  }
  if (!hom_check(f))
    throw certificate_error("eta_map: identity-or-zero map is not a homomorphism");
  return f;
}

CombModule canonical_quotient(const Composition& a) {
  CombModule x = module_X(a);
  std::vector<Filling> sets = enumerate(Family::SET, a);
  std::vector<int> kill;
  for (std::size_t b = 0; b < sets.size(); ++b)
    if (!validate(Family::SYCT_C, sets[b])) kill.push_back(static_cast<int>(b));
  if (!is_basis_submodule(x, kill))
    throw certificate_error("canonical_quotient: kill set is not action-closed for " +
                            to_string(a));
  // Remaining basis = column-increasing Young composition tableaux.
  std::vector<Filling> keep = enumerate(Family::SYCT_C, a);
  CombModule q = quotient(x, kill);
  if (q.dim() != static_cast<int>(keep.size()))
    throw internal_error("canonical_quotient: basis mismatch with SYCT(a;C)");
  return q;
}

CombModule phi_twist(const CombModule& m) {
  CombModule t = m;
  for (int i = 1; i <= m.n - 1; ++i) t.action[i - 1] = m.action[m.n - i - 1];
  return t;
}

std::string to_dot(const CombModule& m) {
  std::ostringstream os;
  os << "digraph module {\n  rankdir=TB;\n  node [shape=box];\n";
  for (int b = 0; b < m.dim(); ++b) {
    // Loop label lists the fixing generators, like the action diagrams.
    std::ostringstream fixes;
    bool any = false;
    for (int i = 1; i <= m.n - 1; ++i)
      if (m.out(i, b).kind == CombModule::Kind::Fix) {
        if (any) fixes << ",";
        fixes << "pi" << i;
        any = true;
      }
    os << "  \"" << m.basis[b] << "\"";
    if (any) os << " [xlabel=\"" << fixes.str() << "\"]";
    os << ";\n";
  }
  for (int b = 0; b < m.dim(); ++b)
    for (int i = 1; i <= m.n - 1; ++i) {
      const CombModule::Outcome& o = m.out(i, b);
      if (o.kind == CombModule::Kind::Move)
        os << "  \"" << m.basis[b] << "\" -> \"" << m.basis[o.target]
           << "\" [label=\"pi" << i << "\"];\n";
    }
  os << "}\n";
  return os.str();
}

}  // namespace qhecke
