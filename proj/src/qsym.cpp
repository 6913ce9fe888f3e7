#include "qhecke/qsym.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include "qhecke/errors.hpp"
#include "qhecke/filling.hpp"
#include "qhecke/permutation.hpp"

namespace qhecke {

QSymElem f_elem(const Composition& a) {
  QSymElem x;
  x.degree = a.size();
  x.coeffs[a] = 1;
  return x;
}

QSymElem zero_elem(int degree) {
  QSymElem x;
  x.degree = degree;
  return x;
}

QSymElem add(const QSymElem& x, const QSymElem& y) {
  if (x.degree != y.degree) throw domain_error("qsym add: degree mismatch");
  QSymElem out = x;
  for (const auto& [a, c] : y.coeffs) {
    long long v = (out.coeffs.count(a) ? out.coeffs[a] : 0) + c;
    if (v == 0)
      out.coeffs.erase(a);
    else
      out.coeffs[a] = v;
  }
  return out;
}

QSymElem sub(const QSymElem& x, const QSymElem& y) { return add(x, scale(-1, y)); }

QSymElem scale(long long c, const QSymElem& x) {
  QSymElem out;
  out.degree = x.degree;
  if (c == 0) return out;
  for (const auto& [a, v] : x.coeffs) out.coeffs[a] = c * v;
  return out;
}

long long coeff(const QSymElem& x, const Composition& a) {
  auto it = x.coeffs.find(a);
  return it == x.coeffs.end() ? 0 : it->second;
}

QSymElem rho(const QSymElem& x) {
  QSymElem out;
  out.degree = x.degree;
  for (const auto& [a, c] : x.coeffs) out.coeffs[reverse_comp(a)] = c;
  return out;
}

namespace {

// Per-basis memo; constructors are pure so a single lock suffices.
template <typename Fn>
QSymElem memoized(const char* key, const Composition& a, Fn&& compute) {
  static std::map<std::pair<std::string, Composition>, QSymElem> cache;
  static std::mutex mu;
  std::pair<std::string, Composition> k{key, a};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
  }
  QSymElem val = compute();
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(std::move(k), std::move(val)).first->second;
}

Composition comp_of_set(const std::set<int>& s, int n) {
  return comp_of(std::vector<int>(s.begin(), s.end()), n);
}

}  // namespace

QSymElem schur_F(const Composition& lam) {
  if (!is_partition(lam)) throw domain_error("schur_F: needs a partition");
  return memoized("s", lam, [&] {
    QSymElem x = zero_elem(lam.size());
    for (const Filling& t : enumerate(Family::SYT, lam)) {
      std::set<int> des;
      for (int i = 1; i <= lam.size() - 1; ++i)
        if (t.find_entry(i + 1).row > t.find_entry(i).row) des.insert(i);
      x = add(x, f_elem(comp_of_set(des, lam.size())));
    }
    return x;
  });
}

QSymElem quasischur_F(const Composition& a) {
  return memoized("qs", a, [&] {
    QSymElem x = zero_elem(a.size());
    for (const Filling& t : enumerate(Family::SCT, reverse_comp(a)))
      x = add(x, f_elem(comp_of_set(des_S(t), a.size())));
    return x;
  });
}

QSymElem young_quasischur_F(const Composition& a) {
  return memoized("yqs", a, [&] {
    QSymElem x = zero_elem(a.size());
    for (const Filling& t : enumerate(Family::SYCT, a))
      x = add(x, f_elem(comp_of_set(des_hatS(t), a.size())));
    return x;
  });
}

QSymElem dual_immaculate_F(const Composition& a) {
  return memoized("dimm", a, [&] {
    QSymElem x = zero_elem(a.size());
    for (const Filling& t : enumerate(Family::SIT, a)) {
      Perm w = perm_from_word(row_word(t));
      x = add(x, f_elem(complement(comp_of_set(des_L(w), a.size()))));
    }
    return x;
  });
}

QSymElem extended_schur_F(const Composition& a) {
  return memoized("ext", a, [&] {
    QSymElem x = zero_elem(a.size());
    for (const Filling& t : enumerate(Family::SET, a)) {
      Perm w = perm_from_word(row_word(t));
      x = add(x, f_elem(complement(comp_of_set(des_L(w), a.size()))));
    }
    return x;
  });
}

namespace {

// Total order refining strict dominance of the part-rearrangements: lex on
// partitions extends dominance, so sorting by lambda(a) descending and then
// by a gives a valid elimination order candidate.
bool dominance_refining_before(const Composition& a, const Composition& b) {
  Composition la = lambda_sort(a), lb = lambda_sort(b);
  if (la != lb) return la.parts > lb.parts;
  return a.parts < b.parts;
}

}  // namespace

std::optional<Expansion> expand_in(const QSymElem& x, ExpandBasis basis) {
  check_guard(x.degree, 9, "expand_in");
  std::vector<Composition> comps = all_compositions(x.degree);
  std::sort(comps.begin(), comps.end(), dominance_refining_before);

  auto b_elem = [&](const Composition& a) {
    return basis == ExpandBasis::QS ? quasischur_F(a) : young_quasischur_F(a);
  };

  // Verify unitriangularity: B_a = F_a + terms strictly later in the order.
  std::map<Composition, int> pos;
  for (std::size_t i = 0; i < comps.size(); ++i) pos[comps[i]] = static_cast<int>(i);
  for (const Composition& a : comps) {
    QSymElem b = b_elem(a);
    if (coeff(b, a) != 1)
      throw internal_error("expand_in: basis diagonal is not 1 at " + to_string(a));
    for (const auto& [beta, c] : b.coeffs)
      if (c != 0 && pos[beta] < pos[a])
        throw internal_error("expand_in: basis transition is not triangular at " +
                             to_string(a) + " / " + to_string(beta));
  }

  QSymElem rem = x;
  Expansion out;
  out.nonnegative = true;
  for (const Composition& a : comps) {
    long long c = coeff(rem, a);
    if (c == 0) continue;
    out.coeffs[a] = c;
    if (c < 0) out.nonnegative = false;
    rem = sub(rem, scale(c, b_elem(a)));
  }
  if (!rem.coeffs.empty()) return std::nullopt;
  return out;
}

std::string to_string(const QSymElem& x) {
  if (x.coeffs.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [a, c] : x.coeffs) {
    if (!first) os << (c >= 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    long long abs = c < 0 ? -c : c;
    if (abs != 1) os << abs << "*";
    os << "F[" << to_string(a) << "]";
    first = false;
  }
  return os.str();
}

}  // namespace qhecke
