#include "qhecke/permutation.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "qhecke/errors.hpp"

namespace qhecke {

bool is_permutation_word(const std::vector<int>& w) {
  int n = static_cast<int>(w.size());
  std::vector<bool> seen(n + 1, false);
  for (int v : w) {
    if (v < 1 || v > n || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

Perm perm_from_word(const std::vector<int>& w) {
  if (!is_permutation_word(w))
    throw domain_error("perm_from_word: not a permutation of [n]");
  return Perm(w);
}

Perm identity(int n) {
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = i + 1;
  return Perm(w);
}

Perm w0(int n) {
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = n - i;
  return Perm(w);
}

Perm w0_parabolic(const std::vector<int>& I, int n) {
  std::vector<bool> gen(n, false);
  for (int i : I) {
    if (i < 1 || i > n - 1)
      throw domain_error("w0_parabolic: generator index outside [1,n-1]");
    gen[i] = true;
  }
  // Maximal runs of consecutive generators give blocks to reverse.
  Perm w = identity(n);
  int i = 1;
  while (i <= n - 1) {
    if (!gen[i]) {
      ++i;
      continue;
    }
    int j = i;
    while (j <= n - 1 && gen[j]) ++j;
    std::reverse(w.word.begin() + (i - 1), w.word.begin() + j);
    i = j;
  }
  return w;
}

Perm w0_alpha(const Composition& a) { return w0_parabolic(set_of(a), a.size()); }

Perm mult(const Perm& s, const Perm& t) {
  if (s.n() != t.n()) throw domain_error("mult: size mismatch");
  std::vector<int> w(s.n());
  for (int i = 1; i <= s.n(); ++i) w[i - 1] = s(t(i));
  return Perm(w);
}

Perm inverse(const Perm& s) {
  std::vector<int> w(s.n());
  for (int i = 1; i <= s.n(); ++i) w[s(i) - 1] = i;
  return Perm(w);
}

Perm conj_w0(const Perm& s) {
  Perm w = w0(s.n());
  return mult(mult(w, s), w);
}

Perm left_s(int i, const Perm& s) {
  if (i < 1 || i > s.n() - 1) throw domain_error("left_s: index outside [1,n-1]");
  Perm r = s;
  for (int& v : r.word) {
    if (v == i)
      v = i + 1;
    else if (v == i + 1)
      v = i;
  }
  return r;
}

std::set<std::pair<int, int>> inv_L(const Perm& s) {
  std::set<std::pair<int, int>> inv;
  for (int i = 1; i <= s.n(); ++i)
    for (int j = i + 1; j <= s.n(); ++j)
      if (s(i) > s(j)) inv.insert({i, j});
  return inv;
}

int length(const Perm& s) {
  int cnt = 0;
  for (int i = 1; i <= s.n(); ++i)
    for (int j = i + 1; j <= s.n(); ++j)
      if (s(i) > s(j)) ++cnt;
  return cnt;
}

std::set<int> des_L(const Perm& s) {
  std::vector<int> pos(s.n() + 1);
  for (int i = 1; i <= s.n(); ++i) pos[s(i)] = i;
  std::set<int> d;
  for (int i = 1; i <= s.n() - 1; ++i)
    if (pos[i] > pos[i + 1]) d.insert(i);
  return d;
}

bool leq_L(const Perm& lo, const Perm& hi) {
  if (lo.n() != hi.n()) throw domain_error("leq_L: size mismatch");
  auto a = inv_L(lo), b = inv_L(hi);
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool WeakInterval::contains(const Perm& s) const {
  return std::binary_search(elements.begin(), elements.end(), s);
}

WeakInterval interval(const Perm& lo, const Perm& hi) {
  if (!leq_L(lo, hi))
    throw domain_error("interval: lower bound not below upper bound");
  std::set<Perm> seen{lo};
  std::deque<Perm> queue{lo};
  while (!queue.empty()) {
    Perm cur = queue.front();
    queue.pop_front();
    std::set<int> des = des_L(cur);
    for (int i = 1; i <= cur.n() - 1; ++i) {
      if (des.count(i)) continue;
      Perm up = left_s(i, cur);
      if (seen.count(up)) continue;
      if (leq_L(up, hi)) {
        seen.insert(up);
        queue.push_back(up);
      }
    }
  }
  WeakInterval out;
  out.lo = lo;
  out.hi = hi;
  out.elements.assign(seen.begin(), seen.end());
  return out;
}

std::vector<Perm> all_perms(int n) {
  std::vector<Perm> out;
  Perm p = identity(n);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.word.begin(), p.word.end()));
  return out;
}

std::vector<Perm> knuth_neighbors(const Perm& s) {
  int n = s.n();
  std::vector<Perm> out;
  for (int i = 2; i <= n - 1; ++i) {
    int a = s(i - 1), b = s(i), c = s(i + 1);
    // Swap positions i, i+1 when the middle letter stays put: yzx ~ yxz.
    if ((c < a && a < b) || (b < a && a < c)) {
      Perm r = s;
      std::swap(r.word[i - 1], r.word[i]);
      out.push_back(r);
    }
    // Swap positions i-1, i: xzy ~ zxy.
    if ((b < c && c < a) || (a < c && c < b)) {
      Perm r = s;
      std::swap(r.word[i - 2], r.word[i - 1]);
      out.push_back(r);
    }
  }
  return out;
}

std::set<Perm> knuth_class(const Perm& s) {
  check_guard(s.n(), 10, "knuth_class");
  std::set<Perm> seen{s};
  std::deque<Perm> queue{s};
  while (!queue.empty()) {
    Perm cur = queue.front();
    queue.pop_front();
    for (const Perm& nb : knuth_neighbors(cur))
      if (seen.insert(nb).second) queue.push_back(nb);
  }
  return seen;
}

std::set<Perm> dual_knuth_class(const Perm& s) {
  std::set<Perm> out;
  for (const Perm& q : knuth_class(inverse(s))) out.insert(inverse(q));
  return out;
}

std::string to_digits(const Perm& s) {
  std::ostringstream os;
  if (s.n() <= 9) {
    for (int v : s.word) os << v;
  } else {
    for (int i = 0; i < s.n(); ++i) {
      if (i) os << ',';
      os << s.word[i];
    }
  }
  return os.str();
}

Perm parse_perm(const std::string& text) {
  std::vector<int> w;
  if (text.find(',') != std::string::npos) {
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) {
      try {
        w.push_back(std::stoi(tok));
      } catch (...) {
        throw domain_error("parse_perm: bad token '" + tok + "'");
      }
    }
  } else {
    for (char c : text) {
      if (c < '1' || c > '9')
        throw domain_error("parse_perm: bad character '" + std::string(1, c) + "'");
      w.push_back(c - '0');
    }
  }
  if (!is_permutation_word(w))
    throw domain_error("parse_perm: '" + text + "' is not a permutation");
  return Perm(w);
}

}  // namespace qhecke
