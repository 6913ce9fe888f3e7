#include "qhecke/greene.hpp"

#include <algorithm>

#include "qhecke/errors.hpp"

namespace qhecke {

namespace {

bool all_distinct(const std::vector<int>& w) {
  std::vector<int> s(w);
  std::sort(s.begin(), s.end());
  return std::adjacent_find(s.begin(), s.end()) == s.end();
}

Composition conjugate_partition(const Composition& lam) {
  if (lam.empty()) return lam;
  std::vector<int> conj(lam.parts[0], 0);
  for (int p : lam.parts)
    for (int j = 0; j < p; ++j) conj[j] += 1;
  return Composition(conj);
}

}  // namespace

Composition schensted_shape(const std::vector<int>& w) {
  // Row lengths only; weak bumping (first entry strictly larger gets bumped).
  std::vector<std::vector<int>> rows;
  for (int x : w) {
    int r = 0;
    for (;;) {
      if (r == static_cast<int>(rows.size())) {
        rows.push_back({x});
        break;
      }
      auto it = std::upper_bound(rows[r].begin(), rows[r].end(), x);
      if (it == rows[r].end()) {
        rows[r].push_back(x);
        break;
      }
      std::swap(x, *it);
      ++r;
    }
  }
  std::vector<int> parts;
  for (const auto& row : rows) parts.push_back(static_cast<int>(row.size()));
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Composition(parts);
}

int longest_k_increasing(const std::vector<int>& w, int k) {
  if (k < 1) throw domain_error("longest_k_increasing: k must be >= 1");
  // Strict chains of w are strict decreasing subsequences of the reversal,
  // counted by the conjugate of the reversed word's insertion shape.
  std::vector<int> rev(w.rbegin(), w.rend());
  Composition conj = conjugate_partition(schensted_shape(rev));
  int total = 0;
  for (int i = 1; i <= k; ++i) total += conj.part(i);
  return total;
}

std::vector<IncTuple> inc_k_tuples(const std::vector<int>& w, int k) {
  check_guard(static_cast<int>(w.size()), 10, "inc_k_tuples");
  if (!all_distinct(w)) throw domain_error("inc_k_tuples: letters must be distinct");
  if (k < 1) throw domain_error("inc_k_tuples: k must be >= 1");
  int n = static_cast<int>(w.size());
  int target = longest_k_increasing(w, k);

  std::vector<IncTuple> out;
  IncTuple cur;
  cur.parts.assign(k, {});
  int placed = 0;

  auto rec = [&](auto&& self, int idx) -> void {
    if (placed + (n - idx) < target) return;  // cannot reach i_k any more
    if (idx == n) {
      if (placed == target) out.push_back(cur);
      return;
    }
    self(self, idx + 1);  // skip w[idx]
    for (int p = 0; p < k; ++p) {
      if (!cur.parts[p].empty() && w[cur.parts[p].back()] >= w[idx]) continue;
      cur.parts[p].push_back(idx);
      ++placed;
      self(self, idx + 1);
      --placed;
      cur.parts[p].pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<int> ies(const std::vector<int>& w, const IncTuple& u) {
  std::vector<int> firsts;
  for (const auto& part : u.parts)
    if (!part.empty()) firsts.push_back(w[part.front()]);
  std::sort(firsts.begin(), firsts.end());
  firsts.erase(std::unique(firsts.begin(), firsts.end()), firsts.end());
  return firsts;
}

namespace {

// Depth-first search over canonical tuple completions.  At each index the
// only moves are: skip (budget-limited), open a fresh part, or extend the
// open part with the largest last value below the letter; a tail-exchange
// argument shows greedy extension reaches every attainable IES.
struct MiesSearch {
  const std::vector<int>& w;
  int k, n, target;
  std::vector<int> lasts;   // last values of open parts
  std::vector<int> firsts;  // first values of open parts
  int placed = 0;
  int skipped = 0;
  bool found = false;
  std::vector<int> best;

  MiesSearch(const std::vector<int>& word, int kk, int tgt)
      : w(word), k(kk), n(static_cast<int>(word.size())), target(tgt) {}

  void consider() {
    std::vector<int> cand(firsts);
    std::sort(cand.begin(), cand.end());
    if (!found || cmp_set(best, cand) == std::strong_ordering::less) {
      best = cand;
      found = true;
    }
  }

  void rec(int idx) {
    if (placed + (n - idx) < target) return;
    if (idx == n) {
      if (placed == target) consider();
      return;
    }
    int x = w[idx];
    // Extend: the open part with the largest last value < x.
    int arg = -1;
    for (std::size_t p = 0; p < lasts.size(); ++p)
      if (lasts[p] < x && (arg < 0 || lasts[p] > lasts[arg]))
        arg = static_cast<int>(p);
    if (arg >= 0) {
      int saved = lasts[arg];
      lasts[arg] = x;
      ++placed;
      rec(idx + 1);
      --placed;
      lasts[arg] = saved;
    }
    if (static_cast<int>(lasts.size()) < k) {
      lasts.push_back(x);
      firsts.push_back(x);
      ++placed;
      rec(idx + 1);
      --placed;
      firsts.pop_back();
      lasts.pop_back();
    }
    if (skipped < n - target) {
      ++skipped;
      rec(idx + 1);
      --skipped;
    }
  }
};

}  // namespace

std::vector<int> mies(const std::vector<int>& w, int k) {
  if (k == 0) return {};
  if (!all_distinct(w)) throw domain_error("mies: letters must be distinct");
  int n = static_cast<int>(w.size());
  if (k < 0 || k > n) throw domain_error("mies: k out of range");
  MiesSearch search(w, k, longest_k_increasing(w, k));
  search.rec(0);
  if (!search.found) throw internal_error("mies: no optimal tuple found");
  return search.best;
}

std::vector<int> mies(const Perm& s, int k) { return mies(s.word, k); }

Composition predict_shape(const std::vector<int>& w) {
  if (!all_distinct(w)) throw domain_error("predict_shape: letters must be distinct");
  Composition lam = schensted_shape(w);
  int l = lam.length();
  if (l == 0) return Composition{};

  std::vector<std::vector<int>> chain(l + 1);
  chain[0] = {};
  for (int k = 1; k <= l; ++k) {
    chain[k] = mies(w, k);
    if (static_cast<int>(chain[k].size()) != k ||
        !std::includes(chain[k].begin(), chain[k].end(), chain[k - 1].begin(),
                       chain[k - 1].end()))
      throw internal_error("predict_shape: mIES chain is not strictly nested");
  }
  const std::vector<int>& xs = chain[l];  // ascending
  std::vector<int> parts(l, 0);
  for (int r = 0; r < l; ++r) {
    int x = xs[r];
    int first_t = 0;
    for (int t = 1; t <= l; ++t)
      if (std::binary_search(chain[t].begin(), chain[t].end(), x)) {
        first_t = t;
        break;
      }
    if (first_t == 0) throw internal_error("predict_shape: entry missing from chain");
    parts[r] = lam.part(first_t);
  }
  return Composition(parts);
}

Composition predict_shape(const Perm& s) { return predict_shape(s.word); }

bool knuth_invariance_check(const Perm& s, int k) {
  check_guard(s.n(), 7, "knuth_invariance_check");
  std::vector<int> ref = mies(s, k);
  for (const Perm& q : knuth_class(s))
    if (mies(q, k) != ref) return false;
  return true;
}

}  // namespace qhecke
