#include "qhecke/insertion.hpp"

#include <algorithm>

#include "qhecke/errors.hpp"

namespace qhecke {

bool is_valid_two_line(const TwoLineArray& w) {
  if (w.top.size() != w.bottom.size()) return false;
  for (int r = 0; r + 1 < w.n(); ++r) {
    if (w.top[r] < w.top[r + 1]) continue;
    if (w.top[r] == w.top[r + 1] && w.bottom[r] <= w.bottom[r + 1]) continue;
    return false;
  }
  for (int v : w.top)
    if (v < 1) return false;
  for (int v : w.bottom)
    if (v < 1) return false;
  return true;
}

TwoLineArray two_line_from_word(const std::vector<int>& word) {
  TwoLineArray w;
  w.bottom = word;
  w.top.resize(word.size());
  for (std::size_t i = 0; i < word.size(); ++i) w.top[i] = static_cast<int>(i) + 1;
  for (int v : word)
    if (v < 1) throw domain_error("two_line_from_word: letters must be positive");
  return w;
}

TwoLineArray two_line_from_perm(const Perm& s) { return two_line_from_word(s.word); }

namespace {

// Rows with the new single-cell row spliced in so the first column stays
// strictly increasing.  Returns the 1-based row index of the new row.
int splice_row(std::vector<std::vector<int>>& rows, int value) {
  std::size_t pos = 0;
  while (pos < rows.size() && rows[pos][0] < value) ++pos;
  if (pos < rows.size() && rows[pos][0] == value)
    throw internal_error("splice_row: first column would not be strict");
  rows.insert(rows.begin() + pos, std::vector<int>{value});
  return static_cast<int>(pos) + 1;
}

}  // namespace

InsertionTrace insert(const Filling& t, int k) {
  if (!is_young_composition_tableau(t))
    throw domain_error("insert: input is not a Young composition tableau");
  if (k < 1) throw domain_error("insert: letter must be positive");

  // Cell scan order: column strictly decreasing; within a column, row
  // decreasing.  The shape never changes mid-scan, so one list suffices.
  std::vector<Cell> order = diagram(t.shape);
  std::sort(order.begin(), order.end(), [](const Cell& a, const Cell& b) {
    if (a.col != b.col) return a.col > b.col;
    return a.row > b.row;
  });

  InsertionTrace tr;
  tr.result = t;
  int k0 = k;
  for (const Cell& c : order) {
    bool right_exists = tr.result.has_cell(c.row, c.col + 1);
    int here = tr.result.at(c.row, c.col);
    if (!right_exists && here <= k0) {
      // Append k0 at the end of this row.
      tr.result.rows[c.row - 1].push_back(k0);
      tr.result.shape.parts[c.row - 1] += 1;
      tr.new_cell = {c.row, c.col + 1};
      tr.sequence.push_back(tr.new_cell);
      return tr;
    }
    if (right_exists && here <= k0 && k0 < tr.result.at(c.row, c.col + 1)) {
      std::swap(k0, tr.result.at(c.row, c.col + 1));
      tr.sequence.push_back({c.row, c.col + 1});
    }
  }
  // New one-cell row; earlier entries of the sequence lying in rows at or
  // above the splice point shift up with their cells.
  int new_row = splice_row(tr.result.rows, k0);
  tr.result.shape.parts.insert(tr.result.shape.parts.begin() + (new_row - 1), 1);
  for (Cell& c : tr.sequence)
    if (c.row >= new_row) c.row += 1;
  tr.new_cell = {new_row, 1};
  tr.sequence.push_back(tr.new_cell);
  return tr;
}

PQPair build_PQ(const TwoLineArray& w) {
  if (!is_valid_two_line(w))
    throw domain_error("build_PQ: not a valid two-line array");
  PQPair pq;
  for (int k = 0; k < w.n(); ++k) {
    InsertionTrace tr = insert(pq.P, w.bottom[k]);
    pq.P = tr.result;
    int c = tr.new_cell.col;
    if (c == 1) {
      splice_row(pq.Q.rows, w.top[k]);
      pq.Q.shape.parts.assign(pq.Q.rows.size(), 0);
      for (std::size_t i = 0; i < pq.Q.rows.size(); ++i)
        pq.Q.shape.parts[i] = static_cast<int>(pq.Q.rows[i].size());
    } else {
      // Topmost row of Q with c-1 cells.
      int r = -1;
      for (int i = pq.Q.shape.length(); i >= 1; --i)
        if (pq.Q.shape.parts[i - 1] == c - 1) {
          r = i;
          break;
        }
      if (r < 0) throw internal_error("build_PQ: no row of length c-1 in Q");
      pq.Q.rows[r - 1].push_back(w.top[k]);
      pq.Q.shape.parts[r - 1] += 1;
    }
  }
  return pq;
}

PQPair build_PQ(const Perm& s) { return build_PQ(two_line_from_perm(s)); }

Filling recording_full(const std::vector<int>& word) {
  {
    std::vector<int> sorted(word);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw domain_error("recording_full: letters must be distinct");
  }
  Filling p, q;  // q mirrors p's shape growth
  for (std::size_t k = 0; k < word.size(); ++k) {
    InsertionTrace tr = insert(p, word[k]);
    p = tr.result;
    Cell c = tr.new_cell;
    if (c.col == 1) {
      q.rows.insert(q.rows.begin() + (c.row - 1), std::vector<int>{static_cast<int>(k) + 1});
    } else {
      q.rows[c.row - 1].push_back(static_cast<int>(k) + 1);
    }
    q.shape.parts.assign(q.rows.size(), 0);
    for (std::size_t i = 0; i < q.rows.size(); ++i)
      q.shape.parts[i] = static_cast<int>(q.rows[i].size());
  }
  return q;
}

Filling recording_full(const Perm& s) { return recording_full(s.word); }

PQPair rsk(const Perm& s) {
  PQPair pq;
  for (int k = 0; k < s.n(); ++k) {
    int x = s.word[k];
    int row = 1;
    for (;;) {
      if (row > pq.P.shape.length()) {
        pq.P.rows.push_back({x});
        pq.P.shape.parts.push_back(1);
        pq.Q.rows.push_back({k + 1});
        pq.Q.shape.parts.push_back(1);
        break;
      }
      auto& r = pq.P.rows[row - 1];
      auto it = std::upper_bound(r.begin(), r.end(), x);
      if (it == r.end()) {
        r.push_back(x);
        pq.P.shape.parts[row - 1] += 1;
        pq.Q.rows[row - 1].push_back(k + 1);
        pq.Q.shape.parts[row - 1] += 1;
        break;
      }
      std::swap(x, *it);
      ++row;
    }
  }
  return pq;
}

TwoLineArray conj(const TwoLineArray& w) {
  std::vector<int> xs(w.top), ys(w.bottom);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
  auto rev = [](const std::vector<int>& vals, int v) {
    auto it = std::lower_bound(vals.begin(), vals.end(), v);
    return vals[vals.size() - 1 - (it - vals.begin())];
  };
  TwoLineArray out;
  out.top.resize(w.n());
  out.bottom.resize(w.n());
  for (int i = 0; i < w.n(); ++i) {
    out.top[i] = rev(xs, w.top[w.n() - 1 - i]);
    out.bottom[i] = rev(ys, w.bottom[w.n() - 1 - i]);
  }
  return out;
}

PQPair composition_tableau_pair(const TwoLineArray& w) {
  PQPair young = build_PQ(conj(w));
  return {revmap(young.P), revmap(young.Q)};
}

}  // namespace qhecke
