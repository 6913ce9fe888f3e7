#include "qhecke/filling.hpp"

#include <algorithm>
#include <sstream>

#include "qhecke/errors.hpp"

namespace qhecke {

Cell Filling::find_entry(int value) const {
  for (int i = 1; i <= shape.length(); ++i)
    for (int j = 1; j <= shape.parts[i - 1]; ++j)
      if (at(i, j) == value) return {i, j};
  throw domain_error("Filling::find_entry: value " + std::to_string(value) +
                     " not present");
}

Filling make_filling(const Composition& shape,
                     const std::vector<std::vector<int>>& rows) {
  if (static_cast<int>(rows.size()) != shape.length())
    throw domain_error("make_filling: row count differs from shape length");
  for (int i = 0; i < shape.length(); ++i)
    if (static_cast<int>(rows[i].size()) != shape.parts[i])
      throw domain_error("make_filling: row " + std::to_string(i + 1) +
                         " has wrong length");
  return Filling(shape, rows);
}

const char* family_name(Family f) {
  switch (f) {
    case Family::SYT: return "SYT";
    case Family::SCT: return "SCT";
    case Family::SYCT: return "SYCT";
    case Family::SIT: return "SIT";
    case Family::SET: return "SET";
    case Family::SYCT_C: return "SYCT_C";
    case Family::nSYCT: return "nSYCT";
  }
  return "?";
}

Family parse_family(const std::string& name) {
  for (Family f : {Family::SYT, Family::SCT, Family::SYCT, Family::SIT,
                   Family::SET, Family::SYCT_C, Family::nSYCT})
    if (name == family_name(f)) return f;
  throw domain_error("parse_family: unknown family '" + name + "'");
}

bool is_standard(const Filling& t) {
  int n = t.n();
  std::vector<bool> seen(n + 1, false);
  for (const auto& row : t.rows)
    for (int v : row) {
      if (v < 1 || v > n || seen[v]) return false;
      seen[v] = true;
    }
  return true;
}

static bool rows_weakly_increase(const Filling& t) {
  for (const auto& row : t.rows)
    for (std::size_t j = 1; j < row.size(); ++j)
      if (row[j - 1] > row[j]) return false;
  return true;
}

static bool rows_strictly_increase(const Filling& t) {
  for (const auto& row : t.rows)
    for (std::size_t j = 1; j < row.size(); ++j)
      if (row[j - 1] >= row[j]) return false;
  return true;
}

static bool rows_weakly_decrease(const Filling& t) {
  for (const auto& row : t.rows)
    for (std::size_t j = 1; j < row.size(); ++j)
      if (row[j - 1] < row[j]) return false;
  return true;
}

static bool first_col_increases_bottom_up(const Filling& t) {
  for (int i = 2; i <= t.shape.length(); ++i)
    if (t.at(i - 1, 1) >= t.at(i, 1)) return false;
  return true;
}

static bool first_col_increases_top_down(const Filling& t) {
  for (int i = 2; i <= t.shape.length(); ++i)
    if (t.at(i - 1, 1) <= t.at(i, 1)) return false;
  return true;
}

// Entries in every column increase from bottom to top, over the cells present.
static bool cols_increase_bottom_up(const Filling& t) {
  int maxcol = 0;
  for (int p : t.shape.parts) maxcol = std::max(maxcol, p);
  for (int j = 1; j <= maxcol; ++j) {
    int prev = 0;
    bool first = true;
    for (int i = 1; i <= t.shape.length(); ++i) {
      if (!t.has_cell(i, j)) continue;
      if (!first && t.at(i, j) <= prev) return false;
      prev = t.at(i, j);
      first = false;
    }
  }
  return true;
}

static bool young_triple_rule(const Filling& t) {
  const Composition& a = t.shape;
  for (int i = 1; i <= a.length(); ++i)
    for (int j = i + 1; j <= a.length(); ++j)
      for (int k = 1; k <= a.parts[j - 1]; ++k) {
        if (!t.has_cell(i, k + 1)) continue;
        if (t.at(i, k + 1) >= t.at(j, k)) {
          if (!t.has_cell(j, k + 1)) return false;
          if (!(t.at(i, k + 1) > t.at(j, k + 1))) return false;
        }
      }
  return true;
}

static bool triple_rule(const Filling& t) {
  const Composition& a = t.shape;
  for (int i = 1; i <= a.length(); ++i)
    for (int j = i + 1; j <= a.length(); ++j)
      for (int k = 1; k <= a.parts[j - 1]; ++k) {
        if (!t.has_cell(i, k + 1)) continue;
        if (t.at(i, k + 1) <= t.at(j, k)) {
          if (!t.has_cell(j, k + 1)) return false;
          if (!(t.at(i, k + 1) < t.at(j, k + 1))) return false;
        }
      }
  return true;
}

bool is_young_composition_tableau(const Filling& t) {
  return rows_weakly_increase(t) && first_col_increases_bottom_up(t) &&
         young_triple_rule(t);
}

bool is_composition_tableau(const Filling& t) {
  return rows_weakly_decrease(t) && first_col_increases_top_down(t) &&
         triple_rule(t);
}

bool validate(Family f, const Filling& t) {
  if (!is_standard(t))
    throw domain_error("validate: entries of a standard filling must be exactly 1..n");
  switch (f) {
    case Family::SYT:
      return is_partition(t.shape) && rows_strictly_increase(t) &&
             cols_increase_bottom_up(t);
    case Family::SCT:
      return is_composition_tableau(t);
    case Family::SYCT:
      return is_young_composition_tableau(t);
    case Family::SIT:
      return rows_strictly_increase(t) && first_col_increases_bottom_up(t);
    case Family::SET:
      return rows_strictly_increase(t) && cols_increase_bottom_up(t);
    case Family::SYCT_C:
      return is_young_composition_tableau(t) && cols_increase_bottom_up(t);
    case Family::nSYCT:
      return rows_strictly_increase(t) && cols_increase_bottom_up(t) &&
             is_SE_decreasing(t);
  }
  return false;
}

namespace {

// Backtracking enumerator: entries 1..n are placed in increasing order; each
// row fills toward its reading direction, so the prune below is a necessary
// condition and the final validate() call makes the predicate exact.
struct Enumerator {
  Family family;
  Composition shape;
  bool rows_decrease;  // SCT fills rows right-to-left
  Filling work;
  std::vector<int> filled_in_row;
  std::vector<Filling> out;

  explicit Enumerator(Family f, const Composition& a)
      : family(f), shape(a), rows_decrease(f == Family::SCT) {
    std::vector<std::vector<int>> rows;
    for (int p : a.parts) rows.emplace_back(p, 0);
    work = Filling(a, rows);
    filled_in_row.assign(a.length(), 0);
  }

  bool placement_ok(int row, int entry) {
    // First-column order pruning keeps the search shallow; exactness comes
    // from the final validate().
    int col = rows_decrease ? shape.parts[row - 1] - filled_in_row[row - 1]
                            : filled_in_row[row - 1] + 1;
    if (col == 1) {
      if (rows_decrease) {  // leftmost column increases top to bottom
        for (int i = row + 1; i <= shape.length(); ++i)
          if (filled_in_row[i - 1] < shape.parts[i - 1]) return false;
      } else if (family != Family::SYT && family != Family::SET &&
                 family != Family::nSYCT) {
        // First column strictly increases bottom to top: fill it in order.
        for (int i = 1; i < row; ++i)
          if (filled_in_row[i - 1] == 0) return false;
      }
    }
    if (!rows_decrease &&
        (family == Family::SYT || family == Family::SET ||
         family == Family::nSYCT || family == Family::SYCT_C)) {
      // Column entries increase bottom-up: all lower cells of this column
      // must already be filled.
      for (int i = 1; i < row; ++i)
        if (in_diagram(shape, i, col) && work.at(i, col) == 0) return false;
    }
    (void)entry;
    return true;
  }

  void run(int entry) {
    int n = shape.size();
    if (entry > n) {
      if (validate(family, work)) out.push_back(work);
      return;
    }
    for (int row = 1; row <= shape.length(); ++row) {
      if (filled_in_row[row - 1] == shape.parts[row - 1]) continue;
      if (!placement_ok(row, entry)) continue;
      int col = rows_decrease ? shape.parts[row - 1] - filled_in_row[row - 1]
                              : filled_in_row[row - 1] + 1;
      work.at(row, col) = entry;
      ++filled_in_row[row - 1];
      run(entry + 1);
      --filled_in_row[row - 1];
      work.at(row, col) = 0;
    }
  }
};

}  // namespace

std::vector<Filling> enumerate(Family f, const Composition& a) {
  check_guard(a.size(), 12, "enumerate");
  if (f == Family::SYT && !is_partition(a))
    throw domain_error("enumerate: SYT needs a partition shape");
  Enumerator e(f, a);
  e.run(1);
  std::sort(e.out.begin(), e.out.end(), [](const Filling& x, const Filling& y) {
    return row_word(x) < row_word(y);
  });
  return e.out;
}

std::vector<int> row_word(const Filling& t) {
  std::vector<int> w;
  w.reserve(t.n());
  for (const auto& row : t.rows)
    for (auto it = row.rbegin(); it != row.rend(); ++it) w.push_back(*it);
  return w;
}

std::vector<int> col_word(const Filling& t) {
  std::vector<int> w;
  w.reserve(t.n());
  int maxcol = 0;
  for (int p : t.shape.parts) maxcol = std::max(maxcol, p);
  for (int j = maxcol; j >= 1; --j)
    for (int i = 1; i <= t.shape.length(); ++i)
      if (t.has_cell(i, j)) w.push_back(t.at(i, j));
  return w;
}

std::set<int> des_S(const Filling& t) {
  if (!is_standard(t)) throw domain_error("des_S: filling must be standard");
  int n = t.n();
  std::set<int> d;
  for (int i = 1; i <= n - 1; ++i) {
    Cell a = t.find_entry(i), b = t.find_entry(i + 1);
    if (b.col >= a.col) d.insert(i);
  }
  return d;
}

std::set<int> des_hatS(const Filling& t) {
  if (!is_standard(t)) throw domain_error("des_hatS: filling must be standard");
  int n = t.n();
  std::set<int> d;
  for (int i = 1; i <= n - 1; ++i) {
    Cell a = t.find_entry(i), b = t.find_entry(i + 1);
    if (a.col >= b.col) d.insert(i);
  }
  return d;
}

Filling revmap(const Filling& t) {
  std::vector<int> values;
  for (const auto& row : t.rows)
    for (int v : row) values.push_back(v);
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  Filling r = t;
  for (auto& row : r.rows)
    for (int& v : row) {
      auto it = std::lower_bound(values.begin(), values.end(), v);
      v = values[values.size() - 1 - (it - values.begin())];
    }
  return r;
}

CanonicalKind parse_canonical_kind(const std::string& name) {
  if (name == "calT") return CanonicalKind::calT;
  if (name == "calT_prime") return CanonicalKind::calT_prime;
  if (name == "sfT") return CanonicalKind::sfT;
  if (name == "sfT_prime") return CanonicalKind::sfT_prime;
  if (name == "tau_prime_shape_recording")
    return CanonicalKind::tau_prime_shape_recording;
  throw domain_error("parse_canonical_kind: unknown kind '" + name + "'");
}

Filling canonical(CanonicalKind kind, const Composition& a) {
  std::vector<std::vector<int>> rows;
  for (int p : a.parts) rows.emplace_back(p, 0);
  Filling t(a, rows);
  int next = 1;
  switch (kind) {
    case CanonicalKind::calT:
    case CanonicalKind::sfT:
      for (int i = 1; i <= a.length(); ++i)
        for (int j = 1; j <= a.parts[i - 1]; ++j) t.at(i, j) = next++;
      break;
    case CanonicalKind::calT_prime:
      for (int i = 1; i <= a.length(); ++i) t.at(i, 1) = next++;
      for (int i = a.length(); i >= 1; --i)
        for (int j = 2; j <= a.parts[i - 1]; ++j) t.at(i, j) = next++;
      break;
    case CanonicalKind::sfT_prime: {
      int maxcol = 0;
      for (int p : a.parts) maxcol = std::max(maxcol, p);
      for (int j = 1; j <= maxcol; ++j)
        for (int i = 1; i <= a.length(); ++i)
          if (t.has_cell(i, j)) t.at(i, j) = next++;
      break;
    }
    case CanonicalKind::tau_prime_shape_recording:
      return canonical(CanonicalKind::calT, reverse_comp(a));
  }
  return t;
}

bool is_SE_decreasing(const Filling& t) {
  const Composition& a = t.shape;
  for (int i = 1; i <= a.length(); ++i)
    for (int j = i + 1; j <= a.length(); ++j) {
      if (!(a.parts[i - 1] > a.parts[j - 1])) continue;
      for (int k = 1; k <= a.parts[j - 1]; ++k)
        if (!(t.at(i, k + 1) < t.at(j, k))) return false;
    }
  return true;
}

std::string to_string(const Filling& t) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    if (i) os << ',';
    os << '[';
    for (std::size_t j = 0; j < t.rows[i].size(); ++j) {
      if (j) os << ',';
      os << t.rows[i][j];
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

Filling parse_filling_compact(const std::string& text) {
  std::vector<std::vector<int>> rows;
  std::vector<int> cur;
  int depth = 0, value = 0;
  bool in_number = false;
  auto flush = [&] {
    if (in_number) cur.push_back(value);
    value = 0;
    in_number = false;
  };
  for (char c : text) {
    if (c >= '0' && c <= '9') {
      value = value * 10 + (c - '0');
      in_number = true;
    } else if (c == '[') {
      ++depth;
      if (depth == 2) cur.clear();
    } else if (c == ']') {
      flush();
      if (depth == 2) rows.push_back(cur);
      --depth;
    } else if (c == ',') {
      flush();
    } else if (c != ' ') {
      throw domain_error("parse_filling_compact: unexpected character");
    }
  }
  if (depth != 0) throw domain_error("parse_filling_compact: unbalanced brackets");
  std::vector<int> parts;
  for (const auto& r : rows) {
    if (r.empty()) throw domain_error("parse_filling_compact: empty row");
    parts.push_back(static_cast<int>(r.size()));
  }
  return Filling(Composition(parts), rows);
}

std::string pretty(const Filling& t) {
  int width = 1;
  for (const auto& row : t.rows)
    for (int v : row) width = std::max(width, static_cast<int>(std::to_string(v).size()));
  std::ostringstream os;
  for (int i = t.shape.length(); i >= 1; --i) {
    for (int j = 1; j <= t.shape.parts[i - 1]; ++j) {
      std::string s = std::to_string(t.at(i, j));
      os << std::string(width - s.size(), ' ') << s << (j < t.shape.parts[i - 1] ? " " : "");
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace qhecke
