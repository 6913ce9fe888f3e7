#include "qhecke/filtration.hpp"

#include <algorithm>
#include <map>

#include "qhecke/errors.hpp"

namespace qhecke {

namespace {

struct Signature {
  Composition shape;  // of the insertion tableau
  Filling recording;  // column-recording tableau
  bool operator==(const Signature&) const = default;
  auto operator<=>(const Signature&) const = default;
};

Signature signature_of(const Perm& s) {
  PQPair pq = build_PQ(s);
  return {pq.P.shape, pq.Q};
}

Signature twisted_signature(const Perm& s) {
  return signature_of(mult(s, w0(s.n())));
}

}  // namespace

bool m_equiv(const Perm& s, const Perm& r) {
  if (s.n() != r.n()) throw domain_error("m_equiv: size mismatch");
  return signature_of(s) == signature_of(r);
}

bool closure_check(const std::set<Perm>& s, int n) {
  check_guard(n, 8, "closure_check");
  for (const Perm& p : s)
    if (p.n() != n) throw domain_error("closure_check: element size mismatch");
  std::map<Signature, std::vector<Perm>> classes;
  for (const Perm& p : all_perms(n)) classes[signature_of(p)].push_back(p);
  for (const auto& [sig, members] : classes) {
    int inside = 0;
    for (const Perm& p : members) inside += s.count(p) ? 1 : 0;
    if (inside != 0 && inside != static_cast<int>(members.size())) return false;
  }
  return true;
}

namespace {

// Total order on recording tableaux refining strict dominance of the sorted
// shapes: lex on partitions extends dominance, so a lambda-lex-descending
// primary key is valid; ties are broken per the requested scheme.
bool recording_before(const Filling& t, const Filling& s, LTiebreak tb) {
  Composition lt = lambda_sort(t.shape), ls = lambda_sort(s.shape);
  if (lt != ls) return lt.parts > ls.parts;
  if (tb == LTiebreak::ShapeLexThenRowWord) {
    if (t.shape != s.shape) return t.shape < s.shape;
    return row_word(t) < row_word(s);
  }
  return row_word(t) > row_word(s);
}

FiltrationReport build_filtration(const Composition& a, const Perm& lo,
                                  const Perm& hi, bool single_recording,
                                  LTiebreak tb) {
  FiltrationReport rep;
  rep.interval = interval(lo, hi);
  const std::vector<Perm>& elems = rep.interval.elements;

  std::vector<Signature> sigs;
  sigs.reserve(elems.size());
  for (const Perm& s : elems) sigs.push_back(twisted_signature(s));

  if (single_recording) {
    Filling expected = canonical(CanonicalKind::calT, reverse_comp(a));
    for (const Signature& sig : sigs)
      if (sig.recording != expected)
        throw certificate_error(
            "filtration_X: recording tableau is not constant on the interval");
  }

  std::vector<Filling> recordings;
  for (const Signature& sig : sigs)
    if (std::find(recordings.begin(), recordings.end(), sig.recording) ==
        recordings.end())
      recordings.push_back(sig.recording);
  std::sort(recordings.begin(), recordings.end(),
            [&](const Filling& t, const Filling& s) { return recording_before(t, s, tb); });

  for (const Filling& q : recordings) {
    std::vector<Composition> shapes;
    for (const Signature& sig : sigs)
      if (sig.recording == q &&
          std::find(shapes.begin(), shapes.end(), sig.shape) == shapes.end())
        shapes.push_back(sig.shape);
    std::sort(shapes.begin(), shapes.end());
    for (const Composition& g : shapes) {
      Stratum st;
      st.recording = q;
      st.gamma = g;
      for (std::size_t t = 0; t < elems.size(); ++t)
        if (sigs[t].recording == q && sigs[t].shape == g)
          st.members.push_back(elems[t]);
      rep.strata.push_back(std::move(st));
    }
  }

  // Verify the submodule chain and the stratum characteristics.
  CombModule mod = interval_module(lo, hi);
  std::vector<int> prefix, prev;
  rep.submodule_chain_ok = true;
  std::size_t covered = 0;
  for (const Stratum& st : rep.strata) {
    prev = prefix;
    for (const Perm& s : st.members) prefix.push_back(mod.index_of(perm_label(s)));
    covered += st.members.size();
    if (!is_basis_submodule(mod, prefix))
      throw certificate_error("filtration: stratum prefix is not action-closed");
    if (characteristic(mod, prefix, prev) != young_quasischur_F(st.gamma))
      throw certificate_error("filtration: stratum characteristic mismatch at shape " +
                              to_string(st.gamma));
    rep.quotient_characteristics.push_back(st.gamma);
  }
  if (covered != elems.size())
    throw internal_error("filtration: strata do not partition the interval");
  return rep;
}

}  // namespace

FiltrationReport filtration_V(const Composition& a, LTiebreak tb) {
  check_guard(a.size(), 8, "filtration_V");
  Perm lo = perm_from_word(row_word(canonical(CanonicalKind::calT, a)));
  Perm hi = perm_from_word(row_word(canonical(CanonicalKind::calT_prime, a)));
  return build_filtration(a, lo, hi, /*single_recording=*/false, tb);
}

FiltrationReport filtration_X(const Composition& a) {
  if (!is_shuffle_of_partition_and_ones(a))
    throw domain_error("filtration_X: composition must be a shuffle of a partition and ones");
  check_guard(a.size(), 8, "filtration_X");
  Perm lo = perm_from_word(row_word(canonical(CanonicalKind::sfT, a)));
  Perm hi = perm_from_word(row_word(canonical(CanonicalKind::sfT_prime, a)));
  return build_filtration(a, lo, hi, /*single_recording=*/true,
                          LTiebreak::ShapeLexThenRowWord);
}

std::vector<Perm> K_alpha(const Composition& a) {
  check_guard(a.size(), 8, "K_alpha");
  Filling expected_q = canonical(CanonicalKind::calT, reverse_comp(a));

  // Interval scan with both conditions.
  Perm lo = perm_from_word(row_word(canonical(CanonicalKind::calT, a)));
  Perm hi = perm_from_word(row_word(canonical(CanonicalKind::calT_prime, a)));
  std::vector<Perm> via_interval;
  for (const Perm& s : interval(lo, hi).elements) {
    Signature sig = twisted_signature(s);
    if (sig.shape == a && sig.recording == expected_q) via_interval.push_back(s);
  }

  // Immaculate-tableau scan with the shape condition alone.
  std::vector<Perm> via_sit;
  for (const Filling& t : enumerate(Family::SIT, a)) {
    Perm s = perm_from_word(row_word(t));
    if (twisted_signature(s).shape == a) via_sit.push_back(s);
  }
  std::sort(via_sit.begin(), via_sit.end());

  if (via_interval != via_sit)
    throw internal_error("K_alpha: interval scan and tableau scan disagree for " +
                         to_string(a));
  return via_interval;
}

CombModule Y_module(const Composition& a) {
  std::vector<Perm> k = K_alpha(a);
  std::vector<std::string> labels;
  for (const Perm& s : k) labels.push_back(perm_label(s));
  CombModule m = make_module(a.size(), std::move(labels));
  for (std::size_t b = 0; b < k.size(); ++b) {
    std::set<int> des = des_L(k[b]);
    for (int i = 1; i <= m.n - 1; ++i) {
      if (des.count(i)) {
        m.action[i - 1][b] = {CombModule::Kind::Fix, -1};
        continue;
      }
      auto it = m.index.find(perm_label(left_s(i, k[b])));
      if (it != m.index.end())
        m.action[i - 1][b] = {CombModule::Kind::Move, it->second};
      else
        m.action[i - 1][b] = {CombModule::Kind::Kill, -1};
    }
  }
  if (characteristic(m) != young_quasischur_F(a))
    throw certificate_error("Y_module: characteristic mismatch for " + to_string(a));
  return m;
}

SeqData seq12(const Composition& a) {
  if (!is_shuffle_of_partition_and_ones(a))
    throw domain_error("seq12: composition must be a shuffle of a partition and ones");
  SeqData out;
  int l = a.length();
  if (l == 0) {
    out.tilde_alpha = Composition{};
    return out;
  }

  int maxp = *std::max_element(a.parts.begin(), a.parts.end());
  int i = 1;
  while (a.parts[i - 1] != maxp) ++i;
  std::vector<Cell>& c1 = out.seq1;
  c1.push_back({i, a.parts[i - 1]});

  for (;;) {
    if (a.parts[i - 1] >= 3) {
      int j = 0;
      for (int t = i + 1; t <= l; ++t)
        if (a.parts[t - 1] >= a.parts[i - 1] - 1) {
          j = t;
          break;
        }
      if (j == 0) break;  // every later part is below a_i - 1
      c1.insert(c1.begin(), {j, a.parts[j - 1]});
      i = j;
    } else {
      int j = i;
      while (j + 1 <= l && a.parts[j] == a.parts[i - 1]) ++j;
      std::vector<Cell> pre;
      for (int t = j; t >= i + 1; --t) pre.push_back({t, a.parts[t - 1]});
      c1.insert(c1.begin(), pre.begin(), pre.end());

      // Peel the rows above the run, last partition-suffix first.
      std::vector<std::pair<int, int>> rows;  // (absolute row, remaining cells)
      for (int t = j + 1; t <= l; ++t) rows.push_back({t, a.parts[t - 1]});
      while (!rows.empty()) {
        std::size_t t = rows.size() - 1;
        while (t > 0 && rows[t - 1].second >= rows[t].second) --t;
        for (std::size_t r = rows.size(); r-- > t;)
          out.seq2.push_back({rows[r].first, rows[r].second});
        for (std::size_t r = t; r < rows.size(); ++r) rows[r].second -= 1;
        while (!rows.empty() && rows.back().second == 0) rows.pop_back();
      }
      break;
    }
  }

  out.removed = out.seq2;
  out.removed.insert(out.removed.end(), c1.begin(), c1.end());

  std::vector<int> remaining(a.parts);
  for (const Cell& c : out.removed) {
    if (remaining[c.row - 1] != c.col)
      throw internal_error("seq12: removed cell is not the last of its row");
    remaining[c.row - 1] -= 1;
  }
  std::vector<int> tilde;
  bool seen_zero = false;
  for (int v : remaining) {
    if (v == 0) {
      seen_zero = true;
      continue;
    }
    if (seen_zero)
      throw internal_error("seq12: emptied rows are not a suffix");
    tilde.push_back(v);
  }
  out.tilde_alpha = Composition(tilde);
  return out;
}

Filling tau_prime(const Composition& a) {
  if (!is_shuffle_of_partition_and_ones(a))
    throw domain_error("tau_prime: composition must be a shuffle of a partition and ones");
  std::vector<std::vector<int>> rows;
  for (int p : a.parts) rows.emplace_back(p, 0);
  Filling t(a, rows);
  if (a.length() == 0) return t;

  SeqData sd = seq12(a);
  if (!sd.tilde_alpha.empty()) {
    Filling inner = tau_prime(sd.tilde_alpha);
    for (int i = 1; i <= sd.tilde_alpha.length(); ++i)
      for (int j = 1; j <= sd.tilde_alpha.parts[i - 1]; ++j)
        t.at(i, j) = inner.at(i, j);
  }
  int n = a.size();
  for (std::size_t k = 0; k < sd.removed.size(); ++k)
    t.at(sd.removed[k].row, sd.removed[k].col) = n - static_cast<int>(k);
  return t;
}

bool K_characterizations(const Composition& a) {
  if (!is_shuffle_of_partition_and_ones(a))
    throw domain_error("K_characterizations: composition must be a shuffle");
  check_guard(a.size(), 8, "K_characterizations");

  std::vector<Perm> k = K_alpha(a);
  std::set<Perm> kset(k.begin(), k.end());

  std::set<Perm> via_nsyct;
  for (const Filling& t : enumerate(Family::nSYCT, a))
    via_nsyct.insert(perm_from_word(row_word(t)));

  Perm lo = perm_from_word(row_word(canonical(CanonicalKind::sfT, a)));
  Perm hi = perm_from_word(row_word(tau_prime(a)));
  std::set<Perm> via_interval;
  for (const Perm& s : interval(lo, hi).elements) via_interval.insert(s);

  if (kset != via_nsyct || kset != via_interval)
    throw certificate_error("K_characterizations: descriptions disagree for " +
                            to_string(a));
  return true;
}

SurjectionChain surjection_chain(const Composition& a) {
  check_guard(a.size(), 7, "surjection_chain");
  SurjectionChain sc;
  sc.v = std::make_unique<CombModule>(module_V(a));
  sc.x = std::make_unique<CombModule>(module_X(a));
  sc.y = std::make_unique<CombModule>(Y_module(a));
  sc.q = std::make_unique<CombModule>(canonical_quotient(a));

  sc.gamma = gamma_map(*sc.v, *sc.x);
  sc.eta = eta_map(*sc.x, *sc.q);

  auto word_image = [&](const Filling& t) -> int {
    auto it = sc.y->index.find(perm_label(perm_from_word(row_word(t))));
    return it == sc.y->index.end() ? -1 : it->second;
  };

  std::vector<Filling> sits = enumerate(Family::SIT, a);
  sc.delta.src = sc.v.get();
  sc.delta.dst = sc.y.get();
  sc.delta.assign.assign(sits.size(), -1);
  for (std::size_t b = 0; b < sits.size(); ++b)
    sc.delta.assign[b] = word_image(sits[b]);

  // Upsilon: reconstruct the tableau behind each reading word; send the
  // column-increasing ones to the quotient basis.
  sc.upsilon.src = sc.y.get();
  sc.upsilon.dst = sc.q.get();
  sc.upsilon.assign.assign(sc.y->dim(), -1);
  for (int b = 0; b < sc.y->dim(); ++b) {
    Perm s = parse_perm(sc.y->basis[b]);
    std::vector<std::vector<int>> rows;
    int pos = 0;
    for (int p : a.parts) {
      std::vector<int> row;
      for (int j = 0; j < p; ++j) row.push_back(s.word[pos + p - 1 - j]);
      rows.push_back(row);
      pos += p;
    }
    Filling t = make_filling(a, rows);
    auto it = sc.q->index.find(filling_label(t));
    if (it != sc.q->index.end()) sc.upsilon.assign[b] = it->second;
  }

  auto require = [](bool ok, const char* what) {
    if (!ok) throw certificate_error(std::string("surjection_chain: ") + what);
  };
  require(hom_check(sc.delta), "delta is not a homomorphism");
  require(is_surjective(sc.delta), "delta is not surjective");
  require(hom_check(sc.upsilon), "upsilon is not a homomorphism");
  require(is_surjective(sc.upsilon), "upsilon is not surjective");
  require(compose(sc.delta, sc.upsilon).assign == compose(sc.gamma, sc.eta).assign,
          "upsilon∘delta differs from eta∘gamma");

  if (is_shuffle_of_partition_and_ones(a)) {
    sc.has_delta_tilde = true;
    std::vector<Filling> sets = enumerate(Family::SET, a);
    sc.delta_tilde.src = sc.x.get();
    sc.delta_tilde.dst = sc.y.get();
    sc.delta_tilde.assign.assign(sets.size(), -1);
    for (std::size_t b = 0; b < sets.size(); ++b)
      sc.delta_tilde.assign[b] = word_image(sets[b]);
    require(hom_check(sc.delta_tilde), "delta~ is not a homomorphism");
    require(is_surjective(sc.delta_tilde), "delta~ is not surjective");
    require(compose(sc.gamma, sc.delta_tilde).assign == sc.delta.assign,
            "delta differs from delta~∘gamma");
  }

  sc.upsilon_is_iso = iso_check(sc.upsilon);
  return sc;
}

bool AppendixReport::all_ok() const {
  for (const Fact& f : facts)
    if (!f.ok) return false;
  return true;
}

namespace {

std::vector<int> reduced_word(const Perm& g, bool prefer_small) {
  std::vector<int> word;
  Perm cur = g;
  while (length(cur) > 0) {
    std::set<int> des = des_L(cur);
    int i = prefer_small ? *des.begin() : *des.rbegin();
    word.push_back(i);
    cur = left_s(i, cur);
  }
  return word;
}

}  // namespace

AppendixReport verify_appendix() {
  AppendixReport rep;
  auto fact = [&](const std::string& name, bool ok) {
    rep.facts.push_back({name, ok});
  };
  Composition alpha{5, 2, 1};
  Perm lo = parse_perm("54321768");
  Perm hi = parse_perm("87641523");

  fact("interval endpoints are the canonical extended-tableau words",
       perm_from_word(row_word(canonical(CanonicalKind::sfT, alpha))) == lo &&
           perm_from_word(row_word(canonical(CanonicalKind::sfT_prime, alpha))) == hi);

  CombModule mod = interval_module(lo, hi);
  fact("interval dimension 64", mod.dim() == 64);

  bool theta_ok = true;
  try {
    CombModule x = module_X(alpha);
    ModuleMap th = theta_X(x, mod);
    theta_ok = iso_check(th);
  } catch (const std::exception&) {
    theta_ok = false;
  }
  fact("X(5,2,1) isomorphic to the interval module", theta_ok);

  QSymElem ch = characteristic(mod);
  QSymElem schur = schur_F(alpha);
  QSymElem sum_qs = zero_elem(8);
  {
    std::set<Composition> rearr;
    for (const Composition& c : all_compositions(8))
      if (lambda_sort(c) == Composition{5, 2, 1}) rearr.insert(c);
    for (const Composition& c : rearr) sum_qs = add(sum_qs, quasischur_F(c));
    fact("six rearrangements of (5,2,1)", rearr.size() == 6);
  }
  fact("ch equals the Schur function", ch == schur);
  fact("Schur equals the quasi-Schur sum", schur == sum_qs);

  {
    std::vector<int> sink{mod.index_of(perm_label(hi))};
    bool ok = is_basis_submodule(mod, sink) &&
              characteristic(mod, sink, {}) == f_elem(Composition{1, 1, 2, 4});
    fact("sink is the irreducible of type (1,1,2,4)", ok);
  }

  {
    QSymElem qs125 = quasischur_F(Composition{1, 2, 5});
    fact("[F(1,1,2,4)] S(1,2,5) = 1", coeff(qs125, Composition{1, 1, 2, 4}) == 1);
    fact("[F(2,2,4)] S(1,2,5) = 1", coeff(qs125, Composition{2, 2, 4}) == 1);
    fact("[F(2,1,5)] S(1,2,5) = 0", coeff(qs125, Composition{2, 1, 5}) == 0);
    fact("[F(1,2,1,4)] S(1,2,5) = 0", coeff(qs125, Composition{1, 2, 1, 4}) == 0);
  }

  {
    Perm wI = w0_parabolic({1, 3, 5, 6, 7}, 8);
    fact("longest parabolic element is 21438765", to_digits(wI) == "21438765");
    std::vector<int> word1 = reduced_word(wI, true);
    std::vector<int> word2 = reduced_word(wI, false);
    bool orbit_ok = word1 != word2;
    int a_idx = mod.index_of("87421635");
    int b_idx = mod.index_of("87621435");
    for (int b = 0; b < mod.dim(); ++b) {
      std::optional<int> img1 = mod.apply_word(word1, b);
      std::optional<int> img2 = mod.apply_word(word2, b);
      if (img1 != img2) orbit_ok = false;
      if (img1 && *img1 != a_idx && *img1 != b_idx) orbit_ok = false;
    }
    fact("parabolic longest element maps everything into {0, 87421635, 87621435}",
         orbit_ok);
  }

  {
    CombModule L = interval_module(parse_perm("87621534"), hi);
    CombModule Lp = interval_module(parse_perm("87631425"), hi);
    fact("[F(2,1,5)] ch(L) = 1",
         coeff(characteristic(L), Composition{2, 1, 5}) == 1);
    fact("[F(1,2,1,4)] ch(L') = 1",
         coeff(characteristic(Lp), Composition{1, 2, 1, 4}) == 1);
  }

  return rep;
}

}  // namespace qhecke
