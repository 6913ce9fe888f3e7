#include "qhecke/json_io.hpp"

#include <json.hpp>

#include "qhecke/errors.hpp"
#include "qhecke/insertion.hpp"

namespace qhecke {

using nlohmann::json;

namespace {

json comp_j(const Composition& a) { return json(a.parts); }

Composition comp_of_j(const json& j) {
  std::vector<int> parts = j.get<std::vector<int>>();
  for (int p : parts)
    if (p < 1) throw domain_error("composition json: parts must be positive");
  return Composition(parts);
}

json filling_j(const Filling& t) {
  return json{{"shape", comp_j(t.shape)}, {"rows", t.rows}};
}

Filling filling_of_j(const json& j) {
  Composition shape = comp_of_j(j.at("shape"));
  auto rows = j.at("rows").get<std::vector<std::vector<int>>>();
  return make_filling(shape, rows);
}

std::string comp_key(const Composition& a) {
  std::string s;
  for (int i = 0; i < a.length(); ++i) {
    if (i) s += '.';
    s += std::to_string(a.parts[i]);
  }
  return s;
}

Composition parse_comp_key(const std::string& key) {
  std::vector<int> parts;
  std::string cur;
  for (char c : key + ".") {
    if (c == '.') {
      if (!cur.empty()) parts.push_back(std::stoi(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  return Composition(parts);
}

}  // namespace

std::string composition_to_json(const Composition& a) { return comp_j(a).dump(); }

Composition composition_from_json(const std::string& text) {
  return comp_of_j(json::parse(text));
}

std::string filling_to_json(const Filling& t) { return filling_j(t).dump(); }

Filling filling_from_json(const std::string& text) {
  return filling_of_j(json::parse(text));
}

std::string qsym_to_json(const QSymElem& x) {
  json coeffs = json::object();
  for (const auto& [a, c] : x.coeffs) coeffs[comp_key(a)] = c;
  return json{{"degree", x.degree}, {"coeffs", coeffs}}.dump();
}

QSymElem qsym_from_json(const std::string& text) {
  json j = json::parse(text);
  QSymElem x;
  x.degree = j.at("degree").get<int>();
  for (const auto& [key, val] : j.at("coeffs").items()) {
    long long c = val.get<long long>();
    if (c != 0) x.coeffs[parse_comp_key(key)] = c;
  }
  return x;
}

std::string module_to_json(const CombModule& m) {
  json action = json::object();
  for (int i = 1; i <= m.n - 1; ++i) {
    json row = json::object();
    for (int b = 0; b < m.dim(); ++b) {
      const CombModule::Outcome& o = m.out(i, b);
      switch (o.kind) {
        case CombModule::Kind::Fix: row[m.basis[b]] = "fix"; break;
        case CombModule::Kind::Kill: row[m.basis[b]] = "kill"; break;
        case CombModule::Kind::Move:
          row[m.basis[b]] = json{{"move", m.basis[o.target]}};
          break;
      }
    }
    action[std::to_string(i)] = row;
  }
  return json{{"n", m.n}, {"basis", m.basis}, {"action", action}}.dump();
}

CombModule module_from_json(const std::string& text) {
  json j = json::parse(text);
  CombModule m = make_module(j.at("n").get<int>(),
                             j.at("basis").get<std::vector<std::string>>());
  const json& action = j.at("action");
  for (int i = 1; i <= m.n - 1; ++i) {
    const json& row = action.at(std::to_string(i));
    for (int b = 0; b < m.dim(); ++b) {
      const json& o = row.at(m.basis[b]);
      if (o.is_string() && o == "fix")
        m.action[i - 1][b] = {CombModule::Kind::Fix, -1};
      else if (o.is_string() && o == "kill")
        m.action[i - 1][b] = {CombModule::Kind::Kill, -1};
      else
        m.action[i - 1][b] = {CombModule::Kind::Move,
                              m.index_of(o.at("move").get<std::string>())};
    }
  }
  return m;
}

std::string filtration_to_json(const FiltrationReport& rep) {
  json strata = json::array();
  for (const Stratum& st : rep.strata) {
    json members = json::array();
    for (const Perm& s : st.members) members.push_back(to_digits(s));
    strata.push_back(json{{"gamma", comp_j(st.gamma)},
                          {"recording", filling_j(st.recording)},
                          {"members", members}});
  }
  json checks{{"submodule_chain_ok", rep.submodule_chain_ok},
              {"strata_count", rep.strata.size()}};
  return json{{"interval", json{{"lo", to_digits(rep.interval.lo)},
                                {"hi", to_digits(rep.interval.hi)},
                                {"size", rep.interval.elements.size()}}},
              {"strata", strata},
              {"checks", checks}}
      .dump();
}

std::string insertion_trace_to_json(const InsertionTrace& tr) {
  json seq = json::array();
  for (const Cell& c : tr.sequence) seq.push_back(json{c.row, c.col});
  return json{{"result", filling_j(tr.result)},
              {"insertion_sequence", seq},
              {"new_cell", json{tr.new_cell.row, tr.new_cell.col}}}
      .dump();
}

}  // namespace qhecke
