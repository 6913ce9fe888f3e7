// Command line front end: insertion traces, shape prediction, basis
// expansion, module construction and export, filtration reports, and the
// verification suites.  Exit codes: 0 ok, 1 verification failure, 2 usage.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qhecke/errors.hpp"
#include "qhecke/filtration.hpp"
#include "qhecke/greene.hpp"
#include "qhecke/hecke.hpp"
#include "qhecke/insertion.hpp"
#include "qhecke/json_io.hpp"
#include "qhecke/qsym.hpp"
#include "qhecke/sweep.hpp"

using namespace qhecke;

namespace {

std::vector<int> parse_word(const std::string& text) {
  std::vector<int> w;
  if (text.find(',') != std::string::npos) {
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) w.push_back(std::stoi(tok));
  } else {
    for (char c : text) {
      if (c < '1' || c > '9')
        throw domain_error("bad word token '" + std::string(1, c) + "'");
      w.push_back(c - '0');
    }
  }
  return w;
}

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) throw domain_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw domain_error("cannot write " + path);
  out << content;
}

QSymElem parse_elem_spec(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw domain_error("element spec must look like dualimm:2,2,2");
  std::string kind = spec.substr(0, colon);
  Composition a = parse_composition(spec.substr(colon + 1));
  if (kind == "f") return f_elem(a);
  if (kind == "schur") return schur_F(a);
  if (kind == "qs") return quasischur_F(a);
  if (kind == "yqs") return young_quasischur_F(a);
  if (kind == "dualimm") return dual_immaculate_F(a);
  if (kind == "extschur") return extended_schur_F(a);
  throw domain_error("unknown element kind '" + kind + "'");
}

int cmd_insert(const std::string& tableau, int letter, bool trace, bool json) {
  Filling t;
  std::string text = slurp(tableau);
  if (text.find_first_not_of(" \t\r\n") != std::string::npos)
    t = filling_from_json(text);
  InsertionTrace tr = insert(t, letter);
  if (json) {
    std::cout << insertion_trace_to_json(tr) << "\n";
    return 0;
  }
  std::cout << pretty(tr.result);
  std::cout << "new cell: (" << tr.new_cell.row << "," << tr.new_cell.col << ")\n";
  if (trace) {
    std::cout << "insertion sequence:";
    for (const Cell& c : tr.sequence) std::cout << " (" << c.row << "," << c.col << ")";
    std::cout << "\n";
  }
  return 0;
}

int cmd_rsk_hat(const std::string& word, const std::string& top, bool json) {
  TwoLineArray w;
  if (top.empty()) {
    w = two_line_from_word(parse_word(word));
  } else {
    w.top = parse_word(top);
    w.bottom = parse_word(word);
  }
  PQPair pq = build_PQ(w);
  if (json) {
    std::cout << "{\"P\":" << filling_to_json(pq.P)
              << ",\"Q\":" << filling_to_json(pq.Q) << "}\n";
    return 0;
  }
  std::cout << "P:\n" << pretty(pq.P) << "shape: " << to_string(pq.P.shape) << "\n";
  std::cout << "Q:\n" << pretty(pq.Q) << "shape: " << to_string(pq.Q.shape) << "\n";
  return 0;
}

int cmd_shape(const std::string& word, bool oracle, bool json) {
  std::vector<int> w = parse_word(word);
  Composition predicted = predict_shape(w);
  Composition lam = schensted_shape(w);
  std::ostringstream chain;
  for (int k = 1; k <= lam.length(); ++k) {
    std::vector<int> m = mies(w, k);
    chain << "mIES_" << k << " = {";
    for (std::size_t i = 0; i < m.size(); ++i) chain << (i ? "," : "") << m[i];
    chain << "}\n";
  }
  if (json) {
    std::cout << "{\"lambda\":" << composition_to_json(lam)
              << ",\"shape\":" << composition_to_json(predicted) << "}\n";
  } else {
    std::cout << "lambda = " << to_string(lam) << "\n"
              << chain.str() << "predicted shape = " << to_string(predicted) << "\n";
  }
  if (oracle) {
    Composition actual = build_PQ(two_line_from_word(w)).P.shape;
    if (actual != predicted) {
      std::cerr << "oracle mismatch: insertion gives " << to_string(actual) << "\n";
      return 1;
    }
    std::cout << "oracle: insertion agrees\n";
  }
  return 0;
}

int cmd_expand(const std::string& elem, const std::string& basis, bool json) {
  QSymElem x = parse_elem_spec(elem);
  ExpandBasis b;
  if (basis == "qs")
    b = ExpandBasis::QS;
  else if (basis == "yqs")
    b = ExpandBasis::YQS;
  else
    throw domain_error("basis must be qs or yqs");
  auto exp = expand_in(x, b);
  if (!exp) {
    std::cerr << "element is not in the integer span of the basis\n";
    return 1;
  }
  if (json) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [a, c] : exp->coeffs) {
      os << (first ? "" : ",") << "\"" << to_string(a) << "\":" << c;
      first = false;
    }
    os << "}";
    std::cout << os.str() << "\n";
  } else {
    for (const auto& [a, c] : exp->coeffs)
      std::cout << to_string(a) << ": " << c << "\n";
    std::cout << (exp->nonnegative ? "nonnegative" : "has negative coefficients")
              << "\n";
  }
  return 0;
}

int cmd_module(const std::string& kind, const std::string& alpha,
               const std::string& lo, const std::string& hi, bool json,
               const std::string& dot) {
  CombModule m;
  if (kind == "interval") {
    m = interval_module(parse_perm(lo), parse_perm(hi));
  } else {
    Composition a = parse_composition(alpha);
    if (kind == "V")
      m = module_V(a);
    else if (kind == "X")
      m = module_X(a);
    else if (kind == "Y")
      m = Y_module(a);
    else if (kind == "canonical")
      m = canonical_quotient(a);
    else
      throw domain_error("module kind must be V, X, Y, canonical, or interval");
  }
  if (!verify_relations(m)) {
    std::cerr << "relation check failed\n";
    return 1;
  }
  if (!dot.empty()) write_file(dot, to_dot(m));
  if (json)
    std::cout << module_to_json(m) << "\n";
  else
    std::cout << "dim " << m.dim() << ", ch = " << to_string(characteristic(m))
              << "\n";
  return 0;
}

int cmd_filtrate(const std::string& module, const std::string& alpha,
                 const std::string& dot, const std::string& json_path,
                 bool json) {
  Composition a = parse_composition(alpha);
  FiltrationReport rep =
      module == "X" ? filtration_X(a) : filtration_V(a);
  std::string j = filtration_to_json(rep);
  if (!json_path.empty()) write_file(json_path, j);
  if (!dot.empty())
    write_file(dot, to_dot(interval_module(rep.interval.lo, rep.interval.hi)));
  if (json) {
    std::cout << j << "\n";
  } else {
    std::cout << "interval [" << to_digits(rep.interval.lo) << ", "
              << to_digits(rep.interval.hi) << "], "
              << rep.interval.elements.size() << " elements, "
              << rep.strata.size() << " strata\n";
    for (const Stratum& st : rep.strata) {
      std::cout << "  gamma = " << to_string(st.gamma) << ", members:";
      for (const Perm& s : st.members) std::cout << " " << to_digits(s);
      std::cout << "\n";
    }
  }
  return 0;
}

int cmd_kalpha(const std::string& alpha, bool json) {
  Composition a = parse_composition(alpha);
  std::vector<Perm> k = K_alpha(a);
  if (json) {
    std::cout << "[";
    for (std::size_t i = 0; i < k.size(); ++i)
      std::cout << (i ? "," : "") << "\"" << to_digits(k[i]) << "\"";
    std::cout << "]\n";
  } else {
    for (const Perm& s : k) std::cout << to_digits(s) << "\n";
  }
  return 0;
}

int cmd_verify_appendix() {
  AppendixReport rep = verify_appendix();
  for (const auto& fact : rep.facts)
    std::cout << (fact.ok ? "[PASS] " : "[FAIL] ") << fact.name << "\n";
  return rep.all_ok() ? 0 : 1;
}

int cmd_sweep(int n) {
  auto results = run_sweep(n);
  bool ok = true;
  for (const SweepResult& r : results) {
    std::cout << (r.ok ? "[PASS] " : "[FAIL] ") << r.name;
    if (!r.ok) std::cout << " :: " << r.detail;
    std::cout << "\n";
    ok = ok && r.ok;
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tableau insertion, 0-Hecke modules, and distinguished filtrations"};
  app.require_subcommand(1);

  std::string tableau = "-", word, top, alpha, elem, basis = "yqs";
  std::string lo, hi, kind = "V", module = "V", dot, json_path;
  int letter = 1, sweep_n = 6;
  bool trace = false, json = false, oracle = false;

  auto* c_insert = app.add_subcommand("insert", "insert a letter into a tableau");
  c_insert->add_option("--tableau", tableau, "filling JSON file or - for stdin");
  c_insert->add_option("--letter", letter, "letter to insert")->required();
  c_insert->add_flag("--trace", trace, "print the insertion sequence");
  c_insert->add_flag("--json", json);

  auto* c_rsk = app.add_subcommand("rsk-hat", "two-line insertion pair");
  c_rsk->add_option("--word", word)->required();
  c_rsk->add_option("--top", top, "top line for a general two-line array");
  c_rsk->add_flag("--json", json);

  auto* c_shape = app.add_subcommand("shape", "predicted insertion shape");
  c_shape->add_option("--word", word)->required();
  c_shape->add_flag("--oracle", oracle, "recompute via insertion and compare");
  c_shape->add_flag("--json", json);

  auto* c_expand = app.add_subcommand("expand", "expand into quasi-Schur bases");
  c_expand->add_option("--elem", elem, "e.g. dualimm:2,2,2")->required();
  c_expand->add_option("--basis", basis, "qs or yqs");
  c_expand->add_flag("--json", json);

  auto* c_module = app.add_subcommand("module", "build and export a module");
  c_module->add_option("--kind", kind, "V, X, Y, canonical, interval");
  c_module->add_option("--alpha", alpha);
  c_module->add_option("--lo", lo);
  c_module->add_option("--hi", hi);
  c_module->add_option("--dot", dot, "write a DOT action graph");
  c_module->add_flag("--json", json);

  auto* c_filtrate = app.add_subcommand("filtrate", "distinguished filtration report");
  c_filtrate->add_option("--module", module, "V or X");
  c_filtrate->add_option("--alpha", alpha)->required();
  c_filtrate->add_option("--dot", dot);
  c_filtrate->add_option("--json-out", json_path, "write the JSON report to a file");
  c_filtrate->add_flag("--json", json);

  auto* c_kalpha = app.add_subcommand("kalpha", "list the K set of a composition");
  c_kalpha->add_option("--alpha", alpha)->required();
  c_kalpha->add_flag("--json", json);

  app.add_subcommand("verify-appendix", "check the finite certificate");

  auto* c_sweep = app.add_subcommand("sweep", "bulk property suites");
  c_sweep->add_option("--n", sweep_n, "maximum size (default 6)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (c_insert->parsed()) return cmd_insert(tableau, letter, trace, json);
    if (c_rsk->parsed()) return cmd_rsk_hat(word, top, json);
    if (c_shape->parsed()) return cmd_shape(word, oracle, json);
    if (c_expand->parsed()) return cmd_expand(elem, basis, json);
    if (c_module->parsed()) return cmd_module(kind, alpha, lo, hi, json, dot);
    if (c_filtrate->parsed())
      return cmd_filtrate(module, alpha, dot, json_path, json);
    if (c_kalpha->parsed()) return cmd_kalpha(alpha, json);
    if (app.get_subcommand("verify-appendix")->parsed()) return cmd_verify_appendix();
    if (c_sweep->parsed()) return cmd_sweep(sweep_n);
  } catch (const domain_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
