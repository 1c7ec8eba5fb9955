#include "hypdet/io.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include "hypdet/sturm.hpp"

namespace hypdet::io {

namespace {

using Exponents = std::vector<int>;
using TermMap = std::map<Exponents, Rational>;

Json terms_json(const std::vector<std::string>& vars, const TermMap& terms) {
  Json j;
  j["vars"] = vars;
  Json list = Json::array();
  for (const auto& [e, c] : terms) {
    if (c == 0) continue;
    list.push_back(Json{{"c", to_string(c)}, {"e", e}});
  }
  j["terms"] = std::move(list);
  return j;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string("expected integer for ") + what);
  return j.get<int>();
}

Rational as_rational(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ParseError("expected rational string");
}

std::vector<std::string> string_list(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string("expected list for ") + what);
  std::vector<std::string> out;
  for (const auto& v : j) {
    if (!v.is_string()) throw ParseError(std::string("expected strings in ") + what);
    out.push_back(v.get<std::string>());
  }
  return out;
}

// Terms re-indexed to the expected variable order.
TermMap read_terms(const Json& j, const std::vector<std::string>& expected) {
  const std::vector<std::string> vars = string_list(field(j, "vars"), "vars");
  std::vector<std::size_t> slot;
  for (const auto& v : vars) {
    auto it = std::find(expected.begin(), expected.end(), v);
    if (it == expected.end()) throw ParseError("unexpected variable '" + v + "'");
    const auto s = static_cast<std::size_t>(it - expected.begin());
    if (std::find(slot.begin(), slot.end(), s) != slot.end()) throw ParseError("duplicate variable '" + v + "'");
    slot.push_back(s);
  }
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) throw ParseError("terms must be a list");
  TermMap out;
  for (const auto& t : terms) {
    const Json& e = field(t, "e");
    if (!e.is_array() || e.size() != vars.size()) throw ParseError("exponent vector length differs from vars");
    Exponents ex(expected.size(), 0);
    for (std::size_t i = 0; i < vars.size(); ++i) {
      const int v = as_int(e[i], "exponent");
      if (v < 0) throw ParseError("negative exponent");
      ex[slot[i]] = v;
    }
    out[ex] += as_rational(field(t, "c"));
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

Json rationals(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

std::vector<Rational> rationals_from(const Json& j) {
  if (!j.is_array()) throw ParseError("expected list of rationals");
  std::vector<Rational> out;
  for (const auto& x : j) out.push_back(as_rational(x));
  return out;
}

Json ratfunc_json(const RatFunc& r) {
  if (r.is_polynomial()) return to_json(r.num() * (1 / r.den().leading()));
  return Json{{"num", to_json(r.num())}, {"den", to_json(r.den())}};
}

RatFunc ratfunc_from(const Json& j) {
  if (j.is_object() && j.contains("num")) {
    UniPoly den = j.contains("den") ? uni_from_json(j.at("den")) : UniPoly::constant(1);
    if (den.is_zero()) throw ParseError("zero denominator");
    return RatFunc(uni_from_json(j.at("num")), den);
  }
  return RatFunc(uni_from_json(j), UniPoly::constant(1));
}

Json numeric_json(const NumericPolyMatrix& m) {
  Json entries = Json::array();
  for (const auto& e : m.entries) entries.push_back(e);
  return Json{{"d", m.d}, {"entries", entries}};
}

NumericPolyMatrix numeric_from(const Json& j) {
  NumericPolyMatrix m;
  m.d = as_int(field(j, "d"), "d");
  const Json& e = field(j, "entries");
  if (!e.is_array() || static_cast<int>(e.size()) != m.d * m.d) throw ParseError("numeric matrix has wrong entry count");
  for (const auto& x : e) m.entries.push_back(x.get<std::vector<double>>());
  return m;
}

std::vector<int> int_list(const Json& j) {
  if (!j.is_array()) throw ParseError("expected integer list");
  std::vector<int> out;
  for (const auto& x : j) out.push_back(as_int(x, "list entry"));
  return out;
}

}  // namespace

Json to_json(const UniPoly& p, const std::string& var) {
  TermMap t;
  for (int i = 0; i <= p.degree(); ++i) t[{i}] = p.coeff(i);
  return terms_json({var}, t);
}

Json to_json(const BiPoly& f) {
  TermMap t;
  for (int j = 0; j <= f.degree_t(); ++j)
    for (int i = 0; i <= f.coeff(j).degree(); ++i) t[{i, j}] = f.coeff(j).coeff(i);
  return terms_json({"X", "T"}, t);
}

Json to_json(const TriPoly& f) {
  TermMap t;
  for (const auto& [e, c] : f.terms()) t[{e[0], e[1], e[2]}] = c;
  return terms_json({"X", "Y", "Z"}, t);
}

std::vector<std::string> declared_vars(const Json& j) { return string_list(field(j, "vars"), "vars"); }

UniPoly uni_from_json(const Json& j, const std::string& var) {
  TermMap t = read_terms(j, {var});
  int deg = t.empty() ? -1 : t.rbegin()->first[0];
  std::vector<Rational> c(static_cast<std::size_t>(deg + 1));
  for (const auto& [e, v] : t) c[static_cast<std::size_t>(e[0])] = v;
  return UniPoly(std::move(c));
}

BiPoly bi_from_json(const Json& j) {
  TermMap t = read_terms(j, {"X", "T"});
  BiPoly f;
  for (const auto& [e, v] : t) f += BiPoly::monomial(v, e[0], e[1]);
  return f;
}

TriPoly tri_from_json(const Json& j) {
  TermMap t = read_terms(j, {"X", "Y", "Z"});
  TriPoly f;
  for (const auto& [e, v] : t) f += TriPoly::monomial(v, {e[0], e[1], e[2]});
  return f;
}

Json to_json(const PolyMatrix& m) {
  Json entries = Json::array();
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) entries.push_back(to_json(m(i, j)));
  return Json{{"d", m.rows()}, {"entries", entries}};
}

Json to_json(const RatMatrix& m) {
  Json entries = Json::array();
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) entries.push_back(to_string(m(i, j)));
  return Json{{"d", m.rows()}, {"entries", entries}};
}

PolyMatrix poly_matrix_from_json(const Json& j) {
  const int d = as_int(field(j, "d"), "d");
  const Json& e = field(j, "entries");
  if (d < 0 || !e.is_array() || static_cast<int>(e.size()) != d * d) throw ParseError("matrix has wrong entry count");
  PolyMatrix m(d, d);
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k) {
      const Json& x = e[static_cast<std::size_t>(i * d + k)];
      m(i, k) = x.is_object() ? uni_from_json(x) : UniPoly::constant(as_rational(x));
    }
  return m;
}

RatMatrix rat_matrix_from_json(const Json& j) {
  PolyMatrix p = poly_matrix_from_json(j);
  RatMatrix m(p.rows(), p.cols());
  for (int i = 0; i < p.rows(); ++i)
    for (int k = 0; k < p.cols(); ++k) {
      if (p(i, k).degree() > 0) throw ParseError("expected constant matrix entries");
      m(i, k) = p(i, k).coeff(0);
    }
  return m;
}

Json to_json(const RootCertificate& c) {
  Json j;
  j["verdict"] = to_string(c.verdict);
  Json w;
  Json minors = Json::array();
  for (const auto& m : c.minors) minors.push_back(Json{{"rows", m.rows}, {"minor", to_json(m.minor)}, {"property", m.property}});
  w["minors"] = minors;
  if (c.rejection) {
    const auto& r = *c.rejection;
    Json rj;
    if (r.x) rj["x"] = to_string(*r.x);
    if (r.x_interval) rj["x_interval"] = Json::array({to_string(r.x_interval->lo), to_string(r.x_interval->hi)});
    rj["real_roots"] = r.real_roots;
    rj["distinct_roots"] = r.distinct_roots;
    if (!r.minor_rows.empty()) {
      rj["minor_rows"] = r.minor_rows;
      rj["minor"] = to_json(r.minor);
    }
    w["rejection"] = rj;
  }
  j["witnesses"] = w;
  return j;
}

RootCertificate certificate_from_json(const Json& j) {
  RootCertificate c;
  try {
    c.verdict = parse_verdict(field(j, "verdict").get<std::string>());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
  const Json& w = field(j, "witnesses");
  if (w.contains("minors"))
    for (const auto& m : w.at("minors"))
      c.minors.push_back({int_list(field(m, "rows")), uni_from_json(field(m, "minor")), field(m, "property").get<std::string>()});
  if (w.contains("rejection")) {
    const Json& rj = w.at("rejection");
    RejectionWitness r;
    if (rj.contains("x")) r.x = as_rational(rj.at("x"));
    if (rj.contains("x_interval")) {
      auto v = rationals_from(rj.at("x_interval"));
      if (v.size() != 2) throw ParseError("x_interval needs two endpoints");
      r.x_interval = RootInterval{v[0], v[1]};
    }
    r.real_roots = as_int(field(rj, "real_roots"), "real_roots");
    r.distinct_roots = as_int(field(rj, "distinct_roots"), "distinct_roots");
    if (rj.contains("minor_rows")) {
      r.minor_rows = int_list(rj.at("minor_rows"));
      r.minor = uni_from_json(field(rj, "minor"));
    }
    c.rejection = r;
  }
  return c;
}

Json to_json(const PerturbTranscript& t) {
  Json j;
  j["input"] = to_json(t.input);
  j["k"] = t.k;
  j["d"] = t.d;
  j["epsilon0"] = to_string(t.epsilon0);
  j["budget"] = t.budget;
  Json stages = Json::array();
  for (const auto& s : t.stages) {
    Json v;
    for (const auto& [name, ok] : s.verdicts) v[name] = ok;
    stages.push_back(Json{{"name", s.name},
                          {"op", s.op},
                          {"epsilon", to_string(s.epsilon)},
                          {"skipped", s.skipped},
                          {"attempts", s.attempts},
                          {"passed", s.passed},
                          {"verdicts", v}});
  }
  j["stages"] = stages;
  j["output"] = to_json(t.output);
  j["distance"] = to_string(t.distance);
  return j;
}

PerturbTranscript transcript_from_json(const Json& j) {
  try {
    PerturbTranscript t;
    t.input = bi_from_json(field(j, "input"));
    t.output = bi_from_json(field(j, "output"));
    t.k = as_int(field(j, "k"), "k");
    t.d = as_int(field(j, "d"), "d");
    t.epsilon0 = as_rational(field(j, "epsilon0"));
    t.budget = as_int(field(j, "budget"), "budget");
    t.distance = as_rational(field(j, "distance"));
    for (const auto& s : field(j, "stages")) {
      StageRecord r;
      r.name = field(s, "name").get<std::string>();
      r.op = field(s, "op").get<std::string>();
      r.epsilon = as_rational(field(s, "epsilon"));
      r.skipped = field(s, "skipped").get<bool>();
      r.attempts = as_int(field(s, "attempts"), "attempts");
      r.passed = field(s, "passed").get<bool>();
      if (s.contains("verdicts"))
        for (const auto& [name, ok] : s.at("verdicts").items()) r.verdicts[name] = ok.get<bool>();
      t.stages.push_back(std::move(r));
    }
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
}

Json to_json(const IdealWitness& w) {
  Json basis = Json::array();
  for (const auto& b : w.basis) {
    Json coords = Json::array();
    for (const auto& c : b.coords()) coords.push_back(ratfunc_json(c));
    basis.push_back(coords);
  }
  Json c = Json::array();
  for (const auto& x : w.c.coords()) c.push_back(ratfunc_json(x));
  return Json{{"modulus", to_json(w.modulus->poly())}, {"basis", basis}, {"c", c}};
}

IdealWitness witness_from_json(const Json& j) {
  IdealWitness w;
  BiPoly f = bi_from_json(field(j, "modulus"));
  if (!f.is_monic_t() || f.degree_t() < 1) throw ParseError("witness modulus must be monic in T");
  w.modulus = make_modulus(f);
  const auto d = static_cast<std::size_t>(f.degree_t());
  auto elem = [&](const Json& v) {
    if (!v.is_array() || v.size() != d) throw ParseError("witness vectors need one coordinate per power of alpha");
    std::vector<RatFunc> coords;
    for (const auto& c : v) coords.push_back(ratfunc_from(c));
    return QuotElem(w.modulus, std::move(coords));
  };
  const Json& basis = field(j, "basis");
  if (!basis.is_array() || basis.size() != d) throw ParseError("witness basis must have d vectors");
  for (const auto& b : basis) w.basis.push_back(elem(b));
  w.c = elem(field(j, "c"));
  return w;
}

Json to_json(const DSymCertificate& c, const NumericPolyMatrix* numeric) {
  Json j{{"matrix", to_json(c.m)}, {"D", rationals(c.d)}};
  if (numeric) {
    Json n = numeric_json(*numeric);
    n["precision"] = "binary64";
    j["numeric"] = n;
  }
  return j;
}

DSymCertificate dsym_from_json(const Json& j) {
  DSymCertificate c{poly_matrix_from_json(field(j, "matrix")), rationals_from(field(j, "D"))};
  if (static_cast<int>(c.d.size()) != c.m.rows()) throw ParseError("D has wrong length");
  return c;
}

Json to_json(const Representation& r) {
  Json j;
  j["kind"] = to_string(r.kind);
  j["exact"] = r.exact;
  if (r.exact) {
    j["matrix"] = to_json(r.matrix);
    if (r.kind == RepKind::d_symmetric) j["D"] = rationals(r.dvec);
  }
  j["numeric"] = numeric_json(r.numeric);
  if (!r.exact) j["residual"] = r.residual;
  Json prov = Json::array();
  for (const auto& p : r.provenance)
    prov.push_back(Json{{"factor", to_json(p.factor)}, {"multiplicity", p.multiplicity}, {"method", p.method}, {"exact", p.exact}});
  j["provenance"] = prov;
  return j;
}

Representation representation_from_json(const Json& j) {
  try {
    Representation r;
    const std::string kind = field(j, "kind").get<std::string>();
    if (kind == "exact_symmetric") r.kind = RepKind::exact_symmetric;
    else if (kind == "d_symmetric") r.kind = RepKind::d_symmetric;
    else throw ParseError("unknown representation kind '" + kind + "'");
    r.exact = j.value("exact", true);
    if (r.exact) {
      r.matrix = poly_matrix_from_json(field(j, "matrix"));
      if (r.kind == RepKind::d_symmetric) r.dvec = rationals_from(field(j, "D"));
      r.numeric = to_numeric(r.matrix);
    }
    if (j.contains("numeric")) r.numeric = numeric_from(j.at("numeric"));
    else if (!r.exact) throw ParseError("numeric representation without entries");
    r.residual = j.value("residual", 0.0);
    if (j.contains("provenance"))
      for (const auto& p : j.at("provenance"))
        r.provenance.push_back({bi_from_json(field(p, "factor")), as_int(field(p, "multiplicity"), "multiplicity"),
                                field(p, "method").get<std::string>(), p.value("exact", true)});
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
}

Json to_json(const PencilRep& p) {
  Json j;
  j["direction"] = rationals({p.direction[0], p.direction[1], p.direction[2]});
  j["scale"] = to_string(p.scale);
  j["exact"] = p.exact;
  if (p.exact) {
    j["A"] = to_json(p.a);
    j["B"] = to_json(p.b);
    j["C"] = to_json(p.c);
  }
  j["numeric"] = Json{{"d", p.dim}, {"A", p.numeric_a}, {"B", p.numeric_b}, {"C", p.numeric_c}};
  return j;
}

PencilRep pencil_from_json(const Json& j) {
  try {
    PencilRep p;
    auto dir = rationals_from(field(j, "direction"));
    if (dir.size() != 3) throw ParseError("direction needs three coordinates");
    p.direction = {dir[0], dir[1], dir[2]};
    p.scale = as_rational(field(j, "scale"));
    p.exact = j.value("exact", true);
    if (p.exact) {
      p.a = rat_matrix_from_json(field(j, "A"));
      p.b = rat_matrix_from_json(field(j, "B"));
      p.c = rat_matrix_from_json(field(j, "C"));
      p.dim = p.a.rows();
      if (p.b.rows() != p.dim || p.c.rows() != p.dim) throw ParseError("pencil matrices differ in size");
      auto flat = [](const RatMatrix& m) {
        std::vector<double> v;
        for (int i = 0; i < m.rows(); ++i)
          for (int k = 0; k < m.cols(); ++k) v.push_back(m(i, k).get_d());
        return v;
      };
      p.numeric_a = flat(p.a);
      p.numeric_b = flat(p.b);
      p.numeric_c = flat(p.c);
    } else {
      const Json& n = field(j, "numeric");
      p.dim = as_int(field(n, "d"), "d");
      p.numeric_a = field(n, "A").get<std::vector<double>>();
      p.numeric_b = field(n, "B").get<std::vector<double>>();
      p.numeric_c = field(n, "C").get<std::vector<double>>();
      const auto sz = static_cast<std::size_t>(p.dim * p.dim);
      if (p.numeric_a.size() != sz || p.numeric_b.size() != sz || p.numeric_c.size() != sz)
        throw ParseError("numeric pencil has wrong entry count");
    }
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
}

void write_plot_data(std::ostream& out, const std::vector<std::pair<std::string, BiPoly>>& series, double lo,
                     double hi, int samples) {
  int width = 0;
  for (const auto& s : series) width = std::max(width, s.second.degree_t());
  out << "series,x";
  for (int i = 1; i <= width; ++i) out << ",root_" << i;
  out << '\n' << std::setprecision(12);
  for (const auto& [name, f] : series)
    for (int s = 0; s < samples; ++s) {
      const double x = samples == 1 ? lo : lo + (hi - lo) * s / (samples - 1);
      std::vector<double> roots = approximate_real_roots(f.eval_x(Rational(x)));
      out << name << ',' << x;
      for (int i = 0; i < width; ++i) {
        out << ',';
        if (i < static_cast<int>(roots.size())) out << roots[static_cast<std::size_t>(i)];
      }
      out << '\n';
    }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed document: ") + e.what());
  }
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

void write_file_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write '" + tmp.string() + "'");
    out << content;
    if (!out.flush()) throw Error("write failed for '" + tmp.string() + "'");
  }
  fs::rename(tmp, target);
}

}  // namespace hypdet::io
