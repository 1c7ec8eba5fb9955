#include "hypdet/nuij.hpp"

#include <sstream>

#include "hypdet/real_roots.hpp"
#include "hypdet/sturm.hpp"

namespace hypdet {

LaurentPoly::LaurentPoly(const BiPoly& f) {
  for (int i = 0; i <= f.degree_t(); ++i) {
    const UniPoly& a = f.t_coefficients()[static_cast<std::size_t>(i)];
    for (int j = 0; j <= a.degree(); ++j) add_term(j, i, a.coeff(j));
  }
}

LaurentPoly LaurentPoly::monomial(const Rational& c, int x_exp, int t_exp) {
  LaurentPoly p;
  p.add_term(x_exp, t_exp, c);
  return p;
}

void LaurentPoly::add_term(int x_exp, int t_exp, const Rational& c) {
  if (c == 0) return;
  auto key = std::make_pair(x_exp, t_exp);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Rational LaurentPoly::coeff(int x_exp, int t_exp) const {
  auto it = terms_.find({x_exp, t_exp});
  return it == terms_.end() ? Rational(0) : it->second;
}

bool LaurentPoly::in_inverse_x() const {
  for (const auto& [e, c] : terms_)
    if (e.first > 0) return false;
  return true;
}

UniPoly LaurentPoly::at_infinity() const {
  if (!in_inverse_x()) throw DomainError("at_infinity: positive power of X present");
  std::vector<Rational> v;
  for (const auto& [e, c] : terms_) {
    if (e.first != 0) continue;
    if (v.size() <= static_cast<std::size_t>(e.second)) v.resize(static_cast<std::size_t>(e.second) + 1);
    v[static_cast<std::size_t>(e.second)] = c;
  }
  return UniPoly(std::move(v));
}

LaurentPoly LaurentPoly::d_t() const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_)
    if (e.second > 0) r.add_term(e.first, e.second - 1, c * e.second);
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
  return r;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << '-';
    first = false;
    Rational mag = abs(c);
    bool star = false;
    if (mag != 1 || (e.first == 0 && e.second == 0)) {
      os << hypdet::to_string(mag);
      star = true;
    }
    if (e.first != 0) {
      os << (star ? "*" : "") << "X";
      if (e.first != 1) os << '^' << (e.first < 0 ? "(" + std::to_string(e.first) + ")" : std::to_string(e.first));
      star = true;
    }
    if (e.second != 0) {
      os << (star ? "*" : "") << "T";
      if (e.second != 1) os << '^' << e.second;
    }
  }
  return os.str();
}

BiPoly apply_P(const BiPoly& g, const UniPoly& a) { return g + a * g.d_t(); }

UniPoly apply_P(const UniPoly& g, const Rational& a) { return g + g.derivative() * a; }

LaurentPoly apply_P(const LaurentPoly& g, const LaurentPoly& a) { return g + a * g.d_t(); }

LaurentPoly apply_Q(const BiPoly& g, int k, int d) {
  if (g.degree_t() > d) throw DomainError("apply_Q: T-degree exceeds d");
  LaurentPoly r;
  for (int i = 0; i <= g.degree_t(); ++i) {
    const UniPoly& a = g.t_coefficients()[static_cast<std::size_t>(i)];
    for (int j = 0; j <= a.degree(); ++j)
      r += LaurentPoly::monomial(a.coeff(j), j + k * i - k * d, i);
  }
  return r;
}

Rational coefficient_distance(const BiPoly& a, const BiPoly& b) {
  BiPoly diff = a - b;
  Rational m = 0;
  for (const auto& c : diff.t_coefficients()) m = std::max(m, max_abs_coeff(c));
  return m;
}

namespace {

const char* const kStageNames[] = {"M1", "M2", "M3", "M4"};

std::string stage_operator(int stage) {
  switch (stage) {
    case 1:
      return "P_eps^(d-1)";
    case 2:
      return "P_(eps*X^k)^(d-1)";
    case 3:
      return "f+eps*T";
    default:
      return "f+eps";
  }
}

BiPoly apply_stage(const BiPoly& g, int stage, const Rational& eps, int k, int d) {
  BiPoly out = g;
  switch (stage) {
    case 1:
      for (int i = 0; i < d - 1; ++i) out = apply_P(out, UniPoly::constant(eps));
      break;
    case 2:
      for (int i = 0; i < d - 1; ++i) out = apply_P(out, UniPoly::monomial(eps, k));
      break;
    case 3:
      out += BiPoly::monomial(eps, 0, 1);
      break;
    default:
      out += BiPoly::constant(eps);
      break;
  }
  return out;
}

bool partials_coprime(const BiPoly& g, int k) {
  BiPoly gx = g.d_x(), gt = g.d_t();
  if (gx.is_zero()) return k == 0;
  if (gt.is_zero()) return false;
  if (resultant_t(gx, gt).is_zero()) return false;
  return gcd(content_x(gx), content_x(gt)).degree() == 0;
}

}  // namespace

std::map<std::string, bool> stage_verdicts(const BiPoly& g, int stage, int k, int d) {
  std::map<std::string, bool> v;
  v["grading"] = grading_member(g, k, d) && g.is_monic_t() && g.degree_t() == d;
  if (!v["grading"]) return v;
  if (stage <= 1) {
    v["real_rooted"] = certify_real_rooted(g).verdict == Verdict::real_rooted;
    v["strict_at_zero"] = is_strictly_real_rooted(g.eval_x(0));
    return v;
  }
  v["strictly_real_rooted"] = certify_strictly_real_rooted(g).verdict == Verdict::strictly_real_rooted;
  v["strict_at_infinity"] = is_strictly_real_rooted(roots_at_infinity(g, k, d));
  if (stage == 2) return v;
  v["coprime_partials"] = partials_coprime(g, k);
  if (stage == 3) return v;
  v["smooth"] = smoothness_check(g);
  return v;
}

bool stage_holds(const BiPoly& g, int stage, int k, int d) {
  for (const auto& [name, ok] : stage_verdicts(g, stage, k, d))
    if (!ok) return false;
  return true;
}

std::pair<BiPoly, PerturbTranscript> smooth_approximate(const BiPoly& f, int k, int d, const Rational& epsilon0,
                                                        int budget) {
  if (!grading_member(f, k, d)) throw DomainError("smooth_approximate: polynomial outside the grading");
  if (!f.is_monic_t() || f.degree_t() != d) throw DomainError("smooth_approximate: polynomial not monic of degree d");
  if (epsilon0 <= 0) throw DomainError("smooth_approximate: epsilon must be positive");
  if (certify_real_rooted(f).verdict != Verdict::real_rooted)
    throw DomainError("smooth_approximate: polynomial is not real rooted");

  PerturbTranscript t;
  t.input = f;
  t.k = k;
  t.d = d;
  t.epsilon0 = epsilon0;
  t.budget = budget;
  BiPoly g = f;
  for (int stage = 1; stage <= 4; ++stage) {
    StageRecord rec;
    rec.name = kStageNames[stage - 1];
    rec.op = stage_operator(stage);
    rec.epsilon = 0;
    if (d <= 1 || stage_holds(g, stage, k, d)) {
      rec.skipped = true;
      rec.passed = true;
      if (d > 1) rec.verdicts = stage_verdicts(g, stage, k, d);
      t.stages.push_back(rec);
      continue;
    }
    Rational eps = epsilon0;
    for (int attempt = 1; attempt <= budget; ++attempt, eps /= 2) {
      BiPoly cand = apply_stage(g, stage, eps, k, d);
      rec.attempts = attempt;
      rec.epsilon = eps;
      rec.verdicts = stage_verdicts(cand, stage, k, d);
      bool ok = true;
      for (const auto& [name, v] : rec.verdicts) ok = ok && v;
      if (ok) {
        rec.passed = true;
        g = cand;
        break;
      }
    }
    t.stages.push_back(rec);
    if (!rec.passed) {
      t.output = g;
      t.distance = coefficient_distance(g, f);
      throw PerturbationFailed("smooth_approximate: budget exhausted at stage " + rec.name, t);
    }
  }
  t.output = g;
  t.distance = coefficient_distance(g, f);
  return {g, t};
}

BiPoly replay(const PerturbTranscript& t) {
  BiPoly g = t.input;
  for (std::size_t i = 0; i < t.stages.size(); ++i) {
    const StageRecord& s = t.stages[i];
    if (s.skipped || s.epsilon == 0) continue;
    g = apply_stage(g, static_cast<int>(i) + 1, s.epsilon, t.k, t.d);
  }
  return g;
}

bool verify_transcript(const PerturbTranscript& t) {
  if (t.stages.size() != 4) return false;
  if (replay(t) != t.output) return false;
  if (coefficient_distance(t.output, t.input) != t.distance) return false;
  if (t.d <= 1) return true;
  return stage_holds(t.output, 4, t.k, t.d);
}

}  // namespace hypdet
