#include "g2cal/model.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace g2cal {

FrameModel::FrameModel(int n, std::vector<Form> d_generators, Metric metric)
    : n_(n), d_gen_(std::move(d_generators)), metric_(std::move(metric)) {
  if (n < 1 || n > 7) throw FormError("frame dimension out of range");
  metric_.n = n;
  if (int(d_gen_.size()) != n)
    throw FormError("expected one d-generator per coframe element");
  bool t_dependent = false;
  for (int i = 1; i <= n; ++i) {
    const Form& g = d_gen_[std::size_t(i - 1)];
    if (!g.is_zero() && g.degree() != 2)
      throw FormError("d-generator must be a 2-form");
    for (const auto& [b, c] : g.terms()) {
      if (b.has_dt()) throw FormError("d-generator may not contain dt");
      if (!c.is_constant()) t_dependent = true;
    }
  }
  for (const auto& [slot, s] : metric_.scales) {
    if (!s.is_monomial()) throw FormError("metric scale must be a monomial");
    if (!(s.monomial_value().first == 0) ) t_dependent = true;
  }
  if (t_dependent && !metric_.has_dt)
    throw FormError("t-dependent data requires a dt slot (param t)");
  auto bad = jacobi_report(n_, d_gen_, metric_);
  if (!bad.empty()) {
    std::string msg = "structure constants violate d^2 = 0:";
    for (const auto& [i, f] : bad)
      msg += " d^2 e" + std::to_string(i) + " = " + f.str() + ";";
    throw JacobiError(msg);
  }
}

FrameModel FrameModel::abelian(int n, bool has_dt) {
  std::vector<Form> gens(std::size_t(n), Form(n, 2));
  return FrameModel(n, std::move(gens), Metric::orthonormal(n, has_dt));
}

Form FrameModel::d_spatial(const Form& a) const {
  Form out(n_, a.degree() + 1);
  for (const auto& [b, c] : a.terms()) {
    for (int idx : b.indices()) {
      if (idx == Blade::kDt) continue;
      const Form& dg = d_gen_[std::size_t(idx - 1)];
      if (dg.is_zero()) continue;
      Blade rest = blade_minus(b, Blade::single(idx));
      int s = wedge_sign(Blade::single(idx), rest);
      Form contrib = wedge(dg, Form::term(n_, rest, RingElement(Rational(1))));
      out += (s < 0 ? -c : c) * contrib;
    }
  }
  return out;
}

Form FrameModel::d(const Form& a) const {
  Form out = d_spatial(a);
  if (has_dt()) {
    Form dt1 = Form::term(n_, Blade::single(Blade::kDt), RingElement(Rational(1)));
    for (const auto& [b, c] : a.terms()) {
      RingElement cp = c.derivative();
      if (cp.is_zero()) continue;
      out += cp * wedge(dt1, Form::term(n_, b, RingElement(Rational(1))));
    }
  }
  return out;
}

std::vector<std::pair<int, Form>> jacobi_report(
    int n, const std::vector<Form>& d_generators, const Metric& metric) {
  // d of a pure structure-constant 2-form, using the same generators.
  auto d_of = [&](const Form& a) {
    Form out(n, a.degree() + 1);
    for (const auto& [b, c] : a.terms())
      for (int idx : b.indices()) {
        if (idx == Blade::kDt) continue;
        const Form& dg = d_generators[std::size_t(idx - 1)];
        if (dg.is_zero()) continue;
        Blade rest = blade_minus(b, Blade::single(idx));
        int s = wedge_sign(Blade::single(idx), rest);
        out += (s < 0 ? -c : c) *
               wedge(dg, Form::term(n, rest, RingElement(Rational(1))));
      }
    return out;
  };
  (void)metric;
  std::vector<std::pair<int, Form>> bad;
  for (int i = 1; i <= n; ++i) {
    Form dd = d_of(d_generators[std::size_t(i - 1)]);
    if (!dd.is_zero()) bad.emplace_back(i, dd);
  }
  return bad;
}

namespace {

struct Tokenizer {
  const std::string& text;
  int line;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(line, int(pos) + 1, msg);
  }
  bool eat(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  std::string word() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) ||
            text[pos] == '+' || text[pos] == '-' || text[pos] == '_'))
      ++pos;
    return text.substr(start, pos - start);
  }
  long long integer() {
    skip_ws();
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == start) fail("expected integer");
    return std::stoll(text.substr(start, pos - start));
  }
};

// One multiplicative factor of a term.
struct Factor {
  RingElement coeff{Rational(1)};
  std::vector<int> indices;  // coframe indices in written order, 0 = dt
};

Factor parse_factor(Tokenizer& tk) {
  Factor f;
  tk.skip_ws();
  char c = tk.peek();
  if (std::isdigit(static_cast<unsigned char>(c))) {
    long long num = tk.integer();
    if (tk.eat('/')) {
      long long den = tk.integer();
      if (den == 0) tk.fail("zero denominator");
      f.coeff = RingElement(Rational(num, den));
    } else {
      f.coeff = RingElement(Rational(num));
    }
    return f;
  }
  if (c == 't') {
    // 't', 't^k'; but not the 'dt' token (handled below by the caller via 'd').
    ++tk.pos;
    int k = 1;
    if (tk.pos < tk.text.size() && tk.text[tk.pos] == '^') {
      ++tk.pos;
      k = int(tk.integer());
    }
    f.coeff = RingElement::monomial(k);
    return f;
  }
  if (c == 'd') {
    std::string w = tk.word();
    if (w != "dt") tk.fail("unknown factor '" + w + "'");
    f.indices.push_back(Blade::kDt);
    return f;
  }
  if (c == 'e') {
    ++tk.pos;
    std::size_t start = tk.pos;
    while (tk.pos < tk.text.size() &&
           std::isdigit(static_cast<unsigned char>(tk.text[tk.pos])))
      ++tk.pos;
    if (tk.pos == start) tk.fail("expected indices after 'e'");
    for (std::size_t i = start; i < tk.pos; ++i)
      f.indices.push_back(tk.text[i] - '0');
    return f;
  }
  tk.fail("expected a factor");
}

// Parses a sum of terms into a homogeneous form on frame dimension n.
Form parse_expr(Tokenizer& tk, int n) {
  struct Term {
    RingElement coeff;
    Blade blade;
  };
  std::vector<Term> terms;
  bool first = true;
  while (true) {
    int sign = 1;
    tk.skip_ws();
    if (tk.eat('-'))
      sign = -1;
    else if (tk.eat('+'))
      sign = 1;
    else if (!first)
      break;
    RingElement coeff{Rational(sign)};
    Blade blade;
    while (true) {
      Factor f = parse_factor(tk);
      coeff *= f.coeff;
      for (int idx : f.indices) {
        if (idx != Blade::kDt && (idx < 1 || idx > n))
          tk.fail("index e" + std::to_string(idx) + " out of range for dim " +
                  std::to_string(n));
        Blade s = Blade::single(idx);
        if (blade.contains(idx)) {
          coeff = RingElement();  // repeated index annihilates the term
        } else {
          int ws = wedge_sign(blade, s);
          if (ws < 0) coeff = -coeff;
          blade = blade_union(blade, s);
        }
      }
      tk.skip_ws();
      if (!tk.eat('*')) {
        // Allow juxtaposition only via explicit '*'; stop at anything else.
        break;
      }
    }
    terms.push_back({coeff, blade});
    first = false;
    if (tk.done()) break;
  }
  int degree = -1;
  for (const auto& t : terms)
    if (!t.coeff.is_zero()) {
      if (degree < 0)
        degree = t.blade.degree();
      else if (degree != t.blade.degree())
        tk.fail("mixed degrees in one expression");
    }
  if (degree < 0) degree = 0;
  Form out(n, degree);
  for (const auto& t : terms) out.add_term(t.blade, t.coeff);
  return out;
}

RingElement parse_monomial_expr(Tokenizer& tk) {
  RingElement coeff(Rational(1));
  tk.skip_ws();
  int sign = tk.eat('-') ? -1 : (tk.eat('+'), 1);
  while (true) {
    Factor f = parse_factor(tk);
    if (!f.indices.empty()) tk.fail("expected a scalar monomial");
    coeff *= f.coeff;
    if (!tk.eat('*')) break;
  }
  if (sign < 0) coeff = -coeff;
  if (!coeff.is_monomial()) tk.fail("expected a monomial");
  return coeff;
}

}  // namespace

ModelFile parse_model(const std::string& text) {
  int n = 6;
  bool dim_seen = false, param_t = false;
  std::map<int, std::string> d_lines;     // generator -> rhs text
  std::map<int, RingElement> warp_scales;  // slot -> scale
  std::map<std::string, std::string> form_lines;
  bool alpha_e7 = false;

  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  std::vector<std::pair<int, std::string>> deferred;  // (line, key:rhs) forms
  std::vector<std::pair<int, std::pair<int, std::string>>> deferred_d;
  while (std::getline(in, raw)) {
    ++lineno;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    Tokenizer tk{raw, lineno};
    if (tk.done()) continue;
    std::string head = tk.word();
    if (head == "dim") {
      n = int(tk.integer());
      if (n < 1 || n > 7) tk.fail("dim must be between 1 and 7");
      dim_seen = true;
    } else if (head == "param") {
      if (tk.word() != "t") tk.fail("only 'param t' is supported");
      param_t = true;
    } else if (head == "d") {
      std::string gen = tk.word();
      if (gen.size() < 2 || gen[0] != 'e') tk.fail("expected e<i> after 'd'");
      int i = std::stoi(gen.substr(1));
      tk.expect('=');
      deferred_d.push_back({lineno, {i, raw.substr(tk.pos)}});
    } else if (head == "warp") {
      std::string gen = tk.word();
      tk.expect('=');
      RingElement scale = parse_monomial_expr(tk);
      if (!tk.done()) tk.fail("trailing input");
      if (gen == "dt") {
        warp_scales[Blade::kDt] = scale;
      } else if (gen.size() >= 2 && gen[0] == 'e') {
        warp_scales[std::stoi(gen.substr(1))] = scale;
      } else {
        tk.fail("expected e<i> or dt after 'warp'");
      }
    } else if (head == "omega" || head == "psi+" || head == "psi-" ||
               head == "rho") {
      tk.expect('=');
      deferred.push_back({lineno, head + ":" + raw.substr(tk.pos)});
    } else if (head == "alpha") {
      tk.expect('=');
      std::string rhs = tk.word();
      if (rhs != "e7") tk.fail("alpha must be e7");
      alpha_e7 = true;
    } else {
      tk.fail("unknown directive '" + head + "'");
    }
  }
  (void)dim_seen;

  std::vector<Form> gens(std::size_t(n), Form(n, 2));
  for (const auto& [ln, entry] : deferred_d) {
    auto [i, rhs] = entry;
    if (i < 1 || i > n)
      throw ParseError(ln, 1, "generator e" + std::to_string(i) + " out of range");
    Tokenizer tk{rhs, ln};
    Form f = parse_expr(tk, n);
    if (!tk.done()) tk.fail("trailing input");
    if (!f.is_zero() && f.degree() != 2) tk.fail("d e<i> must be a 2-form");
    gens[std::size_t(i - 1)] = Form(n, 2) + f;
  }

  Metric metric = Metric::orthonormal(n, param_t);
  for (const auto& [slot, s] : warp_scales) {
    if (slot != Blade::kDt && (slot < 1 || slot > n))
      throw ParseError(1, 1, "warp slot out of range");
    metric.scales[slot] = s;
  }

  ModelFile out{FrameModel(n, std::move(gens), metric), {}, {}, {}, {}, alpha_e7};
  for (const auto& [ln, keyed] : deferred) {
    auto colon = keyed.find(':');
    std::string key = keyed.substr(0, colon);
    std::string rhs = keyed.substr(colon + 1);
    Tokenizer tk{rhs, ln};
    Form f = parse_expr(tk, n);
    if (!tk.done()) tk.fail("trailing input");
    if (key == "omega")
      out.omega = f;
    else if (key == "psi+")
      out.psi_plus = f;
    else if (key == "psi-")
      out.psi_minus = f;
    else if (key == "rho")
      out.rho = f;
  }
  return out;
}

namespace {

std::string format_term(const Rational& q, int k, Blade b, bool lead) {
  Rational aq = q < 0 ? Rational(-q) : q;
  std::string s = lead ? (q < 0 ? "-" : "") : (q < 0 ? " - " : " + ");
  std::vector<std::string> factors;
  if (aq != 1 || (k == 0 && b.empty())) factors.push_back(rational_str(aq));
  if (k != 0) factors.push_back(k == 1 ? "t" : "t^" + std::to_string(k));
  if (b.has_dt()) factors.push_back("dt");
  Blade eb = blade_minus(b, Blade::single(Blade::kDt));
  if (!eb.empty()) {
    std::string digits;
    for (int i : eb.indices()) digits += std::to_string(i);
    factors.push_back("e" + digits);
  }
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) s += "*";
    s += factors[i];
  }
  return s;
}

std::string format_form_expr(const Form& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool lead = true;
  for (const auto& [b, c] : f.terms())
    for (const auto& [k, q] : c.terms()) {
      out += format_term(q, k, b, lead);
      lead = false;
    }
  return out;
}

}  // namespace

std::string format_model(const ModelFile& file) {
  const FrameModel& m = file.model;
  std::string out = "dim " + std::to_string(m.n()) + "\n";
  if (m.has_dt()) out += "param t\n";
  for (const auto& [slot, s] : m.metric().scales) {
    auto [k, q] = s.monomial_value();
    std::string name = slot == Blade::kDt ? "dt" : "e" + std::to_string(slot);
    out += "warp " + name + " = " + format_term(q, k, Blade(), true) + "\n";
  }
  for (int i = 1; i <= m.n(); ++i) {
    const Form& g = m.d_generator(i);
    if (g.is_zero()) continue;
    out += "d e" + std::to_string(i) + " = " + format_form_expr(g) + "\n";
  }
  if (file.omega) out += "omega = " + format_form_expr(*file.omega) + "\n";
  if (file.psi_plus) out += "psi+ = " + format_form_expr(*file.psi_plus) + "\n";
  if (file.psi_minus) out += "psi- = " + format_form_expr(*file.psi_minus) + "\n";
  if (file.rho) out += "rho = " + format_form_expr(*file.rho) + "\n";
  if (file.has_alpha_e7) out += "alpha = e7\n";
  return out;
}

}  // namespace g2cal
