#include "goldman/io.hpp"

#include <cctype>
#include <sstream>

namespace goldman {

namespace {

// single-pass cursor with line/column tracking for error messages
struct Cursor {
  const std::string& text;
  size_t pos = 0;
  long line = 1, col = 1;

  explicit Cursor(const std::string& t) : text(t) {}

  bool eof() const { return pos >= text.size(); }
  char peek() const { return eof() ? '\0' : text[pos]; }
  char get() {
    char c = text[pos++];
    if (c == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    return c;
  }
  void skip_ws() {
    while (!eof() && (peek() == ' ' || peek() == '\t')) get();
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw error("parse error at line " + std::to_string(line) + ", col " +
                std::to_string(col) + ": " + msg);
  }
  void expect(char c) {
    skip_ws();
    if (eof() || peek() != c) fail(std::string("expected '") + c + "'");
    get();
  }
  bool accept(char c) {
    skip_ws();
    if (!eof() && peek() == c) {
      get();
      return true;
    }
    return false;
  }
  Int integer() {
    skip_ws();
    std::string digits;
    if (peek() == '-' || peek() == '+') digits += get();
    if (!std::isdigit((unsigned char)peek())) fail("expected an integer");
    while (!eof() && std::isdigit((unsigned char)peek())) digits += get();
    return Int(digits);
  }
  Rat rational() {
    Int num = integer();
    if (accept('/')) {
      Int den = integer();
      if (den == 0) fail("zero denominator");
      Rat q(num, den);
      q.canonicalize();
      return q;
    }
    return Rat(num);
  }
  void end_of_input() {
    skip_ws();
    while (!eof() && (peek() == '\n' || peek() == '\r')) {
      get();
      skip_ws();
    }
    if (!eof()) fail("trailing input");
  }
};

// interior of a group element literal: free coords, optional ';' torsion
std::pair<std::vector<Int>, std::vector<Int>> parse_coords(Cursor& cur, const GroupSpec& spec,
                                                           char close) {
  std::vector<Int> free_coords, torsion_coords;
  cur.skip_ws();
  if (spec.free_rank > 0) {
    free_coords.push_back(cur.integer());
    for (long i = 1; i < spec.free_rank; ++i) {
      cur.expect(',');
      free_coords.push_back(cur.integer());
    }
  }
  if (!spec.torsion_orders.empty()) {
    cur.expect(';');
    torsion_coords.push_back(cur.integer());
    for (size_t i = 1; i < spec.torsion_orders.size(); ++i) {
      cur.expect(',');
      torsion_coords.push_back(cur.integer());
    }
  }
  cur.expect(close);
  return {std::move(free_coords), std::move(torsion_coords)};
}

std::string coords_interior(const std::vector<Int>& free_coords,
                            const std::vector<Int>& torsion_coords) {
  std::string s;
  for (size_t i = 0; i < free_coords.size(); ++i) {
    if (i) s += ',';
    s += free_coords[i].get_str();
  }
  if (!torsion_coords.empty()) {
    s += ';';
    for (size_t i = 0; i < torsion_coords.size(); ++i) {
      if (i) s += ',';
      s += torsion_coords[i].get_str();
    }
  }
  return s;
}

}  // namespace

GroupSpec parse_spec(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  long lineno = 0;
  auto next_line = [&](std::string& out) {
    while (std::getline(in, line)) {
      ++lineno;
      size_t a = line.find_first_not_of(" \t\r");
      if (a == std::string::npos) continue;
      size_t b = line.find_last_not_of(" \t\r");
      out = line.substr(a, b - a + 1);
      return true;
    }
    return false;
  };
  auto fail = [&](const std::string& msg) -> void {
    throw error("parse error at line " + std::to_string(lineno) + ": " + msg);
  };

  GroupSpec spec;
  std::string l;
  if (!next_line(l)) fail("expected 'rank r'");
  {
    std::istringstream ls(l);
    std::string kw;
    ls >> kw;
    long r;
    if (kw != "rank" || !(ls >> r) || r < 0) fail("expected 'rank r'");
    spec.free_rank = r;
  }
  if (!next_line(l)) {
    if (spec.free_rank == 0) {
      validate_spec(spec);
      return spec;
    }
    fail("expected 'form'");
  }
  if (l.rfind("torsion", 0) == 0) {
    std::istringstream ls(l.substr(7));
    std::string tok;
    while (ls >> tok) {
      try {
        spec.torsion_orders.emplace_back(tok);
      } catch (const std::invalid_argument&) {
        fail("bad integer '" + tok + "' on torsion line");
      }
    }
    if (spec.torsion_orders.empty()) fail("'torsion' line lists no orders");
    if (!next_line(l)) {
      if (spec.free_rank == 0) {
        validate_spec(spec);
        return spec;
      }
      fail("expected 'form'");
    }
  }
  if (l != "form") fail("expected 'form'");
  spec.form.assign(spec.free_rank, {});
  for (long i = 0; i < spec.free_rank; ++i) {
    if (!next_line(l)) fail("form row missing");
    std::istringstream ls(l);
    std::string tok;
    while (ls >> tok) {
      try {
        spec.form[i].emplace_back(tok);
      } catch (const std::invalid_argument&) {
        fail("bad integer '" + tok + "' in form row");
      }
    }
    if ((long)spec.form[i].size() != spec.free_rank) fail("form row has wrong length");
  }
  if (next_line(l)) fail("trailing input after form");
  validate_spec(spec);
  return spec;
}

std::string serialize_spec(const GroupSpec& spec) {
  std::string s = "rank " + std::to_string(spec.free_rank) + "\n";
  if (!spec.torsion_orders.empty()) {
    s += "torsion";
    for (const auto& d : spec.torsion_orders) s += " " + d.get_str();
    s += "\n";
  }
  s += "form\n";
  for (const auto& row : spec.form) {
    for (size_t j = 0; j < row.size(); ++j) {
      if (j) s += ' ';
      s += row[j].get_str();
    }
    s += '\n';
  }
  return s;
}

GroupElement parse_group_element(const GroupSpec& spec, const std::string& text) {
  Cursor cur(text);
  cur.expect('(');
  auto [f, t] = parse_coords(cur, spec, ')');
  cur.end_of_input();
  return make_element(spec, std::move(f), std::move(t));
}

std::string serialize_group_element(const GroupElement& x) {
  return "(" + coords_interior(x.free_coords, x.torsion_coords) + ")";
}

std::string serialize_support_key(const GroupElement& x) {
  return "[" + coords_interior(x.free_coords, x.torsion_coords) + "]";
}

std::string serialize_coset(const Coset& c) {
  return "(" + coords_interior(c, {}) + ")";
}

AlgebraElement parse_element(const GroupSpec& spec, const std::string& text) {
  Cursor cur(text);
  AlgebraElement out;
  bool first = true;
  while (true) {
    cur.skip_ws();
    if (cur.eof()) {
      if (first) cur.fail("empty element");
      break;
    }
    int sign = 1;
    if (!first) {
      if (cur.accept('+')) {
        sign = 1;
      } else if (cur.accept('-')) {
        sign = -1;
      } else {
        break;
      }
    }
    Rat c = cur.rational();
    cur.skip_ws();
    if (cur.eof() && first && c == 0) return out;  // bare "0"
    cur.expect('*');
    cur.expect('[');
    auto [f, t] = parse_coords(cur, spec, ']');
    out.add_term(make_element(spec, std::move(f), std::move(t)), sign * c);
    first = false;
  }
  cur.end_of_input();
  return out;
}

std::string serialize_rational(const Rat& c) { return c.get_str(); }

std::string serialize_element(const AlgebraElement& x) {
  if (x.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [k, c] : x.terms) {
    Rat mag = abs(c);
    if (first) {
      if (c < 0) s += '-';
      first = false;
    } else {
      s += c < 0 ? " - " : " + ";
    }
    s += serialize_rational(mag) + "*" + serialize_support_key(k);
  }
  return s;
}

std::string serialize_word(const AdWord& w) {
  std::string s;
  for (size_t i = 0; i < w.factors.size(); ++i) {
    if (i) s += ' ';
    s += serialize_group_element(w.factors[i]);
  }
  return s;
}

std::string serialize_ideal_pair(const IdealPair& p) {
  std::string s;
  if (p.v0.full) {
    s += "V0: FULL\n";
  } else if (p.v0.basis.empty()) {
    s += "V0: EMPTY\n";
  } else {
    s += "V0:\n";
    for (const auto& b : p.v0.basis) s += "  " + serialize_element(b) + "\n";
  }
  switch (p.v.kind) {
    case ModuleSpan::Kind::Zero: s += "V: ZERO\n"; break;
    case ModuleSpan::Kind::Full: s += "V: FULL\n"; break;
    case ModuleSpan::Kind::Gens:
      s += "V:\n";
      for (const auto& g : p.v.gens) s += "  " + serialize_element(g) + "\n";
      break;
  }
  s += "backend: ";
  s += to_string(p.backend);
  if (p.backend == Backend::Truncated) s += "(" + std::to_string(p.radius) + ")";
  s += "\n";
  return s;
}

IdealPair parse_ideal_pair(const GroupSpec& spec, const KernelData& kd,
                           const std::string& text) {
  std::istringstream in(text);
  std::string line;
  long lineno = 0;
  auto fail = [&](const std::string& msg) -> void {
    throw error("parse error at line " + std::to_string(lineno) + ": " + msg);
  };
  auto trimmed = [](const std::string& l) {
    size_t a = l.find_first_not_of(" \t\r");
    if (a == std::string::npos) return std::string();
    size_t b = l.find_last_not_of(" \t\r");
    return l.substr(a, b - a + 1);
  };

  IdealPair p;
  std::vector<std::string> lines;
  while (std::getline(in, line)) lines.push_back(line);
  size_t i = 0;
  auto next = [&]() -> std::string {
    while (i < lines.size()) {
      ++lineno;
      std::string t = trimmed(lines[i++]);
      if (!t.empty()) return t;
    }
    return std::string();
  };

  std::string l = next();
  if (l.rfind("V0:", 0) != 0) fail("expected 'V0:'");
  std::string rest = trimmed(l.substr(3));
  if (rest == "FULL") {
    p.v0.full = true;
    l = next();
  } else if (rest == "EMPTY") {
    l = next();
  } else if (rest.empty()) {
    while (!(l = next()).empty() && l.rfind("V:", 0) != 0)
      p.v0.basis.push_back(parse_element(spec, l));
  } else {
    fail("unexpected text after 'V0:'");
  }

  if (l.rfind("V:", 0) != 0) fail("expected 'V:'");
  rest = trimmed(l.substr(2));
  if (rest == "ZERO") {
    p.v.kind = ModuleSpan::Kind::Zero;
    l = next();
  } else if (rest == "FULL") {
    p.v.kind = ModuleSpan::Kind::Full;
    l = next();
  } else if (rest.empty()) {
    p.v.kind = ModuleSpan::Kind::Gens;
    while (!(l = next()).empty() && l.rfind("backend:", 0) != 0)
      p.v.gens.push_back(parse_element(spec, l));
  } else {
    fail("unexpected text after 'V:'");
  }

  if (l.rfind("backend:", 0) != 0) fail("expected 'backend:'");
  rest = trimmed(l.substr(8));
  if (rest == "ExactFiniteKernel") {
    p.backend = Backend::ExactFiniteKernel;
  } else if (rest == "LaurentRankOne") {
    p.backend = Backend::LaurentRankOne;
  } else if (rest.rfind("Truncated(", 0) == 0 && rest.back() == ')') {
    p.backend = Backend::Truncated;
    p.radius = std::stol(rest.substr(10, rest.size() - 11));
    if (p.radius < 1) fail("truncation radius must be >= 1");
  } else {
    fail("unknown backend '" + rest + "'");
  }
  if (!next().empty()) fail("trailing input after backend line");
  validate_pair(spec, kd, p);
  return p;
}

}  // namespace goldman
