#include "nilharm/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "nilharm/errors.hpp"

namespace nilharm::io {

json parse_json(std::string_view text, std::string_view source) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t limit = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < limit; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ValidationError(std::string(source) + ":" + std::to_string(line) + ":" + std::to_string(column) +
                          ": invalid JSON (" + e.what() + ")");
  }
}

namespace {

const json& require(const json& j, const char* key, std::string_view what) {
  if (!j.is_object() || !j.contains(key)) {
    throw ValidationError(std::string(what) + ": missing field \"" + key + "\"");
  }
  return j.at(key);
}

int require_int(const json& j, const char* key, std::string_view what) {
  const json& v = require(j, key, what);
  if (!v.is_number_integer()) throw ValidationError(std::string(what) + ": field \"" + key + "\" must be an integer");
  return v.get<int>();
}

Rational rational_from_json(const json& v, std::string_view what) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(Integer(v.get<long>()));
  throw ValidationError(std::string(what) + ": rational values must be \"p/q\" strings or integers");
}

Integer integer_from_json(const json& v, std::string_view what) {
  if (v.is_number_integer()) return Integer(v.get<long>());
  if (v.is_string()) {
    const Rational q = parse_rational(v.get<std::string>());
    if (q.get_den() == 1) return q.get_num();
  }
  throw ValidationError(std::string(what) + ": coordinates must be integers");
}

}  // namespace

GroupSchema group_from_json(const json& j) {
  const json& family = require(j, "family", "group config");
  if (!family.is_string()) throw ValidationError("group config: \"family\" must be a string");
  const auto name = family.get<std::string>();
  if (name == "lattice") return GroupSchema::lattice(require_int(j, "d", "group config"));
  if (name == "heisenberg") return GroupSchema::heisenberg(require_int(j, "n", "group config"));
  if (name == "unitriangular") return GroupSchema::unitriangular(require_int(j, "n", "group config"));
  throw ValidationError("group config: unknown family \"" + name + "\"");
}

json group_to_json(const GroupSchema& schema) {
  json j{{"family", family_name(schema.family())}};
  j[schema.family() == Family::lattice ? "d" : "n"] = schema.parameter();
  return j;
}

json element_to_json(const GroupElement& g) {
  json arr = json::array();
  for (const auto& c : g.coords()) {
    if (c.fits_slong_p()) {
      arr.push_back(c.get_si());
    } else {
      arr.push_back(c.get_str());
    }
  }
  return arr;
}

GroupElement element_from_json(const GroupSchema& schema, const json& j) {
  if (!j.is_array()) throw ValidationError("group element must be an integer array");
  std::vector<Integer> coords;
  for (const auto& v : j) coords.push_back(integer_from_json(v, "group element"));
  GroupElement g(std::move(coords));
  check_conforms(schema, g);
  return g;
}

Measure measure_from_json(const GroupSchema& schema, const json& j) {
  const json& atoms = require(j, "atoms", "measure config");
  if (!atoms.is_array()) throw ValidationError("measure config: \"atoms\" must be an array");
  Measure::Atoms parsed;
  std::size_t index = 0;
  for (const auto& atom : atoms) {
    const std::string where = "measure config: atom " + std::to_string(index++);
    GroupElement g = element_from_json(schema, require(atom, "coords", where));
    const Rational w = rational_from_json(require(atom, "weight", where), where);
    if (!parsed.emplace(g, w).second) throw ValidationError(where + ": duplicate atom " + to_string(g));
  }
  int radius = kDefaultAdaptedRadius;
  if (j.contains("adapted_radius")) radius = require_int(j, "adapted_radius", "measure config");
  return Measure::create(schema, std::move(parsed), radius);
}

json measure_to_json(const Measure& mu) {
  json atoms = json::array();
  for (const auto& [g, w] : mu.atoms()) atoms.push_back({{"coords", element_to_json(g)}, {"weight", format_rational(w)}});
  return json{{"atoms", atoms}};
}

json polynomial_to_json(const Polynomial& p) {
  json arr = json::array();
  for (const auto& [m, c] : p.sorted_terms()) {
    arr.push_back({{"exponents", m.exponents}, {"coeff", format_rational(c)}});
  }
  return arr;
}

Polynomial polynomial_from_json(const GroupSchema& schema, const json& j) {
  if (!j.is_array()) throw ValidationError("polynomial JSON must be an array of terms");
  Polynomial p(schema);
  for (const auto& term : j) {
    const json& exps = require(term, "exponents", "polynomial term");
    if (!exps.is_array()) throw ValidationError("polynomial term: exponents must be an array");
    Monomial m;
    for (const auto& e : exps) {
      if (!e.is_number_integer() || e.get<int>() < 0) {
        throw ValidationError("polynomial term: exponents must be non-negative integers");
      }
      m.exponents.push_back(e.get<int>());
    }
    if (m.exponents.size() != schema.n_coords()) {
      throw ValidationError("polynomial term: expected " + std::to_string(schema.n_coords()) + " exponents");
    }
    p.add_term(m, rational_from_json(require(term, "coeff", "polynomial term"), "polynomial term"));
  }
  return p;
}

std::string format_polynomial(const Polynomial& p) {
  if (p.is_zero()) return "0";
  const auto& names = p.schema().coordinate_names();
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : p.sorted_terms()) {
    std::ostringstream mono;
    bool any = false;
    for (std::size_t i = 0; i < m.exponents.size(); ++i) {
      if (m.exponents[i] == 0) continue;
      mono << (any ? "*" : "") << names[i];
      if (m.exponents[i] > 1) mono << '^' << m.exponents[i];
      any = true;
    }
    const Rational mag = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (!any) {
      out << format_rational_short(mag);
    } else if (mag == 1) {
      out << mono.str();
    } else {
      out << format_rational_short(mag) << '*' << mono.str();
    }
    first = false;
  }
  return out.str();
}

namespace {

class PolynomialParser {
 public:
  PolynomialParser(const GroupSchema& schema, std::string_view text) : schema_(schema), text_(text) {}

  Polynomial parse() {
    Polynomial p = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  Polynomial expression() {
    skip_space();
    Polynomial acc(schema_);
    bool negate = false;
    if (peek('+') || peek('-')) negate = text_[pos_++] == '-';
    acc = term();
    if (negate) acc = -acc;
    for (;;) {
      skip_space();
      if (peek('+')) {
        ++pos_;
        acc += term();
      } else if (peek('-')) {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    for (;;) {
      skip_space();
      if (!peek('*')) return acc;
      ++pos_;
      acc = acc * factor();
    }
  }

  Polynomial factor() {
    skip_space();
    Polynomial base(schema_);
    if (peek('(')) {
      ++pos_;
      base = expression();
      skip_space();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
    } else if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      std::string literal = digits();
      skip_space();
      if (peek('/')) {
        ++pos_;
        skip_space();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          fail("expected denominator");
        }
        literal += "/" + digits();
      }
      Rational value;
      try {
        value = parse_rational(literal);
      } catch (const ValidationError&) {
        fail("bad number '" + literal + "'");
      }
      base = Polynomial::constant(schema_, value);
    } else if (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string name(text_.substr(start, pos_ - start));
      const auto& names = schema_.coordinate_names();
      const auto it = std::find(names.begin(), names.end(), name);
      if (it == names.end()) {
        pos_ = start;
        fail("unknown coordinate '" + name + "' for " + schema_.name());
      }
      base = Polynomial::coordinate(schema_, static_cast<std::size_t>(it - names.begin()));
    } else {
      fail(pos_ < text_.size() ? "unexpected '" + std::string(1, text_[pos_]) + "'" : "unexpected end of input");
    }
    skip_space();
    if (peek('^')) {
      ++pos_;
      skip_space();
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        fail("expected exponent");
      }
      const std::string e = digits();
      if (e.size() > 4) fail("exponent too large");
      Polynomial result = Polynomial::constant(schema_, 1);
      for (int i = std::stoi(e); i > 0; --i) result = result * base;
      return result;
    }
    return base;
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  bool peek(char c) const { return pos_ < text_.size() && text_[pos_] == c; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ValidationError("polynomial syntax error at column " + std::to_string(pos_ + 1) + ": " + what);
  }

  const GroupSchema& schema_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const GroupSchema& schema, std::string_view text) {
  return PolynomialParser(schema, text).parse();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace nilharm::io
