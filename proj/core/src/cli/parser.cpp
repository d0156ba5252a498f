#include "adenewton/cli/parser.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "adenewton/errors.hpp"

namespace adenewton::cli {

namespace {

class Parser {
 public:
  Parser(std::string_view src, std::size_t begin, std::size_t end, const Field& field, std::optional<unsigned> max_order)
      : src_(src), pos_(begin), end_(end), field_(field), max_order_(max_order) {}

  DiffPoly parse_all() {
    DiffPoly p = poly();
    skip_ws();
    if (pos_ < end_) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
    return p;
  }

  [[noreturn]] void fail(const std::string& msg) const { fail_at(msg, pos_); }

  [[noreturn]] void fail_at(const std::string& msg, std::size_t at) const {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t k = 0; k < at && k < src_.size(); ++k) {
      if (src_[k] == '\n') {
        ++line;
        col = 1;
      } else if ((static_cast<unsigned char>(src_[k]) & 0xC0) != 0x80) {
        ++col;
      }
    }
    throw ParseError(msg, line, col);
  }

 private:
  void skip_ws() {
    while (pos_ < end_ && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < end_ && src_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  Integer integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < end_ && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected a number");
    return Integer(std::string(src_.substr(start, pos_ - start)));
  }

  unsigned nat() {
    const std::size_t at = pos_;
    const Integer n = integer();
    if (n > 1000000) fail_at("exponent too large", at);
    return static_cast<unsigned>(n.get_ui());
  }

  // ['-'] int ['/' nat]
  Rational signed_rational() {
    const bool neg = accept('-');
    Integer num = integer();
    Integer den = 1;
    skip_ws();
    if (pos_ + 1 < end_ && src_[pos_] == '/' && std::isdigit(static_cast<unsigned char>(src_[pos_ + 1]))) {
      ++pos_;
      const std::size_t at = pos_;
      den = integer();
      if (den == 0) fail_at("zero denominator", at);
    }
    if (neg) num = -num;
    return make_rational(num, den);
  }

  GroupElement exponent() {
    const std::size_t at = pos_;
    std::vector<Rational> coords;
    if (accept('(')) {
      coords.push_back(signed_rational());
      while (accept(',')) coords.push_back(signed_rational());
      expect(')');
    } else {
      coords.push_back(signed_rational());
    }
    if (coords.size() == field_.dim()) return GroupElement(std::move(coords));
    if (coords.size() == 1) {
      std::vector<Rational> full(field_.dim());
      full[0] = coords[0];
      return GroupElement(std::move(full));
    }
    fail_at("exponent has " + std::to_string(coords.size()) + " coordinates, the value group has " +
                std::to_string(field_.dim()),
            at);
  }

  DiffPoly constant(const Series& s) { return DiffPoly::constant(field_, s); }

  DiffPoly poly() {
    DiffPoly acc = constant(Series(field_));
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    DiffPoly first = term();
    acc = negate ? -first : first;
    while (true) {
      if (accept('+')) {
        acc = acc + term();
      } else if (peek('-')) {
        ++pos_;
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  DiffPoly term() {
    DiffPoly acc = power();
    while (true) {
      if (accept('*')) {
        acc = acc * power();
      } else if (peek('/')) {
        const std::size_t at = pos_;
        ++pos_;
        acc = acc * inverse(power(), at);
      } else {
        return acc;
      }
    }
  }

  DiffPoly inverse(const DiffPoly& d, std::size_t at) {
    if (d.terms().size() != 1 || !d.terms().begin()->first.empty()) fail_at("division by a non-constant", at);
    const Series& c = d.terms().begin()->second;
    if (!c.is_exact() || c.terms().size() != 1) fail_at("division by a non-monomial", at);
    return constant(c.invert(-c.terms().begin()->first));
  }

  DiffPoly power() {
    DiffPoly base = atom();
    if (accept('^')) {
      const unsigned n = nat();
      DiffPoly out = constant(Series::constant(field_, ResidueElem(1)));
      for (unsigned k = 0; k < n; ++k) out = out * base;
      return out;
    }
    return base;
  }

  DiffPoly atom() {
    skip_ws();
    if (pos_ >= end_) fail("unexpected end of input");
    const char c = src_[pos_];
    const std::size_t at = pos_;
    if (c == '(') {
      ++pos_;
      DiffPoly inner = poly();
      expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return constant(Series::constant(field_, ResidueElem(Rational(integer()))));
    }
    if (c == 'Y') {
      ++pos_;
      unsigned k = 0;
      while (pos_ < end_ && src_[pos_] == '\'') {
        ++pos_;
        ++k;
      }
      if (max_order_ && k > *max_order_) {
        fail_at("derivative order " + std::to_string(k) + " exceeds the configured bound " + std::to_string(*max_order_), at);
      }
      return DiffPoly::variable(field_, k);
    }
    if (c == 't') {
      ++pos_;
      if (accept('^')) return constant(Series::monomial(field_, exponent()));
      std::vector<Rational> e(field_.dim());
      e[0] = 1;
      return constant(Series::monomial(field_, GroupElement(std::move(e))));
    }
    if (c == 'z') {
      if (field_.rational_residues()) fail("'z' needs the monotone preset");
      ++pos_;
      return constant(Series::constant(field_, ResidueElem(RatFunc(QPoly::variable()))));
    }
    if (c == 'O') {
      ++pos_;
      expect('(');
      const std::size_t inner_at = pos_;
      const DiffPoly inner = poly();
      expect(')');
      if (inner.terms().size() != 1 || !inner.terms().begin()->first.empty()) fail_at("O(...) needs a monomial", inner_at);
      const Series& s = inner.terms().begin()->second;
      if (!s.is_exact() || s.terms().size() != 1) fail_at("O(...) needs a monomial", inner_at);
      return constant(Series::big_o(field_, s.terms().begin()->first));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view src_;
  std::size_t pos_;
  std::size_t end_;
  const Field& field_;
  std::optional<unsigned> max_order_;
};

std::size_t skip_space(std::string_view s, std::size_t k, std::size_t end) {
  while (k < end && std::isspace(static_cast<unsigned char>(s[k]))) ++k;
  return k;
}

std::size_t trim_right(std::string_view s, std::size_t begin, std::size_t end) {
  while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
  return end;
}

bool starts_with_at(std::string_view s, std::size_t k, std::string_view what) { return s.substr(k, what.size()) == what; }

EConstraint constraint_range(std::string_view src, std::size_t begin, std::size_t end, const Field& field) {
  std::size_t k = skip_space(src, begin, end);
  end = trim_right(src, k, end);
  const std::string_view body = src.substr(k, end - k);
  if (body == "all") return EConstraint::all();
  if (k < end && src[k] == 'Y') k = skip_space(src, k + 1, end);
  const std::string_view rest = src.substr(k, end - k);
  for (std::string_view all : {"in K*", "in K^*", "in K^×", "in K×", "∈ K*", "∈ K^×", "∈ K×"}) {
    if (rest == all) return EConstraint::all();
  }
  bool strict = false;
  std::size_t len = 0;
  // longest relation first
  for (auto [word, s] : {std::pair<std::string_view, bool>{"preceq", false}, {"prec", true}, {"≼", false}, {"≺", true},
                         {"<=", false}, {"<", true}}) {
    if (starts_with_at(src, k, word)) {
      strict = s;
      len = word.size();
      break;
    }
  }
  if (len == 0) Parser(src, k, end, field, std::nullopt).fail("expected a relation (prec, preceq, ≺, ≼) or 'in K*'");
  const std::size_t mono_at = skip_space(src, k + len, end);
  Parser p(src, mono_at, end, field, 0);
  const DiffPoly m = p.parse_all();
  if (m.terms().size() != 1 || !m.terms().begin()->first.empty()) p.fail_at("constraint bound must be a monomial", mono_at);
  const Series& s = m.terms().begin()->second;
  if (!s.is_monomial()) p.fail_at("constraint bound must be a monomial", mono_at);
  const GroupElement g = s.terms().begin()->first;
  return strict ? EConstraint::val_gt(g) : EConstraint::val_ge(g);
}

}  // namespace

DiffPoly parse_poly(std::string_view src, const Field& field, std::optional<unsigned> max_order) {
  return Parser(src, 0, src.size(), field, max_order).parse_all();
}

Series parse_series(std::string_view src, const Field& field) {
  Parser p(src, 0, src.size(), field, std::nullopt);
  const DiffPoly d = p.parse_all();
  if (d.is_zero()) {
    if (d.floor().is_infinite()) return Series(field);
    return Series::big_o(field, d.floor().finite());
  }
  if (d.terms().size() != 1 || !d.terms().begin()->first.empty()) p.fail_at("expected an expression without Y", 0);
  const Series& c = d.terms().begin()->second;
  if (d.floor().is_infinite()) return c;
  return c + Series::big_o(field, d.floor().finite());
}

EConstraint parse_constraint(std::string_view src, const Field& field) { return constraint_range(src, 0, src.size(), field); }

ADE parse_ade(std::string_view src, const Field& field, std::optional<unsigned> max_order) {
  std::size_t begin = skip_space(src, 0, src.size());
  if (starts_with_at(src, begin, "P")) {
    const std::size_t eq = skip_space(src, begin + 1, src.size());
    if (eq < src.size() && src[eq] == '=') begin = eq + 1;
  }
  std::size_t end = src.size();
  EConstraint e = EConstraint::all();
  const std::size_t where = src.find("where", begin);
  if (where != std::string_view::npos) {
    e = constraint_range(src, where + 5, src.size(), field);
    end = where;
  }
  end = trim_right(src, begin, end);
  while (end > begin && (src[end - 1] == ';' || src[end - 1] == ',')) end = trim_right(src, begin, end - 1);
  // trailing "= 0"
  if (end > begin && src[end - 1] == '0') {
    const std::size_t before = trim_right(src, begin, end - 1);
    if (before > begin && src[before - 1] == '=') end = trim_right(src, begin, before - 1);
  }
  Parser p(src, begin, end, field, max_order);
  DiffPoly poly = p.parse_all();
  return ADE(std::move(poly), e);
}

GroupElement parse_exponent(std::string_view src, std::size_t dim) {
  std::string s(src);
  std::vector<Rational> coords;
  std::size_t k = 0;
  auto ws = [&] {
    while (k < s.size() && std::isspace(static_cast<unsigned char>(s[k]))) ++k;
  };
  ws();
  const bool paren = k < s.size() && s[k] == '(';
  if (paren) ++k;
  while (true) {
    ws();
    const std::size_t start = k;
    while (k < s.size() && (std::isdigit(static_cast<unsigned char>(s[k])) || s[k] == '-' || s[k] == '+' || s[k] == '/')) ++k;
    try {
      coords.push_back(parse_rational(std::string_view(s).substr(start, k - start)));
    } catch (const ParseError&) {
      throw ParseError("malformed exponent '" + s + "'", 1, start + 1);
    }
    ws();
    if (k < s.size() && s[k] == ',') {
      ++k;
      continue;
    }
    break;
  }
  if (paren) {
    if (k >= s.size() || s[k] != ')') throw ParseError("expected ')' in exponent '" + s + "'", 1, k + 1);
    ++k;
  }
  ws();
  if (k != s.size()) throw ParseError("trailing characters in exponent '" + s + "'", 1, k + 1);
  if (coords.size() == 1 && dim > 1) coords.resize(dim);
  if (coords.size() != dim) {
    throw DimensionMismatch("exponent '" + s + "' has " + std::to_string(coords.size()) + " coordinates, expected " +
                            std::to_string(dim));
  }
  return GroupElement(std::move(coords));
}

}  // namespace adenewton::cli
