#include "hyperzeta/cli/expr.hpp"

#include <cctype>

namespace hyperzeta::cli {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  std::unique_ptr<Expr> parse_all() {
    auto e = expr();
    skip_ws();
    if (pos_ < s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= s_.size()) fail(std::string("expected '") + c + "', found end of input");
    if (s_[pos_] != c) fail(std::string("expected '") + c + "', found '" + s_[pos_] + "'");
    ++pos_;
  }

  static std::unique_ptr<Expr> node(Expr::Kind k, std::size_t off) {
    auto e = std::make_unique<Expr>();
    e->kind = k;
    e->offset = off;
    return e;
  }

  static std::unique_ptr<Expr> binary(Expr::Kind k, std::size_t off, std::unique_ptr<Expr> l,
                                       std::unique_ptr<Expr> r) {
    auto e = node(k, off);
    e->args.push_back(std::move(l));
    e->args.push_back(std::move(r));
    return e;
  }

  bool starts_atom() {
    skip_ws();
    if (pos_ >= s_.size()) return false;
    const char c = s_[pos_];
    return c == 'E' || c == 'F' || c == 'K' || c == 'B' || c == 'z' || c == '(' ||
           std::isdigit(static_cast<unsigned char>(c));
  }

  std::unique_ptr<Expr> expr() {
    skip_ws();
    std::unique_ptr<Expr> lhs;
    if (peek('-')) {
      const auto off = pos_++;
      auto neg = node(Expr::Kind::neg, off);
      neg->args.push_back(term());
      lhs = std::move(neg);
    } else {
      lhs = term();
    }
    while (true) {
      if (peek('+')) {
        const auto off = pos_++;
        lhs = binary(Expr::Kind::add, off, std::move(lhs), term());
      } else if (peek('-')) {
        const auto off = pos_++;
        lhs = binary(Expr::Kind::sub, off, std::move(lhs), term());
      } else {
        return lhs;
      }
    }
  }

  std::unique_ptr<Expr> term() {
    auto lhs = factor();
    while (true) {
      if (peek('*')) {
        const auto off = pos_++;
        lhs = binary(Expr::Kind::mul, off, std::move(lhs), factor());
      } else if (starts_atom()) {
        const auto off = pos_;
        lhs = binary(Expr::Kind::mul, off, std::move(lhs), factor());
      } else {
        return lhs;
      }
    }
  }

  std::int64_t integer(bool allow_negative) {
    skip_ws();
    const auto start = pos_;
    bool negative = false;
    if (allow_negative && pos_ < s_.size() && s_[pos_] == '-') {
      negative = true;
      ++pos_;
    }
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      if (pos_ >= s_.size()) fail("expected an integer, found end of input");
      fail(std::string("expected an integer, found '") + s_[pos_] + "'");
    }
    std::int64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      if (v > 100000000) {
        pos_ = start;
        fail("integer too large");
      }
      v = v * 10 + (s_[pos_++] - '0');
    }
    return negative ? -v : v;
  }

  std::unique_ptr<Expr> factor() {
    auto base = atom();
    if (peek('^')) {
      const auto off = pos_++;
      auto p = node(Expr::Kind::pow, off);
      p->n = integer(true);
      p->args.push_back(std::move(base));
      return p;
    }
    return base;
  }

  std::unique_ptr<Expr> atom() {
    skip_ws();
    if (pos_ >= s_.size()) fail("expected a generator, number, 'z' or '(', found end of input");
    const auto off = pos_;
    const char c = s_[pos_];
    switch (c) {
      case 'E':
      case 'F': {
        ++pos_;
        // E^( starts a divided power; E^n is an ordinary power handled by factor().
        std::size_t look = pos_;
        while (look < s_.size() && std::isspace(static_cast<unsigned char>(s_[look]))) ++look;
        if (look < s_.size() && s_[look] == '^') {
          std::size_t after = look + 1;
          while (after < s_.size() && std::isspace(static_cast<unsigned char>(s_[after]))) ++after;
          if (after >= s_.size() || s_[after] == '(') {
            pos_ = after;
            expect('(');
            auto e = node(c == 'E' ? Expr::Kind::E_div : Expr::Kind::F_div, off);
            e->n = integer(false);
            expect(')');
            return e;
          }
        }
        return node(c == 'E' ? Expr::Kind::E : Expr::Kind::F, off);
      }
      case 'K':
        ++pos_;
        return node(Expr::Kind::K, off);
      case 'B':
        ++pos_;
        return node(Expr::Kind::B, off);
      case 'z':
        ++pos_;
        return node(Expr::Kind::zeta, off);
      case '(': {
        ++pos_;
        auto inner = expr();
        expect(')');
        return inner;
      }
      default:
        break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t end = pos_;
      while (end < s_.size() && std::isdigit(static_cast<unsigned char>(s_[end]))) ++end;
      std::string text(s_.substr(pos_, end - pos_));
      if (end < s_.size() && s_[end] == '/') {
        std::size_t den_end = end + 1;
        while (den_end < s_.size() && std::isdigit(static_cast<unsigned char>(s_[den_end]))) ++den_end;
        if (den_end == end + 1) {
          pos_ = end + 1;
          fail("expected a denominator");
        }
        text = std::string(s_.substr(pos_, den_end - pos_));
        end = den_end;
      }
      auto e = node(Expr::Kind::rational, off);
      try {
        e->value = parse_rat(text);
      } catch (const std::invalid_argument&) {
        fail("invalid rational literal '" + text + "'");
      }
      pos_ = end;
      return e;
    }
    fail(std::string("unknown token '") + c + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

PBWElem checked(PBWElem x, std::size_t max_terms) {
  const auto n = x.term_count();
  if (n > max_terms)
    throw TermLimitExceeded("normal form has " + std::to_string(n) + " terms, above the cap of " +
                            std::to_string(max_terms));
  return x;
}

// The value of x as K^c times a nonzero scalar, if it has that shape.
bool as_unit(const PBWElem& x, std::int64_t& c, CycScalar& s) {
  const auto t = x.terms();
  if (t.size() != 1) return false;
  const auto& [m, coeff] = *t.begin();
  if (m.a != 0 || m.b != 0 || m.d != 0) return false;
  c = m.c;
  s = coeff;
  return true;
}

}  // namespace

std::string Expr::to_string() const {
  auto sub = [&](std::size_t i) { return args[i]->to_string(); };
  switch (kind) {
    case Kind::add: return "(" + sub(0) + " + " + sub(1) + ")";
    case Kind::sub: return "(" + sub(0) + " - " + sub(1) + ")";
    case Kind::mul: return "(" + sub(0) + " * " + sub(1) + ")";
    case Kind::neg: return "(-" + sub(0) + ")";
    case Kind::pow: return "(" + sub(0) + ")^" + std::to_string(n);
    case Kind::E: return "E";
    case Kind::F: return "F";
    case Kind::K: return "K";
    case Kind::B: return "B";
    case Kind::E_div: return "E^(" + std::to_string(n) + ")";
    case Kind::F_div: return "F^(" + std::to_string(n) + ")";
    case Kind::rational: return hyperzeta::to_string(value);
    case Kind::zeta: return "z";
  }
  return "?";
}

std::unique_ptr<Expr> parse(std::string_view input) { return Parser(input).parse_all(); }

PBWElem evaluate(const Expr& e, int ell, std::size_t max_terms) {
  const auto& f = CyclotomicField::get(ell);
  auto sub = [&](std::size_t i) { return evaluate(*e.args[i], ell, max_terms); };
  switch (e.kind) {
    case Expr::Kind::add: return checked(sub(0) + sub(1), max_terms);
    case Expr::Kind::sub: return checked(sub(0) - sub(1), max_terms);
    case Expr::Kind::mul: return checked(pbw_mul(sub(0), sub(1)), max_terms);
    case Expr::Kind::neg: return -sub(0);
    case Expr::Kind::E: return PBWElem::E(ell);
    case Expr::Kind::F: return PBWElem::F(ell);
    case Expr::Kind::K: return PBWElem::K(ell);
    case Expr::Kind::B: return PBWElem::B(ell);
    case Expr::Kind::E_div: return PBWElem::E(ell, e.n);
    case Expr::Kind::F_div: return PBWElem::F(ell, e.n);
    case Expr::Kind::rational: return PBWElem::scalar(ell, CycScalar(f, e.value));
    case Expr::Kind::zeta: return PBWElem::scalar(ell, f.zeta_pow(1));
    case Expr::Kind::pow: {
      PBWElem base = sub(0);
      if (e.n >= 0) {
        PBWElem acc = PBWElem::one(ell);
        for (std::int64_t i = 0; i < e.n; ++i) acc = checked(pbw_mul(acc, base), max_terms);
        return acc;
      }
      std::int64_t c = 0;
      CycScalar s;
      if (!as_unit(base, c, s))
        throw EvalError("negative power at offset " + std::to_string(e.offset) +
                        " applies to a non-invertible value " + base.to_string());
      const auto k = -e.n;
      return PBWElem::monomial(ell, {0, floor_mod(-c * k, ell), 0, 0}, s.inverse().pow(k));
    }
  }
  throw EvalError("unknown expression node");
}

}  // namespace hyperzeta::cli
