#include "expr.hpp"

#include <cctype>
#include <vector>

#include "error.hpp"
#include "theta.hpp"

namespace theta2 {

namespace {

struct ThetaNode final : Expr {
  int64_t index;
  explicit ThetaNode(int64_t i) : index(i) {}
  Series eval(int64_t l, int64_t E) const override {
    return theta_series(l, index, E);
  }
};

struct OneNode final : Expr {
  Series eval(int64_t, int64_t E) const override { return Series::one(E); }
};

struct SumNode final : Expr {
  std::vector<ExprPtr> terms;
  Series eval(int64_t l, int64_t E) const override {
    Series acc = Series::zero(E);
    for (const auto& t : terms) acc = acc.add(t->eval(l, E));
    return acc;
  }
};

struct ProductNode final : Expr {
  std::vector<ExprPtr> factors;
  Series eval(int64_t l, int64_t E) const override {
    Series acc = Series::one(E);
    for (const auto& f : factors) acc = acc.mul(f->eval(l, E));
    return acc;
  }
};

struct PowNode final : Expr {
  ExprPtr base;
  uint64_t exponent;
  Series eval(int64_t l, int64_t E) const override {
    return base->eval(l, E).pow(exponent);
  }
};

struct ProjectNode final : Expr {
  uint64_t q, j;
  ExprPtr inner;
  Series eval(int64_t l, int64_t E) const override {
    return inner->eval(l, E).project(q, j);
  }
};

struct InvNode final : Expr {
  ExprPtr inner;
  Series eval(int64_t l, int64_t E) const override {
    return inner->eval(l, E).inverse();
  }
};

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  ExprPtr parse() {
    ExprPtr e = expr();
    skip_ws();
    if (pos_ != text_.size())
      throw Error(ErrorKind::kUsage, "trailing input in expression");
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool at(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool eat(char c) {
    if (!at(c)) return false;
    ++pos_;
    return true;
  }

  void expect(char c, const char* what) {
    if (!eat(c)) throw Error(ErrorKind::kUsage, std::string("expected ") + what);
  }

  bool eat_word(const char* w) {
    skip_ws();
    std::size_t k = 0;
    while (w[k] != '\0') {
      if (pos_ + k >= text_.size() || text_[pos_ + k] != w[k]) return false;
      ++k;
    }
    pos_ += k;
    return true;
  }

  int64_t parse_int() {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == start || (pos_ - start == 1 && !std::isdigit(static_cast<unsigned char>(text_[start]))))
      throw Error(ErrorKind::kUsage, "expected integer in expression");
    return std::stoll(text_.substr(start, pos_ - start));
  }

  uint64_t parse_uint() {
    const int64_t v = parse_int();
    if (v < 0) throw Error(ErrorKind::kUsage, "expected nonnegative integer");
    return static_cast<uint64_t>(v);
  }

  ExprPtr expr() {
    auto sum = std::make_shared<SumNode>();
    sum->terms.push_back(term());
    while (eat('+')) sum->terms.push_back(term());
    if (sum->terms.size() == 1) return sum->terms.front();
    return sum;
  }

  bool starts_factor() {
    skip_ws();
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return c == '[' || c == '(' || c == '1' || c == 'P' || c == 'i';
  }

  ExprPtr term() {
    auto prod = std::make_shared<ProductNode>();
    prod->factors.push_back(factor());
    while (true) {
      if (eat('*')) {
        prod->factors.push_back(factor());
      } else if (starts_factor()) {
        prod->factors.push_back(factor());
      } else {
        break;
      }
    }
    if (prod->factors.size() == 1) return prod->factors.front();
    return prod;
  }

  ExprPtr factor() {
    ExprPtr base = primary();
    skip_ws();
    if (eat('^')) {
      auto p = std::make_shared<PowNode>();
      p->base = base;
      p->exponent = parse_uint();
      return p;
    }
    return base;
  }

  ExprPtr primary() {
    skip_ws();
    if (pos_ >= text_.size())
      throw Error(ErrorKind::kUsage, "unexpected end of expression");
    if (eat('[')) {
      const int64_t idx = parse_int();
      expect(']', "']'");
      return std::make_shared<ThetaNode>(idx);
    }
    if (eat('(')) {
      ExprPtr inner = expr();
      expect(')', "')'");
      return inner;
    }
    if (eat_word("P(")) {
      auto p = std::make_shared<ProjectNode>();
      p->q = parse_uint();
      expect(',', "','");
      p->j = parse_uint();
      expect(';', "';'");
      p->inner = expr();
      expect(')', "')'");
      return p;
    }
    if (eat_word("inv(")) {
      auto p = std::make_shared<InvNode>();
      p->inner = expr();
      expect(')', "')'");
      return p;
    }
    if (text_[pos_] == '1' &&
        (pos_ + 1 >= text_.size() ||
         !std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))) {
      ++pos_;
      return std::make_shared<OneNode>();
    }
    throw Error(ErrorKind::kUsage, "unexpected character in expression");
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

ExprPtr expr_parse(const std::string& text) { return Parser(text).parse(); }

Series expr_eval(const ExprPtr& e, int64_t l, int64_t E) {
  return e->eval(l, E);
}

}  // namespace theta2
