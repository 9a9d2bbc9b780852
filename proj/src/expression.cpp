#include "lpa/expression.hpp"

#include <cctype>
#include <string>

#include "lpa/errors.hpp"

namespace lpa {

namespace {

class ExpressionParser {
 public:
  ExpressionParser(std::string_view src, const LeavittPathAlgebra& alg)
      : src_(src), alg_(alg), g_(alg.graph()) {}

  AlgebraElement parse() {
    AlgebraElement result = alg_.zero();
    skip_ws();
    if (at_end()) fail("empty expression");
    bool negative = false;
    if (peek() == '+' || peek() == '-') negative = src_[pos_++] == '-';
    for (;;) {
      AlgebraElement t = term();
      result = negative ? result - t : result + t;
      skip_ws();
      if (at_end()) break;
      char c = peek();
      if (c != '+' && c != '-') fail(std::string("expected '+' or '-', found '") + c + "'");
      negative = c == '-';
      ++pos_;
    }
    return result;
  }

 private:
  bool at_end() const { return pos_ >= src_.size(); }
  char peek() const { return src_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) const { fail_at(msg, pos_); }
  [[noreturn]] void fail_at(const std::string& msg, std::size_t at) const {
    throw ParseError("column " + std::to_string(at + 1) + ": " + msg, 0, at);
  }

  // A coefficient is present iff a top-level '*' comes before the next
  // top-level '+' or '-'.
  std::optional<std::size_t> find_star() const {
    int depth = 0;
    for (std::size_t i = pos_; i < src_.size(); ++i) {
      char c = src_[i];
      if (c == '[') ++depth;
      else if (c == ']') --depth;
      else if (depth == 0 && (c == '+' || c == '-')) return std::nullopt;
      else if (depth == 0 && c == '*') return i;
    }
    return std::nullopt;
  }

  AlgebraElement term() {
    skip_ws();
    RingElement coeff = alg_.ring().one();
    if (auto star = find_star()) {
      std::size_t start = pos_;
      try {
        coeff = alg_.ring().parse_literal(src_.substr(pos_, *star - pos_));
      } catch (const ParseError& e) {
        fail_at(std::string("bad ring literal: ") + e.what(), start);
      }
      pos_ = *star + 1;
      skip_ws();
    }
    Path real = path();
    skip_ws();
    Path ghost = Path::vertex(real.range());
    if (!at_end() && peek() == '|') {
      ++pos_;
      skip_ws();
      ghost = path();
    }
    return alg_.monomial(real, ghost, coeff);
  }

  std::string identifier() {
    std::size_t start = pos_;
    while (!at_end() &&
           (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
      ++pos_;
    if (start == pos_) {
      if (at_end()) fail("expected an identifier, found end of input");
      fail(std::string("expected an identifier, found '") + peek() + "'");
    }
    return std::string(src_.substr(start, pos_ - start));
  }

  Path path() {
    std::size_t start = pos_;
    std::vector<std::pair<std::string, std::size_t>> ids;
    ids.emplace_back(identifier(), start);
    while (!at_end() && peek() == '.') {
      ++pos_;
      std::size_t at = pos_;
      ids.emplace_back(identifier(), at);
    }
    if (ids.size() == 1) {
      const auto& [name, at] = ids.front();
      if (auto v = g_.find_vertex(name)) return Path::vertex(*v);
      if (auto e = g_.find_edge(name)) return Path::edge(g_, *e);
      fail_at("unknown id " + name, at);
    }
    std::vector<EdgeId> edges;
    for (const auto& [name, at] : ids) {
      if (auto e = g_.find_edge(name)) {
        edges.push_back(*e);
      } else if (g_.find_vertex(name)) {
        fail_at("vertex " + name + " cannot appear inside an edge path", at);
      } else {
        fail_at("unknown id " + name, at);
      }
    }
    try {
      return Path::from_edges(g_, std::move(edges));
    } catch (const PreconditionError& e) {
      fail_at(e.what(), start);
    }
  }

  std::string_view src_;
  const LeavittPathAlgebra& alg_;
  const Graph& g_;
  std::size_t pos_ = 0;
};

}  // namespace

AlgebraElement parse_expression(std::string_view src, const LeavittPathAlgebra& alg) {
  return ExpressionParser(src, alg).parse();
}

}  // namespace lpa
