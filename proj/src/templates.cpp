#include "weylcells/templates.hpp"

#include <cctype>

namespace weylcells {

namespace {

class ExprParser {
 public:
  ExprParser(const std::string& text, const Bindings* vars) : s_(text), vars_(vars) {}

  Int parse_all() {
    const Int v = comparison();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return v;
  }

  bool closed() {
    for (std::size_t i = 0; i < s_.size();) {
      if (std::islower(static_cast<unsigned char>(s_[i]))) {
        std::size_t j = i;
        while (j < s_.size() && std::isalnum(static_cast<unsigned char>(s_[j]))) ++j;
        if (!vars_->count(s_.substr(i, j - i))) return false;
        i = j;
      } else {
        ++i;
      }
    }
    return true;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw InvalidArgument("bad expression '" + s_ + "': " + why);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(const std::string& tok) {
    skip();
    if (s_.compare(pos_, tok.size(), tok) == 0) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  Int comparison() {
    const Int lhs = sum();
    if (eat("==")) return lhs == sum();
    if (eat("!=")) return lhs != sum();
    if (eat("<=")) return lhs <= sum();
    if (eat(">=")) return lhs >= sum();
    if (eat("<")) return lhs < sum();
    if (eat(">")) return lhs > sum();
    return lhs;
  }

  Int sum() {
    Int v = product();
    while (true) {
      if (eat("+")) v += product();
      else if (eat("-")) v -= product();
      else return v;
    }
  }

  Int product() {
    Int v = unary();
    while (true) {
      if (eat("*")) {
        v *= unary();
      } else if (eat("/")) {
        const Int d = unary();
        if (d == 0) fail("division by zero");
        Int q = v / d;
        if ((v % d != 0) && ((v < 0) != (d < 0))) --q;
        v = q;
      } else if (eat("%")) {
        const Int d = unary();
        if (d == 0) fail("division by zero");
        v = ((v % d) + d) % d;
      } else {
        return v;
      }
    }
  }

  Int unary() {
    if (eat("-")) return -unary();
    return primary();
  }

  Int primary() {
    skip();
    if (eat("(")) {
      const Int v = comparison();
      if (!eat(")")) fail("missing ')'");
      return v;
    }
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      Int v = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) v = 10 * v + (s_[pos_++] - '0');
      return v;
    }
    if (pos_ < s_.size() && std::islower(static_cast<unsigned char>(s_[pos_]))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      const auto name = s_.substr(start, pos_ - start);
      const auto it = vars_->find(name);
      if (it == vars_->end()) fail("unbound variable '" + name + "'");
      return it->second;
    }
    fail("unexpected input at offset " + std::to_string(pos_));
  }

  const std::string& s_;
  const Bindings* vars_;
  std::size_t pos_ = 0;
};

class WordExpander {
 public:
  WordExpander(const std::string& text, const Bindings& vars) : s_(text), vars_(vars) {}

  Word run() {
    Word w = sequence();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw InvalidArgument("bad word template '" + s_ + "': " + why);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  // Text up to the matching closer at depth 0, consumed including closer.
  std::string until(char closer) {
    int depth = 0;
    const std::size_t start = pos_;
    while (pos_ < s_.size()) {
      const char c = s_[pos_];
      if (c == '(' || c == '{' || c == '[') ++depth;
      if ((c == ')' || c == '}' || c == ']') && depth == 0) {
        if (c != closer) fail("mismatched bracket");
        return s_.substr(start, pos_++ - start);
      }
      if (c == ')' || c == '}' || c == ']') --depth;
      ++pos_;
    }
    fail("unterminated bracket");
  }

  Int braced() {
    if (pos_ >= s_.size() || s_[pos_] != '{') fail("expected '{'");
    ++pos_;
    return eval_expr(until('}'), vars_);
  }

  Int node_or_braced() {
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) return s_[pos_++] - '0';
    return braced();
  }

  std::pair<Int, Int> range_bounds(const std::string& body) {
    const auto dots = body.find("..");
    if (dots == std::string::npos) fail("range without '..'");
    return {eval_expr(body.substr(0, dots), vars_), eval_expr(body.substr(dots + 2), vars_)};
  }

  Word sequence() {
    Word out;
    while (true) {
      skip();
      if (pos_ >= s_.size() || s_[pos_] == ')') return out;
      Word item = atom();
      skip();
      if (pos_ < s_.size() && s_[pos_] == '^') {
        ++pos_;
        skip();
        Int power = 0;
        if (pos_ < s_.size() && s_[pos_] == '{') {
          power = braced();
        } else {
          const std::size_t start = pos_;
          while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
          if (start == pos_) fail("missing exponent");
          power = std::stoll(s_.substr(start, pos_ - start));
        }
        if (power < 0) fail("negative exponent " + std::to_string(power));
        Word rep;
        for (Int i = 0; i < power; ++i) rep.insert(rep.end(), item.begin(), item.end());
        item = std::move(rep);
      }
      out.insert(out.end(), item.begin(), item.end());
    }
  }

  Word atom() {
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      ++pos_;
      return {Letter::s(c - '0')};
    }
    if (c == '{') return {Letter::s(static_cast<int>(braced()))};
    if (c == 'g') {
      ++pos_;
      const Int label = node_or_braced();
      if (label == 0) return {};
      return {Letter::gamma(static_cast<int>(label))};
    }
    if (c == '(') {
      ++pos_;
      Word inner = sequence();
      if (pos_ >= s_.size() || s_[pos_] != ')') fail("missing ')'");
      ++pos_;
      return inner;
    }
    if (c == '[') {
      ++pos_;
      const auto [a, b] = range_bounds(until(']'));
      char mode = 0;
      if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) mode = s_[pos_++];
      Word out;
      if (mode == '+' && a > b) return out;
      if (mode == '-' && a < b) return out;
      const Int step = a <= b ? 1 : -1;
      for (Int i = a;; i += step) {
        out.push_back(Letter::s(static_cast<int>(i)));
        if (i == b) break;
      }
      return out;
    }
    if (c == 'P') {
      ++pos_;
      if (pos_ >= s_.size() || s_[pos_] != '[') fail("expected '[' after P");
      ++pos_;
      const auto header = until(']');
      const auto eq = header.find('=');
      if (eq == std::string::npos) fail("product header needs 'var=a..b'");
      const auto var = header.substr(0, eq);
      const auto [a, b] = range_bounds(header.substr(eq + 1));
      skip();
      if (pos_ >= s_.size() || s_[pos_] != '(') fail("expected '(' after product header");
      ++pos_;
      const auto body = until(')');
      Word out;
      for (Int i = a; i <= b; ++i) {
        Bindings inner = vars_;
        inner[var] = i;
        const auto piece = WordExpander(body, inner).run();
        out.insert(out.end(), piece.begin(), piece.end());
      }
      return out;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const std::string& s_;
  const Bindings& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

Int eval_expr(const std::string& expr, const Bindings& vars) { return ExprParser(expr, &vars).parse_all(); }

bool expr_is_closed(const std::string& expr, const Bindings& vars) { return ExprParser(expr, &vars).closed(); }

Word expand_word(const std::string& word_template, const Bindings& vars) {
  return WordExpander(word_template, vars).run();
}

std::vector<Int> expand_label(const std::string& label_template, int rank, const Bindings& vars) {
  std::vector<Int> finite(rank, 0);
  if (label_template == "0") return finite;
  std::size_t start = 0;
  while (start <= label_template.size()) {
    auto end = label_template.find(',', start);
    if (end == std::string::npos) end = label_template.size();
    const auto term = label_template.substr(start, end - start);
    const auto colon = term.find(':');
    if (colon == std::string::npos) throw InvalidArgument("label term '" + term + "' needs 'coef:index'");
    const Int coef = eval_expr(term.substr(0, colon), vars);
    const Int index = eval_expr(term.substr(colon + 1), vars);
    if (index < 0 || index > rank)
      throw InvalidArgument("label index " + std::to_string(index) + " out of range in '" + label_template + "'");
    if (index > 0) finite[index - 1] += coef;
    start = end + 1;
  }
  return finite;
}

std::string substitute(const std::string& text, const Bindings& vars) {
  std::string out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '{') {
      out.push_back(text[i]);
      continue;
    }
    const auto close = text.find('}', i);
    if (close == std::string::npos) throw InvalidArgument("unterminated '{' in '" + text + "'");
    out += std::to_string(eval_expr(text.substr(i + 1, close - i - 1), vars));
    i = close;
  }
  return out;
}

}  // namespace weylcells
