#include "opcalc/expression.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace opcalc {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

class Reader {
 public:
  explicit Reader(const std::vector<std::string>& t) : toks_(t) {}

  bool done() const { return pos_ >= toks_.size(); }
  const std::string& peek() const {
    if (done()) throw UsageError("unexpected end of expression");
    return toks_[pos_];
  }
  std::string next() {
    std::string t = peek();
    ++pos_;
    return t;
  }
  void expect(const std::string& t) {
    if (next() != t) throw UsageError("expected '" + t + "'");
  }

  OperadPresentation spec() {
    std::string t = next();
    if (t == "(") {
      OperadPresentation o = expr();
      expect(")");
      return o;
    }
    if (t == ")") throw UsageError("unexpected ')'");
    return atom(t);
  }

  OperadPresentation expr() {
    std::string verb = next();
    if (verb == "black") {
      Family f = parse_black_family(next());
      return black(f, spec());
    }
    if (verb == "white") {
      Family f = parse_white_family(next());
      return white_direct(f, spec());
    }
    if (verb == "dual") return dual(spec());
    if (verb == "adm") return adm(spec());
    if (verb == "opp") return opposite_operad(spec());
    if (verb == "sum" || verb == "prod") {
      OperadPresentation a = spec();
      OperadPresentation b = spec();
      return verb == "sum" ? sum(a, b) : prod(a, b);
    }
    if (verb == "show") return zoo_get(next());
    if (verb == "parse") return load_file(next());
    if (verb == "(" || verb == ")") throw UsageError("expected a verb");
    // a bare SPEC
    return atom(verb);
  }

 private:
  static OperadPresentation atom(const std::string& t) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(t, ec)) return load_file(t);
    return zoo_get(t);
  }

  const std::vector<std::string>& toks_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<std::string> tokenize_spec(const std::string& text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (is_space(c)) {
      ++i;
      continue;
    }
    if (c == '(' || c == ')') {
      out.emplace_back(1, c);
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !is_space(text[j]) && text[j] != '(' && text[j] != ')') ++j;
    std::string word = text.substr(i, j - i);
    // mag(p,q,r) keeps its parentheses
    if ((word == "mag" || word == "Mag") && j < text.size() && text[j] == '(') {
      std::size_t close = text.find(')', j);
      if (close == std::string::npos) throw UsageError("unclosed mag(");
      word = text.substr(i, close + 1 - i);
      j = close + 1;
    }
    out.push_back(word);
    i = j;
  }
  return out;
}

OperadPresentation evaluate_expression(const std::vector<std::string>& tokens) {
  if (tokens.empty()) throw UsageError("empty expression");
  Reader r(tokens);
  OperadPresentation o = r.expr();
  if (!r.done()) throw UsageError("trailing input '" + r.peek() + "'");
  return o;
}

OperadPresentation evaluate_spec(const std::string& text) { return evaluate_expression(tokenize_spec(text)); }

OperadPresentation load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw LookupError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_presentation(ss.str());
}

Family parse_black_family(const std::string& s) {
  if (s == "ass") return Family::AssBlack;
  if (s == "com") return Family::ComBlack;
  if (s == "prelie") return Family::PreLieRBlack;
  if (s == "prelie-left") return Family::PreLieLBlack;
  throw UsageError("unknown black family '" + s + "' (ass, com, prelie, prelie-left)");
}

Family parse_white_family(const std::string& s) {
  if (s == "ass") return Family::AssWhite;
  if (s == "lie") return Family::LieWhite;
  if (s == "perm") return Family::PermWhite;
  throw UsageError("unknown white family '" + s + "' (ass, lie, perm)");
}

}  // namespace opcalc
