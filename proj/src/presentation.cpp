#include "opcalc/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <regex>
#include <sstream>

#include <json.hpp>

namespace opcalc {

Subspace s3_closure(const Signature& sig, const std::vector<Element3>& relators) {
  RrefBuilder b(sig.dim3());
  for (const auto& r : relators) {
    for (const auto& p : all_permutations()) b.add(permute_variables(sig, r, p));
  }
  return b.finish();
}

OperadPresentation make_presentation(std::string name, Signature sig,
                                     std::vector<Element3> relators) {
  OperadPresentation o;
  o.name = std::move(name);
  o.relations = s3_closure(sig, relators);
  o.signature = std::move(sig);
  for (auto& r : relators) {
    if (!r.empty()) o.relators.push_back(std::move(r));
  }
  return o;
}

OperadPresentation from_relations(std::string name, Signature sig, Subspace relations) {
  if (relations.ambient_dim() != sig.dim3()) {
    throw StructuralError("relation space ambient does not match signature");
  }
  OperadPresentation o;
  o.name = std::move(name);
  o.signature = std::move(sig);
  o.relators = relations.basis();
  o.relations = std::move(relations);
  return o;
}

bool same_operad(const OperadPresentation& a, const OperadPresentation& b) {
  return a.signature.same_shape(b.signature) && a.relations == b.relations;
}

OperadPresentation rename(const OperadPresentation& o, std::string name,
                          const std::vector<std::string>& generator_names) {
  if (generator_names.size() != o.signature.size()) {
    throw StructuralError("rename needs one name per generator");
  }
  std::vector<Generator> gens = o.signature.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) gens[i].name = generator_names[i];
  OperadPresentation r = o;
  r.name = std::move(name);
  r.signature = Signature(std::move(gens));
  return r;
}

// ---------------------------------------------------------------- parsing

namespace {

enum class Tok { Ident, Int, Punct, End };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
};

std::vector<Token> tokenize(const std::string& src) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '/' && i + 1 < src.size() && src[i + 1] == '/') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    int l = line;
    int cc = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) {
        ++j;
      }
      out.push_back({Tok::Ident, src.substr(i, j - i), l, cc});
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Tok::Int, src.substr(i, j - i), l, cc});
      advance(j - i);
    } else if (std::string("{}(),;:+-*/").find(c) != std::string::npos) {
      out.push_back({Tok::Punct, std::string(1, c), l, cc});
      advance(1);
    } else {
      throw ParseError(l, cc, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

struct Node {
  int var = -1;  // 0,1,2 for x,y,z
  int gen = -1;
  std::unique_ptr<Node> left;
  std::unique_ptr<Node> right;
  int line = 0;
  int col = 0;
};

class Parser {
 public:
  explicit Parser(const std::string& src) : toks_(tokenize(src)) {}

  OperadPresentation run() {
    expect_word("operad");
    std::string name = expect_ident("operad name");
    expect_punct("{");
    expect_word("gens");
    expect_punct(":");
    std::vector<Generator> gens;
    if (!peek_punct(";")) {
      while (true) {
        const Token& t = cur();
        std::string gname = expect_ident("generator name");
        if (gname == "x" || gname == "y" || gname == "z") {
          throw ParseError(t.line, t.col, "'" + gname + "' is reserved for variables");
        }
        for (const auto& g : gens) {
          if (g.name == gname) {
            throw ParseError(t.line, t.col, "duplicate generator '" + gname + "'");
          }
        }
        expect_punct(":");
        const Token& st = cur();
        std::string sym = expect_ident("symmetry");
        if (sym != "nonsym" && sym != "sym" && sym != "antisym") {
          throw ParseError(st.line, st.col,
                           "expected nonsym, sym or antisym, got '" + sym + "'");
        }
        gens.push_back({gname, parse_symmetry(sym)});
        if (peek_punct(",")) {
          ++pos_;
          continue;
        }
        break;
      }
    }
    expect_punct(";");
    sig_ = Signature(gens);
    std::vector<Element3> relators;
    while (cur().kind == Tok::Ident && cur().text == "rel") {
      ++pos_;
      expect_punct(":");
      relators.push_back(expr());
      expect_punct(";");
    }
    expect_punct("}");
    if (cur().kind != Tok::End) fail("trailing input after operad block");
    return make_presentation(name, sig_, std::move(relators));
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  Signature sig_;

  const Token& cur() const { return toks_[pos_]; }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(cur().line, cur().col, msg);
  }
  bool peek_punct(const char* p) const {
    return cur().kind == Tok::Punct && cur().text == p;
  }
  void expect_punct(const char* p) {
    if (!peek_punct(p)) {
      fail(std::string("expected '") + p + "'" +
           (cur().kind == Tok::End ? " at end of input" : ", got '" + cur().text + "'"));
    }
    ++pos_;
  }
  void expect_word(const char* w) {
    if (cur().kind != Tok::Ident || cur().text != w) fail(std::string("expected '") + w + "'");
    ++pos_;
  }
  std::string expect_ident(const char* what) {
    if (cur().kind != Tok::Ident) fail(std::string("expected ") + what);
    return toks_[pos_++].text;
  }

  Scalar rational() {
    std::string num = toks_[pos_++].text;
    if (peek_punct("/")) {
      ++pos_;
      if (cur().kind != Tok::Int) fail("expected denominator");
      std::string den = toks_[pos_++].text;
      if (Scalar(den) == 0) fail("zero denominator");
      return parse_scalar(num + "/" + den);
    }
    return parse_scalar(num);
  }

  Element3 expr() {
    Element3 acc;
    bool first = true;
    while (true) {
      Scalar sign = 1;
      if (peek_punct("+") || peek_punct("-")) {
        sign = cur().text == "-" ? -1 : 1;
        ++pos_;
      } else if (!first) {
        break;
      }
      first = false;
      Scalar coef = 1;
      if (cur().kind == Tok::Int) {
        coef = rational();
        expect_punct("*");
      }
      acc.axpy(sign * coef, term());
    }
    return acc;
  }

  std::unique_ptr<Node> arg() {
    const Token& t = cur();
    if (t.kind == Tok::Ident && (t.text == "x" || t.text == "y" || t.text == "z")) {
      auto n = std::make_unique<Node>();
      n->var = t.text[0] - 'x';
      n->line = t.line;
      n->col = t.col;
      ++pos_;
      return n;
    }
    return app();
  }

  std::unique_ptr<Node> app() {
    const Token& t = cur();
    if (t.kind != Tok::Ident) fail("expected generator application or variable");
    auto g = sig_.find(t.text);
    if (!g) throw ParseError(t.line, t.col, "unknown generator '" + t.text + "'");
    auto n = std::make_unique<Node>();
    n->gen = *g;
    n->line = t.line;
    n->col = t.col;
    ++pos_;
    expect_punct("(");
    n->left = arg();
    expect_punct(",");
    n->right = arg();
    expect_punct(")");
    return n;
  }

  Element3 term() {
    const Token& start = cur();
    auto root = app();
    std::vector<int> seen(3, 0);
    std::vector<std::uint8_t> leaves;
    Shape shape;
    int inner;
    auto take_var = [&](const Node& n) {
      if (n.var < 0) throw ParseError(n.line, n.col, "relator must be ternary");
      if (seen[n.var]++) {
        throw ParseError(n.line, n.col,
                         std::string("variable used twice: ") + static_cast<char>('x' + n.var));
      }
      leaves.push_back(static_cast<std::uint8_t>(n.var));
    };
    auto take_inner = [&](const Node& n) {
      if (n.left->gen >= 0 || n.right->gen >= 0) {
        throw ParseError(n.line, n.col, "relator must be ternary");
      }
      take_var(*n.left);
      take_var(*n.right);
    };
    if (root->left->gen >= 0 && root->right->gen >= 0) {
      throw ParseError(start.line, start.col, "relator must be ternary");
    }
    if (root->left->gen >= 0) {
      shape = Shape::Left;
      inner = root->left->gen;
      take_inner(*root->left);
      take_var(*root->right);
    } else if (root->right->gen >= 0) {
      shape = Shape::Right;
      inner = root->right->gen;
      take_var(*root->left);
      take_inner(*root->right);
    } else {
      throw ParseError(start.line, start.col, "relator must be ternary");
    }
    if (!(seen[0] && seen[1] && seen[2])) {
      throw ParseError(start.line, start.col, "each term must use x, y and z exactly once");
    }
    return monomial_element(sig_, shape, root->gen, inner, {leaves[0], leaves[1], leaves[2]});
  }
};

}  // namespace

OperadPresentation parse_presentation(const std::string& text) { return Parser(text).run(); }

// ---------------------------------------------------------------- rendering

Format parse_format(const std::string& s) {
  if (s == "text") return Format::Text;
  if (s == "json") return Format::Json;
  if (s == "latex") return Format::Latex;
  throw StructuralError("unknown format '" + s + "'");
}

namespace {

std::string identifier(const std::string& s) {
  std::string out;
  for (char c : s) {
    out += (std::isalnum(static_cast<unsigned char>(c)) || c == '_') ? c : '_';
  }
  while (out.find("__") != std::string::npos) out.replace(out.find("__"), 2, "_");
  while (!out.empty() && out.back() == '_') out.pop_back();
  if (out.empty() || std::isdigit(static_cast<unsigned char>(out[0]))) out = "o_" + out;
  return out;
}

std::string latex_name(const std::string& n) {
  std::string out;
  for (char c : n) {
    if (c == '_') {
      out += "\\_";
    } else {
      out += c;
    }
  }
  return "\\mathrm{" + out + "}";
}

std::string latex_element(const Element3& e, const Signature& sig) {
  static const char* vars[] = {"x", "y", "z"};
  std::string s;
  bool first = true;
  for (const auto& [idx, coef] : e) {
    Scalar c = coef;
    if (!first) {
      s += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    } else if (c < 0) {
      s += "-";
      c = -c;
    }
    first = false;
    if (c != 1) {
      s += c.get_den() == 1 ? c.get_num().get_str()
                            : "\\tfrac{" + c.get_num().get_str() + "}{" +
                                  c.get_den().get_str() + "}";
    }
    const Monomial3& m = sig.basis()[idx];
    std::string o = latex_name(sig[m.outer].name);
    std::string i = latex_name(sig[m.inner].name);
    const auto& l = m.leaves;
    if (m.shape == Shape::Left) {
      s += o + "(" + i + "(" + vars[l[0]] + "," + vars[l[1]] + ")," + vars[l[2]] + ")";
    } else {
      s += o + "(" + vars[l[0]] + "," + i + "(" + vars[l[1]] + "," + vars[l[2]] + "))";
    }
  }
  return s;
}

}  // namespace

std::string render_dsl(const OperadPresentation& o) {
  std::ostringstream out;
  const Signature& sig = o.signature;
  out << "operad " << identifier(o.name) << " {\n  gens:";
  for (std::size_t i = 0; i < sig.size(); ++i) {
    out << (i ? ", " : " ") << sig[i].name << ":" << to_string(sig[i].symmetry);
  }
  out << ";\n";
  for (const auto& r : o.relators) {
    if (!r.empty()) out << "  rel: " << to_string(r, sig) << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string render(const OperadPresentation& o, Format f) {
  const Signature& sig = o.signature;
  switch (f) {
    case Format::Text:
      return render_dsl(o);
    case Format::Json: {
      static const char* vars[] = {"x", "y", "z"};
      nlohmann::json j;
      j["name"] = o.name;
      j["generators"] = nlohmann::json::array();
      for (const auto& g : sig.generators()) {
        j["generators"].push_back({{"name", g.name}, {"symmetry", to_string(g.symmetry)}});
      }
      j["dim3"] = sig.dim3();
      j["relation_basis"] = nlohmann::json::array();
      for (const auto& row : o.relations.basis()) {
        nlohmann::json terms = nlohmann::json::array();
        for (const auto& [idx, c] : row) {
          const Monomial3& m = sig.basis()[idx];
          terms.push_back({{"shape", m.shape == Shape::Left ? "left" : "right"},
                           {"outer", sig[m.outer].name},
                           {"inner", sig[m.inner].name},
                           {"leaves", {vars[m.leaves[0]], vars[m.leaves[1]], vars[m.leaves[2]]}},
                           {"coeff", to_string(c)}});
        }
        j["relation_basis"].push_back(terms);
      }
      return j.dump(2) + "\n";
    }
    case Format::Latex: {
      std::ostringstream out;
      for (const auto& r : o.relators) {
        if (r.empty()) continue;
        out << "\\begin{aligned}\n  " << latex_element(r, sig) << " &= 0\n\\end{aligned}\n";
      }
      return out.str();
    }
  }
  return {};
}

// ---------------------------------------------------------------- zoo

namespace {
std::string lower(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

std::vector<ZooEntry>& builtin_entries() {
  static std::vector<ZooEntry> entries = {
      {"ass", "associative algebras",
       "operad ass { gens: m:nonsym; rel: m(m(x,y),z) - m(x,m(y,z)); }"},
      {"com", "commutative associative algebras",
       "operad com { gens: c:sym; rel: c(c(x,y),z) - c(x,c(y,z)); }"},
      {"lie", "Lie algebras",
       "operad lie { gens: b:antisym; rel: b(b(x,y),z) + b(b(y,z),x) + b(b(z,x),y); }"},
      {"prelie", "right pre-Lie algebras",
       "operad prelie { gens: m:nonsym;\n"
       "  rel: m(m(x,y),z) - m(x,m(y,z)) - m(m(x,z),y) + m(x,m(z,y)); }"},
      {"leib", "right Leibniz algebras",
       "operad leib { gens: m:nonsym; rel: m(m(x,y),z) - m(x,m(y,z)) - m(m(x,z),y); }"},
      {"zinb", "right Zinbiel algebras",
       "operad zinb { gens: m:nonsym; rel: m(m(x,y),z) - m(x,m(y,z)) - m(x,m(z,y)); }"},
      {"perm", "right permutative algebras",
       "operad perm { gens: m:nonsym;\n"
       "  rel: m(m(x,y),z) - m(x,m(y,z));\n"
       "  rel: m(x,m(y,z)) - m(x,m(z,y)); }"},
      {"dend", "dendriform algebras (Loday)",
       "operad dend { gens: l:nonsym, r:nonsym;\n"
       "  rel: l(l(x,y),z) - l(x,l(y,z)) - l(x,r(y,z));\n"
       "  rel: l(r(x,y),z) - r(x,l(y,z));\n"
       "  rel: r(l(x,y),z) + r(r(x,y),z) - r(x,r(y,z)); }"},
      {"diass", "diassociative algebras (Loday)",
       "operad diass { gens: l:nonsym, r:nonsym;\n"
       "  rel: l(l(x,y),z) - l(x,l(y,z));\n"
       "  rel: l(l(x,y),z) - l(x,r(y,z));\n"
       "  rel: l(r(x,y),z) - r(x,l(y,z));\n"
       "  rel: r(l(x,y),z) - r(r(x,y),z);\n"
       "  rel: r(r(x,y),z) - r(x,r(y,z)); }"},
      {"nilass", "two step nilpotent associative algebras",
       "operad nilass { gens: m:nonsym; rel: m(m(x,y),z); rel: m(x,m(y,z)); }"},
      {"nillie", "two step nilpotent Lie algebras",
       "operad nillie { gens: b:antisym; rel: b(b(x,y),z); }"},
      {"pois", "commutative Poisson algebras",
       "operad pois { gens: c:sym, b:antisym;\n"
       "  rel: c(c(x,y),z) - c(x,c(y,z));\n"
       "  rel: b(b(x,y),z) + b(b(y,z),x) + b(b(z,x),y);\n"
       "  rel: b(x,c(y,z)) - c(b(x,y),z) - c(y,b(x,z)); }"},
      {"postlie", "post-Lie algebras",
       "operad postlie { gens: m:nonsym, b:antisym;\n"
       "  rel: b(b(x,y),z) + b(b(y,z),x) + b(b(z,x),y);\n"
       "  rel: m(b(x,y),z) - b(x,m(y,z)) - b(m(x,z),y);\n"
       "  rel: m(x,m(y,z)) - m(x,m(z,y)) + m(x,b(y,z)) - m(m(x,y),z) + m(m(x,z),y); }"},
      {"postcom", "post-commutative algebras",
       "operad postcom { gens: s:nonsym, c:sym;\n"
       "  rel: c(c(x,y),z) - c(x,c(y,z));\n"
       "  rel: s(c(x,y),z) - c(x,s(y,z));\n"
       "  rel: s(s(x,y),z) - s(x,s(y,z)) - s(x,s(z,y)) - s(x,c(y,z)); }"},
      {"postcomdual", "Koszul dual of post-commutative algebras",
       "operad postcomdual { gens: m:nonsym, b:antisym;\n"
       "  rel: b(b(x,y),z) + b(b(y,z),x) + b(b(z,x),y);\n"
       "  rel: m(m(x,y),z) - m(x,m(y,z)) - m(m(x,z),y);\n"
       "  rel: m(b(x,y),z) - b(x,m(y,z)) - b(m(x,z),y);\n"
       "  rel: m(x,b(y,z)) - m(x,m(y,z)); }"},
      {"tridend", "dendriform trialgebras (Loday-Ronco)",
       "operad tridend { gens: l:nonsym, r:nonsym, t:nonsym;\n"
       "  rel: l(l(x,y),z) - l(x,l(y,z)) - l(x,r(y,z)) - l(x,t(y,z));\n"
       "  rel: l(r(x,y),z) - r(x,l(y,z));\n"
       "  rel: r(l(x,y),z) + r(r(x,y),z) + r(t(x,y),z) - r(x,r(y,z));\n"
       "  rel: t(r(x,y),z) - r(x,t(y,z));\n"
       "  rel: t(l(x,y),z) - t(x,r(y,z));\n"
       "  rel: l(t(x,y),z) - t(x,l(y,z));\n"
       "  rel: t(t(x,y),z) - t(x,t(y,z)); }"},
      {"triass", "triassociative algebras (Loday-Ronco)",
       "operad triass { gens: l:nonsym, r:nonsym, t:nonsym;\n"
       "  rel: l(l(x,y),z) - l(x,l(y,z));\n"
       "  rel: l(l(x,y),z) - l(x,r(y,z));\n"
       "  rel: l(r(x,y),z) - r(x,l(y,z));\n"
       "  rel: r(l(x,y),z) - r(x,r(y,z));\n"
       "  rel: r(r(x,y),z) - r(x,r(y,z));\n"
       "  rel: l(l(x,y),z) - l(x,t(y,z));\n"
       "  rel: l(t(x,y),z) - t(x,l(y,z));\n"
       "  rel: t(l(x,y),z) - t(x,r(y,z));\n"
       "  rel: t(r(x,y),z) - r(x,t(y,z));\n"
       "  rel: r(t(x,y),z) - r(x,r(y,z));\n"
       "  rel: t(t(x,y),z) - t(x,t(y,z)); }"},
      {"comtrias", "commutative trialgebras (Vallette)",
       "operad comtrias { gens: l:nonsym, t:sym;\n"
       "  rel: l(l(x,y),z) - l(x,l(y,z));\n"
       "  rel: l(l(x,y),z) - l(x,l(z,y));\n"
       "  rel: l(l(y,x),z) - l(l(y,z),x);\n"
       "  rel: l(z,l(x,y)) - l(l(z,y),x);\n"
       "  rel: l(z,l(y,x)) - l(l(z,y),x);\n"
       "  rel: l(l(x,y),z) - l(x,t(y,z));\n"
       "  rel: l(t(x,y),z) - t(x,l(y,z));\n"
       "  rel: t(l(x,y),z) - t(x,l(z,y));\n"
       "  rel: t(l(y,x),z) - l(t(y,z),x);\n"
       "  rel: l(z,t(x,y)) - l(l(z,y),x);\n"
       "  rel: t(t(x,y),z) - t(x,t(y,z)); }"},
      {"lieadm", "Lie admissible algebras",
       "operad lieadm { gens: m:nonsym;\n"
       "  rel: m(m(x,y),z) - m(x,m(y,z)) - m(m(y,x),z) + m(y,m(x,z))\n"
       "     - m(m(x,z),y) + m(x,m(z,y)) - m(m(z,y),x) + m(z,m(y,x))\n"
       "     + m(m(y,z),x) - m(y,m(z,x)) + m(m(z,x),y) - m(z,m(x,y)); }"},
      {"prepois", "right pre-Poisson algebras (Aguiar)",
       "operad prepois { gens: o:nonsym, s:nonsym;\n"
       "  rel: o(o(x,y),z) - o(x,o(y,z)) - o(x,o(z,y));\n"
       "  rel: s(s(x,y),z) - s(x,s(y,z)) - s(s(x,z),y) + s(x,s(z,y));\n"
       "  rel: s(x,o(y,z)) + s(x,o(z,y)) - o(s(x,y),z) - o(s(x,z),y);\n"
       "  rel: -s(o(y,z),x) + o(s(y,x),z) - o(y,s(x,z)) + o(y,s(z,x)); }"},
      {"ldend", "L-dendriform algebras",
       "operad ldend { gens: l:nonsym, r:nonsym;\n"
       "  rel: l(l(x,y),z) - l(l(x,z),y) - l(x,l(y,z)) + l(x,r(z,y)) + l(x,l(z,y)) - l(x,r(y,z));\n"
       "  rel: l(r(x,y),z) - r(x,l(y,z)) + r(x,r(z,y)) - r(l(x,z),y) - r(r(x,z),y); }"},
      {"assBulletPois", "black product of Ass with Pois (computed example)",
       "operad assBulletPois { gens: o:nonsym, s:nonsym;\n"
       "  rel: o(o(x,y),z);\n"
       "  rel: o(x,o(y,z));\n"
       "  rel: s(s(x,y),z) - s(x,s(y,z));\n"
       "  rel: o(s(x,y),z) - s(x,o(y,z));\n"
       "  rel: s(x,o(y,z)) - o(x,s(y,z));\n"
       "  rel: o(x,s(y,z)) - s(o(x,y),z); }"},
      {"preLieBulletLeib", "black product of preLie with Leib (computed example)",
       "operad preLieBulletLeib { gens: l:nonsym, r:nonsym;\n"
       "  rel: l(l(x,y),z) - l(l(x,z),y) - l(x,l(y,z)) + l(x,r(z,y));\n"
       "  rel: -l(r(y,x),z) + r(l(y,z),x) + r(y,l(x,z)) - r(y,r(z,x));\n"
       "  rel: -r(z,l(x,y)) + r(z,r(y,x)) - r(r(z,y),x) + l(r(z,x),y); }"},
      {"preLieBulletPerm", "black product of preLie with Perm (computed example)",
       "operad preLieBulletPerm { gens: l:nonsym, w:nonsym;\n"
       "  rel: l(l(x,y),z) - l(x,l(y,z)) - l(x,w(y,z));\n"
       "  rel: l(w(x,y),z) - w(x,l(y,z));\n"
       "  rel: w(l(x,y),z) + w(w(x,y),z) - w(x,w(y,z));\n"
       "  rel: l(x,l(y,z)) + l(x,w(y,z)) - l(x,l(z,y)) - l(x,w(z,y));\n"
       "  rel: w(x,l(y,z)) - w(x,w(z,y)); }"},
      {"permCircPreLie", "white product of Perm with preLie (computed example)",
       "operad permCircPreLie { gens: l:nonsym, w:nonsym;\n"
       "  rel: l(l(x,y),z) - l(x,l(y,z)) - l(l(x,z),y) + l(x,l(z,y));\n"
       "  rel: l(x,l(y,z)) - l(x,w(y,z));\n"
       "  rel: w(w(x,y),z) - w(x,w(y,z)) - l(w(x,z),y) + w(x,l(z,y));\n"
       "  rel: w(w(x,y),z) - w(l(x,y),z); }"},
      {"assCircLeib", "white product of Ass with Leib (computed example)",
       "operad assCircLeib { gens: l:nonsym, r:nonsym;\n"
       "  rel: l(x,l(y,z)) + l(x,r(y,z));\n"
       "  rel: r(l(x,y),z) + r(r(x,y),z); }"},
      {"prePoisDual", "Koszul dual of right pre-Poisson algebras (Aguiar)",
       "operad prePoisDual { gens: o:nonsym, s:nonsym;\n"
       "  rel: o(o(x,y),z) - o(x,o(y,z));\n"
       "  rel: o(x,o(y,z)) - o(x,o(z,y));\n"
       "  rel: s(s(x,y),z) - s(x,s(y,z)) - s(s(x,z),y);\n"
       "  rel: s(o(x,y),z) - o(x,s(y,z)) - o(s(x,z),y);\n"
       "  rel: s(x,o(y,z)) - o(s(x,y),z) - o(s(x,z),y);\n"
       "  rel: o(x,s(y,z)) + o(x,s(z,y)); }"},
  };
  return entries;
}

std::mutex& zoo_mutex() {
  static std::mutex mu;
  return mu;
}

std::map<std::string, OperadPresentation>& zoo_cache() {
  static std::map<std::string, OperadPresentation> cache;
  return cache;
}
}  // namespace

const std::vector<ZooEntry>& zoo_entries() { return builtin_entries(); }

void add_zoo_entry(ZooEntry e) {
  parse_presentation(e.source);
  std::lock_guard<std::mutex> lock(zoo_mutex());
  auto& entries = builtin_entries();
  for (auto& old : entries) {
    if (lower(old.key) == lower(e.key)) {
      old = e;
      zoo_cache().erase(lower(e.key));
      return;
    }
  }
  entries.push_back(std::move(e));
}

std::string mag_key(int p, int q, int r) {
  return "mag_{" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(r) + "}";
}

OperadPresentation mag(int p, int q, int r) {
  if (p < 0 || q < 0 || r < 0) throw StructuralError("mag parameters must be non-negative");
  std::vector<Generator> gens;
  for (int i = 1; i <= p; ++i) gens.push_back({"m" + std::to_string(i), Symmetry::NonSym});
  for (int i = 1; i <= q; ++i) gens.push_back({"s" + std::to_string(i), Symmetry::Sym});
  for (int i = 1; i <= r; ++i) gens.push_back({"a" + std::to_string(i), Symmetry::AntiSym});
  return make_presentation(mag_key(p, q, r), Signature(std::move(gens)), {});
}

std::vector<std::string> zoo_keys() {
  std::vector<std::string> keys;
  for (const auto& e : zoo_entries()) keys.push_back(e.key);
  return keys;
}

OperadPresentation zoo_get(const std::string& key) {
  static const std::regex mag_re(R"(mag(?:_\{(\d+),(\d+),(\d+)\}|_(\d+)_(\d+)_(\d+)|\((\d+),(\d+),(\d+)\)))",
                                 std::regex::icase);
  std::smatch m;
  if (std::regex_match(key, m, mag_re)) {
    for (int base : {1, 4, 7}) {
      if (m[base].matched) {
        return mag(std::stoi(m[base]), std::stoi(m[base + 1]), std::stoi(m[base + 2]));
      }
    }
  }
  auto& cache = zoo_cache();
  std::string k = lower(key);
  std::lock_guard<std::mutex> lock(zoo_mutex());
  auto it = cache.find(k);
  if (it != cache.end()) return it->second;
  for (const auto& e : zoo_entries()) {
    if (lower(e.key) == k) {
      OperadPresentation o = parse_presentation(e.source);
      o.name = e.key;
      cache.emplace(k, o);
      return o;
    }
  }
  std::string msg = "unknown zoo key '" + key + "'; valid keys:";
  for (const auto& e : zoo_entries()) msg += " " + e.key;
  msg += " mag_{p,q,r}";
  throw LookupError(msg);
}

}  // namespace opcalc
