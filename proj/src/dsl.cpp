#include "qmod/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <regex>
#include <sstream>

namespace qmod {

namespace {

enum class Tok { Ident, Number, Sym, End };

struct Token {
  Tok kind;
  std::string text;
  SourcePos pos;
};

std::vector<Token> lex(const std::string& src) {
  std::vector<Token> out;
  SourcePos pos;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++pos.line;
        pos.col = 1;
      } else {
        ++pos.col;
      }
    }
  };
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
    } else if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_' || src[j] == '\''))
        ++j;
      out.push_back({Tok::Ident, src.substr(i, j - i), pos});
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      if (j + 1 < src.size() && src[j] == '/' && std::isdigit(static_cast<unsigned char>(src[j + 1]))) {
        ++j;
        while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      }
      out.push_back({Tok::Number, src.substr(i, j - i), pos});
      advance(j - i);
    } else if (c == '-' && i + 1 < src.size() && src[i + 1] == '>') {
      out.push_back({Tok::Sym, "->", pos});
      advance(2);
    } else if (std::string("{}()[];:,+-*.^").find(c) != std::string::npos) {
      out.push_back({Tok::Sym, std::string(1, c), pos});
      advance(1);
    } else {
      throw Error(ErrorKind::SyntaxError,
                  std::to_string(pos.line) + ":" + std::to_string(pos.col) + ": unexpected character '" + c + "'");
    }
  }
  out.push_back({Tok::End, "", pos});
  return out;
}

bool is_generator_name(const std::string& s) { return std::regex_match(s, std::regex("z[0-9]+")); }

class Parser {
 public:
  explicit Parser(const std::string& text) : toks_(lex(text)) {}

  InputDocument run() {
    while (peek().kind != Tok::End) block();
    return std::move(doc_);
  }

 private:
  std::vector<Token> toks_;
  std::size_t at_ = 0;
  InputDocument doc_;
  std::map<std::string, int> vertex_, arrow_;

  const Token& peek(std::size_t k = 0) const { return toks_[std::min(at_ + k, toks_.size() - 1)]; }
  const Token& next() { return toks_[at_ < toks_.size() - 1 ? at_++ : at_]; }

  [[noreturn]] void fail(ErrorKind kind, const SourcePos& pos, const std::string& msg) const {
    throw Error(kind, std::to_string(pos.line) + ":" + std::to_string(pos.col) + ": " + msg);
  }
  [[noreturn]] void fail(const std::string& msg) const { fail(ErrorKind::SyntaxError, peek().pos, msg); }

  bool is_sym(const std::string& s, std::size_t k = 0) const { return peek(k).kind == Tok::Sym && peek(k).text == s; }
  bool accept(const std::string& s) {
    if (!is_sym(s)) return false;
    next();
    return true;
  }
  void expect(const std::string& s) {
    if (!accept(s)) fail("expected '" + s + "', found '" + peek().text + "'");
  }
  std::string ident() {
    if (peek().kind != Tok::Ident) fail("expected an identifier, found '" + peek().text + "'");
    return next().text;
  }
  std::string label() {
    if (peek().kind != Tok::Ident && peek().kind != Tok::Number) fail("expected a label, found '" + peek().text + "'");
    return next().text;
  }
  mpq_class number() {
    const bool neg = accept("-");
    if (peek().kind != Tok::Number) fail("expected a number, found '" + peek().text + "'");
    mpq_class q(next().text);
    q.canonicalize();
    return neg ? mpq_class(-q) : q;
  }
  long integer() {
    const SourcePos pos = peek().pos;
    mpq_class q = number();
    if (q.get_den() != 1 || !q.get_num().fits_slong_p()) fail(ErrorKind::TypeMismatch, pos, "expected an integer");
    return q.get_num().get_si();
  }

  void require_quiver(const SourcePos& pos) const {
    if (doc_.vertices.empty()) fail(ErrorKind::UnknownLabel, pos, "the quiver block must come first");
  }

  int arrow_index(const Token& t) const {
    auto it = arrow_.find(t.text);
    if (it == arrow_.end()) fail(ErrorKind::UnknownLabel, t.pos, "unknown arrow '" + t.text + "'");
    return it->second;
  }

  void block() {
    const Token kw = next();
    if (kw.kind != Tok::Ident) fail(ErrorKind::SyntaxError, kw.pos, "expected a block name, found '" + kw.text + "'");
    const std::string& k = kw.text;
    if (k == "quiver") return quiver_block();
    if (k != "quiver") require_quiver(kw.pos);
    if (k == "algebra") return algebra_block();
    if (k == "module") return module_block();
    if (k == "point") return point_block();
    if (k == "endo") return endo_block();
    expect(":");
    if (k == "top") {
      doc_.top = int_tuple();
    } else if (k == "dimvec") {
      doc_.dimvec = int_tuple();
    } else if (k == "weight") {
      auto t = int_tuple();
      doc_.weight = std::vector<long>(t.begin(), t.end());
    } else if (k == "layering") {
      SemisimpleSequence s;
      expect("[");
      if (!is_sym("]")) do
          s.push_back(int_tuple());
        while (accept(","));
      expect("]");
      doc_.layering = s;
    } else if (k == "skeleton") {
      DslVector v;
      expect("[");
      if (!is_sym("]")) do
          v.push_back(path_with_generator(mpq_class(1)));
        while (accept(","));
      expect("]");
      doc_.skeleton = v;
    } else if (k == "coords") {
      std::vector<mpq_class> c;
      expect("(");
      if (!is_sym(")")) do
          c.push_back(number());
        while (accept(","));
      expect(")");
      doc_.coords = c;
    } else if (k == "total") {
      doc_.total_dim = static_cast<int>(integer());
    } else {
      fail(ErrorKind::SyntaxError, kw.pos, "unknown block '" + k + "'");
    }
    expect(";");
  }

  std::vector<int> int_tuple() {
    std::vector<int> v;
    expect("(");
    if (!is_sym(")")) do
        v.push_back(static_cast<int>(integer()));
      while (accept(","));
    expect(")");
    if (!doc_.vertices.empty() && v.size() != doc_.vertices.size())
      fail(ErrorKind::TypeMismatch, peek().pos, "expected " + std::to_string(doc_.vertices.size()) + " entries");
    return v;
  }

  void quiver_block() {
    expect("{");
    while (!accept("}")) {
      const Token kw = next();
      expect(":");
      if (kw.text == "vertices") {
        while (!is_sym(";")) {
          const Token t = peek();
          const std::string l = label();
          if (vertex_.count(l)) fail(ErrorKind::TypeMismatch, t.pos, "duplicate vertex '" + l + "'");
          vertex_[l] = static_cast<int>(doc_.vertices.size());
          doc_.vertices.push_back(l);
          accept(",");
        }
      } else if (kw.text == "arrows") {
        if (!is_sym(";")) do {
            const Token t = peek();
            const std::string a = ident();
            if (arrow_.count(a) || is_generator_name(a) || a == "J")
              fail(ErrorKind::TypeMismatch, t.pos, "arrow label '" + a + "' is taken or reserved");
            expect(":");
            const int from = vertex();
            expect("->");
            const int to = vertex();
            arrow_[a] = static_cast<int>(doc_.arrows.size());
            doc_.arrows.push_back({a, from, to});
          } while (accept(","));
      } else {
        fail(ErrorKind::SyntaxError, kw.pos, "unknown quiver field '" + kw.text + "'");
      }
      expect(";");
    }
  }

  int vertex() {
    const Token t = peek();
    const std::string l = label();
    auto it = vertex_.find(l);
    if (it == vertex_.end()) fail(ErrorKind::UnknownLabel, t.pos, "unknown vertex '" + l + "'");
    return it->second;
  }

  void algebra_block() {
    expect("{");
    while (!accept("}")) {
      const Token kw = next();
      expect(":");
      if (kw.text == "field") {
        const Token t = peek();
        doc_.field = ident();
        try {
          Field::parse(doc_.field);
        } catch (const Error& e) {
          fail(ErrorKind::TypeMismatch, t.pos, e.what());
        }
      } else if (kw.text == "max_len") {
        const SourcePos pos = peek().pos;
        const long m = integer();
        if (m <= 0) fail(ErrorKind::TypeMismatch, pos, "max_len must be positive");
        doc_.max_len = static_cast<std::size_t>(m);
      } else if (kw.text == "relations") {
        if (peek().kind == Tok::Ident && peek().text == "none") {
          next();
        } else {
          expect("[");
          if (!is_sym("]")) do
              doc_.relations.push_back(relation());
            while (accept(","));
          expect("]");
        }
      } else {
        fail(ErrorKind::SyntaxError, kw.pos, "unknown algebra field '" + kw.text + "'");
      }
      expect(";");
    }
  }

  DslRelation relation() {
    DslRelation r;
    r.pos = peek().pos;
    if (peek().kind == Tok::Ident && peek().text == "J" && is_sym("^", 1)) {
      next();
      next();
      const SourcePos pos = peek().pos;
      const long k = integer();
      if (k < 2) fail(ErrorKind::TypeMismatch, pos, "J^k needs k >= 2");
      r.power = static_cast<int>(k);
      return r;
    }
    r.terms = lincomb(false);
    return r;
  }

  // Arrow labels joined by '*' or '.', written right to left. Stops before a
  // generator name.
  std::vector<int> path() {
    std::vector<Token> written{peek()};
    arrow_index(peek());
    next();
    while ((is_sym("*") || is_sym(".")) && peek(1).kind == Tok::Ident && !is_generator_name(peek(1).text)) {
      next();
      written.push_back(next());
    }
    std::vector<int> arrows;
    for (auto it = written.rbegin(); it != written.rend(); ++it) arrows.push_back(arrow_index(*it));
    for (std::size_t k = 1; k < arrows.size(); ++k)
      if (doc_.arrows[static_cast<std::size_t>(arrows[k - 1])].to !=
          doc_.arrows[static_cast<std::size_t>(arrows[k])].from)
        fail(ErrorKind::TypeMismatch, written.front().pos, "path does not compose");
    return arrows;
  }

  // [sign] [coeff ['*']] path | [sign] coeff
  std::vector<DslTerm> lincomb(bool allow_scalar) {
    std::vector<DslTerm> terms;
    bool first = true;
    for (;;) {
      int sign = 1;
      if (accept("-")) sign = -1;
      else if (!first && !accept("+")) break;
      else if (first) accept("+");
      DslTerm t;
      t.pos = peek().pos;
      t.coeff = 1;
      bool have_coeff = false;
      if (peek().kind == Tok::Number) {
        t.coeff = number();
        have_coeff = true;
        accept("*");
      }
      if (peek().kind == Tok::Ident) {
        t.arrows = path();
      } else if (!have_coeff || !allow_scalar) {
        fail("expected a path");
      }
      t.coeff *= sign;
      terms.push_back(std::move(t));
      first = false;
      if (!is_sym("+") && !is_sym("-")) break;
    }
    return terms;
  }

  int generator() {
    const Token t = peek();
    if (t.kind != Tok::Ident || !is_generator_name(t.text)) fail("expected a generator z<r>");
    next();
    const int r = std::stoi(t.text.substr(1)) - 1;
    if (r < 0) fail(ErrorKind::TypeMismatch, t.pos, "generators are numbered from z1");
    return r;
  }

  DslTerm path_with_generator(const mpq_class& coeff) {
    DslTerm t;
    t.pos = peek().pos;
    t.coeff = coeff;
    if (!(peek().kind == Tok::Ident && is_generator_name(peek().text))) {
      t.arrows = path();
      expect(".");
    }
    t.r = generator();
    return t;
  }

  DslVector vector() {
    DslVector v;
    if (peek().kind == Tok::Number && peek().text == "0" && !is_sym("*", 1)) {
      next();
      return v;
    }
    bool first = true;
    for (;;) {
      mpq_class sign = 1;
      if (accept("-")) sign = -1;
      else if (!first && !accept("+")) break;
      else if (first) accept("+");
      mpq_class c = 1;
      if (peek().kind == Tok::Number) {
        c = number();
        accept("*");
      }
      c *= sign;
      if (accept("(")) {
        auto inner = lincomb(true);
        expect(")");
        expect(".");
        const int r = generator();
        for (auto& t : inner) {
          t.coeff *= c;
          t.r = r;
          v.push_back(std::move(t));
        }
      } else {
        v.push_back(path_with_generator(c));
      }
      first = false;
      if (!is_sym("+") && !is_sym("-")) break;
    }
    return v;
  }

  void point_block() {
    expect("{");
    std::vector<DslVector> gens;
    while (!accept("}")) {
      gens.push_back(vector());
      expect(";");
    }
    doc_.points.push_back(std::move(gens));
  }

  void endo_block() {
    expect("{");
    std::vector<std::pair<int, DslVector>> images;
    while (!accept("}")) {
      const int r = generator();
      expect("->");
      images.emplace_back(r, vector());
      expect(";");
    }
    doc_.endo = images;
  }

  void module_block() {
    expect("{");
    DslModule m;
    bool have_dims = false;
    while (!accept("}")) {
      const Token kw = next();
      expect(":");
      if (kw.text == "dims") {
        m.dims = int_tuple();
        have_dims = true;
      } else {
        const int a = arrow_index(kw);
        std::vector<std::vector<mpq_class>> rows;
        expect("[");
        if (!is_sym("]")) do {
            std::vector<mpq_class> row;
            expect("[");
            if (!is_sym("]")) do
                row.push_back(number());
              while (accept(","));
            expect("]");
            rows.push_back(std::move(row));
          } while (accept(","));
        expect("]");
        m.maps[a] = std::move(rows);
      }
      expect(";");
    }
    if (!have_dims) fail(ErrorKind::TypeMismatch, peek().pos, "module block needs dims");
    doc_.module = std::move(m);
  }
};

std::string rat(const mpq_class& q) { return q.get_str(); }

std::string path_text(const InputDocument& doc, const std::vector<int>& arrows) {
  std::string s;
  for (auto it = arrows.rbegin(); it != arrows.rend(); ++it)
    s += (s.empty() ? "" : "*") + doc.arrows[static_cast<std::size_t>(*it)].label;
  return s;
}

std::string lincomb_text(const InputDocument& doc, const std::vector<DslTerm>& terms) {
  std::string s;
  for (const auto& t : terms) {
    const bool neg = sgn(t.coeff) < 0;
    const mpq_class a = abs(t.coeff);
    if (s.empty())
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    if (t.arrows.empty())
      s += rat(a);
    else
      s += (a == 1 ? "" : rat(a) + "*") + path_text(doc, t.arrows);
  }
  return s;
}

std::string tuple_text(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

}  // namespace

InputDocument parse_input(const std::string& text) { return Parser(text).run(); }

std::string render_vector(const InputDocument& doc, const DslVector& v) {
  if (v.empty()) return "0";
  std::vector<int> rs;
  for (const auto& t : v)
    if (std::find(rs.begin(), rs.end(), t.r) == rs.end()) rs.push_back(t.r);
  std::sort(rs.begin(), rs.end());
  std::string s;
  for (int r : rs) {
    std::vector<DslTerm> part;
    for (const auto& t : v)
      if (t.r == r) part.push_back(t);
    s += (s.empty() ? "" : " + ") + ("(" + lincomb_text(doc, part) + ").z" + std::to_string(r + 1));
  }
  return s;
}

std::string render_document(const InputDocument& doc) {
  std::ostringstream o;
  o << "quiver {\n  vertices:";
  for (const auto& v : doc.vertices) o << " " << v;
  o << ";\n";
  if (!doc.arrows.empty()) {
    o << "  arrows: ";
    for (std::size_t a = 0; a < doc.arrows.size(); ++a)
      o << (a ? ", " : "") << doc.arrows[a].label << ": " << doc.vertices[static_cast<std::size_t>(doc.arrows[a].from)]
        << " -> " << doc.vertices[static_cast<std::size_t>(doc.arrows[a].to)];
    o << ";\n";
  }
  o << "}\nalgebra {\n  field: " << doc.field << ";\n";
  if (doc.max_len) o << "  max_len: " << doc.max_len << ";\n";
  o << "  relations: ";
  if (doc.relations.empty()) {
    o << "none";
  } else {
    o << "[";
    for (std::size_t k = 0; k < doc.relations.size(); ++k) {
      const auto& r = doc.relations[k];
      o << (k ? ", " : "") << (r.power ? "J^" + std::to_string(r.power) : lincomb_text(doc, r.terms));
    }
    o << "]";
  }
  o << ";\n}\n";
  if (doc.top) o << "top: " << tuple_text(*doc.top) << ";\n";
  if (doc.dimvec) o << "dimvec: " << tuple_text(*doc.dimvec) << ";\n";
  if (doc.total_dim) o << "total: " << *doc.total_dim << ";\n";
  if (doc.weight) o << "weight: " << tuple_text(std::vector<int>(doc.weight->begin(), doc.weight->end())) << ";\n";
  if (doc.layering) {
    o << "layering: [";
    for (std::size_t l = 0; l < doc.layering->size(); ++l) o << (l ? ", " : "") << tuple_text((*doc.layering)[l]);
    o << "];\n";
  }
  if (doc.skeleton) {
    o << "skeleton: [";
    for (std::size_t k = 0; k < doc.skeleton->size(); ++k) {
      const auto& t = (*doc.skeleton)[k];
      o << (k ? ", " : "") << (t.arrows.empty() ? "" : path_text(doc, t.arrows) + ".") << "z" << t.r + 1;
    }
    o << "];\n";
  }
  if (doc.coords) {
    o << "coords: (";
    for (std::size_t k = 0; k < doc.coords->size(); ++k) o << (k ? "," : "") << rat((*doc.coords)[k]);
    o << ");\n";
  }
  if (doc.module) {
    o << "module {\n  dims: " << tuple_text(doc.module->dims) << ";\n";
    for (const auto& [a, rows] : doc.module->maps) {
      o << "  " << doc.arrows[static_cast<std::size_t>(a)].label << ": [";
      for (std::size_t i = 0; i < rows.size(); ++i) {
        o << (i ? ", " : "") << "[";
        for (std::size_t j = 0; j < rows[i].size(); ++j) o << (j ? "," : "") << rat(rows[i][j]);
        o << "]";
      }
      o << "];\n";
    }
    o << "}\n";
  }
  for (const auto& pt : doc.points) {
    o << "point {\n";
    for (const auto& g : pt) o << "  " << render_vector(doc, g) << ";\n";
    o << "}\n";
  }
  if (doc.endo) {
    o << "endo {\n";
    for (const auto& [r, img] : *doc.endo) o << "  z" << r + 1 << " -> " << render_vector(doc, img) << ";\n";
    o << "}\n";
  }
  return o.str();
}

Quiver doc_quiver(const InputDocument& doc) { return Quiver(doc.vertices, doc.arrows); }

namespace {

Scalar to_scalar(const Field& f, const mpq_class& q) {
  if (f.is_finite() && mpz_divisible_ui_p(q.get_den().get_mpz_t(), f.characteristic()))
    throw Error(ErrorKind::TypeMismatch, "coefficient " + q.get_str() + " is undefined in " + f.name());
  return f.from_ratio(q.get_num(), q.get_den());
}

std::string at(const SourcePos& p) { return std::to_string(p.line) + ":" + std::to_string(p.col) + ": "; }

}  // namespace

Algebra doc_algebra(const InputDocument& doc, const std::string& field_override) {
  const Quiver q = doc_quiver(doc);
  const Field f = Field::parse(field_override.empty() ? doc.field : field_override);
  std::vector<AlgebraElement> rels;
  std::size_t max_len = doc.max_len;
  for (const auto& r : doc.relations) {
    if (r.power) {
      for (const auto& p : all_paths_of_length(q, static_cast<std::size_t>(r.power)))
        rels.push_back(AlgebraElement::path(f, p, f.one()));
      if (!doc.max_len) max_len = std::max(max_len, static_cast<std::size_t>(r.power));
      continue;
    }
    AlgebraElement x(f);
    for (const auto& t : r.terms) {
      if (t.arrows.empty()) throw Error(ErrorKind::BadRelation, at(t.pos) + "relation term without a path");
      x.add(Path{q.arrow(t.arrows.front()).from, t.arrows}, to_scalar(f, t.coeff));
    }
    rels.push_back(x);
  }
  if (!max_len) max_len = 8;
  return build_algebra(q, rels, f, max_len);
}

Vec doc_vector(const ProjectiveCover& p, const DslVector& v) {
  const Field& f = p.field();
  const Quiver& q = p.algebra().quiver();
  Vec out = zero_vec(f, p.dim());
  for (const auto& t : v) {
    if (t.r < 0 || t.r >= p.generators())
      throw Error(ErrorKind::TypeMismatch, at(t.pos) + "generator z" + std::to_string(t.r + 1) + " not in the top");
    const int start = p.generator_vertex(t.r);
    if (!t.arrows.empty() && q.arrow(t.arrows.front()).from != start)
      throw Error(ErrorKind::TypeMismatch, at(t.pos) + "path does not start at the vertex of z" + std::to_string(t.r + 1));
    const Vec x = p.element_at(AlgebraElement::path(f, Path{start, t.arrows}, to_scalar(f, t.coeff)), t.r);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += x[i];
  }
  return out;
}

SubmodulePoint doc_point(const ProjectiveCover& p, const std::vector<DslVector>& gens) {
  std::vector<Vec> vs;
  for (const auto& g : gens) vs.push_back(doc_vector(p, g));
  return make_point(p, vs);
}

Rep doc_module(const Algebra& alg, const DslModule& m) {
  const Quiver& q = alg.quiver();
  if (m.dims.size() != static_cast<std::size_t>(q.vertex_count()))
    throw Error(ErrorKind::TypeMismatch, "module dims have the wrong length");
  std::vector<Matrix> maps;
  for (int a = 0; a < q.arrow_count(); ++a) {
    const auto rows = static_cast<std::size_t>(m.dims[static_cast<std::size_t>(q.arrow(a).to)]);
    const auto cols = static_cast<std::size_t>(m.dims[static_cast<std::size_t>(q.arrow(a).from)]);
    Matrix x(alg.field(), rows, cols);
    if (auto it = m.maps.find(a); it != m.maps.end()) {
      const auto& given = it->second;
      const bool empty_ok = given.empty() && (rows == 0 || cols == 0);
      if (!empty_ok && given.size() != rows)
        throw Error(ErrorKind::ShapeMismatch, "matrix of " + q.arrow(a).label + " must have " + std::to_string(rows) + " rows");
      for (std::size_t i = 0; i < given.size(); ++i) {
        if (given[i].size() != cols)
          throw Error(ErrorKind::ShapeMismatch, "matrix of " + q.arrow(a).label + " must have " + std::to_string(cols) + " columns");
        for (std::size_t j = 0; j < cols; ++j) x(i, j) = to_scalar(alg.field(), given[i][j]);
      }
    }
    maps.push_back(std::move(x));
  }
  return Rep(alg, m.dims, maps);
}

Skeleton doc_skeleton(const ProjectiveCover& p, const DslVector& s) {
  std::vector<std::size_t> coords;
  for (const auto& t : s) {
    if (t.r < 0 || t.r >= p.generators())
      throw Error(ErrorKind::TypeMismatch, at(t.pos) + "generator z" + std::to_string(t.r + 1) + " not in the top");
    const long b = p.algebra().basis_index(Path{p.generator_vertex(t.r), t.arrows});
    const long i = b < 0 ? -1 : p.index(t.r, static_cast<std::size_t>(b));
    if (i < 0) throw Error(ErrorKind::InvalidArgument, at(t.pos) + "not a basis path of P");
    coords.push_back(static_cast<std::size_t>(i));
  }
  return skeleton_from_coords(p, coords);
}

Vec doc_coords(const Field& f, const std::vector<mpq_class>& c) {
  Vec v;
  for (const auto& x : c) v.push_back(to_scalar(f, x));
  return v;
}

Matrix doc_endo(const ProjectiveCover& p, const std::vector<std::pair<int, DslVector>>& images) {
  std::vector<Vec> imgs(static_cast<std::size_t>(p.generators()), zero_vec(p.field(), p.dim()));
  for (const auto& [r, v] : images) {
    if (r < 0 || r >= p.generators())
      throw Error(ErrorKind::TypeMismatch, "generator z" + std::to_string(r + 1) + " not in the top");
    imgs[static_cast<std::size_t>(r)] = doc_vector(p, v);
  }
  return endo_from_images(p, imgs);
}

DslVector vector_to_dsl(const ProjectiveCover& p, const Vec& v) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) idx.push_back(i);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    const auto &ca = p.coord(a), &cb = p.coord(b);
    if (ca.r != cb.r) return ca.r < cb.r;
    return p.algebra().basis_path(cb.path) < p.algebra().basis_path(ca.path);
  });
  DslVector out;
  for (std::size_t i : idx) {
    DslTerm t;
    t.coeff = p.field().is_finite() ? mpq_class(v[i].residue()) : v[i].rational();
    t.arrows = p.algebra().basis_path(p.coord(i).path).arrows;
    t.r = p.coord(i).r;
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace qmod
