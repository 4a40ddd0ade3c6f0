#include "rigcat/parse.hpp"

#include <cctype>
#include <map>

#include "rigcat/errors.hpp"

namespace rigcat {

namespace {

class Cursor {
 public:
  explicit Cursor(const std::string& text) : text_(text) {}

  void skipWs() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool atEnd() {
    skipWs();
    return pos_ >= text_.size();
  }

  char peek() {
    skipWs();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool tryConsume(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c, const char* what) {
    if (!tryConsume(c)) fail(std::string("expected '") + c + "' " + what);
  }

  /// ident := [A-Za-z_][A-Za-z0-9_]*
  std::string ident() {
    skipWs();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    if (start == pos_ || std::isdigit(static_cast<unsigned char>(text_[start]))) {
      fail("expected a name");
    }
    return text_.substr(start, pos_ - start);
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(msg + " at position " + std::to_string(pos_) + " in \"" + text_ + "\"");
  }

 private:
  const std::string& text_;
  std::size_t pos_ = 0;
};

ShapeRef parseShapeExpr(Cursor& cur);

ShapeRef parseShapeAtom(Cursor& cur) {
  char c = cur.peek();
  if (c == '0') {
    cur.tryConsume('0');
    return Shape::zero();
  }
  if (c == '(') {
    cur.tryConsume('(');
    ShapeRef inner = parseShapeExpr(cur);
    cur.expect(')', "to close a shape group");
    return inner;
  }
  std::string name = cur.ident();
  if (name == "I") return Shape::one();
  return Shape::var(name);
}

ShapeRef parseShapeExpr(Cursor& cur) {
  ShapeRef left = parseShapeAtom(cur);
  char op = cur.peek();
  if (op == '+') {
    cur.tryConsume('+');
    return Shape::sum(left, parseShapeAtom(cur));
  }
  if (op == '*') {
    cur.tryConsume('*');
    return Shape::prod(left, parseShapeAtom(cur));
  }
  return left;
}

const std::map<std::string, WitnessTerm::Kind>& genByName() {
  using Kind = WitnessTerm::Kind;
  static const std::map<std::string, Kind> table = [] {
    std::map<std::string, Kind> t;
    for (int k = 0; k <= static_cast<int>(Kind::Inr); ++k) {
      Kind kind = static_cast<Kind>(k);
      switch (kind) {
        case Kind::Comp:
        case Kind::SumM:
        case Kind::ProdM:
        case Kind::Copair:
          continue;
        default:
          t.emplace(genSig(kind).name, kind);
      }
    }
    return t;
  }();
  return table;
}

WitnessRef parseTermExpr(Cursor& cur);

WitnessRef parseTermAtomic(Cursor& cur) {
  char c = cur.peek();
  if (c == '(') {
    cur.tryConsume('(');
    WitnessRef inner = parseTermExpr(cur);
    cur.expect(')', "to close a term group");
    return inner;
  }
  if (c == '[') {
    cur.tryConsume('[');
    WitnessRef f = parseTermExpr(cur);
    cur.expect(',', "between copair branches");
    WitnessRef g = parseTermExpr(cur);
    cur.expect(']', "to close a copairing");
    return WitnessTerm::copair(f, g);
  }
  std::string name = cur.ident();
  auto it = genByName().find(name);
  if (it == genByName().end()) cur.fail("unknown morphism name '" + name + "'");
  cur.expect('[', "to open shape arguments");
  std::vector<ShapeRef> shapes;
  shapes.push_back(parseShapeExpr(cur));
  while (cur.tryConsume(',')) shapes.push_back(parseShapeExpr(cur));
  cur.expect(']', "to close shape arguments");
  try {
    return WitnessTerm::gen(it->second, std::move(shapes));
  } catch (const TypeError& e) {
    cur.fail(e.what());
  }
}

WitnessRef parseTermFactor(Cursor& cur) {
  WitnessRef left = parseTermAtomic(cur);
  char op = cur.peek();
  if (op == '+') {
    cur.tryConsume('+');
    return WitnessTerm::sumM(left, parseTermAtomic(cur));
  }
  if (op == '*') {
    cur.tryConsume('*');
    return WitnessTerm::prodM(left, parseTermAtomic(cur));
  }
  return left;
}

WitnessRef parseTermExpr(Cursor& cur) {
  WitnessRef acc = parseTermFactor(cur);
  while (cur.peek() == ';') {
    cur.tryConsume(';');
    // f ; g composes diagrammatically: g after f.
    acc = WitnessTerm::comp(parseTermFactor(cur), acc);
  }
  return acc;
}

}  // namespace

ShapeRef parseShape(const std::string& text) {
  Cursor cur(text);
  ShapeRef s = parseShapeExpr(cur);
  if (!cur.atEnd()) cur.fail("trailing input after shape");
  return s;
}

WitnessRef parseTerm(const std::string& text) {
  Cursor cur(text);
  WitnessRef t = parseTermExpr(cur);
  if (!cur.atEnd()) cur.fail("trailing input after term");
  return t;
}

}  // namespace rigcat
