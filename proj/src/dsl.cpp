#include "opforge/dsl.hpp"

#include <cctype>
#include <map>

#include "opforge/action.hpp"

namespace opforge::dsl {

std::string type_name(const Value& v) {
  static const char* names[] = {"number",  "perm",    "cube",     "cubes", "overlap",
                                "forest",  "diagram", "alphabet", "link",  "list"};
  if (const auto* w = v.get<LinkWord>()) {
    return w->color() == 1 ? "link1" : "link2";
  }
  return names[v.data.index()];
}

std::string to_string(const Value& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, ValueList>) {
          std::string out = "[";
          for (std::size_t i = 0; i < x.size(); ++i) {
            out += (i > 0 ? ", " : "") + to_string(x[i]);
          }
          return out + "]";
        } else {
          return opforge::to_string(x);
        }
      },
      v.data);
}

ParseError::ParseError(Location where, const std::string& message)
    : OperadError(std::to_string(where.line) + ":" + std::to_string(where.column) + ": " + message),
      where_(where),
      message_(message) {}

const Binding* Script::find(std::string_view name) const {
  for (const auto& b : bindings) {
    if (b.name == name) {
      return &b;
    }
  }
  return nullptr;
}

const Alphabet* Script::alphabet() const {
  for (auto it = bindings.rbegin(); it != bindings.rend(); ++it) {
    if (const auto* a = it->value.get<Alphabet>()) {
      return a;
    }
  }
  return nullptr;
}

namespace {

enum class Tok { Ident, Number, Punct, End };

struct Token {
  Tok kind;
  std::string text;
  Location where;
};

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  Location at;
  std::size_t i = 0;
  const auto advance = [&] {
    if (src[i] == '\n') {
      ++at.line;
      at.column = 1;
    } else {
      ++at.column;
    }
    ++i;
  };
  while (i < src.size()) {
    const char c = src[i];
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') {
        advance();
      }
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance();
      continue;
    }
    const Location start = at;
    std::string text;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) {
        text += src[i];
        advance();
      }
      out.push_back({Tok::Ident, text, start});
    } else if (std::isdigit(static_cast<unsigned char>(c)) ||
               (c == '-' && i + 1 < src.size() && std::isdigit(static_cast<unsigned char>(src[i + 1])))) {
      text += c;
      advance();
      while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) {
        text += src[i];
        advance();
      }
      out.push_back({Tok::Number, text, start});
    } else if (std::string_view("{}[](),;=/").find(c) != std::string_view::npos) {
      out.push_back({Tok::Punct, std::string(1, c), start});
      advance();
    } else {
      throw ParseError(start, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Tok::End, "", at});
  return out;
}

bool is_literal_keyword(const std::string& s) {
  return s == "perm" || s == "cube" || s == "cubes" || s == "overlap" || s == "forest" ||
         s == "diagram" || s == "link1" || s == "link2" || s == "alphabet";
}

class Parser {
public:
  explicit Parser(std::string_view text) : toks_(lex(text)) {}

  Script run() {
    while (peek().kind != Tok::End) {
      statement();
    }
    return std::move(script_);
  }

private:
  // ---- token helpers
  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  const Token& next() {
    const Token& t = toks_[pos_];
    if (t.kind != Tok::End) {
      ++pos_;
    }
    return t;
  }
  bool at_punct(char c) const { return peek().kind == Tok::Punct && peek().text[0] == c; }
  bool accept(char c) {
    if (at_punct(c)) {
      next();
      return true;
    }
    return false;
  }
  static std::string describe(const Token& t) {
    return t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
  }
  [[noreturn]] void fail(const Token& t, const std::string& what) const {
    throw ParseError(t.where, what);
  }
  void expect(char c) {
    if (!accept(c)) {
      fail(peek(), std::string("expected '") + c + "', got " + describe(peek()));
    }
  }
  std::string ident() {
    if (peek().kind != Tok::Ident) {
      fail(peek(), "expected a name, got " + describe(peek()));
    }
    return next().text;
  }
  void keyword(const std::string& word) {
    if (peek().kind != Tok::Ident || peek().text != word) {
      fail(peek(), "expected '" + word + "', got " + describe(peek()));
    }
    next();
  }
  void field(const std::string& word) {
    keyword(word);
    expect('=');
  }
  Rational rational() {
    if (peek().kind != Tok::Number) {
      fail(peek(), "expected a number, got " + describe(peek()));
    }
    const Token& t = next();
    std::string text = t.text;
    if (accept('/')) {
      if (peek().kind != Tok::Number) {
        fail(peek(), "expected a denominator, got " + describe(peek()));
      }
      text += "/" + next().text;
    }
    try {
      return parse_rational(text);
    } catch (const OperadError& e) {
      fail(t, e.what());
    }
  }
  long integer() {
    const Token& t = peek();
    const Rational r = rational();
    if (denominator(r) != 1) {
      fail(t, "expected an integer, got " + opforge::to_string(r));
    }
    return static_cast<long>(numerator(r));
  }

  template <typename F>
  auto guarded(const Location& where, F&& make) {
    try {
      return make();
    } catch (const ParseError&) {
      throw;
    } catch (const OperadError& e) {
      throw ParseError(where, e.what());
    }
  }

  // ---- statements
  void statement() {
    keyword("let");
    const Token& name_tok = peek();
    const std::string name = ident();
    if (script_.find(name)) {
      fail(name_tok, "'" + name + "' is already defined");
    }
    expect('=');
    Expr e = expr();
    expect(';');
    Value v = evaluate(e);
    script_.bindings.push_back(Binding{name, std::move(e), std::move(v)});
  }

  // ---- expressions
  Expr expr() {
    const Token& t = peek();
    if (t.kind == Tok::Number) {
      return Expr{Expr::Kind::Literal, t.where, "", Value{rational()}, {}};
    }
    if (accept('[')) {
      Expr list{Expr::Kind::List, t.where, "", std::nullopt, {}};
      if (!accept(']')) {
        do {
          list.args.push_back(expr());
        } while (accept(','));
        expect(']');
      }
      return list;
    }
    if (t.kind != Tok::Ident) {
      fail(t, "expected an expression, got " + describe(t));
    }
    const Token& after = peek(1);
    const bool opens = after.kind == Tok::Punct && (after.text == "[" || after.text == "{");
    if (is_literal_keyword(t.text) && opens) {
      return Expr{Expr::Kind::Literal, t.where, "", literal(), {}};
    }
    const std::string name = ident();
    if (accept('(')) {
      Expr call{Expr::Kind::Call, t.where, name, std::nullopt, {}};
      if (!accept(')')) {
        do {
          call.args.push_back(expr());
        } while (accept(','));
        expect(')');
      }
      return call;
    }
    return Expr{Expr::Kind::Reference, t.where, name, std::nullopt, {}};
  }

  // ---- literals
  Value literal() {
    const Token& t = next();
    const std::string& kind = t.text;
    if (kind == "perm") {
      return Value{perm_literal(t)};
    }
    if (kind == "cube") {
      return Value{cube_literal()};
    }
    if (kind == "cubes") {
      return cubes_literal(t);
    }
    if (kind == "overlap") {
      return overlap_literal(t);
    }
    if (kind == "forest") {
      return Value{forest_literal(t)};
    }
    if (kind == "diagram") {
      return diagram_literal(t);
    }
    if (kind == "alphabet") {
      return alphabet_literal(t);
    }
    return link_literal(t);
  }

  Permutation perm_literal(const Token& t) {
    expect('[');
    std::vector<int> images;
    if (!accept(']')) {
      do {
        images.push_back(static_cast<int>(integer()));
      } while (accept(','));
      expect(']');
    }
    return guarded(t.where, [&] { return Permutation(std::move(images)); });
  }

  AffineMap1 interval() {
    const Token& t = peek();
    expect('(');
    const Rational lo = rational();
    expect(',');
    const Rational hi = rational();
    expect(')');
    return guarded(t.where, [&] { return AffineMap1::from_image(lo, hi); });
  }

  LittleCube cube_literal() {
    expect('[');
    LittleCube cube;
    do {
      cube.axes.push_back(interval());
    } while (accept(','));
    expect(']');
    return cube;
  }

  Value cubes_literal(const Token& t) {
    expect('{');
    field("dim");
    const long dim = integer();
    expect(';');
    std::vector<LittleCube> cubes;
    while (!accept('}')) {
      keyword("cube");
      cubes.push_back(cube_literal());
      expect(';');
    }
    if (dim < 1) {
      fail(t, "cube dimension must be positive");
    }
    return guarded(t.where, [&] { return Value{CubesElement(static_cast<std::size_t>(dim), std::move(cubes))}; });
  }

  Value overlap_literal(const Token& t) {
    expect('{');
    field("intervals");
    expect('[');
    std::vector<AffineMap1> intervals;
    if (!accept(']')) {
      do {
        intervals.push_back(interval());
      } while (accept(','));
      expect(']');
    }
    expect(';');
    field("order");
    const Token& p = peek();
    keyword("perm");
    const Permutation order = perm_literal(p);
    accept(';');
    expect('}');
    return guarded(t.where, [&] { return Value{OverlapElement(std::move(intervals), order)}; });
  }

  struct ForestBuilder {
    std::vector<std::string> names;
    std::vector<std::optional<NodeId>> parents;
    std::map<std::string, NodeId> ids;
  };

  void forest_node(ForestBuilder& b, std::optional<NodeId> parent) {
    const Token& t = peek();
    const std::string name = ident();
    if (b.ids.count(name)) {
      fail(t, "disk '" + name + "' appears twice");
    }
    const auto id = static_cast<NodeId>(b.names.size());
    b.ids[name] = id;
    b.names.push_back(name);
    b.parents.push_back(parent);
    if (accept('[')) {
      while (!accept(']')) {
        forest_node(b, id);
      }
    }
  }

  NodeId disk_ref(const ForestBuilder& b) {
    const Token& t = peek();
    const std::string name = ident();
    const auto it = b.ids.find(name);
    if (it == b.ids.end()) {
      fail(t, "unknown disk '" + name + "'");
    }
    return it->second;
  }

  std::vector<NodeId> disk_tuple(const ForestBuilder& b) {
    expect('(');
    std::vector<NodeId> disks;
    if (!accept(')')) {
      do {
        disks.push_back(disk_ref(b));
      } while (accept(','));
      expect(')');
    }
    return disks;
  }

  DiskForest forest_literal(const Token& t) {
    return forest_literal(t, nullptr);
  }

  DiskForest forest_literal(const Token& t, ForestBuilder* keep) {
    expect('{');
    ForestBuilder b;
    forest_node(b, std::nullopt);
    std::map<int, std::vector<NodeId>> marked;
    while (!accept('}')) {
      const Token& m = peek();
      const std::string word = ident();
      const bool ok = word.size() > 6 && word.rfind("marked", 0) == 0 &&
                      word.find_first_not_of("0123456789", 6) == std::string::npos;
      if (!ok) {
        fail(m, "expected markedN=(...) or '}', got '" + word + "'");
      }
      const int color = std::stoi(word.substr(6));
      expect('=');
      if (marked.count(color)) {
        fail(m, "strand disks for color " + std::to_string(color) + " given twice");
      }
      marked[color] = disk_tuple(b);
    }
    DiskForest f = DiskForest::from_parents(b.names, b.parents, std::move(marked));
    if (auto problem = validate(f)) {
      fail(t, "invalid forest: " + *problem);
    }
    if (keep) {
      *keep = std::move(b);
    }
    return f;
  }

  Value diagram_literal(const Token& t) {
    expect('{');
    field("sig");
    expect('(');
    std::vector<long> colors;
    if (!at_punct(';')) {
      do {
        colors.push_back(integer());
      } while (accept(','));
    }
    expect(';');
    const long output = integer();
    expect(')');
    expect(';');
    const Token& ft = peek();
    keyword("forest");
    ForestBuilder b;
    DiskForest forest = forest_literal(ft, &b);
    expect(';');
    std::vector<Muffler> mufflers;
    while (peek().kind == Tok::Ident && peek().text == "muffler") {
      const Token& mt = next();
      expect('{');
      field("time");
      Muffler m;
      m.time = interval();
      expect(';');
      field("outer");
      m.outer = disk_ref(b);
      expect(';');
      field("holes");
      m.holes = disk_tuple(b);
      accept(';');
      expect('}');
      expect(';');
      if (mufflers.size() >= colors.size()) {
        fail(mt, "more mufflers than the signature lists");
      }
      if (m.color() != colors[mufflers.size()]) {
        fail(mt, "muffler " + std::to_string(mufflers.size() + 1) + " has " + std::to_string(m.color()) +
                     " holes but the signature says " + std::to_string(colors[mufflers.size()]));
      }
      mufflers.push_back(std::move(m));
    }
    if (mufflers.size() != colors.size()) {
      fail(peek(), "the signature lists " + std::to_string(colors.size()) + " mufflers, found " +
                       std::to_string(mufflers.size()));
    }
    field("order");
    const Token& p = peek();
    keyword("perm");
    const Permutation order = perm_literal(p);
    accept(';');
    expect('}');
    return guarded(t.where, [&] {
      return Value{InfectionDiagram(static_cast<int>(output), std::move(forest), std::move(mufflers), order)};
    });
  }

  Value alphabet_literal(const Token& t) {
    expect('{');
    Alphabet a;
    while (!accept('}')) {
      const Token& d = peek();
      const std::string kind = ident();
      const std::string name = ident();
      guarded(d.where, [&] {
        if (kind == "knot") {
          a.add_knot(name);
        } else if (kind == "noncentral") {
          int lk = 0;
          if (peek().kind == Tok::Ident && peek().text == "lk") {
            field("lk");
            lk = static_cast<int>(integer());
          }
          a.add_noncentral(name, lk);
        } else {
          fail(d, "expected 'knot' or 'noncentral', got '" + kind + "'");
        }
        return 0;
      });
      if (!accept(';') && !at_punct('}')) {
        fail(peek(), "expected ';' or '}', got " + describe(peek()));
      }
    }
    (void)t;
    return Value{std::move(a)};
  }

  Letter letter(bool central_list) {
    const Token& t = peek();
    const std::string name = ident();
    Letter l{LetterKind::NonCentral, name};
    if (accept('(')) {
      if (name == "SplitA") {
        l.kind = LetterKind::SplitA;
      } else if (name == "SplitB") {
        l.kind = LetterKind::SplitB;
      } else if (name == "Cable") {
        l.kind = LetterKind::Cable;
      } else {
        fail(t, "unknown letter constructor '" + name + "'");
      }
      l.name = ident();
      expect(')');
    }
    if (central_list != (l.kind != LetterKind::NonCentral)) {
      fail(t, central_list ? "central letters are SplitA(K), SplitB(K) or Cable(K)"
                           : "the body holds noncentral letters only");
    }
    check_letter(t, l);
    return l;
  }

  void check_letter(const Token& t, const Letter& l) {
    if (const Alphabet* a = script_.alphabet()) {
      guarded(t.where, [&] {
        a->check(l);
        return 0;
      });
    }
  }

  std::vector<Letter> letter_list(bool central_list) {
    expect('[');
    std::vector<Letter> letters;
    if (!accept(']')) {
      do {
        letters.push_back(letter(central_list));
      } while (accept(','));
      expect(']');
    }
    return letters;
  }

  Value link_literal(const Token& t) {
    expect('{');
    if (t.text == "link1") {
      field("knots");
      expect('[');
      std::vector<std::string> names;
      if (!accept(']')) {
        do {
          const Token& k = peek();
          names.push_back(ident());
          check_letter(k, Letter{LetterKind::Knot, names.back()});
        } while (accept(','));
        expect(']');
      }
      accept(';');
      expect('}');
      return Value{LinkWord::knots(std::move(names))};
    }
    field("twist");
    const long twist = integer();
    expect(';');
    field("central");
    auto central = letter_list(true);
    expect(';');
    field("body");
    auto body = letter_list(false);
    accept(';');
    expect('}');
    return guarded(t.where, [&] {
      return Value{LinkWord::link(static_cast<int>(twist), std::move(central), std::move(body))};
    });
  }

  // ---- evaluation
  Value evaluate(const Expr& e) {
    switch (e.kind) {
      case Expr::Kind::Literal:
        return *e.literal;
      case Expr::Kind::Reference: {
        const Binding* b = script_.find(e.name);
        if (!b) {
          throw ParseError(e.where, "unknown name '" + e.name + "'");
        }
        return b->value;
      }
      case Expr::Kind::List: {
        ValueList items;
        for (const auto& item : e.args) {
          items.push_back(evaluate(item));
        }
        return Value{std::move(items)};
      }
      case Expr::Kind::Call:
        break;
    }
    std::vector<Value> args;
    for (const auto& a : e.args) {
      args.push_back(evaluate(a));
    }
    return guarded(e.where, [&] { return call(e, args); });
  }

  template <typename T>
  const T& arg(const Expr& e, const std::vector<Value>& args, std::size_t i, const char* want) {
    const T* v = args[i].get<T>();
    if (!v) {
      throw ParseError(e.args[i].where, e.name + ": argument " + std::to_string(i + 1) + " must be " + want +
                                            ", got " + type_name(args[i]));
    }
    return *v;
  }

  int int_arg(const Expr& e, const std::vector<Value>& args, std::size_t i) {
    const Rational& r = arg<Rational>(e, args, i, "an integer");
    if (denominator(r) != 1) {
      throw ParseError(e.args[i].where, e.name + ": argument " + std::to_string(i + 1) + " must be an integer");
    }
    return static_cast<int>(numerator(r));
  }

  template <typename T>
  std::vector<T> list_arg(const Expr& e, const std::vector<Value>& args, std::size_t i, const char* want) {
    const ValueList& items = arg<ValueList>(e, args, i, "a list");
    std::vector<T> out;
    for (const auto& item : items) {
      const T* v = item.get<T>();
      if (!v) {
        throw ParseError(e.args[i].where, e.name + ": list items must be " + std::string(want) + ", got " +
                                              type_name(item));
      }
      out.push_back(*v);
    }
    return out;
  }

  void arity(const Expr& e, const std::vector<Value>& args, std::size_t n) {
    if (args.size() != n) {
      throw ParseError(e.where, e.name + " takes " + std::to_string(n) + " argument" + (n == 1 ? "" : "s") +
                                    ", got " + std::to_string(args.size()));
    }
  }

  Value call(const Expr& e, const std::vector<Value>& args) {
    const std::string& f = e.name;
    if (f == "compose") {
      arity(e, args, 2);
      if (const auto* c = args[0].get<CubesElement>()) {
        return Value{cubes_compose(*c, list_arg<CubesElement>(e, args, 1, "cubes"))};
      }
      if (const auto* o = args[0].get<OverlapElement>()) {
        return Value{compose_overlap(*o, list_arg<OverlapElement>(e, args, 1, "overlap"))};
      }
      const auto& d = arg<InfectionDiagram>(e, args, 0, "cubes, overlap or diagram");
      return Value{compose(d, list_arg<InfectionDiagram>(e, args, 1, "diagram"))};
    }
    if (f == "permute") {
      arity(e, args, 2);
      const auto& p = arg<Permutation>(e, args, 1, "a perm");
      if (const auto* c = args[0].get<CubesElement>()) {
        return Value{act_symmetric(*c, p)};
      }
      if (const auto* o = args[0].get<OverlapElement>()) {
        return Value{act_symmetric(*o, p)};
      }
      return Value{act_symmetric(arg<InfectionDiagram>(e, args, 0, "cubes, overlap or diagram"), p)};
    }
    if (f == "act") {
      arity(e, args, 2);
      const auto& d = arg<InfectionDiagram>(e, args, 0, "a diagram");
      return Value{act(d, list_arg<LinkWord>(e, args, 1, "links"))};
    }
    if (f == "mul") {
      if (args.empty()) {
        throw ParseError(e.where, "mul needs at least one argument");
      }
      LinkWord w = arg<LinkWord>(e, args, 0, "a link");
      for (std::size_t i = 1; i < args.size(); ++i) {
        w = mul(w, arg<LinkWord>(e, args, i, "a link"));
      }
      return Value{w};
    }
    if (f == "twist") {
      arity(e, args, 2);
      return Value{add_twists(arg<LinkWord>(e, args, 0, "a link"), int_arg(e, args, 1))};
    }
    if (f == "stack") {
      arity(e, args, 2);
      return Value{c1_to_stacking(arg<CubesElement>(e, args, 0, "cubes"), int_arg(e, args, 1))};
    }
    if (f == "unstack") {
      arity(e, args, 1);
      auto c = stacking_to_c1(arg<InfectionDiagram>(e, args, 0, "a diagram"));
      if (!c) {
        throw ParseError(e.where, "unstack: not a stacking element");
      }
      return Value{*c};
    }
    if (f == "identity") {
      arity(e, args, 1);
      return Value{identity_diagram(int_arg(e, args, 0))};
    }
    if (f == "stacking") {
      arity(e, args, 1);
      const int n = int_arg(e, args, 0);
      if (n < 0) {
        throw ParseError(e.args[0].where, "stacking: negative arity");
      }
      return Value{canonical_stacking(static_cast<std::size_t>(n))};
    }
    if (f == "swap") {
      arity(e, args, 3);
      const auto& d = arg<InfectionDiagram>(e, args, 0, "a diagram");
      const int i = int_arg(e, args, 1);
      const int k = int_arg(e, args, 2);
      const auto n = static_cast<int>(d.arity());
      if (i < 1 || k < 1 || i > n || k > n || i == k) {
        throw ParseError(e.where, "swap: indices must be distinct and in 1.." + std::to_string(n));
      }
      return Value{swap_times(d, static_cast<std::size_t>(i), static_cast<std::size_t>(k))};
    }
    if (f == "normalize") {
      arity(e, args, 1);
      if (const auto* d = args[0].get<InfectionDiagram>()) {
        return Value{canonicalize(*d)};
      }
      return args[0];
    }
    throw ParseError(e.where, "unknown function '" + f + "'");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  Script script_;
};

}  // namespace

Script parse(std::string_view text) { return Parser(text).run(); }

std::string print(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Literal:
      return to_string(*e.literal);
    case Expr::Kind::Reference:
      return e.name;
    case Expr::Kind::Call:
    case Expr::Kind::List: {
      std::string out = e.kind == Expr::Kind::Call ? e.name + "(" : "[";
      for (std::size_t i = 0; i < e.args.size(); ++i) {
        out += (i > 0 ? ", " : "") + print(e.args[i]);
      }
      return out + (e.kind == Expr::Kind::Call ? ")" : "]");
    }
  }
  return "";
}

std::string print(const Script& script) {
  std::string out;
  for (const auto& b : script.bindings) {
    out += "let " + b.name + " = " + print(b.expr) + ";\n";
  }
  return out;
}

Script normalize(const Script& script) {
  Script out;
  for (const auto& b : script.bindings) {
    Value v = b.value;
    if (const auto* d = v.get<InfectionDiagram>()) {
      v = Value{canonicalize(*d)};
    }
    out.bindings.push_back(Binding{b.name, Expr{Expr::Kind::Literal, b.expr.where, "", v, {}}, v});
  }
  return out;
}

}  // namespace opforge::dsl
