#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "opforge/cubes.hpp"
#include "opforge/diagrams.hpp"
#include "opforge/diskforest.hpp"
#include "opforge/linkmonoid.hpp"
#include "opforge/overlap.hpp"
#include "opforge/perm.hpp"
#include "opforge/rational.hpp"

namespace opforge::dsl {

/// Grammar version accepted by parse(); see docs/grammar.md.
inline constexpr int kGrammarVersion = 1;

struct Value;
using ValueList = std::vector<Value>;

struct Value {
  std::variant<Rational, Permutation, LittleCube, CubesElement, OverlapElement, DiskForest,
               InfectionDiagram, Alphabet, LinkWord, ValueList>
      data;

  template <typename T>
  const T* get() const {
    return std::get_if<T>(&data);
  }
};

/// "number", "perm", "cube", "cubes", "overlap", "forest", "diagram",
/// "alphabet", "link1", "link2" or "list".
std::string type_name(const Value& v);

/// The literal form of a value; parses back to an equal value.
std::string to_string(const Value& v);

struct Location {
  int line = 1;
  int column = 1;
};

/// Diagnostic with a source position. what() reads "line:column: message".
class ParseError : public OperadError {
public:
  ParseError(Location where, const std::string& message);
  Location where() const { return where_; }
  const std::string& message() const { return message_; }

private:
  Location where_;
  std::string message_;
};

struct Expr {
  enum class Kind { Literal, Reference, Call, List };
  Kind kind;
  Location where;
  std::string name;               // reference or function name
  std::optional<Value> literal;   // Literal only
  std::vector<Expr> args;         // call arguments or list items
};

/// `let NAME = EXPR;`. Alphabet bindings become the alphabet that later link
/// literals and link operations are checked against.
struct Binding {
  std::string name;
  Expr expr;
  Value value;
};

struct Script {
  std::vector<Binding> bindings;

  const Binding* find(std::string_view name) const;
  /// The most recent alphabet binding, if any.
  const Alphabet* alphabet() const;
};

/// Parses and evaluates. Throws ParseError for syntax errors, unresolved or
/// duplicate names, type errors and invariant violations of constructed
/// values.
Script parse(std::string_view text);

/// Canonical text: one binding per line, literals in their printed form.
std::string print(const Script& script);
std::string print(const Expr& e);

/// Same bindings with every expression replaced by its value's literal and
/// diagrams canonicalized.
Script normalize(const Script& script);

}  // namespace opforge::dsl
