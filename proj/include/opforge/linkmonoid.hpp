#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "opforge/rational.hpp"

namespace opforge {

/// Letter kinds. Unit is the full twist u generating the pure braids; it
/// never appears inside a word, only as the twist exponent. The enumerator
/// order of SplitA, SplitB and Cable fixes the sort order of central letters.
enum class LetterKind { Unit, Knot, SplitA, SplitB, Cable, NonCentral };

struct Letter {
  LetterKind kind;
  std::string name;  // knot name for Knot/SplitA/SplitB/Cable, empty for Unit

  friend auto operator<=>(const Letter&, const Letter&) = default;
};

enum class LetterClass { Unit, Central, NonCentral };

LetterClass classify(const Letter& letter);

/// "u", "trefoil", "SplitA(trefoil)", "Cable(fig8)", "X"
std::string to_string(const Letter& letter);

/// Named prime knots and noncentral prime 2-string links. Split and cable
/// letters are derived from the knots and have linking number 0.
class Alphabet {
public:
  void add_knot(std::string name);
  void add_noncentral(std::string name, int linking_number = 0);

  bool has_knot(std::string_view name) const;
  bool has_noncentral(std::string_view name) const;
  const std::vector<std::string>& knots() const { return knots_; }
  const std::vector<std::string>& noncentral() const { return noncentral_order_; }

  /// Throws OperadError for letters built on unknown names.
  void check(const Letter& letter) const;
  int linking_number(const Letter& letter) const;

  /// Line-oriented form: "knot NAME" or "noncentral NAME [lk=N]"; '#' starts
  /// a comment.
  static Alphabet parse(std::string_view text);

private:
  void claim(const std::string& name);

  std::vector<std::string> knots_;
  std::vector<std::string> noncentral_order_;
  std::map<std::string, int, std::less<>> noncentral_;
};

/// "alphabet { knot trefoil; noncentral X lk=0 }"
std::string to_string(const Alphabet& alphabet);

/// Normal form of an isotopy class of a 1- or 2-string link.
/// Color 1: a sorted multiset of knot letters (commutative).
/// Color 2: twist exponent, sorted multiset of central letters, and the
/// ordered body of noncentral letters.
class LinkWord {
public:
  static LinkWord trivial(int color);
  static LinkWord knots(std::vector<std::string> names);
  static LinkWord link(int twist, std::vector<Letter> central, std::vector<Letter> body);
  /// The word consisting of one letter (a knot letter gives a color-1 word).
  static LinkWord of(const Letter& letter);

  int color() const { return color_; }
  int twist() const { return twist_; }
  const std::vector<Letter>& central() const { return central_; }
  const std::vector<Letter>& body() const { return body_; }

  friend bool operator==(const LinkWord&, const LinkWord&) = default;

private:
  LinkWord(int color, int twist, std::vector<Letter> central, std::vector<Letter> body);

  int color_;
  int twist_;
  std::vector<Letter> central_;
  std::vector<Letter> body_;
};

/// Connect sum (stacking a below b). Throws on color mismatch.
LinkWord mul(const LinkWord& a, const LinkWord& b);

/// Normal-form comparison. Throws on color mismatch.
bool equals(const LinkWord& a, const LinkWord& b);

/// Twist plus the letters' linking numbers; a monoid homomorphism to Z.
int linking_number(const LinkWord& w, const Alphabet& alphabet);

LinkWord add_twists(const LinkWord& w, int m);

/// Exactly one non-unit letter.
bool is_prime(const LinkWord& w);

struct PrimeDecomposition {
  int twist = 0;
  /// Body letters in order, then central letters sorted.
  std::vector<Letter> factors;
};
PrimeDecomposition decompose_primes(const LinkWord& w);
/// Multiplies the factors back together.
LinkWord recompose(const PrimeDecomposition& d, int color);

/// The image in the free quotient by the center.
std::vector<Letter> mod_center(const LinkWord& w);

/// All prime factors noncentral and no units.
bool in_S2(const LinkWord& w);
/// in_S2 with linking number 0.
bool in_S2_0(const LinkWord& w, const Alphabet& alphabet);

/// "link1{ knots=[trefoil, fig8] }" or
/// "link2{ twist=3; central=[SplitA(trefoil)]; body=[X, Y] }"
std::string to_string(const LinkWord& w);

}  // namespace opforge
