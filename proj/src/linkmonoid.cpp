#include "opforge/linkmonoid.hpp"

#include <algorithm>
#include <sstream>

namespace opforge {

LetterClass classify(const Letter& letter) {
  switch (letter.kind) {
    case LetterKind::Unit:
      return LetterClass::Unit;
    case LetterKind::NonCentral:
      return LetterClass::NonCentral;
    default:
      return LetterClass::Central;
  }
}

std::string to_string(const Letter& letter) {
  switch (letter.kind) {
    case LetterKind::Unit:
      return "u";
    case LetterKind::Knot:
    case LetterKind::NonCentral:
      return letter.name;
    case LetterKind::SplitA:
      return "SplitA(" + letter.name + ")";
    case LetterKind::SplitB:
      return "SplitB(" + letter.name + ")";
    case LetterKind::Cable:
      return "Cable(" + letter.name + ")";
  }
  return "?";
}

void Alphabet::claim(const std::string& name) {
  if (name.empty() || name == "u") {
    throw OperadError("invalid letter name '" + name + "'");
  }
  if (has_knot(name) || has_noncentral(name)) {
    throw OperadError("letter name '" + name + "' declared twice");
  }
}

void Alphabet::add_knot(std::string name) {
  claim(name);
  knots_.push_back(std::move(name));
}

void Alphabet::add_noncentral(std::string name, int linking_number) {
  claim(name);
  noncentral_order_.push_back(name);
  noncentral_.emplace(std::move(name), linking_number);
}

bool Alphabet::has_knot(std::string_view name) const {
  return std::find(knots_.begin(), knots_.end(), name) != knots_.end();
}

bool Alphabet::has_noncentral(std::string_view name) const {
  return noncentral_.find(name) != noncentral_.end();
}

void Alphabet::check(const Letter& letter) const {
  switch (letter.kind) {
    case LetterKind::Unit:
      return;
    case LetterKind::NonCentral:
      if (!has_noncentral(letter.name)) {
        throw OperadError("unknown noncentral letter '" + letter.name + "'");
      }
      return;
    default:
      if (!has_knot(letter.name)) {
        throw OperadError("unknown knot '" + letter.name + "' in " + to_string(letter));
      }
  }
}

int Alphabet::linking_number(const Letter& letter) const {
  check(letter);
  if (letter.kind == LetterKind::Unit) {
    return 1;
  }
  if (letter.kind == LetterKind::NonCentral) {
    return noncentral_.find(letter.name)->second;
  }
  return 0;
}

Alphabet Alphabet::parse(std::string_view text) {
  Alphabet alphabet;
  std::istringstream in{std::string(text)};
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream words(line);
    std::string kind;
    std::string name;
    if (!(words >> kind)) {
      continue;
    }
    const std::string where = "alphabet line " + std::to_string(number) + ": ";
    if (!(words >> name)) {
      throw OperadError(where + "missing letter name");
    }
    if (kind == "knot") {
      alphabet.add_knot(name);
    } else if (kind == "noncentral") {
      int lk = 0;
      std::string attribute;
      if (words >> attribute) {
        if (attribute.rfind("lk=", 0) != 0) {
          throw OperadError(where + "expected lk=N, got '" + attribute + "'");
        }
        const Rational value = parse_rational(attribute.substr(3));
        if (denominator(value) != 1) {
          throw OperadError(where + "linking numbers are integers");
        }
        lk = static_cast<int>(numerator(value));
      }
      alphabet.add_noncentral(name, lk);
    } else {
      throw OperadError(where + "unknown declaration '" + kind + "'");
    }
    if (words >> name) {
      throw OperadError(where + "trailing text '" + name + "'");
    }
  }
  return alphabet;
}

std::string to_string(const Alphabet& alphabet) {
  std::string out = "alphabet {";
  bool first = true;
  const auto sep = [&] {
    out += first ? " " : "; ";
    first = false;
  };
  for (const auto& k : alphabet.knots()) {
    sep();
    out += "knot " + k;
  }
  for (const auto& x : alphabet.noncentral()) {
    sep();
    out += "noncentral " + x + " lk=" +
           std::to_string(alphabet.linking_number(Letter{LetterKind::NonCentral, x}));
  }
  return out + " }";
}

LinkWord::LinkWord(int color, int twist, std::vector<Letter> central, std::vector<Letter> body)
    : color_(color), twist_(twist), central_(std::move(central)), body_(std::move(body)) {
  if (color_ != 1 && color_ != 2) {
    throw OperadError("link words exist for colors 1 and 2, got " + std::to_string(color_));
  }
  for (const auto& letter : central_) {
    const bool ok = color_ == 1 ? letter.kind == LetterKind::Knot
                                : classify(letter) == LetterClass::Central && letter.kind != LetterKind::Knot;
    if (!ok) {
      throw OperadError("letter " + to_string(letter) + " cannot be a central factor of a color-" +
                        std::to_string(color_) + " word");
    }
  }
  for (const auto& letter : body_) {
    if (color_ == 1 || letter.kind != LetterKind::NonCentral) {
      throw OperadError("letter " + to_string(letter) + " cannot be a noncentral factor of a color-" +
                        std::to_string(color_) + " word");
    }
  }
  if (color_ == 1 && twist_ != 0) {
    throw OperadError("knots carry no twist");
  }
  std::sort(central_.begin(), central_.end());
}

LinkWord LinkWord::trivial(int color) { return LinkWord(color, 0, {}, {}); }

LinkWord LinkWord::knots(std::vector<std::string> names) {
  std::vector<Letter> letters;
  for (auto& n : names) {
    letters.push_back(Letter{LetterKind::Knot, std::move(n)});
  }
  return LinkWord(1, 0, std::move(letters), {});
}

LinkWord LinkWord::link(int twist, std::vector<Letter> central, std::vector<Letter> body) {
  return LinkWord(2, twist, std::move(central), std::move(body));
}

LinkWord LinkWord::of(const Letter& letter) {
  switch (letter.kind) {
    case LetterKind::Unit:
      return LinkWord(2, 1, {}, {});
    case LetterKind::Knot:
      return LinkWord(1, 0, {letter}, {});
    case LetterKind::NonCentral:
      return LinkWord(2, 0, {}, {letter});
    default:
      return LinkWord(2, 0, {letter}, {});
  }
}

namespace {

void same_color(const LinkWord& a, const LinkWord& b, const char* what) {
  if (a.color() != b.color()) {
    throw OperadError(std::string(what) + ": color mismatch " + std::to_string(a.color()) + " vs " +
                      std::to_string(b.color()));
  }
}

}  // namespace

LinkWord mul(const LinkWord& a, const LinkWord& b) {
  same_color(a, b, "mul");
  std::vector<Letter> central = a.central();
  central.insert(central.end(), b.central().begin(), b.central().end());
  std::vector<Letter> body = a.body();
  body.insert(body.end(), b.body().begin(), b.body().end());
  if (a.color() == 1) {
    std::vector<std::string> names;
    for (auto& letter : central) {
      names.push_back(std::move(letter.name));
    }
    return LinkWord::knots(std::move(names));
  }
  return LinkWord::link(a.twist() + b.twist(), std::move(central), std::move(body));
}

bool equals(const LinkWord& a, const LinkWord& b) {
  same_color(a, b, "equals");
  return a == b;
}

int linking_number(const LinkWord& w, const Alphabet& alphabet) {
  if (w.color() != 2) {
    throw OperadError("linking number needs a 2-string link");
  }
  int total = w.twist();
  for (const auto& letter : w.central()) {
    total += alphabet.linking_number(letter);
  }
  for (const auto& letter : w.body()) {
    total += alphabet.linking_number(letter);
  }
  return total;
}

LinkWord add_twists(const LinkWord& w, int m) {
  if (w.color() != 2) {
    throw OperadError("add_twists needs a 2-string link");
  }
  return LinkWord::link(w.twist() + m, w.central(), w.body());
}

bool is_prime(const LinkWord& w) { return w.central().size() + w.body().size() == 1; }

PrimeDecomposition decompose_primes(const LinkWord& w) {
  PrimeDecomposition d{w.twist(), w.body()};
  d.factors.insert(d.factors.end(), w.central().begin(), w.central().end());
  return d;
}

LinkWord recompose(const PrimeDecomposition& d, int color) {
  LinkWord w = LinkWord::trivial(color);
  for (const auto& letter : d.factors) {
    w = mul(w, LinkWord::of(letter));
  }
  return d.twist == 0 ? w : add_twists(w, d.twist);
}

std::vector<Letter> mod_center(const LinkWord& w) {
  if (w.color() != 2) {
    throw OperadError("mod_center needs a 2-string link");
  }
  return w.body();
}

bool in_S2(const LinkWord& w) { return w.color() == 2 && w.twist() == 0 && w.central().empty(); }

bool in_S2_0(const LinkWord& w, const Alphabet& alphabet) {
  return in_S2(w) && linking_number(w, alphabet) == 0;
}

namespace {

std::string letter_list(const std::vector<Letter>& letters) {
  std::string out = "[";
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i > 0) {
      out += ", ";
    }
    out += to_string(letters[i]);
  }
  return out + "]";
}

}  // namespace

std::string to_string(const LinkWord& w) {
  if (w.color() == 1) {
    return "link1{ knots=" + letter_list(w.central()) + " }";
  }
  return "link2{ twist=" + std::to_string(w.twist()) + "; central=" + letter_list(w.central()) +
         "; body=" + letter_list(w.body()) + " }";
}

}  // namespace opforge
