#pragma once

// Free-group words over twist, slide and transposition generators.
//
// Words are written the way products of mapping classes are written: the
// rightmost letter acts first. A Word is always freely reduced; letter
// sequences that are not reduced are plain std::vector<Letter> ("spellings")
// and only live inside certificate replay.

#include <algorithm>
#include <compare>
#include <cstdlib>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mcgcheck/error.hpp"

namespace mcgcheck {

enum class Sidedness { OneSided, TwoSided };
enum class Arrow { Forward, Reversed };
enum class Sign { Plus, Minus };

inline Sign flip(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }
inline char sign_char(Sign s) { return s == Sign::Plus ? '+' : '-'; }

/// Symbolic curve. Two-sided curves used as the second argument of a slide or
/// transposition carry an arrow; Reversed models the curve with the opposite
/// arrow.
struct CurveRef {
  std::string name;
  Sidedness sidedness = Sidedness::TwoSided;
  std::optional<Arrow> arrow;

  static CurveRef one_sided(std::string n) { return {std::move(n), Sidedness::OneSided, std::nullopt}; }
  static CurveRef two_sided(std::string n) { return {std::move(n), Sidedness::TwoSided, std::nullopt}; }
  static CurveRef arrowed(std::string n, Arrow a = Arrow::Forward) {
    return {std::move(n), Sidedness::TwoSided, a};
  }

  /// Same curve without arrow information.
  CurveRef unarrowed() const { return {name, sidedness, std::nullopt}; }

  auto operator<=>(const CurveRef&) const = default;
};

/// Orientation of a regular neighbourhood of a two-sided curve: +_c or -_c.
struct OrientationToken {
  CurveRef curve;
  Sign sign = Sign::Plus;

  auto operator<=>(const OrientationToken&) const = default;
};

inline OrientationToken flip(const OrientationToken& t) { return {t.curve, flip(t.sign)}; }

enum class GeneratorKind { Twist, Slide, Transposition };

/// t_{c;theta}, Y_{mu,alpha} or U_{mu,alpha;theta}. Structural equality only:
/// T(c,+) and T(c,-) are different symbols.
class GeneratorSymbol {
 public:
  /// Dehn twist. The arrow of `curve`, if any, is dropped: a twist depends on
  /// the curve and the orientation only.
  static GeneratorSymbol twist(CurveRef curve, Sign orientation) {
    curve.arrow.reset();
    if (curve.sidedness != Sidedness::TwoSided) {
      throw Error(ErrorCode::ValidationError, "twist curve '" + curve.name + "' must be two-sided");
    }
    return GeneratorSymbol(GeneratorKind::Twist, {std::move(curve)}, orientation);
  }
  static GeneratorSymbol twist(std::string name, Sign orientation) {
    return twist(CurveRef::two_sided(std::move(name)), orientation);
  }

  static GeneratorSymbol slide(CurveRef mu, CurveRef alpha) {
    check_pair(mu, alpha);
    return GeneratorSymbol(GeneratorKind::Slide, {std::move(mu), std::move(alpha)}, std::nullopt);
  }

  static GeneratorSymbol transposition(CurveRef mu, CurveRef alpha, Sign orientation) {
    check_pair(mu, alpha);
    return GeneratorSymbol(GeneratorKind::Transposition, {std::move(mu), std::move(alpha)},
                           orientation);
  }

  GeneratorKind kind() const { return kind_; }
  const std::vector<CurveRef>& curves() const { return curves_; }
  const CurveRef& curve() const { return curves_.front(); }
  const CurveRef& mu() const { return curves_.at(0); }
  const CurveRef& alpha() const { return curves_.at(1); }
  bool has_orientation() const { return orientation_.has_value(); }
  Sign sign() const {
    if (!orientation_) throw Error(ErrorCode::OrientationRequired, "slide symbols carry no orientation");
    return *orientation_;
  }

  /// The orientation token, attached to the twist curve or to alpha.
  std::optional<OrientationToken> orientation() const {
    if (!orientation_) return std::nullopt;
    const CurveRef& c = kind_ == GeneratorKind::Twist ? curves_[0] : curves_[1];
    return OrientationToken{c.unarrowed(), *orientation_};
  }

  auto operator<=>(const GeneratorSymbol&) const = default;

 private:
  GeneratorSymbol(GeneratorKind k, std::vector<CurveRef> c, std::optional<Sign> o)
      : kind_(k), curves_(std::move(c)), orientation_(o) {}

  static void check_pair(CurveRef& mu, CurveRef& alpha) {
    if (mu.sidedness != Sidedness::OneSided) {
      throw Error(ErrorCode::ValidationError, "first curve '" + mu.name + "' must be one-sided");
    }
    mu.arrow.reset();
    if (alpha.sidedness != Sidedness::TwoSided || !alpha.arrow) {
      throw Error(ErrorCode::ValidationError,
                  "second curve '" + alpha.name + "' must be two-sided with an arrow");
    }
  }

  GeneratorKind kind_;
  std::vector<CurveRef> curves_;
  std::optional<Sign> orientation_;
};

struct Letter {
  GeneratorSymbol symbol;
  int exponent = 1;  // +1 or -1

  Letter inverse() const { return {symbol, -exponent}; }
  bool cancels(const Letter& other) const {
    return exponent == -other.exponent && symbol == other.symbol;
  }

  auto operator<=>(const Letter&) const = default;
};

inline Letter letter(GeneratorSymbol s, int exponent = 1) {
  if (exponent != 1 && exponent != -1) {
    throw Error(ErrorCode::ValidationError, "letter exponent must be +1 or -1");
  }
  return {std::move(s), exponent};
}

using Spelling = std::vector<Letter>;

/// Freely reduced word. The empty word is the identity.
class Word {
 public:
  Word() = default;

  /// Unique freely reduced form of a letter sequence (stack cancellation).
  static Word reduce(std::span<const Letter> raw) {
    Word w;
    w.letters_.reserve(raw.size());
    for (const auto& l : raw) {
      if (!w.letters_.empty() && w.letters_.back().cancels(l)) {
        w.letters_.pop_back();
      } else {
        w.letters_.push_back(l);
      }
    }
    return w;
  }
  static Word reduce(std::initializer_list<Letter> raw) {
    return reduce(std::span<const Letter>(raw.begin(), raw.size()));
  }

  const Spelling& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  bool operator==(const Word&) const = default;
  auto operator<=>(const Word&) const = default;

 private:
  Spelling letters_;
};

inline Word reduce(std::span<const Letter> raw) { return Word::reduce(raw); }

inline Word concat(const Word& u, const Word& v) {
  Spelling s(u.begin(), u.end());
  s.insert(s.end(), v.begin(), v.end());
  return Word::reduce(s);
}

inline Word invert(const Word& w) {
  Spelling s;
  s.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) s.push_back(it->inverse());
  return Word::reduce(s);
}

/// f w f^-1
inline Word conjugate(const Word& f, const Word& w) { return concat(concat(f, w), invert(f)); }

inline Word power(const Word& w, int n) {
  Word base = n < 0 ? invert(w) : w;
  Word out;
  for (int i = 0; i < std::abs(n); ++i) out = concat(out, base);
  return out;
}

using SubstitutionMap = std::map<GeneratorSymbol, Word>;

inline std::string render(const GeneratorSymbol& s);

/// Applies the homomorphism defined by `images` on generators.
inline Word substitute(const Word& w, const SubstitutionMap& images) {
  Spelling out;
  for (const auto& l : w) {
    auto it = images.find(l.symbol);
    if (it == images.end()) throw Error(ErrorCode::MissingImage, render(l.symbol));
    const Word& img = l.exponent > 0 ? it->second : invert(it->second);
    out.insert(out.end(), img.begin(), img.end());
  }
  return Word::reduce(out);
}

// ---------------------------------------------------------------------------
// Canonical text form: `T(beta,+) T(alpha,+) Y(mu,alpha)^-1`, with `1` for the
// empty word and `alpha^-1` for a reversed arrow.

inline std::string render(const CurveRef& c) {
  return c.arrow == Arrow::Reversed ? c.name + "^-1" : c.name;
}

inline std::string render(const OrientationToken& t) { return t.curve.name + ":" + sign_char(t.sign); }

inline std::string render(const GeneratorSymbol& s) {
  switch (s.kind()) {
    case GeneratorKind::Twist:
      return "T(" + s.curve().name + "," + sign_char(s.sign()) + ")";
    case GeneratorKind::Slide:
      return "Y(" + s.mu().name + "," + render(s.alpha()) + ")";
    case GeneratorKind::Transposition:
      return "U(" + s.mu().name + "," + render(s.alpha()) + "," + sign_char(s.sign()) + ")";
  }
  return {};
}

inline std::string render(const Letter& l) {
  return l.exponent < 0 ? render(l.symbol) + "^-1" : render(l.symbol);
}

inline std::string render(std::span<const Letter> letters) {
  if (letters.empty()) return "1";
  std::string out;
  for (const auto& l : letters) {
    if (!out.empty()) out += ' ';
    out += render(l);
  }
  return out;
}

inline std::string render(const Word& w) { return render(std::span<const Letter>(w.letters())); }

inline bool is_identifier_start(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
}
inline bool is_identifier_char(char c) { return is_identifier_start(c) || (c >= '0' && c <= '9'); }

/// Cursor over one line of text with 1-based column reporting.
class TextCursor {
 public:
  TextCursor(std::string_view text, std::size_t line = 1, std::size_t first_column = 1)
      : text_(text), line_(line), col0_(first_column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return col0_ + pos_; }
  std::size_t pos() const { return pos_; }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  std::string_view rest() const { return text_.substr(std::min(pos_, text_.size())); }

  void skip_space() {
    while (!at_end() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r')) ++pos_;
  }
  bool consume(std::string_view s) {
    if (text_.substr(pos_, s.size()) == s) {
      pos_ += s.size();
      return true;
    }
    return false;
  }
  void expect(std::string_view s) {
    if (!consume(s)) fail("'" + std::string(s) + "'");
  }
  std::string identifier(const char* what = "identifier") {
    if (at_end() || !is_identifier_start(text_[pos_])) fail(what);
    std::size_t start = pos_;
    while (!at_end() && is_identifier_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }
  [[noreturn]] void fail(const std::string& expected) const {
    throw ParseError(line_, column(), expected);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_;
  std::size_t col0_;
};

inline Sign parse_sign(TextCursor& cur) {
  if (cur.consume("+")) return Sign::Plus;
  if (cur.consume("-")) return Sign::Minus;
  cur.fail("orientation '+' or '-'");
}

inline CurveRef parse_arrowed_curve(TextCursor& cur) {
  CurveRef c = CurveRef::arrowed(cur.identifier("curve name"));
  if (cur.consume("^-1")) c.arrow = Arrow::Reversed;
  return c;
}

inline GeneratorSymbol parse_symbol(TextCursor& cur) {
  std::size_t col = cur.column();
  {
    if (cur.consume("T(")) {
      std::string c = cur.identifier("curve name");
      cur.expect(",");
      Sign s = parse_sign(cur);
      cur.expect(")");
      return GeneratorSymbol::twist(std::move(c), s);
    }
    if (cur.consume("Y(")) {
      CurveRef mu = CurveRef::one_sided(cur.identifier("curve name"));
      cur.expect(",");
      CurveRef alpha = parse_arrowed_curve(cur);
      cur.expect(")");
      return GeneratorSymbol::slide(std::move(mu), std::move(alpha));
    }
    if (cur.consume("U(")) {
      CurveRef mu = CurveRef::one_sided(cur.identifier("curve name"));
      cur.expect(",");
      CurveRef alpha = parse_arrowed_curve(cur);
      cur.expect(",");
      Sign s = parse_sign(cur);
      cur.expect(")");
      return GeneratorSymbol::transposition(std::move(mu), std::move(alpha), s);
    }
  }
  throw ParseError(cur.line(), col, "generator 'T(', 'Y(' or 'U('");
}

inline Letter parse_letter(TextCursor& cur) {
  GeneratorSymbol s = parse_symbol(cur);
  int e = cur.consume("^-1") ? -1 : 1;
  return {std::move(s), e};
}

/// Parses letters until end of input or until a token that is not a letter.
/// `1` denotes the empty word and may only stand alone.
inline Spelling parse_letters(TextCursor& cur) {
  Spelling out;
  cur.skip_space();
  if (cur.peek() == '1') {
    cur.consume("1");
    return out;
  }
  while (true) {
    cur.skip_space();
    char c = cur.peek();
    if (c != 'T' && c != 'Y' && c != 'U') break;
    if (cur.rest().size() < 2 || cur.rest()[1] != '(') break;
    out.push_back(parse_letter(cur));
  }
  if (out.empty()) cur.fail("word");
  return out;
}

inline Spelling parse_spelling(std::string_view text) {
  TextCursor cur(text);
  Spelling s = parse_letters(cur);
  cur.skip_space();
  if (!cur.at_end()) cur.fail("end of word");
  return s;
}

inline Word parse_word(std::string_view text) { return Word::reduce(parse_spelling(text)); }

inline GeneratorSymbol parse_symbol(std::string_view text) {
  TextCursor cur(text);
  GeneratorSymbol s = parse_symbol(cur);
  if (!cur.at_end()) cur.fail("end of symbol");
  return s;
}

}  // namespace mcgcheck
