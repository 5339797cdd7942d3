#pragma once

// Line-oriented documents: catalogs (.cat), presentations (.pres),
// derivations (.deriv) and morphisms (.morph).
//
// One statement per line, `#` starts a comment. Comment and blank lines are
// kept so that render(parse(text)) reproduces a canonical document exactly.

#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mcgcheck/error.hpp"
#include "mcgcheck/word.hpp"

namespace mcgcheck::dsl {

enum class DocumentKind { Catalog, Derivation, Morphism, Presentation };

inline const char* to_string(DocumentKind k) {
  switch (k) {
    case DocumentKind::Catalog: return "catalog";
    case DocumentKind::Derivation: return "derivation";
    case DocumentKind::Morphism: return "morphism";
    case DocumentKind::Presentation: return "presentation";
  }
  return "?";
}

struct SourceSpan {
  std::size_t line = 0;
  std::size_t column = 1;
};

// ---- shared -----------------------------------------------------------------

struct Comment { std::string text; };  // full line, including the leading '#'
struct Blank {};

// ---- catalog ----------------------------------------------------------------

struct CatalogName { std::string name; };
struct SurfaceStmt { int genus = 1; int boundary = 0; };
struct CurveStmt { std::string name; Sidedness sidedness; std::string source; };
struct SlideStmt { std::string mu; CurveRef alpha; bool fixed = false; std::string source; };
struct BoundStmt { std::string curve; bool mobius = false; std::string source; };
struct IntersectStmt { std::string first, second; int number = 0; std::string source; };
struct CompatibleStmt { OrientationToken first, second; std::string source; };
struct ChainStmt {
  std::string id;
  std::vector<OrientationToken> chain, boundary;
  std::string source;
};
struct LanternStmt {
  std::string id;
  std::vector<OrientationToken> left, right;  // 3 and 4 tokens
  std::string source;
};
struct DeltaStmt { std::string mu; CurveRef alpha; OrientationToken delta; std::string source; };
struct ActorStmt { std::string id; Spelling word; std::string source; };
struct MapsStmt {
  std::string actor;
  CurveRef curve, image;  // arrow set only when written with one
  std::optional<bool> flips;
  std::string source;
};

// ---- derivation -------------------------------------------------------------

struct DeriveHeader { std::string name; Spelling source, target; std::string context; };
struct CiteStmt { std::string text; };
enum class Direction { LhsToRhs, RhsToLhs };
struct ApplyStmt { std::string relation; Direction direction; std::size_t at = 0; std::string note; };
struct InsertStmt { Letter pair; std::size_t at = 0; std::string note; };
struct RegroupStmt { std::string note; };

// ---- morphism ---------------------------------------------------------------

struct MorphismHeader { std::string name, source, target; };
struct NoteStmt { std::string text; };
struct IdentityStmt {};
struct MapStmt { GeneratorSymbol symbol; Spelling image; };
struct SearchBounds {
  std::size_t max_steps = 1;
  std::size_t max_word_length = 32;
  std::size_t max_states = 10000;
};
struct EvidenceStmt {
  std::string relation;
  std::optional<std::string> certificate;  // path, relative to the document
  std::optional<SearchBounds> search;
};
struct RoundtripStmt { GeneratorSymbol generator; Spelling word; std::string certificate; };

// ---- presentation -----------------------------------------------------------

struct PresentationHeader { std::string name; };
struct GeneratorStmt { GeneratorSymbol symbol; };
struct FromStmt { std::string context; };
struct RelStmt {
  std::string id;
  Spelling lhs, rhs;
  std::string schema, provenance;  // optional bracket
};

using Statement =
    std::variant<Comment, Blank, CatalogName, SurfaceStmt, CurveStmt, SlideStmt, BoundStmt,
                 IntersectStmt, CompatibleStmt, ChainStmt, LanternStmt, DeltaStmt, ActorStmt,
                 MapsStmt, DeriveHeader, CiteStmt, ApplyStmt, InsertStmt, RegroupStmt,
                 MorphismHeader, NoteStmt, IdentityStmt, MapStmt, EvidenceStmt, RoundtripStmt,
                 PresentationHeader, GeneratorStmt, FromStmt, RelStmt>;

struct Located {
  Statement statement;
  SourceSpan span;
  std::string trailing_comment;  // "# ..." after the statement, if any
};

struct Document {
  DocumentKind kind = DocumentKind::Catalog;
  std::vector<Located> statements;

  template <class T>
  std::vector<std::pair<const T*, SourceSpan>> all() const {
    std::vector<std::pair<const T*, SourceSpan>> out;
    for (const auto& s : statements) {
      if (const T* p = std::get_if<T>(&s.statement)) out.emplace_back(p, s.span);
    }
    return out;
  }
};

namespace detail {

inline void expect_space(TextCursor& cur) {
  if (cur.peek() != ' ' && cur.peek() != '\t') cur.fail("space");
  cur.skip_space();
}

inline std::string token(TextCursor& cur, const char* what) {
  cur.skip_space();
  std::size_t start_col = cur.column();
  std::string out;
  while (!cur.at_end() && cur.peek() != ' ' && cur.peek() != '\t') {
    out += cur.peek();
    cur.consume(std::string_view(&out.back(), 1));
  }
  if (out.empty()) throw ParseError(cur.line(), start_col, what);
  return out;
}

inline std::size_t integer(TextCursor& cur, const char* what = "integer") {
  if (cur.peek() < '0' || cur.peek() > '9') cur.fail(what);
  std::size_t v = 0;
  while (cur.peek() >= '0' && cur.peek() <= '9') {
    v = v * 10 + static_cast<std::size_t>(cur.peek() - '0');
    cur.consume(std::string_view(cur.rest().data(), 1));
  }
  return v;
}

inline std::string quoted(TextCursor& cur) {
  cur.expect("\"");
  std::string out;
  while (true) {
    if (cur.at_end()) cur.fail("closing '\"'");
    char c = cur.peek();
    cur.consume(std::string_view(cur.rest().data(), 1));
    if (c == '"') break;
    if (c == '\\') {
      if (cur.at_end()) cur.fail("escaped character");
      c = cur.peek();
      cur.consume(std::string_view(cur.rest().data(), 1));
    }
    out += c;
  }
  return out;
}

inline std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

// Relation ids: letters, digits and . _ + - ^
inline bool is_id_char(char c) {
  return is_identifier_char(c) || c == '.' || c == '+' || c == '-' || c == '^';
}

inline std::string relation_id(TextCursor& cur) {
  std::string out;
  while (!cur.at_end() && is_id_char(cur.peek())) {
    out += cur.peek();
    cur.consume(std::string_view(cur.rest().data(), 1));
  }
  if (out.empty()) cur.fail("relation id");
  return out;
}

inline OrientationToken oriented(TextCursor& cur) {
  std::string name = cur.identifier("curve name");
  cur.expect(":");
  Sign s = parse_sign(cur);
  return {CurveRef::two_sided(std::move(name)), s};
}

inline CurveRef maybe_arrowed(TextCursor& cur) {
  CurveRef c{cur.identifier("curve name"), Sidedness::TwoSided, std::nullopt};
  if (cur.consume("^-1")) c.arrow = Arrow::Reversed;
  return c;
}

inline bool keyword(TextCursor& cur, std::string_view kw) {
  auto rest = cur.rest();
  if (rest.substr(0, kw.size()) != kw) return false;
  if (rest.size() > kw.size() && rest[kw.size()] != ' ' && rest[kw.size()] != '\t') return false;
  cur.consume(kw);
  return true;
}

inline std::string optional_source(TextCursor& cur) {
  cur.skip_space();
  if (cur.at_end()) return {};
  if (!keyword(cur, "source")) cur.fail("'source' or end of line");
  cur.skip_space();
  return quoted(cur);
}

inline std::string optional_note(TextCursor& cur) {
  cur.skip_space();
  if (cur.at_end()) return {};
  cur.expect("note=");
  return quoted(cur);
}

inline void end_of_line(TextCursor& cur) {
  cur.skip_space();
  if (!cur.at_end()) cur.fail("end of line");
}

inline Spelling word_until(TextCursor& cur) {
  cur.skip_space();
  return parse_letters(cur);
}

inline Statement parse_catalog_line(TextCursor& cur) {
  if (keyword(cur, "catalog")) {
    expect_space(cur);
    CatalogName s{token(cur, "catalog name")};
    end_of_line(cur);
    return s;
  }
  if (keyword(cur, "surface")) {
    expect_space(cur);
    cur.expect("N(");
    SurfaceStmt s;
    s.genus = static_cast<int>(integer(cur, "genus"));
    cur.expect(",");
    s.boundary = static_cast<int>(integer(cur, "boundary count"));
    cur.expect(")");
    end_of_line(cur);
    return s;
  }
  if (keyword(cur, "curve")) {
    expect_space(cur);
    CurveStmt s;
    s.name = cur.identifier("curve name");
    expect_space(cur);
    if (cur.consume("one-sided")) s.sidedness = Sidedness::OneSided;
    else if (cur.consume("two-sided")) s.sidedness = Sidedness::TwoSided;
    else cur.fail("'one-sided' or 'two-sided'");
    s.source = optional_source(cur);
    return s;
  }
  bool fixed = false;
  if (keyword(cur, "slide") || (fixed = keyword(cur, "fixed-slide"))) {
    expect_space(cur);
    SlideStmt s;
    s.fixed = fixed;
    s.mu = cur.identifier("curve name");
    expect_space(cur);
    s.alpha = parse_arrowed_curve(cur);
    s.source = optional_source(cur);
    return s;
  }
  if (keyword(cur, "bound")) {
    expect_space(cur);
    BoundStmt s;
    s.curve = cur.identifier("curve name");
    expect_space(cur);
    if (cur.consume("mobius")) s.mobius = true;
    else if (!cur.consume("disk")) cur.fail("'disk' or 'mobius'");
    s.source = optional_source(cur);
    return s;
  }
  if (keyword(cur, "intersect")) {
    expect_space(cur);
    IntersectStmt s;
    s.first = cur.identifier("curve name");
    expect_space(cur);
    s.second = cur.identifier("curve name");
    expect_space(cur);
    s.number = static_cast<int>(integer(cur, "intersection number"));
    s.source = optional_source(cur);
    return s;
  }
  if (keyword(cur, "compatible")) {
    expect_space(cur);
    CompatibleStmt s;
    s.first = oriented(cur);
    expect_space(cur);
    s.second = oriented(cur);
    s.source = optional_source(cur);
    return s;
  }
  if (keyword(cur, "chain")) {
    expect_space(cur);
    ChainStmt s;
    s.id = cur.identifier("chain id");
    cur.skip_space();
    cur.expect(":");
    cur.skip_space();
    while (is_identifier_start(cur.peek())) {
      s.chain.push_back(oriented(cur));
      cur.skip_space();
    }
    if (s.chain.empty()) cur.fail("oriented curve");
    cur.expect("->");
    cur.skip_space();
    while (is_identifier_start(cur.peek()) && cur.rest().substr(0, 7) != "source ") {
      s.boundary.push_back(oriented(cur));
      cur.skip_space();
    }
    if (s.boundary.empty()) cur.fail("boundary curve");
    s.source = optional_source(cur);
    return s;
  }
  if (keyword(cur, "lantern")) {
    expect_space(cur);
    LanternStmt s;
    s.id = cur.identifier("lantern id");
    cur.skip_space();
    cur.expect(":");
    for (int i = 0; i < 3; ++i) {
      cur.skip_space();
      s.left.push_back(oriented(cur));
    }
    cur.skip_space();
    cur.expect("=");
    for (int i = 0; i < 4; ++i) {
      cur.skip_space();
      s.right.push_back(oriented(cur));
    }
    s.source = optional_source(cur);
    return s;
  }
  if (keyword(cur, "delta")) {
    expect_space(cur);
    DeltaStmt s;
    s.mu = cur.identifier("curve name");
    expect_space(cur);
    s.alpha = parse_arrowed_curve(cur);
    cur.skip_space();
    cur.expect("->");
    cur.skip_space();
    s.delta = oriented(cur);
    s.source = optional_source(cur);
    return s;
  }
  if (keyword(cur, "actor")) {
    expect_space(cur);
    ActorStmt s;
    s.id = cur.identifier("actor id");
    cur.skip_space();
    cur.expect("=");
    s.word = word_until(cur);
    s.source = optional_source(cur);
    return s;
  }
  if (keyword(cur, "maps")) {
    expect_space(cur);
    MapsStmt s;
    s.actor = cur.identifier("actor id");
    expect_space(cur);
    s.curve = maybe_arrowed(cur);
    cur.skip_space();
    cur.expect("->");
    cur.skip_space();
    s.image = maybe_arrowed(cur);
    cur.skip_space();
    if (keyword(cur, "keep")) s.flips = false;
    else if (keyword(cur, "flip")) s.flips = true;
    s.source = optional_source(cur);
    return s;
  }
  cur.fail("catalog statement");
}

inline Statement parse_derivation_line(TextCursor& cur) {
  if (keyword(cur, "derive")) {
    expect_space(cur);
    DeriveHeader h;
    h.name = cur.identifier("certificate name");
    cur.skip_space();
    cur.expect(":");
    h.source = word_until(cur);
    cur.skip_space();
    cur.expect("=>");
    h.target = word_until(cur);
    cur.skip_space();
    if (!keyword(cur, "in")) cur.fail("'in'");
    h.context = token(cur, "context");
    end_of_line(cur);
    return h;
  }
  if (keyword(cur, "cite")) {
    expect_space(cur);
    CiteStmt s{quoted(cur)};
    end_of_line(cur);
    return s;
  }
  if (keyword(cur, "apply")) {
    expect_space(cur);
    ApplyStmt s;
    cur.expect("rel=");
    s.relation = relation_id(cur);
    expect_space(cur);
    cur.expect("dir=");
    if (cur.consume("fwd")) s.direction = Direction::LhsToRhs;
    else if (cur.consume("bwd")) s.direction = Direction::RhsToLhs;
    else cur.fail("'fwd' or 'bwd'");
    expect_space(cur);
    cur.expect("at=");
    s.at = integer(cur, "letter position");
    s.note = optional_note(cur);
    return s;
  }
  if (keyword(cur, "insert")) {
    expect_space(cur);
    InsertStmt s{parse_letter(cur), 0, {}};
    expect_space(cur);
    cur.expect("at=");
    s.at = integer(cur, "letter position");
    s.note = optional_note(cur);
    return s;
  }
  if (keyword(cur, "regroup") || cur.rest() == "regroup") {
    if (cur.rest() == "regroup") cur.consume("regroup");
    RegroupStmt s{optional_note(cur)};
    return s;
  }
  cur.fail("derivation statement");
}

inline SearchBounds parse_bounds(TextCursor& cur) {
  SearchBounds b;
  while (true) {
    cur.skip_space();
    if (cur.at_end()) break;
    if (cur.consume("steps=")) b.max_steps = integer(cur);
    else if (cur.consume("length=")) b.max_word_length = integer(cur);
    else if (cur.consume("states=")) b.max_states = integer(cur);
    else cur.fail("'steps=', 'length=' or 'states='");
  }
  return b;
}

inline Statement parse_morphism_line(TextCursor& cur) {
  if (keyword(cur, "morphism")) {
    expect_space(cur);
    MorphismHeader h;
    h.name = cur.identifier("morphism name");
    cur.skip_space();
    cur.expect(":");
    h.source = token(cur, "source presentation");
    cur.skip_space();
    cur.expect("->");
    h.target = token(cur, "target presentation");
    end_of_line(cur);
    return h;
  }
  if (keyword(cur, "note")) {
    expect_space(cur);
    NoteStmt s{quoted(cur)};
    end_of_line(cur);
    return s;
  }
  if (cur.rest() == "identity") {
    cur.consume("identity");
    return IdentityStmt{};
  }
  if (keyword(cur, "map")) {
    expect_space(cur);
    GeneratorSymbol sym = parse_symbol(cur);
    cur.skip_space();
    cur.expect("=>");
    Spelling img = word_until(cur);
    end_of_line(cur);
    return MapStmt{std::move(sym), std::move(img)};
  }
  if (keyword(cur, "evidence")) {
    expect_space(cur);
    EvidenceStmt s;
    cur.expect("rel=");
    s.relation = relation_id(cur);
    expect_space(cur);
    if (cur.consume("cert=")) {
      s.certificate = token(cur, "certificate path");
      end_of_line(cur);
    } else if (keyword(cur, "search")) {
      s.search = parse_bounds(cur);
    } else {
      cur.fail("'cert=' or 'search'");
    }
    return s;
  }
  if (keyword(cur, "roundtrip")) {
    expect_space(cur);
    GeneratorSymbol sym = parse_symbol(cur);
    cur.skip_space();
    cur.expect("=");
    Spelling w = word_until(cur);
    cur.skip_space();
    cur.expect("cert=");
    std::string path = token(cur, "certificate path");
    end_of_line(cur);
    return RoundtripStmt{std::move(sym), std::move(w), std::move(path)};
  }
  cur.fail("morphism statement");
}

inline Statement parse_presentation_line(TextCursor& cur) {
  if (keyword(cur, "presentation")) {
    expect_space(cur);
    PresentationHeader h{cur.identifier("presentation name")};
    end_of_line(cur);
    return h;
  }
  if (keyword(cur, "generator")) {
    expect_space(cur);
    GeneratorStmt s{parse_symbol(cur)};
    end_of_line(cur);
    return s;
  }
  if (keyword(cur, "from")) {
    expect_space(cur);
    FromStmt s{token(cur, "context")};
    end_of_line(cur);
    return s;
  }
  if (keyword(cur, "rel")) {
    expect_space(cur);
    RelStmt s;
    s.id = relation_id(cur);
    cur.skip_space();
    cur.expect(":");
    s.lhs = word_until(cur);
    cur.skip_space();
    cur.expect("=");
    s.rhs = word_until(cur);
    cur.skip_space();
    if (cur.consume("[")) {
      std::string inside;
      while (!cur.at_end() && cur.peek() != ']') {
        inside += cur.peek();
        cur.consume(std::string_view(cur.rest().data(), 1));
      }
      cur.expect("]");
      auto comma = inside.find(", ");
      s.schema = inside.substr(0, comma);
      if (comma != std::string::npos) s.provenance = inside.substr(comma + 2);
    }
    end_of_line(cur);
    return s;
  }
  cur.fail("presentation statement");
}

// Splits off a trailing `# comment` that is not inside a quoted string.
inline std::size_t comment_start(std::string_view line) {
  bool in_quotes = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (in_quotes && c == '\\') {
      ++i;
    } else if (c == '"') {
      in_quotes = !in_quotes;
    } else if (c == '#' && !in_quotes) {
      return i;
    }
  }
  return std::string_view::npos;
}

}  // namespace detail

/// Parses a whole document of the given kind. Throws ParseError with a 1-based
/// line and column.
inline Document parse(std::string_view text, DocumentKind kind) {
  Document doc;
  doc.kind = kind;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) {
      if (pos == text.size()) break;
      nl = text.size();
    }
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    std::size_t lead = line.find_first_not_of(" \t");
    if (lead == std::string_view::npos) {
      doc.statements.push_back({Blank{}, {line_no, 1}, {}});
      continue;
    }
    if (line[lead] == '#') {
      doc.statements.push_back({Comment{std::string(line.substr(lead))}, {line_no, lead + 1}, {}});
      continue;
    }
    std::string trailing;
    std::size_t hash = detail::comment_start(line);
    std::string_view body = line;
    if (hash != std::string_view::npos) {
      trailing = std::string(line.substr(hash));
      body = line.substr(0, hash);
    }
    while (!body.empty() && (body.back() == ' ' || body.back() == '\t')) body.remove_suffix(1);
    TextCursor cur(body.substr(lead), line_no, lead + 1);
    Statement st;
    switch (kind) {
      case DocumentKind::Catalog: st = detail::parse_catalog_line(cur); break;
      case DocumentKind::Derivation: st = detail::parse_derivation_line(cur); break;
      case DocumentKind::Morphism: st = detail::parse_morphism_line(cur); break;
      case DocumentKind::Presentation: st = detail::parse_presentation_line(cur); break;
    }
    doc.statements.push_back({std::move(st), {line_no, lead + 1}, std::move(trailing)});
  }
  return doc;
}

// ---- rendering ----------------------------------------------------------------

namespace detail {

inline std::string with_source(std::string s, const std::string& source) {
  if (!source.empty()) s += " source " + quote(source);
  return s;
}
inline std::string with_note(std::string s, const std::string& note) {
  if (!note.empty()) s += " note=" + quote(note);
  return s;
}

struct StatementRenderer {
  std::string operator()(const Comment& c) const { return c.text; }
  std::string operator()(const Blank&) const { return {}; }
  std::string operator()(const CatalogName& s) const { return "catalog " + s.name; }
  std::string operator()(const SurfaceStmt& s) const {
    return "surface N(" + std::to_string(s.genus) + "," + std::to_string(s.boundary) + ")";
  }
  std::string operator()(const CurveStmt& s) const {
    return with_source("curve " + s.name +
                           (s.sidedness == Sidedness::OneSided ? " one-sided" : " two-sided"),
                       s.source);
  }
  std::string operator()(const SlideStmt& s) const {
    return with_source(std::string(s.fixed ? "fixed-slide " : "slide ") + s.mu + " " + render(s.alpha),
                       s.source);
  }
  std::string operator()(const BoundStmt& s) const {
    return with_source("bound " + s.curve + (s.mobius ? " mobius" : " disk"), s.source);
  }
  std::string operator()(const IntersectStmt& s) const {
    return with_source("intersect " + s.first + " " + s.second + " " + std::to_string(s.number),
                       s.source);
  }
  std::string operator()(const CompatibleStmt& s) const {
    return with_source("compatible " + render(s.first) + " " + render(s.second), s.source);
  }
  std::string operator()(const ChainStmt& s) const {
    std::string out = "chain " + s.id + " :";
    for (const auto& t : s.chain) out += " " + render(t);
    out += " ->";
    for (const auto& t : s.boundary) out += " " + render(t);
    return with_source(out, s.source);
  }
  std::string operator()(const LanternStmt& s) const {
    std::string out = "lantern " + s.id + " :";
    for (const auto& t : s.left) out += " " + render(t);
    out += " =";
    for (const auto& t : s.right) out += " " + render(t);
    return with_source(out, s.source);
  }
  std::string operator()(const DeltaStmt& s) const {
    return with_source("delta " + s.mu + " " + render(s.alpha) + " -> " + render(s.delta), s.source);
  }
  std::string operator()(const ActorStmt& s) const {
    return with_source("actor " + s.id + " = " + render(std::span<const Letter>(s.word)), s.source);
  }
  std::string operator()(const MapsStmt& s) const {
    std::string out = "maps " + s.actor + " " + render(s.curve) + " -> " + render(s.image);
    if (s.flips) out += *s.flips ? " flip" : " keep";
    return with_source(out, s.source);
  }
  std::string operator()(const DeriveHeader& h) const {
    return "derive " + h.name + " : " + render(std::span<const Letter>(h.source)) + " => " +
           render(std::span<const Letter>(h.target)) + " in " + h.context;
  }
  std::string operator()(const CiteStmt& s) const { return "cite " + quote(s.text); }
  std::string operator()(const ApplyStmt& s) const {
    return with_note("apply rel=" + s.relation +
                         (s.direction == Direction::LhsToRhs ? " dir=fwd" : " dir=bwd") +
                         " at=" + std::to_string(s.at),
                     s.note);
  }
  std::string operator()(const InsertStmt& s) const {
    return with_note("insert " + render(s.pair) + " at=" + std::to_string(s.at), s.note);
  }
  std::string operator()(const RegroupStmt& s) const { return with_note("regroup", s.note); }
  std::string operator()(const MorphismHeader& h) const {
    return "morphism " + h.name + " : " + h.source + " -> " + h.target;
  }
  std::string operator()(const NoteStmt& s) const { return "note " + quote(s.text); }
  std::string operator()(const IdentityStmt&) const { return "identity"; }
  std::string operator()(const MapStmt& s) const {
    return "map " + render(s.symbol) + " => " + render(std::span<const Letter>(s.image));
  }
  std::string operator()(const EvidenceStmt& s) const {
    std::string out = "evidence rel=" + s.relation;
    if (s.certificate) return out + " cert=" + *s.certificate;
    const SearchBounds& b = *s.search;
    return out + " search steps=" + std::to_string(b.max_steps) +
           " length=" + std::to_string(b.max_word_length) +
           " states=" + std::to_string(b.max_states);
  }
  std::string operator()(const RoundtripStmt& s) const {
    return "roundtrip " + render(s.generator) + " = " + render(std::span<const Letter>(s.word)) +
           " cert=" + s.certificate;
  }
  std::string operator()(const PresentationHeader& h) const { return "presentation " + h.name; }
  std::string operator()(const GeneratorStmt& s) const { return "generator " + render(s.symbol); }
  std::string operator()(const FromStmt& s) const { return "from " + s.context; }
  std::string operator()(const RelStmt& s) const {
    std::string out = "rel " + s.id + " : " + render(std::span<const Letter>(s.lhs)) + " = " +
                      render(std::span<const Letter>(s.rhs));
    if (!s.schema.empty()) {
      out += " [" + s.schema;
      if (!s.provenance.empty()) out += ", " + s.provenance;
      out += "]";
    }
    return out;
  }
};

}  // namespace detail

inline std::string render(const Statement& s) { return std::visit(detail::StatementRenderer{}, s); }

inline std::string render(const Document& doc) {
  std::string out;
  for (const auto& s : doc.statements) {
    std::string line = render(s.statement);
    if (!s.trailing_comment.empty()) line += (line.empty() ? "" : " ") + s.trailing_comment;
    out += line + "\n";
  }
  return out;
}

}  // namespace mcgcheck::dsl
