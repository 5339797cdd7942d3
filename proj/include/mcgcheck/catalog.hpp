#pragma once

// Trusted geometric facts about named curves on a surface N(g,n).
//
// Nothing here is checked topologically. A catalog only records what the
// relation schemas need: bounding curves, chains, lanterns, intersection
// numbers, compatible orientations, delta curves and action facts f(c) = c'.

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mcgcheck/dsl.hpp"
#include "mcgcheck/error.hpp"
#include "mcgcheck/word.hpp"

namespace mcgcheck {

enum class BoundingKind { Disk, Mobius };

struct SurfaceSig {
  int genus = 1;
  int boundary_count = 0;
  bool operator==(const SurfaceSig&) const = default;
};

struct CurveDecl {
  std::string name;
  Sidedness sidedness;
  std::string source;
  bool operator==(const CurveDecl&) const = default;
};

/// A (mu, alpha) pair for which Y and U symbols exist. `fixed` marks the pair
/// used by the corollary presentation.
struct SlideDecl {
  std::string mu;
  CurveRef alpha;
  bool fixed = false;
  std::string source;
  bool operator==(const SlideDecl&) const = default;
};

struct BoundingFact {
  std::string curve;
  BoundingKind kind;
  std::string source;
  bool operator==(const BoundingFact&) const = default;
};

struct ChainFact {
  std::string id;
  std::vector<OrientationToken> chain;
  std::vector<OrientationToken> boundary;
  std::string source;
  std::size_t k() const { return chain.size(); }
  bool operator==(const ChainFact&) const = default;
};

struct LanternFact {
  std::string id;
  std::array<OrientationToken, 7> d;
  std::string source;
  bool operator==(const LanternFact&) const = default;
};

struct IntersectionFact {
  std::string first, second;
  int number = 0;
  std::string source;
  bool operator==(const IntersectionFact&) const = default;
};

struct CompatibilityFact {
  OrientationToken first, second;
  std::string source;
  bool operator==(const CompatibilityFact&) const = default;
};

struct DeltaFact {
  std::string mu;
  CurveRef alpha;
  OrientationToken delta;
  std::string source;
  bool operator==(const DeltaFact&) const = default;
};

struct Actor {
  std::string id;
  Word word;
  std::string source;
  bool operator==(const Actor&) const = default;
};

/// f(curve) = image. For two-sided curves `flips` says whether f_* sends +_c
/// to -_{f(c)}. Arrows: when the fact is written without arrows, f keeps the
/// arrow of whatever it is applied to.
struct ActionFact {
  std::string actor;
  CurveRef curve;
  CurveRef image;
  std::optional<bool> flips;
  std::string source;
  bool operator==(const ActionFact&) const = default;
};

inline CurveRef reverse_curve(const CurveRef& c) {
  if (c.sidedness != Sidedness::TwoSided || !c.arrow) {
    throw Error(ErrorCode::NotArrowed, "curve '" + c.name + "' has no arrow");
  }
  CurveRef r = c;
  r.arrow = *c.arrow == Arrow::Forward ? Arrow::Reversed : Arrow::Forward;
  return r;
}

class FactBase {
 public:
  std::string name;
  SurfaceSig surface;
  std::vector<CurveDecl> curves;
  std::vector<SlideDecl> slides;
  std::vector<BoundingFact> bounding;
  std::vector<IntersectionFact> intersections;
  std::vector<CompatibilityFact> compatibilities;
  std::vector<ChainFact> chains;
  std::vector<LanternFact> lanterns;
  std::vector<DeltaFact> deltas;
  std::vector<Actor> actors;
  std::vector<ActionFact> actions;

  bool operator==(const FactBase&) const = default;

  bool empty() const {
    return slides.empty() && bounding.empty() && intersections.empty() && chains.empty() &&
           lanterns.empty() && deltas.empty() && actions.empty();
  }

  const CurveDecl* find_curve(const std::string& n) const {
    for (const auto& c : curves) {
      if (c.name == n) return &c;
    }
    return nullptr;
  }

  CurveRef curve(const std::string& n) const {
    const CurveDecl* c = find_curve(n);
    if (!c) throw Error(ErrorCode::ValidationError, "unknown curve '" + n + "'");
    return {c->name, c->sidedness, std::nullopt};
  }

  const Actor* find_actor(const std::string& id) const {
    for (const auto& a : actors) {
      if (a.id == id) return &a;
    }
    return nullptr;
  }

  const Actor* find_actor(const Word& w) const {
    for (const auto& a : actors) {
      if (a.word == w) return &a;
    }
    return nullptr;
  }

  std::optional<int> intersection(const std::string& a, const std::string& b) const {
    for (const auto& f : intersections) {
      if ((f.first == a && f.second == b) || (f.first == b && f.second == a)) return f.number;
    }
    return std::nullopt;
  }

  bool compatible(const OrientationToken& a, const OrientationToken& b) const {
    for (const auto& f : compatibilities) {
      if ((f.first == a && f.second == b) || (f.first == b && f.second == a)) return true;
      // compatibility survives flipping both orientations
      if ((f.first == flip(a) && f.second == flip(b)) || (f.first == flip(b) && f.second == flip(a)))
        return true;
    }
    return false;
  }

  const DeltaFact* delta(const std::string& mu, const CurveRef& alpha) const {
    for (const auto& d : deltas) {
      if (d.mu == mu && d.alpha.name == alpha.name && d.alpha.arrow == alpha.arrow) return &d;
    }
    return nullptr;
  }

  const BoundingFact* bounding_fact(const std::string& c) const {
    for (const auto& b : bounding) {
      if (b.curve == c) return &b;
    }
    return nullptr;
  }

  /// Image of a curve under an actor, with arrows handled as described on
  /// ActionFact. Nullopt when no fact is declared.
  std::optional<CurveRef> image(const std::string& actor, const CurveRef& c) const {
    const ActionFact* f = action(actor, c.name);
    if (!f) return std::nullopt;
    CurveRef img = f->image;
    if (img.sidedness == Sidedness::OneSided) return img;
    if (!f->curve.arrow) {
      img.arrow = c.arrow;
    } else if (!c.arrow) {
      img.arrow.reset();
    } else if (*c.arrow != *f->curve.arrow) {
      img = reverse_curve(img);
    }
    return img;
  }

  std::optional<OrientationToken> transport(const std::string& actor, const OrientationToken& t) const {
    const ActionFact* f = action(actor, t.curve.name);
    if (!f || !f->flips) return std::nullopt;
    return OrientationToken{f->image.unarrowed(), *f->flips ? flip(t.sign) : t.sign};
  }

  const ActionFact* action(const std::string& actor, const std::string& curve) const {
    for (const auto& f : actions) {
      if (f.actor == actor && f.curve.name == curve) return &f;
    }
    return nullptr;
  }
};

/// f_*(theta) for a declared actor word. The empty word acts trivially.
inline OrientationToken transport_orientation(const FactBase& facts, const Word& actor,
                                              const OrientationToken& theta) {
  if (actor.empty()) return theta;
  const Actor* a = facts.find_actor(actor);
  std::optional<OrientationToken> out;
  if (a) out = facts.transport(a->id, theta);
  if (!out) {
    throw Error(ErrorCode::NoActionFact,
                "no action fact for " + render(actor) + " on " + theta.curve.name);
  }
  return *out;
}

namespace catalog_detail {

[[noreturn]] inline void invalid(const dsl::SourceSpan& at, const std::string& what) {
  throw Error(ErrorCode::ValidationError, "line " + std::to_string(at.line) + ": " + what);
}

inline void check_symbol_curves(const FactBase& fb, const GeneratorSymbol& s, const dsl::SourceSpan& at) {
  for (const auto& c : s.curves()) {
    const CurveDecl* d = fb.find_curve(c.name);
    if (!d) invalid(at, "unknown curve '" + c.name + "'");
    if (d->sidedness != c.sidedness) invalid(at, "curve '" + c.name + "' used with the wrong sidedness");
  }
}

// The parser cannot tell one-sided curves from two-sided ones inside words;
// symbols are rebuilt with the sidedness the catalog declares.
inline Spelling resolve(const FactBase& fb, const Spelling& in, const dsl::SourceSpan& at) {
  Spelling out;
  for (const auto& l : in) {
    const auto& s = l.symbol;
    GeneratorSymbol r = s;
    try {
      if (s.kind() == GeneratorKind::Twist) {
        r = GeneratorSymbol::twist(fb.curve(s.curve().name), s.sign());
      } else {
        CurveRef mu = fb.curve(s.mu().name);
        CurveRef alpha = fb.curve(s.alpha().name);
        alpha.arrow = s.alpha().arrow;
        r = s.kind() == GeneratorKind::Slide ? GeneratorSymbol::slide(mu, alpha)
                                             : GeneratorSymbol::transposition(mu, alpha, s.sign());
      }
    } catch (const Error& e) {
      invalid(at, e.what());
    }
    out.push_back({r, l.exponent});
  }
  return out;
}

inline void check_two_sided(const FactBase& fb, const std::string& n, const dsl::SourceSpan& at) {
  const CurveDecl* d = fb.find_curve(n);
  if (!d) invalid(at, "unknown curve '" + n + "'");
  if (d->sidedness != Sidedness::TwoSided) invalid(at, "curve '" + n + "' must be two-sided");
}

inline void check_one_sided(const FactBase& fb, const std::string& n, const dsl::SourceSpan& at) {
  const CurveDecl* d = fb.find_curve(n);
  if (!d) invalid(at, "unknown curve '" + n + "'");
  if (d->sidedness != Sidedness::OneSided) invalid(at, "curve '" + n + "' must be one-sided");
}

inline void check_tokens(const FactBase& fb, const std::vector<OrientationToken>& ts,
                         const dsl::SourceSpan& at) {
  for (const auto& t : ts) check_two_sided(fb, t.curve.name, at);
}

}  // namespace catalog_detail

/// Builds and validates a FactBase from a parsed catalog document.
inline FactBase load_catalog(const dsl::Document& doc) {
  using namespace dsl;
  if (doc.kind != DocumentKind::Catalog) {
    throw Error(ErrorCode::ValidationError, "not a catalog document");
  }
  FactBase fb;
  bool have_surface = false;
  std::set<std::string> ids;
  auto fresh = [&](const std::string& id, const SourceSpan& at) {
    if (!ids.insert(id).second) catalog_detail::invalid(at, "duplicate id '" + id + "'");
  };

  for (const auto& [st, at] : doc.all<CatalogName>()) fb.name = st->name;
  for (const auto& [st, at] : doc.all<SurfaceStmt>()) {
    if (have_surface) catalog_detail::invalid(at, "second surface declaration");
    if (st->genus < 1) catalog_detail::invalid(at, "genus must be at least 1");
    fb.surface = {st->genus, st->boundary};
    have_surface = true;
  }
  if (!have_surface) throw Error(ErrorCode::ValidationError, "catalog has no surface declaration");

  for (const auto& [st, at] : doc.all<CurveStmt>()) {
    if (fb.find_curve(st->name)) catalog_detail::invalid(at, "curve '" + st->name + "' declared twice");
    fb.curves.push_back({st->name, st->sidedness, st->source});
  }
  for (const auto& [st, at] : doc.all<SlideStmt>()) {
    catalog_detail::check_one_sided(fb, st->mu, at);
    catalog_detail::check_two_sided(fb, st->alpha.name, at);
    fb.slides.push_back({st->mu, st->alpha, st->fixed, st->source});
  }
  for (const auto& [st, at] : doc.all<BoundStmt>()) {
    catalog_detail::check_two_sided(fb, st->curve, at);
    fb.bounding.push_back({st->curve, st->mobius ? BoundingKind::Mobius : BoundingKind::Disk, st->source});
  }
  for (const auto& [st, at] : doc.all<IntersectStmt>()) {
    if (!fb.find_curve(st->first)) catalog_detail::invalid(at, "unknown curve '" + st->first + "'");
    if (!fb.find_curve(st->second)) catalog_detail::invalid(at, "unknown curve '" + st->second + "'");
    if (st->number != 0 && st->number != 1) catalog_detail::invalid(at, "intersection number must be 0 or 1");
    fb.intersections.push_back({st->first, st->second, st->number, st->source});
  }
  for (const auto& [st, at] : doc.all<CompatibleStmt>()) {
    catalog_detail::check_tokens(fb, {st->first, st->second}, at);
    fb.compatibilities.push_back({st->first, st->second, st->source});
  }
  for (const auto& [st, at] : doc.all<ChainStmt>()) {
    fresh("chain." + st->id, at);
    catalog_detail::check_tokens(fb, st->chain, at);
    catalog_detail::check_tokens(fb, st->boundary, at);
    std::size_t want = st->chain.size() % 2 == 1 ? 2 : 1;
    if (st->boundary.size() != want) {
      catalog_detail::invalid(at, "chain '" + st->id + "' of length " + std::to_string(st->chain.size()) +
                              " needs " + std::to_string(want) + " boundary curve(s)");
    }
    fb.chains.push_back({st->id, st->chain, st->boundary, st->source});
  }
  for (const auto& [st, at] : doc.all<LanternStmt>()) {
    fresh("lantern." + st->id, at);
    catalog_detail::check_tokens(fb, st->left, at);
    catalog_detail::check_tokens(fb, st->right, at);
    LanternFact f{st->id, {}, st->source};
    std::copy(st->left.begin(), st->left.end(), f.d.begin());
    std::copy(st->right.begin(), st->right.end(), f.d.begin() + 3);
    fb.lanterns.push_back(std::move(f));
  }
  for (const auto& [st, at] : doc.all<DeltaStmt>()) {
    catalog_detail::check_one_sided(fb, st->mu, at);
    catalog_detail::check_two_sided(fb, st->alpha.name, at);
    catalog_detail::check_two_sided(fb, st->delta.curve.name, at);
    fb.deltas.push_back({st->mu, st->alpha, st->delta, st->source});
  }
  for (const auto& [st, at] : doc.all<ActorStmt>()) {
    fresh("actor." + st->id, at);
    Spelling w = catalog_detail::resolve(fb, st->word, at);
    fb.actors.push_back({st->id, Word::reduce(w), st->source});
  }
  for (const auto& [st, at] : doc.all<MapsStmt>()) {
    if (!fb.find_actor(st->actor)) catalog_detail::invalid(at, "unknown actor '" + st->actor + "'");
    if (fb.action(st->actor, st->curve.name)) {
      catalog_detail::invalid(at, "second action fact for " + st->actor + " on " + st->curve.name);
    }
    CurveRef c = fb.curve(st->curve.name);
    CurveRef img = fb.curve(st->image.name);
    if (c.sidedness != img.sidedness) catalog_detail::invalid(at, "action changes the sidedness of a curve");
    if (c.sidedness == Sidedness::TwoSided) {
      if (!st->flips) catalog_detail::invalid(at, "two-sided action fact needs 'keep' or 'flip'");
      if (st->curve.arrow || st->image.arrow) {
        c.arrow = st->curve.arrow.value_or(Arrow::Forward);
        img.arrow = st->image.arrow.value_or(Arrow::Forward);
      }
    } else {
      if (st->flips) catalog_detail::invalid(at, "one-sided curves carry no orientation");
      if (st->curve.arrow || st->image.arrow) catalog_detail::invalid(at, "one-sided curves carry no arrow");
    }
    fb.actions.push_back({st->actor, c, img, st->flips, st->source});
  }
  return fb;
}

inline FactBase load_catalog(std::string_view text) {
  return load_catalog(dsl::parse(text, dsl::DocumentKind::Catalog));
}

/// Canonical catalog text for a FactBase.
inline std::string render(const FactBase& fb) {
  using namespace dsl;
  Document doc;
  auto add = [&](Statement s) { doc.statements.push_back({std::move(s), {}, {}}); };
  if (!fb.name.empty()) add(CatalogName{fb.name});
  add(SurfaceStmt{fb.surface.genus, fb.surface.boundary_count});
  for (const auto& c : fb.curves) add(CurveStmt{c.name, c.sidedness, c.source});
  for (const auto& s : fb.slides) add(SlideStmt{s.mu, s.alpha, s.fixed, s.source});
  for (const auto& b : fb.bounding) add(BoundStmt{b.curve, b.kind == BoundingKind::Mobius, b.source});
  for (const auto& i : fb.intersections) add(IntersectStmt{i.first, i.second, i.number, i.source});
  for (const auto& c : fb.compatibilities) add(CompatibleStmt{c.first, c.second, c.source});
  for (const auto& c : fb.chains) add(ChainStmt{c.id, c.chain, c.boundary, c.source});
  for (const auto& l : fb.lanterns) {
    add(LanternStmt{l.id, {l.d.begin(), l.d.begin() + 3}, {l.d.begin() + 3, l.d.end()}, l.source});
  }
  for (const auto& d : fb.deltas) add(DeltaStmt{d.mu, d.alpha, d.delta, d.source});
  for (const auto& a : fb.actors) add(ActorStmt{a.id, a.word.letters(), a.source});
  for (const auto& f : fb.actions) add(MapsStmt{f.actor, f.curve, f.image, f.flips, f.source});
  return render(doc);
}

}  // namespace mcgcheck
