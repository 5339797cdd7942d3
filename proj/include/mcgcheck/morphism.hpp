#pragma once

// Generator-substitution homomorphisms between presentations.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mcgcheck/catalog.hpp"
#include "mcgcheck/derivation.hpp"
#include "mcgcheck/dsl.hpp"
#include "mcgcheck/error.hpp"
#include "mcgcheck/schemas.hpp"
#include "mcgcheck/word.hpp"

namespace mcgcheck {

struct Presentation {
  std::string name;  // e.g. "Thm2@figure4"
  std::vector<GeneratorSymbol> generators;
  std::vector<RelationInstance> relations;  // defining
  InstanceStore store;                      // defining and derived, for replay

  bool has_generator(const GeneratorSymbol& g) const {
    return std::find(generators.begin(), generators.end(), g) != generators.end();
  }
};

/// Declared generators, then any further symbol the defining relations use.
inline Presentation make_presentation(PresentationKind k, const FactBase& fb) {
  Presentation p;
  p.name = std::string(to_string(k)) + "@" + fb.name;
  p.generators = generators(k, fb);
  p.relations = presentation_for(k, fb);
  p.store = presentation_store(k, fb);
  for (const auto& r : p.relations) {
    for (const Word* w : {&r.lhs, &r.rhs}) {
      for (const auto& l : *w) {
        if (!p.has_generator(l.symbol)) p.generators.push_back(l.symbol);
      }
    }
  }
  return p;
}

/// Presentation given by explicit generator and rel lines.
inline Presentation make_presentation(std::string name, std::vector<GeneratorSymbol> gens,
                                      std::vector<RelationInstance> rels) {
  Presentation p;
  p.name = std::move(name);
  p.generators = std::move(gens);
  p.relations = rels;
  p.store = InstanceStore(std::move(rels));
  return p;
}

using Evidence = std::variant<Certificate, SearchBounds>;

struct Roundtrip {
  GeneratorSymbol generator;
  Word word;  // over the source generators
  Certificate certificate;
};

struct PresentationMorphism {
  std::string name;
  Presentation source, target;
  SubstitutionMap images;
  std::map<std::string, Evidence> evidence;
  std::vector<Roundtrip> roundtrips;
  std::vector<std::string> notes;
};

inline Word map_word(const PresentationMorphism& m, const Word& w) { return substitute(w, m.images); }

inline void validate(const PresentationMorphism& m) {
  for (const auto& g : m.source.generators) {
    if (!m.images.count(g)) throw Error(ErrorCode::MissingImage, "no image for " + render(g) + " in " + m.name);
  }
  for (const auto& [g, img] : m.images) {
    for (const auto& l : img) {
      if (!m.target.has_generator(l.symbol)) {
        throw Error(ErrorCode::ValidationError,
                    "image of " + render(g) + " uses " + render(l.symbol) + ", not a generator of " + m.target.name);
      }
    }
  }
}

struct RelatorResult {
  std::string id;
  std::string method;  // free, literal, certificate, search
  bool pass = false;
  std::string detail;
};

struct WellDefinednessReport {
  std::string name;
  bool pass = true;
  std::vector<RelatorResult> relators;
};

namespace morphism_detail {

inline RelatorResult prove(const std::string& id, const Word& from, const Word& to, const Evidence* ev,
                           const InstanceStore& store) {
  RelatorResult res{id, {}, false, {}};
  if (from == to) {
    res.method = "free";
    res.pass = true;
    return res;
  }
  if (!ev) throw Error(ErrorCode::EvidenceMissing, "no evidence for relator " + id);
  if (const auto* cert = std::get_if<Certificate>(ev)) {
    res.method = "certificate";
    if (cert->source != from || cert->target != to) {
      res.detail = "certificate " + cert->name + " proves " + render(cert->source) + " => " + render(cert->target) +
                   ", needed " + render(from) + " => " + render(to);
      return res;
    }
    CheckReport rep = check_certificate(*cert, store);
    res.pass = rep.pass;
    res.detail = rep.pass ? cert->name : cert->name + ": " + rep.reason;
    return res;
  }
  res.method = "search";
  try {
    auto found = find_derivation(from, to, store, std::get<SearchBounds>(*ev));
    res.pass = found.has_value();
    res.detail = found ? std::to_string(found->steps.size()) + " steps" : "no derivation exists within bounds";
  } catch (const Error& e) {
    if (e.code() != ErrorCode::BoundsExceeded) throw;
    res.detail = e.what();
  }
  return res;
}

}  // namespace morphism_detail

/// Every source relator must map to something the target proves: a literal
/// target instance, a free equality, or supplied evidence.
inline WellDefinednessReport check_well_defined(const PresentationMorphism& m) {
  validate(m);
  WellDefinednessReport rep;
  rep.name = m.name;
  for (const auto& r : m.source.relations) {
    Word l = map_word(m, r.lhs);
    Word rr = map_word(m, r.rhs);
    bool literal = std::any_of(m.target.relations.begin(), m.target.relations.end(), [&](const RelationInstance& t) {
      return (t.lhs == l && t.rhs == rr) || (t.lhs == rr && t.rhs == l);
    });
    RelatorResult res;
    if (literal && l != rr) {
      res = {r.id, "literal", true, {}};
    } else {
      auto it = m.evidence.find(r.id);
      res = morphism_detail::prove(r.id, l, rr, it == m.evidence.end() ? nullptr : &it->second, m.target.store);
    }
    rep.pass = rep.pass && res.pass;
    rep.relators.push_back(std::move(res));
  }
  return rep;
}

struct GeneratorReport {
  std::string name;
  bool pass = true;
  std::vector<RelatorResult> generators;
};

/// g(f(s)) ~ s in f's source for every generator s of f's source. Free
/// equality first, then a matching roundtrip certificate of f, then a bounded
/// search when bounds are supplied.
inline GeneratorReport check_generator_inverse(const PresentationMorphism& f, const PresentationMorphism& g,
                                               std::optional<SearchBounds> search = std::nullopt) {
  GeneratorReport rep;
  rep.name = g.name + " o " + f.name;
  for (const auto& s : f.source.generators) {
    Word back = map_word(g, map_word(f, Word::reduce({letter(s)})));
    Word want = Word::reduce({letter(s)});
    const Roundtrip* rt = nullptr;
    for (const auto& r : f.roundtrips) {
      if (r.generator == s && r.certificate.source == back) rt = &r;
    }
    std::optional<Evidence> ev;
    if (rt) ev = rt->certificate;
    else if (search) ev = *search;
    RelatorResult res =
        morphism_detail::prove(render(s), back, want, ev ? &*ev : nullptr, f.source.store);
    rep.pass = rep.pass && res.pass;
    rep.generators.push_back(std::move(res));
  }
  return rep;
}

/// The composite the other way round when only one map is representable:
/// every target generator must be the image of a source generator, or have a
/// roundtrip certificate turning m(word) into it inside the target.
inline GeneratorReport check_roundtrips(const PresentationMorphism& m) {
  GeneratorReport rep;
  rep.name = m.name + " roundtrip";
  for (const auto& s : m.target.generators) {
    Word want = Word::reduce({letter(s)});
    RelatorResult res{render(s), {}, false, {}};
    bool hit = std::any_of(m.images.begin(), m.images.end(), [&](const auto& kv) { return kv.second == want; });
    if (hit) {
      res = {render(s), "free", true, {}};
    } else {
      // every listed roundtrip must hold, not just one
      bool any = false;
      for (const auto& r : m.roundtrips) {
        if (r.generator != s) continue;
        Evidence ev = r.certificate;
        RelatorResult one = morphism_detail::prove(render(s), map_word(m, r.word), want, &ev, m.target.store);
        if (!any || !one.pass) res = one;
        any = true;
        if (!one.pass) break;
      }
      if (!any) throw Error(ErrorCode::EvidenceMissing, "no roundtrip for generator " + render(s));
    }
    rep.pass = rep.pass && res.pass;
    rep.generators.push_back(std::move(res));
  }
  return rep;
}

// ---- orientation independence of the slide image ---------------------------------

struct ThetaCertificates {
  Certificate stage1, stage2;
};

/// The two certificates showing t(alpha,+)^-1 U(mu,alpha,+) = t(alpha,-)^-1 U(mu,alpha,-),
/// built from the catalog's actor facts.
inline ThetaCertificates theta_certificates(const FactBase& fb, const std::string& mu, const std::string& alpha) {
  CurveRef m = fb.curve(mu);
  CurveRef a = fb.curve(alpha);
  CurveRef arrowed = CurveRef::arrowed(alpha);
  auto tw = [&](Sign s) { return GeneratorSymbol::twist(a, s); };
  auto tr = [&](Sign s) { return GeneratorSymbol::transposition(m, arrowed, s); };
  auto need = [&](const Word& w, std::initializer_list<std::string> curves) -> const Actor& {
    const Actor* act = fb.find_actor(w);
    if (!act) throw Error(ErrorCode::NoActionFact, "no actor declared for " + render(w));
    for (const auto& c : curves) {
      if (!fb.action(act->id, c)) throw Error(ErrorCode::NoActionFact, "no action fact for " + act->id + " on " + c);
    }
    return *act;
  };
  const Actor& up = need(Word::reduce({letter(tr(Sign::Plus))}), {alpha});
  const Actor& tminus = need(Word::reduce({letter(tw(Sign::Minus))}), {mu, alpha});
  const Actor& um = need(Word::reduce({letter(tr(Sign::Minus))}), {mu, alpha});
  auto img_t = fb.image(tminus.id, m);
  auto img_u = fb.image(um.id, m);
  if (!img_t || !img_u || img_t->name != img_u->name) {
    throw Error(ErrorCode::NoActionFact, "the minus twist and the minus transposition must move " + mu + " alike");
  }
  std::string ti = "twistinv." + alpha;

  ThetaCertificates out;
  Certificate& c1 = out.stage1;
  c1.name = "theta_stage1";
  c1.context = "Thm4@" + fb.name;
  c1.source = Word::reduce({letter(tr(Sign::Plus)), letter(tw(Sign::Plus)), letter(tr(Sign::Plus), -1)});
  c1.target = Word::reduce({letter(tw(Sign::Plus), -1)});
  c1.steps = {Step::apply("tconj." + up.id + "." + alpha + "+", Direction::LhsToRhs, 0, "twist conjugation by transposition"),
              Step::apply(ti, Direction::RhsToLhs, 0, "twist inverse")};

  Certificate& c2 = out.stage2;
  c2.name = "theta_independence";
  c2.context = c1.context;
  c2.source = Word::reduce({letter(tw(Sign::Minus)), letter(tw(Sign::Plus), -1), letter(tr(Sign::Plus))});
  c2.target = Word::reduce({letter(tr(Sign::Minus))});
  c2.steps = {Step::apply(ti, Direction::LhsToRhs, 1, "twist inverse"),
              Step::apply("tconj." + up.id + "." + alpha + "+", Direction::RhsToLhs, 1, "stage one"),
              Step::regroup(),
              Step::insert(letter(tw(Sign::Minus), -1), 2, "insert trivial pair"),
              Step::apply(ti, Direction::RhsToLhs, 3, "twist inverse"),
              Step::regroup(),
              Step::apply("uconj." + tminus.id + "." + mu + "." + alpha + "+", Direction::LhsToRhs, 0,
                          "transposition conjugation by twist"),
              Step::apply("uconj." + um.id + "." + mu + "." + alpha + "-", Direction::RhsToLhs, 0,
                          "self conjugation of the minus transposition"),
              Step::regroup()};
  return out;
}

inline CheckReport check_theta_independence(const FactBase& fb, const std::string& mu, const std::string& alpha,
                                            const InstanceStore& store) {
  ThetaCertificates c = theta_certificates(fb, mu, alpha);
  CheckReport first = check_certificate(c.stage1, store);
  if (!first.pass) return first;
  return check_certificate(c.stage2, store);
}

// ---- documents -------------------------------------------------------------------

using PresentationResolver = std::function<Presentation(const std::string& context)>;
using CertificateLoader = std::function<Certificate(const std::string& path)>;

inline PresentationMorphism load_morphism(const dsl::Document& doc, const PresentationResolver& presentations,
                                          const CertificateLoader& certificates) {
  using namespace dsl;
  if (doc.kind != DocumentKind::Morphism) throw Error(ErrorCode::ValidationError, "not a morphism document");
  PresentationMorphism m;
  bool header = false, identity = false;
  for (const auto& s : doc.statements) {
    auto where = [&] { return "line " + std::to_string(s.span.line) + ": "; };
    if (const auto* h = std::get_if<MorphismHeader>(&s.statement)) {
      if (header) throw Error(ErrorCode::ValidationError, where() + "second header");
      header = true;
      m.name = h->name;
      m.source = presentations(h->source);
      m.target = presentations(h->target);
      continue;
    }
    if (std::holds_alternative<Comment>(s.statement) || std::holds_alternative<Blank>(s.statement)) continue;
    if (!header) throw Error(ErrorCode::ValidationError, where() + "statement before 'morphism' header");
    if (const auto* n = std::get_if<NoteStmt>(&s.statement)) {
      m.notes.push_back(n->text);
    } else if (std::holds_alternative<IdentityStmt>(s.statement)) {
      identity = true;
    } else if (const auto* mp = std::get_if<MapStmt>(&s.statement)) {
      if (m.images.count(mp->symbol)) throw Error(ErrorCode::ValidationError, where() + "second image for " + render(mp->symbol));
      m.images[mp->symbol] = Word::reduce(mp->image);
    } else if (const auto* ev = std::get_if<EvidenceStmt>(&s.statement)) {
      if (m.evidence.count(ev->relation)) throw Error(ErrorCode::ValidationError, where() + "second evidence for " + ev->relation);
      if (ev->certificate) m.evidence[ev->relation] = certificates(*ev->certificate);
      else m.evidence[ev->relation] = to_bounds(*ev->search);
    } else if (const auto* rt = std::get_if<RoundtripStmt>(&s.statement)) {
      m.roundtrips.push_back({rt->generator, Word::reduce(rt->word), certificates(rt->certificate)});
    } else {
      throw Error(ErrorCode::ValidationError, where() + "statement not allowed in a morphism");
    }
  }
  if (!header) throw Error(ErrorCode::ValidationError, "morphism has no 'morphism' header");
  if (identity) {
    for (const auto& g : m.source.generators) {
      if (!m.images.count(g)) m.images[g] = Word::reduce({letter(g)});
    }
  }
  validate(m);
  return m;
}

}  // namespace mcgcheck
