#pragma once

// Relation schemas and their instances over a FactBase.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mcgcheck/catalog.hpp"
#include "mcgcheck/error.hpp"
#include "mcgcheck/word.hpp"

namespace mcgcheck {

enum class SchemaId {
  R1_Bounding,
  R2a_TwistInverse,
  R2b_SlideInverse,
  R2c_TransInverse,
  R3a_TwistConj,
  R3b_SlideConj,
  R3c_TransConj,
  R4_Chain,
  R5_Lantern,
  R6_SlideSquare,
  R6U_TransSquare,
  RDef_U_eq_tY,
  R3p_Commute,
  R3p_Braid,
  R4p_GeneralChain,
};

inline constexpr SchemaId kAllSchemas[] = {
    SchemaId::R1_Bounding,    SchemaId::R2a_TwistInverse, SchemaId::R2b_SlideInverse,
    SchemaId::R2c_TransInverse, SchemaId::R3a_TwistConj,  SchemaId::R3b_SlideConj,
    SchemaId::R3c_TransConj,  SchemaId::R4_Chain,         SchemaId::R5_Lantern,
    SchemaId::R6_SlideSquare, SchemaId::R6U_TransSquare,  SchemaId::RDef_U_eq_tY,
    SchemaId::R3p_Commute,    SchemaId::R3p_Braid,        SchemaId::R4p_GeneralChain,
};

inline const char* to_string(SchemaId s) {
  switch (s) {
    case SchemaId::R1_Bounding: return "R1_Bounding";
    case SchemaId::R2a_TwistInverse: return "R2a_TwistInverse";
    case SchemaId::R2b_SlideInverse: return "R2b_SlideInverse";
    case SchemaId::R2c_TransInverse: return "R2c_TransInverse";
    case SchemaId::R3a_TwistConj: return "R3a_TwistConj";
    case SchemaId::R3b_SlideConj: return "R3b_SlideConj";
    case SchemaId::R3c_TransConj: return "R3c_TransConj";
    case SchemaId::R4_Chain: return "R4_Chain";
    case SchemaId::R5_Lantern: return "R5_Lantern";
    case SchemaId::R6_SlideSquare: return "R6_SlideSquare";
    case SchemaId::R6U_TransSquare: return "R6U_TransSquare";
    case SchemaId::RDef_U_eq_tY: return "RDef_U_eq_tY";
    case SchemaId::R3p_Commute: return "R3p_Commute";
    case SchemaId::R3p_Braid: return "R3p_Braid";
    case SchemaId::R4p_GeneralChain: return "R4p_GeneralChain";
  }
  return "?";
}

inline SchemaId parse_schema(const std::string& s) {
  for (SchemaId id : kAllSchemas) {
    if (s == to_string(id)) return id;
  }
  throw Error(ErrorCode::ValidationError, "unknown schema '" + s + "'");
}

using Bindings = std::map<std::string, std::string>;

struct RelationInstance {
  std::string id;
  SchemaId schema;
  Word lhs, rhs;
  Bindings bindings;
  std::string provenance;

  bool operator==(const RelationInstance&) const = default;
  bool same_equation(const RelationInstance& o) const { return lhs == o.lhs && rhs == o.rhs; }
};

/// `rel <id> : <lhs> = <rhs> [schema, provenance]`
inline std::string render(const RelationInstance& r) {
  return "rel " + r.id + " : " + render(r.lhs) + " = " + render(r.rhs) + " [" + to_string(r.schema) +
         ", " + r.provenance + "]";
}

namespace schema_detail {

inline const std::string& need(const Bindings& b, const char* key) {
  auto it = b.find(key);
  if (it == b.end()) throw Error(ErrorCode::ArityMismatch, std::string("missing binding '") + key + "'");
  return it->second;
}

inline Sign need_sign(const Bindings& b) {
  auto it = b.find("sign");
  if (it == b.end()) throw Error(ErrorCode::OrientationRequired, "binding 'sign' is required");
  if (it->second == "+") return Sign::Plus;
  if (it->second == "-") return Sign::Minus;
  throw Error(ErrorCode::OrientationRequired, "sign must be '+' or '-'");
}

inline void check_keys(const Bindings& b, std::initializer_list<const char*> allowed) {
  for (const auto& [k, v] : b) {
    if (std::find_if(allowed.begin(), allowed.end(), [&](const char* a) { return k == a; }) ==
        allowed.end()) {
      throw Error(ErrorCode::ArityMismatch, "unexpected binding '" + k + "'");
    }
  }
}

inline CurveRef two_sided(const FactBase& fb, const std::string& name) {
  CurveRef c = fb.curve(name);
  if (c.sidedness != Sidedness::TwoSided) {
    throw Error(ErrorCode::ValidationError, "curve '" + name + "' is not two-sided");
  }
  return c;
}

inline CurveRef one_sided(const FactBase& fb, const std::string& name) {
  CurveRef c = fb.curve(name);
  if (c.sidedness != Sidedness::OneSided) {
    throw Error(ErrorCode::ValidationError, "curve '" + name + "' is not one-sided");
  }
  return c;
}

// "alpha" or "alpha^-1"
inline CurveRef arrowed(const FactBase& fb, const std::string& text) {
  std::string n = text;
  Arrow a = Arrow::Forward;
  if (n.size() > 3 && n.compare(n.size() - 3, 3, "^-1") == 0) {
    n.resize(n.size() - 3);
    a = Arrow::Reversed;
  }
  CurveRef c = two_sided(fb, n);
  c.arrow = a;
  return c;
}

inline const SlideDecl& need_slide(const FactBase& fb, const std::string& mu, const CurveRef& alpha) {
  for (const auto& s : fb.slides) {
    if (s.mu == mu && s.alpha.name == alpha.name) return s;
  }
  throw Error(ErrorCode::MissingFact, "no slide declared for (" + mu + ", " + alpha.name + ")");
}

inline GeneratorSymbol twist(const OrientationToken& t) { return GeneratorSymbol::twist(t.curve, t.sign); }

inline Word letters(std::initializer_list<Letter> ls) { return Word::reduce(std::vector<Letter>(ls)); }

inline Word twists(const std::vector<OrientationToken>& ts) {
  std::vector<Letter> out;
  for (const auto& t : ts) out.push_back(letter(twist(t)));
  return Word::reduce(out);
}

inline std::string sign_suffix(Sign s) { return std::string(1, sign_char(s)); }

inline const Actor& need_actor(const FactBase& fb, const std::string& id) {
  const Actor* a = fb.find_actor(id);
  if (!a) throw Error(ErrorCode::MissingFact, "unknown actor '" + id + "'");
  return *a;
}

inline CurveRef need_image(const FactBase& fb, const std::string& actor, const CurveRef& c) {
  auto img = fb.image(actor, c);
  if (!img) throw Error(ErrorCode::MissingFact, "no action fact for " + actor + " on " + c.name);
  return *img;
}

inline OrientationToken need_transport(const FactBase& fb, const std::string& actor,
                                       const OrientationToken& t) {
  auto out = fb.transport(actor, t);
  if (!out) {
    throw Error(ErrorCode::MissingFact, "no orientation transport for " + actor + " on " + t.curve.name);
  }
  return *out;
}


}  // namespace schema_detail

/// Left side of a chain relation: (t_1 ... t_k)^(k+1) for odd k and
/// (t_1 ... t_k)^(2k+2) for even k.
inline Word chain_lhs(const ChainFact& c) {
  std::size_t k = c.k();
  int e = static_cast<int>(k % 2 == 1 ? k + 1 : 2 * k + 2);
  return power(schema_detail::twists(c.chain), e);
}

inline RelationInstance instantiate(SchemaId schema, const Bindings& b, const FactBase& fb) {
  using namespace schema_detail;
  RelationInstance r;
  r.schema = schema;
  r.bindings = b;
  switch (schema) {
    case SchemaId::R1_Bounding: {
      check_keys(b, {"curve", "sign"});
      CurveRef c = two_sided(fb, need(b, "curve"));
      Sign s = need_sign(b);
      const BoundingFact* f = fb.bounding_fact(c.name);
      if (!f) throw Error(ErrorCode::MissingFact, "no bounding fact for " + c.name);
      r.id = "bound." + c.name + sign_suffix(s);
      r.lhs = letters({letter(GeneratorSymbol::twist(c, s))});
      r.provenance = c.name + (f->kind == BoundingKind::Disk ? " bounds a disk" : " bounds a Mobius band");
      return r;
    }
    case SchemaId::R2a_TwistInverse: {
      check_keys(b, {"curve"});
      CurveRef c = two_sided(fb, need(b, "curve"));
      r.id = "twistinv." + c.name;
      r.lhs = letters({letter(GeneratorSymbol::twist(c, Sign::Plus), -1)});
      r.rhs = letters({letter(GeneratorSymbol::twist(c, Sign::Minus))});
      r.provenance = "inverse twist is the twist with opposite orientation";
      return r;
    }
    case SchemaId::R2b_SlideInverse: {
      check_keys(b, {"mu", "alpha"});
      CurveRef mu = one_sided(fb, need(b, "mu"));
      CurveRef alpha = arrowed(fb, need(b, "alpha"));
      need_slide(fb, mu.name, alpha);
      r.id = "slideinv." + mu.name + "." + render(alpha);
      r.lhs = letters({letter(GeneratorSymbol::slide(mu, alpha), -1)});
      r.rhs = letters({letter(GeneratorSymbol::slide(mu, reverse_curve(alpha)))});
      r.provenance = "inverse slide is the slide along the reversed arrow";
      return r;
    }
    case SchemaId::R2c_TransInverse: {
      check_keys(b, {"mu", "alpha", "sign"});
      CurveRef mu = one_sided(fb, need(b, "mu"));
      CurveRef alpha = arrowed(fb, need(b, "alpha"));
      Sign s = need_sign(b);
      need_slide(fb, mu.name, alpha);
      r.id = "transinv." + mu.name + "." + render(alpha) + sign_suffix(s);
      r.lhs = letters({letter(GeneratorSymbol::transposition(mu, alpha, s), -1)});
      r.rhs = letters({letter(GeneratorSymbol::transposition(mu, reverse_curve(alpha), s))});
      r.provenance = "inverse transposition is the transposition along the reversed arrow";
      return r;
    }
    case SchemaId::R3a_TwistConj: {
      check_keys(b, {"actor", "curve", "sign"});
      const Actor& f = need_actor(fb, need(b, "actor"));
      CurveRef c = two_sided(fb, need(b, "curve"));
      Sign s = need_sign(b);
      OrientationToken img = need_transport(fb, f.id, {c, s});
      r.id = "tconj." + f.id + "." + c.name + sign_suffix(s);
      r.lhs = conjugate(f.word, letters({letter(GeneratorSymbol::twist(c, s))}));
      r.rhs = letters({letter(twist(img))});
      r.provenance = "conjugation of a twist by actor " + f.id;
      return r;
    }
    case SchemaId::R3b_SlideConj: {
      check_keys(b, {"actor", "mu", "alpha"});
      const Actor& f = need_actor(fb, need(b, "actor"));
      CurveRef mu = one_sided(fb, need(b, "mu"));
      CurveRef alpha = arrowed(fb, need(b, "alpha"));
      need_slide(fb, mu.name, alpha);
      CurveRef fmu = need_image(fb, f.id, mu);
      CurveRef falpha = need_image(fb, f.id, alpha);
      r.id = "yconj." + f.id + "." + mu.name + "." + render(alpha);
      r.lhs = conjugate(f.word, letters({letter(GeneratorSymbol::slide(mu, alpha))}));
      r.rhs = letters({letter(GeneratorSymbol::slide(fmu, falpha))});
      r.provenance = "conjugation of a slide by actor " + f.id;
      return r;
    }
    case SchemaId::R3c_TransConj: {
      check_keys(b, {"actor", "mu", "alpha", "sign"});
      const Actor& f = need_actor(fb, need(b, "actor"));
      CurveRef mu = one_sided(fb, need(b, "mu"));
      CurveRef alpha = arrowed(fb, need(b, "alpha"));
      Sign s = need_sign(b);
      need_slide(fb, mu.name, alpha);
      CurveRef fmu = need_image(fb, f.id, mu);
      CurveRef falpha = need_image(fb, f.id, alpha);
      OrientationToken ft = need_transport(fb, f.id, {alpha.unarrowed(), s});
      r.id = "uconj." + f.id + "." + mu.name + "." + render(alpha) + sign_suffix(s);
      r.lhs = conjugate(f.word, letters({letter(GeneratorSymbol::transposition(mu, alpha, s))}));
      r.rhs = letters({letter(GeneratorSymbol::transposition(fmu, falpha, ft.sign))});
      r.provenance = "conjugation of a transposition by actor " + f.id;
      return r;
    }
    case SchemaId::R4_Chain:
    case SchemaId::R4p_GeneralChain: {
      check_keys(b, {"chain"});
      const std::string& id = need(b, "chain");
      auto it = std::find_if(fb.chains.begin(), fb.chains.end(), [&](const ChainFact& c) { return c.id == id; });
      if (it == fb.chains.end()) throw Error(ErrorCode::MissingFact, "no chain fact '" + id + "'");
      r.id = (schema == SchemaId::R4_Chain ? "chain." : "gchain.") + id;
      r.lhs = chain_lhs(*it);
      r.rhs = twists(it->boundary);
      r.provenance = std::to_string(it->k()) + "-chain relation " + id;
      return r;
    }
    case SchemaId::R5_Lantern: {
      check_keys(b, {"lantern"});
      const std::string& id = need(b, "lantern");
      auto it = std::find_if(fb.lanterns.begin(), fb.lanterns.end(),
                             [&](const LanternFact& l) { return l.id == id; });
      if (it == fb.lanterns.end()) throw Error(ErrorCode::MissingFact, "no lantern fact '" + id + "'");
      r.id = "lantern." + id;
      r.lhs = twists({it->d[0], it->d[1], it->d[2]});
      r.rhs = twists({it->d[3], it->d[4], it->d[5], it->d[6]});
      r.provenance = "lantern relation " + id;
      return r;
    }
    case SchemaId::R6_SlideSquare:
    case SchemaId::R6U_TransSquare: {
      bool trans = schema == SchemaId::R6U_TransSquare;
      if (trans) check_keys(b, {"mu", "alpha", "sign"});
      else check_keys(b, {"mu", "alpha"});
      CurveRef mu = one_sided(fb, need(b, "mu"));
      CurveRef alpha = arrowed(fb, need(b, "alpha"));
      need_slide(fb, mu.name, alpha);
      const DeltaFact* d = fb.delta(mu.name, alpha);
      if (!d) throw Error(ErrorCode::MissingFact, "no delta curve for (" + mu.name + ", " + render(alpha) + ")");
      GeneratorSymbol g = trans ? GeneratorSymbol::transposition(mu, alpha, need_sign(b))
                                : GeneratorSymbol::slide(mu, alpha);
      r.id = (trans ? "usq." : "ysq.") + mu.name + "." + render(alpha) +
             (trans ? sign_suffix(g.sign()) : "");
      r.lhs = letters({letter(g), letter(g)});
      r.rhs = letters({letter(twist(d->delta))});
      r.provenance = std::string(trans ? "square of a transposition" : "square of a slide") +
                     " is the twist about " + d->delta.curve.name;
      return r;
    }
    case SchemaId::RDef_U_eq_tY: {
      check_keys(b, {"mu", "alpha", "sign"});
      CurveRef mu = one_sided(fb, need(b, "mu"));
      CurveRef alpha = arrowed(fb, need(b, "alpha"));
      Sign s = need_sign(b);
      need_slide(fb, mu.name, alpha);
      r.id = "udef." + mu.name + "." + render(alpha) + sign_suffix(s);
      r.lhs = letters({letter(GeneratorSymbol::transposition(mu, alpha, s))});
      r.rhs = letters({letter(GeneratorSymbol::twist(alpha, s)), letter(GeneratorSymbol::slide(mu, alpha))});
      r.provenance = "definition of the transposition";
      return r;
    }
    case SchemaId::R3p_Commute:
    case SchemaId::R3p_Braid: {
      check_keys(b, {"first", "second"});
      CurveRef c1 = two_sided(fb, need(b, "first"));
      CurveRef c2 = two_sided(fb, need(b, "second"));
      bool braid = schema == SchemaId::R3p_Braid;
      auto n = fb.intersection(c1.name, c2.name);
      if (!n || *n != (braid ? 1 : 0)) {
        throw Error(ErrorCode::MissingFact, "no intersection fact |" + c1.name + " & " + c2.name +
                                                "| = " + (braid ? "1" : "0"));
      }
      const CompatibilityFact* cf = nullptr;
      for (const auto& f : fb.compatibilities) {
        if ((f.first.curve.name == c1.name && f.second.curve.name == c2.name) ||
            (f.first.curve.name == c2.name && f.second.curve.name == c1.name)) {
          cf = &f;
          break;
        }
      }
      if (!cf) throw Error(ErrorCode::MissingFact, "no compatibility fact for " + c1.name + ", " + c2.name);
      OrientationToken t1 = cf->first.curve.name == c1.name ? cf->first : cf->second;
      OrientationToken t2 = cf->first.curve.name == c1.name ? cf->second : cf->first;
      Letter a = letter(twist(t1)), bb = letter(twist(t2));
      r.id = (braid ? "braid." : "commute.") + c1.name + "." + c2.name;
      r.lhs = braid ? letters({a, bb, a}) : letters({a, bb});
      r.rhs = braid ? letters({bb, a, bb}) : letters({bb, a});
      r.provenance = braid ? "braid relation" : "commutativity relation";
      return r;
    }
  }
  throw Error(ErrorCode::ValidationError, "unknown schema");
}

// ---- presentations ------------------------------------------------------------

enum class PresentationKind { Thm1, Thm2, Thm3, Thm4, Cor };

inline const char* to_string(PresentationKind k) {
  switch (k) {
    case PresentationKind::Thm1: return "Thm1";
    case PresentationKind::Thm2: return "Thm2";
    case PresentationKind::Thm3: return "Thm3";
    case PresentationKind::Thm4: return "Thm4";
    case PresentationKind::Cor: return "Cor";
  }
  return "?";
}

inline PresentationKind parse_presentation_kind(const std::string& s) {
  for (auto k : {PresentationKind::Thm1, PresentationKind::Thm2, PresentationKind::Thm3,
                 PresentationKind::Thm4, PresentationKind::Cor}) {
    if (s == to_string(k)) return k;
  }
  throw Error(ErrorCode::ValidationError, "unknown presentation '" + s + "'");
}

inline bool uses_slides(PresentationKind k) {
  return k == PresentationKind::Thm1 || k == PresentationKind::Thm2 || k == PresentationKind::Cor;
}

/// The generator symbols a presentation has over the catalog, in a fixed order:
/// twists (both orientations) by curve, then slides or transpositions by
/// declared pair and arrow.
inline std::vector<GeneratorSymbol> generators(PresentationKind k, const FactBase& fb) {
  std::vector<GeneratorSymbol> out;
  for (const auto& c : fb.curves) {
    if (c.sidedness != Sidedness::TwoSided) continue;
    out.push_back(GeneratorSymbol::twist(c.name, Sign::Plus));
    out.push_back(GeneratorSymbol::twist(c.name, Sign::Minus));
  }
  for (const auto& s : fb.slides) {
    if (s.fixed) continue;
    CurveRef mu = fb.curve(s.mu);
    for (Arrow a : {Arrow::Forward, Arrow::Reversed}) {
      CurveRef alpha = CurveRef::arrowed(s.alpha.name, a);
      if (k == PresentationKind::Cor) continue;
      if (uses_slides(k)) {
        out.push_back(GeneratorSymbol::slide(mu, alpha));
      } else {
        out.push_back(GeneratorSymbol::transposition(mu, alpha, Sign::Plus));
        out.push_back(GeneratorSymbol::transposition(mu, alpha, Sign::Minus));
      }
    }
  }
  if (k == PresentationKind::Cor) {
    for (const auto& s : fb.slides) {
      if (s.fixed) out.push_back(GeneratorSymbol::slide(fb.curve(s.mu), s.alpha));
    }
  }
  return out;
}

inline bool is_generator(PresentationKind k, const FactBase& fb, const GeneratorSymbol& g) {
  auto gens = generators(k, fb);
  return std::find(gens.begin(), gens.end(), g) != gens.end();
}

namespace schema_detail {

struct Collector {
  const FactBase& fb;
  std::vector<RelationInstance> out;
  std::set<std::string> seen;

  // Facts that do not license the instance are skipped silently; every other
  // error propagates.
  void add(SchemaId s, const Bindings& b) {
    try {
      RelationInstance r = instantiate(s, b, fb);
      if (r.lhs == r.rhs) return;  // e.g. a twist conjugated by itself
      if (seen.insert(r.id).second) out.push_back(std::move(r));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::MissingFact) throw;
    }
  }
};

inline std::vector<std::string> arrows(const SlideDecl& s) { return {s.alpha.name, s.alpha.name + "^-1"}; }

inline bool letters_allowed(PresentationKind k, const FactBase& fb, const Word& w) {
  for (const auto& l : w) {
    if (!is_generator(k, fb, l.symbol)) return false;
  }
  return true;
}

enum class ActorClass { SingleTwist, SingleSlide, SingleTrans, Composite };

inline ActorClass classify(const Actor& a) {
  if (a.word.size() != 1) return ActorClass::Composite;
  switch (a.word[0].symbol.kind()) {
    case GeneratorKind::Twist: return ActorClass::SingleTwist;
    case GeneratorKind::Slide: return ActorClass::SingleSlide;
    case GeneratorKind::Transposition: return ActorClass::SingleTrans;
  }
  return ActorClass::Composite;
}

inline bool is_fixed_slide(const FactBase& fb, const Actor& a) {
  if (a.word.size() != 1 || a.word[0].exponent != 1) return false;
  for (const auto& s : fb.slides) {
    if (s.fixed && GeneratorSymbol::slide(fb.curve(s.mu), s.alpha) == a.word[0].symbol) return true;
  }
  return false;
}

inline void conjugations(Collector& c, PresentationKind k, bool derived) {
  const FactBase& fb = c.fb;
  for (const auto& a : fb.actors) {
    if (a.word.empty()) continue;
    if (!letters_allowed(k, fb, a.word)) continue;
    ActorClass cls = classify(a);
    bool single = cls != ActorClass::Composite && a.word[0].exponent == 1;
    if (single == derived) continue;
    if (k == PresentationKind::Cor && single && cls != ActorClass::SingleTwist && !is_fixed_slide(fb, a)) {
      continue;
    }
    // twists
    for (const auto& cd : fb.curves) {
      if (cd.sidedness != Sidedness::TwoSided) continue;
      for (const char* s : {"+", "-"}) c.add(SchemaId::R3a_TwistConj, {{"actor", a.id}, {"curve", cd.name}, {"sign", s}});
    }
    if (k == PresentationKind::Cor) continue;
    // slides or transpositions; single actors must be twists, or the
    // conjugated transposition itself
    for (const auto& sd : fb.slides) {
      if (sd.fixed) continue;
      for (const auto& al : arrows(sd)) {
        if (uses_slides(k)) {
          if (single && cls != ActorClass::SingleTwist) continue;
          c.add(SchemaId::R3b_SlideConj, {{"actor", a.id}, {"mu", sd.mu}, {"alpha", al}});
        } else {
          for (Sign s : {Sign::Plus, Sign::Minus}) {
            if (single && cls == ActorClass::SingleTrans) {
              GeneratorSymbol self = GeneratorSymbol::transposition(fb.curve(sd.mu), arrowed(fb, al), s);
              if (a.word[0].symbol != self) continue;
            }
            c.add(SchemaId::R3c_TransConj,
                  {{"actor", a.id}, {"mu", sd.mu}, {"alpha", al}, {"sign", std::string(1, sign_char(s))}});
          }
        }
      }
    }
  }
}

}  // namespace schema_detail

/// Every defining instance of the presentation that the catalog licenses.
/// Thm2 and Thm4 need g != 2; the corollary presentation needs g >= 2.
inline std::vector<RelationInstance> presentation_for(PresentationKind k, const FactBase& fb) {
  using namespace schema_detail;
  int g = fb.surface.genus;
  if ((k == PresentationKind::Thm2 || k == PresentationKind::Thm4) && g == 2) {
    throw Error(ErrorCode::GenusOutOfRange, std::string(to_string(k)) + " needs genus != 2");
  }
  if (k == PresentationKind::Cor && g < 2) {
    throw Error(ErrorCode::GenusOutOfRange, "Cor needs genus >= 2");
  }
  if (g < 1) throw Error(ErrorCode::GenusOutOfRange, "genus must be at least 1");

  Collector c{fb, {}, {}};
  bool slides = uses_slides(k);
  for (const auto& bf : fb.bounding) {
    for (const char* s : {"+", "-"}) c.add(SchemaId::R1_Bounding, {{"curve", bf.curve}, {"sign", s}});
  }
  for (const auto& cd : fb.curves) {
    if (cd.sidedness == Sidedness::TwoSided) c.add(SchemaId::R2a_TwistInverse, {{"curve", cd.name}});
  }
  for (const auto& sd : fb.slides) {
    if (sd.fixed) continue;
    for (const auto& al : arrows(sd)) {
      if (k == PresentationKind::Thm2) c.add(SchemaId::R2b_SlideInverse, {{"mu", sd.mu}, {"alpha", al}});
      if (k == PresentationKind::Thm4) {
        for (const char* s : {"+", "-"}) {
          c.add(SchemaId::R2c_TransInverse, {{"mu", sd.mu}, {"alpha", al}, {"sign", s}});
        }
      }
    }
  }
  conjugations(c, k, false);
  for (const auto& ch : fb.chains) {
    if (ch.k() == 2) c.add(SchemaId::R4_Chain, {{"chain", ch.id}});
  }
  for (const auto& l : fb.lanterns) c.add(SchemaId::R5_Lantern, {{"lantern", l.id}});
  if (k == PresentationKind::Thm1 || k == PresentationKind::Thm3) {
    for (const auto& sd : fb.slides) {
      if (sd.fixed) continue;
      for (const auto& al : arrows(sd)) {
        if (slides) {
          c.add(SchemaId::R6_SlideSquare, {{"mu", sd.mu}, {"alpha", al}});
        } else {
          for (const char* s : {"+", "-"}) {
            c.add(SchemaId::R6U_TransSquare, {{"mu", sd.mu}, {"alpha", al}, {"sign", s}});
          }
        }
      }
    }
  }
  if (k == PresentationKind::Cor) {
    for (const auto& sd : fb.slides) {
      if (sd.fixed) c.add(SchemaId::R6_SlideSquare, {{"mu", sd.mu}, {"alpha", render(sd.alpha)}});
    }
  }
  return std::move(c.out);
}

/// Admissible but non-defining instances: commutativity and braid relations,
/// chains of any length, and conjugations by composite actors.
inline std::vector<RelationInstance> derived_instances(PresentationKind k, const FactBase& fb) {
  using namespace schema_detail;
  Collector c{fb, {}, {}};
  for (const auto& f : fb.intersections) {
    if (fb.curve(f.first).sidedness != Sidedness::TwoSided || fb.curve(f.second).sidedness != Sidedness::TwoSided) {
      continue;
    }
    SchemaId s = f.number == 0 ? SchemaId::R3p_Commute : SchemaId::R3p_Braid;
    c.add(s, {{"first", f.first}, {"second", f.second}});
  }
  for (const auto& ch : fb.chains) c.add(SchemaId::R4p_GeneralChain, {{"chain", ch.id}});
  conjugations(c, k, true);
  return std::move(c.out);
}

/// Bridge between the two generating sets.
inline std::vector<RelationInstance> definition_instances(const FactBase& fb) {
  schema_detail::Collector c{fb, {}, {}};
  for (const auto& sd : fb.slides) {
    if (sd.fixed) continue;
    for (const auto& al : schema_detail::arrows(sd)) {
      for (const char* s : {"+", "-"}) c.add(SchemaId::RDef_U_eq_tY, {{"mu", sd.mu}, {"alpha", al}, {"sign", s}});
    }
  }
  return std::move(c.out);
}

/// Instances addressable by id, in a fixed order.
class InstanceStore {
 public:
  InstanceStore() = default;
  explicit InstanceStore(std::vector<RelationInstance> instances) {
    for (auto& r : instances) add(std::move(r));
  }

  void add(RelationInstance r) {
    if (index_.count(r.id)) return;
    index_[r.id] = items_.size();
    items_.push_back(std::move(r));
  }

  const RelationInstance* find(const std::string& id) const {
    auto it = index_.find(id);
    return it == index_.end() ? nullptr : &items_[it->second];
  }

  const RelationInstance& at(const std::string& id) const {
    const RelationInstance* r = find(id);
    if (!r) throw Error(ErrorCode::UnknownRelation, "no relation instance '" + id + "'");
    return *r;
  }

  const std::vector<RelationInstance>& items() const& { return items_; }
  std::vector<RelationInstance> items() && { return std::move(items_); }
  std::size_t size() const { return items_.size(); }

 private:
  std::vector<RelationInstance> items_;
  std::map<std::string, std::size_t> index_;
};

/// Defining plus derived instances of one presentation.
inline InstanceStore presentation_store(PresentationKind k, const FactBase& fb) {
  InstanceStore s(presentation_for(k, fb));
  for (auto& r : derived_instances(k, fb)) s.add(std::move(r));
  return s;
}

/// Everything the catalog licenses, across all presentations.
inline InstanceStore full_store(const FactBase& fb) {
  InstanceStore s;
  for (auto k : {PresentationKind::Thm1, PresentationKind::Thm3, PresentationKind::Thm2,
                 PresentationKind::Thm4, PresentationKind::Cor}) {
    try {
      for (auto& r : presentation_store(k, fb).items()) s.add(r);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::GenusOutOfRange) throw;
    }
  }
  for (auto& r : definition_instances(fb)) s.add(std::move(r));
  return s;
}

}  // namespace mcgcheck
