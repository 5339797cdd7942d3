#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace mcgcheck;

namespace {

Bundle& bundle() {
  static Bundle b;
  return b;
}

Letter t(const std::string& c, Sign s = Sign::Plus, int e = 1) { return letter(GeneratorSymbol::twist(c, s), e); }
Letter sym(const std::string& text, int e = 1) { return letter(parse_symbol(text), e); }
Word w(std::initializer_list<Letter> ls) { return Word::reduce(ls); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::Usage;
}

PresentationMorphism identity_on(const Presentation& p) {
  PresentationMorphism m;
  m.name = "id";
  m.source = m.target = p;
  for (const auto& g : p.generators) m.images[g] = Word::reduce({letter(g)});
  return m;
}

}  // namespace

TEST(MapWord, Examples) {
  PresentationMorphism nu = bundle().morphism("nu.morph");
  EXPECT_EQ(map_word(nu, w({t("beta", Sign::Minus)})), w({t("beta", Sign::Minus)}));
  EXPECT_TRUE(map_word(nu, Word{}).empty());
  EXPECT_EQ(map_word(nu, w({sym("Y(mu,alpha)")})), w({t("alpha", Sign::Plus, -1), sym("U(mu,alpha,+)")}));
  EXPECT_EQ(map_word(nu, w({sym("Y(mu,alpha)", -1)})), w({sym("U(mu,alpha,+)", -1), t("alpha")}));
  EXPECT_EQ(code_of([&] { map_word(nu, w({sym("U(mu,alpha,+)")})); }), ErrorCode::MissingImage);
}

TEST(MapWord, IsAHomomorphism) {
  PresentationMorphism nu = bundle().morphism("nu.morph");
  const auto& gens = nu.source.generators;
  std::mt19937 rng(31);
  for (int i = 0; i < 300; ++i) {
    Word u = Word::reduce(oracle::random_letters(rng, 8, gens));
    Word v = Word::reduce(oracle::random_letters(rng, 8, gens));
    ASSERT_EQ(map_word(nu, concat(u, v)), concat(map_word(nu, u), map_word(nu, v)));
  }
}

TEST(Validate, ImagesMustBeComplete) {
  PresentationMorphism nu = bundle().morphism("nu.morph");
  nu.images.erase(parse_symbol("Y(mu,alpha)"));
  EXPECT_EQ(code_of([&] { validate(nu); }), ErrorCode::MissingImage);
  PresentationMorphism psi = bundle().morphism("psi.morph");
  psi.images[parse_symbol("T(alpha,+)")] = w({sym("U(mu,alpha,+)")});
  EXPECT_EQ(code_of([&] { validate(psi); }), ErrorCode::ValidationError);
}

TEST(WellDefined, NuPasses) {
  WellDefinednessReport r = check_well_defined(bundle().morphism("nu.morph"));
  EXPECT_TRUE(r.pass);
  std::size_t certs = 0;
  for (const auto& x : r.relators) {
    EXPECT_TRUE(x.pass) << x.id << " " << x.detail;
    certs += x.method == "certificate";
  }
  EXPECT_EQ(certs, 12u);
}

TEST(WellDefined, PsiPasses) {
  WellDefinednessReport r = check_well_defined(bundle().morphism("psi.morph"));
  EXPECT_TRUE(r.pass);
  for (const auto& x : r.relators) EXPECT_TRUE(x.method == "literal" || x.method == "free") << x.id;
  EXPECT_TRUE(check_roundtrips(bundle().morphism("psi.morph")).pass);
}

TEST(WellDefined, DeletedCertificateIsMissingEvidence) {
  PresentationMorphism nu = bundle().morphism("nu.morph");
  nu.evidence.erase("slideinv.mu.alpha");
  EXPECT_EQ(code_of([&] { check_well_defined(nu); }), ErrorCode::EvidenceMissing);
}

TEST(WellDefined, WrongCertificateFails) {
  PresentationMorphism nu = bundle().morphism("nu.morph");
  nu.evidence["slideinv.mu.alpha"] = nu.evidence.at("tconj.yr.beta+");
  WellDefinednessReport r = check_well_defined(nu);
  EXPECT_FALSE(r.pass);
}

TEST(WellDefined, MonotoneInEvidence) {
  PresentationMorphism nu = bundle().morphism("nu.morph");
  PresentationMorphism psi = bundle().morphism("psi.morph");
  for (auto* m : {&nu, &psi}) {
    ASSERT_TRUE(check_well_defined(*m).pass);
    for (const auto& r : m->source.relations) {
      if (!m->evidence.count(r.id)) m->evidence[r.id] = SearchBounds{1, 8, 50};
    }
    EXPECT_TRUE(check_well_defined(*m).pass) << m->name;
  }
}

TEST(Theta, IndependencePasses) {
  const FactBase& fb = bundle().catalog("figure4");
  CheckReport r = check_theta_independence(fb, "mu", "alpha", bundle().store("Thm4@figure4"));
  EXPECT_TRUE(r.pass) << r.reason;
}

TEST(Theta, BuiltCertificatesMatchTheBundledFiles) {
  ThetaCertificates c = theta_certificates(bundle().catalog("figure4"), "mu", "alpha");
  Certificate s1 = bundle().certificate("theta_stage1.deriv");
  Certificate s2 = bundle().certificate("theta_independence.deriv");
  EXPECT_EQ(c.stage1.source, s1.source);
  EXPECT_EQ(c.stage1.target, s1.target);
  EXPECT_EQ(c.stage1.steps, s1.steps);
  EXPECT_EQ(c.stage2.source, s2.source);
  EXPECT_EQ(c.stage2.target, s2.target);
  EXPECT_EQ(c.stage2.steps, s2.steps);
}

TEST(Theta, MissingSelfConjugationFact) {
  std::string text = read_text(bundle().root() / "catalogs" / "figure4.cat");
  std::string line = "maps um mu -> mu1 source \"Figure 4 (manual)\"\n";
  auto at = text.find(line);
  ASSERT_NE(at, std::string::npos);
  text.erase(at, line.size());
  FactBase fb = load_catalog(text);
  EXPECT_EQ(code_of([&] { theta_certificates(fb, "mu", "alpha"); }), ErrorCode::NoActionFact);
}

TEST(Theta, CorruptedStageTwoFailsAtTheBadStep) {
  ThetaCertificates c = theta_certificates(bundle().catalog("figure4"), "mu", "alpha");
  const InstanceStore& s = bundle().store("Thm4@figure4");
  c.stage2.steps[0].position = 0;
  CheckReport r = check_certificate(c.stage2, s);
  EXPECT_FALSE(r.pass);
  ASSERT_TRUE(r.failing_step);
  EXPECT_EQ(*r.failing_step, 0u);
}

TEST(GeneratorInverse, EtaAfterNuIsFree) {
  PresentationMorphism nu = bundle().morphism("nu.morph");
  PresentationMorphism eta = bundle().morphism("eta.morph");
  GeneratorReport r = check_generator_inverse(nu, eta);
  EXPECT_TRUE(r.pass);
  for (const auto& g : r.generators) EXPECT_EQ(g.method, "free") << g.id;
}

TEST(GeneratorInverse, IdentityPair) {
  PresentationMorphism id = identity_on(make_presentation(PresentationKind::Thm1, bundle().catalog("figure4")));
  GeneratorReport r = check_generator_inverse(id, id);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.generators.size(), id.source.generators.size());
  EXPECT_TRUE(check_well_defined(id).pass);
}

TEST(GeneratorInverse, MissingEvidence) {
  PresentationMorphism nu = bundle().morphism("nu.morph");
  PresentationMorphism eta = bundle().morphism("eta.morph");
  Word& img = eta.images.at(parse_symbol("U(mu,alpha,+)"));
  img = conjugate(w({t("gamma")}), img);
  EXPECT_EQ(code_of([&] { check_generator_inverse(nu, eta); }), ErrorCode::EvidenceMissing);
}

// U sent to Y t instead of t Y: t^-1 Y t is not within three steps of Y
TEST(GeneratorInverse, CorruptedEtaFails) {
  PresentationMorphism nu = bundle().morphism("nu.morph");
  PresentationMorphism eta = bundle().morphism("eta.morph");
  for (auto& [g, img] : eta.images) {
    if (g.kind() != GeneratorKind::Transposition) continue;
    ASSERT_EQ(img.size(), 2u);
    img = w({img.letters()[1], img.letters()[0]});
  }
  SearchBounds bounds{3, 12, 200000};
  GeneratorReport r = check_generator_inverse(nu, eta, bounds);
  EXPECT_FALSE(r.pass);

  Word y = w({sym("Y(mu,alpha)")});
  Word back = map_word(eta, map_word(nu, y));
  EXPECT_EQ(back, w({t("alpha", Sign::Plus, -1), sym("Y(mu,alpha)"), t("alpha")}));
  for (const auto& g : r.generators) {
    if (g.id == "Y(mu,alpha)") EXPECT_FALSE(g.pass);
  }
  // brute force over the same relations, no length cap
  std::vector<RelationInstance> rels = nu.source.store.items();
  std::vector<Letter> start(back.begin(), back.end());
  auto seen = oracle::reachable(start, rels, 3);
  EXPECT_FALSE(seen.count(y.letters()));
}
