#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace mcgcheck;

namespace {

dsl::Document parse_kind(const fs::path& p) {
  static const std::map<std::string, dsl::DocumentKind> kinds = {{".cat", dsl::DocumentKind::Catalog},
                                                                 {".deriv", dsl::DocumentKind::Derivation},
                                                                 {".morph", dsl::DocumentKind::Morphism},
                                                                 {".pres", dsl::DocumentKind::Presentation}};
  return dsl::parse(read_text(p), kinds.at(p.extension().string()));
}

std::string strip_trailing_space(const std::string& s) {
  std::string out;
  std::istringstream in(s);
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r')) line.pop_back();
    out += line + "\n";
  }
  return out;
}

}  // namespace

TEST(Parse, SurfaceLine) {
  auto doc = dsl::parse("surface N(4,1)\n", dsl::DocumentKind::Catalog);
  auto s = doc.all<dsl::SurfaceStmt>();
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0].first->genus, 4);
  EXPECT_EQ(s[0].first->boundary, 1);
  EXPECT_EQ(s[0].second.line, 1u);
}

TEST(Parse, ApplyLine) {
  auto doc = dsl::parse("derive x : 1 => 1 in figure4\napply rel=lantern.ABCE dir=fwd at=3\n",
                        dsl::DocumentKind::Derivation);
  auto s = doc.all<dsl::ApplyStmt>();
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0].first->relation, "lantern.ABCE");
  EXPECT_EQ(s[0].first->direction, dsl::Direction::LhsToRhs);
  EXPECT_EQ(s[0].first->at, 3u);
  EXPECT_EQ(s[0].second.line, 2u);
}

TEST(Parse, MalformedApplyReportsColumn) {
  try {
    dsl::parse("derive x : 1 => 1 in figure4\napply at=\n", dsl::DocumentKind::Derivation);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.code(), ErrorCode::ParseError);
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 7u);  // where rel= should start
  }
  try {
    dsl::parse("derive x : 1 => 1 in figure4\napply rel=foo dir=fwd at=\n", dsl::DocumentKind::Derivation);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.column(), 26u);  // the empty position
  }
}

TEST(Parse, CommentsAndBlanksSurvive) {
  std::string text = "# head\ncatalog x # trailing\n\nsurface N(3,0)\n";
  EXPECT_EQ(dsl::render(dsl::parse(text, dsl::DocumentKind::Catalog)), text);
  // extra spacing is not canonical and is normalised away
  EXPECT_EQ(dsl::render(dsl::parse("catalog x   # trailing\n", dsl::DocumentKind::Catalog)), "catalog x # trailing\n");
}

TEST(Parse, StatementsOfTheWrongKindAreRejected) {
  EXPECT_THROW(dsl::parse("apply rel=x dir=fwd at=0\n", dsl::DocumentKind::Catalog), ParseError);
  EXPECT_THROW(dsl::parse("surface N(3,0)\n", dsl::DocumentKind::Morphism), ParseError);
}

TEST(Parse, MorphismAndPresentationLines) {
  auto m = dsl::parse(
      "morphism nu : Thm2@figure4 -> Thm4@figure4\nmap Y(mu,alpha) => T(alpha,+)^-1 U(mu,alpha,+)\n"
      "evidence rel=r1 cert=a.deriv\nevidence rel=r2 search steps=3 length=10 states=50\n",
      dsl::DocumentKind::Morphism);
  auto ev = m.all<dsl::EvidenceStmt>();
  ASSERT_EQ(ev.size(), 2u);
  EXPECT_EQ(*ev[0].first->certificate, "a.deriv");
  ASSERT_TRUE(ev[1].first->search);
  EXPECT_EQ(ev[1].first->search->max_steps, 3u);
  EXPECT_EQ(ev[1].first->search->max_states, 50u);
  auto p = dsl::parse("presentation y\ngenerator Y(mu,alpha)\nrel y2 : Y(mu,alpha) Y(mu,alpha) = 1 [R6_SlideSquare, x]\n",
                      dsl::DocumentKind::Presentation);
  EXPECT_EQ(p.all<dsl::RelStmt>().size(), 1u);
}

// parse then render gives back the file, for everything shipped
TEST(RoundTrip, EveryBundledDocumentIsByteExact) {
  std::size_t n = 0;
  for (const auto& e : fs::recursive_directory_iterator(data_dir())) {
    std::string ext = e.path().extension().string();
    if (ext != ".cat" && ext != ".deriv" && ext != ".morph" && ext != ".pres") continue;
    std::string text = read_text(e.path());
    EXPECT_EQ(strip_trailing_space(dsl::render(parse_kind(e.path()))), strip_trailing_space(text)) << e.path();
    ++n;
  }
  EXPECT_GE(n, 25u);
}

TEST(RoundTrip, RenderedCertificatesReparse) {
  for (const auto& p : oracle::bundled_certificates(data_dir())) {
    Certificate c = load_certificate(read_text(p));
    EXPECT_EQ(load_certificate(render(c)), c) << p;
  }
}
