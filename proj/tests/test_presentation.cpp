#include <gtest/gtest.h>

#include <json.hpp>

#include "opcalc/functors.hpp"
#include "opcalc/presentation.hpp"

using namespace opcalc;

TEST(Parse, PreLie) {
  OperadPresentation o = parse_presentation(
      "operad prelie { gens: m:nonsym;\n rel: m(m(x,y),z) - m(x,m(y,z)) - m(m(x,z),y) + m(x,m(z,y)); }");
  EXPECT_EQ(o.signature.p(), 1);
  EXPECT_EQ(o.relators.size(), 1u);
  // the relator's S3 orbit spans three relations
  EXPECT_EQ(o.dim_relations(), 3u);
}

TEST(Parse, EmptyGenerators) {
  OperadPresentation o = parse_presentation("operad m0 { gens: ; }");
  EXPECT_EQ(o.signature.size(), 0u);
  EXPECT_EQ(o.dim_relations(), 0u);
}

TEST(Parse, RationalCoefficientsAndComments) {
  OperadPresentation o = parse_presentation(
      "// one generator\noperad t { gens: m:nonsym;\n rel: -1/2*m(m(x,y),z) + 2/4*m(x,m(y,z)); }");
  EXPECT_TRUE(same_operad(o, zoo_get("ass")));
}

TEST(Parse, Errors) {
  EXPECT_THROW(parse_presentation("operad t { gens: m:nonsym; rel: m(x,m(y,y)); }"), ParseError);
  EXPECT_THROW(parse_presentation("operad t { gens: m:nonsym; rel: m(x,y); }"), ParseError);
  EXPECT_THROW(parse_presentation("operad t { gens: m:nonsym; rel: n(m(x,y),z); }"), ParseError);
  EXPECT_THROW(parse_presentation("operad t { gens: x:nonsym; }"), ParseError);
  EXPECT_THROW(parse_presentation("operad t { gens: m:weird; }"), ParseError);
  EXPECT_THROW(parse_presentation("operad t { gens: m:nonsym; rel: m(m(x,y),z) }"), ParseError);
}

TEST(Parse, ErrorCarriesPosition) {
  try {
    parse_presentation("operad t {\n gens: m:nonsym;\n rel: m(m(x,y),q); }");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
    EXPECT_GT(e.column(), 1);
  }
}

TEST(Render, RoundTripsEveryZooEntry) {
  for (const auto& k : zoo_keys()) {
    OperadPresentation o = zoo_get(k);
    EXPECT_TRUE(same_operad(parse_presentation(render_dsl(o)), o)) << k;
    EXPECT_TRUE(same_operad(parse_presentation(render(o, Format::Text)), o)) << k;
  }
}

TEST(Render, LatexJacobi) {
  std::string s = render(zoo_get("lie"), Format::Latex);
  EXPECT_NE(s.find("\\begin{aligned}"), std::string::npos);
  std::size_t terms = 0;
  for (std::size_t i = s.find("\\mathrm{b}(\\mathrm{b}"); i != std::string::npos;
       i = s.find("\\mathrm{b}(\\mathrm{b}", i + 1)) {
    ++terms;
  }
  EXPECT_EQ(terms, 3u);
}

TEST(Render, JsonSchema) {
  auto j = nlohmann::json::parse(render(mag(1, 0, 0), Format::Json));
  EXPECT_EQ(j["generators"].size(), 1u);
  EXPECT_EQ(j["relation_basis"].size(), 0u);
  EXPECT_EQ(j["dim3"], 12);
  auto a = nlohmann::json::parse(render(zoo_get("ass"), Format::Json));
  ASSERT_EQ(a["relation_basis"].size(), 6u);
  const auto& t = a["relation_basis"][0][0];
  for (const char* f : {"shape", "outer", "inner", "leaves", "coeff"}) EXPECT_TRUE(t.contains(f)) << f;
}

TEST(Zoo, Lookups) {
  OperadPresentation lie = zoo_get("lie");
  EXPECT_EQ(lie.signature.r(), 1);
  EXPECT_EQ(lie.dim_relations(), 1u);
  OperadPresentation dend = zoo_get("DEND");
  EXPECT_EQ(dend.signature.p(), 2);
  EXPECT_EQ(dend.relators.size(), 3u);
  OperadPresentation m = zoo_get("mag(2,1,1)");
  EXPECT_EQ(m.signature.size(), 4u);
  EXPECT_EQ(m.dim_relations(), 0u);
  EXPECT_TRUE(same_operad(zoo_get("mag_{2,1,1}"), m));
  EXPECT_TRUE(same_operad(zoo_get("mag_2_1_1"), m));
  EXPECT_THROW(zoo_get("nosuch"), LookupError);
}

TEST(Zoo, EveryEntryParsesWithProvenance) {
  for (const auto& e : zoo_entries()) {
    EXPECT_FALSE(e.provenance.empty()) << e.key;
    EXPECT_NO_THROW(parse_presentation(e.source)) << e.key;
  }
}

TEST(Zoo, AddEntry) {
  add_zoo_entry({"testAssCopy", "test", "operad testAssCopy { gens: m:nonsym; rel: m(m(x,y),z) - m(x,m(y,z)); }"});
  EXPECT_TRUE(same_operad(zoo_get("testasscopy"), zoo_get("ass")));
  EXPECT_THROW(add_zoo_entry({"bad", "test", "operad bad { gens: m:nonsym; rel: m(x,y); }"}), ParseError);
}

TEST(Operations, SumWithEmptyIsIdentity) {
  for (const auto& k : {"ass", "pois", "postlie"}) {
    OperadPresentation o = zoo_get(k);
    OperadPresentation s = sum(o, mag(0, 0, 0));
    EXPECT_TRUE(same_operad(s, o)) << k;
  }
}
