#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

#include "opcalc/error.hpp"
#include "opcalc/expression.hpp"
#include "opcalc/functors.hpp"
#include "opcalc/koszul.hpp"
#include "opcalc/recognize.hpp"

using namespace opcalc;

TEST(Expression, Tokenize) {
  auto t = tokenize_spec("dual (black ass mag(1,0,0))");
  std::vector<std::string> want = {"dual", "(", "black", "ass", "mag(1,0,0)", ")"};
  EXPECT_EQ(t, want);
}

TEST(Expression, Verbs) {
  EXPECT_TRUE(recognized_as(evaluate_spec("black ass leib"), "diass"));
  EXPECT_TRUE(recognized_as(evaluate_spec("white perm lie"), "leib"));
  EXPECT_TRUE(recognized_as(evaluate_spec("dual com"), "lie"));
  EXPECT_TRUE(recognized_as(evaluate_spec("dual (black ass (dual postcom))"), "tridend"));
  EXPECT_TRUE(same_operad(evaluate_spec("show ass"), zoo_get("ass")));
  EXPECT_TRUE(same_operad(evaluate_spec("sum ass lie"), sum(zoo_get("ass"), zoo_get("lie"))));
  EXPECT_TRUE(same_operad(evaluate_spec("prod ass lie"), prod(zoo_get("ass"), zoo_get("lie"))));
  EXPECT_TRUE(same_operad(evaluate_spec("opp leib"), opposite_operad(zoo_get("leib"))));
  EXPECT_TRUE(same_operad(evaluate_spec("adm lie"), adm(zoo_get("lie"))));
  EXPECT_TRUE(same_operad(evaluate_spec("black prelie-left ass"), black(Family::PreLieLBlack, zoo_get("ass"))));
}

TEST(Expression, Files) {
  const std::string path = testing::TempDir() + "opcalc_expr_test.op";
  {
    std::ofstream out(path);
    out << "operad a2 { gens: m:nonsym; rel: m(m(x,y),z) - m(x,m(y,z)); }\n";
  }
  EXPECT_TRUE(same_operad(evaluate_spec("parse " + path), zoo_get("ass")));
  EXPECT_TRUE(same_operad(evaluate_spec(path), zoo_get("ass")));
  EXPECT_TRUE(same_operad(load_file(path), zoo_get("ass")));
  std::remove(path.c_str());
  EXPECT_THROW(load_file(path), Error);
}

TEST(Expression, Errors) {
  EXPECT_THROW(evaluate_spec("black nosuch ass"), Error);
  EXPECT_THROW(evaluate_spec("white com ass"), Error);
  EXPECT_THROW(evaluate_spec("dual"), Error);
  EXPECT_THROW(evaluate_spec("dual (ass"), Error);
  EXPECT_THROW(evaluate_spec("sum ass"), Error);
  EXPECT_THROW(evaluate_spec("nosuchkey"), LookupError);
}

TEST(Expression, Families) {
  EXPECT_EQ(parse_black_family("ass"), Family::AssBlack);
  EXPECT_EQ(parse_black_family("com"), Family::ComBlack);
  EXPECT_EQ(parse_black_family("prelie"), Family::PreLieRBlack);
  EXPECT_EQ(parse_white_family("lie"), Family::LieWhite);
  EXPECT_EQ(parse_white_family("perm"), Family::PermWhite);
  EXPECT_THROW(parse_white_family("com"), Error);
}
