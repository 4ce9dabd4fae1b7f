#include "hgcount/pair_spec.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace hgcount;

namespace {

PairSpec parse(const std::string& text, const PowerContext& ctx) {
  std::stringstream in(text);
  return read_pair_spec(in, ctx);
}

}  // namespace

TEST(PairSpec, ParsesCommentsBlanksAndTrivialMarkers) {
  PowerContext ctx(catalog_group("s3"), 4);
  auto spec = parse(
      "# first example\n"
      "n=4\n"
      "\n"
      "theta_f = 0,1,2,3\n"
      "phi_f=-,0,3,1\n"
      "theta_g=0, 0, 1, 3\n"
      "phi_g=-,-,2,4\n",
      ctx);
  EXPECT_EQ(spec.n, 4);
  EXPECT_EQ(spec.f.theta, (std::vector<int>{0, 1, 2, 3}));
  EXPECT_EQ(spec.f.phi, (std::vector<int>{kTrivialPhi, 0, 3, 1}));
  EXPECT_EQ(spec.g.theta, (std::vector<int>{0, 0, 1, 3}));
  EXPECT_EQ(spec.g.phi, (std::vector<int>{kTrivialPhi, kTrivialPhi, 2, 4}));
}

TEST(PairSpec, RoundTripsThroughWriter) {
  PowerContext ctx(catalog_group("s3"), 3);
  StructuredEndo f{{0, 3, 1}, {kTrivialPhi, 5, 2}};
  StructuredEndo g{{2, 2, 0}, {1, 0, kTrivialPhi}};
  std::stringstream buf;
  write_pair_spec(buf, f, g);
  EXPECT_EQ(buf.str(), "n=3\ntheta_f=0,3,1\nphi_f=-,5,2\ntheta_g=2,2,0\nphi_g=1,0,-\n");
  auto spec = read_pair_spec(buf, ctx);
  EXPECT_EQ(spec.f, f);
  EXPECT_EQ(spec.g, g);
}

TEST(PairSpec, RejectsMalformedInput) {
  PowerContext ctx(catalog_group("s3"), 2);
  const std::string good_tail = "theta_g=1,2\nphi_g=0,0\n";
  EXPECT_THROW(parse("n=2\ntheta_f=1,2\nphi_f=0,0\n", ctx), InputError);                   // missing keys
  EXPECT_THROW(parse("n=2\nn=2\ntheta_f=1,2\nphi_f=0,0\n" + good_tail, ctx), InputError);  // duplicate
  EXPECT_THROW(parse("n=2\ncolor=1\ntheta_f=1,2\nphi_f=0,0\n" + good_tail, ctx), InputError);
  EXPECT_THROW(parse("n=3\ntheta_f=1,2\nphi_f=0,0\n" + good_tail, ctx), InputError);  // rank mismatch
  EXPECT_THROW(parse("n=2\ntheta_f=1\nphi_f=0\n" + good_tail, ctx), InputError);      // length
  EXPECT_THROW(parse("n=2\ntheta_f=1,x\nphi_f=0,0\n" + good_tail, ctx), InputError);  // not an int
  EXPECT_THROW(parse("n=2\ntheta_f=0,2\nphi_f=0,0\n" + good_tail, ctx), InputError);  // φ must be trivial
  EXPECT_THROW(parse("n=2\ntheta_f=1,2\nphi_f=-,0\n" + good_tail, ctx), InputError);  // φ must not be
  EXPECT_THROW(parse("n=2\ntheta_f=1,2\nphi_f=0,6\n" + good_tail, ctx), InputError);  // aut id range
  EXPECT_THROW(parse("n=2\ntheta_f 1,2\n", ctx), InputError);                          // no '='
  EXPECT_NO_THROW(parse("n=2\ntheta_f=1,2\nphi_f=0,0\n" + good_tail, ctx));
}

TEST(PairSpec, MissingFileIsAnInputError) {
  PowerContext ctx(catalog_group("s3"), 1);
  EXPECT_THROW(load_pair_spec("/nonexistent/pair.txt", ctx), InputError);
  EXPECT_THROW(peek_pair_rank("/nonexistent/pair.txt"), InputError);
}
