#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "fantor/cli.hpp"
#include "fantor/corpus.hpp"
#include "fantor/fan_io.hpp"

using namespace fantor;

namespace {

std::string read_data(const std::string& name) {
  std::ifstream in(std::string(FANTOR_DATA_DIR) + "/" + name + ".json");
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

bool has_line(const std::string& out, const std::string& line) {
  return ("\n" + out).find("\n" + line + "\n") != std::string::npos;
}

}  // namespace

TEST(ParseFanFile, AffinePlane) {
  auto d = io::parse_fan_file(R"({"dim":2,"rays":[[1,0],[0,1]],"cones":[[0,1]]})");
  EXPECT_EQ(d.dim, 2u);
  EXPECT_EQ(d.rays, (std::vector<IntVector>{{1, 0}, {0, 1}}));
  EXPECT_EQ(validate_fan(d), validate_fan(corpus::affine_plane()));
}

TEST(ParseFanFile, OctantFile) {
  auto d = io::parse_fan_file(read_data("octant_example"));
  EXPECT_EQ(d.rays.size(), 6u);
  EXPECT_EQ(d.cones.size(), 4u);
  EXPECT_NO_THROW(validate_fan(d));
}

TEST(ParseFanFile, Errors) {
  try {
    io::parse_fan_file(R"({"dim":2,"rays":[[1,0],[0,1],[-1,0],[0,-1]],"cones":[[0,9]]})");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::IndexOutOfRange);
  }
  try {
    io::parse_fan_file("{\"dim\": 2,\n \"rays\": [[1,0],\n ]]}");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ParseError);
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
  EXPECT_THROW(io::parse_fan_file(R"({"dim":2,"rays":[]})"), Error);
  EXPECT_THROW(io::parse_fan_file(R"({"dim":2,"rays":[["x",0]],"cones":[]})"), Error);
}

TEST(ParseFanFile, BigIntegersAsStrings) {
  auto d = io::parse_fan_file(R"({"dim":1,"rays":[["1"]],"cones":[[0]]})");
  EXPECT_EQ(d.rays[0][0], 1);
}

TEST(ParseFanFile, RoundTripThroughFormatter) {
  for (const auto& d : corpus::all()) {
    auto back = io::parse_fan_file(io::format_fan_file(d));
    EXPECT_EQ(back.rays, d.rays);
    EXPECT_EQ(back.cones, d.cones);
    EXPECT_EQ(back.name, d.name);
  }
}

TEST(ConeArgument, BothSyntaxes) {
  std::vector<IntVector> expected{{1, 0}, {0, 1}};
  EXPECT_EQ(io::parse_cone_argument("[[1,0],[0,1]]"), expected);
  EXPECT_EQ(io::parse_cone_argument("1,0;0,1"), expected);
  EXPECT_EQ(io::parse_cone_argument("1, 0; 0, 1"), expected);
}

TEST(Run, TorOnTwoQuadrantsFile) {
  auto r = cli::run_on_text("tor", read_data("two_opposite_quadrants"));
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_TRUE(has_line(r.output, "Tor_1 = Z"));
  EXPECT_TRUE(has_line(r.output, "Tor_2 = 0"));
}

TEST(Run, OctantLimitsAndFlatness) {
  auto limits = cli::run_on_text("check-limits", read_data("octant_example"));
  EXPECT_EQ(limits.exit_code, 0);
  EXPECT_TRUE(has_line(limits.output, "enough limits: NO"));
  EXPECT_NE(limits.output.find("certificate: exhausted search"), std::string::npos);
  auto flat = cli::run_on_text("check-flat", read_data("octant_example"));
  EXPECT_TRUE(has_line(flat.output, "flat: YES; Merkurjev spectral sequence degenerates"));
}

TEST(Run, ExitCodes) {
  EXPECT_EQ(cli::run_on_text("validate", "{not json").exit_code, 1);
  EXPECT_EQ(cli::run_on_text("validate", R"({"dim":2,"rays":[[1,0],[1,2]],"cones":[[0,1]]})").exit_code, 1);
  EXPECT_EQ(cli::run_on_text("tor", read_data("split_link_example")).exit_code, 2);
  EXPECT_EQ(cli::run("bogus", corpus::affine_plane()).exit_code, 1);
  EXPECT_EQ(cli::run("tor", std::nullopt).exit_code, 1);
  cli::Options o;
  o.cone = "1,0";
  EXPECT_EQ(cli::run("blowup", corpus::affine_plane(), o).exit_code, 1);  // dimension too small
  o.cone = "1,1";
  auto missing = cli::run("blowup", corpus::affine_plane(), o);
  EXPECT_EQ(missing.exit_code, 1);
  EXPECT_NE(missing.output.find("(1,1)"), std::string::npos) << missing.output;
}

TEST(Run, InvalidFanNamesOffendingDatum) {
  auto r = cli::run_on_text("validate", R"({"dim":2,"rays":[[1,0],[1,2]],"cones":[[0,1]]})");
  EXPECT_NE(r.output.find("NotRegular"), std::string::npos) << r.output;
}

TEST(Run, JsonMirrorsText) {
  cli::Options o;
  o.json = true;
  auto r = cli::run("tor", corpus::two_opposite_quadrants(), o);
  auto doc = nlohmann::json::parse(r.output);
  EXPECT_EQ(doc["tor"]["1"], "Z");
  EXPECT_EQ(doc["tor"]["2"], "0");
  auto flat = nlohmann::json::parse(cli::run("check-flat", corpus::octant_example(), o).output);
  EXPECT_EQ(flat["flat"], true);
  EXPECT_EQ(flat["merkurjev_degenerates"], true);
  auto bad = cli::run("tor", corpus::split_link_example(), o);
  EXPECT_EQ(bad.exit_code, 2);
  EXPECT_EQ(nlohmann::json::parse(bad.output)["error"], "HypothesesNotMet");
}

TEST(Run, Deterministic) {
  for (const auto& d : corpus::all())
    for (const auto& cmd : {"validate", "links", "check-flat", "check-limits", "e1"})
      EXPECT_EQ(cli::run(cmd, d).output, cli::run(cmd, d).output);
}

TEST(Run, HomologyWithCoefficients) {
  cli::Options o;
  o.coeff = "Z/2";
  auto r = cli::run("homology", corpus::projective_plane(), o);
  EXPECT_TRUE(has_line(r.output, "H~_1 = Z/2"));
}

TEST(Run, OrbitPrintsFanFile) {
  cli::Options o;
  o.cone = "1,0";
  auto r = cli::run("orbit", corpus::projective_plane(), o);
  ASSERT_EQ(r.exit_code, 0);
  Fan y = validate_fan(io::parse_fan_file(r.output));
  EXPECT_TRUE(is_complete(y));
  EXPECT_EQ(y.rank(), 1u);
}

TEST(Selftest, AllGoldenCasesPass) {
  auto r = cli::selftest(false);
  EXPECT_EQ(r.exit_code, 0) << r.output;
  EXPECT_EQ(r.output.find("FAIL"), std::string::npos);
}
