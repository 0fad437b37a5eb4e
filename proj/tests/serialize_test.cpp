#include "isoforge/serialize.hpp"

#include "isoforge/rng.hpp"
#include "json.hpp"

#include <gtest/gtest.h>

using namespace isoforge;
using nlohmann::json;

TEST(JsonWriter, SeventeenSignificantDigits) {
  JsonValue v(0.1);
  EXPECT_EQ(v.dump(), "0.10000000000000001");
  EXPECT_EQ(JsonValue(1.0).dump(), "1");
  EXPECT_EQ(JsonValue(-0.5).dump(), "-0.5");
}

TEST(JsonWriter, DoublesRoundTripLosslessly) {
  Rng rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    const double x = rng.uniform(-1e6, 1e6) * std::pow(10.0, rng.uniform(-12.0, 12.0));
    json parsed = json::parse(JsonValue(x).dump());
    EXPECT_EQ(parsed.get<double>(), x);
  }
}

TEST(JsonWriter, ObjectOrderAndEscaping) {
  JsonValue obj = JsonValue::object();
  obj.set("zeta", 1).set("alpha", "line\nbreak \"quoted\"").set("beta", true);
  const std::string text = obj.dump();
  EXPECT_LT(text.find("zeta"), text.find("alpha"));
  EXPECT_LT(text.find("alpha"), text.find("beta"));
  json parsed = json::parse(text);
  EXPECT_EQ(parsed["alpha"], "line\nbreak \"quoted\"");
  EXPECT_EQ(parsed["beta"], true);
}

TEST(Serialize, PointAndMetricSchema) {
  json doc = json::parse(point_json(lorentzian_metric(3),
                                    make_point({1, 2, 3, 4}))
                             .dump(2));
  EXPECT_EQ(doc["signature"]["neg"], 1);
  EXPECT_EQ(doc["signature"]["pos"], 3);
  EXPECT_EQ(doc["coords"].size(), 4u);
  EXPECT_EQ(doc["lifted"], false);
}

TEST(Serialize, FieldSchema) {
  json doc = json::parse(to_json(boost_field(1, 3)).dump());
  EXPECT_EQ(doc["d"], 4);
  EXPECT_EQ(doc["label"], "boost");
  EXPECT_EQ(doc["a"].size(), 4u);
  EXPECT_EQ(doc["omega"].size(), 4u);
  EXPECT_EQ(doc["omega"][0][1], 1.0);
  EXPECT_EQ(doc["omega"][1][0], 1.0);
}

TEST(Serialize, GeneratorSchema) {
  json doc = json::parse(to_json(translation_generator(2, 3)).dump());
  EXPECT_EQ(doc["lifted"], true);
  EXPECT_EQ(doc["label"], "trans:2");
  EXPECT_EQ(doc["matrix"][1][3], 1.0);
  EXPECT_EQ(doc["metric"]["signature"]["neg"], 0);
}

TEST(Serialize, GroupElementCarriesDeterminant) {
  json doc = json::parse(to_json(expm(rotation_generator(1, 2, 3), 0.5)).dump());
  EXPECT_TRUE(doc.contains("det"));
  EXPECT_NEAR(doc["det"].get<double>(), 1.0, 1e-12);
  EXPECT_EQ(doc["lifted"], false);
}

TEST(Serialize, StructureConstantsSchema) {
  StructureConstants sc = structure_constants(so3_cyclic_basis());
  json doc = json::parse(to_json(sc).dump());
  ASSERT_EQ(doc["labels"].size(), 3u);
  // c[i][j][k] = c^k_ij; [tau_1, tau_2] = tau_3
  EXPECT_EQ(doc["c"][0][1][2], 1.0);
  EXPECT_EQ(doc["c"][1][0][2], -1.0);
}

TEST(JsonWriter, NonFiniteValuesBecomeNull) {
  EXPECT_EQ(JsonValue(std::numeric_limits<double>::quiet_NaN()).dump(), "null");
  EXPECT_EQ(JsonValue(std::numeric_limits<double>::infinity()).dump(), "null");
}
