#include <gtest/gtest.h>

#include "wittmod/errors.hpp"
#include "wittmod/serialize.hpp"

using namespace wittmod;
using nlohmann::json;

TEST(Descriptor, OmegaRoundTrip) {
  const OmegaModule m(2, Scalar(1, 2), CVec{2, Scalar(-3, 4)});
  const auto j = to_json(m);
  EXPECT_EQ(j.dump(), R"({"family":"omega","n":2,"b":"1/2","lambda":["2","-3/4"]})");
  EXPECT_EQ(std::get<OmegaModule>(module_from_json(json::parse(j.dump()))), m);
}

TEST(Descriptor, WeightRoundTrip) {
  const WeightModule m(3, 2, CVec{Scalar(1, 2), 0, 1}, 4);
  const auto j = to_json(ModuleDescriptor(m));
  EXPECT_EQ(j.dump(), R"({"family":"weight","n":3,"b":"2","alpha":["1/2","0","1"],"N":4})");
  EXPECT_EQ(std::get<WeightModule>(module_from_json(json::parse(j.dump()))), m);
}

TEST(Descriptor, IntegerScalarsAccepted) {
  const auto d = module_from_json(json::parse(R"({"family":"omega","n":2,"b":1,"lambda":[2,"1/3"]})"));
  EXPECT_EQ(std::get<OmegaModule>(d), OmegaModule(2, 1, CVec{2, Scalar(1, 3)}));
}

TEST(Descriptor, Malformed) {
  EXPECT_THROW(module_from_json(json::parse(R"([1,2])")), ParseError);
  EXPECT_THROW(module_from_json(json::parse(R"({"family":"omega","n":2,"lambda":[1,1]})")), ParseError);
  EXPECT_THROW(module_from_json(json::parse(R"({"family":"lie","n":2,"b":"0"})")), ParseError);
  EXPECT_THROW(module_from_json(json::parse(R"({"family":"omega","n":0,"b":"0","lambda":[]})")), ParseError);
  EXPECT_THROW(module_from_json(json::parse(R"({"family":"omega","n":2,"b":0.5,"lambda":[1,1]})")), ParseError);
  EXPECT_THROW(module_from_json(json::parse(R"({"family":7,"n":2,"b":"0"})")), ParseError);
  EXPECT_THROW(module_from_json(json::parse(R"({"family":"omega","n":2,"b":"0","lambda":[1,0]})")), DomainError);
  EXPECT_THROW(module_from_json(json::parse(R"({"family":"omega","n":2,"b":"0","lambda":[1]})")), DimensionError);
}
