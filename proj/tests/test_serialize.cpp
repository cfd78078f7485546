// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.

#include "chanlab/channel_spec.hpp"
#include "chanlab/random.hpp"
#include "chanlab/serialize.hpp"

#include <gtest/gtest.h>

using namespace chanlab;

TEST(Json, BipartiteRoundTrip) {
  Rng rng(1);
  const BipartiteState e(2, 3, haar_vector(6, rng));
  const Json j = to_json(e);
  EXPECT_EQ(j["dimH"], 2);
  EXPECT_EQ(j["vec"].size(), 6u);
  const auto back = bipartite_state_from_json(Json::parse(j.dump()));
  EXPECT_EQ(back.vec(), e.vec());
}

TEST(Json, DensityRoundTrip) {
  Rng rng(2);
  const DensityMatrix rho = random_mixed_state(3, 3, rng);
  const auto back = density_from_json(Json::parse(to_json(rho).dump()));
  EXPECT_EQ(back.matrix(), rho.matrix());
}

TEST(Json, ChannelRoundTrip) {
  const Channel c = random_channel(2, 3, 5);
  const Channel back = channel_from_json(Json::parse(to_json(c).dump()));
  ASSERT_EQ(back.kraus().size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(back.kraus()[i], c.kraus()[i]);
}

TEST(Json, StateVariantDispatch) {
  const Json pure = Json::parse(R"({"dimH":1,"dimK":2,"vec":[[1,0],[0,0]]})");
  EXPECT_TRUE(std::holds_alternative<BipartiteState>(state_from_json(pure)));
  const Json mixed = Json::parse(R"({"dim":2,"mat":[[0.5,0],[0,0],[0,0],[0.5,0]]})");
  EXPECT_TRUE(std::holds_alternative<DensityMatrix>(state_from_json(mixed)));
}

TEST(Json, Errors) {
  EXPECT_THROW(state_from_json(Json::parse("[]")), ParseError);
  EXPECT_THROW(state_from_json(Json::parse(R"({"dim":2})")), ParseError);
  EXPECT_THROW(density_from_json(Json::parse(R"({"dim":2,"mat":[[1,0]]})")), ParseError);
  EXPECT_THROW(density_from_json(Json::parse(R"({"dim":0,"mat":[]})")), ParseError);
  EXPECT_THROW(density_from_json(Json::parse(R"({"dim":1,"mat":[["a",0]]})")), ParseError);
  // Well-formed but not a state.
  EXPECT_THROW(density_from_json(Json::parse(R"({"dim":1,"mat":[[2,0]]})")), DomainError);
  EXPECT_THROW(load_state_file("/nonexistent/state.json"), ParseError);
}

TEST(Digest, Fnv1aKnownValues) {
  EXPECT_EQ(digest(std::string_view("")), "cbf29ce484222325");
  EXPECT_EQ(digest(std::string_view("a")), "af63dc4c8601ec8c");
  EXPECT_EQ(digest(Json{{"x", 1}}), digest(std::string_view(R"({"x":1})")));
}

TEST(ChannelSpec, IdentityByPointMass) {
  const auto c = parse_channel_spec("phase-damping:n=2,lambda=1,0");
  EXPECT_EQ(c.family, ChannelFamily::PhaseDamping);
  ASSERT_EQ(c.channel.kraus().size(), 1u);
  EXPECT_EQ(c.channel.kraus()[0], Matrix::Identity(2, 2));
}

TEST(ChannelSpec, LambdaInfersDimension) {
  const auto c = parse_channel_spec("phase-damping:lambda=0.4,0.3,0.2,0.1");
  EXPECT_EQ(c.n, 4);
  EXPECT_EQ(c.lambda.size(), 4u);
}

TEST(ChannelSpec, DepolarizingOutOfRangeIsDomainError) {
  EXPECT_THROW(parse_channel_spec("depolarizing:n=2,p=2"), DomainError);
}

TEST(ChannelSpec, UpsilonK) {
  const auto c = parse_channel_spec("upsilon-k:n=3,p=0.5,k=7");
  EXPECT_EQ(c.channel.kraus().size(), 3u);
  EXPECT_TRUE(is_cptp(c.channel));
  EXPECT_EQ(c.k, 7);
}

TEST(ChannelSpec, RandomAndIdentity) {
  const auto r = parse_channel_spec("random:n=3,env=4,seed=42");
  EXPECT_EQ(r.channel.kraus().size(), 4u);
  const auto again = parse_channel_spec("random:n=3,env=4,seed=42");
  EXPECT_EQ(r.channel.kraus()[2], again.channel.kraus()[2]);
  EXPECT_EQ(parse_channel_spec("identity:n=2").channel.kraus()[0], Matrix::Identity(2, 2));
}

TEST(ChannelSpec, ErrorsNameTheKey) {
  auto message = [](const std::string& spec) {
    try {
      parse_channel_spec(spec);
    } catch (const ParseError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_NE(message("depolarizing:n=2,q=0.5").find("'q'"), std::string::npos);
  EXPECT_NE(message("depolarizing:n=2").find("'p'"), std::string::npos);
  EXPECT_NE(message("depolarizing:n=2,p=0.1,p=0.2").find("'p'"), std::string::npos);
  EXPECT_NE(message("depolarizing:n=x,p=0.1").find("'n'"), std::string::npos);
  EXPECT_NE(message("amplitude:n=2").find("amplitude"), std::string::npos);
  EXPECT_NE(message("depolarizing").find("depolarizing"), std::string::npos);
  EXPECT_THROW(parse_channel_spec("depolarizing:n=100,p=0.1"), ParseError);
}
