// Copyright 2026 The opent Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cstring>

#include "opent/io.hpp"
#include "opent/random.hpp"

using namespace opent;

TEST(Io, MatrixRoundTripIsExact) {
  Rng rng(1);
  const CMatrix square = random_hermitian(rng, 4).matrix();
  EXPECT_EQ(io::matrix_from_json(io::Json::parse(io::to_json(square).dump())), square);
  const CMatrix rect = random_ginibre(rng, 3, 2);
  const auto j = io::to_json(rect);
  EXPECT_FALSE(j.contains("dim"));
  EXPECT_EQ(io::matrix_from_json(io::Json::parse(j.dump())), rect);
}

TEST(Io, MatrixRejects) {
  EXPECT_THROW((void)io::matrix_from_json(io::Json::parse(R"({"dim": 2, "re": [[1]]})")),
               FormatError);
  EXPECT_THROW((void)io::matrix_from_json(io::Json::parse(R"({"re": [[1]], "im": [[0]]})")),
               FormatError);
  const auto skew = io::Json::parse(R"({"dim": 2, "re": [[1, 2], [0, 1]], "im": [[0, 0], [0, 0]]})");
  EXPECT_THROW((void)io::hermitian_from_json(skew), Error);
  const auto neg = io::Json::parse(R"({"dim": 1, "re": [[-1]], "im": [[0]]})");
  EXPECT_THROW((void)io::pd_from_json(neg), Error);
}

TEST(Io, FieldAndMapRoundTrip) {
  Rng rng(2);
  const auto f = random_resolution(3, 3, 5);
  const auto g = io::field_from_json(io::Json::parse(io::to_json(f).dump()));
  ASSERT_EQ(g.size(), f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    EXPECT_EQ(g.weight(i), f.weight(i));
    EXPECT_EQ(g[i].matrix(), f[i].matrix());
  }
  const auto p = PositiveLinearMap::random_normalized(rng, 4, 3, 2);
  const auto q = io::map_from_json(io::Json::parse(io::to_json(p).dump()));
  ASSERT_EQ(q.kraus().size(), p.kraus().size());
  for (std::size_t i = 0; i < p.kraus().size(); ++i) EXPECT_EQ(q.kraus()[i], p.kraus()[i]);
}

TEST(Io, InstanceRoundTripRechecksToSameMargin) {
  for (auto id : kAllTheorems) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const auto inst = random_instance(id, 3, 2, seed, ScalarFunction::power(0.5), 0.5);
      const auto text = io::to_json(inst).dump();
      const auto back = io::instance_from_string(text);
      EXPECT_EQ(io::to_json(back).dump(), text) << to_string(id);
      const auto a = check(id, inst), b = check(id, back);
      EXPECT_EQ(std::memcmp(&a.margin, &b.margin, sizeof(double)), 0) << to_string(id);
      EXPECT_EQ(a.holds, b.holds);
    }
  }
}

TEST(Io, MalformedInstances) {
  for (const char* s : {"", "{", "[]", "{}", R"({"theorem": "NOPE"})",
                        R"({"theorem": "ENTROPY_LOWER", "fa": 3})"})
    EXPECT_THROW((void)io::instance_from_string(s), Error) << s;
  EXPECT_THROW((void)io::instance_from_string("{"), FormatError);
}

TEST(Io, ReportShape) {
  CampaignConfig c;
  c.trials = 3;
  c.threads = 1;
  c.theorems = {TheoremId::entropy_lower, TheoremId::info_ineq};
  const auto r = campaign(c);
  const auto j = io::to_json(r);
  EXPECT_EQ(j["results"].size(), 2u);
  EXPECT_TRUE(j["failures"].is_array());
  EXPECT_EQ(j["config"]["seed"], 42);
  const auto csv = io::to_csv(r);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 1 + 2 * 3);  // header + rows
}
