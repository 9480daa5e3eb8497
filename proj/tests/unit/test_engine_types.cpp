// Copyright 2026 The odr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "json.hpp"
#include "odr/engine/action.hpp"
#include "odr/engine/data.hpp"
#include "odr/engine/draw.hpp"
#include "odr/engine/target.hpp"
#include "odr/rng.hpp"
#include "odr_gtest.hpp"

namespace odr {
namespace {

// ---- data containers ------------------------------------------------------

TEST(Vector, RejectsNonFinite) {
  EXPECT_NO_THROW(Vector({1.0, -2.0}));
  EXPECT_ODR_ERROR(Vector({1.0, NAN}), NonFinite);
  EXPECT_ODR_ERROR(Vector({INFINITY}), NonFinite);
}

TEST(Matrix, RowsMustShareWidth) {
  const Matrix m = Matrix::from_rows({{1, 2}, {3, 4}, {5, 6}});
  EXPECT_EQ(m.rows(), 3u);
  EXPECT_EQ(m(2, 1), 6.0);
  EXPECT_ODR_ERROR(Matrix::from_rows({{1, 2}, {3}}), DimensionMismatch);
}

TEST(Timeseries, NeedsAtLeastOneChannel) {
  EXPECT_EQ(Timeseries(Matrix::from_rows({{1}, {2}})).timesteps(), 2u);
  EXPECT_THROW(Timeseries(Matrix(2, 0, {})), Error);
}

TEST(Video, FramesMustBeHomogeneous) {
  EXPECT_EQ(Video({Image::blank(2, 2, 1), Image::blank(2, 2, 1)}).length(), 2u);
  EXPECT_THROW(Video({}), Error);
  EXPECT_THROW(Video({Image::blank(2, 2, 1), Image::blank(2, 2, 3)}), Error);
}

TEST(PointCloud, NeedsThreeColumns) {
  EXPECT_NO_THROW(PointCloud(Matrix::from_rows({{0, 0, 0, 1}})));
  EXPECT_THROW(PointCloud(Matrix::from_rows({{0, 0}})), Error);
}

TEST(PointCloudWithCalibration, ProjectionMustBeThreeByFour) {
  const PointCloud cloud(Matrix::from_rows({{1, 2, 3}}));
  std::vector<std::vector<double>> p(3, std::vector<double>(4, 0.0));
  EXPECT_NO_THROW(PointCloudWithCalibration(cloud, p));
  p[1].pop_back();
  EXPECT_THROW(PointCloudWithCalibration(cloud, p), Error);
  EXPECT_THROW(PointCloudWithCalibration(cloud, std::vector<std::vector<double>>(4, std::vector<double>(4))),
               Error);
}

// ---- Action ---------------------------------------------------------------

TEST(Action, ValidateAcceptsInteriorAndBoundary) {
  const std::vector<double> one{0.0};
  EXPECT_EQ(Action::validate(one).axes(), 1u);
  const std::vector<double> four{1.0, -1.0, 0.5, -0.25};
  const Action a = action_validate(four);
  EXPECT_EQ(a.axes(), 4u);
  EXPECT_EQ(a[3], -0.25);
}

TEST(Action, ValidateNeverClamps) {
  EXPECT_ODR_ERROR(action_validate(std::vector<double>{1.5, 0.0}), ComponentOutOfRange);
  EXPECT_ODR_ERROR(action_validate(std::vector<double>{NAN}), ComponentOutOfRange);
  EXPECT_ODR_ERROR(action_validate(std::vector<double>{}), AxisCountInvalid);
  EXPECT_ODR_ERROR(action_validate(std::vector<double>(5, 0.0)), AxisCountInvalid);
}

TEST(Action, ClampBringsValuesIntoRange) {
  const Action a = action_clamp(std::vector<double>{1.5, -2.0});
  EXPECT_EQ(a[0], 1.0);
  EXPECT_EQ(a[1], -1.0);
  EXPECT_EQ(action_clamp(std::vector<double>{0.3})[0], 0.3);
  EXPECT_ODR_ERROR(action_clamp(std::vector<double>{NAN}), NonFinite);
  EXPECT_ODR_ERROR(action_clamp(std::vector<double>(5, 0.0)), AxisCountInvalid);
}

TEST(Action, ClampPropertyOverRandomInputs) {
  Rng rng(17);
  for (int i = 0; i < 1000; ++i) {
    std::vector<double> v(1 + rng.below(4));
    for (auto& x : v) x = (rng.uniform() - 0.5) * 10.0;
    const Action a = action_clamp(v);
    for (double x : a.values()) {
      EXPECT_GE(x, -1.0);
      EXPECT_LE(x, 1.0);
    }
  }
}

// ---- targets --------------------------------------------------------------

TEST(Targets, InvariantsAreEnforced) {
  EXPECT_ODR_ERROR(Category(-1), InvalidArgument);
  EXPECT_ODR_ERROR(Category(0, std::nullopt, 1.5), ValueOutOfRange);
  EXPECT_ODR_ERROR(BoundingBox(Category(0), 0, 0, -1, 1), InvalidArgument);
  EXPECT_ODR_ERROR(BoundingBox3D(Category(0), {0, 0, 0}, {1, 1, 1}, -std::numbers::pi), InvalidArgument);
  EXPECT_NO_THROW(BoundingBox3D(Category(0), {0, 0, 0}, {1, 1, 1}, std::numbers::pi));
  EXPECT_ODR_ERROR(Pose({{-1.0, 2.0}}), InvalidArgument);
  EXPECT_ODR_ERROR(Heatmap(2, 2, 2, {0, 1, 0}), LengthMismatch);
  EXPECT_ODR_ERROR(Heatmap(1, 2, 2, {0, 2}), IndexOutOfRange);
  EXPECT_ODR_ERROR(SpeechCommand(Category(1)), InvalidArgument);
  EXPECT_ODR_ERROR(SpeechCommand(Category(1, "")), InvalidArgument);
  EXPECT_ODR_ERROR(Bearing({1.0, 1.0, 0.0}), InvalidArgument);
}

TEST(Targets, PoseSentinelMarksAbsence) {
  const Pose p({{1.0, 2.0}, Pose::kAbsent});
  EXPECT_TRUE(p.present(0));
  EXPECT_FALSE(p.present(1));
}

TEST(TargetToString, FixedTemplates) {
  EXPECT_EQ(target_to_string(Category(3, "person", 0.9)), "Category(3 'person', conf=0.900)");
  EXPECT_EQ(target_to_string(Category(3)), "Category(3)");
  const auto pose = target_to_string(Pose({{1.0, 2.0}, Pose::kAbsent}));
  EXPECT_EQ(pose, "Pose([(1.000, 2.000), absent])");
  const Action act = action_validate(std::vector<double>{0.5, -0.5});
  EXPECT_EQ(target_to_string(BoundingBox(Category(1, "dog"), 1, 2, 3, 4, 0.25, act)),
            "BoundingBox(1 'dog', x=1.000, y=2.000, w=3.000, h=4.000, conf=0.250, action=[0.500, -0.500])");
  EXPECT_EQ(target_to_string(Heatmap(1, 2, 3, {0, 2})), "Heatmap(1x2, classes=3)");
  EXPECT_EQ(target_to_string(SpeechCommand(Category(2, "stop"))), "SpeechCommand(2 'stop')");
  EXPECT_EQ(target_to_string(Bearing({0.0, 0.0, 1.0})), "Bearing(dir=(0.000, 0.000, 1.000))");
}

TEST(TargetToString, Deterministic) {
  const AnyTarget t = BoundingBox3D(Category(4), {1, 2, 3}, {4, 5, 6}, 0.5, 0.75);
  EXPECT_EQ(target_to_string(t), target_to_string(t));
}

TEST(Wire, CategorySchema) {
  EXPECT_EQ(target_to_wire(Category(3, std::nullopt, 0.9)), R"({"type":"category","index":3,"confidence":0.9})");
}

TEST(Wire, UnknownTagAndSchemaViolations) {
  EXPECT_ODR_ERROR(target_from_wire(R"({"type":"unicorn"})"), UnknownTypeTag);
  EXPECT_ODR_ERROR(target_from_wire(R"({"index":3})"), SchemaViolation);
  EXPECT_ODR_ERROR(target_from_wire(R"({"type":"category","index":3,"extra":1})"), SchemaViolation);
  EXPECT_ODR_ERROR(target_from_wire(R"({"type":"category","index":-3})"), SchemaViolation);
  EXPECT_ODR_ERROR(target_from_wire("not json"), SchemaViolation);
  EXPECT_ODR_ERROR(target_from_wire(R"({"type":"category","index":1,"confidence":2})"), SchemaViolation);
}

TEST(Wire, BoxWithActionRoundTrips) {
  const AnyTarget box =
      BoundingBox(Category(2, "car"), 1.5, 2.5, 3, 4, 0.5, action_validate(std::vector<double>{0.5, -0.5}));
  EXPECT_EQ(target_from_wire(target_to_wire(box)), box);
}

std::optional<double> maybe_conf(Rng& rng) {
  if (rng.below(2) == 0) return std::nullopt;
  return rng.uniform();
}

std::optional<Action> maybe_action(Rng& rng) {
  if (rng.below(2) == 0) return std::nullopt;
  std::vector<double> v(1 + rng.below(4));
  for (auto& x : v) x = rng.uniform() * 2.0 - 1.0;
  return action_validate(v);
}

Category random_category(Rng& rng) {
  std::optional<std::string> desc;
  if (rng.below(2) == 0) desc = "c" + std::to_string(rng.below(100));
  return Category(static_cast<std::int64_t>(rng.below(50)), desc, maybe_conf(rng), maybe_action(rng));
}

AnyTarget random_target(Rng& rng) {
  switch (rng.below(7)) {
    case 0:
      return random_category(rng);
    case 1:
      return BoundingBox(random_category(rng), rng.uniform() * 100, rng.uniform() * 100, rng.uniform() * 50,
                         rng.uniform() * 50, maybe_conf(rng), maybe_action(rng));
    case 2:
      return BoundingBox3D(random_category(rng), {rng.uniform(), -rng.uniform(), 3.0},
                           {rng.uniform(), rng.uniform(), rng.uniform()}, std::numbers::pi - rng.uniform() * 6.0,
                           maybe_conf(rng), maybe_action(rng));
    case 3: {
      std::vector<Keypoint> kps(1 + rng.below(5));
      for (auto& k : kps) k = rng.below(3) == 0 ? Pose::kAbsent : Keypoint{rng.uniform() * 9, rng.uniform() * 9};
      return Pose(kps, maybe_conf(rng), maybe_action(rng));
    }
    case 4: {
      const std::size_t h = 1 + rng.below(4);
      const std::size_t w = 1 + rng.below(4);
      std::vector<std::uint32_t> ids(h * w);
      for (auto& id : ids) id = static_cast<std::uint32_t>(rng.below(5));
      return Heatmap(h, w, 5, ids, maybe_conf(rng), maybe_action(rng));
    }
    case 5:
      return SpeechCommand(Category(static_cast<std::int64_t>(rng.below(9)), "go"), maybe_conf(rng),
                           maybe_action(rng));
    default: {
      const double z = rng.uniform() * 2 - 1;
      const double az = rng.uniform() * 6.28;
      const double r = std::sqrt(1 - z * z);
      return Bearing({r * std::cos(az), r * std::sin(az), z}, maybe_conf(rng), maybe_action(rng));
    }
  }
}

TEST(Wire, RandomizedRoundTripEveryType) {
  Rng rng(123);
  for (int i = 0; i < 2000; ++i) {
    const AnyTarget t = random_target(rng);
    const std::string wire = target_to_wire(t);
    ASSERT_EQ(target_from_wire(wire), t) << wire;
  }
}

TEST(Wire, FieldNamesAreLowercase) {
  const auto j = nlohmann::json::parse(target_to_wire(BoundingBox(Category(1), 0, 0, 1, 1)));
  for (const auto& [key, value] : j.items()) {
    for (char ch : key) EXPECT_FALSE(std::isupper(static_cast<unsigned char>(ch))) << key;
  }
  EXPECT_EQ(j["type"], "bounding_box");
}

// ---- iou ------------------------------------------------------------------

TEST(Iou, HandComputedOverlap) {
  const BoundingBox a(Category(0), 0, 0, 2, 2);
  const BoundingBox b(Category(0), 1, 1, 2, 2);
  EXPECT_NEAR(iou(a, b), 1.0 / 7.0, 1e-15);
  EXPECT_EQ(iou(a, a), 1.0);
  EXPECT_EQ(iou(BoundingBox(Category(0), 0, 0, 1, 1), BoundingBox(Category(0), 5, 5, 1, 1)), 0.0);
  EXPECT_EQ(iou(BoundingBox(Category(0), 0, 0, 0, 0), BoundingBox(Category(0), 0, 0, 0, 0)), 0.0);
}

TEST(Iou, SymmetricAndBounded) {
  Rng rng(9);
  for (int i = 0; i < 1000; ++i) {
    const BoundingBox a(Category(0), rng.uniform() * 10, rng.uniform() * 10, rng.uniform() * 5, rng.uniform() * 5);
    const BoundingBox b(Category(0), rng.uniform() * 10, rng.uniform() * 10, rng.uniform() * 5, rng.uniform() * 5);
    const double v = iou(a, b);
    EXPECT_EQ(v, iou(b, a));
    EXPECT_GE(v, 0.0);
    EXPECT_LE(v, 1.0);
    if (a.w > 0 && a.h > 0) {
      EXPECT_NEAR(iou(a, a), 1.0, 1e-12);
    }
  }
}

// ---- drawing --------------------------------------------------------------

TEST(Draw, EmptyBoxListIsIdentity) {
  const Image img(2, 2, 3, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12});
  EXPECT_EQ(draw_bounding_boxes(img, {}, {}), img);
}

TEST(Draw, PaintsExactlyTheBorder) {
  const Image black = Image::blank(4, 4, 3);
  const std::vector<BoundingBox> boxes{BoundingBox(Category(0), 0, 0, 2, 2)};
  const std::vector<std::string> names{"a"};
  const Image out = draw_bounding_boxes(black, boxes, names);
  int painted = 0;
  for (std::size_t y = 0; y < 4; ++y) {
    for (std::size_t x = 0; x < 4; ++x) {
      const bool border = x <= 2 && y <= 2 && (x == 0 || x == 2 || y == 0 || y == 2);
      const Rgb px{out.at(0, y, x), out.at(1, y, x), out.at(2, y, x)};
      if (border) {
        EXPECT_EQ(px, kBoxPalette[0]) << x << "," << y;
        ++painted;
      } else {
        EXPECT_EQ(px, (Rgb{0, 0, 0})) << x << "," << y;
      }
    }
  }
  EXPECT_EQ(painted, 8);
  EXPECT_EQ(black, Image::blank(4, 4, 3));
}

TEST(Draw, PaletteByIndexModEightAndGrayscale) {
  const Image gray = Image::blank(3, 3, 1);
  std::vector<std::string> names(10, "n");
  const std::vector<BoundingBox> boxes{BoundingBox(Category(9), 0, 0, 2, 2)};
  const Image out = draw_bounding_boxes(gray, boxes, names);
  EXPECT_EQ(out.at(0, 0, 0), palette_gray(kBoxPalette[1]));
  EXPECT_EQ(palette_gray(kBoxPalette[0]), 76);
}

TEST(Draw, IndexBeyondNamesIsRejected) {
  const std::vector<BoundingBox> boxes{BoundingBox(Category(9), 0, 0, 1, 1)};
  const std::vector<std::string> names{"a", "b"};
  EXPECT_ODR_ERROR(draw_bounding_boxes(Image::blank(4, 4, 3), boxes, names), IndexOutOfRange);
}

TEST(Draw, BoxesOutsideImageAreClipped) {
  const Image black = Image::blank(4, 4, 3);
  const std::vector<std::string> names{"a"};
  const std::vector<BoundingBox> far{BoundingBox(Category(0), 1e300, 1e300, 1e300, 1e300)};
  EXPECT_EQ(draw_bounding_boxes(black, far, names), black);
}

}  // namespace
}  // namespace odr
