#include <gtest/gtest.h>

#include <json.hpp>

#include "nowcast/error.hpp"
#include "nowcast/gpr/model_io.hpp"
#include "support/oracle.hpp"

namespace nowcast::gpr {
namespace {

GprModel sample_model() {
  const auto t = testing::make_training({{0.0, 1.0}, {0.5, -1.0}, {2.0, 0.3}, {-1.2, 0.8}},
                                        {0.25, 1.5, -0.75, 2.0});
  return fit(t, BasisExpansion(BasisDegree::Linear, 2), Kernel{1.3, {0.9, 2.2}, 1e-9});
}

TEST(ModelIo, ReloadPredictsBitIdentically) {
  const GprModel model = sample_model();
  const GprModel reloaded = model_from_json(model_to_json(model));
  EXPECT_EQ(reloaded.kernel().theta, model.kernel().theta);
  EXPECT_EQ(reloaded.kernel().sigma_sq, model.kernel().sigma_sq);
  EXPECT_EQ(reloaded.basis().degree(), BasisDegree::Linear);
  for (double a : {-2.0, 0.1, 3.3}) {
    for (double b : {-0.5, 0.7}) {
      const std::vector<double> x{a, b};
      EXPECT_EQ(model.predict(x).mean, reloaded.predict(x).mean);
      EXPECT_EQ(model.predict(x).variance, reloaded.predict(x).variance);
    }
  }
  EXPECT_EQ(model_to_json(reloaded), model_to_json(model));
}

TEST(ModelIo, DocumentIsVersioned) {
  const auto doc = nlohmann::json::parse(model_to_json(sample_model()));
  EXPECT_EQ(doc.at("version").get<int>(), kModelFormatVersion);
  EXPECT_EQ(doc.at("basis").get<std::string>(), "linear");
  EXPECT_EQ(doc.at("training").at("targets").size(), 4u);
}

TEST(ModelIo, RejectsUnsupportedVersion) {
  auto doc = nlohmann::json::parse(model_to_json(sample_model()));
  doc["version"] = kModelFormatVersion + 1;
  EXPECT_THROW(model_from_json(doc.dump()), ParseError);
}

TEST(ModelIo, RejectsMalformedDocuments) {
  EXPECT_THROW(model_from_json("{not json"), ParseError);
  EXPECT_THROW(model_from_json("{}"), ParseError);
  auto doc = nlohmann::json::parse(model_to_json(sample_model()));
  doc["basis"] = "cubic";
  EXPECT_THROW(model_from_json(doc.dump()), ParseError);
}

TEST(ModelIo, TamperedCoefficientsAreDetected) {
  auto doc = nlohmann::json::parse(model_to_json(sample_model()));
  doc["beta"][0] = doc["beta"][0].get<double>() + 1.0;
  EXPECT_THROW(model_from_json(doc.dump()), IntegrityError);
}

}  // namespace
}  // namespace nowcast::gpr
