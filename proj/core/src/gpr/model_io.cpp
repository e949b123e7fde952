#include "nowcast/gpr/model_io.hpp"

#include <cmath>
#include <string>

#include <json.hpp>

#include "nowcast/error.hpp"

namespace nowcast::gpr {

namespace {

using nlohmann::json;

constexpr const char* kFormatName = "nowcast-gpr-model";
constexpr const char* kSource = "model.json";

std::vector<double> to_vector(const Eigen::VectorXd& v) {
  return {v.data(), v.data() + v.size()};
}

}  // namespace

std::string model_to_json(const GprModel& model) {
  const TrainingSet& training = model.training();
  json inputs = json::array();
  for (Eigen::Index r = 0; r < training.inputs.rows(); ++r) {
    const auto row = row_span(training.inputs, r);
    inputs.push_back(std::vector<double>(row.begin(), row.end()));
  }

  json doc;
  doc["format"] = kFormatName;
  doc["version"] = kModelFormatVersion;
  doc["kernel"] = {{"sigma_sq", model.kernel().sigma_sq},
                   {"theta", model.kernel().theta},
                   {"jitter", model.kernel().jitter}};
  doc["basis"] = std::string(to_string(model.basis().degree()));
  doc["beta"] = to_vector(model.beta());
  doc["training"] = {{"inputs", std::move(inputs)}, {"targets", to_vector(training.targets)}};
  return doc.dump(2) + "\n";
}

GprModel model_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(kSource, 0, std::string("invalid JSON: ") + e.what());
  }

  try {
    if (doc.at("format").get<std::string>() != kFormatName) {
      throw ParseError(kSource, 0, "not a nowcast model document");
    }
    const int version = doc.at("version").get<int>();
    if (version != kModelFormatVersion) {
      throw ParseError(kSource, 0, "unsupported model version " + std::to_string(version));
    }

    Kernel kernel;
    kernel.sigma_sq = doc.at("kernel").at("sigma_sq").get<double>();
    kernel.theta = doc.at("kernel").at("theta").get<std::vector<double>>();
    kernel.jitter = doc.at("kernel").at("jitter").get<double>();

    const auto rows = doc.at("training").at("inputs").get<std::vector<std::vector<double>>>();
    const auto targets = doc.at("training").at("targets").get<std::vector<double>>();
    const auto stored_beta = doc.at("beta").get<std::vector<double>>();
    if (rows.empty()) throw ParseError(kSource, 0, "model has no training rows");

    TrainingSet training;
    const auto dim = static_cast<Eigen::Index>(rows.front().size());
    training.inputs.resize(static_cast<Eigen::Index>(rows.size()), dim);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (static_cast<Eigen::Index>(rows[r].size()) != dim) {
        throw ParseError(kSource, 0, "ragged training input rows");
      }
      for (Eigen::Index c = 0; c < dim; ++c) training.inputs(static_cast<Eigen::Index>(r), c) = rows[r][static_cast<std::size_t>(c)];
    }
    training.targets = Eigen::Map<const Eigen::VectorXd>(targets.data(), static_cast<Eigen::Index>(targets.size()));

    const BasisExpansion basis(parse_basis_degree(doc.at("basis").get<std::string>()),
                               static_cast<std::size_t>(dim));
    GprModel model = fit(std::move(training), basis, std::move(kernel));

    if (stored_beta.size() != static_cast<std::size_t>(model.beta().size())) {
      throw IntegrityError("model.json: stored beta has wrong length");
    }
    for (std::size_t i = 0; i < stored_beta.size(); ++i) {
      const double refit = model.beta()[static_cast<Eigen::Index>(i)];
      if (std::abs(refit - stored_beta[i]) > 1e-8 * std::max(1.0, std::abs(stored_beta[i]))) {
        throw IntegrityError("model.json: refitted coefficients disagree with stored beta");
      }
    }
    return model;
  } catch (const json::exception& e) {
    throw ParseError(kSource, 0, std::string("malformed model document: ") + e.what());
  } catch (const ConfigError& e) {
    throw ParseError(kSource, 0, e.what());
  }
}

}  // namespace nowcast::gpr
