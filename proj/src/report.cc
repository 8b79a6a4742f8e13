// Copyright 2026 The tensor-verb Authors.
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

#include "tensorverb/report.h"

#include <fmt/core.h>
#include "json.hpp"

namespace tensorverb {
namespace {

std::size_t display_width(std::string_view text) {
  std::size_t width = 0;
  for (unsigned char c : text) {
    if ((c & 0xc0) != 0x80) ++width;  // count UTF-8 lead bytes only
  }
  return width;
}

std::string pad(std::string_view text, std::size_t width) {
  std::string out(text);
  const std::size_t w = display_width(text);
  if (w < width) out.append(width - w, ' ');
  return out;
}

std::string cell(const std::optional<double>& value) {
  return value ? fmt::format("{:.4f}", *value) : std::string("-");
}

nlohmann::json optional_json(const std::optional<double>& value) {
  return value ? nlohmann::json(*value) : nlohmann::json(nullptr);
}

}  // namespace

std::string format_table(std::span<const EvaluationReport> reports,
                         const std::optional<UpperBound>& upper) {
  constexpr std::size_t kLabel = 18;
  constexpr std::size_t kNumber = 9;
  std::string out;
  out += pad("Model", kLabel) + pad("High", kNumber) + pad("Low", kNumber) +
         pad("rho", kNumber) + pad("scored", kNumber) + "skipped\n";
  for (const auto& r : reports) {
    out += pad(r.model.label(), kLabel);
    out += pad(cell(r.means.high), kNumber);
    out += pad(cell(r.means.low), kNumber);
    out += pad(fmt::format("{:.4f}", r.rho), kNumber);
    out += pad(fmt::format("{}", r.n_scored), kNumber);
    out += fmt::format("{}\n", r.n_skipped);
  }
  if (upper) {
    out += pad("UpperBound", kLabel);
    out += pad(cell(upper->means.high), kNumber);
    out += pad(cell(upper->means.low), kNumber);
    out += fmt::format("{:.4f}\n", upper->rho);
  }
  return out;
}

std::string format_json(std::span<const EvaluationReport> reports,
                        const std::optional<UpperBound>& upper,
                        std::span<const DatasetEntry> dataset) {
  nlohmann::json models = nlohmann::json::array();
  for (const auto& r : reports) {
    nlohmann::json scores = nlohmann::json::array();
    for (const auto& s : r.scores) {
      const DatasetEntry& e = dataset[s.entry];
      scores.push_back({{"entry", s.entry},
                        {"annotator", e.annotator},
                        {"verb", e.verb},
                        {"subject", e.subject},
                        {"object", e.object},
                        {"landmark", e.landmark},
                        {"human_score", e.human_score},
                        {"band", band_name(e.band)},
                        {"similarity", s.model_similarity},
                        {"degenerate", s.degenerate}});
    }
    nlohmann::json skipped = nlohmann::json::array();
    for (const auto& s : r.skipped) {
      skipped.push_back({{"entry", s.entry}, {"reason", s.reason}});
    }
    nlohmann::json model = {{"model", r.model.id()},
                            {"label", r.model.label()},
                            {"rho", r.rho},
                            {"mean_high", optional_json(r.means.high)},
                            {"mean_low", optional_json(r.means.low)},
                            {"n_scored", r.n_scored},
                            {"n_skipped", r.n_skipped},
                            {"n_degenerate", r.n_degenerate},
                            {"n_observations", r.n_observations},
                            {"scores", std::move(scores)},
                            {"skipped", std::move(skipped)}};
    if (const auto& method = r.model.matrix_method()) {
      model["matrix_method"] = std::string(method_name(*method));
    }
    models.push_back(std::move(model));
  }
  nlohmann::json doc = {{"models", std::move(models)}};
  if (upper) {
    doc["upper_bound"] = {{"rho", upper->rho},
                          {"mean_high", optional_json(upper->means.high)},
                          {"mean_low", optional_json(upper->means.low)},
                          {"annotators", upper->annotators}};
  } else {
    doc["upper_bound"] = nullptr;
  }
  return doc.dump(2) + "\n";
}

}  // namespace tensorverb
