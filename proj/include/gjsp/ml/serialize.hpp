#pragma once

#include <string>

#include "gjsp/ml/models.hpp"

namespace gjsp::ml {

// Versioned JSON. Reals are written in shortest round-trip form, so
// model_from_json(model_to_json(m)) == m and equal models give equal bytes.
std::string model_to_json(const TrainedModel& model);
TrainedModel model_from_json(const std::string& text);  // ParseError, SchemaMismatch

void write_model(const std::string& path, const TrainedModel& model);
TrainedModel read_model(const std::string& path);

}  // namespace gjsp::ml
