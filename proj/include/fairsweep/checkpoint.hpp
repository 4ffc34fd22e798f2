#pragma once

#include <string>

#include <json.hpp>

#include "fairsweep/methods.hpp"

namespace fairsweep {

std::string base64_encode(const void* data, std::size_t size);
std::vector<unsigned char> base64_decode(const std::string& text);

// Checkpoint file: a JSON object with the layer shapes, training metadata and
// a base64 little-endian f32 parameter blob (plus the INLP projection when
// present).
void save_checkpoint(const TrainedModel& model, const std::string& path,
                     const nlohmann::json& meta = nlohmann::json::object());
TrainedModel load_checkpoint(const std::string& path, nlohmann::json* meta = nullptr);

}  // namespace fairsweep
