#pragma once

#include <filesystem>
#include <string>

#include "gjsp/instance.hpp"

namespace gjsp {

// Canonical instance document: JSON object, keys sorted, one key per line,
// tensors as compact nested arrays. Format documented in docs/formats.md.
std::string instance_to_text(const Instance& instance);
Instance instance_from_text(const std::string& text);

void write_instance(const std::filesystem::path& path, const Instance& instance);
Instance read_instance(const std::filesystem::path& path);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& content);

}  // namespace gjsp
