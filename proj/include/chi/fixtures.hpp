#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "chi/simplicial.hpp"

namespace chi {

struct Fixture {
  std::string_view name;
  std::string_view description;
  std::string_view text;  // complex file content
};

const std::vector<Fixture>& fixtures();

// Text of a bundled complex; throws ValidationError for unknown names.
std::string_view fixture_text(std::string_view name);

// Parses a bundled fixture by name, or reads `name` as a file path when no
// fixture matches.
SimplicialComplex load_complex(const std::string& name_or_path);

}  // namespace chi
