#pragma once

#include <string>

namespace orbitdist::embedded {

// data files compiled into the library at build time
const std::string& conway_table();
const std::string& reference_examples_json();

}  // namespace orbitdist::embedded
