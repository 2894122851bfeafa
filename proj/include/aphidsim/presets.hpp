#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "aphidsim/outcomes.hpp"
#include "aphidsim/scenario.hpp"

namespace aphidsim {

// Built-in scenarios for the published figure panels. Panels that share
// initial densities (1C/1D, 1E/1F, 2A/2B, 2C/2D, 2E/2F) are separate presets
// with identical scenarios. Figure 1 switches obviation off (k_r = 0).
struct FigurePreset {
  std::string id;  // "1A" .. "3E"
  Scenario scenario;
  OutcomeClass expected;
  std::string notes;
};

const std::vector<FigurePreset>& figure_presets();

// nullptr when the id is unknown.
const FigurePreset* find_preset(std::string_view id);

}  // namespace aphidsim
