#include "aphidsim/presets.hpp"

namespace aphidsim {

namespace {

FigurePreset make(std::string id, double x_A0, double x_V0, bool obviation, OutcomeClass expected,
                  std::string notes) {
  Scenario s;
  s.name = "fig" + id;
  s.initial.x_A0 = x_A0;
  s.initial.x_V0 = x_V0;
  s.initial.R0 = 30.0;
  if (!obviation) s.params.k_r = 0.0;
  return FigurePreset{std::move(id), s, expected, std::move(notes)};
}

std::vector<FigurePreset> build() {
  using C = OutcomeClass;
  return {
      make("1A", 20, 0, false, C::BothExtinct, "avirulent below threshold, no virulent: avirulent goes extinct"),
      make("1B", 40, 0, false, C::AvirulentOnly, "avirulent above threshold colonizes without virulent aphids"),
      make("1C", 25, 5, false, C::VirulentOnly, "avirulent goes extinct while virulent reaches a high peak"),
      make("1D", 25, 5, false, C::VirulentOnly, "avirulent goes extinct while virulent reaches a high peak"),
      make("1E", 25, 60, false, C::Coexistence, "facilitation by virulent aphids sustains avirulent; virulent peak higher"),
      make("1F", 25, 60, false, C::Coexistence, "facilitation by virulent aphids sustains avirulent; virulent peak higher"),
      make("1G", 40, 60, false, C::Coexistence, "both persist; virulent peak higher"),
      make("2A", 15, 10, true, C::VirulentOnly, "resistance not suppressed: avirulent extinct early in the season"),
      make("2B", 15, 10, true, C::VirulentOnly, "resistance not suppressed: avirulent extinct early in the season"),
      make("2C", 15, 20, true, C::Coexistence, "obviation lets the avirulent persist"),
      make("2D", 15, 20, true, C::Coexistence, "obviation lets the avirulent persist"),
      make("2E", 15, 50, true, C::Coexistence, "faster obviation, higher avirulent peak"),
      make("2F", 15, 50, true, C::Coexistence, "faster obviation, higher avirulent peak"),
      make("3A", 35, 25, true, C::Coexistence, "both above threshold: coexistence, peaks coincide"),
      make("3B", 50, 5, true, C::Coexistence, "both above threshold: coexistence, peaks coincide"),
      make("3C", 50, 20, true, C::Coexistence, "both above threshold: coexistence, peaks coincide"),
      make("3D", 50, 30, true, C::Coexistence, "both above threshold: coexistence, peaks coincide"),
      make("3E", 50, 50, true, C::Coexistence, "both above threshold: coexistence, peaks coincide"),
  };
}

}  // namespace

const std::vector<FigurePreset>& figure_presets() {
  static const std::vector<FigurePreset> presets = build();
  return presets;
}

const FigurePreset* find_preset(std::string_view id) {
  for (const auto& p : figure_presets())
    if (p.id == id) return &p;
  return nullptr;
}

}  // namespace aphidsim
