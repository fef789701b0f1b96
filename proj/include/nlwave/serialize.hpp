#pragma once

#include "json.hpp"
#include "nlwave/multiplier.hpp"
#include "nlwave/torus.hpp"
#include "nlwave/wave.hpp"

namespace nlwave {

/// {dim, box_radius, real_flag, entries: [[[k...], re, im], ...]} with entries
/// in lexicographic order of k.
nlohmann::json field_to_json(const SpectralField& field);
// Missing entries are zero; throws ShapeError on malformed input.
SpectralField field_from_json(const nlohmann::json& j);

/// Field JSON plus {t, order}.
nlohmann::json snapshot_to_json(const SolutionSnapshot& snapshot);
SolutionSnapshot snapshot_from_json(const nlohmann::json& j);

nlohmann::json table_to_json(const MultiplierTable& table);

}  // namespace nlwave
