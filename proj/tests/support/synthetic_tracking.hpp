#pragma once

#include <cstdint>

#include "ldp/tracking.hpp"

namespace ldp::testing {

struct PlantedOptions {
    int objects = 3;
    int frames = 150;
    int occlusion = 6;       // consecutive frames each object is hidden once
    int cost_gap = 20;       // costs are written for frame gaps up to this
    double sigma = 0.0;      // standard deviation of the additive cost noise
    std::uint64_t seed = 1;
};

// Planted sequence: every object is detected in every frame except during
// one occlusion window. Detection indices within a frame are shuffled.
// Same-object pairs cost -1 and other pairs +1 in both channels, plus
// independent Gaussian noise. Labels are the object numbers.
CostTable planted_sequence(const PlantedOptions& options);

}  // namespace ldp::testing
