#pragma once

#include <vector>

#include "warpspace/space.hpp"

namespace warpspace {

// Helpers for evaluating primitive maps between one-axis chartable spaces.
// Circle covers require domain and codomain to share the same coordinate
// range (metric scales may differ; rescaling lives in the descriptors).

bool is_circle_like(const SpaceDescriptor& s);
bool is_line_like(const SpaceDescriptor& s);  // line or interval, possibly scaled

// Coordinate range of a circle-like space (the inner circle's circumference).
double circle_param_range(const SpaceDescriptor& s);

// Metric length per coordinate unit of a one-axis chartable space.
double metric_scale(const SpaceDescriptor& s);

// Coordinate bounds of a one-axis space; line-like without bounds returns
// the fallback.
AxisRange param_range(const SpaceDescriptor& s, AxisRange fallback = {-2.0, 2.0});

// f applied to a domain coordinate, in codomain coordinates.
double apply_map(const MapDescriptor& f, const SpaceDescriptor& dom,
                 const SpaceDescriptor& cod, double x);

// Preimage coordinates of a codomain point (the covering fiber).
std::vector<double> map_fibers(const MapDescriptor& f, const SpaceDescriptor& dom,
                               const SpaceDescriptor& cod, double y);

// Bijectivity on chart parameters.
bool map_is_bijective(const MapDescriptor& f, const SpaceDescriptor& dom,
                      const SpaceDescriptor& cod);

// Supported covering map (surjective with discrete uniform fibers).
bool map_is_covering(const MapDescriptor& f, const SpaceDescriptor& dom,
                     const SpaceDescriptor& cod);

} // namespace warpspace
