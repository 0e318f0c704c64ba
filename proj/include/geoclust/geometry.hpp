#pragma once

#include <vector>

#include "geoclust/dissimilarity.hpp"
#include "geoclust/types.hpp"

namespace geoclust {

/// Position on the sphere in decimal degrees.
struct GeoPoint {
    double lat = 0.0;  // [-90, 90]
    double lon = 0.0;  // [-180, 180]
};

/// Spherical Earth model; radius in kilometers (mean Earth radius by default).
struct EarthModel {
    double radius = 6371.0088;
};

/// Great-circle (haversine) distance in kilometers. Exact for the identity
/// and the -180/180 longitude seam, symmetric in its arguments, and bounded
/// by pi * radius.
double geodesic_distance(const GeoPoint& a, const GeoPoint& b, const EarthModel& model = {});

/// Pairwise geodesic distances for n >= 2 points.
DissimilarityMatrix geodesic_matrix(const std::vector<GeoPoint>& points, const EarthModel& model = {});

}  // namespace geoclust
