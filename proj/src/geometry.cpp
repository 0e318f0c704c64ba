#include "geoclust/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace geoclust {

namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;

void check_point(const GeoPoint& p) {
    if (!std::isfinite(p.lat) || !std::isfinite(p.lon))
        throw input_error("geodesic: non-finite coordinate");
    if (p.lat < -90.0 || p.lat > 90.0)
        throw input_error("geodesic: latitude out of [-90, 90]");
    if (p.lon < -180.0 || p.lon > 180.0)
        throw input_error("geodesic: longitude out of [-180, 180]");
}

}  // namespace

double geodesic_distance(const GeoPoint& a, const GeoPoint& b, const EarthModel& model) {
    check_point(a);
    check_point(b);
    if (!(model.radius > 0.0)) throw input_error("geodesic: radius must be positive");
    if (a.lat == b.lat && a.lon == b.lon) return 0.0;

    // Wrapping the longitude difference into [-180, 180] keeps the formula
    // exact across the antimeridian: remainder(360, 360) == 0.
    const double dlon = std::remainder(b.lon - a.lon, 360.0) * kDegToRad;
    const double dlat = (b.lat - a.lat) * kDegToRad;
    const double slat = std::sin(0.5 * dlat);
    const double slon = std::sin(0.5 * dlon);
    const double h = slat * slat + std::cos(a.lat * kDegToRad) * std::cos(b.lat * kDegToRad) * slon * slon;
    const double angle = 2.0 * std::asin(std::sqrt(std::min(1.0, h)));
    return model.radius * angle;
}

DissimilarityMatrix geodesic_matrix(const std::vector<GeoPoint>& points, const EarthModel& model) {
    const Index n = static_cast<Index>(points.size());
    if (n < 2) throw input_error("geodesic matrix: need at least 2 points");
    Matrix d = Matrix::Zero(n, n);
    for (Index i = 0; i < n; ++i)
        for (Index j = i + 1; j < n; ++j) {
            const double v = geodesic_distance(points[i], points[j], model);
            d(i, j) = v;
            d(j, i) = v;
        }
    return DissimilarityMatrix(std::move(d));
}

}  // namespace geoclust
