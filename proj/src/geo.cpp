#include "bss/geo.hpp"

#include <algorithm>
#include <cmath>

namespace bss {

namespace {
constexpr double kEarthRadiusM = 6371000.0;
constexpr double kPi = 3.14159265358979323846;

double deg2rad(double deg) { return deg * kPi / 180.0; }
}  // namespace

bool valid_point(const GeoPoint& p) {
    return std::isfinite(p.lat) && std::isfinite(p.lon) &&
           p.lat >= -90.0 && p.lat <= 90.0 && p.lon >= -180.0 && p.lon <= 180.0;
}

double distance_m(const GeoPoint& a, const GeoPoint& b) {
    const double sin_dlat = std::sin(deg2rad(b.lat - a.lat) / 2.0);
    const double sin_dlon = std::sin(deg2rad(b.lon - a.lon) / 2.0);
    double h = sin_dlat * sin_dlat +
               std::cos(deg2rad(a.lat)) * std::cos(deg2rad(b.lat)) * sin_dlon * sin_dlon;
    h = std::clamp(h, 0.0, 1.0);
    return 2.0 * kEarthRadiusM * std::asin(std::sqrt(h));
}

double walk_time_s(const GeoPoint& from, const GeoPoint& to, const MobilityProfile& p) {
    return distance_m(from, to) / p.effective_walk_mps();
}

double bike_time_s(const GeoPoint& from, const GeoPoint& to, const MobilityProfile& p) {
    return distance_m(from, to) / p.effective_bike_mps();
}

GeoPoint offset_m(const GeoPoint& origin, double east_m, double north_m) {
    const double m_per_deg_lat = kEarthRadiusM * kPi / 180.0;
    const double m_per_deg_lon = m_per_deg_lat * std::cos(deg2rad(origin.lat));
    return GeoPoint{origin.lat + north_m / m_per_deg_lat,
                    origin.lon + east_m / m_per_deg_lon};
}

}  // namespace bss
