#pragma once

namespace bss {

struct GeoPoint {
    double lat = 0.0;  // degrees, WGS84, [-90, 90]
    double lon = 0.0;  // degrees, WGS84, [-180, 180]

    bool operator==(const GeoPoint&) const = default;
};

bool valid_point(const GeoPoint& p);

// Straight-line (great-circle) distance in meters. Symmetric, zero on
// identical points.
double distance_m(const GeoPoint& a, const GeoPoint& b);

// Walking/cycling speeds. The velocity factor discounts both base speeds to
// account for straight-line movement being shorter than street routes.
struct MobilityProfile {
    double walk_speed_mps = 1.4;
    double bike_speed_mps = 4.0;
    double velocity_factor = 0.614;

    double effective_walk_mps() const { return walk_speed_mps * velocity_factor; }
    double effective_bike_mps() const { return bike_speed_mps * velocity_factor; }
};

double walk_time_s(const GeoPoint& from, const GeoPoint& to, const MobilityProfile& p);
double bike_time_s(const GeoPoint& from, const GeoPoint& to, const MobilityProfile& p);

// Displace a point by east/north meters on the local tangent plane.
// Good to ~1e-5 relative error at city scale, which is all we need for
// placing users around stations.
GeoPoint offset_m(const GeoPoint& origin, double east_m, double north_m);

}  // namespace bss
