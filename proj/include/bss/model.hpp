#pragma once

#include <string>

#include "bss/geo.hpp"

namespace bss {

// A dock station. `bikes` is the only field the simulation mutates;
// 0 <= bikes <= capacity holds at all times.
struct Station {
    std::string id;
    GeoPoint location;
    int capacity = 0;
    int bikes = 0;
    bool active = true;

    int slots() const { return capacity - bikes; }
};

struct RentRequest {
    std::string user_id;
    GeoPoint origin;
    double issued_at_s = 0.0;
    double max_walk_m = 0.0;  // remaining walking budget
};

struct ReturnRequest {
    std::string user_id;
    GeoPoint current;
    GeoPoint destination;
    double issued_at_s = 0.0;
};

}  // namespace bss
