#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

namespace bss {

// One historical trip. Source data is anonymized to the hour, so only the
// pick-up hour is known; there is no return timestamp.
struct TripRecord {
    std::string rent_station_id;
    std::string return_station_id;
    std::string day;  // opaque date label
    int hour = 0;     // 0..23
};

struct HourlyDemand {
    double rents_per_hour = 0.0;
    double returns_per_hour = 0.0;
};

// Expected rental/return attempt rates per station, bucketed by hour of day.
// Queries integrate the piecewise-constant rate over a window given in
// seconds since scenario start; start_hour maps t = 0 to an hour of day.
class DemandTable {
public:
    void set_start_hour(int hour_of_day);
    int start_hour() const { return start_hour_; }

    void ensure_station(const std::string& station_id);
    bool has_station(const std::string& station_id) const;
    std::vector<std::string> station_ids() const;  // sorted

    void add_rents(const std::string& station_id, int hour, double per_hour);
    void add_returns(const std::string& station_id, int hour, double per_hour);
    const std::array<HourlyDemand, 24>* row(const std::string& station_id) const;

    // Expected attempts in [t_a, t_b), t in seconds since scenario start.
    // Throws std::invalid_argument when t_a >= t_b. Unknown stations have
    // zero demand.
    double rent_demand(const std::string& station_id, double t_a_s, double t_b_s) const;
    double return_demand(const std::string& station_id, double t_a_s, double t_b_s) const;

    void write_csv(std::ostream& out) const;
    static DemandTable read_csv(std::istream& in, int start_hour = 0);

private:
    double integrate(const std::string& station_id, double t_a_s, double t_b_s,
                     bool rents) const;

    std::unordered_map<std::string, std::array<HourlyDemand, 24>> rows_;
    int start_hour_ = 0;
};

struct DemandBuildOptions {
    int n_days = 1;
    int start_hour = 0;
    // Returns are attributed to the hour containing rent_hour + this shift
    // (historical data has no return time).
    double return_shift_s = 0.0;
};

struct DemandBuildResult {
    DemandTable table;
    int accepted = 0;
    int rejected_unknown_station = 0;
};

DemandBuildResult build_demand_table(const std::vector<TripRecord>& records,
                                     const std::vector<std::string>& known_station_ids,
                                     const DemandBuildOptions& opts);

std::vector<TripRecord> read_trips_csv(std::istream& in);
void write_trips_csv(std::ostream& out, const std::vector<TripRecord>& trips);

}  // namespace bss
