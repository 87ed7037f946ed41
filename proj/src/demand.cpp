#include "bss/demand.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "bss/csv.hpp"

namespace bss {

void DemandTable::set_start_hour(int hour_of_day) {
    if (hour_of_day < 0 || hour_of_day > 23)
        throw std::invalid_argument("start_hour must be in 0..23");
    start_hour_ = hour_of_day;
}

void DemandTable::ensure_station(const std::string& station_id) {
    rows_.try_emplace(station_id);
}

bool DemandTable::has_station(const std::string& station_id) const {
    return rows_.count(station_id) > 0;
}

std::vector<std::string> DemandTable::station_ids() const {
    std::vector<std::string> ids;
    ids.reserve(rows_.size());
    for (const auto& [id, row] : rows_) ids.push_back(id);
    std::sort(ids.begin(), ids.end());
    return ids;
}

void DemandTable::add_rents(const std::string& station_id, int hour, double per_hour) {
    rows_[station_id][hour].rents_per_hour += per_hour;
}

void DemandTable::add_returns(const std::string& station_id, int hour, double per_hour) {
    rows_[station_id][hour].returns_per_hour += per_hour;
}

const std::array<HourlyDemand, 24>* DemandTable::row(const std::string& station_id) const {
    auto it = rows_.find(station_id);
    return it == rows_.end() ? nullptr : &it->second;
}

double DemandTable::integrate(const std::string& station_id, double t_a_s, double t_b_s,
                              bool rents) const {
    if (!(t_a_s < t_b_s)) throw std::invalid_argument("demand window requires t_a < t_b");
    auto it = rows_.find(station_id);
    if (it == rows_.end()) return 0.0;
    const auto& row = it->second;

    // Absolute seconds of day so the 24h pattern wraps across days.
    const double base = start_hour_ * 3600.0;
    double pos = base + t_a_s;
    const double end = base + t_b_s;
    double total = 0.0;
    while (pos < end) {
        const double bucket_start = std::floor(pos / 3600.0) * 3600.0;
        const double bucket_end = bucket_start + 3600.0;
        const double seg_end = std::min(bucket_end, end);
        long long hour = static_cast<long long>(std::floor(pos / 3600.0)) % 24;
        if (hour < 0) hour += 24;
        const HourlyDemand& d = row[static_cast<int>(hour)];
        const double rate = rents ? d.rents_per_hour : d.returns_per_hour;
        total += rate * (seg_end - pos) / 3600.0;
        pos = seg_end;
    }
    return total;
}

double DemandTable::rent_demand(const std::string& station_id, double t_a_s, double t_b_s) const {
    return integrate(station_id, t_a_s, t_b_s, true);
}

double DemandTable::return_demand(const std::string& station_id, double t_a_s, double t_b_s) const {
    return integrate(station_id, t_a_s, t_b_s, false);
}

void DemandTable::write_csv(std::ostream& out) const {
    out << "station,hour,rents_per_hour,returns_per_hour\n";
    for (const auto& id : station_ids()) {
        const auto& row = rows_.at(id);
        for (int h = 0; h < 24; ++h) {
            out << id << ',' << h << ',' << csv::format_double(row[h].rents_per_hour)
                << ',' << csv::format_double(row[h].returns_per_hour) << '\n';
        }
    }
}

DemandTable DemandTable::read_csv(std::istream& in, int start_hour) {
    DemandTable table;
    table.set_start_hour(start_hour);
    csv::Reader reader(in, {"station", "hour", "rents_per_hour", "returns_per_hour"});
    std::vector<std::string> fields;
    while (reader.next(fields)) {
        const int hour = csv::to_int(fields[1], "hour");
        if (hour < 0 || hour > 23) throw std::runtime_error("demand csv: hour out of range");
        table.ensure_station(fields[0]);
        table.add_rents(fields[0], hour, csv::to_double(fields[2], "rents_per_hour"));
        table.add_returns(fields[0], hour, csv::to_double(fields[3], "returns_per_hour"));
    }
    return table;
}

DemandBuildResult build_demand_table(const std::vector<TripRecord>& records,
                                     const std::vector<std::string>& known_station_ids,
                                     const DemandBuildOptions& opts) {
    if (opts.n_days < 1) throw std::invalid_argument("n_days must be >= 1");
    DemandBuildResult result;
    result.table.set_start_hour(opts.start_hour);

    std::unordered_set<std::string> known(known_station_ids.begin(), known_station_ids.end());
    for (const auto& id : known_station_ids) result.table.ensure_station(id);

    const double weight = 1.0 / opts.n_days;
    for (const auto& rec : records) {
        if (rec.hour < 0 || rec.hour > 23 || !known.count(rec.rent_station_id) ||
            !known.count(rec.return_station_id)) {
            ++result.rejected_unknown_station;
            continue;
        }
        const long long return_hour =
            static_cast<long long>(std::floor((rec.hour * 3600.0 + opts.return_shift_s) / 3600.0)) % 24;
        result.table.add_rents(rec.rent_station_id, rec.hour, weight);
        result.table.add_returns(rec.return_station_id, static_cast<int>(return_hour), weight);
        ++result.accepted;
    }
    return result;
}

std::vector<TripRecord> read_trips_csv(std::istream& in) {
    csv::Reader reader(in, {"rent_station", "return_station", "day", "hour"});
    std::vector<TripRecord> trips;
    std::vector<std::string> fields;
    while (reader.next(fields)) {
        TripRecord t;
        t.rent_station_id = fields[0];
        t.return_station_id = fields[1];
        t.day = fields[2];
        t.hour = csv::to_int(fields[3], "hour");
        if (t.hour < 0 || t.hour > 23) throw std::runtime_error("trips csv: hour out of range");
        trips.push_back(std::move(t));
    }
    return trips;
}

void write_trips_csv(std::ostream& out, const std::vector<TripRecord>& trips) {
    out << "rent_station,return_station,day,hour\n";
    for (const auto& t : trips)
        out << t.rent_station_id << ',' << t.return_station_id << ',' << t.day << ','
            << t.hour << '\n';
}

}  // namespace bss
