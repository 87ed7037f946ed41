#include "bss/ledger.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "bss/csv.hpp"

namespace bss {

void ExpectationLedger::commit(const ExpectedEvent& event) {
    if (event.delta != -1 && event.delta != 1)
        throw std::invalid_argument("expected event delta must be -1 or +1");
    auto& list = events_[event.station_id];
    // Insert after any events with the same arrival time so equal-time order
    // is the commit order.
    auto pos = std::upper_bound(list.begin(), list.end(), event.arrival_time_s,
                                [](double t, const ExpectedEvent& e) { return t < e.arrival_time_s; });
    list.insert(pos, event);
}

void ExpectationLedger::resolve(const std::string& user_id, const std::string& station_id) {
    auto it = events_.find(station_id);
    if (it == events_.end()) return;
    auto& list = it->second;
    auto pos = std::find_if(list.begin(), list.end(),
                            [&](const ExpectedEvent& e) { return e.user_id == user_id; });
    if (pos != list.end()) list.erase(pos);
    if (list.empty()) events_.erase(it);
}

int ExpectationLedger::changes(const std::string& station_id, double t_s, double t_exp_s) const {
    auto it = events_.find(station_id);
    if (it == events_.end()) return 0;
    int sum = 0;
    for (const auto& e : it->second)
        if (e.arrival_time_s > t_s && e.arrival_time_s <= t_exp_s) sum += e.delta;
    return sum;
}

ExpectationLedger::Committed ExpectationLedger::committed(const std::string& station_id,
                                                          double t_exp_s) const {
    Committed result;
    auto it = events_.find(station_id);
    if (it == events_.end()) return result;
    int run = 0, peak = 0, trough = 0;
    for (const auto& e : it->second) {
        if (e.arrival_time_s <= t_exp_s) continue;
        run += e.delta;
        peak = std::max(peak, run);
        trough = std::min(trough, run);
    }
    result.slots = peak;
    result.bikes = -trough;
    return result;
}

int ExpectationLedger::committed_slots(const std::string& station_id, double t_exp_s) const {
    return committed(station_id, t_exp_s).slots;
}

int ExpectationLedger::committed_bikes(const std::string& station_id, double t_exp_s) const {
    return committed(station_id, t_exp_s).bikes;
}

int ExpectationLedger::estimated_bikes(const Station& station, const RentRequest& req,
                                       const MobilityProfile& profile) const {
    const double t_exp = req.issued_at_s + walk_time_s(req.origin, station.location, profile);
    return station.bikes + changes(station.id, req.issued_at_s, t_exp) -
           committed_bikes(station.id, t_exp);
}

int ExpectationLedger::estimated_slots(const Station& station, const ReturnRequest& req,
                                       const MobilityProfile& profile) const {
    const double t_exp = req.issued_at_s + bike_time_s(req.current, station.location, profile);
    return station.slots() - changes(station.id, req.issued_at_s, t_exp) -
           committed_slots(station.id, t_exp);
}

bool ExpectationLedger::empty() const { return size() == 0; }

std::size_t ExpectationLedger::size() const {
    std::size_t n = 0;
    for (const auto& [id, list] : events_) n += list.size();
    return n;
}

const std::vector<ExpectedEvent>* ExpectationLedger::station_events(
    const std::string& station_id) const {
    auto it = events_.find(station_id);
    return it == events_.end() ? nullptr : &it->second;
}

void ExpectationLedger::dump_csv(std::ostream& out) const {
    out << "station,arrival_time,delta,user\n";
    std::vector<std::string> ids;
    for (const auto& [id, list] : events_) ids.push_back(id);
    std::sort(ids.begin(), ids.end());
    for (const auto& id : ids)
        for (const auto& e : events_.at(id))
            out << id << ',' << csv::format_double(e.arrival_time_s) << ',' << e.delta << ','
                << e.user_id << '\n';
}

}  // namespace bss
