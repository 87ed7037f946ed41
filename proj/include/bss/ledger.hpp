#pragma once

#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

#include "bss/model.hpp"

namespace bss {

// One expected future rental (-1) or return (+1) at a station, implied by a
// recommendation that some user is currently following.
struct ExpectedEvent {
    std::string station_id;
    double arrival_time_s = 0.0;
    int delta = 0;  // -1 rental, +1 return
    std::string user_id;
};

// Per-station, time-ordered expected events. There is at most one pending
// event per outstanding user: the station she is actually heading to,
// re-recorded on each retry and removed when she physically arrives.
class ExpectationLedger {
public:
    void commit(const ExpectedEvent& event);

    // Removes the user's pending event at the station; no-op when absent.
    void resolve(const std::string& user_id, const std::string& station_id);

    // Sum of deltas over events with t < arrival_time <= t_exp.
    int changes(const std::string& station_id, double t_s, double t_exp_s) const;

    // Running-extrema of the delta sums over events strictly after t_exp:
    // committed slots is the peak of the running sum (clamped at 0),
    // committed bikes the depth of its trough (clamped at 0).
    struct Committed {
        int slots = 0;
        int bikes = 0;
    };
    Committed committed(const std::string& station_id, double t_exp_s) const;
    int committed_slots(const std::string& station_id, double t_exp_s) const;
    int committed_bikes(const std::string& station_id, double t_exp_s) const;

    // Availability estimates at the requester's expected arrival time.
    // May be negative; callers filter on > 0.
    int estimated_bikes(const Station& station, const RentRequest& req,
                        const MobilityProfile& profile) const;
    int estimated_slots(const Station& station, const ReturnRequest& req,
                        const MobilityProfile& profile) const;

    bool empty() const;
    std::size_t size() const;
    const std::vector<ExpectedEvent>* station_events(const std::string& station_id) const;

    // Debug dump: station,arrival_time,delta,user
    void dump_csv(std::ostream& out) const;

private:
    std::unordered_map<std::string, std::vector<ExpectedEvent>> events_;
};

}  // namespace bss
