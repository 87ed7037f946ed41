#pragma once

#include <vector>

#include "bss/demand.hpp"
#include "bss/ledger.hpp"
#include "bss/model.hpp"

namespace bss::queue {

// Probability vector over 0..K available bikes at a station.
struct StateDistribution {
    std::vector<double> p;

    int capacity() const { return static_cast<int>(p.size()) - 1; }
    double sum() const;
};

StateDistribution point_mass(int capacity, int state);

// Per-second rates: bikes arrive at the dock when users return them and
// leave when users rent them.
struct QueueRates {
    double arrival_per_s = 0.0;  // returns
    double rental_per_s = 0.0;   // rentals
};

struct SolverConfig {
    double max_step_s = 5.0;
    int min_substeps = 50;       // step also capped at duration / min_substeps
    double renorm_eps = 1e-12;   // renormalize when |sum - 1| exceeds this
};

// Forward equations of the birth-death chain: writes dp/dt into `dp`.
// Components always sum to zero.
void kolmogorov_rhs(const StateDistribution& pi, const QueueRates& rates,
                    std::vector<double>& dp);

// Classic fixed-step RK4 over [0, duration]; the final step is shortened to
// land exactly on the duration.
StateDistribution evolve(const StateDistribution& pi0, const QueueRates& rates,
                         double duration_s, const SolverConfig& cfg);

enum class Boundary { Empty, Full };

// Time-averaged probability of the boundary state over [t_a, t_b], from a
// trapezoidal sum over the RK4 trajectory samples at the given step.
double avg_boundary_prob(const StateDistribution& pi0, const QueueRates& rates,
                         double t_a_s, double t_b_s, Boundary boundary, double step_s);

// Single integration pass producing both boundary averages and the final
// distribution.
struct TrajectorySummary {
    StateDistribution final_dist;
    double avg_empty = 0.0;
    double avg_full = 0.0;
};
TrajectorySummary evolve_with_boundary_avgs(const StateDistribution& pi0,
                                            const QueueRates& rates, double duration_s,
                                            double step_s);

// Point mass at the current bike count plus expected ledger changes up to
// t_exp. Out-of-range indices clamp to [0, K]; `clamped` counts occurrences
// when provided.
StateDistribution initial_distribution(const Station& station, const ExpectationLedger& ledger,
                                       double t_s, double t_exp_s, int* clamped = nullptr);

// Per-second rates for a station over a window, from the demand table
// (expected attempt counts divided by the window length).
QueueRates window_rates(const DemandTable& demand, const std::string& station_id,
                        double t_a_s, double t_b_s);

// Distribution of available bikes at the requester's expected arrival,
// evolved from the current state, plus the commitments effective then.
struct ArrivalState {
    StateDistribution dist;
    double t_exp_s = 0.0;
    int committed_bikes = 0;
    int committed_slots = 0;
};
ArrivalState rent_arrival_state(const Station& station, const RentRequest& req,
                                const ExpectationLedger& ledger, const DemandTable& demand,
                                const MobilityProfile& profile, double now_s,
                                const SolverConfig& cfg);
ArrivalState return_arrival_state(const Station& station, const ReturnRequest& req,
                                  const ExpectationLedger& ledger, const DemandTable& demand,
                                  const MobilityProfile& profile, double now_s,
                                  const SolverConfig& cfg);

// Probability that at the requester's arrival the station holds more bikes
// than are already committed to later users (resp. more free slots).
double bike_prob(const Station& station, const RentRequest& req,
                 const ExpectationLedger& ledger, const DemandTable& demand,
                 const MobilityProfile& profile, double now_s, const SolverConfig& cfg);
double slot_prob(const Station& station, const ReturnRequest& req,
                 const ExpectationLedger& ledger, const DemandTable& demand,
                 const MobilityProfile& profile, double now_s, const SolverConfig& cfg);

double bike_prob_from_arrival(const ArrivalState& arrival);
double slot_prob_from_arrival(const ArrivalState& arrival);

// Expected failed rental / return attempts at the station over [t_a, t_b]
// starting from pi0: time-averaged boundary probability times the expected
// attempts in the window.
struct ExpectedFailures {
    double failed_rents = 0.0;
    double failed_returns = 0.0;
};
ExpectedFailures expected_failures(const Station& station, double t_a_s, double t_b_s,
                                   const StateDistribution& pi0, const DemandTable& demand,
                                   const SolverConfig& cfg);

enum class Action { Rent, Return };

// The distribution after one bike is taken (or added) at the moment the
// distribution describes. Probability mass at the boundary stays absorbed.
StateDistribution shift_distribution(const StateDistribution& pi, Action action);

// Change in expected failures over [t_exp, t_exp + timeframe] caused by the
// action, relative to not acting. Renting can only increase future rental
// failures and decrease return failures; mirrored for returning.
struct ImpactPair {
    double failed_rents_delta = 0.0;
    double failed_returns_delta = 0.0;
};
ImpactPair action_impact(const Station& station, const StateDistribution& user_arrival_dist,
                         double t_exp_s, double timeframe_s, Action action,
                         const DemandTable& demand, const SolverConfig& cfg);

}  // namespace bss::queue
