#pragma once

#include <string>
#include <vector>

#include "bss/demand.hpp"
#include "bss/ledger.hpp"
#include "bss/model.hpp"
#include "bss/queue.hpp"

namespace bss {

enum class StrategyKind {
    ShortestDistance,          // SD: nearest station, blind to availability
    InformedShortestDistance,  // ISD: nearest with bikes/slots right now
    DistanceResources,         // DR: distance over current resources
    DistanceExpectedResources, // DER: distance over ledger-estimated resources
    ExpectedCost,              // EC: travel time + failure-probability penalty
    ExpectedCostFutureImpact,  // ECFI: EC + priced impact on future users
};

StrategyKind parse_strategy(const std::string& name);
std::string strategy_name(StrategyKind kind);

struct StrategyConfig {
    StrategyKind kind = StrategyKind::DistanceExpectedResources;
    double max_walk_m = 600.0;        // walking budget for fresh rent requests
    double neighbor_radius_m = 500.0; // alternative-station search radius
    double rent_fail_cost_s = 3000.0;
    double return_fail_cost_s = 2000.0;
    double future_rent_fail_cost_s = 3000.0;
    double future_return_fail_cost_s = 1000.0;
    double impact_timeframe_s = 3600.0;
    double impact_weight = 1.0;       // 0 disables the future-impact term
};

// Read-only view of the world at recommendation time.
struct Snapshot {
    const std::vector<Station>* stations = nullptr;
    const ExpectationLedger* ledger = nullptr;
    const DemandTable* demand = nullptr;
    MobilityProfile profile;
    double now_s = 0.0;
};

// Station indices into Snapshot::stations, best first, duplicate-free.
using Ranking = std::vector<int>;

std::vector<std::string> ranking_ids(const Ranking& ranking, const Snapshot& snap);

Ranking rank_rent_sd(const RentRequest& req, const Snapshot& snap);
Ranking rank_return_sd(const ReturnRequest& req, const Snapshot& snap);
Ranking rank_rent_isd(const RentRequest& req, const Snapshot& snap);
Ranking rank_return_isd(const ReturnRequest& req, const Snapshot& snap);
Ranking rank_rent_dr(const RentRequest& req, const Snapshot& snap);
Ranking rank_return_dr(const ReturnRequest& req, const Snapshot& snap);
Ranking rank_rent_der(const RentRequest& req, const Snapshot& snap);
Ranking rank_return_der(const ReturnRequest& req, const Snapshot& snap);

double local_rent_cost(const Station& station, const RentRequest& req,
                       const StrategyConfig& cfg, const Snapshot& snap,
                       const queue::SolverConfig& solver);
double local_return_cost(const Station& station, const ReturnRequest& req,
                         const StrategyConfig& cfg, const Snapshot& snap,
                         const queue::SolverConfig& solver);

Ranking rank_rent_ec(const RentRequest& req, const StrategyConfig& cfg, const Snapshot& snap,
                     const queue::SolverConfig& solver);
Ranking rank_return_ec(const ReturnRequest& req, const StrategyConfig& cfg, const Snapshot& snap,
                       const queue::SolverConfig& solver);

// Cheapest local cost among stations within neighbor_radius_m of the given
// station (itself excluded), for a hypothetical user standing there at
// eval_time; the future fail cost when no neighbor exists.
double neighborhood_rent_cost(int station_idx, const StrategyConfig& cfg, const Snapshot& snap,
                              const queue::SolverConfig& solver, double eval_time_s);
double neighborhood_return_cost(int station_idx, const StrategyConfig& cfg, const Snapshot& snap,
                                const queue::SolverConfig& solver, double eval_time_s);

double global_rent_cost(int station_idx, const RentRequest& req, const StrategyConfig& cfg,
                        const Snapshot& snap, const queue::SolverConfig& solver);
double global_return_cost(int station_idx, const ReturnRequest& req, const StrategyConfig& cfg,
                          const Snapshot& snap, const queue::SolverConfig& solver);

Ranking rank_rent_ecfi(const RentRequest& req, const StrategyConfig& cfg, const Snapshot& snap,
                       const queue::SolverConfig& solver);
Ranking rank_return_ecfi(const ReturnRequest& req, const StrategyConfig& cfg,
                         const Snapshot& snap, const queue::SolverConfig& solver);

Ranking recommend_rent(const RentRequest& req, const Snapshot& snap, const StrategyConfig& cfg,
                       const queue::SolverConfig& solver);
Ranking recommend_return(const ReturnRequest& req, const Snapshot& snap,
                         const StrategyConfig& cfg, const queue::SolverConfig& solver);

}  // namespace bss
