#include "bss/queue.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace bss::queue {

namespace {

void rhs(const double* p, double* dp, int capacity, double lambda, double mu) {
    const int k = capacity;
    if (k == 0) {  // single state, nothing can move
        dp[0] = 0.0;
        return;
    }
    dp[0] = -lambda * p[0] + mu * p[1];
    for (int j = 1; j < k; ++j)
        dp[j] = lambda * p[j - 1] + mu * p[j + 1] - (lambda + mu) * p[j];
    dp[k] = lambda * p[k - 1] - mu * p[k];
}

struct Rk4Workspace {
    std::vector<double> k1, k2, k3, k4, tmp;
    void resize(size_t n) {
        k1.resize(n);
        k2.resize(n);
        k3.resize(n);
        k4.resize(n);
        tmp.resize(n);
    }
};

void rk4_step(std::vector<double>& p, int capacity, double lambda, double mu, double h,
              Rk4Workspace& w) {
    const size_t n = p.size();
    rhs(p.data(), w.k1.data(), capacity, lambda, mu);
    for (size_t i = 0; i < n; ++i) w.tmp[i] = p[i] + 0.5 * h * w.k1[i];
    rhs(w.tmp.data(), w.k2.data(), capacity, lambda, mu);
    for (size_t i = 0; i < n; ++i) w.tmp[i] = p[i] + 0.5 * h * w.k2[i];
    rhs(w.tmp.data(), w.k3.data(), capacity, lambda, mu);
    for (size_t i = 0; i < n; ++i) w.tmp[i] = p[i] + h * w.k3[i];
    rhs(w.tmp.data(), w.k4.data(), capacity, lambda, mu);
    const double h6 = h / 6.0;
    for (size_t i = 0; i < n; ++i)
        p[i] += h6 * (w.k1[i] + 2.0 * w.k2[i] + 2.0 * w.k3[i] + w.k4[i]);
}

void clamp_and_renormalize(std::vector<double>& p, double renorm_eps) {
    double sum = 0.0;
    for (double& v : p) {
        if (v < 0.0) v = 0.0;  // roundoff-scale undershoot only
        sum += v;
    }
    if (sum > 0.0 && std::abs(sum - 1.0) > renorm_eps)
        for (double& v : p) v /= sum;
}

double pick_step(double duration_s, const SolverConfig& cfg) {
    double h = std::min(cfg.max_step_s, duration_s / std::max(1, cfg.min_substeps));
    h = std::min(h, duration_s / 2.0);  // at least two steps
    return h;
}

void validate(const StateDistribution& pi, const QueueRates& rates) {
    if (pi.p.empty()) throw std::invalid_argument("state distribution is empty");
    if (rates.arrival_per_s < 0.0 || rates.rental_per_s < 0.0)
        throw std::invalid_argument("queue rates must be non-negative");
}

}  // namespace

double StateDistribution::sum() const {
    return std::accumulate(p.begin(), p.end(), 0.0);
}

StateDistribution point_mass(int capacity, int state) {
    if (capacity < 0 || state < 0 || state > capacity)
        throw std::invalid_argument("point mass state out of range");
    StateDistribution d;
    d.p.assign(capacity + 1, 0.0);
    d.p[state] = 1.0;
    return d;
}

void kolmogorov_rhs(const StateDistribution& pi, const QueueRates& rates,
                    std::vector<double>& dp) {
    validate(pi, rates);
    dp.resize(pi.p.size());
    rhs(pi.p.data(), dp.data(), pi.capacity(), rates.arrival_per_s, rates.rental_per_s);
}

StateDistribution evolve(const StateDistribution& pi0, const QueueRates& rates,
                         double duration_s, const SolverConfig& cfg) {
    validate(pi0, rates);
    if (duration_s < 0.0) throw std::invalid_argument("duration must be >= 0");
    StateDistribution out = pi0;
    if (duration_s == 0.0) return out;

    const double h = pick_step(duration_s, cfg);
    Rk4Workspace w;
    w.resize(out.p.size());
    const int capacity = out.capacity();
    double t = 0.0;
    while (t < duration_s) {
        const double step = std::min(h, duration_s - t);
        if (step <= 0.0) break;
        rk4_step(out.p, capacity, rates.arrival_per_s, rates.rental_per_s, step, w);
        clamp_and_renormalize(out.p, cfg.renorm_eps);
        t += step;
    }
    return out;
}

TrajectorySummary evolve_with_boundary_avgs(const StateDistribution& pi0,
                                            const QueueRates& rates, double duration_s,
                                            double step_s) {
    validate(pi0, rates);
    if (duration_s <= 0.0) throw std::invalid_argument("averaging window must be positive");
    if (step_s <= 0.0) throw std::invalid_argument("step must be positive");

    TrajectorySummary out;
    out.final_dist = pi0;
    auto& p = out.final_dist.p;
    const int capacity = out.final_dist.capacity();
    Rk4Workspace w;
    w.resize(p.size());

    double acc_empty = 0.0, acc_full = 0.0;
    double t = 0.0;
    while (t < duration_s) {
        const double step = std::min(step_s, duration_s - t);
        if (step <= 0.0) break;
        const double prev_empty = p.front(), prev_full = p.back();
        rk4_step(p, capacity, rates.arrival_per_s, rates.rental_per_s, step, w);
        clamp_and_renormalize(p, 1e-12);
        acc_empty += step * 0.5 * (prev_empty + p.front());
        acc_full += step * 0.5 * (prev_full + p.back());
        t += step;
    }
    out.avg_empty = acc_empty / duration_s;
    out.avg_full = acc_full / duration_s;
    return out;
}

double avg_boundary_prob(const StateDistribution& pi0, const QueueRates& rates,
                         double t_a_s, double t_b_s, Boundary boundary, double step_s) {
    if (!(t_b_s > t_a_s)) throw std::invalid_argument("avg_boundary_prob requires t_b > t_a");
    const double duration = t_b_s - t_a_s;
    const double step = std::min(step_s, duration / 2.0);
    auto summary = evolve_with_boundary_avgs(pi0, rates, duration, step);
    return boundary == Boundary::Empty ? summary.avg_empty : summary.avg_full;
}

StateDistribution initial_distribution(const Station& station, const ExpectationLedger& ledger,
                                       double t_s, double t_exp_s, int* clamped) {
    const int k = station.capacity;
    int state = station.bikes + ledger.changes(station.id, t_s, t_exp_s);
    if (state < 0 || state > k) {
        if (clamped) ++*clamped;
        state = std::clamp(state, 0, k);
    }
    return point_mass(k, state);
}

QueueRates window_rates(const DemandTable& demand, const std::string& station_id,
                        double t_a_s, double t_b_s) {
    QueueRates rates;
    const double window = t_b_s - t_a_s;
    if (window <= 0.0) return rates;
    rates.arrival_per_s = demand.return_demand(station_id, t_a_s, t_b_s) / window;
    rates.rental_per_s = demand.rent_demand(station_id, t_a_s, t_b_s) / window;
    return rates;
}

namespace {

// Shared by bike_prob / slot_prob and the strategy cost functions. The
// request may be issued in the future (issued_at >= now); the evolution
// always starts from the current, known station state.
ArrivalState arrival_state(const Station& station, const ExpectationLedger& ledger,
                           const DemandTable& demand, double now_s, double t_exp_s,
                           const SolverConfig& cfg) {
    ArrivalState out;
    out.t_exp_s = t_exp_s;
    auto committed = ledger.committed(station.id, t_exp_s);
    out.committed_bikes = committed.bikes;
    out.committed_slots = committed.slots;

    StateDistribution pi0 = initial_distribution(station, ledger, now_s, t_exp_s);
    const double window = t_exp_s - now_s;
    if (window <= 0.0) {
        out.dist = std::move(pi0);
        return out;
    }
    out.dist = evolve(pi0, window_rates(demand, station.id, now_s, t_exp_s), window, cfg);
    return out;
}

}  // namespace

ArrivalState rent_arrival_state(const Station& station, const RentRequest& req,
                                const ExpectationLedger& ledger, const DemandTable& demand,
                                const MobilityProfile& profile, double now_s,
                                const SolverConfig& cfg) {
    const double t_exp = req.issued_at_s + walk_time_s(req.origin, station.location, profile);
    return arrival_state(station, ledger, demand, now_s, t_exp, cfg);
}

ArrivalState return_arrival_state(const Station& station, const ReturnRequest& req,
                                  const ExpectationLedger& ledger, const DemandTable& demand,
                                  const MobilityProfile& profile, double now_s,
                                  const SolverConfig& cfg) {
    const double t_exp = req.issued_at_s + bike_time_s(req.current, station.location, profile);
    return arrival_state(station, ledger, demand, now_s, t_exp, cfg);
}

double bike_prob_from_arrival(const ArrivalState& arrival) {
    const int k = arrival.dist.capacity();
    const int lo = 1 + arrival.committed_bikes;
    double prob = 0.0;
    for (int j = lo; j <= k; ++j) prob += arrival.dist.p[j];
    return prob;
}

double slot_prob_from_arrival(const ArrivalState& arrival) {
    const int k = arrival.dist.capacity();
    const int hi = k - (1 + arrival.committed_slots);
    double prob = 0.0;
    for (int j = 0; j <= hi; ++j) prob += arrival.dist.p[j];
    return prob;
}

double bike_prob(const Station& station, const RentRequest& req,
                 const ExpectationLedger& ledger, const DemandTable& demand,
                 const MobilityProfile& profile, double now_s, const SolverConfig& cfg) {
    return bike_prob_from_arrival(
        rent_arrival_state(station, req, ledger, demand, profile, now_s, cfg));
}

double slot_prob(const Station& station, const ReturnRequest& req,
                 const ExpectationLedger& ledger, const DemandTable& demand,
                 const MobilityProfile& profile, double now_s, const SolverConfig& cfg) {
    return slot_prob_from_arrival(
        return_arrival_state(station, req, ledger, demand, profile, now_s, cfg));
}

ExpectedFailures expected_failures(const Station& station, double t_a_s, double t_b_s,
                                   const StateDistribution& pi0, const DemandTable& demand,
                                   const SolverConfig& cfg) {
    if (!(t_b_s > t_a_s)) throw std::invalid_argument("expected_failures requires t_b > t_a");
    const double duration = t_b_s - t_a_s;
    const double step = pick_step(duration, cfg);
    auto summary =
        evolve_with_boundary_avgs(pi0, window_rates(demand, station.id, t_a_s, t_b_s),
                                  duration, step);
    ExpectedFailures out;
    out.failed_rents = summary.avg_empty * demand.rent_demand(station.id, t_a_s, t_b_s);
    out.failed_returns = summary.avg_full * demand.return_demand(station.id, t_a_s, t_b_s);
    return out;
}

StateDistribution shift_distribution(const StateDistribution& pi, Action action) {
    const int k = pi.capacity();
    StateDistribution out;
    out.p.assign(k + 1, 0.0);
    if (k == 0) {
        out.p[0] = pi.p[0];
        return out;
    }
    if (action == Action::Rent) {
        out.p[0] = pi.p[0] + pi.p[1];
        for (int j = 1; j < k; ++j) out.p[j] = pi.p[j + 1];
        out.p[k] = 0.0;
    } else {
        out.p[k] = pi.p[k] + pi.p[k - 1];
        for (int j = 1; j < k; ++j) out.p[j] = pi.p[j - 1];
        out.p[0] = 0.0;
    }
    return out;
}

ImpactPair action_impact(const Station& station, const StateDistribution& user_arrival_dist,
                         double t_exp_s, double timeframe_s, Action action,
                         const DemandTable& demand, const SolverConfig& cfg) {
    if (!(timeframe_s > 0.0)) throw std::invalid_argument("impact timeframe must be positive");
    const double t_end = t_exp_s + timeframe_s;
    const double rents = demand.rent_demand(station.id, t_exp_s, t_end);
    const double returns = demand.return_demand(station.id, t_exp_s, t_end);
    if (rents == 0.0 && returns == 0.0) return {};  // no attempts, no failures

    const QueueRates rates = window_rates(demand, station.id, t_exp_s, t_end);
    const double step = pick_step(timeframe_s, cfg);
    auto base = evolve_with_boundary_avgs(user_arrival_dist, rates, timeframe_s, step);
    auto acted = evolve_with_boundary_avgs(shift_distribution(user_arrival_dist, action), rates,
                                           timeframe_s, step);
    ImpactPair out;
    out.failed_rents_delta = (acted.avg_empty - base.avg_empty) * rents;
    out.failed_returns_delta = (acted.avg_full - base.avg_full) * returns;
    return out;
}

}  // namespace bss::queue
