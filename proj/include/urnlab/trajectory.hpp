#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "urnlab/selection.hpp"
#include "urnlab/urn.hpp"

namespace urnlab {

// Checkpoint schedules, CLI syntax "linear:<step>" or "geometric:<ratio>".
struct Schedule {
    enum class Kind { Linear, Geometric } kind = Kind::Geometric;
    double param = 10.0;
};

inline Schedule parse_schedule(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        raise(Err::BadSchedule, "expected linear:<step> or geometric:<ratio>, got " + text);
    const std::string kind = text.substr(0, colon);
    double param = 0.0;
    try {
        param = std::stod(text.substr(colon + 1));
    } catch (const std::exception&) {
        raise(Err::BadSchedule, "bad schedule parameter in " + text);
    }
    if (kind == "linear") {
        if (param < 1.0) raise(Err::BadSchedule, "linear step must be >= 1");
        return Schedule{Schedule::Kind::Linear, param};
    }
    if (kind == "geometric") {
        if (param <= 1.0) raise(Err::BadSchedule, "geometric ratio must be > 1");
        return Schedule{Schedule::Kind::Geometric, param};
    }
    raise(Err::BadSchedule, "unknown schedule kind " + kind);
}

// Materialise the schedule on [1, horizon]; the horizon itself is always the
// final checkpoint. geometric:2 with horizon 1000 gives {1,2,4,...,512,1000}.
inline std::vector<std::int64_t> checkpoint_list(const Schedule& s, std::int64_t horizon) {
    if (horizon < 1) raise(Err::BadSchedule, "horizon must be >= 1");
    std::vector<std::int64_t> out;
    if (s.kind == Schedule::Kind::Linear) {
        const auto step = static_cast<std::int64_t>(std::llround(s.param));
        for (std::int64_t v = step; v <= horizon; v += step) out.push_back(v);
    } else {
        double x = 1.0;
        while (true) {
            const auto v = static_cast<std::int64_t>(std::llround(x));
            if (v > horizon) break;
            if (out.empty() || v > out.back()) out.push_back(v);
            x *= s.param;
        }
    }
    if (out.empty() || out.back() != horizon) out.push_back(horizon);
    return out;
}

struct Snapshot {
    std::int64_t n = 0;
    Vec u;
    std::vector<std::int64_t> counts;

    Vec u_proportions() const {
        Vec p = u;
        const double inv = 1.0 / static_cast<double>(n + 1);
        for (double& x : p) x *= inv;
        return p;
    }
    Vec count_proportions() const {
        Vec p(counts.size(), 0.0);
        if (n == 0) return p;
        for (std::size_t j = 0; j < counts.size(); ++j)
            p[j] = static_cast<double>(counts[j]) / static_cast<double>(n);
        return p;
    }
};

struct TrajectoryRecord {
    std::string spec_digest;
    std::uint64_t replica_index = 0;
    std::int64_t horizon = 0;
    Vec u0;
    std::vector<Snapshot> checkpoints;
    std::vector<std::uint8_t> draws;  // full draw history, only if requested

    bool operator==(const TrajectoryRecord&) const = default;
};

struct RunOptions {
    bool record_draws = false;
    bool paranoid = false;  // check invariants at every step, not just checkpoints
};

inline TrajectoryRecord run_trajectory(const ModelSpec& spec, std::int64_t horizon,
                                       const std::vector<std::int64_t>& checkpoints,
                                       RngStream rng, RunOptions opts = {}) {
    for (std::size_t i = 0; i < checkpoints.size(); ++i) {
        if (checkpoints[i] < 1 || checkpoints[i] > horizon)
            raise(Err::BadSchedule, "checkpoint outside [1, horizon]");
        if (i > 0 && checkpoints[i] <= checkpoints[i - 1])
            raise(Err::BadSchedule, "checkpoints must be strictly increasing");
    }
    TrajectoryRecord rec;
    rec.spec_digest = spec.digest_hex();
    rec.replica_index = rng.replica_index();
    rec.horizon = horizon;
    rec.u0 = spec.u0;
    rec.checkpoints.reserve(checkpoints.size());
    if (opts.record_draws) rec.draws.reserve(static_cast<std::size_t>(horizon));

    UrnState st = init_state(spec);
    std::size_t next_cp = 0;
    for (std::int64_t i = 0; i < horizon; ++i) {
        const int z = step(st, spec, rng);
        if (opts.record_draws) rec.draws.push_back(static_cast<std::uint8_t>(z));
        if (opts.paranoid) check_state_invariants(st, spec);
        if (next_cp < checkpoints.size() && st.n == checkpoints[next_cp]) {
            if (!opts.paranoid) check_state_invariants(st, spec);
            rec.checkpoints.push_back(Snapshot{st.n, st.u, st.counts});
            ++next_cp;
        }
    }
    return rec;
}

// Independent replicas; replica i uses RngStream(master_seed, replica_base+i).
// Records are produced in replica order no matter how many threads run.
inline std::vector<TrajectoryRecord> run_ensemble(const ModelSpec& spec, std::int64_t horizon,
                                                  std::uint64_t replicas,
                                                  std::uint64_t master_seed,
                                                  const std::vector<std::int64_t>& checkpoints,
                                                  RunOptions opts = {}, unsigned n_threads = 0,
                                                  std::uint64_t replica_base = 0) {
    if (replicas < 1) raise(Err::BadInput, "replicas must be >= 1");
    std::vector<TrajectoryRecord> out(replicas);
    if (n_threads == 0) n_threads = std::max(1u, std::thread::hardware_concurrency());
    n_threads = std::min<std::uint64_t>(n_threads, replicas);
    if (n_threads <= 1) {
        for (std::uint64_t i = 0; i < replicas; ++i)
            out[i] = run_trajectory(spec, horizon, checkpoints,
                                    RngStream(master_seed, replica_base + i), opts);
        return out;
    }
    std::atomic<std::uint64_t> next{0};
    std::atomic<bool> failed{false};
    std::string first_error;
    std::mutex err_mutex;
    auto worker = [&]() {
        while (true) {
            const std::uint64_t i = next.fetch_add(1);
            if (i >= replicas || failed.load()) return;
            try {
                out[i] = run_trajectory(spec, horizon, checkpoints,
                                        RngStream(master_seed, replica_base + i), opts);
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lk(err_mutex);
                if (!failed.exchange(true))
                    first_error = "replica " + std::to_string(replica_base + i) + ": " + e.what();
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (failed.load()) raise(Err::InvariantViolation, first_error);
    return out;
}

// Maximum over checkpoints of the infinity-norm gap between the coupled
// configuration built two ways: recursively (U-hat_{m+1} = U-hat_m + row of
// R-hat for the drawn colour) and directly as U_n A. Contract: at most
// 1e-8 * (n+1) for the record's horizon.
inline double coupling_residual(const TrajectoryRecord& rec, const ModelSpec& spec) {
    if (rec.draws.size() != static_cast<std::size_t>(rec.horizon))
        raise(Err::MissingHistory, "record has no full draw history");
    const int k = spec.k();
    const StochasticMatrix rhat = coupled_replacement(spec);
    const Mat a = selection_operator(k, spec.theta).entries;

    Vec uhat = vec_mat(rec.u0, a);
    double worst = 0.0;
    std::size_t next_cp = 0;
    for (std::int64_t m = 0; m < rec.horizon && next_cp < rec.checkpoints.size(); ++m) {
        const double* row = rhat.row(rec.draws[static_cast<std::size_t>(m)]);
        for (int j = 0; j < k; ++j) uhat[j] += row[j];
        if (m + 1 == rec.checkpoints[next_cp].n) {
            const Vec direct = vec_mat(rec.checkpoints[next_cp].u, a);
            worst = std::max(worst, inf_norm_diff(uhat, direct));
            ++next_cp;
        }
    }
    return worst;
}

}  // namespace urnlab
