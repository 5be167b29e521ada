#include "oscp/simulation.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

namespace oscp {

namespace {

constexpr int kLanes = 16;  // fixed lane count keeps results machine-independent

struct Moments {
  double sum = 0.0;
  double sum_sq = 0.0;
  long long timeouts = 0;
  long long n = 0;
};

}  // namespace

PathSampler::PathSampler(OscillatingModel model, uint64_t seed, double t_max)
    : model_(std::move(model)), seed_(seed), t_max_(t_max) {
  if (!(t_max_ > 0.0)) throw std::invalid_argument("PathSampler: t_max must be > 0");
}

ExitOutcome PathSampler::sample_exit(double x, const ExitGeometry& geom, Rng& rng) const {
  if (!geom.lower && !geom.upper)
    throw std::invalid_argument("PathSampler::sample_exit: geometry needs a boundary");

  const double b = model_.switch_level;
  ExitOutcome out;
  double t = 0.0;
  double pos = x;

  if (geom.lower && pos <= *geom.lower) return {0.0, ExitSide::Down, 0.0, 0};
  if (geom.upper && pos > *geom.upper) return {0.0, ExitSide::Up, pos - *geom.upper, 0};

  bool above = pos > b;
  while (true) {
    const Component& active = above ? model_.comp2 : model_.comp1;
    const double a = active.drift();
    const double lam = active.intensity();

    const double jump_dt =
        lam > 0.0 ? rng.exponential(lam) : std::numeric_limits<double>::infinity();

    // first descent target on the linear segment

    double target_t = std::numeric_limits<double>::infinity();
    double target_level = 0.0;
    bool target_is_exit = false;
    if (above) {
      if (geom.lower && *geom.lower >= b) {
        target_level = *geom.lower;
        target_is_exit = true;
      } else {
        target_level = b;  // continuous passage of the switch level
        target_is_exit = false;
      }
      target_t = (pos - target_level) / a;
    } else if (geom.lower) {
      target_level = *geom.lower;
      target_t = (pos - *geom.lower) / a;
      target_is_exit = true;
    }

    const double dt = std::min(jump_dt, target_t);
    if (t + dt > t_max_) {
      out = {t_max_, ExitSide::Timeout, 0.0, out.regime_switches};
      return out;
    }

    if (target_t <= jump_dt) {
      t += target_t;
      pos = target_level;
      if (target_is_exit) return {t, ExitSide::Down, 0.0, out.regime_switches};
      // continuous passage of b from above: switch to regime 1
      ++out.regime_switches;
      above = false;
      continue;
    }

    // jump fires first
    t += jump_dt;
    pos -= a * jump_dt;
    pos += active.jumps().sample(rng);
    if (geom.upper && pos > *geom.upper)
      return {t, ExitSide::Up, pos - *geom.upper, out.regime_switches};
    const bool now_above = pos > b;
    if (now_above != above) ++out.regime_switches;
    above = now_above;
  }
}

ExitOutcome PathSampler::sample_exit(double x, const ExitGeometry& geom) const {
  Rng rng(seed_);
  return sample_exit(x, geom, rng);
}

namespace {

McEstimate run_lanes(const PathSampler& sampler, double x, const ExitGeometry& geom, double s,
                     double z, SideFilter filter, long long n) {
  if (n < 1) throw std::invalid_argument("estimate: n must be >= 1");

  std::vector<Moments> lanes(kLanes);
  auto worker = [&](int lane) {
    const long long base = n / kLanes;
    const long long count = base + (lane < n % kLanes ? 1 : 0);
    Rng rng = Rng::lane_stream(sampler.seed(), static_cast<uint64_t>(lane));
    Moments m;
    for (long long i = 0; i < count; ++i) {
      const ExitOutcome o = sampler.sample_exit(x, geom, rng);
      double y = 0.0;
      if (o.side == ExitSide::Timeout) {
        ++m.timeouts;
      } else {
        const bool matches = filter == SideFilter::Both ||
                             (filter == SideFilter::Down && o.side == ExitSide::Down) ||
                             (filter == SideFilter::Up && o.side == ExitSide::Up);
        if (matches) y = std::exp(-s * o.time - z * o.overshoot);
      }
      m.sum += y;
      m.sum_sq += y * y;
    }
    m.n = count;
    lanes[static_cast<size_t>(lane)] = m;
  };

  std::vector<std::thread> pool;
  pool.reserve(kLanes);
  for (int lane = 0; lane < kLanes; ++lane) pool.emplace_back(worker, lane);
  for (auto& th : pool) th.join();

  // combine in lane order: results identical regardless of scheduling
  Moments total;
  for (const Moments& m : lanes) {
    total.sum += m.sum;
    total.sum_sq += m.sum_sq;
    total.timeouts += m.timeouts;
    total.n += m.n;
  }

  McEstimate est;
  est.n = total.n;
  est.timeouts = total.timeouts;
  est.value = total.sum / static_cast<double>(total.n);
  if (total.n > 1) {
    const double var =
        std::max(0.0, (total.sum_sq - total.sum * total.sum / static_cast<double>(total.n)) /
                          static_cast<double>(total.n - 1));
    est.stderr_ = std::sqrt(var / static_cast<double>(total.n));
  }
  est.truncation_bound = std::exp(-s * sampler.t_max()) *
                         (static_cast<double>(total.timeouts) / static_cast<double>(total.n));
  return est;
}

}  // namespace

McEstimate estimate_lt(const PathSampler& sampler, double x, const ExitGeometry& geom, double s,
                       double z, SideFilter filter, long long n) {
  if (!(s > 0.0)) throw std::invalid_argument("estimate_lt: s must be > 0");
  if (z < 0.0) throw std::invalid_argument("estimate_lt: z must be >= 0");
  return run_lanes(sampler, x, geom, s, z, filter, n);
}

McEstimate estimate_exit_probability(const PathSampler& sampler, double x,
                                     const ExitGeometry& geom, SideFilter side, long long n) {
  return run_lanes(sampler, x, geom, 0.0, 0.0, side, n);
}

}  // namespace oscp
