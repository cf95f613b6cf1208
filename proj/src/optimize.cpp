#include "urllc/optimize.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "urllc/channel.hpp"
#include "urllc/complexity.hpp"
#include "urllc/fb_limits.hpp"

namespace urllc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// closed-form order estimate from the entropy bound, eta = F + 1 - log2 n
double theorem_order(std::size_t n, std::size_t k, double f) {
  double eta = f + 1.0 - std::log2(double(n));
  if (eta <= 0) return 0.0;
  double k2 = double(k) * double(k);
  double rad = k2 - std::cbrt(k2 * eta * eta * eta * eta);
  if (rad < 0) rad = 0;
  return 0.5 * (double(k) - std::sqrt(rad));
}

double grid_order(std::size_t n, std::size_t k, std::size_t q, double budget) {
  try {
    return max_order(n, k, q, budget).s_max_exact.value();
  } catch (const std::domain_error&) {
    return 0.0;  // not even the order-0 pass fits
  }
}

struct EvalCtx {
  const Constraints* c;
  const Hardware* hw;
  double tb_eff;
  FbCache cache;
};

DesignPoint eval_point(std::size_t n, std::size_t k, double rho_r_db, double drho,
                       const TradeoffModel& m, EvalCtx& ctx) {
  DesignPoint p;
  p.n = n;
  p.k = k;
  p.rho_r_db = rho_r_db;
  p.delta_rho_db = drho;
  p.log2_k_ops = m(drho);
  p.k_ops = std::exp2(p.log2_k_ops);
  p.latency = aggregate_latency(n, k, p.k_ops, ctx.hw->ts, ctx.tb_eff).total;
  p.rho_total_db = rho_r_db + drho;
  p.e_b = std::pow(10.0, p.rho_total_db / 10.0) / (double(k) / double(n));
  p.s_grid = grid_order(n, k, ctx.hw->q_bits, p.k_ops);
  p.s_theorem = theorem_order(n, k, p.log2_k_ops);
  p.feasible = true;
  return p;
}

// latency of operating at penalty drho under model m (raw constraint form)
double latency_at(std::size_t n, std::size_t k, double drho, const TradeoffModel& m,
                  const Hardware& hw, double tb_eff) {
  return double(n) * hw.ts + double(k) * std::exp2(m(drho)) * tb_eff;
}

struct Range {
  std::size_t lo = 0, hi = 0;
  bool empty = false;
};

Range resolve_range_k(NRange r, std::size_t k, const Constraints& c, const Hardware& hw) {
  Range out;
  if (r.lo == 0 && r.hi == 0) {
    out.lo = k + 1;
    out.hi = 8 * k;
    if (std::isfinite(c.l_max)) {
      double cap = c.l_max / hw.ts + 1e-9;
      if (cap < double(out.lo)) {
        out.empty = true;
        return out;
      }
      out.hi = std::min<std::size_t>(out.hi, std::size_t(cap));
    }
    return out;
  }
  if (r.lo < 2 || r.lo > r.hi)
    throw std::invalid_argument("blocklength range: need 2 <= lo <= hi");
  out.lo = r.lo;
  out.hi = r.hi;
  return out;
}

Range resolve_range_info(NRange r, const Constraints& c, const Hardware& hw) {
  Range out;
  if (r.lo == 0 && r.hi == 0) {
    if (!std::isfinite(c.l_max))
      throw std::invalid_argument("info-bits search: need a latency cap or a range");
    out.lo = 2;
    double cap = c.l_max / hw.ts + 1e-9;
    if (cap < 2) {
      out.empty = true;
      return out;
    }
    out.hi = std::size_t(cap);
    return out;
  }
  if (r.lo < 2 || r.lo > r.hi)
    throw std::invalid_argument("blocklength range: need 2 <= lo <= hi");
  out.lo = r.lo;
  out.hi = r.hi;
  return out;
}

DesignPoint no_solution(const std::string& why) {
  DesignPoint p;
  p.feasible = false;
  p.infeasible_reason = why;
  return p;
}

void push(std::vector<DesignPoint>* curve, const DesignPoint& p) {
  if (curve) curve->push_back(p);
}

DesignPoint infeasible_at(std::size_t n, std::size_t k, const std::string& why) {
  DesignPoint p;
  p.n = n;
  p.k = k;
  p.feasible = false;
  p.infeasible_reason = why;
  return p;
}

}  // namespace

DesignPoint minimize_latency(std::size_t k, const Constraints& c, const Hardware& hw,
                             const ModelTable& models, NRange range,
                             std::vector<DesignPoint>* curve) {
  if (k == 0) throw std::invalid_argument("minimize_latency: k must be positive");
  Range r = resolve_range_k(range, k, c, hw);
  if (r.empty) return no_solution("deadline below airtime for every n > k");
  EvalCtx ctx{&c, &hw, effective_tb(hw.tb, hw.alpha, hw.procs), {}};

  DesignPoint best = no_solution("no feasible blocklength in range");
  for (std::size_t n = r.lo; n <= r.hi; ++n) {
    if (k >= n) {
      push(curve, infeasible_at(n, k, "rate not below 1"));
      continue;
    }
    double rho_r = reference_snr(n, double(k) / double(n), c.epsilon, &ctx.cache);
    double rho_r_db = linear_to_db(rho_r);
    double drho = c.rho_max_db - rho_r_db;  // spend all headroom on complexity
    if (drho < 0) {
      DesignPoint p = infeasible_at(n, k, "power cap below the reference SNR");
      p.rho_r_db = rho_r_db;
      push(curve, p);
      continue;
    }
    DesignPoint p = eval_point(n, k, rho_r_db, drho, models.lookup(n), ctx);
    p.objective = p.latency;
    if (p.latency > c.l_max) {
      p.feasible = false;
      p.infeasible_reason = "deadline exceeded";
    }
    push(curve, p);
    if (p.feasible && (!best.feasible || p.latency < best.latency)) best = p;
  }
  return best;
}

DesignPoint minimize_energy(std::size_t k, const Constraints& c, const Hardware& hw,
                            const ModelTable& models, NRange range,
                            std::vector<DesignPoint>* curve) {
  if (k == 0) throw std::invalid_argument("minimize_energy: k must be positive");
  Range r = resolve_range_k(range, k, c, hw);
  if (r.empty) return no_solution("deadline below airtime for every n > k");
  EvalCtx ctx{&c, &hw, effective_tb(hw.tb, hw.alpha, hw.procs), {}};

  DesignPoint best = no_solution("no feasible blocklength in range");
  for (std::size_t n = r.lo; n <= r.hi; ++n) {
    if (k >= n) {
      push(curve, infeasible_at(n, k, "rate not below 1"));
      continue;
    }
    TradeoffModel m = models.lookup(n);
    double drho;
    try {
      drho = min_power_penalty(m, c.l_max, n, k, hw.ts, ctx.tb_eff);
    } catch (const std::domain_error&) {
      push(curve, infeasible_at(n, k, "deadline below airtime"));
      continue;
    }
    if (std::isinf(drho)) {
      push(curve, infeasible_at(n, k, "latency budget below one operation"));
      continue;
    }
    double rho_r = reference_snr(n, double(k) / double(n), c.epsilon, &ctx.cache);
    double rho_r_db = linear_to_db(rho_r);
    DesignPoint p = eval_point(n, k, rho_r_db, drho, m, ctx);
    p.objective = p.e_b;
    if (p.rho_total_db > c.rho_max_db) {
      p.feasible = false;
      p.infeasible_reason = "power cap exceeded";
    }
    push(curve, p);
    if (p.feasible && (!best.feasible || p.e_b < best.e_b)) best = p;
  }
  return best;
}

InfoBitsResult maximize_info_bits(const Constraints& c, const Hardware& hw,
                                  const ModelTable& models, NRange range,
                                  std::vector<DesignPoint>* curve) {
  Range r = resolve_range_info(range, c, hw);
  InfoBitsResult res;
  res.best = no_solution("no feasible blocklength in range");
  if (r.empty) {
    res.best = no_solution("deadline below airtime for every n");
    return res;
  }
  EvalCtx ctx{&c, &hw, effective_tb(hw.tb, hw.alpha, hw.procs), {}};

  // ideal back end: tb = 0, every symbol slot spent in the air
  res.n_inf = std::isfinite(c.l_max) ? std::size_t(c.l_max / hw.ts + 1e-9) : r.hi;
  if (res.n_inf >= 2) {
    double rate = std::isinf(c.rho_max_db)
                      ? 1.0
                      : normal_approx_rate(res.n_inf, db_to_linear(c.rho_max_db),
                                           c.epsilon, &ctx.cache);
    if (rate > 0) res.k_inf = std::size_t(double(res.n_inf) * rate + 1e-9);
  }

  for (std::size_t n = r.lo; n <= r.hi; ++n) {
    if (double(n) * hw.ts > c.l_max) {
      push(curve, infeasible_at(n, 0, "deadline below airtime"));
      continue;
    }
    RatePoint rp = constrained_max_rate(models, n, c.rho_max_db, c.epsilon,
                                        c.l_max, hw.ts, ctx.tb_eff);
    if (!rp.feasible) {
      push(curve, infeasible_at(n, 0, "no feasible rate"));
      continue;
    }
    double rho_r = reference_snr(n, double(rp.k) / double(n), c.epsilon, &ctx.cache);
    DesignPoint p = eval_point(n, rp.k, linear_to_db(rho_r), rp.delta_rho_db,
                               models.lookup(n), ctx);
    p.objective = double(rp.k);
    push(curve, p);
    // ties go to the longer block: more dispersion margin at the same payload,
    // and the tb = 0 endpoint must land on the full airtime budget
    if (!res.best.feasible || rp.k >= res.best.k) res.best = p;
  }
  return res;
}

DesignPoint brute_force_oracle(Problem prob, std::size_t k, const Constraints& c,
                               const Hardware& hw, const ModelTable& models,
                               NRange range) {
  EvalCtx ctx{&c, &hw, effective_tb(hw.tb, hw.alpha, hw.procs), {}};
  DesignPoint best = no_solution("no feasible design in range");

  auto consider = [&](std::size_t n, std::size_t kk, double rho_r_db, double drho,
                      const TradeoffModel& m) {
    DesignPoint p = eval_point(n, kk, rho_r_db, drho, m, ctx);
    switch (prob) {
      case Problem::latency:
        p.objective = p.latency;
        if (p.rho_total_db > c.rho_max_db || p.latency > c.l_max) return;
        if (!best.feasible || p.objective < best.objective) best = p;
        break;
      case Problem::energy:
        p.objective = p.e_b;
        if (p.rho_total_db > c.rho_max_db || p.latency > c.l_max * (1 + 1e-12)) return;
        if (!best.feasible || p.objective < best.objective) best = p;
        break;
      case Problem::info_bits:
        p.objective = double(kk);
        if (p.rho_total_db > c.rho_max_db || p.latency > c.l_max) return;
        // >= : ties between blocklengths resolve to the longer block
        if (!best.feasible || p.objective >= best.objective) best = p;
        break;
    }
  };

  // smallest penalty whose raw latency fits the deadline, by bisection on
  // the monotone decreasing L(drho); no closed form involved
  auto min_feasible_drho = [&](std::size_t n, std::size_t kk,
                               const TradeoffModel& m) -> double {
    if (!std::isfinite(c.l_max)) return 0.0;
    if (double(n) * hw.ts > c.l_max) return kInf;
    if (latency_at(n, kk, 0.0, m, hw, ctx.tb_eff) <= c.l_max) return 0.0;
    double lo = 0.0, hi = 1.0;
    while (latency_at(n, kk, hi, m, hw, ctx.tb_eff) > c.l_max) {
      hi *= 2;
      if (hi > 1e9) return kInf;
    }
    for (int it = 0; it < 200; ++it) {
      double mid = 0.5 * (lo + hi);
      if (latency_at(n, kk, mid, m, hw, ctx.tb_eff) <= c.l_max) hi = mid;
      else lo = mid;
    }
    return hi;
  };

  if (prob == Problem::info_bits) {
    Range r = resolve_range_info(range, c, hw);
    if (r.empty) return best;
    for (std::size_t n = r.lo; n <= r.hi; ++n) {
      if (double(n) * hw.ts > c.l_max) continue;
      TradeoffModel m = models.lookup(n);
      for (std::size_t kk = n - 1; kk >= 1; --kk) {
        double rho_r_db =
            linear_to_db(reference_snr(n, double(kk) / double(n), c.epsilon, &ctx.cache));
        double head = c.rho_max_db - rho_r_db;
        if (head < 0) continue;
        if (latency_at(n, kk, head, m, hw, ctx.tb_eff) > c.l_max) continue;
        double drho = min_feasible_drho(n, kk, m);  // report the cheapest penalty
        consider(n, kk, rho_r_db, drho, m);
        break;  // first k from the top is the max for this n
      }
    }
    return best;
  }

  if (k == 0) throw std::invalid_argument("oracle: k must be positive");
  Range r = resolve_range_k(range, k, c, hw);
  if (r.empty) return best;
  for (std::size_t n = r.lo; n <= r.hi; ++n) {
    if (k >= n) continue;
    TradeoffModel m = models.lookup(n);
    double rho_r_db =
        linear_to_db(reference_snr(n, double(k) / double(n), c.epsilon, &ctx.cache));
    double head = c.rho_max_db - rho_r_db;
    if (head < 0) continue;

    if (prob == Problem::latency) {
      // 0.01 dB grid plus the exact power-cap endpoint
      double cap = std::min(head, 40.0);
      for (std::int64_t centi = 0; centi <= std::int64_t(cap * 100); ++centi)
        consider(n, k, rho_r_db, double(centi) / 100.0, m);
      consider(n, k, rho_r_db, head, m);  // covers the infinite-cap case too
    } else {
      double drho = min_feasible_drho(n, k, m);
      if (std::isinf(drho)) continue;
      consider(n, k, rho_r_db, drho, m);
    }
  }
  return best;
}

}  // namespace urllc
