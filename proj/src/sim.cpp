#include "urllc/sim.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <condition_variable>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "urllc/channel.hpp"
#include "urllc/complexity.hpp"
#include "urllc/fb_limits.hpp"

namespace urllc {

WilsonInterval wilson_interval(std::uint64_t errors, std::uint64_t trials, double z) {
  if (trials == 0) return {0.0, 1.0};
  double n = double(trials), p = double(errors) / n;
  double z2 = z * z;
  double denom = 1.0 + z2 / n;
  double center = (p + z2 / (2 * n)) / denom;
  double half = z * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n)) / denom;
  WilsonInterval w{std::max(0.0, center - half), std::min(1.0, center + half)};
  if (errors == 0) w.lo = 0.0;  // exact at the degenerate counts
  if (errors == trials) w.hi = 1.0;
  return w;
}

namespace {

constexpr std::uint64_t kBlock = 1024;  // classify checks sit on these boundaries

// error offsets within one block of trials; pure function of (seed, block)
std::vector<std::uint32_t> run_block(const DecoderContext& ctx, const DecoderConfig& cfg,
                                     double rho, std::uint64_t seed, std::uint64_t block,
                                     std::uint64_t count, bool all_zero) {
  std::vector<std::uint32_t> errs;
  const std::size_t k = ctx.code->k;
  for (std::uint64_t i = 0; i < count; ++i) {
    std::uint64_t t = block * kBlock + i;
    BitVec u = all_zero ? BitVec(k) : random_message(k, seed, t);
    BitVec cw = ctx.code->encode(u);
    std::vector<double> y = transmit(modulate(cw), rho, seed, t);
    DecodeResult dr = decode(ctx, y, cfg);
    if (!(dr.codeword == cw)) errs.push_back(std::uint32_t(i));
  }
  return errs;
}

struct Scanner {
  const StoppingRule* stop;
  double classify_eps;
  std::uint64_t errors = 0, trials = 0;
  bool finished = false;

  // feed one block's error offsets; trials_before = block * kBlock
  void feed(std::uint64_t trials_before, std::uint64_t count,
            const std::vector<std::uint32_t>& errs) {
    for (std::uint32_t off : errs) {
      ++errors;
      if (stop->target_errors && errors == stop->target_errors) {
        trials = trials_before + off + 1;  // stop at the decisive trial
        finished = true;
        return;
      }
    }
    trials = trials_before + count;
    if (trials >= stop->max_trials) {
      finished = true;
      return;
    }
    if (classify_eps > 0) {
      WilsonInterval w = wilson_interval(errors, trials);
      if (w.hi < classify_eps || w.lo > classify_eps) finished = true;
    }
  }
};

}  // namespace

CepEstimate estimate_cep(const DecoderContext& ctx, const DecoderConfig& cfg,
                         double rho_db, const StoppingRule& stop,
                         std::uint64_t seed, const SimOptions& opt) {
  CepEstimate est;
  if (stop.max_trials == 0) return est;
  const double rho = db_to_linear(rho_db);
  const std::uint64_t nblocks = (stop.max_trials + kBlock - 1) / kBlock;
  auto block_count = [&](std::uint64_t b) {
    return std::min(kBlock, stop.max_trials - b * kBlock);
  };

  Scanner sc{&stop, opt.classify_eps};
  if (opt.workers <= 1) {
    for (std::uint64_t b = 0; b < nblocks && !sc.finished; ++b)
      sc.feed(b * kBlock, block_count(b),
              run_block(ctx, cfg, rho, seed, b, block_count(b), opt.all_zero_message));
  } else {
    std::atomic<std::uint64_t> next{0};
    std::atomic<bool> done{false};
    std::mutex mu;
    std::condition_variable cv;
    std::map<std::uint64_t, std::vector<std::uint32_t>> ready;

    auto work = [&] {
      while (!done.load(std::memory_order_relaxed)) {
        std::uint64_t b = next.fetch_add(1);
        if (b >= nblocks) break;
        auto errs = run_block(ctx, cfg, rho, seed, b, block_count(b),
                              opt.all_zero_message);
        std::lock_guard<std::mutex> lk(mu);
        ready.emplace(b, std::move(errs));
        cv.notify_all();
      }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < opt.workers; ++w) pool.emplace_back(work);

    for (std::uint64_t b = 0; b < nblocks && !sc.finished; ++b) {
      std::vector<std::uint32_t> errs;
      {
        std::unique_lock<std::mutex> lk(mu);
        cv.wait(lk, [&] { return ready.count(b) != 0; });
        errs = std::move(ready[b]);
        ready.erase(b);
      }
      sc.feed(b * kBlock, block_count(b), errs);  // identical in-order scan
    }
    done.store(true);
    next.store(nblocks);  // unblock claimers
    for (auto& th : pool) th.join();
  }

  est.errors = sc.errors;
  est.trials = sc.trials;
  est.cep = sc.trials ? double(sc.errors) / double(sc.trials) : 0.0;
  est.ci = wilson_interval(sc.errors, sc.trials);
  return est;
}

SnrSearchResult required_snr_for_cep(const DecoderContext& ctx, const DecoderConfig& cfg,
                                     double eps_target, const SnrWindow& window,
                                     const StoppingRule& stop, std::uint64_t seed,
                                     const SimOptions& opt) {
  if (!(eps_target > 0 && eps_target < 1))
    throw std::domain_error("required_snr_for_cep: target must be in (0,1)");
  SnrSearchResult res;
  SimOptions probe = opt;
  probe.classify_eps = eps_target;  // probes only need the side, not the value

  std::map<double, double> seen;
  auto probe_cep = [&](double db) {
    auto it = seen.find(db);
    if (it != seen.end()) return it->second;
    res.probes_db.push_back(db);
    double cep = estimate_cep(ctx, cfg, db, stop, seed, probe).cep;
    seen.emplace(db, cep);
    return cep;
  };

  double lo = window.lo_db, hi = window.hi_db;
  while (probe_cep(lo) <= eps_target) {  // need the failing side below
    hi = lo;
    lo -= 2;
    if (lo < -10 - 1e-9) throw std::runtime_error("snr search: window floor reached");
  }
  while (probe_cep(hi) > eps_target) {  // need the achieving side above
    lo = hi;
    hi += 2;
    if (hi > 20 + 1e-9) throw std::runtime_error("snr search: window ceiling reached");
  }
  while (hi - lo > window.tol_db) {
    double mid = 0.5 * (lo + hi);
    if (probe_cep(mid) > eps_target) lo = mid;
    else hi = mid;
  }
  res.rho_db = hi;  // smallest probed SNR that met the target
  res.at_rho = estimate_cep(ctx, cfg, hi, stop, seed, opt);
  return res;
}

std::vector<TradeoffPoint> build_tradeoff_dataset(const LinearCode& code,
                                                  const std::vector<Order>& orders,
                                                  double eps_target, std::size_t q_bits,
                                                  const StoppingRule& stop,
                                                  std::uint64_t seed,
                                                  const SimOptions& opt) {
  DecoderContext ctx(code);
  FbCache cache;
  double rho_r_db = linear_to_db(
      reference_snr(code.n, double(code.k) / double(code.n), eps_target, &cache));

  std::vector<TradeoffPoint> pts;
  for (const Order& s : orders) {
    DecoderConfig cfg{s, q_bits};
    SnrSearchResult sr =
        required_snr_for_cep(ctx, cfg, eps_target, SnrWindow{}, stop, seed, opt);
    TradeoffPoint p;
    p.n = code.n;
    p.k = code.k;
    p.s = s.value();
    // A near-ML decoder can beat the normal-approximation benchmark at
    // moderate epsilon; the penalty is defined as nonnegative, so floor it.
    p.delta_rho_db = std::max(0.0, sr.rho_db - rho_r_db);
    p.log2_k_ops = std::log2(per_bit_complexity(code.n, code.k, q_bits, s));
    p.source = "measured";
    pts.push_back(p);
  }
  return pts;
}

}  // namespace urllc
