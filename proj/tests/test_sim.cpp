#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "urllc/channel.hpp"
#include "urllc/code.hpp"
#include "urllc/complexity.hpp"
#include "urllc/sim.hpp"

using namespace urllc;
using doctest::Approx;

TEST_CASE("wilson interval: hand values and edge cases") {
  // references computed independently at 30-digit precision
  WilsonInterval w = wilson_interval(5, 100);
  CHECK(w.lo == Approx(0.021543679154367974).epsilon(1e-12));
  CHECK(w.hi == Approx(0.11175046923191914).epsilon(1e-12));

  w = wilson_interval(50, 1000);
  CHECK(w.lo == Approx(0.03813026239274881).epsilon(1e-12));
  CHECK(w.hi == Approx(0.0653138202442508).epsilon(1e-12));

  w = wilson_interval(0, 100);
  CHECK(w.lo == 0.0);
  CHECK(w.hi == Approx(0.036993498206985676).epsilon(1e-12));

  w = wilson_interval(100, 100);
  CHECK(w.lo == Approx(0.9630065017930143).epsilon(1e-12));
  CHECK(w.hi == 1.0);

  w = wilson_interval(0, 0);
  CHECK(w.lo == 0.0);
  CHECK(w.hi == 1.0);

  // more data at the same rate tightens the interval
  WilsonInterval small = wilson_interval(10, 100);
  WilsonInterval big = wilson_interval(100, 1000);
  CHECK(big.hi - big.lo < small.hi - small.lo);
}

TEST_CASE("wilson interval: coverage near the nominal 95%") {
  std::mt19937_64 g(42);
  const double p = 0.1;
  const int trials = 200, reps = 2000;
  std::binomial_distribution<int> bin(trials, p);
  int covered = 0;
  for (int r = 0; r < reps; ++r) {
    WilsonInterval w = wilson_interval(std::uint64_t(bin(g)), trials);
    if (w.lo <= p && p <= w.hi) ++covered;
  }
  double rate = double(covered) / reps;
  CHECK(rate > 0.92);
  CHECK(rate < 0.99);
}

TEST_CASE("estimate_cep: identical results for any worker count") {
  LinearCode c = build_ebch(16, 11);
  DecoderContext ctx(c);
  DecoderConfig cfg{Order(1, 1)};
  StoppingRule stop{30, 20000};

  SimOptions w1;
  SimOptions w3;
  w3.workers = 3;
  CepEstimate a = estimate_cep(ctx, cfg, 3.0, stop, 5, w1);
  CepEstimate b = estimate_cep(ctx, cfg, 3.0, stop, 5, w3);
  CepEstimate a2 = estimate_cep(ctx, cfg, 3.0, stop, 5, w1);

  CHECK(a.errors == b.errors);
  CHECK(a.trials == b.trials);
  CHECK(a.cep == b.cep);
  CHECK(a.ci.lo == b.ci.lo);
  CHECK(a.ci.hi == b.ci.hi);
  CHECK(a.errors == a2.errors);  // and plain rerun determinism
  CHECK(a.trials == a2.trials);
}

TEST_CASE("estimate_cep: stopping rule lands on the decisive trial") {
  LinearCode c = build_ebch(16, 11);
  DecoderContext ctx(c);
  DecoderConfig cfg{Order(1, 1)};

  StoppingRule stop{25, 1000000};
  CepEstimate full = estimate_cep(ctx, cfg, 3.0, stop, 7);
  REQUIRE(full.errors == 25);
  REQUIRE(full.trials < stop.max_trials);

  // capping max_trials at the decisive trial reproduces the estimate exactly
  StoppingRule capped{25, full.trials};
  CepEstimate same = estimate_cep(ctx, cfg, 3.0, capped, 7);
  CHECK(same.errors == 25);
  CHECK(same.trials == full.trials);

  // one fewer trial must lose exactly the final error
  StoppingRule minus{25, full.trials - 1};
  CepEstimate prev = estimate_cep(ctx, cfg, 3.0, minus, 7);
  CHECK(prev.errors == 24);
  CHECK(prev.trials == full.trials - 1);
}

TEST_CASE("estimate_cep: degenerate stopping rules") {
  LinearCode c = build_ebch(8, 4);
  DecoderContext ctx(c);
  DecoderConfig cfg{Order(0, 1)};

  StoppingRule none{0, 0};
  CepEstimate z = estimate_cep(ctx, cfg, 3.0, none, 1);
  CHECK(z.trials == 0);
  CHECK(z.errors == 0);

  // target_errors = 0 disables the error stop; runs to max_trials
  StoppingRule cap{0, 2048};
  CepEstimate e = estimate_cep(ctx, cfg, 3.0, cap, 1);
  CHECK(e.trials == 2048);

  // partial final block
  StoppingRule odd{0, 1500};
  CepEstimate o = estimate_cep(ctx, cfg, 3.0, odd, 1);
  CHECK(o.trials == 1500);
}

TEST_CASE("estimate_cep: monotone in SNR, all-zero message statistically equivalent") {
  LinearCode c = build_ebch(16, 11);
  DecoderContext ctx(c);
  DecoderConfig cfg{Order(1, 1)};
  StoppingRule stop{0, 16384};

  CepEstimate lo = estimate_cep(ctx, cfg, 0.0, stop, 11);
  CepEstimate hi = estimate_cep(ctx, cfg, 6.0, stop, 11);
  CHECK(lo.cep > 4 * hi.cep);

  SimOptions zero;
  zero.all_zero_message = true;
  CepEstimate az = estimate_cep(ctx, cfg, 3.0, stop, 11, zero);
  CepEstimate rnd = estimate_cep(ctx, cfg, 3.0, stop, 11);
  // same channel realizations, different codewords: intervals must overlap
  CHECK(az.ci.lo <= rnd.ci.hi);
  CHECK(rnd.ci.lo <= az.ci.hi);
}

TEST_CASE("estimate_cep: classification exit matches the full verdict") {
  LinearCode c = build_ebch(16, 11);
  DecoderContext ctx(c);
  DecoderConfig cfg{Order(1, 1)};
  StoppingRule stop{0, 65536};
  const double line = 0.02;

  SimOptions quick;
  quick.classify_eps = line;
  for (double rho_db : {1.0, 5.5}) {  // one side well above, one well below
    CepEstimate fast = estimate_cep(ctx, cfg, rho_db, stop, 13, quick);
    CepEstimate full = estimate_cep(ctx, cfg, rho_db, stop, 13);
    CHECK(fast.trials <= full.trials);
    bool fast_above = fast.cep > line;
    bool full_above = full.cep > line;
    CHECK(fast_above == full_above);
  }
}

TEST_CASE("required_snr_for_cep: monotone in the target, deterministic") {
  LinearCode c = build_ebch(16, 11);
  DecoderContext ctx(c);
  DecoderConfig cfg{Order(2, 1)};
  StoppingRule stop{50, 200000};
  SnrWindow win;

  SnrSearchResult loose = required_snr_for_cep(ctx, cfg, 1e-1, win, stop, 3);
  SnrSearchResult tight = required_snr_for_cep(ctx, cfg, 1e-2, win, stop, 3);
  CHECK(loose.rho_db < tight.rho_db);

  SnrSearchResult again = required_snr_for_cep(ctx, cfg, 1e-2, win, stop, 3);
  CHECK(again.rho_db == tight.rho_db);
  CHECK(again.probes_db == tight.probes_db);
  CHECK(again.at_rho.errors == tight.at_rho.errors);

  // the answer sits inside the final bracket and meets the target closely
  CHECK(tight.at_rho.cep <= 1.5e-2);
  CHECK(std::isfinite(tight.rho_db));
  CHECK(tight.probes_db.size() >= 3);
}

TEST_CASE("required_snr_for_cep: input validation and window floor") {
  LinearCode c = build_ebch(8, 4);
  DecoderContext ctx(c);
  DecoderConfig cfg{Order(1, 1)};
  StoppingRule stop{20, 4096};
  SnrWindow win;

  CHECK_THROWS_AS(required_snr_for_cep(ctx, cfg, 0.0, win, stop, 1), std::domain_error);
  CHECK_THROWS_AS(required_snr_for_cep(ctx, cfg, 1.0, win, stop, 1), std::domain_error);
  // a target this lax is met even at the -10 dB floor: the bracket never
  // finds its failing side, which must be reported rather than fabricated
  CHECK_THROWS_AS(required_snr_for_cep(ctx, cfg, 0.999, win, stop, 1),
                  std::runtime_error);
}

TEST_CASE("build_tradeoff_dataset: shapes, complexity column, penalty trend") {
  LinearCode c = build_ebch(16, 11);
  std::vector<Order> orders = {Order(0, 1), Order(1, 1), Order(2, 1)};
  StoppingRule stop{50, 200000};

  std::vector<TradeoffPoint> pts =
      build_tradeoff_dataset(c, orders, 1e-2, 8, stop, 21);
  REQUIRE(pts.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(pts[i].n == 16);
    CHECK(pts[i].k == 11);
    CHECK(pts[i].s == Approx(double(i)));
    CHECK(pts[i].source == "measured");
    CHECK(pts[i].log2_k_ops ==
          Approx(std::log2(per_bit_complexity(16, 11, 8, orders[i]))).epsilon(1e-12));
  }
  // more reprocessing never needs more SNR (same seed: common random numbers)
  CHECK(pts[1].delta_rho_db <= pts[0].delta_rho_db);
  CHECK(pts[2].delta_rho_db <= pts[1].delta_rho_db);
}
