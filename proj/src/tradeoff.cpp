#include "urllc/tradeoff.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "urllc/channel.hpp"
#include "urllc/complexity.hpp"
#include "urllc/fb_limits.hpp"

namespace urllc {

double TradeoffModel::operator()(double delta_rho_db) const {
  if (!(delta_rho_db >= 0))
    throw std::domain_error("tradeoff model: delta_rho must be >= 0");
  return 1.0 / (a * std::sqrt(delta_rho_db) + b);
}

namespace {

double sse(const std::vector<TradeoffPoint>& pts, double a, double b) {
  double s = 0;
  for (const auto& p : pts) {
    double den = a * std::sqrt(p.delta_rho_db) + b;
    if (den <= 0) return std::numeric_limits<double>::infinity();
    double r = 1.0 / den - p.log2_k_ops;
    s += r * r;
  }
  return s;
}

}  // namespace

TradeoffModel fit_tradeoff_model(const std::vector<TradeoffPoint>& pts) {
  if (pts.size() < 2) throw std::invalid_argument("fit: need at least 2 points");
  double x0 = pts.front().delta_rho_db;
  bool distinct = false;
  for (const auto& p : pts) {
    if (!(p.delta_rho_db >= 0)) throw std::invalid_argument("fit: delta_rho < 0");
    if (!(p.log2_k_ops > 0)) throw std::invalid_argument("fit: log2 complexity <= 0");
    if (p.delta_rho_db != x0) distinct = true;
  }
  if (!distinct) throw std::invalid_argument("fit: all delta_rho identical");

  // init: 1/y = a sqrt(x) + b is linear in sqrt(x)
  double su = 0, sv = 0, suu = 0, suv = 0, m = double(pts.size());
  for (const auto& p : pts) {
    double u = std::sqrt(p.delta_rho_db), v = 1.0 / p.log2_k_ops;
    su += u; sv += v; suu += u * u; suv += u * v;
  }
  double det = m * suu - su * su;
  double a = (m * suv - su * sv) / det;
  double b = (sv * suu - su * suv) / det;
  if (!(a > 0)) a = 1e-6;
  if (!(b > 0)) b = 1e-6;

  // damped Gauss-Newton on r_i = 1/(a sqrt(x_i) + b) - y_i
  double cur = sse(pts, a, b);
  for (int it = 0; it < 500; ++it) {
    double jtj00 = 0, jtj01 = 0, jtj11 = 0, jtr0 = 0, jtr1 = 0;
    for (const auto& p : pts) {
      double u = std::sqrt(p.delta_rho_db);
      double den = a * u + b;
      double f = 1.0 / den;
      double r = f - p.log2_k_ops;
      double ja = -u * f * f, jb = -f * f;
      jtj00 += ja * ja; jtj01 += ja * jb; jtj11 += jb * jb;
      jtr0 += ja * r; jtr1 += jb * r;
    }
    if (std::sqrt(jtr0 * jtr0 + jtr1 * jtr1) < 1e-10) break;
    double det2 = jtj00 * jtj11 - jtj01 * jtj01;
    if (det2 == 0) break;
    double da = -(jtj11 * jtr0 - jtj01 * jtr1) / det2;
    double db = -(jtj00 * jtr1 - jtj01 * jtr0) / det2;
    double step = 1.0;
    double na = a, nb = b, nsse = cur;
    for (int h = 0; h < 60; ++h, step *= 0.5) {
      double ta = a + step * da, tb = b + step * db;
      double s = sse(pts, ta, tb);
      if (s < cur) { na = ta; nb = tb; nsse = s; break; }
    }
    if (nsse >= cur) break;  // no descent direction left
    a = na; b = nb; cur = nsse;
  }
  if (!(a > 0 && b > 0))
    throw std::invalid_argument("fit: model parameters not positive");

  TradeoffModel model;
  model.a = a;
  model.b = b;
  model.fit_rmse = std::sqrt(cur / m);
  return model;
}

void ModelTable::upsert(std::size_t n, const TradeoffModel& m) {
  auto it = std::lower_bound(entries.begin(), entries.end(), n,
                             [](const ModelEntry& e, std::size_t v) { return e.n < v; });
  if (it != entries.end() && it->n == n) {
    it->model = m;
  } else {
    entries.insert(it, ModelEntry{n, m});
  }
}

TradeoffModel ModelTable::lookup(std::size_t n) const {
  if (entries.empty()) throw std::out_of_range("model table: empty");
  if (interpolation != "nearest" && interpolation != "linear")
    throw std::invalid_argument("model table: unknown interpolation");

  auto it = std::lower_bound(entries.begin(), entries.end(), n,
                             [](const ModelEntry& e, std::size_t v) { return e.n < v; });
  if (it != entries.end() && it->n == n) return it->model;
  if (it == entries.begin()) return it->model;          // below range: clamp
  if (it == entries.end()) return entries.back().model; // above range: clamp

  const ModelEntry& hi = *it;
  const ModelEntry& lo = *(it - 1);
  if (interpolation == "linear") {
    double t = double(n - lo.n) / double(hi.n - lo.n);
    TradeoffModel m;
    m.a = lo.model.a + t * (hi.model.a - lo.model.a);
    m.b = lo.model.b + t * (hi.model.b - lo.model.b);
    m.fit_rmse = std::max(lo.model.fit_rmse, hi.model.fit_rmse);
    return m;
  }
  // nearest, ties toward the smaller blocklength
  return (n - lo.n <= hi.n - n) ? lo.model : hi.model;
}

double min_power_penalty(const TradeoffModel& m, double lm, std::size_t n,
                         std::size_t k, double ts, double tb) {
  if (tb == 0) return 0.0;
  double budget = complexity_budget(lm, n, k, ts, tb);
  if (budget <= 1.0) return std::numeric_limits<double>::infinity();
  double t = 1.0 / std::log2(budget) - m.b;
  if (t <= 0) return 0.0;
  t /= m.a;
  return t * t;
}

RatePoint constrained_max_rate(const ModelTable& models, std::size_t n,
                               double rho_db, double epsilon, double lm,
                               double ts, double tb) {
  TradeoffModel model = models.lookup(n);
  FbCache cache;
  for (std::size_t k = n - 1; k >= 1; --k) {
    double drho = min_power_penalty(model, lm, n, k, ts, tb);
    if (std::isinf(drho)) continue;  // larger B at smaller k may still fit
    double rate_limit =
        std::isinf(rho_db)
            ? 1.0  // R -> C -> 1 as the power cap is removed
            : normal_approx_rate(n, db_to_linear(rho_db - drho), epsilon, &cache);
    if (double(k) / double(n) <= rate_limit)
      return {double(k) / double(n), k, drho, true};
  }
  return {};
}

}  // namespace urllc
