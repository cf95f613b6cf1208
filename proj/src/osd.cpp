#include "urllc/osd.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "urllc/complexity.hpp"

namespace urllc {

SortResult sort_reliabilities(const std::vector<double>& y, const BitMatrix& g) {
  if (y.size() != g.cols)
    throw std::invalid_argument("sort_reliabilities: y length != code length");
  Permutation pref(y.size());
  std::stable_sort(pref.map.begin(), pref.map.end(),
                   [&](std::size_t a, std::size_t b) {
                     return std::abs(y[a]) > std::abs(y[b]);
                   });
  SystematicForm sf = gauss_jordan_systematic(g, pref);

  SortResult sr;
  sr.kappa = std::move(sf.kappa);
  sr.g_sys = std::move(sf.g);
  sr.y_perm = apply_forward(y, sr.kappa);
  sr.reliabilities.resize(y.size());
  sr.hard = BitVec(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) {
    sr.reliabilities[i] = std::abs(sr.y_perm[i]);
    if (sr.y_perm[i] > 0) sr.hard.set(i, true);
  }
  return sr;
}

TepList build_tep_list(std::size_t k, const Order& s, const std::vector<double>& rel) {
  if (rel.size() < k) throw std::invalid_argument("build_tep_list: need k reliabilities");
  if (BigInt(s.num) > BigInt(k) * s.den)
    throw std::domain_error("build_tep_list: order exceeds k");
  TepList l;
  l.k = k;
  l.s = s;
  l.count = tep_count(k, s);
  l.full_max_weight = int(s.floor());
  if (s.frac_num() != 0) {
    BigInt fc = (s.frac_num() * binomial(std::int64_t(k), s.floor() + 1)) / s.frac_den();
    if (fc > BigInt(std::numeric_limits<std::uint64_t>::max()))
      throw std::domain_error("build_tep_list: fractional class too large to enumerate");
    l.frac_count = fc.convert_to<std::uint64_t>();
  }
  l.rel.assign(rel.begin(), rel.begin() + k);
  return l;
}

std::vector<TepSupport> TepList::patterns(std::uint64_t limit) const {
  std::vector<TepSupport> out;
  for_each([&](const TepSupport& sup) {
    out.push_back(sup);
    return out.size() < limit;
  });
  return out;
}

namespace {

// Shared reprocessing state: compacted parity parts of the systematic rows,
// the baseline discrepancy of the hard decision, and the running best.
struct Reprocessor {
  std::size_t n, k, pw;                 // pw = parity words per row
  std::vector<std::uint64_t> prow;      // k rows x pw words
  std::vector<std::uint64_t> base;      // parity(c0) ^ parity(hard)
  std::vector<std::uint64_t> scratch;
  const double* rel;                    // length n, permuted reliabilities
  BitVec r;                             // hard decisions on the first k
  bool prefer_low = false;              // lowest-index tie policy

  double best = std::numeric_limits<double>::infinity();
  TepSupport best_sup;
  std::uint64_t teps = 0, xors = 0;

  Reprocessor(const SortResult& sr, std::size_t k_)
      : n(sr.g_sys.cols), k(k_), pw((n - k_ + 63) / 64),
        prow(k_ * pw), base(pw), scratch(pw),
        rel(sr.reliabilities.data()), r(k_) {
    for (std::size_t i = 0; i < k; ++i)
      extract_tail(sr.g_sys.row(i), sr.g_sys.wpr, prow.data() + i * pw);
    for (std::size_t i = 0; i < k; ++i)
      if (sr.hard.get(i)) {
        r.set(i, true);
        xor_into(base.data(), prow.data() + i * pw);
      }
    std::vector<std::uint64_t> hp(pw);
    extract_tail(sr.hard.w.data(), sr.hard.w.size(), hp.data());
    xor_into(base.data(), hp.data());
  }

  // bits k..n-1 of a packed row, re-packed from bit 0
  void extract_tail(const std::uint64_t* row, std::size_t nwords,
                    std::uint64_t* out) const {
    std::size_t lo = k >> 6, off = k & 63;
    for (std::size_t w = 0; w < pw; ++w, ++lo) {
      std::uint64_t v = row[lo] >> off;
      if (off && lo + 1 < nwords) v |= row[lo + 1] << (64 - off);
      out[w] = v;
    }
  }

  void xor_into(std::uint64_t* dst, const std::uint64_t* src) {
    for (std::size_t w = 0; w < pw; ++w) dst[w] ^= src[w];
    xors += pw;
  }

  // under the lowest-index policy a tie can still replace the incumbent, so
  // abandonment must be strict there
  bool beaten(double d) const { return prefer_low ? d > best : d >= best; }

  void evaluate(const TepSupport& sup) {
    ++teps;
    double d = 0;
    for (auto p : sup) d += rel[p];
    if (beaten(d)) return;
    std::copy(base.begin(), base.end(), scratch.begin());
    for (auto p : sup) xor_into(scratch.data(), prow.data() + std::size_t(p) * pw);
    for (std::size_t w = 0; w < pw; ++w) {
      std::uint64_t bits = scratch[w];
      while (bits) {
        d += rel[k + (w << 6) + std::size_t(std::countr_zero(bits))];
        if (beaten(d)) return;
        bits &= bits - 1;
      }
    }
    if (d < best || (prefer_low && d == best && sup < best_sup)) {
      best = d;
      best_sup = sup;
    }
  }
};

DecodeResult finish(const DecoderContext& ctx, const SortResult& sr,
                    const Reprocessor& rp, double best, const TepSupport& sup,
                    std::uint64_t teps, std::uint64_t xors) {
  BitVec ri = rp.r;
  for (auto p : sup) ri.flip(p);
  BitVec cw_perm = mat_vec_mod2(sr.g_sys, ri);
  DecodeResult res;
  res.codeword = apply_inverse(cw_perm, sr.kappa);
  res.info_bits = ctx.extractor.extract(res.codeword);
  res.best_distance = best;
  res.teps_evaluated = teps;
  res.measured_xor_ops = xors;
  return res;
}

}  // namespace

DecodeResult decode(const DecoderContext& ctx, const std::vector<double>& y,
                    const DecoderConfig& cfg) {
  const std::size_t k = ctx.code->k;
  SortResult sr = sort_reliabilities(y, ctx.code->g);
  TepList list = build_tep_list(k, cfg.s, sr.reliabilities);
  Reprocessor rp(sr, k);
  rp.prefer_low = cfg.tie_break == TieBreak::lowest_index_pattern;

  if (!cfg.early_exit) {
    list.for_each([&](const TepSupport& sup) {
      rp.evaluate(sup);
      return true;
    });
  } else {
    // smallest reliability sum any weight-w pattern can have
    auto class_floor = [&](int w) {
      double s = 0;
      for (int i = 0; i < w; ++i) s += sr.reliabilities[k - 1 - i];
      return s;
    };
    for (int w = 0; w <= list.full_max_weight; ++w) {
      if (w > 0 && rp.beaten(class_floor(w))) return
          finish(ctx, sr, rp, rp.best, rp.best_sup, rp.teps, rp.xors);
      detail::weight_class_lex(k, w, [&](const TepSupport& sup) {
        double d = 0;
        for (auto p : sup) d += sr.reliabilities[p];
        if (!rp.beaten(d)) rp.evaluate(sup);
        return true;  // keep walking: lex order is not sum-ordered
      });
    }
    if (list.frac_count && !rp.beaten(class_floor(list.full_max_weight + 1)))
      detail::weight_class_best_first(
          k, list.full_max_weight + 1, list.rel, list.frac_count,
          [&](const TepSupport& sup) {
            double d = 0;
            for (auto p : sup) d += sr.reliabilities[p];
            if (rp.beaten(d)) return false;  // best-first: later sums no smaller
            rp.evaluate(sup);
            return true;
          });
  }
  return finish(ctx, sr, rp, rp.best, rp.best_sup, rp.teps, rp.xors);
}

DecodeResult decode(const LinearCode& code, const std::vector<double>& y,
                    const DecoderConfig& cfg) {
  DecoderContext ctx(code);
  return decode(ctx, y, cfg);
}

std::vector<DecodeResult> decode_multi(const DecoderContext& ctx,
                                       const std::vector<double>& y,
                                       const std::vector<Order>& orders,
                                       std::size_t q_bits) {
  (void)q_bits;
  const std::size_t k = ctx.code->k;
  if (orders.empty()) throw std::invalid_argument("decode_multi: no orders");
  for (std::size_t i = 0; i + 1 < orders.size(); ++i)
    if (!(orders[i] < orders[i + 1]))
      throw std::invalid_argument("decode_multi: orders must be strictly ascending");

  SortResult sr = sort_reliabilities(y, ctx.code->g);
  TepList top = build_tep_list(k, orders.back(), sr.reliabilities);

  // boundary TEP counts for each snapshot
  std::vector<std::uint64_t> targets;
  for (const Order& o : orders) {
    BigInt t = tep_count(k, o);
    if (t > BigInt(std::numeric_limits<std::uint64_t>::max()))
      throw std::domain_error("decode_multi: order too large to enumerate");
    targets.push_back(t.convert_to<std::uint64_t>());
  }

  // classes that some requested order cuts into
  std::set<int> frac_classes;
  for (const Order& o : orders)
    if (o.frac_num() != 0) frac_classes.insert(int(o.floor()) + 1);

  struct Snapshot {
    double best;
    TepSupport sup;
    std::uint64_t teps, xors;
  };
  std::vector<Snapshot> snaps;
  Reprocessor rp(sr, k);
  std::size_t next = 0;
  auto emit = [&](const TepSupport& sup) {
    rp.evaluate(sup);
    while (next < targets.size() && rp.teps == targets[next]) {
      snaps.push_back({rp.best, rp.best_sup, rp.teps, rp.xors});
      ++next;
    }
    return true;
  };

  for (int w = 0; w <= top.full_max_weight; ++w) {
    if (frac_classes.count(w)) {
      BigInt cls = binomial(std::int64_t(k), w);
      if (cls > BigInt(std::numeric_limits<std::uint64_t>::max()))
        throw std::domain_error("decode_multi: weight class too large to enumerate");
      detail::weight_class_best_first(k, w, top.rel, cls.convert_to<std::uint64_t>(),
                                      emit);
    } else {
      detail::weight_class_lex(k, w, emit);
    }
  }
  if (top.frac_count)
    detail::weight_class_best_first(k, top.full_max_weight + 1, top.rel,
                                    top.frac_count, emit);
  if (next != targets.size())
    throw std::logic_error("decode_multi: snapshot boundaries missed");

  std::vector<DecodeResult> out;
  for (const Snapshot& s : snaps)
    out.push_back(finish(ctx, sr, rp, s.best, s.sup, s.teps, s.xors));
  return out;
}

Order required_order(std::size_t d_min, std::size_t k) {
  if (d_min == 0) return Order(0, 1);
  std::size_t s = (d_min - 1) / 4;  // = ceil(d_min/4 - 1) for integer d_min
  return Order(std::int64_t(std::min(s, k)), 1);
}

}  // namespace urllc
