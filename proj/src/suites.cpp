#include "expobound/suites.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "expobound/bound_engine.hpp"
#include "expobound/expo_class.hpp"
#include "expobound/random.hpp"
#include "expobound/resolvent_grid.hpp"
#include "expobound/sequence_kit.hpp"

namespace expobound {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// At r near 1e6 the certified radius of g alone approaches 1e-12.
constexpr double kRoundTripTol = 1e-10;

// Stream ids, one per check family, so that families do not share random draws.
enum StreamId : std::uint64_t {
  kArrangementStream = 1,
  kSumStream,
  kWeylStream,
  kClassStream,
  kDistanceStream,
};

// Relative slack of a check; negative means violated.
double relative_slack(const CheckResult& c) {
  const double allowed = c.rhs * (1.0 + c.tolerance) + c.tolerance_abs;
  const double scale = std::abs(c.rhs) * (1.0 + c.tolerance) + c.tolerance_abs;
  const double s = allowed - c.lhs;
  if (std::isnan(s)) return -kInf;
  return scale > 0.0 ? s / scale : s;
}

// Folds many checks of one family into the single worst one.
class WorstCase {
 public:
  explicit WorstCase(std::string name) : name_(std::move(name)) {}

  void offer(const CheckResult& c) {
    ++count_;
    if (!c.passed()) ++failures_;
    const double s = relative_slack(c);
    if (count_ == 1 || s < worst_slack_) {
      worst_ = c;
      worst_slack_ = s;
    }
  }

  [[nodiscard]] CheckResult result() const {
    if (count_ == 0) return make_predicate_check(name_, false, {{"reason", "no admissible cases"}});
    CheckResult c = worst_;
    c.params["case"] = worst_.name;
    c.params["checked"] = count_;
    c.params["violations"] = failures_;
    c.name = name_;
    return c;
  }

 private:
  std::string name_;
  CheckResult worst_;
  double worst_slack_ = kInf;
  std::size_t count_ = 0;
  std::size_t failures_ = 0;
};

// lo <= x <= hi, reported as lhs = max(lo - x, x - hi) against rhs = 0.
CheckResult make_interval_check(std::string name, double x, double lo, double hi, json params = json::object()) {
  params["value"] = number_json(x);
  params["interval"] = {lo, hi};
  return make_check(std::move(name), std::max(lo - x, x - hi), 0.0, 0.0, 0.0, std::move(params));
}

json params_json(ClassParams p) { return json{{"a", p.a}, {"alpha", p.alpha}}; }

std::vector<double> sorted_desc(std::vector<double> v) {
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

std::vector<double> to_vector(const RealVector& v) { return std::vector<double>(v.data(), v.data() + v.size()); }

double max_abs_difference(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) return kInf;
  double m = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) m = std::max(m, std::abs(x[i] - y[i]));
  return m;
}

std::size_t clamp_size(std::size_t v, std::size_t lo, std::size_t hi) { return std::clamp(v, lo, hi); }

// ---------------------------------------------------------------- arrangements

std::vector<DecaySequence> random_sequences(Rng& rng, const SuiteConfig& cfg) {
  const std::size_t K = rng.uniform_index(1, cfg.max_sequences);
  // Half of the instances draw from a coarse lattice so that ties are common.
  const bool lattice = rng.uniform() < 0.5;
  std::vector<DecaySequence> seqs;
  for (std::size_t k = 0; k < K; ++k) {
    const std::size_t len = rng.uniform_index(1, cfg.max_length);
    std::vector<double> v(len);
    for (auto& x : v) x = lattice ? 0.25 * std::floor(rng.uniform(0.0, 20.0)) : rng.uniform(-5.0, 5.0);
    seqs.emplace_back(std::move(v));
  }
  return seqs;
}

// Oracle: concatenate in (sequence, position) order, then stable-sort by value.
ArrangementResult sort_oracle(const std::vector<DecaySequence>& seqs, Direction dir) {
  struct Entry {
    double v;
    std::size_t k;
    std::size_t n;
  };
  std::vector<Entry> all;
  for (std::size_t k = 0; k < seqs.size(); ++k) {
    for (std::size_t n = 0; n < seqs[k].size(); ++n) all.push_back({seqs[k][n], k, n});
  }
  std::stable_sort(all.begin(), all.end(), [dir](const Entry& x, const Entry& y) {
    return dir == Direction::increasing ? x.v < y.v : x.v > y.v;
  });
  ArrangementResult r;
  for (const auto& e : all) {
    r.values.push_back(e.v);
    r.source_sequence.push_back(e.k);
    r.source_position.push_back(e.n);
  }
  return r;
}

bool same_arrangement(const ArrangementResult& x, const ArrangementResult& y) {
  return x.values == y.values && x.source_sequence == y.source_sequence && x.source_position == y.source_position;
}

double last_value_min(const std::vector<DecaySequence>& seqs) {
  double m = kInf;
  for (const auto& s : seqs) m = std::min(m, s[s.size() - 1]);
  return m;
}

double last_value_max(const std::vector<DecaySequence>& seqs) {
  double m = -kInf;
  for (const auto& s : seqs) m = std::max(m, s[s.size() - 1]);
  return m;
}

// ---------------------------------------------------------------- bound functions

const std::vector<ClassParams>& test_params() {
  static const std::vector<ClassParams> ps = {ClassParams(1.0, 1.0), ClassParams(0.5, 1.0), ClassParams(1.0, 2.0),
                                              ClassParams(2.0, 0.5)};
  return ps;
}

// log f_{a,alpha}(r) over the first `factors` factors in long double with
// compensated summation. Factors that underflow to exactly 1 end the loop.
long double brute_force_log_f(ClassParams p, double r, std::size_t factors) {
  const long double log_r = std::log(static_cast<long double>(r));
  long double sum = 0.0L;
  long double comp = 0.0L;
  for (std::size_t n = 1; n <= factors; ++n) {
    const long double e = log_r - static_cast<long double>(p.a) * std::pow(static_cast<long double>(n), static_cast<long double>(p.alpha));
    if (e < -11400.0L) break;  // exp(e) == 0 in long double
    const long double t = std::log1p(std::exp(e)) - comp;
    const long double next = sum + t;
    comp = (next - sum) - t;
    sum = next;
  }
  return sum;
}

std::string point_label(ClassParams p, double r) {
  return "a=" + std::to_string(p.a) + ",alpha=" + std::to_string(p.alpha) + ",r=" + std::to_string(r);
}

}  // namespace

SuiteConfig suite_config_for_budget(std::size_t budget) {
  SuiteConfig c;
  if (budget >= 500) return c;
  const std::size_t b = std::max<std::size_t>(budget, 10);
  c.arrangement_instances = b;
  c.sum_instances = std::min<std::size_t>(c.sum_instances, b);
  c.sum_max_dim = clamp_size(b, 8, c.sum_max_dim);
  c.weyl_random_instances = std::min<std::size_t>(c.weyl_random_instances, b);
  c.grid_nx = c.grid_ny = clamp_size(b / 5, 8, 40);
  c.dims.shift = clamp_size(b, 16, c.dims.shift);
  c.dims.cyclic = clamp_size(b / 4, 8, c.dims.cyclic);
  c.dims.weyl = clamp_size(b, 16, c.dims.weyl);
  c.dims.interleave = clamp_size(b, 18, c.dims.interleave);
  c.dims.convolution = clamp_size(b, 16, c.dims.convolution);
  c.dims.unitary = clamp_size(b / 4, 8, c.dims.unitary);
  c.distance_pairs = std::min<std::size_t>(c.distance_pairs, b);
  c.normal_pairs = clamp_size(b / 5, 4, c.normal_pairs);
  c.distance_max_dim = clamp_size(b / 2, 12, c.distance_max_dim);
  return c;
}

std::vector<GalleryCase> gallery_cases(const GalleryDims& dims) {
  std::vector<GalleryCase> cases;
  const ClassParams p11(1.0, 1.0);
  cases.push_back({"shift(a=1,alpha=1)", make_shift(p11, dims.shift), p11});
  const ClassParams p_root(2.0, 0.5);
  cases.push_back({"shift(a=2,alpha=0.5)", make_shift(p_root, dims.shift), p_root});
  std::vector<double> taus;
  // The eigenvector of a graded cyclic matrix grows like exp(a N^2 / 8), so
  // the dimension is kept small enough for the eigensolver to resolve it.
  for (std::size_t n = 1; n <= dims.cyclic; ++n) taus.push_back(std::exp(-0.25 * static_cast<double>(n)));
  cases.push_back({"cyclic(exp(-n/4))", make_cyclic(taus), ClassParams(0.25, 1.0)});
  cases.push_back({"cyclic(1,1/4)", make_cyclic({1.0, 0.25}), p11});
  cases.push_back({"weyl(a=1,alpha=1)", make_weyl_sharpness(p11, BlockSchedule::super_exponential(dims.weyl)), p11});
  const std::vector<double> rates = {1.0, 2.0, 4.0};
  const std::size_t inter_dim = std::max<std::size_t>(3, dims.interleave / 3 * 3);
  cases.push_back({"interleave(1,2,4)", make_interleaved_sum(rates, 1.0, inter_dim).sum,
                   ClassParams(combined_exponent(rates, 1.0), 1.0)});
  cases.push_back({"convolution(a=1)", make_convolution_diagonal(1.0, dims.convolution), ClassParams(0.5, 1.0)});
  cases.push_back({"unitary-cyclic", make_cyclic(std::vector<double>(dims.unitary, 1.0)), ClassParams(0.1, 1.0)});
  return cases;
}

// ------------------------------------------------------------------ criteria

VerificationReport check_arrangements(const SuiteConfig& cfg, std::uint64_t seed) {
  VerificationReport rep{"arrangements", seed, {}};
  const Rng root = Rng(seed).fork(kArrangementStream);
  WorstCase merge("arrangement.merge_matches_sort");
  WorstCase counting("arrangement.counting_is_additive");
  WorstCase relations("arrangement.counting_relations");
  WorstCase lower("arrangement.increasing_lower_bound");
  WorstCase upper("arrangement.increasing_upper_bound");
  WorstCase decay_upper("arrangement.decreasing_upper_bound");
  WorstCase decay_lower("arrangement.decreasing_lower_bound");

  for (std::size_t i = 0; i < cfg.arrangement_instances; ++i) {
    Rng rng = root.fork(i);
    const json where{{"instance", i}};

    const auto seqs = random_sequences(rng, cfg);
    for (const Direction dir : {Direction::increasing, Direction::decreasing}) {
      const auto got = monotone_arrangement(seqs, dir);
      merge.offer(make_predicate_check("merge", same_arrangement(got, sort_oracle(seqs, dir)), where));
    }

    // Counting functions on the increasing arrangement m.
    const auto m = monotone_arrangement(seqs, Direction::increasing).values;
    std::vector<double> probes = m;
    for (std::size_t j = 0; j < 8; ++j) probes.push_back(rng.uniform(-6.0, 6.0));
    bool additive = true;
    bool rel_ok = true;
    for (double r : probes) {
      std::size_t total = 0;
      for (const auto& s : seqs) total += counting_function(s.values(), r);
      const std::size_t mu = counting_function(m, r);
      additive = additive && mu == total;
      if (mu >= 1) rel_ok = rel_ok && m[mu - 1] <= r;
    }
    for (std::size_t n = 1; n <= m.size(); ++n) rel_ok = rel_ok && counting_function(m, m[n - 1]) >= n;
    counting.offer(make_predicate_check("mu", additive, where));
    relations.offer(make_predicate_check("relations", rel_ok, where));

    // Exact-form sequences a_k n^alpha + A_k.
    {
      const std::size_t K = rng.uniform_index(1, cfg.max_sequences);
      const double alpha = rng.uniform(0.3, 2.0);
      std::vector<RateOffset> ro;
      std::vector<DecaySequence> grow;
      for (std::size_t k = 0; k < K; ++k) {
        const RateOffset q{rng.uniform(0.2, 3.0), rng.uniform(-2.0, 2.0)};
        const std::size_t len = rng.uniform_index(1, cfg.max_length);
        std::vector<double> v(len);
        for (std::size_t n = 1; n <= len; ++n) v[n - 1] = q.rate * std::pow(static_cast<double>(n), alpha) + q.offset;
        ro.push_back(q);
        grow.emplace_back(std::move(v));
      }
      const auto inc = monotone_arrangement(grow, Direction::increasing).values;
      const ArrangementBound lo = make_arrangement_bound(ro, alpha, BoundSide::lower);
      const ArrangementBound hi = make_arrangement_bound(ro, alpha, BoundSide::upper);
      const double interior = last_value_min(grow);
      for (std::size_t n = 1; n <= inc.size(); ++n) {
        json at{{"instance", i}, {"n", n}, {"K", K}, {"alpha", alpha}};
        lower.offer(make_check("lower", lo.at(n), inc[n - 1], 0.0, 0.0, at));
        // Past the shortest prefix the truncation drops entries of the infinite arrangement.
        if (inc[n - 1] <= interior) upper.offer(make_check("upper", inc[n - 1], hi.at(n), 0.0, 0.0, at));
      }
    }

    // Exponentially decaying sequences B_k exp(-a_k n^alpha).
    {
      const std::size_t K = rng.uniform_index(1, cfg.max_sequences);
      const double alpha = rng.uniform(0.3, 1.5);
      std::vector<RateOffset> ro;
      std::vector<DecaySequence> decay;
      for (std::size_t k = 0; k < K; ++k) {
        const RateOffset q{rng.uniform(0.05, 1.0), rng.uniform(0.5, 2.0)};
        const std::size_t len = rng.uniform_index(1, cfg.max_length);
        std::vector<double> v(len);
        for (std::size_t n = 1; n <= len; ++n) {
          v[n - 1] = q.offset * std::exp(-q.rate * std::pow(static_cast<double>(n), alpha));
        }
        ro.push_back(q);
        decay.emplace_back(std::move(v));
      }
      const auto dec = monotone_arrangement(decay, Direction::decreasing).values;
      const double interior = last_value_max(decay);
      for (std::size_t n = 1; n <= dec.size(); ++n) {
        json at{{"instance", i}, {"n", n}, {"K", K}, {"alpha", alpha}};
        decay_upper.offer(make_check("upper", dec[n - 1], decay_arrangement_bound(ro, alpha, n, BoundSide::upper),
                                     1e-12, 0.0, at));
        if (dec[n - 1] >= interior) {
          decay_lower.offer(make_check("lower", decay_arrangement_bound(ro, alpha, n, BoundSide::lower),
                                       dec[n - 1], 1e-12, 0.0, at));
        }
      }
    }
  }
  for (const auto* w : {&merge, &counting, &relations, &lower, &upper, &decay_upper, &decay_lower}) {
    rep.checks.push_back(w->result());
  }
  return rep;
}

VerificationReport check_sum_bound(const SuiteConfig& cfg, std::uint64_t seed) {
  VerificationReport rep{"classes", seed, {}};
  const Rng root = Rng(seed).fork(kSumStream);
  WorstCase worst("sum.singular_values_vs_arrangement");
  for (std::size_t i = 0; i < cfg.sum_instances; ++i) {
    Rng rng = root.fork(i);
    const std::size_t K = rng.uniform_index(1, cfg.sum_max_terms);
    const std::size_t dim = rng.uniform_index(2, cfg.sum_max_dim);
    const double alpha = rng.uniform(0.5, 1.5);
    const auto n = static_cast<Eigen::Index>(dim);
    ComplexMatrix S = ComplexMatrix::Zero(n, n);
    std::vector<DecaySequence> svs;
    for (std::size_t k = 0; k < K; ++k) {
      auto s = exponential_decay(rng.uniform(0.5, 2.0), rng.uniform(0.05, 1.0), alpha, dim);
      S += random_with_singular_values(rng, s);
      svs.emplace_back(std::move(s));
    }
    const auto sigma = monotone_arrangement(svs, Direction::decreasing).values;
    const RealVector s_sum = singular_values(S);
    const double eps = std::max(kCheckAbsTol, linear_tolerance(n, s_sum(0)));
    for (std::size_t j = 0; j < dim; ++j) {
      worst.offer(make_check("s_n(sum) <= K sigma_n", s_sum(static_cast<Eigen::Index>(j)),
                             static_cast<double>(K) * sigma[j], 1e-8, eps,
                             {{"instance", i}, {"n", j + 1}, {"K", K}, {"dim", dim}}));
    }
  }
  rep.checks.push_back(worst.result());
  return rep;
}

VerificationReport check_weyl(const SuiteConfig& cfg, std::uint64_t seed) {
  VerificationReport rep{"classes", seed, {}};

  for (const auto& c : gallery_cases(cfg.dims)) {
    const OperatorGauge g = gauge_from_singular_values(c.g.singular_values, c.p);
    const auto numeric = eigenvalues(c.g.matrix).moduli();
    const double eps = std::max(kCheckAbsTol, linear_tolerance(c.g.matrix));
    WorstCase num("weyl.numeric[" + c.label + "]");
    WorstCase adv("weyl.advertised[" + c.label + "]");
    for (std::size_t k = 1; k <= numeric.size(); ++k) {
      const double bound = weyl_bound(g, k);
      num.offer(make_check("k", numeric[k - 1], bound, 1e-8, eps, {{"k", k}, {"params", params_json(c.p)}}));
      adv.offer(make_check("k", c.g.eigenvalue_moduli[k - 1], bound, 1e-8, 0.0, {{"k", k}, {"params", params_json(c.p)}}));
    }
    rep.checks.push_back(num.result());
    rep.checks.push_back(adv.result());
  }

  const Rng root = Rng(seed).fork(kWeylStream);
  WorstCase tri("weyl.random_upper_triangular");
  for (std::size_t i = 0; i < cfg.weyl_random_instances; ++i) {
    Rng rng = root.fork(i);
    const std::size_t dim = rng.uniform_index(2, cfg.weyl_random_max_dim);
    const ClassParams p(rng.uniform(0.1, 1.5), rng.uniform(0.5, 1.5));
    const auto s = exponential_decay(rng.uniform(0.5, 2.0), p.a, p.alpha, dim);
    const ComplexMatrix R = random_upper_triangular(rng, s);
    const OperatorGauge g = gauge_from_singular_values(s, p);
    const auto moduli = eigenvalues(R).moduli();
    const double eps = std::max(kCheckAbsTol, linear_tolerance(static_cast<Eigen::Index>(dim), s[0]));
    for (std::size_t k = 1; k <= dim; ++k) {
      tri.offer(make_check("k", moduli[k - 1], weyl_bound(g, k), 1e-8, eps,
                           {{"instance", i}, {"k", k}, {"dim", dim}, {"params", params_json(p)}}));
    }
  }
  rep.checks.push_back(tri.result());

  // Sharpness: with b above a / (1 + alpha), |lambda_{N_n}| exp(b N_n^alpha)
  // grows along the super-exponential block schedule.
  const ClassParams p(1.0, 1.0);
  const BlockSchedule schedule = BlockSchedule::super_exponential(kMaxWeylDim);
  const GalleryMatrix w = make_weyl_sharpness(p, schedule);
  const double b = 1.5 * p.a / (1.0 + p.alpha);
  std::vector<double> witness;
  for (std::size_t n = 0; n < schedule.blocks(); ++n) {
    const std::size_t N = schedule.block_ends()[n];
    witness.push_back(std::log(w.eigenvalue_moduli[N - 1]) + b * std::pow(static_cast<double>(N), p.alpha));
  }
  bool increasing = witness.size() >= 2;
  for (std::size_t n = 1; n < witness.size(); ++n) increasing = increasing && witness[n - 1] < witness[n];
  rep.checks.push_back(make_predicate_check(
      "weyl.sharpness_witness", increasing,
      {{"b", b}, {"block_ends", schedule.block_ends()}, {"log_lambda_N_exp_bN", witness}}));
  return rep;
}

VerificationReport check_class_properties(const SuiteConfig& cfg, std::uint64_t seed) {
  VerificationReport rep{"classes", seed, {}};
  const Rng root = Rng(seed).fork(kClassStream);
  (void)cfg;

  {
    // Reverse lexicographic order on a small lattice, so equal components occur.
    Rng rng = root.fork(0);
    const double values[] = {0.5, 1.0, 2.0};
    auto draw = [&] { return ClassParams(values[rng.uniform_index(0, 2)], values[rng.uniform_index(0, 2)]); };
    bool ok = true;
    for (int i = 0; i < 200; ++i) {
      const ClassParams x = draw();
      const ClassParams y = draw();
      const ClassParams z = draw();
      ok = ok && !class_precedes(x, x);
      if (!(x == y)) ok = ok && (class_precedes(x, y) != class_precedes(y, x));
      if (class_precedes(x, y) && class_precedes(y, z)) ok = ok && class_precedes(x, z);
    }
    rep.checks.push_back(make_predicate_check("classes.order_is_strict_total", ok));
  }

  {
    WorstCase inv("classes.gauge_unitary_invariance");
    for (std::size_t i = 0; i < 20; ++i) {
      Rng rng = root.fork(100 + i);
      const std::size_t dim = rng.uniform_index(2, 30);
      const ClassParams decay(rng.uniform(0.2, 1.5), rng.uniform(0.5, 1.5));
      const ClassParams p(decay.a / 2.0, decay.alpha);
      const ComplexMatrix A = random_with_singular_values(rng, exponential_decay(1.0, decay.a, decay.alpha, dim));
      const auto n = static_cast<Eigen::Index>(dim);
      const ComplexMatrix UAV = random_unitary(rng, n) * A * random_unitary(rng, n);
      inv.offer(make_equality_check("gauge", operator_gauge(UAV, p).gauge, operator_gauge(A, p).gauge, 1e-8, 0.0,
                                    {{"instance", i}, {"dim", dim}}));
    }
    rep.checks.push_back(inv.result());
  }

  {
    WorstCase prod("classes.product_gauge_bound");
    for (std::size_t i = 0; i < 20; ++i) {
      Rng rng = root.fork(200 + i);
      const std::size_t dim = rng.uniform_index(2, 40);
      const ClassParams p(rng.uniform(0.2, 1.5), rng.uniform(0.5, 1.5));
      const auto n = static_cast<Eigen::Index>(dim);
      const GalleryMatrix B = make_shift(p, dim);
      const ComplexMatrix A = random_gaussian(rng, n, n);
      const ComplexMatrix C = random_gaussian(rng, n, n);
      const OperatorGauge gB = gauge_from_singular_values(B.singular_values, p);
      prod.offer(make_check("gauge(ABC)", operator_gauge(A * B.matrix * C, p).gauge,
                            product_gauge_bound(operator_norm(A), gB, operator_norm(C)), kCheckRelTol, 0.0,
                            {{"instance", i}, {"dim", dim}}));
    }
    rep.checks.push_back(prod.result());
  }

  {
    const std::vector<double> rates = {1.0, 2.0, 4.0};
    const InterleavedSum inter = make_interleaved_sum(rates, 1.0, 60);
    std::vector<OperatorGauge> parts;
    for (std::size_t k = 0; k < rates.size(); ++k) {
      parts.push_back(gauge_from_singular_values(inter.summands[k].singular_values, ClassParams(rates[k], 1.0)));
    }
    const OperatorGauge bound = sum_gauge_bound(parts);
    rep.checks.push_back(make_check("classes.sum_gauge_bound.advertised",
                                    gauge_from_singular_values(inter.sum.singular_values, bound.params).gauge,
                                    bound.gauge, 1e-12, 0.0, {{"a_prime", bound.params.a}}));
    rep.checks.push_back(make_check("classes.sum_gauge_bound.numeric",
                                    operator_gauge(inter.sum.matrix, bound.params).gauge, bound.gauge, kCheckRelTol,
                                    0.0, {{"a_prime", bound.params.a}}));
  }

  {
    // Zero departure exactly for the normal instances.
    bool ok = true;
    json cases = json::array();
    for (std::size_t i = 0; i < 40; ++i) {
      Rng rng = root.fork(300 + i);
      const std::size_t dim = rng.uniform_index(2, 30);
      const ClassParams p(rng.uniform(0.2, 1.0), 1.0);
      ComplexMatrix A;
      const bool make_normal = i % 2 == 0;
      if (make_normal) {
        std::vector<Complex> ev(dim);
        for (auto& z : ev) z = rng.complex_normal() * std::exp(-rng.uniform(0.0, 3.0));
        A = random_normal(rng, ev);
      } else {
        A = random_upper_triangular(rng, exponential_decay(1.0, p.a, p.alpha, dim));
      }
      const double nu = departure_upper(A, p).schur_value.value_or(kInf);
      const double norm = operator_norm(A);
      const double comm = commutator_norm(A);
      const bool zero_departure = nu == 0.0;
      const bool commutes = comm <= 1e-8 * norm * norm;
      ok = ok && (zero_departure == commutes) && (zero_departure == make_normal);
      cases.push_back({{"normal", make_normal}, {"schur_value", nu}, {"commutator", comm}});
    }
    rep.checks.push_back(make_predicate_check("classes.departure_zero_iff_normal", ok, {{"cases", cases}}));
  }
  return rep;
}

VerificationReport check_f_functions(const SuiteConfig& cfg) {
  VerificationReport rep{"resolvent", 0, {}};

  for (const auto& p : test_params()) {
    const CertifiedValue f0 = f_eval(p, 0.0);
    rep.checks.push_back(make_check("f.at_zero_is_one", std::abs(f0.value - 1.0) + f0.error_radius, 0.0, 0.0, 0.0,
                                    {{"params", params_json(p)}}));
  }

  {
    WorstCase enclosure("f.enclosure_contains_brute_force");
    std::vector<std::pair<ClassParams, double>> points;
    for (const auto& p : test_params()) {
      for (double r : {1e-3, 0.1, 1.0, 10.0, 1e3}) points.emplace_back(p, r);
    }
    std::vector<CheckResult> results(points.size());
    parallel_for(points.size(), cfg.threads, [&](std::size_t i) {
      const auto [p, r] = points[i];
      const long double brute = std::exp(brute_force_log_f(p, r, cfg.brute_force_factors));
      const CertifiedValue f = f_eval(p, r);
      const double distance = static_cast<double>(std::abs(brute - static_cast<long double>(f.value)));
      results[i] = make_check(point_label(p, r), distance, f.error_radius, 0.0, 0.0,
                              {{"brute_force", static_cast<double>(brute)}, {"value", f.value},
                               {"factors", cfg.brute_force_factors}});
    });
    for (const auto& c : results) enclosure.offer(c);
    rep.checks.push_back(enclosure.result());
  }

  {
    WorstCase closed("f.below_closed_form");
    for (const auto& p : test_params()) {
      for (int k = -6; k <= 16; ++k) {
        const double r = std::pow(10.0, 0.5 * k);
        closed.offer(make_check(point_label(p, r), log_f_eval(p, r).lower(), log_f_upper_closed_form(p, r), 1e-12,
                                0.0, {{"log_domain", true}}));
      }
    }
    rep.checks.push_back(closed.result());
  }

  {
    WorstCase round("g.inverse_round_trip");
    bool monotone = true;
    for (const auto& p : test_params()) {
      double prev = -1.0;
      for (int k = -12; k <= 12; ++k) {
        const double r = std::pow(10.0, 0.5 * k);
        const double g = g_eval(p, r, kRoundTripTol).value;
        monotone = monotone && g > prev && g >= r;
        prev = g;
        const double back = g_invert(p, g, kRoundTripTol);
        round.offer(make_check(point_label(p, r), std::abs(back - r), 2.0 * kRoundTripTol * r, 0.0, 0.0));
      }
    }
    rep.checks.push_back(round.result());
    rep.checks.push_back(make_predicate_check("g.increasing_and_above_identity", monotone));
  }

  {
    const ClassParams p(1.0, 1.0);
    const double r = 1e8;
    const double model = std::pow(p.a, -1.0 / p.alpha) * p.alpha / (1.0 + p.alpha) *
                         std::pow(std::log(r), 1.0 + 1.0 / p.alpha);
    rep.checks.push_back(make_interval_check("f.log_asymptotic_ratio", log_f_eval(p, r).value / model, 0.9, 1.1,
                                             {{"r", r}, {"params", params_json(p)}}));
  }
  return rep;
}

VerificationReport check_h_functions(const SuiteConfig& cfg) {
  (void)cfg;
  VerificationReport rep{"spectral_distance", 0, {}};
  WorstCase above("h.above_identity");
  bool zero = true;
  bool monotone = true;
  for (const auto& p : test_params()) {
    zero = zero && h_eval(p, 0.0) == 0.0;
    double prev = 0.0;
    for (int k = -24; k <= 8; ++k) {
      const double r = std::pow(10.0, 0.5 * k);
      const double h = h_eval(p, r);
      monotone = monotone && h > prev;
      prev = h;
      above.offer(make_check(point_label(p, r), r, h, 0.0, 0.0));
    }
  }
  rep.checks.push_back(make_predicate_check("h.at_zero_is_zero", zero));
  rep.checks.push_back(make_predicate_check("h.increasing", monotone));
  rep.checks.push_back(above.result());

  const ClassParams p(1.0, 1.0);
  const double r = 1e-12;
  const double model = -std::pow(p.a, 1.0 / (1.0 + p.alpha)) *
                       std::pow((1.0 + p.alpha) / p.alpha, p.alpha / (1.0 + p.alpha)) *
                       std::pow(std::abs(std::log(r)), p.alpha / (1.0 + p.alpha));
  rep.checks.push_back(make_interval_check("h.log_asymptotic_ratio", log_h_eval(p, std::log(r)) / model, 0.85, 1.15,
                                           {{"r", r}, {"params", params_json(p)}}));
  return rep;
}

VerificationReport check_resolvent_bound(const SuiteConfig& cfg) {
  VerificationReport rep{"resolvent", 0, {}};
  for (const auto& c : gallery_cases(cfg.dims)) {
    const ComplexMatrix& A = c.g.matrix;
    const Spectrum spectrum = eigenvalues(A);
    const DepartureEstimate dep = departure_upper(A, gauge_from_singular_values(c.g.singular_values, c.p));
    const GridEvaluation grid = evaluate_resolvent_grid(A, spectrum, dep, GridSpec{cfg.grid_nx, cfg.grid_ny, {}},
                                                        cfg.threads);
    WorstCase worst("resolvent.bound[" + c.label + "]");
    WorstCase unit("resolvent.normal_ratio_is_one[" + c.label + "]");
    std::size_t excluded = 0;
    std::size_t blow_up = 0;
    for (const auto& pt : grid.points) {
      if (pt.status == PointStatus::excluded) ++excluded;
      if (pt.status == PointStatus::blow_up) ++blow_up;
      if (pt.status != PointStatus::ok) continue;
      const json at{{"index", pt.index}, {"z", {pt.z.real(), pt.z.imag()}}, {"d", pt.distance}};
      worst.offer(make_check("point", pt.true_norm, pt.bound, kCheckRelTol, 0.0, at));
      if (c.g.normal) unit.offer(make_check("point", std::abs(pt.ratio() - 1.0), 1e-8, 0.0, 0.0, at));
    }
    CheckResult r = worst.result();
    r.params["nu"] = dep.upper;
    r.params["b"] = dep.params.a;
    r.params["grid"] = {cfg.grid_nx, cfg.grid_ny};
    r.params["excluded"] = excluded;
    r.params["blow_up"] = blow_up;
    rep.checks.push_back(r);
    if (c.g.normal) rep.checks.push_back(unit.result());
  }
  return rep;
}

VerificationReport check_resolvent_basics(const SuiteConfig& cfg) {
  (void)cfg;
  VerificationReport rep{"resolvent", 0, {}};

  // Normal case: bound and resolvent norm both equal 1/d.
  const GalleryMatrix D = make_convolution_diagonal(1.0, 20);
  const ClassParams p(0.5, 1.0);
  const DepartureEstimate dep = departure_upper(D.matrix, p);
  const Spectrum sp = eigenvalues(D.matrix);
  for (const Complex z : {Complex(2.0, 0.0), Complex(1.0, 1.0), Complex(-0.5, 0.0)}) {
    const double d = distance_to_spectrum(z, sp);
    const json at{{"z", {z.real(), z.imag()}}, {"d", d}};
    rep.checks.push_back(make_check("resolvent.normal_bound_is_inverse_distance", std::abs(resolvent_bound(d, dep) - 1.0 / d),
                                    0.0, 0.0, 0.0, at));
    rep.checks.push_back(make_equality_check("resolvent.normal_norm_is_inverse_distance", resolvent_norm(D.matrix, z),
                                             1.0 / d, 1e-12, 0.0, at));
  }

  DepartureEstimate unit = dep;
  unit.upper = 0.5;
  rep.checks.push_back(make_equality_check("resolvent.bound_at_nu_equal_d", resolvent_bound(0.5, unit),
                                           2.0 * f_eval(unit.params, 1.0).value, 1e-12));

  // Quasi-nilpotent case against the truncated shift.
  const ClassParams q(1.0, 1.0);
  const GalleryMatrix B = make_shift(q, 40);
  const OperatorGauge g = gauge_from_singular_values(B.singular_values, q);
  WorstCase qn("resolvent.quasinilpotent_bound");
  for (const Complex z : {Complex(2.0, 0.0), Complex(0.0, 0.5), Complex(-0.1, 0.0), Complex(0.05, 0.05)}) {
    qn.offer(make_check("z", resolvent_norm(B.matrix, z), quasinilpotent_resolvent_bound(g, z), kCheckRelTol, 0.0,
                        {{"z", {z.real(), z.imag()}}}));
  }
  rep.checks.push_back(qn.result());
  return rep;
}

VerificationReport check_shift_sharpness(const SuiteConfig& cfg) {
  VerificationReport rep{"resolvent", 0, {}};
  const ClassParams p(1.0, 1.0);
  const std::size_t dim = cfg.sharpness_dim;
  const double z = cfg.sharpness_z;
  const GalleryMatrix B = make_shift(p, dim);
  const auto n = static_cast<Eigen::Index>(dim);
  const ComplexMatrix M = ComplexMatrix::Identity(n, n) - z * B.matrix;
  const double log_norm = std::log(triangular_inverse_norm(M));
  const CertifiedValue log_f = log_f_eval(p, z);
  const json at{{"dim", dim}, {"z", z}, {"log_resolvent", log_norm}, {"log_f", log_f.value}};
  rep.checks.push_back(make_check("shift.truncation_negligible", std::exp(-p.log_weight(static_cast<double>(dim))) * z,
                                  1e-16, 0.0, 0.0, at));
  rep.checks.push_back(make_check("shift.resolvent_below_f", log_norm, log_f.upper(), kCheckRelTol, 0.0, at));
  rep.checks.push_back(make_interval_check("shift.sharpness_ratio", log_norm / log_f.value, 0.8, 1.05, at));
  return rep;
}

VerificationReport check_spectral_distance(const SuiteConfig& cfg, std::uint64_t seed) {
  VerificationReport rep{"spectral_distance", seed, {}};
  const Rng root = Rng(seed).fork(kDistanceStream);
  const std::size_t dm = cfg.distance_max_dim;
  const GalleryDims dims{dm, std::min<std::size_t>(dm, 32), dm, dm / 3 * 3, dm, std::min<std::size_t>(dm, 16)};
  const auto cases = gallery_cases(dims);

  WorstCase dist("spectral.hausdorff_below_bound");
  WorstCase var("spectral.variation_below_bound");
  for (std::size_t i = 0; i < cfg.distance_pairs; ++i) {
    Rng rng = root.fork(i);
    const GalleryCase& c = cases[i % cases.size()];
    const ComplexMatrix& A = c.g.matrix;
    const ClassParams pt(c.p.a / 2.0, c.p.alpha);
    const double norm_a = operator_norm(A);
    const double target = rng.uniform(0.05, 1.0) * 0.1 * norm_a;
    std::vector<double> s_e;
    for (Eigen::Index n = 1; n <= A.rows(); ++n) {
      s_e.push_back(target * std::exp(-c.p.a * (std::pow(static_cast<double>(n), c.p.alpha) - 1.0)));
    }
    const ComplexMatrix E = random_with_singular_values(rng, s_e);
    const ComplexMatrix B = A + E;
    const double norm_e = operator_norm(E);
    const DepartureEstimate dep_a = departure_upper(A, gauge_from_singular_values(c.g.singular_values, pt));
    const DepartureEstimate dep_b = departure_upper(B, pt);
    const Spectrum sa = eigenvalues(A);
    const Spectrum sb = eigenvalues(B);
    const double eps = std::max(kCheckAbsTol, linear_tolerance(B));
    const json at{{"pair", i}, {"A", c.label}, {"normE", norm_e}, {"nuA", dep_a.upper}, {"nuB", dep_b.upper}};
    dist.offer(make_check("pair", hausdorff_distance(sa, sb), spectral_distance_bound(norm_e, dep_a, dep_b),
                          kCheckRelTol, eps, at));
    var.offer(make_check("pair", directed_distance(sb, sa), spectral_variation_bound(norm_e, dep_a), kCheckRelTol, eps,
                         at));
  }
  rep.checks.push_back(dist.result());
  rep.checks.push_back(var.result());

  WorstCase normal_eq("spectral.normal_bound_is_norm");
  WorstCase normal_dist("spectral.normal_hausdorff_below_norm");
  for (std::size_t i = 0; i < cfg.normal_pairs; ++i) {
    Rng rng = root.fork(10000 + i);
    const std::size_t dim = rng.uniform_index(2, dm);
    const ClassParams p(rng.uniform(0.2, 1.0), 1.0);
    const ClassParams pt(p.a / 2.0, p.alpha);
    std::vector<Complex> d(dim);
    std::vector<Complex> d2(dim);
    for (std::size_t n = 0; n < dim; ++n) {
      const double mod = std::exp(-p.log_weight(static_cast<double>(n + 1)));
      d[n] = std::polar(mod, rng.uniform(-3.0, 3.0));
      d2[n] = d[n] + 0.1 * mod * rng.complex_normal();
    }
    ComplexMatrix A;
    ComplexMatrix B;
    if (i % 2 == 0) {
      A = Eigen::Map<const Eigen::VectorXcd>(d.data(), static_cast<Eigen::Index>(dim)).asDiagonal();
      B = Eigen::Map<const Eigen::VectorXcd>(d2.data(), static_cast<Eigen::Index>(dim)).asDiagonal();
    } else {
      const ComplexMatrix Q = random_unitary(rng, static_cast<Eigen::Index>(dim));
      A = Q * Eigen::Map<const Eigen::VectorXcd>(d.data(), static_cast<Eigen::Index>(dim)).asDiagonal() * Q.adjoint();
      B = Q * Eigen::Map<const Eigen::VectorXcd>(d2.data(), static_cast<Eigen::Index>(dim)).asDiagonal() * Q.adjoint();
    }
    const double norm_e = operator_norm(B - A);
    const double bound = spectral_distance_bound(norm_e, departure_upper(A, pt), departure_upper(B, pt));
    const json at{{"pair", i}, {"dim", dim}, {"conjugated", i % 2 == 1}, {"normE", norm_e}};
    normal_eq.offer(make_equality_check("pair", bound, norm_e, 1e-8, 0.0, at));
    normal_dist.offer(make_check("pair", hausdorff_distance(eigenvalues(A), eigenvalues(B)), bound, kCheckRelTol,
                                 std::max(kCheckAbsTol, linear_tolerance(B)), at));
  }
  rep.checks.push_back(normal_eq.result());
  rep.checks.push_back(normal_dist.result());
  return rep;
}

VerificationReport check_gallery(const SuiteConfig& cfg) {
  VerificationReport rep{"gallery", 0, {}};
  for (const auto& c : gallery_cases(cfg.dims)) {
    const double eps = std::max(kCheckAbsTol, linear_tolerance(c.g.matrix));
    const auto sv = to_vector(singular_values(c.g.matrix));
    rep.checks.push_back(make_check("gallery.singular_values[" + c.label + "]",
                                    max_abs_difference(sv, sorted_desc(c.g.singular_values)), 0.0, 0.0, eps));
    rep.checks.push_back(make_check("gallery.eigenvalue_moduli[" + c.label + "]",
                                    max_abs_difference(eigenvalues(c.g.matrix).moduli(), c.g.eigenvalue_moduli), 0.0,
                                    0.0, eps));
    rep.checks.push_back(make_equality_check("gallery.normality[" + c.label + "]",
                                             commutator_norm(c.g.matrix) <= eps ? 1.0 : 0.0, c.g.normal ? 1.0 : 0.0, 0.0));
  }

  {
    const GalleryMatrix B = make_shift(ClassParams(1.0, 1.0), cfg.dims.shift);
    ComplexMatrix power = B.matrix;
    for (std::size_t k = 1; k < cfg.dims.shift; ++k) power = power * B.matrix;
    rep.checks.push_back(make_predicate_check("gallery.shift_nilpotent", power.isZero(0.0)));
  }

  {
    const GalleryMatrix C = make_cyclic({1.0, 0.5, 0.25, 0.0});
    double largest = 0.0;
    for (double m : eigenvalues(C.matrix).moduli()) largest = std::max(largest, m);
    rep.checks.push_back(make_check("gallery.cyclic_zero_weight_spectrum", largest, 0.0, 0.0,
                                    std::max(kCheckAbsTol, linear_tolerance(C.matrix))));
  }

  {
    const double a = 1.0;
    const GalleryMatrix D = make_convolution_diagonal(a, cfg.dims.convolution);
    const ClassParams p(a / 2.0, 1.0);
    rep.checks.push_back(make_check("gallery.convolution_gauge", operator_gauge(D.matrix, p).gauge, std::exp(a / 2.0),
                                    1e-12, 0.0));
  }

  {
    const std::vector<double> rates = {1.0, 2.0, 4.0};
    const double alpha = 1.0;
    const std::size_t dim = std::max<std::size_t>(3, cfg.dims.interleave / 3 * 3);
    const InterleavedSum inter = make_interleaved_sum(rates, alpha, dim);
    const double eps = std::max(kCheckAbsTol, linear_tolerance(inter.sum.matrix));
    std::vector<DecaySequence> parts;
    double interior = 0.0;
    for (std::size_t k = 0; k < rates.size(); ++k) {
      const auto& s = inter.summands[k].singular_values;
      rep.checks.push_back(make_check("gallery.interleave_summand[" + std::to_string(k) + "]",
                                      max_abs_difference(to_vector(singular_values(inter.summands[k].matrix)), s), 0.0,
                                      0.0, eps));
      parts.emplace_back(std::vector<double>(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(dim / rates.size())));
      interior = std::max(interior, parts.back()[parts.back().size() - 1]);
    }
    const auto arranged = monotone_arrangement(parts, Direction::decreasing).values;
    const auto sv = to_vector(singular_values(inter.sum.matrix));
    rep.checks.push_back(make_check("gallery.interleave_sum_is_arrangement", max_abs_difference(sv, arranged), 0.0,
                                    0.0, eps));
    const double a_prime = combined_exponent(rates, alpha);
    WorstCase lower("gallery.interleave_lower_bound");
    for (std::size_t n = 1; n <= dim; ++n) {
      if (arranged[n - 1] < interior) break;
      lower.offer(make_check("n", std::exp(-a_prime * std::pow(static_cast<double>(n + rates.size()), alpha)),
                             arranged[n - 1], 1e-12, 0.0, {{"n", n}}));
    }
    rep.checks.push_back(lower.result());
  }

  {
    const ClassParams p(1.0, 1.0);
    const GalleryMatrix W = make_weyl_sharpness(p, BlockSchedule({1, 3}));
    const std::vector<double> expect = {std::exp(-1.0), std::exp(-2.0), std::exp(-3.0)};
    rep.checks.push_back(make_check("gallery.weyl_small_schedule_singular_values",
                                    max_abs_difference(to_vector(singular_values(W.matrix)), expect), 0.0, 0.0,
                                    std::max(kCheckAbsTol, linear_tolerance(W.matrix))));
    const std::vector<double> moduli = {std::exp(-1.0), std::exp(-2.5), std::exp(-2.5)};
    rep.checks.push_back(make_check("gallery.weyl_small_schedule_moduli",
                                    max_abs_difference(eigenvalues(W.matrix).moduli(), moduli), 0.0, 0.0,
                                    std::max(kCheckAbsTol, linear_tolerance(W.matrix))));
  }
  return rep;
}

// -------------------------------------------------------------------- driver

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"arrangements", "classes", "resolvent", "spectral_distance",
                                                 "gallery", "all"};
  return names;
}

VerificationReport run_suite(const std::string& name, std::uint64_t seed, const SuiteConfig& cfg) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), name) == names.end()) {
    std::string list;
    for (const auto& n : names) list += (list.empty() ? "" : ", ") + n;
    throw std::invalid_argument("unknown suite '" + name + "'; valid suites: " + list);
  }
  VerificationReport rep{name, seed, {}};
  const bool all = name == "all";
  if (all || name == "arrangements") rep.append(check_arrangements(cfg, seed));
  if (all || name == "classes") {
    rep.append(check_sum_bound(cfg, seed));
    rep.append(check_weyl(cfg, seed));
    rep.append(check_class_properties(cfg, seed));
  }
  if (all || name == "resolvent") {
    rep.append(check_f_functions(cfg));
    rep.append(check_resolvent_basics(cfg));
    rep.append(check_resolvent_bound(cfg));
    rep.append(check_shift_sharpness(cfg));
  }
  if (all || name == "spectral_distance") {
    rep.append(check_h_functions(cfg));
    rep.append(check_spectral_distance(cfg, seed));
  }
  if (all || name == "gallery") rep.append(check_gallery(cfg));
  return rep;
}

VerificationReport run_suite(const std::string& name, std::uint64_t seed, std::size_t budget) {
  return run_suite(name, seed, suite_config_for_budget(budget));
}

}  // namespace expobound
