#include "qramsey/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <set>
#include <thread>

namespace qramsey {

namespace {

std::vector<NFamily> stage_families(int ground, ConsistencyScope scope) {
  std::vector<NFamily> out;
  for (const auto& fam : enumerate_families(ground)) {
    if (fam.part_count() < 2 || !fam.is_new()) continue;
    if (scope == ConsistencyScope::lower && !fam.is_lower()) continue;
    out.push_back(fam);
  }
  return out;
}

// distinct products of `stages` factors from [1..cap]
std::set<PosRational> dilation_products(long cap, std::size_t stages) {
  std::set<PosRational> acc{PosRational::one()};
  for (std::size_t t = 0; t < stages; ++t) {
    std::set<PosRational> next;
    for (const auto& p : acc)
      for (long d = 1; d <= cap; ++d) next.insert(p * PosRational(d));
    acc = std::move(next);
  }
  return acc;
}

std::vector<PosRational> dedup_sorted(std::vector<PosRational> q) {
  std::sort(q.begin(), q.end());
  q.erase(std::unique(q.begin(), q.end()), q.end());
  return q;
}

std::optional<BuildResult> build_consistent(const Coloring& c, int n,
                                            const std::vector<PosRational>& q_set,
                                            const BuildOptions& opt, ConsistencyScope scope) {
  if (n < 1) throw std::invalid_argument("build: n must be >= 1");
  BuildResult result{RatVector({PosRational::one()}), {}};
  if (n == 1) return result;

  // commit the dilation windows top-down: Q_{k-1} = Q_k * products(k)
  std::vector<std::vector<PosRational>> q_chain(static_cast<std::size_t>(n) + 1);
  q_chain[static_cast<std::size_t>(n)] = dedup_sorted(q_set);
  std::vector<std::set<PosRational>> products(static_cast<std::size_t>(n) + 1);
  for (int k = n; k >= 2; --k) {
    products[static_cast<std::size_t>(k)] =
        dilation_products(opt.dilation_cap, stage_families(k, scope).size());
    std::vector<PosRational> grown;
    for (const auto& q : q_chain[static_cast<std::size_t>(k)])
      for (const auto& p : products[static_cast<std::size_t>(k)]) grown.push_back(q * p);
    q_chain[static_cast<std::size_t>(k) - 1] = dedup_sorted(std::move(grown));
  }

  SearchBudget stage_budget = opt.budget;
  stage_budget.height_bound = opt.dilation_cap;

  for (int k = 2; k <= n; ++k) {
    auto fams = stage_families(k, scope);
    auto mode = scope == ConsistencyScope::lower ? ExtensionMode::restricted : ExtensionMode::full;
    auto ext = stable_extension(fams, mode, q_chain[static_cast<std::size_t>(k)], c, result.v,
                                PosRational::one(), stage_budget);
    if (!ext) return std::nullopt;
    if (!products[static_cast<std::size_t>(k)].count(ext->scale))
      throw std::logic_error("build: stage scale escaped the committed dilation window");
    BuildStage stage;
    stage.ground = k;
    stage.q_used = q_chain[static_cast<std::size_t>(k)];
    stage.scale = ext->scale;
    stage.x_prime = ext->x_prime;
    stage.families = ext->stages;
    stage.rounds = ext->rounds;
    result.stages.push_back(std::move(stage));
    result.v = ext->v;
  }

  // exhaustive verification of the finished vector
  auto verify_set = scope == ConsistencyScope::lower ? enumerate_lower(n) : enumerate_families(n);
  for (const auto& q : q_set) {
    auto check = is_X_consistent(scale(q, result.v), verify_set, c);
    if (!check.consistent)
      throw std::logic_error("build: finished vector fails on family " + check.failing->str() +
                             " at q = " + q.str());
  }
  return result;
}

}  // namespace

std::optional<BuildResult> build_lower_consistent(const Coloring& c, int n,
                                                  const std::vector<PosRational>& q_set,
                                                  const BuildOptions& opt) {
  return build_consistent(c, n, q_set, opt, ConsistencyScope::lower);
}

std::optional<BuildResult> build_full_consistent(const Coloring& c, int n,
                                                 const std::vector<PosRational>& q_set,
                                                 const BuildOptions& opt) {
  return build_consistent(c, n, q_set, opt, ConsistencyScope::all);
}

std::vector<PosRational> rationals_up_to_height(long h) {
  std::vector<PosRational> out;
  for (long height = 1; height <= h; ++height) {
    std::vector<std::pair<long, long>> fresh;
    for (long num = 1; num <= height; ++num)
      if (std::gcd(num, height) == 1) fresh.emplace_back(num, height);
    for (long den = 1; den < height; ++den)
      if (std::gcd(height, den) == 1) fresh.emplace_back(height, den);
    std::sort(fresh.begin(), fresh.end());
    for (auto [num, den] : fresh) out.emplace_back(num, den);
  }
  return out;
}

std::vector<PatternValue> pattern_values(HindmanPattern pattern, const std::vector<PosRational>& x) {
  const int k = static_cast<int>(x.size());
  std::vector<PatternValue> out;
  if (pattern == HindmanPattern::sums_and_products) {
    for (std::uint64_t sub = 1; sub < (1ULL << k); ++sub) {
      IndexSet set(sub);
      std::optional<PosRational> sum;
      for (int i : set.elements()) sum = sum ? *sum + x[static_cast<std::size_t>(i - 1)]
                                             : x[static_cast<std::size_t>(i - 1)];
      out.push_back(PatternValue{"sum{" + set.str() + "}", *sum});
    }
    for (std::uint64_t sub = 1; sub < (1ULL << k); ++sub) {
      IndexSet set(sub);
      out.push_back(PatternValue{"prod{" + set.str() + "}", set.product_over(x)});
    }
  } else {
    RatVector v(x);
    for (const auto& fam : enumerate_families(k))
      out.push_back(PatternValue{fam.str(), phi(fam, v)});
  }
  return out;
}

std::optional<HindmanWitness> verify_hindman(HindmanPattern pattern, const Coloring& c,
                                             const std::vector<PosRational>& x) {
  auto values = pattern_values(pattern, x);
  std::optional<int> common;
  for (auto& pv : values) {
    auto col = c(pv.value);
    if (!col) return std::nullopt;
    pv.color = *col;
    if (!common) common = col;
    if (*common != *col) return std::nullopt;
  }
  bool distinct = true;
  for (std::size_t i = 0; i < x.size() && distinct; ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j)
      if (x[i] == x[j]) {
        distinct = false;
        break;
      }
  return HindmanWitness{x, std::move(values), *common, distinct};
}

namespace {

// label-free pattern values for the hot scan path
std::vector<PosRational> raw_pattern_values(HindmanPattern pattern,
                                            const std::vector<NFamily>& fams,
                                            const std::vector<PosRational>& x) {
  std::vector<PosRational> out;
  if (pattern == HindmanPattern::sums_and_products) {
    const int k = static_cast<int>(x.size());
    for (std::uint64_t sub = 1; sub < (1ULL << k); ++sub) {
      std::optional<PosRational> sum;
      for (std::uint64_t m = sub; m; m &= m - 1) {
        const auto& xi = x[static_cast<std::size_t>(__builtin_ctzll(m))];
        sum = sum ? *sum + xi : xi;
      }
      out.push_back(*sum);
    }
    for (std::uint64_t sub = 1; sub < (1ULL << k); ++sub)
      out.push_back(IndexSet(sub).product_over(x));
  } else {
    RatVector v(x);
    for (const auto& fam : fams) out.push_back(phi(fam, v));
  }
  return out;
}

// size of the largest single-color defined subpattern
int pattern_agreement(const Coloring& c, const std::vector<PosRational>& values) {
  std::vector<std::pair<int, int>> counts;
  for (const auto& v : values) {
    auto col = c(v);
    if (!col) continue;
    bool seen = false;
    for (auto& [color, count] : counts)
      if (color == *col) {
        ++count;
        seen = true;
      }
    if (!seen) counts.emplace_back(*col, 1);
  }
  int best = 0;
  for (const auto& [color, count] : counts) best = std::max(best, count);
  return best;
}

struct DirectScan {
  std::optional<std::vector<PosRational>> hit;
  PartialPattern best{{}, 0, 0};
  long candidates = 0;
  bool exhausted = true;
};

struct LevelScan {
  std::optional<std::size_t> hit_index;
  PartialPattern best{{}, 0, 0};
  long candidates = 0;
};

DirectScan direct_search(HindmanPattern pattern, const Coloring& c, int k,
                         const HindmanOptions& opt) {
  DirectScan scan;
  const std::vector<PosRational> pool = rationals_up_to_height(opt.height);
  const std::vector<NFamily> fams =
      pattern == HindmanPattern::disjoint_products ? enumerate_families(k) : std::vector<NFamily>();

  // offsets[h] = number of rationals with height <= h
  std::vector<std::size_t> offsets(static_cast<std::size_t>(opt.height) + 1, 0);
  {
    std::size_t i = 0;
    for (long h = 1; h <= opt.height; ++h) {
      while (i < pool.size() && pool[i].height() <= h) ++i;
      offsets[static_cast<std::size_t>(h)] = i;
    }
  }

  auto decode = [&](std::size_t t, std::size_t hi) {
    std::vector<PosRational> x;
    x.reserve(static_cast<std::size_t>(k));
    std::size_t rest = t;
    for (int i = 0; i < k; ++i) {
      x.push_back(pool[rest % hi]);
      rest /= hi;
    }
    std::reverse(x.begin(), x.end());  // leftmost coordinate most significant
    return x;
  };
  auto is_fresh = [&](std::size_t t, std::size_t hi, std::size_t lo) {
    std::size_t rest = t;
    for (int i = 0; i < k; ++i) {
      if (rest % hi >= lo) return true;
      rest /= hi;
    }
    return false;
  };

  BudgetMeter meter(opt.budget);
  for (long h = 1; h <= opt.height; ++h) {
    const std::size_t hi = offsets[static_cast<std::size_t>(h)];
    const std::size_t lo = offsets[static_cast<std::size_t>(h) - 1];
    if (hi == lo) continue;
    std::size_t total = 1;
    for (int i = 0; i < k; ++i) total *= hi;

    auto scan_range = [&](std::size_t from, std::size_t to, long cap,
                          const std::atomic<std::size_t>* stop) {
      LevelScan local;
      for (std::size_t t = from; t < to; ++t) {
        if (stop && t > stop->load(std::memory_order_relaxed)) break;
        if (!is_fresh(t, hi, lo)) continue;
        if (local.candidates >= cap) break;
        ++local.candidates;
        std::vector<PosRational> x = decode(t, hi);
        auto values = raw_pattern_values(pattern, fams, x);
        int agree = pattern_agreement(c, values);
        if (agree == static_cast<int>(values.size())) {
          local.hit_index = t;
          return local;
        }
        if (agree > local.best.agreeing)
          local.best = PartialPattern{x, agree, static_cast<int>(values.size())};
      }
      return local;
    };

    const long remaining = opt.budget.max_candidates - meter.candidates();
    if (remaining <= 0) {
      scan.candidates = meter.candidates();
      scan.exhausted = false;
      return scan;
    }

    LevelScan level;
    const int jobs = std::max(1, opt.jobs);
    if (jobs == 1) {
      level = scan_range(0, total, remaining, nullptr);
    } else {
      // contiguous chunks; earliest hit index wins, so the outcome does not
      // depend on thread timing
      std::atomic<std::size_t> stop(total);
      std::vector<LevelScan> parts(static_cast<std::size_t>(jobs));
      std::vector<std::thread> threads;
      const std::size_t chunk = (total + static_cast<std::size_t>(jobs) - 1) / jobs;
      const long cap = (remaining + jobs - 1) / jobs;
      for (int j = 0; j < jobs; ++j) {
        threads.emplace_back([&, j]() {
          std::size_t from = static_cast<std::size_t>(j) * chunk;
          std::size_t to = std::min(total, from + chunk);
          if (from >= to) return;
          parts[static_cast<std::size_t>(j)] = scan_range(from, to, cap, &stop);
          if (parts[static_cast<std::size_t>(j)].hit_index) {
            std::size_t mine = *parts[static_cast<std::size_t>(j)].hit_index;
            std::size_t cur = stop.load();
            while (mine < cur && !stop.compare_exchange_weak(cur, mine)) {
            }
          }
        });
      }
      for (auto& th : threads) th.join();
      for (const auto& part : parts) {
        level.candidates += part.candidates;
        if (part.hit_index && (!level.hit_index || *part.hit_index < *level.hit_index))
          level.hit_index = part.hit_index;
        if (part.best.agreeing > level.best.agreeing) level.best = part.best;
      }
    }

    if (level.best.agreeing > scan.best.agreeing) scan.best = level.best;
    if (level.hit_index) {
      // report the canonical candidate count up to the witness, so the
      // stats do not depend on thread timing
      long upto = 0;
      for (std::size_t t = 0; t <= *level.hit_index; ++t)
        if (is_fresh(t, hi, lo)) ++upto;
      meter.tick(upto);
      scan.hit = decode(*level.hit_index, hi);
      scan.candidates = meter.candidates();
      return scan;
    }
    meter.tick(level.candidates);
    if (meter.spent()) {
      scan.candidates = meter.candidates();
      scan.exhausted = false;
      return scan;
    }
  }
  scan.candidates = meter.candidates();
  return scan;
}

std::optional<std::vector<PosRational>> constructive_search(HindmanPattern pattern,
                                                            const Coloring& c, int k,
                                                            const HindmanOptions& opt,
                                                            std::vector<std::string>& notes) {
  BuildOptions bopt{opt.budget, opt.dilation_cap};
  for (int n = std::max(k, 1); n <= opt.ground_cap; ++n) {
    std::optional<BuildResult> built =
        pattern == HindmanPattern::sums_and_products
            ? build_lower_consistent(c, n, {PosRational::one()}, bopt)
            : build_full_consistent(c, n, {PosRational::one()}, bopt);
    if (!built) {
      notes.push_back("n=" + std::to_string(n) + ": consistent vector not found within budget");
      continue;
    }
    const RatVector& v = built->v;
    SubsetColoring sub = [&c, &v](const IndexSet& set) { return c(set.product_over(v)); };

    std::optional<std::vector<IndexSet>> blocks;
    if (pattern == HindmanPattern::sums_and_products) {
      FamilyColoring cprime = family_coloring(c, v);
      FamilyColoringFn cfn = [&cprime](const NFamily& fam) { return cprime(fam); };
      auto res = pseudo_dut_construct(cfn, sub, n, k, opt.budget);
      if (res) blocks = res->blocks;
    } else {
      if (n <= 6) blocks = dut_witness(sub, n, k, 6);
    }
    if (!blocks) {
      notes.push_back("n=" + std::to_string(n) + ": no block system within budget");
      continue;
    }

    std::vector<PosRational> x;
    for (const auto& blk : *blocks) x.push_back(blk.product_over(v));

    // the reduction identity: phi(J o blocks, v) = phi(J, x) for extreme J
    for (const auto& j : enumerate_extreme(k)) {
      if (!(phi(compose(j, *blocks, n), v) == phi(j, RatVector(x))))
        throw std::logic_error("constructive route: composition evaluation law failed");
    }
    notes.push_back("n=" + std::to_string(n) + ": blocks found");
    return x;
  }
  return std::nullopt;
}

HindmanOutcome run_hindman(HindmanPattern pattern, const Coloring& c, int k,
                           const HindmanOptions& opt) {
  if (k < 1) throw std::invalid_argument("hindman: k must be >= 1");
  HindmanOutcome out;
  bool try_direct =
      opt.route == HindmanRoute::direct || opt.route == HindmanRoute::automatic;
  bool try_constructive =
      opt.route == HindmanRoute::constructive || opt.route == HindmanRoute::automatic;

  if (try_direct) {
    auto scan = direct_search(pattern, c, k, opt);
    out.candidates = scan.candidates;
    if (scan.best.agreeing > 0) out.best_partial = scan.best;
    if (scan.hit) {
      auto witness = verify_hindman(pattern, c, *scan.hit);
      if (!witness) throw std::logic_error("hindman: direct hit failed re-verification");
      out.witness = witness;
      out.route_used = "direct";
      return out;
    }
    out.notes.push_back(scan.exhausted
                            ? "direct search exhausted height " + std::to_string(opt.height)
                            : "direct search stopped by budget");
  }
  if (try_constructive) {
    auto x = constructive_search(pattern, c, k, opt, out.notes);
    if (x) {
      auto witness = verify_hindman(pattern, c, *x);
      if (!witness) throw std::logic_error("hindman: constructive witness failed re-verification");
      out.witness = witness;
      out.route_used = "constructive";
      return out;
    }
  }
  out.route_used = try_direct ? (try_constructive ? "direct+constructive" : "direct") : "constructive";
  return out;
}

}  // namespace

HindmanOutcome hindman_witness(const Coloring& c, int k, const HindmanOptions& opt) {
  return run_hindman(HindmanPattern::sums_and_products, c, k, opt);
}

HindmanOutcome generalized_witness(const Coloring& c, int k, const HindmanOptions& opt) {
  return run_hindman(HindmanPattern::disjoint_products, c, k, opt);
}

}  // namespace qramsey
