#include "qramsey/patterns.hpp"

#include <algorithm>
#include <numeric>

namespace qramsey {

IntColoring on_naturals(const Coloring& c) {
  Coloring copy = c;
  return [copy](long n) -> std::optional<int> {
    if (n < 1) return std::nullopt;
    return copy(PosRational(n));
  };
}

// --- Schur -----------------------------------------------------------------

std::optional<SchurWitness> schur_witness(const IntColoring& c, long n, bool allow_equal) {
  for (long x = 1; x <= n; ++x) {
    auto cx = c(x);
    if (!cx) continue;
    for (long y = allow_equal ? x : x + 1; x + y <= n; ++y) {
      auto cy = c(y), cs = c(x + y);
      if (cy && cs && *cx == *cy && *cx == *cs) return SchurWitness{x, y};
    }
  }
  return std::nullopt;
}

bool verify_schur(const IntColoring& c, const SchurWitness& w) {
  auto a = c(w.x), b = c(w.y), s = c(w.x + w.y);
  return a && b && s && *a == *b && *a == *s;
}

namespace {

// complete backtracking for a coloring of [1..n] avoiding monochromatic
// {x, y, x+y}; colors[i] is 1-based, index 0 unused
bool schur_avoiding(std::vector<int>& colors, long pos, long n, int r) {
  if (pos > n) return true;
  for (int col = 1; col <= r; ++col) {
    colors[pos] = col;
    bool ok = true;
    for (long x = 1; 2 * x <= pos; ++x) {
      long y = pos - x;
      if (colors[x] == col && colors[y] == col) {
        ok = false;
        break;
      }
    }
    if (ok && schur_avoiding(colors, pos + 1, n, r)) return true;
  }
  colors[pos] = 0;
  return false;
}

}  // namespace

ThresholdResult schur_threshold(int r, long guard_n) {
  if (r < 1 || r > 3) throw std::invalid_argument("schur_threshold: guarded to r <= 3");
  std::vector<int> best;
  for (long n = 1; n <= guard_n; ++n) {
    std::vector<int> colors(n + 1, 0);
    if (!schur_avoiding(colors, 1, n, r))
      return ThresholdResult{static_cast<int>(n), best};
    best.assign(colors.begin() + 1, colors.end());
  }
  throw BudgetExceeded("schur_threshold: no threshold within guard");
}

// --- Folkman ---------------------------------------------------------------

std::set<long> folkman_sums(const std::vector<long>& m) {
  if (m.empty()) throw std::invalid_argument("folkman_sums: empty vector");
  std::set<long> sums;
  for (std::size_t sub = 1; sub < (1ULL << m.size()); ++sub) {
    long s = 0;
    for (std::size_t j = 0; j < m.size(); ++j)
      if ((sub >> j) & 1) s += m[j];
    sums.insert(s);
  }
  return sums;
}

bool verify_folkman(const IntColoring& chi, const std::vector<long>& m) {
  std::optional<int> common;
  for (long s : folkman_sums(m)) {
    auto c = chi(s);
    if (!c) return false;
    if (!common) common = c;
    if (*common != *c) return false;
  }
  return true;
}

std::optional<std::vector<long>> folkman_witness(const IntColoring& chi, int k,
                                                 const SearchBudget& budget) {
  if (k < 1) throw std::invalid_argument("folkman_witness: k must be >= 1");
  BudgetMeter meter(budget);
  for (long cap = 1; cap <= budget.height_bound; ++cap) {
    // tuples in [1..cap]^k containing cap, lexicographic
    std::vector<long> m(k, 1);
    while (true) {
      if (std::find(m.begin(), m.end(), cap) != m.end()) {
        meter.tick();
        if (meter.spent()) return std::nullopt;
        if (verify_folkman(chi, m)) return m;
      }
      int i = k - 1;
      while (i >= 0 && m[i] == cap) {
        m[i] = 1;
        --i;
      }
      if (i < 0) break;
      ++m[i];
    }
  }
  return std::nullopt;
}

// --- van der Waerden -------------------------------------------------------

std::optional<VdwWitness> vdw_witness(const IntColoring& c, int k, long n) {
  if (k < 2) throw std::invalid_argument("vdw_witness: k must be >= 2");
  for (long a = 1; a <= n; ++a) {
    for (long d = 1; a + static_cast<long>(k - 1) * d <= n; ++d) {
      auto c0 = c(a);
      if (!c0) break;
      bool mono = true;
      for (int t = 1; t < k; ++t) {
        auto ct = c(a + t * d);
        if (!ct || *ct != *c0) {
          mono = false;
          break;
        }
      }
      if (mono) return VdwWitness{a, d};
    }
  }
  return std::nullopt;
}

bool verify_vdw(const IntColoring& c, int k, const VdwWitness& w) {
  auto c0 = c(w.a);
  if (!c0) return false;
  for (int t = 1; t < k; ++t) {
    auto ct = c(w.a + t * w.d);
    if (!ct || *ct != *c0) return false;
  }
  return true;
}

namespace {

bool vdw_avoiding(std::vector<int>& colors, long pos, long n, int k, int r) {
  if (pos > n) return true;
  for (int col = 1; col <= r; ++col) {
    colors[pos] = col;
    bool ok = true;
    // progressions ending at pos
    for (long d = 1; pos - static_cast<long>(k - 1) * d >= 1 && ok; ++d) {
      bool mono = true;
      for (int t = 1; t < k; ++t) {
        if (colors[pos - t * d] != col) {
          mono = false;
          break;
        }
      }
      if (mono) ok = false;
    }
    if (ok && vdw_avoiding(colors, pos + 1, n, k, r)) return true;
  }
  colors[pos] = 0;
  return false;
}

}  // namespace

ThresholdResult vdw_threshold(int k, int r, long guard_n) {
  if (k < 2 || r < 1 || r > 3) throw std::invalid_argument("vdw_threshold: guarded to r <= 3, k >= 2");
  std::vector<int> best;
  for (long n = 1; n <= guard_n; ++n) {
    std::vector<int> colors(n + 1, 0);
    if (!vdw_avoiding(colors, 1, n, k, r))
      return ThresholdResult{static_cast<int>(n), best};
    best.assign(colors.begin() + 1, colors.end());
  }
  throw BudgetExceeded("vdw_threshold: no threshold within guard");
}

// --- polynomial van der Waerden ----------------------------------------------

GoodPolyVector::GoodPolyVector(RatioIndex omega)
    : omega_(std::move(omega)), terms_(omega_.size()) {}

GoodPolyVector& GoodPolyVector::add_term(const RatioPair& p, long exponent, NonnegRational coeff) {
  if (exponent < 1)
    throw std::invalid_argument("GoodPolyVector: exponent " + std::to_string(exponent) +
                                " < 1 would leave a constant term");
  auto pos = omega_.position(p);
  if (!pos) throw std::invalid_argument("GoodPolyVector: pair (" + p.str() + ") not in Omega");
  if (coeff.is_zero()) return *this;
  for (auto& t : terms_[*pos]) {
    if (t.first == exponent) {
      t.second = t.second + coeff;
      return *this;
    }
  }
  terms_[*pos].emplace_back(exponent, std::move(coeff));
  return *this;
}

bool GoodPolyVector::is_zero() const {
  for (const auto& ts : terms_)
    if (!ts.empty()) return false;
  return true;
}

std::vector<NonnegRational> GoodPolyVector::eval(long d) const {
  if (d < 1) throw std::invalid_argument("GoodPolyVector: evaluation point must be a natural");
  std::vector<NonnegRational> out;
  out.reserve(terms_.size());
  PosRational dq(d);
  for (const auto& ts : terms_) {
    NonnegRational v;
    for (const auto& [e, coeff] : ts) v = v + coeff * dq.pow(e);
    out.push_back(v);
  }
  return out;
}

std::vector<BigInt> GoodPolyVector::eval_integral(long d) const {
  std::vector<BigInt> out;
  for (const auto& v : eval(d)) {
    if (v.denominator() != 1)
      throw std::invalid_argument("GoodPolyVector: non-integral value at d=" + std::to_string(d));
    out.push_back(v.numerator());
  }
  return out;
}

BigInt GoodPolyVector::denominator_lcm() const {
  BigInt l = 1;
  for (const auto& ts : terms_)
    for (const auto& [e, coeff] : ts) {
      BigInt den = coeff.denominator();
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
    }
  return l;
}

std::optional<PvdwWitness> pvdw_witness(const std::vector<GoodPolyVector>& polys,
                                        const LatticeColoring& c, const SearchBudget& budget,
                                        BudgetMeter* meter) {
  if (polys.empty()) throw std::invalid_argument("pvdw_witness: empty polynomial system");
  const RatioIndex& omega = polys.front().omega();
  for (const auto& p : polys)
    if (!(p.omega() == omega)) throw std::invalid_argument("pvdw_witness: mixed Omega");
  const std::size_t dim = omega.size();

  BigInt step = 1;
  for (const auto& p : polys) {
    BigInt l = p.denominator_lcm();
    mpz_lcm(step.get_mpz_t(), step.get_mpz_t(), l.get_mpz_t());
  }
  if (step > budget.height_bound) return std::nullopt;
  const long dstep = static_cast<long>(step.get_si());

  BudgetMeter local(budget);
  BudgetMeter& bm = meter ? *meter : local;

  for (long window = 1; window <= budget.height_bound; window = std::min(window * 2, budget.height_bound)) {
    for (long d = dstep; d <= window; d += dstep) {
      std::vector<std::vector<BigInt>> steps;
      steps.reserve(polys.size());
      for (const auto& p : polys) steps.push_back(p.eval_integral(d));

      LatticePoint x(dim, BigInt(0));
      while (true) {
        bm.tick();
        if (bm.spent()) return std::nullopt;
        auto base = c(x);
        if (base) {
          bool mono = true;
          for (const auto& st : steps) {
            LatticePoint y(dim);
            for (std::size_t i = 0; i < dim; ++i) y[i] = x[i] + st[i];
            auto cy = c(y);
            if (!cy || *cy != *base) {
              mono = false;
              break;
            }
          }
          if (mono) return PvdwWitness{x, d, window};
        }
        // next lattice point in [0..window]^dim, lexicographic from the tail
        std::size_t i = dim;
        while (i > 0 && x[i - 1] == window) {
          x[i - 1] = 0;
          --i;
        }
        if (i == 0) break;
        x[i - 1] += 1;
      }
      if (dim == 0) break;  // single empty lattice point
    }
    if (window == budget.height_bound) break;
  }
  return std::nullopt;
}

bool verify_pvdw(const std::vector<GoodPolyVector>& polys, const LatticeColoring& c,
                 const PvdwWitness& w) {
  auto base = c(w.x);
  if (!base) return false;
  for (const auto& p : polys) {
    std::vector<BigInt> st = p.eval_integral(w.d);
    LatticePoint y(w.x.size());
    for (std::size_t i = 0; i < y.size(); ++i) y[i] = w.x[i] + st[i];
    auto cy = c(y);
    if (!cy || *cy != *base) return false;
  }
  return true;
}

// --- Disjoint Unions ---------------------------------------------------------

bool verify_dut(const SubsetColoring& c, const std::vector<IndexSet>& blocks) {
  if (blocks.empty()) return false;
  std::optional<int> common;
  for (std::size_t sub = 1; sub < (1ULL << blocks.size()); ++sub) {
    IndexSet u;
    for (std::size_t j = 0; j < blocks.size(); ++j)
      if ((sub >> j) & 1) u = u.united(blocks[j]);
    auto col = c(u);
    if (!col) return false;
    if (!common) common = col;
    if (*common != *col) return false;
  }
  return true;
}

namespace {

bool dut_search(const SubsetColoring& c, int n, int k, std::vector<IndexSet>& chosen,
                std::uint64_t used, std::uint64_t min_mask) {
  if (static_cast<int>(chosen.size()) == k) return verify_dut(c, chosen);
  for (std::uint64_t m = min_mask; m < (1ULL << n); ++m) {
    if (m & used) continue;
    chosen.push_back(IndexSet(m));
    if (dut_search(c, n, k, chosen, used | m, m + 1)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

std::optional<std::vector<IndexSet>> dut_witness(const SubsetColoring& c, int n, int k, int guard) {
  if (n < 1 || k < 1) throw std::invalid_argument("dut_witness: need n, k >= 1");
  if (n > guard) throw std::invalid_argument("dut_witness: n exceeds exhaustive guard");
  std::vector<IndexSet> chosen;
  if (!dut_search(c, n, k, chosen, 0, 1)) return std::nullopt;
  std::sort(chosen.begin(), chosen.end());  // by maximum element
  return chosen;
}

namespace {

// Backtracking over 2-colorings of the nonempty subsets of [n], in mask
// order: when coloring mask u, every triple (i, j, u) with i | j = u and
// i & j = 0 has both smaller masks already colored.
bool dut_avoiding_22(std::vector<int>& colors, std::uint64_t u, std::uint64_t top) {
  if (u > top) return true;
  for (int col = 1; col <= 2; ++col) {
    colors[u] = col;
    bool ok = true;
    // enumerate proper sub-splits i, u^i of u
    for (std::uint64_t i = (u - 1) & u; i; i = (i - 1) & u) {
      std::uint64_t j = u ^ i;
      if (i > j) continue;
      if (j == u) continue;
      if (colors[i] == col && colors[j] == col) {
        ok = false;
        break;
      }
    }
    if (ok && dut_avoiding_22(colors, u + 1, top)) return true;
  }
  colors[u] = 0;
  return false;
}

}  // namespace

DutThreshold dut_threshold_22(int guard) {
  std::vector<int> best;
  for (int n = 1; n <= guard; ++n) {
    std::uint64_t top = (1ULL << n) - 1;
    std::vector<int> colors(top + 1, 0);
    if (!dut_avoiding_22(colors, 1, top)) return DutThreshold{n, best};
    best = colors;
  }
  throw BudgetExceeded("dut_threshold_22: no threshold within guard");
}

// --- pseudo disjoint unions ---------------------------------------------------

namespace {

// chi with chi[t] = common color of the size-(t+1) subsets of s, if c is
// determined by cardinality on s
std::optional<std::vector<int>> size_homogeneous(const SubsetColoring& c, const IndexSet& s) {
  std::vector<std::optional<int>> by_size(static_cast<std::size_t>(s.size()) + 1);
  std::uint64_t mask = s.mask();
  for (std::uint64_t sub = mask; sub; sub = (sub - 1) & mask) {
    IndexSet part(sub);
    auto col = c(part);
    if (!col) return std::nullopt;
    auto& slot = by_size[static_cast<std::size_t>(part.size())];
    if (!slot)
      slot = col;
    else if (*slot != *col)
      return std::nullopt;
  }
  std::vector<int> chi;
  for (std::size_t t = 1; t < by_size.size(); ++t) chi.push_back(*by_size[t]);
  return chi;
}

}  // namespace

std::optional<PseudoDutResult> pseudo_dut_construct(const FamilyColoringFn& cprime,
                                                    const SubsetColoring& c, int n, int k,
                                                    const SearchBudget& budget) {
  if (n < 1 || k < 1) throw std::invalid_argument("pseudo_dut_construct: need n, k >= 1");

  // the lemma's hypothesis: C' = c o f on every lower family
  for (const auto& fam : enumerate_lower(n)) {
    auto lhs = cprime(fam);
    auto rhs = c(fam.leading_part());
    if (!lhs || !rhs || *lhs != *rhs)
      throw HypothesisViolation(
          "pseudo_dut_construct: C' disagrees with c o f on lower family " + fam.str(), fam);
  }

  BudgetMeter meter(budget);

  // subsets of [n] in decreasing size, canonical within a size
  std::vector<std::uint64_t> masks;
  for (std::uint64_t m = 1; m < (1ULL << n); ++m) masks.push_back(m);
  std::stable_sort(masks.begin(), masks.end(), [](std::uint64_t a, std::uint64_t b) {
    return __builtin_popcountll(a) > __builtin_popcountll(b);
  });

  for (std::uint64_t mask : masks) {
    meter.tick();
    if (meter.spent()) return std::nullopt;
    IndexSet s(mask);
    auto chi_opt = size_homogeneous(c, s);
    if (!chi_opt) continue;
    const std::vector<int>& chi = *chi_opt;

    // Folkman step under chi, sums confined to [1..|S|]
    IntColoring chi_fn = [&chi, &s](long v) -> std::optional<int> {
      if (v < 1 || v > s.size()) return std::nullopt;
      return chi[static_cast<std::size_t>(v - 1)];
    };
    SearchBudget fb = budget;
    fb.height_bound = s.size();
    auto m_opt = folkman_witness(chi_fn, k, fb);
    if (!m_opt) continue;

    std::vector<long> m = *m_opt;
    std::sort(m.begin(), m.end(), std::greater<long>());

    // consecutive blocks of S; the ordering chain holds by construction
    std::vector<int> elems = s.elements();
    std::vector<IndexSet> blocks;
    std::size_t at = 0;
    for (int j = 0; j < k; ++j) {
      std::vector<int> blk(elems.begin() + at, elems.begin() + at + m[static_cast<std::size_t>(j)]);
      blocks.push_back(IndexSet::from_elements(blk));
      at += static_cast<std::size_t>(m[static_cast<std::size_t>(j)]);
    }

    // verify the extreme-composite pattern before returning
    std::optional<int> common;
    bool ok = true;
    for (const auto& j : enumerate_extreme(k)) {
      auto col = cprime(compose(j, blocks, n));
      if (!col) {
        ok = false;
        break;
      }
      if (!common) common = col;
      if (*common != *col) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    return PseudoDutResult{blocks, s, chi, m};
  }
  return std::nullopt;
}

}  // namespace qramsey
