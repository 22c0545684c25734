#include "qramsey/stabilizer.hpp"

#include <algorithm>
#include <stdexcept>

namespace qramsey {

namespace {

std::vector<Perturbation> with_identity(std::vector<Perturbation> h, const RatioIndex& omega) {
  Perturbation id = Perturbation::identity(omega);
  bool have = false;
  for (const auto& p : h)
    if (p == id) have = true;
  if (!have) h.insert(h.begin(), id);
  return h;
}

std::vector<Perturbation> dedup(std::vector<Perturbation> h) {
  std::sort(h.begin(), h.end());
  h.erase(std::unique(h.begin(), h.end()), h.end());
  return h;
}

}  // namespace

StabilizerTask::StabilizerTask(Shift target_, std::vector<Perturbation> h_, PointColoring coloring_,
                               PointX point_, SearchBudget budget_)
    : target(std::move(target_)),
      h(std::move(h_)),
      coloring(std::move(coloring_)),
      point(std::move(point_)),
      budget(budget_) {
  if (!coloring.is_structured())
    throw std::invalid_argument("StabilizerTask: coloring must carry the C_S structure");
  const RatioIndex& omega = target.weights.omega();
  for (const auto& p : h)
    if (p.omega() != omega)
      throw std::invalid_argument("StabilizerTask: H element over a different Omega");
  h = with_identity(std::move(h), omega);
}

bool verify_stabilized(const Shift& target, const std::vector<Perturbation>& h,
                       const PointColoring& coloring, const PointX& at) {
  for (const auto& p : h) {
    PointX y = apply(p, at);
    auto lhs = coloring(apply(target, y));
    auto rhs = coloring(y);
    if (!lhs || !rhs || *lhs != *rhs) return false;
  }
  return true;
}

std::optional<StabilizeOutcome> stabilize(const StabilizerTask& task) {
  const RatioIndex& omega = task.target.weights.omega();
  const IndexSet s = task.coloring.structure();

  // dilation parts H*, deduplicated
  std::vector<Dilation> h_star;
  for (const auto& p : task.h) h_star.push_back(p.dilation);
  std::sort(h_star.begin(), h_star.end());
  h_star.erase(std::unique(h_star.begin(), h_star.end()), h_star.end());

  // push target o shift-part and shift-part across each element's dilation
  std::vector<RatioWeights> xi;
  for (const auto& p : task.h) {
    xi.push_back(uncommute_shift_past_dilation(p.shift.weights, p.dilation));
    RatioWeights with_target = p.shift.weights.plus(task.target.weights);
    xi.push_back(uncommute_shift_past_dilation(with_target, p.dilation));
  }
  std::sort(xi.begin(), xi.end());
  xi.erase(std::unique(xi.begin(), xi.end()), xi.end());

  PointColoring aux = auxiliary(task.coloring, h_star);
  WideColoring base = [aux](const PosRational& w) { return aux.eval_base(w); };

  ShiftTask engine_task(s, omega, xi);
  BudgetMeter meter(task.budget);
  auto engine = general_term_shift(engine_task, base, task.point.u, task.point.x, task.budget, &meter);
  if (!engine) return std::nullopt;

  StabilizeOutcome out{engine->as_perturbation(), apply(engine->as_perturbation(), task.point),
                       engine->d, engine->delta, h_star.size(), xi.size(), meter.candidates()};
  if (!verify_stabilized(task.target, task.h, task.coloring, out.moved))
    throw std::logic_error("stabilize: engine result fails the definitional equalities");
  return out;
}

std::variant<MultiTaskOutcome, MultiTaskFailure> multitask(const MultiTaskInstance& inst) {
  const std::size_t l = inst.stages.size();
  if (l == 0) throw std::invalid_argument("multitask: no stages");
  const RatioIndex& common = inst.stages.front().omega;
  for (std::size_t i = 0; i + 1 < l; ++i) {
    if (!inst.stages[i].omega.contains_all_of(inst.stages[i + 1].omega))
      throw std::invalid_argument("multitask: stage Omegas must be nested decreasing");
  }
  for (const auto& st : inst.stages) {
    if (!st.coloring.is_structured())
      throw std::invalid_argument("multitask: stage coloring must carry the C_S structure");
    if (!st.omega.contains_all_of(st.sigma.weights.omega()))
      throw std::invalid_argument("multitask: stage target outside its Omega");
  }

  std::vector<Perturbation> retained;
  for (const auto& p : inst.h0) retained.push_back(p.embedded(common));
  retained = dedup(with_identity(std::move(retained), common));

  // lazily grown candidate sets P'_t, identity first
  std::vector<std::vector<Perturbation>> cand(l, {Perturbation::identity(common)});

  for (int round = 1; round <= inst.max_rounds; ++round) {
    // compile H_t = retained o P'_l o ... o P'_{t+1}
    std::vector<std::vector<Perturbation>> h(l);
    h[l - 1] = retained;
    for (std::size_t t = l - 1; t > 0; --t) {
      std::vector<Perturbation> prev;
      for (const auto& m : h[t])
        for (const auto& c : cand[t]) prev.push_back(compose(m, c));
      h[t - 1] = dedup(std::move(prev));
    }

    PointX pt = inst.point;
    std::vector<Perturbation> chosen;
    std::vector<PointX> before;  // pt entering each stage
    bool grew = false;
    std::size_t stage_at = 0;
    bool dry = false;

    for (std::size_t i = 0; i < l && !dry; ++i) {
      const auto& st = inst.stages[i];
      Shift sigma_common(st.sigma.weights.embedded(common));
      before.push_back(pt);

      const Perturbation* pick = nullptr;
      for (const auto& c : cand[i]) {
        if (verify_stabilized(sigma_common, h[i], st.coloring, apply(c, pt))) {
          pick = &c;
          break;
        }
      }
      if (pick) {
        chosen.push_back(*pick);
      } else {
        // fresh search over the stage-local Omega
        std::vector<Perturbation> h_local;
        h_local.reserve(h[i].size());
        for (const auto& m : h[i])
          h_local.push_back(Perturbation(Shift(m.shift.weights.restricted(st.omega)), m.dilation));
        StabilizerTask task(st.sigma, std::move(h_local), st.coloring, pt, inst.budget);
        auto found = stabilize(task);
        if (!found) {
          stage_at = i;
          dry = true;
          break;
        }
        Perturbation fresh = found->p_prime.embedded(common);
        cand[i].push_back(fresh);
        chosen.push_back(fresh);
        grew = true;
      }
      pt = apply(chosen.back(), pt);
    }

    if (dry) return MultiTaskFailure{stage_at, inst.stages[stage_at].label};
    if (grew) continue;

    MultiTaskOutcome out{Perturbation::identity(common), pt, {}, round};
    for (std::size_t i = 0; i < l; ++i) {
      out.composite = compose(chosen[i], out.composite);
      StageTranscript tr(inst.stages[i].label, chosen[i]);
      tr.h_size = h[i].size();
      tr.p_prime_size = cand[i].size();
      tr.verified = verify_stabilized(Shift(inst.stages[i].sigma.weights.embedded(common)), h[i],
                                      inst.stages[i].coloring, apply(chosen[i], before[i]));
      out.stages.push_back(std::move(tr));
    }
    if (!verify_multitask(inst, out))
      throw std::logic_error("multitask: final equalities fail after a clean round");
    return out;
  }
  return MultiTaskFailure{l - 1, "round limit"};
}

bool verify_multitask(const MultiTaskInstance& inst, const MultiTaskOutcome& out) {
  const RatioIndex& common = inst.stages.front().omega;
  std::vector<Perturbation> retained;
  for (const auto& p : inst.h0) retained.push_back(p.embedded(common));
  retained = dedup(with_identity(std::move(retained), common));
  for (const auto& st : inst.stages) {
    Shift sigma(st.sigma.weights.embedded(common));
    if (!verify_stabilized(sigma, retained, st.coloring, out.final_point)) return false;
  }
  return true;
}

namespace {

std::vector<NFamily> multipart(const std::vector<NFamily>& families) {
  std::vector<NFamily> out;
  for (const auto& f : families)
    if (f.part_count() > 1) out.push_back(f);
  return out;
}

// largest leading part first; that stage is applied first and anticipates
// the rest, so each tail's newp keeps |A| + |S_t| > |B|
void sort_stages(std::vector<NFamily>& fams) {
  std::stable_sort(fams.begin(), fams.end(), [](const NFamily& a, const NFamily& b) {
    if (a.leading_part().size() != b.leading_part().size())
      return a.leading_part().size() > b.leading_part().size();
    return a < b;
  });
}

}  // namespace

std::optional<StableExtensionResult> stable_extension(const std::vector<NFamily>& families,
                                                      ExtensionMode mode,
                                                      const std::vector<PosRational>& q_set,
                                                      const Coloring& coloring, const RatVector& u,
                                                      const PosRational& x0,
                                                      const SearchBudget& budget) {
  const int n = static_cast<int>(u.size()) + 1;
  for (const auto& f : families) {
    if (f.ground() != n)
      throw std::invalid_argument("stable_extension: family ground must be u-length + 1");
    if (!f.is_new()) throw std::invalid_argument("stable_extension: family " + f.str() + " not new");
  }

  std::vector<NFamily> stages_fams = multipart(families);

  auto finish_trivially = [&]() -> StableExtensionResult {
    std::vector<PosRational> ve = u.entries();
    ve.push_back(x0);
    return StableExtensionResult{PosRational::one(), x0, RatVector(std::move(ve)),
                                 RatioWeights(RatioIndex()), {}, 0};
  };
  if (stages_fams.empty() || q_set.empty()) {
    auto out = finish_trivially();
    for (const auto& q : q_set) {
      auto check = is_X_consistent(scale(q, out.v), families, coloring);
      if (!check.consistent)
        throw std::logic_error("stable_extension: trivial case failed verification");
    }
    return out;
  }

  sort_stages(stages_fams);

  if (mode == ExtensionMode::restricted) {
    RatioIndex omega = newp(stages_fams);
    for (const auto& p : omega.pairs())
      if (p.a.size() <= p.b.size())
        throw std::invalid_argument("stable_extension: restricted mode needs |A| > |B|, pair (" +
                                    p.str() + ") fails");
  }

  MultiTaskInstance inst{{}, PointX{u, x0}, {}, budget, 64};
  for (std::size_t t = 0; t < stages_fams.size(); ++t) {
    const NFamily& fam = stages_fams[t];
    RatioIndex omega_t =
        mode == ExtensionMode::full
            ? newp(std::vector<NFamily>(stages_fams.begin() + static_cast<long>(t), stages_fams.end()))
            : newp(stages_fams);
    IndexSet s_t = fam.leading_part().without(n);
    MultiTaskStage st{family_shift(fam, omega_t), project_coloring(coloring, s_t), omega_t,
                      fam.str()};
    inst.stages.push_back(std::move(st));
  }
  const RatioIndex& common = inst.stages.front().omega;
  for (const auto& q : q_set)
    inst.h0.push_back(Perturbation::of_dilation(common, Dilation::uniform(q)));

  auto run = multitask(inst);
  if (std::holds_alternative<MultiTaskFailure>(run)) return std::nullopt;
  auto& out = std::get<MultiTaskOutcome>(run);

  StableExtensionResult res{out.composite.dilation.q1, out.final_point.x, concat(out.final_point),
                            out.composite.shift.weights, out.stages, out.rounds};

  // independent verification through the consistency predicates
  for (const auto& q : q_set) {
    auto check = is_X_consistent(scale(q, res.v), families, coloring);
    if (!check.consistent)
      throw std::logic_error("stable_extension: verification failed on family " +
                             check.failing->str() + " at q = " + q.str());
  }
  if (!(scale(res.scale, u) == out.final_point.u))
    throw std::logic_error("stable_extension: dilation bookkeeping mismatch");
  return res;
}

}  // namespace qramsey
