#include "rectcolor/mwisr.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "rectcolor/errors.hpp"
#include "rectcolor/hierarchy.hpp"
#include "rectcolor/lp.hpp"

namespace rectcolor {

namespace {

mpz_class two_pow_64() {
  mpz_class v;
  mpz_ui_pow_ui(v.get_mpz_t(), 2, 64);
  return v;
}

mpz_class floor_of(const Scalar& v) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
  return q;
}

/// Membership lists: for each rectangle, the (clique, position) pairs holding it.
std::vector<std::vector<std::pair<int, int>>> clique_incidence(int n, const CliqueList& cl) {
  std::vector<std::vector<std::pair<int, int>>> inc(n);
  for (int c = 0; c < static_cast<int>(cl.size()); ++c) {
    const auto& members = cl.cliques[c].members;
    for (int pos = 0; pos < static_cast<int>(members.size()); ++pos)
      inc[members[pos]].emplace_back(c, pos);
  }
  return inc;
}

}  // namespace

LpSolution solve_lp(const Instance& inst, double feas_tol, double opt_tol) {
  LpSolution sol;
  sol.feas_tol = feas_tol;
  sol.opt_tol = opt_tol;
  const int n = inst.size();
  for (const Rect& r : inst.rects())
    if (r.weight <= 0)
      throw PreconditionViolated("LP needs positive weights; '" + r.id + "' has weight " +
                                 to_string(r.weight));
  sol.cliques = maximal_cliques(inst);
  sol.x.assign(n, Scalar(0));
  if (n == 0) return sol;

  PackingLp lp;
  lp.objective.resize(n);
  for (int i = 0; i < n; ++i) lp.objective[i] = to_double(inst.rect(i).weight);
  for (const Clique& c : sol.cliques.cliques) {
    std::vector<double> row(n, 0.0);
    for (int i : c.members) row[i] = 1.0;
    lp.rows.push_back(std::move(row));
    lp.rhs.push_back(1.0);
  }
  const LpResult res = solve_packing_lp(lp, feas_tol);
  sol.float_objective = res.objective;
  sol.dual_bound = res.dual_bound;
  if (res.objective < (1.0 - opt_tol) * res.dual_bound)
    throw SolverFailure("LP objective " + std::to_string(res.objective) + " is not within opt-tol of dual bound " +
                        std::to_string(res.dual_bound));

  // Common denominator 2^64; shrink numerators until every clique sum is <= 1.
  const mpz_class unit = two_pow_64();
  std::vector<mpz_class> num(n);
  for (int i = 0; i < n; ++i) {
    double v = std::min(std::max(res.x[i], 0.0), 1.0);
    num[i] = mpz_class(std::ldexp(v, 64));
  }
  mpz_class worst = unit;
  for (const Clique& c : sol.cliques.cliques) {
    mpz_class s = 0;
    for (int i : c.members) s += num[i];
    if (s > worst) worst = s;
  }
  if (worst > unit)
    for (auto& v : num) v = v * unit / worst;  // mpz division truncates
  sol.w_star = 0;
  for (int i = 0; i < n; ++i) {
    sol.x[i] = Scalar(num[i], unit);
    sol.x[i].canonicalize();
    sol.w_star += inst.rect(i).weight * sol.x[i];
  }
  if (to_double(sol.w_star) < (1.0 - opt_tol - feas_tol) * res.dual_bound * (1.0 - 1e-12))
    throw SolverFailure("rationalized LP value fell below the tolerance contract");
  return sol;
}

Scalar poisson_binomial_tail(std::span<const Scalar> probs, long threshold) {
  if (threshold < 0) return Scalar(1);
  if (threshold >= static_cast<long>(probs.size())) return Scalar(0);
  // dist[c] = P(sum == c) for c <= threshold, dist[threshold + 1] = P(sum > threshold).
  std::vector<Scalar> dist(threshold + 2, Scalar(0));
  dist[0] = 1;
  long seen = 0;  // dist[c] == 0 for c > seen
  for (const Scalar& p : probs) {
    if (p == 0) continue;
    const Scalar q = 1 - p;
    if (seen >= threshold) dist[threshold + 1] += dist[threshold] * p;
    for (long c = std::min(seen + 1, threshold); c >= 1; --c) dist[c] = dist[c] * q + dist[c - 1] * p;
    dist[0] *= q;
    ++seen;
  }
  return dist[threshold + 1];
}

BernoulliSumTail::BernoulliSumTail(std::vector<Scalar> probs, long threshold)
    : probs_(std::move(probs)), fixed_(probs_.size(), false), threshold_(threshold) {}

Scalar BernoulliSumTail::tail() const {
  std::vector<Scalar> open;
  for (std::size_t j = 0; j < probs_.size(); ++j)
    if (!fixed_[j]) open.push_back(probs_[j]);
  return poisson_binomial_tail(open, threshold_);
}

Scalar BernoulliSumTail::tail_if_fixed(std::size_t j, bool value) const {
  const long t = threshold_ - (value ? 1 : 0);
  if (t < 0) return Scalar(1);
  std::vector<Scalar> open;
  for (std::size_t i = 0; i < probs_.size(); ++i)
    if (i != j && !fixed_[i] && probs_[i] != 0) open.push_back(probs_[i]);
  if (static_cast<long>(open.size()) <= t) return Scalar(0);
  return poisson_binomial_tail(open, t);
}

void BernoulliSumTail::fix(std::size_t j, bool value) {
  fixed_[j] = true;
  if (value) --threshold_;
}

int rounding_multiplier(int n) {
  if (n <= 1) return 1;
  return static_cast<int>(std::ceil(9.0L * std::log(static_cast<long double>(n))));
}

Scalar rounding_objective(const Instance& inst, const LpSolution& lp, std::span<const int> y, int m) {
  const int n = inst.size();
  Scalar total = 0;
  for (int i = 0; i < n; ++i) total += inst.rect(i).weight * y[i];
  long overflow = 0;
  for (const Clique& c : lp.cliques.cliques) {
    long s = 0;
    for (int i : c.members) s += y[i];
    if (s > 2L * m) ++overflow;
  }
  const Scalar penalty = Scalar(m) * n * lp.w_star / 2;
  return total - penalty * overflow;
}

MultiplicityVector round_derandomized(const Instance& inst, const LpSolution& lp) {
  const int n = inst.size();
  MultiplicityVector mv;
  mv.m = rounding_multiplier(n);
  mv.y.assign(n, 0);
  if (n == 0) return mv;
  const int m = mv.m;

  int heaviest = 0;
  for (int i = 1; i < n; ++i)
    if (inst.rect(i).weight > inst.rect(heaviest).weight) heaviest = i;
  if (2 * inst.rect(heaviest).weight >= lp.w_star) {
    mv.heavy_shortcut = true;
    mv.y[heaviest] = m;
    return mv;
  }

  std::vector<int> base(n);
  std::vector<Scalar> frac(n);
  for (int i = 0; i < n; ++i) {
    Scalar mx = m * lp.x[i];
    mpz_class fl = floor_of(mx);
    base[i] = static_cast<int>(fl.get_si());
    frac[i] = mx - Scalar(fl);
  }

  const auto incidence = clique_incidence(n, lp.cliques);
  std::vector<BernoulliSumTail> tails;
  tails.reserve(lp.cliques.size());
  for (const Clique& c : lp.cliques.cliques) {
    long fixed_part = 0;
    std::vector<Scalar> probs;
    for (int i : c.members) {
      fixed_part += base[i];
      probs.push_back(frac[i]);
    }
    tails.emplace_back(std::move(probs), 2L * m - fixed_part);
  }

  const Scalar penalty = Scalar(m) * n * lp.w_star / 2;
  Scalar expectation = 0;
  for (int i = 0; i < n; ++i) expectation += inst.rect(i).weight * (base[i] + frac[i]);
  for (const auto& t : tails) expectation -= penalty * t.tail();
  mv.expectations.push_back(expectation);

  for (int r = 0; r < n; ++r) {
    if (frac[r] == 0) {
      for (auto [c, pos] : incidence[r]) tails[c].fix(pos, false);
      mv.y[r] = base[r];
      mv.expectations.push_back(expectation);
      continue;
    }
    // E[xi | bit = 1] - E[xi | bit = 0]; only cliques through r change.
    Scalar gain = inst.rect(r).weight;
    for (auto [c, pos] : incidence[r]) {
      Scalar up = tails[c].tail_if_fixed(pos, true);
      Scalar down = tails[c].tail_if_fixed(pos, false);
      if (up != down) gain -= penalty * (up - down);
    }
    const bool bit = gain > 0;
    expectation += ((bit ? Scalar(1) : Scalar(0)) - frac[r]) * gain;
    for (auto [c, pos] : incidence[r]) tails[c].fix(pos, bit);
    mv.y[r] = base[r] + (bit ? 1 : 0);
    mv.expectations.push_back(expectation);
  }

  if (rounding_objective(inst, lp, mv.y, m) != expectation)
    throw InternalBoundExceeded("derandomized rounding lost track of its conditional expectation");
  for (const Clique& c : lp.cliques.cliques) {
    long s = 0;
    for (int i : c.members) s += mv.y[i];
    if (s > 2L * m) throw InternalBoundExceeded("derandomized rounding overflowed a clique");
  }
  return mv;
}

ExpandedInstance expand_multiset(const Instance& inst, const MultiplicityVector& mv) {
  std::vector<Rect> copies;
  std::vector<int> origin;
  for (int i = 0; i < inst.size(); ++i)
    for (int c = 0; c < mv.y[i]; ++c) {
      Rect r = inst.rect(i);
      r.id += "#" + std::to_string(c);
      copies.push_back(std::move(r));
      origin.push_back(i);
    }
  return {perturb(Instance(std::move(copies))), std::move(origin)};
}

ApproxResult approximate_mwis(const Instance& inst, double feas_tol, double opt_tol) {
  ApproxResult out;
  if (inst.empty()) return out;
  const LpSolution lp = solve_lp(inst, feas_tol, opt_tol);
  out.multiplicity = round_derandomized(inst, lp);
  out.m = out.multiplicity.m;
  out.w_star = lp.w_star;
  out.multiset_weight = 0;
  for (int i = 0; i < inst.size(); ++i) out.multiset_weight += inst.rect(i).weight * out.multiplicity.y[i];

  const ExpandedInstance ex = expand_multiset(inst, out.multiplicity);
  const Coloring col = hierarchical_coloring(ex.instance);
  out.multiset_palette = col.num_colors;

  std::map<int, std::vector<int>> classes;
  for (int c = 0; c < ex.instance.size(); ++c) classes[col.color[c]].push_back(ex.origin[c]);
  int best_color = -1;
  Scalar best_weight = -1;
  for (auto& [color, ids] : classes) {
    std::sort(ids.begin(), ids.end());
    if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
      throw InternalBoundExceeded("a color class holds two copies of one rectangle");
    Scalar w = 0;
    for (int i : ids) w += inst.rect(i).weight;
    out.class_weights.push_back(w);
    if (w > best_weight) {
      best_weight = w;
      best_color = color;
    }
  }
  if (classes.empty()) throw InternalBoundExceeded("derandomized rounding selected no copies");
  out.multiset_colors = static_cast<int>(classes.size());
  out.chosen = classes[best_color];
  out.weight = best_weight;
  const Scalar slack = Scalar(1) - Scalar(opt_tol) - Scalar(feas_tol);
  out.certified_lower_bound = Scalar(out.m) * out.w_star * slack / (2 * out.multiset_colors);
  if (out.weight * out.multiset_colors < out.multiset_weight)
    throw InternalBoundExceeded("heaviest color class is lighter than the average class");
  return out;
}

}  // namespace rectcolor
