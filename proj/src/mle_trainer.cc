/*
 * Copyright 2026 The qirank Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "qirank/mle_trainer.h"

#include <algorithm>
#include <cmath>
#include <deque>

namespace qirank {

namespace {

// Neumaier summation. Near the optimum successive objective values differ by
// far less than the rounding noise of a naive 10^4-term sum.
class CompensatedSum {
 public:
  void add(double v) {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

std::size_t intercept_width(const Intercept& ic) {
  return std::holds_alternative<ThresholdPair>(ic) ? 2 : 1;
}

// Penalized NLL over the flat layout of a fixed parameter shape.
class Objective {
 public:
  Objective(const ModelParams& shape, const Dataset& dataset, ModelKind kind,
            double l2)
      : dataset_(dataset), kind_(kind), l2_(l2), k_(dataset.k()) {
    check_compatible(kind, dataset.scale());
    if (shape.w.size() != k_) {
      throw DataError("dimension mismatch: model has " +
                      std::to_string(shape.w.size()) + " weights, data has " +
                      std::to_string(k_) + " features");
    }
    const bool pairs = uses_threshold_pair(kind);
    std::map<std::string, std::size_t> offset;
    std::size_t next = k_;
    for (const auto& [qid, ic] : shape.intercepts) {
      if (std::holds_alternative<ThresholdPair>(ic) != pairs) {
        throw DataError("intercept for query '" + qid +
                        "' has the wrong arity for model kind '" +
                        std::string(to_string(kind)) + "'");
      }
      offset.emplace(qid, next);
      next += intercept_width(ic);
    }
    dim_ = next;

    group_offset_.reserve(dataset.num_queries());
    for (const QueryGroup& g : dataset.groups()) {
      const std::string& key =
          kind == ModelKind::kNoInterceptBaseline ? kSharedInterceptKey : g.query_id;
      auto it = offset.find(key);
      if (it == offset.end()) {
        throw DataError(kind == ModelKind::kNoInterceptBaseline
                            ? std::string("model has no shared intercept")
                            : "unknown query_id '" + g.query_id + "' in params");
      }
      group_offset_.push_back(it->second);
    }
  }

  std::size_t dim() const { return dim_; }

  // Returns the objective; fills `grad` and the Hessian diagonal `curv`
  // (size dim()) when non-null.
  double evaluate(std::span<const double> x, std::vector<double>* grad,
                  std::vector<double>* curv = nullptr) const {
    if (grad) grad->assign(dim_, 0.0);
    if (curv) curv->assign(dim_, 0.0);
    const std::span<const double> w = x.first(k_);
    CompensatedSum nll;
    const auto& groups = dataset_.groups();
    for (std::size_t gi = 0; gi < groups.size(); ++gi) {
      const std::size_t base = group_offset_[gi];
      for (const Record& r : dataset_.group_records(groups[gi])) {
        const double s = score(w, r.features);
        double d_score = 0.0;
        double dd_score = 0.0;
        for (const LogitTerm& t : label_terms(kind_, r.label)) {
          const std::size_t idx =
              base + (t.benchmark == LogitTerm::Benchmark::kLow ? 1 : 0);
          const double z = t.sign * (s - x[idx]);
          nll.add(-log_sigmoid(z));
          if (grad) {
            // d(-log sigmoid(z))/dz = -sigmoid(-z)
            const double dz = -sigmoid(-z);
            d_score += t.sign * dz;
            (*grad)[idx] -= t.sign * dz;
          }
          if (curv) {
            const double h = sigmoid(z) * sigmoid(-z);
            dd_score += h;
            (*curv)[idx] += h;
          }
        }
        if (grad) {
          for (std::size_t j = 0; j < k_; ++j) (*grad)[j] += d_score * r.features[j];
        }
        if (curv) {
          for (std::size_t j = 0; j < k_; ++j) {
            (*curv)[j] += dd_score * r.features[j] * r.features[j];
          }
        }
      }
    }
    if (l2_ != 0.0) {
      CompensatedSum sq;
      for (double v : x) sq.add(v * v);
      nll.add(0.5 * l2_ * sq.value());
      if (grad) {
        for (std::size_t j = 0; j < dim_; ++j) (*grad)[j] += l2_ * x[j];
      }
      if (curv) {
        for (double& c : *curv) c += l2_;
      }
    }
    return nll.value();
  }

 private:
  const Dataset& dataset_;
  ModelKind kind_;
  double l2_;
  std::size_t k_;
  std::size_t dim_ = 0;
  std::vector<std::size_t> group_offset_;
};

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double inf_norm(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

// Floor for Hessian diagonal entries when l2 is 0 and a parameter is flat.
constexpr double kMinCurvature = 1e-10;

struct CurvaturePair {
  std::vector<double> s;
  std::vector<double> y;
  double rho;
};

// Two-loop recursion: returns -H g, seeded with the reciprocal Hessian
// diagonal. Intercepts of separated queries have curvature near l2 while w
// has curvature of order m, so a scalar seed is badly scaled.
std::vector<double> lbfgs_direction(const std::deque<CurvaturePair>& history,
                                    std::span<const double> g,
                                    std::span<const double> curv) {
  std::vector<double> q(g.begin(), g.end());
  std::vector<double> alpha(history.size());
  for (std::size_t i = history.size(); i-- > 0;) {
    const CurvaturePair& p = history[i];
    alpha[i] = p.rho * dot(p.s, q);
    for (std::size_t j = 0; j < q.size(); ++j) q[j] -= alpha[i] * p.y[j];
  }
  for (std::size_t j = 0; j < q.size(); ++j) {
    q[j] /= std::max(curv[j], kMinCurvature);
  }
  for (std::size_t i = 0; i < history.size(); ++i) {
    const CurvaturePair& p = history[i];
    const double beta = p.rho * dot(p.y, q);
    for (std::size_t j = 0; j < q.size(); ++j) q[j] += (alpha[i] - beta) * p.s[j];
  }
  for (double& v : q) v = -v;
  return q;
}

}  // namespace

void TrainConfig::validate() const {
  if (!(l2_penalty >= 0.0) || !std::isfinite(l2_penalty)) {
    throw DataError("l2 penalty must be a finite non-negative number");
  }
  if (!(grad_tolerance > 0.0)) throw DataError("gradient tolerance must be positive");
  if (max_iterations <= 0) throw DataError("max iterations must be positive");
  if (history_size <= 0) throw DataError("history size must be positive");
}

std::vector<double> flatten(const ModelParams& params) {
  std::vector<double> flat(params.w);
  for (const auto& [qid, ic] : params.intercepts) {
    if (const auto* pair = std::get_if<ThresholdPair>(&ic)) {
      flat.push_back(pair->high);
      flat.push_back(pair->low);
    } else {
      flat.push_back(std::get<double>(ic));
    }
  }
  return flat;
}

ModelParams unflatten(std::span<const double> flat, const ModelParams& shape) {
  std::size_t need = shape.w.size();
  for (const auto& [qid, ic] : shape.intercepts) need += intercept_width(ic);
  if (flat.size() != need) {
    throw DataError("flat parameter vector has " + std::to_string(flat.size()) +
                    " entries, expected " + std::to_string(need));
  }
  ModelParams out;
  out.w.assign(flat.begin(), flat.begin() + shape.w.size());
  std::size_t pos = shape.w.size();
  for (const auto& [qid, ic] : shape.intercepts) {
    if (std::holds_alternative<ThresholdPair>(ic)) {
      out.intercepts.emplace(qid, ThresholdPair{flat[pos], flat[pos + 1]});
      pos += 2;
    } else {
      out.intercepts.emplace(qid, flat[pos++]);
    }
  }
  return out;
}

ModelParams zero_params(const Dataset& dataset, ModelKind kind) {
  ModelParams p;
  p.w.assign(dataset.k(), 0.0);
  if (kind == ModelKind::kNoInterceptBaseline) {
    p.intercepts.emplace(kSharedInterceptKey, 0.0);
    return p;
  }
  for (const QueryGroup& g : dataset.groups()) {
    if (uses_threshold_pair(kind)) {
      p.intercepts.emplace(g.query_id, ThresholdPair{});
    } else {
      p.intercepts.emplace(g.query_id, 0.0);
    }
  }
  return p;
}

double negative_log_likelihood(const ModelParams& params, const Dataset& dataset,
                               ModelKind kind, double l2) {
  const Objective obj(params, dataset, kind, l2);
  return obj.evaluate(flatten(params), nullptr);
}

std::vector<double> gradient(const ModelParams& params, const Dataset& dataset,
                             ModelKind kind, double l2) {
  const Objective obj(params, dataset, kind, l2);
  std::vector<double> g;
  obj.evaluate(flatten(params), &g);
  return g;
}

FitResult fit(const Dataset& dataset, ModelKind kind, const TrainConfig& config) {
  config.validate();
  const ModelParams shape = zero_params(dataset, kind);
  const Objective obj(shape, dataset, kind, config.l2_penalty);

  constexpr double kArmijo = 1e-4;
  constexpr int kMaxBacktracks = 60;

  std::vector<double> x = flatten(shape);
  std::vector<double> g;
  std::vector<double> curv;
  double f = obj.evaluate(x, &g, &curv);
  if (!std::isfinite(f)) throw FitError("non-finite objective at start", 0);

  FitResult result;
  result.nll_trace.push_back(f);
  std::deque<CurvaturePair> history;
  std::vector<double> x_new(x.size());
  std::vector<double> g_new;
  std::vector<double> curv_new;

  int iter = 0;
  for (; iter < config.max_iterations; ++iter) {
    const double g_inf = inf_norm(g);
    if (g_inf < config.grad_tolerance) {
      result.converged = true;
      break;
    }

    bool accepted = false;
    for (int attempt = 0; attempt < 2 && !accepted; ++attempt) {
      std::vector<double> d = lbfgs_direction(history, g, curv);
      double slope = dot(g, d);
      if (!(slope < 0.0)) {
        history.clear();
        d = lbfgs_direction(history, g, curv);
        slope = dot(g, d);
      }
      double t = 1.0;
      bool saw_finite = false;
      for (int bt = 0; bt < kMaxBacktracks; ++bt, t *= 0.5) {
        for (std::size_t j = 0; j < x.size(); ++j) x_new[j] = x[j] + t * d[j];
        const double f_new = obj.evaluate(x_new, &g_new, &curv_new);
        if (!std::isfinite(f_new)) continue;
        saw_finite = true;
        const bool sufficient = f_new <= f + kArmijo * t * slope;
        // Below rounding resolution of f: take any non-increasing step that
        // still shrinks the gradient.
        const bool noise_floor = f_new <= f && inf_norm(g_new) < g_inf;
        if (!sufficient && !noise_floor) continue;

        CurvaturePair pair{std::vector<double>(x.size()),
                           std::vector<double>(x.size()), 0.0};
        for (std::size_t j = 0; j < x.size(); ++j) {
          pair.s[j] = x_new[j] - x[j];
          pair.y[j] = g_new[j] - g[j];
        }
        const double sy = dot(pair.s, pair.y);
        if (sy > 1e-12 * std::sqrt(dot(pair.s, pair.s) * dot(pair.y, pair.y))) {
          pair.rho = 1.0 / sy;
          history.push_back(std::move(pair));
          if (history.size() > static_cast<std::size_t>(config.history_size)) {
            history.pop_front();
          }
        }
        x.swap(x_new);
        g.swap(g_new);
        curv.swap(curv_new);
        f = f_new;
        result.nll_trace.push_back(f);
        accepted = true;
        break;
      }
      if (!accepted && !saw_finite) {
        throw FitError("non-finite objective in line search at iteration " +
                           std::to_string(iter + 1),
                       iter + 1);
      }
      if (!accepted) {
        if (history.empty()) break;
        history.clear();
      }
    }
    if (!accepted) break;  // no further decrease is representable
  }
  if (!result.converged && inf_norm(g) < config.grad_tolerance) {
    result.converged = true;
  }

  result.iterations = iter;
  result.final_nll = f;
  result.params = unflatten(x, shape);
  return result;
}

}  // namespace qirank
