#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "moead/core.hpp"

namespace moead {

struct Bounds {
    double lower = 0.0;
    double upper = 1.0;
};

struct Evaluation {
    Vector f;  ///< raw objective values, minimization
    Vector g;  ///< constraint values, g_i <= 0 feasible
};

/// A constrained multiobjective problem. Objectives are minimized and
/// constraints use the "g_i(x) <= 0 is feasible" convention. pf_sampler,
/// when present, returns n points on the analytic Pareto front in raw
/// objective space.
class ProblemSpec {
public:
    using EvalFn = std::function<Evaluation(const Vector&)>;
    using PfSampler = std::function<std::vector<Vector>(std::size_t)>;

    ProblemSpec(std::string name, std::size_t m, std::vector<Bounds> bounds,
                std::size_t n_constraints, EvalFn eval, PfSampler pf = nullptr);

    const std::string& name() const { return name_; }
    std::size_t dim() const { return bounds_.size(); }
    std::size_t objectives() const { return m_; }
    const std::vector<Bounds>& bounds() const { return bounds_; }
    std::size_t constraints() const { return n_constraints_; }
    bool has_pf_oracle() const { return static_cast<bool>(pf_sampler_); }

    /// Throws std::invalid_argument if x is out of bounds or has the
    /// wrong dimension; the engine repairs candidates before evaluating.
    Evaluation evaluate(const Vector& x) const;

    std::vector<Vector> sample_pareto_front(std::size_t n) const;

private:
    std::string name_;
    std::size_t m_;
    std::vector<Bounds> bounds_;
    std::size_t n_constraints_;
    EvalFn eval_;
    PfSampler pf_sampler_;
};

/// v = sum_i max(0, g_i).
double total_violation(const Vector& g);

/// Per-objective linear map of the input set onto [0,1] using the set's own
/// min/max; a degenerate objective (max == min) maps to 0.
std::vector<Vector> scale_objectives(const std::vector<Vector>& points);

ProblemSpec make_zdt1(std::size_t dim = 30);
ProblemSpec make_binh_korn();
ProblemSpec make_tanaka();

/// Name-based registry. The three built-ins are always present; user
/// problems join through the same ProblemSpec contract.
const ProblemSpec& problem_by_name(const std::string& name);
void register_problem(ProblemSpec problem);
std::vector<std::string> problem_names();

}  // namespace moead
