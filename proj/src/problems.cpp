#include "moead/problems.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace moead {

ProblemSpec::ProblemSpec(std::string name, std::size_t m, std::vector<Bounds> bounds,
                         std::size_t n_constraints, EvalFn eval, PfSampler pf)
    : name_(std::move(name)),
      m_(m),
      bounds_(std::move(bounds)),
      n_constraints_(n_constraints),
      eval_(std::move(eval)),
      pf_sampler_(std::move(pf)) {
    if (m_ < 2) throw std::invalid_argument("ProblemSpec: need at least 2 objectives");
    for (const auto& b : bounds_) {
        if (!(b.lower < b.upper)) throw std::invalid_argument("ProblemSpec: lower must be < upper");
    }
}

Evaluation ProblemSpec::evaluate(const Vector& x) const {
    if (x.size() != dim()) throw std::invalid_argument(name_ + ": wrong dimension");
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] < bounds_[i].lower || x[i] > bounds_[i].upper) {
            throw std::invalid_argument(name_ + ": variable " + std::to_string(i) + " out of bounds");
        }
    }
    return eval_(x);
}

std::vector<Vector> ProblemSpec::sample_pareto_front(std::size_t n) const {
    if (!pf_sampler_) throw std::invalid_argument(name_ + ": no analytic Pareto front");
    return pf_sampler_(n);
}

double total_violation(const Vector& g) {
    double v = 0.0;
    for (double gi : g) v += std::max(0.0, gi);
    return v;
}

std::vector<Vector> scale_objectives(const std::vector<Vector>& points) {
    if (points.empty()) return {};
    const std::size_t m = points.front().size();
    Vector lo(m, std::numeric_limits<double>::infinity());
    Vector hi(m, -std::numeric_limits<double>::infinity());
    for (const auto& p : points) {
        for (std::size_t j = 0; j < m; ++j) {
            lo[j] = std::min(lo[j], p[j]);
            hi[j] = std::max(hi[j], p[j]);
        }
    }
    std::vector<Vector> out(points.size(), Vector(m, 0.0));
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            const double range = hi[j] - lo[j];
            out[i][j] = range > 0.0 ? (points[i][j] - lo[j]) / range : 0.0;
        }
    }
    return out;
}

ProblemSpec make_zdt1(std::size_t dim) {
    std::vector<Bounds> bounds(dim, Bounds{0.0, 1.0});
    auto eval = [dim](const Vector& x) {
        double tail = 0.0;
        for (std::size_t i = 1; i < dim; ++i) tail += x[i];
        const double f1 = x[0];
        const double gfun = 1.0 + 9.0 * tail / static_cast<double>(dim - 1);
        const double f2 = gfun * (1.0 - std::sqrt(f1 / gfun));
        return Evaluation{{f1, f2}, {}};
    };
    auto pf = [](std::size_t n) {
        // f2 = 1 - sqrt(f1), f1 in [0,1]. Sampling uniformly in sqrt(f1)
        // keeps adjacent samples close even where the curve is steep.
        std::vector<Vector> front;
        front.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            const double t = n > 1 ? static_cast<double>(i) / static_cast<double>(n - 1) : 0.0;
            front.push_back({t * t, 1.0 - t});
        }
        return front;
    };
    return ProblemSpec("zdt1", 2, std::move(bounds), 0, eval, pf);
}

ProblemSpec make_binh_korn() {
    std::vector<Bounds> bounds{{0.0, 5.0}, {0.0, 3.0}};
    auto eval = [](const Vector& v) {
        const double x = v[0], y = v[1];
        const double f1 = 4.0 * x * x + 4.0 * y * y;
        const double f2 = (x - 5.0) * (x - 5.0) + (y - 5.0) * (y - 5.0);
        const double g1 = (x - 5.0) * (x - 5.0) + y * y - 25.0;
        const double g2 = 7.7 - (x - 8.0) * (x - 8.0) - (y + 3.0) * (y + 3.0);
        return Evaluation{{f1, f2}, {g1, g2}};
    };
    return ProblemSpec("binh_korn", 2, std::move(bounds), 2, eval);
}

ProblemSpec make_tanaka() {
    const double pi = std::acos(-1.0);
    std::vector<Bounds> bounds{{0.0, pi}, {0.0, pi}};
    auto eval = [](const Vector& v) {
        const double x1 = v[0], x2 = v[1];
        const double g1 = 1.0 + 0.1 * std::cos(16.0 * std::atan2(x1, x2)) - x1 * x1 - x2 * x2;
        const double g2 = (x1 - 0.5) * (x1 - 0.5) + (x2 - 0.5) * (x2 - 0.5) - 0.5;
        return Evaluation{{x1, x2}, {g1, g2}};
    };
    return ProblemSpec("tanaka", 2, std::move(bounds), 2, eval);
}

namespace {

std::map<std::string, ProblemSpec>& registry() {
    static std::map<std::string, ProblemSpec> problems = [] {
        std::map<std::string, ProblemSpec> m;
        m.emplace("zdt1", make_zdt1());
        m.emplace("binh_korn", make_binh_korn());
        m.emplace("tanaka", make_tanaka());
        return m;
    }();
    return problems;
}

std::mutex& registry_mutex() {
    static std::mutex mu;
    return mu;
}

}  // namespace

const ProblemSpec& problem_by_name(const std::string& name) {
    std::lock_guard lock(registry_mutex());
    auto it = registry().find(name);
    if (it == registry().end()) throw std::invalid_argument("unknown problem: " + name);
    return it->second;
}

void register_problem(ProblemSpec problem) {
    std::lock_guard lock(registry_mutex());
    const std::string name = problem.name();
    registry().insert_or_assign(name, std::move(problem));
}

std::vector<std::string> problem_names() {
    std::lock_guard lock(registry_mutex());
    std::vector<std::string> names;
    for (const auto& [name, _] : registry()) names.push_back(name);
    return names;
}

}  // namespace moead
