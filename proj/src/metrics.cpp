#include "moead/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace moead {

namespace {

/// Drops points not strictly below the reference, then dominated and
/// duplicate points.
std::vector<Vector> clean_front(const std::vector<Vector>& front, const Vector& ref) {
    std::vector<Vector> kept;
    kept.reserve(front.size());
    for (const auto& p : front) {
        if (p.size() != ref.size()) {
            throw std::invalid_argument("hypervolume: point/reference length mismatch");
        }
        bool inside = true;
        for (std::size_t j = 0; j < p.size(); ++j) {
            if (p[j] >= ref[j]) {
                inside = false;
                break;
            }
        }
        if (inside) kept.push_back(p);
    }
    std::vector<Vector> out;
    for (std::size_t i = 0; i < kept.size(); ++i) {
        bool keep = true;
        for (std::size_t j = 0; j < kept.size() && keep; ++j) {
            if (j == i) continue;
            if (dominates(kept[j], kept[i])) keep = false;
            if (kept[j] == kept[i] && j < i) keep = false;
        }
        if (keep) out.push_back(kept[i]);
    }
    return out;
}

double hv2(std::vector<Vector> pts, const Vector& ref) {
    std::sort(pts.begin(), pts.end());
    double hv = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const double next_x = i + 1 < pts.size() ? pts[i + 1][0] : ref[0];
        hv += (next_x - pts[i][0]) * (ref[1] - pts[i][1]);
    }
    return hv;
}

double hv3(std::vector<Vector> pts, const Vector& ref) {
    std::sort(pts.begin(), pts.end(), [](const Vector& a, const Vector& b) { return a[2] < b[2]; });
    const Vector ref2{ref[0], ref[1]};
    double hv = 0.0;
    std::vector<Vector> slice;
    for (std::size_t k = 0; k < pts.size(); ++k) {
        slice.push_back({pts[k][0], pts[k][1]});
        const double z0 = pts[k][2];
        const double z1 = k + 1 < pts.size() ? pts[k + 1][2] : ref[2];
        if (z1 > z0) {
            hv += hv2(clean_front(slice, ref2), ref2) * (z1 - z0);
        }
    }
    return hv;
}

}  // namespace

double hypervolume(const std::vector<Vector>& front, const Vector& ref) {
    const auto pts = clean_front(front, ref);
    if (pts.empty()) return 0.0;
    switch (ref.size()) {
        case 2:
            return hv2(pts, ref);
        case 3:
            return hv3(pts, ref);
        default:
            return hypervolume_mc(front, ref).value;
    }
}

McEstimate hypervolume_mc(const std::vector<Vector>& front, const Vector& ref,
                          std::size_t samples, std::uint64_t seed) {
    const auto pts = clean_front(front, ref);
    if (pts.empty()) return {};
    const std::size_t m = ref.size();
    Vector lo(m, std::numeric_limits<double>::infinity());
    for (const auto& p : pts) {
        for (std::size_t j = 0; j < m; ++j) lo[j] = std::min(lo[j], p[j]);
    }
    double box = 1.0;
    for (std::size_t j = 0; j < m; ++j) box *= ref[j] - lo[j];

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    Vector sample(m);
    std::size_t hits = 0;
    for (std::size_t s = 0; s < samples; ++s) {
        for (std::size_t j = 0; j < m; ++j) sample[j] = lo[j] + uniform(rng) * (ref[j] - lo[j]);
        for (const auto& p : pts) {
            bool dominated = true;
            for (std::size_t j = 0; j < m; ++j) {
                if (p[j] > sample[j]) {
                    dominated = false;
                    break;
                }
            }
            if (dominated) {
                ++hits;
                break;
            }
        }
    }
    const double p_hat = static_cast<double>(hits) / static_cast<double>(samples);
    McEstimate est;
    est.value = box * p_hat;
    est.std_error = box * std::sqrt(p_hat * (1.0 - p_hat) / static_cast<double>(samples));
    return est;
}

double hv_ratio(double hv, std::size_t m) {
    return hv / std::pow(1.1, static_cast<double>(m));
}

Vector default_reference(std::size_t m) {
    return Vector(m, 1.1);
}

AnytimeCurve anytime_hv(const RunLog& log, const Vector& ref, std::uint64_t budget,
                        std::uint64_t stride) {
    std::vector<const RunLogRecord*> entries;
    for (const auto& r : log.records) {
        if (r.subproblem_id == kArchiveEntry) entries.push_back(&r);
    }
    std::stable_sort(entries.begin(), entries.end(),
                     [](const RunLogRecord* a, const RunLogRecord* b) {
                         return a->eval_index < b->eval_index;
                     });

    // Scaling bounds come from the final archive so every checkpoint of one
    // curve is measured in the same space.
    ParetoSet final_set;
    for (const RunLogRecord* r : entries) {
        Solution s;
        s.f = r->f;
        s.eval_index = r->eval_index;
        final_set.insert(std::move(s));
    }
    const std::size_t m = ref.size();
    Vector lo(m, std::numeric_limits<double>::infinity());
    Vector hi(m, -std::numeric_limits<double>::infinity());
    for (const auto& s : final_set.members()) {
        for (std::size_t j = 0; j < m; ++j) {
            lo[j] = std::min(lo[j], s.f[j]);
            hi[j] = std::max(hi[j], s.f[j]);
        }
    }
    auto scale = [&](const Vector& f) {
        Vector out(m);
        for (std::size_t j = 0; j < m; ++j) {
            const double range = hi[j] - lo[j];
            out[j] = range > 0.0 ? (f[j] - lo[j]) / range : 0.0;
        }
        return out;
    };

    AnytimeCurve curve;
    ParetoSet running;
    std::size_t next = 0;
    for (std::uint64_t e = stride; e <= budget; e += stride) {
        while (next < entries.size() && entries[next]->eval_index <= e) {
            Solution s;
            s.f = entries[next]->f;
            s.eval_index = entries[next]->eval_index;
            running.insert(std::move(s));
            ++next;
        }
        std::vector<Vector> scaled;
        scaled.reserve(running.size());
        for (const auto& s : running.members()) scaled.push_back(scale(s.f));
        const double hv = hypervolume(scaled, ref);
        curve.checkpoints.emplace_back(e, hv);
        curve.auc += hv;
    }
    return curve;
}

double population_variance(const std::vector<Vector>& xs, const std::vector<Bounds>& bounds) {
    if (xs.size() < 2) return 0.0;
    const std::size_t d = bounds.size();
    const double n = static_cast<double>(xs.size());
    double total = 0.0;
    for (std::size_t k = 0; k < d; ++k) {
        const double range = bounds[k].upper - bounds[k].lower;
        double mean = 0.0;
        for (const auto& x : xs) mean += (x[k] - bounds[k].lower) / range;
        mean /= n;
        double ss = 0.0;
        for (const auto& x : xs) {
            const double u = (x[k] - bounds[k].lower) / range - mean;
            ss += u * u;
        }
        total += ss / (n - 1.0);
    }
    return total / static_cast<double>(d);
}

std::size_t count_pf(const ParetoSet& archive, const ProblemSpec& problem,
                     std::span<const Solution> pool) {
    constexpr double eps = 1e-3;
    if (problem.has_pf_oracle()) {
        const auto sample = problem.sample_pareto_front(16384);
        const std::size_t m = problem.objectives();
        Vector lo(m, std::numeric_limits<double>::infinity());
        Vector hi(m, -std::numeric_limits<double>::infinity());
        for (const auto& p : sample) {
            for (std::size_t j = 0; j < m; ++j) {
                lo[j] = std::min(lo[j], p[j]);
                hi[j] = std::max(hi[j], p[j]);
            }
        }
        auto normalize = [&](const Vector& f) {
            Vector out(m);
            for (std::size_t j = 0; j < m; ++j) {
                const double range = hi[j] - lo[j];
                out[j] = range > 0.0 ? (f[j] - lo[j]) / range : 0.0;
            }
            return out;
        };
        std::vector<Vector> norm_sample;
        norm_sample.reserve(sample.size());
        for (const auto& p : sample) norm_sample.push_back(normalize(p));

        std::size_t count = 0;
        for (const auto& member : archive.members()) {
            const Vector q = normalize(member.f);
            double best = std::numeric_limits<double>::infinity();
            for (const auto& p : norm_sample) {
                double d2 = 0.0;
                for (std::size_t j = 0; j < m; ++j) {
                    const double diff = q[j] - p[j];
                    d2 += diff * diff;
                }
                best = std::min(best, d2);
                if (best <= eps * eps) break;
            }
            if (best <= eps * eps) ++count;
        }
        return count;
    }

    if (pool.empty()) {
        throw std::invalid_argument("count_pf: need an analytic front or a comparison pool");
    }
    std::size_t count = 0;
    for (const auto& member : archive.members()) {
        bool keep = true;
        for (const auto& other : pool) {
            if (dominates(other.f, member.f)) {
                keep = false;
                break;
            }
            if (other.f == member.f && other.eval_index < member.eval_index) {
                keep = false;
                break;
            }
        }
        if (keep) ++count;
    }
    return count;
}

}  // namespace moead
