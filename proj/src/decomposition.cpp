#include "moead/decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace moead {

namespace {

std::uint64_t lattice_count(std::size_t m, unsigned h) {
    // C(h+m-1, m-1)
    std::uint64_t c = 1;
    for (std::size_t i = 1; i < m; ++i) c = c * (h + i) / i;
    return c;
}

void enumerate_lattice(std::size_t m, unsigned h, unsigned remaining, Vector& prefix,
                       std::vector<Vector>& out, std::size_t limit) {
    if (out.size() >= limit) return;
    if (prefix.size() + 1 == m) {
        Vector v = prefix;
        v.push_back(static_cast<double>(remaining) / h);
        out.push_back(std::move(v));
        return;
    }
    for (unsigned k = 0; k <= remaining && out.size() < limit; ++k) {
        prefix.push_back(static_cast<double>(k) / h);
        enumerate_lattice(m, h, remaining - k, prefix, out, limit);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Vector> simplex_lattice(std::size_t m, unsigned h) {
    if (m < 2 || h < 1) throw std::invalid_argument("simplex_lattice: need m >= 2, h >= 1");
    std::vector<Vector> out;
    out.reserve(lattice_count(m, h));
    Vector prefix;
    enumerate_lattice(m, h, h, prefix, out, static_cast<std::size_t>(-1));
    return out;
}

std::vector<Vector> sld_vectors(std::size_t m, std::size_t n) {
    if (m < 2 || n < 1) throw std::invalid_argument("sld_vectors: need m >= 2, n >= 1");
    unsigned h = 1;
    while (lattice_count(m, h) < n) ++h;
    std::vector<Vector> out;
    out.reserve(n);
    Vector prefix;
    enumerate_lattice(m, h, h, prefix, out, n);
    return out;
}

namespace {

// First rows of the Joe-Kuo "new-joe-kuo-6" direction number table:
// {s, a, m_1..m_s}. Dimension 1 is the van der Corput sequence.
struct SobolRow {
    unsigned s;
    unsigned a;
    unsigned m[4];
};

constexpr SobolRow kSobolRows[] = {
    {1, 0, {1, 0, 0, 0}},
    {2, 1, {1, 3, 0, 0}},
    {3, 1, {1, 3, 1, 0}},
    {3, 2, {1, 1, 1, 0}},
};

constexpr unsigned kSobolBits = 32;

std::vector<std::uint32_t> direction_integers(std::size_t dim_index) {
    std::vector<std::uint32_t> v(kSobolBits + 1, 0);
    if (dim_index == 0) {
        for (unsigned k = 1; k <= kSobolBits; ++k) v[k] = 1u << (kSobolBits - k);
        return v;
    }
    const SobolRow& row = kSobolRows[dim_index - 1];
    const unsigned s = row.s;
    for (unsigned k = 1; k <= s; ++k) v[k] = row.m[k - 1] << (kSobolBits - k);
    for (unsigned k = s + 1; k <= kSobolBits; ++k) {
        v[k] = v[k - s] ^ (v[k - s] >> s);
        for (unsigned i = 1; i < s; ++i) {
            if ((row.a >> (s - 1 - i)) & 1u) v[k] ^= v[k - i];
        }
    }
    return v;
}

}  // namespace

std::vector<Vector> sobol_points(std::size_t dims, std::size_t n) {
    if (dims < 1 || dims > 1 + std::size(kSobolRows)) {
        throw std::invalid_argument("sobol_points: unsupported dimension count");
    }
    std::vector<std::vector<std::uint32_t>> dirs;
    dirs.reserve(dims);
    for (std::size_t d = 0; d < dims; ++d) dirs.push_back(direction_integers(d));

    std::vector<Vector> out;
    out.reserve(n);
    std::vector<std::uint32_t> state(dims, 0);
    const double norm = std::ldexp(1.0, -static_cast<int>(kSobolBits));
    for (std::size_t i = 1; i <= n; ++i) {
        unsigned c = 1;
        std::size_t value = i - 1;
        while (value & 1) {
            value >>= 1;
            ++c;
        }
        Vector point(dims);
        for (std::size_t d = 0; d < dims; ++d) {
            state[d] ^= dirs[d][c];
            point[d] = static_cast<double>(state[d]) * norm;
        }
        out.push_back(std::move(point));
    }
    return out;
}

std::vector<Vector> sobol_simplex(std::size_t m, std::size_t n, std::uint64_t /*seed*/) {
    if (m < 2 || n < 1) throw std::invalid_argument("sobol_simplex: need m >= 2, n >= 1");
    const std::size_t dims = m - 1;
    std::vector<Vector> out;
    out.reserve(n);
    std::set<Vector> seen;

    std::vector<std::vector<std::uint32_t>> dirs;
    dirs.reserve(dims);
    for (std::size_t d = 0; d < dims; ++d) dirs.push_back(direction_integers(d));
    std::vector<std::uint32_t> state(dims, 0);
    const double norm = std::ldexp(1.0, -static_cast<int>(kSobolBits));

    // The sorted-differences transform identifies permutations of the same
    // coordinates, so duplicates are skipped until n distinct vectors exist.
    for (std::size_t i = 1; out.size() < n; ++i) {
        unsigned c = 1;
        std::size_t value = i - 1;
        while (value & 1) {
            value >>= 1;
            ++c;
        }
        Vector u(dims);
        for (std::size_t d = 0; d < dims; ++d) {
            state[d] ^= dirs[d][c];
            u[d] = static_cast<double>(state[d]) * norm;
        }
        std::sort(u.begin(), u.end());
        Vector w(m);
        w[0] = u[0];
        for (std::size_t j = 1; j < dims; ++j) w[j] = u[j] - u[j - 1];
        w[m - 1] = 1.0 - u[dims - 1];
        if (seen.insert(w).second) out.push_back(std::move(w));
    }
    return out;
}

std::vector<std::vector<int>> neighborhoods(const std::vector<Vector>& vectors, std::size_t T) {
    if (T > vectors.size()) throw std::invalid_argument("neighborhoods: T exceeds vector count");
    const std::size_t n = vectors.size();
    std::vector<std::vector<int>> out(n);
    std::vector<std::pair<double, int>> by_distance(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            double d2 = 0.0;
            for (std::size_t k = 0; k < vectors[i].size(); ++k) {
                const double diff = vectors[i][k] - vectors[j][k];
                d2 += diff * diff;
            }
            by_distance[j] = {d2, static_cast<int>(j)};
        }
        std::sort(by_distance.begin(), by_distance.end());
        out[i].reserve(T);
        for (std::size_t t = 0; t < T; ++t) out[i].push_back(by_distance[t].second);
    }
    return out;
}

WeightSet make_weight_set(DecompKind kind, std::size_t m, std::size_t n, std::size_t T,
                          std::uint64_t seed) {
    WeightSet ws;
    ws.vectors = kind == DecompKind::Sld ? sld_vectors(m, n) : sobol_simplex(m, n, seed);
    ws.neighborhoods = neighborhoods(ws.vectors, T);
    return ws;
}

}  // namespace moead
