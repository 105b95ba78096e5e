#include "treepat/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "treepat/detail/scc.hpp"
#include "treepat/errors.hpp"

namespace treepat {

namespace {

constexpr int kMaxPowerIterations = 1'000'000;

double poly(int n, double x) {  // x^n - 2x - 1
    double p = 1.0;
    for (int i = 0; i < n; ++i) p *= x;
    return p - 2.0 * x - 1.0;
}

double dpoly(int n, double x) {  // n x^(n-1) - 2
    double p = 1.0;
    for (int i = 0; i < n - 1; ++i) p *= x;
    return n * p - 2.0;
}

// Collatz-Wielandt iteration on an irreducible nonnegative matrix shifted by
// the identity; the shift makes the matrix primitive so the bounds close.
double cw_radius(const std::vector<double>& b, int s, double tol) {
    std::vector<double> x(static_cast<size_t>(s), 1.0), y(static_cast<size_t>(s));
    for (int iter = 0; iter < kMaxPowerIterations; ++iter) {
        double lo = std::numeric_limits<double>::infinity(), hi = 0.0, ymax = 0.0;
        for (int i = 0; i < s; ++i) {
            double acc = 0.0;
            const double* row = b.data() + static_cast<size_t>(i) * static_cast<size_t>(s);
            for (int j = 0; j < s; ++j) acc += row[j] * x[static_cast<size_t>(j)];
            y[static_cast<size_t>(i)] = acc;
            double r = acc / x[static_cast<size_t>(i)];
            lo = std::min(lo, r);
            hi = std::max(hi, r);
            ymax = std::max(ymax, acc);
        }
        if (hi - lo <= tol) return 0.5 * (hi + lo);
        for (int i = 0; i < s; ++i) x[static_cast<size_t>(i)] = y[static_cast<size_t>(i)] / ymax;
    }
    throw ConvergenceError("power iteration exhausted its iteration budget");
}

}  // namespace

double lambda_n(int n, double tol) {
    if (n < 3) throw DomainError("lambda_n requires n >= 3");
    if (tol <= 0) throw DomainError("tolerance must be positive");
    double lo = 1.0, hi = 2.0;
    for (int i = 0; i < 40; ++i) {
        double mid = 0.5 * (lo + hi);
        if (poly(n, mid) < 0)
            lo = mid;
        else
            hi = mid;
    }
    // Newton polish to machine precision; tol only bounds the residual from
    // above, the iteration itself runs until it stops improving.
    double x = 0.5 * (lo + hi);
    double fx = poly(n, x);
    for (int i = 0; i < 200 && fx != 0.0; ++i) {
        double next = x - fx / dpoly(n, x);
        if (next <= 1.0 || next >= 2.0 || next == x) break;
        double fn = poly(n, next);
        if (std::abs(fn) >= std::abs(fx)) break;
        x = next;
        fx = fn;
    }
    if (std::abs(fx) > tol) throw ConvergenceError("lambda_n root polish failed to reach tolerance");
    return x;
}

double spectral_radius(const std::vector<std::vector<double>>& m, double tol) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return 0.0;
    bool zero_one = true;
    std::vector<std::vector<int>> adj(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(m[static_cast<size_t>(i)].size()) != n)
            throw DomainError("spectral_radius requires a square matrix");
        for (int j = 0; j < n; ++j) {
            double v = m[static_cast<size_t>(i)][static_cast<size_t>(j)];
            if (v < 0) throw DomainError("spectral_radius requires a nonnegative matrix");
            if (v > 0) adj[static_cast<size_t>(i)].push_back(j);
            if (v != 0.0 && v != 1.0) zero_one = false;
        }
    }

    int ncomp = 0;
    std::vector<int> comp = detail::tarjan_scc(adj, &ncomp);

    if (zero_one) {
        bool all_cycles = true, any_cycle = false;
        std::vector<int> size(static_cast<size_t>(ncomp), 0);
        for (int v = 0; v < n; ++v) ++size[static_cast<size_t>(comp[static_cast<size_t>(v)])];
        for (int v = 0; v < n && all_cycles; ++v) {
            int within = 0;
            for (int w : adj[static_cast<size_t>(v)])
                if (comp[static_cast<size_t>(w)] == comp[static_cast<size_t>(v)]) ++within;
            if (within > 1) all_cycles = false;
            if (within == 1) any_cycle = true;
        }
        if (all_cycles) return any_cycle ? 1.0 : 0.0;
    }

    double rho = 0.0;
    for (int c = 0; c < ncomp; ++c) {
        std::vector<int> verts;
        for (int v = 0; v < n; ++v)
            if (comp[static_cast<size_t>(v)] == c) verts.push_back(v);
        const int s = static_cast<int>(verts.size());
        if (s == 1) {
            int v = verts[0];
            rho = std::max(rho, m[static_cast<size_t>(v)][static_cast<size_t>(v)]);
            continue;
        }
        std::vector<double> b(static_cast<size_t>(s) * static_cast<size_t>(s), 0.0);
        for (int i = 0; i < s; ++i) {
            for (int j = 0; j < s; ++j)
                b[static_cast<size_t>(i) * static_cast<size_t>(s) + static_cast<size_t>(j)] =
                    m[static_cast<size_t>(verts[static_cast<size_t>(i)])]
                     [static_cast<size_t>(verts[static_cast<size_t>(j)])];
            b[static_cast<size_t>(i) * static_cast<size_t>(s) + static_cast<size_t>(i)] += 1.0;
        }
        rho = std::max(rho, cw_radius(b, s, tol) - 1.0);
    }
    return rho;
}

int least_prime_factor(int n) {
    if (n < 2) throw DomainError("least_prime_factor requires n >= 2");
    for (int p = 2; p * p <= n; ++p)
        if (n % p == 0) return p;
    return n;
}

double reducible_floor(int n) {
    if (n < 6) throw DomainError("reducible_floor requires n >= 6");
    int p = least_prime_factor(n);
    if (p == n) throw DomainError("reducible_floor requires a composite n");
    return std::log(lambda_n(n / p)) / p;
}

}  // namespace treepat
