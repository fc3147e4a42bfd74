#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstring>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace tentkit {

/// Periodic space-time grid on [0,L)^n x (0, T_max].
///
/// Spatial points sit at x_j = j*dx, j = 0..N-1 per axis, with wrap-around.
/// Time slices are left-open: slice i (0-based) holds the value at
/// t = (i+1)*dt, so a field never stores the t=0 slice. Time integrals are
/// left-endpoint Riemann sums over these slices.
struct GridSpec {
    int n = 1;          // spatial dimension (1 or 2)
    int N = 8;          // points per spatial axis, power of two
    double L = 1.0;     // torus side length
    int M = 8;          // number of time steps
    double T_max = 1.0; // time horizon

    void validate() const {
        if (n != 1 && n != 2) throw std::invalid_argument("GridSpec: n must be 1 or 2");
        if (N < 8 || (N & (N - 1)) != 0) throw std::invalid_argument("GridSpec: N must be a power of two >= 8");
        if (M < 8) throw std::invalid_argument("GridSpec: M must be >= 8");
        if (!(L > 0.0)) throw std::invalid_argument("GridSpec: L must be positive");
        if (!(T_max > 0.0)) throw std::invalid_argument("GridSpec: T_max must be positive");
    }

    double dx() const { return L / N; }
    double dt() const { return T_max / M; }

    /// Advisory only: dt <= dx^2 resolves the parabolic scaling.
    bool parabolic_resolution() const { return dt() <= dx() * dx() * (1.0 + 1e-12); }

    std::size_t points() const { return n == 1 ? std::size_t(N) : std::size_t(N) * N; }

    /// Time of slice i (0-based): (i+1)*dt.
    double time_of(int i) const { return (i + 1) * dt(); }

    int wrap(int a) const {
        a %= N;
        return a < 0 ? a + N : a;
    }

    std::size_t flatten(std::array<int, 2> ix) const {
        return n == 1 ? std::size_t(wrap(ix[0]))
                      : std::size_t(wrap(ix[0])) * N + wrap(ix[1]);
    }

    std::array<int, 2> unflatten(std::size_t f) const {
        if (n == 1) return {int(f), 0};
        return {int(f / N), int(f % N)};
    }

    /// Signed displacement a-b along one axis, wrapped into [-N/2, N/2).
    int wrap_delta(int a, int b) const {
        int d = wrap(a - b);
        if (d >= N / 2 + (N % 2)) d -= N;
        if (d > N / 2) d -= N; // even N: N/2 stays as +N/2 representative
        return d;
    }

    /// Euclidean torus distance between grid points, in length units.
    double distance(std::array<int, 2> a, std::array<int, 2> b) const {
        double s = 0.0;
        for (int j = 0; j < n; ++j) {
            int d = std::abs(a[j] - b[j]) % N;
            d = std::min(d, N - d);
            s += double(d) * d;
        }
        return std::sqrt(s) * dx();
    }

    bool operator==(const GridSpec&) const = default;

    /// FNV-1a over the defining parameters; identifies a grid in reports.
    std::uint64_t fingerprint() const {
        auto mix = [](std::uint64_t h, std::uint64_t v) {
            for (int i = 0; i < 8; ++i) {
                h ^= (v >> (8 * i)) & 0xff;
                h *= 0x100000001b3ull;
            }
            return h;
        };
        std::uint64_t h = 0xcbf29ce484222325ull;
        h = mix(h, std::uint64_t(n));
        h = mix(h, std::uint64_t(N));
        h = mix(h, std::uint64_t(M));
        std::uint64_t lb, tb;
        static_assert(sizeof(double) == 8);
        std::memcpy(&lb, &L, 8);
        std::memcpy(&tb, &T_max, 8);
        h = mix(h, lb);
        h = mix(h, tb);
        return h;
    }
};

namespace detail {
inline void check_same_grid(const GridSpec& a, const GridSpec& b, const char* what) {
    if (!(a == b)) throw std::invalid_argument(std::string(what) + ": grid mismatch");
}
} // namespace detail

/// d-component values on the spatial grid, lexicographic point order,
/// components innermost.
class SpaceField {
public:
    SpaceField() = default;
    SpaceField(GridSpec grid, int d)
        : grid_(grid), d_(d), v_(grid.points() * std::size_t(d), 0.0) {
        grid.validate();
        if (d < 1) throw std::invalid_argument("SpaceField: d must be >= 1");
    }

    const GridSpec& grid() const { return grid_; }
    int components() const { return d_; }
    std::size_t size() const { return v_.size(); }

    double& operator()(std::size_t x, int c = 0) { return v_[x * d_ + c]; }
    double operator()(std::size_t x, int c = 0) const { return v_[x * d_ + c]; }

    std::span<double> data() { return v_; }
    std::span<const double> data() const { return v_; }

    bool finite() const {
        for (double x : v_)
            if (!std::isfinite(x)) return false;
        return true;
    }

private:
    GridSpec grid_{};
    int d_ = 0;
    std::vector<double> v_;
};

/// d-component values on the time x space grid. Slice i holds the field at
/// t = (i+1)*dt; layout is [slice][point][component].
class SpaceTimeField {
public:
    SpaceTimeField() = default;
    SpaceTimeField(GridSpec grid, int d)
        : grid_(grid), d_(d), v_(std::size_t(grid.M) * grid.points() * d, 0.0) {
        grid.validate();
        if (d < 1) throw std::invalid_argument("SpaceTimeField: d must be >= 1");
    }

    const GridSpec& grid() const { return grid_; }
    int components() const { return d_; }
    std::size_t size() const { return v_.size(); }
    std::size_t slice_size() const { return grid_.points() * std::size_t(d_); }

    double& operator()(int i, std::size_t x, int c = 0) {
        return v_[std::size_t(i) * slice_size() + x * d_ + c];
    }
    double operator()(int i, std::size_t x, int c = 0) const {
        return v_[std::size_t(i) * slice_size() + x * d_ + c];
    }

    std::span<double> slice(int i) { return {v_.data() + std::size_t(i) * slice_size(), slice_size()}; }
    std::span<const double> slice(int i) const {
        return {v_.data() + std::size_t(i) * slice_size(), slice_size()};
    }

    SpaceField slice_field(int i) const {
        SpaceField out(grid_, d_);
        auto s = slice(i);
        std::copy(s.begin(), s.end(), out.data().begin());
        return out;
    }

    void set_slice(int i, const SpaceField& f) {
        detail::check_same_grid(grid_, f.grid(), "set_slice");
        if (f.components() != d_) throw std::invalid_argument("set_slice: component mismatch");
        auto s = slice(i);
        std::copy(f.data().begin(), f.data().end(), s.begin());
    }

    std::span<double> data() { return v_; }
    std::span<const double> data() const { return v_; }

    bool finite() const {
        for (double x : v_)
            if (!std::isfinite(x)) return false;
        return true;
    }

private:
    GridSpec grid_{};
    int d_ = 0;
    std::vector<double> v_;
};

/// Spatial ball on the torus: all grid indices with wrap distance < radius
/// of the center. Always contains its center.
struct Ball {
    std::array<int, 2> center{0, 0};
    double radius = 0.0;
    std::vector<std::size_t> members; // flattened indices, ascending
    bool saturated = false;           // covered the whole torus

    double measure(const GridSpec& g) const {
        return double(members.size()) * std::pow(g.dx(), g.n);
    }
    bool contains(const GridSpec& g, std::size_t flat) const {
        return g.distance(g.unflatten(flat), center) < radius;
    }
};

inline Ball ball_members(const GridSpec& g, std::array<int, 2> center, double r) {
    if (!(r > 0.0)) throw std::invalid_argument("ball_members: radius must be positive");
    Ball b;
    b.center = {g.wrap(center[0]), g.n == 2 ? g.wrap(center[1]) : 0};
    b.radius = r;
    const std::size_t P = g.points();
    b.members.reserve(P);
    for (std::size_t f = 0; f < P; ++f) {
        if (g.distance(g.unflatten(f), b.center) < r) b.members.push_back(f);
    }
    b.saturated = (b.members.size() == P);
    return b;
}

/// Forward differences with wrap-around; scalar -> n components.
inline SpaceField gradient(const SpaceField& u) {
    if (u.components() != 1) throw std::invalid_argument("gradient: expected scalar field");
    const GridSpec& g = u.grid();
    const double inv = 1.0 / g.dx();
    SpaceField out(g, g.n);
    if (g.n == 1) {
        for (int x = 0; x < g.N; ++x)
            out(x, 0) = (u(g.wrap(x + 1)) - u(x)) * inv;
    } else {
        for (int x0 = 0; x0 < g.N; ++x0)
            for (int x1 = 0; x1 < g.N; ++x1) {
                std::size_t f = g.flatten({x0, x1});
                out(f, 0) = (u(g.flatten({x0 + 1, x1})) - u(f)) * inv;
                out(f, 1) = (u(g.flatten({x0, x1 + 1})) - u(f)) * inv;
            }
    }
    return out;
}

/// Backward differences with wrap-around; the negative adjoint of gradient,
/// so <grad u, G> + <u, div G> = 0 holds exactly.
inline SpaceField divergence(const SpaceField& G) {
    const GridSpec& g = G.grid();
    if (G.components() != g.n) throw std::invalid_argument("divergence: field must have d = n components");
    const double inv = 1.0 / g.dx();
    SpaceField out(g, 1);
    if (g.n == 1) {
        for (int x = 0; x < g.N; ++x)
            out(x) = (G(x, 0) - G(g.wrap(x - 1), 0)) * inv;
    } else {
        for (int x0 = 0; x0 < g.N; ++x0)
            for (int x1 = 0; x1 < g.N; ++x1) {
                std::size_t f = g.flatten({x0, x1});
                out(f) = (G(f, 0) - G(g.flatten({x0 - 1, x1}), 0)) * inv +
                         (G(f, 1) - G(g.flatten({x0, x1 - 1}), 1)) * inv;
            }
    }
    return out;
}

/// Componentwise dot, summed against the cell measure dx^n.
inline double inner_product(const SpaceField& f, const SpaceField& h) {
    detail::check_same_grid(f.grid(), h.grid(), "inner_product");
    if (f.components() != h.components())
        throw std::invalid_argument("inner_product: component mismatch");
    double s = 0.0;
    auto a = f.data(), b = h.data();
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s * std::pow(f.grid().dx(), f.grid().n);
}

inline double l2_norm(const SpaceField& f) { return std::sqrt(inner_product(f, f)); }

/// L^p norm over the torus (p = inf gives the max).
inline double lp_norm(const SpaceField& f, double p) {
    if (!(p > 0.0)) throw std::invalid_argument("lp_norm: p must be positive");
    const GridSpec& g = f.grid();
    const std::size_t P = g.points();
    const int d = f.components();
    double meas = std::pow(g.dx(), g.n);
    if (std::isinf(p)) {
        double m = 0.0;
        for (std::size_t x = 0; x < P; ++x) {
            double q = 0.0;
            for (int c = 0; c < d; ++c) q += f(x, c) * f(x, c);
            m = std::max(m, q);
        }
        return std::sqrt(m);
    }
    double s = 0.0;
    for (std::size_t x = 0; x < P; ++x) {
        double q = 0.0;
        for (int c = 0; c < d; ++c) q += f(x, c) * f(x, c);
        s += std::pow(std::sqrt(q), p);
    }
    return std::pow(s * meas, 1.0 / p);
}

/// Space-time L^2 norm: left-endpoint sum in t of the spatial L^2 norms.
inline double l2_norm(const SpaceTimeField& f) {
    const GridSpec& g = f.grid();
    double meas = std::pow(g.dx(), g.n) * g.dt();
    double s = 0.0;
    auto v = f.data();
    for (double x : v) s += x * x;
    return std::sqrt(s * meas);
}

inline double spatial_mean(const SpaceField& f, int c = 0) {
    double s = 0.0;
    const std::size_t P = f.grid().points();
    for (std::size_t x = 0; x < P; ++x) s += f(x, c);
    return s / double(P);
}

/// Fraction of squared mass carried by cells outside the central half of the
/// torus (per axis). Diagnostic for data meant to emulate a non-periodic
/// domain.
inline double boundary_energy_fraction(const SpaceTimeField& f) {
    const GridSpec& g = f.grid();
    const std::size_t P = g.points();
    const int d = f.components();
    double inside = 0.0, total = 0.0;
    for (int i = 0; i < g.M; ++i) {
        for (std::size_t x = 0; x < P; ++x) {
            auto ix = g.unflatten(x);
            bool central = true;
            for (int j = 0; j < g.n; ++j) {
                int del = std::abs(ix[j] - g.N / 2);
                del = std::min(del, g.N - del);
                if (del > g.N / 4) central = false;
            }
            double q = 0.0;
            for (int c = 0; c < d; ++c) q += f(i, x, c) * f(i, x, c);
            total += q;
            if (central) inside += q;
        }
    }
    return total > 0.0 ? 1.0 - inside / total : 0.0;
}

} // namespace tentkit
