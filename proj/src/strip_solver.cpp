// Per-mode solution of phi'' - a^2 phi = S on [-1, 0], phi(0) = h, phi'(-1) = 0, a = sqrt(mu)|k|.
//
//   phi(z) = [sinh(az) C(z) + cosh(a(1+z)) D(z)] / (a cosh a) + h cosh(a(1+z)) / cosh a
//   C(z)   = int_{-1}^z cosh(a(1+r)) S(r) dr,   D(z) = int_z^0 sinh(ar) S(r) dr
//
// C and D are accumulated interval by interval with scaled recursions so nothing overflows.
// On each interval S is replaced by its cubic Lagrange interpolant and the kernel moments
// are integrated by Gauss-Legendre quadrature, so exponential kernels stay exact at large a.

#include <boost/math/quadrature/gauss.hpp>

#include <array>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>

#include "muskat/errors.hpp"
#include "muskat/strip.hpp"

namespace muskat {
namespace {

using Quad = boost::math::quadrature::gauss<double, 10>;

// cosh(x) = e^{|x|} ch(x), sinh(x) = sign(x) e^{|x|} sh(x)
double ch(double x) { return 0.5 * (1.0 + std::exp(-2.0 * std::abs(x))); }
double sh(double x) { return -0.5 * std::expm1(-2.0 * std::abs(x)); }

struct Stencil {
    int first = 0;
    std::array<double, 4> nodes{};

    double basis(int m, double r) const {
        double v = 1.0;
        for (int q = 0; q < 4; ++q)
            if (q != m) v *= (r - nodes[q]) / (nodes[m] - nodes[q]);
        return v;
    }
};

std::vector<Stencil> make_stencils(const ZGrid& zg) {
    const std::vector<double> z = zg.nodes();
    std::vector<Stencil> st(static_cast<std::size_t>(zg.n_z - 1));
    for (int i = 0; i + 1 < zg.n_z; ++i) {
        const int first = std::clamp(i - 1, 0, zg.n_z - 4);
        st[i].first = first;
        for (int q = 0; q < 4; ++q) st[i].nodes[q] = z[first + q];
    }
    return st;
}

template <class Kernel>
std::array<double, 4> moments(const Stencil& s, double lo, double hi, Kernel&& K) {
    std::array<double, 4> w{};
    for (int m = 0; m < 4; ++m)
        w[m] = Quad::integrate([&](double r) { return K(r) * s.basis(m, r); }, lo, hi);
    return w;
}

struct ModeKernel {
    std::vector<std::array<double, 4>> up, down;
    std::vector<double> up_ratio, down_ratio;
    std::vector<double> p_sinh, p_cosh, boundary;
};

struct StripKernel {
    ZGrid zgrid;
    std::vector<Stencil> stencils;
    std::vector<std::array<double, 4>> plain;  // int of the basis, kernel 1
    std::vector<ModeKernel> modes;             // index k = 1..n_modes (slot 0 unused)
};

ModeKernel build_mode(double a, const ZGrid& zg, const std::vector<Stencil>& st) {
    const std::vector<double> z = zg.nodes();
    const int nz = zg.n_z;
    const double h = zg.dz();
    ModeKernel mk;
    mk.up.resize(nz - 1);
    mk.down.resize(nz - 1);
    mk.up_ratio.resize(nz - 1);
    mk.down_ratio.resize(nz - 1);
    for (int i = 0; i + 1 < nz; ++i) {
        const double zl = z[i], zr = z[i + 1];
        mk.up_ratio[i] = std::exp(-a * h) * ch(a * (1 + zl)) / ch(a * (1 + zr));
        mk.down_ratio[i] = std::exp(-a * h) * ch(a * zr) / ch(a * zl);
        mk.up[i] = moments(st[i], zl, zr, [&](double r) {
            return std::exp(a * (r - zr)) * ch(a * (1 + r)) / ch(a * (1 + zr));
        });
        mk.down[i] = moments(st[i], zl, zr, [&](double r) {
            return -std::exp(a * (std::abs(r) - std::abs(zl))) * sh(a * r) / ch(a * zl);
        });
    }
    mk.p_sinh.resize(nz);
    mk.p_cosh.resize(nz);
    mk.boundary.resize(nz);
    for (int j = 0; j < nz; ++j) {
        const double zj = z[j];
        mk.p_sinh[j] = -sh(a * zj) * ch(a * (1 + zj)) / (a * ch(a));
        mk.p_cosh[j] = ch(a * (1 + zj)) * ch(a * zj) / (a * ch(a));
        mk.boundary[j] = std::exp(a * zj) * ch(a * (1 + zj)) / ch(a);
    }
    return mk;
}

std::shared_ptr<const StripKernel> kernel_for(double mu, int n_modes, const ZGrid& zg) {
    using Key = std::tuple<double, int, int>;
    static std::map<Key, std::shared_ptr<const StripKernel>> cache;
    static std::mutex m;
    const Key key{mu, n_modes, zg.n_z};
    {
        std::lock_guard<std::mutex> lock(m);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    auto k = std::make_shared<StripKernel>();
    k->zgrid = zg;
    k->stencils = make_stencils(zg);
    const std::vector<double> z = zg.nodes();
    for (int i = 0; i + 1 < zg.n_z; ++i)
        k->plain.push_back(moments(k->stencils[i], z[i], z[i + 1], [](double) { return 1.0; }));
    k->modes.resize(static_cast<std::size_t>(n_modes + 1));
    for (int n = 1; n <= n_modes; ++n) k->modes[n] = build_mode(std::sqrt(mu) * n, zg, k->stencils);
    std::lock_guard<std::mutex> lock(m);
    if (cache.size() > 64) cache.clear();
    return cache.emplace(key, std::move(k)).first->second;
}

Complex interval_sum(const std::array<double, 4>& w, const Stencil& s, const std::vector<Complex>& v) {
    Complex acc{};
    for (int m = 0; m < 4; ++m) acc += w[m] * v[static_cast<std::size_t>(s.first + m)];
    return acc;
}

std::vector<Complex> solve_mode(const StripKernel& K, int n, const std::vector<Complex>& S, Complex h) {
    const ModeKernel& mk = K.modes[static_cast<std::size_t>(n)];
    const int nz = K.zgrid.n_z;
    std::vector<Complex> C(nz), D(nz), phi(nz);
    for (int i = 0; i + 1 < nz; ++i)
        C[i + 1] = mk.up_ratio[i] * C[i] + interval_sum(mk.up[i], K.stencils[i], S);
    for (int i = nz - 2; i >= 0; --i)
        D[i] = mk.down_ratio[i] * D[i + 1] + interval_sum(mk.down[i], K.stencils[i], S);
    for (int j = 0; j < nz; ++j) phi[j] = mk.p_sinh[j] * C[j] + mk.p_cosh[j] * D[j] + mk.boundary[j] * h;
    return phi;
}

// Mode 0: phi' = g2 - g2(-1) + int_{-1}^z f, phi = h - int_z^0 phi'.
std::vector<Complex> solve_mean(const StripKernel& K, const std::vector<Complex>& g2,
                                const std::vector<Complex>& f, Complex h) {
    const int nz = K.zgrid.n_z;
    std::vector<Complex> F(nz), dphi(nz), phi(nz);
    for (int i = 0; i + 1 < nz; ++i) F[i + 1] = F[i] + interval_sum(K.plain[i], K.stencils[i], f);
    for (int j = 0; j < nz; ++j) dphi[j] = g2[j] - g2[0] + F[j];
    phi[nz - 1] = h;
    for (int i = nz - 2; i >= 0; --i) phi[i] = phi[i + 1] - interval_sum(K.plain[i], K.stencils[i], dphi);
    return phi;
}

}  // namespace

StripField solve_poisson_strip(const StripField& g1, const StripField& g2, const StripField& f,
                               const SpectralField& h, double mu, Exec exec) {
    if (!(mu > 0.0)) throw ParameterError("solve_poisson_strip requires mu > 0");
    if (!g1.same_shape(g2) || !g1.same_shape(f) || !(h.grid() == f.grid()))
        throw ShapeError("solve_poisson_strip: inputs live on different grids");

    const int N = f.n_modes();
    const ZGrid zg = f.zgrid();
    const auto K = kernel_for(mu, N, zg);
    const StripField dg2 = dz(g2);
    const double sqmu = std::sqrt(mu);

    StripField phi(f.grid(), zg);
    auto do_mode = [&](int n) {
        std::vector<Complex> S = f.column(n);
        const std::vector<Complex> a1 = g1.column(n);
        const std::vector<Complex> a2 = dg2.column(n);
        const Complex ik(0.0, sqmu * n);
        for (std::size_t j = 0; j < S.size(); ++j) S[j] += ik * a1[j] + a2[j];
        const std::vector<Complex> col = solve_mode(*K, n, S, h[n]);
        for (int j = 0; j < zg.n_z; ++j) phi.set(n, j, col[static_cast<std::size_t>(j)]);
    };

    const std::vector<Complex> mean = solve_mean(*K, g2.column(0), f.column(0), h[0]);
    for (int j = 0; j < zg.n_z; ++j) phi.set(0, j, mean[static_cast<std::size_t>(j)]);
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
        for (int n = 1; n <= N; ++n) do_mode(n);
    } else {
        for (int n = 1; n <= N; ++n) do_mode(n);
    }
    return phi;
}

}  // namespace muskat
