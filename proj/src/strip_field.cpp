#include <algorithm>
#include <cmath>
#include <string>

#include "muskat/errors.hpp"
#include "muskat/strip.hpp"

namespace muskat {

ZGrid::ZGrid(int n) : n_z(n) {
    if (n < 5 || n % 2 == 0)
        throw ShapeError("n_z must be odd and at least 5, got " + std::to_string(n));
}

std::vector<double> ZGrid::nodes() const {
    std::vector<double> z(static_cast<std::size_t>(n_z));
    for (int j = 0; j < n_z; ++j) z[j] = node(j);
    z.back() = 0.0;
    return z;
}

StripField::StripField(GridSpec grid, ZGrid zgrid)
    : grid_(grid),
      zgrid_(zgrid),
      data_(static_cast<std::size_t>(2 * grid.n_modes + 1) * static_cast<std::size_t>(zgrid.n_z)) {
    grid_.validate();
}

StripField::StripField(GridSpec grid, ZGrid zgrid, std::vector<Complex> coeffs)
    : grid_(grid), zgrid_(zgrid), data_(std::move(coeffs)) {
    grid_.validate();
    if (data_.size() != static_cast<std::size_t>(2 * grid.n_modes + 1) * static_cast<std::size_t>(zgrid.n_z))
        throw ShapeError("strip coefficient table has the wrong size");
    for (const Complex& c : data_)
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
            throw InvariantError("non-finite strip coefficient");
}

StripField StripField::constant_in_z(const SpectralField& f, ZGrid zgrid) {
    return separable(f, std::vector<double>(static_cast<std::size_t>(zgrid.n_z), 1.0), zgrid);
}

StripField StripField::separable(const SpectralField& f, const std::vector<double>& profile, ZGrid zgrid) {
    if (static_cast<int>(profile.size()) != zgrid.n_z) throw ShapeError("profile length must equal n_z");
    StripField out(f.grid(), zgrid);
    for (int n = -f.n_modes(); n <= f.n_modes(); ++n)
        for (int j = 0; j < zgrid.n_z; ++j) out.data_[out.index(n, j)] = f[n] * profile[j];
    return out;
}

void StripField::set(int n, int j, Complex c) {
    data_[index(n, j)] = c;
    if (n != 0) data_[index(-n, j)] = std::conj(c);
}

SpectralField StripField::level(int j) const {
    std::vector<Complex> c(static_cast<std::size_t>(2 * grid_.n_modes + 1));
    for (int n = -grid_.n_modes; n <= grid_.n_modes; ++n) c[n + grid_.n_modes] = data_[index(n, j)];
    return SpectralField(grid_, std::move(c));
}

void StripField::set_level(int j, const SpectralField& f) {
    if (!(f.grid() == grid_)) throw ShapeError("level lives on a different grid");
    for (int n = -grid_.n_modes; n <= grid_.n_modes; ++n) data_[index(n, j)] = f[n];
}

std::vector<Complex> StripField::column(int n) const {
    const auto first = data_.begin() + static_cast<std::ptrdiff_t>(index(n, 0));
    return {first, first + zgrid_.n_z};
}

double StripField::asymmetry() const {
    double m = 0.0;
    for (int j = 0; j < zgrid_.n_z; ++j) m = std::max(m, level(j).asymmetry());
    return m;
}

void StripField::check_shape(const StripField& o) const {
    if (!same_shape(o)) throw ShapeError("strip fields have different grids");
}

StripField& StripField::operator+=(const StripField& o) {
    check_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
}

StripField& StripField::operator-=(const StripField& o) {
    check_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
}

StripField& StripField::operator*=(double a) {
    for (Complex& c : data_) c *= a;
    return *this;
}

StripField dx(const StripField& f, int k) {
    StripField out(f.grid(), f.zgrid());
    for (int j = 0; j < f.n_z(); ++j) out.set_level(j, derivative(f.level(j), k));
    return out;
}

StripField dz(const StripField& f) {
    const int nz = f.n_z();
    const double inv = 1.0 / (12.0 * f.zgrid().dz());
    StripField out(f.grid(), f.zgrid());
    for (int n = 0; n <= f.n_modes(); ++n) {
        const std::vector<Complex> c = f.column(n);
        auto at = [&](int j) { return c[static_cast<std::size_t>(j)]; };
        for (int j = 0; j < nz; ++j) {
            Complex d;
            if (j == 0)
                d = -25.0 * at(0) + 48.0 * at(1) - 36.0 * at(2) + 16.0 * at(3) - 3.0 * at(4);
            else if (j == 1)
                d = -3.0 * at(0) - 10.0 * at(1) + 18.0 * at(2) - 6.0 * at(3) + at(4);
            else if (j == nz - 2)
                d = 3.0 * at(nz - 1) + 10.0 * at(nz - 2) - 18.0 * at(nz - 3) + 6.0 * at(nz - 4) - at(nz - 5);
            else if (j == nz - 1)
                d = 25.0 * at(nz - 1) - 48.0 * at(nz - 2) + 36.0 * at(nz - 3) - 16.0 * at(nz - 4) +
                    3.0 * at(nz - 5);
            else
                d = at(j - 2) - 8.0 * at(j - 1) + 8.0 * at(j + 1) - at(j + 2);
            out.set(n, j, d * inv);
        }
    }
    return out;
}

double poisson_residual(const StripField& phi, const StripField& g1, const StripField& g2, const StripField& f,
                        double mu) {
    if (!phi.same_shape(g1) || !phi.same_shape(g2) || !phi.same_shape(f))
        throw ShapeError("poisson_residual: inputs live on different grids");
    const int nz = phi.n_z();
    const double h = phi.zgrid().dz(), h2 = h * h, sq = std::sqrt(mu);
    double worst = 0.0;
    for (int n = 0; n <= phi.n_modes(); ++n) {
        const std::vector<Complex> p = phi.column(n), a = g1.column(n), b = g2.column(n), s = f.column(n);
        for (int j = 0; j < nz; ++j) {
            Complex pzz, bz;
            if (j == 0) {
                pzz = (2.0 * p[0] - 5.0 * p[1] + 4.0 * p[2] - p[3]) / h2;
                bz = (-3.0 * b[0] + 4.0 * b[1] - b[2]) / (2.0 * h);
            } else if (j == nz - 1) {
                pzz = (2.0 * p[j] - 5.0 * p[j - 1] + 4.0 * p[j - 2] - p[j - 3]) / h2;
                bz = (3.0 * b[j] - 4.0 * b[j - 1] + b[j - 2]) / (2.0 * h);
            } else {
                pzz = (p[j - 1] - 2.0 * p[j] + p[j + 1]) / h2;
                bz = (b[j + 1] - b[j - 1]) / (2.0 * h);
            }
            const Complex lhs = pzz - mu * double(n) * n * p[j];
            const Complex rhs = Complex(0.0, sq * n) * a[j] + bz + s[j];
            worst = std::max(worst, std::abs(lhs - rhs));
        }
    }
    return worst;
}

namespace {

template <class T>
T simpson(const std::vector<T>& v, double h) {
    const std::size_t n = v.size();
    T sum = v[0] + v[n - 1];
    for (std::size_t j = 1; j + 1 < n; ++j) sum += (j % 2 == 1 ? 4.0 : 2.0) * v[j];
    return sum * (h / 3.0);
}

}  // namespace

SpectralField vertical_integral(const StripField& f) {
    SpectralField out(f.grid());
    for (int n = 0; n <= f.n_modes(); ++n) out.set(n, simpson(f.column(n), f.zgrid().dz()));
    return out;
}

double strip_norm(const StripField& f, const WienerIndex& idx, int k) {
    idx.validate();
    if (k != 0 && k != 1) throw ParameterError("strip_norm supports k in {0, 1}");
    const StripField g = k == 0 ? f : dz(f);
    const double h = g.zgrid().dz();
    long double sum = 0.0L;
    for (int n = 0; n <= g.n_modes(); ++n) {
        const long double w = std::pow(1.0L + n, static_cast<long double>(idx.s)) *
                              std::exp(static_cast<long double>(idx.lambda) * n);
        for (int sign : {1, -1}) {
            if (n == 0 && sign == -1) continue;
            std::vector<double> mag;
            for (Complex c : g.column(sign * n)) mag.push_back(std::abs(c));
            sum += w * simpson(mag, h);
        }
    }
    return static_cast<double>(sum);
}

StripField multiply(const StripField& f, const StripField& g, Exec exec) {
    if (!f.same_shape(g)) throw ShapeError("multiply: strip fields have different grids");
    StripField out(f.grid(), f.zgrid());
    const int nz = f.n_z();
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
        for (int j = 0; j < nz; ++j) out.set_level(j, multiply(f.level(j), g.level(j)));
    } else {
        for (int j = 0; j < nz; ++j) out.set_level(j, multiply(f.level(j), g.level(j)));
    }
    return out;
}

StripField multiply(const SpectralField& f, const StripField& g, Exec exec) {
    return multiply(StripField::constant_in_z(f, g.zgrid()), g, exec);
}

Gradient grad_mu(const StripField& phi, double mu) {
    return {std::sqrt(mu) * dx(phi, 1), dz(phi)};
}

double grad_norm(const StripField& phi, double mu, const WienerIndex& idx) {
    const Gradient g = grad_mu(phi, mu);
    return strip_norm(g.x, idx) + strip_norm(g.z, idx);
}

}  // namespace muskat
