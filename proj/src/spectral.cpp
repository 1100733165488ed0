#include "muskat/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "fft.hpp"
#include "muskat/errors.hpp"

namespace muskat {
namespace {

bool smooth_size(int n) {
    for (int p : {2, 3, 5})
        while (n % p == 0) n /= p;
    return n == 1;
}

int next_smooth(int n) {
    while (!smooth_size(n)) ++n;
    return n;
}

}  // namespace

GridSpec GridSpec::with_modes(int n_modes) {
    GridSpec g{n_modes, next_smooth(3 * n_modes + 1)};
    g.validate();
    return g;
}

void GridSpec::validate() const {
    if (n_modes < 4) throw ShapeError("n_modes must be at least 4, got " + std::to_string(n_modes));
    if (n_phys < 3 * n_modes)
        throw ShapeError("n_phys must be at least 3*n_modes (" + std::to_string(3 * n_modes) +
                         "), got " + std::to_string(n_phys));
}

int GridSpec::product_size() const { return std::max(n_phys, next_smooth(3 * n_modes + 1)); }

std::vector<double> GridSpec::nodes() const {
    std::vector<double> x(static_cast<std::size_t>(n_phys));
    for (int j = 0; j < n_phys; ++j) x[j] = 2.0 * std::numbers::pi * j / n_phys;
    return x;
}

void WienerIndex::validate() const {
    if (!(s >= 0.0) || !(lambda >= 0.0))
        throw ParameterError("Wiener index requires s >= 0 and lambda >= 0");
}

SpectralField::SpectralField(GridSpec grid)
    : grid_(grid), coeffs_(static_cast<std::size_t>(2 * grid.n_modes + 1)) {
    grid_.validate();
}

SpectralField::SpectralField(GridSpec grid, std::vector<Complex> coeffs)
    : grid_(grid), coeffs_(std::move(coeffs)) {
    grid_.validate();
    if (coeffs_.size() != static_cast<std::size_t>(2 * grid_.n_modes + 1))
        throw ShapeError("coefficient count " + std::to_string(coeffs_.size()) +
                         " does not match band 2*n_modes+1");
    for (const Complex& c : coeffs_)
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
            throw InvariantError("non-finite Fourier coefficient");
}

SpectralField SpectralField::trig(GridSpec grid, const std::vector<double>& cos_amp,
                                  const std::vector<double>& sin_amp) {
    SpectralField f(grid);
    const int kmax = static_cast<int>(std::max(cos_amp.size(), sin_amp.size()));
    if (kmax > grid.n_modes + 1) throw ShapeError("trigonometric polynomial exceeds the band");
    for (int k = 0; k < kmax; ++k) {
        const double a = k < static_cast<int>(cos_amp.size()) ? cos_amp[k] : 0.0;
        const double b = k < static_cast<int>(sin_amp.size()) ? sin_amp[k] : 0.0;
        if (k == 0)
            f.set(0, a);
        else
            f.set(k, Complex(0.5 * a, -0.5 * b));
    }
    return f;
}

void SpectralField::set(int n, Complex c) {
    if (std::abs(n) > grid_.n_modes) throw ShapeError("mode outside the retained band");
    if (n == 0) {
        coeffs_[grid_.n_modes] = c;
        return;
    }
    coeffs_[static_cast<std::size_t>(n + grid_.n_modes)] = c;
    coeffs_[static_cast<std::size_t>(-n + grid_.n_modes)] = std::conj(c);
}

double SpectralField::asymmetry() const {
    double m = std::abs((*this)[0].imag());
    for (int n = 1; n <= grid_.n_modes; ++n)
        m = std::max(m, std::abs((*this)[-n] - std::conj((*this)[n])));
    return m;
}

bool SpectralField::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](Complex c) { return c == Complex{}; });
}

void SpectralField::check_same_grid(const SpectralField& o) const {
    if (!(grid_ == o.grid_)) throw ShapeError("fields live on different grids");
}

SpectralField& SpectralField::operator+=(const SpectralField& o) {
    check_same_grid(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

SpectralField& SpectralField::operator-=(const SpectralField& o) {
    check_same_grid(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

SpectralField& SpectralField::operator*=(double a) {
    for (Complex& c : coeffs_) c *= a;
    return *this;
}

std::vector<double> evaluate_on(const SpectralField& f, int m) {
    const int N = f.n_modes();
    if (m < 2 * N + 1) throw ShapeError("evaluation grid too coarse for the band");
    const double scale = std::max(1.0, std::abs(f[0]));
    double cmax = scale;
    for (Complex c : f.coeffs()) cmax = std::max(cmax, std::abs(c));
    if (f.asymmetry() > 1e-10 * cmax)
        throw InvariantError("conjugate symmetry violated beyond 1e-10");

    std::vector<Complex> half(static_cast<std::size_t>(m / 2 + 1));
    half[0] = f[0].real();
    for (int n = 1; n <= N; ++n) half[n] = 0.5 * (f[n] + std::conj(f[-n]));
    std::vector<double> out(static_cast<std::size_t>(m));
    fft::backward(half, out);
    return out;
}

std::vector<double> to_physical(const SpectralField& f) { return evaluate_on(f, f.grid().n_phys); }

SpectralField project_from(std::span<const double> samples, const GridSpec& grid) {
    const int m = static_cast<int>(samples.size());
    if (m < 2 * grid.n_modes + 1) throw ShapeError("sample count too small for the band");
    for (double v : samples)
        if (!std::isfinite(v)) throw InvariantError("non-finite physical sample");
    std::vector<Complex> half(static_cast<std::size_t>(m / 2 + 1));
    fft::forward(samples, half);
    SpectralField f(grid);
    const double inv = 1.0 / m;
    f.set(0, half[0].real() * inv);
    for (int n = 1; n <= grid.n_modes; ++n) f.set(n, half[n] * inv);
    return f;
}

SpectralField to_spectral(std::span<const double> samples, const GridSpec& grid) {
    grid.validate();
    if (static_cast<int>(samples.size()) != grid.n_phys)
        throw ShapeError("sample length " + std::to_string(samples.size()) + " does not match n_phys " +
                         std::to_string(grid.n_phys));
    return project_from(samples, grid);
}

SpectralField derivative(const SpectralField& f, int k) {
    if (k < 0 || k > 6) throw ParameterError("derivative order must lie in [0, 6]");
    SpectralField out = f;
    out.set(0, 0.0);
    if (k == 0) return f;
    // Repeated multiplication by i*n, so composing derivatives is bit-exact.
    for (int n = 1; n <= f.n_modes(); ++n) {
        Complex c = f[n];
        const double dn = n;
        for (int r = 0; r < k; ++r) c = Complex(-dn * c.imag(), dn * c.real());
        out.set(n, c);
    }
    return out;
}

double wiener_norm(const SpectralField& f, const WienerIndex& idx) {
    idx.validate();
    long double sum = std::abs(f[0]);
    for (int n = 1; n <= f.n_modes(); ++n) {
        const long double w = std::pow(1.0L + n, static_cast<long double>(idx.s)) *
                              std::exp(static_cast<long double>(idx.lambda) * n);
        sum += w * (std::abs(f[n]) + std::abs(f[-n]));
    }
    return static_cast<double>(sum);
}

int degree(const SpectralField& f) {
    for (int n = f.n_modes(); n > 0; --n)
        if (f[n] != Complex{} || f[-n] != Complex{}) return n;
    return 0;
}

SpectralField convolve(const SpectralField& f, const SpectralField& g) {
    if (!(f.grid() == g.grid())) throw ShapeError("convolve: fields live on different grids");
    const int df = degree(f), dg = degree(g), top = std::min(df + dg, f.n_modes());
    SpectralField out(f.grid());
    for (int n = 0; n <= top; ++n) {
        Complex acc{};
        for (int m = std::max(-df, n - dg); m <= std::min(df, n + dg); ++m) acc += f[m] * g[n - m];
        out.set(n, n == 0 ? Complex(acc.real()) : acc);
    }
    return out;
}

SpectralField multiply(const SpectralField& f, const SpectralField& g) {
    if (!(f.grid() == g.grid())) throw ShapeError("multiply: fields live on different grids");
    if ((degree(f) + 1) * (degree(g) + 1) <= kDirectProductWork) return convolve(f, g);
    const int m = f.grid().product_size();
    std::vector<double> a = evaluate_on(f, m);
    const std::vector<double> b = evaluate_on(g, m);
    for (std::size_t j = 0; j < a.size(); ++j) a[j] *= b[j];
    SpectralField out = project_from(a, f.grid());
    // Modes above deg f + deg g vanish exactly; drop the transform round-off there.
    for (int n = degree(f) + degree(g) + 1; n <= out.n_modes(); ++n) out.set(n, 0.0);
    return out;
}

SpectralField map_pointwise(const SpectralField& f, const std::function<double(double)>& fn) {
    std::vector<double> v = to_physical(f);
    for (double& x : v) x = fn(x);
    return to_spectral(v, f.grid());
}

SpectralField from_function(const GridSpec& grid, const std::function<double(double)>& fn) {
    std::vector<double> v = grid.nodes();
    for (double& x : v) x = fn(x);
    return to_spectral(v, grid);
}

}  // namespace muskat
