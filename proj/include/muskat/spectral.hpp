#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

namespace muskat {

using Complex = std::complex<double>;

// Retained band |n| <= n_modes, physical samples x_j = 2*pi*j/n_phys.
struct GridSpec {
    int n_modes = 64;
    int n_phys = 200;

    // Smallest 2^a 3^b 5^c size strictly above 3*n_modes.
    static GridSpec with_modes(int n_modes);

    void validate() const;
    // Padded length used for products; exact on retained modes.
    int product_size() const;
    std::vector<double> nodes() const;

    bool operator==(const GridSpec&) const = default;
};

struct WienerIndex {
    double s = 0.0;
    double lambda = 0.0;

    void validate() const;
};

class SpectralField {
public:
    SpectralField() : SpectralField(GridSpec{}) {}
    explicit SpectralField(GridSpec grid);
    // coeffs ordered by ascending n in [-n_modes, n_modes].
    SpectralField(GridSpec grid, std::vector<Complex> coeffs);

    // Real trigonometric polynomial sum_k (a_k cos kx + b_k sin kx).
    static SpectralField trig(GridSpec grid, const std::vector<double>& cos_amp,
                              const std::vector<double>& sin_amp = {});

    const GridSpec& grid() const noexcept { return grid_; }
    int n_modes() const noexcept { return grid_.n_modes; }

    Complex operator[](int n) const { return coeffs_[static_cast<std::size_t>(n + grid_.n_modes)]; }
    // Sets mode n and its conjugate partner -n.
    void set(int n, Complex c);
    std::span<const Complex> coeffs() const noexcept { return coeffs_; }

    // max |f(-n) - conj f(n)|, including |Im f(0)|.
    double asymmetry() const;
    bool is_zero() const;

    SpectralField& operator+=(const SpectralField& o);
    SpectralField& operator-=(const SpectralField& o);
    SpectralField& operator*=(double a);

    friend SpectralField operator+(SpectralField a, const SpectralField& b) { return a += b; }
    friend SpectralField operator-(SpectralField a, const SpectralField& b) { return a -= b; }
    friend SpectralField operator*(double s, SpectralField a) { return a *= s; }
    friend SpectralField operator-(SpectralField a) { return a *= -1.0; }

private:
    void check_same_grid(const SpectralField& o) const;

    GridSpec grid_;
    std::vector<Complex> coeffs_;
};

SpectralField to_spectral(std::span<const double> samples, const GridSpec& grid);
std::vector<double> to_physical(const SpectralField& f);

// Samples on an arbitrary uniform grid of m >= 2*n_modes+1 points.
std::vector<double> evaluate_on(const SpectralField& f, int m);
// Truncated coefficients from m uniform samples.
SpectralField project_from(std::span<const double> samples, const GridSpec& grid);

SpectralField derivative(const SpectralField& f, int k);
double wiener_norm(const SpectralField& f, const WienerIndex& idx);
// Largest |n| with a nonzero coefficient; 0 for constants.
int degree(const SpectralField& f);
// Coefficient-space product; round-off stays relative to each output coefficient.
SpectralField convolve(const SpectralField& f, const SpectralField& g);
// Products of narrow fields are convolved directly, wide ones go through the transform.
inline constexpr int kDirectProductWork = 1024;
SpectralField multiply(const SpectralField& f, const SpectralField& g);

// Pointwise map evaluated on the physical grid, then projected back.
SpectralField map_pointwise(const SpectralField& f, const std::function<double(double)>& fn);
SpectralField from_function(const GridSpec& grid, const std::function<double(double)>& fn);

}  // namespace muskat
