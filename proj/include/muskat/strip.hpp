#pragma once

#include <vector>

#include "muskat/params.hpp"
#include "muskat/spectral.hpp"

namespace muskat {

// Uniform nodes on [-1, 0], both endpoints included; odd count for Simpson.
struct ZGrid {
    int n_z = 33;

    ZGrid() = default;
    explicit ZGrid(int n);

    double dz() const { return 1.0 / (n_z - 1); }
    double node(int j) const { return -1.0 + j * dz(); }
    std::vector<double> nodes() const;

    bool operator==(const ZGrid&) const = default;
};

enum class Exec { Serial, Parallel };

// Fourier in x, sampled in z. Coefficients stored row-major by (n, z-node).
class StripField {
public:
    StripField() : StripField(GridSpec{}, ZGrid{}) {}
    StripField(GridSpec grid, ZGrid zgrid);
    StripField(GridSpec grid, ZGrid zgrid, std::vector<Complex> coeffs);

    static StripField constant_in_z(const SpectralField& f, ZGrid zgrid);
    // f(x) * profile(z_j).
    static StripField separable(const SpectralField& f, const std::vector<double>& profile, ZGrid zgrid);

    const GridSpec& grid() const noexcept { return grid_; }
    const ZGrid& zgrid() const noexcept { return zgrid_; }
    int n_modes() const noexcept { return grid_.n_modes; }
    int n_z() const noexcept { return zgrid_.n_z; }

    Complex operator()(int n, int j) const { return data_[index(n, j)]; }
    // Sets (n, j) and its conjugate partner (-n, j).
    void set(int n, int j, Complex c);
    std::span<const Complex> coeffs() const noexcept { return data_; }

    SpectralField level(int j) const;
    void set_level(int j, const SpectralField& f);
    // z-profile of mode n.
    std::vector<Complex> column(int n) const;

    double asymmetry() const;
    bool same_shape(const StripField& o) const { return grid_ == o.grid_ && zgrid_ == o.zgrid_; }

    StripField& operator+=(const StripField& o);
    StripField& operator-=(const StripField& o);
    StripField& operator*=(double a);

    friend StripField operator+(StripField a, const StripField& b) { return a += b; }
    friend StripField operator-(StripField a, const StripField& b) { return a -= b; }
    friend StripField operator*(double s, StripField a) { return a *= s; }

private:
    std::size_t index(int n, int j) const {
        return static_cast<std::size_t>(n + grid_.n_modes) * static_cast<std::size_t>(zgrid_.n_z) +
               static_cast<std::size_t>(j);
    }
    void check_shape(const StripField& o) const;

    GridSpec grid_;
    ZGrid zgrid_;
    std::vector<Complex> data_;
};

StripField dx(const StripField& f, int k = 1);
// Fourth-order finite differences, one-sided near the boundaries.
StripField dz(const StripField& f);
// Composite Simpson integral over z.
SpectralField vertical_integral(const StripField& f);
// sum_n (1+|n|)^s e^{lambda|n|} int |d_z^k f(n, z)| dz for k in {0, 1}.
double strip_norm(const StripField& f, const WienerIndex& idx, int k = 0);

StripField multiply(const StripField& f, const StripField& g, Exec exec = Exec::Parallel);
StripField multiply(const SpectralField& f, const StripField& g, Exec exec = Exec::Parallel);

struct Gradient {
    StripField x;  // sqrt(mu) d_x
    StripField z;  // d_z
};
Gradient grad_mu(const StripField& phi, double mu);
// ||sqrt(mu) d_x phi|| + ||d_z phi|| in A^{s,0}_lambda.
double grad_norm(const StripField& phi, double mu, const WienerIndex& idx = {});

struct DiffeoCoeffs {
    StripField q11, q12, q21, q22;
    StripField sigma_z, sigma_x;
    // z-derivatives from the closed-form z-dependence.
    StripField dz_q11, dz_q12, dz_q21, dz_q22;
};

DiffeoCoeffs assemble_diffeo(const SpectralField& zeta, double eps, double mu, const ZGrid& zgrid);
// sum over entries of ||d_z q_ij||_{A^{s,0}_lambda}.
double diffeo_norm(const DiffeoCoeffs& q, const WienerIndex& idx);

// Delta^mu phi = div^mu g + f on the strip, phi = h at z = 0, d_z phi = 0 at z = -1.
StripField solve_poisson_strip(const StripField& g1, const StripField& g2, const StripField& f,
                               const SpectralField& h, double mu, Exec exec = Exec::Parallel);

// max over coefficients of |mu d_xx phi + D_zz phi - div^mu g - f|, with second-order
// centered differences in z (one-sided at the ends).
double poisson_residual(const StripField& phi, const StripField& g1, const StripField& g2, const StripField& f,
                        double mu);

enum class RemainderVariant { FirstOrder, Refined, RefinedStable };

struct Sources {
    StripField g1, g2, f;
    SpectralField h;
};

Sources build_sources(const SpectralField& zeta, const RegimeParams& params, RemainderVariant variant,
                      const ZGrid& zgrid = ZGrid{});

struct PicardOptions {
    double tol = 1e-11;
    int max_iter = 50;
    ZGrid zgrid{};
    double lambda = 0.0;
    Exec exec = Exec::Parallel;
};

struct PotentialResult {
    StripField phi;
    int iterations = 0;
    double last_gap = 0.0;
    std::vector<double> gaps;
    bool contraction_ok = true;
};

PotentialResult remainder_potential(const SpectralField& zeta, const RegimeParams& params,
                                    RemainderVariant variant, const PicardOptions& opts = {});
// The flattened potential itself: surface datum eps*(g zeta + kappa/Bo), no subtraction.
PotentialResult full_potential(const SpectralField& zeta, const RegimeParams& params,
                               const PicardOptions& opts = {});
// Shared Picard loop: Delta phi = -div(Q grad phi) + f with the given data.
PotentialResult picard_solve(const SpectralField& zeta, const RegimeParams& params, const StripField& f,
                             const SpectralField& h, const PicardOptions& opts);

// d_x int_{-1}^0 [(1+eps zeta) d_x phi - eps zeta_x (z+1) d_z phi] dz.
SpectralField remainder_flux(const SpectralField& zeta, const StripField& phi, double eps);

}  // namespace muskat
