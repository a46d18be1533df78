#pragma once

// Tensor-power spectra of cubes, eigenvalue counting functions and the
// plunge-region predictions they are compared against.

#include <map>
#include <string>

#include "plunge/spectral1d.hpp"

namespace plunge {

/// Products λ_{n1}···λ_{nd} > floor of the trusted base values, with
/// multiplicity, descending. Spectrum of S_{[0,c]^d,[0,1]^d}.
Spectrum product_spectrum(const Spectrum& base, int d, double floor);

/// Default enumeration floor: max(1e-12, sqrt(base floor)).
double default_product_floor(const Spectrum& base);

/// |{n : λ_n > eps}|; eps must lie above the spectrum's floor.
Eigen::Index count_above(const Spectrum& s, double eps);

struct CountingReport {
    double c = 0.0;
    int d = 1;
    double eps = 0.0;
    Eigen::Index N_eps = 0;          ///< |{λ > ε}|
    Eigen::Index N_one_minus = 0;    ///< |{λ > 1 - ε}|
    Eigen::Index N_half = 0;         ///< |{λ > 1/2}|
    Eigen::Index Lambda_plus = 0;    ///< |{1/2 < λ <= 1 - ε}|
    Eigen::Index Lambda_minus = 0;   ///< |{ε < λ <= 1/2}|
    Eigen::Index Lambda = 0;
    std::map<std::string, double> predictions;
};

/// Counting functions at threshold eps, 0 < eps < 1/2. Fills the Karnik and
/// Slepian predictions (and, for d = 1, the two-cubes envelope terms).
CountingReport plunge_counts(const Spectrum& s, double eps);

/// (2/π²) log(50c + 25) log(5/(ε(1-ε))) + 7
double karnik_bound(double c, double eps);

/// c + (1/π²) log((1-a)/a) log c
double slepian_prediction(double c, double a);

struct SandwichResult {
    bool lower_ok = false;
    bool upper_ok = false;
    Eigen::Index lower = 0;   ///< N_{a^{1/d}}(base)^d
    Eigen::Index middle = 0;  ///< N_a(product)
    Eigen::Index upper = 0;   ///< N_a(base)^d
};

/// N_{a^{1/d}}(base)^d <= N_a(base^{⊗d}) <= N_a(base)^d on the enumerated products.
SandwichResult sandwich_check(const Spectrum& base, int d, double a);

/// Λ^± normalised by c^{d-1} log(1/ε) log(α c / log(1/ε)) and, for tiny ε,
/// Λ^- by (log(1/ε) / log(log(1/ε)/c))^d. Ratios only: the constants
/// involved are existential.
std::map<std::string, double> envelope_report(double c, double eps, int d, const Spectrum& s, double alpha = 4.0);

}  // namespace plunge
