#pragma once

namespace qsmear {

/// Fundamental constants in CGS units (cm, g, s, erg) plus the number of
/// spatial dimensions d. G and Lambda are the d-dimensional Newton and
/// cosmological constants; the defaults are the observed d=3 values.
struct PhysicalConstants {
    double hbar = 1.054571817e-27;  ///< erg s
    double c = 2.99792458e10;       ///< cm / s
    double G = 6.674e-8;            ///< cm^3 g^-1 s^-2 (d = 3)
    double Lambda = 1.1e-56;        ///< cm^-2 (d = 3)
    int d = 3;                      ///< spatial dimensions

    /// Natural-unit constants (hbar = c = G = 1) with a chosen Lambda.
    static PhysicalConstants natural(double lambda = 3.0, int dim = 3) {
        return PhysicalConstants{1.0, 1.0, 1.0, lambda, dim};
    }

    /// Throws DomainError unless all constants are positive and d >= 2
    /// (d = 1 makes the 1/(d-1) exponents degenerate).
    void validate() const;
};

/// Dimensionless working parameters for lattice simulations: the two Fourier
/// scales hbar (matter) and beta (geometry) and the position-space kernel
/// width sigma_g. A Gaussian kernel transformed at scale beta has momentum
/// width beta/(2 sigma_g), which saturates the kernel uncertainty product
/// sigma_g * sigma_g_tilde = beta/2.
struct SmearParams {
    double hbar = 1.0;
    double beta = 0.1;
    double sigma_g = 0.5;

    double sigma_g_tilde() const { return beta / (2.0 * sigma_g); }

    /// The constant appearing in the modified commutator and Schrodinger
    /// equation: hbar + beta.
    double effective_hbar() const { return hbar + beta; }

    void validate() const;
};

}  // namespace qsmear
