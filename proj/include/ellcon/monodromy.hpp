#pragma once
#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace ellcon::mono {

using cd = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;

struct RepP1 {
    Mat2 M0, M1, Mt, Ml, Minf;
};

struct RepC {
    Mat2 A, B, C1, C2;
};

struct Tolerances {
    double residual = 1e-10;
    double round_trip = 1e-9;
    double reducible = 1e-8;  // second smallest singular value
};

struct InvalidRep : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ReducibleRep : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NumericalFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

double tau_nu(double nu);
double max_abs(const Mat2& m);
Mat2 anti(cd a);  // [[0, a], [-1/a, 0]]

// largest violation of the defining invariants
double p1_defect(const RepP1& r, double nu);
double c_defect(const RepC& r, double nu);

RepC phi_top(const RepP1& r, double nu, double tol = 1e-9);
RepP1 psi_top(const RepP1& r);

struct Descent {
    RepP1 rep;
    Mat2 M;
    double m2_residual = 0;
    bool commuting = false;  // A, B commute: M picked inside a 2-dim solution space
};
Descent descend(const RepC& rho, const Tolerances& tol = {});

RepC random_rep_c(std::uint64_t seed, double nu);
RepP1 random_rep_p1(std::uint64_t seed, double nu);

// tr of A, B, C1, C2, AB, AC1, BC1, ABC1, [A,B]
std::vector<cd> trace_coords(const RepC& r);
// tr of M0M1, M0Ml, M1Ml, M0Mt, M1Mt, MlMt, M0M1Mt; the last four change sign under psi_top
std::vector<cd> p1_fingerprint(const RepP1& r);
// max over coordinates of |a-b| / max(1, |a|, |b|)
double distance(const std::vector<cd>& a, const std::vector<cd>& b);

RepC conjugate(const RepC& r, const Mat2& g);
Mat2 random_sl2(std::uint64_t seed, std::uint64_t trial);

// a_inf = 1, a_t = exp(2 pi i nu), a_1 = a_0 a_t a_l
RepP1 dihedral_rep(cd a0, cd al, double nu);
// (diag(-a0,-1/a0), diag(al,1/al), diag(at,1/at), diag(1/at,at))
RepC dihedral_expected(cd a0, cd al, double nu);
// same with B = diag(-al, -1/al)
RepC dihedral_expected_corrected(cd a0, cd al, double nu);
double rep_distance(const RepC& a, const RepC& b);

}  // namespace ellcon::mono
