#include "ellcon/monodromy.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cstdio>
#include <cmath>
#include <numbers>
#include <random>

#include "ellcon/sampling.hpp"

namespace ellcon::mono {

double tau_nu(double nu) { return 2 * std::cos(2 * std::numbers::pi * nu); }

double max_abs(const Mat2& m) { return m.cwiseAbs().maxCoeff(); }

Mat2 anti(cd a) {
    Mat2 m;
    m << 0, a, -1.0 / a, 0;
    return m;
}

namespace {

double det_err(const Mat2& m) { return std::abs(m.determinant() - 1.0); }

}  // namespace

double p1_defect(const RepP1& r, double nu) {
    double d = max_abs(r.M0 * r.M1 * r.Mt * r.Ml * r.Minf - Mat2::Identity());
    for (const Mat2* m : {&r.M0, &r.M1, &r.Ml, &r.Minf}) {
        d = std::max(d, std::abs(m->trace()));
        d = std::max(d, det_err(*m));
    }
    d = std::max(d, det_err(r.Mt));
    d = std::max(d, std::abs(r.Mt.trace() - tau_nu(nu)));
    return d;
}

double c_defect(const RepC& r, double nu) {
    double d = max_abs(r.A * r.B - r.C1 * r.B * r.A * r.C2);
    for (const Mat2* m : {&r.A, &r.B, &r.C1, &r.C2}) d = std::max(d, det_err(*m));
    d = std::max(d, std::abs(r.C1.trace() - tau_nu(nu)));
    d = std::max(d, std::abs(r.C2.trace() - tau_nu(nu)));
    return d;
}

RepC phi_top(const RepP1& r, double nu, double tol) {
    double d = p1_defect(r, nu);
    if (!(d <= tol)) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3e", d);
        throw InvalidRep(std::string("phi_top: input violates the P1 relations (defect ") + buf + ")");
    }
    return {r.M1 * r.Mt * r.Ml, r.Ml * r.Minf, r.Mt, r.Minf * r.Mt * r.Minf.inverse()};
}

RepP1 psi_top(const RepP1& r) { return {-r.M0, -r.M1, r.Mt, -r.Ml, -r.Minf}; }

namespace {

// columns: X -> P X - X Q applied to the basis E00, E01, E10, E11; rows stacked row-major
void stack(Eigen::MatrixXcd& S, int row0, const Mat2& P, const Mat2& Q) {
    for (int k = 0; k < 4; ++k) {
        Mat2 E = Mat2::Zero();
        E(k / 2, k % 2) = 1;
        Mat2 Y = P * E - E * Q;
        for (int i = 0; i < 4; ++i) S(row0 + i, k) = Y(i / 2, i % 2);
    }
}

Mat2 from_vec(const Eigen::VectorXcd& v) {
    Mat2 m;
    m << v(0), v(1), v(2), v(3);
    return m;
}

Mat2 normalize(Mat2 m) {
    cd d = m.determinant();
    m /= std::sqrt(d);
    // sign: largest entry gets positive real part (imaginary part on ties)
    Eigen::Index bi = 0;
    for (Eigen::Index i = 1; i < 4; ++i)
        if (std::abs(m(i / 2, i % 2)) > std::abs(m(bi / 2, bi % 2)) + 1e-14) bi = i;
    cd e = m(bi / 2, bi % 2);
    if (e.real() < -1e-14 || (std::abs(e.real()) <= 1e-14 && e.imag() < 0)) m = -m;
    return m;
}

}  // namespace

Descent descend(const RepC& rho, const Tolerances& tol) {
    Eigen::MatrixXcd S(12, 4);
    stack(S, 0, rho.A, rho.A.inverse());
    stack(S, 4, rho.B, rho.B.inverse());
    stack(S, 8, rho.C1, rho.C2);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(S, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    double scale = std::max(1.0, sv(0));
    Descent out;
    Mat2 M;
    if (sv(2) > tol.reducible * scale) {
        M = from_vec(svd.matrixV().col(3));
    } else {
        double comm = max_abs(rho.A * rho.B - rho.B * rho.A);
        if (comm > tol.reducible * scale || sv(1) <= tol.reducible * scale)
            throw ReducibleRep("no descent: reducible");
        // diagonal case: any invertible element of the solution plane works up to conjugation
        out.commuting = true;
        Mat2 X = from_vec(svd.matrixV().col(2)), Y = from_vec(svd.matrixV().col(3));
        M = X + Y;
        if (std::abs(M.determinant()) < 1e-6) M = X + cd(0, 1) * Y;
        if (std::abs(M.determinant()) < 1e-6) M = X - Y;
    }
    if (std::abs(M.determinant()) < 1e-12) throw NumericalFailure("descend: solution matrix is singular");
    M = normalize(M);
    out.m2_residual = max_abs(M * M + Mat2::Identity());
    if (!(out.m2_residual <= tol.residual)) throw NumericalFailure("descend: M^2 != -I");
    out.M = M;
    out.rep = {-rho.A * M, rho.A * rho.B * rho.C2.inverse() * M, rho.C1, -rho.B * M, M};
    return out;
}

Mat2 random_sl2(std::uint64_t seed, std::uint64_t trial) {
    auto g = trial_rng(seed, trial);
    std::normal_distribution<double> n(0, 1);
    for (;;) {
        Mat2 m;
        for (int i = 0; i < 4; ++i) m(i / 2, i % 2) = cd(n(g), n(g));
        cd d = m.determinant();
        if (std::abs(d) < 0.1) continue;
        return m / std::sqrt(d);
    }
}

RepC random_rep_c(std::uint64_t seed, double nu) {
    const double tau = tau_nu(nu);
    auto g = trial_rng(seed, 0x7e9c);
    std::normal_distribution<double> n(0, 1);
    for (std::uint64_t k = 0;; ++k) {
        Mat2 A = random_sl2(seed, 2 * k), B = random_sl2(seed, 2 * k + 1);
        Mat2 K = A * B * (B * A).inverse();
        // C1 = [[p, q], [r, s]]: p + s = tau, s K00 - q K10 - r K01 + p K11 = tau, p s - q r = 1
        if (std::abs(K(0, 1)) < 0.1) continue;
        cd q(n(g), n(g));
        // r = (a p + b) / K01 with a = K11 - K00, b = tau K00 - tau - q K10
        cd a = K(1, 1) - K(0, 0), b = tau * K(0, 0) - tau - q * K(1, 0);
        // p (tau - p) - q (a p + b) / K01 = 1
        cd qa = -1.0, qb = tau - q * a / K(0, 1), qc = -q * b / K(0, 1) - 1.0;
        cd disc = std::sqrt(qb * qb - 4.0 * qa * qc);
        cd p = (-qb + disc) / (2.0 * qa);
        cd s = tau - p, r = (a * p + b) / K(0, 1);
        Mat2 C1;
        C1 << p, q, r, s;
        if (max_abs(C1) > 30) continue;
        Mat2 C2 = (B * A).inverse() * C1.inverse() * A * B;
        if (max_abs(C2) > 30) continue;
        RepC rho{A, B, C1, C2};
        if (c_defect(rho, nu) > 1e-11) continue;
        return rho;
    }
}

RepP1 random_rep_p1(std::uint64_t seed, double nu) { return descend(random_rep_c(seed, nu)).rep; }

std::vector<cd> trace_coords(const RepC& r) {
    Mat2 comm = r.A * r.B * r.A.inverse() * r.B.inverse();
    return {r.A.trace(),
            r.B.trace(),
            r.C1.trace(),
            r.C2.trace(),
            (r.A * r.B).trace(),
            (r.A * r.C1).trace(),
            (r.B * r.C1).trace(),
            (r.A * r.B * r.C1).trace(),
            comm.trace()};
}

std::vector<cd> p1_fingerprint(const RepP1& r) {
    return {(r.M0 * r.M1).trace(), (r.M0 * r.Ml).trace(), (r.M1 * r.Ml).trace(),      (r.M0 * r.Mt).trace(),
            (r.M1 * r.Mt).trace(), (r.Ml * r.Mt).trace(), (r.M0 * r.M1 * r.Mt).trace()};
}

double distance(const std::vector<cd>& a, const std::vector<cd>& b) {
    double d = 0;
    for (size_t i = 0; i < std::min(a.size(), b.size()); ++i)
        d = std::max(d, std::abs(a[i] - b[i]) / std::max({1.0, std::abs(a[i]), std::abs(b[i])}));
    return d;
}

RepC conjugate(const RepC& r, const Mat2& g) {
    Mat2 gi = g.inverse();
    return {gi * r.A * g, gi * r.B * g, gi * r.C1 * g, gi * r.C2 * g};
}

namespace {
cd a_t(double nu) { return std::polar(1.0, 2 * std::numbers::pi * nu); }
Mat2 diag(cd a, cd b) {
    Mat2 m;
    m << a, 0, 0, b;
    return m;
}
}  // namespace

RepP1 dihedral_rep(cd a0, cd al, double nu) {
    cd at = a_t(nu);
    return {anti(a0), anti(a0 * at * al), diag(at, 1.0 / at), anti(al), anti(1.0)};
}

RepC dihedral_expected(cd a0, cd al, double nu) {
    cd at = a_t(nu);
    return {diag(-a0, -1.0 / a0), diag(al, 1.0 / al), diag(at, 1.0 / at), diag(1.0 / at, at)};
}

RepC dihedral_expected_corrected(cd a0, cd al, double nu) {
    RepC r = dihedral_expected(a0, al, nu);
    r.B = -r.B;
    return r;
}

double rep_distance(const RepC& a, const RepC& b) {
    return std::max({max_abs(a.A - b.A), max_abs(a.B - b.B), max_abs(a.C1 - b.C1), max_abs(a.C2 - b.C2)});
}

}  // namespace ellcon::mono
