// Core quantum objects: states, Hermitian operators, POVMs, and the
// measurement -> ensemble conversion used throughout the library.
#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace mubinfo {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;

// Default tolerances for structural checks. Looser PSD tolerance absorbs
// eigensolver noise on randomly sampled rank-one constructions.
constexpr double kNormTol = 1e-10;
constexpr double kHermTol = 1e-10;
constexpr double kPsdTol = 1e-9;
constexpr double kZeroTraceTol = 1e-12;

inline bool is_unit_vector(const Vector& v, double tol = kNormTol) {
    return std::abs(v.norm() - 1.0) <= tol;
}

inline bool is_hermitian(const Matrix& a, double tol = kHermTol) {
    if (a.rows() != a.cols()) return false;
    return (a - a.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

// Smallest eigenvalue of a Hermitian matrix.
inline double min_eigenvalue(const Matrix& a) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(a, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

// Second-largest eigenvalue; <= tol means the operator is (numerically) rank one.
inline double second_eigenvalue(const Matrix& a) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(a, Eigen::EigenvaluesOnly);
    const auto& ev = es.eigenvalues();
    return ev.size() >= 2 ? ev(ev.size() - 2) : 0.0;
}

// Bob's generalized measurement {M_s}: D positive operators summing to identity.
struct Povm {
    int dim = 0;
    std::vector<Matrix> elements;

    int outcomes() const { return static_cast<int>(elements.size()); }
};

struct ValidationReport {
    double max_psd_deficit = 0.0;      // max over s of max(0, -lambda_min(M_s))
    double max_completeness_dev = 0.0; // entrywise max |sum_s M_s - I|
    bool pass = false;
};

// Checks M_s >= 0 and sum_s M_s = I against `tol`. Throws on structural
// problems (empty list, dimension mismatch); numeric deviations are reported,
// not thrown.
inline ValidationReport validate_povm(const Povm& povm, double tol = kPsdTol) {
    if (povm.elements.empty())
        throw std::invalid_argument("validate_povm: POVM has no elements");
    if (povm.dim < 1)
        throw std::invalid_argument("validate_povm: dimension must be positive");

    ValidationReport report;
    Matrix sum = Matrix::Zero(povm.dim, povm.dim);
    for (const Matrix& m : povm.elements) {
        if (m.rows() != povm.dim || m.cols() != povm.dim)
            throw std::invalid_argument("validate_povm: element dimension mismatch");
        report.max_psd_deficit =
            std::max(report.max_psd_deficit, std::max(0.0, -min_eigenvalue(m)));
        sum += m;
    }
    sum -= Matrix::Identity(povm.dim, povm.dim);
    report.max_completeness_dev = sum.cwiseAbs().maxCoeff();
    report.pass = report.max_psd_deficit <= tol && report.max_completeness_dev <= tol;
    return report;
}

// The "reverted protocol" ensemble: rho_s = M_s / tr M_s prepared with
// probability p(s) = tr(M_s) / d. Outcomes with tr(M_s) <= kZeroTraceTol keep
// their slot (stable indexing) but carry weight 0 and a zero state; they are
// listed in `zero_trace`.
struct Ensemble {
    std::vector<Matrix> states;
    std::vector<double> weights;
    std::vector<int> zero_trace;
};

inline Ensemble revert_protocol(const Povm& povm) {
    ValidationReport v = validate_povm(povm, kPsdTol);
    if (!v.pass)
        throw std::invalid_argument(
            "revert_protocol: input fails POVM validation (psd deficit " +
            std::to_string(v.max_psd_deficit) + ", completeness dev " +
            std::to_string(v.max_completeness_dev) + ")");

    Ensemble ens;
    ens.states.reserve(povm.elements.size());
    ens.weights.reserve(povm.elements.size());
    int nonzero = 0;
    for (int s = 0; s < povm.outcomes(); ++s) {
        const double tr = povm.elements[s].trace().real();
        if (tr <= kZeroTraceTol) {
            ens.states.push_back(Matrix::Zero(povm.dim, povm.dim));
            ens.weights.push_back(0.0);
            ens.zero_trace.push_back(s);
            continue;
        }
        ens.states.push_back(povm.elements[s] / tr);
        ens.weights.push_back(tr / povm.dim);
        ++nonzero;
    }
    if (nonzero == 0)
        throw std::invalid_argument("revert_protocol: all POVM elements have zero trace");
    return ens;
}

// Rank-one projectors |i><i| onto the columns of `basis_columns`.
// The columns must be orthonormal within `tol`.
inline Povm projector_povm_from_columns(const Matrix& basis_columns, double tol = kNormTol) {
    const int d = static_cast<int>(basis_columns.rows());
    if (basis_columns.cols() != d)
        throw std::invalid_argument("projector_povm: basis matrix must be square");
    const double dev =
        (basis_columns.adjoint() * basis_columns - Matrix::Identity(d, d)).cwiseAbs().maxCoeff();
    if (dev > tol)
        throw std::invalid_argument("projector_povm: basis not orthonormal (deviation " +
                                    std::to_string(dev) + ")");
    Povm povm;
    povm.dim = d;
    povm.elements.reserve(d);
    for (int i = 0; i < d; ++i)
        povm.elements.push_back(basis_columns.col(i) * basis_columns.col(i).adjoint());
    return povm;
}

// Merge two outcomes into one (classical coarse graining M_a + M_b).
inline Povm coarse_grain(const Povm& povm, int a, int b) {
    if (a == b || a < 0 || b < 0 || a >= povm.outcomes() || b >= povm.outcomes())
        throw std::invalid_argument("coarse_grain: bad outcome indices");
    Povm out;
    out.dim = povm.dim;
    for (int s = 0; s < povm.outcomes(); ++s) {
        if (s == b) continue;
        out.elements.push_back(s == a ? Matrix(povm.elements[a] + povm.elements[b])
                                      : povm.elements[s]);
    }
    return out;
}

}  // namespace mubinfo
