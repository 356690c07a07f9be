#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "photospin/dof.hpp"

namespace photospin {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Density matrix over an ordered set of named two-level degrees of freedom.
///
/// Labels are kept in canonical order (Spin, Frequency, Polarization, Path);
/// the first label is the most significant qubit of the matrix index.
/// Trace is allowed in (0, 1]: sub-unit trace encodes the heralding
/// probability of a conditioned (post-selected) state. Instances are
/// immutable values; all operations return new states.
class LabeledState {
  public:
    /// Pure state from an amplitude vector given in the order of `labels`.
    /// Labels may be listed in any order; amplitudes are permuted into
    /// canonical order internally.
    static LabeledState pure(const std::vector<Dof>& labels, const Vector& amplitudes);

    /// Density matrix given in the order of `labels` (any order).
    static LabeledState density(const std::vector<Dof>& labels, const Matrix& rho);

    const std::vector<Dof>& labels() const { return labels_; }
    const Matrix& matrix() const { return rho_; }
    int dim() const { return static_cast<int>(rho_.rows()); }
    int num_labels() const { return static_cast<int>(labels_.size()); }
    bool has_label(Dof d) const;
    /// Position of `d` within labels(), throws UnknownLabelError if absent.
    int label_index(Dof d) const;

    double trace() const { return rho_.trace().real(); }
    double purity() const;

    /// Same state scaled to trace one. Throws InvalidStateError on trace ~ 0.
    LabeledState renormalized() const;

    /// Checks Hermiticity (1e-12), positive semidefiniteness (-1e-10) and
    /// trace in (0, 1]. Throws InvalidStateError on violation. Not called on
    /// hot paths; tests and debugging use it.
    void validate(double hermitian_tol = 1e-12, double psd_tol = 1e-10) const;

  private:
    LabeledState(std::vector<Dof> labels, Matrix rho);

    std::vector<Dof> labels_;
    Matrix rho_;
};

/// Tensor product; label sets must be disjoint. Result labels are the
/// canonical-order union, trace multiplies.
LabeledState tensor(const LabeledState& a, const LabeledState& b);

/// Traces out `discard` (a proper, non-empty subset of the state's labels).
LabeledState partial_trace(const LabeledState& state, const std::vector<Dof>& discard);

/// Overlap <target|rho|target> with a pure target on the same labels.
/// Both states must be normalized to trace 1 (callers renormalize heralded
/// states first). Throws LabelMismatchError / NonPureTargetError.
double fidelity(const LabeledState& state, const LabeledState& target);

/// <target|rho|target> against an explicit unit ket in canonical label order.
double fidelity(const LabeledState& state, const Vector& target_ket);

// -- index utilities shared by channel embedding and reordering --

/// Permutes a 2^k-dimensional operator whose qubit slots follow `from` order
/// into `to` order (both must contain the same labels).
Matrix reorder_operator(const Matrix& op, const std::vector<Dof>& from,
                        const std::vector<Dof>& to);

} // namespace photospin
