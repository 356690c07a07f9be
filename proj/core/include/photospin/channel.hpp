#pragma once

#include <vector>

#include "photospin/state.hpp"

namespace photospin {

/// How a channel's Kraus set is validated.
///   Unitary     single operator, U'U = I within 1e-12
///   Cptp        sum K'K = I within 1e-12
///   Projector   single operator, P^2 = P and P' = P within 1e-12
///   Attenuation single operator with K'K <= I (trace non-increasing filter;
///               e.g. an etalon passing the wrong frequency bin with a small
///               leakage amplitude is neither a projector nor trace preserving)
enum class ChannelKind {
    Unitary,
    Cptp,
    Projector,
    Attenuation,
};

/// A quantum operation acting on a named subset of degrees of freedom.
/// Operators are stored with target labels in canonical order (operator
/// matrices passed in another order are permuted on construction).
class QuantumChannel {
  public:
    static QuantumChannel unitary(const std::vector<Dof>& targets, const Matrix& u);
    static QuantumChannel cptp(const std::vector<Dof>& targets,
                               const std::vector<Matrix>& kraus);
    static QuantumChannel projector(const std::vector<Dof>& targets, const Matrix& p);
    static QuantumChannel attenuation(const std::vector<Dof>& targets, const Matrix& k);

    const std::vector<Dof>& targets() const { return targets_; }
    const std::vector<Matrix>& kraus() const { return kraus_; }
    ChannelKind kind() const { return kind_; }

    /// Kraus operators embedded into the full space of `state_labels`.
    std::vector<Matrix> embedded(const std::vector<Dof>& state_labels) const;

  private:
    QuantumChannel(std::vector<Dof> targets, std::vector<Matrix> kraus, ChannelKind kind);

    std::vector<Dof> targets_;
    std::vector<Matrix> kraus_;
    ChannelKind kind_;
};

/// Applies the channel on the embedded subspace: rho -> sum K rho K'.
LabeledState apply(const LabeledState& state, const QuantumChannel& ch);

/// Embeds an operator on `targets` (canonical order) into the space of
/// `state_labels`, acting as identity elsewhere.
Matrix embed_operator(const Matrix& op, const std::vector<Dof>& targets,
                      const std::vector<Dof>& state_labels);

// -- common single-qubit operators --

Matrix identity2();
Matrix pauli_x();
Matrix pauli_y();
Matrix pauli_z();

/// exp(-i angle/2 * axis.sigma); axis must be unit length within 1e-12.
Matrix rotation(double axis_x, double axis_y, double axis_z, double angle);

/// Rank-1 projector |ket><ket| (ket need not be normalized).
Matrix ket_projector(const Vector& ket);

} // namespace photospin
