#include "photospin/channel.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "photospin/errors.hpp"

namespace photospin {

namespace {

void check_square_pow2(const Matrix& m, const std::vector<Dof>& targets) {
    const int dim = 1 << targets.size();
    if (m.rows() != dim || m.cols() != dim) {
        throw InvalidChannelError("operator dimension does not match target count");
    }
}

} // namespace

QuantumChannel::QuantumChannel(std::vector<Dof> targets, std::vector<Matrix> kraus,
                               ChannelKind kind)
    : targets_(std::move(targets)), kraus_(std::move(kraus)), kind_(kind) {}

QuantumChannel QuantumChannel::unitary(const std::vector<Dof>& targets, const Matrix& u) {
    auto canon = canonical_labels(targets);
    check_square_pow2(u, canon);
    Matrix cu = reorder_operator(u, targets, canon);
    const double dev = (cu.adjoint() * cu - Matrix::Identity(cu.rows(), cu.cols()))
                           .cwiseAbs()
                           .maxCoeff();
    if (dev > 1e-12) {
        throw InvalidChannelError("operator not unitary, deviation " + std::to_string(dev));
    }
    return QuantumChannel(std::move(canon), {std::move(cu)}, ChannelKind::Unitary);
}

QuantumChannel QuantumChannel::cptp(const std::vector<Dof>& targets,
                                    const std::vector<Matrix>& kraus) {
    if (kraus.empty()) throw InvalidChannelError("empty Kraus set");
    auto canon = canonical_labels(targets);
    std::vector<Matrix> ops;
    ops.reserve(kraus.size());
    Matrix sum = Matrix::Zero(1 << canon.size(), 1 << canon.size());
    for (const auto& k : kraus) {
        check_square_pow2(k, canon);
        ops.push_back(reorder_operator(k, targets, canon));
        sum += ops.back().adjoint() * ops.back();
    }
    const double dev = (sum - Matrix::Identity(sum.rows(), sum.cols())).cwiseAbs().maxCoeff();
    if (dev > 1e-12) {
        throw InvalidChannelError("Kraus set not trace preserving, deviation " +
                                  std::to_string(dev));
    }
    return QuantumChannel(std::move(canon), std::move(ops), ChannelKind::Cptp);
}

QuantumChannel QuantumChannel::projector(const std::vector<Dof>& targets, const Matrix& p) {
    auto canon = canonical_labels(targets);
    check_square_pow2(p, canon);
    Matrix cp = reorder_operator(p, targets, canon);
    const double idem = (cp * cp - cp).cwiseAbs().maxCoeff();
    const double herm = (cp - cp.adjoint()).cwiseAbs().maxCoeff();
    if (idem > 1e-12 || herm > 1e-12) {
        throw InvalidChannelError("operator is not an orthogonal projector");
    }
    return QuantumChannel(std::move(canon), {std::move(cp)}, ChannelKind::Projector);
}

QuantumChannel QuantumChannel::attenuation(const std::vector<Dof>& targets, const Matrix& k) {
    auto canon = canonical_labels(targets);
    check_square_pow2(k, canon);
    Matrix ck = reorder_operator(k, targets, canon);
    Eigen::SelfAdjointEigenSolver<Matrix> es(ck.adjoint() * ck, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().maxCoeff() > 1.0 + 1e-12) {
        throw InvalidChannelError("attenuation operator amplifies trace");
    }
    return QuantumChannel(std::move(canon), {std::move(ck)}, ChannelKind::Attenuation);
}

Matrix embed_operator(const Matrix& op, const std::vector<Dof>& targets,
                      const std::vector<Dof>& state_labels) {
    std::vector<int> slots;
    slots.reserve(targets.size());
    for (Dof t : targets) {
        auto it = std::find(state_labels.begin(), state_labels.end(), t);
        if (it == state_labels.end()) {
            throw UnknownLabelError("channel target " + to_string(t) + " absent from state");
        }
        slots.push_back(static_cast<int>(it - state_labels.begin()));
    }
    const int n = static_cast<int>(state_labels.size());
    const int k = static_cast<int>(targets.size());
    const int dim = 1 << n, sub = 1 << k;

    auto sub_bits = [&](int full) {
        int r = 0;
        for (int t = 0; t < k; ++t) {
            r |= ((full >> (n - 1 - slots[t])) & 1) << (k - 1 - t);
        }
        return r;
    };
    auto env_bits = [&](int full) {
        int e = 0;
        for (int s = 0; s < n; ++s) {
            if (std::find(slots.begin(), slots.end(), s) != slots.end()) continue;
            e = (e << 1) | ((full >> (n - 1 - s)) & 1);
        }
        return e;
    };

    Matrix big = Matrix::Zero(dim, dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            if (env_bits(i) != env_bits(j)) continue;
            const Complex v = op(sub_bits(i), sub_bits(j));
            if (v != Complex(0.0, 0.0)) big(i, j) = v;
        }
    }
    return big;
}

std::vector<Matrix> QuantumChannel::embedded(const std::vector<Dof>& state_labels) const {
    std::vector<Matrix> out;
    out.reserve(kraus_.size());
    for (const auto& k : kraus_) {
        out.push_back(embed_operator(k, targets_, state_labels));
    }
    return out;
}

LabeledState apply(const LabeledState& state, const QuantumChannel& ch) {
    if (ch.targets() == state.labels() && ch.kraus().size() == 1) {
        // fast path: full-space single operator
        const Matrix& k = ch.kraus()[0];
        return LabeledState::density(state.labels(), k * state.matrix() * k.adjoint());
    }
    const auto ops = ch.embedded(state.labels());
    Matrix out = Matrix::Zero(state.dim(), state.dim());
    for (const auto& k : ops) {
        out += k * state.matrix() * k.adjoint();
    }
    return LabeledState::density(state.labels(), out);
}

Matrix identity2() { return Matrix::Identity(2, 2); }

Matrix pauli_x() {
    Matrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

Matrix pauli_y() {
    Matrix m(2, 2);
    m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
    return m;
}

Matrix pauli_z() {
    Matrix m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}

Matrix rotation(double ax, double ay, double az, double angle) {
    const double norm = std::sqrt(ax * ax + ay * ay + az * az);
    if (std::abs(norm - 1.0) > 1e-12) {
        throw InvalidParameterError("rotation axis must be unit length");
    }
    const double c = std::cos(angle / 2.0), s = std::sin(angle / 2.0);
    Matrix m(2, 2);
    m(0, 0) = Complex(c, -s * az);
    m(0, 1) = Complex(-s * ay, -s * ax);
    m(1, 0) = Complex(s * ay, -s * ax);
    m(1, 1) = Complex(c, s * az);
    return m;
}

Matrix ket_projector(const Vector& ket) {
    const double n2 = ket.squaredNorm();
    return (ket * ket.adjoint()) / n2;
}

} // namespace photospin
