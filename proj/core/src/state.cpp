#include "photospin/state.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "photospin/errors.hpp"

namespace photospin {

std::string to_string(Dof d) {
    switch (d) {
        case Dof::Spin: return "Spin";
        case Dof::Frequency: return "Frequency";
        case Dof::Polarization: return "Polarization";
        case Dof::Path: return "Path";
    }
    return "?";
}

std::vector<Dof> canonical_labels(std::vector<Dof> labels) {
    std::sort(labels.begin(), labels.end());
    for (std::size_t i = 1; i < labels.size(); ++i) {
        if (labels[i] == labels[i - 1]) {
            throw DuplicateLabelError("duplicate label " + to_string(labels[i]));
        }
    }
    return labels;
}

bool is_canonical(const std::vector<Dof>& labels) {
    for (std::size_t i = 1; i < labels.size(); ++i) {
        if (!(labels[i - 1] < labels[i])) return false;
    }
    return true;
}

namespace {

// Bit permutation taking an index in `from` slot order to `to` slot order.
// Slot 0 is the most significant bit.
std::vector<int> index_permutation(const std::vector<Dof>& from, const std::vector<Dof>& to) {
    const int k = static_cast<int>(from.size());
    std::vector<int> slot_of(from.size());
    for (int t = 0; t < k; ++t) {
        auto it = std::find(from.begin(), from.end(), to[t]);
        if (it == from.end()) {
            throw LabelMismatchError("label sets differ in reorder");
        }
        slot_of[t] = static_cast<int>(it - from.begin());
    }
    const int dim = 1 << k;
    std::vector<int> perm(dim);
    for (int i = 0; i < dim; ++i) {
        int j = 0;
        for (int t = 0; t < k; ++t) {
            const int bit = (i >> (k - 1 - slot_of[t])) & 1;
            j |= bit << (k - 1 - t);
        }
        perm[i] = j;
    }
    return perm;
}

} // namespace

Matrix reorder_operator(const Matrix& op, const std::vector<Dof>& from,
                        const std::vector<Dof>& to) {
    if (from.size() != to.size()) {
        throw LabelMismatchError("label sets differ in size");
    }
    if (from == to) return op;
    const auto perm = index_permutation(from, to);
    Matrix out(op.rows(), op.cols());
    for (int i = 0; i < op.rows(); ++i) {
        for (int j = 0; j < op.cols(); ++j) {
            out(perm[i], perm[j]) = op(i, j);
        }
    }
    return out;
}

LabeledState::LabeledState(std::vector<Dof> labels, Matrix rho)
    : labels_(std::move(labels)), rho_(std::move(rho)) {}

LabeledState LabeledState::pure(const std::vector<Dof>& labels, const Vector& amplitudes) {
    const auto canon = canonical_labels(labels);
    const int dim = 1 << canon.size();
    if (amplitudes.size() != dim) {
        throw InvalidStateError("amplitude vector has wrong dimension");
    }
    Matrix rho = amplitudes * amplitudes.adjoint();
    rho = reorder_operator(rho, labels, canon);
    return LabeledState(canon, std::move(rho));
}

LabeledState LabeledState::density(const std::vector<Dof>& labels, const Matrix& rho) {
    const auto canon = canonical_labels(labels);
    const int dim = 1 << canon.size();
    if (rho.rows() != dim || rho.cols() != dim) {
        throw InvalidStateError("density matrix has wrong dimension");
    }
    return LabeledState(canon, reorder_operator(rho, labels, canon));
}

bool LabeledState::has_label(Dof d) const {
    return std::find(labels_.begin(), labels_.end(), d) != labels_.end();
}

int LabeledState::label_index(Dof d) const {
    auto it = std::find(labels_.begin(), labels_.end(), d);
    if (it == labels_.end()) {
        throw UnknownLabelError("state has no label " + to_string(d));
    }
    return static_cast<int>(it - labels_.begin());
}

double LabeledState::purity() const {
    const double t = trace();
    if (t <= 0.0) throw InvalidStateError("purity of zero-trace state");
    return ((rho_ * rho_).trace().real()) / (t * t);
}

LabeledState LabeledState::renormalized() const {
    const double t = trace();
    if (t < 1e-14) throw InvalidStateError("cannot renormalize near-zero trace");
    return LabeledState(labels_, rho_ / t);
}

void LabeledState::validate(double hermitian_tol, double psd_tol) const {
    const double herm = (rho_ - rho_.adjoint()).cwiseAbs().maxCoeff();
    if (herm > hermitian_tol) {
        throw InvalidStateError("matrix not Hermitian, deviation " + std::to_string(herm));
    }
    Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (rho_ + rho_.adjoint()),
                                             Eigen::EigenvaluesOnly);
    const double min_eig = es.eigenvalues().minCoeff();
    if (min_eig < -psd_tol) {
        throw InvalidStateError("matrix not positive semidefinite, min eigenvalue " +
                                std::to_string(min_eig));
    }
    const double t = trace();
    if (t <= 0.0 || t > 1.0 + 1e-12) {
        throw InvalidStateError("trace outside (0, 1]: " + std::to_string(t));
    }
}

LabeledState tensor(const LabeledState& a, const LabeledState& b) {
    for (Dof d : b.labels()) {
        if (a.has_label(d)) {
            throw DuplicateLabelError("tensor operands share label " + to_string(d));
        }
    }
    std::vector<Dof> joined = a.labels();
    joined.insert(joined.end(), b.labels().begin(), b.labels().end());

    const int da = a.dim(), db = b.dim();
    Matrix rho(da * db, da * db);
    for (int i = 0; i < da; ++i) {
        for (int j = 0; j < da; ++j) {
            rho.block(i * db, j * db, db, db) = a.matrix()(i, j) * b.matrix();
        }
    }
    return LabeledState::density(joined, rho);
}

LabeledState partial_trace(const LabeledState& state, const std::vector<Dof>& discard) {
    if (discard.empty()) return state;
    for (Dof d : discard) {
        if (!state.has_label(d)) {
            throw UnknownLabelError("cannot trace out absent label " + to_string(d));
        }
    }
    if (discard.size() >= state.labels().size()) {
        throw EmptyRemainderError("partial trace would discard every label");
    }

    std::vector<Dof> kept;
    std::vector<int> kept_slots, gone_slots;
    const auto& labels = state.labels();
    for (int s = 0; s < state.num_labels(); ++s) {
        if (std::find(discard.begin(), discard.end(), labels[s]) == discard.end()) {
            kept.push_back(labels[s]);
            kept_slots.push_back(s);
        } else {
            gone_slots.push_back(s);
        }
    }

    const int n = state.num_labels();
    const int kd = static_cast<int>(kept_slots.size());
    const int gd = static_cast<int>(gone_slots.size());
    const int dim_kept = 1 << kd, dim_gone = 1 << gd;

    auto compose = [&](int kept_bits, int gone_bits) {
        int idx = 0;
        for (int t = 0; t < kd; ++t) {
            idx |= ((kept_bits >> (kd - 1 - t)) & 1) << (n - 1 - kept_slots[t]);
        }
        for (int t = 0; t < gd; ++t) {
            idx |= ((gone_bits >> (gd - 1 - t)) & 1) << (n - 1 - gone_slots[t]);
        }
        return idx;
    };

    Matrix out = Matrix::Zero(dim_kept, dim_kept);
    for (int i = 0; i < dim_kept; ++i) {
        for (int j = 0; j < dim_kept; ++j) {
            Complex acc = 0.0;
            for (int e = 0; e < dim_gone; ++e) {
                acc += state.matrix()(compose(i, e), compose(j, e));
            }
            out(i, j) = acc;
        }
    }
    return LabeledState::density(kept, out);
}

double fidelity(const LabeledState& state, const LabeledState& target) {
    if (state.labels() != target.labels()) {
        throw LabelMismatchError("fidelity between states on different labels");
    }
    if (std::abs(state.trace() - 1.0) > 1e-9 || std::abs(target.trace() - 1.0) > 1e-9) {
        throw InvalidStateError("fidelity requires trace-1 states; renormalize first");
    }
    Eigen::SelfAdjointEigenSolver<Matrix> es(target.matrix());
    const auto& evals = es.eigenvalues();
    int top = 0;
    for (int i = 1; i < evals.size(); ++i) {
        if (evals[i] > evals[top]) top = i;
    }
    for (int i = 0; i < evals.size(); ++i) {
        if (i != top && std::abs(evals[i]) > 1e-10) {
            throw NonPureTargetError("fidelity target is not rank one");
        }
    }
    const Vector ket = es.eigenvectors().col(top);
    return fidelity(state, ket);
}

double fidelity(const LabeledState& state, const Vector& target_ket) {
    if (target_ket.size() != state.dim()) {
        throw LabelMismatchError("target ket dimension mismatch");
    }
    const double f = (target_ket.adjoint() * state.matrix() * target_ket)(0, 0).real();
    return std::clamp(f, 0.0, 1.0);
}

} // namespace photospin
