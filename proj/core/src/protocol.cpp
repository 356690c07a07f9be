#include "photospin/protocol.hpp"

#include <algorithm>
#include <cmath>

#include "photospin/errors.hpp"
#include "photospin/math.hpp"

namespace photospin {

std::string to_string(GhzOutcome o) {
    switch (o) {
        case GhzOutcome::XiPlus: return "xi+";
        case GhzOutcome::XiMinus: return "xi-";
        case GhzOutcome::ChiPlus: return "chi+";
        case GhzOutcome::ChiMinus: return "chi-";
    }
    return "?";
}

Matrix correction_operator(GhzOutcome o) {
    switch (o) {
        case GhzOutcome::XiPlus: return pauli_z();
        case GhzOutcome::XiMinus: return identity2();
        case GhzOutcome::ChiPlus: return pauli_y();
        case GhzOutcome::ChiMinus: return pauli_x();
    }
    throw InvalidParameterError("unknown GHZ outcome");
}

Vector ghz_ket(GhzOutcome o) {
    // Canonical photon order (Frequency, Polarization, Path); index f*4+p*2+q.
    Vector v = Vector::Zero(8);
    const double r = 1.0 / std::sqrt(2.0);
    switch (o) {
        case GhzOutcome::XiPlus:   // (|w_red,H,T> + |w_blue,V,R>)/sqrt(2)
            v(0) = r;
            v(7) = r;
            break;
        case GhzOutcome::XiMinus:
            v(0) = r;
            v(7) = -r;
            break;
        case GhzOutcome::ChiPlus:  // (|w_blue,H,R> + |w_red,V,T>)/sqrt(2)
            v(5) = r;
            v(2) = r;
            break;
        case GhzOutcome::ChiMinus:
            v(5) = r;
            v(2) = -r;
            break;
    }
    return v;
}

std::vector<std::pair<GhzOutcome, QuantumChannel>> ghz_projectors() {
    std::vector<std::pair<GhzOutcome, QuantumChannel>> out;
    for (auto o : {GhzOutcome::XiPlus, GhzOutcome::XiMinus, GhzOutcome::ChiPlus,
                   GhzOutcome::ChiMinus}) {
        out.emplace_back(o, QuantumChannel::projector(
                                {Dof::Frequency, Dof::Polarization, Dof::Path},
                                ket_projector(ghz_ket(o))));
    }
    return out;
}

std::vector<LossStage> published_loss_budget() {
    return {{"photon_extraction", 0.08}, {"detection", 0.20},
            {"fiber_coupling", 0.40},    {"cross_polarization", 0.50},
            {"waveplates_mirrors", 0.36}, {"eom_frequency_selection", 0.30}};
}

double loss_budget(const std::vector<LossStage>& stages) {
    double product = 1.0;
    for (const auto& s : stages) {
        if (!(s.efficiency > 0.0) || s.efficiency > 1.0) {
            throw InvalidEfficiencyError("stage '" + s.name + "' efficiency outside (0, 1]");
        }
        product *= s.efficiency;
    }
    return product;
}

void NoiseModel::validate() const {
    source.validate();
    spin.validate();
    etalon_t.validate();
    etalon_r.validate();
    eom.validate();
    if (meas_delay_ns < 0.0) throw InvalidParameterError("meas_delay_ns negative");
    if (analyzer_error < 0.0 || analyzer_error > 1.0) {
        throw InvalidParameterError("analyzer_error outside [0, 1]");
    }
    if (storage_span_ns < 0.0) throw InvalidParameterError("storage_span_ns negative");
    std::array<bool, 4> seen{};
    for (int d : detector_map) {
        if (d < 1 || d > 4 || seen[d - 1]) {
            throw InvalidParameterError("detector_map must be a permutation of 1-4");
        }
        seen[d - 1] = true;
    }
    loss_budget(loss_stages);
}

NoiseModel NoiseModel::ideal() {
    NoiseModel n;
    n.spin.t2_star_ns = 1e15;
    n.spin.t2_echo_us = 1e15;
    n.etalon_t.center_ghz = -9.0;
    n.etalon_r.center_ghz = 9.0;
    return n;
}

double composite_fidelity(double f_zz, double v_xx, double v_yy) {
    return (f_zz + (v_xx + v_yy) / 2.0) / 2.0;
}

LabeledState ideal_composite_state(const TargetState& target) {
    auto correlated = correlate_dofs(ideal_entangled_pair(), EtalonSpec{-9.0},
                                     EtalonSpec{9.0});
    return encode_target(correlated, target);
}

namespace {

constexpr int kGaussHermiteNodes = 64;

Matrix resource_matrix(const NoiseModel& noise) {
    const auto pair = generate_entangled_pair(noise.source);
    switch (noise.resource) {
        case ResourceKind::Entangled:
            return pair.matrix();
        case ResourceKind::SeparableClassical:
            return dephase_frequency(pair).matrix();
        case ResourceKind::ProductMixed: {
            const auto freq = partial_trace(pair, {Dof::Spin});
            Vector down(2);
            down << 1, 0;
            auto spin_mixed = LabeledState::density(
                {Dof::Spin}, 0.5 * Matrix::Identity(2, 2));
            return tensor(spin_mixed, freq).matrix();
        }
    }
    throw InvalidParameterError("unknown resource kind");
}

PulseSequence storage_sequence(const NoiseModel& noise) {
    if (noise.storage_echo && noise.storage_span_ns > 0.0) {
        return PulseSequence::storage_echo(noise.storage_span_ns);
    }
    PulseSequence s;
    s.total_span_ns = noise.storage_span_ns;
    return s;
}

// Net noise-free unitary of a pulse sequence at zero detuning (nominal
// angles, larmor included); its inverse is the known frame correction the
// readout applies.
Matrix nominal_sequence_unitary(const PulseSequence& seq, const SpinParams& p) {
    Matrix u = identity2();
    double now = 0.0;
    for (const auto& e : seq.events) {
        u = precession(p.larmor_freq_ghz, e.time_ns - now) * u;
        u = rotation(e.axis_x, e.axis_y, e.axis_z, e.angle_rad) * u;
        now = e.time_ns;
    }
    u = precession(p.larmor_freq_ghz, seq.total_span_ns - now) * u;
    return u;
}

// Measurement unitary sending the target spin state to |0> (bit 0 records
// "correct").
Matrix target_measurement_unitary(const TargetState& t) {
    Matrix u(2, 2);
    u << std::conj(t.alpha), std::conj(t.beta), -t.beta, t.alpha;
    return u;
}

struct TransferContext {
    Matrix rho4;                      // resource, labels (Spin, Frequency)
    PulseSequence storage;
    std::array<Matrix, 4> collapse;   // 2x4 per outcome: spin <- (spin x freq)
    std::array<Matrix, 4> effect;     // 4x4 = collapse' * collapse
    Matrix storage_comp;              // 2x2, inverse of the nominal storage map
    Matrix unwind;                    // 2x2, larmor unwind over the readout delay
    Matrix meas;                      // 2x2, target ket -> |0>
    Vector target_ket;
    double efficiency = 1.0;
    double t2_echo_ns = 0.0;
    double sigma_delta = 0.0;
};

TransferContext make_transfer_context(const TargetState& target, const NoiseModel& noise) {
    noise.validate();
    target.validate();

    TransferContext ctx;
    ctx.rho4 = resource_matrix(noise);
    ctx.storage = storage_sequence(noise);
    ctx.storage_comp = nominal_sequence_unitary(ctx.storage, noise.spin).adjoint();
    ctx.unwind = precession(-noise.spin.larmor_freq_ghz, noise.meas_delay_ns);
    ctx.meas = target_measurement_unitary(target);
    ctx.target_ket = target.ket();
    ctx.efficiency = noise.overall_efficiency();
    ctx.t2_echo_ns = noise.spin.t2_echo_ns();
    ctx.sigma_delta = noise.spin.detuning_sigma_ghz();

    const std::vector<Dof> full{Dof::Spin, Dof::Frequency, Dof::Polarization, Dof::Path};

    // Adjoin fresh |H>|T> labels: (s, f) -> (s, f, 0, 0).
    Matrix adjoin = Matrix::Zero(16, 4);
    for (int s = 0; s < 2; ++s) {
        for (int f = 0; f < 2; ++f) {
            adjoin(s * 8 + f * 4, s * 2 + f) = 1.0;
        }
    }

    const Matrix corr = embed_operator(
        correlation_operator(noise.etalon_t, noise.etalon_r,
                             noise.source.zeeman_splitting_ghz),
        {Dof::Frequency, Dof::Polarization, Dof::Path}, full);
    const Matrix flip = embed_operator(r_path_flip_operator(),
                                       {Dof::Polarization, Dof::Path}, full);
    const Matrix prep = embed_operator(polarization_preparation(target),
                                       {Dof::Polarization}, full);
    const Matrix pipeline = prep * flip * corr * adjoin; // 16x4

    for (int k = 0; k < 4; ++k) {
        const Vector g = ghz_ket(static_cast<GhzOutcome>(k));
        Matrix bra = Matrix::Zero(2, 16); // (I_spin x <g|)
        for (int s = 0; s < 2; ++s) {
            for (int ph = 0; ph < 8; ++ph) {
                bra(s, s * 8 + ph) = std::conj(g(ph));
            }
        }
        ctx.collapse[k] = bra * pipeline;
        ctx.effect[k] = ctx.collapse[k].adjoint() * ctx.collapse[k];
    }
    return ctx;
}

inline void apply_t2_damping(Matrix& chi, double time_ns, double t2_ns) {
    const double g = std::exp(-time_ns / t2_ns);
    chi(0, 1) *= g;
    chi(1, 0) *= g;
}

// Spin state per true outcome after storage (at detuning delta) and the
// readout free segment, still unnormalized.
std::array<Matrix, 4> collapsed_states(const TransferContext& ctx, const NoiseModel& noise,
                                       double delta) {
    auto state = LabeledState::density({Dof::Spin, Dof::Frequency}, ctx.rho4);
    state = evolve(state, ctx.storage, noise.spin, delta);
    std::array<Matrix, 4> chi;
    const Matrix free_u =
        precession(noise.spin.larmor_freq_ghz + delta, noise.meas_delay_ns);
    for (int k = 0; k < 4; ++k) {
        chi[k] = ctx.collapse[k] * state.matrix() * ctx.collapse[k].adjoint();
        chi[k] = free_u * chi[k] * free_u.adjoint();
        apply_t2_damping(chi[k], noise.meas_delay_ns, ctx.t2_echo_ns);
    }
    return chi;
}

// Probability that the spin readout records "correct" (bit 0) for a spin
// state chi conditioned on displayed outcome d.
double correct_probability(const TransferContext& ctx, const NoiseModel& noise,
                           const Matrix& chi, int displayed) {
    // Undo in reverse temporal order: readout-delay precession, nominal
    // storage map, then the outcome's Pauli feedback.
    const Matrix corr = correction_operator(static_cast<GhzOutcome>(displayed)) *
                        ctx.storage_comp * ctx.unwind;
    Matrix rho;
    Matrix meas_op;
    if (noise.correction_mode == CorrectionMode::Channel) {
        rho = corr * chi * corr.adjoint();
        meas_op = ctx.meas;
    } else {
        rho = chi;
        meas_op = ctx.meas * corr;
    }
    const Matrix m = meas_op * rho * meas_op.adjoint();
    const double tr = m.trace().real();
    if (tr < 1e-300) return 0.5;
    const double p0 = m(0, 0).real() / tr;
    const double r = noise.spin.readout_fidelity;
    return r * p0 + (1.0 - r) * (1.0 - p0);
}

} // namespace

std::vector<GhzExpansionTerm> ghz_expansion(const TargetState& target) {
    target.validate();
    // Composite pure state in canonical order (Spin, Frequency, Pol, Path).
    Vector phi = Vector::Zero(16);
    const double r = 1.0 / std::sqrt(2.0);
    const Vector pol = target.ket();
    for (int p = 0; p < 2; ++p) {
        phi(0 * 8 + 0 * 4 + p * 2 + 0) = r * pol(p);  // |down, w_red, pol, T>
        phi(1 * 8 + 1 * 4 + p * 2 + 1) = -r * pol(p); // -|up, w_blue, pol, R>
    }

    Vector psi_s(2);
    psi_s << target.alpha, target.beta;

    const Complex im(0.0, 1.0);
    const std::array<Matrix, 4> expected{pauli_z(), identity2(),
                                         Matrix(-im * pauli_y()), Matrix(-pauli_x())};

    std::vector<GhzExpansionTerm> terms;
    for (int k = 0; k < 4; ++k) {
        const auto outcome = static_cast<GhzOutcome>(k);
        const Vector g = ghz_ket(outcome);
        Vector coeff = Vector::Zero(2);
        for (int s = 0; s < 2; ++s) {
            for (int ph = 0; ph < 8; ++ph) {
                coeff(s) += std::conj(g(ph)) * phi(s * 8 + ph);
            }
        }
        const Vector want = 0.5 * (expected[k] * psi_s);
        const Complex ip = (want.adjoint() * coeff)(0, 0);
        const Complex phase = std::abs(ip) > 1e-15 ? ip / std::abs(ip) : Complex(1.0, 0.0);
        GhzExpansionTerm t;
        t.outcome = outcome;
        t.coefficient = coeff;
        t.probability = coeff.squaredNorm();
        t.matched_phase = phase;
        t.residual = (coeff - phase * want).norm();
        const Vector corrected = correction_operator(outcome) * coeff;
        t.corrected_fidelity =
            std::norm((psi_s.adjoint() * corrected)(0, 0)) / corrected.squaredNorm();
        terms.push_back(std::move(t));
    }
    return terms;
}

TransferResult run_transfer(const TargetState& target, const NoiseModel& noise,
                            std::int64_t trials, std::uint64_t seed, Engine engine,
                            std::vector<CoincidenceRecord>* records) {
    if (trials < 1) throw InvalidParameterError("trials must be >= 1");
    const auto ctx = make_transfer_context(target, noise);

    TransferResult result;
    result.target = target;

    if (engine == Engine::Exact) {
        const auto gh = gauss_hermite(kGaussHermiteNodes);
        std::array<Matrix, 4> chi{Matrix::Zero(2, 2), Matrix::Zero(2, 2),
                                  Matrix::Zero(2, 2), Matrix::Zero(2, 2)};
        for (int i = 0; i < kGaussHermiteNodes; ++i) {
            const double delta = ctx.sigma_delta * gh.nodes[i];
            const auto node = collapsed_states(ctx, noise, delta);
            for (int k = 0; k < 4; ++k) chi[k] += gh.weights[i] * node[k];
        }
        const double m = noise.analyzer_error;
        double total_p = 0.0, total_pf = 0.0;
        for (int d = 0; d < 4; ++d) {
            Matrix mixed = Matrix::Zero(2, 2);
            double p_d = 0.0, pf_d = 0.0;
            for (int k = 0; k < 4; ++k) {
                const double pdk = (1.0 - m) * (d == k ? 1.0 : 0.0) + m / 4.0;
                if (pdk <= 0.0) continue;
                const double pk = chi[k].trace().real();
                const double f = correct_probability(ctx, noise, chi[k], d);
                p_d += pdk * pk;
                pf_d += pdk * pk * f;
            }
            const int det = noise.detector_map[d];
            result.per_detector[det - 1] = {p_d > 0 ? pf_d / p_d : 0.0, 0.0};
            result.outcome_probability[det - 1] = p_d;
            total_p += p_d;
            total_pf += pf_d;
        }
        result.fidelity = {total_p > 0 ? total_pf / total_p : 0.0, 0.0};
        result.herald_rate = {ctx.efficiency * total_p, 0.0};
        return result;
    }

    // Bloch axis of the target, for the coincidence records.
    const double nx = 2.0 * (std::conj(target.alpha) * target.beta).real();
    const double ny = 2.0 * (std::conj(target.alpha) * target.beta).imag();
    const double nz = std::norm(target.alpha) - std::norm(target.beta);
    SpinBasis axis = SpinBasis::Z;
    if (std::abs(nx) >= std::abs(ny) && std::abs(nx) >= std::abs(nz)) {
        axis = SpinBasis::X;
    } else if (std::abs(ny) >= std::abs(nz)) {
        axis = SpinBasis::Y;
    }

    Rng rng(seed, 0x7472616e73666572ULL);
    std::array<std::int64_t, 4> heralds{}, correct{};
    std::int64_t heralded_total = 0;
    std::vector<double> probs(4);
    for (std::int64_t t = 0; t < trials; ++t) {
        CoincidenceRecord rec;
        rec.trial_id = t;
        rec.spin_basis = axis;
        const bool lost = ctx.efficiency < 1.0 && !rng.bernoulli(ctx.efficiency);
        if (!lost) {
            const double delta = ctx.sigma_delta * rng.gaussian();
            const auto chi = collapsed_states(ctx, noise, delta);
            double p_click = 0.0;
            for (int k = 0; k < 4; ++k) {
                probs[k] = std::max(0.0, chi[k].trace().real());
                p_click += probs[k];
            }
            const double trace = ctx.rho4.trace().real();
            if (p_click >= trace - 1e-12 || rng.bernoulli(p_click / trace)) {
                const int k = rng.categorical(probs, p_click);
                const int displayed =
                    rng.bernoulli(noise.analyzer_error) ? rng.uniform_int(4) : k;
                const double p_correct =
                    correct_probability(ctx, noise, chi[k], displayed);
                const int det = noise.detector_map[displayed];
                const bool is_correct = rng.bernoulli(p_correct);
                heralds[det - 1] += 1;
                heralded_total += 1;
                if (is_correct) correct[det - 1] += 1;
                rec.heralded = true;
                rec.detector = det;
                rec.spin_bit = is_correct ? 0 : 1;
            }
        }
        if (records) records->push_back(rec);
    }

    std::int64_t correct_total = 0;
    for (int d = 0; d < 4; ++d) {
        result.per_detector[d] = binomial_estimate(correct[d], heralds[d]);
        result.heralds[d] = heralds[d];
        result.correct[d] = correct[d];
        correct_total += correct[d];
    }
    result.fidelity = binomial_estimate(correct_total, heralded_total);
    result.herald_rate = binomial_estimate(heralded_total, trials);
    return result;
}

VerificationResult run_entanglement_verification(const NoiseModel& noise,
                                                 std::int64_t trials, std::uint64_t seed,
                                                 Engine engine) {
    if (trials < 1) throw InvalidParameterError("trials must be >= 1");
    noise.validate();

    const Matrix rho4 = resource_matrix(noise);
    const double sigma = noise.spin.detuning_sigma_ghz();
    const double t2e = noise.spin.t2_echo_ns();
    const double tau = noise.meas_delay_ns;

    const std::array<SpinBasis, 3> bases{SpinBasis::Z, SpinBasis::X, SpinBasis::Y};
    const std::array<FreqBasis, 3> fbases{FreqBasis::Z, FreqBasis::X, FreqBasis::Y};

    // Joint (spin_bit, freq_bit) distribution at fixed detuning.
    auto joint_probs = [&](int b, double delta) {
        auto state = LabeledState::density({Dof::Spin, Dof::Frequency}, rho4);
        state = apply(state, QuantumChannel::unitary(
                                 {Dof::Spin},
                                 precession(noise.spin.larmor_freq_ghz + delta, tau)));
        state = apply(state, phase_damping(tau, t2e));
        // Basis pre-rotation with the configured pulse angle error.
        Matrix rot = spin_basis_rotation(bases[b], noise.spin, tau);
        if (noise.spin.rotation_error != 0.0 && bases[b] != SpinBasis::Z) {
            const double ang = (M_PI / 2.0) * (1.0 + noise.spin.rotation_error);
            rot = (bases[b] == SpinBasis::X ? rotation(0.0, 1.0, 0.0, -ang)
                                            : rotation(1.0, 0.0, 0.0, ang)) *
                  precession(-noise.spin.larmor_freq_ghz, tau);
        }
        state = apply(state, QuantumChannel::unitary({Dof::Spin}, rot));
        const auto [p0, p1] = frequency_basis_projectors(fbases[b]);
        const auto s0 = apply(state, p0);
        const auto s1 = apply(state, p1);
        std::array<std::array<double, 2>, 2> p{};
        auto spin_up = [](const LabeledState& s) {
            return (s.matrix()(2, 2) + s.matrix()(3, 3)).real();
        };
        p[1][0] = spin_up(s0);
        p[0][0] = s0.trace() - p[1][0];
        p[1][1] = spin_up(s1);
        p[0][1] = s1.trace() - p[1][1];
        return p;
    };

    VerificationResult result;

    if (engine == Engine::Exact) {
        const auto gh = gauss_hermite(kGaussHermiteNodes);
        const double r = noise.spin.readout_fidelity;
        std::array<std::array<std::array<double, 2>, 2>, 3> p{};
        for (int b = 0; b < 3; ++b) {
            for (int i = 0; i < kGaussHermiteNodes; ++i) {
                const auto node = joint_probs(b, sigma * gh.nodes[i]);
                for (int sb = 0; sb < 2; ++sb) {
                    for (int fb = 0; fb < 2; ++fb) {
                        p[b][sb][fb] += gh.weights[i] * node[sb][fb];
                    }
                }
            }
            // readout error mixes the recorded spin bit
            for (int fb = 0; fb < 2; ++fb) {
                const double up = p[b][1][fb], down = p[b][0][fb];
                p[b][1][fb] = r * up + (1.0 - r) * down;
                p[b][0][fb] = r * down + (1.0 - r) * up;
            }
        }
        result.probabilities = p;
        const double fzz = p[0][0][0] + p[0][1][1];
        const double vxx = (p[1][0][1] + p[1][1][0]) - (p[1][0][0] + p[1][1][1]);
        const double vyy = (p[2][0][0] + p[2][1][1]) - (p[2][0][1] + p[2][1][0]);
        result.f_zz = {fzz, 0.0};
        result.v_xx = {vxx, 0.0};
        result.v_yy = {vyy, 0.0};
        result.fidelity = {composite_fidelity(fzz, vxx, vyy), 0.0};
        result.success_rate = {noise.overall_efficiency(), 0.0};
        return result;
    }

    Rng rng(seed, 0x76657269667900ULL);
    const double efficiency = noise.overall_efficiency();
    for (std::int64_t t = 0; t < trials; ++t) {
        const int b = static_cast<int>(t % 3);
        if (efficiency < 1.0 && !rng.bernoulli(efficiency)) continue;
        const double delta = sigma * rng.gaussian();
        const auto p = joint_probs(b, delta);
        const double total = p[0][0] + p[0][1] + p[1][0] + p[1][1];
        const double u = rng.uniform() * total;
        int sb = 0, fb = 0;
        double acc = 0.0;
        bool chosen = false;
        for (int i = 0; i < 2 && !chosen; ++i) {
            for (int j = 0; j < 2 && !chosen; ++j) {
                acc += p[i][j];
                if (u < acc) {
                    sb = i;
                    fb = j;
                    chosen = true;
                }
            }
        }
        if (!rng.bernoulli(noise.spin.readout_fidelity)) sb ^= 1;
        result.counts[b][sb][fb] += 1;
        result.trials_per_basis[b] += 1;
    }

    const auto& c = result.counts;
    const std::int64_t nz = result.trials_per_basis[0];
    const std::int64_t nx = result.trials_per_basis[1];
    const std::int64_t ny = result.trials_per_basis[2];
    for (int b = 0; b < 3; ++b) {
        const std::int64_t n = result.trials_per_basis[b];
        if (n <= 0) continue;
        for (int sb = 0; sb < 2; ++sb) {
            for (int fb = 0; fb < 2; ++fb) {
                result.probabilities[b][sb][fb] =
                    static_cast<double>(c[b][sb][fb]) / static_cast<double>(n);
            }
        }
    }
    result.f_zz = binomial_estimate(c[0][0][0] + c[0][1][1], nz);
    const auto vis = [](std::int64_t ideal, std::int64_t n) {
        Estimate e = binomial_estimate(ideal, n);
        return Estimate{2.0 * e.value - 1.0, 2.0 * e.stderr};
    };
    result.v_xx = vis(c[1][0][1] + c[1][1][0], nx);
    result.v_yy = vis(c[2][0][0] + c[2][1][1], ny);
    result.fidelity = {
        composite_fidelity(result.f_zz.value, result.v_xx.value, result.v_yy.value),
        0.5 * std::sqrt(result.f_zz.stderr * result.f_zz.stderr +
                        0.25 * (result.v_xx.stderr * result.v_xx.stderr +
                                result.v_yy.stderr * result.v_yy.stderr))};
    result.success_rate = binomial_estimate(nz + nx + ny, trials);
    return result;
}

BaselineResult classical_baseline(const TargetState& target, std::int64_t trials,
                                  std::uint64_t seed) {
    target.validate();
    if (trials < 1) throw InvalidParameterError("trials must be >= 1");
    Rng rng(seed, 0x626173656c696eULL);

    // Measure the encoded polarization in the fixed {H, V} basis, prepare the
    // corresponding spin pole, verify against the target.
    const double p_v = std::norm(target.beta);
    std::int64_t success = 0;
    for (std::int64_t t = 0; t < trials; ++t) {
        const bool got_v = rng.bernoulli(p_v);
        const double overlap = got_v ? std::norm(target.beta) : std::norm(target.alpha);
        if (rng.bernoulli(overlap)) ++success;
    }

    // Random-guess floor: prepare a Haar-random spin state.
    double guess_sum = 0.0, guess_sq = 0.0;
    for (std::int64_t t = 0; t < trials; ++t) {
        Complex a(rng.gaussian(), rng.gaussian()), b(rng.gaussian(), rng.gaussian());
        const double n = std::sqrt(std::norm(a) + std::norm(b));
        a /= n;
        b /= n;
        const double f = std::norm(std::conj(target.alpha) * a + std::conj(target.beta) * b);
        guess_sum += f;
        guess_sq += f * f;
    }
    const double mean = guess_sum / trials;
    const double var = std::max(0.0, guess_sq / trials - mean * mean);

    BaselineResult r;
    r.success_guarantee = 0.5;
    r.success_probability = binomial_estimate(success, trials);
    r.random_guess_fidelity = {mean, std::sqrt(var / trials)};
    return r;
}

} // namespace photospin
