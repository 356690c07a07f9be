#include <doctest.h>

#include "helpers.hpp"
#include "photospin/errors.hpp"
#include "photospin/protocol.hpp"
#include "photospin/source.hpp"
#include "photospin/state.hpp"

using namespace photospin;
using testutil::from_ref;
using testutil::max_abs_diff;
using testutil::to_ref;
using testutil::to_ref_vec;

namespace {

LabeledState spin_down() {
    Vector v(2);
    v << 1, 0;
    return LabeledState::pure({Dof::Spin}, v);
}

LabeledState pol_h() {
    Vector v(2);
    v << 1, 0;
    return LabeledState::pure({Dof::Polarization}, v);
}

} // namespace

TEST_CASE("tensor of basis states puts the single entry at (0,0)") {
    const auto t = tensor(spin_down(), pol_h());
    CHECK(t.dim() == 4);
    CHECK(std::abs(t.matrix()(0, 0) - Complex(1, 0)) < 1e-15);
    CHECK(t.matrix().cwiseAbs().sum() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("tensor trace is multiplicative for sub-unit traces") {
    const auto a = LabeledState::density({Dof::Spin}, 0.5 * Matrix::Identity(2, 2) * 0.5);
    const auto b = LabeledState::density({Dof::Path}, 0.8 * Matrix::Identity(2, 2) * 0.5);
    CHECK(a.trace() == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(b.trace() == doctest::Approx(0.8).epsilon(1e-14));
    CHECK(tensor(a, b).trace() == doctest::Approx(0.4).epsilon(1e-12));
}

TEST_CASE("tensor produces the composite pure state from the resource") {
    // |psi_p> x (entangled spin/frequency/path part), a rank-1 16-dim state
    const auto phi = ideal_composite_state(TargetState::d_plus());
    CHECK(phi.dim() == 16);
    CHECK(phi.trace() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(phi.purity() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("tensor rejects duplicate labels") {
    CHECK_THROWS_AS(tensor(spin_down(), spin_down()), DuplicateLabelError);
}

TEST_CASE("labels canonicalize regardless of construction order") {
    Vector amp(4);
    amp << 0.5, 0.5, 0.5, 0.5;
    const auto a = LabeledState::pure({Dof::Frequency, Dof::Spin}, amp);
    CHECK(a.labels() == std::vector<Dof>{Dof::Spin, Dof::Frequency});

    // A state asymmetric in the two labels: |0>_f x |+>_s given in
    // (Frequency, Spin) order must equal |+>_s x |0>_f in canonical order.
    Vector asym(4);
    const double r = 1.0 / std::sqrt(2.0);
    asym << r, r, 0, 0; // (f=0,s=0), (f=0,s=1)
    const auto b = LabeledState::pure({Dof::Frequency, Dof::Spin}, asym);
    Vector expect(4);
    expect << r, 0, r, 0; // (s=0,f=0), (s=1,f=0)
    CHECK((b.matrix() - expect * expect.adjoint()).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("partial trace of a product state returns the factor") {
    const auto joint = tensor(pol_h(), generate_entangled_pair(SourceParams{}));
    const auto reduced = partial_trace(joint, {Dof::Polarization});
    const auto pair = generate_entangled_pair(SourceParams{});
    CHECK(max_abs_diff(reduced.matrix(), pair.matrix()) < 1e-14);
}

TEST_CASE("photon marginal of the ideal pair is maximally mixed") {
    const auto pair = ideal_entangled_pair();
    const auto spin = partial_trace(pair, {Dof::Frequency});
    CHECK(max_abs_diff(spin.matrix(), 0.5 * Matrix::Identity(2, 2)) < 1e-14);
    CHECK(spin.trace() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("partial trace rejects bad label sets") {
    const auto pair = ideal_entangled_pair();
    CHECK_THROWS_AS(partial_trace(pair, {Dof::Path}), UnknownLabelError);
    CHECK_THROWS_AS(partial_trace(pair, {Dof::Spin, Dof::Frequency}), EmptyRemainderError);
}

TEST_CASE("fidelity basics") {
    const auto down = spin_down();
    Vector up(2);
    up << 0, 1;
    const auto up_state = LabeledState::pure({Dof::Spin}, up);

    CHECK(fidelity(down, down) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(fidelity(down, up_state) == doctest::Approx(0.0).epsilon(1e-14));

    const auto mixed = LabeledState::density({Dof::Spin}, 0.5 * Matrix::Identity(2, 2));
    CHECK(fidelity(mixed, down) == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("fidelity validates inputs") {
    const auto down = spin_down();
    const auto mixed = LabeledState::density({Dof::Spin}, 0.5 * Matrix::Identity(2, 2));
    CHECK_THROWS_AS(fidelity(down, pol_h()), LabelMismatchError);
    CHECK_THROWS_AS(fidelity(down, mixed), NonPureTargetError);
    const auto heralded = LabeledState::density({Dof::Spin}, 0.25 * Matrix::Identity(2, 2));
    CHECK_THROWS_AS(fidelity(heralded, down), InvalidStateError);
}

TEST_CASE("validate flags broken matrices") {
    Matrix bad(2, 2);
    bad << 1.0, Complex(0, 0.5), Complex(0, 0.5), 0.0; // not Hermitian
    CHECK_THROWS_AS(LabeledState::density({Dof::Spin}, bad).validate(), InvalidStateError);

    Matrix neg(2, 2);
    neg << 0.6, 0.59, 0.59, 0.4; // Hermitian but indefinite
    CHECK_THROWS_AS(LabeledState::density({Dof::Spin}, neg).validate(), InvalidStateError);
}

TEST_CASE("brute-force equivalence: tensor and partial trace on random states") {
    for (int rep = 0; rep < 20; ++rep) {
        const auto ra = testutil::random_density(4);
        const auto rb = testutil::random_density(2);
        const auto a = LabeledState::density({Dof::Spin, Dof::Frequency}, ra);
        const auto b = LabeledState::density({Dof::Path}, rb);

        const auto joint = tensor(a, b);
        const auto naive = refimpl::naive_tensor(to_ref(ra), 4, to_ref(rb), 2);
        CHECK(max_abs_diff(joint.matrix(), from_ref(naive, 8)) < 1e-12);
        joint.validate();

        // discard Frequency (slot 1 of Spin,Frequency,Path)
        const auto reduced = partial_trace(joint, {Dof::Frequency});
        const auto nref = refimpl::naive_partial_trace(naive, 3, {1});
        CHECK(max_abs_diff(reduced.matrix(), from_ref(nref, 4)) < 1e-12);
        CHECK(reduced.trace() == doctest::Approx(joint.trace()).epsilon(1e-12));

        // fidelity against a random pure target
        const auto ket = testutil::random_ket(4);
        const auto target = LabeledState::pure({Dof::Spin, Dof::Path}, ket);
        const double f = fidelity(reduced.renormalized(), target);
        const auto rnorm = reduced.renormalized();
        CHECK(f == doctest::Approx(refimpl::naive_fidelity(to_ref(rnorm.matrix()),
                                                           to_ref_vec(ket)))
                       .epsilon(1e-12));
    }
}

TEST_CASE("operations preserve state invariants on random inputs") {
    for (int rep = 0; rep < 25; ++rep) {
        const auto rho = testutil::random_density(8);
        const auto s = LabeledState::density({Dof::Spin, Dof::Frequency, Dof::Path}, rho);
        s.validate();
        partial_trace(s, {Dof::Spin}).validate();
        partial_trace(s, {Dof::Frequency, Dof::Path}).validate();
        const auto u = testutil::random_unitary(4);
        apply(s, QuantumChannel::unitary({Dof::Spin, Dof::Path}, u)).validate();
    }
}
