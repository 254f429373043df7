#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "jc/basis.hpp"
#include "jc/operators.hpp"
#include "jc/params.hpp"
#include "jc/state.hpp"

using namespace jc;

namespace {

const OperatorKind kAllKinds[] = {
    OperatorKind::Annihilate, OperatorKind::Create,     OperatorKind::PhotonNumber,
    OperatorKind::SigmaPlus,  OperatorKind::SigmaMinus, OperatorKind::SigmaZ,
    OperatorKind::Excitation,
};

}  // namespace

TEST_CASE("dimensionless parameters from physical ones") {
    SystemParams resonant;
    resonant.omega_a = resonant.omega_b = 1.0;
    resonant.kappa_a = resonant.kappa_b = 0.1;
    const DimensionlessParams dp = to_dimensionless(resonant);
    CHECK(dp.epsilon_a == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(dp.lambda_a == doctest::Approx(0.1).epsilon(1e-15));

    SystemParams detuned;
    detuned.omega_a = detuned.omega_b = 1.2;
    detuned.kappa_a = detuned.kappa_b = 0.05;
    const DimensionlessParams dd = to_dimensionless(detuned);
    CHECK(dd.epsilon_b == doctest::Approx(0.2).epsilon(1e-14));
    CHECK(dd.lambda_b == doctest::Approx(0.05).epsilon(1e-15));
}

TEST_CASE("unit coupling ratio at unit splitting gives unit coupling") {
    const SystemParams p = params_from_dimensionless(0.0, 1.0, 1.0);
    CHECK(p.kappa_a == 1.0);
    CHECK(p.kappa_b == 1.0);
    CHECK(p.omega_a == 1.0);
}

TEST_CASE("non-positive atomic splitting is rejected") {
    SystemParams p;
    p.e_atom_a = 0.0;
    CHECK_THROWS_AS(to_dimensionless(p), std::invalid_argument);
    p.e_atom_a = -1.0;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
}

TEST_CASE("basis index is a lexicographic bijection") {
    CHECK(basis_index({0, false, 0, false}, 1) == 0);
    CHECK(basis_dim(1) == 16);

    for (int n_max : {1, 3}) {
        for (int idx = 0; idx < basis_dim(n_max); ++idx) {
            const BasisLabel label = basis_label(idx, n_max);
            CHECK(basis_index(label, n_max) == idx);
        }
        // Ground sorts before excited at the same photon numbers.
        CHECK(basis_index({0, false, 0, true}, n_max) == basis_index({0, false, 0, false}, n_max) + 1);
    }

    CHECK_THROWS_AS(basis_index({2, false, 0, false}, 1), std::out_of_range);
    CHECK_THROWS_AS(basis_label(-1, 1), std::out_of_range);
    CHECK_THROWS_AS(basis_label(16, 1), std::out_of_range);
}

TEST_CASE("annihilation acts on its own mode only") {
    const int n_max = 1;
    const MatrixOperator a = build_operator(OperatorKind::Annihilate, Subsystem::A, n_max);
    for (int s = 0; s <= 1; ++s) {
        for (int nb = 0; nb <= 1; ++nb) {
            for (int sb = 0; sb <= 1; ++sb) {
                const BasisLabel from{1, s != 0, nb, sb != 0};
                const BasisLabel to{0, s != 0, nb, sb != 0};
                CHECK(a(basis_index(to, n_max), basis_index(from, n_max)) == Complex{1.0, 0.0});
            }
        }
    }
    // Everything that changes the B labels must vanish.
    for (int r = 0; r < basis_dim(n_max); ++r) {
        for (int c = 0; c < basis_dim(n_max); ++c) {
            const BasisLabel lr = basis_label(r, n_max);
            const BasisLabel lc = basis_label(c, n_max);
            if (lr.n_b != lc.n_b || lr.excited_b != lc.excited_b) {
                CHECK(a(r, c) == Complex{0.0, 0.0});
            }
        }
    }
}

TEST_CASE("excitation operator counts photons plus atomic excitation") {
    const int n_max = 2;
    const MatrixOperator exc = build_operator(OperatorKind::Excitation, Subsystem::A, n_max);
    // Diagonal with eigenvalue n + (1 if excited).
    for (int idx = 0; idx < basis_dim(n_max); ++idx) {
        const BasisLabel label = basis_label(idx, n_max);
        const double expected = double(label.n_a) + (label.excited_a ? 1.0 : 0.0);
        CHECK(exc(idx, idx).real() == doctest::Approx(expected).epsilon(1e-15));
        CHECK(exc(idx, idx).imag() == 0.0);
    }
    CHECK((exc - exc.adjoint()).cwiseAbs().maxCoeff() == 0.0);

    // |0;+>_A x anything is an eigenstate with eigenvalue 1.
    const StateVector s = basis_state({0, true, 1, false}, n_max);
    CHECK((exc * s.amps - s.amps).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("sigma_z flips the sign of ground amplitudes") {
    const int n_max = 1;
    const MatrixOperator sz = build_operator(OperatorKind::SigmaZ, Subsystem::B, n_max);
    const StateVector ground = basis_state({0, false, 1, false}, n_max);
    CHECK((sz * ground.amps + ground.amps).cwiseAbs().maxCoeff() == 0.0);
    const StateVector excited = basis_state({0, false, 1, true}, n_max);
    CHECK((sz * excited.amps - excited.amps).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("operators of different subsystems commute for every kind pair") {
    const int n_max = 2;
    for (OperatorKind ka : kAllKinds) {
        const MatrixOperator opa = build_operator(ka, Subsystem::A, n_max);
        for (OperatorKind kb : kAllKinds) {
            const MatrixOperator opb = build_operator(kb, Subsystem::B, n_max);
            CHECK((opa * opb - opb * opa).cwiseAbs().maxCoeff() < 1e-12);
        }
    }
}

TEST_CASE("ladder operators satisfy the number relation") {
    const int n_max = 4;
    const MatrixOperator a = pair_operator(OperatorKind::Annihilate, n_max);
    const MatrixOperator ad = pair_operator(OperatorKind::Create, n_max);
    CHECK((ad - a.adjoint()).cwiseAbs().maxCoeff() == 0.0);
    const MatrixOperator number = ad * a;
    for (int n = 0; n <= n_max; ++n) {
        CHECK(number(pair_index(n, false, n_max), pair_index(n, false, n_max)).real() ==
              doctest::Approx(double(n)).epsilon(1e-14));
    }
    CHECK((number - pair_operator(OperatorKind::PhotonNumber, n_max)).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("excitation equals N + sigma_z/2 + 1/2") {
    const int n_max = 3;
    const int d = pair_dim(n_max);
    const MatrixOperator combo = pair_operator(OperatorKind::PhotonNumber, n_max) +
                                 0.5 * pair_operator(OperatorKind::SigmaZ, n_max) +
                                 0.5 * MatrixOperator::Identity(d, d);
    CHECK((combo - pair_operator(OperatorKind::Excitation, n_max)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("canonical states are normalized and orthogonal") {
    const int n_max = 2;
    for (int k = 1; k <= 4; ++k) {
        CHECK(phi_state(k, n_max).norm() == doctest::Approx(1.0).epsilon(1e-15));
        for (int l = k + 1; l <= 4; ++l) {
            CHECK(std::abs(overlap(phi_state(k, n_max), phi_state(l, n_max))) == 0.0);
        }
    }
    CHECK(psi_alpha(n_max).norm() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(psi_beta(n_max).norm() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(overlap(psi_alpha(n_max), psi_beta(n_max))) == 0.0);

    const Complex a1 = psi_alpha(n_max).amplitude({0, false, 1, false});
    CHECK(a1.real() == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
}

TEST_CASE("random product states stay normalized") {
    const int n_max = 2;
    std::mt19937 rng(42);
    std::normal_distribution<double> gauss;
    for (int trial = 0; trial < 20; ++trial) {
        Eigen::VectorXcd va(pair_dim(n_max)), vb(pair_dim(n_max));
        for (int i = 0; i < va.size(); ++i) {
            va(i) = Complex{gauss(rng), gauss(rng)};
            vb(i) = Complex{gauss(rng), gauss(rng)};
        }
        va.normalize();
        vb.normalize();
        CHECK(product_state(va, vb, n_max).norm() == doctest::Approx(1.0).epsilon(1e-12));
    }
}
