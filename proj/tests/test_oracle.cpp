#include <doctest.h>

#include <cmath>

#include "testutil.hpp"
#include "uec/oracle.hpp"

using namespace uec;

TEST_CASE("symmetric group characters") {
    SUBCASE("hand values") {
        CHECK(sn_character({2}, {2}) == 1);
        CHECK(sn_character({1, 1}, {2}) == -1);
        CHECK(sn_character({2, 1}, {1, 1, 1}) == 2);
        CHECK(sn_character({2, 1}, {3}) == -1);
        CHECK(sn_character({2, 1}, {2, 1}) == 0);
    }
    SUBCASE("identity column equals dim V") {
        for (int n = 1; n <= 7; ++n) {
            std::vector<int> id(n, 1);
            for (const auto& lambda : enumerate_young_indices(n, n))
                CHECK(sn_character(lambda.parts, id) ==
                      dim_v(lambda).convert_to<long long>());
        }
    }
    SUBCASE("row orthogonality with class sizes") {
        for (int n = 2; n <= 6; ++n) {
            const auto shapes = enumerate_young_indices(n, n);
            for (const auto& a : shapes) {
                for (const auto& b : shapes) {
                    BigInt acc = 0;
                    for (const auto& mu : shapes)
                        acc += conjugacy_class_size(mu.parts) *
                               BigInt(sn_character(a.parts, mu.parts)) *
                               BigInt(sn_character(b.parts, mu.parts));
                    CHECK(acc == (a == b ? factorial(n) : BigInt(0)));
                }
            }
        }
    }
    SUBCASE("class sizes sum to n!") {
        for (int n = 2; n <= 7; ++n) {
            BigInt total = 0;
            for (const auto& mu : enumerate_young_indices(n, n))
                total += conjugacy_class_size(mu.parts);
            CHECK(total == factorial(n));
        }
    }
}

TEST_CASE("isotypic projectors") {
    SUBCASE("symmetric subspace of qubits has trace n+1") {
        for (int n = 2; n <= 5; ++n) {
            const auto proj = isotypic_projector(YoungIndex({n, 0}));
            CHECK(proj.trace() == doctest::Approx(n + 1).epsilon(1e-12));
        }
    }
    SUBCASE("two-qubit singlet projector") {
        const auto proj = isotypic_projector(YoungIndex({1, 1}));
        CHECK(proj.trace() == doctest::Approx(1.0));
        // rank-1 onto (|01> - |10>)/sqrt(2)
        Eigen::VectorXd singlet(4);
        singlet << 0, 1 / std::sqrt(2.0), -1 / std::sqrt(2.0), 0;
        CHECK((proj * singlet - singlet).norm() < 1e-12);
    }
    SUBCASE("family checks: complete, idempotent, self-adjoint, correct traces") {
        for (int n = 2; n <= 5; ++n) CHECK(verify_projector_family(2, n) < 1e-10);
        for (int n = 2; n <= 3; ++n) CHECK(verify_projector_family(3, n) < 1e-10);
    }
    SUBCASE("caps refuse oversized problems") {
        OracleCaps caps;
        caps.max_local_dim = 8;
        CHECK_THROWS_AS(isotypic_projector(YoungIndex({4, 0}), caps), ResourceCapError);
    }
}

TEST_CASE("dense states") {
    SUBCASE("product state is a basis vector") {
        const auto st = build_state(SchmidtSpectrum::parse("1,0"), 2);
        CHECK(std::abs(st.coeff(0, 0) - 1.0) < 1e-15);
        CHECK(st.coeff.squaredNorm() == doctest::Approx(1.0));
    }
    SUBCASE("Bell state amplitudes") {
        const auto st = build_state(SchmidtSpectrum::parse("1/2,1/2"), 1);
        CHECK(std::abs(st.coeff(0, 0) - 1.0 / std::sqrt(2.0)) < 1e-15);
        CHECK(std::abs(st.coeff(1, 1) - 1.0 / std::sqrt(2.0)) < 1e-15);
        CHECK(std::abs(st.coeff(0, 1)) < 1e-15);
    }
    SUBCASE("unit norm for random spectra and rotations") {
        const auto p = SchmidtSpectrum::parse("5/8,1/4,1/8");
        const auto st = build_state_rotated(p, 2, random_unitary(3, 1), random_unitary(3, 2));
        CHECK(st.coeff.squaredNorm() == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("outcome law against the dense trace") {
    SUBCASE("product input concentrates on the single-row outcome") {
        const auto p = SchmidtSpectrum::parse("1,0");
        CHECK(verify_outcome_law(build_state(p, 3), p) < 1e-12);
    }
    SUBCASE("uniform qubit at n=3") {
        const auto p = SchmidtSpectrum::parse("1/2,1/2");
        CHECK(verify_outcome_law(build_state(p, 3), p) < 1e-12);
    }
    SUBCASE("(3/4,1/4) over an n ladder") {
        const auto p = SchmidtSpectrum::parse("3/4,1/4");
        for (int n : {2, 3, 4}) CHECK(verify_outcome_law(build_state(p, n), p) < 1e-10);
    }
    SUBCASE("invariance under local rotations") {
        const auto p = SchmidtSpectrum::parse("2/3,1/3");
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            const auto st =
                build_state_rotated(p, 3, random_unitary(2, seed), random_unitary(2, seed + 100));
            CHECK(verify_outcome_law(st, p) < 1e-10);
        }
    }
}

TEST_CASE("extracted entanglement structure") {
    SUBCASE("antisymmetric sector of two copies is rank one") {
        const auto p = SchmidtSpectrum::parse("3/4,1/4");
        const auto chk = verify_extracted_entanglement(build_state(p, 2), YoungIndex({1, 1}));
        CHECK(chk.probability == doctest::Approx(3.0 / 16.0).epsilon(1e-10));
        CHECK(chk.groups_ok);
        CHECK(chk.u_rank == 1);
        CHECK(chk.extracted_bits == 0.0);  // dim V = 1
        CHECK(chk.entropy_residual < 1e-8);
    }
    SUBCASE("mixed-symmetry sector of three copies carries one ebit") {
        const auto p = SchmidtSpectrum::parse("3/4,1/4");
        const auto chk = verify_extracted_entanglement(build_state(p, 3), YoungIndex({2, 1}));
        CHECK(chk.groups_ok);
        CHECK(chk.u_rank == 2);  // two distinct eigenvalue groups of size dim V = 2
        CHECK(chk.extracted_bits == doctest::Approx(1.0));
        CHECK(chk.group_residual < 1e-8);
        CHECK(chk.entropy_residual < 1e-8);
    }
    SUBCASE("structure is Schmidt-basis independent") {
        const auto p = SchmidtSpectrum::parse("3/4,1/4");
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            const auto st =
                build_state_rotated(p, 3, random_unitary(2, seed), random_unitary(2, 7 * seed));
            const auto chk = verify_extracted_entanglement(st, YoungIndex({2, 1}));
            CHECK(chk.groups_ok);
            CHECK(chk.group_residual < 1e-8);
            CHECK(chk.entropy_residual < 1e-8);
        }
    }
    SUBCASE("zero-probability outcome is refused") {
        const auto p = SchmidtSpectrum::parse("1,0");
        CHECK_THROWS_AS(verify_extracted_entanglement(build_state(p, 2), YoungIndex({1, 1})),
                        InvariantError);
    }
}
