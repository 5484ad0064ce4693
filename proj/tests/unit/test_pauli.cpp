#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "helpers.hpp"
#include "qugstep/dense.hpp"
#include "qugstep/errors.hpp"
#include "qugstep/gradient.hpp"
#include "qugstep/pauli.hpp"

using namespace qugstep;

TEST_CASE("pauli label parsing") {
    const PauliString xx = PauliString::parse("XX", 2);
    CHECK(xx.letter(0) == Pauli::X);
    CHECK(xx.letter(1) == Pauli::X);

    const PauliString iz = PauliString::parse("IZ", 2);
    CHECK(iz.letter(0) == Pauli::I);
    CHECK(iz.letter(1) == Pauli::Z);

    CHECK_THROWS_AS(PauliString::parse("XQ", 2), ParseError);
    try {
        PauliString::parse("XQ", 2);
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("position 1") != std::string::npos);
    }
    CHECK_THROWS_AS(PauliString::parse("XYZ", 2), ParseError);
}

TEST_CASE("pauli label round-trips") {
    Rng rng(7);
    for (int i = 0; i < 50; ++i) {
        const int n = 1 + static_cast<int>(rng.next_u32() % 6);
        const PauliString p = test_helpers::random_pauli_string(rng, n);
        CHECK(PauliString::parse(p.str(), n) == p);
    }
}

TEST_CASE("duplicate terms merge and near-zero terms drop") {
    const PauliString z0 = PauliString::parse("ZI", 2);
    const PauliString x1 = PauliString::parse("IX", 2);
    Hamiltonian h(2, {{0.5, z0}, {0.25, z0}, {1.0, x1}, {-1.0, x1}});
    CHECK(h.n_terms() == 1);
    CHECK(h.terms()[0].coefficient == doctest::Approx(0.75));
    CHECK(h.terms()[0].string == z0);
}

TEST_CASE("qubitwise grouping on small cases") {
    const auto parse2 = [](const char* s) { return PauliString::parse(s, 2); };

    SUBCASE("diagonal terms share one group") {
        Hamiltonian h(2, {{1.0, parse2("ZI")}, {1.0, parse2("IZ")}, {1.0, parse2("ZZ")}});
        CHECK(group_qubitwise(h).n_groups() == 1);
    }
    SUBCASE("XX and YY conflict on both qubits") {
        Hamiltonian h(2, {{1.0, parse2("XX")}, {1.0, parse2("YY")}});
        CHECK(group_qubitwise(h).n_groups() == 2);
    }
    SUBCASE("the six-term two-qubit model splits into three groups") {
        Hamiltonian h(2, {{1.0, parse2("II")},
                          {1.0, parse2("ZI")},
                          {1.0, parse2("IZ")},
                          {1.0, parse2("ZZ")},
                          {1.0, parse2("YY")},
                          {1.0, parse2("XX")}});
        const MeasurementGrouping g = group_qubitwise(h);
        CHECK(g.n_groups() == 3);
    }
}

TEST_CASE("grouping invariants on random Hamiltonians") {
    Rng rng(11);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 2 + static_cast<int>(rng.next_u32() % 5);  // up to 6 qubits
        const int terms = 1 + static_cast<int>(rng.next_u32() % 30);
        const Hamiltonian h = test_helpers::random_hamiltonian(rng, n, terms);
        const MeasurementGrouping g = group_qubitwise(h);

        // Every term index appears exactly once.
        std::vector<int> seen(h.n_terms(), 0);
        for (const auto& group : g.groups) {
            for (std::size_t idx : group) seen[idx] += 1;
        }
        for (int count : seen) CHECK(count == 1);

        // Independent pairwise check within each group.
        for (const auto& group : g.groups) {
            for (std::size_t a = 0; a < group.size(); ++a) {
                for (std::size_t b = a + 1; b < group.size(); ++b) {
                    CHECK(qubitwise_commute(h.terms()[group[a]].string,
                                            h.terms()[group[b]].string));
                }
            }
        }

        // Basis letter matches the unique non-I letter at each qubit.
        for (std::size_t gi = 0; gi < g.n_groups(); ++gi) {
            for (int q = 0; q < n; ++q) {
                Pauli non_i = Pauli::I;
                for (std::size_t idx : g.groups[gi]) {
                    const Pauli p = h.terms()[idx].string.letter(q);
                    if (p != Pauli::I) non_i = p;
                }
                if (non_i != Pauli::I) {
                    CHECK(g.bases[gi].letter(q) == non_i);
                } else {
                    CHECK(g.bases[gi].letter(q) == Pauli::Z);
                }
            }
        }
    }
}

TEST_CASE("norm bound") {
    Hamiltonian h(1, {{0.5, PauliString::parse("Z", 1)}, {-0.25, PauliString::parse("X", 1)}});
    CHECK(h.norm_bound() == doctest::Approx(0.75));

    Hamiltonian id(1, {{1.0, PauliString::parse("I", 1)}});
    CHECK(id.norm_bound() == doctest::Approx(1.0));

    Rng rng(13);
    for (int trial = 0; trial < 10; ++trial) {
        const Hamiltonian r = test_helpers::random_hamiltonian(rng, 4, 10);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(dense_matrix(r),
                                                               Eigen::EigenvaluesOnly);
        const double max_abs_eig = std::max(std::abs(solver.eigenvalues().minCoeff()),
                                            std::abs(solver.eigenvalues().maxCoeff()));
        CHECK(r.norm_bound() >= max_abs_eig - 1e-10);
        CHECK(std::abs(ground_energy(r)) <= r.norm_bound() + 1e-10);
    }
}

TEST_CASE("curvature bound") {
    Hamiltonian h(1, {{1.0, PauliString::parse("Z", 1)}});
    CHECK(h.curvature_bound() == doctest::Approx(4.0));

    Hamiltonian h2(1, {{0.5, PauliString::parse("Z", 1)}, {0.5, PauliString::parse("X", 1)}});
    CHECK(h2.curvature_bound() == doctest::Approx(4.0));
}

TEST_CASE("curvature bound dominates sampled second derivatives") {
    Rng rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 1 + static_cast<int>(rng.next_u32() % 3);
        const Hamiltonian h = test_helpers::random_hamiltonian(rng, n, 6);
        std::vector<Gate> gates;
        gates.push_back(PauliRotationGate{test_helpers::random_pauli_string(rng, n, false), 0});
        const Ansatz ansatz(n, std::string(static_cast<std::size_t>(n), '0'),
                            std::move(gates), 1, {0.0});
        // Dense sample of E'' along the parameter axis.
        double max_abs = 0.0;
        for (int k = 0; k < 100; ++k) {
            const double theta = -3.2 + 6.4 * k / 99.0;
            max_abs = std::max(max_abs, std::abs(second_derivative_exact(ansatz, theta, h)));
        }
        CHECK(h.curvature_bound() >= max_abs - 1e-9);
    }
}

TEST_CASE("dense matrices of elementary operators") {
    const Eigen::MatrixXcd z = dense_matrix(PauliString::parse("Z", 1));
    CHECK(z(0, 0).real() == doctest::Approx(1.0));
    CHECK(z(1, 1).real() == doctest::Approx(-1.0));
    CHECK(std::abs(z(0, 1)) == doctest::Approx(0.0));

    const Eigen::MatrixXcd x = dense_matrix(PauliString::parse("X", 1));
    CHECK(x(0, 1).real() == doctest::Approx(1.0));
    CHECK(x(1, 0).real() == doctest::Approx(1.0));
    CHECK(std::abs(x(0, 0)) == doctest::Approx(0.0));

    // I + Z0 on two qubits, with qubit 0 as the most significant index bit.
    Hamiltonian h(2, {{1.0, PauliString::parse("II", 2)}, {1.0, PauliString::parse("ZI", 2)}});
    const Eigen::MatrixXcd m = dense_matrix(h);
    CHECK(m(0, 0).real() == doctest::Approx(2.0));
    CHECK(m(1, 1).real() == doctest::Approx(2.0));
    CHECK(m(2, 2).real() == doctest::Approx(0.0));
    CHECK(m(3, 3).real() == doctest::Approx(0.0));
}

TEST_CASE("dense matrices are Hermitian") {
    Rng rng(19);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 1 + static_cast<int>(rng.next_u32() % 4);
        const Hamiltonian h = test_helpers::random_hamiltonian(rng, n, 8);
        const Eigen::MatrixXcd m = dense_matrix(h);
        CHECK((m - m.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("hamiltonian text files round-trip") {
    namespace fs = std::filesystem;
    const fs::path file = fs::temp_directory_path() / "qugstep_test_hamiltonian.txt";
    {
        std::ofstream out(file);
        out << "# two-qubit test operator\n";
        out << "-0.4804 ZZ\n";
        out << "\n";
        out << "0.3435 ZI   # inline comment\n";
        out << "9.1e-2 XX\n";
    }
    const Hamiltonian h = Hamiltonian::load(file);
    CHECK(h.n_qubits() == 2);
    CHECK(h.n_terms() == 3);
    CHECK(h.terms()[0].coefficient == doctest::Approx(-0.4804));
    CHECK(h.terms()[1].string.str() == "ZI");
    CHECK(h.terms()[2].coefficient == doctest::Approx(0.091));

    const fs::path copy = fs::temp_directory_path() / "qugstep_test_hamiltonian2.txt";
    h.save(copy);
    const Hamiltonian reloaded = Hamiltonian::load(copy);
    REQUIRE(reloaded.n_terms() == h.n_terms());
    for (std::size_t i = 0; i < h.n_terms(); ++i) {
        CHECK(reloaded.terms()[i].coefficient == h.terms()[i].coefficient);
        CHECK(reloaded.terms()[i].string == h.terms()[i].string);
    }
    fs::remove(file);
    fs::remove(copy);
}

TEST_CASE("hamiltonian file parse errors") {
    namespace fs = std::filesystem;
    const fs::path file = fs::temp_directory_path() / "qugstep_test_bad.txt";

    {
        std::ofstream out(file);
        out << "0.5 ZZ extra\n";
    }
    CHECK_THROWS_AS(Hamiltonian::load(file), ParseError);

    {
        std::ofstream out(file);
        out << "abc ZZ\n";
    }
    CHECK_THROWS_AS(Hamiltonian::load(file), ParseError);

    {
        std::ofstream out(file);
        out << "0.5\n";
    }
    CHECK_THROWS_AS(Hamiltonian::load(file), ParseError);

    CHECK_THROWS_AS(Hamiltonian::load(fs::temp_directory_path() / "does_not_exist.txt"),
                    ConfigError);
    fs::remove(file);
}
