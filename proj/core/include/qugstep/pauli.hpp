#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace qugstep {

// Qubit index convention, used everywhere in this library:
// character position i of a Pauli label is qubit i (leftmost = qubit 0),
// and qubit i maps to bit (n-1-i) of a basis-state index, so the binary
// expansion of an amplitude index reads the same way as a bitstring label.
enum class Pauli : std::uint8_t { I, X, Y, Z };

char pauli_char(Pauli p);

// A tensor product of single-qubit Paulis. Squares to identity,
// eigenvalues are +-1.
class PauliString {
  public:
    explicit PauliString(std::vector<Pauli> letters);

    // Parses a label like "XIZY". Throws ParseError naming the offending
    // position on an invalid character, or on a length mismatch.
    static PauliString parse(const std::string& label, int n_qubits);

    int n_qubits() const { return static_cast<int>(letters_.size()); }
    Pauli letter(int qubit) const { return letters_[static_cast<std::size_t>(qubit)]; }
    const std::vector<Pauli>& letters() const { return letters_; }

    bool is_identity() const;
    std::string str() const;

    // Mask with bit (n-1-q) set when qubit q carries the given letter kind.
    std::uint64_t x_mask() const { return x_mask_; }  // X or Y (bit flip)
    std::uint64_t z_mask() const { return z_mask_; }  // Z or Y (phase flip)
    std::uint64_t support_mask() const { return x_mask_ | z_mask_; }
    int y_count() const { return y_count_; }

    bool operator==(const PauliString& other) const { return letters_ == other.letters_; }

  private:
    std::vector<Pauli> letters_;
    std::uint64_t x_mask_ = 0;
    std::uint64_t z_mask_ = 0;
    int y_count_ = 0;
};

struct PauliTerm {
    double coefficient;
    PauliString string;
};

// Real-weighted Pauli strings sharing one qubit count. Duplicate strings
// are merged on construction; terms with |c| < 1e-14 after merging are
// dropped (unless that would leave the Hamiltonian empty).
class Hamiltonian {
  public:
    Hamiltonian(int n_qubits, std::vector<PauliTerm> terms);

    // Text format: one `<coefficient> <label>` pair per line, `#` starts a
    // comment, blank lines ignored. Qubit count is the label length.
    static Hamiltonian load(const std::filesystem::path& file);
    void save(const std::filesystem::path& file) const;

    int n_qubits() const { return n_qubits_; }
    const std::vector<PauliTerm>& terms() const { return terms_; }
    std::size_t n_terms() const { return terms_.size(); }

    // Sum of |coefficients|; upper-bounds the operator norm because every
    // Pauli string has unit norm.
    double norm_bound() const;

    // 4 * norm_bound(): bound on |E''(theta)| for a single full-angle
    // Pauli-exponential parameter, from |[[P,H],P]| <= 4|H|.
    double curvature_bound() const;

  private:
    int n_qubits_;
    std::vector<PauliTerm> terms_;
};

// Partition of term indices into qubit-wise commuting groups, with the
// shared measurement basis letter per qubit (Z where every term is I).
struct MeasurementGrouping {
    std::vector<std::vector<std::size_t>> groups;
    std::vector<PauliString> bases;

    std::size_t n_groups() const { return groups.size(); }
};

// Greedy first-fit in term order: deterministic given term order.
MeasurementGrouping group_qubitwise(const Hamiltonian& h);

// True when the two strings agree or have an I on every qubit.
bool qubitwise_commute(const PauliString& a, const PauliString& b);

}  // namespace qugstep
