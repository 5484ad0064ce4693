#include "qugstep/pauli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "qugstep/errors.hpp"

namespace qugstep {

namespace {
constexpr double kDropThreshold = 1e-14;
}

char pauli_char(Pauli p) {
    switch (p) {
        case Pauli::I: return 'I';
        case Pauli::X: return 'X';
        case Pauli::Y: return 'Y';
        case Pauli::Z: return 'Z';
    }
    return '?';
}

PauliString::PauliString(std::vector<Pauli> letters) : letters_(std::move(letters)) {
    if (letters_.empty()) {
        throw ArgumentError("PauliString needs at least one qubit");
    }
    if (letters_.size() > 64) {
        throw ArgumentError("PauliString limited to 64 qubits");
    }
    const int n = n_qubits();
    for (int q = 0; q < n; ++q) {
        const std::uint64_t bit = 1ULL << (n - 1 - q);
        switch (letters_[static_cast<std::size_t>(q)]) {
            case Pauli::I: break;
            case Pauli::X: x_mask_ |= bit; break;
            case Pauli::Y: x_mask_ |= bit; z_mask_ |= bit; ++y_count_; break;
            case Pauli::Z: z_mask_ |= bit; break;
        }
    }
}

PauliString PauliString::parse(const std::string& label, int n_qubits) {
    if (static_cast<int>(label.size()) != n_qubits) {
        std::ostringstream msg;
        msg << "Pauli label '" << label << "' has length " << label.size()
            << ", expected " << n_qubits;
        throw ParseError(msg.str());
    }
    std::vector<Pauli> letters;
    letters.reserve(label.size());
    for (std::size_t i = 0; i < label.size(); ++i) {
        switch (label[i]) {
            case 'I': letters.push_back(Pauli::I); break;
            case 'X': letters.push_back(Pauli::X); break;
            case 'Y': letters.push_back(Pauli::Y); break;
            case 'Z': letters.push_back(Pauli::Z); break;
            default: {
                std::ostringstream msg;
                msg << "invalid Pauli letter '" << label[i] << "' at position "
                    << i << " in label '" << label << "'";
                throw ParseError(msg.str());
            }
        }
    }
    return PauliString(std::move(letters));
}

bool PauliString::is_identity() const {
    return x_mask_ == 0 && z_mask_ == 0;
}

std::string PauliString::str() const {
    std::string out;
    out.reserve(letters_.size());
    for (Pauli p : letters_) out.push_back(pauli_char(p));
    return out;
}

Hamiltonian::Hamiltonian(int n_qubits, std::vector<PauliTerm> terms)
    : n_qubits_(n_qubits) {
    if (n_qubits <= 0) throw ArgumentError("Hamiltonian needs n_qubits >= 1");
    if (terms.empty()) throw ArgumentError("Hamiltonian needs at least one term");
    for (const PauliTerm& t : terms) {
        if (t.string.n_qubits() != n_qubits) {
            throw ArgumentError("Hamiltonian term '" + t.string.str() +
                                "' does not act on " + std::to_string(n_qubits) +
                                " qubits");
        }
        if (!std::isfinite(t.coefficient)) {
            throw ArgumentError("non-finite coefficient for term '" + t.string.str() + "'");
        }
    }
    // Merge duplicates, preserving first-appearance order.
    for (PauliTerm& t : terms) {
        auto it = std::find_if(terms_.begin(), terms_.end(), [&](const PauliTerm& u) {
            return u.string == t.string;
        });
        if (it == terms_.end()) {
            terms_.push_back(std::move(t));
        } else {
            it->coefficient += t.coefficient;
        }
    }
    std::erase_if(terms_, [](const PauliTerm& t) {
        return std::abs(t.coefficient) < kDropThreshold;
    });
    if (terms_.empty()) {
        // Everything cancelled; keep an explicit zero so the operator stays
        // well-defined.
        terms_.push_back(PauliTerm{0.0, PauliString(std::vector<Pauli>(
                                            static_cast<std::size_t>(n_qubits), Pauli::I))});
    }
}

Hamiltonian Hamiltonian::load(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) {
        throw ConfigError("cannot open Hamiltonian file: " + file.string());
    }
    std::vector<std::pair<double, std::string>> raw;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string coeff_text, label, extra;
        if (!(ls >> coeff_text)) continue;  // blank or comment-only line
        if (!(ls >> label)) {
            throw ParseError(file.string() + ":" + std::to_string(lineno) +
                             ": expected `<coefficient> <label>`");
        }
        if (ls >> extra) {
            throw ParseError(file.string() + ":" + std::to_string(lineno) +
                             ": trailing content '" + extra + "'");
        }
        std::size_t used = 0;
        double coeff = 0.0;
        try {
            coeff = std::stod(coeff_text, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != coeff_text.size()) {
            throw ParseError(file.string() + ":" + std::to_string(lineno) +
                             ": bad coefficient '" + coeff_text + "'");
        }
        raw.emplace_back(coeff, label);
    }
    if (raw.empty()) {
        throw ParseError(file.string() + ": no Hamiltonian terms found");
    }
    const int n = static_cast<int>(raw.front().second.size());
    std::vector<PauliTerm> terms;
    terms.reserve(raw.size());
    for (const auto& [coeff, label] : raw) {
        terms.push_back(PauliTerm{coeff, PauliString::parse(label, n)});
    }
    return Hamiltonian(n, std::move(terms));
}

void Hamiltonian::save(const std::filesystem::path& file) const {
    std::ofstream out(file);
    if (!out) {
        throw ConfigError("cannot write Hamiltonian file: " + file.string());
    }
    char buf[64];
    for (const PauliTerm& t : terms_) {
        std::snprintf(buf, sizeof buf, "%.15g", t.coefficient);
        out << buf << ' ' << t.string.str() << '\n';
    }
}

double Hamiltonian::norm_bound() const {
    double sum = 0.0;
    for (const PauliTerm& t : terms_) sum += std::abs(t.coefficient);
    return sum;
}

double Hamiltonian::curvature_bound() const {
    return 4.0 * norm_bound();
}

bool qubitwise_commute(const PauliString& a, const PauliString& b) {
    const int n = a.n_qubits();
    for (int q = 0; q < n; ++q) {
        const Pauli pa = a.letter(q);
        const Pauli pb = b.letter(q);
        if (pa != Pauli::I && pb != Pauli::I && pa != pb) return false;
    }
    return true;
}

MeasurementGrouping group_qubitwise(const Hamiltonian& h) {
    const int n = h.n_qubits();
    MeasurementGrouping grouping;
    // Per-group working basis; Pauli::I marks a still-unconstrained qubit.
    std::vector<std::vector<Pauli>> open_bases;

    for (std::size_t idx = 0; idx < h.n_terms(); ++idx) {
        const PauliString& s = h.terms()[idx].string;
        bool placed = false;
        for (std::size_t g = 0; g < grouping.groups.size(); ++g) {
            std::vector<Pauli>& basis = open_bases[g];
            bool fits = true;
            for (int q = 0; q < n; ++q) {
                const Pauli want = s.letter(q);
                if (want != Pauli::I && basis[static_cast<std::size_t>(q)] != Pauli::I &&
                    basis[static_cast<std::size_t>(q)] != want) {
                    fits = false;
                    break;
                }
            }
            if (fits) {
                grouping.groups[g].push_back(idx);
                for (int q = 0; q < n; ++q) {
                    if (s.letter(q) != Pauli::I) {
                        basis[static_cast<std::size_t>(q)] = s.letter(q);
                    }
                }
                placed = true;
                break;
            }
        }
        if (!placed) {
            grouping.groups.push_back({idx});
            std::vector<Pauli> basis(static_cast<std::size_t>(n), Pauli::I);
            for (int q = 0; q < n; ++q) {
                if (s.letter(q) != Pauli::I) {
                    basis[static_cast<std::size_t>(q)] = s.letter(q);
                }
            }
            open_bases.push_back(std::move(basis));
        }
    }

    grouping.bases.reserve(open_bases.size());
    for (std::vector<Pauli>& basis : open_bases) {
        for (Pauli& p : basis) {
            if (p == Pauli::I) p = Pauli::Z;  // all-I qubits measured in Z
        }
        grouping.bases.push_back(PauliString(std::move(basis)));
    }
    return grouping;
}

}  // namespace qugstep
