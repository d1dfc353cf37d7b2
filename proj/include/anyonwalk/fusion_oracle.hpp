#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "anyonwalk/braidgen.hpp"
#include "anyonwalk/walkdist.hpp"

namespace anyonwalk {

using Complex = std::complex<double>;

/// Scaled Pauli string c · X^x Z^z on ceil(n/2) qubits.
struct PauliString {
  Complex coeff{1.0, 0.0};
  std::uint64_t x = 0;
  std::uint64_t z = 0;

  PauliString operator*(const PauliString& o) const;
};

/// Ising braid representation from Majorana operators Γ_1..Γ_n (Jordan-Wigner):
/// ρ(b_j) = phase · (1 + Γ_j Γ_{j+1}) / √2, with default phase ζ = e^{iπ/8}.
/// The eigenvalues are then A = e^{3iπ/8} and -A^{-3}, and the normalized
/// trace is the bracket's Markov trace: tr ρ(β) / dim = d^{-(n-1)} <closure of β>.
class IsingRep {
 public:
  static constexpr int kMaxStrands = 40;

  /// `phase_eighths` = k selects the global generator phase e^{ikπ/8}.
  explicit IsingRep(int n, int phase_eighths = 1);

  int strands() const { return n_; }
  std::size_t dim() const { return std::size_t{1} << qubits_; }
  int phase_eighths() const { return phase_eighths_; }
  const PauliString& majorana(int k) const { return majoranas_[static_cast<std::size_t>(k - 1)]; }

  /// v <- ρ(b_j)^{±1} v.
  void apply(int j, int sign, std::vector<Complex>& v) const;
  /// Dense matrix of ρ(b_j), row-major (tests and diagnostics).
  std::vector<Complex> generator_matrix(int j, int sign = 1) const;

 private:
  int n_;
  int qubits_;
  int phase_eighths_;
  Complex phase_;
  std::vector<PauliString> majoranas_;
  std::vector<PauliString> pair_products_;  // Γ_j Γ_{j+1}
};

/// tr ρ(word) / dim.
Complex fusion_trace(const IsingRep& rep, const BraidWord& word);

/// Same value computed on the smallest strand window the word touches
/// (exact by the Markov property of the normalized trace).
Complex fusion_trace_windowed(const BraidWord& word, int phase_eighths = 1);

struct OracleOptions {
  int cap = 8;
  int threads = 0;
  int phase_eighths = 1;
};

/// Walk density from Σ 2^{-t} (-1)^z Re tr ρ(B_{a'}^† B_a) / dim over all
/// contributing pairs, with no knot invariants involved.
Distribution oracle_distribution(const WalkConfig& cfg, const OracleOptions& options = {});

}  // namespace anyonwalk
