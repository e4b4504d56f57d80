#pragma once

#include <cstddef>
#include <string>

#include "radgauge/case.hpp"
#include "radgauge/matrix.hpp"
#include "radgauge/rng.hpp"

namespace rg {

enum class EnsembleKind { Ginibre, Hermitian, Psd, Unitary, Normal, Nilpotent, Sandwich, CommutingPair, NormalPair };

struct EnsembleSpec {
    EnsembleKind kind = EnsembleKind::Ginibre;
    double delta = 0.3, Delta = 0.4;  // sandwich window
};

std::string ensemble_name(EnsembleKind k);
std::string ensemble_name(const EnsembleSpec& s);
// "ginibre", "normal-pair", "sandwich(0.3,0.4)", ...
EnsembleSpec parse_ensemble(const std::string& text);

// entries standard complex Gaussian, E|z|² = 1
ComplexMatrix ginibre(std::size_t n, Rng& g);
// Ginibre rescaled to operator norm 1
ComplexMatrix unit_ginibre(std::size_t n, Rng& g);
// QR of a Ginibre matrix, R with positive diagonal
ComplexMatrix haar_unitary(std::size_t n, Rng& g);
ComplexMatrix random_hermitian(std::size_t n, Rng& g);
// U diag(λ) U* with λ uniform in [lo, hi]
ComplexMatrix random_psd(std::size_t n, Rng& g, double lo = 0, double hi = 1);
ComplexMatrix random_normal(std::size_t n, Rng& g);
ComplexMatrix random_nilpotent(std::size_t n, Rng& g);
CVector random_vector(std::size_t n, Rng& g);
CVector random_unit_vector(std::size_t n, Rng& g);

// single-operator kinds only
ComplexMatrix draw_matrix(EnsembleKind k, std::size_t n, Rng& g);

// Case with operator A (and B for the pair kinds; A, B, C, D for sandwich).
InequalityCase generate_case(const EnsembleSpec& spec, std::size_t dim, Rng& g);

}  // namespace rg
