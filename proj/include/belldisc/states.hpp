#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "belldisc/complex_matrix.hpp"
#include "belldisc/eig.hpp"

namespace belldisc {

inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kPsdTol = -1e-10;

/// Pure state amplitudes in the computational basis |00>,|01>,|10>,|11>,...
class StateVector {
public:
  explicit StateVector(std::vector<complex> amplitudes)
      : amps_(std::move(amplitudes)) {
    double n2 = 0.0;
    for (const auto& a : amps_) n2 += std::norm(a);
    if (std::abs(std::sqrt(n2) - 1.0) > kHermitianTol)
      throw std::invalid_argument("StateVector: not unit norm");
  }

  std::size_t dim() const { return amps_.size(); }
  const std::vector<complex>& amplitudes() const { return amps_; }
  const complex& operator[](std::size_t i) const { return amps_[i]; }

  complex inner(const StateVector& other) const {
    if (other.dim() != dim()) throw std::invalid_argument("inner: dim mismatch");
    complex s{};
    for (std::size_t i = 0; i < amps_.size(); ++i)
      s += std::conj(amps_[i]) * other.amps_[i];
    return s;
  }

  ComplexMatrix projector() const {
    ComplexMatrix p(dim(), dim());
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = 0; j < dim(); ++j)
        p(i, j) = amps_[i] * std::conj(amps_[j]);
    return p;
  }

private:
  std::vector<complex> amps_;
};

/// Validated quantum state: Hermitian, unit trace, positive semidefinite
/// (min eigenvalue above the roundoff floor).
class DensityMatrix {
public:
  static DensityMatrix validated(ComplexMatrix m) {
    if (!m.is_square()) throw std::invalid_argument("DensityMatrix: non-square");
    if (!m.all_finite()) throw std::invalid_argument("DensityMatrix: non-finite entries");
    if (m.hermiticity_error() > kHermitianTol)
      throw std::invalid_argument("DensityMatrix: not Hermitian");
    if (std::abs(m.trace().real() - 1.0) > kTraceTol ||
        std::abs(m.trace().imag()) > kTraceTol)
      throw std::invalid_argument("DensityMatrix: trace != 1");
    if (min_eigenvalue(m.symmetrized()) < kPsdTol)
      throw std::invalid_argument("DensityMatrix: not positive semidefinite");
    return DensityMatrix(std::move(m));
  }

  static DensityMatrix from_state(const StateVector& v) {
    return DensityMatrix(v.projector());
  }

  std::size_t dim() const { return m_.rows(); }
  const ComplexMatrix& matrix() const { return m_; }

private:
  explicit DensityMatrix(ComplexMatrix m) : m_(std::move(m)) {}
  ComplexMatrix m_;
};

/// Weighted list of same-dimension states plus the Alice:Bob cut.
struct Ensemble {
  std::vector<std::pair<double, DensityMatrix>> members;
  Bipartition cut;

  static Ensemble validated(std::vector<std::pair<double, DensityMatrix>> members,
                            Bipartition cut) {
    if (members.empty()) throw std::invalid_argument("Ensemble: empty");
    double total = 0.0;
    const std::size_t dim = members.front().second.dim();
    for (const auto& [p, state] : members) {
      if (p < -kTraceTol || p > 1.0 + kTraceTol)
        throw std::invalid_argument("Ensemble: probability out of [0,1]");
      if (state.dim() != dim)
        throw std::invalid_argument("Ensemble: mixed dimensions");
      total += p;
    }
    if (std::abs(total - 1.0) > kTraceTol)
      throw std::invalid_argument("Ensemble: probabilities do not sum to 1");
    if (cut.total_dim() != dim)
      throw std::invalid_argument("Ensemble: cut inconsistent with dimension");
    return Ensemble{std::move(members), std::move(cut)};
  }

  std::size_t size() const { return members.size(); }
  std::size_t dim() const { return members.front().second.dim(); }
};

struct NoisyBellParams {
  double lambda;        // mixing weight of the Bell component
  DensityMatrix sigma;  // arbitrary two-qubit noise state
};

struct ResourceParams {
  double epsilon;  // Schmidt imbalance of the ancilla; 0 = maximally entangled
};

inline ComplexMatrix pauli_x() {
  return ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}});
}
inline ComplexMatrix pauli_y() {
  return ComplexMatrix::from_rows({{0.0, complex(0.0, -1.0)},
                                   {complex(0.0, 1.0), 0.0}});
}
inline ComplexMatrix pauli_z() {
  return ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, -1.0}});
}

/// The four Bell states, indexed 1..4:
///   1: (|00>+|11>)/sqrt2   2: (|00>-|11>)/sqrt2
///   3: (|01>+|10>)/sqrt2   4: (|01>-|10>)/sqrt2
inline StateVector bell_state(std::size_t i) {
  const double r = 1.0 / std::sqrt(2.0);
  switch (i) {
    case 1: return StateVector({r, 0.0, 0.0, r});
    case 2: return StateVector({r, 0.0, 0.0, -r});
    case 3: return StateVector({0.0, r, r, 0.0});
    case 4: return StateVector({0.0, r, -r, 0.0});
    default: throw std::out_of_range("bell_state: index must be 1..4");
  }
}

inline ComplexMatrix bell_projector(std::size_t i) {
  return bell_state(i).projector();
}

/// sqrt((1+eps)/2)|00> + sqrt((1-eps)/2)|11>
inline StateVector resource_state(const ResourceParams& p) {
  if (p.epsilon < 0.0 || p.epsilon > 1.0)
    throw std::invalid_argument("resource_state: epsilon out of [0,1]");
  return StateVector({std::sqrt((1.0 + p.epsilon) / 2.0), 0.0, 0.0,
                      std::sqrt((1.0 - p.epsilon) / 2.0)});
}

inline DensityMatrix maximally_mixed(std::size_t dim) {
  return DensityMatrix::validated(ComplexMatrix::identity(dim) *
                                  complex(1.0 / static_cast<double>(dim)));
}

/// Four equiprobable states lambda * Psi_i + (1 - lambda) * sigma.
inline Ensemble noisy_bell_ensemble(const NoisyBellParams& p) {
  if (p.lambda < 0.0 || p.lambda > 1.0)
    throw std::invalid_argument("noisy_bell_ensemble: lambda out of [0,1]");
  if (p.sigma.dim() != 4)
    throw std::invalid_argument("noisy_bell_ensemble: sigma must be two-qubit");
  std::vector<std::pair<double, DensityMatrix>> members;
  members.reserve(4);
  for (std::size_t i = 1; i <= 4; ++i) {
    ComplexMatrix state = bell_projector(i) * complex(p.lambda) +
                          p.sigma.matrix() * complex(1.0 - p.lambda);
    members.emplace_back(0.25, DensityMatrix::validated(std::move(state)));
  }
  return Ensemble::validated(std::move(members), Bipartition::two_qubits());
}

/// Bell states mixed with white noise: sigma = identity/4.
inline Ensemble werner_ensemble(double lambda) {
  return noisy_bell_ensemble({lambda, maximally_mixed(4)});
}

/// Tensor the resource state onto every member; the result lives on
/// X1 Y1 X2 Y2 with Alice holding {X1, X2}.
inline Ensemble attach_resource(const Ensemble& e, const ResourceParams& r) {
  if (e.dim() != 4)
    throw std::invalid_argument("attach_resource: expected a two-qubit ensemble");
  const ComplexMatrix tau = resource_state(r).projector();
  std::vector<std::pair<double, DensityMatrix>> members;
  members.reserve(e.size());
  for (const auto& [p, state] : e.members)
    members.emplace_back(p, DensityMatrix::validated(kron(state.matrix(), tau)));
  return Ensemble::validated(std::move(members), Bipartition::two_qubit_pairs());
}

/// Ginibre construction G G^dagger / Tr(G G^dagger) with a seeded complex
/// Gaussian G; full rank generically and reproducible from the seed.
inline DensityMatrix random_density_matrix(std::size_t dim, std::uint64_t seed) {
  if (dim == 0) throw std::invalid_argument("random_density_matrix: dim >= 1");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix g(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) g(i, j) = complex(gauss(rng), gauss(rng));
  ComplexMatrix rho = g * g.dagger();
  rho *= complex(1.0 / rho.trace().real());
  return DensityMatrix::validated(rho.symmetrized());
}

/// Seeded Haar-like random pure state (normalized complex Gaussian vector).
inline StateVector random_pure_state(std::size_t dim, std::uint64_t seed) {
  if (dim == 0) throw std::invalid_argument("random_pure_state: dim >= 1");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<complex> amps(dim);
  double n2 = 0.0;
  for (auto& a : amps) {
    a = complex(gauss(rng), gauss(rng));
    n2 += std::norm(a);
  }
  const double inv = 1.0 / std::sqrt(n2);
  for (auto& a : amps) a *= inv;
  return StateVector(std::move(amps));
}

}  // namespace belldisc
