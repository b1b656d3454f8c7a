#pragma once

#include <cstddef>
#include <vector>

#include "qmc/channels.hpp"
#include "qmc/state.hpp"

namespace qmc {

/// Entropy -Tr(rho log2 rho) in bits.
double von_neumann_entropy(const QubitState& rho);

struct EnsembleMember {
    double p = 0.0;
    BlochVector b;  ///< pure input, |b| = 1
};

/// Up to four pure states with probabilities summing to one.
class Ensemble {
public:
    /// Throws DomainError for more than four members, a negative weight,
    /// weights not summing to 1 within 1e-12, or a non-unit Bloch vector.
    explicit Ensemble(std::vector<EnsembleMember> members);

    const std::vector<EnsembleMember>& members() const { return members_; }
    QubitState average() const;

private:
    std::vector<EnsembleMember> members_;
};

/// Uniform pair of the +v and -v eigenstates.
Ensemble v_axis_pair();

/// S[Phi(sum p_i rho_i)] - sum p_i S[Phi(rho_i)], bits.
double holevo_quantity(const RateParams& r, double t, const Ensemble& e);

struct CapacityResult {
    double C = 0.0;
    Ensemble ensemble = v_axis_pair();
    /// The maximiser is not isolated: the channel is invariant under a
    /// rotation of the Bloch ball, so any rotated ensemble does as well.
    bool degenerate = false;
};

/// Maximises the Holevo quantity over ensembles of at most `max_states`
/// pure inputs. Deterministic: Halton multistart followed by pattern
/// search, stopping when a sweep gains less than 1e-6 bits.
/// Throws std::invalid_argument unless 2 <= max_states <= 4.
CapacityResult holevo_capacity(const RateParams& r, double t, std::size_t max_states = 4);

/// C = ideal - shift_error - mixing_error for the uniform v-axis pair.
struct CapacityDecomposition {
    double ideal = 1.0;
    double shift_error = 0.0;   ///< 1 - S[Phi(rho_avg)]
    double mixing_error = 0.0;  ///< sum p_i S[Phi(rho_i)]

    double capacity() const { return ideal - shift_error - mixing_error; }
};

CapacityDecomposition capacity_decomposition(const RateParams& r, double t);

}  // namespace qmc
