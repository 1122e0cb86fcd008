// Quantum space data, string patterns, vacancy numbers, and the two
// closed-form counts R(nu,N) and K(nu,N).
#pragma once

#include <map>
#include <set>
#include <vector>

#include "bethe0/matrix.hpp"
#include "bethe0/rational.hpp"

namespace bethe0 {

/// Finite-support map from positive indices to integer values. Used both
/// for the quantum space nu (index s -> multiplicity of W_s) and for
/// string patterns N (index m -> number of m-strings). Entries may be
/// negative for internally shifted data; parsed user input is validated
/// to be non-negative.
class SupportMap {
public:
    SupportMap() = default;
    SupportMap(std::initializer_list<std::pair<const int, long long>> init);

    long long value(int idx) const;
    void set(int idx, long long v);
    void add(int idx, long long delta) { set(idx, value(idx) + delta); }
    const std::map<int, long long>& entries() const { return m_; }
    bool empty() const { return m_.empty(); }
    int max_index() const { return m_.empty() ? 0 : m_.rbegin()->first; }
    std::vector<int> support() const;
    bool non_negative() const;

    /// sum of idx * value over the support
    long long weighted_sum() const;

    bool operator==(const SupportMap& o) const { return m_ == o.m_; }
    bool operator<(const SupportMap& o) const { return m_ < o.m_; }

    SupportMap operator+(const SupportMap& o) const;

private:
    std::map<int, long long> m_;  // nonzero values only
};

using QuantumSpace = SupportMap;   // s -> nu_s
using StringPattern = SupportMap;  // m -> N_m

inline QuantumSpace delta_space(int s, long long count = 1) {
    QuantumSpace nu;
    nu.set(s, count);
    return nu;
}

/// Magnon number M = sum m * N_m.
inline long long magnon_number(const StringPattern& n) { return n.weighted_sum(); }

/// gamma_m = sum_k min(m,k) nu_k; stabilizes to gamma_inf for large m.
BigInt gamma_m(const QuantumSpace& nu, int m);
inline BigInt gamma_inf(const QuantumSpace& nu) { return BigInt(nu.weighted_sum()); }

/// Vacancy number P_m = gamma_m - 2 sum_k min(m,k) N_k; may be negative.
BigInt vacancy(const QuantumSpace& nu, const StringPattern& n, int m);

/// Generalized binomial coefficient as an exact rational:
/// xi(xi-1)...(xi-n+1)/n! for n >= 1, 1 for n == 0, 0 otherwise.
BigRat binom_gen_rat(const BigInt& xi, long n);

/// F_{m,k} = delta_{m,k} P_m + 2 min(m,k) N_k over the index set (sorted).
IntMatrix f_matrix(const QuantumSpace& nu, const StringPattern& n,
                   const std::vector<int>& index_set);

/// D_J = det_{m,k in J} (2 min(m,k) - delta_{m,k}); 1 for the empty set.
BigInt d_subset(const std::vector<int>& j_set);

/// Determinant form of the count of off-diagonal string-center solutions:
/// det F * prod_m (1/N_m) binom(P_m+N_m-1, N_m-1) over the support of N,
/// and 1 when N = 0. Defined (possibly <= 0) for every vacancy signature;
/// always an exact integer for integer nu (asserted).
BigRat r_closed(const QuantumSpace& nu, const StringPattern& n);

/// Determinant-expanded form: sum over J of D_J * binomial products.
/// Agrees with r_closed exactly.
BigInt r_expanded(const QuantumSpace& nu, const StringPattern& n);

/// r_closed with the integrality assertion applied.
BigInt r_value(const QuantumSpace& nu, const StringPattern& n);

/// Fermionic count prod_m binom(P_m+N_m, N_m).
BigInt k_fermionic(const QuantumSpace& nu, const StringPattern& n);

/// Index-shifted data nu[J]_s = nu_s - 2*[s in J], N[J]_m = N_m - [m in J];
/// vacancy numbers are invariant under this shift.
QuantumSpace shifted_nu(const QuantumSpace& nu, const std::set<int>& j_set);
StringPattern shifted_pattern(const StringPattern& n, const std::set<int>& j_set);

}  // namespace bethe0
