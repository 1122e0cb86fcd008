// Set partitions of {1..N} under the refinement order, their Moebius
// function, and finite products of these lattices.
//
// Partitions are kept in a canonical form (blocks sorted by minimum
// element) and enumerated in lexicographic order of their restricted
// growth strings. In that order the zeta matrix is unitriangular, and
// the Moebius matrix is its exact integer inverse.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bethe0/rational.hpp"

namespace bethe0 {

inline constexpr int kPartitionCap = 8;  // Bell(8) = 4140
inline constexpr long long kDefaultProductBudget = 200;

struct SetPartition {
    int n = 0;
    std::vector<std::vector<int>> blocks;  // sorted by min element, elements ascending
    std::vector<int> rgs;                  // rgs[i] = block index of element i+1

    int length() const { return static_cast<int>(blocks.size()); }
    std::string str() const;  // e.g. "13/2"
    bool operator==(const SetPartition& o) const { return n == o.n && rgs == o.rgs; }
};

SetPartition partition_from_rgs(const std::vector<int>& rgs);

/// All Bell(n) partitions of {1..n}, in restricted-growth-string
/// lexicographic order (coarsest first, finest last).
std::vector<SetPartition> enumerate_partitions(int n, int cap = kPartitionCap);

/// The refinement order: true iff every block of fine is contained in a
/// block of coarse (i.e. coarse <= fine).
bool refines(const SetPartition& coarse, const SetPartition& fine);

class MobiusTable {
public:
    explicit MobiusTable(int n);

    int n() const { return n_; }
    const std::vector<SetPartition>& partitions() const { return parts_; }
    std::size_t size() const { return parts_.size(); }

    bool zeta(std::size_t i, std::size_t j) const { return zeta_[i * size_ + j] != 0; }
    std::int64_t mu(std::size_t i, std::size_t j) const { return mu_[i * size_ + j]; }

    std::size_t index_of(const SetPartition& p) const;
    std::size_t max_index() const { return size_ - 1; }  // all-singletons partition

    /// Exact check that zeta * mu is the identity matrix.
    bool verify_inverse() const;

private:
    int n_;
    std::size_t size_;
    std::vector<SetPartition> parts_;
    std::vector<std::uint8_t> zeta_;
    std::vector<std::int64_t> mu_;
};

/// Shared per-N table, built once; safe for concurrent lookup.
const MobiusTable& mobius_table(int n, int cap = kPartitionCap);

/// An element of the product poset L_{n_1} x ... x L_{n_m}.
struct ProductPartition {
    std::vector<SetPartition> factors;

    int length() const;
    bool is_max() const;
};

/// All elements of the product poset, factors enumerated lexicographically.
/// Throws if the total count prod Bell(n_i) exceeds the budget.
std::vector<ProductPartition> enumerate_product(const std::vector<int>& sizes,
                                                long long budget = kDefaultProductBudget);

/// prod_i mu_{n_i}(pi_i, max), the Moebius value from elem to the top.
BigInt product_mobius_to_max(const ProductPartition& elem);

/// Checks X^{l(pi)} = sum_{pi' <= pi} (X)_{l(pi')} and its Moebius
/// inversion as exact polynomial identities, for every pi in L_n.
bool verify_falling_factorial(int n);

/// Checks sum_pi mu(pi, max) * prod_i X_i^{l(pi_i)} = prod_i (X_i)_{n_i}
/// as an exact multivariate polynomial identity.
bool verify_musum(const std::vector<int>& sizes,
                  long long budget = kDefaultProductBudget);

}  // namespace bethe0
