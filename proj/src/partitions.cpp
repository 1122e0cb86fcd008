#include "bethe0/partitions.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "bethe0/laurent.hpp"
#include "bethe0/series.hpp"

namespace bethe0 {

std::string SetPartition::str() const {
    std::ostringstream os;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (b) os << "/";
        for (int e : blocks[b]) os << e;
    }
    return os.str();
}

SetPartition partition_from_rgs(const std::vector<int>& rgs) {
    SetPartition p;
    p.n = static_cast<int>(rgs.size());
    p.rgs = rgs;
    int nblocks = 0;
    for (int v : rgs) nblocks = std::max(nblocks, v + 1);
    p.blocks.assign(nblocks, {});
    for (int i = 0; i < p.n; ++i) p.blocks[rgs[i]].push_back(i + 1);
    return p;
}

namespace {

void gen_rgs(std::vector<int>& rgs, int pos, int maxv, std::vector<SetPartition>& out) {
    if (pos == static_cast<int>(rgs.size())) {
        out.push_back(partition_from_rgs(rgs));
        return;
    }
    for (int v = 0; v <= maxv + 1; ++v) {
        rgs[pos] = v;
        gen_rgs(rgs, pos + 1, std::max(maxv, v), out);
    }
}

}  // namespace

std::vector<SetPartition> enumerate_partitions(int n, int cap) {
    if (n < 1 || n > cap) throw std::invalid_argument("enumerate_partitions: n out of range");
    std::vector<SetPartition> out;
    std::vector<int> rgs(n, 0);
    gen_rgs(rgs, 1, 0, out);
    return out;
}

bool refines(const SetPartition& coarse, const SetPartition& fine) {
    if (coarse.n != fine.n) throw std::invalid_argument("refines: mismatched ground sets");
    for (const auto& block : fine.blocks) {
        int home = coarse.rgs[block[0] - 1];
        for (int e : block)
            if (coarse.rgs[e - 1] != home) return false;
    }
    return true;
}

MobiusTable::MobiusTable(int n) : n_(n) {
    parts_ = enumerate_partitions(n);
    size_ = parts_.size();
    zeta_.assign(size_ * size_, 0);
    for (std::size_t i = 0; i < size_; ++i)
        for (std::size_t j = 0; j < size_; ++j)
            if (refines(parts_[i], parts_[j])) {
                if (j < i) throw std::logic_error("zeta matrix not upper triangular");
                zeta_[i * size_ + j] = 1;
            }
    mu_.assign(size_ * size_, 0);
    // invert the unitriangular zeta matrix; columns are independent
#pragma omp parallel for schedule(dynamic)
    for (std::size_t j = 0; j < size_; ++j) {
        mu_[j * size_ + j] = 1;
        for (std::size_t i = j; i-- > 0;) {
            std::int64_t acc = 0;
            for (std::size_t k = i + 1; k <= j; ++k)
                if (zeta_[i * size_ + k]) acc += mu_[k * size_ + j];
            mu_[i * size_ + j] = -acc;
        }
    }
}

std::size_t MobiusTable::index_of(const SetPartition& p) const {
    auto it = std::lower_bound(parts_.begin(), parts_.end(), p,
                               [](const SetPartition& a, const SetPartition& b) {
                                   return a.rgs < b.rgs;
                               });
    if (it == parts_.end() || !(*it == p)) throw std::invalid_argument("index_of: unknown partition");
    return static_cast<std::size_t>(it - parts_.begin());
}

bool MobiusTable::verify_inverse() const {
    const std::size_t k = size_;
    bool ok = true;
#pragma omp parallel for schedule(dynamic) shared(ok)
    for (std::size_t i = 0; i < k; ++i) {
        if (!ok) continue;
        for (std::size_t j = 0; j < k; ++j) {
            std::int64_t acc = 0;
            for (std::size_t t = i; t <= j; ++t)
                if (zeta_[i * k + t]) acc += mu_[t * k + j];
            if (acc != (i == j ? 1 : 0)) {
#pragma omp critical
                ok = false;
                break;
            }
        }
    }
    return ok;
}

const MobiusTable& mobius_table(int n, int cap) {
    if (n < 1 || n > cap) throw std::invalid_argument("mobius_table: n out of range");
    static std::mutex mtx;
    static std::map<int, std::unique_ptr<MobiusTable>> cache;
    std::lock_guard lock(mtx);
    auto& slot = cache[n];
    if (!slot) slot = std::make_unique<MobiusTable>(n);
    return *slot;
}

int ProductPartition::length() const {
    int l = 0;
    for (const auto& f : factors) l += f.length();
    return l;
}

bool ProductPartition::is_max() const {
    for (const auto& f : factors)
        if (f.length() != f.n) return false;
    return true;
}

std::vector<ProductPartition> enumerate_product(const std::vector<int>& sizes,
                                                long long budget) {
    long long count = 1;
    std::vector<const std::vector<SetPartition>*> lists;
    for (int n : sizes) {
        const auto& lat = mobius_table(n).partitions();
        count *= static_cast<long long>(lat.size());
        if (count > budget) throw std::domain_error("enumerate_product: budget exceeded");
        lists.push_back(&lat);
    }
    std::vector<ProductPartition> out;
    out.reserve(static_cast<std::size_t>(count));
    std::vector<std::size_t> idx(sizes.size(), 0);
    for (;;) {
        ProductPartition p;
        for (std::size_t f = 0; f < sizes.size(); ++f) p.factors.push_back((*lists[f])[idx[f]]);
        out.push_back(std::move(p));
        std::size_t f = sizes.size();
        while (f-- > 0) {
            if (++idx[f] < lists[f]->size()) break;
            idx[f] = 0;
            if (f == 0) return out;
        }
        if (sizes.empty()) return out;  // single empty element
    }
}

BigInt product_mobius_to_max(const ProductPartition& elem) {
    BigInt acc(1);
    for (const auto& f : elem.factors) {
        const MobiusTable& tab = mobius_table(f.n);
        acc *= BigInt(tab.mu(tab.index_of(f), tab.max_index()));
    }
    return acc;
}

namespace {

LaurentPoly falling_factorial(int l) {
    LaurentPoly p(BigInt(1));
    for (int i = 0; i < l; ++i) {
        LaurentPoly f = LaurentPoly::monomial(1, BigInt(1)) - LaurentPoly(BigInt(i));
        p = p * f;
    }
    return p;
}

}  // namespace

bool verify_falling_factorial(int n) {
    const MobiusTable& tab = mobius_table(n);
    const auto& parts = tab.partitions();
    for (std::size_t pi = 0; pi < parts.size(); ++pi) {
        // X^{l(pi)} = sum over refinements pi' >= pi of (X)_{l(pi')}
        LaurentPoly lhs = LaurentPoly::monomial(parts[pi].length(), BigInt(1));
        LaurentPoly rhs;
        for (std::size_t pj = 0; pj < parts.size(); ++pj)
            if (tab.zeta(pi, pj)) rhs = rhs + falling_factorial(parts[pj].length());
        if (!(lhs == rhs)) return false;
        // Moebius inversion: (X)_{l(pi)} = sum mu(pi', pi) X^{l(pi')}
        LaurentPoly lhs2 = falling_factorial(parts[pi].length());
        LaurentPoly rhs2;
        for (std::size_t pj = 0; pj <= pi; ++pj)
            if (tab.zeta(pj, pi))
                rhs2 = rhs2 + LaurentPoly::monomial(parts[pj].length(), BigInt(tab.mu(pj, pi)));
        if (!(lhs2 == rhs2)) return false;
    }
    return true;
}

bool verify_musum(const std::vector<int>& sizes, long long budget) {
    const int nvars = static_cast<int>(sizes.size());
    int order = 0;
    for (int s : sizes) order += s;
    auto var_pow = [&](int i, int e) {
        TruncSeries v = TruncSeries::variable(nvars, order, i);
        return v.pow_int(e);
    };
    TruncSeries lhs(nvars, order);
    for (const auto& pi : enumerate_product(sizes, budget)) {
        TruncSeries term =
            TruncSeries::constant(nvars, order, BigRat(product_mobius_to_max(pi)));
        for (int f = 0; f < nvars; ++f) term = term * var_pow(f, pi.factors[f].length());
        lhs = lhs + term;
    }
    TruncSeries rhs = TruncSeries::constant(nvars, order, BigRat(1));
    for (int f = 0; f < nvars; ++f) {
        TruncSeries ff = TruncSeries::constant(nvars, order, BigRat(1));
        for (int i = 0; i < sizes[f]; ++i) {
            TruncSeries lin =
                TruncSeries::variable(nvars, order, f) - TruncSeries::constant(nvars, order, BigRat(i));
            ff = ff * lin;
        }
        rhs = rhs * ff;
    }
    return lhs.agrees_with(rhs);
}

}  // namespace bethe0
