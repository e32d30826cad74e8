#include "gradus/monomial.hpp"

#include "gradus/error.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>

namespace gradus {

Monomial Monomial::variable(std::size_t num_vars, std::size_t index, unsigned power) {
    Monomial m(num_vars);
    m.exps_.at(index) = power;
    return m;
}

unsigned Monomial::degree() const noexcept {
    return std::accumulate(exps_.begin(), exps_.end(), 0U);
}

Monomial Monomial::operator*(const Monomial& other) const {
    if (other.exps_.size() != exps_.size()) throw InternalError("monomial product: variable count mismatch");
    Monomial out = *this;
    for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] += other.exps_[i];
    return out;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
    unsigned da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    return a.exponents() > b.exponents();
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (unsigned e : m.exponents()) {
        h ^= e + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

namespace {

void enumerate(std::size_t var, unsigned remaining, std::vector<unsigned>& exps, std::vector<Monomial>& out) {
    if (var + 1 == exps.size()) {
        exps[var] = remaining;
        out.emplace_back(exps);
        return;
    }
    for (unsigned e = remaining + 1; e-- > 0;) {
        exps[var] = e;
        enumerate(var + 1, remaining - e, exps, out);
    }
}

}  // namespace

MonomialBasis::MonomialBasis(std::size_t num_vars, unsigned degree) : num_vars_(num_vars), degree_(degree) {
    if (num_vars == 0) {
        if (degree == 0) monomials_.emplace_back(0);
    } else {
        std::vector<unsigned> exps(num_vars, 0);
        enumerate(0, degree, exps, monomials_);
    }
    index_.reserve(monomials_.size());
    weights_.reserve(monomials_.size());
    for (std::size_t i = 0; i < monomials_.size(); ++i) {
        index_.emplace(monomials_[i], i);
        std::uint64_t w = 1;
        for (unsigned e : monomials_[i].exponents())
            for (unsigned f = 2; f <= e; ++f) w *= f;
        weights_.push_back(w);
    }
}

const MonomialBasis& MonomialBasis::get(std::size_t num_vars, unsigned degree) {
    static std::mutex mutex;
    static std::map<std::pair<std::size_t, unsigned>, std::unique_ptr<MonomialBasis>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[{num_vars, degree}];
    if (!slot) slot.reset(new MonomialBasis(num_vars, degree));
    return *slot;
}

std::size_t MonomialBasis::index_of(const Monomial& m) const {
    auto it = index_.find(m);
    if (it == index_.end()) throw InternalError("monomial not in basis of requested degree");
    return it->second;
}

std::size_t graded_dim(std::size_t num_vars, unsigned degree) {
    if (num_vars == 0) return degree == 0 ? 1 : 0;
    // C(n + k, k) with n = num_vars - 1, computed incrementally to stay exact.
    std::size_t n = num_vars - 1;
    std::size_t result = 1;
    for (std::size_t i = 1; i <= n; ++i) result = result * (degree + i) / i;
    return result;
}

const std::vector<Monomial>& monomial_basis(std::size_t num_vars, unsigned degree) {
    return MonomialBasis::get(num_vars, degree).monomials();
}

}  // namespace gradus
