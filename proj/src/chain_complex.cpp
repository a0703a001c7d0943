#include "gmstab/chain_complex.hpp"

#include <sstream>

namespace gms {

ChainComplex::ChainComplex(RingSpec ring, std::vector<int> dims, std::vector<QMat> boundaries)
    : ring_(ring), dims_(std::move(dims)), boundaries_(std::move(boundaries)) {
    if (dims_.empty()) throw std::invalid_argument("ChainComplex: no degrees");
    if (boundaries_.size() + 1 != dims_.size())
        throw std::invalid_argument("ChainComplex: need one boundary per consecutive degree pair");
    for (int k = 1; k <= top(); ++k) {
        const QMat& b = boundaries_[k - 1];
        if (b.nrows() != dims_[k - 1] || b.ncols() != dims_[k])
            throw std::invalid_argument("ChainComplex: boundary shape mismatch at degree " +
                                        std::to_string(k));
    }
    if (ring_.is_integers()) {
        for (const QMat& b : boundaries_)
            if (!b.is_integral())
                throw std::invalid_argument("ChainComplex: non-integral boundary over Z");
    }
}

const QMat& ChainComplex::boundary(int k) const {
    if (k < 1 || k > top()) throw std::out_of_range("ChainComplex::boundary degree");
    return boundaries_[k - 1];
}

bool ChainComplex::boundaries_compose_to_zero() const {
    for (int k = 2; k <= top(); ++k) {
        if (!(boundary(k - 1) * boundary(k)).is_zero()) return false;
    }
    return true;
}

long long ChainComplex::euler_characteristic() const {
    long long chi = 0;
    for (int k = 0; k <= top(); ++k) chi += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(dims_[k]);
    return chi;
}

const std::vector<mpz_class>& HomologyResult::torsion(int k) const {
    static const std::vector<mpz_class> empty;
    if (k < 0 || k >= static_cast<int>(groups.size())) return empty;
    return groups[k].torsion;
}

std::string HomologyResult::to_string() const {
    std::ostringstream os;
    for (size_t k = 0; k < groups.size(); ++k) {
        if (k) os << ", ";
        os << "H" << k << "=";
        bool wrote = false;
        if (groups[k].free_rank > 0) {
            os << (ring.is_integers() ? "Z" : "k") << "^" << groups[k].free_rank;
            wrote = true;
        }
        for (const auto& t : groups[k].torsion) {
            if (wrote) os << "+";
            os << "Z/" << t.get_str();
            wrote = true;
        }
        if (!wrote) os << "0";
    }
    return os.str();
}

HomologyResult homology(const ChainComplex& c) {
    if (!c.boundaries_compose_to_zero())
        throw std::invalid_argument("homology: boundary maps do not compose to zero");
    HomologyResult res;
    res.ring = c.ring();
    int top = c.top();
    res.groups.resize(top + 1);

    // Ranks of each boundary map; index k = rank of d_k (degree k -> k-1).
    std::vector<int> rk(top + 2, 0);
    for (int k = 1; k <= top; ++k) {
        if (!c.has_boundary(k)) continue;
        rk[k] = c.ring().is_integers() ? rank_over(c.boundary(k), FieldSpec::rationals())
                                       : rank_over(c.boundary(k), c.ring().field);
    }
    for (int k = 0; k <= top; ++k) {
        res.groups[k].free_rank = c.dim(k) - rk[k] - rk[k + 1];
        if (c.ring().is_integers() && k < top && c.has_boundary(k + 1)) {
            for (const mpz_class& d : smith_diagonal(ZMat::from_qmat(c.boundary(k + 1))))
                if (d > 1) res.groups[k].torsion.push_back(d);
        }
    }
    return res;
}

}  // namespace gms
