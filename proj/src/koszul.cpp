#include "gmstab/koszul.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "gmstab/linalg.hpp"

namespace gms {

namespace {

std::vector<std::vector<int>> subsets_of_size(int r, int s) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(cur.size()) == s) {
            out.push_back(cur);
            return;
        }
        for (int j = start; j <= r; ++j) {
            cur.push_back(j);
            rec(j + 1);
            cur.pop_back();
        }
    };
    rec(1);
    return out;
}

int sorted_sign(std::vector<int>& v) {
    int inv = 0;
    for (size_t i = 0; i < v.size(); ++i)
        for (size_t j = i + 1; j < v.size(); ++j)
            if (v[i] > v[j]) ++inv;
    std::sort(v.begin(), v.end());
    return inv % 2 == 0 ? 1 : -1;
}

void require_char_zero(const FieldSpec& field, const char* what) {
    if (field.characteristic() != 0)
        throw std::invalid_argument(std::string(what) + ": field must have characteristic 0");
}

}  // namespace

KoszulModel::KoszulModel(std::vector<long> lambda, int m_top) : lambda_(std::move(lambda)) {
    int rr = r();
    int full = rr == 0 ? 0 : 3 * rr - 2;
    m_top_ = m_top < 0 ? full : std::min(m_top, full);

    for (int j = 1; j <= rr; ++j) euler_.push_back(gm_euler_class(lambda_, j).cls);

    basis_.assign(m_top_ + 1, {});
    index_.assign(m_top_ + 1, {});
    for (int m = 0; m <= m_top_; ++m) {
        for (int s = std::min(rr, m); s >= 0; --s) {
            if ((m - s) % 2 != 0) continue;
            int k = (m - s) / 2;
            auto monos = admissible_monomials(rr, k);
            if (monos.empty()) continue;
            for (const auto& sub : subsets_of_size(rr, s))
                for (const auto& mono : monos) {
                    KoszulBasisElt e{mono, sub};
                    index_[m].emplace(e, static_cast<int>(basis_[m].size()));
                    basis_[m].push_back(std::move(e));
                }
        }
    }

    diff_.reserve(m_top_ + 1);
    for (int m = 0; m <= m_top_; ++m) {
        QMat dm(dim(m + 1), dim(m));
        if (m < m_top_) {
            for (int col = 0; col < dim(m); ++col) {
                const KoszulBasisElt& e = basis_[m][col];
                for (size_t a = 0; a < e.subset.size(); ++a) {
                    int j = e.subset[a];
                    int sgn = a % 2 == 0 ? 1 : -1;
                    ArnoldClass prod(rr);
                    for (const auto& [tm, tc] : euler_[j - 1].terms()) {
                        std::vector<std::pair<int, int>> factors = e.mono;
                        factors.insert(factors.end(), tm.begin(), tm.end());
                        prod.add_product(factors, tc);
                    }
                    std::vector<int> sub = e.subset;
                    sub.erase(sub.begin() + static_cast<long>(a));
                    for (const auto& [pm, pc] : prod.terms()) {
                        auto it = index_[m + 1].find(KoszulBasisElt{pm, sub});
                        if (it == index_[m + 1].end())
                            throw std::logic_error("KoszulModel: differential left the basis");
                        dm.add(it->second, col, mpq_class(pc) * sgn);
                    }
                }
            }
        }
        diff_.push_back(std::move(dm));
    }

    for (int m = 0; m + 2 <= m_top_; ++m)
        if (!(diff_[m + 1] * diff_[m]).is_zero())
            throw std::logic_error("KoszulModel: differential does not square to zero");
}

const QMat& KoszulModel::differential(int m) const {
    if (m < 0 || m > m_top_) throw std::out_of_range("KoszulModel::differential");
    return diff_[m];
}

QMat KoszulModel::action(const Perm& sigma, int m) const {
    if (sigma.size() != r()) throw std::invalid_argument("KoszulModel::action: size mismatch");
    QMat a(dim(m), dim(m));
    Perm inv = sigma.inverse();
    for (int col = 0; col < dim(m); ++col) {
        const KoszulBasisElt& e = basis_[m][col];
        ArnoldClass c(r());
        c.add_product(e.mono, 1);
        ArnoldClass img = perm_action(sigma, c);
        std::vector<int> sub;
        for (int j : e.subset) sub.push_back(inv(j - 1) + 1);
        int sgn = sorted_sign(sub);
        for (const auto& [pm, pc] : img.terms()) {
            auto it = index_[m].find(KoszulBasisElt{pm, sub});
            if (it == index_[m].end())
                throw std::logic_error("KoszulModel::action: image left the basis");
            a.add(it->second, col, mpq_class(pc) * sgn);
        }
    }
    return a;
}

SubgroupSpec lambda_group(const std::vector<long>& lambda) {
    int r = static_cast<int>(lambda.size());
    std::map<long, std::vector<int>> by_weight;
    for (int i = 0; i < r; ++i) by_weight[lambda[i]].push_back(i);
    std::vector<std::vector<int>> classes;
    for (auto& [w, idxs] : by_weight) {
        (void)w;
        classes.push_back(std::move(idxs));
    }
    return SubgroupSpec::young(r, classes);
}

std::vector<long> extend_weights(const std::vector<long>& lambda, long c, int n) {
    if (n < 0) throw std::invalid_argument("extend_weights: negative point count");
    std::vector<long> out = lambda;
    out.insert(out.end(), static_cast<size_t>(n), c);
    return out;
}

namespace {

// Betti of degrees 0..m_max from a model built through m_max+1; with a group,
// betti of the invariant subcomplex via the averaging projector.
std::vector<int> betti_of(const KoszulModel& model, int m_max, const FieldSpec& field,
                          const std::optional<SubgroupSpec>& invariants) {
    std::vector<QMat> proj;  // per degree, when invariants requested
    std::vector<Perm> elems;
    if (invariants) {
        if (invariants->n != model.r())
            throw std::invalid_argument("koszul invariants: group degree must match point count");
        elems = invariants->elements();
    }
    int built_top = model.m_top();
    auto projector = [&](int m) {
        QMat p(model.dim(m), model.dim(m));
        for (const Perm& g : elems) p = p + model.action(g, m);
        return p.scaled(mpq_class(1, static_cast<unsigned long>(elems.size())));
    };
    if (invariants)
        for (int m = 0; m <= std::min(m_max + 1, built_top); ++m) proj.push_back(projector(m));

    auto rank_d = [&](int m) {
        if (m < 0 || m >= built_top) return 0;  // past the cap the true rank needs piece m+1
        if (!invariants) return rank_over(model.differential(m), field);
        return rank_over(model.differential(m) * proj[m], field);
    };
    auto dim_at = [&](int m) {
        if (m < 0 || m > built_top) return 0;
        if (!invariants) return model.dim(m);
        mpq_class tr = 0;
        for (int i = 0; i < model.dim(m); ++i) tr += proj[m].get(i, i);
        mpz_class num = tr.get_num(), den = tr.get_den();
        if (den != 1) throw std::logic_error("koszul invariants: non-integral projector trace");
        return static_cast<int>(num.get_si());
    };

    std::vector<int> betti(m_max + 1, 0);
    for (int m = 0; m <= m_max; ++m) {
        if (m > built_top) continue;
        if (m == built_top && built_top < (model.r() == 0 ? 0 : 3 * model.r() - 2))
            throw std::logic_error("koszul betti: degree not covered by the built range");
        betti[m] = dim_at(m) - rank_d(m) - rank_d(m - 1);
    }
    return betti;
}

}  // namespace

GradedBettiTable koszul_cohomology(const std::vector<long>& lambda, const FieldSpec& field,
                                   const std::optional<SubgroupSpec>& invariants) {
    require_char_zero(field, "koszul_cohomology");
    KoszulModel model(lambda, -1);
    std::vector<int> betti = betti_of(model, model.m_top(), field, invariants);
    while (betti.size() > 1 && betti.back() == 0) betti.pop_back();
    return GradedBettiTable(std::move(betti));
}

std::vector<int> koszul_betti_range(const std::vector<long>& lambda, int m_max,
                                    const FieldSpec& field,
                                    const std::optional<SubgroupSpec>& invariants) {
    require_char_zero(field, "koszul_betti_range");
    if (m_max < 0) throw std::invalid_argument("koszul_betti_range: negative degree cap");
    KoszulModel model(lambda, m_max + 1);
    return betti_of(model, m_max, field, invariants);
}

}  // namespace gms
