#include "gmstab/sigma_module.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "gmstab/linalg.hpp"

namespace gms {

namespace {

void enumerate_tuples(const std::vector<const GradedBettiTable*>& tables, int slot, int remaining,
                      KunnethBasis::Tuple& cur, std::vector<KunnethBasis::Tuple>& out) {
    if (slot == static_cast<int>(tables.size())) {
        if (remaining == 0) out.push_back(cur);
        return;
    }
    const GradedBettiTable& t = *tables[slot];
    for (int d = 0; d <= std::min(remaining, t.top()); ++d) {
        for (int i = 0; i < t.dim(d); ++i) {
            cur.push_back({d, i});
            enumerate_tuples(tables, slot + 1, remaining - d, cur, out);
            cur.pop_back();
        }
    }
}

}  // namespace

KunnethBasis::KunnethBasis(std::vector<GradedBettiTable> factors, std::optional<GradedBettiTable> y, int q)
    : factors_(std::move(factors)), y_(std::move(y)), q_(q) {
    if (q < 0) throw std::invalid_argument("KunnethBasis: negative degree");
    std::vector<const GradedBettiTable*> tables;
    tables.reserve(factors_.size() + 1);
    for (const auto& f : factors_) tables.push_back(&f);
    if (y_) tables.push_back(&*y_);
    Tuple cur;
    enumerate_tuples(tables, 0, q_, cur, tuples_);
    for (int i = 0; i < static_cast<int>(tuples_.size()); ++i) index_[tuples_[i]] = i;
}

int KunnethBasis::index_of(const Tuple& t) const {
    auto it = index_.find(t);
    if (it == index_.end()) throw std::invalid_argument("KunnethBasis: tuple not in basis");
    return it->second;
}

std::pair<int, int> KunnethBasis::image_of(const Perm& sigma, int i) const {
    if (sigma.size() != num_factors())
        throw std::invalid_argument("KunnethBasis: permutation size mismatch");
    const Tuple& src = tuples_[i];
    Tuple dst = src;
    int m = num_factors();
    for (int s = 0; s < m; ++s) dst[sigma(s)] = src[s];
    // Koszul sign: -1 for each inversion between two odd-degree classes.
    int sign = 1;
    for (int s = 0; s < m; ++s) {
        if (src[s].first % 2 == 0) continue;
        for (int t = s + 1; t < m; ++t) {
            if (src[t].first % 2 == 0) continue;
            if (sigma(s) > sigma(t)) sign = -sign;
        }
    }
    return {index_of(dst), sign};
}

QMat KunnethBasis::action_matrix(const Perm& sigma) const {
    QMat a(dim(), dim());
    for (int i = 0; i < dim(); ++i) {
        auto [j, sign] = image_of(sigma, i);
        a.set(j, i, mpq_class(sign));
    }
    return a;
}

SigmaModule::SigmaModule(SubgroupSpec group, RingSpec ring, int dim, std::vector<QMat> gen_action)
    : group_(std::move(group)), ring_(ring), dim_(dim), gen_action_(std::move(gen_action)) {
    if (dim < 0) throw std::invalid_argument("SigmaModule: negative dimension");
    if (gen_action_.size() != group_.gens.size())
        throw std::invalid_argument("SigmaModule: one action matrix per generator required");
    for (const auto& a : gen_action_)
        if (a.nrows() != dim_ || a.ncols() != dim_)
            throw std::invalid_argument("SigmaModule: action matrix shape mismatch");
}

const QMat& SigmaModule::act(const Perm& g) const {
    if (g.size() != group_.n) throw std::invalid_argument("SigmaModule: permutation size mismatch");
    auto it = cache_.find(g.image());
    if (it != cache_.end()) return it->second;
    if (evaluator_) {
        auto [pos, ok] = cache_.emplace(g.image(), evaluator_(g));
        (void)ok;
        return pos->second;
    }
    return closure_lookup(g);
}

void SigmaModule::build_closure() const {
    std::deque<Perm> queue;
    Perm id = Perm::identity(group_.n);
    cache_.emplace(id.image(), QMat::identity(dim_));
    queue.push_back(id);
    while (!queue.empty()) {
        Perm h = queue.front();
        queue.pop_front();
        const QMat mh = cache_.at(h.image());
        for (size_t k = 0; k < group_.gens.size(); ++k) {
            Perm p = group_.gens[k] * h;
            QMat mp = gen_action_[k] * mh;
            auto it = cache_.find(p.image());
            if (it == cache_.end()) {
                cache_.emplace(p.image(), std::move(mp));
                queue.push_back(p);
            } else if (!(it->second == mp)) {
                throw std::logic_error("SigmaModule: generator matrices violate the group relations");
            }
        }
    }
}

const QMat& SigmaModule::closure_lookup(const Perm& g) const {
    if (cache_.empty() || cache_.find(Perm::identity(group_.n).image()) == cache_.end()) build_closure();
    auto it = cache_.find(g.image());
    if (it == cache_.end()) throw std::invalid_argument("SigmaModule: element not in the group");
    return it->second;
}

void SigmaModule::validate() const {
    for (const auto& a : gen_action_) {
        if (rank_over(a, FieldSpec::rationals()) != dim_)
            throw std::logic_error("SigmaModule: generator action matrix is singular");
        if (ring_.kind == RingSpec::Kind::Integers && !a.is_integral())
            throw std::logic_error("SigmaModule: non-integral action matrix over Z");
    }
    // Closure over generator words checks every relation in the
    // multiplication table; conflicts throw inside build_closure.
    std::map<std::vector<int>, QMat> saved;
    saved.swap(cache_);
    build_closure();
    if (evaluator_) {
        for (const auto& [img, mat] : cache_) {
            Perm g(img);
            if (!(evaluator_(g) == mat))
                throw std::logic_error("SigmaModule: evaluator disagrees with generator matrices");
        }
    }
}

SigmaModule trivial_module(SubgroupSpec g, RingSpec ring) {
    std::vector<QMat> acts(g.gens.size(), QMat::identity(1));
    SigmaModule m(std::move(g), ring, 1, std::move(acts));
    m.set_evaluator([](const Perm&) { return QMat::identity(1); });
    return m;
}

SigmaModule sign_module(SubgroupSpec g, RingSpec ring) {
    std::vector<QMat> acts;
    acts.reserve(g.gens.size());
    for (const auto& s : g.gens) {
        QMat a(1, 1);
        a.set(0, 0, mpq_class(s.sign()));
        acts.push_back(a);
    }
    SigmaModule m(std::move(g), ring, 1, std::move(acts));
    m.set_evaluator([](const Perm& p) {
        QMat a(1, 1);
        a.set(0, 0, mpq_class(p.sign()));
        return a;
    });
    return m;
}

SigmaModule permutation_module(int n, RingSpec ring) {
    SubgroupSpec g = SubgroupSpec::full(n);
    std::vector<QMat> acts;
    for (const auto& s : g.gens) {
        QMat a(n, n);
        for (int i = 0; i < n; ++i) a.set(s(i), i, mpq_class(1));
        acts.push_back(a);
    }
    SigmaModule m(std::move(g), ring, n, std::move(acts));
    m.set_evaluator([n](const Perm& p) {
        QMat a(n, n);
        for (int i = 0; i < n; ++i) a.set(p(i), i, mpq_class(1));
        return a;
    });
    return m;
}

namespace {

SigmaModule kunneth_module(SubgroupSpec group, KunnethBasis kb, FieldSpec field) {
    std::vector<QMat> acts;
    acts.reserve(group.gens.size());
    for (const auto& s : group.gens) acts.push_back(kb.action_matrix(s));
    SigmaModule m(std::move(group), RingSpec::over(field), kb.dim(), std::move(acts));
    m.set_evaluator([kb = std::move(kb)](const Perm& p) { return kb.action_matrix(p); });
    return m;
}

}  // namespace

SigmaModule graded_power_module(const GradedBettiTable& z, int n, int q, FieldSpec field) {
    if (n < 0) throw std::invalid_argument("graded_power_module: negative exponent");
    std::vector<GradedBettiTable> factors(n, z);
    return kunneth_module(SubgroupSpec::full(n), KunnethBasis(std::move(factors), std::nullopt, q), field);
}

SubgroupSpec fiber_group(const std::vector<long>& lambda, int n) {
    int r = static_cast<int>(lambda.size());
    std::vector<std::vector<int>> classes;
    std::map<long, std::vector<int>> by_charge;
    for (int i = 0; i < r; ++i) by_charge[lambda[i]].push_back(i);
    for (auto& [charge, idxs] : by_charge) {
        (void)charge;
        if (idxs.size() > 1) classes.push_back(idxs);
    }
    if (n > 1) {
        std::vector<int> block(n);
        for (int i = 0; i < n; ++i) block[i] = r + i;
        classes.push_back(block);
    }
    return SubgroupSpec::young(r + n, classes);
}

KunnethBasis fiber_basis(const std::vector<long>& lambda, long c, int n,
                         const std::map<long, GradedBettiTable>& betti_per_charge,
                         const GradedBettiTable& y, int q) {
    if (n < 0) throw std::invalid_argument("fiber_module: negative point count");
    for (long k : lambda)
        if (k <= 0) throw std::invalid_argument("fiber_module: weights must be positive");
    if (c <= 0) throw std::invalid_argument("fiber_module: charge must be positive");
    std::vector<GradedBettiTable> factors;
    auto table_for = [&](long charge) -> const GradedBettiTable& {
        auto it = betti_per_charge.find(charge);
        if (it == betti_per_charge.end())
            throw std::invalid_argument("fiber_module: no Betti table for charge " + std::to_string(charge));
        if (it->second.dim(0) != 1)
            throw std::invalid_argument("fiber_module: factor Betti table must have b_0 = 1");
        return it->second;
    };
    for (long k : lambda) factors.push_back(table_for(k));
    for (int i = 0; i < n; ++i) factors.push_back(table_for(c));
    if (y.dim(0) != 1) throw std::invalid_argument("fiber_module: Y Betti table must have b_0 = 1");
    return KunnethBasis(std::move(factors), y, q);
}

SigmaModule fiber_module(const std::vector<long>& lambda, long c, int n,
                         const std::map<long, GradedBettiTable>& betti_per_charge,
                         const GradedBettiTable& y, int q, FieldSpec field) {
    return kunneth_module(fiber_group(lambda, n),
                          fiber_basis(lambda, c, n, betti_per_charge, y, q), field);
}

int invariants_dim(const SigmaModule& m) {
    std::vector<Perm> elems = m.group().elements();
    long order = static_cast<long>(elems.size());
    unsigned long ch = m.ring().kind == RingSpec::Kind::Integers ? 0 : m.ring().field.characteristic();
    if (ch != 0 && order % static_cast<long>(ch) == 0)
        throw std::domain_error("invariants_dim: coefficient characteristic divides the group order");
    QMat p(m.dim(), m.dim());
    for (const auto& g : elems) p = p + m.act(g);
    p = p.scaled(mpq_class(1, order));
    if (ch == 0) {
        // Averaging projector is idempotent, so its trace equals its rank.
        mpq_class tr = 0;
        for (int i = 0; i < m.dim(); ++i) tr += p.get(i, i);
        if (tr.get_den() != 1) throw std::logic_error("invariants_dim: non-integral projector trace");
        return static_cast<int>(tr.get_num().get_si());
    }
    return rank_over(p, m.ring().field);
}

}  // namespace gms
