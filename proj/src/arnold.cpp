#include "gmstab/arnold.hpp"

#include <algorithm>

#include "gmstab/linalg.hpp"

namespace gms {

namespace {

void check_pair(int r, int i, int j) {
    if (i < 1 || j < 1 || i > r || j > r || i == j)
        throw std::invalid_argument("ArnoldClass: malformed generator index");
}

// Straightens coeff * current * (pending factors) into out.  Every factor is
// already (a, b) with a < b.  The three-term relation rewrites a clash of two
// factors ending at b into terms whose multiset of second indices is strictly
// smaller, so the recursion terminates.
void accumulate(ArnoldMono current, std::vector<std::pair<int, int>> pending, mpz_class coeff,
                std::map<ArnoldMono, mpz_class>& out) {
    if (pending.empty()) {
        auto it = out.find(current);
        if (it == out.end()) {
            out.emplace(std::move(current), std::move(coeff));
        } else {
            it->second += coeff;
            if (it->second == 0) out.erase(it);
        }
        return;
    }
    auto [a, b] = pending.back();
    pending.pop_back();
    auto clash = std::find_if(current.begin(), current.end(),
                              [b = b](const std::pair<int, int>& f) { return f.second == b; });
    if (clash == current.end()) {
        auto pos = std::lower_bound(current.begin(), current.end(), std::make_pair(a, b),
                                    [](const std::pair<int, int>& x, const std::pair<int, int>& y) {
                                        return x.second < y.second;
                                    });
        current.insert(pos, {a, b});
        accumulate(std::move(current), std::move(pending), std::move(coeff), out);
        return;
    }
    int x = clash->first;
    if (x == a) return;  // square of a generator
    current.erase(clash);
    int c = std::min(a, x), d = std::max(a, x);
    // a_{cb} a_{db} = a_{cd} a_{db} - a_{cd} a_{cb}
    auto plus = pending;
    plus.push_back({c, d});
    plus.push_back({d, b});
    accumulate(current, std::move(plus), coeff, out);
    pending.push_back({c, d});
    pending.push_back({c, b});
    accumulate(std::move(current), std::move(pending), -coeff, out);
}

}  // namespace

void ArnoldClass::add_term(const ArnoldMono& m, const mpz_class& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void ArnoldClass::add_product(const std::vector<std::pair<int, int>>& factors, const mpz_class& c) {
    if (c == 0) return;
    std::vector<std::pair<int, int>> pending;
    mpz_class coeff = c;
    pending.reserve(factors.size());
    for (auto [i, j] : factors) {
        check_pair(r_, i, j);
        if (i > j) {
            std::swap(i, j);
            coeff = -coeff;
        }
        pending.push_back({i, j});
    }
    // accumulate consumes pending back to front.
    std::reverse(pending.begin(), pending.end());
    accumulate({}, std::move(pending), std::move(coeff), terms_);
}

ArnoldClass ArnoldClass::generator(int r, int i, int j, const mpz_class& c) {
    ArnoldClass out(r);
    out.add_product({{i, j}}, c);
    return out;
}

ArnoldClass ArnoldClass::one(int r) {
    ArnoldClass out(r);
    out.add_term({}, 1);
    return out;
}

mpz_class ArnoldClass::coeff(const ArnoldMono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

int ArnoldClass::degree() const {
    if (terms_.empty()) return -1;
    size_t k = terms_.begin()->first.size();
    for (const auto& [m, c] : terms_)
        if (m.size() != k) throw std::logic_error("ArnoldClass: mixed-degree class");
    return 2 * static_cast<int>(k);
}

ArnoldClass ArnoldClass::operator+(const ArnoldClass& o) const {
    if (r_ != o.r_) throw std::invalid_argument("ArnoldClass: point count mismatch");
    ArnoldClass out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, c);
    return out;
}

ArnoldClass ArnoldClass::operator-(const ArnoldClass& o) const {
    if (r_ != o.r_) throw std::invalid_argument("ArnoldClass: point count mismatch");
    ArnoldClass out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, -c);
    return out;
}

ArnoldClass ArnoldClass::operator*(const ArnoldClass& o) const {
    if (r_ != o.r_) throw std::invalid_argument("ArnoldClass: point count mismatch");
    ArnoldClass out(r_);
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) {
            std::vector<std::pair<int, int>> factors(m1);
            factors.insert(factors.end(), m2.begin(), m2.end());
            out.add_product(factors, c1 * c2);
        }
    return out;
}

ArnoldClass ArnoldClass::scaled(const mpz_class& c) const {
    ArnoldClass out(r_);
    if (c != 0)
        for (const auto& [m, v] : terms_) out.terms_.emplace(m, c * v);
    return out;
}

std::string ArnoldClass::to_string() const {
    if (terms_.empty()) return "0";
    auto mono_str = [](const ArnoldMono& m) -> std::string {
        if (m.empty()) return "1";
        std::string s;
        for (size_t t = 0; t < m.size(); ++t) {
            if (t) s += "*";
            if (m[t].first <= 9 && m[t].second <= 9)
                s += "a_" + std::to_string(m[t].first) + std::to_string(m[t].second);
            else
                s += "a_(" + std::to_string(m[t].first) + "," + std::to_string(m[t].second) + ")";
        }
        return s;
    };
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        mpz_class a = abs(c);
        if (first) {
            if (c < 0) s += "-";
            first = false;
        } else {
            s += c < 0 ? " - " : " + ";
        }
        if (a != 1 || m.empty()) {
            s += a.get_str();
            if (!m.empty()) s += "*";
        }
        if (!m.empty()) s += mono_str(m);
    }
    return s;
}

namespace {

void admissible_rec(int r, int k, int min_j, ArnoldMono& cur, std::vector<ArnoldMono>& out) {
    if (k == 0) {
        out.push_back(cur);
        return;
    }
    for (int j = min_j; j <= r; ++j)
        for (int i = 1; i < j; ++i) {
            cur.push_back({i, j});
            admissible_rec(r, k - 1, j + 1, cur, out);
            cur.pop_back();
        }
}

}  // namespace

std::vector<ArnoldMono> admissible_monomials(int r, int k) {
    if (k < 0) throw std::invalid_argument("admissible_monomials: negative factor count");
    std::vector<ArnoldMono> out;
    ArnoldMono cur;
    admissible_rec(r, k, 2, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

ArnoldClass perm_action(const Perm& sigma, const ArnoldClass& c) {
    if (sigma.size() != c.points()) throw std::invalid_argument("perm_action: size mismatch");
    Perm inv = sigma.inverse();
    ArnoldClass out(c.points());
    for (const auto& [m, v] : c.terms()) {
        std::vector<std::pair<int, int>> factors;
        factors.reserve(m.size());
        for (auto [i, j] : m) factors.push_back({inv(i - 1) + 1, inv(j - 1) + 1});
        out.add_product(factors, v);
    }
    return out;
}

QMat perm_action_matrix(const Perm& sigma, int r, int k) {
    std::vector<ArnoldMono> basis = admissible_monomials(r, k);
    std::map<ArnoldMono, int> idx;
    for (size_t t = 0; t < basis.size(); ++t) idx[basis[t]] = static_cast<int>(t);
    QMat a(static_cast<int>(basis.size()), static_cast<int>(basis.size()));
    for (size_t t = 0; t < basis.size(); ++t) {
        ArnoldClass cls(r);
        cls.add_product(basis[t], 1);
        ArnoldClass img = perm_action(sigma, cls);
        for (const auto& [m, v] : img.terms()) a.set(idx.at(m), static_cast<int>(t), mpq_class(v));
    }
    return a;
}

ArnoldClass stab_pullback(const ArnoldClass& c) {
    int r = c.points();
    if (r == 0) throw std::invalid_argument("stab_pullback: no points to forget");
    ArnoldClass out(r - 1);
    for (const auto& [m, v] : c.terms()) {
        bool killed = false;
        for (auto [i, j] : m)
            if (j == r) {
                killed = true;
                break;
            }
        if (!killed) out.add_product(m, v);
    }
    return out;
}

int arnold_invariants_dim(const SubgroupSpec& g, int r, int k) {
    if (g.n != r) throw std::invalid_argument("arnold_invariants_dim: group size mismatch");
    int n = static_cast<int>(admissible_monomials(r, k).size());
    if (g.gens.empty()) return n;
    QMat stack(static_cast<int>(g.gens.size()) * n, n);
    for (size_t t = 0; t < g.gens.size(); ++t) {
        QMat diff = perm_action_matrix(g.gens[t], r, k) - QMat::identity(n);
        stack.add_block(static_cast<int>(t) * n, 0, diff, 1);
    }
    return n - rank_over(stack, FieldSpec::rationals());
}

EulerClass gm_euler_class(const std::vector<long>& lambda, int j) {
    int r = static_cast<int>(lambda.size());
    if (j < 1 || j > r) throw std::invalid_argument("gm_euler_class: index out of range");
    for (long k : lambda)
        if (k < 0) throw std::invalid_argument("gm_euler_class: negative weight");
    EulerClass out;
    out.lambda = lambda;
    out.j = j;
    out.cls = ArnoldClass(r);
    for (int i = 1; i <= r; ++i) {
        if (i == j || lambda[i - 1] == 0) continue;
        out.cls.add_product({{i, j}}, mpz_class(lambda[i - 1]));
    }
    return out;
}

PullbackVerdicts verify_pullback_lemma(const std::vector<long>& lambda) {
    int r = static_cast<int>(lambda.size());
    if (r == 0) throw std::invalid_argument("verify_pullback_lemma: empty weight tuple");
    std::vector<long> trunc(lambda.begin(), lambda.end() - 1);
    PullbackVerdicts out;
    for (int j = 1; j <= r; ++j) {
        ArnoldClass pulled = stab_pullback(gm_euler_class(lambda, j).cls);
        bool ok = j == r ? pulled.is_zero() : pulled == gm_euler_class(trunc, j).cls;
        out.per_j.push_back(ok);
        out.all_hold = out.all_hold && ok;
    }
    return out;
}

ForgetfulWitness verify_forgetful_obstruction(const std::vector<long>& lambda, int r) {
    int n = static_cast<int>(lambda.size());
    if (r < 1 || r >= n) throw std::invalid_argument("verify_forgetful_obstruction: need 1 <= r < n");
    std::vector<long> trunc(lambda.begin(), lambda.begin() + r);
    ForgetfulWitness out;
    for (int j = 1; j <= r; ++j) {
        ArnoldClass full = gm_euler_class(lambda, j).cls;
        // The truncated class uses the same labels, so it embeds term-wise.
        // Keep the EulerClass alive across the loop; terms() borrows from it.
        ArnoldClass truncated = gm_euler_class(trunc, j).cls;
        ArnoldClass embedded(n);
        for (const auto& [m, v] : truncated.terms()) embedded.add_product(m, v);
        ArnoldClass diff = full - embedded;
        if (!diff.is_zero()) {
            out.found = true;
            out.j = j;
            out.witness = diff;
            return out;
        }
    }
    return out;
}

}  // namespace gms
