#include "gmstab/fox_neuwirth.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "gmstab/linalg.hpp"

namespace gms {

namespace {

// Splits the run of positions [lo..hi] into maximal blocks whose internal
// separators all exceed v+1.  Separators equal to v+1 are the cut points;
// run membership already guarantees every internal separator is > v.
std::vector<std::pair<int, int>> split_subruns(const std::vector<int>& w, int lo, int hi, int v) {
    std::vector<std::pair<int, int>> out;
    int start = lo;
    for (int j = lo; j < hi; ++j)
        if (w[j] == v + 1) {
            out.push_back({start, j});
            start = j + 1;
        }
    out.push_back({start, hi});
    return out;
}

// All merges of the two subrun lists keeping each side's internal order.
// Same-side neighbours are legal: their separator is already v+1.
void riffles(const std::vector<std::pair<int, int>>& lruns,
             const std::vector<std::pair<int, int>>& rruns, size_t li, size_t ri,
             std::vector<std::pair<int, int>>& acc,
             std::vector<std::vector<std::pair<int, int>>>& out) {
    if (li == lruns.size() && ri == rruns.size()) {
        out.push_back(acc);
        return;
    }
    if (li < lruns.size()) {
        acc.push_back(lruns[li]);
        riffles(lruns, rruns, li + 1, ri, acc, out);
        acc.pop_back();
    }
    if (ri < rruns.size()) {
        acc.push_back(rruns[ri]);
        riffles(lruns, rruns, li, ri + 1, acc, out);
        acc.pop_back();
    }
}

struct FaceBuild {
    FNCell cell;
    std::vector<int> pos_f;  // original position -> face position
};

// Reassembles the window [a..b]: subrun blocks in the given order, original
// separators inside each block, v+1 at the junctions, everything outside the
// window untouched.
FaceBuild make_face(const FNCell& c, int a, int b, int v,
                    const std::vector<std::pair<int, int>>& order) {
    int n = c.tau.size();
    std::vector<int> tau_f = c.tau.image();
    std::vector<int> w_f = c.w;
    std::vector<int> pos_f(n);
    std::iota(pos_f.begin(), pos_f.end(), 0);
    int pos = a;
    for (size_t k = 0; k < order.size(); ++k) {
        auto [lo, hi] = order[k];
        for (int t = lo; t <= hi; ++t) {
            tau_f[pos] = c.tau(t);
            pos_f[t] = pos;
            if (t < hi) w_f[pos] = c.w[t];
            ++pos;
        }
        if (k + 1 < order.size()) w_f[pos - 1] = v + 1;
    }
    if (pos != b + 1) throw std::logic_error("fn faces: window reassembly out of step");
    return FaceBuild{FNCell{Perm(std::move(tau_f)), std::move(w_f)}, std::move(pos_f)};
}

// Orientation sign of a face, by tracking how the stratum coordinates map to
// the face coordinates.  Coordinates are symbols (position, depth index c)
// with c running from d - w_left(position) down to 1; the collapsed direction
// of the merged gap disappears, every other symbol lands on the leading
// position of its merged block in the face.  The sign is the parity of the
// induced coordinate shuffle, with the collapsed direction ordered first on
// the face side.
int face_sign(const FNCell& c, const FNCell& f, const std::vector<int>& pos_f, int gap, int v,
              int d) {
    int n = c.tau.size();
    auto left_depth = [](const FNCell& cell, int t) { return t == 0 ? 0 : cell.w[t - 1]; };

    std::vector<int> target_index;  // source symbol order -> target list position
    std::map<std::pair<int, int>, int> f_index;
    int next = 1;  // index 0 is the collapsed direction
    for (int t = 0; t < n; ++t)
        for (int cc = d - left_depth(f, t); cc >= 1; --cc) f_index[{t, cc}] = next++;

    for (int t = 0; t < n; ++t)
        for (int cc = d - left_depth(c, t); cc >= 1; --cc) {
            if (t == gap + 1 && cc == d - v) {
                target_index.push_back(0);
                continue;
            }
            int k = pos_f[t];
            while (k > 0 && f.w[k - 1] >= d - cc + 1) --k;
            auto it = f_index.find({k, cc});
            if (it == f_index.end()) throw std::logic_error("fn faces: unmatched coordinate symbol");
            target_index.push_back(it->second);
        }
    if (static_cast<int>(target_index.size()) != next)
        throw std::logic_error("fn faces: coordinate count mismatch");
    std::vector<char> seen(next, 0);
    for (int x : target_index) {
        if (seen[x]) throw std::logic_error("fn faces: coordinate map not bijective");
        seen[x] = 1;
    }
    int inv = 0;
    for (size_t s = 0; s < target_index.size(); ++s)
        for (size_t t = s + 1; t < target_index.size(); ++t)
            if (target_index[s] > target_index[t]) ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

}  // namespace

std::vector<std::pair<int, FNCell>> fn_cell_faces(const FNCell& c, int d) {
    int n = c.tau.size();
    std::vector<std::pair<int, FNCell>> out;
    for (int i = 0; i + 1 < n; ++i) {
        int v = c.w[i];
        if (v > d - 2) continue;
        int a = i;
        while (a > 0 && c.w[a - 1] > v) --a;
        int b = i + 1;
        while (b < n - 1 && c.w[b] > v) ++b;
        auto lruns = split_subruns(c.w, a, i, v);
        auto rruns = split_subruns(c.w, i + 1, b, v);
        std::vector<std::vector<std::pair<int, int>>> orders;
        std::vector<std::pair<int, int>> acc;
        riffles(lruns, rruns, 0, 0, acc, orders);
        for (const auto& order : orders) {
            FaceBuild fb = make_face(c, a, b, v, order);
            int s = face_sign(c, fb.cell, fb.pos_f, i, v, d);
            out.push_back({s, std::move(fb.cell)});
        }
    }
    return out;
}

FNSkeleton::FNSkeleton(int n, int d, SubgroupSpec group) : n_(n), d_(d), group_(std::move(group)) {
    if (n_ < 0) throw std::invalid_argument("FNSkeleton: negative point count");
    if (d_ < 1) throw std::invalid_argument("FNSkeleton: ambient dimension must be at least 1");
    if (group_.n != n_) throw std::invalid_argument("FNSkeleton: group degree must match point count");
    young_ = group_.product_structure;
    if (young_) {
        class_of_.assign(n_, -1);
        class_labels_ = group_.classes;
        for (size_t ci = 0; ci < class_labels_.size(); ++ci)
            for (int x : class_labels_[ci]) class_of_[x] = static_cast<int>(ci);
    } else {
        elements_ = group_.elements();
    }

    std::vector<Perm> reps;
    for (const Perm& t : all_permutations(n_))
        if (canonical(t).first == t) reps.push_back(t);

    int tp = top();
    std::vector<std::vector<std::vector<int>>> by_p(tp + 1);
    std::vector<int> w(std::max(0, n_ - 1), 0);
    for (;;) {
        int s = std::accumulate(w.begin(), w.end(), 0);
        by_p[s].push_back(w);
        size_t j = 0;
        while (j < w.size() && w[j] == d_ - 1) w[j++] = 0;
        if (j == w.size()) break;
        ++w[j];
    }

    cells_.assign(tp + 1, {});
    index_.assign(tp + 1, {});
    for (int p = 0; p <= tp; ++p)
        for (const auto& wv : by_p[p])
            for (const Perm& t : reps) {
                FNCell c{t, wv};
                index_[p].emplace(c, static_cast<int>(cells_[p].size()));
                cells_[p].push_back(std::move(c));
            }

    faces_.assign(tp + 1, {});
    for (int p = 0; p <= tp; ++p) {
        faces_[p].resize(cells_[p].size());
        for (size_t ci = 0; ci < cells_[p].size(); ++ci)
            for (auto& [s, f] : fn_cell_faces(cells_[p][ci], d_)) {
                auto [idx, g] = locate(f);
                faces_[p][ci].push_back(FNFace{idx, s, std::move(g)});
            }
    }
}

std::pair<Perm, Perm> FNSkeleton::canonical(const Perm& tau) const {
    if (young_) {
        std::vector<size_t> next(class_labels_.size(), 0);
        std::vector<int> rep(n_), gimg(n_);
        for (int i = 0; i < n_; ++i) {
            int cls = class_of_[tau(i)];
            int lbl = class_labels_[cls][next[cls]++];
            rep[i] = lbl;
            gimg[tau(i)] = lbl;
        }
        return {Perm(std::move(rep)), Perm(std::move(gimg))};
    }
    size_t best = 0;
    Perm best_img = elements_[0] * tau;
    for (size_t e = 1; e < elements_.size(); ++e) {
        Perm cand = elements_[e] * tau;
        if (cand.image() < best_img.image()) {
            best_img = std::move(cand);
            best = e;
        }
    }
    return {best_img, elements_[best]};
}

std::pair<int, Perm> FNSkeleton::locate(const FNCell& c) const {
    int p = std::accumulate(c.w.begin(), c.w.end(), 0);
    auto [rep, g] = canonical(c.tau);
    auto it = index_.at(p).find(FNCell{rep, c.w});
    if (it == index_.at(p).end()) throw std::logic_error("FNSkeleton: cell not indexed");
    return {it->second, g};
}

ChainComplex fn_complex_over(const FNSkeleton& sk, const SigmaModule& m, RingSpec ring) {
    if (m.group().n != sk.n())
        throw std::invalid_argument("fn_complex_over: module group degree mismatch");
    int md = m.dim();
    int tp = sk.top();
    std::vector<int> dims(tp + 1);
    for (int p = 0; p <= tp; ++p) dims[p] = static_cast<int>(sk.cells(p).size()) * md;

    std::vector<QMat> bnd;
    for (int k = 1; k <= tp; ++k) bnd.emplace_back(dims[k - 1], dims[k]);

    // Row block a of the degree p+1 -> p matrix collects the faces of orbit
    // cell a; each face contributes its shuffle sign, the orientation
    // character of the canonicalizing element, and the transposed module
    // action (chains on the quotient are coinvariants).
    for (int p = 0; p < tp; ++p) {
        QMat& B = bnd[p];
        const auto& face_lists = sk.faces(p);
        for (size_t a = 0; a < face_lists.size(); ++a)
            for (const FNFace& f : face_lists[a]) {
                int s = f.sign;
                if (sk.d() % 2 != 0) s *= f.g.sign();
                B.add_block(static_cast<int>(a) * md, f.cell * md, m.act(f.g).transposed(), s);
            }
    }

    ChainComplex c(ring, std::move(dims), std::move(bnd));
    if (!c.boundaries_compose_to_zero())
        throw std::logic_error("fn_complex_over: boundary maps do not compose to zero");
    return c;
}

ChainComplex fn_complex(const ConfigSpec& spec) {
    if (spec.d < 2) throw std::invalid_argument("fn_complex: ambient dimension must be at least 2");
    FNSkeleton sk(spec.n, spec.d, spec.group);
    return fn_complex_over(sk, spec.coeff, spec.ring);
}

HomologyResult homology_config(const ConfigSpec& spec) { return homology(fn_complex(spec)); }

StabChainMap build_stab_chain_map(const FNSkeleton& src, const SigmaModule& m_src,
                                  const ChainComplex& c_src, const FNSkeleton& tgt,
                                  const SigmaModule& m_tgt, const ChainComplex& c_tgt,
                                  const QMat& coeff_map) {
    int n = src.n();
    if (tgt.n() != n + 1) throw std::invalid_argument("stab map: target must have one more point");
    if (tgt.d() != src.d()) throw std::invalid_argument("stab map: ambient dimension mismatch");
    int md_src = m_src.dim(), md_tgt = m_tgt.dim();
    if (coeff_map.nrows() != md_tgt || coeff_map.ncols() != md_src)
        throw std::invalid_argument("stab map: coefficient map shape mismatch");
    // The new point keeps the old group: generators must extend compatibly
    // through the coefficient map.
    for (const Perm& g : src.group().gens) {
        Perm gx = g.extended(1);
        if (!tgt.group().contains(gx))
            throw std::invalid_argument("stab map: extended generator leaves the target group");
        if (!(coeff_map * m_src.act(g) == m_tgt.act(gx) * coeff_map))
            throw std::invalid_argument("stab map: coefficient map is not equivariant");
    }

    int d = src.d();
    StabChainMap out;
    for (int p = 0; p <= src.top(); ++p) {
        QMat f(c_tgt.dim(p), c_src.dim(p));
        int sp = (d * p) % 2 == 0 ? 1 : -1;
        const auto& cells = src.cells(p);
        for (size_t a = 0; a < cells.size(); ++a) {
            const FNCell& c = cells[a];
            // New point gets the fresh label n, first in the sort order, at
            // separation depth 0.
            std::vector<int> tau_plus(n + 1);
            tau_plus[0] = n;
            for (int i = 0; i < n; ++i) tau_plus[i + 1] = c.tau(i);
            std::vector<int> w_plus(n, 0);
            for (int i = 0; i + 1 < n; ++i) w_plus[i + 1] = c.w[i];
            auto [idx, g] = tgt.locate(FNCell{Perm(std::move(tau_plus)), std::move(w_plus)});
            int s = sp;
            if (d % 2 != 0) s *= g.sign();
            f.add_block(idx * md_tgt, static_cast<int>(a) * md_src, m_tgt.act(g) * coeff_map, s);
        }
        out.maps.push_back(std::move(f));
    }

    out.commutes = true;
    for (int p = 1; p <= src.top(); ++p) {
        if (c_src.dim(p) == 0) continue;
        if (!(out.maps[p - 1] * c_src.boundary(p) == c_tgt.boundary(p) * out.maps[p])) {
            out.commutes = false;
            break;
        }
    }
    return out;
}

StabChainMap stab_chain_map(const FNSkeleton& src, const SigmaModule& m_src,
                            const ChainComplex& c_src, const FNSkeleton& tgt,
                            const SigmaModule& m_tgt, const ChainComplex& c_tgt,
                            const QMat& coeff_map) {
    StabChainMap m = build_stab_chain_map(src, m_src, c_src, tgt, m_tgt, c_tgt, coeff_map);
    if (!m.commutes) throw std::logic_error("stab map: chain map does not commute with boundaries");
    return m;
}

int induced_homology_rank(const ChainComplex& src, const ChainComplex& tgt, const QMat& f_p, int p,
                          const FieldSpec& field) {
    if (p < 0 || p > src.top() || src.dim(p) == 0) return 0;
    if (p > tgt.top() || tgt.dim(p) == 0) return 0;
    QMat cycles = p == 0 || !src.has_boundary(p) ? QMat::identity(src.dim(p))
                                                 : kernel_basis(src.boundary(p), field);
    QMat image = f_p * cycles;
    QMat bnd = p + 1 <= tgt.top() && tgt.has_boundary(p + 1) ? tgt.boundary(p + 1)
                                                             : QMat(tgt.dim(p), 0);
    return rank_added(image, bnd, field);
}

}  // namespace gms
