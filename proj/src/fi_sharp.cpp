#include "gmstab/fi_sharp.hpp"

#include <algorithm>
#include <stdexcept>

#include "gmstab/linalg.hpp"

namespace gms {

FISharpModule::FISharpModule(FieldSpec field, std::vector<int> dims, std::vector<QMat> iota,
                             std::vector<QMat> deletion, std::vector<std::vector<QMat>> perm_gens)
    : field_(field),
      dims_(std::move(dims)),
      iota_(std::move(iota)),
      del_(std::move(deletion)),
      gens_(std::move(perm_gens)) {
    if (dims_.empty()) throw std::invalid_argument("FISharpModule: empty range");
    int nmax = n_max();
    if (static_cast<int>(iota_.size()) != nmax || static_cast<int>(del_.size()) != nmax ||
        static_cast<int>(gens_.size()) != nmax + 1)
        throw std::invalid_argument("FISharpModule: structure map count mismatch");
    for (int n = 0; n < nmax; ++n) {
        if (iota_[n].nrows() != dims_[n + 1] || iota_[n].ncols() != dims_[n])
            throw std::invalid_argument("FISharpModule: insertion shape mismatch");
        if (del_[n].nrows() != dims_[n] || del_[n].ncols() != dims_[n + 1])
            throw std::invalid_argument("FISharpModule: deletion shape mismatch");
    }
    for (int n = 0; n <= nmax; ++n) {
        if (static_cast<int>(gens_[n].size()) != std::max(0, n - 1))
            throw std::invalid_argument("FISharpModule: generator count mismatch");
        for (const auto& g : gens_[n])
            if (g.nrows() != dims_[n] || g.ncols() != dims_[n])
                throw std::invalid_argument("FISharpModule: generator shape mismatch");
    }
}

QMat FISharpModule::act(int n, const Perm& sigma) const {
    if (sigma.size() != n) throw std::invalid_argument("FISharpModule: permutation size mismatch");
    // Bubble-sort the image vector; each adjacent swap at position i is a
    // right factor s_i, so rho(sigma) multiplies the matrices in reverse.
    std::vector<int> img(sigma.image());
    std::vector<int> word;
    bool moved = true;
    while (moved) {
        moved = false;
        for (int i = 0; i + 1 < n; ++i) {
            if (img[i] > img[i + 1]) {
                std::swap(img[i], img[i + 1]);
                word.push_back(i);
                moved = true;
            }
        }
    }
    QMat m = QMat::identity(dims_[n]);
    for (auto it = word.rbegin(); it != word.rend(); ++it) m = m * gens_[n][*it];
    return m;
}

bool FISharpModule::is_zero() const {
    for (int d : dims_)
        if (d != 0) return false;
    return true;
}

void FISharpModule::validate() const {
    int nmax = n_max();
    for (int n = 0; n < nmax; ++n) {
        if (!(del_[n] * iota_[n] == QMat::identity(dims_[n])))
            throw std::logic_error("FISharpModule: deleting the inserted slot is not the identity");
        // Insertion equivariance for the block inclusion.
        for (int i = 0; i + 1 < n; ++i) {
            if (!(iota_[n] * gens_[n][i] == gens_[n + 1][i] * iota_[n]))
                throw std::logic_error("FISharpModule: insertion is not equivariant");
            if (!(gens_[n][i] * del_[n] == del_[n] * gens_[n + 1][i]))
                throw std::logic_error("FISharpModule: deletion is not equivariant");
        }
    }
    for (int n = 0; n <= nmax; ++n) {
        int k = static_cast<int>(gens_[n].size());
        QMat id = QMat::identity(dims_[n]);
        for (int i = 0; i < k; ++i) {
            if (!(gens_[n][i] * gens_[n][i] == id))
                throw std::logic_error("FISharpModule: transposition generator is not an involution");
            if (i + 1 < k) {
                QMat lhs = gens_[n][i] * gens_[n][i + 1] * gens_[n][i];
                QMat rhs = gens_[n][i + 1] * gens_[n][i] * gens_[n][i + 1];
                if (!(lhs == rhs)) throw std::logic_error("FISharpModule: braid relation fails");
            }
            for (int j = i + 2; j < k; ++j)
                if (!(gens_[n][i] * gens_[n][j] == gens_[n][j] * gens_[n][i]))
                    throw std::logic_error("FISharpModule: distant generators do not commute");
        }
    }
}

FISharpModule make_TZYq(const GradedBettiTable& z, const GradedBettiTable& y, int q,
                        FieldSpec field, int n_max) {
    if (q < 0) throw std::invalid_argument("make_TZYq: negative degree");
    if (n_max < 0) throw std::invalid_argument("make_TZYq: negative range");
    if (z.dim(0) != 1 || y.dim(0) != 1)
        throw std::invalid_argument("make_TZYq: factor tables must have b_0 = 1");

    std::vector<KunnethBasis> kb;
    kb.reserve(n_max + 1);
    for (int n = 0; n <= n_max; ++n)
        kb.emplace_back(std::vector<GradedBettiTable>(n, z), y, q);

    std::vector<int> dims(n_max + 1);
    for (int n = 0; n <= n_max; ++n) dims[n] = kb[n].dim();

    std::vector<QMat> iota, del;
    std::vector<std::vector<QMat>> gens(n_max + 1);
    for (int n = 0; n < n_max; ++n) {
        // Insert the unit class in a new last Z slot, ahead of the Y entry.
        // The unit has degree 0, so no Koszul sign appears.
        QMat in(dims[n + 1], dims[n]);
        for (int i = 0; i < dims[n]; ++i) {
            KunnethBasis::Tuple t = kb[n].tuple(i);
            t.insert(t.end() - 1, {0, 0});
            in.set(kb[n + 1].index_of(t), i, 1);
        }
        iota.push_back(std::move(in));

        // Project the last Z slot onto its degree-0 component.
        QMat dl(dims[n], dims[n + 1]);
        for (int i = 0; i < dims[n + 1]; ++i) {
            KunnethBasis::Tuple t = kb[n + 1].tuple(i);
            KunnethBasis::Class last_z = t[n];
            if (last_z != KunnethBasis::Class{0, 0}) continue;
            t.erase(t.begin() + n);
            dl.set(kb[n].index_of(t), i, 1);
        }
        del.push_back(std::move(dl));
    }
    for (int n = 0; n <= n_max; ++n)
        for (int i = 0; i + 1 < n; ++i)
            gens[n].push_back(kb[n].action_matrix(Perm::transposition(n, i, i + 1)));

    return FISharpModule(field, std::move(dims), std::move(iota), std::move(del), std::move(gens));
}

FISharpModule delta(const FISharpModule& t) {
    int nmax = t.n_max();
    if (nmax < 1) throw std::invalid_argument("delta: range too short");

    std::vector<CokernelMaps> cm;
    cm.reserve(nmax);
    for (int n = 0; n < nmax; ++n) cm.push_back(cokernel_maps(t.iota(n), t.field()));

    std::vector<int> dims(nmax);
    for (int n = 0; n < nmax; ++n) dims[n] = cm[n].proj.nrows();

    std::vector<QMat> iota, del;
    std::vector<std::vector<QMat>> gens(nmax);
    // The quotient at level n is taken against insertion into the last slot;
    // the induced insertion must add its new slot before that starred one, or
    // it would land inside the very image being quotiented.
    for (int n = 0; n + 1 < nmax; ++n)
        iota.push_back(cm[n + 1].proj * t.act(n + 2, Perm::transposition(n + 2, n, n + 1)) *
                       t.iota(n + 1) * cm[n].section);
    for (int n = 1; n < nmax; ++n) {
        // Deleting the last visible slot of the quotient at level n: swap it
        // past the inserted slot, then delete the last slot downstairs.
        QMat down = t.deletion(n + 1) * t.act(n + 1, Perm::transposition(n + 1, n - 1, n));
        del.push_back(cm[n - 1].proj * down * cm[n].section);
    }
    for (int n = 0; n < nmax; ++n)
        for (int i = 0; i + 1 < n; ++i)
            gens[n].push_back(cm[n].proj * t.act(n + 1, Perm::transposition(n + 1, i, i + 1)) *
                              cm[n].section);

    return FISharpModule(t.field(), std::move(dims), std::move(iota), std::move(del), std::move(gens));
}

std::string DegreeCertificate::status_name() const {
    switch (status) {
        case Status::Verified: return "verified";
        case Status::Refuted: return "refuted";
        default: return "inconclusive";
    }
}

DegreeCertificate degree_bound(const FISharpModule& t, int d) {
    if (d < -1) throw std::invalid_argument("degree_bound: bound below -1");
    DegreeCertificate cert;
    cert.claimed_bound = d;
    if (t.n_max() < d + 1) {
        cert.status = DegreeCertificate::Status::Inconclusive;
        return cert;
    }
    FISharpModule f = t;
    for (int k = 0; k < d + 1; ++k) f = delta(f);
    cert.verified_range = f.n_max();
    for (int n = 0; n <= f.n_max(); ++n) {
        if (f.dim(n) != 0) {
            cert.status = DegreeCertificate::Status::Refuted;
            cert.witness_n = n;
            cert.witness_dim = f.dim(n);
            return cert;
        }
    }
    cert.status = DegreeCertificate::Status::Verified;
    return cert;
}

}  // namespace gms
