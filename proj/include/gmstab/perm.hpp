#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gms {

// Permutation of {0, ..., n-1}, stored as the image vector: img[i] is where i goes.
class Perm {
public:
    Perm() = default;
    explicit Perm(std::vector<int> img) : img_(std::move(img)) { check(); }

    static Perm identity(int n) {
        std::vector<int> v(n);
        for (int i = 0; i < n; ++i) v[i] = i;
        return Perm(std::move(v));
    }

    // Transposition (a b) in S_n.
    static Perm transposition(int n, int a, int b) {
        Perm p = identity(n);
        std::swap(p.img_[a], p.img_[b]);
        return p;
    }

    int size() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[i]; }
    const std::vector<int>& image() const { return img_; }

    // (a * b)(i) = a(b(i)): apply b first.
    friend Perm operator*(const Perm& a, const Perm& b) {
        if (a.size() != b.size()) throw std::invalid_argument("Perm: size mismatch");
        std::vector<int> v(a.size());
        for (int i = 0; i < a.size(); ++i) v[i] = a.img_[b.img_[i]];
        Perm p;
        p.img_ = std::move(v);
        return p;
    }

    Perm inverse() const {
        std::vector<int> v(img_.size());
        for (int i = 0; i < size(); ++i) v[img_[i]] = i;
        Perm p;
        p.img_ = std::move(v);
        return p;
    }

    int sign() const {
        int s = 1;
        for (int i = 0; i < size(); ++i)
            for (int j = i + 1; j < size(); ++j)
                if (img_[i] > img_[j]) s = -s;
        return s;
    }

    bool is_identity() const {
        for (int i = 0; i < size(); ++i)
            if (img_[i] != i) return false;
        return true;
    }

    // Extend to S_{n+k} fixing the new points n, ..., n+k-1.
    Perm extended(int k) const {
        std::vector<int> v(img_);
        for (int j = 0; j < k; ++j) v.push_back(size() + j);
        return Perm(std::move(v));
    }

    bool operator==(const Perm& o) const { return img_ == o.img_; }
    bool operator<(const Perm& o) const { return img_ < o.img_; }

    std::string to_string() const {
        std::string s = "[";
        for (int i = 0; i < size(); ++i) {
            if (i) s += ' ';
            s += std::to_string(img_[i]);
        }
        return s + "]";
    }

private:
    std::vector<int> img_;

    void check() const {
        std::vector<char> seen(img_.size(), 0);
        for (int x : img_) {
            if (x < 0 || x >= size() || seen[x]) throw std::invalid_argument("Perm: not a permutation");
            seen[x] = 1;
        }
    }
};

// A subgroup of S_n given by generators.  Elements are enumerated on demand;
// the groups used here are small (Young subgroups and full symmetric groups).
// When the group is known to be a direct product of symmetric groups on
// disjoint label classes, the classes are recorded: several operations
// (canonical orbit representatives, membership, order) then avoid element
// enumeration entirely.
struct SubgroupSpec {
    int n = 0;
    std::vector<Perm> gens;
    bool product_structure = false;
    std::vector<std::vector<int>> classes;  // covers {0..n-1} when product_structure

    static SubgroupSpec trivial(int n) {
        SubgroupSpec g{n, {}};
        g.adopt_classes({});
        return g;
    }

    static SubgroupSpec full(int n) {
        SubgroupSpec g{n, {}};
        std::vector<int> all(n);
        for (int i = 0; i < n; ++i) all[i] = i;
        g.adopt_classes(n > 0 ? std::vector<std::vector<int>>{all} : std::vector<std::vector<int>>{});
        return g;
    }

    // Direct product of symmetric groups on the given disjoint position classes.
    static SubgroupSpec young(int n, const std::vector<std::vector<int>>& classes) {
        SubgroupSpec g{n, {}};
        g.adopt_classes(classes);
        return g;
    }

    // All elements, by closure of the generator set.
    std::vector<Perm> elements() const;

    long long order() const;

    bool contains(const Perm& p) const;

private:
    // Normalizes the classes (sorted, uncovered labels as singletons), derives
    // the adjacent-transposition generators, and marks the product structure.
    void adopt_classes(const std::vector<std::vector<int>>& given);
};

// All n! permutations of {0..n-1} in lexicographic order of image vectors.
std::vector<Perm> all_permutations(int n);

}  // namespace gms
