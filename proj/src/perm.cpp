#include "gmstab/perm.hpp"

#include <algorithm>
#include <set>

namespace gms {

std::vector<Perm> SubgroupSpec::elements() const {
    std::set<std::vector<int>> seen;
    std::vector<Perm> out;
    std::vector<Perm> frontier{Perm::identity(n)};
    seen.insert(frontier[0].image());
    out.push_back(frontier[0]);
    while (!frontier.empty()) {
        std::vector<Perm> next;
        for (const Perm& g : frontier)
            for (const Perm& s : gens) {
                Perm h = s * g;
                if (seen.insert(h.image()).second) {
                    out.push_back(h);
                    next.push_back(h);
                }
            }
        frontier = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

long long SubgroupSpec::order() const {
    if (!product_structure) return static_cast<long long>(elements().size());
    long long o = 1;
    for (const auto& cls : classes)
        for (long long t = 2; t <= static_cast<long long>(cls.size()); ++t) o *= t;
    return o;
}

bool SubgroupSpec::contains(const Perm& p) const {
    if (p.size() != n) return false;
    if (product_structure) {
        std::vector<int> cls_of(n, -1);
        for (size_t c = 0; c < classes.size(); ++c)
            for (int x : classes[c]) cls_of[x] = static_cast<int>(c);
        for (int i = 0; i < n; ++i)
            if (cls_of[p(i)] != cls_of[i]) return false;
        return true;
    }
    for (const Perm& g : elements())
        if (g == p) return true;
    return false;
}

void SubgroupSpec::adopt_classes(const std::vector<std::vector<int>>& given) {
    std::vector<char> covered(n, 0);
    classes.clear();
    for (const auto& cls : given) {
        std::vector<int> c = cls;
        std::sort(c.begin(), c.end());
        for (int x : c) {
            if (x < 0 || x >= n || covered[x])
                throw std::invalid_argument("SubgroupSpec: classes must be disjoint subsets of {0..n-1}");
            covered[x] = 1;
        }
        if (!c.empty()) classes.push_back(std::move(c));
    }
    for (int x = 0; x < n; ++x)
        if (!covered[x]) classes.push_back({x});
    std::sort(classes.begin(), classes.end());
    gens.clear();
    for (const auto& cls : classes)
        for (size_t t = 0; t + 1 < cls.size(); ++t)
            gens.push_back(Perm::transposition(n, cls[t], cls[t + 1]));
    product_structure = true;
}

std::vector<Perm> all_permutations(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i;
    std::vector<Perm> out;
    do {
        out.push_back(Perm(v));
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

}  // namespace gms
