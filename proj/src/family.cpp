#include "superwig/family.hpp"
#include "superwig/errors.hpp"

#include <mutex>
#include <tuple>

namespace sw {

namespace {

Weight top_weight(const Shape& s, const std::vector<long>& w) { return Weight(s, w); }

// Coupled highest weights: the coefficient on e_j (x) s_a with the largest j, then the smallest a, is positive.
StateVector coupling_sign(StateVector v, int source_dim) {
    int best = -1;
    for (StateVector::InnerIterator it(v); it; ++it) {
        int i = static_cast<int>(it.index());
        if (best < 0 || i / source_dim > best / source_dim || (i / source_dim == best / source_dim && i < best)) best = i;
    }
    if (best >= 0 && v.coeff(best).sign() < 0) v = -v;
    return v;
}

} // namespace

Family build_family(const Shape& s, Direction d, int kmax) {
    Family F;
    F.shape = s;
    F.direction = d;
    F.kmax = kmax;
    RepModule V = vector_module(s);
    F.V = d == Direction::covariant ? V : dual_module(V);
    Weight zero = zero_weight(s);
    F.members.emplace(zero, trivial_module(s));
    F.levels.push_back({zero});
    for (int k = 1; k <= kmax; ++k) {
        std::vector<Weight> next;
        for (const Weight& L : F.levels.back()) {
            Coupling c;
            c.source = L;
            c.T = graded_tensor(F.V, F.members.at(L));
            for (auto& hw : highest_weight_vectors(c.T)) {
                Weight w = top_weight(s, hw.weight);
                try {
                    Component comp{w, gt_basis(c.T, coupling_sign(hw.vec, F.members.at(L).dim))};
                    if (!F.members.count(w)) {
                        F.members.emplace(w, realization(c.T, comp.basis));
                        next.push_back(w);
                    }
                    c.components.push_back(std::move(comp));
                } catch (const NotRealizable& e) {
                    F.excluded.push_back(w.str() + " in V x " + L.str() + ": " + e.what());
                }
            }
            F.couplings.emplace(L, std::move(c));
        }
        F.levels.push_back(std::move(next));
    }
    return F;
}

const Family& cached_family(const Shape& s, Direction d, int kmax) {
    static std::mutex mu;
    static std::map<std::tuple<int, int, int, int>, Family> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(s.m, s.n, static_cast<int>(d), kmax);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, build_family(s, d, kmax)).first;
    return it->second;
}

} // namespace sw
