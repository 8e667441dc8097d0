#include "superwig/oracle.hpp"
#include "superwig/errors.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace sw {

namespace {

using Triplet = Eigen::Triplet<Rational>;

StateVector unit(int dim, int i) {
    StateVector v(dim);
    v.insert(i) = Rational(1);
    return v;
}

void prune(StateVector& v) {
    StateVector out(v.size());
    for (StateVector::InnerIterator it(v); it; ++it)
        if (!it.value().is_zero()) out.insert(it.index()) = it.value();
    v = std::move(out);
}

int first_index(const StateVector& v) {
    StateVector::InnerIterator it(v);
    return it ? static_cast<int>(it.index()) : -1;
}

bool is_empty(const StateVector& v) { return first_index(v) < 0; }

StateVector combine(const StateVector& a, const Rational& s, const StateVector& b) {
    StateVector r = a + s * b;
    prune(r);
    return r;
}

// y = c x for some rational c; returns c.
Rational ratio(const StateVector& y, const StateVector& x) {
    if (is_empty(y)) return Rational(0);
    int k = first_index(x);
    Rational c = y.coeff(k) / x.coeff(k);
    StateVector d = combine(y, -c, x);
    if (!is_empty(d)) throw Inconsistent("projector image is not proportional to its argument");
    return c;
}

std::vector<SparseQ> empty_gens(int N, int dim) {
    std::vector<SparseQ> g(N * N, SparseQ(dim, dim));
    return g;
}

class Span {
public:
    bool add(const StateVector& v) {
        StateVector r = reduce(v);
        if (is_empty(r)) return false;
        rows_.push_back(std::move(r));
        return true;
    }

private:
    StateVector reduce(StateVector v) const {
        for (const auto& row : rows_) {
            int piv = first_index(row);
            Rational c = v.coeff(piv);
            if (!c.is_zero()) v = combine(v, -c / row.coeff(piv), row);
        }
        return v;
    }
    std::vector<StateVector> rows_;
};

// Combinations of `basis` annihilated by every operator in `ops`.
std::vector<StateVector> kernel_in_span(const RepModule& M, const std::vector<StateVector>& basis,
                                        const std::vector<std::pair<int, int>>& ops) {
    if (basis.empty()) return {};
    std::map<std::pair<int, int>, int> rowid;
    std::vector<std::vector<std::pair<int, Rational>>> cols(basis.size());
    for (std::size_t b = 0; b < basis.size(); ++b) {
        for (std::size_t o = 0; o < ops.size(); ++o) {
            StateVector img = apply(M, ops[o].first, ops[o].second, basis[b]);
            for (StateVector::InnerIterator it(img); it; ++it) {
                auto key = std::make_pair(static_cast<int>(o), static_cast<int>(it.index()));
                auto [pos, fresh] = rowid.emplace(key, static_cast<int>(rowid.size()));
                cols[b].emplace_back(pos->second, it.value());
            }
        }
    }
    if (rowid.empty()) return basis;
    RationalMatrix A = RationalMatrix::Zero(rowid.size(), basis.size());
    for (std::size_t b = 0; b < basis.size(); ++b)
        for (auto& [i, x] : cols[b]) A(i, b) = x;
    RationalMatrix ns = nullspace(A);
    std::vector<StateVector> out;
    for (Eigen::Index c = 0; c < ns.cols(); ++c) {
        StateVector v(M.dim);
        for (std::size_t b = 0; b < basis.size(); ++b)
            if (!ns(b, c).is_zero()) v = v + ns(b, c) * basis[b];
        prune(v);
        out.push_back(std::move(v));
    }
    return out;
}

Weight row_weight(const Shape& top, const std::vector<long>& w, int K) {
    return Weight(level_shape(top.m, K), std::vector<long>(w.begin(), w.begin() + K));
}

// kappa with X h_lambda = kappa h, X a word in the simple raising operators E_{q,q+1}.
Rational raising_kappa(const RepModule& M, const StateVector& hl, const StateVector& h, const Weight& row,
                       const std::vector<long>& lam, int K) {
    std::vector<int> letters;
    long count = 0;
    for (int q = 1; q < K; ++q) {
        count += row(q) - lam[q - 1];
        for (long a = 0; a < count; ++a) letters.push_back(q);
    }
    do {
        StateVector v = hl;
        for (auto it = letters.rbegin(); it != letters.rend() && !is_empty(v); ++it) v = apply(M, *it, *it + 1, v);
        if (!is_empty(v)) {
            int k = first_index(h);
            return v.coeff(k) / h.coeff(k);
        }
    } while (std::next_permutation(letters.begin(), letters.end()));
    throw Inconsistent("no raising word reaches the highest weight vector");
}

void gt_recurse(const RepModule& M, const StateVector& h, int K, std::vector<Weight>& rows, std::vector<GTVector>& out) {
    std::vector<long> w = weight_of(M, h);
    Weight row = row_weight(M.shape, w, K);
    rows.push_back(row);
    if (K == 1) {
        out.push_back({GTPattern{rows}, h});
        rows.pop_back();
        return;
    }
    auto spaces = cyclic_submodule(M, h, K);
    std::vector<std::pair<int, int>> ops;
    for (int p = 1; p < K - 1; ++p) ops.emplace_back(p, p + 1);
    std::map<std::vector<long>, StateVector, std::greater<>> found;
    for (auto& [wt, vecs] : spaces) {
        auto ns = kernel_in_span(M, vecs, ops);
        if (ns.empty()) continue;
        if (ns.size() > 1) throw NotRealizable("branching multiplicity above one at " + row.str());
        std::vector<long> lam(wt.begin(), wt.begin() + K - 1);
        if (!found.emplace(lam, ns.front()).second) throw NotRealizable("repeated subalgebra weight at " + row.str());
    }
    for (auto& [lam, hl] : found) {
        StateVector v = hl;
        if (raising_kappa(M, v, h, row, lam, K).sign() < 0) v = -v;
        gt_recurse(M, v, K - 1, rows, out);
    }
    rows.pop_back();
}

using Block = std::vector<StateVector>;

Block apply_matrix(const RepModule& R, int K, const Block& x, Variant variant) {
    Block out(K, StateVector(R.dim));
    for (int p = 1; p <= K; ++p) {
        StateVector acc(R.dim);
        for (int s = 1; s <= K; ++s) {
            if (is_empty(x[s - 1])) continue;
            if (variant == Variant::barred) {
                int sg = grading(R.shape, p) && grading(R.shape, s) ? 1 : -1;
                acc = acc + Rational(sg) * apply(R, s, p, x[s - 1]);
            } else {
                int sg = grading(R.shape, p) ? -1 : 1;
                acc = acc + Rational(sg) * apply(R, p, s, x[s - 1]);
            }
        }
        prune(acc);
        out[p - 1] = std::move(acc);
    }
    return out;
}

// P[r] x; nullopt when two roots coincide.
std::optional<Block> project(const RepModule& R, int K, const RootVector& roots, int r, Block x, Variant variant) {
    Rational den(1);
    for (int p = 1; p <= K; ++p) {
        if (p == r) continue;
        Block nb = apply_matrix(R, K, x, variant);
        for (int i = 0; i < K; ++i) x[i] = combine(nb[i], -roots(p), x[i]);
        Rational d = roots(r) - roots(p);
        if (d.is_zero()) return std::nullopt;
        den *= d;
    }
    for (auto& v : x) v = v / den;
    return x;
}

bool block_empty(const Block& x) {
    return std::all_of(x.begin(), x.end(), [](const StateVector& v) { return is_empty(v); });
}

bool block_equal(const Block& a, const Block& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!is_empty(combine(a[i], Rational(-1), b[i]))) return false;
    return true;
}

} // namespace

StateVector apply(const RepModule& M, int p, int q, const StateVector& v) {
    StateVector r = M.E(p, q) * v;
    prune(r);
    return r;
}

std::vector<long> weight_of(const RepModule& M, const StateVector& v) {
    std::optional<std::vector<long>> w;
    for (StateVector::InnerIterator it(v); it; ++it) {
        const auto& x = M.weights[it.index()];
        if (!w) w = x;
        else if (*w != x) throw Inconsistent("vector is not a weight vector");
    }
    if (!w) throw Inconsistent("zero vector has no weight");
    return *w;
}

Rational inner(const RepModule& M, const StateVector& a, const StateVector& b) {
    Rational s(0);
    for (StateVector::InnerIterator it(a); it; ++it) {
        Rational y = b.coeff(it.index());
        if (!y.is_zero()) s += it.value() * y * M.form[it.index()];
    }
    return s;
}

RepModule vector_module(const Shape& s) {
    const int N = s.size();
    RepModule M;
    M.shape = s;
    M.dim = N;
    M.gens = empty_gens(N, N);
    for (int p = 1; p <= N; ++p) {
        for (int q = 1; q <= N; ++q) M.E(p, q).insert(p - 1, q - 1) = Rational(1);
        std::vector<long> w(N, 0);
        w[p - 1] = 1;
        M.weights.push_back(w);
        M.parities.push_back(grading(s, p));
    }
    M.form.assign(N, Rational(1));
    return M;
}

RepModule dual_module(const RepModule& M, bool form_one) {
    const int N = M.shape.size();
    RepModule D;
    D.shape = M.shape;
    D.dim = M.dim;
    D.gens = empty_gens(N, M.dim);
    for (int p = 1; p <= N; ++p) {
        for (int q = 1; q <= N; ++q) {
            int x = (grading(M.shape, p) + grading(M.shape, q)) % 2;
            std::vector<Triplet> t;
            const SparseQ& E = M.E(p, q);
            for (int k = 0; k < E.outerSize(); ++k)
                for (SparseQ::InnerIterator it(E, k); it; ++it) {
                    // (E*)_{ab} = -(-1)^{x par(b)} E_{ba}
                    int a = static_cast<int>(it.col()), b = static_cast<int>(it.row());
                    int sg = (x * M.parities[b]) % 2 ? 1 : -1;
                    t.emplace_back(a, b, Rational(sg) * it.value());
                }
            D.E(p, q).setFromTriplets(t.begin(), t.end());
        }
    }
    for (int a = 0; a < M.dim; ++a) {
        std::vector<long> w = M.weights[a];
        for (auto& x : w) x = -x;
        D.weights.push_back(w);
    }
    D.parities = M.parities;
    int top = grading(M.shape, N);
    for (int a = 0; a < M.dim; ++a)
        D.form.push_back(form_one ? Rational((top + M.parities[a]) % 2 ? -1 : 1) : Rational(1));
    return D;
}

RepModule trivial_module(const Shape& s) {
    const int N = s.size();
    RepModule M;
    M.shape = s;
    M.dim = 1;
    M.gens = empty_gens(N, 1);
    M.weights.push_back(std::vector<long>(N, 0));
    M.parities.push_back(0);
    M.form.push_back(Rational(1));
    std::vector<Weight> rows;
    for (int K = N; K >= 1; --K) rows.push_back(zero_weight(level_shape(s.m, K)));
    M.patterns.push_back(GTPattern{rows});
    return M;
}

RepModule graded_tensor(const RepModule& A, const RepModule& B) {
    if (A.shape != B.shape) throw DomainError("tensor factors have different shapes");
    const int N = A.shape.size();
    RepModule T;
    T.shape = A.shape;
    T.dim = A.dim * B.dim;
    T.gens = empty_gens(N, T.dim);
    auto idx = [&](int a, int b) { return a * B.dim + b; };
    for (int p = 1; p <= N; ++p) {
        for (int q = 1; q <= N; ++q) {
            int x = (grading(A.shape, p) + grading(A.shape, q)) % 2;
            std::vector<Triplet> t;
            const SparseQ& EA = A.E(p, q);
            for (int k = 0; k < EA.outerSize(); ++k)
                for (SparseQ::InnerIterator it(EA, k); it; ++it)
                    for (int b = 0; b < B.dim; ++b)
                        t.emplace_back(idx(it.row(), b), idx(it.col(), b), it.value());
            const SparseQ& EB = B.E(p, q);
            for (int k = 0; k < EB.outerSize(); ++k)
                for (SparseQ::InnerIterator it(EB, k); it; ++it)
                    for (int a = 0; a < A.dim; ++a) {
                        int sg = (x * A.parities[a]) % 2 ? -1 : 1;
                        t.emplace_back(idx(a, it.row()), idx(a, it.col()), Rational(sg) * it.value());
                    }
            T.E(p, q).setFromTriplets(t.begin(), t.end());
        }
    }
    for (int a = 0; a < A.dim; ++a)
        for (int b = 0; b < B.dim; ++b) {
            std::vector<long> w(N);
            for (int k = 0; k < N; ++k) w[k] = A.weights[a][k] + B.weights[b][k];
            T.weights.push_back(w);
            T.parities.push_back((A.parities[a] + B.parities[b]) % 2);
            T.form.push_back(A.form[a] * B.form[b]);
        }
    return T;
}

bool supercommutation_holds(const RepModule& M) {
    const int N = M.shape.size();
    auto g = [&](int p) { return grading(M.shape, p); };
    for (int p = 1; p <= N; ++p)
        for (int q = 1; q <= N; ++q)
            for (int r = 1; r <= N; ++r)
                for (int s = 1; s <= N; ++s) {
                    int sg = ((g(p) + g(q)) * (g(r) + g(s))) % 2 ? -1 : 1;
                    SparseQ lhs = SparseQ(M.E(p, q) * M.E(r, s)) - Rational(sg) * SparseQ(M.E(r, s) * M.E(p, q));
                    SparseQ rhs(M.dim, M.dim);
                    if (q == r) rhs = rhs + M.E(p, s);
                    if (s == p) rhs = rhs - Rational(sg) * M.E(r, q);
                    SparseQ d = lhs - rhs;
                    for (int k = 0; k < d.outerSize(); ++k)
                        for (SparseQ::InnerIterator it(d, k); it; ++it)
                            if (!it.value().is_zero()) return false;
                }
    return true;
}

RationalMatrix nullspace(const RationalMatrix& A) {
    const Eigen::Index rows = A.rows(), cols = A.cols();
    // Clear denominators row by row, then eliminate over the integers.
    std::vector<std::vector<mpz_class>> M(rows, std::vector<mpz_class>(cols));
    for (Eigen::Index i = 0; i < rows; ++i) {
        mpz_class l = 1;
        for (Eigen::Index j = 0; j < cols; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), A(i, j).den().get_mpz_t());
        for (Eigen::Index j = 0; j < cols; ++j) M[i][j] = A(i, j).num() * (l / A(i, j).den());
    }
    std::vector<Eigen::Index> pivots;
    mpz_class prev = 1;
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
        Eigen::Index piv = r;
        while (piv < rows && M[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(M[piv], M[r]);
        for (Eigen::Index i = r + 1; i < rows; ++i) {
            for (Eigen::Index j = c + 1; j < cols; ++j) {
                M[i][j] = M[r][c] * M[i][j] - M[i][c] * M[r][j];
                mpz_divexact(M[i][j].get_mpz_t(), M[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            M[i][c] = 0;
        }
        prev = M[r][c];
        pivots.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<Eigen::Index> free;
    for (Eigen::Index c = 0; c < cols; ++c)
        if (!is_pivot[c]) free.push_back(c);
    RationalMatrix N = RationalMatrix::Zero(cols, free.size());
    for (std::size_t f = 0; f < free.size(); ++f) {
        std::vector<Rational> x(cols, Rational(0));
        x[free[f]] = Rational(1);
        for (Eigen::Index k = r - 1; k >= 0; --k) {
            Eigen::Index pc = pivots[k];
            Rational s(0);
            for (Eigen::Index j = pc + 1; j < cols; ++j)
                if (M[k][j] != 0 && !x[j].is_zero()) s += Rational(M[k][j]) * x[j];
            x[pc] = -s / Rational(M[k][pc]);
        }
        // Primitive integer representative.
        mpz_class l = 1, g = 0;
        for (auto& v : x) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.den().get_mpz_t());
        for (auto& v : x) {
            mpz_class z = v.num() * (l / v.den());
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
        }
        for (Eigen::Index j = 0; j < cols; ++j) N(j, f) = x[j] * Rational(mpq_class(l, g));
    }
    return N;
}

std::vector<WeightedVector> highest_weight_vectors(const RepModule& M) {
    const int N = M.shape.size();
    std::map<std::vector<long>, std::vector<StateVector>, std::greater<>> spaces;
    for (int i = 0; i < M.dim; ++i) spaces[M.weights[i]].push_back(unit(M.dim, i));
    std::vector<std::pair<int, int>> ops;
    for (int p = 1; p < N; ++p) ops.emplace_back(p, p + 1);
    std::vector<WeightedVector> out;
    for (auto& [w, basis] : spaces) {
        for (StateVector v : kernel_in_span(M, basis, ops)) {
            if (v.coeff(first_index(v)).sign() < 0) v = -v;
            out.push_back({w, v});
        }
    }
    return out;
}

std::map<std::vector<long>, std::vector<StateVector>> cyclic_submodule(const RepModule& M, const StateVector& h, int K) {
    std::map<std::vector<long>, Span> spans;
    std::map<std::vector<long>, std::vector<StateVector>> vecs;
    auto w = weight_of(M, h);
    spans[w].add(h);
    vecs[w].push_back(h);
    std::vector<StateVector> queue{h};
    while (!queue.empty()) {
        StateVector v = queue.back();
        queue.pop_back();
        for (int p = 1; p < K; ++p) {
            StateVector u = apply(M, p + 1, p, v);
            if (is_empty(u)) continue;
            auto wu = weight_of(M, u);
            if (spans[wu].add(u)) {
                vecs[wu].push_back(u);
                queue.push_back(u);
            }
        }
    }
    return vecs;
}

std::vector<GTVector> gt_basis(const RepModule& M, const StateVector& h) {
    std::vector<GTVector> out;
    std::vector<Weight> rows;
    gt_recurse(M, h, M.shape.size(), rows, out);
    return out;
}

RepModule realization(const RepModule& M, const std::vector<GTVector>& basis) {
    const int N = M.shape.size();
    const int d = static_cast<int>(basis.size());
    RepModule R;
    R.shape = M.shape;
    R.dim = d;
    R.gens = empty_gens(N, d);
    std::vector<Rational> norms;
    for (const auto& b : basis) {
        Rational n = norm(M, b.vec);
        if (n.is_zero()) throw NotRealizable("null GT vector in " + b.pattern.top().str());
        norms.push_back(n);
    }
    for (int a = 0; a < d; ++a)
        for (int b = a + 1; b < d; ++b)
            if (!inner(M, basis[a].vec, basis[b].vec).is_zero())
                throw NotRealizable("GT vectors are not orthogonal in " + basis[a].pattern.top().str());
    for (int p = 1; p <= N; ++p)
        for (int q = 1; q <= N; ++q) {
            std::vector<Triplet> t;
            for (int a = 0; a < d; ++a) {
                StateVector u = apply(M, p, q, basis[a].vec);
                if (is_empty(u)) continue;
                StateVector rebuilt(M.dim);
                for (int b = 0; b < d; ++b) {
                    Rational c = inner(M, basis[b].vec, u);
                    if (c.is_zero()) continue;
                    c /= norms[b];
                    t.emplace_back(b, a, c);
                    rebuilt = rebuilt + c * basis[b].vec;
                }
                if (!is_empty(combine(u, Rational(-1), rebuilt)))
                    throw NotRealizable("span of the GT vectors is not invariant");
            }
            R.E(p, q).setFromTriplets(t.begin(), t.end());
        }
    for (const auto& b : basis) {
        R.weights.push_back(weight_of(M, b.vec));
        std::set<int> par;
        for (StateVector::InnerIterator it(b.vec); it; ++it) par.insert(M.parities[it.index()]);
        if (par.size() != 1) throw Inconsistent("GT vector of mixed parity");
        R.parities.push_back(*par.begin());
        R.patterns.push_back(b.pattern);
    }
    R.form = norms;
    return R;
}

std::vector<SectorValues> projector_invariants(const RepModule& R, int K, Variant variant) {
    std::vector<SectorValues> out;
    if (K < 2) return out;
    std::map<std::pair<Weight, Weight>, int> reps;
    for (int a = 0; a < R.dim; ++a) reps.emplace(std::make_pair(R.patterns[a].level(K), R.patterns[a].level(K - 1)), a);
    for (auto& [key, idx] : reps) {
        SectorValues sv;
        sv.Lambda = key.first;
        sv.lambda = key.second;
        const RootVector roots_K = roots(key.first, variant);
        const RootVector roots_sub = roots(key.second, variant, Level::subalgebra);
        const StateVector v = unit(R.dim, idx);
        std::vector<bool> keep(R.dim);
        for (int a = 0; a < R.dim; ++a) keep[a] = R.patterns[a].level(K - 1) == key.second;
        try {
            for (int r = 1; r <= K; ++r) {
                Block x(K, StateVector(R.dim));
                x[K - 1] = v;
                auto y = project(R, K, roots_K, r, x, variant);
                if (!y) throw DegenerateRoots("coincident roots");
                sv.c[r] = ratio((*y)[K - 1], v);
            }
            for (int u = 1; u < K; ++u)
                for (int r = 1; r <= K; ++r) {
                    Rational val(0);
                    for (int q = 1; q < K; ++q) {
                        Block b(K - 1, StateVector(R.dim));
                        b[q - 1] = v;
                        auto x = project(R, K - 1, roots_sub, u, b, variant);
                        if (!x) throw DegenerateRoots("coincident subalgebra roots");
                        if (block_empty(*x)) continue;
                        Block xe = *x;
                        xe.push_back(StateVector(R.dim));
                        auto y = project(R, K, roots_K, r, xe, variant);
                        if (!y) throw DegenerateRoots("coincident roots");
                        Block yl(y->begin(), y->begin() + (K - 1));
                        for (auto& comp : yl) {
                            StateVector masked(R.dim);
                            for (StateVector::InnerIterator it(comp); it; ++it)
                                if (keep[it.index()]) masked.insert(it.index()) = it.value();
                            comp = masked;
                        }
                        auto z = project(R, K - 1, roots_sub, u, yl, variant);
                        if (!z) throw DegenerateRoots("coincident subalgebra roots");
                        int p0 = 0;
                        while (is_empty((*x)[p0])) ++p0;
                        val = ratio((*z)[p0], (*x)[p0]);
                        Block expect = *x;
                        for (auto& e : expect) e = e * val;
                        if (!block_equal(*z, expect)) throw Inconsistent("sandwich is not a multiple of the identity");
                        break;
                    }
                    sv.rho[{r, u}] = val;
                }
        } catch (const DegenerateRoots&) {
            sv.degenerate = true;
            sv.c.clear();
            sv.rho.clear();
        }
        out.push_back(std::move(sv));
    }
    return out;
}

bool projector_identities_hold(const RepModule& R, Variant variant) {
    const int N = R.shape.size();
    for (int a = 0; a < R.dim; ++a) {
        const Weight& top = R.patterns[a].top();
        const RootVector rv = roots(top, variant);
        for (int s = 1; s <= N; ++s) {
            Block x(N, StateVector(R.dim));
            x[s - 1] = unit(R.dim, a);
            Block ch = x;
            for (int p = 1; p <= N; ++p) {
                Block nb = apply_matrix(R, N, ch, variant);
                for (int i = 0; i < N; ++i) ch[i] = combine(nb[i], -rv(p), ch[i]);
            }
            if (!block_empty(ch)) return false;
            std::vector<Block> P;
            for (int r = 1; r <= N; ++r) {
                auto y = project(R, N, rv, r, x, variant);
                if (!y) return true;  // degenerate roots: projectors undefined
                P.push_back(*y);
            }
            Block sum(N, StateVector(R.dim));
            for (auto& y : P)
                for (int i = 0; i < N; ++i) sum[i] = combine(sum[i], Rational(1), y[i]);
            if (!block_equal(sum, x)) return false;
            for (int r = 1; r <= N; ++r)
                for (int t = 1; t <= N; ++t) {
                    auto y = project(R, N, rv, r, P[t - 1], variant);
                    Block expect = r == t ? P[t - 1] : Block(N, StateVector(R.dim));
                    if (!block_equal(*y, expect)) return false;
                }
        }
    }
    return true;
}

std::vector<DirectEntry> direct_wc(const RepModule& V, const RepModule& R, const RepModule& T, const Component& comp) {
    std::vector<DirectEntry> out;
    for (int t = 0; t < static_cast<int>(comp.basis.size()); ++t) {
        const StateVector& w = comp.basis[t].vec;
        Rational Nt = norm(T, w);
        if (Nt.is_zero()) throw NotRealizable("null coupled vector in " + comp.weight.str());
        for (StateVector::InnerIterator it(w); it; ++it) {
            int j = static_cast<int>(it.index()) / R.dim, a = static_cast<int>(it.index()) % R.dim;
            const Rational& c = it.value();
            Rational sq = c * c * R.form[a] / Nt;
            int sign = c.sign() * V.form[j].sign();
            out.push_back({t, j + 1, a, CoefficientValue(sign, sq)});
        }
    }
    return out;
}

} // namespace sw
