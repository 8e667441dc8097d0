#include "superwig/branching.hpp"
#include "superwig/errors.hpp"

#include <algorithm>
#include <functional>

namespace sw {

namespace {

long column_length(const std::vector<long>& rows, long c) {
    return std::count_if(rows.begin(), rows.end(), [c](long r) { return r >= c; });
}

} // namespace

bool covariant_admissible(const Weight& w) {
    if (!is_dominant(w)) return false;
    if (std::any_of(w.labels.begin(), w.labels.end(), [](long x) { return x < 0; })) return false;
    if (w.shape.n == 0 || w.shape.m == 0) return true;
    long positive_odd = std::count_if(w.labels.begin() + w.shape.m, w.labels.end(), [](long x) { return x > 0; });
    return positive_odd <= w(w.shape.m);
}

bool contravariant_admissible(const Weight& w) {
    if (!is_dominant(w)) return false;
    if (std::any_of(w.labels.begin(), w.labels.end(), [](long x) { return x > 0; })) return false;
    if (w.shape.n == 0) return true;
    long nonzero_even = std::count_if(w.labels.begin(), w.labels.begin() + w.shape.m, [](long x) { return x != 0; });
    return nonzero_even <= -w(w.shape.m + 1);
}

BranchRule resolve_rule(const Weight& top, BranchRule rule) {
    if (rule != BranchRule::automatic) return rule;
    if (covariant_admissible(top)) return BranchRule::covariant;
    if (contravariant_admissible(top)) return BranchRule::contravariant;
    return BranchRule::generic;
}

std::vector<long> covariant_partition(const Weight& w) {
    const int m = w.shape.m;
    std::vector<long> rows(w.labels.begin(), w.labels.begin() + m);
    long beyond = w.shape.n > 0 ? w(m + 1) : 0;
    for (long j = 1; j <= beyond; ++j) {
        long len = 0;
        for (int mu = 1; mu <= w.shape.n; ++mu)
            if (w(m + mu) >= j) ++len;
        rows.push_back(len);
    }
    while (!rows.empty() && rows.back() == 0) rows.pop_back();
    return rows;
}

bool covariant_from_partition(const std::vector<long>& rows, const Shape& s, Weight& out) {
    for (std::size_t i = s.m; i < rows.size(); ++i)
        if (rows[i] > s.n) return false;
    std::vector<long> labels(s.size(), 0);
    for (int i = 0; i < s.m && i < static_cast<int>(rows.size()); ++i) labels[i] = rows[i];
    for (int mu = 1; mu <= s.n; ++mu) labels[s.m + mu - 1] = std::max(column_length(rows, mu) - s.m, 0L);
    out = Weight(s, labels);
    return true;
}

std::vector<long> contravariant_partition(const Weight& w) {
    const int a = w.shape.m, b = w.shape.n;
    std::vector<long> cols(b), arms(a);
    for (int c = 1; c <= b; ++c) cols[c - 1] = -w(a + b + 1 - c);
    for (int i = 1; i <= a; ++i) arms[i - 1] = -w(a + 1 - i);
    long nrows = std::max<long>(b ? cols[0] : 0, a);
    std::vector<long> rows;
    for (long i = 1; i <= nrows; ++i) {
        long base = std::count_if(cols.begin(), cols.end(), [i](long c) { return c >= i; });
        rows.push_back(base + (i <= a ? arms[i - 1] : 0));
    }
    while (!rows.empty() && rows.back() == 0) rows.pop_back();
    return rows;
}

bool valid_branch(const Weight& parent, const Weight& child) {
    const Shape S = parent.shape;
    if (S.size() < 2 || child.shape != child_shape(S)) return false;
    if (!is_dominant(parent) || !is_dominant(child)) return false;
    const int K = S.size();
    if (S.n > 0) {
        for (int i = 1; i <= S.m; ++i) {
            long d = parent(i) - child(i);
            if (d != 0 && d != 1) return false;
        }
        for (int p = S.m + 1; p < K; ++p)
            if (parent(p) < child(p) || child(p) < parent(p + 1)) return false;
        return true;
    }
    for (int i = 1; i < K; ++i)
        if (parent(i) < child(i) || child(i) < parent(i + 1)) return false;
    return true;
}

bool branch_allowed(const Weight& parent, const Weight& child, BranchRule rule) {
    if (!valid_branch(parent, child)) return false;
    switch (resolve_rule(parent, rule)) {
    case BranchRule::generic:
        return true;
    case BranchRule::covariant:
        return covariant_admissible(parent) && covariant_admissible(child);
    case BranchRule::contravariant: {
        if (!contravariant_admissible(parent) || !contravariant_admissible(child)) return false;
        if (parent.shape.n == 0) return true;
        // Restriction commutes with duality: branch the dual diagrams covariantly.
        Weight P, c;
        if (!covariant_from_partition(contravariant_partition(parent), parent.shape, P)) return false;
        if (!covariant_from_partition(contravariant_partition(child), child.shape, c)) return false;
        return valid_branch(P, c) && covariant_admissible(c);
    }
    case BranchRule::automatic:
        break;
    }
    return false;
}

std::vector<Weight> branch(const Weight& parent, BranchRule rule) {
    std::vector<Weight> out;
    const Shape S = parent.shape;
    if (S.size() < 2 || !is_dominant(parent)) return out;
    rule = resolve_rule(parent, rule);
    const Shape cs = child_shape(S);
    const int K = S.size();
    // Candidate ranges per child label.
    std::vector<std::pair<long, long>> range(K - 1);
    for (int p = 1; p < K; ++p) {
        if (S.n > 0 && p <= S.m) range[p - 1] = {parent(p) - 1, parent(p)};
        else range[p - 1] = {parent(p + 1), parent(p)};
    }
    std::vector<long> cur(K - 1);
    std::function<void(int)> rec = [&](int k) {
        if (k == K - 1) {
            Weight c(cs, cur);
            if (branch_allowed(parent, c, rule)) out.push_back(std::move(c));
            return;
        }
        for (long v = range[k].first; v <= range[k].second; ++v) {
            cur[k] = v;
            rec(k + 1);
        }
    };
    rec(0);
    std::sort(out.begin(), out.end(), [](const Weight& x, const Weight& y) { return x.labels < y.labels; });
    return out;
}

std::vector<GTPattern> enumerate_patterns(const Weight& top, BranchRule rule) {
    std::vector<GTPattern> out;
    if (!is_dominant(top)) return out;
    rule = resolve_rule(top, rule);
    std::vector<Weight> rows{top};
    std::function<void()> rec = [&]() {
        const Weight& last = rows.back();
        if (last.size() == 1) {
            out.push_back(GTPattern{rows});
            return;
        }
        for (Weight& c : branch(last, rule)) {
            rows.push_back(std::move(c));
            rec();
            rows.pop_back();
        }
    };
    rec();
    return out;
}

std::size_t pattern_count(const Weight& top, BranchRule rule) {
    rule = resolve_rule(top, rule);
    std::function<std::size_t(const Weight&)> rec = [&](const Weight& w) -> std::size_t {
        if (w.size() == 1) return 1;
        std::size_t total = 0;
        for (const Weight& c : branch(w, rule)) total += rec(c);
        return total;
    };
    return is_dominant(top) ? rec(top) : 0;
}

bool valid_pattern(const GTPattern& p, BranchRule rule) {
    if (p.rows.empty() || p.rows.back().size() != 1) return false;
    rule = resolve_rule(p.top(), rule);
    for (std::size_t k = 0; k + 1 < p.rows.size(); ++k)
        if (!branch_allowed(p.rows[k], p.rows[k + 1], rule)) return false;
    return true;
}

int pattern_parity(const GTPattern& p) {
    long total = 0;
    const int m = p.top().shape.m;
    for (int K = p.size(); K > m && K >= 2; --K)
        for (int i = 1; i <= m; ++i) total += p.level(K)(i) - p.level(K - 1)(i);
    return static_cast<int>(((total % 2) + 2) % 2);
}

Rational even_dimension(const Weight& w) {
    Rational d(1);
    auto block = [&](int from, int to) {
        for (int i = from; i <= to; ++i)
            for (int j = i + 1; j <= to; ++j) d *= Rational(w(i) - w(j) + j - i, j - i);
    };
    block(1, w.shape.m);
    block(w.shape.m + 1, w.size());
    return d;
}

} // namespace sw
