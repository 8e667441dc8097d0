#include "superwig/algebra.hpp"
#include "superwig/errors.hpp"

#include <algorithm>
#include <sstream>

namespace sw {

Weight::Weight(Shape s, std::vector<long> l) : shape(s), labels(std::move(l)) {
    if (s.m < 0 || s.n < 0 || static_cast<int>(labels.size()) != s.size())
        throw DomainError("weight has " + std::to_string(labels.size()) + " labels, shape needs " +
                          std::to_string(s.size()));
}

std::string Weight::str() const {
    std::ostringstream os;
    os << "(";
    for (int p = 1; p <= size(); ++p) {
        if (p > 1) os << (p == shape.m + 1 ? "|" : ",");
        os << labels[p - 1];
    }
    os << ")";
    return os.str();
}

bool is_dominant(const Weight& w) {
    for (int p = 1; p < w.size(); ++p)
        if (p != w.shape.m && w(p) < w(p + 1)) return false;
    return true;
}

Weight shifted(const Weight& w, int p, long d) {
    Weight r = w;
    r(p) += d;
    return r;
}

Weight zero_weight(const Shape& s) { return Weight(s, std::vector<long>(s.size(), 0)); }

RootVector roots(const Weight& w, Variant variant, Level level) {
    const int m = w.shape.m, n = w.shape.n;
    RootVector r{w.shape, {}, variant, level};
    r.values.reserve(w.size());
    for (int i = 1; i <= m; ++i)
        r.values.emplace_back(variant == Variant::barred ? i - 1 - w(i) : w(i) + m - n - i);
    for (int mu = 1; mu <= n; ++mu)
        r.values.emplace_back(variant == Variant::barred ? w(m + mu) + m + 1 - mu : mu - w(m + mu) - n);
    return r;
}

RootVector convert_barred_unbarred(const RootVector& r) {
    RootVector out = r;
    out.variant = r.variant == Variant::barred ? Variant::unbarred : Variant::barred;
    const int m = r.shape.m, n = r.shape.n;
    for (int p = 1; p <= r.shape.size(); ++p)
        out.values[p - 1] = Rational(m - n + (grading(r.shape, p) ? 1 : -1)) - r(p);
    return out;
}

bool contains(const IndexSet& s, int p) { return std::find(s.begin(), s.end(), p) != s.end(); }

IndexSets index_sets(const Weight& Lambda, const Weight& lambda, Variant convention) {
    const Shape S = Lambda.shape;
    const int K = S.size();
    if (K < 2 || lambda.shape != child_shape(S))
        throw InvalidBranch("shapes " + Lambda.str() + " and " + lambda.str() + " do not form a branching pair");
    IndexSets s;
    if (S.n == 0) {
        s.classical = true;
        for (int k = 1; k < K; ++k) s.I.push_back(k);
        s.Iprime = s.I;
        s.Itilde = s.I;
        s.Itilde.push_back(K);
        s.ItildePrime = s.Itilde;
        return s;
    }
    const RootVector A = roots(Lambda, convention, Level::algebra);
    const RootVector A0 = roots(lambda, convention, Level::subalgebra);
    for (int i = 1; i <= S.m; ++i) {
        Rational d = A0(i) - A(i);
        bool lowered = convention == Variant::barred ? d == Rational(1) : d.is_zero();
        bool kept = convention == Variant::barred ? d.is_zero() : d == Rational(1);
        if (lowered) s.I0.push_back(i);
        else if (kept) s.Ibar0.push_back(i);
        else throw InvalidBranch("even label " + std::to_string(i) + " of " + lambda.str() +
                                 " is not Lambda_i or Lambda_i - 1 for " + Lambda.str());
    }
    for (int p = S.m + 1; p < K; ++p) s.I1.push_back(p);
    s.I = s.I0;
    s.I.insert(s.I.end(), s.I1.begin(), s.I1.end());
    s.Iprime = s.Ibar0;
    s.Iprime.insert(s.Iprime.end(), s.I1.begin(), s.I1.end());
    s.Itilde = s.I;
    s.Itilde.push_back(K);
    s.ItildePrime = s.Iprime;
    s.ItildePrime.push_back(K);
    return s;
}

} // namespace sw
