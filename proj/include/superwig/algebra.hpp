#pragma once

#include "superwig/exact.hpp"

#include <string>
#include <vector>

namespace sw {

struct Shape {
    int m = 0;
    int n = 0;

    int size() const { return m + n; }
    friend bool operator==(const Shape&, const Shape&) = default;
    friend auto operator<=>(const Shape&, const Shape&) = default;
};

// Grading of position p (1-based): 0 for p <= m, 1 otherwise.
inline int grading(const Shape& s, int p) { return p > s.m ? 1 : 0; }
inline int grading_sign(const Shape& s, int p) { return grading(s, p) ? -1 : 1; }

// Shape of the algebra at level K of the chain gl(m|n) > gl(m|n-1) > ... > gl(m) > ... > gl(1).
inline Shape level_shape(int m, int K) { return K > m ? Shape{m, K - m} : Shape{K, 0}; }
// Shape of the next algebra down the chain.
inline Shape child_shape(const Shape& s) { return s.n > 0 ? Shape{s.m, s.n - 1} : Shape{s.m - 1, 0}; }

// Integral weight; labels[p-1] is the coefficient of epsilon_p.
struct Weight {
    Shape shape;
    std::vector<long> labels;

    Weight() = default;
    Weight(Shape s, std::vector<long> l);

    long operator()(int p) const { return labels[p - 1]; }
    long& operator()(int p) { return labels[p - 1]; }
    int size() const { return shape.size(); }

    std::string str() const;  // "(2,1|0)"
    friend bool operator==(const Weight&, const Weight&) = default;
    friend auto operator<=>(const Weight&, const Weight&) = default;
};

bool is_dominant(const Weight& w);
Weight shifted(const Weight& w, int p, long d);
// Zero weight of shape s.
Weight zero_weight(const Shape& s);

enum class Variant { barred, unbarred };
enum class Level { algebra, subalgebra };

struct RootVector {
    Shape shape;
    std::vector<Rational> values;
    Variant variant = Variant::barred;
    Level level = Level::algebra;

    const Rational& operator()(int p) const { return values[p - 1]; }
};

// Characteristic roots at a weight. Subalgebra roots of a child weight use the same
// formulas with the child's own shape, so the level only tags the result.
RootVector roots(const Weight& w, Variant variant, Level level = Level::algebra);
RootVector convert_barred_unbarred(const RootVector& r);
// Derivative of a root under the uniform shift w_p -> w_p + t.
inline int root_slope(Variant v, int grading) {
    return (v == Variant::barred) == (grading == 0) ? -1 : 1;
}

using IndexSet = std::vector<int>;
bool contains(const IndexSet& s, int p);

struct IndexSets {
    IndexSet I0, Ibar0, I1, I, Iprime, Itilde, ItildePrime;
    bool classical = false;
};

// Index sets of a branching pair. Super steps use the rule Lambda_i - lambda_i in {0,1};
// classical steps (n = 0) use I = I' = {1..K-1} and the top index appended.
IndexSets index_sets(const Weight& Lambda, const Weight& lambda, Variant convention);

} // namespace sw
