#pragma once

#include "superwig/algebra.hpp"
#include "superwig/branching.hpp"
#include "superwig/exact.hpp"
#include "superwig/rwc.hpp"

#include <Eigen/SparseCore>

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace sw {

using SparseQ = Eigen::SparseMatrix<Rational>;
using StateVector = Eigen::SparseVector<Rational>;

// Explicit matrix realization: generator E_pq is gens[(p-1)*N + (q-1)].
struct RepModule {
    Shape shape;
    int dim = 0;
    std::vector<std::vector<long>> weights;
    std::vector<int> parities;
    std::vector<SparseQ> gens;
    std::vector<Rational> form;         // diagonal invariant form
    std::vector<GTPattern> patterns;    // set for GT realizations

    const SparseQ& E(int p, int q) const { return gens[(p - 1) * shape.size() + (q - 1)]; }
    SparseQ& E(int p, int q) { return gens[(p - 1) * shape.size() + (q - 1)]; }
};

RepModule vector_module(const Shape& s);
// Contragredient of M; form_one selects the indefinite form (-1)^(m+n)(-1)^(a) on a dual vector module.
RepModule dual_module(const RepModule& M, bool form_one = false);
RepModule graded_tensor(const RepModule& A, const RepModule& B);
RepModule trivial_module(const Shape& s);

bool supercommutation_holds(const RepModule& M);

StateVector apply(const RepModule& M, int p, int q, const StateVector& v);
// Common weight of the support of v; throws Inconsistent when mixed.
std::vector<long> weight_of(const RepModule& M, const StateVector& v);
Rational inner(const RepModule& M, const StateVector& a, const StateVector& b);
inline Rational norm(const RepModule& M, const StateVector& v) { return inner(M, v, v); }

// Kernel of a rational matrix by fraction-free elimination; one column per kernel vector.
RationalMatrix nullspace(const RationalMatrix& A);

struct WeightedVector {
    std::vector<long> weight;
    StateVector vec;
};
// Kernel of every E_{p,p+1}, weight spaces in decreasing order.
std::vector<WeightedVector> highest_weight_vectors(const RepModule& M);

// Span of repeated lowering by E_{p+1,p}, p < K, grouped by weight.
std::map<std::vector<long>, std::vector<StateVector>> cyclic_submodule(const RepModule& M, const StateVector& v, int K);

struct GTVector {
    GTPattern pattern;
    StateVector vec;
};
// Gelfand-Tsetlin basis of the irreducible generated by a highest-weight vector h.
std::vector<GTVector> gt_basis(const RepModule& M, const StateVector& h);
// Module on the span of the given GT vectors; the form records their norms.
RepModule realization(const RepModule& M, const std::vector<GTVector>& basis);

// Projector eigenvalues per sector (row K, row K-1) of a GT realization.
struct SectorValues {
    Weight Lambda, lambda;
    bool degenerate = false;
    std::map<int, Rational> c;                       // r -> c_r
    std::map<std::pair<int, int>, Rational> rho;     // (r,u) -> rho_ru
};
std::vector<SectorValues> projector_invariants(const RepModule& R, int K, Variant variant);

// Projector stack check on a realized irreducible: characteristic identity, resolution of identity,
// idempotency and orthogonality, at the top level.
bool projector_identities_hold(const RepModule& R, Variant variant);

struct DirectEntry {
    int target = 0;   // index into the component's GT vectors
    int j = 0;        // vector index
    int source = 0;   // basis index of the realized factor
    CoefficientValue value;
};
struct Component {
    Weight weight;
    std::vector<GTVector> basis;
};
// Coupling coefficients of one component of V (x) R against e_j (x) s_a.
std::vector<DirectEntry> direct_wc(const RepModule& V, const RepModule& R, const RepModule& T, const Component& comp);

} // namespace sw
