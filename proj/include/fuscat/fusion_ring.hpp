#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fuscat/intpoly.hpp"
#include "fuscat/matrix.hpp"
#include "fuscat/numbers.hpp"
#include "fuscat/quadval.hpp"

namespace fuscat {

// Based ring data: rank, duality involution, structure constant tensor
// N[i][j][k] with X_i X_j = sum_k N[i][j][k] X_k. Construction validates
// shape only; axioms are checked by verify_based_ring.
class FusionRing {
public:
    FusionRing(int rank, std::vector<int> dual, std::vector<long long> tensor,
               std::vector<std::string> labels = {});

    int rank() const { return rank_; }
    int dual(int i) const { return dual_[i]; }
    const std::vector<int>& dual_perm() const { return dual_; }
    long long N(int i, int j, int k) const {
        return n_[(static_cast<size_t>(i) * rank_ + j) * rank_ + k];
    }
    const std::vector<std::string>& labels() const { return labels_; }
    std::string label(int i) const;

    bool operator==(const FusionRing& o) const {
        return rank_ == o.rank_ && dual_ == o.dual_ && n_ == o.n_;
    }

private:
    int rank_;
    std::vector<int> dual_;
    std::vector<long long> n_;
    std::vector<std::string> labels_;
};

struct AxiomCheck {
    std::string name;
    bool pass;
    std::string detail;  // empty when passing
};

struct VerificationReport {
    bool pass;                          // all mandatory axioms
    std::vector<AxiomCheck> mandatory;  // nonnegativity, unit, duality, associativity
    std::vector<AxiomCheck> extended;   // reported separately, never gates
};

VerificationReport verify_based_ring(const FusionRing& r);

// Left multiplication matrices, (M_i)_{kj} = N[i][j][k].
std::vector<IntMatrix> mult_matrices(const FusionRing& r);

struct FpdimResult {
    std::vector<QuadVal> dims;  // Perron eigenvalue per basis element
    QuadVal total;              // sum of squares
};

// Largest positive eigenvalue of each M_i, exact; rank <= 4 only.
FpdimResult fpdim(const FusionRing& r);

struct CodegreeSet {
    std::vector<QuadVal> values;  // size 4, sorted descending
    IntPoly source_poly;
};

// Eigenvalues of A = 1 + M_Y^2 + 2 M_X M_Z for a rank-4 ring with duality
// (0)(X Z)(Y) in basis order (1, X, Y, Z); cross-checked against
// sum_i M_i M_{i*}.
CodegreeSet formal_codegrees(const FusionRing& r);

IntMatrix codegree_matrix(const FusionRing& r);

// Basis permutation fixing 0 and intertwining dualities and tensors, if any.
std::optional<std::vector<int>> is_isomorphic(const FusionRing& r1, const FusionRing& r2);

// JSON ring file format:
// {"rank": 4, "dual": [0,3,2,1], "N": [[[...]]], "labels": [...](optional)}
FusionRing ring_from_json_text(const std::string& text);
std::string ring_to_json_text(const FusionRing& r);
FusionRing load_ring(const std::string& path);

}  // namespace fuscat
