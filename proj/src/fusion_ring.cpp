#include "fuscat/fusion_ring.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fuscat/errors.hpp"

namespace fuscat {

FusionRing::FusionRing(int rank, std::vector<int> dual, std::vector<long long> tensor,
                       std::vector<std::string> labels)
    : rank_(rank), dual_(std::move(dual)), n_(std::move(tensor)), labels_(std::move(labels)) {
    if (rank_ < 1) throw ShapeMismatch("FusionRing: rank must be positive");
    if (dual_.size() != static_cast<size_t>(rank_))
        throw ShapeMismatch("FusionRing: dual permutation has wrong length");
    if (n_.size() != static_cast<size_t>(rank_) * rank_ * rank_)
        throw ShapeMismatch("FusionRing: tensor has wrong shape");
    for (int d : dual_)
        if (d < 0 || d >= rank_) throw ShapeMismatch("FusionRing: dual index out of range");
    if (!labels_.empty() && labels_.size() != static_cast<size_t>(rank_))
        throw ShapeMismatch("FusionRing: labels have wrong length");
}

std::string FusionRing::label(int i) const {
    if (!labels_.empty()) return labels_[i];
    if (i == 0) return "1";
    return "X" + std::to_string(i);
}

VerificationReport verify_based_ring(const FusionRing& r) {
    VerificationReport rep;
    int n = r.rank();
    auto fail_detail = [&](int i, int j, int k) {
        return "at N[" + std::to_string(i) + "][" + std::to_string(j) + "][" + std::to_string(k) + "]";
    };

    bool ok = true;
    std::string detail;
    for (int i = 0; i < n && ok; ++i)
        for (int j = 0; j < n && ok; ++j)
            for (int k = 0; k < n && ok; ++k)
                if (r.N(i, j, k) < 0) { ok = false; detail = fail_detail(i, j, k); }
    rep.mandatory.push_back({"nonnegativity", ok, detail});

    ok = true;
    detail.clear();
    if (r.dual(0) != 0) { ok = false; detail = "dual(0) != 0"; }
    for (int i = 0; i < n && ok; ++i)
        if (r.dual(r.dual(i)) != i) { ok = false; detail = "dual not an involution at " + std::to_string(i); }
    rep.mandatory.push_back({"duality involution", ok, detail});

    ok = true;
    detail.clear();
    for (int j = 0; j < n && ok; ++j)
        for (int k = 0; k < n && ok; ++k) {
            if (r.N(0, j, k) != (j == k ? 1 : 0)) { ok = false; detail = fail_detail(0, j, k); break; }
            if (r.N(j, 0, k) != (j == k ? 1 : 0)) { ok = false; detail = fail_detail(j, 0, k); break; }
        }
    rep.mandatory.push_back({"unit", ok, detail});

    ok = true;
    detail.clear();
    for (int i = 0; i < n && ok; ++i)
        for (int j = 0; j < n && ok; ++j)
            if (r.N(i, j, 0) != (r.dual(i) == j ? 1 : 0)) { ok = false; detail = fail_detail(i, j, 0); }
    rep.mandatory.push_back({"duality (N_ij^0 = delta_{i,j*})", ok, detail});

    ok = true;
    detail.clear();
    for (int i = 0; i < n && ok; ++i)
        for (int j = 0; j < n && ok; ++j)
            for (int k = 0; k < n && ok; ++k)
                for (int l = 0; l < n && ok; ++l) {
                    long long lhs = 0, rhs = 0;
                    for (int m = 0; m < n; ++m) {
                        lhs += r.N(i, j, m) * r.N(m, k, l);
                        rhs += r.N(j, k, m) * r.N(i, m, l);
                    }
                    if (lhs != rhs) {
                        ok = false;
                        detail = "(" + std::to_string(i) + "," + std::to_string(j) + "," +
                                 std::to_string(k) + "," + std::to_string(l) + ")";
                    }
                }
    rep.mandatory.push_back({"associativity", ok, detail});

    ok = true;
    detail.clear();
    for (int i = 0; i < n && ok; ++i)
        for (int j = 0; j < n && ok; ++j)
            for (int k = 0; k < n && ok; ++k)
                if (r.N(i, j, k) != r.N(r.dual(j), r.dual(i), r.dual(k))) {
                    ok = false;
                    detail = fail_detail(i, j, k);
                }
    rep.extended.push_back({"duality symmetry (N_ij^k = N_{j*i*}^{k*})", ok, detail});

    rep.pass = std::all_of(rep.mandatory.begin(), rep.mandatory.end(),
                           [](const AxiomCheck& a) { return a.pass; });
    return rep;
}

std::vector<IntMatrix> mult_matrices(const FusionRing& r) {
    int n = r.rank();
    std::vector<IntMatrix> ms;
    ms.reserve(n);
    for (int i = 0; i < n; ++i) {
        IntMatrix m(n);
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) m.at(k, j) = make_int(r.N(i, j, k));
        ms.push_back(std::move(m));
    }
    return ms;
}

FpdimResult fpdim(const FusionRing& r) {
    if (r.rank() > 4)
        throw EigenvalueDegreeTooHigh("fpdim: exact eigenvalues restricted to rank <= 4");
    FpdimResult out;
    for (const IntMatrix& m : mult_matrices(r)) {
        ExactRoots roots = exact_roots(char_poly(m));
        if (roots.real.empty()) throw Error("fpdim: no real eigenvalue");
        // maximal real eigenvalue, unique as a value by Perron-Frobenius
        QuadVal best = roots.real[0];
        for (const QuadVal& v : roots.real)
            if (compare(v, best) > 0) best = v;
        out.dims.push_back(best);
    }
    QuadVal total;
    for (const QuadVal& d : out.dims) total += d * d;
    out.total = total;
    return out;
}

IntMatrix codegree_matrix(const FusionRing& r) {
    if (r.rank() != 4) throw ShapeMismatch("codegree_matrix: rank-4 rings only");
    std::vector<int> expect = {0, 3, 2, 1};
    if (r.dual_perm() != expect)
        throw ShapeMismatch("codegree_matrix: basis order (1, X, Y, Z) with X* = Z required");
    auto ms = mult_matrices(r);
    IntMatrix a = IntMatrix::identity(4) + ms[2] * ms[2] + (ms[1] * ms[3]).scaled(2);
    // cross-check against sum_i M_i M_{i*}
    IntMatrix sum(4);
    for (int i = 0; i < 4; ++i) sum = sum + ms[i] * ms[r.dual(i)];
    if (!(a == sum))
        throw Error("codegree_matrix: 1 + M_Y^2 + 2 M_X M_Z disagrees with sum M_i M_{i*}");
    return a;
}

CodegreeSet formal_codegrees(const FusionRing& r) {
    IntMatrix a = codegree_matrix(r);
    IntPoly p = char_poly(a);
    ExactRoots roots = exact_roots(p);
    if (roots.nonreal_pairs != 0 || roots.real.size() != 4)
        throw Error("formal_codegrees: expected four real eigenvalues");
    std::sort(roots.real.begin(), roots.real.end(),
              [](const QuadVal& x, const QuadVal& y) { return compare(x, y) > 0; });
    return CodegreeSet{std::move(roots.real), std::move(p)};
}

std::optional<std::vector<int>> is_isomorphic(const FusionRing& r1, const FusionRing& r2) {
    if (r1.rank() != r2.rank()) return std::nullopt;
    int n = r1.rank();
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    do {
        if (perm[0] != 0) continue;
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            if (perm[r1.dual(i)] != r2.dual(perm[i])) ok = false;
        for (int i = 0; i < n && ok; ++i)
            for (int j = 0; j < n && ok; ++j)
                for (int k = 0; k < n && ok; ++k)
                    if (r1.N(i, j, k) != r2.N(perm[i], perm[j], perm[k])) ok = false;
        if (ok) return perm;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

FusionRing ring_from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ShapeMismatch(std::string("ring JSON: parse error: ") + e.what());
    }
    try {
        int rank = j.at("rank").get<int>();
        std::vector<int> dual = j.at("dual").get<std::vector<int>>();
        const auto& nj = j.at("N");
        std::vector<long long> tensor;
        tensor.reserve(static_cast<size_t>(rank) * rank * rank);
        if (static_cast<int>(nj.size()) != rank) throw ShapeMismatch("ring JSON: N has wrong shape");
        for (const auto& plane : nj) {
            if (static_cast<int>(plane.size()) != rank)
                throw ShapeMismatch("ring JSON: N has wrong shape");
            for (const auto& row : plane) {
                if (static_cast<int>(row.size()) != rank)
                    throw ShapeMismatch("ring JSON: N has wrong shape");
                for (const auto& v : row) tensor.push_back(v.get<long long>());
            }
        }
        std::vector<std::string> labels;
        if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
        return FusionRing(rank, std::move(dual), std::move(tensor), std::move(labels));
    } catch (const nlohmann::json::exception& e) {
        throw ShapeMismatch(std::string("ring JSON: ") + e.what());
    }
}

std::string ring_to_json_text(const FusionRing& r) {
    nlohmann::json j;
    j["rank"] = r.rank();
    j["dual"] = r.dual_perm();
    nlohmann::json nj = nlohmann::json::array();
    for (int i = 0; i < r.rank(); ++i) {
        nlohmann::json plane = nlohmann::json::array();
        for (int jj = 0; jj < r.rank(); ++jj) {
            nlohmann::json row = nlohmann::json::array();
            for (int k = 0; k < r.rank(); ++k) row.push_back(r.N(i, jj, k));
            plane.push_back(std::move(row));
        }
        nj.push_back(std::move(plane));
    }
    j["N"] = std::move(nj);
    if (!r.labels().empty()) j["labels"] = r.labels();
    return j.dump(2) + "\n";
}

FusionRing load_ring(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open ring file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ring_from_json_text(ss.str());
}

}  // namespace fuscat
