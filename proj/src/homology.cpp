#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "pclass/errors.hpp"
#include "pclass/homology.hpp"

namespace pclass {

namespace {

void xgcd(const mpz_class& x, const mpz_class& y, mpz_class& g, mpz_class& a,
          mpz_class& b) {
    mpz_gcdext(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t(), x.get_mpz_t(),
               y.get_mpz_t());
}

bool divisible(const mpz_class& v, const mpz_class& p) {
    return mpz_divisible_p(v.get_mpz_t(), p.get_mpz_t()) != 0;
}

mpz_class exact_div(const mpz_class& v, const mpz_class& p) {
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
    return q;
}

/** Sort a list of diagonal entries into an invariant-factor chain
 *  d₁ | d₂ | ... by repeated gcd/lcm exchanges.  The multiset of products
 *  of k-subsets is preserved, so this computes the Smith form of the
 *  diagonal matrix the entries came from. */
void enforce_divisibility_chain(std::vector<mpz_class>& d) {
    for (mpz_class& v : d) v = abs(v);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < d.size(); ++i)
            for (std::size_t j = i + 1; j < d.size(); ++j) {
                if (divisible(d[j], d[i])) continue;
                mpz_class g = gcd(d[i], d[j]);
                d[j] = exact_div(d[i] * d[j], g);
                d[i] = g;
                changed = true;
            }
    }
}

// --------------------------------------------------------------------------
// Dense Smith normal form with all four transforms tracked.

struct DenseSnf {
    IntMatrix S, U, V, Uinv, Vinv;
    std::size_t rows = 0, cols = 0, rank = 0;

    explicit DenseSnf(const IntMatrix& M) {
        rows = M.size();
        cols = rows ? M[0].size() : 0;
        for (const auto& r : M)
            PCLASS_CHECK(r.size() == cols, "matrix rows must have equal length");
        S = M;
        auto identity = [](std::size_t n) {
            IntMatrix I(n, std::vector<mpz_class>(n, 0));
            for (std::size_t i = 0; i < n; ++i) I[i][i] = 1;
            return I;
        };
        U = Uinv = identity(rows);
        V = Vinv = identity(cols);
        reduce();
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        std::swap(S[a], S[b]);
        std::swap(U[a], U[b]);
        // Uinv tracks U⁻¹: a row swap on U is a column swap on U⁻¹.
        for (std::size_t i = 0; i < rows; ++i) std::swap(Uinv[i][a], Uinv[i][b]);
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < rows; ++i) std::swap(S[i][a], S[i][b]);
        for (std::size_t i = 0; i < cols; ++i) std::swap(V[i][a], V[i][b]);
        std::swap(Vinv[a], Vinv[b]);
    }
    /** row[a] -= q * row[t] */
    void row_sub(std::size_t a, const mpz_class& q, std::size_t t) {
        for (std::size_t j = 0; j < cols; ++j) S[a][j] -= q * S[t][j];
        for (std::size_t j = 0; j < rows; ++j) U[a][j] -= q * U[t][j];
        for (std::size_t i = 0; i < rows; ++i) Uinv[i][t] += q * Uinv[i][a];
    }
    /** col[a] -= q * col[t] */
    void col_sub(std::size_t a, const mpz_class& q, std::size_t t) {
        for (std::size_t i = 0; i < rows; ++i) S[i][a] -= q * S[i][t];
        for (std::size_t i = 0; i < cols; ++i) V[i][a] -= q * V[i][t];
        for (std::size_t j = 0; j < cols; ++j) Vinv[t][j] += q * Vinv[a][j];
    }
    void negate_row(std::size_t a) {
        for (auto& v : S[a]) v = -v;
        for (auto& v : U[a]) v = -v;
        for (std::size_t i = 0; i < rows; ++i) Uinv[i][a] = -Uinv[i][a];
    }

    void reduce() {
        std::size_t t = 0;
        while (t < rows && t < cols) {
            // Smallest nonzero entry of the trailing submatrix as pivot.
            std::size_t pi = t, pj = t;
            bool found = false;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j) {
                    if (S[i][j] == 0) continue;
                    if (!found || mpz_cmpabs(S[i][j].get_mpz_t(), S[pi][pj].get_mpz_t()) < 0) {
                        pi = i;
                        pj = j;
                        found = true;
                    }
                }
            if (!found) break;
            swap_rows(t, pi);
            swap_cols(t, pj);
            for (;;) {
                // Clear column t, then row t; remainders become new pivots.
                bool dirty = false;
                for (std::size_t i = t + 1; i < rows; ++i)
                    while (S[i][t] != 0) {
                        mpz_class q = S[i][t] / S[t][t];  // truncated division
                        row_sub(i, q, t);
                        if (S[i][t] != 0) {
                            swap_rows(t, i);
                            dirty = true;
                        }
                    }
                for (std::size_t j = t + 1; j < cols; ++j)
                    while (S[t][j] != 0) {
                        mpz_class q = S[t][j] / S[t][t];
                        col_sub(j, q, t);
                        if (S[t][j] != 0) {
                            swap_cols(t, j);
                            dirty = true;
                        }
                    }
                if (dirty) continue;
                // Pivot must divide the whole trailing submatrix.
                bool bumped = false;
                for (std::size_t i = t + 1; i < rows && !bumped; ++i)
                    for (std::size_t j = t + 1; j < cols && !bumped; ++j)
                        if (!divisible(S[i][j], S[t][t])) {
                            row_sub(t, mpz_class(-1), i);  // row t += row i
                            bumped = true;
                        }
                if (!bumped) break;
            }
            if (S[t][t] < 0) negate_row(t);
            ++t;
        }
        rank = t;
    }
};

// --------------------------------------------------------------------------
// Sparse elimination over ℤ without transforms: rank and invariant factors.
// Rows are maps col -> value; column supports are kept in sync.  Pivots use
// gcd row combinations, so every column is cleared in one sweep; row
// clearing only ever touches the pivot row because its column is already
// singleton.

class SparseElim {
  public:
    SparseElim(std::size_t nrows, std::size_t ncols)
        : rows_(nrows), colsupp_(ncols) {}

    void add(std::size_t r, std::size_t c, int v) {
        if (v == 0) return;
        rows_[r][c] = v;
        colsupp_[c].insert(r);
    }

    void run() {
        std::vector<bool> row_done(rows_.size(), false);
        for (;;) {
            // Pivot choice: among the sparsest rows, smallest |value| with
            // the cheapest fill estimate.
            std::size_t best_r = 0, best_c = 0;
            bool found = false;
            mpz_class best_val;
            std::size_t best_fill = 0, scanned = 0;
            std::vector<std::pair<std::size_t, std::size_t>> order;
            order.reserve(rows_.size());
            for (std::size_t r = 0; r < rows_.size(); ++r)
                if (!row_done[r] && !rows_[r].empty())
                    order.emplace_back(rows_[r].size(), r);
            std::sort(order.begin(), order.end());
            for (const auto& [sz, r] : order) {
                for (const auto& [c, v] : rows_[r]) {
                    std::size_t fill = (sz - 1) * (colsupp_[c].size() - 1);
                    if (!found || mpz_cmpabs(v.get_mpz_t(), best_val.get_mpz_t()) < 0 ||
                        (mpz_cmpabs(v.get_mpz_t(), best_val.get_mpz_t()) == 0 && fill < best_fill)) {
                        found = true;
                        best_r = r;
                        best_c = c;
                        best_val = v;
                        best_fill = fill;
                    }
                }
                if (++scanned >= 24 && found && (best_val == 1 || best_val == -1))
                    break;
            }
            if (!found) break;
            eliminate(best_r, best_c);
            row_done[best_r] = true;
        }
        enforce_divisibility_chain(pivots_);
    }

    std::size_t rank() const { return pivots_.size(); }
    const std::vector<mpz_class>& invariant_factors() const { return pivots_; }

  private:
    void set_entry(std::size_t r, std::size_t c, const mpz_class& v) {
        auto it = rows_[r].find(c);
        if (v == 0) {
            if (it != rows_[r].end()) {
                rows_[r].erase(it);
                colsupp_[c].erase(r);
            }
        } else if (it == rows_[r].end()) {
            rows_[r].emplace(c, v);
            colsupp_[c].insert(r);
        } else {
            it->second = v;
        }
    }

    /** rows r1, r2 <- (a·r1 + b·r2, c·r1 + d·r2), unimodular. */
    void combine_rows(std::size_t r1, std::size_t r2, const mpz_class& a,
                      const mpz_class& b, const mpz_class& c, const mpz_class& d) {
        std::map<std::size_t, mpz_class> n1, n2;
        auto gather = [&](const mpz_class& f1, const mpz_class& f2,
                          std::map<std::size_t, mpz_class>& out) {
            for (const auto& [col, v] : rows_[r1]) out[col] += f1 * v;
            for (const auto& [col, v] : rows_[r2]) out[col] += f2 * v;
        };
        gather(a, b, n1);
        gather(c, d, n2);
        for (const auto& [col, v] : rows_[r1]) colsupp_[col].erase(r1);
        for (const auto& [col, v] : rows_[r2]) colsupp_[col].erase(r2);
        rows_[r1].clear();
        rows_[r2].clear();
        for (auto& [col, v] : n1)
            if (v != 0) {
                rows_[r1].emplace(col, v);
                colsupp_[col].insert(r1);
            }
        for (auto& [col, v] : n2)
            if (v != 0) {
                rows_[r2].emplace(col, v);
                colsupp_[col].insert(r2);
            }
    }

    void eliminate(std::size_t i, std::size_t j) {
        for (;;) {
            // Clear column j with gcd combinations; the pivot may shrink.
            for (;;) {
                auto supp = colsupp_[j];
                bool acted = false;
                for (std::size_t r : supp) {
                    if (r == i) continue;
                    mpz_class p = rows_[i][j], v = rows_[r][j];
                    if (divisible(v, p)) {
                        mpz_class q = exact_div(v, p);
                        combine_rows(i, r, 1, 0, -q, 1);
                    } else {
                        mpz_class g, a, b;
                        xgcd(p, v, g, a, b);
                        combine_rows(i, r, a, b, -exact_div(v, g), exact_div(p, g));
                    }
                    acted = true;
                }
                if (!acted) break;
            }
            // Row i must be divisible by the pivot; euclidean column steps
            // only touch row i because column j is now a singleton.
            mpz_class p = rows_[i][j];
            std::size_t bad_col = 0;
            bool have_bad = false;
            for (const auto& [c, v] : rows_[i]) {
                if (c == j) continue;
                if (!divisible(v, p)) {
                    bad_col = c;
                    have_bad = true;
                    break;
                }
            }
            if (!have_bad) {
                // Clear row i: col c -= (v/p)·col j only changes entry (i,c)
                // because the support of column j is exactly {i}.
                std::vector<std::size_t> cs;
                for (const auto& [c, v] : rows_[i])
                    if (c != j) cs.push_back(c);
                for (std::size_t c : cs) set_entry(i, c, 0);
                break;
            }
            // col bad_col -= (v/p)·col j touches only row i because the
            // support of column j is exactly {i}; the remainder is a
            // strictly smaller nonzero value.  Swapping the two columns puts
            // it into pivot position, and the loop clears column j again.
            mpz_class v = rows_[i][bad_col];
            mpz_class rem = v - (v / p) * p;  // truncated remainder, |rem| < |p|
            PCLASS_CHECK(rem != 0, "nondivisible entry with zero remainder");
            set_entry(i, bad_col, rem);
            swap_columns(j, bad_col);
        }
        // Retire: drop the pivot row/column entirely.
        mpz_class p = abs(rows_[i][j]);
        PCLASS_CHECK(rows_[i].size() == 1 && colsupp_[j].size() == 1,
                     "pivot not isolated after elimination");
        set_entry(i, j, 0);
        pivots_.push_back(p);
    }

    void swap_columns(std::size_t a, std::size_t b) {
        std::set<std::size_t> touched = colsupp_[a];
        touched.insert(colsupp_[b].begin(), colsupp_[b].end());
        for (std::size_t r : touched) {
            mpz_class va = 0, vb = 0;
            auto ia = rows_[r].find(a);
            auto ib = rows_[r].find(b);
            if (ia != rows_[r].end()) va = ia->second;
            if (ib != rows_[r].end()) vb = ib->second;
            set_entry(r, a, vb);
            set_entry(r, b, va);
        }
    }

    std::vector<std::map<std::size_t, mpz_class>> rows_;
    std::vector<std::set<std::size_t>> colsupp_;
    std::vector<mpz_class> pivots_;
};

/** Sparse ∂ₖ of K, loaded into an eliminator (rows: (k-1)-faces). */
SparseElim boundary_elim(const SimplicialComplex& K, int k) {
    std::vector<Simplex> lo = K.faces(k - 1);
    std::vector<Simplex> hi = K.faces(k);
    std::map<Simplex, std::size_t> index;
    for (std::size_t i = 0; i < lo.size(); ++i) index.emplace(lo[i], i);
    SparseElim elim(lo.size(), hi.size());
    for (std::size_t j = 0; j < hi.size(); ++j) {
        const Simplex& f = hi[j];
        for (int i = 0; i <= k; ++i)
            elim.add(index.at(f.without_vertex(f[i])), j, (i % 2 == 0) ? 1 : -1);
    }
    return elim;
}

// --------------------------------------------------------------------------
// Column echelon over ℤ with V and V⁻¹ tracked: integral kernel lattices.

class ColumnKernel {
  public:
    /** M given by sparse rows (row -> list of (col, value)); n = #cols. */
    ColumnKernel(std::size_t nrows, std::size_t ncols,
                 const std::vector<std::vector<std::pair<std::size_t, int>>>& rows)
        : n_(ncols), cols_(ncols), rowsupp_(nrows) {
        V_.assign(n_, std::vector<mpz_class>(n_, 0));
        Vinv_.assign(n_, std::vector<mpz_class>(n_, 0));
        for (std::size_t i = 0; i < n_; ++i) V_[i][i] = Vinv_[i][i] = 1;
        col_slot_.assign(n_, kActive);
        for (std::size_t r = 0; r < nrows; ++r)
            for (const auto& [c, v] : rows[r])
                if (v != 0) {
                    cols_[c][r] = v;
                    rowsupp_[r].insert(c);
                }
        for (std::size_t r = 0; r < nrows; ++r) process_row(r);
        for (std::size_t c = 0; c < n_; ++c)
            if (col_slot_[c] == kActive) kernel_cols_.push_back(c);
    }

    std::size_t rank() const { return rank_; }
    std::size_t kernel_dim() const { return kernel_cols_.size(); }
    /** Kernel lattice basis vector k: the k-th never-pivoted column of V. */
    std::vector<mpz_class> kernel_col(std::size_t k) const {
        std::vector<mpz_class> out(n_);
        for (std::size_t i = 0; i < n_; ++i) out[i] = V_[i][kernel_cols_[k]];
        return out;
    }
    /** Kernel-basis coordinates of x; x must lie in the kernel (then V⁻¹·x
     *  is supported on the kernel columns and this is the full answer). */
    std::vector<mpz_class> coords(const std::vector<mpz_class>& x) const {
        PCLASS_CHECK(x.size() == n_, "coordinate size mismatch");
        std::vector<mpz_class> out(kernel_cols_.size(), 0);
        for (std::size_t k = 0; k < kernel_cols_.size(); ++k)
            for (std::size_t i = 0; i < n_; ++i)
                if (x[i] != 0 && Vinv_[kernel_cols_[k]][i] != 0)
                    out[k] += Vinv_[kernel_cols_[k]][i] * x[i];
        return out;
    }

  private:
    void process_row(std::size_t r) {
        // Active columns (index >= rank_) with a nonzero entry in row r.
        auto active_at = [&]() {
            std::vector<std::size_t> cs;
            for (std::size_t c : rowsupp_[r])
                if (col_slot_[c] == kActive) cs.push_back(c);
            std::sort(cs.begin(), cs.end());
            return cs;
        };
        std::vector<std::size_t> cs = active_at();
        if (cs.empty()) return;
        std::size_t keep = cs[0];
        for (std::size_t t = 1; t < cs.size(); ++t) {
            std::size_t kill = cs[t];
            mpz_class v1 = cols_[keep].at(r), v2 = cols_[kill].at(r);
            if (divisible(v2, v1)) {
                col_axpy(kill, -exact_div(v2, v1), keep);
            } else {
                mpz_class g, a, b;
                xgcd(v1, v2, g, a, b);
                col_combine(keep, kill, a, b, -exact_div(v2, g), exact_div(v1, g));
            }
        }
        col_slot_[keep] = rank_++;
    }

    /** col[a] += q·col[t]; V same; V⁻¹ row t -= q·row a. */
    void col_axpy(std::size_t a, const mpz_class& q, std::size_t t) {
        if (q == 0) return;
        for (const auto& [r, v] : cols_[t]) {
            mpz_class nv = (cols_[a].count(r) ? cols_[a][r] : mpz_class(0)) + q * v;
            set_entry(a, r, nv);
        }
        for (std::size_t i = 0; i < n_; ++i) V_[i][a] += q * V_[i][t];
        for (std::size_t j = 0; j < n_; ++j) Vinv_[t][j] -= q * Vinv_[a][j];
    }

    /** (col k, col l) <- (a·col k + b·col l, c·col k + d·col l), det 1;
     *  V transformed identically, V⁻¹ rows by the inverse block. */
    void col_combine(std::size_t k, std::size_t l, const mpz_class& a,
                     const mpz_class& b, const mpz_class& c, const mpz_class& d) {
        std::set<std::size_t> rows;
        for (const auto& [r, v] : cols_[k]) rows.insert(r);
        for (const auto& [r, v] : cols_[l]) rows.insert(r);
        for (std::size_t r : rows) {
            mpz_class vk = cols_[k].count(r) ? cols_[k][r] : mpz_class(0);
            mpz_class vl = cols_[l].count(r) ? cols_[l][r] : mpz_class(0);
            set_entry(k, r, a * vk + b * vl);
            set_entry(l, r, c * vk + d * vl);
        }
        for (std::size_t i = 0; i < n_; ++i) {
            mpz_class vk = V_[i][k], vl = V_[i][l];
            V_[i][k] = a * vk + b * vl;
            V_[i][l] = c * vk + d * vl;
        }
        // Inverse of [[a,c],[b,d]] (acting on columns k,l) is [[d,-c],[-b,a]].
        for (std::size_t j = 0; j < n_; ++j) {
            mpz_class rk = Vinv_[k][j], rl = Vinv_[l][j];
            Vinv_[k][j] = d * rk - c * rl;
            Vinv_[l][j] = -b * rk + a * rl;
        }
    }

    void set_entry(std::size_t c, std::size_t r, const mpz_class& v) {
        auto it = cols_[c].find(r);
        if (v == 0) {
            if (it != cols_[c].end()) {
                cols_[c].erase(it);
                rowsupp_[r].erase(c);
            }
        } else if (it == cols_[c].end()) {
            cols_[c].emplace(r, v);
            rowsupp_[r].insert(c);
        } else {
            it->second = v;
        }
    }

    static constexpr std::size_t kActive = static_cast<std::size_t>(-1);
    std::size_t n_, rank_ = 0;
    std::vector<std::map<std::size_t, mpz_class>> cols_;
    std::vector<std::set<std::size_t>> rowsupp_;
    std::vector<std::size_t> col_slot_;
    std::vector<std::size_t> kernel_cols_;
    IntMatrix V_, Vinv_;
};

/** ∂ₖ as sparse rows over the (k-1)-faces, plus the face lists. */
struct BoundaryData {
    std::vector<Simplex> lo, hi;
    std::vector<std::vector<std::pair<std::size_t, int>>> rows;  // by lo-index
};

BoundaryData boundary_rows(const SimplicialComplex& K, int k) {
    BoundaryData bd;
    bd.lo = K.faces(k - 1);
    bd.hi = K.faces(k);
    std::map<Simplex, std::size_t> index;
    for (std::size_t i = 0; i < bd.lo.size(); ++i) index.emplace(bd.lo[i], i);
    bd.rows.resize(bd.lo.size());
    for (std::size_t j = 0; j < bd.hi.size(); ++j)
        for (int i = 0; i <= k; ++i)
            bd.rows[index.at(bd.hi[j].without_vertex(bd.hi[j][i]))].emplace_back(
                j, (i % 2 == 0) ? 1 : -1);
    return bd;
}

std::vector<mpq_class> chain_vector(const RationalChain& ch,
                                    const std::vector<Simplex>& basis) {
    std::map<Simplex, std::size_t> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
    std::vector<mpq_class> out(basis.size(), 0);
    for (const auto& [s, c] : ch.coefficients) {
        auto it = index.find(s);
        PCLASS_CHECK(it != index.end(), "chain simplex is not a face of the complex");
        out[it->second] = c;
    }
    return out;
}

/** ∂ₖ applied to a rational k-chain; empty map iff the chain is a cycle. */
std::map<Simplex, mpq_class> boundary_of(const RationalChain& ch, int k) {
    std::map<Simplex, mpq_class> out;
    for (const auto& [s, c] : ch.coefficients) {
        PCLASS_CHECK(s.dim() == k, "chain has a simplex of the wrong dimension");
        for (int i = 0; i <= k; ++i) {
            mpq_class term = (i % 2 == 0) ? c : -c;
            auto [it, fresh] = out.emplace(s.without_vertex(s[i]), term);
            if (!fresh) it->second += term;
            if (it->second == 0) out.erase(it);
        }
    }
    return out;
}

/** The integral cocycle vectors spanning H^k(K;ℤ) modulo torsion, as vectors
 *  over the k-faces (in faces(k) order).  Built from the kernel lattice of
 *  ∂ₖ₊₁ᵀ and the Smith form of the coboundary image inside it. */
std::vector<std::vector<mpz_class>> free_cocycle_basis(const SimplicialComplex& K,
                                                       int k) {
    std::vector<Simplex> kfaces = K.faces(k);
    const std::size_t nk = kfaces.size();

    // Kernel lattice of ∂ₖ₊₁ᵀ: integral cocycles.
    BoundaryData up = boundary_rows(K, k + 1);  // lo = k-faces, hi = (k+1)-faces
    PCLASS_CHECK(up.lo.size() == nk, "face enumeration mismatch");
    std::vector<std::vector<std::pair<std::size_t, int>>> bt_rows(up.hi.size());
    for (std::size_t r = 0; r < up.rows.size(); ++r)
        for (const auto& [j, s] : up.rows[r]) bt_rows[j].emplace_back(r, s);
    ColumnKernel ker(up.hi.size(), nk, bt_rows);
    const std::size_t kappa = ker.kernel_dim();

    // Coboundaries in kernel coordinates: X = coords(∂ₖᵀ columns).  For
    // k = 0 there are no coboundaries and X has no columns.
    BoundaryData down;
    if (k > 0) down = boundary_rows(K, k);  // lo = (k-1)-faces, hi = k-faces
    const std::size_t nlow = down.lo.size();
    IntMatrix X(kappa, std::vector<mpz_class>(nlow, 0));
    for (std::size_t q = 0; q < nlow; ++q) {
        std::vector<mpz_class> col(nk, 0);
        for (const auto& [j, s] : down.rows[q]) col[j] = s;
        std::vector<mpz_class> coords = ker.coords(col);
        for (std::size_t p = 0; p < kappa; ++p) X[p][q] = coords[p];
    }
    DenseSnf snf(X);

    // Free quotient basis: cocycles N·(U⁻¹ eᵢ) for i past the rank.
    std::vector<std::vector<mpz_class>> out;
    for (std::size_t i = snf.rank; i < kappa; ++i) {
        std::vector<mpz_class> phi(nk, 0);
        for (std::size_t p = 0; p < kappa; ++p) {
            if (snf.Uinv[p][i] == 0) continue;
            std::vector<mpz_class> n = ker.kernel_col(p);
            for (std::size_t s = 0; s < nk; ++s) phi[s] += snf.Uinv[p][i] * n[s];
        }
        out.push_back(std::move(phi));
    }
    return out;
}

}  // namespace

// --------------------------------------------------------------------------

void RationalChain::add(const Simplex& s, const mpq_class& c) {
    if (c == 0) return;
    auto [it, fresh] = coefficients.emplace(s, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) coefficients.erase(it);
    }
}

RationalChain& RationalChain::operator+=(const RationalChain& o) {
    for (const auto& [s, c] : o.coefficients) add(s, c);
    return *this;
}

RationalChain& RationalChain::operator*=(const mpq_class& c) {
    if (c == 0) {
        coefficients.clear();
        return *this;
    }
    for (auto& [s, v] : coefficients) v *= c;
    return *this;
}

RationalChain chain_boundary(const RationalChain& ch, int k) {
    RationalChain out;
    out.coefficients = boundary_of(ch, k);
    return out;
}

SmithDecomposition smith_normal_form(const IntMatrix& M) {
    DenseSnf snf(M);
    SmithDecomposition out;
    out.U = std::move(snf.U);
    out.V = std::move(snf.V);
    for (std::size_t i = 0; i < snf.rank; ++i) out.diagonal.push_back(snf.S[i][i]);
    return out;
}

HomologyGroup homology(const SimplicialComplex& K, int k) {
    PCLASS_CHECK(k >= 0 && k <= K.dim(), "homology dimension out of range");
    const std::size_t nk = K.faces(k).size();
    std::size_t rank_down = 0;
    if (k > 0) {
        SparseElim down = boundary_elim(K, k);
        down.run();
        rank_down = down.rank();
    }
    HomologyGroup out;
    std::size_t rank_up = 0;
    if (k < K.dim()) {
        SparseElim up = boundary_elim(K, k + 1);
        up.run();
        rank_up = up.rank();
        for (const mpz_class& d : up.invariant_factors())
            if (d > 1) out.torsion.push_back(d);
    }
    out.betti = static_cast<int>(nk - rank_down - rank_up);
    return out;
}

std::vector<mpq_class> express_in_basis(const RationalChain& cycle,
                                        const SimplicialComplex& K, int k) {
    PCLASS_CHECK(k >= 0 && k <= K.dim(), "homology dimension out of range");
    for (const auto& [s, c] : cycle.coefficients)
        PCLASS_CHECK(K.has_face(s), "chain simplex is not a face of the complex");
    if (k > 0 && !boundary_of(cycle, k).empty())
        throw NotACycle("chain has nonzero boundary");
    std::vector<Simplex> kfaces = K.faces(k);
    std::vector<mpq_class> vec = chain_vector(cycle, kfaces);
    std::vector<mpq_class> out;
    for (const std::vector<mpz_class>& phi : free_cocycle_basis(K, k)) {
        mpq_class acc = 0;
        for (std::size_t i = 0; i < vec.size(); ++i)
            if (vec[i] != 0 && phi[i] != 0) acc += mpq_class(phi[i]) * vec[i];
        out.push_back(acc);
    }
    return out;
}

std::vector<RationalChain> extract_generators(const SimplicialComplex& K, int k) {
    std::vector<Simplex> kfaces = K.faces(k);
    const std::size_t nk = kfaces.size();
    std::vector<std::vector<mpz_class>> phis = free_cocycle_basis(K, k);
    const std::size_t b = phis.size();
    if (b == 0) return {};

    // Integral cycle lattice: kernel of ∂ₖ.
    std::vector<std::vector<std::pair<std::size_t, int>>> rows;
    if (k > 0) {
        rows = boundary_rows(K, k).rows;
    }
    ColumnKernel ker(rows.size(), nk, rows);
    const std::size_t kappa = ker.kernel_dim();

    // Pairing of cocycles with the cycle lattice basis.
    IntMatrix P(b, std::vector<mpz_class>(kappa, 0));
    std::vector<std::vector<mpz_class>> basis;
    for (std::size_t j = 0; j < kappa; ++j) basis.push_back(ker.kernel_col(j));
    for (std::size_t i = 0; i < b; ++i)
        for (std::size_t j = 0; j < kappa; ++j)
            for (std::size_t s = 0; s < nk; ++s)
                if (phis[i][s] != 0 && basis[j][s] != 0) P[i][j] += phis[i][s] * basis[j][s];

    // Solve P·s = eᵢ over ℤ; the pairing of the free parts is perfect, so
    // all invariant factors are 1.
    DenseSnf snf(P);
    PCLASS_CHECK(snf.rank == b, "cycle lattice does not span the free quotient");
    for (std::size_t i = 0; i < snf.rank; ++i)
        PCLASS_CHECK(snf.S[i][i] == 1, "free-part pairing is not unimodular");

    std::vector<RationalChain> out;
    for (std::size_t i = 0; i < b; ++i) {
        // s = V · (U·eᵢ restricted to the rank block).
        std::vector<mpz_class> t(b, 0);
        for (std::size_t r = 0; r < b; ++r) t[r] = snf.U[r][i];
        std::vector<mpz_class> s(kappa, 0);
        for (std::size_t r = 0; r < kappa; ++r)
            for (std::size_t q = 0; q < b; ++q) s[r] += snf.V[r][q] * t[q];
        RationalChain g;
        for (std::size_t j = 0; j < kappa; ++j)
            if (s[j] != 0)
                for (std::size_t f = 0; f < nk; ++f)
                    if (basis[j][f] != 0) g.add(kfaces[f], mpq_class(s[j] * basis[j][f]));
        out.push_back(std::move(g));
    }
    return out;
}

}  // namespace pclass
