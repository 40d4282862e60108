// Enumerated finite matrix groups: GL_n(F_q), block products, parabolic
// subgroups, and the subgroup / linear-character machinery built on top of
// them (closures, conjugacy, double cosets, abelianizations, characters).
//
// A Group owns its element list in a canonical order (row-major
// lexicographic on field indices) and interns subgroups and characters so
// that downstream code can use small integer ids as keys.  All data is
// immutable after construction; lazy caches are guarded by a per-group
// mutex, so sharing a Group across threads is safe.
#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "glpsh/gf.hpp"

namespace glpsh {

class Group;
using GroupPtr = std::shared_ptr<const Group>;

struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact root of unity zeta_N^e, stored gcd-reduced (minimal N, 0 <= e < N).
struct Root {
    int N = 1;
    int e = 0;
    static Root make(int N, int e);
    static Root one() { return {1, 0}; }
    bool is_one() const { return e == 0; }
    Root times(const Root& o) const;
    Root inverse() const;
    Root pow(long long k) const;
    bool operator==(const Root& o) const { return N == o.N && e == o.e; }
    bool operator<(const Root& o) const { return N != o.N ? N < o.N : e < o.e; }
};

struct ConjClass {
    int rep;
    std::vector<int> members;
};

struct SubgroupData {
    std::vector<int> elems;      // sorted ambient indices
    std::vector<uint8_t> mask;   // membership, size |G|
    std::vector<int> gens;       // generating set used to build / computed
    int order = 0;
    bool contains(int g) const { return mask[g] != 0; }
    int pos_of(int g) const;     // position in elems, -1 if absent
};

struct CharData {
    int sub = -1;                // SubId of the domain
    int N = 1;                   // minimal order
    std::vector<int> exps;       // value at elems[i] is zeta_N^exps[i]
};

struct DoubleCosets {
    int left = -1, right = -1;                // SubIds: left\G/right
    std::vector<std::pair<int, int>> reps;    // (least-index rep, coset size)
};

struct Abelianization {
    int derived = -1;                      // SubId of [H,H]
    int quotient_order = 1;
    std::vector<int> coset_of;             // per position in H.elems -> coset id
    std::vector<int> factor_orders;        // invariant factors d1 | d2 | ...
    std::vector<std::vector<int>> exps;    // coset id -> exponent vector
};

// A two-block split of one factor of a (product) group: the parabolic
// subgroup, its unipotent radical, the Levi, and the Levi realized as a
// standalone product group with the refined shape.
struct ParabolicData {
    const Group* ambient = nullptr;
    int factor = 0;
    int alpha = 0;
    int P = -1, U = -1, Levi = -1;   // SubIds in ambient
    GroupPtr levi_group;             // product group, refined shape
    std::vector<int> levi_to_amb;    // levi_group element -> ambient index
    std::vector<int> amb_to_levi;    // ambient index -> levi element or -1
};

class Group : public std::enable_shared_from_this<Group> {
public:
    // Interned by (shape, q).  A single part {n} is GL_n(F_q); several
    // parts give the block-diagonal product GL_{a1} x ... x GL_{ar}.
    static GroupPtr of_shape(const std::vector<int>& shape, int q,
                             long long order_cap = kOrderCap);
    static GroupPtr general_linear(int n, int q, long long order_cap = kOrderCap);
    static GroupPtr product(const std::vector<GroupPtr>& factors);
    // Grammar: "gl:n:q" or "gl:a1:q,gl:a2:q,..."
    static GroupPtr parse(const std::string& spec, long long order_cap = kOrderCap);

    static constexpr long long kOrderCap = 25000;
    static constexpr int kSubgroupCap = 400;
    static constexpr int kCayleyCap = 5000;

    // ---- elements ----------------------------------------------------
    int order() const { return int(elems_.size()); }
    int dim() const { return n_; }
    const FiniteField* field() const { return F_; }
    const std::vector<int>& shape() const { return shape_; }
    const std::string& label() const { return label_; }
    const std::vector<Mat>& elements() const { return elems_; }
    const Mat& elem(int i) const { return elems_[i]; }
    int index_of(const Mat& m) const;   // throws if absent
    int find(const Mat& m) const;       // -1 if absent
    int mul(int a, int b) const;
    int inv(int a) const;
    int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }
    int id() const { return id_; }
    int element_order(int g) const;
    const std::vector<int>& generators() const;  // small generating set

    // ---- product structure -------------------------------------------
    int num_factors() const { return int(shape_.size()); }
    GroupPtr factor(int i) const;
    std::vector<int> split_element(int g) const;        // factor element ids
    int join_element(const std::vector<int>& parts) const;

    // ---- conjugacy classes --------------------------------------------
    const std::vector<ConjClass>& classes() const;
    int class_of(int g) const;
    int num_classes() const { return int(classes().size()); }
    int exponent() const;

    // ---- subgroups -----------------------------------------------------
    int sub_intern(std::vector<int> sorted_elems) const;       // SubId
    const SubgroupData& sub(int id) const;
    int sub_trivial() const;
    int sub_full() const;
    int sub_closure(const std::vector<int>& gens) const;
    int sub_conjugate(int id, int g) const;                    // g H g^-1
    int sub_intersect(int a, int b) const;
    bool sub_contains(int big, int small) const;
    int sub_normalizer(int id) const;
    int sub_centralizer(int id) const;
    int sub_derived(int id) const;
    int sub_center() const;                                    // Z(G)
    GroupPtr sub_as_group(int id) const;    // materialize as standalone Group
    const std::vector<int>& sub_generators(int id) const;

    // all subgroups (lazy; throws CapExceeded if order() > cap)
    const std::vector<int>& all_subgroups(int cap = kSubgroupCap) const;
    // partition of all_subgroups() into conjugacy classes, each sorted,
    // classes ordered by their least member
    const std::vector<std::vector<int>>& subgroup_classes(int cap = kSubgroupCap) const;

    // ---- abelianization & linear characters ----------------------------
    const Abelianization& abelianization(int sub) const;
    const std::vector<int>& linear_characters(int sub) const;  // CharIds
    int char_intern(int sub, int N, std::vector<int> exps) const;
    const CharData& chr(int id) const;
    int char_trivial(int sub) const;
    Root char_value(int chr, int ambient_elem) const;
    int char_conjugate(int chr, int g) const;     // phi^g on gHg^-1
    int char_restrict(int chr, int smaller_sub) const;
    // product of two characters on the same subgroup
    int char_mul(int a, int b) const;

    // ---- double cosets --------------------------------------------------
    const DoubleCosets& double_cosets(int left, int right) const;
    // left cosets gH: representatives (least index per coset), ascending
    const std::vector<int>& left_cosets(int sub) const;

    // ---- parabolic splits ----------------------------------------------
    // Split factor `f` of the shape into (alpha, shape[f]-alpha).
    const ParabolicData& split(int f, int alpha) const;
    // U cut down to determinant-1 block (a no-op for unipotent U; kept for
    // the SL-intersection mode switch)
    int split_U_sl(int f, int alpha) const;

    ~Group();

private:
    Group() = default;
    static GroupPtr make_from_elems(std::vector<Mat> elems, std::vector<int> shape,
                                    int q, std::string label);

    int n_ = 0;
    int q_ = 1;
    const FiniteField* F_ = nullptr;
    std::vector<int> shape_;
    std::string label_;
    std::vector<Mat> elems_;
    std::unordered_map<Mat, int, MatHash> index_;
    std::vector<int> inv_;
    std::vector<uint16_t> cayley_;   // only when order() <= kCayleyCap
    int id_ = 0;

    struct Cache;
    mutable std::unique_ptr<Cache> cache_;
    Cache& cache() const;
    mutable std::recursive_mutex mu_;

    friend struct GroupAccess;
};

// The paper's subconjugacy condition for hyperHecke validity:
// (K, psi) <= (g^-1 H g, g^*(phi)), i.e. K <= g^-1 H g and
// psi(k) = phi(g k g^-1) for all k in K.
bool is_subconjugate(const Group& G, int K, int psi, int g, int H, int phi);

// Block-diagonal embedding of factor elements into the product group.
Mat block_embed(const std::vector<Mat>& blocks, const FiniteField* F);

}  // namespace glpsh
