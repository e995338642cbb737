#pragma once

#include "phtype/core.hpp"

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace phtype {

struct SignedPermutation {
    std::vector<int> image;  // 0-based
    std::vector<int> sign;

    int size() const { return static_cast<int>(image.size()); }
    static SignedPermutation identity(int n);
    // (this o inner)(x) = this(inner(x))
    SignedPermutation compose(const SignedPermutation& inner) const;
    SignedPermutation inverse() const;
    SignedPermutation negated() const;
    bool is_permutation() const;
    bool operator==(const SignedPermutation&) const = default;
    ExactMatrix to_matrix() const;
    ExactVector apply(const ExactVector& x) const;
};

struct BracketCell {
    int col;
    int k;
    int sign;
};

struct StructureEntry {
    int i;
    int j;
    int k;
    int sign;
    bool operator==(const StructureEntry&) const = default;
};

class StructureTensor {
public:
    StructureTensor() = default;
    StructureTensor(int dim_v, int dim_z);

    int dim_v() const { return dim_v_; }
    int dim_z() const { return dim_z_; }

    // [v_i, v_j] = sign Z_k and [v_j, v_i] = -sign Z_k
    void set_pair(int i, int j, int k, int sign);
    // one orientation only; replaces whatever was stored for (i,j)
    void set_entry(int i, int j, int k, int sign);
    void add_entry(int i, int j, int k, int sign);

    const std::vector<BracketCell>& row(int i) const { return rows_.at(i); }
    std::vector<StructureEntry> entries() const;
    size_t nonzero_count() const;
    bool operator==(const StructureTensor& o) const;

private:
    int dim_v_ = 0;
    int dim_z_ = 0;
    std::vector<std::vector<BracketCell>> rows_;
};

enum class StepKind { BY_8_0, BY_0_8, BY_4_4 };
const char* to_string(StepKind k);
StepKind parse_step(const std::string& s);
StepKind swapped(StepKind k);

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

struct CenterOrigin {
    bool from_factor;
    int index;  // 0-based in the parent or factor center
};

struct Provenance {
    enum class Kind { BASE, EXTENDED, SUM, CUSTOM } kind = Kind::CUSTOM;
    Signature base{};
    std::vector<StepKind> steps;
    // last extension step only
    AlgebraPtr parent;
    AlgebraPtr factor;
    std::vector<int> module_index;  // 16*i + j -> final position
    std::vector<CenterOrigin> center_origin;
    // direct sums: parent is the minimal summand, mu type-1 then nu type-2 copies
    int mu = 0;
    int nu = 0;
};

// 0 = A part, 1 = B part
using Partition = std::vector<int>;

class Algebra {
public:
    Algebra(Signature center, Metric module_metric, StructureTensor structure,
            std::vector<std::string> v_labels, std::vector<std::string> z_labels,
            Provenance provenance, std::optional<Partition> pinned = std::nullopt);

    Signature center_sig() const { return center_; }
    int r() const { return center_.pos; }
    int s() const { return center_.neg; }
    int dim_v() const { return static_cast<int>(metric_.size()); }
    int dim_z() const { return center_.dim(); }
    const Metric& module_metric() const { return metric_; }
    Metric center_metric() const { return metric_of(center_); }
    const StructureTensor& structure() const { return tensor_; }
    const std::vector<std::string>& v_labels() const { return v_labels_; }
    const std::vector<std::string>& z_labels() const { return z_labels_; }
    const Provenance& provenance() const { return prov_; }
    const std::optional<Partition>& pinned_partition() const { return pinned_; }

    // first stored cell of (i,j), if any
    std::optional<std::pair<int, int>> basis_bracket(int i, int j) const;
    int find_v_label(const std::string& label) const;

private:
    Signature center_;
    Metric metric_;
    StructureTensor tensor_;
    std::vector<std::string> v_labels_;
    std::vector<std::string> z_labels_;
    Provenance prov_;
    std::optional<Partition> pinned_;
};

struct VerifyResult {
    bool ok = true;
    std::string witness;

    static VerifyResult pass() { return {}; }
    static VerifyResult fail(std::string w) { return {false, std::move(w)}; }
    explicit operator bool() const { return ok; }
};

class IntegralBasisError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

ExactVector bracket(const Algebra& a, const ExactVector& x, const ExactVector& y);

// k is 1-based
SignedPermutation j_operator(const Algebra& a, int k);
std::vector<SignedPermutation> j_operators(const Algebra& a);
// J_Z for an arbitrary center vector, as a matrix
ExactMatrix j_matrix(const Algebra& a, const ExactVector& z);
// inverse of the A -> B relation: rebuild the tensor from the J-operators
StructureTensor structure_from_j(const Algebra& a, const std::vector<SignedPermutation>& js);

VerifyResult verify_antisymmetry(const Algebra& a);
VerifyResult verify_integral_basis(const Algebra& a);
VerifyResult verify_clifford(const Algebra& a);
VerifyResult verify_admissible(const Algebra& a);
VerifyResult verify_htype(const Algebra& a);
VerifyResult verify_general_htype_at(const Algebra& a, const ExactVector& v);
VerifyResult verify_general_htype(const Algebra& a, int samples = 100, std::uint64_t seed = 1);
// antisymmetry, integral basis, Clifford, admissible, H-type
VerifyResult verify_axioms(const Algebra& a);

std::optional<Partition> block_decomposition(const Algebra& a);
VerifyResult verify_partition(const Algebra& a, const Partition& p);

struct BDDecomposition {
    std::vector<int> a_plus, a_minus, b_plus, b_minus;  // 0-based, sorted
};
std::optional<BDDecomposition> bd_decomposition(const Algebra& a);
std::optional<BDDecomposition> bd_from_partition(const Algebra& a, const Partition& p);

}  // namespace phtype
