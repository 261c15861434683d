#pragma once

#include "ascheme/scheme.hpp"
#include "ascheme/srg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ascheme {

/// Partition of the relation indices 1..d. Blocks are kept sorted and ordered
/// by their least member.
class ClassPartition {
public:
    ClassPartition(int d, std::vector<std::vector<int>> blocks);

    static ClassPartition identity(int d);
    /// "1,2|3|4,5" (1-based class indices). Throws SchemeError on malformed
    /// input, repeated or missing classes.
    static ClassPartition parse(const std::string& text, int d);
    /// From a restricted growth string over classes 1..d.
    static ClassPartition from_rgs(const std::vector<int>& rgs);

    int classes() const { return d_; }
    int size() const { return static_cast<int>(blocks_.size()); }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    /// Fused class (1-based) containing original class i; 0 maps to 0.
    int fused_class(int i) const { return map_[static_cast<std::size_t>(i)]; }

    std::string str() const;
    friend bool operator==(const ClassPartition& a, const ClassPartition& b) { return a.blocks_ == b.blocks_; }

private:
    int d_;
    std::vector<std::vector<int>> blocks_;
    std::vector<int> map_;
};

/// Relabels each class by its block index. The result is not verified.
ColorMatrix fuse(const Scheme& s, const ClassPartition& p);

/// Decides whether the fusion is a scheme from the intersection numbers:
/// sum over i in I, j in J of p^h_{ij} must be constant on every block H.
/// Violations name fused indices and witness pairs from the original scheme.
VerifyResult is_fusion_scheme(const Scheme& s, const ClassPartition& p);

/// Same question answered by fusing and running the full product check.
VerifyResult fuse_and_verify(const Scheme& s, const ClassPartition& p);

class AmorphicGuardError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when an amorphic verdict contradicts the known structure of amorphic
/// schemes (all relations of one Latin square sign).
class InternalConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct AmorphicVerdict {
    bool amorphic = false;
    std::optional<ClassPartition> failing; // first failing partition in RGS order
    std::optional<Violation> violation;
    long long partitions_checked = 0;
    /// For amorphic schemes with d >= 3: "LS" or "NLS" (or both for d <= 2).
    std::string common_type;
};

constexpr int kAmorphicClassGuard = 10;

/// Checks every partition of 1..d in lexicographic restricted-growth order.
/// Throws AmorphicGuardError above kAmorphicClassGuard classes unless forced.
AmorphicVerdict amorphic_check(const Scheme& s, bool force = false);

/// Which class of scheme a is the unrefined relation B, and which class of b
/// is the unrefined relation A = complement of B.
struct FissionSplit {
    int a_class = 0;
    int b_class = 0;
    friend bool operator==(const FissionSplit&, const FissionSplit&) = default;
};

struct CommonFissionReport {
    enum class Status { Success, NotFissionPair, NotScheme };
    Status status = Status::NotFissionPair;
    std::string reason;
    std::optional<FissionSplit> split;
    std::optional<Scheme> scheme;
    std::optional<Violation> violation;
    /// The common 2-class scheme has valency (v-1)/2, where idempotents of the
    /// two fissions cannot be told apart by multiplicity.
    bool half_valency = false;
    /// On success: Q of the result equals the predicted union of idempotents.
    bool idempotents_match = false;
};

/// Union of the refinements of A (from a) and of B (from b). The split is
/// detected when not given; ambiguity is reported as NotFissionPair.
CommonFissionReport common_fission(const Scheme& a, const Scheme& b, std::optional<FissionSplit> split = std::nullopt);

struct PreconditionResult {
    bool ok = false;
    std::string note;
};

struct TheoremMainReport {
    PreconditionResult latin_type;      // B is LS or NLS, k = t(n-1)
    PreconditionResult idempotent;      // some row has m_j = k and P_jB = n - t
    PreconditionResult not_half;        // k != (n^2 - 1)/2
    PreconditionResult parts_same_type; // every part is SRG of B's type
    long long n = 0, t = 0;
    std::optional<Scheme> scheme; // built when every precondition holds
    std::optional<Violation> violation;

    bool preconditions_hold() const
    {
        return latin_type.ok && idempotent.ok && not_half.ok && parts_same_type.ok;
    }
};

/// Checks the conditions under which replacing relation b_index by the given
/// parts yields a scheme, and builds that scheme when they hold. Throws
/// SchemeError when the parts do not partition the relation's edges.
TheoremMainReport theorem_main_check(const Scheme& s, int b_index, const std::vector<Graph>& parts);

struct DecompositionReport {
    bool partition_ok = false;
    std::string partition_error;
    std::optional<VertexPair> partition_witness;
    bool commuting = false;
    std::optional<std::pair<int, int>> noncommuting; // 1-based graph indices
    std::optional<VertexPair> noncommuting_witness;
    std::vector<SrgResult> params;
    std::vector<std::optional<SrgType>> types; // nullopt when not SRG
    bool is_scheme = false;
    std::optional<Violation> violation;
};

DecompositionReport verify_commuting_decomposition(const std::vector<Graph>& graphs);

} // namespace ascheme
