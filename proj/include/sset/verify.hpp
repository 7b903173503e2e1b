// Homotopy-level certification: integral simplicial homology via Smith
// normal form, edge-path fundamental-group presentations, contractibility
// certificates, fiber-condition checks, induced maps on homology, and the
// instance-level verifier for lifting/homotopy witness data.

#ifndef SSET_VERIFY_HPP
#define SSET_VERIFY_HPP

#include <map>
#include <string>
#include <vector>

#include "sset/digraph.hpp"
#include "sset/matrix.hpp"
#include "sset/sset.hpp"

namespace sset {

/// Boundary matrices of the normalized chain complex (degenerate faces
/// contribute zero).
struct ChainComplex {
    std::vector<std::vector<std::string>> basis;  // basis[n]: sorted nondeg ids
    std::vector<IntMatrix> boundary;              // boundary[n]: C_n -> C_{n-1}
};

ChainComplex chain_complex(const FinSSet& X);

std::vector<AbelianInvariants> homology(const FinSSet& X);
std::vector<AbelianInvariants> reduced_homology(const FinSSet& X);

long long euler_char(const FinSSet& X);

/// A word is a sequence of (generator, +-1) letters.
using Word = std::vector<std::pair<std::string, int>>;

struct GroupPresentation {
    std::vector<std::string> generators;
    std::vector<Word> relators;

    AbelianInvariants abelianization() const;
};

/// Edge-path presentation of pi_1(X, base); generators are the
/// non-degenerate edges, relators kill a spanning tree and impose the
/// 2-simplex relations d2 . d0 . d1^{-1}.
GroupPresentation pi1(const FinSSet& X, const std::string& base);

/// Deterministic elementary simplification with a bounded move budget.
GroupPresentation tietze_simplify(GroupPresentation p, int budget = 10000);

enum class Contractibility { Certified, HomologyPointOnly, Refuted };

struct ContractibilityCertificate {
    Contractibility verdict = Contractibility::Refuted;
    std::string reason;
};

ContractibilityCertificate contractibility_certificate(const FinSSet& X);

/// Greedy free-face collapse on the non-degenerate cell structure; true if
/// the complex collapses to a single vertex.
bool greedy_collapse_to_point(const FinSSet& X);

struct FiberVerdict {
    std::string simplex;
    int dim = 0;
    ContractibilityCertificate cert;
};

struct FiberReport {
    std::vector<FiberVerdict> fibers;
    int refuted = 0;
    int certified = 0;
    int homology_point_only = 0;
    bool ok() const { return refuted == 0; }
};

/// Runs contractibility certificates on f/(a,n) for every non-degenerate
/// simplex a of the target with dim <= d.
FiberReport fiber_condition(const SSetMap& f, int d);

struct InducedHomology {
    std::vector<IntMatrix> matrices;  // map on homology in each degree
    std::vector<AbelianInvariants> source;
    std::vector<AbelianInvariants> target;
    int first_failure = -1;  // degree of first non-isomorphism, or -1
    bool iso() const { return first_failure < 0; }
};

InducedHomology induced_homology_map(const SSetMap& f);

struct InstanceViolation {
    std::string tag;  // "pre", "a", "b", "c", "d"
    std::string where;
    std::string message;
};

struct InstanceReport {
    std::vector<InstanceViolation> violations;
    bool ok() const { return violations.empty(); }
    std::string str() const;
};

/// Witness data for one instance of the lifting theorem (or its dual).
struct MainTheoremInstance {
    FinSSet X, Y;  // Y a subcomplex of X
    FinSSet K, L;  // L a subcomplex of K; both totally ordered via `order`
    VertexOrder order;
    std::string v;
    SSetMap phi;   // (K, L) -> (X, Y)
    SSetMap lift;  // K_{<v} -> Y (dual: K_{>v} -> Y)
    SSetMap psi;   // (K, L) -> (X, Y)
    SSetMap H;     // K x Delta^1 -> X
    bool dual = false;
};

InstanceReport check_instance(const MainTheoremInstance& inst);

}  // namespace sset

#endif
