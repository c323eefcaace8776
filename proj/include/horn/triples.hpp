#pragma once

#include <compare>
#include <vector>

#include "horn/spectrum.hpp"

namespace horn {

/// Strictly increasing 1-based indices drawn from {1..p}.
struct IndexSet {
    std::vector<int> elements;

    int sum() const {
        int s = 0;
        for (int e : elements) s += e;
        return s;
    }

    auto operator<=>(const IndexSet&) const = default;
};

/// (I, J, K): three r-subsets of {1..p} indexing one inequality.
struct HornTriple {
    int p = 0;
    int r = 0;
    IndexSet i, j, k;

    /// Sum(I) + Sum(J) = Sum(K) + r(r+1)/2, exact integers.
    bool sum_identity_holds() const { return i.sum() + j.sum() == k.sum() + r * (r + 1) / 2; }

    auto operator<=>(const HornTriple&) const = default;
};

/// All r-subsets of {1..p} in lexicographic order.
std::vector<IndexSet> subsets_of_size(int p, int r);

/// All triples of r-subsets satisfying the exact sum identity,
/// lexicographically sorted.
std::vector<HornTriple> generate_U(int p, int r);

/// Admissible triples for one ambient size, grouped by cardinality. Each
/// per-rank list is lexicographically sorted and immutable.
class TripleTable {
public:
    TripleTable(int p, std::vector<std::vector<HornTriple>> by_rank);

    int p() const { return p_; }

    const std::vector<HornTriple>& rank(int r) const;

    /// Membership by binary search in the matching rank list.
    bool contains(const HornTriple& t) const;

    /// Total number of triples across all ranks.
    std::size_t size() const;

    bool operator==(const TripleTable&) const = default;

private:
    int p_;
    std::vector<std::vector<HornTriple>> by_rank_;  // index r-1
};

/// The recursively filtered table: rank 1 is all of U^p_1; a rank-r triple
/// survives iff its index sums obey every lower-rank triple of the ambient-r
/// table. Tables are memoized per ambient size and safe to share across
/// threads.
TripleTable generate_T(int p);

/// Sum_I alpha + Sum_J beta - Sum_K gamma; the inequality holds iff this is
/// nonnegative.
double horn_inequality_slack(const HornTriple& t, const Spectrum& alpha, const Spectrum& beta,
                             const Spectrum& gamma);

/// (I,J,K) -> (I2,J2,K2) with I2 = J2 = {2i-1 : i in I} u {2j : j in J} and
/// K2 = {2k-1, 2k : k in K}; ambient 2p, cardinality 2r.
HornTriple domino_double(const HornTriple& t);

struct DominoReport {
    int p = 0;
    int checked = 0;
    std::vector<HornTriple> failures;
};

/// Checks domino_double(t) against the generated ambient-2p table for every
/// t of rank r < p.
DominoReport verify_domino_theorem(int p);

}  // namespace horn
