#include "horn/triples.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace horn {

std::vector<IndexSet> subsets_of_size(int p, int r) {
    if (r < 0 || r > p) throw std::invalid_argument("subset size out of range");
    std::vector<IndexSet> out;
    std::vector<int> current(static_cast<std::size_t>(r));
    for (int k = 0; k < r; ++k) current[static_cast<std::size_t>(k)] = k + 1;
    for (;;) {
        out.push_back(IndexSet{current});
        // Advance to the next combination in lexicographic order.
        int pos = r - 1;
        while (pos >= 0 && current[static_cast<std::size_t>(pos)] == p - (r - 1 - pos)) --pos;
        if (pos < 0) break;
        ++current[static_cast<std::size_t>(pos)];
        for (int k = pos + 1; k < r; ++k)
            current[static_cast<std::size_t>(k)] = current[static_cast<std::size_t>(k - 1)] + 1;
    }
    if (r == 0) out.assign(1, IndexSet{});
    return out;
}

std::vector<HornTriple> generate_U(int p, int r) {
    if (r < 1 || r > p) throw std::invalid_argument("cardinality must satisfy 1 <= r <= p");
    const std::vector<IndexSet> subsets = subsets_of_size(p, r);
    std::vector<HornTriple> out;
    for (const IndexSet& i : subsets)
        for (const IndexSet& j : subsets)
            for (const IndexSet& k : subsets) {
                HornTriple t{p, r, i, j, k};
                if (t.sum_identity_holds()) out.push_back(std::move(t));
            }
    return out;  // loops run in lexicographic order already
}

TripleTable::TripleTable(int p, std::vector<std::vector<HornTriple>> by_rank)
    : p_(p), by_rank_(std::move(by_rank)) {
    if (p < 1) throw std::invalid_argument("ambient size must be positive");
    if (static_cast<int>(by_rank_.size()) != p)
        throw std::invalid_argument("table must have one rank list per cardinality");
}

const std::vector<HornTriple>& TripleTable::rank(int r) const {
    if (r < 1 || r > p_) throw std::invalid_argument("rank out of range");
    return by_rank_[static_cast<std::size_t>(r - 1)];
}

bool TripleTable::contains(const HornTriple& t) const {
    if (t.p != p_ || t.r < 1 || t.r > p_) return false;
    const std::vector<HornTriple>& list = by_rank_[static_cast<std::size_t>(t.r - 1)];
    return std::binary_search(list.begin(), list.end(), t);
}

std::size_t TripleTable::size() const {
    std::size_t n = 0;
    for (const auto& list : by_rank_) n += list.size();
    return n;
}

namespace {

// A rank-r candidate is admissible when, for every lower-rank triple
// (F, G, H) of the ambient-r table, the selected index sums satisfy
// Sum_F i_f + Sum_G j_g <= Sum_H k_h + s(s+1)/2.
bool passes_lower_rank_conditions(const HornTriple& t,
                                  const std::vector<std::vector<HornTriple>>& inner_ranks) {
    for (int s = 1; s < t.r; ++s) {
        const int bound_constant = s * (s + 1) / 2;
        for (const HornTriple& cond : inner_ranks[static_cast<std::size_t>(s - 1)]) {
            int lhs = 0;
            for (int f : cond.i.elements) lhs += t.i.elements[static_cast<std::size_t>(f - 1)];
            for (int g : cond.j.elements) lhs += t.j.elements[static_cast<std::size_t>(g - 1)];
            int rhs = bound_constant;
            for (int h : cond.k.elements) rhs += t.k.elements[static_cast<std::size_t>(h - 1)];
            if (lhs > rhs) return false;
        }
    }
    return true;
}

std::shared_ptr<const TripleTable> generate_T_shared(int p);

std::vector<std::vector<HornTriple>> build_ranks(int p) {
    std::vector<std::vector<HornTriple>> by_rank(static_cast<std::size_t>(p));
    by_rank[0] = generate_U(p, 1);
    for (int r = 2; r <= p; ++r) {
        // The filter conditions live in the table of ambient size r. For
        // r == p that table is exactly the ranks built so far.
        const std::vector<std::vector<HornTriple>>* inner = &by_rank;
        std::shared_ptr<const TripleTable> cached;
        std::vector<std::vector<HornTriple>> inner_copy;
        if (r < p) {
            cached = generate_T_shared(r);
            inner_copy.assign(static_cast<std::size_t>(r), {});
            for (int s = 1; s < r; ++s) inner_copy[static_cast<std::size_t>(s - 1)] = cached->rank(s);
            inner = &inner_copy;
        }
        std::vector<HornTriple>& out = by_rank[static_cast<std::size_t>(r - 1)];
        for (HornTriple& t : generate_U(p, r))
            if (passes_lower_rank_conditions(t, *inner)) out.push_back(std::move(t));
    }
    return by_rank;
}

std::shared_ptr<const TripleTable> generate_T_shared(int p) {
    static std::mutex mutex;
    static std::map<int, std::shared_ptr<const TripleTable>> cache;
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(p);
        if (it != cache.end()) return it->second;
    }
    // Built outside the lock: the recursion below re-enters this function.
    auto table = std::make_shared<const TripleTable>(p, build_ranks(p));
    std::lock_guard<std::mutex> lock(mutex);
    auto [it, inserted] = cache.emplace(p, std::move(table));
    return it->second;
}

}  // namespace

TripleTable generate_T(int p) {
    if (p < 1) throw std::invalid_argument("ambient size must be positive");
    return *generate_T_shared(p);
}

double horn_inequality_slack(const HornTriple& t, const Spectrum& alpha, const Spectrum& beta,
                             const Spectrum& gamma) {
    const std::size_t p = static_cast<std::size_t>(t.p);
    if (alpha.size() != p || beta.size() != p || gamma.size() != p)
        throw std::invalid_argument("spectra must have the triple's ambient length");
    double slack = 0.0;
    for (int i : t.i.elements) slack += alpha[static_cast<std::size_t>(i - 1)];
    for (int j : t.j.elements) slack += beta[static_cast<std::size_t>(j - 1)];
    for (int k : t.k.elements) slack -= gamma[static_cast<std::size_t>(k - 1)];
    return slack;
}

HornTriple domino_double(const HornTriple& t) {
    if (!t.sum_identity_holds())
        throw std::invalid_argument("triple does not satisfy the sum identity");
    HornTriple d;
    d.p = 2 * t.p;
    d.r = 2 * t.r;
    for (int i : t.i.elements) d.i.elements.push_back(2 * i - 1);
    for (int j : t.j.elements) d.i.elements.push_back(2 * j);
    std::sort(d.i.elements.begin(), d.i.elements.end());
    d.j = d.i;
    for (int k : t.k.elements) {
        d.k.elements.push_back(2 * k - 1);
        d.k.elements.push_back(2 * k);
    }
    if (!d.sum_identity_holds())
        throw std::logic_error("doubled triple violates the sum identity");
    return d;
}

DominoReport verify_domino_theorem(int p) {
    if (p < 1) throw std::invalid_argument("ambient size must be positive");
    DominoReport report;
    report.p = p;
    if (p == 1) return report;
    const TripleTable table = generate_T(p);
    const TripleTable doubled = generate_T(2 * p);
    for (int r = 1; r < p; ++r) {
        for (const HornTriple& t : table.rank(r)) {
            ++report.checked;
            if (!doubled.contains(domino_double(t))) report.failures.push_back(t);
        }
    }
    return report;
}

}  // namespace horn
