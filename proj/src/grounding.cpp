#include "planar/grounding.hpp"

#include <algorithm>

namespace planar {

namespace {

std::uint64_t factorial(int k) {
    std::uint64_t f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

void check_permutation(const Bond& bond, const std::vector<int>& seq) {
    auto sorted = seq;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != bond.edge_ids)
        throw std::invalid_argument("sequence is not a permutation of the bond's edges");
}

struct Searcher {
    const DisparateTable& table;
    std::vector<int> remaining;  // ascending pool of unused edge ids
    std::vector<int> seq;
    std::uint64_t covered = 0;
    int k;

    // True once a witness is complete in seq.
    bool extend() {
        int len = static_cast<int>(seq.size());
        if (len == k) {
            covered += 1;
            return true;
        }
        for (std::size_t idx = 0; idx < remaining.size(); ++idx) {
            int e = remaining[idx];
            if (violates_with(e)) {
                covered += factorial(k - len - 1);
                continue;
            }
            seq.push_back(e);
            remaining.erase(remaining.begin() + static_cast<long>(idx));
            if (extend()) return true;
            remaining.insert(remaining.begin() + static_cast<long>(idx), e);
            seq.pop_back();
        }
        return false;
    }

    // Any quadruple finished by e? Every violating quadruple is caught when
    // its fourth element is placed.
    bool violates_with(int e) const {
        int len = static_cast<int>(seq.size());
        for (int i = 0; i < len; ++i)
            for (int j = i + 1; j < len; ++j)
                for (int l = j + 1; l < len; ++l)
                    if (table.violates(seq[i], seq[j], seq[l], e)) return true;
        return false;
    }
};

}  // namespace

bool verify_grounding(const Bond& bond, const DisparateTable& table,
                      const std::vector<int>& seq) {
    check_permutation(bond, seq);
    int k = static_cast<int>(seq.size());
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            for (int l = j + 1; l < k; ++l)
                for (int m = l + 1; m < k; ++m)
                    if (table.violates(seq[i], seq[j], seq[l], seq[m])) return false;
    return true;
}

GroundingResult find_grounding(const Bond& bond, const DisparateTable& table, int max_edges) {
    if (!bond.is_big()) throw std::invalid_argument("grounding is defined for big bonds only");
    if (bond.size() > max_edges)
        throw budget_error("bond exceeds the grounding search budget of " +
                           std::to_string(max_edges) + " edges");
    Searcher s{table, bond.edge_ids, {}, 0, bond.size()};
    GroundingResult result;
    if (s.extend()) {
        result.status = GroundingStatus::Grounded;
        result.witness = s.seq;
    }
    result.permutations_explored = s.covered;
    return result;
}

}  // namespace planar
