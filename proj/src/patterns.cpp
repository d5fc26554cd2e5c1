#include "foata/patterns.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace foata {

int DashedPattern::letter_count() const {
    int k = 0;
    for (const auto& b : blocks) k += static_cast<int>(b.size());
    return k;
}

std::string DashedPattern::str() const {
    std::ostringstream os;
    os << '(';
    for (size_t b = 0; b < blocks.size(); ++b) {
        if (b > 0) os << '-';
        for (size_t i = 0; i < blocks[b].size(); ++i) {
            if (i > 0) os << ',';
            os << blocks[b][i];
        }
    }
    os << ')';
    return os.str();
}

std::vector<DashedPattern> pat(int q) {
    if (q < 1) throw std::invalid_argument("pat: q must be >= 1");
    std::vector<DashedPattern> out;
    std::vector<int> pi(static_cast<size_t>(q));
    for (int i = 0; i < q; ++i) pi[static_cast<size_t>(i)] = i + 1;
    do {
        DashedPattern p;
        for (int v : pi) p.blocks.push_back({v});
        p.blocks.push_back({q + 2, q + 1});
        out.push_back(std::move(p));
    } while (std::next_permutation(pi.begin(), pi.end()));
    return out;
}

namespace {

// Backtracking over block start positions; each placed letter is checked
// against everything already placed, so bad branches die early.
struct Matcher {
    const DashedPattern& pattern;
    const Perm& w;
    std::vector<int> flat;  // pattern letters in placement order
    std::vector<int> positions;

    bool consistent(int pos) const {
        const size_t k = positions.size();
        for (size_t s = 0; s < k; ++s)
            if ((w(positions[s]) < w(pos)) != (flat[s] < flat[k])) return false;
        return true;
    }

    bool place(size_t block, int min_start) {
        if (block == pattern.blocks.size()) return true;
        const auto& letters = pattern.blocks[block];
        const int len = static_cast<int>(letters.size());
        for (int start = min_start; start + len - 1 <= w.degree(); ++start) {
            size_t placed = 0;
            bool ok = true;
            for (int i = 0; i < len; ++i) {
                if (!consistent(start + i)) {
                    ok = false;
                    break;
                }
                positions.push_back(start + i);
                ++placed;
            }
            if (ok && place(block + 1, start + len)) return true;
            positions.resize(positions.size() - placed);
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<int>> find_occurrence(const DashedPattern& p, const Perm& w) {
    if (p.blocks.empty()) throw std::invalid_argument("pattern has no blocks");
    if (p.letter_count() > w.degree()) return std::nullopt;
    Matcher m{p, w, {}, {}};
    for (const auto& b : p.blocks) m.flat.insert(m.flat.end(), b.begin(), b.end());
    m.positions.reserve(m.flat.size());
    if (m.place(0, 1)) return m.positions;
    return std::nullopt;
}

bool occurs(const DashedPattern& p, const Perm& w) {
    return find_occurrence(p, w).has_value();
}

bool avoids_pat_q(int q, const Perm& w) {
    if (q < 1) throw std::invalid_argument("avoids_pat_q: q must be >= 1");
    for (int j = 1; j < w.degree(); ++j) {
        if (w(j) <= w(j + 1)) continue;
        int below = 0;
        for (int i = 1; i < j; ++i)
            if (w(i) < w(j + 1)) ++below;
        if (below >= q) return false;
    }
    return true;
}

std::vector<Perm> enumerate_avoiders(int q, int m, int degree_cap) {
    if (m < 1) throw std::invalid_argument("enumerate_avoiders: m must be >= 1");
    if (m > degree_cap)
        throw std::invalid_argument("enumerate_avoiders: degree " + std::to_string(m) +
                                    " exceeds cap " + std::to_string(degree_cap));
    std::vector<Perm> out;
    for_each_permutation(m, [&](const Perm& w) {
        if (avoids_pat_q(q, w)) out.push_back(w);
    });
    return out;
}

}  // namespace foata
