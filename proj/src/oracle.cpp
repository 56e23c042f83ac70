#include "kindep/oracle.hpp"

#include "kindep/error.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

namespace kindep {

namespace {

using Word = std::uint64_t;

class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int n) : words_((static_cast<std::size_t>(n) + 63) / 64, 0) {}

    void set(int i) { words_[word(i)] |= bit(i); }
    void reset(int i) { words_[word(i)] &= ~bit(i); }
    bool test(int i) const { return (words_[word(i)] & bit(i)) != 0; }
    bool none() const
    {
        return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
    }
    int count() const
    {
        int c = 0;
        for (Word w : words_)
            c += std::popcount(w);
        return c;
    }
    int count_and(const Bitset& o) const
    {
        int c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += std::popcount(words_[i] & o.words_[i]);
        return c;
    }
    Bitset& operator&=(const Bitset& o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= o.words_[i];
        return *this;
    }
    Bitset& subtract(const Bitset& o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= ~o.words_[i];
        return *this;
    }
    // Smallest set index, or -1.
    int first() const
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i])
                return static_cast<int>(i * 64) + std::countr_zero(words_[i]);
        return -1;
    }
    template <class F>
    void for_each(F&& f) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            Word w = words_[i];
            while (w) {
                f(static_cast<int>(i * 64) + std::countr_zero(w));
                w &= w - 1;
            }
        }
    }

private:
    static std::size_t word(int i) { return static_cast<std::size_t>(i) / 64; }
    static Word bit(int i) { return Word{1} << (static_cast<unsigned>(i) % 64); }

    std::vector<Word> words_;
};

class Search {
public:
    Search(const Graph& h, std::int64_t budget) : n_(h.order()), budget_(budget), adj_(static_cast<std::size_t>(n_), Bitset(n_))
    {
        for (int v = 0; v < n_; ++v)
            for (int w : h.neighbors(v))
                adj_[static_cast<std::size_t>(v)].set(w);
    }

    ExactResult run()
    {
        Bitset all(n_);
        for (int v = 0; v < n_; ++v)
            all.set(v);
        best_ = greedy(all);
        std::vector<int> chosen;
        branch(all, chosen);
        ExactResult r;
        r.alpha_k = static_cast<int>(best_.size());
        r.witness_set = best_;
        std::sort(r.witness_set.begin(), r.witness_set.end());
        r.nodes_explored = nodes_;
        r.exact = !exhausted_;
        return r;
    }

private:
    const Bitset& nbrs(int v) const { return adj_[static_cast<std::size_t>(v)]; }

    // Minimum-degree greedy independent set, for an initial incumbent.
    std::vector<int> greedy(Bitset cand) const
    {
        std::vector<int> out;
        while (!cand.none()) {
            int pick = -1;
            int pick_deg = 0;
            cand.for_each([&](int v) {
                const int deg = nbrs(v).count_and(cand);
                if (pick < 0 || deg < pick_deg) {
                    pick = v;
                    pick_deg = deg;
                }
            });
            out.push_back(pick);
            cand.reset(pick);
            cand.subtract(nbrs(pick));
        }
        return out;
    }

    // Number of cliques in a greedy clique cover of `cand`.
    int clique_cover(Bitset rest) const
    {
        int cliques = 0;
        while (!rest.none()) {
            const int v = rest.first();
            rest.reset(v);
            Bitset common = nbrs(v);
            common &= rest;
            while (!common.none()) {
                const int w = common.first();
                rest.reset(w);
                common.reset(w);
                common &= nbrs(w);
            }
            ++cliques;
        }
        return cliques;
    }

    void branch(Bitset cand, std::vector<int>& chosen)
    {
        if (exhausted_)
            return;
        if (++nodes_ > budget_) {
            exhausted_ = true;
            return;
        }

        // Isolated candidates belong to some maximum set.
        const std::size_t mark = chosen.size();
        int pick = -1;
        int pick_deg = -1;
        bool changed = true;
        while (changed) {
            changed = false;
            pick = -1;
            pick_deg = -1;
            std::vector<int> isolated;
            cand.for_each([&](int v) {
                const int deg = nbrs(v).count_and(cand);
                if (deg == 0)
                    isolated.push_back(v);
                else if (deg > pick_deg) {
                    pick = v;
                    pick_deg = deg;
                }
            });
            for (int v : isolated) {
                chosen.push_back(v);
                cand.reset(v);
                changed = true;
            }
        }

        if (pick < 0) {
            if (chosen.size() > best_.size())
                best_ = chosen;
        } else if (chosen.size() + static_cast<std::size_t>(clique_cover(cand)) > best_.size()) {
            Bitset with = cand;
            with.reset(pick);
            with.subtract(nbrs(pick));
            chosen.push_back(pick);
            branch(with, chosen);
            chosen.pop_back();

            cand.reset(pick);
            branch(cand, chosen);
        }
        chosen.resize(mark);
    }

    int n_;
    std::int64_t budget_;
    std::vector<Bitset> adj_;
    std::vector<int> best_;
    std::int64_t nodes_ = 0;
    bool exhausted_ = false;
};

} // namespace

ExactResult exact_alpha_k(const Graph& g, int k, std::int64_t budget)
{
    if (k < 1)
        throw Error(ErrorCode::InvalidParameters, "k must be at least 1 (got " + std::to_string(k) + ")");
    if (budget < 1)
        throw Error(ErrorCode::InvalidParameters, "node budget must be positive");
    const Graph h = power_graph(g, k);
    return Search(h, budget).run();
}

int exact_diameter(const Graph& g)
{
    return distances(g).diameter;
}

} // namespace kindep
