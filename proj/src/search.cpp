#include <sscodes/errors.hpp>
#include <sscodes/search.hpp>

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace sscodes
{
    namespace
    {
        // Calls f(subset) for every subset of `pool` with 1..k elements.
        template <typename F>
        auto for_each_subset(const std::vector<int> & pool, std::size_t k, F && f) -> void
        {
            std::vector<int> current;
            auto rec = [&](auto && self, std::size_t start) -> void {
                if (! current.empty())
                    f(current);
                if (current.size() == k)
                    return;
                for (std::size_t i = start; i < pool.size(); ++i) {
                    current.push_back(pool[i]);
                    self(self, i + 1);
                    current.pop_back();
                }
            };
            rec(rec, 0);
        }

        class Searcher
        {
        public:
            Searcher(std::size_t t, std::size_t n, std::size_t q, Property property, std::uint64_t budget) :
                t_(t),
                n_(n),
                q_(q),
                property_(property),
                budget_(budget)
            {
                std::size_t total = 1;
                for (std::size_t i = 0; i < n; ++i) {
                    total *= q;
                    if (total > 4096)
                        throw ResourceLimit("q^n above 4096 is outside the exhaustive search range");
                }
                if (n * q > 64)
                    throw ResourceLimit("exhaustive search needs n * q <= 64");
                words_.resize(total);
                for (std::size_t w = 0; w < total; ++w) {
                    words_[w].resize(n);
                    auto rest = w;
                    for (std::size_t i = n; i-- > 0;) {
                        words_[w][i] = static_cast<Symbol>(rest % q);
                        rest /= q;
                    }
                }
            }

            auto run() -> SearchResult
            {
                for (std::size_t d = 1; d <= n_ && ! aborted_; ++d) {
                    min_distance_ = d;
                    std::size_t second = 0;
                    for (std::size_t i = 0; i < d; ++i)
                        second = second * q_ + 1;
                    for (std::size_t i = d; i < n_; ++i)
                        second *= q_;
                    chosen_.clear();
                    keys_.clear();
                    undo_.clear();
                    commit(0);
                    if (! can_add(static_cast<int>(second)))
                        continue;
                    commit(static_cast<int>(second));
                    std::vector<int> candidates;
                    for (std::size_t w = 1; w < words_.size(); ++w)
                        if (w != second && can_add(static_cast<int>(w)))
                            candidates.push_back(static_cast<int>(w));
                    dfs(candidates);
                }
                if (best_.empty())
                    best_ = {0};

                SearchResult result;
                result.t = t_;
                result.n = n_;
                result.q = q_;
                result.property = property_;
                result.optimum = best_.size();
                result.nodes_explored = nodes_;
                result.exhaustive = ! aborted_;
                std::sort(best_.begin(), best_.end());
                std::vector<Word> ws;
                for (auto w : best_)
                    ws.push_back(words_[w]);
                Code code{n_, q_, ws};
                const auto check = verify(code, property_, t_, Method::Definitional);
                if (! check.verdict)
                    throw std::logic_error("search produced a witness that fails the definitional verifier");
                result.witness = std::move(code);
                return result;
            }

        private:
            auto key(const std::vector<int> & members, int extra) const -> std::uint64_t
            {
                std::uint64_t k = 0;
                auto put = [&](int w) {
                    for (std::size_t i = 0; i < n_; ++i)
                        k |= std::uint64_t{1} << (i * q_ + words_[w][i]);
                };
                for (auto m : members)
                    put(m);
                if (extra >= 0)
                    put(extra);
                return k;
            }

            auto covered(std::uint64_t k, int w) const -> bool
            {
                for (std::size_t i = 0; i < n_; ++i)
                    if (! ((k >> (i * q_ + words_[w][i])) & 1))
                        return false;
                return true;
            }

            auto distance(int a, int b) const -> std::size_t
            {
                std::size_t d = 0;
                for (std::size_t i = 0; i < n_; ++i)
                    d += words_[a][i] != words_[b][i];
                return d;
            }

            // x in C0 is recovered iff some coordinate value of x is carried by
            // no other codeword inside desc(C0).
            auto recovers(const std::vector<int> & coalition, const std::vector<int> & code) const -> bool
            {
                const auto k = key(coalition, -1);
                std::vector<int> inside;
                for (auto w : code)
                    if (covered(k, w))
                        inside.push_back(w);
                for (auto x : coalition) {
                    bool unique = false;
                    for (std::size_t i = 0; i < n_ && ! unique; ++i) {
                        unique = true;
                        for (auto y : inside)
                            if (y != x && words_[y][i] == words_[x][i]) {
                                unique = false;
                                break;
                            }
                    }
                    if (! unique)
                        return false;
                }
                return true;
            }

            // The current code satisfies the property; does it still with c?
            auto can_add(int c) const -> bool
            {
                for (auto x : chosen_)
                    if (distance(x, c) < min_distance_)
                        return false;
                bool ok = true;
                switch (property_) {
                    case Property::SC: {
                        std::unordered_set<std::uint64_t> fresh;
                        const auto single = key({}, c);
                        ok = ! keys_.contains(single) && fresh.insert(single).second;
                        if (ok && t_ >= 2)
                            for_each_subset(chosen_, t_ - 1, [&](const std::vector<int> & x) {
                                if (! ok)
                                    return;
                                const auto k = key(x, c);
                                ok = ! keys_.contains(k) && fresh.insert(k).second;
                            });
                        return ok;
                    }
                    case Property::FPC: {
                        for_each_subset(chosen_, t_, [&](const std::vector<int> & x) {
                            if (ok && covered(key(x, -1), c))
                                ok = false;
                        });
                        if (! ok)
                            return false;
                        if (t_ >= 1) {
                            auto framed = [&](const std::vector<int> & x) {
                                const auto k = key(x, c);
                                for (auto w : chosen_)
                                    if (std::find(x.begin(), x.end(), w) == x.end() && covered(k, w))
                                        return true;
                                return false;
                            };
                            ok = ! framed({});
                            if (ok && t_ >= 2)
                                for_each_subset(chosen_, t_ - 1, [&](const std::vector<int> & x) {
                                    if (ok && framed(x))
                                        ok = false;
                                });
                        }
                        return ok;
                    }
                    case Property::SSC: {
                        auto code = chosen_;
                        code.push_back(c);
                        ok = recovers({c}, code);
                        if (ok && t_ >= 2)
                            for_each_subset(chosen_, t_ - 1, [&](const std::vector<int> & x) {
                                if (! ok)
                                    return;
                                auto with = x;
                                with.push_back(c);
                                ok = recovers(with, code);
                            });
                        if (ok)
                            for_each_subset(chosen_, t_, [&](const std::vector<int> & x) {
                                if (ok && covered(key(x, -1), c))
                                    ok = recovers(x, code);
                            });
                        return ok;
                    }
                }
                return false;
            }

            auto commit(int c) -> void
            {
                std::vector<std::uint64_t> added;
                if (property_ == Property::SC) {
                    added.push_back(key({}, c));
                    if (t_ >= 2)
                        for_each_subset(chosen_, t_ - 1, [&](const std::vector<int> & x) { added.push_back(key(x, c)); });
                    for (auto k : added)
                        keys_.insert(k);
                }
                chosen_.push_back(c);
                undo_.push_back(std::move(added));
            }

            auto uncommit() -> void
            {
                for (auto k : undo_.back())
                    keys_.erase(k);
                undo_.pop_back();
                chosen_.pop_back();
            }

            auto dfs(const std::vector<int> & candidates) -> void
            {
                if (++nodes_ > budget_) {
                    aborted_ = true;
                    return;
                }
                if (chosen_.size() > best_.size())
                    best_ = chosen_;
                for (std::size_t i = 0; i < candidates.size(); ++i) {
                    if (chosen_.size() + (candidates.size() - i) <= best_.size())
                        return;
                    const auto c = candidates[i];
                    commit(c);
                    std::vector<int> next;
                    for (std::size_t j = i + 1; j < candidates.size(); ++j)
                        if (can_add(candidates[j]))
                            next.push_back(candidates[j]);
                    dfs(next);
                    uncommit();
                    if (aborted_)
                        return;
                }
            }

            std::size_t t_, n_, q_;
            Property property_;
            std::uint64_t budget_;
            std::vector<Word> words_;
            std::size_t min_distance_ = 1;
            std::vector<int> chosen_;
            std::vector<int> best_;
            std::unordered_set<std::uint64_t> keys_;
            std::vector<std::vector<std::uint64_t>> undo_;
            std::uint64_t nodes_ = 0;
            bool aborted_ = false;
        };
    }

    auto search_optimal(std::size_t t, std::size_t n, std::size_t q, Property property, std::uint64_t node_budget)
        -> SearchResult
    {
        if (t == 0 || n == 0 || q < 2)
            throw InvalidArgument("search needs t >= 1, n >= 1 and q >= 2");
        return Searcher{t, n, q, property, node_budget}.run();
    }

    auto isomorph_canonical(const Code & code) -> Code
    {
        const auto n = code.length();
        const auto m = code.size();

        struct State
        {
            std::vector<std::size_t> coords;
            std::vector<std::vector<Symbol>> rows; // relabeled, original column order
            auto operator<=> (const State &) const = default;
        };

        std::vector<State> states{State{}};
        for (std::size_t level = 0; level < n; ++level) {
            std::vector<Symbol> best_row;
            std::set<State> next;
            for (const auto & s : states) {
                // columns ordered by their relabeled prefix
                std::vector<std::size_t> order(m);
                std::iota(order.begin(), order.end(), std::size_t{0});
                auto prefix_less = [&](std::size_t a, std::size_t b) {
                    for (const auto & r : s.rows)
                        if (r[a] != r[b])
                            return r[a] < r[b];
                    return false;
                };
                for (std::size_t coord = 0; coord < n; ++coord) {
                    if (std::find(s.coords.begin(), s.coords.end(), coord) != s.coords.end())
                        continue;
                    std::vector<Symbol> used;
                    for (std::size_t j = 0; j < m; ++j)
                        used.push_back(code.at(coord, j));
                    std::sort(used.begin(), used.end());
                    used.erase(std::unique(used.begin(), used.end()), used.end());
                    if (used.size() > 8)
                        throw ResourceLimit("canonical form enumerates symbol relabelings; more than 8 symbols in a coordinate");

                    std::vector<Symbol> labels(used.size());
                    std::iota(labels.begin(), labels.end(), Symbol{0});
                    do {
                        std::vector<Symbol> row(m);
                        for (std::size_t j = 0; j < m; ++j) {
                            const auto pos = std::lower_bound(used.begin(), used.end(), code.at(coord, j)) - used.begin();
                            row[j] = labels[static_cast<std::size_t>(pos)];
                        }
                        auto sorted = order;
                        std::sort(sorted.begin(), sorted.end(), [&](std::size_t a, std::size_t b) {
                            if (prefix_less(a, b))
                                return true;
                            if (prefix_less(b, a))
                                return false;
                            return row[a] < row[b];
                        });
                        std::vector<Symbol> seen(m);
                        for (std::size_t j = 0; j < m; ++j)
                            seen[j] = row[sorted[j]];
                        if (best_row.empty() || seen < best_row) {
                            best_row = seen;
                            next.clear();
                        }
                        if (seen == best_row) {
                            State grown = s;
                            grown.coords.push_back(coord);
                            grown.rows.push_back(std::move(row));
                            next.insert(std::move(grown));
                        }
                    } while (std::next_permutation(labels.begin(), labels.end()));
                }
            }
            states.assign(next.begin(), next.end());
        }

        const auto & rows = states.front().rows;
        std::vector<Word> words(m, Word(n));
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t i = 0; i < n; ++i)
                words[j][i] = rows[i][j];
        std::sort(words.begin(), words.end());
        return Code{n, code.alphabet(), words};
    }
}
