#pragma once

#include <deque>
#include <set>

namespace shicores {

template <typename Predicate>
std::vector<Alcove> alcoves_bfs(int n, Predicate keep)
{
    std::vector<Alcove> order;
    std::set<AffinePermutation> seen;
    std::deque<AffinePermutation> queue;

    const auto start = AffinePermutation::identity(n);
    seen.insert(start);
    queue.push_back(start);
    while (!queue.empty()) {
        auto x = std::move(queue.front());
        queue.pop_front();
        for (int i = 0; i < n; ++i) {
            // x s_i A_0 shares the wall x(H_{alpha_i}) with x A_0.
            auto y = compose(x, generator(i, n));
            if (seen.contains(y) || !keep(Alcove{y})) {
                continue;
            }
            seen.insert(y);
            queue.push_back(std::move(y));
        }
        order.push_back(Alcove{std::move(x)});
    }
    return order;
}

} // namespace shicores
