#include "burn/tiling.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "search_support.hpp"

namespace burn {

namespace {

void check_sides(const std::vector<int>& sides) {
    for (int s : sides)
        if (s < 1 || s % 2 == 0) throw std::invalid_argument("tile sides must be odd positive integers");
}

/// Backtracking over start offsets in [1, n] with an occupancy strip.
class Strip {
public:
    Strip(int n, const std::vector<int>& sides) : n_(n), sides_(sides), used_(static_cast<std::size_t>(n) + 2, 0) {
        starts_.resize(sides.size());
        suffix_.assign(sides.size() + 1, 0);
        for (std::size_t i = sides.size(); i-- > 0;) suffix_[i] = suffix_[i + 1] + sides[i];
    }

    template <class Fn>
    bool run(Fn&& on_found) {
        return place(0, static_cast<long>(n_), on_found);
    }

    Packing current() const {
        Packing p;
        long total = 0;
        for (std::size_t i = 0; i < sides_.size(); ++i) {
            p.tiles.push_back(TilePlacement{sides_[i], {starts_[i]}});
            total += sides_[i];
        }
        p.is_tiling = total == n_;
        return p;
    }

private:
    template <class Fn>
    bool place(std::size_t i, long free_cells, Fn& on_found) {
        if (i == sides_.size()) return on_found();
        if (suffix_[i] > free_cells) return false;
        const int side = sides_[i];
        for (int start = 1; start + side - 1 <= n_; ++start) {
            bool clear = true;
            for (int x = start; x < start + side && clear; ++x) clear = !used_[static_cast<std::size_t>(x)];
            if (!clear) continue;
            for (int x = start; x < start + side; ++x) used_[static_cast<std::size_t>(x)] = 1;
            starts_[i] = start;
            const bool stop = place(i + 1, free_cells - side, on_found);
            for (int x = start; x < start + side; ++x) used_[static_cast<std::size_t>(x)] = 0;
            if (stop) return true;
        }
        return false;
    }

    int n_;
    std::vector<int> sides_;
    std::vector<char> used_;
    std::vector<int> starts_;
    std::vector<long> suffix_;
};

}  // namespace

std::optional<Packing> pack_1d(int n, const std::vector<int>& sides) {
    if (n < 1) throw std::invalid_argument("pack_1d: n must be >= 1");
    check_sides(sides);
    Strip strip(n, sides);
    std::optional<Packing> found;
    strip.run([&] {
        found = strip.current();
        return true;
    });
    return found;
}

std::vector<Packing> enumerate_1d(int n, const std::vector<int>& sides, std::size_t limit) {
    if (n < 1) throw std::invalid_argument("enumerate_1d: n must be >= 1");
    check_sides(sides);
    Strip strip(n, sides);
    std::vector<Packing> all;
    strip.run([&] {
        all.push_back(strip.current());
        return all.size() >= limit;
    });
    return all;
}

PackSearch pack_small_2d(int n, int m, const SearchBudget& budget) {
    if (n < 1 || n > kMaxPackBox) throw std::invalid_argument("pack_small_2d: n must be in [1, 12]");
    if (m < 1 || m > kMaxPackTiles) throw std::invalid_argument("pack_small_2d: m must be in [1, 5]");

    PackSearch result;
    // Total area is m(2m-1)(2m+1)/3.
    const long area = static_cast<long>(m) * (2L * m - 1) * (2L * m + 1) / 3;
    if (area > static_cast<long>(n) * n) {
        result.solved = true;
        return result;
    }

    std::vector<int> sides;
    for (int s = 2 * m - 1; s >= 1; s -= 2) sides.push_back(s);
    std::vector<std::vector<char>> used(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
    std::vector<TilePlacement> placed;
    detail::BudgetMeter meter(budget);

    auto fits = [&](int x0, int y0, int side) {
        for (int y = y0; y < y0 + side; ++y)
            for (int x = x0; x < x0 + side; ++x)
                if (used[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)]) return false;
        return true;
    };
    auto mark = [&](int x0, int y0, int side, char v) {
        for (int y = y0; y < y0 + side; ++y)
            for (int x = x0; x < x0 + side; ++x) used[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)] = v;
    };

    auto search = [&](auto&& self, std::size_t i) -> bool {
        meter.tick();
        if (i == sides.size()) return true;
        const int side = sides[i];
        for (int y = 0; y + side <= n; ++y) {
            for (int x = 0; x + side <= n; ++x) {
                if (!fits(x, y, side)) continue;
                mark(x, y, side, 1);
                placed.push_back(TilePlacement{side, {x + 1, y + 1}});
                if (self(self, i + 1)) return true;
                placed.pop_back();
                mark(x, y, side, 0);
            }
        }
        return false;
    };

    try {
        if (search(search, 0)) result.packing = Packing{placed, area == static_cast<long>(n) * n};
        result.solved = true;
    } catch (const BudgetExceeded&) {
        result.solved = false;
    }
    result.nodes = meter.nodes();
    return result;
}

BigInt GenFunTable::at(int l, int r) const {
    if (l < 0 || r < 0 || l > max_l() || r > max_r()) return 0;
    return c[static_cast<std::size_t>(l)][static_cast<std::size_t>(r)];
}

GenFunTable genfun(int n) {
    if (n < 2 || n > kMaxGenFun) throw std::invalid_argument("genfun: n must be in [2, 40]");
    GenFunTable t;
    t.n = n;
    const int max_l = (n - 1) * (n - 1);
    t.c.assign(static_cast<std::size_t>(max_l) + 1, std::vector<BigInt>(static_cast<std::size_t>(n), BigInt(0)));
    t.c[0][0] = 1;
    int reach = 0;
    for (int i = 1; i <= n - 1; ++i) {
        const int tile = 2 * i - 1;
        // Multiply by (1 + x^tile y), descending so each tile is used once.
        for (int l = reach; l >= 0; --l)
            for (int r = i - 1; r >= 0; --r)
                if (t.c[static_cast<std::size_t>(l)][static_cast<std::size_t>(r)] != 0)
                    t.c[static_cast<std::size_t>(l + tile)][static_cast<std::size_t>(r + 1)] +=
                        t.c[static_cast<std::size_t>(l)][static_cast<std::size_t>(r)];
        reach += tile;
    }
    return t;
}

BigInt f_value(const GenFunTable& table, int l) {
    if (l < 0 || l > table.max_l())
        throw std::out_of_range("f_value: l must be in [0, " + std::to_string(table.max_l()) + "]");
    const int n = table.n;
    BigInt total = 0;
    for (int r = 0; r <= n - 1; ++r) {
        const BigInt& c = table.c[static_cast<std::size_t>(l)][static_cast<std::size_t>(r)];
        if (c != 0) total += c * factorial(static_cast<unsigned>(r)) * factorial(static_cast<unsigned>(n - 1 - r));
    }
    return total;
}

BigInt f_value(int n, int l) { return f_value(genfun(n), l); }

KStarBound k_star_lower_bound(int n) {
    const GenFunTable table = genfun(n);
    KStarBound k;
    k.n = n;
    const std::int64_t square = static_cast<std::int64_t>(n) * n;
    std::int64_t good = 0;
    std::int64_t good_statement = 0;
    for (int l = 0; l <= table.max_l(); ++l) {
        k.f_values.push_back(f_value(table, l));
        if (k.f_values.back() > 0) {
            ++good;
            k.good_offsets.push_back(l);
            if (l <= n) ++good_statement;
        }
    }
    k.lower_bound = square - good;
    k.statement_range_bound = square - good_statement;
    return k;
}

}  // namespace burn
