#include "birkhoff/ehrhart.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <stdexcept>
#include <thread>

namespace birkhoff {

SumVector::SumVector(std::initializer_list<int> vals) {
    if (vals.size() > 8) throw std::invalid_argument("SumVector: length must be <= 8");
    for (int v : vals) {
        if (v < 0) throw std::invalid_argument("SumVector: entries must be nonnegative");
        if (v > INT16_MAX) throw std::invalid_argument("SumVector: entry too large");
        e_[len_++] = static_cast<std::int16_t>(v);
        total_ += v;
    }
}

SumVector::SumVector(const int* vals, int len) {
    if (len < 0 || len > 8) throw std::invalid_argument("SumVector: length must be in 0..8");
    for (int i = 0; i < len; ++i) {
        if (vals[i] < 0) throw std::invalid_argument("SumVector: entries must be nonnegative");
        if (vals[i] > INT16_MAX) throw std::invalid_argument("SumVector: entry too large");
        e_[i] = static_cast<std::int16_t>(vals[i]);
        total_ += vals[i];
    }
    len_ = static_cast<std::int8_t>(len);
}

SumVector SumVector::constant(int len, int value) {
    int buf[8];
    for (int i = 0; i < len; ++i) buf[i] = value;
    return SumVector(buf, len);
}

bool SumVector::is_weakly_increasing() const {
    for (int i = 1; i < len_; ++i)
        if (e_[i] < e_[i - 1]) return false;
    return true;
}

SumVector SumVector::sorted() const {
    SumVector s = *this;
    std::sort(s.e_.begin(), s.e_.begin() + s.len_);
    return s;
}

SumVector SumVector::slice(int begin, int end) const {
    int buf[8];
    for (int i = begin; i < end; ++i) buf[i - begin] = e_[i];
    return SumVector(buf, end - begin);
}

SumVector operator-(const SumVector& a, const SumVector& b) {
    if (a.len_ != b.len_) throw std::invalid_argument("SumVector: length mismatch");
    int buf[8];
    for (int i = 0; i < a.len_; ++i) {
        buf[i] = a.e_[i] - b.e_[i];
        if (buf[i] < 0) throw std::invalid_argument("SumVector: negative difference");
    }
    return SumVector(buf, a.len_);
}

bool operator==(const SumVector& a, const SumVector& b) {
    return a.len_ == b.len_ && std::equal(a.e_.begin(), a.e_.begin() + a.len_, b.e_.begin());
}

bool operator<(const SumVector& a, const SumVector& b) {
    if (a.len_ != b.len_) return a.len_ < b.len_;
    return std::lexicographical_compare(a.e_.begin(), a.e_.begin() + a.len_, b.e_.begin(),
                                        b.e_.begin() + b.len_);
}

std::pair<std::uint64_t, std::uint64_t> SumVector::pack() const {
    std::uint64_t w0 = 0, w1 = 0;
    for (int i = 0; i < 4; ++i) w0 |= static_cast<std::uint64_t>(static_cast<std::uint16_t>(e_[i])) << (16 * i);
    for (int i = 4; i < 8; ++i) w1 |= static_cast<std::uint64_t>(static_cast<std::uint16_t>(e_[i])) << (16 * (i - 4));
    return {w0, w1};
}

BigInt multiplicity(const SumVector& y) {
    SumVector s = y.sorted();
    BigInt m = factorial(static_cast<unsigned>(s.length()));
    int run = 1;
    for (int i = 1; i <= s.length(); ++i) {
        if (i < s.length() && s[i] == s[i - 1]) {
            ++run;
        } else {
            m /= factorial(static_cast<unsigned>(run));
            run = 1;
        }
    }
    return m;
}

BigInt count_2x2(const SumVector& x, const SumVector& y) {
    if (x.length() != 2 || y.length() != 2)
        throw std::invalid_argument("count_2x2: both tuples must have length 2");
    if (x.total() != y.total()) return 0;
    int m = std::min(std::min(x[0], x[1]), std::min(y[0], y[1]));
    return BigInt(m + 1);
}

namespace {

// Enumerate ordered tuples x of the given length with 0 <= x[i] <=
// cap[i] and sum exactly `total`, pruned by suffix capacity so every
// leaf is valid.
template <class Fn>
void enumerate_bounded_tuples(const SumVector& cap, long long total, Fn&& fn) {
    int len = cap.length();
    long long suffix[9];
    suffix[len] = 0;
    for (int i = len - 1; i >= 0; --i) suffix[i] = suffix[i + 1] + cap[i];
    if (total > suffix[0]) return;
    int x[8];
    auto rec = [&](auto&& self, int pos, long long rem) -> void {
        if (pos == len) {
            fn(x, len);
            return;
        }
        long long lo = std::max<long long>(0, rem - suffix[pos + 1]);
        long long hi = std::min<long long>(cap[pos], rem);
        for (long long v = lo; v <= hi; ++v) {
            x[pos] = static_cast<int>(v);
            self(self, pos + 1, rem - v);
        }
    };
    rec(rec, 0, total);
}

// Enumerate weakly increasing tuples with entries in [0, cap] and sum
// exactly `total`, in lexicographic order.
template <class Fn>
void enumerate_weakly_increasing(int len, int cap, long long total, Fn&& fn) {
    if (len == 0) {
        if (total == 0) {
            int dummy = 0;
            fn(&dummy, 0);
        }
        return;
    }
    int x[8];
    auto rec = [&](auto&& self, int pos, int minval, long long rem) -> void {
        if (pos == len) {
            if (rem == 0) fn(x, len);
            return;
        }
        int remaining = len - pos;
        for (int v = minval; v <= cap; ++v) {
            long long lo = rem - static_cast<long long>(remaining - 1) * cap;
            if (v < lo) continue;
            if (static_cast<long long>(v) * remaining > rem) break;  // weakly increasing tail
            x[pos] = v;
            self(self, pos + 1, v, rem - v);
        }
    };
    rec(rec, 0, 0, total);
}

enum class MemoMode { none, read_write, read_only };

BigInt count_impl(const SumVector& r, const SumVector& c, CountTable* table, MemoMode mode,
                  int forced_k);

BigInt count_split_terms(const SumVector& rows, const SumVector& cols, int k, CountTable* table,
                         MemoMode mode) {
    SumVector top = rows.slice(0, k);
    SumVector bot = rows.slice(k, rows.length());
    BigInt acc = 0;
    enumerate_bounded_tuples(cols, top.total(), [&](const int* x, int len) {
        SumVector xs(x, len);
        BigInt a = count_impl(top, xs, table, mode, -1);
        if (a == 0) return;
        acc += a * count_impl(bot, cols - xs, table, mode, -1);
    });
    return acc;
}

BigInt count_impl(const SumVector& r, const SumVector& c, CountTable* table, MemoMode mode,
                  int forced_k) {
    if (r.total() != c.total()) return 0;
    if (r.length() == 0 || c.length() == 0) return 1;  // totals are both 0 here
    if (r.length() == 1 || c.length() == 1) return 1;  // the one line is determined
    if (r.length() == 2 && c.length() == 2)
        return BigInt(std::min(std::min(r[0], r[1]), std::min(c[0], c[1])) + 1);

    if (forced_k > 0) return count_split_terms(r, c, forced_k, table, mode);

    bool cached = table && mode != MemoMode::none && table->should_cache(r, c);
    if (cached)
        if (const BigInt* hit = table->find(r, c)) return *hit;

    // split the longer side's lines, so both halves shrink toward the bases
    const SumVector& rows = r.length() >= c.length() ? r : c;
    const SumVector& cols = r.length() >= c.length() ? c : r;
    BigInt acc = count_split_terms(rows, cols, rows.length() / 2, table, mode);

    if (cached && mode == MemoMode::read_write) table->store(r, c, acc);
    return acc;
}

}  // namespace

BigInt count_contingency(const SumVector& r, const SumVector& c) {
    return count_impl(r, c, nullptr, MemoMode::none, -1);
}

namespace detail {
BigInt count_contingency_split(const SumVector& r, const SumVector& c, int k) {
    if (k < 1 || k >= r.length())
        throw std::invalid_argument("count_contingency_split: split must be inside the rows");
    if (r.total() != c.total()) return 0;
    if (c.length() == 0) return 1;
    return count_split_terms(r, c, k, nullptr, MemoMode::none);
}
}  // namespace detail

std::size_t CountTable::KeyHash::operator()(const Key& k) const {
    auto mix = [](std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ull;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
        return x ^ (x >> 31);
    };
    return static_cast<std::size_t>(
        mix(k.rw0 ^ mix(k.rw1 ^ mix(k.cw0 ^ mix(k.cw1 ^ k.lens)))));
}

CountTable::Key CountTable::make_key(const SumVector& r, const SumVector& c) {
    SumVector rs = r.sorted(), cs = c.sorted();
    if (cs < rs) std::swap(rs, cs);  // transposition symmetry
    auto [rw0, rw1] = rs.pack();
    auto [cw0, cw1] = cs.pack();
    return Key{rw0, rw1, cw0, cw1,
               static_cast<std::uint16_t>((rs.length() << 8) | cs.length())};
}

bool CountTable::should_cache(const SumVector& r, const SumVector& c) const {
    int minlen = std::min(r.length(), c.length());
    return minlen >= 3 || (cache_two_row_ && minlen >= 2);
}

void CountTable::store(const SumVector& r, const SumVector& c, BigInt value) {
    map_[make_key(r, c)] = std::move(value);
}

const BigInt* CountTable::find(const SumVector& r, const SumVector& c) const {
    auto it = map_.find(make_key(r, c));
    return it == map_.end() ? nullptr : &it->second;
}

BigInt CountTable::count(const SumVector& r, const SumVector& c) {
    return count_impl(r, c, this, MemoMode::read_write, -1);
}

BigInt CountTable::count_readonly(const SumVector& r, const SumVector& c) const {
    return count_impl(r, c, const_cast<CountTable*>(this), MemoMode::read_only, -1);
}

namespace {

// Shared enumeration of the split terms for one half count
// N(R_part, y): R_part is `part_rows` rows of t, y the n-long sorted
// column-sum vector, columns split at `split_cols`.  Calls
// fn(u, complement, y_lo, y_hi) per weakly increasing u.
template <class Fn>
void for_each_half_term(int part_rows, int t, const SumVector& y, int split_cols, Fn&& fn) {
    SumVector y_lo = y.slice(0, split_cols);
    SumVector y_hi = y.slice(split_cols, y.length());
    enumerate_weakly_increasing(part_rows, t, y_lo.total(), [&](const int* u, int len) {
        int comp[8];
        for (int i = 0; i < len; ++i) comp[i] = t - u[len - 1 - i];  // sorted complement
        fn(SumVector(u, len), SumVector(comp, len), y_lo, y_hi);
    });
}

BigInt half_count(int part_rows, int t, const SumVector& y, int split_cols,
                  const CountTable& table, bool readonly, CountTable* rw) {
    BigInt acc = 0;
    for_each_half_term(part_rows, t, y, split_cols,
                       [&](const SumVector& u, const SumVector& comp, const SumVector& y_lo,
                           const SumVector& y_hi) {
                           BigInt a = readonly ? table.count_readonly(u, y_lo)
                                               : rw->count(u, y_lo);
                           BigInt b = readonly ? table.count_readonly(comp, y_hi)
                                               : rw->count(comp, y_hi);
                           acc += multiplicity(u) * a * b;
                       });
    return acc;
}

std::vector<SumVector> enumerate_column_profiles(int n, int t, long long total) {
    std::vector<SumVector> out;
    enumerate_weakly_increasing(n, t, total,
                                [&](const int* y, int len) { out.emplace_back(y, len); });
    return out;
}

// Run fn(i) for i in [0, count) over the given number of threads.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& fn) {
    if (threads <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= count) break;
            fn(i);
        }
    };
    std::vector<std::thread> pool;
    int nthreads = std::min<int>(threads, static_cast<int>(count));
    pool.reserve(nthreads);
    for (int w = 0; w < nthreads; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

}  // namespace

BigInt magic_count(int n, int t, CountTable* table, int threads) {
    if (n < 1 || n > 8) throw std::invalid_argument("magic_count: order must be in 1..8");
    if (t < 0) throw std::invalid_argument("magic_count: t must be >= 0");

    CountTable local;
    if (!table) table = &local;

    int m1 = (n + 1) / 2, m2 = n / 2;  // top and bottom row counts
    std::vector<SumVector> y1 = enumerate_column_profiles(n, t, static_cast<long long>(m1) * t);
    std::vector<SumVector> y2;
    bool split_even = m1 == m2;
    if (!split_even) y2 = enumerate_column_profiles(n, t, static_cast<long long>(m2) * t);

    if (threads > 1) {
        // Precompute the distinct subcounts the assembly will look up,
        // in parallel; each is self-contained (its recursion only
        // touches non-cached sizes), so workers share nothing.
        std::vector<std::pair<SumVector, SumVector>> keys;
        auto collect = [&](int part_rows, const std::vector<SumVector>& ys) {
            for (const SumVector& y : ys)
                for_each_half_term(part_rows, t, y, m1,
                                   [&](const SumVector& u, const SumVector& comp,
                                       const SumVector& y_lo, const SumVector& y_hi) {
                                       if (table->should_cache(u, y_lo) && !table->find(u, y_lo))
                                           keys.emplace_back(u.sorted(), y_lo.sorted());
                                       if (table->should_cache(comp, y_hi) &&
                                           !table->find(comp, y_hi))
                                           keys.emplace_back(comp.sorted(), y_hi.sorted());
                                   });
        };
        collect(m1, y1);
        collect(m2, split_even ? y1 : y2);
        std::sort(keys.begin(), keys.end());
        keys.erase(std::unique(keys.begin(), keys.end()), keys.end());

        std::vector<BigInt> values(keys.size());
        parallel_for(keys.size(), threads, [&](std::size_t i) {
            values[i] = count_contingency(keys[i].first, keys[i].second);
        });
        for (std::size_t i = 0; i < keys.size(); ++i)
            table->store(keys[i].first, keys[i].second, std::move(values[i]));
    }

    // Half counts per column profile; table reads only (after the
    // precompute barrier) when running parallel.
    std::vector<BigInt> h1(y1.size()), h2;
    bool readonly = threads > 1;
    parallel_for(y1.size(), threads,
                 [&](std::size_t i) { h1[i] = half_count(m1, t, y1[i], m1, *table, readonly, table); });
    const std::vector<SumVector>& yb = split_even ? y1 : y2;
    const std::vector<BigInt>* hb = &h1;
    if (!split_even) {
        h2.resize(y2.size());
        parallel_for(y2.size(), threads, [&](std::size_t i) {
            h2[i] = half_count(m2, t, y2[i], m1, *table, readonly, table);
        });
        hb = &h2;
    }

    // e(B_n, t) = sum over weakly increasing y of M(y) N(R1,y) N(R2,T-y);
    // T-y of a sorted y is reverse-sorted, so its sorted form is read off
    // directly and found in the bottom profile list by binary search.
    BigInt total = 0;
    for (std::size_t i = 0; i < y1.size(); ++i) {
        const SumVector& y = y1[i];
        int comp[8];
        for (int j = 0; j < n; ++j) comp[j] = t - y[n - 1 - j];
        SumVector ty(comp, n);
        auto it = std::lower_bound(yb.begin(), yb.end(), ty);
        if (it == yb.end() || !(*it == ty))
            throw std::logic_error("magic_count: complement profile missing");
        total += multiplicity(y) * h1[i] * (*hb)[static_cast<std::size_t>(it - yb.begin())];
    }
    return total;
}

EhrhartPoly ehrhart_polynomial(int n, int threads) {
    if (n < 1 || n > 8) throw std::invalid_argument("ehrhart_polynomial: order must be in 1..8");
    unsigned D = static_cast<unsigned>((n - 1) * (n - 2) / 2);  // C(n-1,2)

    CountTable table;
    std::vector<BigInt> values(D + 1);
    for (unsigned t = 0; t <= D; ++t) values[t] = magic_count(n, static_cast<int>(t), &table, threads);

    EhrhartPoly p;
    p.n = n;
    p.coeffs.resize(D + 1);
    for (unsigned k = 0; k <= D; ++k) {
        BigInt a = values[k];
        for (unsigned j = 0; j < k; ++j)
            a -= p.coeffs[j] * binomial(k + static_cast<unsigned>(n) - 1 + j,
                                        static_cast<unsigned>(n) - 1 + 2 * j);
        p.coeffs[k] = a;  // p_k(k) = 1, so no division
    }
    return p;
}

BigInt ehrhart_basis_value(int n, int k, const BigInt& t) {
    return binomial_poly(t + n - 1 + k, static_cast<unsigned>(n - 1 + 2 * k));
}

BigInt evaluate(const EhrhartPoly& p, const BigInt& t) {
    BigInt acc = 0;
    for (std::size_t k = 0; k < p.coeffs.size(); ++k)
        acc += p.coeffs[k] * ehrhart_basis_value(p.n, static_cast<int>(k), t);
    return acc;
}

}  // namespace birkhoff
