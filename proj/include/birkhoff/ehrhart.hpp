#pragma once

#include <array>
#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "birkhoff/bigint.hpp"

namespace birkhoff {

// A tuple of nonnegative integers (length <= 8): row sums, column
// sums, and the split vectors of the contingency recursion.  The total
// is cached.  A normalized tuple is weakly increasing.
class SumVector {
  public:
    SumVector() = default;
    SumVector(std::initializer_list<int> vals);
    SumVector(const int* vals, int len);
    static SumVector constant(int len, int value);

    int length() const { return len_; }
    int operator[](int i) const { return e_[i]; }
    long long total() const { return total_; }
    bool is_weakly_increasing() const;

    SumVector sorted() const;
    SumVector slice(int begin, int end) const;  // [begin, end)

    // entrywise difference; throws if any entry would go negative
    friend SumVector operator-(const SumVector& a, const SumVector& b);

    friend bool operator==(const SumVector& a, const SumVector& b);
    friend bool operator<(const SumVector& a, const SumVector& b);  // (length, entries) lex

    // entries packed 16 bits each, for hashing
    std::pair<std::uint64_t, std::uint64_t> pack() const;

  private:
    std::array<std::int16_t, 8> e_{};
    std::int8_t len_ = 0;
    long long total_ = 0;
};

// Number of distinct tuples obtained by permuting the entries of y:
// k!/(k_1! ... k_l!) over the repetition counts.
BigInt multiplicity(const SumVector& y);

// N((x1,x2),(y1,y2)) = min(x1,x2,y1,y2) + 1 when the totals agree,
// otherwise 0.
BigInt count_2x2(const SumVector& x, const SumVector& y);

// Number of nonnegative integer matrices with row sums r and column
// sums c, by the halving split recursion down to the 2x2 closed form.
// Zero when the totals differ; invariant under permuting r, permuting
// c, and swapping the two.  Pure (unmemoized) computation.
BigInt count_contingency(const SumVector& r, const SumVector& c);

namespace detail {
// Same count with the first split forced at row index k (the remaining
// recursion is the default).  Exists so tests can confirm the count is
// independent of the split point.
BigInt count_contingency_split(const SumVector& r, const SumVector& c, int k);
}  // namespace detail

// Memo table of N(x,y) values keyed by normalized (sorted) tuple pairs;
// lookups sort on entry.  By default only counts with both sides of
// length >= 3 are stored, so the small 2-row subcounts are recomputed
// on demand; cache_two_row stores those as well.
//
// Thread model: count() may mutate and must not race; count_readonly()
// never mutates, so any number of threads may call it concurrently once
// the table is no longer being written (publication barrier on the
// caller).
class CountTable {
  public:
    explicit CountTable(bool cache_two_row = false) : cache_two_row_(cache_two_row) {}

    BigInt count(const SumVector& r, const SumVector& c);
    BigInt count_readonly(const SumVector& r, const SumVector& c) const;

    bool should_cache(const SumVector& r, const SumVector& c) const;
    void store(const SumVector& r, const SumVector& c, BigInt value);
    const BigInt* find(const SumVector& r, const SumVector& c) const;

    std::size_t size() const { return map_.size(); }

  private:
    struct Key {
        std::uint64_t rw0, rw1, cw0, cw1;
        std::uint16_t lens;
        bool operator==(const Key&) const = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const;
    };
    static Key make_key(const SumVector& r, const SumVector& c);

    std::unordered_map<Key, BigInt, KeyHash> map_;
    bool cache_two_row_;
};

// Number of n x n nonnegative integer matrices with every row and
// column sum equal to t, via the symmetric split: classify by the
// column-sum vector y of the top ceil(n/2) rows, restricted to weakly
// increasing y and weighted by multiplicity(y), with the two half
// counts themselves computed the same way one level down.  A shared
// CountTable may be supplied to reuse subcounts across calls; threads
// parallelizes the table precompute and the per-y assembly.
BigInt magic_count(int n, int t, CountTable* table = nullptr, int threads = 1);

// Ehrhart polynomial of B_n over the binomial basis
// p_k(t) = C(t+n-1+k, n-1+2k), k = 0..C(n-1,2).  The basis satisfies
// p(-n-t) = (-1)^(n-1) p(t) and is unitriangular on t = 0,1,2,...
// (p_k(t) = 0 for t < k, p_k(k) = 1), so the coefficients fall out of
// forward substitution from the counts at t = 0..C(n-1,2) and are
// integers by construction.
struct EhrhartPoly {
    int n = 0;
    std::vector<BigInt> coeffs;  // a_0 .. a_{C(n-1,2)}
};

EhrhartPoly ehrhart_polynomial(int n, int threads = 1);

// Value of the basis polynomial p_k at any integer t (as a polynomial,
// so negative t is fine).
BigInt ehrhart_basis_value(int n, int k, const BigInt& t);

// Evaluate the polynomial at any integer t.
BigInt evaluate(const EhrhartPoly& p, const BigInt& t);

}  // namespace birkhoff
