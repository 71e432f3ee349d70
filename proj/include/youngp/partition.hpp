#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace youngp {

/* A partition is a weakly decreasing list of positive parts; the empty
 * list is the unique partition of 0.  Values are immutable after
 * construction and cheap to copy. */
struct partition {
    std::vector<int> parts;

    partition() = default;
    explicit partition(std::vector<int> p);

    long n() const;
    int rows() const { return static_cast<int>(parts.size()); }
    bool empty() const { return parts.empty(); }
    /* 1-based row access; rows beyond the last are 0. */
    int row(int i) const {
        return (i >= 1 && i <= rows()) ? parts[static_cast<size_t>(i) - 1] : 0;
    }

    bool operator==(const partition&) const = default;
    auto operator<=>(const partition&) const = default;
};

/* 1-based coordinates of a node (cell) of the Young diagram. */
struct node_pos {
    int row = 0;
    int col = 0;
    bool operator==(const node_pos&) const = default;
};

partition conjugate(const partition& lam);

/* Removable nodes (corners), top row first. */
std::vector<node_pos> removable_nodes(const partition& lam);
bool is_removable(const partition& lam, node_pos pos);
/* Throws std::invalid_argument if pos is not a removable node. */
partition remove_node(const partition& lam, node_pos pos);

/* Hook lengths in row-major order; size equals n. */
std::vector<int> hook_lengths(const partition& lam);

/* v_p(m) and v_p(m!) (Legendre). */
long valuation(long m, long p);
long factorial_valuation(long m, long p);

/* v_p of the degree of the irreducible symmetric-group character labelled
 * by lam, via the hook length formula: v_p(n!) - sum of hook valuations.
 * Never materializes the (typically huge) degree. */
long degree_p_valuation(const partition& lam, long p);

/* p-adic expansion n = sum a_j p^(e_j) with 1 <= a_j < p and strictly
 * increasing exponents. */
struct padic_expansion {
    long prime = 0;
    std::vector<std::pair<long, long>> digits;  // (a_j, e_j), e_j ascending
    long value() const;
};
padic_expansion padic_digits(long n, long p);

bool is_prime(long p);
/* Largest k with p^k <= n (n >= 1). */
long top_exponent(long n, long p);
long ipow(long p, long k);

/* Textual form: parts joined by '+', "-" for the empty partition. */
std::string to_string(const partition& lam);
partition parse_partition(const std::string& text);

/* All partitions of n, each weakly decreasing; deterministic order. */
void for_each_partition(int n, const std::function<void(const partition&)>& fn);
std::vector<partition> partitions_of(int n);
long partition_count(int n);

}  // namespace youngp
