#include "youngp/abacus.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace youngp {

namespace {
long floor_div(long a, long b) {
    long q = a / b;
    return (a % b != 0 && ((a < 0) != (b < 0))) ? q - 1 : q;
}
}  // namespace

abacus::abacus(int runners, long floor)
    : e_(runners), floor_(floor), rows_(static_cast<size_t>(runners)) {
    if (runners < 1) throw std::invalid_argument("abacus: need at least one runner");
}

abacus abacus::of_partition(const partition& lam, int e) {
    return of_partition_at_charge(lam, e, lam.rows());
}

abacus abacus::of_partition_at_charge(const partition& lam, int e, long charge) {
    const long r = lam.rows();
    const long full_below = charge - r;  // every position < full_below is a bead
    abacus a(e, floor_div(full_below, e));
    for (long pos = a.floor_ * e; pos < full_below; ++pos)
        a.add_bead(floor_div(pos, e), static_cast<int>(((pos % e) + e) % e));
    for (long i = 1; i <= r; ++i) {
        long pos = lam.row(static_cast<int>(i)) + charge - i;
        a.add_bead(floor_div(pos, e), static_cast<int>(((pos % e) + e) % e));
    }
    return a;
}

const std::vector<long>& abacus::runner_rows(int j) const {
    return rows_.at(static_cast<size_t>(j));
}

bool abacus::bead_at(long row, int runner) const {
    if (runner < 0 || runner >= e_) return false;
    if (row < floor_) return true;  // sea
    const auto& v = rows_[static_cast<size_t>(runner)];
    return std::binary_search(v.begin(), v.end(), row);
}

long abacus::bead_count(int runner) const {
    return static_cast<long>(rows_.at(static_cast<size_t>(runner)).size());
}

void abacus::add_bead(long row, int runner) {
    if (runner < 0 || runner >= e_) throw std::invalid_argument("add_bead: runner out of range");
    if (row < floor_) throw std::invalid_argument("add_bead: row below floor (sea is full)");
    auto& v = rows_[static_cast<size_t>(runner)];
    auto it = std::lower_bound(v.begin(), v.end(), row);
    if (it != v.end() && *it == row) throw std::invalid_argument("add_bead: position occupied");
    v.insert(it, row);
}

void abacus::remove_bead(long row, int runner) {
    auto& v = rows_.at(static_cast<size_t>(runner));
    auto it = std::lower_bound(v.begin(), v.end(), row);
    if (it == v.end() || *it != row) throw std::invalid_argument("remove_bead: no bead there");
    v.erase(it);
}

void abacus::refloor(long new_floor) {
    if (new_floor >= floor_) return;
    for (int j = 0; j < e_; ++j) {
        auto& v = rows_[static_cast<size_t>(j)];
        std::vector<long> fresh;
        for (long row = new_floor; row < floor_; ++row) fresh.push_back(row);
        fresh.insert(fresh.end(), v.begin(), v.end());
        v = std::move(fresh);
    }
    floor_ = new_floor;
}

void abacus::lift_runner(int j, const partition& nu) {
    const long need = nu.rows();
    if (need == 0) return;
    if (bead_count(j) < need) refloor(floor_ - (need - bead_count(j)));
    auto& v = rows_.at(static_cast<size_t>(j));
    // i-th bead from the bottom moves down nu_i rows
    for (long i = 1; i <= need; ++i)
        v[v.size() - static_cast<size_t>(i)] += nu.row(static_cast<int>(i));
    std::sort(v.begin(), v.end());
}

partition abacus::to_partition() const {
    std::vector<long> beads;
    for (int j = 0; j < e_; ++j)
        for (long row : rows_[static_cast<size_t>(j)]) beads.push_back(row * e_ + j);
    std::sort(beads.begin(), beads.end());
    const long base = floor_ * e_;
    std::vector<int> parts;
    for (size_t i = 0; i < beads.size(); ++i) {
        long gaps = (beads[i] - base) - static_cast<long>(i);
        if (gaps > 0) parts.push_back(static_cast<int>(gaps));
    }
    std::reverse(parts.begin(), parts.end());
    partition out;
    out.parts = std::move(parts);
    return out;
}

abacus abacus::pushed_up() const {
    abacus a(e_, floor_);
    for (int j = 0; j < e_; ++j) {
        long c = bead_count(j);
        auto& v = a.rows_[static_cast<size_t>(j)];
        for (long i = 0; i < c; ++i) v.push_back(floor_ + i);
    }
    return a;
}

long abacus::runner_weight(int j) const {
    const auto& v = rows_.at(static_cast<size_t>(j));
    const long c = static_cast<long>(v.size());
    long sum = 0;
    for (long row : v) sum += row;
    return sum - (c * floor_ + c * (c - 1) / 2);
}

long abacus::weight() const {
    long w = 0;
    for (int j = 0; j < e_; ++j) w += runner_weight(j);
    return w;
}

bool abacus::is_removable(bead b) const {
    if (!bead_at(b.row, b.runner)) return false;
    if (b.runner != 0) return !bead_at(b.row, b.runner - 1);
    return !bead_at(b.row - 1, e_ - 1);
}

std::vector<bead> abacus::removable_beads() const {
    std::vector<bead> out;
    for (int j = 0; j < e_; ++j)
        for (long row : rows_[static_cast<size_t>(j)])
            if (is_removable({row, j})) out.push_back({row, j});
    std::sort(out.begin(), out.end(),
              [this](bead a, bead b) { return a.position(e_) < b.position(e_); });
    return out;
}

long abacus::removable_on_runner(int j) const {
    long c = 0;
    for (long row : rows_.at(static_cast<size_t>(j)))
        if (is_removable({row, j})) ++c;
    return c;
}

abacus abacus::slide_left(bead b) const {
    if (!is_removable(b))
        throw std::invalid_argument("slide_left: bead (" + std::to_string(b.row) + "," +
                                    std::to_string(b.runner) + ") is not removable");
    abacus a = *this;
    a.remove_bead(b.row, b.runner);
    if (b.runner != 0)
        a.add_bead(b.row, b.runner - 1);
    else
        a.add_bead(b.row - 1, e_ - 1);
    return a;
}

long abacus::weight_delta_on_slide(bead b) const {
    if (!is_removable(b))
        throw std::invalid_argument("weight_delta_on_slide: bead is not removable");
    if (b.runner != 0) return bead_count(b.runner) - bead_count(b.runner - 1) - 1;
    return bead_count(0) - bead_count(e_ - 1) - 2;
}

std::string abacus::render() const {
    long top = floor_ - 1;
    long bottom = floor_;
    for (int j = 0; j < e_; ++j)
        if (!rows_[static_cast<size_t>(j)].empty())
            bottom = std::max(bottom, rows_[static_cast<size_t>(j)].back());
    std::ostringstream os;
    os << "      ";
    for (int j = 0; j < e_; ++j) os << j % 10 << ' ';
    os << '\n';
    for (long row = top; row <= bottom; ++row) {
        os.width(5);
        os << row << ' ';
        for (int j = 0; j < e_; ++j) os << (bead_at(row, j) ? "×" : "∘") << ' ';
        os << '\n';
    }
    return os.str();
}

namespace {
/* Read runner j of `a` as a one-runner abacus. */
partition runner_partition(const abacus& a, int j) {
    const auto& v = a.runner_rows(j);
    std::vector<int> parts;
    for (size_t i = 0; i < v.size(); ++i) {
        long gaps = (v[i] - a.floor_row()) - static_cast<long>(i);
        if (gaps > 0) parts.push_back(static_cast<int>(gaps));
    }
    std::reverse(parts.begin(), parts.end());
    partition nu;
    nu.parts = std::move(parts);
    return nu;
}

core_quotient read_core_quotient(const partition& lam, int e, long charge) {
    abacus a = abacus::of_partition_at_charge(lam, e, charge);
    core_quotient cq;
    cq.charge = charge;
    cq.core = a.pushed_up().to_partition();
    cq.weight = a.weight();
    for (int j = 0; j < e; ++j) cq.quotient.push_back(runner_partition(a, j));
    return cq;
}
}  // namespace

core_quotient core_and_quotient(const partition& lam, int e) {
    return read_core_quotient(lam, e, lam.rows());
}

core_quotient core_and_quotient_mod0(const partition& lam, int e) {
    const long r = lam.rows();
    return read_core_quotient(lam, e, ((r + e - 1) / e) * e);
}

partition from_core_quotient(const core_quotient& cq, int e) {
    if (static_cast<int>(cq.quotient.size()) != e)
        throw std::invalid_argument("from_core_quotient: quotient must have e components");
    abacus a = abacus::of_partition_at_charge(cq.core, e, cq.charge);
    for (int j = 0; j < e; ++j) a.lift_runner(j, cq.quotient[static_cast<size_t>(j)]);
    return a.to_partition();
}

partition core_of(const partition& lam, int e) {
    return abacus::of_partition(lam, e).pushed_up().to_partition();
}

long weight_of(const partition& lam, int e) {
    return abacus::of_partition(lam, e).weight();
}

std::set<long> two_runner_rem_range(const partition& base, int x) {
    if (!(base.empty() || base == partition({1})))
        throw std::invalid_argument("two_runner_rem_range: base must be - or 1");
    if (x < 0) throw std::invalid_argument("two_runner_rem_range: x must be >= 0");
    const abacus t = abacus::of_partition(base, 2);
    std::set<long> out;
    for (int s = 0; s <= x; ++s) {
        for (const partition& nu0 : partitions_of(s)) {
            for (const partition& nu1 : partitions_of(x - s)) {
                abacus u = t;
                u.lift_runner(0, nu0);
                u.lift_runner(1, nu1);
                out.insert(u.removable_on_runner(1));
            }
        }
    }
    return out;
}

}  // namespace youngp
