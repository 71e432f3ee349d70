#pragma once

#include <set>
#include <string>
#include <vector>

#include "youngp/partition.hpp"

namespace youngp {

/* James' abacus with e runners, runner j holding the positions congruent
 * to j mod e.  Rows are integers increasing downwards; position
 * arithmetic is pos = row*e + runner.
 *
 * Conventions used throughout:
 *  - Every position in rows below `floor` is occupied (the "sea"), so an
 *    arbitrary number of down-moves is always possible after refloor().
 *  - of_partition(lam, e) places beads at {lam_i + r - i} where r is the
 *    number of positive parts, which puts the first gap at (0,0).
 *  - bead_count(j) counts the explicit beads in the window [floor, inf).
 *    The window is shared by all runners and the sea contributes equally
 *    to every runner, so differences |A_j| - |A_i| (the only way bead
 *    counts enter the weight-delta law) do not depend on the window.
 *
 * Abaci are plain values: slides and push-ups return new configurations,
 * mutating builders (add/remove/lift/refloor) are for local construction.
 */
struct bead {
    long row = 0;
    int runner = 0;
    long position(int e) const { return row * e + runner; }
    bool operator==(const bead&) const = default;
};

class abacus {
public:
    abacus(int runners, long floor);

    static abacus of_partition(const partition& lam, int e);
    /* Abacus of lam whose bead count is `charge` relative to the usual
     * Maya-diagram labelling: beads at {lam_i + charge - i : i >= 1}.
     * charge = rows(lam) reproduces of_partition; any integer works. */
    static abacus of_partition_at_charge(const partition& lam, int e, long charge);

    int runners() const { return e_; }
    long floor_row() const { return floor_; }
    const std::vector<long>& runner_rows(int j) const;
    bool bead_at(long row, int runner) const;
    long bead_count(int runner) const;

    void add_bead(long row, int runner);
    void remove_bead(long row, int runner);
    /* Lower the floor, materializing the sea rows in between. */
    void refloor(long new_floor);
    /* Apply nu as down-moves on runner j: the i-th bead from the bottom
     * slides down nu_i rows.  Refloors as needed. */
    void lift_runner(int j, const partition& nu);

    partition to_partition() const;
    abacus pushed_up() const;
    long runner_weight(int j) const;
    long weight() const;

    std::vector<bead> removable_beads() const;  // increasing position order
    long removable_on_runner(int j) const;      // Rem(A_j)
    bool is_removable(bead b) const;
    /* Slide a removable bead one position left (wrapping to the previous
     * row from runner 0).  Throws std::invalid_argument otherwise. */
    abacus slide_left(bead b) const;
    /* Weight change of the slide, from the bead-count law:
     *   |A_j| - |A_{j-1}| - 1   (j != 0)
     *   |A_0| - |A_{e-1}| - 2   (j == 0). */
    long weight_delta_on_slide(bead b) const;

    std::string render() const;

    bool operator==(const abacus&) const = default;

private:
    int e_;
    long floor_;
    std::vector<std::vector<long>> rows_;  // per runner, ascending, >= floor_
};

/* Core, quotient and weight of lam with respect to e.  The quotient is
 * read runner by runner off the abacus with the stored charge; keeping
 * the charge makes from_core_quotient an exact inverse (the quotient
 * labelling shifts cyclically when the charge changes mod e). */
struct core_quotient {
    partition core;
    std::vector<partition> quotient;
    long weight = 0;
    long charge = 0;
};

/* charge = number of parts (first gap at (0,0)). */
core_quotient core_and_quotient(const partition& lam, int e);
/* charge = smallest multiple of e >= number of parts.  This labelling is
 * stable under adding parts, which makes the tower <-> partition map a
 * bijection; used by the core-tower machinery. */
core_quotient core_and_quotient_mod0(const partition& lam, int e);
partition from_core_quotient(const core_quotient& cq, int e);
partition core_of(const partition& lam, int e);
long weight_of(const partition& lam, int e);

/* Achievable values of Rem(U_1) over all two-runner abaci U of weight x
 * lying above the base ((): empty partition, or (1)), by exhaustive
 * enumeration of the lifts. */
std::set<long> two_runner_rem_range(const partition& base, int x);

}  // namespace youngp
