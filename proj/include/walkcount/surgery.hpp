#ifndef WALKCOUNT_SURGERY_HPP_
#define WALKCOUNT_SURGERY_HPP_

#include <string>
#include <vector>

#include "walkcount/rooted_tree.hpp"

namespace walkcount {

// T1: excise the non-hanging edge e (its child subtrees reattach to its
// upper vertex) and splice it back immediately above the hanging edge b,
// where b lies strictly below e. up(b) is unchanged as a set, up(e) gains
// the chain between b and e, everything else below e loses e.
struct T1Move {
  int e = -1;  // non-hanging
  int b = -1;  // hanging, strict descendant of e
};

// T2: detach the hanging edge b from a vertex of degree >= 3 and splice it
// immediately below the sibling edge d (d's former children become b's).
struct T2Move {
  int b = -1;  // hanging
  int d = -1;  // another child edge at b's attachment vertex
};

void validate_t1(const RootedTreeView& tree, const T1Move& move);
void validate_t2(const RootedTreeView& tree, const T2Move& move);

RootedTreeView t1_apply(const RootedTreeView& tree, const T1Move& move);
RootedTreeView t2_apply(const RootedTreeView& tree, const T2Move& move);

// 2*(P2 before - P2 after) = t_e * sum_{f in D\l} t_f, D = desc(e)\{b},
// l = the chain strictly between b and e.
double t1_delta(const RootedTreeView& tree, const T1Move& move);

// 2*(P2 before - P2 after) = -sum_{e in D} t_e t_b + t_b^2
//   + 2 t_b sum_{e != b} t_e, D = {d} + descendants(d).
// Only valid when d is non-hanging; throws FormulaDomain otherwise (the
// hanging-d case changes the hanging set differently; use the direct P2
// difference there).
double t2_delta(const RootedTreeView& tree, const T2Move& move);

struct SurgeryStep {
  std::string kind;  // "t1", "t2", "t2-root" (degree-2 root absorbing a
                     // single-edge chain into the other chain)
  int e = -1;
  int b = -1;
  int d = -1;
  double delta_p2 = 0.0;  // P2 before - P2 after, > 0 for every step
};

// Greedy descent: apply the first strictly P2-decreasing T1 move, then T2,
// scanning edges in id order, until no move decreases P2. Terminates in a
// star of chains; with the degree-2-root absorb step the endpoint never
// keeps a single-edge chain next to another chain.
RootedTreeView minimize_by_surgery(const RootedTreeView& tree,
                                   std::vector<SurgeryStep>* log = nullptr);

}  // namespace walkcount

#endif  // WALKCOUNT_SURGERY_HPP_
